use polycat::graded::{GradedMorphism, GradedPresentation};
use polycat::k0::{
    check_base_change, check_devissage_classes, check_filtration_additivity,
    check_localization_classes, check_main_diagram, check_ses_additivity, check_tf_decomposition,
    kpoly, GradedSes, KPolynomial, ShortExactSequence,
};
use polycat::linalg::UniPoly;
use polycat::theta::{
    embed_nil, gr1_to_nil2, is_psi_nilpotent, nil_filtration_factors, psi_free_quotient,
    psi_torsion, theta,
};
use polycat::{Error, FieldSpec};

const F: FieldSpec = FieldSpec::Prime(32003);

fn quotient(rels: &[(i64, &str)]) -> GradedPresentation {
    let entries: Vec<[&str; 1]> = rels.iter().map(|(_, s)| [*s]).collect();
    let rels: Vec<(i64, &[&str])> = rels.iter().zip(&entries).map(|((d, _), e)| (*d, &e[..])).collect();
    GradedPresentation::parse(F, 2, &[0], &rels).unwrap()
}

fn dims(x: &GradedPresentation, up_to: usize) -> Vec<i64> {
    kpoly(x).series_coefficients(x.nvars(), up_to)
}

/// `dim ker(psi: x_m -> x_{m+1})` for `m <= up_to`.
fn psi_kernel_dims(x: &GradedPresentation, up_to: i64) -> Vec<i64> {
    (0..=up_to)
        .map(|m| {
            let a = x.psi_map(1, m).unwrap();
            (a.cols() - a.rank()) as i64
        })
        .collect()
}

fn t(c: &[i64]) -> UniPoly {
    UniPoly::from_i64(F, c)
}

#[test]
fn theta_of_free_and_cyclic_modules() {
    for a in 1..4 {
        for k in 0..3 {
            let th = theta(&GradedPresentation::free(F, a, 2, k)).unwrap();
            assert_eq!(th.free_rank(), a);
            assert!(th.torsion_divisors().is_empty());
        }
    }
    assert!(theta(&quotient(&[(2, "psi^2")])).unwrap().is_zero());
    let phi2 = theta(&quotient(&[(2, "phi^2")])).unwrap();
    assert_eq!((phi2.free_rank(), phi2.torsion_divisors()), (0, vec![t(&[0, 0, 1])]));
    assert!(matches!(
        theta(&GradedPresentation::free(F, 1, 1, 0)),
        Err(Error::WrongVariableCount { .. })
    ));
}

#[test]
fn theta_is_invariant_under_shift() {
    let x = quotient(&[(3, "phi^3 - psi*phi^2")]);
    let base = theta(&x).unwrap();
    for k in 1..4 {
        let shifted = theta(&x.shift_down(k)).unwrap();
        assert_eq!(shifted.torsion_divisors(), base.torsion_divisors());
        assert_eq!(shifted.free_rank(), base.free_rank());
    }
    // phi^3 - psi phi^2 dehomogenizes to t^3 - t^2
    assert_eq!(base.torsion_divisors(), vec![t(&[0, 0, -1, 1])]);
}

#[test]
fn nilpotency_certificates() {
    let c = is_psi_nilpotent(&quotient(&[(1, "psi")])).unwrap().unwrap();
    assert_eq!(c.index, 1);
    assert!(c.verify());
    let x = quotient(&[(3, "psi^3"), (2, "phi*psi")]);
    let c = is_psi_nilpotent(&x).unwrap().unwrap();
    assert_eq!(c.index, 3);
    // psi^2 survives, psi^3 does not
    assert_eq!(dims(&x, 4), vec![1, 2, 2, 1, 1]);
    assert!(is_psi_nilpotent(&GradedPresentation::free(F, 2, 2, 0)).unwrap().is_none());
    assert_eq!(is_psi_nilpotent(&GradedPresentation::zero(F, 2)).unwrap().unwrap().index, 0);
}

#[test]
fn psi_torsion_and_free_quotient() {
    let free = GradedPresentation::free(F, 2, 2, 1);
    assert!(psi_torsion(&free).unwrap().0.is_zero());
    assert_eq!(kpoly(&psi_free_quotient(&free).unwrap().0), kpoly(&free));

    // the torsion of k[psi, phi]/(psi phi) is the phi-line: it coincides
    // with ker psi degreewise
    let x = quotient(&[(2, "psi*phi")]);
    let (tors, inc) = psi_torsion(&x).unwrap();
    assert!(inc.is_injective().unwrap());
    assert_eq!(dims(&tors, 8), vec![0, 1, 1, 1, 1, 1, 1, 1, 1]);
    assert_eq!(dims(&tors, 8), psi_kernel_dims(&x, 8));
    let (z, _) = psi_free_quotient(&x).unwrap();
    assert_eq!(dims(&z, 8), vec![1; 9]);
    assert!(psi_kernel_dims(&z, 8).iter().all(|&d| d == 0));
    assert!(psi_torsion(&z).unwrap().0.is_zero());

    let nil = quotient(&[(2, "psi^2")]);
    assert_eq!(kpoly(&psi_torsion(&nil).unwrap().0), kpoly(&nil));
    assert!(psi_free_quotient(&nil).unwrap().0.is_zero());
}

#[test]
fn embedded_nilpotent_classes() {
    assert_eq!(kpoly(&embed_nil(F, 1, 0)), KPolynomial::one_minus_q());
    // 2 q^3 / (1 - q) as a series over (1 - q)^2
    let x = embed_nil(F, 2, 3);
    let series: Vec<i64> = (0..10).map(|m| if m >= 3 { 2 } else { 0 }).collect();
    assert_eq!(dims(&x, 9), series);
    assert_eq!(kpoly(&x), KPolynomial::from_coeffs(&[(3, 2), (4, -2)]));
    assert_eq!(is_psi_nilpotent(&x).unwrap().unwrap().index, 1);
    assert!(embed_nil(F, 0, 5).is_zero());
}

#[test]
fn one_variable_modules_as_nilpotent_ones() {
    let free1 = GradedPresentation::free(F, 1, 1, 0);
    assert_eq!(kpoly(&gr1_to_nil2(&free1).unwrap()), kpoly(&quotient(&[(1, "psi")])));
    let s2 = GradedPresentation::parse(F, 1, &[0], &[(2, &["t^2"])]).unwrap();
    let x = gr1_to_nil2(&s2).unwrap();
    assert_eq!(dims(&x, 5), vec![1, 1, 0, 0, 0, 0]);
    assert_eq!(kpoly(&x), KPolynomial::from_coeffs(&[(0, 1), (1, -1), (2, -1), (3, 1)]));
    assert_eq!(is_psi_nilpotent(&x).unwrap().unwrap().index, 1);
    assert!(gr1_to_nil2(&GradedPresentation::zero(F, 1)).unwrap().is_zero());
    assert!(gr1_to_nil2(&free1.direct_sum(&free1).unwrap()).is_ok());
    assert!(gr1_to_nil2(&GradedPresentation::free(F, 1, 2, 0)).is_err());
}

#[test]
fn nil_filtration_factors_of_small_modules() {
    let f = nil_filtration_factors(&embed_nil(F, 1, 0)).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(kpoly(&f[0]), KPolynomial::one());

    // im psi^k / im psi^{k+1} for k[psi, phi]/(psi^2) are the lines k[phi]
    // in degrees 0 and 1
    let x = quotient(&[(2, "psi^2")]);
    let f = nil_filtration_factors(&x).unwrap();
    assert_eq!(f.len(), 2);
    for (k, factor) in f.iter().enumerate() {
        assert_eq!(factor.nvars(), 1);
        let expected: Vec<i64> = (0..6).map(|m| i64::from(m >= k)).collect();
        assert_eq!(dims(factor, 5), expected);
    }
    assert!(check_devissage_classes(&x).unwrap());
    assert_eq!(kpoly(&x), KPolynomial::from_coeffs(&[(0, 1), (2, -1)]));

    assert!(nil_filtration_factors(&GradedPresentation::zero(F, 2)).unwrap().is_empty());
    assert!(matches!(
        nil_filtration_factors(&GradedPresentation::free(F, 1, 2, 0)),
        Err(Error::NotNilpotent)
    ));
}

#[test]
fn class_checks() {
    let psi_phi = quotient(&[(2, "psi*phi")]);
    assert_eq!(kpoly(&psi_phi), KPolynomial::from_coeffs(&[(0, 1), (2, -1)]));

    for (a, m) in [(1, 0), (2, 3), (0, 4)] {
        assert!(check_main_diagram(F, a, m).unwrap());
    }
    for a in [0, 1, 7] {
        assert_eq!(check_base_change(F, a), a);
    }

    let two = GradedPresentation::free(F, 1, 2, 0)
        .direct_sum(&GradedPresentation::free(F, 1, 2, 2))
        .unwrap();
    assert!(check_tf_decomposition(&two).unwrap());
    assert!(check_tf_decomposition(&GradedPresentation::free(F, 3, 2, 2)).unwrap());
    assert!(check_tf_decomposition(&GradedPresentation::zero(F, 2)).unwrap());
    assert!(check_tf_decomposition(&psi_phi).is_err());

    let steps = GradedPresentation::free(F, 1, 2, 0)
        .direct_sum(&GradedPresentation::free(F, 1, 2, 1))
        .unwrap();
    assert!(check_filtration_additivity(&steps));
    assert!(check_filtration_additivity(&psi_phi));

    for x in [
        GradedPresentation::free(F, 1, 2, 0),
        quotient(&[(2, "psi^2")]),
        quotient(&[(2, "phi^2")]),
        psi_phi.clone(),
    ] {
        assert!(check_localization_classes(&x).unwrap());
    }
    assert_eq!(kpoly(&quotient(&[(2, "phi^2")])).eval_at_one(), 0);
}

#[test]
fn multiplication_by_psi_sequence_is_additive() {
    // 0 -> x(-1) -> x -> x/psi x -> 0 for a psi-regular x
    let x = GradedPresentation::free(F, 1, 2, 0);
    let psi = GradedMorphism::parse(x.shift_down(1), x.clone(), &[&["psi"]]).unwrap();
    let ses = GradedSes::from_inclusion(psi).unwrap();
    assert_eq!(kpoly(ses.quotient()), KPolynomial::one_minus_q());
    assert!(check_ses_additivity(&ShortExactSequence::Graded(ses)));

    // psi stays regular on k[psi, phi]/(phi) = k[psi]
    let line = quotient(&[(1, "phi")]);
    let psi_line = GradedMorphism::parse(line.shift_down(1), line.clone(), &[&["psi"]]).unwrap();
    assert!(psi_line.is_injective().unwrap());
    let ses = GradedSes::from_inclusion(psi_line).unwrap();
    assert_eq!(dims(ses.quotient(), 4), vec![1, 0, 0, 0, 0]);
    let zero_map = GradedMorphism::zero(&x, &x);
    assert!(GradedSes::from_inclusion(zero_map).is_err());
}
