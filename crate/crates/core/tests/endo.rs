use polycat::endo::{
    artin_rees_holds, artin_rees_index, one_minus_t_surjective, split_sequence_check, EndoModule,
    EndoMorphism, SubmoduleRep, TFiltration,
};
use polycat::k0::{check_ses_additivity, EndoSes, ShortExactSequence};
use polycat::linalg::UniPoly;
use polycat::{Error, FieldSpec};

const F: FieldSpec = FieldSpec::Prime(32003);

fn p(c: &[i64]) -> UniPoly {
    UniPoly::from_i64(F, c)
}

fn t_pow(k: usize) -> UniPoly {
    UniPoly::t_pow(F, k)
}

fn sub(x: &EndoModule, gens: Vec<Vec<UniPoly>>) -> SubmoduleRep {
    SubmoduleRep::new(x, gens).unwrap()
}

#[test]
fn polynomial_objects() {
    for a in 0..5 {
        let x = EndoModule::poly_object(F, a);
        assert_eq!(x.free_rank(), a);
        assert_eq!(x.rank_class(), a);
        assert!(x.torsion_divisors().is_empty());
        assert_eq!(x.is_zero(), a == 0);
    }
}

#[test]
fn split_sequence_cokernel_is_evaluation_at_one() {
    for a in 0..4 {
        assert!(split_sequence_check(F, a));
        // coker of (1 - t) on k[t]^a: each summand k[t]/(t - 1) ≅ k via t ↦ 1
        let cols: Vec<Vec<UniPoly>> = (0..a)
            .map(|j| (0..a).map(|i| if i == j { p(&[1, -1]) } else { p(&[]) }).collect())
            .collect();
        let coker = EndoModule::new(F, a, cols).unwrap();
        assert_eq!(coker.k_dimension(), Some(a));
        assert_eq!(coker.torsion_divisors(), vec![p(&[-1, 1]); a]);
    }
}

#[test]
fn nilpotency_indices() {
    assert_eq!(EndoModule::cyclic(t_pow(3)).nilpotency_index(), Some(3));
    assert_eq!(EndoModule::poly_object(F, 1).nilpotency_index(), None);
    assert_eq!(EndoModule::cyclic(p(&[-1, 1])).nilpotency_index(), None);
    assert_eq!(EndoModule::zero(F).nilpotency_index(), Some(0));
    let mixed = EndoModule::cyclic(t_pow(2)).direct_sum(&EndoModule::cyclic(t_pow(4))).unwrap();
    assert_eq!(mixed.nilpotency_index(), Some(4));
}

#[test]
fn one_minus_t_on_graded_modules() {
    // (a + b t)(1 - t) = c0 + c1 t has a solution mod t^2: a = c0, b = c0 + c1
    let m = EndoModule::cyclic(t_pow(2));
    assert!(one_minus_t_surjective(&m, &[0]).unwrap());
    assert_eq!(m.nilpotency_index(), Some(2));
    let kt = EndoModule::poly_object(F, 1);
    assert!(!one_minus_t_surjective(&kt, &[0]).unwrap());
    assert!(one_minus_t_surjective(&EndoModule::zero(F), &[]).unwrap());
    assert!(matches!(
        one_minus_t_surjective(&m, &[0, 1]),
        Err(Error::InvalidGrading(_))
    ));
    let inhomogeneous = EndoModule::cyclic(p(&[1, 1]));
    assert!(one_minus_t_surjective(&inhomogeneous, &[0]).is_err());
}

#[test]
fn rank_is_additive_on_a_nonsplit_extension() {
    // k[t] -> <e1, e2 | e1 = t e2> -> k[t]/(t)
    let sub_m = EndoModule::poly_object(F, 1);
    let middle = EndoModule::parse(F, 2, &[&["-1", "t"]]).unwrap();
    let quotient = EndoModule::cyclic(t_pow(1));
    let inc = EndoMorphism::new(sub_m, middle.clone(), vec![vec![p(&[1]), p(&[])]]).unwrap();
    let proj = EndoMorphism::new(middle.clone(), quotient, vec![vec![p(&[])], vec![p(&[1])]]).unwrap();
    let ses = EndoSes::new(inc, proj).unwrap();
    assert_eq!(middle.rank_class(), 1);
    assert!(middle.torsion_divisors().is_empty());
    assert!(check_ses_additivity(&ShortExactSequence::Endo(ses)));
}

#[test]
fn t_power_images() {
    let kt = EndoModule::poly_object(F, 1);
    assert!(kt.t_power_image(0).same_as(&SubmoduleRep::whole(&kt)).unwrap());
    assert!(kt.t_power_image(2).same_as(&sub(&kt, vec![vec![t_pow(2)]])).unwrap());
    let c = EndoModule::cyclic(t_pow(3));
    assert!(c.t_power_image(3).same_as(&SubmoduleRep::zero(&c)).unwrap());
    assert!(!c.t_power_image(2).same_as(&SubmoduleRep::zero(&c)).unwrap());
}

#[test]
fn intersections() {
    let kt = EndoModule::poly_object(F, 1);
    let a = sub(&kt, vec![vec![t_pow(1)]]);
    let b = sub(&kt, vec![vec![t_pow(2)]]);
    assert!(a.intersect(&a).unwrap().same_as(&a).unwrap());
    assert!(a.intersect(&b).unwrap().same_as(&b).unwrap());

    // span{(t, 0), (0, 1)} ∩ k[t](1, 1) = k[t](t, t): (f, f) lies in the
    // first span exactly when t divides f
    let k2 = EndoModule::poly_object(F, 2);
    let u = sub(&k2, vec![vec![t_pow(1), p(&[])], vec![p(&[]), p(&[1])]]);
    let v = sub(&k2, vec![vec![p(&[1]), p(&[1])]]);
    let w = u.intersect(&v).unwrap();
    assert!(w.contains(&[t_pow(1), t_pow(1)]));
    assert!(!w.contains(&[p(&[1]), p(&[1])]));
    assert!(w.same_as(&sub(&k2, vec![vec![t_pow(1), t_pow(1)]])).unwrap());
    assert!(w.is_subset_of(&u).unwrap() && w.is_subset_of(&v).unwrap());

    let other = EndoModule::poly_object(F, 3);
    assert!(matches!(
        a.intersect(&SubmoduleRep::whole(&other)),
        Err(Error::AmbientMismatch(_))
    ));
}

#[test]
fn stability_of_filtrations() {
    // t acts invertibly on k[t]/(t - 1)
    let x = EndoModule::cyclic(p(&[-1, 1]));
    let constant = TFiltration::explicit(&x, vec![SubmoduleRep::whole(&x); 4]).unwrap();
    assert_eq!(constant.stability_index().unwrap(), Some(0));

    let kt = EndoModule::poly_object(F, 1);
    let standard = TFiltration::standard(&SubmoduleRep::whole(&kt), 5).unwrap();
    assert_eq!(standard.stability_index().unwrap(), Some(0));

    let whole = SubmoduleRep::whole(&kt);
    let stages = vec![whole.clone(), whole.clone(), whole.t_multiple(1), whole.t_multiple(2)];
    let delayed = TFiltration::explicit(&kt, stages).unwrap();
    assert_eq!(delayed.stability_index().unwrap(), Some(1));

    // t x_0 must land in x_1
    let bad = vec![whole.clone(), whole.t_multiple(2)];
    assert!(TFiltration::explicit(&kt, bad).is_err());
    assert!(TFiltration::explicit(&kt, vec![whole.t_multiple(1)]).is_err());
}

#[test]
fn artin_rees_indices() {
    let kt = EndoModule::poly_object(F, 1);
    let y = sub(&kt, vec![vec![t_pow(2)]]);
    assert_eq!(artin_rees_index(&kt, &y, 16), Ok(2));
    assert!(artin_rees_holds(&y, 2, 16).unwrap());
    assert!(!artin_rees_holds(&y, 1, 16).unwrap());
    assert!(matches!(
        artin_rees_index(&kt, &y, 2),
        Err(Error::BoundExceeded { .. })
    ));
    assert_eq!(artin_rees_index(&kt, &SubmoduleRep::whole(&kt), 16), Ok(0));

    // im(t^n) ∩ (first summand) = t^n (first summand) for every n, and both
    // sides vanish from n = 3 on
    let x = EndoModule::cyclic(t_pow(3)).direct_sum(&kt).unwrap();
    let first = sub(&x, vec![vec![p(&[1]), p(&[])]]);
    assert_eq!(artin_rees_index(&x, &first, 10), Ok(0));
    assert!(artin_rees_holds(&first, 3, 10).unwrap());
    assert!(x.t_power_image(3).intersect(&first).unwrap().same_as(&SubmoduleRep::zero(&x)).unwrap());
}

#[test]
fn json_round_trip() {
    let x = EndoModule::parse(F, 2, &[&["t^2", "0"], &["1", "t - 1"]]).unwrap();
    let y = EndoModule::from_json(&x.to_json()).unwrap();
    assert_eq!(x, y);
    assert_eq!(y.torsion_divisors(), x.torsion_divisors());
    assert!(EndoModule::from_json("{\"field\": \"GF(4)\", \"gens\": 1}").is_err());
}
