//! Dehomogenization from graded k[psi, phi]-modules to k[t]-modules
//! (`psi -> 1`, `phi -> t`), together with the psi-nilpotent side of the
//! picture: psi-torsion, psi-free quotients and the one-variable pieces
//! of nilpotent modules.

use crate::endo::{EndoModule, EndoMorphism, TVector};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graded::{GradedMorphism, GradedPresentation, Relation};
use crate::linalg::UniPoly;
use crate::poly::{relations, FreeGradedModule, ModVec, Monomial, MultiPoly};

const PSI: usize = 0;
const PHI: usize = 1;

fn require_two_vars(x: &GradedPresentation) -> Result<()> {
    if x.nvars() != 2 {
        return Err(Error::WrongVariableCount {
            expected: 2,
            found: x.nvars(),
        });
    }
    Ok(())
}

/// `p(psi, phi) -> p(1, t)`.
pub fn dehomogenize(p: &MultiPoly, field: FieldSpec) -> UniPoly {
    let mut coeffs: Vec<crate::field::Scalar> = Vec::new();
    for (m, c) in p.terms() {
        let b = m.exps()[PHI] as usize;
        if coeffs.len() <= b {
            coeffs.resize(b + 1, field.zero());
        }
        coeffs[b] = &coeffs[b] + c;
    }
    UniPoly::from_coeffs(field, coeffs)
}

/// Homogeneous form of `p(t)` in degree `k`: `sum c_b psi^{k-b} phi^b`.
/// `None` when `deg p > k`.
pub fn homogenize(p: &UniPoly, k: i64) -> Option<MultiPoly> {
    if let Some(d) = p.degree() {
        if d as i64 > k {
            return None;
        }
    }
    Some(MultiPoly::from_terms(
        2,
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, c)| (Monomial::new(vec![(k - b as i64) as u32, b as u32]), c.clone())),
    ))
}

fn dehomogenize_vec(v: &ModVec, field: FieldSpec) -> TVector {
    v.coords().iter().map(|p| dehomogenize(p, field)).collect()
}

pub fn theta(x: &GradedPresentation) -> Result<EndoModule> {
    require_two_vars(x)?;
    let rels = x
        .relations()
        .iter()
        .map(|r| dehomogenize_vec(&r.vector, x.field()))
        .collect();
    EndoModule::new(x.field(), x.num_gens(), rels)
}

pub fn theta_morphism(f: &GradedMorphism) -> Result<EndoMorphism> {
    let source = theta(f.source())?;
    let target = theta(f.target())?;
    let cols = f
        .columns()
        .iter()
        .map(|c| dehomogenize_vec(c, f.target().field()))
        .collect();
    EndoMorphism::new(source, target, cols)
}

/// Witness that `psi^index` kills every generator.
#[derive(Clone, Debug)]
pub struct NilCertificate {
    pub module: GradedPresentation,
    pub index: usize,
}

impl NilCertificate {
    /// Re-check the certificate by membership of `psi^index * e_j`.
    pub fn verify(&self) -> bool {
        psi_power_kills(&self.module, self.index)
    }
}

fn psi_power_kills(x: &GradedPresentation, n: usize) -> bool {
    let amb = x.ambient();
    let m = Monomial::var_pow(2, PSI, n as u32);
    (0..x.num_gens()).all(|j| {
        let v = amb.basis_vector(j).mul_term(&x.field().one(), &m);
        x.vanishes(&v).unwrap()
    })
}

/// Decided by `theta(x) = 0`; the index is then found by increasing `n`
/// until `psi^n` kills all generators.
pub fn is_psi_nilpotent(x: &GradedPresentation) -> Result<Option<NilCertificate>> {
    if !theta(x)?.is_zero() {
        return Ok(None);
    }
    let mut n = 0;
    while !psi_power_kills(x, n) {
        n += 1;
    }
    Ok(Some(NilCertificate {
        module: x.clone(),
        index: n,
    }))
}

/// `{v in F : psi^n v in R}` with degrees in `x`.
fn psi_power_kernel(x: &GradedPresentation, n: usize) -> Result<Vec<(ModVec, i64)>> {
    let amb = x.ambient();
    let m = Monomial::var_pow(2, PSI, n as u32);
    let one = x.field().one();
    let mut all: Vec<(ModVec, i64)> = (0..x.num_gens())
        .map(|j| (amb.basis_vector(j).mul_term(&one, &m), x.gens()[j] + n as i64))
        .collect();
    all.extend(x.relations().iter().map(|r| (r.vector.clone(), r.degree)));
    let (_, rels) = relations(&amb, &all)?;
    let k = x.num_gens();
    let mut out = Vec::new();
    for r in rels {
        let v = r.slice(0..k);
        if let Some(d) = amb.degree_of(&v)? {
            out.push((v, d));
        }
    }
    Ok(out)
}

/// The psi-torsion submodule `∪ ker(psi^n)` with its inclusion.
pub fn psi_torsion(x: &GradedPresentation) -> Result<(GradedPresentation, GradedMorphism)> {
    require_two_vars(x)?;
    let one = x.field().one();
    // ker psi^n grows with n; it has stopped once psi^n kills ker psi^{n+1}
    let mut n = 1;
    let mut gens = psi_power_kernel(x, n)?;
    loop {
        let next = psi_power_kernel(x, n + 1)?;
        let m = Monomial::var_pow(2, PSI, n as u32);
        let mut stable = true;
        for (v, _) in &next {
            if !x.vanishes(&v.mul_term(&one, &m))? {
                stable = false;
                break;
            }
        }
        if stable {
            break;
        }
        gens = next;
        n += 1;
    }
    x.submodule(&gens)
}

/// `x / psi_torsion(x)` with the quotient map from `x`.
pub fn psi_free_quotient(x: &GradedPresentation) -> Result<(GradedPresentation, GradedMorphism)> {
    let (_, inc) = psi_torsion(x)?;
    inc.cokernel()
}

/// `a[phi](-m)` viewed over k[psi, phi] with psi acting as zero.
pub fn embed_nil(field: FieldSpec, a_dim: usize, m: i64) -> GradedPresentation {
    let amb = FreeGradedModule::new(field, 2, vec![m; a_dim]);
    let psi = Monomial::var(2, PSI);
    let rels = (0..a_dim)
        .map(|j| Relation {
            degree: m + 1,
            vector: amb.basis_vector(j).mul_term(&field.one(), &psi),
        })
        .collect();
    GradedPresentation::from_parts(field, 2, vec![m; a_dim], rels)
}

/// One-variable module `x` as a two-variable module: the variable becomes
/// `phi` and `psi` acts as zero.
pub fn gr1_to_nil2(x: &GradedPresentation) -> Result<GradedPresentation> {
    if x.nvars() != 1 {
        return Err(Error::WrongVariableCount {
            expected: 1,
            found: x.nvars(),
        });
    }
    let field = x.field();
    let phi = MultiPoly::var(field, 2, PHI);
    let mut rels: Vec<Relation> = x
        .relations()
        .iter()
        .map(|r| Relation {
            degree: r.degree,
            vector: r.vector.map_coords(|p| p.substitute(std::slice::from_ref(&phi), 2)),
        })
        .collect();
    let amb = FreeGradedModule::new(field, 2, x.gens().to_vec());
    let psi = Monomial::var(2, PSI);
    rels.extend((0..x.num_gens()).map(|j| Relation {
        degree: x.gens()[j] + 1,
        vector: amb.basis_vector(j).mul_term(&field.one(), &psi),
    }));
    Ok(GradedPresentation::from_parts(field, 2, x.gens().to_vec(), rels))
}

/// The subquotients `im psi^k / im psi^{k+1}`, `k < index`, as one-variable
/// modules over k[phi].
pub fn nil_filtration_factors(x: &GradedPresentation) -> Result<Vec<GradedPresentation>> {
    let cert = is_psi_nilpotent(x)?.ok_or(Error::NotNilpotent)?;
    let field = x.field();
    let amb = x.ambient();
    let one = field.one();
    let psi_pow = |k: usize| -> Vec<(ModVec, i64)> {
        let m = Monomial::var_pow(2, PSI, k as u32);
        (0..x.num_gens())
            .map(|j| (amb.basis_vector(j).mul_term(&one, &m), x.gens()[j] + k as i64))
            .collect()
    };
    let mut out = Vec::with_capacity(cert.index);
    for k in 0..cert.index {
        let mut denom = psi_pow(k + 1);
        denom.extend(x.relation_pairs());
        let (factor, _) = GradedPresentation::subquotient(&amb, &psi_pow(k), &denom)?.minimalize();
        // psi acts as zero on the factor, so setting psi = 0 in the
        // relations presents it over k[phi]
        let images = [MultiPoly::zero(1), MultiPoly::var(field, 1, 0)];
        let rels = factor
            .relations()
            .iter()
            .map(|r| Relation {
                degree: r.degree,
                vector: r.vector.map_coords(|p| p.substitute(&images, 1)),
            })
            .collect();
        out.push(GradedPresentation::from_parts(field, 1, factor.gens().to_vec(), rels));
    }
    Ok(out)
}

/// Lift of a map `k[t]^a -> theta(y)` (columns in the generators of `y`)
/// to a graded map from the free module `a[psi, phi](-k)` to `y`, for the
/// least `k <= bound` that makes every column homogenizable.
pub fn lift_to_graded(
    y: &GradedPresentation,
    columns: &[TVector],
    bound: i64,
) -> Result<(i64, GradedMorphism)> {
    require_two_vars(y)?;
    'search: for k in 0..=bound {
        let mut cols = Vec::with_capacity(columns.len());
        for c in columns {
            if c.len() != y.num_gens() {
                return Err(Error::IllDefinedMorphism(format!(
                    "column of length {} for {} generators",
                    c.len(),
                    y.num_gens()
                )));
            }
            let mut coords = Vec::with_capacity(c.len());
            for (p, &d) in c.iter().zip(y.gens()) {
                match homogenize(p, k - d) {
                    Some(h) => coords.push(h),
                    None => continue 'search,
                }
            }
            cols.push(ModVec::from_coords(coords));
        }
        let source = GradedPresentation::free(y.field(), columns.len(), 2, k);
        let f = GradedMorphism::new(source, y.clone(), cols)?;
        return Ok((k, f));
    }
    Err(Error::BoundExceeded {
        bound: bound.max(0) as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::k0::KPolynomial;

    const F: FieldSpec = FieldSpec::Prime(32003);

    fn cyc(rels: &[(i64, &str)]) -> GradedPresentation {
        let rows: Vec<(i64, [&str; 1])> = rels.iter().map(|(d, s)| (*d, [*s])).collect();
        let refs: Vec<(i64, &[&str])> = rows.iter().map(|(d, r)| (*d, &r[..])).collect();
        GradedPresentation::parse(F, 2, &[0], &refs).unwrap()
    }

    #[test]
    fn theta_examples() {
        let free = GradedPresentation::free(F, 3, 2, 2);
        let t = theta(&free).unwrap();
        assert_eq!((t.free_rank(), t.torsion_divisors().len()), (3, 0));
        assert!(theta(&cyc(&[(2, "psi^2")])).unwrap().is_zero());
        let t = theta(&cyc(&[(2, "phi^2")])).unwrap();
        assert_eq!(t.nilpotency_index(), Some(2));
        assert!(theta(&GradedPresentation::free(F, 1, 1, 0)).is_err());
    }

    #[test]
    fn nilpotence_certificates() {
        assert_eq!(is_psi_nilpotent(&cyc(&[(1, "psi")])).unwrap().unwrap().index, 1);
        let c = is_psi_nilpotent(&cyc(&[(3, "psi^3"), (2, "phi*psi")])).unwrap().unwrap();
        assert_eq!(c.index, 3);
        assert!(c.verify());
        assert!(is_psi_nilpotent(&GradedPresentation::free(F, 1, 2, 0)).unwrap().is_none());
        assert_eq!(is_psi_nilpotent(&GradedPresentation::zero(F, 2)).unwrap().unwrap().index, 0);
    }

    #[test]
    fn psi_torsion_examples() {
        let free = GradedPresentation::free(F, 1, 2, 0);
        assert!(psi_torsion(&free).unwrap().0.is_zero());
        let x = cyc(&[(2, "psi*phi")]);
        let (tor, inc) = psi_torsion(&x).unwrap();
        assert_eq!(tor.hilbert_numerator().series_coefficients(2, 5), vec![0, 1, 1, 1, 1, 1]);
        assert!(inc.is_injective().unwrap());
        let (q, proj) = psi_free_quotient(&x).unwrap();
        assert_eq!(q.hilbert_numerator().series_coefficients(2, 5), vec![1, 1, 1, 1, 1, 1]);
        assert!(psi_torsion(&q).unwrap().0.is_zero());
        assert!(theta_morphism(&proj).unwrap().is_isomorphism());
        let nil = cyc(&[(2, "psi^2")]);
        let (t, _) = psi_torsion(&nil).unwrap();
        assert_eq!(t.hilbert_numerator(), nil.hilbert_numerator());
        assert!(psi_free_quotient(&nil).unwrap().0.is_zero());
    }

    #[test]
    fn embeddings() {
        assert_eq!(embed_nil(F, 1, 0).hilbert_numerator(), KPolynomial::one_minus_q());
        assert_eq!(
            embed_nil(F, 2, 3).hilbert_numerator(),
            KPolynomial::from_coeffs(&[(3, 2), (4, -2)])
        );
        assert!(embed_nil(F, 0, 2).is_zero());
        assert_eq!(is_psi_nilpotent(&embed_nil(F, 2, 1)).unwrap().unwrap().index, 1);

        let s2 = GradedPresentation::parse(F, 1, &[0], &[(2, &["t^2"])]).unwrap();
        let lifted = gr1_to_nil2(&s2).unwrap();
        // k[psi,phi]/(psi, phi^2): dims 1, 1, 0, ...
        assert_eq!(lifted.hilbert_numerator().series_coefficients(2, 4), vec![1, 1, 0, 0, 0]);
        assert_eq!(is_psi_nilpotent(&lifted).unwrap().unwrap().index, 1);
        let free1 = GradedPresentation::free(F, 1, 1, 0);
        assert_eq!(gr1_to_nil2(&free1).unwrap().hilbert_numerator(), KPolynomial::one_minus_q());
        assert!(gr1_to_nil2(&GradedPresentation::zero(F, 1)).unwrap().is_zero());
    }

    #[test]
    fn filtration_factors() {
        let single = nil_filtration_factors(&embed_nil(F, 1, 0)).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].hilbert_numerator(), KPolynomial::one());
        let x = cyc(&[(2, "psi^2")]);
        let fs = nil_filtration_factors(&x).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].gens(), &[0]);
        assert_eq!(fs[1].gens(), &[1]);
        let total = fs
            .iter()
            .map(|f| gr1_to_nil2(f).unwrap().hilbert_numerator())
            .fold(KPolynomial::zero(), |a, b| a.add(&b));
        assert_eq!(total, x.hilbert_numerator());
        assert!(nil_filtration_factors(&GradedPresentation::zero(F, 2)).unwrap().is_empty());
        assert!(matches!(
            nil_filtration_factors(&GradedPresentation::free(F, 1, 2, 0)),
            Err(Error::NotNilpotent)
        ));
    }

    #[test]
    fn fullness_lift() {
        let y = GradedPresentation::free(F, 1, 2, 1);
        let col = vec![UniPoly::from_i64(F, &[2, 0, 1])];
        let (k, f) = lift_to_graded(&y, &[col.clone()], 8).unwrap();
        assert_eq!(k, 3);
        let back = theta_morphism(&f).unwrap();
        assert_eq!(back.columns()[0], col);
        assert!(lift_to_graded(&y, &[col], 2).is_err());
    }
}
