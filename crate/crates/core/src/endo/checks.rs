use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{snf_unipoly, UniPoly, UniPolyMatrix};

use super::module::{EndoModule, TVector};

fn one_minus_t(field: FieldSpec) -> UniPoly {
    UniPoly::from_coeffs(field, vec![field.one(), -field.one()])
}

/// For `a = k^{a_dim}`: `1 - t` is injective on `a[t]`, its cokernel has
/// dimension `a_dim`, `t` acts as the identity there, and evaluation at
/// `t = 1` kills the image of `1 - t`.
pub fn split_sequence_check(field: FieldSpec, a_dim: usize) -> bool {
    let x = EndoModule::poly_object(field, a_dim);
    let cols: Vec<TVector> = (0..a_dim)
        .map(|j| {
            let mut v = x.zero_vector();
            v[j] = one_minus_t(field);
            v
        })
        .collect();
    let snf = snf_unipoly(&UniPolyMatrix::from_columns(field, a_dim, &cols));
    if snf.rank() != a_dim {
        return false;
    }
    let coker = EndoModule::new(field, a_dim, cols.clone()).expect("square");
    if coker.k_dimension() != Some(a_dim) {
        return false;
    }
    let t = UniPoly::t_pow(field, 1);
    let t_is_identity = (0..a_dim).all(|j| {
        let mut v = coker.basis_vector(j);
        v[j] = v[j].mul(&t).sub(&UniPoly::one(field));
        coker.vanishes(&v)
    });
    let nabla_kills_image = cols
        .iter()
        .all(|c| c.iter().all(|p| p.eval(&field.one()).is_zero()));
    t_is_identity && nabla_kills_image
}

/// Whether `1 - t` is surjective on a graded module. `grading[j]` is the
/// degree of generator `j`; `t` raises degree by one, so each relation entry
/// must be a single term `c t^k` with `k + grading[j]` constant along the
/// relation.
pub fn one_minus_t_surjective(m: &EndoModule, grading: &[i64]) -> Result<bool> {
    if grading.len() != m.num_gens() {
        return Err(Error::InvalidGrading(format!(
            "{} degrees for {} generators",
            grading.len(),
            m.num_gens()
        )));
    }
    for (i, col) in m.relations().iter().enumerate() {
        let mut degree = None;
        for (j, p) in col.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let nonzero: Vec<usize> = (0..p.coeffs().len()).filter(|&k| !p.coeff(k).is_zero()).collect();
            if nonzero.len() != 1 {
                return Err(Error::InvalidGrading(format!(
                    "relation {i}, entry {j} is not a monomial in t"
                )));
            }
            let d = nonzero[0] as i64 + grading[j];
            if degree.is_some_and(|e| e != d) {
                return Err(Error::InvalidGrading(format!("relation {i} is not homogeneous")));
            }
            degree = Some(d);
        }
    }
    let field = m.field();
    let r = m.num_gens();
    let mut cols = m.relations().to_vec();
    for j in 0..r {
        let mut v = m.zero_vector();
        v[j] = one_minus_t(field);
        cols.push(v);
    }
    let snf = snf_unipoly(&UniPolyMatrix::from_columns(field, r, &cols));
    Ok(snf.rank() == r && snf.diagonal().iter().all(UniPoly::is_unit))
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: FieldSpec = FieldSpec::Prime(32003);

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(F, c)
    }

    #[test]
    fn split_sequences() {
        for a in 0..4 {
            assert!(split_sequence_check(F, a));
        }
        assert!(split_sequence_check(FieldSpec::Rationals, 2));
    }

    #[test]
    fn one_minus_t_cases() {
        let m = EndoModule::cyclic(p(&[0, 0, 1]));
        assert!(one_minus_t_surjective(&m, &[0]).unwrap());
        assert_eq!(m.nilpotency_index(), Some(2));
        let free = EndoModule::poly_object(F, 1);
        assert!(!one_minus_t_surjective(&free, &[0]).unwrap());
        assert!(one_minus_t_surjective(&EndoModule::zero(F), &[]).unwrap());
    }

    #[test]
    fn rejects_ungraded_relations() {
        let m = EndoModule::cyclic(p(&[-1, 1]));
        assert!(matches!(one_minus_t_surjective(&m, &[0]), Err(Error::InvalidGrading(_))));
        let m = EndoModule::parse(F, 2, &[&["t", "1"]]).unwrap();
        assert!(one_minus_t_surjective(&m, &[0, 1]).is_ok());
        assert!(one_minus_t_surjective(&m, &[0, 0]).is_err());
        assert!(one_minus_t_surjective(&m, &[0]).is_err());
    }
}
