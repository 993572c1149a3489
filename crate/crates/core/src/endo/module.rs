use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{snf_unipoly, Snf, UniPoly, UniPolyMatrix};
use crate::poly::{parse_poly, Monomial, MultiPoly};

/// Column vector over k[t], one entry per generator.
pub type TVector = Vec<UniPoly>;

/// Finitely presented k[t]-module `k[t]^r / (column span of the relations)`,
/// i.e. a vector space with an endomorphism `t`. The Smith form is computed
/// once at construction.
#[derive(Clone, Debug)]
pub struct EndoModule {
    field: FieldSpec,
    gens: usize,
    rels: Vec<TVector>,
    snf: Snf,
}

impl PartialEq for EndoModule {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.gens == other.gens && self.rels == other.rels
    }
}

impl Eq for EndoModule {}

pub(crate) fn scale_vec(v: &[UniPoly], p: &UniPoly) -> TVector {
    v.iter().map(|a| a.mul(p)).collect()
}

pub(crate) fn add_vec(a: &[UniPoly], b: &[UniPoly]) -> TVector {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub(crate) fn combine(field: FieldSpec, rows: usize, coeffs: &[UniPoly], vectors: &[TVector]) -> TVector {
    let mut out = vec![UniPoly::zero(field); rows];
    for (c, v) in coeffs.iter().zip(vectors) {
        if !c.is_zero() {
            out = add_vec(&out, &scale_vec(v, c));
        }
    }
    out
}

impl EndoModule {
    pub fn new(field: FieldSpec, gens: usize, rels: Vec<TVector>) -> Result<Self> {
        for (i, c) in rels.iter().enumerate() {
            if c.len() != gens {
                return Err(Error::InvalidPresentation(format!(
                    "relation {i} has {} entries for {gens} generators",
                    c.len()
                )));
            }
            if c.iter().any(|p| p.field() != field) {
                return Err(Error::AmbientMismatch(format!("relation {i} over another field")));
            }
        }
        let rels: Vec<TVector> = rels
            .into_iter()
            .filter(|c| c.iter().any(|p| !p.is_zero()))
            .collect();
        let snf = snf_unipoly(&UniPolyMatrix::from_columns(field, gens, &rels));
        Ok(EndoModule {
            field,
            gens,
            rels,
            snf,
        })
    }

    /// Relations given as lists of polynomial strings in `t`.
    pub fn parse(field: FieldSpec, gens: usize, rels: &[&[&str]]) -> Result<Self> {
        let cols = rels
            .iter()
            .map(|c| c.iter().map(|s| parse_unipoly(s, field)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, gens, cols)
    }

    /// `k[t]^r`, the polynomial object on an `r`-dimensional space.
    pub fn poly_object(field: FieldSpec, r: usize) -> Self {
        Self::new(field, r, Vec::new()).expect("no relations")
    }

    /// `k[t]/(f)`.
    pub fn cyclic(f: UniPoly) -> Self {
        Self::new(f.field(), 1, vec![vec![f]]).expect("one entry")
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self::poly_object(field, 0)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn num_gens(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &[TVector] {
        &self.rels
    }

    pub fn snf(&self) -> &Snf {
        &self.snf
    }

    pub fn free_rank(&self) -> usize {
        self.gens - self.snf.rank()
    }

    /// Non-unit invariant factors, monic, in divisibility order.
    pub fn torsion_divisors(&self) -> Vec<UniPoly> {
        self.snf
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_unit())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank() == 0 && self.torsion_divisors().is_empty()
    }

    /// Dimension over k, when finite.
    pub fn k_dimension(&self) -> Option<usize> {
        (self.free_rank() == 0).then(|| {
            self.torsion_divisors()
                .iter()
                .map(|d| d.degree().unwrap())
                .sum()
        })
    }

    pub fn zero_vector(&self) -> TVector {
        vec![UniPoly::zero(self.field); self.gens]
    }

    pub fn basis_vector(&self, j: usize) -> TVector {
        let mut v = self.zero_vector();
        v[j] = UniPoly::one(self.field);
        v
    }

    /// Whether `v` (in the free module on the generators) is zero here.
    pub fn vanishes(&self, v: &[UniPoly]) -> bool {
        self.snf.solve(v).is_some()
    }

    pub fn direct_sum(&self, other: &EndoModule) -> Result<EndoModule> {
        if self.field != other.field {
            return Err(Error::AmbientMismatch(format!(
                "fields {} and {}",
                self.field, other.field
            )));
        }
        let z = |n: usize| vec![UniPoly::zero(self.field); n];
        let mut rels: Vec<TVector> = self
            .rels
            .iter()
            .map(|c| [c.clone(), z(other.gens)].concat())
            .collect();
        rels.extend(other.rels.iter().map(|c| [z(self.gens), c.clone()].concat()));
        EndoModule::new(self.field, self.gens + other.gens, rels)
    }

    /// Least `n` with `t^n` acting as zero: present exactly when the module
    /// is torsion with every invariant factor a power of `t`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        if self.free_rank() != 0 {
            return None;
        }
        let mut n = 0;
        for d in self.torsion_divisors() {
            n = n.max(d.as_t_power()?);
        }
        Some(n)
    }

    /// Class in K_0: the free rank.
    pub fn rank_class(&self) -> usize {
        self.free_rank()
    }

    pub fn to_doc(&self) -> EndoDoc {
        EndoDoc {
            field: self.field,
            gens: self.gens,
            rels: self
                .rels
                .iter()
                .map(|c| c.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn from_doc(doc: &EndoDoc) -> Result<Self> {
        let cols = doc
            .rels
            .iter()
            .map(|c| {
                c.iter()
                    .map(|s| parse_unipoly(s, doc.field))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(doc.field, doc.gens, cols)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: EndoDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_doc(&doc)
    }
}

/// Serialized [`EndoModule`]: each relation is a column of polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndoDoc {
    pub field: FieldSpec,
    pub gens: usize,
    #[serde(default)]
    pub rels: Vec<Vec<String>>,
}

pub fn parse_unipoly(text: &str, field: FieldSpec) -> Result<UniPoly> {
    Ok(unipoly_from_multi(&parse_poly(text, field, 1)?, field))
}

/// One-variable [`MultiPoly`] to dense form.
pub fn unipoly_from_multi(p: &MultiPoly, field: FieldSpec) -> UniPoly {
    assert_eq!(p.nvars(), 1, "expected a polynomial in one variable");
    let deg = p.terms().map(|(m, _)| m.degree() as usize).max().unwrap_or(0);
    let mut coeffs = vec![field.zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.degree() as usize] = c.clone();
    }
    UniPoly::from_coeffs(field, coeffs)
}

pub fn unipoly_to_multi(p: &UniPoly) -> MultiPoly {
    MultiPoly::from_terms(
        1,
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Monomial::var_pow(1, 0, k as u32), c.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: FieldSpec = FieldSpec::Prime(32003);

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(F, c)
    }

    #[test]
    fn poly_objects() {
        assert!(EndoModule::poly_object(F, 0).is_zero());
        let m = EndoModule::poly_object(F, 3);
        assert_eq!(m.rank_class(), 3);
        assert!(m.torsion_divisors().is_empty());
    }

    #[test]
    fn nilpotency() {
        let m = EndoModule::cyclic(p(&[0, 0, 0, 1]));
        assert_eq!(m.nilpotency_index(), Some(3));
        assert_eq!(m.rank_class(), 0);
        assert_eq!(EndoModule::poly_object(F, 1).nilpotency_index(), None);
        assert_eq!(EndoModule::cyclic(p(&[-1, 1])).nilpotency_index(), None);
        assert_eq!(EndoModule::zero(F).nilpotency_index(), Some(0));
    }

    #[test]
    fn extension_rank() {
        // k[t]^2 / ((t, 1)): an extension of k[t] by k[t]/(t)... of rank 1
        let m = EndoModule::parse(F, 2, &[&["t", "1"]]).unwrap();
        assert_eq!(m.rank_class(), 1);
        let m = EndoModule::parse(F, 2, &[&["t", "0"], &["1", "t"]]).unwrap();
        assert_eq!(m.rank_class(), 0);
        assert_eq!(m.k_dimension(), Some(2));
    }

    #[test]
    fn json_round_trip() {
        let m = EndoModule::parse(F, 2, &[&["t^2", "-t + 1"]]).unwrap();
        let back = EndoModule::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        assert!(EndoModule::from_json("[").unwrap_err().is_parse());
        assert!(!EndoModule::from_json(r#"{"field":"QQ","gens":1,"rels":[["t","1"]]}"#)
            .unwrap_err()
            .is_parse());
    }

    #[test]
    fn conversions_round_trip() {
        let u = p(&[3, 0, -2, 1]);
        assert_eq!(unipoly_from_multi(&unipoly_to_multi(&u), F), u);
    }
}
