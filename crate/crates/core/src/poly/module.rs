use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Graded free module over k[x_1..x_n]; basis vector `j` sits in degree
/// `shifts[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeGradedModule {
    pub field: FieldSpec,
    pub nvars: usize,
    pub shifts: Vec<i64>,
}

impl FreeGradedModule {
    pub fn new(field: FieldSpec, nvars: usize, shifts: Vec<i64>) -> Self {
        FreeGradedModule {
            field,
            nvars,
            shifts,
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn zero_vector(&self) -> ModVec {
        ModVec::zero(self.nvars, self.rank())
    }

    pub fn basis_vector(&self, j: usize) -> ModVec {
        ModVec::unit(self.field, self.nvars, self.rank(), j)
    }

    pub fn direct_sum(&self, other: &FreeGradedModule) -> FreeGradedModule {
        let mut shifts = self.shifts.clone();
        shifts.extend(&other.shifts);
        FreeGradedModule::new(self.field, self.nvars, shifts)
    }

    pub fn check_compatible(&self, other: &FreeGradedModule) -> Result<()> {
        if self != other {
            return Err(Error::AmbientMismatch(format!(
                "{} vars, shifts {:?} vs {} vars, shifts {:?}",
                self.nvars, self.shifts, other.nvars, other.shifts
            )));
        }
        Ok(())
    }

    /// Degree of a homogeneous vector, `None` for the zero vector.
    pub fn degree_of(&self, v: &ModVec) -> Result<Option<i64>> {
        if v.rank() != self.rank() {
            return Err(Error::AmbientMismatch(format!(
                "vector of rank {} in free module of rank {}",
                v.rank(),
                self.rank()
            )));
        }
        let mut deg = None;
        for (j, p) in v.coords().iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = p
                .homogeneous_degree()
                .ok_or_else(|| Error::NonHomogeneous(format!("coordinate {j}: {p}")))?
                as i64
                + self.shifts[j];
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::NonHomogeneous(format!(
                        "coordinate {j} has degree {d}, expected {e}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }
}

/// Element of a free module, stored densely by coordinate.
///
/// Module terms are ordered position over term: a term in a lower
/// coordinate beats any term in a higher one, and terms in the same
/// coordinate compare by grevlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModVec {
    coords: Vec<MultiPoly>,
}

impl ModVec {
    pub fn zero(nvars: usize, rank: usize) -> Self {
        ModVec {
            coords: vec![MultiPoly::zero(nvars); rank],
        }
    }

    pub fn unit(field: FieldSpec, nvars: usize, rank: usize, j: usize) -> Self {
        let mut v = Self::zero(nvars, rank);
        v.coords[j] = MultiPoly::constant(field.one(), nvars);
        v
    }

    pub fn from_coords(coords: Vec<MultiPoly>) -> Self {
        ModVec { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[MultiPoly] {
        &self.coords
    }

    pub fn coord(&self, j: usize) -> &MultiPoly {
        &self.coords[j]
    }

    pub fn into_coords(self) -> Vec<MultiPoly> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(MultiPoly::is_zero)
    }

    /// Leading term: `(position, monomial, coefficient)`.
    pub fn leading(&self) -> Option<(usize, &Monomial, &Scalar)> {
        self.coords
            .iter()
            .enumerate()
            .find_map(|(j, p)| p.leading().map(|(m, c)| (j, m, c)))
    }

    pub fn pop_leading(&mut self) -> Option<(usize, Monomial, Scalar)> {
        self.coords
            .iter_mut()
            .enumerate()
            .find_map(|(j, p)| p.pop_leading().map(|(m, c)| (j, m, c)))
    }

    pub fn add_term_at(&mut self, pos: usize, m: Monomial, c: &Scalar) {
        self.coords[pos].add_term(m, c);
    }

    pub fn add(&self, rhs: &ModVec) -> ModVec {
        ModVec {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &ModVec) -> ModVec {
        ModVec {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> ModVec {
        ModVec {
            coords: self.coords.iter().map(MultiPoly::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModVec {
        ModVec {
            coords: self.coords.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &MultiPoly) -> ModVec {
        ModVec {
            coords: self.coords.iter().map(|p| p.mul(f)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> ModVec {
        ModVec {
            coords: self.coords.iter().map(|p| p.mul_term(c, m)).collect(),
        }
    }

    /// `self += c * m * other`
    pub fn add_scaled(&mut self, c: &Scalar, m: &Monomial, other: &ModVec) {
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            a.add_scaled(c, m, b);
        }
    }

    /// Concatenate coordinates.
    pub fn concat(&self, rhs: &ModVec) -> ModVec {
        let mut coords = self.coords.clone();
        coords.extend(rhs.coords.iter().cloned());
        ModVec { coords }
    }

    /// Coordinates `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> ModVec {
        ModVec {
            coords: self.coords[range].to_vec(),
        }
    }

    /// Linear combination `sum_i coeffs[i] * vectors[i]`.
    pub fn combine(coeffs: &[MultiPoly], vectors: &[ModVec], nvars: usize, rank: usize) -> ModVec {
        let mut out = ModVec::zero(nvars, rank);
        for (c, v) in coeffs.iter().zip(vectors) {
            if c.is_zero() {
                continue;
            }
            for (m, a) in c.terms() {
                out.add_scaled(a, m, v);
            }
        }
        out
    }

    pub fn map_coords(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> ModVec {
        ModVec {
            coords: self.coords.iter().map(f).collect(),
        }
    }
}
