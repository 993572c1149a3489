use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{EchelonSpace, Matrix};
use crate::poly::{ModVec, Monomial};

use super::presentation::GradedPresentation;

/// The degree-`m` piece of a presented module as a finite-dimensional
/// vector space, computed by plain linear algebra: the span of all
/// `u * r` (u a monomial, r a relation) inside the degree-`m` part of the
/// free module, and its complement.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: i64,
    /// Basis of the piece: images of `mono * e_j`.
    pub basis: Vec<(usize, Monomial)>,
    columns: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
    space: EchelonSpace,
    field: crate::field::FieldSpec,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates in `basis` of a homogeneous degree-`m` element of the
    /// free module on the generators.
    pub fn coordinates(&self, v: &ModVec) -> Result<Vec<Scalar>> {
        let mut dense = vec![self.field.zero(); self.columns.len()];
        for (j, p) in v.coords().iter().enumerate() {
            for (m, c) in p.terms() {
                let &col = self.index.get(&(j, m.clone())).ok_or_else(|| {
                    Error::NonHomogeneous(format!(
                        "term in coordinate {j} does not have degree {}",
                        self.degree
                    ))
                })?;
                dense[col] = &dense[col] + c;
            }
        }
        let reduced = self.space.reduce(&dense);
        Ok(self
            .basis
            .iter()
            .map(|key| reduced[self.index[key]].clone())
            .collect())
    }
}

impl GradedPresentation {
    pub fn piece(&self, m: i64) -> GradedPiece {
        let n = self.nvars();
        let mut columns = Vec::new();
        for (j, &d) in self.gens().iter().enumerate() {
            if m >= d {
                for mono in Monomial::all_of_degree(n, (m - d) as u32) {
                    columns.push((j, mono));
                }
            }
        }
        let index: HashMap<(usize, Monomial), usize> = columns
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        let field = self.field();
        let mut rows = Vec::new();
        for r in self.relations() {
            if r.degree > m {
                continue;
            }
            for u in Monomial::all_of_degree(n, (m - r.degree) as u32) {
                let mut row = vec![field.zero(); columns.len()];
                for (j, p) in r.vector.coords().iter().enumerate() {
                    for (mono, c) in p.terms() {
                        let col = index[&(j, mono.mul(&u))];
                        row[col] = &row[col] + c;
                    }
                }
                rows.push(row);
            }
        }
        let mat = if rows.is_empty() {
            Matrix::zeros(field, 0, columns.len())
        } else {
            Matrix::from_rows(field, rows)
        };
        let space = EchelonSpace::new(&mat);
        let pivots: std::collections::HashSet<usize> = space.pivots().iter().copied().collect();
        let basis = columns
            .iter()
            .enumerate()
            .filter(|(i, _)| !pivots.contains(i))
            .map(|(_, k)| k.clone())
            .collect();
        GradedPiece {
            degree: m,
            basis,
            columns,
            index,
            space,
            field,
        }
    }

    pub fn piece_dim(&self, m: i64) -> usize {
        self.piece(m).dim()
    }

    /// Multiplication by the variable `x_i` (`1 <= i <= nvars`) from degree
    /// `m` to degree `m + 1`, as a `dim(m+1) x dim(m)` matrix in the piece
    /// bases.
    pub fn psi_map(&self, i: usize, m: i64) -> Result<Matrix> {
        if i == 0 || i > self.nvars() {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.nvars(),
            });
        }
        let src = self.piece(m);
        let tgt = self.piece(m + 1);
        self.multiplication_matrix(i - 1, &src, &tgt)
    }

    pub(crate) fn multiplication_matrix(
        &self,
        var: usize,
        src: &GradedPiece,
        tgt: &GradedPiece,
    ) -> Result<Matrix> {
        let field = self.field();
        let x = Monomial::var(self.nvars(), var);
        let mut m = Matrix::zeros(field, tgt.dim(), src.dim());
        for (col, (j, mono)) in src.basis.iter().enumerate() {
            let mut v = ModVec::zero(self.nvars(), self.num_gens());
            v.add_term_at(*j, mono.mul(&x), &field.one());
            for (row, c) in tgt.coordinates(&v)?.into_iter().enumerate() {
                m[(row, col)] = c;
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const F: FieldSpec = FieldSpec::Prime(32003);

    #[test]
    fn pieces_of_cyclic_module() {
        let x = GradedPresentation::parse(F, 2, &[0], &[(2, &["psi*phi"])]).unwrap();
        assert_eq!(x.piece_dim(0), 1);
        assert_eq!(x.piece_dim(1), 2);
        assert_eq!(x.piece_dim(2), 2);
        assert_eq!(x.piece_dim(7), 2);
        assert_eq!(x.piece_dim(-1), 0);
    }

    #[test]
    fn pieces_agree_with_hilbert_series() {
        let x = GradedPresentation::parse(
            F,
            2,
            &[0, 1],
            &[(2, &["psi^2", "phi"]), (3, &["phi^3", "psi^2"])],
        )
        .unwrap();
        let series = x.hilbert_numerator().series_coefficients(2, 6);
        for (m, &c) in series.iter().enumerate() {
            assert_eq!(x.piece_dim(m as i64) as i64, c, "degree {m}");
        }
    }

    #[test]
    fn psi_map_shapes_and_values() {
        let x = GradedPresentation::parse(F, 2, &[0], &[(1, &["phi"])]).unwrap();
        let m = x.psi_map(1, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(m.row(0)[0].is_one());
        let m = x.psi_map(2, 2).unwrap();
        assert!(m.is_zero());
        assert!(x.psi_map(3, 0).is_err());
        assert!(x.psi_map(0, 0).is_err());
    }
}
