use crate::error::{Error, Result};
use crate::poly::{ModVec, Monomial};

use super::morphism::GradedMorphism;
use super::presentation::GradedPresentation;

/// Koszul complex of a module over k[x_1..x_n]. Term `i` is the sum of
/// copies `x(-i)` indexed by the `i`-subsets of the variables (ordered by
/// bitmask); the boundary component from `I` to `I - {j}` is
/// `(-1)^{#{t in I : t > j}} x_j`.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    pub terms: Vec<GradedPresentation>,
    /// `boundaries[i - 1]` is `d_i : terms[i] -> terms[i - 1]`.
    pub boundaries: Vec<GradedMorphism>,
    pub subsets: Vec<Vec<u64>>,
}

impl KoszulComplex {
    pub fn length(&self) -> usize {
        self.boundaries.len()
    }

    pub fn d(&self, i: usize) -> Option<&GradedMorphism> {
        if i == 0 {
            None
        } else {
            self.boundaries.get(i - 1)
        }
    }

    /// `d_{i} ∘ d_{i+1} = 0` as an identity of polynomial matrices.
    pub fn squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| {
            w[1].columns()
                .iter()
                .all(|c| w[0].apply(c).is_zero())
        })
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    (0u64..(1u64 << n))
        .filter(|m| m.count_ones() as usize == k)
        .collect()
}

impl GradedPresentation {
    pub fn koszul_complex(&self) -> KoszulComplex {
        let n = self.nvars();
        assert!(n < 64, "too many variables for a Koszul complex");
        let r = self.num_gens();
        let field = self.field();
        let subsets: Vec<Vec<u64>> = (0..=n).map(|k| subsets_of_size(n, k)).collect();
        let terms: Vec<GradedPresentation> = subsets
            .iter()
            .enumerate()
            .map(|(k, ss)| {
                let copy = self.shift_down(k as i64);
                ss.iter().fold(GradedPresentation::zero(field, n), |acc, _| {
                    acc.direct_sum(&copy).expect("same ring")
                })
            })
            .collect();
        let mut boundaries = Vec::with_capacity(n);
        for k in 1..=n {
            let lower = &subsets[k - 1];
            let rank = lower.len() * r;
            let mut cols = Vec::with_capacity(subsets[k].len() * r);
            for &set in &subsets[k] {
                for g in 0..r {
                    let mut col = ModVec::zero(n, rank);
                    for j in 0..n {
                        if set & (1 << j) == 0 {
                            continue;
                        }
                        let above = (set >> (j + 1)).count_ones();
                        let sign = if above % 2 == 0 { field.one() } else { -field.one() };
                        let pos = lower.iter().position(|&s| s == set & !(1 << j)).unwrap();
                        col.add_term_at(pos * r + g, Monomial::var(n, j), &sign);
                    }
                    cols.push(col);
                }
            }
            boundaries.push(GradedMorphism::new_unchecked(
                terms[k].clone(),
                terms[k - 1].clone(),
                cols,
            ));
        }
        KoszulComplex {
            terms,
            boundaries,
            subsets,
        }
    }

    /// `T_i(x) = H_i` of the Koszul complex, as a minimalized subquotient.
    pub fn koszul_homology(&self, i: usize) -> Result<GradedPresentation> {
        let n = self.nvars();
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, limit: n });
        }
        let kos = self.koszul_complex();
        let term = &kos.terms[i];
        let amb = term.ambient();
        let numer: Vec<(ModVec, i64)> = match kos.d(i) {
            None => (0..term.num_gens())
                .map(|j| (amb.basis_vector(j), term.gens()[j]))
                .collect(),
            Some(d) => d.preimage_of_zero()?,
        };
        let mut denom = term.relation_pairs();
        if let Some(d) = kos.d(i + 1) {
            denom.extend(d.columns().iter().cloned().zip(d.source().gens().iter().copied()));
        }
        let sub = GradedPresentation::subquotient(&amb, &numer, &denom)?;
        Ok(sub.minimalize().0)
    }

    /// `T_i(x) = 0` for every `i > 0`.
    pub fn is_torsion_free(&self) -> Result<bool> {
        for i in 1..=self.nvars() {
            if !self.koszul_homology(i)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
