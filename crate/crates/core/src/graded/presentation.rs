use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::k0::KPolynomial;
use crate::linalg::Matrix;
use crate::poly::{
    buchberger, hilbert_numerator, relations, FreeGradedModule, GroebnerBasis, ModVec, MultiPoly,
};

/// A relation among the generators, homogeneous of `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub degree: i64,
    pub vector: ModVec,
}

/// Finitely presented graded module `F / R` over k[x_1..x_n]: generators in
/// the given degrees, and homogeneous relations spanning `R`.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    field: FieldSpec,
    nvars: usize,
    gens: Vec<i64>,
    rels: Vec<Relation>,
    gb: OnceLock<GroebnerBasis>,
}

impl PartialEq for GradedPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.nvars == other.nvars
            && self.gens == other.gens
            && self.rels == other.rels
    }
}

impl Eq for GradedPresentation {}

/// How a presentation was pruned by [`GradedPresentation::minimalize`].
#[derive(Clone, Debug)]
pub struct Minimalization {
    /// Old generator index of each surviving generator.
    pub kept: Vec<usize>,
    /// Every old generator written in the surviving generators.
    pub old_in_new: Vec<ModVec>,
}

impl GradedPresentation {
    /// Validating constructor. Zero relations are dropped.
    pub fn new(
        field: FieldSpec,
        nvars: usize,
        gens: Vec<i64>,
        rels: Vec<(i64, ModVec)>,
    ) -> Result<Self> {
        if let Some(d) = gens.iter().find(|&&d| d < 0) {
            return Err(Error::InvalidPresentation(format!(
                "generator degree {d} is negative"
            )));
        }
        let ambient = FreeGradedModule::new(field, nvars, gens.clone());
        let mut checked = Vec::with_capacity(rels.len());
        for (i, (e, v)) in rels.into_iter().enumerate() {
            if v.coords().iter().any(|p| p.nvars() != nvars) {
                return Err(Error::InvalidPresentation(format!(
                    "relation {i} uses the wrong number of variables"
                )));
            }
            match ambient.degree_of(&v)? {
                None => continue,
                Some(d) if d == e => checked.push(Relation { degree: e, vector: v }),
                Some(d) => {
                    return Err(Error::NonHomogeneous(format!(
                        "relation {i} has degree {d}, declared {e}"
                    )))
                }
            }
        }
        Ok(Self::from_parts(field, nvars, gens, checked))
    }

    pub(crate) fn from_parts(field: FieldSpec, nvars: usize, gens: Vec<i64>, rels: Vec<Relation>) -> Self {
        GradedPresentation {
            field,
            nvars,
            gens,
            rels: rels.into_iter().filter(|r| !r.vector.is_zero()).collect(),
            gb: OnceLock::new(),
        }
    }

    /// `a_dim` free generators in degree `shift`, no relations.
    pub fn free(field: FieldSpec, a_dim: usize, nvars: usize, shift: i64) -> Self {
        Self::from_parts(field, nvars, vec![shift; a_dim], Vec::new())
    }

    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Self::from_parts(field, nvars, Vec::new(), Vec::new())
    }

    /// Build from polynomial strings; `rels` lists `(degree, entries)`.
    pub fn parse(
        field: FieldSpec,
        nvars: usize,
        gens: &[i64],
        rels: &[(i64, &[&str])],
    ) -> Result<Self> {
        let mut parsed = Vec::new();
        for (e, entries) in rels {
            if entries.len() != gens.len() {
                return Err(Error::InvalidPresentation(format!(
                    "relation has {} entries for {} generators",
                    entries.len(),
                    gens.len()
                )));
            }
            let coords = entries
                .iter()
                .map(|s| crate::poly::parse_poly(s, field, nvars))
                .collect::<Result<Vec<_>>>()?;
            parsed.push((*e, ModVec::from_coords(coords)));
        }
        Self::new(field, nvars, gens.to_vec(), parsed)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.rels
    }

    pub fn ambient(&self) -> FreeGradedModule {
        FreeGradedModule::new(self.field, self.nvars, self.gens.clone())
    }

    pub(crate) fn relation_vectors(&self) -> Vec<ModVec> {
        self.rels.iter().map(|r| r.vector.clone()).collect()
    }

    pub(crate) fn relation_pairs(&self) -> Vec<(ModVec, i64)> {
        self.rels.iter().map(|r| (r.vector.clone(), r.degree)).collect()
    }

    /// Gröbner basis of the relation submodule, computed once.
    pub fn relation_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            buchberger(&self.relation_vectors(), &self.ambient())
                .expect("relations were validated as homogeneous")
        })
    }

    /// Whether `v` (in the free module on the generators) is zero in the module.
    pub fn vanishes(&self, v: &ModVec) -> Result<bool> {
        self.relation_basis().contains(v)
    }

    /// Complete zero test: every generator lies in the relation submodule.
    pub fn is_zero(&self) -> bool {
        let amb = self.ambient();
        (0..self.num_gens()).all(|j| self.vanishes(&amb.basis_vector(j)).unwrap())
    }

    pub fn hilbert_numerator(&self) -> KPolynomial {
        hilbert_numerator(self.relation_basis())
    }

    pub fn check_same_ring(&self, other: &GradedPresentation) -> Result<()> {
        if self.field != other.field {
            return Err(Error::AmbientMismatch(format!(
                "fields {} and {}",
                self.field, other.field
            )));
        }
        if self.nvars != other.nvars {
            return Err(Error::WrongVariableCount {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    /// `x(-k)`: every generator and relation degree raised by `k`.
    pub fn shift_down(&self, k: i64) -> GradedPresentation {
        GradedPresentation::from_parts(
            self.field,
            self.nvars,
            self.gens.iter().map(|d| d + k).collect(),
            self.rels
                .iter()
                .map(|r| Relation {
                    degree: r.degree + k,
                    vector: r.vector.clone(),
                })
                .collect(),
        )
    }

    pub fn direct_sum(&self, other: &GradedPresentation) -> Result<GradedPresentation> {
        self.check_same_ring(other)?;
        let (r, s) = (self.num_gens(), other.num_gens());
        let zl = ModVec::zero(self.nvars, r);
        let zr = ModVec::zero(self.nvars, s);
        let mut gens = self.gens.clone();
        gens.extend(&other.gens);
        let mut rels: Vec<Relation> = self
            .rels
            .iter()
            .map(|rel| Relation {
                degree: rel.degree,
                vector: rel.vector.concat(&zr),
            })
            .collect();
        rels.extend(other.rels.iter().map(|rel| Relation {
            degree: rel.degree,
            vector: zl.concat(&rel.vector),
        }));
        Ok(GradedPresentation::from_parts(self.field, self.nvars, gens, rels))
    }

    /// Subquotient `(N + D) / D` of the free module `ambient`, presented on
    /// the generators of `N`. `numer` and `denom` carry declared degrees.
    pub(crate) fn subquotient(
        ambient: &FreeGradedModule,
        numer: &[(ModVec, i64)],
        denom: &[(ModVec, i64)],
    ) -> Result<GradedPresentation> {
        let mut all = numer.to_vec();
        all.extend_from_slice(denom);
        let (free, rels) = relations(ambient, &all)?;
        let k = numer.len();
        let gens_free = FreeGradedModule::new(ambient.field, ambient.nvars, free.shifts[..k].to_vec());
        let mut out = Vec::new();
        for r in rels {
            let proj = r.slice(0..k);
            if let Some(d) = gens_free.degree_of(&proj)? {
                out.push(Relation {
                    degree: d,
                    vector: proj,
                });
            }
        }
        Ok(GradedPresentation::from_parts(
            ambient.field,
            ambient.nvars,
            gens_free.shifts,
            out,
        ))
    }

    /// Eliminate generators that appear with a nonzero constant coefficient
    /// in some relation. Afterwards every relation entry lies in the maximal
    /// homogeneous ideal, so the generators are minimal.
    pub fn minimalize(&self) -> (GradedPresentation, Minimalization) {
        let r = self.num_gens();
        let mut rels: Vec<ModVec> = self.relation_vectors();
        let mut alive = vec![true; r];
        // (eliminated generator, relation used, its constant coefficient)
        let mut eliminations: Vec<(usize, ModVec)> = Vec::new();
        loop {
            let found = rels.iter().enumerate().find_map(|(ri, v)| {
                (0..r).find_map(|j| {
                    let p = v.coord(j);
                    (alive[j] && !p.is_zero() && p.homogeneous_degree() == Some(0)).then_some((ri, j))
                })
            });
            let Some((ri, j)) = found else { break };
            let pivot = rels.remove(ri);
            let c = pivot.coord(j).leading().unwrap().1.clone();
            let cinv = c.inv();
            for v in rels.iter_mut() {
                let f = v.coord(j).clone();
                if f.is_zero() {
                    continue;
                }
                let factor = f.scale(&cinv);
                *v = v.sub(&pivot.mul_poly(&factor));
            }
            rels.retain(|v| !v.is_zero());
            alive[j] = false;
            eliminations.push((j, pivot.scale(&cinv)));
        }
        let kept: Vec<usize> = (0..r).filter(|&j| alive[j]).collect();
        let new_index: BTreeMap<usize, usize> =
            kept.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let nk = kept.len();
        let compact = |v: &ModVec| {
            ModVec::from_coords(kept.iter().map(|&o| v.coord(o).clone()).collect())
        };
        // express old generators in the kept ones, newest elimination first
        let mut old_in_new: Vec<Option<ModVec>> = vec![None; r];
        for &o in &kept {
            old_in_new[o] = Some(ModVec::unit(self.field, self.nvars, nk, new_index[&o]));
        }
        for (j, rel) in eliminations.iter().rev() {
            // e_j = - sum_{i != j} rel_i e_i  (rel normalized so rel_j = 1)
            let mut acc = ModVec::zero(self.nvars, nk);
            for i in 0..r {
                if i == *j || rel.coord(i).is_zero() {
                    continue;
                }
                let expr = old_in_new[i]
                    .as_ref()
                    .expect("later eliminations and kept generators are resolved first");
                acc = acc.sub(&expr.mul_poly(rel.coord(i)));
            }
            old_in_new[*j] = Some(acc);
        }
        let new_gens: Vec<i64> = kept.iter().map(|&o| self.gens[o]).collect();
        let amb = FreeGradedModule::new(self.field, self.nvars, new_gens.clone());
        let new_rels: Vec<Relation> = rels
            .iter()
            .map(|v| {
                let c = compact(v);
                Relation {
                    degree: amb.degree_of(&c).unwrap().expect("nonzero relation"),
                    vector: c,
                }
            })
            .collect();
        (
            GradedPresentation::from_parts(self.field, self.nvars, new_gens, new_rels),
            Minimalization {
                kept,
                old_in_new: old_in_new.into_iter().map(Option::unwrap).collect(),
            },
        )
    }

    /// Dimensions of `T_0(x)_k`, i.e. the number of minimal generators in
    /// each degree: generators of degree k minus the rank of the constant
    /// parts of degree-k relations. Degrees with dimension zero are omitted.
    pub fn minimal_generator_counts(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (j, &d) in self.gens.iter().enumerate() {
            by_degree.entry(d).or_default().push(j);
        }
        for (d, idx) in by_degree {
            let rows: Vec<Vec<crate::field::Scalar>> = self
                .rels
                .iter()
                .filter(|r| r.degree == d)
                .map(|r| {
                    idx.iter()
                        .map(|&j| constant_coefficient(r.vector.coord(j), self.field))
                        .collect()
                })
                .collect();
            let rank = if rows.is_empty() {
                0
            } else {
                Matrix::from_rows(self.field, rows).rank()
            };
            if idx.len() > rank {
                out.insert(d, idx.len() - rank);
            }
        }
        out
    }

    /// Top degree of `T_0(x)`; `None` for the zero module.
    pub fn degree(&self) -> Option<i64> {
        self.minimal_generator_counts().keys().next_back().copied()
    }

    /// Least `m` with `F_m x = x`; zero for the zero module.
    pub fn canonical_epi_bound(&self) -> i64 {
        self.degree().unwrap_or(0)
    }
}

fn constant_coefficient(p: &MultiPoly, field: FieldSpec) -> crate::field::Scalar {
    p.coeff(&crate::poly::Monomial::one(p.nvars()))
        .cloned()
        .unwrap_or_else(|| field.zero())
}
