use crate::error::{Error, Result};
use crate::poly::{relations, FreeGradedModule, ModVec, MultiPoly};

use super::presentation::GradedPresentation;

/// Degree-preserving morphism between presentations, given by the image of
/// each source generator in the free module on the target generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMorphism {
    source: GradedPresentation,
    target: GradedPresentation,
    columns: Vec<ModVec>,
}

impl GradedMorphism {
    /// Checks shapes, homogeneity (column `j` has degree `source.gens[j]`)
    /// and that source relations land in the target relations.
    pub fn new(
        source: GradedPresentation,
        target: GradedPresentation,
        columns: Vec<ModVec>,
    ) -> Result<Self> {
        source.check_same_ring(&target)?;
        if columns.len() != source.num_gens() {
            return Err(Error::IllDefinedMorphism(format!(
                "{} columns for {} source generators",
                columns.len(),
                source.num_gens()
            )));
        }
        let amb = target.ambient();
        for (j, c) in columns.iter().enumerate() {
            if c.rank() != target.num_gens() {
                return Err(Error::IllDefinedMorphism(format!(
                    "column {j} has {} entries, target has {} generators",
                    c.rank(),
                    target.num_gens()
                )));
            }
            match amb.degree_of(c) {
                Ok(None) => {}
                Ok(Some(d)) if d == source.gens()[j] => {}
                Ok(Some(d)) => {
                    return Err(Error::IllDefinedMorphism(format!(
                        "column {j} has degree {d}, generator has degree {}",
                        source.gens()[j]
                    )))
                }
                Err(e) => return Err(Error::IllDefinedMorphism(e.to_string())),
            }
        }
        let f = GradedMorphism {
            source,
            target,
            columns,
        };
        for (i, r) in f.source.relations().iter().enumerate() {
            if !f.target.vanishes(&f.apply(&r.vector))? {
                return Err(Error::IllDefinedMorphism(format!(
                    "source relation {i} does not map to zero"
                )));
            }
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: GradedPresentation,
        target: GradedPresentation,
        columns: Vec<ModVec>,
    ) -> Self {
        GradedMorphism {
            source,
            target,
            columns,
        }
    }

    /// Build from a row-major matrix of polynomial strings
    /// (target generators by source generators).
    pub fn parse(
        source: GradedPresentation,
        target: GradedPresentation,
        matrix: &[&[&str]],
    ) -> Result<Self> {
        let (field, n) = (target.field(), target.nvars());
        if matrix.len() != target.num_gens() {
            return Err(Error::IllDefinedMorphism(format!(
                "{} rows for {} target generators",
                matrix.len(),
                target.num_gens()
            )));
        }
        let mut rows = Vec::new();
        for row in matrix {
            if row.len() != source.num_gens() {
                return Err(Error::IllDefinedMorphism(format!(
                    "row of length {} for {} source generators",
                    row.len(),
                    source.num_gens()
                )));
            }
            rows.push(
                row.iter()
                    .map(|s| crate::poly::parse_poly(s, field, n))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let columns = (0..source.num_gens())
            .map(|j| ModVec::from_coords(rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        Self::new(source, target, columns)
    }

    pub fn identity(x: &GradedPresentation) -> Self {
        let amb = x.ambient();
        let cols = (0..x.num_gens()).map(|j| amb.basis_vector(j)).collect();
        Self::new_unchecked(x.clone(), x.clone(), cols)
    }

    pub fn zero(source: &GradedPresentation, target: &GradedPresentation) -> Self {
        let cols = vec![ModVec::zero(target.nvars(), target.num_gens()); source.num_gens()];
        Self::new_unchecked(source.clone(), target.clone(), cols)
    }

    pub fn source(&self) -> &GradedPresentation {
        &self.source
    }

    pub fn target(&self) -> &GradedPresentation {
        &self.target
    }

    pub fn columns(&self) -> &[ModVec] {
        &self.columns
    }

    /// Row-major matrix: entry (i, j) is the coefficient of target
    /// generator i in the image of source generator j.
    pub fn matrix(&self) -> Vec<Vec<MultiPoly>> {
        (0..self.target.num_gens())
            .map(|i| self.columns.iter().map(|c| c.coord(i).clone()).collect())
            .collect()
    }

    /// Image of an element of the free module on the source generators.
    pub fn apply(&self, v: &ModVec) -> ModVec {
        ModVec::combine(
            v.coords(),
            &self.columns,
            self.target.nvars(),
            self.target.num_gens(),
        )
    }

    /// `self ∘ first`.
    pub fn compose_after(&self, first: &GradedMorphism) -> Result<GradedMorphism> {
        if first.target != self.source {
            return Err(Error::AmbientMismatch(
                "composition of morphisms with mismatched middle object".into(),
            ));
        }
        let cols = first.columns.iter().map(|c| self.apply(c)).collect();
        Ok(Self::new_unchecked(first.source.clone(), self.target.clone(), cols))
    }

    pub fn is_zero(&self) -> bool {
        self.columns
            .iter()
            .all(|c| self.target.vanishes(c).unwrap())
    }

    /// Equality as maps of modules (columns agree modulo target relations).
    pub fn equals(&self, other: &GradedMorphism) -> bool {
        self.source == other.source
            && self.target == other.target
            && self
                .columns
                .iter()
                .zip(&other.columns)
                .all(|(a, b)| self.target.vanishes(&a.sub(b)).unwrap())
    }

    fn source_pairs(&self) -> Vec<(ModVec, i64)> {
        self.columns
            .iter()
            .cloned()
            .zip(self.source.gens().iter().copied())
            .collect()
    }

    /// Generators of `{v in F_source : f(v) in R_target}`, with degrees.
    pub(crate) fn preimage_of_zero(&self) -> Result<Vec<(ModVec, i64)>> {
        let k = self.source.num_gens();
        let mut all = self.source_pairs();
        all.extend(self.target.relation_pairs());
        let (free, rels) = relations(&self.target.ambient(), &all)?;
        let src_free = FreeGradedModule::new(free.field, free.nvars, free.shifts[..k].to_vec());
        let mut out = Vec::new();
        for r in rels {
            let v = r.slice(0..k);
            if let Some(d) = src_free.degree_of(&v)? {
                out.push((v, d));
            }
        }
        Ok(out)
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> Result<(GradedPresentation, GradedMorphism)> {
        let numer = self.preimage_of_zero()?;
        let sub = GradedPresentation::subquotient(
            &self.source.ambient(),
            &numer,
            &self.source.relation_pairs(),
        )?;
        let (min, info) = sub.minimalize();
        let cols = info.kept.iter().map(|&i| numer[i].0.clone()).collect();
        let inc = GradedMorphism::new_unchecked(min.clone(), self.source.clone(), cols);
        Ok((min, inc))
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> Result<(GradedPresentation, GradedMorphism)> {
        let mut rels = self.target.relations().to_vec();
        let amb = self.target.ambient();
        for c in &self.columns {
            if let Some(d) = amb.degree_of(c)? {
                rels.push(super::presentation::Relation {
                    degree: d,
                    vector: c.clone(),
                });
            }
        }
        let coker = GradedPresentation::from_parts(
            self.target.field(),
            self.target.nvars(),
            self.target.gens().to_vec(),
            rels,
        );
        let cols = (0..coker.num_gens()).map(|j| amb.basis_vector(j)).collect();
        let proj = GradedMorphism::new_unchecked(self.target.clone(), coker.clone(), cols);
        Ok((coker, proj))
    }

    /// Image as a subquotient of the target, with the inclusion.
    pub fn image(&self) -> Result<(GradedPresentation, GradedMorphism)> {
        let numer = self.source_pairs();
        let sub = GradedPresentation::subquotient(
            &self.target.ambient(),
            &numer,
            &self.target.relation_pairs(),
        )?;
        let (min, info) = sub.minimalize();
        let cols = info.kept.iter().map(|&i| numer[i].0.clone()).collect();
        let inc = GradedMorphism::new_unchecked(min.clone(), self.target.clone(), cols);
        Ok((min, inc))
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.0.is_zero())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.0.is_zero())
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_injective()? && self.is_surjective()?)
    }
}

/// Whether `g ∘ f = 0` and `ker g = im f` (checked as `ker g ⊆ im f + R`).
pub fn is_exact_at(f: &GradedMorphism, g: &GradedMorphism) -> Result<bool> {
    if f.target() != g.source() {
        return Err(Error::AmbientMismatch("sequence does not compose".into()));
    }
    if !g.compose_after(f)?.is_zero() {
        return Ok(false);
    }
    let mid = g.source();
    let mut span: Vec<ModVec> = f.columns().to_vec();
    span.extend(mid.relation_vectors());
    let gb = crate::poly::buchberger(&span, &mid.ambient())?;
    for (v, _) in g.preimage_of_zero()? {
        if !gb.contains(&v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const F: FieldSpec = FieldSpec::Prime(32003);

    fn cyclic_psiphi() -> GradedPresentation {
        GradedPresentation::parse(F, 2, &[0], &[(2, &["psi*phi"])]).unwrap()
    }

    #[test]
    fn kernel_of_psi_on_cyclic_module() {
        let x = cyclic_psiphi();
        let x1 = x.shift_down(1);
        let psi = GradedMorphism::parse(x1.clone(), x.clone(), &[&["psi"]]).unwrap();
        let (k, inc) = psi.kernel().unwrap();
        // kernel is the phi-line phi*e inside x(-1), starting in degree 2
        let h = k.hilbert_numerator();
        let dims = h.series_coefficients(2, 5);
        assert_eq!(dims, vec![0, 0, 1, 1, 1, 1]);
        assert!(inc.is_injective().unwrap());
        assert!(psi.compose_after(&inc).unwrap().is_zero());
    }

    #[test]
    fn rejects_ill_defined_maps() {
        let x = cyclic_psiphi();
        let free = GradedPresentation::free(F, 1, 2, 0);
        // k[psi,phi]/(psi phi) -> k[psi,phi], 1 -> 1 does not respect relations
        assert!(matches!(
            GradedMorphism::parse(x.clone(), free.clone(), &[&["1"]]),
            Err(Error::IllDefinedMorphism(_))
        ));
        // wrong degree
        assert!(GradedMorphism::parse(free.clone(), x.clone(), &[&["psi"]]).is_err());
        assert!(GradedMorphism::parse(free, x, &[&["1"]]).is_ok());
    }

    #[test]
    fn cokernel_and_surjectivity() {
        let free = GradedPresentation::free(F, 1, 2, 0);
        let x = cyclic_psiphi();
        let proj = GradedMorphism::parse(free.clone(), x.clone(), &[&["1"]]).unwrap();
        assert!(proj.is_surjective().unwrap());
        assert!(!proj.is_injective().unwrap());
        let (k, inc) = proj.kernel().unwrap();
        assert_eq!(k.gens(), &[2]);
        assert!(is_exact_at(&inc, &proj).unwrap());
        let f1 = GradedPresentation::free(F, 1, 2, 1);
        let psi = GradedMorphism::parse(f1, free, &[&["psi"]]).unwrap();
        let (c, _) = psi.cokernel().unwrap();
        assert_eq!(c.hilbert_numerator(), crate::k0::KPolynomial::one_minus_q());
    }

    #[test]
    fn identity_is_iso_and_composes() {
        let x = cyclic_psiphi();
        let id = GradedMorphism::identity(&x);
        assert!(id.is_isomorphism().unwrap());
        assert!(id.compose_after(&id).unwrap().equals(&id));
        assert!(GradedMorphism::zero(&x, &x).is_zero());
    }
}
