use crate::error::{Error, Result};
use crate::linalg::{snf_unipoly, UniPoly, UniPolyMatrix};

use super::module::{combine, EndoModule, TVector};

/// k[t]-linear map, given by the image of each source generator in the
/// free module on the target generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoMorphism {
    source: EndoModule,
    target: EndoModule,
    columns: Vec<TVector>,
}

impl EndoMorphism {
    pub fn new(source: EndoModule, target: EndoModule, columns: Vec<TVector>) -> Result<Self> {
        if source.field() != target.field() {
            return Err(Error::AmbientMismatch("maps between different fields".into()));
        }
        if columns.len() != source.num_gens()
            || columns.iter().any(|c| c.len() != target.num_gens())
        {
            return Err(Error::IllDefinedMorphism(format!(
                "expected {} columns of length {}",
                source.num_gens(),
                target.num_gens()
            )));
        }
        let f = EndoMorphism {
            source,
            target,
            columns,
        };
        for (i, r) in f.source.relations().iter().enumerate() {
            if !f.target.vanishes(&f.apply(r)) {
                return Err(Error::IllDefinedMorphism(format!(
                    "source relation {i} does not map to zero"
                )));
            }
        }
        Ok(f)
    }

    pub fn identity(x: &EndoModule) -> Self {
        let cols = (0..x.num_gens()).map(|j| x.basis_vector(j)).collect();
        EndoMorphism {
            source: x.clone(),
            target: x.clone(),
            columns: cols,
        }
    }

    pub fn source(&self) -> &EndoModule {
        &self.source
    }

    pub fn target(&self) -> &EndoModule {
        &self.target
    }

    pub fn columns(&self) -> &[TVector] {
        &self.columns
    }

    pub fn apply(&self, v: &[UniPoly]) -> TVector {
        combine(self.target.field(), self.target.num_gens(), v, &self.columns)
    }

    pub fn compose_after(&self, first: &EndoMorphism) -> Result<EndoMorphism> {
        if first.target != self.source {
            return Err(Error::AmbientMismatch("mismatched middle object".into()));
        }
        Ok(EndoMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            columns: first.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| self.target.vanishes(c))
    }

    /// Generators of `{v : f(v) = 0 in the target}` in the free module on
    /// the source generators.
    pub fn preimage_of_zero(&self) -> Vec<TVector> {
        let field = self.source.field();
        let k = self.source.num_gens();
        let mut cols = self.columns.clone();
        cols.extend(self.target.relations().iter().cloned());
        snf_unipoly(&UniPolyMatrix::from_columns(field, self.target.num_gens(), &cols))
            .kernel_columns()
            .into_iter()
            .map(|c| c[..k].to_vec())
            .collect()
    }

    pub fn kernel(&self) -> EndoModule {
        let gens = self.preimage_of_zero();
        super::SubmoduleRep::new(&self.source, gens)
            .expect("shapes agree")
            .as_module()
    }

    pub fn cokernel(&self) -> EndoModule {
        let mut rels = self.target.relations().to_vec();
        rels.extend(self.columns.iter().cloned());
        EndoModule::new(self.target.field(), self.target.num_gens(), rels).expect("shapes agree")
    }

    pub fn is_injective(&self) -> bool {
        self.preimage_of_zero().iter().all(|v| self.source.vanishes(v))
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

/// `g ∘ f = 0` and `ker g ⊆ im f`.
pub fn is_exact_at(f: &EndoMorphism, g: &EndoMorphism) -> Result<bool> {
    if f.target() != g.source() {
        return Err(Error::AmbientMismatch("sequence does not compose".into()));
    }
    if !g.compose_after(f)?.is_zero() {
        return Ok(false);
    }
    let image = super::SubmoduleRep::new(f.target(), f.columns().to_vec())?;
    Ok(g.preimage_of_zero().iter().all(|v| image.contains(v)))
}
