use crate::error::{Error, Result};
use crate::linalg::{hermite_columns, snf_unipoly, Snf, UniPoly, UniPolyMatrix};

use super::module::{combine, scale_vec, EndoModule, TVector};

/// Submodule of an [`EndoModule`] given by generators (vectors in the free
/// module on the ambient generators, read modulo the ambient relations).
/// Generators are kept in reduced Hermite form together with the ambient
/// relations, dropping those that vanish.
#[derive(Clone, Debug)]
pub struct SubmoduleRep {
    ambient: EndoModule,
    generators: Vec<TVector>,
    /// Smith form of `[generators | ambient relations]`.
    span: Snf,
}

impl SubmoduleRep {
    pub fn new(ambient: &EndoModule, generators: Vec<TVector>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient.num_gens()) {
            return Err(Error::AmbientMismatch(format!(
                "generator of length {} in a module with {} generators",
                g.len(),
                ambient.num_gens()
            )));
        }
        let field = ambient.field();
        let r = ambient.num_gens();
        let mut cols = generators;
        cols.extend(ambient.relations().iter().cloned());
        let generators: Vec<TVector> = hermite_columns(r, &cols)
            .into_iter()
            .filter(|c| !ambient.vanishes(c))
            .collect();
        let mut cols = generators.clone();
        cols.extend(ambient.relations().iter().cloned());
        let span = snf_unipoly(&UniPolyMatrix::from_columns(field, r, &cols));
        Ok(SubmoduleRep {
            ambient: ambient.clone(),
            generators,
            span,
        })
    }

    pub fn whole(ambient: &EndoModule) -> Self {
        let gens = (0..ambient.num_gens()).map(|j| ambient.basis_vector(j)).collect();
        Self::new(ambient, gens).expect("basis vectors fit")
    }

    pub fn zero(ambient: &EndoModule) -> Self {
        Self::new(ambient, Vec::new()).expect("no generators")
    }

    pub fn ambient(&self) -> &EndoModule {
        &self.ambient
    }

    pub fn generators(&self) -> &[TVector] {
        &self.generators
    }

    pub fn contains(&self, v: &[UniPoly]) -> bool {
        self.span.solve(v).is_some()
    }

    fn check_ambient(&self, other: &SubmoduleRep) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(
                "submodules of different modules".into(),
            ));
        }
        Ok(())
    }

    pub fn is_subset_of(&self, other: &SubmoduleRep) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.generators.iter().all(|g| other.contains(g)))
    }

    /// Equality by mutual membership.
    pub fn same_as(&self, other: &SubmoduleRep) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Multiply every generator by `p`.
    pub fn scaled(&self, p: &UniPoly) -> SubmoduleRep {
        let gens = self.generators.iter().map(|g| scale_vec(g, p)).collect();
        Self::new(&self.ambient, gens).expect("same shape")
    }

    pub fn t_multiple(&self, k: usize) -> SubmoduleRep {
        self.scaled(&UniPoly::t_pow(self.ambient.field(), k))
    }

    /// `a ∩ b`, from the kernel of `[A | -B | R]` over the PID k[t].
    pub fn intersect(&self, other: &SubmoduleRep) -> Result<SubmoduleRep> {
        self.check_ambient(other)?;
        let field = self.ambient.field();
        let r = self.ambient.num_gens();
        let na = self.generators.len();
        let minus = UniPoly::one(field).neg();
        let mut cols = self.generators.clone();
        cols.extend(other.generators.iter().map(|g| scale_vec(g, &minus)));
        cols.extend(self.ambient.relations().iter().cloned());
        let snf = snf_unipoly(&UniPolyMatrix::from_columns(field, r, &cols));
        let gens: Vec<TVector> = snf
            .kernel_columns()
            .iter()
            .map(|k| combine(field, r, &k[..na], &self.generators))
            .filter(|v| !self.ambient.vanishes(v))
            .collect();
        Self::new(&self.ambient, gens)
    }

    /// Presentation of the submodule as a module in its own right.
    pub fn as_module(&self) -> EndoModule {
        let field = self.ambient.field();
        let r = self.ambient.num_gens();
        let k = self.generators.len();
        let mut cols = self.generators.clone();
        cols.extend(self.ambient.relations().iter().cloned());
        let snf = snf_unipoly(&UniPolyMatrix::from_columns(field, r, &cols));
        let rels = snf
            .kernel_columns()
            .into_iter()
            .map(|c| c[..k].to_vec())
            .collect();
        EndoModule::new(field, k, rels).expect("shapes agree")
    }
}

impl EndoModule {
    /// `im(t^n)`: the submodule generated by `t^n` times the generators.
    pub fn t_power_image(&self, n: usize) -> SubmoduleRep {
        SubmoduleRep::whole(self).t_multiple(n)
    }
}
