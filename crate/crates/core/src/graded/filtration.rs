use crate::poly::ModVec;

use super::morphism::GradedMorphism;
use super::presentation::GradedPresentation;

impl GradedPresentation {
    fn generators_up_to(&self, p: i64) -> Vec<(ModVec, i64)> {
        let amb = self.ambient();
        self.gens()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d <= p)
            .map(|(j, &d)| (amb.basis_vector(j), d))
            .collect()
    }

    /// `F_p x`, the submodule generated by the pieces of degree `<= p`,
    /// with its inclusion. `F_{-1} x = 0`.
    ///
    /// Generated by the presentation generators of degree `<= p`: every
    /// element of degree `<= p` is a combination of those.
    pub fn canonical_filtration(&self, p: i64) -> (GradedPresentation, GradedMorphism) {
        self.submodule(&self.generators_up_to(p))
            .expect("basis vectors are homogeneous")
    }

    /// Submodule generated by homogeneous elements (of the free module on
    /// the generators, with declared degrees), minimalized, with inclusion.
    pub fn submodule(
        &self,
        gens: &[(ModVec, i64)],
    ) -> crate::error::Result<(GradedPresentation, GradedMorphism)> {
        let sub = GradedPresentation::subquotient(&self.ambient(), gens, &self.relation_pairs())?;
        let (min, info) = sub.minimalize();
        let cols = info.kept.iter().map(|&i| gens[i].0.clone()).collect();
        let inc = GradedMorphism::new_unchecked(min.clone(), self.clone(), cols);
        Ok((min, inc))
    }

    /// `F_p x / F_{p-1} x`, minimalized; all its generators sit in degree `p`.
    pub fn filtration_quotient(&self, p: i64) -> GradedPresentation {
        let numer = self.generators_up_to(p);
        let mut denom = self.generators_up_to(p - 1);
        denom.extend(self.relation_pairs());
        GradedPresentation::subquotient(&self.ambient(), &numer, &denom)
            .expect("basis vectors are homogeneous")
            .minimalize()
            .0
    }

    /// The canonical epimorphism from the free module on `T_0(x)_p`, placed
    /// in degree `p`, onto `F_p x / F_{p-1} x`.
    pub fn alpha_p(&self, p: i64) -> GradedMorphism {
        let q = self.filtration_quotient(p);
        debug_assert!(q.gens().iter().all(|&d| d == p));
        let free = GradedPresentation::free(self.field(), q.num_gens(), self.nvars(), p);
        let amb = q.ambient();
        let cols = (0..q.num_gens()).map(|j| amb.basis_vector(j)).collect();
        GradedMorphism::new_unchecked(free, q, cols)
    }
}
