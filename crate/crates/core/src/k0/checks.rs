use crate::endo::{self, EndoModule, EndoMorphism};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graded::{self, GradedMorphism, GradedPresentation};
use crate::theta;

use super::KPolynomial;

/// Class of a graded module: its Hilbert numerator.
pub fn kpoly(x: &GradedPresentation) -> KPolynomial {
    x.hilbert_numerator()
}

/// `0 -> sub -> middle -> quotient -> 0` of graded modules, certified exact.
#[derive(Clone, Debug)]
pub struct GradedSes {
    pub inclusion: GradedMorphism,
    pub projection: GradedMorphism,
}

impl GradedSes {
    pub fn new(inclusion: GradedMorphism, projection: GradedMorphism) -> Result<Self> {
        if !inclusion.is_injective()? {
            return Err(Error::IllDefinedMorphism("inclusion has a kernel".into()));
        }
        if !projection.is_surjective()? {
            return Err(Error::IllDefinedMorphism("projection is not onto".into()));
        }
        if !graded::is_exact_at(&inclusion, &projection)? {
            return Err(Error::IllDefinedMorphism("not exact in the middle".into()));
        }
        Ok(GradedSes {
            inclusion,
            projection,
        })
    }

    /// Complete an injective map with its cokernel.
    pub fn from_inclusion(inclusion: GradedMorphism) -> Result<Self> {
        let (_, projection) = inclusion.cokernel()?;
        Self::new(inclusion, projection)
    }

    pub fn sub(&self) -> &GradedPresentation {
        self.inclusion.source()
    }

    pub fn middle(&self) -> &GradedPresentation {
        self.inclusion.target()
    }

    pub fn quotient(&self) -> &GradedPresentation {
        self.projection.target()
    }
}

/// Short exact sequence of k[t]-modules, certified exact.
#[derive(Clone, Debug)]
pub struct EndoSes {
    pub inclusion: EndoMorphism,
    pub projection: EndoMorphism,
}

impl EndoSes {
    pub fn new(inclusion: EndoMorphism, projection: EndoMorphism) -> Result<Self> {
        if !inclusion.is_injective() || !projection.is_surjective() {
            return Err(Error::IllDefinedMorphism("sequence is not short exact".into()));
        }
        if !endo::is_exact_at(&inclusion, &projection)? {
            return Err(Error::IllDefinedMorphism("not exact in the middle".into()));
        }
        Ok(EndoSes {
            inclusion,
            projection,
        })
    }

    pub fn sub(&self) -> &EndoModule {
        self.inclusion.source()
    }

    pub fn middle(&self) -> &EndoModule {
        self.inclusion.target()
    }

    pub fn quotient(&self) -> &EndoModule {
        self.projection.target()
    }
}

#[derive(Clone, Debug)]
pub enum ShortExactSequence {
    Graded(GradedSes),
    Endo(EndoSes),
}

pub fn check_ses_additivity(s: &ShortExactSequence) -> bool {
    match s {
        ShortExactSequence::Graded(g) => {
            kpoly(g.sub()).add(&kpoly(g.quotient())) == kpoly(g.middle())
        }
        ShortExactSequence::Endo(e) => {
            e.sub().rank_class() + e.quotient().rank_class() == e.middle().rank_class()
        }
    }
}

/// Classes of the canonical filtration quotients add up to the class of `x`.
pub fn check_filtration_additivity(x: &GradedPresentation) -> bool {
    let top = x.degree().unwrap_or(-1);
    let sum = (0..=top)
        .map(|p| kpoly(&x.filtration_quotient(p)))
        .fold(KPolynomial::zero(), |a, b| a.add(&b));
    sum == kpoly(x)
}

/// For torsion-free `x`: `kpoly(x) = sum_k dim T_0(x)_k q^k`.
pub fn check_tf_decomposition(x: &GradedPresentation) -> Result<bool> {
    if !x.is_torsion_free()? {
        return Err(Error::NotTorsionFree);
    }
    let mut expected = KPolynomial::zero();
    for (k, dim) in x.minimal_generator_counts() {
        expected.add_term(k, dim as i64);
    }
    Ok(expected == kpoly(x))
}

/// `kpoly(x)(1) = rank theta(x)`, and the psi-torsion class is divisible
/// by `1 - q`.
pub fn check_localization_classes(x: &GradedPresentation) -> Result<bool> {
    let rank = theta::theta(x)?.rank_class() as i64;
    let (tor, _) = theta::psi_torsion(x)?;
    Ok(kpoly(x).eval_at_one() == rank && kpoly(&tor).divisible_by_one_minus_q())
}

/// `a[psi,phi](-m-1) --psi--> a[psi,phi](-m) ->> a[phi](-m)` is exact and
/// the classes satisfy `kpoly(nil) = kpoly(free(m)) - kpoly(free(m+1))`.
pub fn check_main_diagram(field: FieldSpec, a_dim: usize, m: i64) -> Result<bool> {
    let top = GradedPresentation::free(field, a_dim, 2, m + 1);
    let mid = GradedPresentation::free(field, a_dim, 2, m);
    let nil = theta::embed_nil(field, a_dim, m);
    let psi_cols = (0..a_dim)
        .map(|j| {
            mid.ambient()
                .basis_vector(j)
                .mul_term(&field.one(), &crate::poly::Monomial::var(2, 0))
        })
        .collect();
    let psi = GradedMorphism::new(top, mid.clone(), psi_cols)?;
    let proj_cols = (0..a_dim).map(|j| mid.ambient().basis_vector(j)).collect();
    let proj = GradedMorphism::new(mid, nil.clone(), proj_cols)?;
    let exact = GradedSes::new(psi.clone(), proj).is_ok();
    let classes = kpoly(&nil) == kpoly(psi.target()).sub(&kpoly(psi.source()));
    let expected = KPolynomial::from_coeffs(&[(m, a_dim as i64), (m + 1, -(a_dim as i64))]);
    Ok(exact && classes && kpoly(&nil) == expected)
}

/// Rank of the polynomial object on `k^{a_dim}`: the base-change map on
/// classes.
pub fn check_base_change(field: FieldSpec, a_dim: usize) -> usize {
    EndoModule::poly_object(field, a_dim).rank_class()
}

/// The class of a nilpotent module equals the sum of the classes of its
/// one-variable filtration factors.
pub fn check_devissage_classes(x: &GradedPresentation) -> Result<bool> {
    let factors = theta::nil_filtration_factors(x)?;
    let mut sum = KPolynomial::zero();
    for f in &factors {
        sum = sum.add(&kpoly(&theta::gr1_to_nil2(f)?));
    }
    Ok(sum == kpoly(x))
}
