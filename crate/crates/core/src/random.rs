//! Seeded instance generators.
//!
//! The generator is SplitMix64, spelled out here so that other
//! implementations can reproduce every instance from a seed:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)                       (all arithmetic mod 2^64)
//! ```
//!
//! `below(n)` is `next() % n`, `range(lo, hi)` is `lo + below(hi - lo + 1)`,
//! and small coefficients are drawn from `[-3, 3]`. Each instance gets its
//! own generator, seeded with `stream_seed(seed, stream, index)`.

use crate::endo::{EndoModule, SubmoduleRep, TVector};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{GradedPresentation, GradedMorphism};
use crate::linalg::UniPoly;
use crate::poly::{FreeGradedModule, ModVec, Monomial, MultiPoly};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// True with probability `num / den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    pub fn coefficient(&mut self, field: FieldSpec) -> Scalar {
        field.from_i64(self.range(-3, 3))
    }

    pub fn nonzero_coefficient(&mut self, field: FieldSpec) -> Scalar {
        let v = self.range(1, 6);
        field.from_i64(if v > 3 { 3 - v } else { v })
    }
}

/// Seed of instance `index` in suite stream `stream`.
pub fn stream_seed(seed: u64, stream: u64, index: u64) -> u64 {
    let mixed = seed
        ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03);
    SplitMix64::new(mixed).next_u64()
}

/// Shape limits for generated presentations.
#[derive(Clone, Copy, Debug)]
pub struct GenParams {
    pub field: FieldSpec,
    pub nvars: usize,
    pub max_gens: usize,
    pub max_degree: i64,
}

/// Homogeneous polynomial of degree `d`: every monomial is kept with
/// probability 1/2 and gets a nonzero coefficient.
pub fn random_homogeneous(rng: &mut SplitMix64, field: FieldSpec, nvars: usize, d: i64) -> MultiPoly {
    if d < 0 {
        return MultiPoly::zero(nvars);
    }
    let terms: Vec<(Monomial, Scalar)> = Monomial::all_of_degree(nvars, d as u32)
        .into_iter()
        .filter_map(|m| rng.chance(1, 2).then(|| (m, rng.nonzero_coefficient(field))))
        .collect();
    MultiPoly::from_terms(nvars, terms)
}

/// Homogeneous vector of degree `d` in `amb`; coordinates are zero with
/// probability 1/3.
pub fn random_vector(rng: &mut SplitMix64, amb: &FreeGradedModule, d: i64) -> ModVec {
    ModVec::from_coords(
        amb.shifts
            .iter()
            .map(|&s| {
                if rng.chance(1, 3) {
                    MultiPoly::zero(amb.nvars)
                } else {
                    random_homogeneous(rng, amb.field, amb.nvars, d - s)
                }
            })
            .collect(),
    )
}

pub fn random_presentation(rng: &mut SplitMix64, p: &GenParams) -> GradedPresentation {
    let r = rng.range(1, p.max_gens.max(1) as i64) as usize;
    let top = p.max_degree.clamp(0, 2);
    let gens: Vec<i64> = (0..r).map(|_| rng.range(0, top)).collect();
    let amb = FreeGradedModule::new(p.field, p.nvars, gens.clone());
    let dmin = *gens.iter().min().unwrap();
    let nrels = rng.range(0, r as i64 + 1);
    let mut rels = Vec::new();
    for _ in 0..nrels {
        let lo = if rng.chance(1, 6) { dmin } else { dmin + 1 };
        let e = rng.range(lo.min(p.max_degree.max(dmin)), p.max_degree.max(dmin));
        let v = random_vector(rng, &amb, e);
        if !v.is_zero() {
            rels.push((e, v));
        }
    }
    GradedPresentation::new(p.field, p.nvars, gens, rels).expect("generated relations are homogeneous")
}

/// Random presentation plus `psi^{k_j} e_j = 0` for every generator, `k_j <= 3`.
pub fn random_nilpotent(rng: &mut SplitMix64, p: &GenParams) -> GradedPresentation {
    let base = random_presentation(rng, &GenParams { nvars: 2, ..*p });
    let amb = base.ambient();
    let mut rels: Vec<(i64, ModVec)> = base
        .relations()
        .iter()
        .map(|r| (r.degree, r.vector.clone()))
        .collect();
    for (j, &d) in base.gens().iter().enumerate() {
        let k = rng.range(1, 3);
        let v = amb
            .basis_vector(j)
            .mul_term(&p.field.one(), &Monomial::var_pow(2, 0, k as u32));
        rels.push((d + k, v));
    }
    GradedPresentation::new(p.field, 2, base.gens().to_vec(), rels).expect("homogeneous")
}

/// A module isomorphic to a sum of shifted free modules, sometimes
/// presented with redundant generators.
pub fn random_torsion_free(rng: &mut SplitMix64, p: &GenParams) -> GradedPresentation {
    let r = rng.range(0, p.max_gens.max(1) as i64) as usize;
    let mut gens: Vec<i64> = (0..r).map(|_| rng.range(0, p.max_degree.clamp(0, 4))).collect();
    let mut rels = Vec::new();
    if r > 0 && rng.chance(1, 2) {
        // extra generator e' of degree d' with e' = f e_0
        let extra = gens[0] + rng.range(0, 2);
        gens.push(extra);
        let amb = FreeGradedModule::new(p.field, p.nvars, gens.clone());
        let f = random_homogeneous(rng, p.field, p.nvars, extra - gens[0]);
        let v = amb.basis_vector(0).mul_poly(&f).sub(&amb.basis_vector(r));
        rels.push((extra, v));
    }
    GradedPresentation::new(p.field, p.nvars, gens, rels).expect("homogeneous")
}

/// A random submodule of `x` generated by one or two homogeneous elements,
/// with its inclusion.
pub fn random_inclusion(rng: &mut SplitMix64, x: &GradedPresentation) -> GradedMorphism {
    let amb = x.ambient();
    let base = x.gens().iter().copied().min().unwrap_or(0);
    let count = rng.range(1, 2);
    let gens: Vec<(ModVec, i64)> = (0..count)
        .map(|_| {
            let d = base + rng.range(0, 2);
            (random_vector(rng, &amb, d), d)
        })
        .collect();
    x.submodule(&gens).expect("homogeneous generators").1
}

/// Graded k[t]-module: generator degrees and relations whose entries are
/// single terms `c t^k` of matching degree.
pub fn random_graded_t_module(rng: &mut SplitMix64, field: FieldSpec, max_gens: usize) -> (EndoModule, Vec<i64>) {
    let r = rng.range(1, max_gens.max(1) as i64) as usize;
    let degrees: Vec<i64> = (0..r).map(|_| rng.range(0, 2)).collect();
    let dmin = *degrees.iter().min().unwrap();
    let nrels = rng.range(0, r as i64 + 1);
    let mut rels: Vec<TVector> = Vec::new();
    for _ in 0..nrels {
        let e = rng.range(dmin, dmin + 3);
        let col: TVector = degrees
            .iter()
            .map(|&d| {
                if e >= d && rng.chance(2, 3) {
                    UniPoly::monomial(rng.nonzero_coefficient(field), (e - d) as usize)
                } else {
                    UniPoly::zero(field)
                }
            })
            .collect();
        rels.push(col);
    }
    if rng.chance(1, 2) {
        for j in 0..r {
            let k = rng.range(1, 3) as usize;
            let mut col = vec![UniPoly::zero(field); r];
            col[j] = UniPoly::t_pow(field, k);
            rels.push(col);
        }
    }
    (EndoModule::new(field, r, rels).expect("shapes agree"), degrees)
}

fn random_unipoly(rng: &mut SplitMix64, field: FieldSpec, max_deg: i64) -> UniPoly {
    let d = rng.range(0, max_deg);
    UniPoly::from_coeffs(field, (0..=d).map(|_| rng.coefficient(field)).collect())
}

/// A k[t]-module built from one to three cyclic pieces, and a submodule
/// generated by one or two random vectors.
pub fn random_endo_pair(rng: &mut SplitMix64, field: FieldSpec) -> (EndoModule, SubmoduleRep) {
    let pieces = rng.range(1, 3);
    let mut x = EndoModule::zero(field);
    for _ in 0..pieces {
        let a = rng.range(1, 3) as usize;
        let c = UniPoly::from_i64(field, &[rng.range(1, 3), 1]);
        let piece = match rng.below(4) {
            0 => EndoModule::poly_object(field, 1),
            1 => EndoModule::cyclic(UniPoly::t_pow(field, a)),
            2 => EndoModule::cyclic((0..a).fold(UniPoly::one(field), |acc, _| acc.mul(&c))),
            _ => EndoModule::cyclic(UniPoly::t_pow(field, a).mul(&c)),
        };
        x = x.direct_sum(&piece).expect("same field");
    }
    let count = rng.range(1, 2);
    let gens = (0..count)
        .map(|_| (0..x.num_gens()).map(|_| random_unipoly(rng, field, 2)).collect())
        .collect();
    let y = SubmoduleRep::new(&x, gens).expect("shapes agree");
    (x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // first outputs for seed 0, as published with the algorithm
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn generators_are_deterministic() {
        let p = GenParams {
            field: FieldSpec::Prime(32003),
            nvars: 2,
            max_gens: 3,
            max_degree: 4,
        };
        let a = random_presentation(&mut SplitMix64::new(stream_seed(7, 1, 3)), &p);
        let b = random_presentation(&mut SplitMix64::new(stream_seed(7, 1, 3)), &p);
        assert_eq!(a, b);
        let n = random_nilpotent(&mut SplitMix64::new(11), &p);
        assert!(crate::theta::is_psi_nilpotent(&n).unwrap().is_some());
        let t = random_torsion_free(&mut SplitMix64::new(5), &p);
        assert!(t.is_torsion_free().unwrap());
    }
}
