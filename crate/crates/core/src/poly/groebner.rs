//! Buchberger's algorithm for homogeneous submodules of graded free modules,
//! normal forms, Schreyer syzygies and relation modules of arbitrary
//! generating lists.

use std::collections::{BTreeMap, HashSet};

use super::module::{FreeGradedModule, ModVec};
use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

/// Reduced Gröbner basis of a homogeneous submodule, position over term
/// with grevlex inside each coordinate. Elements are monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ambient: FreeGradedModule,
    elements: Vec<ModVec>,
    degrees: Vec<i64>,
}

#[derive(Clone, Copy, Debug)]
pub struct BuchbergerOptions {
    /// Skip S-pairs by Buchberger's chain criterion.
    pub chain_criterion: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            chain_criterion: true,
        }
    }
}

enum Work {
    Generator(ModVec),
    Pair(usize, usize),
}

struct Builder<'a> {
    ambient: &'a FreeGradedModule,
    elements: Vec<ModVec>,
    degrees: Vec<i64>,
    /// lead position and monomial of each element
    leads: Vec<(usize, Monomial)>,
}

impl Builder<'_> {
    fn find_reducer(&self, pos: usize, m: &Monomial) -> Option<usize> {
        self.leads
            .iter()
            .position(|(p, lm)| *p == pos && lm.divides(m))
    }

    fn top_reduce(&self, mut v: ModVec) -> ModVec {
        while let Some((pos, m, c)) = v.leading() {
            let Some(i) = self.find_reducer(pos, m) else {
                break;
            };
            let q = self.leads[i].1.quotient_of(m).unwrap();
            let c = -c;
            v.add_scaled(&c, &q, &self.elements[i]);
        }
        v
    }

    fn push(&mut self, v: ModVec, degree: i64) -> usize {
        let (pos, m, c) = v.leading().expect("nonzero");
        let lead = (pos, m.clone());
        let v = v.scale(&c.inv());
        self.elements.push(v);
        self.degrees.push(degree);
        self.leads.push(lead);
        self.elements.len() - 1
    }

    fn s_vector(&self, i: usize, j: usize) -> ModVec {
        let (_, mi) = &self.leads[i];
        let (_, mj) = &self.leads[j];
        let l = mi.lcm(mj);
        let qi = mi.quotient_of(&l).unwrap();
        let qj = mj.quotient_of(&l).unwrap();
        let one = self.ambient.field.one();
        let mut s = self.elements[i].mul_term(&one, &qi);
        s.add_scaled(&-&one, &qj, &self.elements[j]);
        s
    }

    fn pair_degree(&self, i: usize, j: usize) -> i64 {
        let (pos, mi) = &self.leads[i];
        let l = mi.lcm(&self.leads[j].1);
        l.degree() as i64 + self.ambient.shifts[*pos]
    }
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

pub fn buchberger(generators: &[ModVec], ambient: &FreeGradedModule) -> Result<GroebnerBasis> {
    buchberger_with(generators, ambient, BuchbergerOptions::default())
}

/// Buchberger's algorithm, processing generators and S-pairs in order of
/// increasing degree. Rejects non-homogeneous generators.
pub fn buchberger_with(
    generators: &[ModVec],
    ambient: &FreeGradedModule,
    options: BuchbergerOptions,
) -> Result<GroebnerBasis> {
    let mut queue: BTreeMap<(i64, u64), Work> = BTreeMap::new();
    let mut seq = 0u64;
    for g in generators {
        if let Some(d) = ambient.degree_of(g)? {
            queue.insert((d, seq), Work::Generator(g.clone()));
            seq += 1;
        }
    }
    let mut b = Builder {
        ambient,
        elements: Vec::new(),
        degrees: Vec::new(),
        leads: Vec::new(),
    };
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    while let Some(((degree, _), work)) = queue.pop_first() {
        let v = match work {
            Work::Generator(g) => g,
            Work::Pair(i, j) => {
                pending.remove(&(i, j));
                if options.chain_criterion {
                    let (pos, mi) = &b.leads[i];
                    let l = mi.lcm(&b.leads[j].1);
                    let redundant = (0..b.elements.len()).any(|k| {
                        k != i
                            && k != j
                            && b.leads[k].0 == *pos
                            && b.leads[k].1.divides(&l)
                            && !pending.contains(&ordered(i, k))
                            && !pending.contains(&ordered(j, k))
                    });
                    if redundant {
                        continue;
                    }
                }
                b.s_vector(i, j)
            }
        };
        let r = b.top_reduce(v);
        if r.is_zero() {
            continue;
        }
        let new = b.push(r, degree);
        for k in 0..new {
            if b.leads[k].0 == b.leads[new].0 {
                let d = b.pair_degree(k, new);
                queue.insert((d, seq), Work::Pair(k, new));
                pending.insert((k, new));
                seq += 1;
            }
        }
    }
    Ok(interreduce(b))
}

fn interreduce(b: Builder<'_>) -> GroebnerBasis {
    // drop elements whose lead is divisible by another lead
    let n = b.elements.len();
    let keep: Vec<usize> = (0..n)
        .filter(|&i| {
            !(0..n).any(|j| {
                j != i
                    && b.leads[j].0 == b.leads[i].0
                    && b.leads[j].1.divides(&b.leads[i].1)
                    && (b.leads[j].1 != b.leads[i].1 || j < i)
            })
        })
        .collect();
    let mut gb = GroebnerBasis {
        ambient: b.ambient.clone(),
        elements: keep.iter().map(|&i| b.elements[i].clone()).collect(),
        degrees: keep.iter().map(|&i| b.degrees[i]).collect(),
    };
    for i in 0..gb.elements.len() {
        let mut tail = gb.elements[i].clone();
        let (pos, m, c) = tail.pop_leading().unwrap();
        let mut reduced = gb.reduce_excluding(&tail, Some(i)).0;
        reduced.add_term_at(pos, m, &c);
        gb.elements[i] = reduced;
    }
    gb.sort();
    gb
}

impl GroebnerBasis {
    /// Basis of the zero submodule.
    pub fn empty(ambient: &FreeGradedModule) -> Self {
        GroebnerBasis {
            ambient: ambient.clone(),
            elements: Vec::new(),
            degrees: Vec::new(),
        }
    }

    pub fn ambient(&self) -> &FreeGradedModule {
        &self.ambient
    }

    pub fn elements(&self) -> &[ModVec] {
        &self.elements
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading (position, monomial) of every element.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elements
            .iter()
            .map(|e| {
                let (p, m, _) = e.leading().unwrap();
                (p, m.clone())
            })
            .collect()
    }

    fn sort(&mut self) {
        let mut idx: Vec<usize> = (0..self.elements.len()).collect();
        let leads = self.leading_terms();
        // ascending position, then descending monomial
        idx.sort_by(|&a, &b| leads[a].0.cmp(&leads[b].0).then(leads[b].1.cmp(&leads[a].1)));
        self.elements = idx.iter().map(|&i| self.elements[i].clone()).collect();
        self.degrees = idx.iter().map(|&i| self.degrees[i]).collect();
    }

    /// Full reduction; returns remainder and quotients with
    /// `v = sum q_i g_i + remainder`.
    fn reduce_excluding(&self, v: &ModVec, skip: Option<usize>) -> (ModVec, Vec<MultiPoly>) {
        let nvars = self.ambient.nvars;
        let mut quotients = vec![MultiPoly::zero(nvars); self.elements.len()];
        let mut rem = ModVec::zero(nvars, v.rank());
        let mut p = v.clone();
        let leads = self.leading_terms();
        while let Some((pos, m, c)) = p.leading() {
            let found = leads
                .iter()
                .enumerate()
                .position(|(i, (lp, lm))| Some(i) != skip && *lp == pos && lm.divides(m));
            match found {
                Some(i) => {
                    let q = leads[i].1.quotient_of(m).unwrap();
                    let c = c.clone();
                    p.add_scaled(&-&c, &q, &self.elements[i]);
                    quotients[i].add_term(q, &c);
                }
                None => {
                    let (pos, m, c) = p.pop_leading().unwrap();
                    rem.add_term_at(pos, m, &c);
                }
            }
        }
        (rem, quotients)
    }

    fn check_vector(&self, v: &ModVec) -> Result<()> {
        if v.rank() != self.ambient.rank() {
            return Err(Error::AmbientMismatch(format!(
                "vector of rank {} against basis in rank {}",
                v.rank(),
                self.ambient.rank()
            )));
        }
        Ok(())
    }

    /// Unique remainder of `v` modulo the submodule.
    pub fn normal_form(&self, v: &ModVec) -> Result<ModVec> {
        self.check_vector(v)?;
        Ok(self.reduce_excluding(v, None).0)
    }

    /// Remainder and quotients `q` with `v = sum q_i g_i + remainder`.
    pub fn reduce_with_quotients(&self, v: &ModVec) -> Result<(ModVec, Vec<MultiPoly>)> {
        self.check_vector(v)?;
        Ok(self.reduce_excluding(v, None))
    }

    pub fn contains(&self, v: &ModVec) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }
}

/// Schreyer syzygies of the basis elements: one relation per S-pair, built
/// from the standard representation of the reduced S-vector.
pub fn syzygies(gb: &GroebnerBasis) -> (FreeGradedModule, Vec<ModVec>) {
    let amb = gb.ambient();
    let free = FreeGradedModule::new(amb.field, amb.nvars, gb.degrees.clone());
    let leads = gb.leading_terms();
    let one = amb.field.one();
    let mut out = Vec::new();
    for j in 0..gb.len() {
        for i in 0..j {
            if leads[i].0 != leads[j].0 {
                continue;
            }
            let l = leads[i].1.lcm(&leads[j].1);
            let qi = leads[i].1.quotient_of(&l).unwrap();
            let qj = leads[j].1.quotient_of(&l).unwrap();
            let mut s = gb.elements[i].mul_term(&one, &qi);
            s.add_scaled(&-&one, &qj, &gb.elements[j]);
            let (rem, quotients) = gb.reduce_excluding(&s, None);
            debug_assert!(rem.is_zero(), "S-vector of a Gröbner basis reduces to zero");
            let mut coords: Vec<MultiPoly> = quotients.into_iter().map(|q| q.neg()).collect();
            coords[i].add_term(qi, &one);
            coords[j].add_term(qj, &-&one);
            out.push(ModVec::from_coords(coords));
        }
    }
    (free, out)
}

/// Generators of the module of relations `{c : sum c_i g_i = 0}` among an
/// arbitrary list of homogeneous vectors with declared degrees (so that
/// zero vectors are allowed). Computed by a Gröbner basis of the graph
/// module `{(sum c_i g_i, c)}`: with position over term and the ambient
/// coordinates first, basis elements with vanishing ambient part generate
/// the relations.
pub fn relations(
    ambient: &FreeGradedModule,
    gens: &[(ModVec, i64)],
) -> Result<(FreeGradedModule, Vec<ModVec>)> {
    let rank = ambient.rank();
    let target = FreeGradedModule::new(
        ambient.field,
        ambient.nvars,
        gens.iter().map(|(_, d)| *d).collect(),
    );
    let graph_ambient = ambient.direct_sum(&target);
    let mut graph = Vec::with_capacity(gens.len());
    for (i, (g, d)) in gens.iter().enumerate() {
        if let Some(e) = ambient.degree_of(g)? {
            if e != *d {
                return Err(Error::NonHomogeneous(format!(
                    "generator {i} has degree {e}, declared {d}"
                )));
            }
        }
        graph.push(g.concat(&target.basis_vector(i)));
    }
    let gb = buchberger(&graph, &graph_ambient)?;
    let rels = gb
        .elements()
        .iter()
        .filter(|e| e.leading().is_some_and(|(p, _, _)| p >= rank))
        .map(|e| e.slice(rank..rank + gens.len()))
        .collect();
    Ok((target, rels))
}

/// Submodule membership without keeping the basis around.
pub fn in_span(ambient: &FreeGradedModule, gens: &[ModVec], v: &ModVec) -> Result<bool> {
    buchberger(gens, ambient)?.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::parse::parse_poly;

    const F: FieldSpec = FieldSpec::Prime(32003);

    fn vecp(items: &[&str]) -> ModVec {
        ModVec::from_coords(items.iter().map(|s| parse_poly(s, F, 2).unwrap()).collect())
    }

    fn rank1() -> FreeGradedModule {
        FreeGradedModule::new(F, 2, vec![0])
    }

    #[test]
    fn monomial_generators_are_a_basis() {
        let gb = buchberger(&[vecp(&["psi"]), vecp(&["phi"])], &rank1()).unwrap();
        assert_eq!(gb.elements(), &[vecp(&["psi"]), vecp(&["phi"])]);
    }

    #[test]
    fn single_generator() {
        let gb = buchberger(&[vecp(&["2*psi*phi"])], &rank1()).unwrap();
        assert_eq!(gb.elements(), &[vecp(&["psi*phi"])]);
    }

    #[test]
    fn membership_both_ways() {
        let gens = [vecp(&["psi^2"]), vecp(&["psi*phi"])];
        let gb = buchberger(&gens, &rank1()).unwrap();
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
        let back = buchberger(gb.elements(), &rank1()).unwrap();
        assert_eq!(back, gb);
        for e in gb.elements() {
            assert!(in_span(&rank1(), &gens, e).unwrap());
        }
    }

    #[test]
    fn normal_form_leaves_irreducible_alone() {
        let gb = buchberger(&[vecp(&["psi*phi"])], &rank1()).unwrap();
        assert_eq!(gb.normal_form(&vecp(&["psi^3"])).unwrap(), vecp(&["psi^3"]));
        assert!(gb.normal_form(&vecp(&["0"])).unwrap().is_zero());
        assert!(gb.normal_form(&vecp(&["psi", "0"])).is_err());
    }

    #[test]
    fn rejects_inhomogeneous() {
        assert!(matches!(
            buchberger(&[vecp(&["psi + 1"])], &rank1()),
            Err(Error::NonHomogeneous(_))
        ));
    }

    #[test]
    fn koszul_syzygy() {
        let gb = buchberger(&[vecp(&["psi"]), vecp(&["phi"])], &rank1()).unwrap();
        let (free, syz) = syzygies(&gb);
        assert_eq!(free.shifts, vec![1, 1]);
        assert_eq!(syz.len(), 1);
        let expected = vecp(&["phi", "-psi"]);
        assert!(syz[0] == expected || syz[0] == expected.neg());
    }

    #[test]
    fn free_and_single_syzygies_vanish() {
        let single = buchberger(&[vecp(&["psi^2 - phi^2"])], &rank1()).unwrap();
        assert!(syzygies(&single).1.is_empty());
        let amb = FreeGradedModule::new(F, 2, vec![0, 0]);
        let std = buchberger(&[vecp(&["1", "0"]), vecp(&["0", "1"])], &amb).unwrap();
        assert!(syzygies(&std).1.is_empty());
    }

    #[test]
    fn chain_criterion_does_not_change_the_basis() {
        let amb = FreeGradedModule::new(F, 2, vec![0, 1]);
        let gens = [
            vecp(&["psi^2", "phi"]),
            vecp(&["psi*phi", "psi - phi"]),
            vecp(&["phi^3", "psi^2"]),
        ];
        let a = buchberger_with(&gens, &amb, BuchbergerOptions { chain_criterion: true }).unwrap();
        let b = buchberger_with(&gens, &amb, BuchbergerOptions { chain_criterion: false }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn relations_of_redundant_list() {
        // psi, phi, psi+phi: relations generated by the Koszul one and (1,1,-1)
        let gens = [
            (vecp(&["psi"]), 1),
            (vecp(&["phi"]), 1),
            (vecp(&["psi + phi"]), 1),
            (vecp(&["0"]), 3),
        ];
        let (free, rels) = relations(&rank1(), &gens).unwrap();
        assert_eq!(free.shifts, vec![1, 1, 1, 3]);
        let vecs: Vec<ModVec> = gens.iter().map(|(g, _)| g.clone()).collect();
        for r in &rels {
            let image = ModVec::combine(r.coords(), &vecs, 2, 1);
            assert!(image.is_zero());
        }
        let rel_gb = buchberger(&rels, &free).unwrap();
        assert!(rel_gb.contains(&vecp(&["1", "1", "-1", "0"])).unwrap());
        assert!(rel_gb.contains(&vecp(&["phi", "-psi", "0", "0"])).unwrap());
        assert!(rel_gb.contains(&vecp(&["0", "0", "0", "1"])).unwrap());
    }
}
