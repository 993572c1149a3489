use super::groebner::GroebnerBasis;
use super::monomial::Monomial;
use crate::k0::KPolynomial;

/// Hilbert numerator of `ambient / submodule`, read off the leading-term
/// module coordinate by coordinate.
pub fn hilbert_numerator(gb: &GroebnerBasis) -> KPolynomial {
    let amb = gb.ambient();
    let leads = gb.leading_terms();
    let mut total = KPolynomial::zero();
    for (j, &shift) in amb.shifts.iter().enumerate() {
        let ideal: Vec<Monomial> = leads
            .iter()
            .filter(|(p, _)| *p == j)
            .map(|(_, m)| m.clone())
            .collect();
        total = total.add(&monomial_quotient_numerator(ideal).shift(shift));
    }
    total
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        // ascending order: a divisor always comes first
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `k[x] / (gens)` for a monomial ideal,
/// by the recursion `N(I + (m)) = N(I) - q^deg(m) N(I : m)`.
pub fn monomial_quotient_numerator(gens: Vec<Monomial>) -> KPolynomial {
    let mut gens = minimize(gens);
    if gens.is_empty() {
        return KPolynomial::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return KPolynomial::zero();
    }
    let last = gens.pop().unwrap();
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.gcd(&last).quotient_of(g).unwrap())
        .collect();
    let rest = monomial_quotient_numerator(gens);
    rest.sub(&monomial_quotient_numerator(colon).shift(last.degree() as i64))
}
