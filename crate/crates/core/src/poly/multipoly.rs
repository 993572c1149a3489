use std::collections::BTreeMap;
use std::fmt;

use super::monomial::Monomial;
use crate::field::{FieldSpec, Scalar};

/// Sparse multivariate polynomial. Terms are keyed by monomial in grevlex
/// order, so the leading term is the last entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    /// The variable `x_var` (0-based) with coefficient one.
    pub fn var(field: FieldSpec, nvars: usize, var: usize) -> Self {
        Self::term(field.one(), Monomial::var(nvars, var))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Total degree when all terms share it, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn pop_leading(&mut self) -> Option<(Monomial, Scalar)> {
        self.terms.pop_last()
    }

    /// `self += c * m * other`
    pub fn add_scaled(&mut self, c: &Scalar, m: &Monomial, other: &MultiPoly) {
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), &(c * oc));
        }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(om, a)| (m.mul(om), a * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_scaled(c, m, rhs);
        }
        out
    }

    pub fn pow(&self, field: FieldSpec, k: u32) -> MultiPoly {
        let mut acc = Self::constant(field.one(), self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute each variable by a polynomial in `target_nvars` variables.
    pub fn substitute(&self, images: &[MultiPoly], target_nvars: usize) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let mut out = MultiPoly::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone(), target_nvars);
            for (v, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&images[v]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Canonical text form, terms in descending monomial order.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = c.sign_split();
            match (i == 0, neg) {
                (true, true) => s.push('-'),
                (true, false) => {}
                (false, true) => s.push_str(" - "),
                (false, false) => s.push_str(" + "),
            }
            let factors: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { names[v].clone() } else { format!("{}^{}", names[v], e) })
                .collect();
            if factors.is_empty() {
                s.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

/// Default variable names: `t` for one variable, `psi`/`phi` for two,
/// `x1..xn` otherwise.
pub fn variable_names(nvars: usize) -> Vec<String> {
    match nvars {
        1 => vec!["t".into()],
        2 => vec!["psi".into(), "phi".into()],
        n => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&variable_names(self.nvars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: FieldSpec = FieldSpec::Prime(32003);

    #[test]
    fn arithmetic_and_cancellation() {
        let x = MultiPoly::var(F, 2, 0);
        let y = MultiPoly::var(F, 2, 1);
        let a = x.add(&y);
        let b = x.sub(&y);
        let prod = a.mul(&b);
        assert_eq!(prod, x.mul(&x).sub(&y.mul(&y)));
        assert!(a.sub(&a).is_zero());
        assert_eq!(prod.homogeneous_degree(), Some(2));
    }

    #[test]
    fn canonical_text() {
        let x = MultiPoly::var(F, 2, 0);
        let y = MultiPoly::var(F, 2, 1);
        let p = x.mul(&x).mul(&y).scale(&F.from_i64(3)).sub(&y.pow(F, 3));
        assert_eq!(p.to_string(), "3*psi^2*phi - phi^3");
    }
}
