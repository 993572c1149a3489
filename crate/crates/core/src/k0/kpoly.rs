use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Laurent polynomial in `q` with integer coefficients. Used as the class of
/// a graded module: the numerator `N(q)` of its Hilbert series
/// `N(q) / (1 - q)^n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KPolynomial {
    coeffs: BTreeMap<i64, i64>,
}

impl KPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^k`
    pub fn monomial(c: i64, k: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    /// `1 - q`
    pub fn one_minus_q() -> Self {
        Self::from_coeffs(&[(0, 1), (1, -1)])
    }

    pub fn from_coeffs(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, k: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &KPolynomial) -> KPolynomial {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c);
        }
        out
    }

    pub fn sub(&self, rhs: &KPolynomial) -> KPolynomial {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> KPolynomial {
        let mut out = Self::zero();
        for (k, a) in self.terms() {
            out.add_term(k, a * c);
        }
        out
    }

    pub fn mul(&self, rhs: &KPolynomial) -> KPolynomial {
        let mut out = Self::zero();
        for (k, a) in self.terms() {
            for (l, b) in rhs.terms() {
                out.add_term(k + l, a * b);
            }
        }
        out
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> KPolynomial {
        KPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Divisibility by `(1 - q)` in `Z[q, 1/q]`, i.e. vanishing at `q = 1`.
    pub fn divisible_by_one_minus_q(&self) -> bool {
        self.eval_at_one() == 0
    }

    /// Coefficients of `self / (1 - q)^n` for degrees `0..=up_to`, as a power
    /// series. Terms of negative degree are ignored.
    pub fn series_coefficients(&self, nvars: usize, up_to: usize) -> Vec<i64> {
        // coefficient of q^m in 1/(1-q)^n is C(m + n - 1, n - 1)
        let binom = |m: i64| -> i64 {
            if m < 0 {
                return 0;
            }
            if nvars == 0 {
                return i64::from(m == 0);
            }
            let (top, k) = (m + nvars as i64 - 1, nvars as i64 - 1);
            let mut acc: i64 = 1;
            for i in 0..k {
                acc = acc * (top - i) / (i + 1);
            }
            acc
        };
        (0..=up_to as i64)
            .map(|m| self.terms().map(|(k, c)| c * binom(m - k)).sum())
            .collect()
    }
}

impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i == 0, c < 0) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
