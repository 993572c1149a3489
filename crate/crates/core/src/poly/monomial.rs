use std::cmp::Ordering;

/// Exponent vector. Ordered by graded reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The variable `x_var` (0-based).
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var] = 1;
        m
    }

    pub fn var_pow(nvars: usize, var: usize, k: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var] = k;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&rhs.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, rhs: &Monomial) -> bool {
        self.exps.iter().zip(&rhs.exps).all(|(a, b)| a <= b)
    }

    /// `rhs / self`, when `self` divides `rhs`.
    pub fn quotient_of(&self, rhs: &Monomial) -> Option<Monomial> {
        self.divides(rhs).then(|| Monomial {
            exps: rhs.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&rhs.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, rhs: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&rhs.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// All monomials of total degree `d` in `nvars` variables, in descending
    /// grevlex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == nvars {
                prefix.push(left);
                out.push(Monomial::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=left {
                prefix.push(e);
                rec(nvars, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(nvars, d, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    // smaller exponent in the last differing variable is larger
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
