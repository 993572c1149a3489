//! Text grammar for polynomials: integer or `a/b` coefficients, variables
//! `x1..xn` (plus `psi`/`phi` when n = 2 and `t` when n = 1), operators
//! `+ - * ^` and parentheses.

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: FieldSpec,
    nvars: usize,
}

pub fn parse_poly(text: &str, field: FieldSpec, nvars: usize) -> Result<MultiPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
        nvars,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(self.field, e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                let c = self.field.from_ratio(&num, &den)?;
                Ok(MultiPoly::constant(c, self.nvars))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let var = self.resolve(name).ok_or_else(|| {
                    self.pos = start;
                    self.err(&format!("unknown variable `{name}`"))
                })?;
                Ok(MultiPoly::term(self.field.one(), Monomial::var(self.nvars, var)))
            }
            _ => Err(self.err("expected coefficient, variable or `(`")),
        }
    }

    fn resolve(&self, name: &str) -> Option<usize> {
        match (name, self.nvars) {
            ("psi", 2) => return Some(0),
            ("phi", 2) => return Some(1),
            ("t", 1) => return Some(0),
            _ => {}
        }
        let i: usize = name.strip_prefix('x')?.parse().ok()?;
        (1..=self.nvars).contains(&i).then(|| i - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: FieldSpec = FieldSpec::Prime(32003);

    #[test]
    fn parses_aliases_and_canonicalizes() {
        let p = parse_poly("3*psi^2*phi - phi^3", F, 2).unwrap();
        assert_eq!(p.to_string(), "3*psi^2*phi - phi^3");
        let q = parse_poly("-phi^3 + 3 * x1^2 * x2", F, 2).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_poly("1/2*t^2 - 3/4", FieldSpec::Rationals, 1).unwrap();
        assert_eq!(p.to_string(), "1/2*t^2 - 3/4");
        let r = parse_poly("(t - 1)^2", FieldSpec::Rationals, 1).unwrap();
        assert_eq!(r.to_string(), "t^2 - 2*t + 1");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("psi +", F, 2).is_err());
        assert!(parse_poly("x3", F, 2).is_err());
        assert!(parse_poly("phi", F, 3).is_err());
        assert!(parse_poly("1/0", FieldSpec::Rationals, 1).is_err());
        assert!(parse_poly("2 3", F, 1).is_err());
    }
}
