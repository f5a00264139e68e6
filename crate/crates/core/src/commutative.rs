//! Polynomials in commuting variables, keyed by exponent vectors.
//!
//! Used both as the target of abelianization and as the coefficient ring of
//! the n = 3 S-form (variables sigma1, sigma2, sigma3, c^3 and the cubic orbit
//! polynomial).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Coefficient;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CommutativePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Coefficient>,
}

impl CommutativePoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Coefficient) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coefficient::one())
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Coefficient::from_integer(c.into()))
    }

    /// The variable with 0-based position `var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, Coefficient::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Coefficient {
        self.terms.get(exps).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Coefficient) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Coefficient::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Weighted degree of every term, or `None` for the zero polynomial or mixed weights.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(a, w)| a * w).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Renders with the given variable names, highest total degree first.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        Named { poly: self, names }
    }
}

struct Named<'a> {
    poly: &'a CommutativePoly,
    names: &'a [&'a str],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.poly.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, (exps, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    let name = self.names.get(v).copied().unwrap_or("?");
                    if e == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CommutativePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("t{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let text = self.display_with(&refs).to_string();
        f.write_str(&text)
    }
}

impl Add for &CommutativePoly {
    type Output = CommutativePoly;
    fn add(self, rhs: &CommutativePoly) -> CommutativePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CommutativePoly {
    type Output = CommutativePoly;
    fn sub(self, rhs: &CommutativePoly) -> CommutativePoly {
        self + &(-rhs)
    }
}

impl Neg for &CommutativePoly {
    type Output = CommutativePoly;
    fn neg(self) -> CommutativePoly {
        CommutativePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &CommutativePoly {
    type Output = CommutativePoly;
    fn mul(self, rhs: &CommutativePoly) -> CommutativePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = CommutativePoly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let a = CommutativePoly::var(2, 0);
        let b = CommutativePoly::var(2, 1);
        let s = &a + &b;
        let sq = &s * &s;
        assert_eq!(sq.coeff(&[1, 1]), Coefficient::from_integer(2.into()));
        assert_eq!(format!("{}", sq.display_with(&["a", "b"])), "a^2 + 2*a*b + b^2");
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.weighted_degree(&[1, 1]), Some(2));
        assert_eq!((&s + &CommutativePoly::one(2)).weighted_degree(&[1, 1]), None);
    }
}
