use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Coefficient, Monomial};
use crate::{Error, Result};

/// An element of the free ring `Q<x1,...,xn>`.
///
/// Terms are kept in a map ordered by the Wolf order, so iterating in reverse
/// yields the canonical (descending) term order. Zero coefficients are never
/// stored; the constant term lives under the empty monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Coefficient::one())
    }

    pub fn constant(arity: usize, c: Coefficient) -> Self {
        Self::term(arity, Monomial::one(), c)
    }

    /// `c * m`. Indices of `m` are trusted; use [`Polynomial::from_terms`] for checked input.
    pub fn term(arity: usize, m: Monomial, c: Coefficient) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(arity: usize, m: Monomial) -> Self {
        Self::term(arity, m, Coefficient::one())
    }

    pub fn var(arity: usize, index: usize) -> Result<Self> {
        if index == 0 || index > arity {
            return Err(Error::IndexOutOfRange { index, arity });
        }
        Ok(Self::monomial(arity, Monomial::var(index)))
    }

    /// Monomial built from a letter sequence, e.g. `[1, 3, 2]` for `x1*x3*x2`.
    pub fn word(arity: usize, letters: &[usize]) -> Result<Self> {
        Ok(Self::monomial(arity, Monomial::from_letters(arity, letters)?))
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Coefficient)>,
    {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            if m.max_index() > arity {
                return Err(Error::IndexOutOfRange {
                    index: m.max_index(),
                    arity,
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// The additive commutator `[i,j] = x_i x_j - x_j x_i`.
    pub fn bracket(arity: usize, i: usize, j: usize) -> Result<Self> {
        let a = Self::var(arity, i)?;
        let b = Self::var(arity, j)?;
        Ok(a.commutator(&b))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// Terms in descending Wolf order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coefficient)> + '_ {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.arity))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = Polynomial::zero(self.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Polynomial {
        self.scale(&Coefficient::from_integer(c.into()))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.arity);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Polynomial) -> Polynomial {
        &(self * other) - &(other * self)
    }

    /// Left and right multiplication by single monomials, used heavily when spanning ideals.
    pub fn sandwich(&self, left: &Monomial, right: &Monomial) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (left.mul(m).mul(right), c.clone()))
                .collect(),
        }
    }

    /// Applies an index map to every monomial; `f` must be injective on `1..=n`.
    pub(crate) fn map_indices(&self, f: impl Fn(usize) -> usize) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.map_indices(&f), c.clone())).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("arity mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("arity mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("arity mismatch in polynomial multiplication")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[n={}]({self})", self.arity)
    }
}
