//! The cyclic group generated by `(1 2 ... n)` acting on the free ring.
//!
//! `g(1)` maps `x_i` to `x_{i+1}` (indices mod n, so `x_n -> x_1`). The action
//! touches complexions only; exponent sequences are unchanged.

use num_traits::Zero;

use crate::freering::{Coefficient, Monomial, Polynomial};
use crate::{Error, Result};

/// The group element `g(power)` for arity `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CircularPermutation {
    power: usize,
    arity: usize,
}

impl CircularPermutation {
    pub fn new(arity: usize, power: usize) -> Self {
        assert!(arity > 0, "arity must be positive");
        Self {
            power: power % arity,
            arity,
        }
    }

    pub fn identity(arity: usize) -> Self {
        Self::new(arity, 0)
    }

    pub fn generator(arity: usize) -> Self {
        Self::new(arity, 1)
    }

    /// All `n` group elements `g(0), ..., g(n-1)`.
    pub fn all(arity: usize) -> impl Iterator<Item = Self> {
        (0..arity).map(move |p| Self::new(arity, p))
    }

    /// The unique element sending index `from` to index `to`.
    pub fn sending(arity: usize, from: usize, to: usize) -> Self {
        Self::new(arity, (to + arity - from) % arity)
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        Self::new(self.arity, self.power + other.power)
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.arity, self.arity - self.power)
    }

    pub fn apply_index(&self, i: usize) -> usize {
        (i - 1 + self.power) % self.arity + 1
    }

    pub fn act_monomial(&self, u: &Monomial) -> Monomial {
        if self.power == 0 {
            return u.clone();
        }
        u.map_indices(|i| self.apply_index(i))
    }
}

pub fn act(g: &CircularPermutation, p: &Polynomial) -> Result<Polynomial> {
    if g.arity != p.arity() {
        return Err(Error::ArityMismatch {
            left: g.arity,
            right: p.arity(),
        });
    }
    Ok(p.map_indices(|i| g.apply_index(i)))
}

/// `p` under `g(power)`; panics only on a programming error (arity is taken from `p`).
pub fn shift(p: &Polynomial, power: usize) -> Polynomial {
    act(&CircularPermutation::new(p.arity(), power), p).expect("arity taken from p")
}

/// The `n` images `u^{g(0)}, ..., u^{g(n-1)}`.
pub fn orbit(n: usize, u: &Monomial) -> Result<Vec<Monomial>> {
    if u.is_one() {
        return Err(Error::EmptyMonomial);
    }
    check_indices(n, u)?;
    Ok(CircularPermutation::all(n).map(|g| g.act_monomial(u)).collect())
}

pub fn orbit_polynomial(n: usize, u: &Monomial) -> Result<Polynomial> {
    let mut p = Polynomial::zero(n);
    for m in orbit(n, u)? {
        p.add_term(m, Coefficient::from_integer(1.into()));
    }
    Ok(p)
}

/// Invariance under the generator is invariance under the whole group.
pub fn is_invariant(p: &Polynomial) -> bool {
    shift(p, 1) == *p
}

/// The Reynolds projection `(1/n) * sum_g p^g`.
pub fn average(p: &Polynomial) -> Polynomial {
    let n = p.arity();
    orbit_sum(p).scale(&Coefficient::new(1.into(), n.into()))
}

/// `sum_g p^g` without the `1/n` factor.
pub fn orbit_sum(p: &Polynomial) -> Polynomial {
    let n = p.arity();
    let mut out = Polynomial::zero(n);
    for power in 0..n {
        for (m, c) in shift(p, power).terms() {
            if !c.is_zero() {
                out.add_term(m.clone(), c.clone());
            }
        }
    }
    out
}

fn check_indices(n: usize, u: &Monomial) -> Result<()> {
    if u.max_index() > n {
        return Err(Error::IndexOutOfRange {
            index: u.max_index(),
            arity: n,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freering::parse_poly;
    use crate::sigma::build_sigma;

    fn p3(s: &str) -> Polynomial {
        parse_poly(s, 3).unwrap()
    }

    #[test]
    fn generator_shifts_indices() {
        let g = CircularPermutation::generator(3);
        assert_eq!(act(&g, &p3("x1*x2")).unwrap(), p3("x2*x3"));
        assert_eq!(act(&g, &p3("x1*x2*x3")).unwrap(), p3("x2*x3*x1"));
        let p = p3("x1^2*x3 - 2*x2");
        assert_eq!(act(&CircularPermutation::identity(3), &p).unwrap(), p);
        assert!(act(&g, &parse_poly("x1", 4).unwrap()).is_err());
    }

    #[test]
    fn orbits() {
        let names = |v: Vec<Monomial>| v.iter().map(|m| m.to_string()).collect::<Vec<_>>();
        assert_eq!(names(orbit(3, &Monomial::var(1)).unwrap()), ["x1", "x2", "x3"]);
        assert_eq!(
            names(orbit(3, &Monomial::from_letters(3, &[1, 2]).unwrap()).unwrap()),
            ["x1*x2", "x2*x3", "x3*x1"]
        );
        let u = Monomial::from_letters(4, &[1, 3]).unwrap();
        let o = orbit(4, &u).unwrap();
        assert_eq!(o.len(), 4);
        assert!(o.iter().enumerate().all(|(i, a)| o[i + 1..].iter().all(|b| a != b)));
        assert_eq!(orbit(3, &Monomial::one()), Err(Error::EmptyMonomial));
    }

    #[test]
    fn orbit_polynomials() {
        let op = |l: &[usize]| orbit_polynomial(3, &Monomial::from_letters(3, l).unwrap()).unwrap();
        assert_eq!(op(&[1, 2]), p3("x1*x2 + x2*x3 + x3*x1"));
        assert_eq!(op(&[1, 1]), p3("x1^2 + x2^2 + x3^2"));
        assert_eq!(op(&[1, 2, 1]), p3("x1*x2*x1 + x2*x3*x2 + x3*x1*x3"));
    }

    #[test]
    fn invariance_and_average() {
        assert!(!is_invariant(&build_sigma(3, 2)));
        assert!(is_invariant(&p3("x1*x2 + x2*x3 + x3*x1")));
        assert!(!is_invariant(&p3("x1")));
        assert_eq!(average(&p3("x1")), p3("1/3*x1 + 1/3*x2 + 1/3*x3"));
        let inv = p3("x1^2 + x2^2 + x3^2 + 5");
        assert_eq!(average(&inv), inv);
        let expected = &p3("x1*x2 + x2*x3 + x3*x1") - &p3("x1*x3 + x2*x1 + x3*x2");
        assert_eq!(
            average(&p3("x1*x2 - x2*x1")),
            expected.scale(&Coefficient::new(1.into(), 3.into()))
        );
    }

    #[test]
    fn group_structure() {
        let g = CircularPermutation::new(5, 3);
        assert_eq!(g.compose(&g.inverse()), CircularPermutation::identity(5));
        assert_eq!(CircularPermutation::sending(3, 2, 1).apply_index(2), 1);
        assert_eq!(CircularPermutation::sending(3, 2, 1).apply_index(1), 3);
    }
}
