//! Orbit-maximal monomials, the semigroup product on them, and atom factorization.
//!
//! `Q0` is the set of monomials beginning with `x1`. Under `u . v = u * v^g`,
//! where `g` sends `x1` to the last letter of `u`, `Q0 + {1}` is a free
//! semigroup whose free generators (atoms) are the `Q0` monomials with every
//! exponent equal to 1.

use std::cmp::Ordering;
use std::fmt;

use crate::cyclic::{orbit, CircularPermutation};
use crate::freering::Monomial;
use crate::{Error, Result};

pub fn wolf_compare(u: &Monomial, v: &Monomial) -> Ordering {
    u.wolf_cmp(v)
}

/// The Wolf-largest element of the orbit of `u`: the image starting with `x1`.
pub fn orbit_max(n: usize, u: &Monomial) -> Result<Monomial> {
    let images = orbit(n, u)?;
    let first = u.first_index().expect("orbit rejects the empty monomial");
    let best = CircularPermutation::sending(n, first, 1).act_monomial(u);
    debug_assert_eq!(images.iter().max(), Some(&best));
    Ok(best)
}

pub fn is_in_q0(u: &Monomial) -> Result<bool> {
    u.first_index().map(|i| i == 1).ok_or(Error::EmptyMonomial)
}

fn require_q0(u: &Monomial) -> Result<()> {
    match u.first_index() {
        None | Some(1) => Ok(()),
        Some(_) => Err(Error::NotInQ0(u.to_string())),
    }
}

/// `u . v`; `1` is the unit. Both operands must be `1` or lie in `Q0`.
pub fn semigroup_mul(n: usize, u: &Monomial, v: &Monomial) -> Result<Monomial> {
    require_q0(u)?;
    require_q0(v)?;
    for w in [u, v] {
        if w.max_index() > n {
            return Err(Error::IndexOutOfRange {
                index: w.max_index(),
                arity: n,
            });
        }
    }
    let Some(last) = u.last_index() else {
        return Ok(v.clone());
    };
    Ok(u.mul(&CircularPermutation::sending(n, 1, last).act_monomial(v)))
}

pub fn is_atom(u: &Monomial) -> Result<bool> {
    if u.is_one() {
        return Err(Error::EmptyMonomial);
    }
    require_q0(u)?;
    Ok(u.exponents().iter().all(|&e| e == 1))
}

/// All `(n-1)^(d-1)` atoms of degree `d`, in decreasing Wolf order.
pub fn enumerate_atoms(n: usize, d: u32) -> Vec<Monomial> {
    if d == 0 || n == 0 {
        return Vec::new();
    }
    let mut words: Vec<Vec<usize>> = vec![vec![1]];
    for _ in 1..d {
        words = words
            .into_iter()
            .flat_map(|w| {
                let last = *w.last().expect("nonempty");
                (1..=n).filter(move |&i| i != last).map(move |i| {
                    let mut next = w.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    let mut atoms: Vec<Monomial> = words.iter().map(|w| Monomial::from_letters_unchecked(w)).collect();
    atoms.sort_by(|a, b| b.cmp(a));
    atoms
}

/// A factorization of a `Q0` monomial into atoms under the semigroup product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomWord {
    factors: Vec<Monomial>,
}

impl AtomWord {
    pub fn factors(&self) -> &[Monomial] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Semigroup product of the factors; the inverse of [`factor_atoms`].
    pub fn fold(&self, n: usize) -> Result<Monomial> {
        fold_atoms(n, &self.factors)
    }
}

impl fmt::Display for AtomWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|a| format!("({a})")).collect();
        f.write_str(&parts.join("."))
    }
}

pub fn fold_atoms(n: usize, factors: &[Monomial]) -> Result<Monomial> {
    factors
        .iter()
        .try_fold(Monomial::one(), |acc, a| semigroup_mul(n, &acc, a))
}

pub fn factor_atoms(n: usize, u: &Monomial) -> Result<AtomWord> {
    if u.is_one() {
        return Err(Error::EmptyMonomial);
    }
    require_q0(u)?;
    if u.max_index() > n {
        return Err(Error::IndexOutOfRange {
            index: u.max_index(),
            arity: n,
        });
    }
    let letters = u.letters();
    let mut factors = Vec::new();
    let mut start = 0;
    for k in 1..=letters.len() {
        if k == letters.len() || letters[k] == letters[k - 1] {
            let segment = &letters[start..k];
            let g = CircularPermutation::sending(n, segment[0], 1);
            let shifted: Vec<usize> = segment.iter().map(|&i| g.apply_index(i)).collect();
            factors.push(Monomial::from_letters_unchecked(&shifted));
            start = k;
        }
    }
    Ok(AtomWord { factors })
}
