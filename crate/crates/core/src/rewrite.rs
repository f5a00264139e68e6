//! Invariants of the circular group as noncommutative polynomials in orbit
//! polynomials of atoms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::atoms::{factor_atoms, is_atom};
use crate::cyclic::{is_invariant, orbit_polynomial, orbit_sum};
use crate::freering::{Coefficient, Monomial, Polynomial};
use crate::ideal::WordBasis;
use crate::linalg;
use crate::sigma::build_sigma;
use crate::{Error, Result};

/// `p = sum c * orbit_polynomial(u)` over distinct `u` in `Q0`, largest first.
/// A constant term is reported against the empty monomial.
pub fn orbit_decompose(p: &Polynomial) -> Result<Vec<(Coefficient, Monomial)>> {
    if !is_invariant(p) {
        return Err(Error::NotInvariant);
    }
    Ok(p.terms()
        .filter(|(m, _)| m.first_index().is_none_or(|i| i == 1))
        .map(|(m, c)| (c.clone(), m.clone()))
        .collect())
}

/// A noncommutative polynomial in formal symbols `A[a]`, one per atom `a`.
/// Keys are words of atoms; the empty word is the constant term.
#[derive(Clone, PartialEq, Eq)]
pub struct AtomExpression {
    n: usize,
    terms: BTreeMap<Vec<Monomial>, Coefficient>,
}

impl AtomExpression {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[Monomial]) -> Coefficient {
        self.terms.get(word).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// Adds `c * A[word_1] ... A[word_k]`; every letter must be an atom.
    pub fn add_term(&mut self, word: Vec<Monomial>, c: Coefficient) -> Result<()> {
        for a in &word {
            if !is_atom(a)? {
                return Err(Error::NotInQ0(a.to_string()));
            }
            if a.max_index() > self.n {
                return Err(Error::IndexOutOfRange {
                    index: a.max_index(),
                    arity: self.n,
                });
            }
        }
        let slot = self.terms.entry(word.clone()).or_insert_with(Coefficient::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&word);
        }
        Ok(())
    }

    fn word_degree(word: &[Monomial]) -> u32 {
        word.iter().map(Monomial::degree).sum()
    }
}

fn render_word(word: &[Monomial]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i + 1;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let sym = format!("A[{}]", word[i]);
        parts.push(if j - i > 1 { format!("{sym}^{}", j - i) } else { sym });
        i = j;
    }
    parts.join("*")
}

impl fmt::Display for AtomExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            Self::word_degree(b)
                .cmp(&Self::word_degree(a))
                .then_with(|| a.len().cmp(&b.len()).reverse())
                .then_with(|| b.cmp(a))
        });
        for (k, (word, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if word.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&render_word(word))?;
            } else {
                write!(f, "{abs}*{}", render_word(word))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AtomExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn product_of_orbits(n: usize, word: &[Monomial]) -> Polynomial {
    word.iter().fold(Polynomial::one(n), |acc, a| {
        &acc * &orbit_polynomial(n, a).expect("atoms are nonempty and in range")
    })
}

/// Greedy rewriting on the Wolf-leading monomial.
pub fn rewrite_invariant(p: &Polynomial) -> Result<AtomExpression> {
    if !is_invariant(p) {
        return Err(Error::NotInvariant);
    }
    let n = p.arity();
    let mut out = AtomExpression::zero(n);
    let mut rest = p.clone();
    let mut previous: Option<Monomial> = None;
    while let Some((lead, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        if let Some(prev) = &previous {
            assert!(lead < *prev, "rewrite did not descend: {lead} after {prev}");
        }
        let word: Vec<Monomial> = if lead.is_one() {
            Vec::new()
        } else {
            factor_atoms(n, &lead)?.factors().to_vec()
        };
        rest = &rest - &product_of_orbits(n, &word).scale(&c);
        out.add_term(word, c)?;
        previous = Some(lead);
    }
    Ok(out)
}

/// Substitutes `orbit_polynomial(a)` for each `A[a]` and multiplies in order.
pub fn eval_atom_expr(e: &AtomExpression) -> Polynomial {
    let mut out = Polynomial::zero(e.n);
    for (word, c) in &e.terms {
        out = &out + &product_of_orbits(e.n, word).scale(c);
    }
    out
}

/// Whether the evaluated terms of each total degree are linearly independent in the free ring.
pub fn terms_independent(e: &AtomExpression) -> bool {
    let mut by_degree: BTreeMap<u32, Vec<&Vec<Monomial>>> = BTreeMap::new();
    for word in e.terms.keys() {
        by_degree
            .entry(AtomExpression::word_degree(word))
            .or_default()
            .push(word);
    }
    by_degree.into_iter().all(|(d, words)| {
        let basis = WordBasis::new(e.n, d);
        let rows = words.iter().map(|w| basis.to_row(&product_of_orbits(e.n, w)));
        linalg::rank(basis.len(), rows) == words.len()
    })
}

/// `n * sigma_k = sum alpha_j * orbit_polynomial(a_j)` with atoms `a_j` of increasing complexion.
pub fn sigma_alpha_decomposition(n: usize, k: usize) -> Result<Vec<(u64, Monomial)>> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            detail: format!("{k} not in 1..={n}"),
        });
    }
    let total = orbit_sum(&build_sigma(n, k as i64));
    let parts = orbit_decompose(&total)?;
    Ok(parts
        .into_iter()
        .map(|(c, m)| {
            let alpha = c
                .to_integer()
                .to_u64()
                .filter(|_| c.is_integer())
                .expect("orbit counts are nonnegative integers");
            (alpha, m)
        })
        .collect())
}
