use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// A word in the free monoid on `x1, ..., xn`, stored run-length encoded.
///
/// `complexion[p]` is the subscript of the `p`-th run and `exponents[p]` its
/// length. Adjacent complexion entries always differ, so every word has exactly
/// one representation. The empty monomial is the unit `1`.
///
/// The `Ord` implementation is the Wolf order: degree first, then (for equal
/// exponent sequences) lexicographic complexions where the smaller subscript is
/// the larger monomial, otherwise the first larger exponent wins.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    complexion: Vec<usize>,
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `x_index`, unchecked against any arity.
    pub fn var(index: usize) -> Self {
        Self::power(index, 1)
    }

    pub fn power(index: usize, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self {
            complexion: vec![index],
            exponents: vec![exp],
            degree: exp,
        }
    }

    /// Run-length normalizes a letter sequence, checking every letter is in `1..=n`.
    pub fn from_letters(n: usize, letters: &[usize]) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > n) {
            return Err(Error::IndexOutOfRange { index: bad, arity: n });
        }
        Ok(Self::from_letters_unchecked(letters))
    }

    pub(crate) fn from_letters_unchecked(letters: &[usize]) -> Self {
        let mut m = Self::one();
        for &l in letters {
            m.push_run(l, 1);
        }
        m
    }

    /// Builds from runs, merging equal neighbours and skipping zero exponents.
    pub fn from_runs<I: IntoIterator<Item = (usize, u32)>>(runs: I) -> Self {
        let mut m = Self::one();
        for (index, exp) in runs {
            m.push_run(index, exp);
        }
        m
    }

    fn push_run(&mut self, index: usize, exp: u32) {
        if exp == 0 {
            return;
        }
        self.degree += exp;
        match self.complexion.last() {
            Some(&last) if last == index => *self.exponents.last_mut().unwrap() += exp,
            _ => {
                self.complexion.push(index);
                self.exponents.push(exp);
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.complexion.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of runs.
    pub fn len(&self) -> usize {
        self.complexion.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complexion.is_empty()
    }

    pub fn complexion(&self) -> &[usize] {
        &self.complexion
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn runs(&self) -> impl DoubleEndedIterator<Item = (usize, u32)> + ExactSizeIterator + '_ {
        self.complexion.iter().copied().zip(self.exponents.iter().copied())
    }

    /// Expansion view: each unit of each exponent as its own letter.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree as usize);
        for (index, exp) in self.runs() {
            out.extend(std::iter::repeat_n(index, exp as usize));
        }
        out
    }

    pub fn first_index(&self) -> Option<usize> {
        self.complexion.first().copied()
    }

    pub fn last_index(&self) -> Option<usize> {
        self.complexion.last().copied()
    }

    pub fn max_index(&self) -> usize {
        self.complexion.iter().copied().max().unwrap_or(0)
    }

    /// Concatenation in the free monoid, merging the boundary run.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (index, exp) in other.runs() {
            out.push_run(index, exp);
        }
        out
    }

    /// Replaces every subscript `i` by `f(i)`. `f` must keep adjacent runs distinct,
    /// which holds for any injective map.
    pub(crate) fn map_indices(&self, f: impl Fn(usize) -> usize) -> Monomial {
        Monomial {
            complexion: self.complexion.iter().map(|&i| f(i)).collect(),
            exponents: self.exponents.clone(),
            degree: self.degree,
        }
    }

    /// Wolf order comparison.
    pub fn wolf_cmp(&self, other: &Monomial) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            if self.exponents == other.exponents {
                other.complexion.cmp(&self.complexion)
            } else {
                // Equal degree rules out one sequence being a proper prefix of the other.
                self.exponents.cmp(&other.exponents)
            }
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.wolf_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (p, (index, exp)) in self.runs().enumerate() {
            if p > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{index}")?;
            if exp > 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[usize]) -> Monomial {
        Monomial::from_letters(4, letters).unwrap()
    }

    #[test]
    fn normalize_merges_runs() {
        let m = word(&[1, 1, 2]);
        assert_eq!(m.complexion(), &[1, 2]);
        assert_eq!(m.exponents(), &[2, 1]);
        assert_eq!(m.to_string(), "x1^2*x2");
        assert!(word(&[]).is_one());
        assert_eq!(word(&[1, 3, 3, 3, 3, 1, 1, 2]).to_string(), "x1*x3^4*x1^2*x2");
        assert_eq!(word(&[1, 3, 3, 3, 3, 1, 1, 2]).degree(), 8);
    }

    #[test]
    fn normalize_rejects_bad_index() {
        assert_eq!(
            Monomial::from_letters(3, &[1, 4]),
            Err(Error::IndexOutOfRange { index: 4, arity: 3 })
        );
        assert!(Monomial::from_letters(3, &[0]).is_err());
    }

    #[test]
    fn concatenation_merges_boundary() {
        assert_eq!(word(&[1]).mul(&word(&[1, 2])), word(&[1, 1, 2]));
        assert_eq!(word(&[1, 2]).mul(&word(&[3])), word(&[1, 2, 3]));
        let lhs = Monomial::from_runs([(1, 1), (3, 3)]);
        let rhs = Monomial::from_runs([(3, 1), (1, 2), (2, 1)]);
        assert_eq!(lhs.mul(&rhs).to_string(), "x1*x3^4*x1^2*x2");
    }

    #[test]
    fn wolf_order_examples() {
        let a = Monomial::from_runs([(1, 1), (2, 2), (3, 1)]);
        let b = Monomial::from_runs([(1, 1), (2, 2), (4, 1)]);
        assert_eq!(a.cmp(&b), Ordering::Greater);
        let c = Monomial::from_runs([(1, 1), (4, 2)]);
        let d = word(&[1, 2, 3]);
        assert_eq!(c.cmp(&d), Ordering::Greater);
        assert_eq!(d.cmp(&d.clone()), Ordering::Equal);
        assert!(word(&[1, 1]) > word(&[4]));
        assert!(Monomial::one() < word(&[4]));
    }
}
