//! Exact arithmetic in the free ring `Q<x1,...,xn>`.

mod monomial;
mod parse;
mod polynomial;

use num_rational::BigRational;

pub use monomial::Monomial;
pub use parse::{parse_monomial, parse_poly, render_poly};
pub use polynomial::Polynomial;

/// Exact rational coefficient, always in lowest terms with a positive denominator.
pub type Coefficient = BigRational;

use crate::Result;

pub fn monomial_normalize(n: usize, letters: &[usize]) -> Result<Monomial> {
    Monomial::from_letters(n, letters)
}

/// Every word of length `d` over `x1..xn`, in descending Wolf order.
pub fn enumerate_basis_words(n: usize, d: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..n.pow(d))
        .map(|code| Monomial::from_letters_unchecked(&decode_word(n, d, code)))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Letters of the word whose base-`n` code (most significant letter first) is `code`.
pub(crate) fn decode_word(n: usize, d: u32, mut code: usize) -> Vec<usize> {
    let mut letters = vec![0; d as usize];
    for slot in letters.iter_mut().rev() {
        *slot = code % n + 1;
        code /= n;
    }
    letters
}

/// Inverse of [`decode_word`] over the expansion of a monomial.
pub(crate) fn encode_word(n: usize, m: &Monomial) -> usize {
    let mut code = 0usize;
    for (index, exp) in m.runs() {
        for _ in 0..exp {
            code = code * n + (index - 1);
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_words_are_sorted_and_complete() {
        let b = enumerate_basis_words(3, 1);
        assert_eq!(b.iter().map(|m| m.to_string()).collect::<Vec<_>>(), ["x1", "x2", "x3"]);
        let b = enumerate_basis_words(2, 2);
        assert_eq!(
            b.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            ["x1^2", "x2^2", "x1*x2", "x2*x1"]
        );
        let cubes = enumerate_basis_words(3, 3);
        assert_eq!(cubes.len(), 27);
        assert_eq!(cubes.iter().filter(|m| m.exponents() != [3]).count(), 24);
        assert!(cubes.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn word_codes_round_trip() {
        for code in 0..81 {
            let letters = decode_word(3, 4, code);
            let m = Monomial::from_letters(3, &letters).unwrap();
            assert_eq!(encode_word(3, &m), code);
        }
    }
}
