//! The noncommutative elementary polynomials and the identities around them.

use num_traits::{One, Zero};

use crate::commutative::CommutativePoly;
use crate::freering::{Coefficient, Monomial, Polynomial};
use crate::linalg::Echelon;

/// `sigma_k(x_{letters[0]}, ..., x_{letters[m-1]})`: the sum of all words picking `k`
/// letters in the given order. `letters` may be any ordered list of distinct indices.
pub fn sigma_on(n: usize, letters: &[usize], k: i64) -> Polynomial {
    if k == 0 {
        return Polynomial::one(n);
    }
    if k < 0 || k as usize > letters.len() {
        return Polynomial::zero(n);
    }
    let k = k as usize;
    let mut out = Polynomial::zero(n);
    let mut chosen = Vec::with_capacity(k);
    fn walk(letters: &[usize], start: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Polynomial) {
        if chosen.len() == k {
            out.add_term(Monomial::from_letters_unchecked(chosen), Coefficient::one());
            return;
        }
        let remaining = k - chosen.len();
        for p in start..=letters.len() - remaining {
            chosen.push(letters[p]);
            walk(letters, p + 1, k, chosen, out);
            chosen.pop();
        }
    }
    walk(letters, 0, k, &mut chosen, &mut out);
    out
}

/// `sigma_k(x1, ..., xn)`; `1` for `k = 0`, `0` for `k < 0` or `k > n`.
pub fn build_sigma(n: usize, k: i64) -> Polynomial {
    let letters: Vec<usize> = (1..=n).collect();
    sigma_on(n, &letters, k)
}

/// Recursion peeling the first letter:
/// `sigma_k(l1..lm) = x_{l1} sigma_{k-1}(l2..lm) + sigma_k(l2..lm)`.
pub fn sigma_recursive_first(n: usize, letters: &[usize], k: i64) -> Polynomial {
    if k == 0 {
        return Polynomial::one(n);
    }
    if k < 0 || k as usize > letters.len() {
        return Polynomial::zero(n);
    }
    let head = Polynomial::monomial(n, Monomial::var(letters[0]));
    let rest = &letters[1..];
    &(&head * &sigma_recursive_first(n, rest, k - 1)) + &sigma_recursive_first(n, rest, k)
}

/// Recursion peeling the last letter:
/// `sigma_k(l1..lm) = sigma_{k-1}(l1..l_{m-1}) x_{lm} + sigma_k(l1..l_{m-1})`.
pub fn sigma_recursive_last(n: usize, letters: &[usize], k: i64) -> Polynomial {
    if k == 0 {
        return Polynomial::one(n);
    }
    if k < 0 || k as usize > letters.len() {
        return Polynomial::zero(n);
    }
    let (&tail, rest) = letters.split_last().expect("non-empty");
    let tail = Polynomial::monomial(n, Monomial::var(tail));
    &(&sigma_recursive_last(n, rest, k - 1) * &tail) + &sigma_recursive_last(n, rest, k)
}

pub fn sigma_via_recursion_i(n: usize, k: i64) -> Polynomial {
    let letters: Vec<usize> = (1..=n).collect();
    sigma_recursive_first(n, &letters, k)
}

pub fn sigma_via_recursion_ii(n: usize, k: i64) -> Polynomial {
    let letters: Vec<usize> = (1..=n).collect();
    sigma_recursive_last(n, &letters, k)
}

/// The ring map to `Q[x1..xn]` sending every word to its content.
pub fn abelianize(p: &Polynomial) -> CommutativePoly {
    let n = p.arity();
    let mut out = CommutativePoly::zero(n);
    for (m, c) in p.terms() {
        let mut exps = vec![0u32; n];
        for (i, e) in m.runs() {
            exps[i - 1] += e;
        }
        out.add_term(exps, c.clone());
    }
    out
}

fn sign(k: usize) -> Coefficient {
    if k.is_multiple_of(2) {
        Coefficient::one()
    } else {
        -Coefficient::one()
    }
}

/// `f(x_i) = sum_k (-1)^k sigma_k x_i^{n-k}`, the characteristic polynomial
/// evaluated at `x_i` with the sigma factors on the left.
pub fn char_poly_image(n: usize, i: usize) -> Polynomial {
    let x = Polynomial::monomial(n, Monomial::var(i));
    let mut out = Polynomial::zero(n);
    for k in 0..=n {
        let term = &build_sigma(n, k as i64) * &x.pow((n - k) as u32);
        out = &out + &term.scale(&sign(k));
    }
    out
}

/// Coefficients (by power of a central `y`) of `(y - x_{order[0]}) ... (y - x_{order[n-1]})`.
/// Entry `k` is the coefficient of `y^{n-k}`.
pub fn linear_factor_product(n: usize, order: &[usize]) -> Vec<Polynomial> {
    // coeffs[j] = coefficient of y^j in the running product
    let mut coeffs = vec![Polynomial::one(n)];
    for &idx in order {
        let x = Polynomial::monomial(n, Monomial::var(idx));
        let mut next = vec![Polynomial::zero(n); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = &next[j + 1] + c;
            next[j] = &next[j] - &(c * &x);
        }
        coeffs = next;
    }
    coeffs.reverse();
    coeffs
}

/// For the product of linear factors taken in the circular order starting at
/// `x_{1+rotation}`, the differences `coeff(y^{n-k}) - (-1)^k sigma_k`, `k = 0..=n`.
pub fn factored_char_coefficients_rotated(n: usize, rotation: usize) -> Vec<Polynomial> {
    let order: Vec<usize> = (0..n).map(|j| (j + rotation) % n + 1).collect();
    linear_factor_product(n, &order)
        .into_iter()
        .enumerate()
        .map(|(k, c)| &c - &build_sigma(n, k as i64).scale(&sign(k)))
        .collect()
}

pub fn factored_char_coefficients(n: usize) -> Vec<Polynomial> {
    factored_char_coefficients_rotated(n, 0)
}

/// `x_i (x_i^{n-1} - sigma_1 x_i^{n-2} + ... + (-1)^{n-1} sigma_{n-1}) - (-1)^{n+1} sigma_n`,
/// the inverse formula for `x_i` cleared of its denominator.
pub fn inverse_identity(n: usize, i: usize) -> Polynomial {
    let x = Polynomial::monomial(n, Monomial::var(i));
    let mut cofactor = Polynomial::zero(n);
    for k in 0..n {
        let term = &build_sigma(n, k as i64) * &x.pow((n - 1 - k) as u32);
        cofactor = &cofactor + &term.scale(&sign(k));
    }
    &(&x * &cofactor) - &build_sigma(n, n as i64).scale(&sign(n + 1))
}

/// Exponent vectors `(a_1..a_n)` with `sum k a_k <= bound`.
pub fn sigma_exponent_vectors(n: usize, bound: u32) -> Vec<Vec<u32>> {
    fn walk(n: usize, k: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k > n {
            out.push(cur.clone());
            return;
        }
        let mut a = 0;
        while a * k as u32 <= budget {
            cur.push(a);
            walk(n, k + 1, budget - a * k as u32, cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    walk(n, 1, bound, &mut Vec::new(), &mut out);
    out
}

/// Bounded-degree evidence for algebraic independence: the abelianized products
/// `sigma_1^{a_1} ... sigma_n^{a_n}` with `sum k a_k <= bound` are linearly independent.
pub fn verify_sigma_independence(n: usize, bound: u32) -> bool {
    let sigmas: Vec<CommutativePoly> = (1..=n).map(|k| abelianize(&build_sigma(n, k as i64))).collect();
    let products: Vec<CommutativePoly> = sigma_exponent_vectors(n, bound)
        .into_iter()
        .map(|exps| {
            exps.iter()
                .zip(&sigmas)
                .fold(CommutativePoly::one(n), |acc, (&a, s)| &acc * &s.pow(a))
        })
        .collect();
    let mut columns: Vec<Vec<u32>> = products
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| e.clone()))
        .collect();
    columns.sort();
    columns.dedup();
    let mut ech = Echelon::new(columns.len());
    products.iter().all(|p| {
        let row = p
            .terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (columns.binary_search(e).unwrap(), c.clone()))
            .collect();
        ech.insert(row)
    })
}
