use std::collections::BTreeMap;

use super::sreduced::{sreduced_mul, zconst, zpoly, SReduced, Symbol};
use crate::atoms::{is_atom, orbit_max};
use crate::commutative::CommutativePoly;
use crate::cyclic::average;
use crate::freering::{Monomial, Polynomial};
use crate::ideal::IdealOracle;
use crate::rewrite::rewrite_invariant;
use crate::{Error, Result};

fn atom(letters: &[usize]) -> Monomial {
    Monomial::from_letters_unchecked(letters)
}

/// The orbit polynomials of the seven atoms of degree at most 3.
pub fn base_table() -> BTreeMap<Monomial, SReduced> {
    let s1 = zpoly(Symbol::Sigma1);
    let s2 = zpoly(Symbol::Sigma2);
    let s3 = zpoly(Symbol::Sigma3);
    let d = zpoly(Symbol::D);
    let zero = CommutativePoly::zero(5);
    let mut t = BTreeMap::new();
    t.insert(atom(&[1]), SReduced::central(s1.clone()));
    t.insert(atom(&[1, 2]), SReduced::new(s2.clone(), zconst(1), zero.clone()));
    t.insert(atom(&[1, 3]), SReduced::new(s2.clone(), zconst(-2), zero.clone()));
    t.insert(atom(&[1, 2, 1]), SReduced::central(d.clone()));
    t.insert(atom(&[1, 2, 3]), SReduced::central(&zconst(3) * &s3));
    t.insert(
        atom(&[1, 3, 1]),
        SReduced::central(&(&(&s1 * &s2) - &(&zconst(3) * &s3)) - &d),
    );
    t.insert(atom(&[1, 3, 2]), SReduced::new(&zconst(3) * &s3, -&s1, zero));
    t
}

fn cat(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

/// Memoized reduction of orbit polynomials to S-forms, without certification.
#[derive(Clone, Debug)]
pub struct Reducer {
    memo: BTreeMap<Monomial, SReduced>,
}

impl Default for Reducer {
    fn default() -> Self {
        Self::new()
    }
}

impl Reducer {
    pub fn new() -> Self {
        Self { memo: base_table() }
    }

    /// S-form of the orbit polynomial of an atom.
    pub fn reduce_atom(&mut self, a: &Monomial) -> SReduced {
        if let Some(r) = self.memo.get(a) {
            return r.clone();
        }
        let l = a.letters();
        assert!(l.len() >= 4 && l[0] == 1, "not a residual atom of degree >= 4: {a}");
        let deg = l.len() as u32;
        let s2 = SReduced::symbol(Symbol::Sigma2);
        let s3 = SReduced::symbol(Symbol::Sigma3);
        let c = SReduced::c();
        let rest = &l[4..];
        let out = match (l[1], l[2], l[3]) {
            (2, 1, 2) => {
                let a = sreduced_mul(&s2, &self.reduce_word(&cat(&[1, 2], rest), deg));
                let b = sreduced_mul(&s3, &self.reduce_word(&cat(&[1], rest), deg));
                let d = sreduced_mul(&s3, &self.reduce_word(&cat(&[2], rest), deg));
                &(&a - &b) - &d
            }
            (2, 1, 3) => {
                let a = sreduced_mul(&s3, &self.reduce_word(&cat(&[1], rest), deg));
                let b = sreduced_mul(&c, &self.reduce_word(&cat(&[2, 3], rest), deg));
                &a - &b
            }
            (2, 3, _) => sreduced_mul(&s3, &self.reduce_word(&l[3..], deg)),
            (3, 1, 2) => sreduced_mul(&s3, &self.reduce_word(&cat(&[1], rest), deg)),
            (3, 1, 3) => {
                let a = sreduced_mul(&s2, &self.reduce_word(&cat(&[1, 3], rest), deg));
                let b = sreduced_mul(&s3, &self.reduce_word(&cat(&[3], rest), deg));
                let d = self.reduce_atom(&atom(&cat(&[1, 2, 1, 3], rest)));
                &(&a - &b) - &d
            }
            (3, 2, _) => {
                let a = sreduced_mul(&s3, &self.reduce_word(&l[3..], deg));
                let b = sreduced_mul(&c, &self.reduce_word(&cat(&[2], &l[3..]), deg));
                &a - &b
            }
            _ => unreachable!("atom prefixes are 121, 123, 131 or 132: {a}"),
        };
        self.memo.insert(a.clone(), out.clone());
        out
    }

    /// S-form of the orbit polynomial of an arbitrary nonempty word, which must
    /// be shorter than `below`.
    fn reduce_word(&mut self, letters: &[usize], below: u32) -> SReduced {
        assert!((letters.len() as u32) < below, "reduction must descend in degree");
        let m = orbit_max(3, &atom(letters)).expect("nonempty word in range");
        if is_atom(&m).expect("orbit maxima lie in Q0") {
            self.reduce_atom(&m)
        } else {
            let orbit = crate::cyclic::orbit_polynomial(3, &m).expect("valid monomial");
            self.reduce_invariant(&orbit)
        }
    }

    /// S-form of a polynomial invariant in the free ring.
    pub fn reduce_invariant(&mut self, p: &Polynomial) -> SReduced {
        let expr = rewrite_invariant(p).expect("input is invariant");
        let mut out = SReduced::zero();
        for (word, coeff) in expr.terms() {
            let mut prod = SReduced::one();
            for a in word {
                prod = sreduced_mul(&prod, &self.reduce_atom(a));
            }
            out = &out + &prod.scale(coeff);
        }
        out
    }
}

/// Whether `p - expand(form)` lies in the ideal.
pub fn certify_reduction(oracle: &IdealOracle, p: &Polynomial, form: &SReduced) -> bool {
    oracle.contains(&(p - &form.expand()))
}

/// Reduces an element that is invariant modulo the ideal to its S-form, and
/// certifies the result against the ideal at every degree.
pub fn reduce_to_s_form(oracle: &IdealOracle, p: &Polynomial, bound: u32) -> Result<SReduced> {
    if oracle.n() != 3 || p.arity() != 3 {
        return Err(Error::ArityMismatch {
            left: 3,
            right: if oracle.n() != 3 { oracle.n() } else { p.arity() },
        });
    }
    let degree = p.degree().unwrap_or(0);
    if degree > bound {
        return Err(Error::DegreeAboveBound { degree, bound });
    }
    let avg = average(p);
    let drift = &avg - p;
    if !drift.is_zero() && !oracle.contains(&drift) {
        return Err(Error::NotInvariantModIdeal);
    }
    let form = Reducer::new().reduce_invariant(&avg);
    if !certify_reduction(oracle, p, &form) {
        return Err(Error::Uncertified(format!("{p} -> {form}")));
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::enumerate_atoms;
    use crate::cyclic::orbit_polynomial;
    use crate::freering::parse_poly;
    use crate::n3lab::c_poly;

    fn bar(letters: &[usize]) -> Polynomial {
        orbit_polynomial(3, &atom(letters)).unwrap()
    }

    #[test]
    fn base_table_is_sound() {
        let oracle = IdealOracle::comm(3);
        for (a, form) in base_table() {
            assert!(certify_reduction(&oracle, &bar(&a.letters()), &form), "{a}");
        }
    }

    #[test]
    fn degree_four_atoms_are_sound() {
        let oracle = IdealOracle::comm(3);
        let mut r = Reducer::new();
        for a in enumerate_atoms(3, 4) {
            let form = r.reduce_atom(&a);
            assert_eq!(form.degree(), Some(4), "{a}");
            assert!(certify_reduction(&oracle, &bar(&a.letters()), &form), "{a} -> {form}");
        }
    }

    #[test]
    fn examples() {
        let oracle = IdealOracle::comm(3);
        let f = reduce_to_s_form(&oracle, &bar(&[1, 2]), 6).unwrap();
        assert_eq!(f.to_string(), "s2 + c");
        let p = &bar(&[1, 2, 1]) + &bar(&[1, 3, 1]);
        let f = reduce_to_s_form(&oracle, &p, 6).unwrap();
        assert_eq!(f.to_string(), "s1*s2 - 3*s3");
        let c = c_poly();
        assert!(reduce_to_s_form(&oracle, &c, 6).is_ok());
        assert!(matches!(
            reduce_to_s_form(&oracle, &parse_poly("x1", 3).unwrap(), 6),
            Err(Error::NotInvariantModIdeal)
        ));
        assert!(matches!(
            reduce_to_s_form(&oracle, &c.pow(3), 4),
            Err(Error::DegreeAboveBound { degree: 6, bound: 4 })
        ));
    }
}
