//! The quotient ring for three variables.
//!
//! Every invariant reduces to `z0 + z1 c + z2 c^2` with `c = [x1, x2]` and
//! `z_i` polynomials in `sigma1, sigma2, sigma3, c^3` and the cubic orbit
//! polynomial `D` of `x1 x2 x1`. Reductions are checked against the ideal.

mod reduce;
mod sreduced;
mod suite;

use crate::cyclic::orbit_polynomial;
use crate::freering::{Monomial, Polynomial};

pub use reduce::{base_table, certify_reduction, reduce_to_s_form, Reducer};
pub use sreduced::{sreduced_mul, zconst, zpoly, SReduced, Symbol};
pub use suite::verify_n3_suite;

pub const DEFAULT_DEGREE_BOUND: u32 = 6;

fn bracket(i: usize, j: usize) -> Polynomial {
    Polynomial::bracket(3, i, j).expect("indices in range")
}

fn x(i: usize) -> Polynomial {
    Polynomial::var(3, i).expect("index in range")
}

/// `c = x1 x2 - x2 x1`.
pub fn c_poly() -> Polynomial {
    bracket(1, 2)
}

/// `D`, the orbit polynomial of `x1 x2 x1`.
pub fn d_poly() -> Polynomial {
    orbit_polynomial(3, &Monomial::from_letters_unchecked(&[1, 2, 1])).expect("valid monomial")
}

/// The generators `A, B, C, D` of the ideal for `n = 3`.
pub fn n3_generators() -> (Polynomial, Polynomial, Polynomial, Polynomial) {
    let a = &bracket(1, 2) + &bracket(1, 3);
    let b = &bracket(2, 3) + &bracket(2, 1);
    let c = &(&x(2) * &bracket(1, 3)) + &(&bracket(1, 2) * &x(3));
    let d = &(&x(3) * &bracket(2, 1)) + &(&bracket(2, 3) * &x(1));
    (a, b, c, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freering::parse_poly;
    use crate::ideal::IdealOracle;

    #[test]
    fn generators() {
        let (a, b, c, d) = n3_generators();
        assert_eq!(a, parse_poly("x1*x2 - x2*x1 + x1*x3 - x3*x1", 3).unwrap());
        assert_eq!(c, parse_poly("x1*x2*x3 - x2*x3*x1", 3).unwrap());
        assert_eq!(d, parse_poly("x2*x3*x1 - x3*x1*x2", 3).unwrap());
        let oracle = IdealOracle::comm(3);
        for g in [&a, &b, &c, &d] {
            assert!(oracle.contains(g));
        }
    }
}
