use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{c_poly, d_poly};
use crate::commutative::CommutativePoly;
use crate::freering::{Coefficient, Polynomial};
use crate::sigma::build_sigma;

/// The central symbols of the coefficient ring `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Sigma1,
    Sigma2,
    Sigma3,
    /// `c^3`.
    C3,
    /// The orbit polynomial of `x1 x2 x1`.
    D,
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [Symbol::Sigma1, Symbol::Sigma2, Symbol::Sigma3, Symbol::C3, Symbol::D];
    pub const NAMES: [&'static str; 5] = ["s1", "s2", "s3", "C3", "D"];
    /// Degree of each symbol as a polynomial in the free ring.
    pub const WEIGHTS: [u32; 5] = [1, 2, 3, 6, 3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn expand(self) -> Polynomial {
        match self {
            Symbol::Sigma1 => build_sigma(3, 1),
            Symbol::Sigma2 => build_sigma(3, 2),
            Symbol::Sigma3 => build_sigma(3, 3),
            Symbol::C3 => c_poly().pow(3),
            Symbol::D => d_poly(),
        }
    }
}

/// A polynomial in the central symbols.
pub fn zpoly(s: Symbol) -> CommutativePoly {
    CommutativePoly::var(5, s.index())
}

pub fn zconst(c: i64) -> CommutativePoly {
    CommutativePoly::from_int(5, c)
}

/// `z0 + z1 c + z2 c^2` with `c^3` replaced by the symbol `C3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SReduced {
    pub z: [CommutativePoly; 3],
}

impl SReduced {
    pub fn new(z0: CommutativePoly, z1: CommutativePoly, z2: CommutativePoly) -> Self {
        Self { z: [z0, z1, z2] }
    }

    pub fn zero() -> Self {
        Self::central(CommutativePoly::zero(5))
    }

    pub fn one() -> Self {
        Self::central(zconst(1))
    }

    pub fn central(z0: CommutativePoly) -> Self {
        Self::new(z0, CommutativePoly::zero(5), CommutativePoly::zero(5))
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::central(zpoly(s))
    }

    /// The element `c`.
    pub fn c() -> Self {
        Self::new(CommutativePoly::zero(5), zconst(1), CommutativePoly::zero(5))
    }

    pub fn is_zero(&self) -> bool {
        self.z.iter().all(CommutativePoly::is_zero)
    }

    pub fn scale(&self, k: &Coefficient) -> Self {
        Self {
            z: self.z.clone().map(|p| p.scale(k)),
        }
    }

    /// Weighted degree in the free ring, when homogeneous (`c` has weight 2).
    pub fn degree(&self) -> Option<u32> {
        let mut deg = None;
        for (k, z) in self.z.iter().enumerate() {
            if z.is_zero() {
                continue;
            }
            let d = z.weighted_degree(&Symbol::WEIGHTS)? + 2 * k as u32;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// The element of the free ring this form denotes, with `c = x1 x2 - x2 x1`.
    pub fn expand(&self) -> Polynomial {
        let mut powers: HashMap<(Symbol, u32), Polynomial> = HashMap::new();
        let mut power =
            |s: Symbol, e: u32| -> Polynomial { powers.entry((s, e)).or_insert_with(|| s.expand().pow(e)).clone() };
        let c = c_poly();
        let mut out = Polynomial::zero(3);
        for (k, z) in self.z.iter().enumerate() {
            let ck = c.pow(k as u32);
            for (exps, coeff) in z.terms() {
                let mut term = Polynomial::constant(3, coeff.clone());
                for s in Symbol::ALL {
                    let e = exps[s.index()];
                    if e > 0 {
                        term = &term * &power(s, e);
                    }
                }
                out = &out + &(&term * &ck);
            }
        }
        out
    }
}

/// Multiplication in `Z[c]/(c^3 - C3)`.
pub fn sreduced_mul(a: &SReduced, b: &SReduced) -> SReduced {
    let c3 = zpoly(Symbol::C3);
    let mut z = [
        CommutativePoly::zero(5),
        CommutativePoly::zero(5),
        CommutativePoly::zero(5),
    ];
    for i in 0..3 {
        if a.z[i].is_zero() {
            continue;
        }
        for j in 0..3 {
            if b.z[j].is_zero() {
                continue;
            }
            let prod = &a.z[i] * &b.z[j];
            let k = i + j;
            if k < 3 {
                z[k] = &z[k] + &prod;
            } else {
                z[k - 3] = &z[k - 3] + &(&prod * &c3);
            }
        }
    }
    SReduced { z }
}

impl Add for &SReduced {
    type Output = SReduced;
    fn add(self, rhs: &SReduced) -> SReduced {
        SReduced {
            z: std::array::from_fn(|k| &self.z[k] + &rhs.z[k]),
        }
    }
}

impl Sub for &SReduced {
    type Output = SReduced;
    fn sub(self, rhs: &SReduced) -> SReduced {
        SReduced {
            z: std::array::from_fn(|k| &self.z[k] - &rhs.z[k]),
        }
    }
}

impl Neg for &SReduced {
    type Output = SReduced;
    fn neg(self) -> SReduced {
        SReduced {
            z: std::array::from_fn(|k| -&self.z[k]),
        }
    }
}

impl Mul for &SReduced {
    type Output = SReduced;
    fn mul(self, rhs: &SReduced) -> SReduced {
        sreduced_mul(self, rhs)
    }
}

impl fmt::Display for SReduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, z) in self.z.iter().enumerate() {
            if z.is_zero() {
                continue;
            }
            let body = z.display_with(&Symbol::NAMES).to_string();
            let single = z.terms().count() == 1;
            parts.push(match k {
                0 => body,
                _ => {
                    let c = if k == 1 { "c" } else { "c^2" };
                    if body == "1" {
                        c.to_string()
                    } else if body == "-1" {
                        format!("-{c}")
                    } else if single {
                        format!("{body}*{c}")
                    } else {
                        format!("({body})*{c}")
                    }
                }
            });
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for SReduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl Default for SReduced {
    fn default() -> Self {
        Self::zero()
    }
}

impl SReduced {
    /// `true` when `z1` and `z2` vanish.
    pub fn is_central_form(&self) -> bool {
        self.z[1].is_zero() && self.z[2].is_zero()
    }
}
