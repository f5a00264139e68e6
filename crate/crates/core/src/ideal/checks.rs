use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use super::{degree_slice, GeneratorSet, IdealOracle};
use crate::freering::{Coefficient, Monomial, Polynomial};
use crate::linalg::{solve_combination, Echelon, SparseRow};
use crate::n3lab;
use crate::report::CheckReport;
use crate::sigma::{char_poly_image, factored_char_coefficients_rotated, inverse_identity, verify_sigma_independence};
use crate::{Error, Result};

pub const CHECK_NAMES: &[&str] = &[
    "thm_1_1",
    "thm_1_3_independence",
    "eq_4",
    "cor_1_4",
    "cor_1_5",
    "cor_1_6_dim",
    "root_identity",
    "factored_coeffs",
    "inverse_identity",
    "sigma_independence",
    "n3",
];

/// Certification bound used when the caller does not give one.
pub fn default_max_degree(n: usize) -> u32 {
    match n {
        0..=3 => 6,
        4 => 5,
        5 => 4,
        _ => 3,
    }
}

/// `(i, j + 1)` for `1 <= i < j < n`: the off-diagonal commutators `[i, j+1]`.
pub fn off_diagonal_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            out.push((i, j + 1));
        }
    }
    out
}

fn bracket(n: usize, i: usize, j: usize) -> Polynomial {
    Polynomial::bracket(n, i, j).expect("indices in range")
}

/// Dimension of the degree-`d` part of the quotient ring.
pub fn quotient_dim(oracle: &IdealOracle, d: u32) -> usize {
    oracle.n().pow(d) - oracle.slice(d).rank()
}

/// Coordinates of a quadratic in the canonical basis
/// `x_i^2`, `x_i x_j (i < j)`, `[i, j+1] (i < j < n)` modulo the ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm {
    pub n: usize,
    /// `a_i`, index `i - 1`.
    pub squares: Vec<Coefficient>,
    /// `b_ij` keyed by `(i, j)`, `i < j`.
    pub products: BTreeMap<(usize, usize), Coefficient>,
    /// `c_ij` keyed by `(i, j)`, the coefficient of `[i, j+1]`.
    pub commutators: BTreeMap<(usize, usize), Coefficient>,
}

impl QuadraticForm {
    /// Coordinates in the order squares, products, commutators.
    pub fn coordinates(&self) -> Vec<Coefficient> {
        self.squares
            .iter()
            .chain(self.products.values())
            .chain(self.commutators.values())
            .cloned()
            .collect()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.n;
        let mut p = Polynomial::zero(n);
        for (i, a) in self.squares.iter().enumerate() {
            p.add_term(Monomial::power(i + 1, 2), a.clone());
        }
        for (&(i, j), b) in &self.products {
            p.add_term(Monomial::from_letters_unchecked(&[i, j]), b.clone());
        }
        for (&(i, j), c) in &self.commutators {
            p = &p + &bracket(n, i, j + 1).scale(c);
        }
        p
    }
}

enum QuadraticSlot {
    Square(usize),
    Product(usize, usize),
    Commutator(usize, usize),
}

/// The canonical quadratics, in the order used by [`QuadraticForm::coordinates`].
pub(crate) fn quadratic_basis_polys(n: usize) -> Vec<Polynomial> {
    quadratic_basis(n).into_iter().map(|(_, p)| p).collect()
}

fn quadratic_basis(n: usize) -> Vec<(QuadraticSlot, Polynomial)> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push((QuadraticSlot::Square(i), Polynomial::monomial(n, Monomial::power(i, 2))));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let w = Polynomial::word(n, &[i, j]).expect("in range");
            out.push((QuadraticSlot::Product(i, j), w));
        }
    }
    for (i, q) in off_diagonal_pairs(n) {
        out.push((QuadraticSlot::Commutator(i, q - 1), bracket(n, i, q)));
    }
    out
}

pub fn canonical_quadratic(oracle: &IdealOracle, p: &Polynomial) -> Result<QuadraticForm> {
    let n = oracle.n();
    if p.arity() != n {
        return Err(Error::ArityMismatch {
            left: n,
            right: p.arity(),
        });
    }
    if !p.is_homogeneous() || p.degree().is_some_and(|d| d != 2) {
        return Err(Error::NotHomogeneous(2));
    }
    let slice = oracle.slice(2);
    let basis = quadratic_basis(n);
    let mut vectors: Vec<SparseRow> = basis.iter().map(|(_, b)| slice.basis().to_row(b)).collect();
    vectors.extend(slice.rref().rows().iter().cloned());
    let coords = solve_combination(slice.basis().len(), &vectors, &slice.basis().to_row(p))
        .expect("canonical quadratics together with the ideal span every quadratic");
    let mut form = QuadraticForm {
        n,
        squares: vec![Coefficient::zero(); n],
        products: BTreeMap::new(),
        commutators: BTreeMap::new(),
    };
    for ((slot, _), c) in basis.iter().zip(coords) {
        match *slot {
            QuadraticSlot::Square(i) => form.squares[i - 1] = c,
            QuadraticSlot::Product(i, j) => {
                form.products.insert((i, j), c);
            }
            QuadraticSlot::Commutator(i, j) => {
                form.commutators.insert((i, j), c);
            }
        }
    }
    Ok(form)
}

/// Which sign of the trailing sum in the diagonal-commutator formula the ideal confirms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Eq4Reading {
    /// The trailing sum is empty, so both signs give the same expression.
    Both,
    /// Trailing sum subtracted.
    AsPrinted,
    /// Trailing sum added.
    SecondSumAdded,
    Neither,
}

/// The off-diagonal expression congruent to the diagonal commutator `[k, k-1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalExpansion {
    pub k: usize,
    /// Coefficient of each off-diagonal `[i, q]` (keyed by `(i, q)`), zeros omitted.
    pub coefficients: BTreeMap<(usize, usize), Coefficient>,
    pub expression: Polynomial,
    pub reading: Eq4Reading,
}

fn printed_diagonal_formula(n: usize, k: usize, trailing_sign: i64) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for a in 1..=k.saturating_sub(2) {
        for j in k..=n {
            p = &p + &bracket(n, a, j);
        }
    }
    for j in k + 1..=n {
        p = &p + &bracket(n, k - 1, j).scale_int(trailing_sign);
    }
    p
}

pub fn expand_diagonal_commutator(oracle: &IdealOracle, k: usize) -> Result<DiagonalExpansion> {
    let n = oracle.n();
    if k < 2 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            detail: format!("{k} not in 2..={n}"),
        });
    }
    let slice = oracle.slice(2);
    let pairs = off_diagonal_pairs(n);
    let mut vectors: Vec<SparseRow> = pairs
        .iter()
        .map(|&(i, q)| slice.basis().to_row(&bracket(n, i, q)))
        .collect();
    vectors.extend(slice.rref().rows().iter().cloned());
    let target = bracket(n, k, k - 1);
    let coords = solve_combination(slice.basis().len(), &vectors, &slice.basis().to_row(&target))
        .expect("diagonal commutators lie in the span of off-diagonals plus the ideal");
    let mut coefficients = BTreeMap::new();
    let mut expression = Polynomial::zero(n);
    for (&(i, q), c) in pairs.iter().zip(coords) {
        if !c.is_zero() {
            expression = &expression + &bracket(n, i, q).scale(&c);
            coefficients.insert((i, q), c);
        }
    }
    let printed = printed_diagonal_formula(n, k, -1);
    let flipped = printed_diagonal_formula(n, k, 1);
    let reading = match (expression == printed, expression == flipped) {
        (true, true) => Eq4Reading::Both,
        (true, false) => Eq4Reading::AsPrinted,
        (false, true) => Eq4Reading::SecondSumAdded,
        (false, false) => Eq4Reading::Neither,
    };
    Ok(DiagonalExpansion {
        k,
        coefficients,
        expression,
        reading,
    })
}

fn residual_witness(oracle: &IdealOracle, p: &Polynomial) -> serde_json::Value {
    let m = oracle.member(p, false);
    json!({
        "member": m.is_member,
        "residual": m.residuals.values().map(|r| r.to_string()).collect::<Vec<_>>(),
    })
}

fn thm_1_1(oracle: &IdealOracle, max_degree: u32) -> Vec<CheckReport> {
    let n = oracle.n();
    let diff = GeneratorSet::diff(n);
    (2..=max_degree)
        .map(|d| {
            let comm = oracle.slice(d);
            let other = degree_slice(&diff, d);
            let ok = *comm.rref() == *other.rref();
            CheckReport::new(
                "thm_1_1",
                n,
                Some(d),
                ok,
                json!({
                    "rank_comm": comm.rank(),
                    "rank_diff": other.rank(),
                    "columns": comm.basis().len(),
                    "scope": format!("evidence up to degree {max_degree}"),
                }),
            )
        })
        .collect()
}

fn thm_1_3(oracle: &IdealOracle) -> Vec<CheckReport> {
    let n = oracle.n();
    let slice = oracle.slice(2);
    let mut ech = Echelon::new(slice.basis().len());
    for r in slice.rref().rows() {
        ech.insert(r.clone());
    }
    let pairs = off_diagonal_pairs(n);
    let independent = pairs
        .iter()
        .all(|&(i, q)| ech.insert(slice.basis().to_row(&bracket(n, i, q))));
    let mut out = vec![CheckReport::new(
        "thm_1_3_independence",
        n,
        Some(2),
        independent && pairs.len() == (n - 1) * (n - 2) / 2,
        json!({
            "off_diagonal": pairs.iter().map(|(i, q)| format!("[{i},{q}]")).collect::<Vec<_>>(),
            "slice_rank": slice.rank(),
            "augmented_rank": ech.rank(),
        }),
    )];
    if n == 3 {
        let (a, b, c) = (bracket(3, 1, 2), bracket(3, 2, 3), bracket(3, 3, 1));
        let ok = oracle.contains(&(&a - &b)) && oracle.contains(&(&b - &c)) && oracle.contains(&(&c - &a));
        out.push(CheckReport::new(
            "thm_1_3_common_value",
            n,
            Some(2),
            ok,
            json!({"congruent": ["[1,2]", "[2,3]", "[3,1]"]}),
        ));
    }
    out
}

fn eq_4(oracle: &IdealOracle) -> Result<Vec<CheckReport>> {
    let n = oracle.n();
    (2..=n)
        .map(|k| {
            let e = expand_diagonal_commutator(oracle, k)?;
            let diff = &bracket(n, k, k - 1) - &e.expression;
            let ok = oracle.contains(&diff) && e.reading != Eq4Reading::Neither;
            Ok(CheckReport::new(
                "eq_4",
                n,
                Some(2),
                ok,
                json!({
                    "k": k,
                    "diagonal": format!("[{k},{}]", k - 1),
                    "expression": e.expression.to_string(),
                    "reading": e.reading,
                }),
            ))
        })
        .collect()
}

fn cor_1_4(oracle: &IdealOracle) -> Vec<CheckReport> {
    let n = oracle.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let w = residual_witness(oracle, &bracket(n, i, j));
            let ok = w["member"] == json!(false);
            out.push(CheckReport::new(
                "cor_1_4",
                n,
                Some(2),
                ok,
                json!({"pair": [i, j], "witness": w}),
            ));
        }
    }
    out
}

/// `sum_k [k,k-1] - sum_p sum_j j [p, j+p]`.
pub(crate) fn cor_1_5_polynomial(n: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for k in 2..=n {
        p = &p + &bracket(n, k, k - 1);
    }
    for a in 1..=n.saturating_sub(2) {
        for j in 2..=n - a {
            p = &p - &bracket(n, a, j + a).scale_int(j as i64);
        }
    }
    p
}

fn cor_1_5(oracle: &IdealOracle) -> CheckReport {
    let n = oracle.n();
    let p = cor_1_5_polynomial(n);
    let w = residual_witness(oracle, &p);
    let ok = w["member"] == json!(true);
    CheckReport::new(
        "cor_1_5",
        n,
        Some(2),
        ok,
        json!({"difference": p.to_string(), "witness": w}),
    )
}

fn cor_1_6(oracle: &IdealOracle) -> CheckReport {
    let n = oracle.n();
    let dim = quotient_dim(oracle, 2);
    let expected = n * n - n + 1;
    let slice = oracle.slice(2);
    let mut ech = Echelon::new(slice.basis().len());
    for r in slice.rref().rows() {
        ech.insert(r.clone());
    }
    let basis = quadratic_basis(n);
    let spans = basis.iter().all(|(_, b)| ech.insert(slice.basis().to_row(b))) && ech.rank() == n * n;
    CheckReport::new(
        "cor_1_6_dim",
        n,
        Some(2),
        dim == expected && basis.len() == expected && spans,
        json!({"quotient_dim": dim, "expected": expected, "canonical_basis_size": basis.len()}),
    )
}

fn membership_line(oracle: &IdealOracle, check: &str, p: &Polynomial, extra: serde_json::Value) -> CheckReport {
    let w = residual_witness(oracle, p);
    let ok = w["member"] == json!(true);
    CheckReport::new(check, oracle.n(), p.degree(), ok, json!({"case": extra, "witness": w}))
}

/// Runs the named verification and returns one report line per sub-case.
pub fn run_check(name: &str, oracle: &IdealOracle, max_degree: Option<u32>) -> Result<Vec<CheckReport>> {
    let n = oracle.n();
    let bound = max_degree.unwrap_or_else(|| default_max_degree(n));
    if matches!(name, "root_identity" | "factored_coeffs" | "inverse_identity") && n as u32 > bound {
        return Err(Error::DegreeAboveBound {
            degree: n as u32,
            bound,
        });
    }
    Ok(match name {
        "thm_1_1" => thm_1_1(oracle, bound),
        "thm_1_3_independence" => thm_1_3(oracle),
        "eq_4" => eq_4(oracle)?,
        "cor_1_4" => cor_1_4(oracle),
        "cor_1_5" => vec![cor_1_5(oracle)],
        "cor_1_6_dim" => vec![cor_1_6(oracle)],
        "root_identity" => (1..=n)
            .map(|i| membership_line(oracle, "root_identity", &char_poly_image(n, i), json!({"i": i})))
            .collect(),
        "factored_coeffs" => (0..n)
            .flat_map(|r| {
                factored_char_coefficients_rotated(n, r)
                    .into_iter()
                    .enumerate()
                    .map(move |(k, d)| (r, k, d))
            })
            .map(|(r, k, d)| {
                let mut line = membership_line(oracle, "factored_coeffs", &d, json!({"rotation": r, "k": k}));
                line.degree = Some(k as u32);
                line
            })
            .collect(),
        "inverse_identity" => (1..=n)
            .map(|i| membership_line(oracle, "inverse_identity", &inverse_identity(n, i), json!({"i": i})))
            .collect(),
        "sigma_independence" => vec![CheckReport::new(
            "sigma_independence",
            n,
            Some(bound),
            verify_sigma_independence(n, bound),
            json!({"bound": bound}),
        )],
        "n3" => {
            if n != 3 {
                return Err(Error::OutOfRange {
                    what: "n",
                    detail: format!("the n3 suite needs n = 3, got {n}"),
                });
            }
            n3lab::verify_n3_suite(oracle, max_degree.unwrap_or(n3lab::DEFAULT_DEGREE_BOUND))?
        }
        other => return Err(Error::UnknownCheck(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freering::parse_poly;
    use crate::report::all_passed;

    fn q(n: i64) -> Coefficient {
        Coefficient::from_integer(n.into())
    }

    #[test]
    fn quotient_dims() {
        let o = IdealOracle::comm(3);
        assert_eq!(quotient_dim(&o, 0), 1);
        assert_eq!(quotient_dim(&o, 1), 3);
        assert_eq!(quotient_dim(&o, 2), 7);
    }

    #[test]
    fn canonical_forms() {
        let o = IdealOracle::comm(3);
        let f = canonical_quadratic(&o, &parse_poly("x2*x1", 3).unwrap()).unwrap();
        assert_eq!(f.products[&(1, 2)], q(1));
        assert_eq!(f.commutators[&(1, 2)], q(1));
        assert!(f.squares.iter().all(Zero::is_zero));
        let f = canonical_quadratic(&o, &parse_poly("x1^2", 3).unwrap()).unwrap();
        assert_eq!(f.squares[0], q(1));
        assert!(f.products.values().chain(f.commutators.values()).all(Zero::is_zero));
        let f = canonical_quadratic(&o, &bracket(3, 1, 3)).unwrap();
        assert_eq!(f.commutators[&(1, 2)], q(1));
        assert!(canonical_quadratic(&o, &parse_poly("x1", 3).unwrap()).is_err());
    }

    #[test]
    fn diagonal_expansions() {
        let o = IdealOracle::comm(3);
        let e = expand_diagonal_commutator(&o, 2).unwrap();
        assert_eq!(e.expression, bracket(3, 1, 3));
        assert_eq!(e.reading, Eq4Reading::SecondSumAdded);
        let e = expand_diagonal_commutator(&o, 3).unwrap();
        assert_eq!(e.expression, bracket(3, 1, 3));
        assert_eq!(e.reading, Eq4Reading::Both);
        let o4 = IdealOracle::comm(4);
        let e = expand_diagonal_commutator(&o4, 4).unwrap();
        assert_eq!(e.expression, &bracket(4, 1, 4) + &bracket(4, 2, 4));
        assert!(expand_diagonal_commutator(&o4, 5).is_err());
        assert!(expand_diagonal_commutator(&o4, 1).is_err());
    }

    #[test]
    fn small_checks_pass_for_n3() {
        let o = IdealOracle::comm(3);
        for name in [
            "thm_1_3_independence",
            "eq_4",
            "cor_1_4",
            "cor_1_5",
            "cor_1_6_dim",
            "root_identity",
        ] {
            let r = run_check(name, &o, None).unwrap();
            assert!(all_passed(&r), "{name}: {r:?}");
        }
        assert!(matches!(run_check("nope", &o, None), Err(Error::UnknownCheck(_))));
        assert!(run_check("n3", &IdealOracle::comm(4), None).is_err());
    }
}
