//! Evaluating the defining relations on tuples of rational matrices.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::freering::{Coefficient, Polynomial};
use crate::linalg;
use crate::sigma::build_sigma;
use crate::{Error, Result};

/// A dense square matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    dim: usize,
    entries: Vec<Coefficient>,
}

impl RatMatrix {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Coefficient::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Coefficient::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Coefficient>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::MalformedTuple("matrix is not square".into()));
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Coefficient::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn diagonal(values: &[Coefficient]) -> Self {
        let mut m = Self::zero(values.len());
        for (i, v) in values.iter().enumerate() {
            m.entries[i * values.len() + i] = v.clone();
        }
        m
    }

    /// The permutation matrix sending basis vector `e_i` to `e_{i+1 mod dim}`.
    pub fn cyclic_shift(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[((i + 1) % dim) * dim + i] = Coefficient::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        &self.entries[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut m = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                m.entries[j * d + i] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut m = Self::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        m.entries[i * d + j] += a * b;
                    }
                }
            }
        }
        m
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.dim), |acc, _| acc.mul(self))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn rank(&self) -> usize {
        let d = self.dim;
        linalg::rank(
            d,
            (0..d).map(|i| {
                (0..d)
                    .filter(|&j| !self.get(i, j).is_zero())
                    .map(|j| (j, self.get(i, j).clone()))
                    .collect()
            }),
        )
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_strings())
    }
}

/// `n` square matrices of a common dimension, standing in for `x1, ..., xn`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixTuple {
    mats: Vec<RatMatrix>,
}

impl MatrixTuple {
    pub fn new(mats: Vec<RatMatrix>) -> Result<Self> {
        let Some(first) = mats.first() else {
            return Err(Error::MalformedTuple("empty tuple".into()));
        };
        if mats.iter().any(|m| m.dim != first.dim) {
            return Err(Error::MalformedTuple("matrices differ in dimension".into()));
        }
        Ok(Self { mats })
    }

    pub fn n(&self) -> usize {
        self.mats.len()
    }

    pub fn dim(&self) -> usize {
        self.mats[0].dim
    }

    pub fn mats(&self) -> &[RatMatrix] {
        &self.mats
    }

    /// The tuple with `x_i` read as `M_{i+power}`, i.e. the group acting on the variables.
    pub fn shifted(&self, power: usize) -> Self {
        let n = self.n();
        Self {
            mats: (0..n).map(|i| self.mats[(i + power) % n].clone()).collect(),
        }
    }

    /// Substitutes `M_i` for `x_i`.
    pub fn eval(&self, p: &Polynomial) -> Result<RatMatrix> {
        if p.arity() != self.n() {
            return Err(Error::ArityMismatch {
                left: self.n(),
                right: p.arity(),
            });
        }
        let mut out = RatMatrix::zero(self.dim());
        for (m, c) in p.terms() {
            let mut prod = RatMatrix::identity(self.dim());
            for (i, e) in m.runs() {
                prod = prod.mul(&self.mats[i - 1].pow(e));
            }
            out = out.add(&prod.scale(c));
        }
        Ok(out)
    }
}

pub fn eval_sigma_matrices(t: &MatrixTuple, k: usize) -> Result<RatMatrix> {
    if k > t.n() {
        return Err(Error::OutOfRange {
            what: "k",
            detail: format!("{k} not in 0..={}", t.n()),
        });
    }
    if k == 0 {
        return Ok(RatMatrix::identity(t.dim()));
    }
    t.eval(&build_sigma(t.n(), k as i64))
}

/// `(invariant, commuting)`: whether every `sigma_k(t)` is unchanged by the group,
/// and whether every `sigma_k(t)` commutes with every `M_i`. The two must agree.
pub fn check_c12(t: &MatrixTuple) -> Result<(bool, bool)> {
    let n = t.n();
    let sigmas: Vec<RatMatrix> = (1..=n).map(|k| eval_sigma_matrices(t, k)).collect::<Result<_>>()?;
    let mut invariant = true;
    for power in 1..n {
        let s = t.shifted(power);
        for (k, sk) in sigmas.iter().enumerate() {
            if eval_sigma_matrices(&s, k + 1)? != *sk {
                invariant = false;
            }
        }
    }
    let commuting = sigmas.iter().all(|s| t.mats.iter().all(|m| s.commutator(m).is_zero()));
    if invariant != commuting {
        return Err(Error::EquivalenceViolated { invariant, commuting });
    }
    Ok((invariant, commuting))
}

/// Structured families of random tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Diagonal matrices.
    Commuting,
    /// `M_i = U^-(i-1) X U^(i-1)` with `U` the cyclic shift.
    ConjCyclic,
    /// Upper-triangular matrices.
    BlockUpper,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Commuting, Family::ConjCyclic, Family::BlockUpper];

    pub fn name(self) -> &'static str {
        match self {
            Family::Commuting => "commuting",
            Family::ConjCyclic => "conj-cyclic",
            Family::BlockUpper => "block-upper",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::OutOfRange {
                what: "family",
                detail: format!("`{s}` is not one of commuting, conj-cyclic, block-upper"),
            })
    }
}

#[derive(Clone, Debug)]
pub struct SearchParams {
    pub n: usize,
    pub dim: usize,
    pub family: Family,
    pub seed: u64,
    pub budget: usize,
}

fn random_entry(rng: &mut ChaCha8Rng) -> Coefficient {
    Coefficient::from_integer(rng.gen_range(-3i64..=3).into())
}

fn random_matrix(rng: &mut ChaCha8Rng, dim: usize, upper: bool) -> RatMatrix {
    let mut m = RatMatrix::zero(dim);
    for i in 0..dim {
        for j in 0..dim {
            if !upper || j >= i {
                m.entries[i * dim + j] = random_entry(rng);
            }
        }
    }
    m
}

/// The `index`-th tuple of a family; independent of how many others are drawn.
pub fn family_member(params: &SearchParams, index: usize) -> MatrixTuple {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(index as u64);
    let (n, dim) = (params.n, params.dim);
    let mats = match params.family {
        Family::Commuting => (0..n)
            .map(|_| {
                let diag: Vec<Coefficient> = (0..dim).map(|_| random_entry(&mut rng)).collect();
                RatMatrix::diagonal(&diag)
            })
            .collect(),
        Family::ConjCyclic => {
            let x = random_matrix(&mut rng, dim, false);
            let u = RatMatrix::cyclic_shift(dim);
            let u_inv = u.transpose();
            (0..n)
                .map(|i| u_inv.pow(i as u32).mul(&x).mul(&u.pow(i as u32)))
                .collect()
        }
        Family::BlockUpper => (0..n).map(|_| random_matrix(&mut rng, dim, true)).collect(),
    };
    MatrixTuple::new(mats).expect("family members are well formed")
}

/// A tuple satisfying the relations with at least one non-commuting pair.
#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub index: usize,
    pub mats: Vec<Vec<Vec<String>>>,
    /// `(i, j, k, l)` with `[M_i, M_j][M_k, M_l] = 0`.
    pub vanishing_products: Vec<(usize, usize, usize, usize)>,
    /// Smallest rank among the products of two nonzero commutators.
    pub min_product_rank: usize,
    pub singular_product: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub dim: usize,
    pub family: Family,
    pub seed: u64,
    pub budget: usize,
    pub tried: usize,
    pub satisfying_relations: usize,
    pub candidates: Vec<Candidate>,
    pub budget_exhausted: bool,
}

/// Whether `t` satisfies the relations, and the candidate it yields if any.
fn examine(t: &MatrixTuple, index: usize) -> Result<(bool, Option<Candidate>)> {
    let (invariant, _) = check_c12(t)?;
    if !invariant {
        return Ok((false, None));
    }
    let n = t.n();
    let mut commutators = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let c = t.mats[i - 1].commutator(&t.mats[j - 1]);
            if !c.is_zero() {
                commutators.push(((i, j), c));
            }
        }
    }
    if commutators.is_empty() {
        return Ok((true, None));
    }
    let mut vanishing = Vec::new();
    let mut min_rank = t.dim();
    for ((i, j), a) in &commutators {
        for ((k, l), b) in &commutators {
            let p = a.mul(b);
            let r = p.rank();
            min_rank = min_rank.min(r);
            if r == 0 {
                vanishing.push((*i, *j, *k, *l));
            }
        }
    }
    Ok((
        true,
        Some(Candidate {
            index,
            mats: t.mats.iter().map(RatMatrix::to_strings).collect(),
            vanishing_products: vanishing,
            min_product_rank: min_rank,
            singular_product: min_rank < t.dim(),
        }),
    ))
}

/// Looks for tuples satisfying the relations in which a product of commutators is
/// zero or singular. Output order depends only on the parameters.
pub fn zero_divisor_search(params: &SearchParams) -> Result<SearchReport> {
    if params.n == 0 || params.dim == 0 {
        return Err(Error::OutOfRange {
            what: "search",
            detail: "n and dim must be positive".into(),
        });
    }
    let results: Vec<(bool, Option<Candidate>)> = (0..params.budget)
        .into_par_iter()
        .map(|index| examine(&family_member(params, index), index))
        .collect::<Result<_>>()?;
    let satisfying = results.iter().filter(|(inv, _)| *inv).count();
    let candidates: Vec<Candidate> = results.into_iter().filter_map(|(_, c)| c).collect();
    Ok(SearchReport {
        n: params.n,
        dim: params.dim,
        family: params.family,
        seed: params.seed,
        budget: params.budget,
        tried: params.budget,
        satisfying_relations: satisfying,
        budget_exhausted: candidates.is_empty() && params.budget > 0,
        candidates,
    })
}
