//! Homogeneous ideal membership in the free ring at bounded degree.
//!
//! The degree-`d` part of a two-sided ideal generated by homogeneous `g` is
//! spanned by the products `u g v` with words `u`, `v` and
//! `deg u + deg v + deg g = d`. Those products are written in the word basis
//! (descending Wolf order) and reduced to a canonical row-echelon form, which
//! decides membership and span equality exactly.

mod checks;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::cyclic::shift;
use crate::freering::{decode_word, encode_word, enumerate_basis_words, Coefficient, Monomial, Polynomial};
use crate::linalg::{normalize_row, Echelon, Rref, SparseRow, TrackedEchelon};
use crate::sigma::{abelianize, build_sigma};
use crate::{Error, Result};

pub(crate) use checks::quadratic_basis_polys;
pub use checks::{
    canonical_quadratic, default_max_degree, expand_diagonal_commutator, off_diagonal_pairs, quotient_dim, run_check,
    DiagonalExpansion, Eq4Reading, QuadraticForm, CHECK_NAMES,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `[x_i, sigma_k]`, `1 <= i, k <= n`.
    Comm,
    /// `sigma_k - sigma_k^g`, `1 <= k <= n`, `g` in the circular group.
    Diff,
    Custom,
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::Comm => "comm",
            GeneratorKind::Diff => "diff",
            GeneratorKind::Custom => "custom",
        })
    }
}

/// A named list of homogeneous generators of a two-sided ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    kind: GeneratorKind,
    n: usize,
    generators: Vec<Polynomial>,
}

impl GeneratorSet {
    pub fn comm(n: usize) -> Self {
        let mut generators = Vec::new();
        for i in 1..=n {
            let x = Polynomial::var(n, i).expect("index in range");
            for k in 1..=n {
                let g = x.commutator(&build_sigma(n, k as i64));
                if !g.is_zero() {
                    generators.push(g);
                }
            }
        }
        Self {
            kind: GeneratorKind::Comm,
            n,
            generators,
        }
    }

    pub fn diff(n: usize) -> Self {
        let mut generators = Vec::new();
        for k in 1..=n {
            let s = build_sigma(n, k as i64);
            for power in 1..n {
                let g = &s - &shift(&s, power);
                if !g.is_zero() {
                    generators.push(g);
                }
            }
        }
        Self {
            kind: GeneratorKind::Diff,
            n,
            generators,
        }
    }

    /// The commutator ideal `J`, generated by all `[x_i, x_j]`.
    pub fn commutator_ideal(n: usize) -> Self {
        let mut generators = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                generators.push(Polynomial::bracket(n, i, j).expect("in range"));
            }
        }
        Self {
            kind: GeneratorKind::Custom,
            n,
            generators,
        }
    }

    pub fn custom(n: usize, generators: Vec<Polynomial>) -> Result<Self> {
        let mut kept = Vec::with_capacity(generators.len());
        for g in generators {
            if g.arity() != n {
                return Err(Error::ArityMismatch {
                    left: n,
                    right: g.arity(),
                });
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.degree().unwrap_or(0)));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Self {
            kind: GeneratorKind::Custom,
            n,
            generators: kept,
        })
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// The `n^d` words of degree `d` as columns, in descending Wolf order.
#[derive(Clone, Debug)]
pub struct WordBasis {
    n: usize,
    degree: u32,
    words: Vec<Monomial>,
    column_of_code: Vec<u32>,
}

impl WordBasis {
    pub fn new(n: usize, degree: u32) -> Self {
        let words = enumerate_basis_words(n, degree);
        let mut column_of_code = vec![0u32; words.len()];
        for (col, w) in words.iter().enumerate() {
            column_of_code[encode_word(n, w)] = col as u32;
        }
        Self {
            n,
            degree,
            words,
            column_of_code,
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Monomial] {
        &self.words
    }

    pub fn column(&self, m: &Monomial) -> usize {
        debug_assert_eq!(m.degree(), self.degree);
        self.column_of_code[encode_word(self.n, m)] as usize
    }

    /// Coordinates of the degree-`d` component of `p`; other degrees are ignored.
    pub fn to_row(&self, p: &Polynomial) -> SparseRow {
        let mut row: SparseRow = p
            .terms()
            .filter(|(m, _)| m.degree() == self.degree)
            .map(|(m, c)| (self.column(m), c.clone()))
            .collect();
        row.sort_by_key(|(c, _)| *c);
        row
    }

    pub fn to_poly(&self, row: &SparseRow) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for (c, v) in row {
            p.add_term(self.words[*c].clone(), v.clone());
        }
        p
    }
}

/// One spanning product `u * generator * v`, with `u`, `v` given by word codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Product {
    generator: usize,
    left_len: u32,
    left: usize,
    right_len: u32,
    right: usize,
}

struct GeneratorCodes {
    degree: u32,
    terms: Vec<(usize, Coefficient)>,
}

fn generator_codes(gens: &GeneratorSet) -> Vec<GeneratorCodes> {
    gens.generators
        .iter()
        .map(|g| GeneratorCodes {
            degree: g.degree().unwrap_or(0),
            terms: g.terms().map(|(m, c)| (encode_word(gens.n, m), c.clone())).collect(),
        })
        .collect()
}

fn spanning_products(gens: &[GeneratorCodes], n: usize, d: u32) -> Vec<Product> {
    let mut out = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if g.degree > d {
            continue;
        }
        let free = d - g.degree;
        for left_len in 0..=free {
            let right_len = free - left_len;
            for left in 0..n.pow(left_len) {
                for right in 0..n.pow(right_len) {
                    out.push(Product {
                        generator: gi,
                        left_len,
                        left,
                        right_len,
                        right,
                    });
                }
            }
        }
    }
    out
}

fn product_row(basis: &WordBasis, g: &GeneratorCodes, p: &Product) -> SparseRow {
    let n = basis.n;
    let shift_g = n.pow(p.right_len);
    let shift_u = n.pow(g.degree) * shift_g;
    let mut row: SparseRow = g
        .terms
        .iter()
        .map(|(code, c)| {
            let full = p.left * shift_u + code * shift_g + p.right;
            (basis.column_of_code[full] as usize, c.clone())
        })
        .collect();
    row.sort_by_key(|(c, _)| *c);
    row
}

/// The degree-`d` homogeneous part of an ideal as a canonical echelon basis.
#[derive(Clone, Debug)]
pub struct DegreeSlice {
    n: usize,
    degree: u32,
    basis: Arc<WordBasis>,
    rref: Rref,
}

impl DegreeSlice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &WordBasis {
        &self.basis
    }

    pub fn rref(&self) -> &Rref {
        &self.rref
    }

    pub fn rank(&self) -> usize {
        self.rref.rank()
    }

    /// Normal form of the degree-`d` component of `p` modulo the slice.
    pub fn residual(&self, p: &Polynomial) -> Polynomial {
        let row = self.basis.to_row(p);
        self.basis.to_poly(&self.rref.reduce(&row))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.rref.contains(&self.basis.to_row(p))
    }
}

pub fn degree_slice(gens: &GeneratorSet, d: u32) -> DegreeSlice {
    let basis = Arc::new(WordBasis::new(gens.n, d));
    let codes = generator_codes(gens);
    let products = spanning_products(&codes, gens.n, d);
    let mut rows: Vec<SparseRow> = products
        .par_iter()
        .map(|p| {
            let mut row = product_row(&basis, &codes[p.generator], p);
            normalize_row(&mut row);
            row
        })
        .collect();
    rows.sort();
    rows.dedup();
    let mut ech = Echelon::new(basis.len());
    for row in rows {
        ech.insert(row);
    }
    DegreeSlice {
        n: gens.n,
        degree: d,
        basis,
        rref: ech.into_rref(),
    }
}

/// `true` iff both generator sets span the same degree-`d` slice.
pub fn spans_equal(a: &GeneratorSet, b: &GeneratorSet, d: u32) -> bool {
    assert_eq!(a.n, b.n, "arity mismatch");
    degree_slice(a, d).rref == degree_slice(b, d).rref
}

/// `sum coeff * left * generators[generator] * right`.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateTerm {
    pub coeff: Coefficient,
    pub left: Monomial,
    pub generator: usize,
    pub right: Monomial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub terms: Vec<CertificateTerm>,
}

impl Certificate {
    pub fn evaluate(&self, gens: &GeneratorSet) -> Polynomial {
        let mut out = Polynomial::zero(gens.n);
        for t in &self.terms {
            let piece = gens.generators[t.generator].sandwich(&t.left, &t.right).scale(&t.coeff);
            out = &out + &piece;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    pub is_member: bool,
    /// Nonzero normal forms, by degree, of the components that are not in the ideal.
    pub residuals: BTreeMap<u32, Polynomial>,
    pub certificate: Option<Certificate>,
}

/// Membership oracle with a per-degree slice cache.
pub struct IdealOracle {
    gens: GeneratorSet,
    slices: Mutex<BTreeMap<u32, Arc<OnceLock<Arc<DegreeSlice>>>>>,
}

impl fmt::Debug for IdealOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdealOracle")
            .field("kind", &self.gens.kind)
            .field("n", &self.gens.n)
            .finish()
    }
}

impl IdealOracle {
    pub fn new(gens: GeneratorSet) -> Self {
        Self {
            gens,
            slices: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn comm(n: usize) -> Self {
        Self::new(GeneratorSet::comm(n))
    }

    pub fn n(&self) -> usize {
        self.gens.n
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn slice(&self, d: u32) -> Arc<DegreeSlice> {
        let cell = {
            let mut map = self.slices.lock().expect("slice cache poisoned");
            map.entry(d).or_default().clone()
        };
        cell.get_or_init(|| Arc::new(degree_slice(&self.gens, d))).clone()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.member(p, false).is_member
    }

    /// Componentwise membership test; `certify` also produces an explicit combination.
    pub fn member(&self, p: &Polynomial, certify: bool) -> Membership {
        assert_eq!(p.arity(), self.gens.n, "arity mismatch");
        let mut residuals = BTreeMap::new();
        for (d, comp) in p.homogeneous_components() {
            let r = self.slice(d).residual(&comp);
            if !r.is_zero() {
                residuals.insert(d, r);
            }
        }
        let is_member = residuals.is_empty();
        if is_member && self.gens.kind != GeneratorKind::Custom {
            debug_assert!(abelianize(p).is_zero(), "member of the ideal survives abelianization");
        }
        let certificate = (certify && is_member).then(|| self.certificate(p));
        Membership {
            is_member,
            residuals,
            certificate,
        }
    }

    fn certificate(&self, p: &Polynomial) -> Certificate {
        let n = self.gens.n;
        let codes = generator_codes(&self.gens);
        let mut terms = Vec::new();
        for (d, comp) in p.homogeneous_components() {
            let basis = WordBasis::new(n, d);
            let products = spanning_products(&codes, n, d);
            let mut ech = TrackedEchelon::new(basis.len());
            for (k, prod) in products.iter().enumerate() {
                if ech.rank() == self.slice(d).rank() {
                    break;
                }
                ech.insert(k, &product_row(&basis, &codes[prod.generator], prod));
            }
            let res = ech.reduce(&basis.to_row(&comp));
            assert!(res.residual.is_empty(), "member component must reduce to zero");
            for (k, coeff) in res.combination {
                let prod = &products[k];
                terms.push(CertificateTerm {
                    coeff,
                    left: Monomial::from_letters_unchecked(&decode_word(n, prod.left_len, prod.left)),
                    generator: prod.generator,
                    right: Monomial::from_letters_unchecked(&decode_word(n, prod.right_len, prod.right)),
                });
            }
        }
        Certificate { terms }
    }
}

/// One-shot membership against a generator set.
pub fn member(p: &Polynomial, gens: &GeneratorSet, certify: bool) -> Membership {
    IdealOracle::new(gens.clone()).member(p, certify)
}

/// Certifies `target` as a member via an explicit identity
/// `target = sum left_j * m_j * right_j` in the free ring, with every `m_j` certified
/// by the oracle. Avoids building slices above the degree of the `m_j`.
pub fn certify_by_multiples(
    oracle: &IdealOracle,
    target: &Polynomial,
    pieces: &[(Polynomial, Polynomial, Polynomial)],
) -> bool {
    let n = oracle.n();
    let mut sum = Polynomial::zero(n);
    for (left, m, right) in pieces {
        if !oracle.contains(m) {
            return false;
        }
        sum = &sum + &(&(left * m) * right);
    }
    sum == *target
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freering::parse_poly;

    #[test]
    fn low_degree_ranks() {
        let gens = GeneratorSet::comm(3);
        assert_eq!(degree_slice(&gens, 0).rank(), 0);
        assert_eq!(degree_slice(&gens, 1).rank(), 0);
        assert_eq!(degree_slice(&gens, 2).rank(), 2);
    }

    #[test]
    fn membership_examples() {
        let oracle = IdealOracle::comm(3);
        let a = parse_poly("x1*x2 - x2*x1 + x1*x3 - x3*x1", 3).unwrap();
        assert!(oracle.contains(&a));
        let not = parse_poly("x1*x3*x2 - x3*x2*x1", 3).unwrap();
        let m = oracle.member(&not, true);
        assert!(!m.is_member);
        assert_eq!(m.residuals.keys().copied().collect::<Vec<_>>(), [3]);
        assert!(m.certificate.is_none());
        assert!(oracle.contains(&Polynomial::zero(3)));
        assert!(!oracle.contains(&Polynomial::one(3)));
    }

    #[test]
    fn certificates_reconstruct_the_input() {
        let gens = GeneratorSet::comm(3);
        let oracle = IdealOracle::new(gens.clone());
        let p = parse_poly("x1*x2*x3 - x2*x3*x1 + x1*x2 - x2*x1 + x1*x3 - x3*x1", 3).unwrap();
        let m = oracle.member(&p, true);
        assert!(m.is_member);
        assert_eq!(m.certificate.unwrap().evaluate(&gens), p);
    }

    #[test]
    fn comm_and_diff_agree_at_low_degree() {
        for d in 0..=4 {
            assert!(spans_equal(&GeneratorSet::comm(3), &GeneratorSet::diff(3), d));
        }
    }

    #[test]
    fn custom_rejects_inhomogeneous() {
        let p = parse_poly("x1 + x1*x2", 3).unwrap();
        assert!(matches!(
            GeneratorSet::custom(3, vec![p]),
            Err(Error::NotHomogeneous(_))
        ));
    }
}
