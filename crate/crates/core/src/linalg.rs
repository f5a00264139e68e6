//! Exact rational Gaussian elimination on sparse rows.
//!
//! Pivoting is always on the first nonzero column, so the reduced row-echelon
//! form produced by [`Echelon::into_rref`] depends only on the row space and
//! the column order, never on the order rows were inserted in.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Coefficient;

/// Sorted `(column, value)` pairs with no zero values.
pub type SparseRow = Vec<(usize, Coefficient)>;

pub fn normalize_row(row: &mut SparseRow) {
    row.retain(|(_, v)| !v.is_zero());
    row.sort_by_key(|(c, _)| *c);
    if let Some((_, lead)) = row.first() {
        if !lead.is_one() {
            let inv = lead.recip();
            for (_, v) in row.iter_mut() {
                *v *= &inv;
            }
        }
    }
}

fn to_dense(ncols: usize, row: &SparseRow) -> Vec<Coefficient> {
    let mut acc = vec![Coefficient::zero(); ncols];
    for (c, v) in row {
        acc[*c] = v.clone();
    }
    acc
}

fn to_sparse(acc: Vec<Coefficient>) -> SparseRow {
    acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
}

/// Incrementally built row-echelon basis of a subspace of `Q^ncols`.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_dense(&self, acc: &mut [Coefficient]) {
        for c in 0..self.ncols {
            if acc[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let f = acc[c].clone();
                for (j, v) in &self.rows[r] {
                    acc[*j] -= &f * v;
                }
            }
        }
    }

    /// The residual of `row` after eliminating every pivot column.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        if row.is_empty() {
            return Vec::new();
        }
        let mut acc = to_dense(self.ncols, row);
        self.reduce_dense(&mut acc);
        to_sparse(acc)
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds `row` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut residual = self.reduce(&row);
        if residual.is_empty() {
            return false;
        }
        normalize_row(&mut residual);
        let pivot = residual[0].0;
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(residual);
        true
    }

    /// Reduced row-echelon form, rows ordered by pivot column.
    pub fn into_rref(self) -> Rref {
        let ncols = self.ncols;
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let mut pivot_row = vec![None; ncols];
        for (i, r) in rows.iter().enumerate() {
            pivot_row[r[0].0] = Some(i);
        }
        for i in (0..rows.len()).rev() {
            let needs_work = rows[i][1..].iter().any(|(c, _)| pivot_row[*c].is_some());
            if !needs_work {
                continue;
            }
            let mut acc = to_dense(ncols, &rows[i]);
            let lead = rows[i][0].0;
            for c in lead + 1..ncols {
                if acc[c].is_zero() {
                    continue;
                }
                if let Some(r) = pivot_row[c] {
                    let f = acc[c].clone();
                    for (j, v) in &rows[r] {
                        acc[*j] -= &f * v;
                    }
                }
            }
            rows[i] = to_sparse(acc);
        }
        Rref {
            echelon: Echelon { ncols, rows, pivot_row },
        }
    }
}

/// A reduced row-echelon basis; two subspaces are equal iff their `Rref`s are.
#[derive(Clone, Debug)]
pub struct Rref {
    echelon: Echelon,
}

impl Rref {
    pub fn ncols(&self) -> usize {
        self.echelon.ncols
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.echelon.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.echelon.rows.iter().map(|r| r[0].0).collect()
    }

    /// Canonical normal form of `row` modulo the row space.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        self.echelon.reduce(row)
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.echelon.contains(row)
    }

    pub fn as_echelon(&self) -> &Echelon {
        &self.echelon
    }
}

impl PartialEq for Rref {
    fn eq(&self, other: &Self) -> bool {
        self.echelon.ncols == other.echelon.ncols && self.echelon.rows == other.echelon.rows
    }
}

impl Eq for Rref {}

fn add_scaled(into: &mut BTreeMap<usize, Coefficient>, from: &BTreeMap<usize, Coefficient>, f: &Coefficient) {
    for (k, v) in from {
        let slot = into.entry(*k).or_insert_with(Coefficient::zero);
        *slot += f * v;
        if slot.is_zero() {
            into.remove(k);
        }
    }
}

/// Echelon form that remembers how each basis row was built from the inputs.
#[derive(Clone, Debug)]
pub struct TrackedEchelon {
    ncols: usize,
    rows: Vec<(SparseRow, BTreeMap<usize, Coefficient>)>,
    pivot_row: Vec<Option<usize>>,
}

/// Result of reducing a vector while tracking the combination used.
#[derive(Clone, Debug)]
pub struct TrackedResidual {
    pub residual: SparseRow,
    /// `input = residual + sum combination[k] * source_k`.
    pub combination: BTreeMap<usize, Coefficient>,
}

impl TrackedEchelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, row: &SparseRow) -> TrackedResidual {
        let mut acc = to_dense(self.ncols, row);
        let mut combo = BTreeMap::new();
        for c in 0..self.ncols {
            if acc[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let f = acc[c].clone();
                let (basis, how) = &self.rows[r];
                for (j, v) in basis {
                    acc[*j] -= &f * v;
                }
                add_scaled(&mut combo, how, &f);
            }
        }
        TrackedResidual {
            residual: to_sparse(acc),
            combination: combo,
        }
    }

    /// Inserts source vector `source`; returns the kernel relation if it was dependent,
    /// expressed as a combination of sources summing to zero.
    pub fn insert(&mut self, source: usize, row: &SparseRow) -> Option<BTreeMap<usize, Coefficient>> {
        let TrackedResidual {
            mut residual,
            combination,
        } = self.reduce(row);
        // residual = row - sum combination
        let mut how: BTreeMap<usize, Coefficient> = combination.into_iter().map(|(k, v)| (k, -v)).collect();
        how.insert(source, Coefficient::one());
        if residual.is_empty() {
            return Some(how);
        }
        let lead = residual[0].1.clone();
        normalize_row(&mut residual);
        let inv = lead.recip();
        for v in how.values_mut() {
            *v *= &inv;
        }
        let pivot = residual[0].0;
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push((residual, how));
        None
    }
}

/// Coefficients `a` with `sum a_k vectors[k] = target`, if any exist.
/// When several exist the one produced by first-column pivoting is returned.
pub fn solve_combination(ncols: usize, vectors: &[SparseRow], target: &SparseRow) -> Option<Vec<Coefficient>> {
    let mut ech = TrackedEchelon::new(ncols);
    for (k, v) in vectors.iter().enumerate() {
        ech.insert(k, v);
    }
    let res = ech.reduce(target);
    if !res.residual.is_empty() {
        return None;
    }
    let mut out = vec![Coefficient::zero(); vectors.len()];
    for (k, v) in res.combination {
        out[k] = v;
    }
    Some(out)
}

/// A basis of `{a : sum a_k images[k] = 0}`.
pub fn kernel(ncols: usize, images: &[SparseRow]) -> Vec<Vec<Coefficient>> {
    let mut ech = TrackedEchelon::new(ncols);
    let mut out = Vec::new();
    for (k, v) in images.iter().enumerate() {
        if let Some(rel) = ech.insert(k, v) {
            let mut dense = vec![Coefficient::zero(); images.len()];
            for (i, c) in rel {
                dense[i] = c;
            }
            out.push(dense);
        }
    }
    out
}

pub fn rank(ncols: usize, rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}
