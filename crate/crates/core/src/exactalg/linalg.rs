//! Exact Gaussian elimination over the rationals.
//!
//! The workhorse is [`Echelon`], an incrementally built row echelon form over
//! sparse rows. The structure-map matrices met in practice are very sparse
//! with entries in `{-1, 0, 1}`, so rows are kept sparse throughout.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// `(column, value)` pairs sorted by column, with no zero values.
pub type SparseRow = Vec<(usize, Rational)>;

pub fn sparse_from_dense(dense: &[Rational]) -> SparseRow {
    dense.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect()
}

pub fn dense_from_sparse(row: &SparseRow, len: usize) -> Vec<Rational> {
    let mut dense = vec![Rational::zero(); len];
    for (i, v) in row {
        dense[*i] = v.clone();
    }
    dense
}

/// `a - c·b`.
fn sub_scaled(a: &SparseRow, c: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    let lead = row[0].1.clone();
    if !lead.is_one() {
        let inv = lead.recip();
        for (_, v) in row.iter_mut() {
            *v *= &inv;
        }
    }
}

/// Row echelon form over `ncols` columns, keyed by pivot column. Every stored
/// row has leading coefficient 1.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Eliminates leading entries until the lead is not a pivot column.
    fn reduce_leading(&self, mut row: SparseRow) -> SparseRow {
        while let Some((lead, c)) = row.first() {
            match self.rows.get(lead) {
                Some(pivot) => {
                    let c = c.clone();
                    row = sub_scaled(&row, &c, pivot);
                }
                None => break,
            }
        }
        row
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.iter().all(|(c, v)| *c < self.ncols && !v.is_zero()));
        let mut row = self.reduce_leading(row);
        if row.is_empty() {
            return false;
        }
        normalize(&mut row);
        self.rows.insert(row[0].0, row);
        true
    }

    pub fn insert_dense(&mut self, row: &[Rational]) -> bool {
        self.insert(sparse_from_dense(row))
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce_leading(row).is_empty()
    }

    /// Reduced row echelon form: pivot rows in increasing pivot order, each
    /// with zeros in every other pivot column.
    pub fn rref(&self) -> Vec<SparseRow> {
        let mut reduced: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut acc = dense_from_sparse(row, self.ncols);
            for (c, _) in row.iter().skip(1) {
                if let Some(other) = reduced.get(c) {
                    let v = acc[*c].clone();
                    if v.is_zero() {
                        continue;
                    }
                    for (k, w) in other {
                        acc[*k] -= &v * w;
                    }
                }
            }
            reduced.insert(p, sparse_from_dense(&acc));
        }
        reduced.into_values().collect()
    }

    /// Basis of `{v : r·v = 0 for every row r}`. The basis vector for free
    /// column `f` has a 1 at `f` and 0 at every other free column; vectors come
    /// in increasing order of `f`.
    pub fn kernel(&self) -> Vec<SparseRow> {
        let mut kernel: BTreeMap<usize, SparseRow> =
            (0..self.ncols).filter(|c| !self.rows.contains_key(c)).map(|f| (f, Vec::new())).collect();
        for row in self.rref() {
            let p = row[0].0;
            for (f, a) in row.iter().skip(1) {
                kernel.get_mut(f).expect("non-pivot entry in rref").push((p, -a.clone()));
            }
        }
        kernel
            .into_iter()
            .map(|(f, mut v)| {
                v.push((f, Rational::one()));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }
}

/// Dense rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Rational>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![vec![Rational::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i][i] = Rational::one();
        }
        m
    }

    pub fn from_rows(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(QMatrix { rows: entries.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r][c] = v;
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self.entries.iter().map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect())
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for row in &self.entries {
            e.insert_dense(row);
        }
        e
    }
}

/// Kernel basis as dense columns, in the normal form of [`Echelon::kernel`].
pub fn qmatrix_kernel(m: &QMatrix) -> Vec<Vec<Rational>> {
    m.echelon().kernel().iter().map(|v| dense_from_sparse(v, m.cols)).collect()
}

pub fn qmatrix_rank(m: &QMatrix) -> usize {
    m.echelon().rank()
}

/// Whether `v` is a linear combination of `basis`.
pub fn span_contains(basis: &[Vec<Rational>], v: &[Rational]) -> Result<bool> {
    if let Some(bad) = basis.iter().find(|b| b.len() != v.len()) {
        return Err(Error::DimensionMismatch(format!(
            "basis vector of length {} against vector of length {}",
            bad.len(),
            v.len()
        )));
    }
    let mut e = Echelon::new(v.len());
    for b in basis {
        e.insert_dense(b);
    }
    Ok(e.contains(sparse_from_dense(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;
    use proptest::prelude::*;

    fn ints(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = QMatrix::identity(3);
        assert!(qmatrix_kernel(&m).is_empty());
        assert_eq!(qmatrix_rank(&m), 3);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = QMatrix::zeros(2, 5);
        assert_eq!(qmatrix_kernel(&m).len(), 5);
        assert_eq!(qmatrix_rank(&m), 0);
    }

    #[test]
    fn kernel_normal_form() {
        let m = ints(&[&[1, 2, 0, 3], &[2, 4, 1, 7]]);
        let k = qmatrix_kernel(&m);
        assert_eq!(
            k,
            vec![vec![rat(-2, 1), rat(1, 1), rat(0, 1), rat(0, 1)], vec![rat(-3, 1), rat(0, 1), rat(-1, 1), rat(1, 1)],]
        );
    }

    #[test]
    fn span_membership() {
        let basis = vec![vec![rat(1, 1), rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1), rat(1, 1)]];
        assert!(span_contains(&basis, &[rat(1, 1), rat(0, 1), rat(-1, 1)]).unwrap());
        assert!(!span_contains(&basis, &[rat(1, 1), rat(0, 1), rat(0, 1)]).unwrap());
        assert!(span_contains(&basis, &[rat(1, 1)]).is_err());
    }

    #[test]
    fn mul_vec_dimension_mismatch() {
        assert!(QMatrix::identity(2).mul_vec(&[rat(1, 1)]).is_err());
        assert!(QMatrix::from_rows(vec![vec![rat(1, 1)], vec![]]).is_err());
    }

    proptest! {
        #[test]
        fn kernel_is_annihilated_and_rank_nullity(
            rows in 0usize..6,
            cols in 1usize..7,
            seed in prop::collection::vec(-3i64..4, 42),
        ) {
            let entries: Vec<Vec<Rational>> = (0..rows)
                .map(|r| (0..cols).map(|c| rat(seed[r * 7 + c], 1)).collect())
                .collect();
            let m = QMatrix::from_rows(entries).unwrap_or(QMatrix::zeros(0, cols));
            let m = if m.cols() == cols { m } else { QMatrix::zeros(0, cols) };
            let kernel = qmatrix_kernel(&m);
            prop_assert_eq!(kernel.len() + qmatrix_rank(&m), cols);
            for v in &kernel {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
        }
    }
}
