//! Sparse and dense integer matrices.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

use super::ring::Ring;

/// A sparse matrix with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), BigInt>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::from(1));
        }
        m
    }

    /// Adds `v` to entry `(r, c)` in `ring`, dropping it if it becomes zero.
    pub fn add_entry(&mut self, ring: Ring, r: usize, c: usize, v: &BigInt) {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) outside {}x{}", self.rows, self.cols);
        let cur = self.entries.remove(&(r, c)).unwrap_or_default();
        let s = ring.add(&cur, v);
        if !s.is_zero() {
            self.entries.insert((r, c), s);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), v.clone())).collect(),
        }
    }

    pub fn scale(&self, ring: Ring, s: &BigInt) -> Self {
        let mut out = Self::zero(self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            out.add_entry(ring, r, c, &(v * s));
        }
        out
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, ring: Ring, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut by_row: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (&(r, c), v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for (&(r, k), a) in &self.entries {
            for &(c, b) in &by_row[k] {
                out.add_entry(ring, r, c, &(a * b));
            }
        }
        out
    }

    pub fn apply(&self, ring: Ring, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![BigInt::zero(); self.rows];
        for (&(r, c), a) in &self.entries {
            if !v[c].is_zero() {
                out[r] = ring.add(&out[r], &(a * &v[c]));
            }
        }
        out
    }

    /// Nonzero entries grouped by column.
    pub fn columns(&self) -> Vec<Vec<(usize, BigInt)>> {
        let mut out = vec![Vec::new(); self.cols];
        for (&(r, c), v) in &self.entries {
            out[c].push((r, v.clone()));
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            d[r][c] = v.clone();
        }
        d
    }

    pub fn from_dense(ring: Ring, d: &[Vec<BigInt>], cols: usize) -> Self {
        let mut m = Self::zero(d.len(), cols);
        for (r, row) in d.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.add_entry(ring, r, c, v);
            }
        }
        m
    }

    pub fn from_i64(ring: Ring, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let d: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_dense(ring, &d, cols)
    }
}
