//! Deterministic Smith normal form with unimodular certificates.
//!
//! Pivots are chosen by smallest size, then fewest nonzeros in the pivot row,
//! then fewest in the pivot column, then position. Over a prime field every
//! nonzero entry has size 1, so the same loop performs Gauss–Jordan elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::SparseMatrix;
use super::ring::Ring;

type Dense = Vec<Vec<BigInt>>;

fn identity(n: usize) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Result of a Smith normal form computation `left * m * right = diag`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub ring: Ring,
    pub rows: usize,
    pub cols: usize,
    /// Nonzero diagonal entries, each dividing the next.
    pub diag: Vec<BigInt>,
    pub left: Option<Dense>,
    pub left_inv: Option<Dense>,
    pub right: Option<Dense>,
    pub right_inv: Option<Dense>,
    /// True when the ring is a field and the result is a plain rank computation.
    pub field_path: bool,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Invariant factors greater than one (torsion of the cokernel over Z).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

struct Work {
    ring: Ring,
    a: Dense,
    l: Option<Dense>,
    linv: Option<Dense>,
    r: Option<Dense>,
    rinv: Option<Dense>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(l) = &mut self.l {
            l.swap(i, j);
        }
        if let Some(li) = &mut self.linv {
            for row in li.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(r) = &mut self.r {
            for row in r.iter_mut() {
                row.swap(i, j);
            }
        }
        if let Some(ri) = &mut self.rinv {
            ri.swap(i, j);
        }
    }

    /// row_i += q * row_t
    fn add_row(&mut self, i: usize, t: usize, q: &BigInt) {
        let ring = self.ring;
        let (src, dst) = borrow2(&mut self.a, t, i);
        axpy(ring, dst, src, q);
        if let Some(l) = &mut self.l {
            let (src, dst) = borrow2(l, t, i);
            axpy(ring, dst, src, q);
        }
        if let Some(li) = &mut self.linv {
            // col_t -= q * col_i
            let nq = -q;
            for row in li.iter_mut() {
                if !row[i].is_zero() {
                    let v = ring.add(&row[t], &(&nq * &row[i]));
                    row[t] = v;
                }
            }
        }
    }

    /// col_j += q * col_t
    fn add_col(&mut self, j: usize, t: usize, q: &BigInt) {
        let ring = self.ring;
        for row in self.a.iter_mut() {
            if !row[t].is_zero() {
                let v = ring.add(&row[j], &(q * &row[t]));
                row[j] = v;
            }
        }
        if let Some(r) = &mut self.r {
            for row in r.iter_mut() {
                if !row[t].is_zero() {
                    let v = ring.add(&row[j], &(q * &row[t]));
                    row[j] = v;
                }
            }
        }
        if let Some(ri) = &mut self.rinv {
            // row_t -= q * row_j
            let (src, dst) = borrow2(ri, j, t);
            axpy(ring, dst, src, &-q);
        }
    }

    fn scale_row(&mut self, t: usize, u: &BigInt) {
        let ring = self.ring;
        for v in self.a[t].iter_mut() {
            *v = ring.mul(v, u);
        }
        if let Some(l) = &mut self.l {
            for v in l[t].iter_mut() {
                *v = ring.mul(v, u);
            }
        }
        if let Some(li) = &mut self.linv {
            let ui = ring.inverse(u);
            for row in li.iter_mut() {
                row[t] = ring.mul(&row[t], &ui);
            }
        }
    }
}

fn borrow2(m: &mut Dense, src: usize, dst: usize) -> (&Vec<BigInt>, &mut Vec<BigInt>) {
    assert_ne!(src, dst);
    if src < dst {
        let (a, b) = m.split_at_mut(dst);
        (&a[src], &mut b[0])
    } else {
        let (a, b) = m.split_at_mut(src);
        (&b[0], &mut a[dst])
    }
}

fn axpy(ring: Ring, dst: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = ring.add(d, &(q * s));
        }
    }
}

/// Smith normal form of `m` over `ring`. With `track`, all four change-of-basis
/// matrices are returned.
pub fn smith_normal_form(m: &SparseMatrix, ring: Ring, track: bool) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut w = Work {
        ring,
        a: m.to_dense(),
        l: track.then(|| identity(rows)),
        linv: track.then(|| identity(rows)),
        r: track.then(|| identity(cols)),
        rinv: track.then(|| identity(cols)),
    };
    for row in w.a.iter_mut() {
        for v in row.iter_mut() {
            *v = ring.normalize(v.clone());
        }
    }
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = choose_pivot(&w.a, ring, t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let (q, r) = ring.div_rem(&w.a[i][t], &w.a[t][t]);
                    w.add_row(i, t, &-q);
                    if !r.is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let (q, r) = ring.div_rem(&w.a[t][j], &w.a[t][t]);
                    w.add_col(j, t, &-q);
                    if !r.is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // Move the smallest remaining entry of row t / column t into the pivot.
                let mut best: Option<(BigInt, bool, usize)> = None;
                for i in t + 1..rows {
                    if !w.a[i][t].is_zero() {
                        let s = ring.pivot_size(&w.a[i][t]);
                        if best.as_ref().map_or(true, |b| s < b.0) {
                            best = Some((s, true, i));
                        }
                    }
                }
                for j in t + 1..cols {
                    if !w.a[t][j].is_zero() {
                        let s = ring.pivot_size(&w.a[t][j]);
                        if best.as_ref().map_or(true, |b| s < b.0) {
                            best = Some((s, false, j));
                        }
                    }
                }
                if let Some((s, is_row, k)) = best {
                    if s < ring.pivot_size(&w.a[t][t]) {
                        if is_row {
                            w.swap_rows(t, k);
                        } else {
                            w.swap_cols(t, k);
                        }
                    }
                }
                continue;
            }
            // Divisibility: the pivot must divide every remaining entry.
            if let Some(i) = nondivisible_row(&w.a, ring, t) {
                w.add_row(t, i, &BigInt::one());
                continue;
            }
            break;
        }
        let u = ring.canonical_unit(&w.a[t][t]);
        if !u.is_one() {
            w.scale_row(t, &u);
        }
        diag.push(w.a[t][t].clone());
        t += 1;
    }
    Snf {
        ring,
        rows,
        cols,
        diag,
        left: w.l,
        left_inv: w.linv,
        right: w.r,
        right_inv: w.rinv,
        field_path: ring.is_field(),
    }
}

fn choose_pivot(a: &Dense, ring: Ring, t: usize) -> Option<(usize, usize)> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let row_counts: Vec<usize> = (0..rows)
        .map(|i| if i < t { 0 } else { a[i][t..].iter().filter(|v| !v.is_zero()).count() })
        .collect();
    let mut col_counts = vec![0usize; cols];
    for row in a.iter().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() {
                col_counts[j] += 1;
            }
        }
    }
    let mut best: Option<((BigInt, usize, usize, usize, usize), usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            let key = (ring.pivot_size(v), row_counts[i], col_counts[j], i, j);
            if best.as_ref().map_or(true, |b| key < b.0) {
                best = Some((key, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn nondivisible_row(a: &Dense, ring: Ring, t: usize) -> Option<usize> {
    if ring.is_field() {
        return None;
    }
    let p = &a[t][t];
    for (i, row) in a.iter().enumerate().skip(t + 1) {
        for v in row.iter().skip(t + 1) {
            if !v.is_zero() && !(v % p).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

/// Rank of a matrix over `ring` (rank over the fraction field for Z).
pub fn rank(m: &SparseMatrix, ring: Ring) -> usize {
    smith_normal_form(m, ring, false).rank()
}

/// Dense product helper used by certificate checks.
pub fn dense_mul(ring: Ring, a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let k = b.len();
    let c = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![BigInt::zero(); c]; n];
    for i in 0..n {
        for (l, av) in a[i].iter().enumerate().take(k) {
            if av.is_zero() {
                continue;
            }
            for j in 0..c {
                if !b[l][j].is_zero() {
                    out[i][j] = ring.add(&out[i][j], &(av * &b[l][j]));
                }
            }
        }
    }
    out
}

/// Checks `left * m * right == diag` and that the inverses are inverses.
pub fn verify_snf(m: &SparseMatrix, s: &Snf) -> bool {
    let ring = s.ring;
    let (Some(l), Some(li), Some(r), Some(ri)) = (&s.left, &s.left_inv, &s.right, &s.right_inv) else {
        return false;
    };
    let prod = dense_mul(ring, &dense_mul(ring, l, &m.to_dense()), r);
    for (i, row) in prod.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let want = if i == j && i < s.diag.len() { s.diag[i].clone() } else { BigInt::zero() };
            if *v != want {
                return false;
            }
        }
    }
    let is_id = |d: &Dense| {
        d.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| *v == if i == j { BigInt::one() } else { BigInt::zero() })
        })
    };
    if !is_id(&dense_mul(ring, l, li)) || !is_id(&dense_mul(ring, r, ri)) {
        return false;
    }
    s.diag.windows(2).all(|w| ring.is_field() || (&w[1] % &w[0]).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let m = SparseMatrix::from_i64(Ring::Integers, &[&[2, 4], &[6, 8]]);
        let s = smith_normal_form(&m, Ring::Integers, true);
        assert_eq!(s.diag, vec![BigInt::from(2), BigInt::from(4)]);
        assert!(verify_snf(&m, &s));
    }

    #[test]
    fn zero_and_identity() {
        let z = SparseMatrix::zero(3, 2);
        assert!(smith_normal_form(&z, Ring::Integers, true).diag.is_empty());
        let i = SparseMatrix::identity(3);
        let s = smith_normal_form(&i, Ring::Integers, true);
        assert_eq!(s.diag, vec![BigInt::one(); 3]);
        assert!(verify_snf(&i, &s));
    }

    #[test]
    fn divisibility_repair() {
        // diag(2,3) must become diag(1,6)
        let m = SparseMatrix::from_i64(Ring::Integers, &[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&m, Ring::Integers, true);
        assert_eq!(s.diag, vec![BigInt::one(), BigInt::from(6)]);
        assert!(verify_snf(&m, &s));
    }

    #[test]
    fn modular_rank() {
        let m = SparseMatrix::from_i64(Ring::Mod(2), &[&[2, 4], &[6, 8]]);
        assert_eq!(rank(&m, Ring::Mod(2)), 0);
        let m = SparseMatrix::from_i64(Ring::Mod(3), &[&[1, 2], &[2, 1]]);
        let s = smith_normal_form(&m, Ring::Mod(3), true);
        assert_eq!(s.rank(), 1);
        assert!(verify_snf(&m, &s));
    }
}
