//! Homology via Smith normal form, with cycle representatives and projection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

use super::complex::{check_complex, ChainComplex};
use super::matrix::SparseMatrix;
use super::ring::Ring;
use super::snf::{smith_normal_form, Snf};
use crate::error::Result;

/// Homology of a complex in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDegree {
    pub degree: i64,
    pub rank: usize,
    /// Invariant factors > 1, each dividing the next.
    pub torsion: Vec<BigInt>,
}

/// Per-degree free ranks and torsion.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologySummary {
    pub degrees: BTreeMap<i64, HomologyDegree>,
}

impl HomologySummary {
    pub fn rank(&self, k: i64) -> usize {
        self.degrees.get(&k).map_or(0, |d| d.rank)
    }

    pub fn torsion(&self, k: i64) -> Vec<BigInt> {
        self.degrees.get(&k).map_or(Vec::new(), |d| d.torsion.clone())
    }

    /// Degrees with nonzero homology.
    pub fn support(&self) -> Vec<i64> {
        self.degrees
            .values()
            .filter(|d| d.rank > 0 || !d.torsion.is_empty())
            .map(|d| d.degree)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.degrees
                .values()
                .map(|d| {
                    json!({
                        "degree": d.degree,
                        "rank": d.rank,
                        "torsion": d.torsion.iter().map(|t| t.to_string().parse::<i64>().unwrap_or(0)).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

/// Ranks and torsion of `H(c)`; errors if `d∘d ≠ 0`.
pub fn homology(c: &ChainComplex) -> Result<HomologySummary> {
    check_complex(c)?;
    let degrees: Vec<i64> = c.degrees().collect();
    let snfs: BTreeMap<i64, Snf> = degrees
        .par_iter()
        .map(|&k| (k, smith_normal_form(&c.d(k), c.ring, false)))
        .collect();
    let mut out = HomologySummary::default();
    for &k in &degrees {
        let rank_out = snfs[&k].rank();
        let incoming = snfs.get(&(k - c.step));
        let rank_in = incoming.map_or(0, |s| s.rank());
        let torsion = incoming.map_or(Vec::new(), |s| s.torsion());
        out.degrees.insert(
            k,
            HomologyDegree {
                degree: k,
                rank: c.dim(k) - rank_out - rank_in,
                torsion,
            },
        );
    }
    Ok(out)
}

/// A chosen basis of `H_k` together with a projection from cycles to coordinates.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub ring: Ring,
    pub degree: i64,
    pub dim: usize,
    /// Order of each generator: 0 for free generators, t > 1 for torsion.
    pub orders: Vec<BigInt>,
    /// Cycle representatives, one per generator, in the chain basis of degree k.
    pub generators: Vec<Vec<BigInt>>,
    rank_out: usize,
    right_inv: Vec<Vec<BigInt>>,
    left2: Vec<Vec<BigInt>>,
    /// Index in the image SNF where generators start (units are skipped).
    skip: usize,
}

impl HomologyBasis {
    pub fn rank(&self) -> usize {
        self.orders.iter().filter(|o| o.is_zero()).count()
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Coordinates of the class of a cycle; `None` if `z` is not a cycle.
    pub fn project(&self, z: &[BigInt]) -> Option<Vec<BigInt>> {
        let ring = self.ring;
        assert_eq!(z.len(), self.dim);
        let y: Vec<BigInt> = self
            .right_inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(z)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigInt::zero(), |acc, (a, b)| ring.add(&acc, &(a * b)))
            })
            .collect();
        if y[..self.rank_out].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let yk = &y[self.rank_out..];
        let mut out = Vec::with_capacity(self.orders.len());
        for (g, order) in self.orders.iter().enumerate() {
            let row = &self.left2[self.skip + g];
            let mut v = row
                .iter()
                .zip(yk)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(BigInt::zero(), |acc, (a, b)| ring.add(&acc, &(a * b)));
            if !order.is_zero() {
                v = v.mod_floor(order);
            }
            out.push(v);
        }
        Some(out)
    }

    /// True when the cycle `z` is a boundary.
    pub fn is_boundary(&self, z: &[BigInt]) -> bool {
        self.project(z).is_some_and(|c| c.iter().all(|v| v.is_zero()))
    }
}

/// Homology basis in degree `k` with representatives and a projection map.
pub fn homology_basis(c: &ChainComplex, k: i64) -> HomologyBasis {
    let ring = c.ring;
    let n = c.dim(k);
    let s1 = smith_normal_form(&c.d(k), ring, true);
    let r = s1.rank();
    let right = s1.right.expect("tracked");
    let right_inv = s1.right_inv.expect("tracked");
    // image of the incoming differential, written in kernel coordinates
    let incoming = c.d(k - c.step);
    let kdim = n - r;
    let mut img = SparseMatrix::zero(kdim, incoming.cols);
    let cols = incoming.columns();
    for (j, col) in cols.iter().enumerate() {
        for (i, row) in right_inv.iter().enumerate().skip(r) {
            let v = col
                .iter()
                .filter(|(t, _)| !row[*t].is_zero())
                .fold(BigInt::zero(), |acc, (t, v)| ring.add(&acc, &(v * &row[*t])));
            if !v.is_zero() {
                img.add_entry(ring, i - r, j, &v);
            }
        }
    }
    let s2 = smith_normal_form(&img, ring, true);
    let left2 = s2.left.expect("tracked");
    let left2_inv = s2.left_inv.expect("tracked");
    let skip = s2.diag.iter().take_while(|d| d.is_one()).count();
    let mut orders = Vec::new();
    for d in &s2.diag[skip..] {
        orders.push(d.clone());
    }
    for _ in s2.diag.len()..kdim {
        orders.push(BigInt::zero());
    }
    let mut generators = Vec::new();
    for g in 0..orders.len() {
        let col = skip + g;
        let mut z = vec![BigInt::zero(); n];
        for (j, lrow) in left2_inv.iter().enumerate() {
            let coef = &lrow[col];
            if coef.is_zero() {
                continue;
            }
            for (i, zi) in z.iter_mut().enumerate() {
                let rv = &right[i][r + j];
                if !rv.is_zero() {
                    *zi = ring.add(zi, &(coef * rv));
                }
            }
        }
        generators.push(z);
    }
    HomologyBasis {
        ring,
        degree: k,
        dim: n,
        orders,
        generators,
        rank_out: r,
        right_inv,
        left2,
        skip,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::complex::{interval, point, tensor};

    #[test]
    fn torsion_of_multiplication_by_two() {
        let mut c = ChainComplex::new(Ring::Integers, -1);
        c.set_basis(0, vec!["a".into()]);
        c.set_basis(1, vec!["b".into()]);
        c.set_d(1, SparseMatrix::from_i64(Ring::Integers, &[&[2]]));
        let h = homology(&c).unwrap();
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.torsion(0), vec![BigInt::from(2)]);
        assert_eq!(h.rank(1), 0);
        let hb = homology_basis(&c, 0);
        assert_eq!(hb.orders, vec![BigInt::from(2)]);
        assert_eq!(hb.project(&[BigInt::from(3)]).unwrap(), vec![BigInt::one()]);
    }

    #[test]
    fn square_is_a_point() {
        let i = interval(Ring::Integers);
        let sq = tensor(&i, &i).unwrap();
        let h = homology(&sq).unwrap();
        assert_eq!(h.support(), vec![0]);
        assert_eq!(h.rank(0), 1);
        let p = tensor(&point(Ring::Integers), &i).unwrap();
        assert_eq!(homology(&p).unwrap(), homology(&i).unwrap());
    }
}
