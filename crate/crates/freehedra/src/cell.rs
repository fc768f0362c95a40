//! Cells of `F_m × I^n` as block sequences.
//!
//! A cell is a list of blocks. The first block is the freehedral part of the
//! cell; every later block is a cube factor `I^{len-2}`. Face operators act
//! through these intrinsic coordinates: with first block `a_0..a_{m'}` and
//! cube interiors numbered `1..n'` from left to right,
//!
//! * `d⁰_i` (`i ≤ m'`) cuts the first block at `a_{i-1}` and pushes the tail
//!   to the front of the cube part; `d⁰_{m'+j}` cuts a cube block at its
//!   `j`-th interior symbol;
//! * `d¹_1 = d²_1`; `d¹_i` (`2 ≤ i ≤ m'`) drops `a_{i-1}`; `d¹_{m'+j}` drops
//!   the `j`-th interior symbol;
//! * `d²_i` keeps `a_i..a_{m'}` in front and appends `[a_0..a_i]` at the rear;
//! * `η_j` inserts `*` as the new `j`-th interior symbol.
//!
//! A `*` that would open a cube block slides back to the end of the previous
//! cube block, which realises `[..,b_i,*][*,b_{i+1},..] = [..,b_i,b_{i+1},..]`.
//! When the ambient cube dimension is zero the trivial block `[b0,b1]` is
//! carried internally and omitted from the text form.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::chain::{from_boundary, ChainComplex, Ring};
use crate::error::{Error, Result};
use crate::fnset::{self, CellOps};

/// Symbol codes: `0..=63` are freehedral vertices, `64 + j` is `b_j`, 255 is `*`.
pub type Sym = u8;
pub const STAR: Sym = 255;
const B0: Sym = 64;

fn is_b(s: Sym) -> bool {
    (B0..STAR).contains(&s)
}

fn is_a(s: Sym) -> bool {
    s < B0
}

/// Largest ambient dimension accepted by `enumerate_faces` and friends.
pub const MAX_DIM: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    /// Ambient freehedron dimension.
    pub m: u8,
    /// Ambient cube dimension.
    pub n: u8,
    pub blocks: Vec<Vec<Sym>>,
}

/// A formal integer combination of cells.
pub type CellChain = BTreeMap<Cell, i64>;

/// A formal integer combination of tensor pairs of cells.
pub type CellChain2 = BTreeMap<(Cell, Cell), i64>;

pub fn add_term<K: Ord>(map: &mut BTreeMap<K, i64>, k: K, v: i64) {
    if v == 0 {
        return;
    }
    let e = map.entry(k);
    match e {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += v;
            if *slot.get() == 0 {
                slot.remove();
            }
        }
    }
}

/// The top cell `a_0..a_m][b_0..b_{n+1}]` of `F_m × I^n`.
pub fn top_cell(m: usize, n: usize) -> Cell {
    assert!(m < 64 && n + 1 < (STAR - B0) as usize, "dimension too large");
    Cell {
        m: m as u8,
        n: n as u8,
        blocks: vec![
            (0..=m as u8).collect(),
            (0..=n as u8 + 1).map(|j| B0 + j).collect(),
        ],
    }
}

impl Cell {
    /// Intrinsic type `(m', n')`.
    pub fn cell_type(&self) -> (usize, usize) {
        let mp = self.blocks[0].len() - 1;
        let np = self.blocks[1..].iter().map(|b| b.len() - 2).sum();
        (mp, np)
    }

    pub fn dim(&self) -> usize {
        let (a, b) = self.cell_type();
        a + b
    }

    pub fn is_degenerate(&self) -> bool {
        self.blocks.iter().any(|b| b.contains(&STAR))
    }

    /// True when the cube part has no free coordinates.
    pub fn is_pure(&self) -> bool {
        self.cell_type().1 == 0
    }

    /// Location `(block, position)` of the `j`-th cube interior symbol (1-based).
    fn interior(&self, j: usize) -> Option<(usize, usize)> {
        let mut count = 0;
        for (k, b) in self.blocks.iter().enumerate().skip(1) {
            let inner = b.len() - 2;
            if j <= count + inner {
                return Some((k, j - count));
            }
            count += inner;
        }
        None
    }

    /// Slides stars that open a non-first cube block back into the previous block.
    fn normalize(mut self) -> Cell {
        loop {
            let mut moved = false;
            for k in 2..self.blocks.len() {
                if self.blocks[k].len() > 2 && self.blocks[k][1] == STAR {
                    self.blocks[k].remove(1);
                    let prev = &mut self.blocks[k - 1];
                    let at = prev.len() - 1;
                    prev.insert(at, STAR);
                    moved = true;
                }
            }
            if !moved {
                return self;
            }
        }
    }

    /// The face operator `d^eps_i`.
    pub fn face(&self, eps: u8, i: usize) -> Result<Cell> {
        let (mp, np) = self.cell_type();
        let range_err = || Error::FaceRange { eps, i, m: mp, n: np };
        let mut out = self.clone();
        match eps {
            0 | 1 if i == 0 || i > mp + np => return Err(range_err()),
            2 if i == 0 || i > mp => return Err(range_err()),
            0 if i <= mp => {
                let first = &self.blocks[0];
                let tail = first[i - 1..].to_vec();
                out.blocks[0] = first[..i].to_vec();
                out.blocks.insert(1, tail);
            }
            0 => {
                let (k, p) = self.interior(i - mp).ok_or_else(range_err)?;
                let b = &self.blocks[k];
                if b[p] == STAR {
                    out.blocks[k].remove(p);
                } else {
                    let left = b[..=p].to_vec();
                    let right = b[p..].to_vec();
                    out.blocks[k] = left;
                    out.blocks.insert(k + 1, right);
                }
            }
            1 if i == 1 && mp > 0 => return self.face(2, 1),
            1 if i <= mp => {
                out.blocks[0].remove(i - 1);
            }
            1 => {
                let (k, p) = self.interior(i - mp).ok_or_else(range_err)?;
                out.blocks[k].remove(p);
            }
            2 => {
                let first = &self.blocks[0];
                let front = first[i..].to_vec();
                let rear = first[..=i].to_vec();
                out.blocks[0] = front;
                out.blocks.push(rear);
            }
            _ => return Err(range_err()),
        }
        Ok(out.normalize())
    }

    /// The degeneracy `η_j`, `1 ≤ j ≤ n'+1`.
    pub fn degeneracy(&self, j: usize) -> Result<Cell> {
        let (_, np) = self.cell_type();
        if j == 0 || j > np + 1 {
            return Err(Error::DegeneracyRange { i: j, n: np });
        }
        let mut out = self.clone();
        if j <= np {
            let (k, p) = self.interior(j).expect("in range");
            out.blocks[k].insert(p, STAR);
        } else {
            let last = out.blocks.last_mut().expect("cube part is never empty");
            let at = last.len() - 1;
            last.insert(at, STAR);
        }
        Ok(out.normalize())
    }

    /// Applies a word of operators, innermost first: `ops = [(eps, i), ...]`.
    pub fn apply(&self, ops: &[(u8, usize)]) -> Result<Cell> {
        let mut c = self.clone();
        for &(e, i) in ops {
            c = if e == 3 { c.degeneracy(i)? } else { c.face(e, i)? };
        }
        Ok(c)
    }

    /// `q = s_k − k + 1` read off the freehedral chain of a cell of `F_m`.
    ///
    /// When the first block starts at 0 the chain is unwrapped: the `i`'s are
    /// all visited vertices below `m` and `k` is the number of blocks. Otherwise
    /// the chain wraps through `m` and `0`: the `i`'s are the visited vertices
    /// strictly between them and the rotation point splits one of the `k`
    /// blocks in two.
    pub fn chain_q(&self) -> Option<i64> {
        if self.n != 0 {
            return None;
        }
        let m = self.m;
        let fblocks: Vec<&Vec<Sym>> = self.blocks.iter().filter(|b| b.iter().all(|&s| is_a(s))).collect();
        let visited: BTreeSet<Sym> = fblocks.iter().flat_map(|b| b.iter().copied()).collect();
        let (s_k, k) = if self.blocks[0][0] == 0 {
            (visited.iter().filter(|&&s| s < m).count(), fblocks.len())
        } else {
            (visited.iter().filter(|&&s| s > 0 && s < m).count(), fblocks.len() - 1)
        };
        Some(s_k as i64 - k as i64 + 1)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let phantom = [B0, B0 + 1];
        let mut first = true;
        for b in &self.blocks {
            if self.n == 0 && b.as_slice() == phantom {
                continue;
            }
            if !first {
                write!(f, "[")?;
            }
            first = false;
            let compact = b.iter().all(|&s| is_a(s) && s <= 9);
            for (k, &s) in b.iter().enumerate() {
                if k > 0 && !compact {
                    write!(f, ",")?;
                }
                match s {
                    STAR => write!(f, "*")?,
                    s if is_b(s) => write!(f, "b{}", s - B0)?,
                    s => write!(f, "{s}")?,
                }
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

fn parse_block(s: &str) -> Result<Vec<Sym>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty block".into()));
    }
    let tokens: Vec<&str> = if s.contains(',') {
        s.split(',').map(str::trim).collect()
    } else if s.starts_with('b') || s == "*" {
        vec![s]
    } else {
        s.split("").filter(|t| !t.is_empty()).collect()
    };
    tokens
        .into_iter()
        .map(|t| {
            if t == "*" {
                Ok(STAR)
            } else if let Some(j) = t.strip_prefix('b') {
                let j: u8 = j.parse().map_err(|_| Error::Parse(format!("bad symbol {t}")))?;
                Ok(B0 + j)
            } else {
                let a: u8 = t.parse().map_err(|_| Error::Parse(format!("bad symbol {t}")))?;
                if a >= B0 {
                    return Err(Error::Parse(format!("vertex {a} too large")));
                }
                Ok(a)
            }
        })
        .collect()
}

impl FromStr for Cell {
    type Err = Error;
    fn from_str(s: &str) -> Result<Cell> {
        let s = s.trim();
        let body = s
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("cell {s:?} must end with ']'")))?;
        let mut blocks = Vec::new();
        for part in body.split("][") {
            blocks.push(parse_block(part)?);
        }
        let m = blocks
            .iter()
            .flatten()
            .filter(|&&x| is_a(x))
            .max()
            .copied()
            .ok_or_else(|| Error::Parse("no freehedral vertex".into()))?;
        let maxb = blocks.iter().flatten().filter(|&&x| is_b(x)).max().copied();
        let n = match maxb {
            Some(b) => (b - B0)
                .checked_sub(1)
                .ok_or_else(|| Error::Parse("cube symbols need b0 and b1 at least".into()))?,
            None => {
                let at = blocks
                    .iter()
                    .position(|b| b.last() == Some(&m))
                    .ok_or_else(|| Error::Parse("no block ends at the top vertex".into()))?;
                blocks.insert(at + 1, vec![B0, B0 + 1]);
                0
            }
        };
        for b in &blocks[1..] {
            if b.len() < 2 {
                return Err(Error::Parse(format!("cube-part block of length {} in {s:?}", b.len())));
            }
            if b.first() == Some(&STAR) || b.last() == Some(&STAR) {
                return Err(Error::Parse("a star cannot end a block".into()));
            }
        }
        let c = Cell { m, n, blocks };
        let normal = c.clone().normalize();
        Ok(normal)
    }
}

/// Signed boundary of a cell:
/// `Σ_{i=1}^{m'+n'} (−1)^i (d⁰_i − d¹_i) + Σ_{i=2}^{m'} (−1)^{(i−1)(m'+n')} d²_i`.
pub fn boundary(c: &Cell) -> CellChain {
    fnset::boundary(&CellOps, c)
}

/// Boundary of a chain.
pub fn boundary_chain(x: &CellChain) -> CellChain {
    let mut out = CellChain::new();
    for (c, v) in x {
        for (d, w) in boundary(c) {
            add_term(&mut out, d, v * w);
        }
    }
    out
}

/// All nondegenerate cells of `F_m × I^n`, grouped by dimension.
pub fn enumerate_faces(m: usize, n: usize) -> Result<BTreeMap<usize, Vec<Cell>>> {
    if m + n > MAX_DIM {
        return Err(Error::Bound(format!("m+n = {} exceeds {MAX_DIM}", m + n)));
    }
    let top = top_cell(m, n);
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut frontier = vec![top.clone()];
    seen.insert(top);
    while let Some(c) = frontier.pop() {
        let (mp, np) = c.cell_type();
        for eps in 0..3u8 {
            let hi = if eps == 2 { mp } else { mp + np };
            for i in 1..=hi {
                let f = c.face(eps, i).expect("in range");
                if seen.insert(f.clone()) {
                    frontier.push(f);
                }
            }
        }
    }
    let mut out: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for c in seen {
        out.entry(c.dim()).or_default().push(c);
    }
    Ok(out)
}

/// Cellular chains of `F_m × I^n`, labelled by cell text.
pub fn cell_complex(m: usize, n: usize, ring: Ring) -> Result<ChainComplex> {
    let cells = enumerate_faces(m, n)?;
    let bases = cells.iter().map(|(k, v)| (*k as i64, v.iter().map(Cell::to_string).collect())).collect();
    Ok(from_boundary(ring, -1, bases, |_, s| {
        let c: Cell = s.parse().expect("own label");
        boundary(&c).into_iter().map(|(d, v)| (d.to_string(), BigInt::from(v))).collect()
    }))
}

/// Number of cells of `F_n` in each dimension.
pub fn f_vector(n: usize) -> Result<Vec<usize>> {
    let cells = enumerate_faces(n, 0)?;
    Ok((0..=n).map(|k| cells.get(&k).map_or(0, |v| v.len())).collect())
}

/// Vertex set of the simplex `φ(c)` for a pure freehedral cell: its first block.
pub fn project_phi(c: &Cell) -> Result<Vec<u8>> {
    if c.n != 0 {
        return Err(Error::Invalid(format!("{c} has a nonempty cube part")));
    }
    Ok(c.blocks[0].clone())
}

/// The diagonal `Δ_F` of a cell.
pub fn diagonal_f(c: &Cell) -> CellChain2 {
    fnset::diagonal(&CellOps, c)
}

/// `Δ_F` extended linearly.
pub fn diagonal_chain(x: &CellChain) -> CellChain2 {
    let mut out = CellChain2::new();
    for (c, v) in x {
        for (pair, w) in diagonal_f(c) {
            add_term(&mut out, pair, v * w);
        }
    }
    out
}

/// `(Δ_F ⊗ 1)Δ_F − (1 ⊗ Δ_F)Δ_F` on a cell.
pub fn coassociator(c: &Cell) -> BTreeMap<(Cell, Cell, Cell), i64> {
    let mut out = BTreeMap::new();
    for ((a, b), v) in diagonal_f(c) {
        for ((a1, a2), w) in diagonal_f(&a) {
            add_term(&mut out, (a1, a2, b.clone()), v * w);
        }
        for ((b1, b2), w) in diagonal_f(&b) {
            add_term(&mut out, (a.clone(), b1, b2), -v * w);
        }
    }
    out
}

/// `φ` on cellular chains: the first block as a simplex when it has full dimension, else zero.
pub fn phi_chain(c: &Cell) -> Option<Vec<u8>> {
    let v = project_phi(c).ok()?;
    (v.len() == c.dim() + 1).then_some(v)
}

/// Alexander–Whitney diagonal of the standard simplex on a vertex list.
pub fn aw_simplex(v: &[u8]) -> BTreeMap<(Vec<u8>, Vec<u8>), i64> {
    (0..v.len()).map(|p| ((v[..=p].to_vec(), v[p..].to_vec()), 1)).collect()
}

/// First cell of `F_n` where `(φ⊗φ)Δ_F ≠ Δ_AW φ`.
pub fn aw_compatibility_failure(n: usize) -> Result<Option<Cell>> {
    let cells = enumerate_faces(n, 0)?;
    for c in cells.values().flatten() {
        let mut lhs = BTreeMap::new();
        for ((a, b), v) in diagonal_f(c) {
            if let (Some(x), Some(y)) = (phi_chain(&a), phi_chain(&b)) {
                add_term(&mut lhs, (x, y), v);
            }
        }
        let rhs = phi_chain(c).map(|s| aw_simplex(&s)).unwrap_or_default();
        if lhs != rhs {
            return Ok(Some(c.clone()));
        }
    }
    Ok(None)
}

/// Cube coordinates of a cell of `F_0 × I^n`: `0`, `1` or free (`2`) per axis.
pub fn cube_coords(c: &Cell) -> Result<Vec<u8>> {
    if c.m != 0 || c.blocks.len() < 2 {
        return Err(Error::Invalid(format!("{c} is not a cell of a cube")));
    }
    Ok((1..=c.n)
        .map(|j| {
            let sym = B0 + j as Sym;
            match c.blocks[1..].iter().flatten().filter(|&&s| s == sym).count() {
                0 => 1,
                1 => 2,
                _ => 0,
            }
        })
        .collect())
}

/// Serre's diagonal on a cube face given by coordinates.
pub fn serre_diagonal(x: &[u8]) -> BTreeMap<(Vec<u8>, Vec<u8>), i64> {
    let free: Vec<usize> = (0..x.len()).filter(|&i| x[i] == 2).collect();
    let mut out = BTreeMap::new();
    for mask in 0u64..(1u64 << free.len()) {
        let (mut left, mut right) = (x.to_vec(), x.to_vec());
        let mut inv = 0;
        for (a, &i) in free.iter().enumerate() {
            if mask >> a & 1 == 1 {
                left[i] = 0;
            } else {
                right[i] = 1;
                inv += free[..a].iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).count();
            }
        }
        add_term(&mut out, (left, right), if inv % 2 == 0 { 1 } else { -1 });
    }
    out
}

/// First cell of `F_0 × I^n` where `Δ_F` differs from Serre's diagonal.
pub fn serre_failure(n: usize) -> Result<Option<Cell>> {
    let cells = enumerate_faces(0, n)?;
    for c in cells.values().flatten() {
        let mut lhs = BTreeMap::new();
        for ((a, b), v) in diagonal_f(c) {
            add_term(&mut lhs, (cube_coords(&a)?, cube_coords(&b)?), v);
        }
        if lhs != serre_diagonal(&cube_coords(c)?) {
            return Ok(Some(c.clone()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(s: &str) -> Cell {
        s.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        for s in ["012]", "12][01]", "0][012]", "2][02]", "01][b0,b1,b2]", "0]", "12][23][01]"] {
            assert_eq!(cell(s).to_string(), s);
        }
        assert_eq!(top_cell(2, 0).to_string(), "012]");
        assert_eq!(top_cell(1, 1).to_string(), "01][b0,b1,b2]");
        assert_eq!(top_cell(0, 0).to_string(), "0]");
    }

    #[test]
    fn faces_of_the_top_cells() {
        let t3 = top_cell(3, 0);
        assert_eq!(t3.face(2, 1).unwrap().to_string(), "123][01]");
        assert_eq!(t3.face(0, 1).unwrap().to_string(), "0][0123]");
        assert_eq!(top_cell(2, 0).face(1, 2).unwrap().to_string(), "02]");
        let sq = top_cell(1, 1);
        assert_eq!(sq.face(0, 2).unwrap().to_string(), "01][b0,b1][b1,b2]");
        assert_eq!(sq.dim(), 2);
    }

    #[test]
    fn degeneracy_is_cancelled_by_its_faces() {
        let sq = top_cell(1, 1);
        for j in 1..=2 {
            let e = sq.degeneracy(j).unwrap();
            assert_eq!(e.face(0, 1 + j).unwrap(), sq);
            assert_eq!(e.face(1, 1 + j).unwrap(), sq);
        }
    }

    #[test]
    fn pentagon_boundary() {
        let b = boundary(&top_cell(2, 0));
        let want: CellChain = [("0][012]", -1), ("12][01]", 1), ("01][12]", 1), ("02]", -1), ("2][012]", 1)]
            .into_iter()
            .map(|(s, v)| (cell(s), v))
            .collect();
        assert_eq!(b, want);
    }
}
