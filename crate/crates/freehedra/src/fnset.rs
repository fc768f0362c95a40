//! Abstract `F_n`-sets: the operator interface, the identity checker, the
//! normalized chain complex and the diagonal induced on it.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::cell::{add_term, enumerate_faces, Cell};
use crate::chain::{check_complex, ChainComplex, Ring, SparseMatrix};
use crate::error::{Error, Result};

/// Face operators `d⁰, d¹, d²` and degeneracies `η` on a bigraded set.
///
/// `face` and `degeneracy` return `None` for indices outside the legal range of
/// the element's bidegree.
pub trait FnOps: Sync {
    type Elem: Clone + Ord + Hash + Debug + Display + Send + Sync;

    fn bidegree(&self, x: &Self::Elem) -> (usize, usize);
    fn face(&self, x: &Self::Elem, eps: u8, i: usize) -> Option<Self::Elem>;
    fn degeneracy(&self, x: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn is_degenerate(&self, x: &Self::Elem) -> bool;

    fn total(&self, x: &Self::Elem) -> usize {
        let (m, n) = self.bidegree(x);
        m + n
    }
}

/// An `F_n`-set: operators together with a finite universe per degree.
pub trait FnSet: FnOps {
    /// Nondegenerate elements of total degree `r`, in a fixed order.
    fn nondegenerate(&self, r: usize) -> Vec<Self::Elem>;
}

/// `(−1)^e`.
fn pm(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the permutation listing `k` then `l`, both ascending.
pub fn unshuffle_sign(k: &[usize], l: &[usize]) -> i64 {
    let inv: usize = k.iter().map(|a| l.iter().filter(|b| *b < a).count()).sum();
    pm(inv)
}

/// Applies faces `d^eps_i` in the given order.
fn faces<S: FnOps>(s: &S, x: &S::Elem, ops: &[(u8, usize)]) -> Option<S::Elem> {
    let mut y = x.clone();
    for &(e, i) in ops {
        y = s.face(&y, e, i)?;
    }
    Some(y)
}

/// The differential `Σ (−1)^i (d⁰_i − d¹_i) + Σ_{i≥2} (−1)^{(i−1)(m+n)} d²_i`,
/// with degenerate faces discarded.
pub fn boundary<S: FnOps>(s: &S, x: &S::Elem) -> BTreeMap<S::Elem, i64> {
    let (m, n) = s.bidegree(x);
    let total = m + n;
    let mut out = BTreeMap::new();
    for i in 1..=total {
        let sg = pm(i);
        add_term(&mut out, s.face(x, 0, i).expect("legal d0"), sg);
        add_term(&mut out, s.face(x, 1, i).expect("legal d1"), -sg);
    }
    for i in 2..=m {
        add_term(&mut out, s.face(x, 2, i).expect("legal d2"), pm((i - 1) * total));
    }
    out.retain(|k, _| !s.is_degenerate(k));
    out
}

/// The diagonal given by the two-sum unshuffle formula.
///
/// First sum: unshuffles `(K, L)` of `{1..N}` with `1 ∈ L`, term
/// `sgn(K,L) d⁰_L x ⊗ d¹_K x`. Second sum: a subset `L′ ⊂ {2..N}` with
/// complement `K′`, a split `r ≤ |L′|` and `i_q ∈ [max(r,0)+1, |L′|+1]`; the
/// first `r` elements `ℓ_1 < … < ℓ_r` of `L′` become the `d²` word
/// `d²_{ℓ_r−ℓ_{r−1}} … d²_{ℓ_1−1}`, the rest the `d⁰` indices
/// `ℓ − ℓ_r + 1`, and the right factor is `d²_{i_q} d¹_{K′} x` (with
/// `d²_1 = d¹_1`). The sign is
/// `(−1)^{(r + j_(r))(|K′|+1) + (p+1)(i_q+1)} sgn(K′,L′)` where
/// `j_(r) = ℓ_r − 1` and `p = |L′|`. Terms with an illegal operator or a
/// degenerate factor are dropped.
pub fn diagonal<S: FnOps>(s: &S, x: &S::Elem) -> BTreeMap<(S::Elem, S::Elem), i64> {
    diagonal_with(s, x, &|_, _, _, sign| sign)
}

/// Same as [`diagonal`] but lets a hook rewrite the sign of each second-sum
/// term from `(r, i_q, L′)`; used to compare sign conventions.
pub fn diagonal_with<S: FnOps>(
    s: &S,
    x: &S::Elem,
    hook: &dyn Fn(usize, usize, &[usize], i64) -> i64,
) -> BTreeMap<(S::Elem, S::Elem), i64> {
    let total = s.total(x);
    let mut out = BTreeMap::new();
    if total == 0 {
        out.insert((x.clone(), x.clone()), 1);
        return out;
    }
    let push = |out: &mut BTreeMap<(S::Elem, S::Elem), i64>, a: Option<S::Elem>, b: Option<S::Elem>, v: i64| {
        if let (Some(a), Some(b)) = (a, b) {
            if !s.is_degenerate(&a) && !s.is_degenerate(&b) {
                add_term(out, (a, b), v);
            }
        }
    };
    for mask in 0u64..(1u64 << (total - 1)) {
        let lp: Vec<usize> = (2..=total).filter(|k| mask >> (k - 2) & 1 == 1).collect();
        let kp: Vec<usize> = (2..=total).filter(|k| mask >> (k - 2) & 1 == 0).collect();
        let d1_k: Vec<(u8, usize)> = kp.iter().rev().map(|&i| (1, i)).collect();
        let right_base = faces(s, x, &d1_k);
        // first sum: L = {1} ∪ L′
        let mut l_all = vec![1];
        l_all.extend(&lp);
        let d0_l: Vec<(u8, usize)> = l_all.iter().rev().map(|&i| (0, i)).collect();
        push(&mut out, faces(s, x, &d0_l), right_base.clone(), unshuffle_sign(&kp, &l_all));
        // second sum
        let p = lp.len();
        let base_sign = unshuffle_sign(&kp, &lp);
        for r in 0..=p {
            let mut ops = Vec::new();
            let mut prev = 1;
            for &l in &lp[..r] {
                ops.push((2u8, l - prev));
                prev = l;
            }
            for &l in lp[r..].iter().rev() {
                ops.push((0u8, l - prev + 1));
            }
            let left = faces(s, x, &ops);
            if left.is_none() {
                continue;
            }
            let jr = prev - 1;
            for iq in (r + 1)..=(p + 1) {
                let right = right_base.as_ref().and_then(|y| if iq == 1 { s.face(y, 1, 1) } else { s.face(y, 2, iq) });
                let sign = pm((r + jr) * (kp.len() + 1) + (p + 1) * (iq + 1)) * base_sign;
                let sign = hook(r, iq, &lp, sign);
                push(&mut out, left.clone(), right, sign);
            }
        }
    }
    out
}

/// One violated identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub element: String,
    pub indices: (usize, usize),
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking the structural identities.
#[derive(Clone, Debug, Default)]
pub struct FnSetReport {
    pub instances: usize,
    pub elements: usize,
    pub violations: Vec<Violation>,
}

impl FnSetReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(mut self, other: FnSetReport) -> FnSetReport {
        self.instances += other.instances;
        self.elements += other.elements;
        self.violations.extend(other.violations);
        self
    }
}

/// Which relation to use for `d^ε_i η_j` with `i ≤ m` (ε = 0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaRule {
    /// `d⁰_i η_j = η_{j+m−i} d⁰_i`, `d¹_i η_j = η_j d¹_i`: what the operator
    /// tables actually satisfy.
    Geometric,
    /// The printed rule `η_{j−1} d^ε_i` applied for every `i < m + j`.
    Printed,
}

type Op = (u8, usize);
const ETA: u8 = 3;

fn apply_word<S: FnOps>(s: &S, x: &S::Elem, word: &[Op]) -> Option<S::Elem> {
    let mut y = x.clone();
    for &(e, i) in word {
        y = if e == ETA { s.degeneracy(&y, i)? } else { s.face(&y, e, i)? };
    }
    Some(y)
}

/// Instances of the structural identities on one element, as pairs of words
/// (innermost operator first).
fn identity_instances(m: usize, n: usize, eta_rule: EtaRule) -> Vec<(&'static str, (usize, usize), Vec<Op>, Vec<Op>)> {
    let total = m + n;
    let mut v = Vec::new();
    for j in 1..=total {
        for i in 1..=total {
            // d⁰_i d⁰_j = d⁰_{j−1} d⁰_i, i < j
            if i < j {
                v.push(("d0d0", (i, j), vec![(0, j), (0, i)], vec![(0, i), (0, j - 1)]));
            }
            // d¹_i d¹_j = d¹_{j−1} d¹_i, i < j, (i, j) ≠ (1, 2) for m > 0
            if i < j && !(m > 0 && (i, j) == (1, 2)) {
                v.push(("d1d1", (i, j), vec![(1, j), (1, i)], vec![(1, i), (1, j - 1)]));
            }
            // d¹_i d⁰_j
            if i < j {
                v.push(("d1d0", (i, j), vec![(0, j), (1, i)], vec![(1, i), (0, j - 1)]));
            } else {
                v.push(("d1d0", (i, j), vec![(0, j), (1, i)], vec![(1, i + 1), (0, j)]));
            }
        }
    }
    for i in 1..=m {
        for j in 1..=total {
            // d²_i d⁰_j = d⁰_{j−i} d²_i
            if j > i {
                v.push(("d2d0", (i, j), vec![(0, j), (2, i)], vec![(2, i), (0, j - i)]));
            }
            // d²_i d¹_j
            if i + 1 < j {
                v.push(("d2d1", (i, j), vec![(1, j), (2, i)], vec![(2, i), (1, j - i)]));
            } else if j >= 2 && i + 1 >= j && total + j >= i + 2 {
                v.push(("d2d1", (i, j), vec![(1, j), (2, i)], vec![(2, i + 1), (1, total + j - i - 2)]));
            }
        }
        for j in 1..=m {
            // d²_i d²_j = d⁰_{m+n−i} d²_{i+j}
            if total > i {
                v.push(("d2d2", (i, j), vec![(2, j), (2, i)], vec![(2, i + j), (0, total - i)]));
            }
        }
    }
    // degeneracies act on (m, n) and land in (m, n+1)
    for j in 1..=n + 1 {
        for i in 1..=total + 1 {
            for eps in 0..2u8 {
                let name = if eps == 0 { "d0eta" } else { "d1eta" };
                let lhs = vec![(ETA, j), (eps, i)];
                if i <= m && eta_rule == EtaRule::Geometric {
                    let rhs = if eps == 0 { vec![(0, i), (ETA, j + m - i)] } else { vec![(1, i), (ETA, j)] };
                    v.push((name, (i, j), lhs, rhs));
                } else if i < m + j {
                    if j >= 2 {
                        v.push((name, (i, j), lhs, vec![(eps, i), (ETA, j - 1)]));
                    }
                } else if i == m + j {
                    v.push((name, (i, j), lhs, vec![]));
                } else {
                    v.push((name, (i, j), lhs, vec![(eps, i - 1), (ETA, j)]));
                }
            }
        }
        for i in 1..=m {
            v.push(("d2eta", (i, j), vec![(ETA, j), (2, i)], vec![(2, i), (ETA, j)]));
        }
        for i in 1..=j {
            v.push(("etaeta", (i, j), vec![(ETA, j), (ETA, i)], vec![(ETA, i), (ETA, j + 1)]));
        }
    }
    v
}

fn fmt_word(w: &[Op]) -> String {
    if w.is_empty() {
        return "id".into();
    }
    w.iter()
        .rev()
        .map(|&(e, i)| if e == ETA { format!("η{i}") } else { format!("d{e}_{i}") })
        .collect::<Vec<_>>()
        .join("·")
}

/// Checks one element against every identity instance whose operators are legal.
pub fn verify_element<S: FnOps>(s: &S, x: &S::Elem, eta_rule: EtaRule) -> FnSetReport {
    let (m, n) = s.bidegree(x);
    let mut rep = FnSetReport {
        elements: 1,
        ..Default::default()
    };
    for (name, idx, lhs, rhs) in identity_instances(m, n, eta_rule) {
        let (Some(a), Some(b)) = (apply_word(s, x, &lhs), apply_word(s, x, &rhs)) else {
            continue;
        };
        rep.instances += 1;
        if a != b {
            rep.violations.push(Violation {
                identity: format!("{name}: {} = {}", fmt_word(&lhs), fmt_word(&rhs)),
                element: x.to_string(),
                indices: idx,
                lhs: a.to_string(),
                rhs: b.to_string(),
            });
        }
    }
    // d¹_1 = d²_1 for m > 0
    if m > 0 {
        rep.instances += 1;
        let a = s.face(x, 1, 1);
        let b = s.face(x, 2, 1);
        if a != b {
            rep.violations.push(Violation {
                identity: "d1_1 = d2_1".into(),
                element: x.to_string(),
                indices: (1, 1),
                lhs: format!("{a:?}"),
                rhs: format!("{b:?}"),
            });
        }
    }
    rep
}

/// Checks the structural identities on every nondegenerate element of total
/// degree `≤ bound` and on each of their single degeneracies of degree `≤ bound`.
pub fn verify_fnset<S: FnSet>(s: &S, bound: usize) -> FnSetReport {
    verify_fnset_with(s, bound, EtaRule::Geometric)
}

pub fn verify_fnset_with<S: FnSet>(s: &S, bound: usize, eta_rule: EtaRule) -> FnSetReport {
    let mut elems: Vec<S::Elem> = Vec::new();
    for r in 0..=bound {
        for x in s.nondegenerate(r) {
            if r < bound {
                let (_, n) = s.bidegree(&x);
                for j in 1..=n + 1 {
                    if let Some(y) = s.degeneracy(&x, j) {
                        elems.push(y);
                    }
                }
            }
            elems.push(x);
        }
    }
    elems
        .par_iter()
        .map(|x| verify_element(s, x, eta_rule))
        .reduce(FnSetReport::default, FnSetReport::merge)
}

/// Normalized chains: nondegenerate elements of total degree `≤ bound`.
pub fn normalized_chains<S: FnSet>(s: &S, ring: Ring, bound: usize) -> Result<ChainComplex> {
    let mut c = ChainComplex::new(ring, -1);
    let mut index: Vec<HashMap<S::Elem, usize>> = Vec::new();
    for r in 0..=bound {
        let elems = s.nondegenerate(r);
        index.push(elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect());
        c.set_basis(r as i64, elems.iter().map(|e| e.to_string()).collect());
    }
    for r in 1..=bound {
        let elems = s.nondegenerate(r);
        let cols: Vec<Vec<(usize, i64)>> = elems
            .par_iter()
            .map(|x| {
                boundary(s, x)
                    .into_iter()
                    .map(|(y, v)| (*index[r - 1].get(&y).unwrap_or_else(|| panic!("face {y} of {x} not listed")), v))
                    .collect()
            })
            .collect();
        let mut m = SparseMatrix::zero(c.dim(r as i64 - 1), elems.len());
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col {
                m.add_entry(ring, i, j, &BigInt::from(v));
            }
        }
        c.set_d(r as i64, m);
    }
    check_complex(&c)?;
    Ok(c)
}

/// The diagonal on normalized chains, one entry per basis element.
pub fn coalgebra<S: FnSet>(s: &S, bound: usize) -> BTreeMap<S::Elem, BTreeMap<(S::Elem, S::Elem), i64>> {
    let elems: Vec<S::Elem> = (0..=bound).flat_map(|r| s.nondegenerate(r)).collect();
    elems.par_iter().map(|x| (x.clone(), diagonal(s, x))).collect()
}

/// `(d⊗1 + 1⊗d)(t)` with the Koszul sign `da⊗b + (−1)^{|a|} a⊗db`.
pub fn tensor_boundary<S: FnOps>(s: &S, t: &BTreeMap<(S::Elem, S::Elem), i64>) -> BTreeMap<(S::Elem, S::Elem), i64> {
    let mut out = BTreeMap::new();
    for ((a, b), v) in t {
        for (da, w) in boundary(s, a) {
            add_term(&mut out, (da, b.clone()), v * w);
        }
        let sg = pm(s.total(a));
        for (db, w) in boundary(s, b) {
            add_term(&mut out, (a.clone(), db), v * w * sg);
        }
    }
    out
}

/// First element where `Δ d ≠ (d⊗1 + 1⊗d) Δ`, if any.
pub fn chain_map_failure<S: FnSet>(s: &S, bound: usize) -> Option<S::Elem> {
    chain_map_failure_by(s, bound, &|x| diagonal(s, x))
}

pub fn chain_map_failure_by<S: FnSet>(
    s: &S,
    bound: usize,
    delta: &(dyn Fn(&S::Elem) -> BTreeMap<(S::Elem, S::Elem), i64> + Sync),
) -> Option<S::Elem> {
    let elems: Vec<S::Elem> = (1..=bound).flat_map(|r| s.nondegenerate(r)).collect();
    elems
        .par_iter()
        .find_first(|x| {
            let lhs = tensor_boundary(s, &delta(x));
            let mut rhs = BTreeMap::new();
            for (y, v) in boundary(s, x) {
                for (pair, w) in delta(&y) {
                    add_term(&mut rhs, pair, v * w);
                }
            }
            lhs != rhs
        })
        .cloned()
}

/// The `F_n`-set of faces of `F_m × I^n` and their degeneracies.
#[derive(Clone, Debug)]
pub struct FModel {
    pub m: usize,
    pub n: usize,
    cells: BTreeMap<usize, Vec<Cell>>,
}

impl FModel {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        Ok(FModel {
            m,
            n,
            cells: enumerate_faces(m, n)?,
        })
    }
}

/// Operators on cells of any ambient `F_m × I^n`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CellOps;

impl FnOps for CellOps {
    type Elem = Cell;

    fn bidegree(&self, x: &Cell) -> (usize, usize) {
        x.cell_type()
    }

    fn face(&self, x: &Cell, eps: u8, i: usize) -> Option<Cell> {
        x.face(eps, i).ok()
    }

    fn degeneracy(&self, x: &Cell, i: usize) -> Option<Cell> {
        x.degeneracy(i).ok()
    }

    fn is_degenerate(&self, x: &Cell) -> bool {
        x.is_degenerate()
    }
}

impl FnOps for FModel {
    type Elem = Cell;

    fn bidegree(&self, x: &Cell) -> (usize, usize) {
        CellOps.bidegree(x)
    }

    fn face(&self, x: &Cell, eps: u8, i: usize) -> Option<Cell> {
        CellOps.face(x, eps, i)
    }

    fn degeneracy(&self, x: &Cell, i: usize) -> Option<Cell> {
        CellOps.degeneracy(x, i)
    }

    fn is_degenerate(&self, x: &Cell) -> bool {
        x.is_degenerate()
    }
}

impl FnSet for FModel {
    fn nondegenerate(&self, r: usize) -> Vec<Cell> {
        self.cells.get(&r).cloned().unwrap_or_default()
    }
}

/// An `F_n`-set with materialized operator tables.
#[derive(Clone, Debug, Default)]
pub struct TableFnSet {
    pub labels: Vec<String>,
    pub bidegrees: Vec<(usize, usize)>,
    pub degenerate: Vec<bool>,
    /// `ops[x][(eps, i)]`, with `eps = 3` for degeneracies.
    pub ops: Vec<BTreeMap<(u8, usize), usize>>,
}

/// Element handle of a [`TableFnSet`]; prints as its label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableElem(pub usize, pub std::sync::Arc<str>);

impl Display for TableElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.1)
    }
}

impl TableFnSet {
    /// Materializes every element reachable from the nondegenerate ones by
    /// faces and degeneracies, up to total degree `bound`.
    pub fn materialize<S: FnSet>(s: &S, bound: usize) -> TableFnSet {
        let mut ids: BTreeMap<S::Elem, usize> = BTreeMap::new();
        let mut elems: Vec<S::Elem> = Vec::new();
        let mut queue: Vec<usize> = Vec::new();
        let intern = |e: S::Elem, ids: &mut BTreeMap<S::Elem, usize>, elems: &mut Vec<S::Elem>, queue: &mut Vec<usize>| -> usize {
            if let Some(&i) = ids.get(&e) {
                return i;
            }
            let i = elems.len();
            ids.insert(e.clone(), i);
            elems.push(e);
            queue.push(i);
            i
        };
        for r in 0..=bound {
            for x in s.nondegenerate(r) {
                intern(x, &mut ids, &mut elems, &mut queue);
            }
        }
        let mut ops: Vec<BTreeMap<(u8, usize), usize>> = Vec::new();
        while let Some(i) = queue.pop() {
            let x = elems[i].clone();
            let (m, n) = s.bidegree(&x);
            let mut table = BTreeMap::new();
            for eps in 0..3u8 {
                let hi = if eps == 2 { m } else { m + n };
                for k in 1..=hi {
                    if let Some(y) = s.face(&x, eps, k) {
                        table.insert((eps, k), intern(y, &mut ids, &mut elems, &mut queue));
                    }
                }
            }
            if m + n < bound {
                for k in 1..=n + 1 {
                    if let Some(y) = s.degeneracy(&x, k) {
                        table.insert((ETA, k), intern(y, &mut ids, &mut elems, &mut queue));
                    }
                }
            }
            if ops.len() <= i {
                ops.resize(elems.len().max(i + 1), BTreeMap::new());
            }
            ops[i] = table;
        }
        ops.resize(elems.len(), BTreeMap::new());
        TableFnSet {
            labels: elems.iter().map(|e| e.to_string()).collect(),
            bidegrees: elems.iter().map(|e| s.bidegree(e)).collect(),
            degenerate: elems.iter().map(|e| s.is_degenerate(e)).collect(),
            ops,
        }
    }

    pub fn elem(&self, i: usize) -> TableElem {
        TableElem(i, self.labels[i].as_str().into())
    }

    pub fn find(&self, label: &str) -> Option<TableElem> {
        self.labels.iter().position(|l| l == label).map(|i| self.elem(i))
    }

    pub fn to_json(&self) -> Value {
        let elements: Vec<Value> = self
            .labels
            .iter()
            .zip(&self.bidegrees)
            .zip(&self.degenerate)
            .map(|((l, (m, n)), d)| json!({"m": m, "n": n, "label": l, "degenerate": d}))
            .collect();
        let table = |eps: u8| -> Value {
            let mut obj = serde_json::Map::new();
            for (x, t) in self.ops.iter().enumerate() {
                let row: BTreeMap<String, &str> = t
                    .iter()
                    .filter(|((e, _), _)| *e == eps)
                    .map(|((_, i), y)| (i.to_string(), self.labels[*y].as_str()))
                    .collect();
                if !row.is_empty() {
                    obj.insert(self.labels[x].clone(), json!(row));
                }
            }
            Value::Object(obj)
        };
        json!({"elements": elements, "d0": table(0), "d1": table(1), "d2": table(2), "eta": table(ETA)})
    }

    pub fn from_json(v: &Value) -> Result<TableFnSet> {
        let elements = v
            .get("elements")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing elements".into()))?;
        let mut t = TableFnSet::default();
        let mut pos = HashMap::new();
        for e in elements {
            let label = e.get("label").and_then(Value::as_str).ok_or_else(|| Error::Parse("element label".into()))?;
            let m = e.get("m").and_then(Value::as_u64).ok_or_else(|| Error::Parse("element m".into()))? as usize;
            let n = e.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Parse("element n".into()))? as usize;
            pos.insert(label.to_string(), t.labels.len());
            t.labels.push(label.into());
            t.bidegrees.push((m, n));
            t.degenerate.push(e.get("degenerate").and_then(Value::as_bool).unwrap_or(false));
        }
        t.ops = vec![BTreeMap::new(); t.labels.len()];
        for (key, eps) in [("d0", 0u8), ("d1", 1), ("d2", 2), ("eta", ETA)] {
            let Some(obj) = v.get(key).and_then(Value::as_object) else { continue };
            for (x, row) in obj {
                let xi = *pos.get(x).ok_or_else(|| Error::Parse(format!("unknown element {x}")))?;
                let row = row.as_object().ok_or_else(|| Error::Parse("operator row".into()))?;
                for (i, y) in row {
                    let i: usize = i.parse().map_err(|_| Error::Parse(format!("bad index {i}")))?;
                    let y = y.as_str().ok_or_else(|| Error::Parse("operator target".into()))?;
                    let yi = *pos.get(y).ok_or_else(|| Error::Parse(format!("unknown element {y}")))?;
                    t.ops[xi].insert((eps, i), yi);
                }
            }
        }
        Ok(t)
    }
}

impl FnOps for TableFnSet {
    type Elem = TableElem;

    fn bidegree(&self, x: &TableElem) -> (usize, usize) {
        self.bidegrees[x.0]
    }

    fn face(&self, x: &TableElem, eps: u8, i: usize) -> Option<TableElem> {
        self.ops[x.0].get(&(eps, i)).map(|&y| self.elem(y))
    }

    fn degeneracy(&self, x: &TableElem, i: usize) -> Option<TableElem> {
        self.ops[x.0].get(&(ETA, i)).map(|&y| self.elem(y))
    }

    fn is_degenerate(&self, x: &TableElem) -> bool {
        self.degenerate[x.0]
    }
}

impl FnSet for TableFnSet {
    fn nondegenerate(&self, r: usize) -> Vec<TableElem> {
        let set: BTreeSet<usize> = (0..self.labels.len())
            .filter(|&i| !self.degenerate[i] && self.bidegrees[i].0 + self.bidegrees[i].1 == r)
            .collect();
        set.into_iter().map(|i| self.elem(i)).collect()
    }
}
