//! The multiplicative layer on Hochschild chains of a homotopy G-algebra: the
//! bar product `μ_E`, the Hochschild product `λ_E`, the correction `φ³`, and
//! truncated Hochschild homology rings.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cell::add_term;
use crate::chain::{smith_normal_form, Ring, SparseMatrix};
use crate::error::{Error, Result};
use crate::hga::{verify_hga, Hga, TrivialHga, Vector};
use crate::homology_ring::{span_rank, Chain, Coords, HomologyRing, RingPresentation};
use crate::twisted::{bar_differential, hochschild, hochschild_differential, Combo, Dga, Word};

fn pm(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Bar words in carrier indices.
pub type BarChain = BTreeMap<Vec<usize>, i64>;

/// Hochschild chains `ΛA = A ⊗ BA` of an hga, with its products.
pub struct HochschildAlgebra<'a, H: Hga + ?Sized> {
    pub hga: &'a H,
    pub dga: Dga,
    basis: Vec<usize>,
    pos: HashMap<usize, usize>,
}

impl<'a, H: Hga + ?Sized> HochschildAlgebra<'a, H> {
    /// Checks the hga identities with `k ≤ 2` before wrapping the carrier.
    pub fn new(h: &'a H) -> Result<Self> {
        let rep = verify_hga(h, 2);
        if let Some(v) = rep.violations.first() {
            return Err(Error::Invalid(format!("carrier is not an hga: {} fails at {:?}", v.identity, v.args)));
        }
        Ok(Self::new_unchecked(h))
    }

    /// Wraps a carrier without checking it.
    pub fn new_unchecked(h: &'a H) -> Self {
        let basis: Vec<usize> = (0..=h.top()).flat_map(|k| h.basis(k)).collect();
        let pos = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        HochschildAlgebra {
            hga: h,
            dga: Dga::from_hga(h),
            basis,
            pos,
        }
    }

    pub fn deg(&self, c: usize) -> usize {
        self.dga.carrier.degrees[c]
    }

    pub fn ring(&self) -> Ring {
        self.dga.carrier.ring
    }

    /// Total degree `|u| + Σ(|a_i| − 1)` of a Hochschild word.
    pub fn word_degree(&self, w: &Word) -> usize {
        w.head.map_or(0, |h| self.deg(h)) + w.letters.iter().map(|&l| self.deg(l) - 1).sum::<usize>()
    }

    /// Total degree `Σ(|a_i| − 1)` of a bar word.
    pub fn bar_degree(&self, w: &[usize]) -> usize {
        w.iter().map(|&l| self.deg(l) - 1).sum()
    }

    /// The carrier's additive grading summed over the letters and head.
    pub fn weight(&self, w: &Word) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for c in w.head.iter().chain(&w.letters) {
            let v = self.hga.weight(self.basis[*c]);
            if out.len() < v.len() {
                out.resize(v.len(), 0);
            }
            for (o, x) in out.iter_mut().zip(v) {
                *o += x;
            }
        }
        out
    }

    /// Carrier index of an hga basis element.
    pub fn index_of(&self, b: usize) -> Option<usize> {
        self.pos.get(&b).copied()
    }

    pub fn label(&self, w: &Word) -> String {
        let l = &self.dga.carrier.labels;
        let head = w.head.map_or(String::new(), |h| format!("{}⊗", l[h]));
        format!("{head}[{}]", w.letters.iter().map(|&c| l[c].as_str()).collect::<Vec<_>>().join("|"))
    }

    pub fn show(&self, c: &Combo) -> String {
        if c.is_empty() {
            return "0".into();
        }
        c.iter().map(|(w, k)| format!("{k:+}·{}", self.label(w))).collect::<Vec<_>>().join(" ")
    }

    /// Hochschild words of total degree at most `bound`.
    pub fn words(&self, bound: usize) -> Result<Vec<Word>> {
        Ok(hochschild(&self.dga, bound)?.words.into_values().flatten().collect())
    }

    /// Bar words of length at most `max_len` and total degree at most `max_deg`.
    pub fn bar_words(&self, max_len: usize, max_deg: usize) -> Vec<Vec<usize>> {
        let letters = self.dga.carrier.letters();
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for &l in &letters {
                    let mut v: Vec<usize> = w.clone();
                    v.push(l);
                    if self.bar_degree(&v) <= max_deg {
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    fn to_carrier(&self, v: Vector) -> Vector {
        v.into_iter().filter_map(|(b, c)| self.pos.get(&b).map(|&i| (i, c))).collect()
    }

    /// `E_{k,1}(a_1, …, a_k; b)` in carrier indices; `k = 0` gives `b`.
    pub fn e(&self, a: &[usize], b: usize) -> Vector {
        if a.is_empty() {
            return Vector::from([(b, 1)]);
        }
        let args: Vec<usize> = a.iter().map(|&x| self.basis[x]).collect();
        self.to_carrier(self.hga.e(&args, self.basis[b]))
    }

    pub fn mul(&self, a: usize, b: usize) -> Vector {
        self.dga.mul(a, b)
    }

    fn eps(&self, w: &[usize]) -> usize {
        w.iter().map(|&a| self.deg(a) + 1).sum()
    }

    /// `μ_E(w_1 ⊗ w_2)`: interleavings of the two words, each `b` letter
    /// absorbing a consecutive block of `a` letters through `E_{k,1}`.
    pub fn mu_e(&self, w1: &[usize], w2: &[usize]) -> BarChain {
        let mut out = BarChain::new();
        let mut stack: Vec<(usize, usize, i64, Vec<Vector>)> = vec![(0, 0, 1, Vec::new())];
        while let Some((i, j, s, pieces)) = stack.pop() {
            if i == w1.len() && j == w2.len() {
                expand(&pieces, s, &mut out);
                continue;
            }
            if i < w1.len() {
                let mut p = pieces.clone();
                p.push(Vector::from([(w1[i], 1)]));
                stack.push((i + 1, j, s, p));
            }
            if j < w2.len() {
                let b = w2[j];
                for k in 0..=w1.len() - i {
                    let block = &w1[i..i + k];
                    let v = self.e(block, b);
                    if v.is_empty() {
                        continue;
                    }
                    let pass = (self.deg(b) + 1) * self.eps(&w1[i + k..]);
                    let mut p = pieces.clone();
                    p.push(v);
                    stack.push((i + k, j + 1, s * pm(pass), p));
                }
            }
        }
        reduce_chain(self.dga.carrier.ring, &mut out);
        out
    }

    /// `μ_E` extended bilinearly.
    pub fn mu_chain(&self, x: &BarChain, y: &BarChain) -> BarChain {
        let mut out = BarChain::new();
        for (a, &c) in x {
            for (b, &e) in y {
                for (w, f) in self.mu_e(a, b) {
                    add_term(&mut out, w, c * e * f);
                }
            }
        }
        reduce_chain(self.dga.carrier.ring, &mut out);
        out
    }

    fn mul_vec(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&a, &c) in x {
            for (&b, &e) in y {
                for (&z, &f) in &self.mul(a, b) {
                    add_term(&mut out, z, c * e * f);
                }
            }
        }
        out
    }

    /// The signed summands of `λ_E(x ⊗ y)`, tagged `(p)` for the first sum and
    /// `(i, j, k)` for the second.
    pub fn lambda_terms(&self, x: &Word, y: &Word) -> Vec<(Vec<usize>, Combo)> {
        let (u, a) = (x.head.expect("headed"), &x.letters);
        let (v, b) = (y.head.expect("headed"), &y.letters);
        let (m, n) = (a.len(), b.len());
        let ea = |r: usize| self.eps(&a[..r]);
        let (du, dv) = (self.deg(u), self.deg(v));
        let mut out = Vec::new();
        let combo = |head: &Vector, tail: &BarChain, s: i64| {
            let mut c = Combo::new();
            for (&h, &k) in head {
                for (w, &e) in tail {
                    add_term(&mut c, Word { head: Some(h), letters: w.clone() }, s * k * e);
                }
            }
            c
        };
        for p in 0..=m {
            let ev = self.e(&a[..p], v);
            if ev.is_empty() {
                continue;
            }
            let head = self.mul_vec(&Vector::from([(u, 1)]), &ev);
            let tail = self.mu_e(&a[p..], b);
            let s = pm(ea(p) + (ea(p) + ea(m)) * dv);
            out.push((vec![p], combo(&head, &tail, s)));
        }
        if n > 0 {
            let bn = b[n - 1];
            let eb = self.eps(&b[..n - 1]);
            for k in 0..=m {
                for j in 0..=k {
                    for i in 0..=j {
                        let mut args: Vec<usize> = a[k..].to_vec();
                        args.push(u);
                        args.extend(&a[..i]);
                        let left = self.e(&args, bn);
                        if left.is_empty() {
                            continue;
                        }
                        let right = self.e(&a[i..j], v);
                        let head = self.mul_vec(&left, &right);
                        if head.is_empty() {
                            continue;
                        }
                        let tail = self.mu_e(&a[j..k], &b[..n - 1]);
                        let e2 = ea(m) + (du + ea(k)) * (ea(k) + ea(m)) + (dv + eb) * (self.deg(bn) + 1) + (ea(j) + ea(k)) * (dv + 1) + ea(k) * (self.deg(bn) + 1);
                        out.push((vec![i, j, k], combo(&head, &tail, pm(e2))));
                    }
                }
            }
        }
        out
    }

    /// `λ_E(x ⊗ y)` on two headed Hochschild words.
    pub fn lambda_e(&self, x: &Word, y: &Word) -> Combo {
        let mut out = Combo::new();
        for (_, c) in self.lambda_terms(x, y) {
            for (w, e) in c {
                add_term(&mut out, w, e);
            }
        }
        reduce_chain(self.dga.carrier.ring, &mut out);
        out
    }

    /// `λ_E` extended bilinearly.
    pub fn lambda_combo(&self, x: &Combo, y: &Combo) -> Combo {
        let mut out = Combo::new();
        for (a, &c) in x {
            for (b, &e) in y {
                for (w, f) in self.lambda_e(a, b) {
                    add_term(&mut out, w, c * e * f);
                }
            }
        }
        reduce_chain(self.ring(), &mut out);
        out
    }

    /// The untruncated Hochschild differential on a chain.
    pub fn d(&self, x: &Combo) -> Combo {
        let mut out = Combo::new();
        for (w, &c) in x {
            for (v, e) in hochschild_differential(&self.dga, w) {
                add_term(&mut out, v, c * e);
            }
        }
        reduce_chain(self.ring(), &mut out);
        out
    }

    fn residual(&self, lhs: &Combo, rhs: &Combo) -> Combo {
        let mut r = lhs.clone();
        for (w, &c) in rhs {
            add_term(&mut r, w.clone(), -c);
        }
        reduce_chain(self.ring(), &mut r);
        r
    }

    /// `d λ_E(x ⊗ y) = λ_E(dx ⊗ y) + (−1)^{|x|} λ_E(x ⊗ dy)` on all pairs of
    /// words with `|x| + |y| ≤ bound`.
    pub fn check_lambda_chain_map(&self, bound: usize) -> Result<ProductReport> {
        let words = self.words(bound)?;
        let pairs: Vec<(&Word, &Word)> = words
            .iter()
            .flat_map(|x| words.iter().map(move |y| (x, y)))
            .filter(|(x, y)| self.word_degree(x) + self.word_degree(y) <= bound)
            .collect();
        let violations: Vec<ProductViolation> = pairs
            .par_iter()
            .filter_map(|&(x, y)| {
                let one = |w: &Word| Combo::from([(w.clone(), 1)]);
                let lhs = self.d(&self.lambda_e(x, y));
                let mut rhs = self.lambda_combo(&self.d(&one(x)), &one(y));
                let s = pm(self.word_degree(x));
                for (w, c) in self.lambda_combo(&one(x), &self.d(&one(y))) {
                    add_term(&mut rhs, w, s * c);
                }
                let r = self.residual(&lhs, &rhs);
                (!r.is_empty()).then(|| ProductViolation {
                    check: "lambda chain map".into(),
                    args: vec![self.label(x), self.label(y)],
                    residual: self.show(&r),
                })
            })
            .collect();
        Ok(ProductReport { checked: pairs.len(), violations })
    }

    fn bar_d(&self, x: &BarChain) -> BarChain {
        let mut out = BarChain::new();
        for (w, &c) in x {
            for (v, e) in bar_differential(&self.dga, w) {
                add_term(&mut out, v, c * e);
            }
        }
        reduce_chain(self.ring(), &mut out);
        out
    }

    fn show_bar(&self, x: &BarChain) -> String {
        self.show(&x.iter().map(|(w, &c)| (Word { head: None, letters: w.clone() }, c)).collect())
    }

    /// `d μ_E(a ⊗ b) = μ_E(da ⊗ b) + (−1)^{|a|} μ_E(a ⊗ db)` on bar words.
    pub fn check_mu_chain_map(&self, max_len: usize, max_deg: usize) -> ProductReport {
        let words = self.bar_words(max_len, max_deg);
        let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = words
            .iter()
            .flat_map(|x| words.iter().map(move |y| (x, y)))
            .filter(|(x, y)| x.len() + y.len() <= max_len && self.bar_degree(x) + self.bar_degree(y) <= max_deg)
            .collect();
        let violations = pairs
            .par_iter()
            .filter_map(|&(x, y)| {
                let one = |w: &Vec<usize>| BarChain::from([(w.clone(), 1)]);
                let lhs = self.bar_d(&self.mu_e(x, y));
                let mut rhs = self.mu_chain(&self.bar_d(&one(x)), &one(y));
                let s = pm(self.bar_degree(x));
                for (w, c) in self.mu_chain(&one(x), &self.bar_d(&one(y))) {
                    add_term(&mut rhs, w, s * c);
                }
                for (w, c) in lhs {
                    add_term(&mut rhs, w, -c);
                }
                reduce_chain(self.ring(), &mut rhs);
                (!rhs.is_empty()).then(|| ProductViolation {
                    check: "mu chain map".into(),
                    args: vec![self.show_bar(&one(x)), self.show_bar(&one(y))],
                    residual: self.show_bar(&rhs),
                })
            })
            .collect();
        ProductReport { checked: pairs.len(), violations }
    }

    /// `(ab)c = a(bc)` for bar words of total length at most `max_len`.
    pub fn check_mu_associativity(&self, max_len: usize, max_deg: usize) -> ProductReport {
        let words = self.bar_words(max_len, max_deg);
        let mut triples = Vec::new();
        for a in &words {
            for b in &words {
                for c in &words {
                    if a.len() + b.len() + c.len() <= max_len && self.bar_degree(a) + self.bar_degree(b) + self.bar_degree(c) <= max_deg {
                        triples.push((a, b, c));
                    }
                }
            }
        }
        let violations = triples
            .par_iter()
            .filter_map(|&(a, b, c)| {
                let one = |w: &Vec<usize>| BarChain::from([(w.clone(), 1)]);
                let left = self.mu_chain(&self.mu_e(a, b), &one(c));
                let mut r = self.mu_chain(&one(a), &self.mu_e(b, c));
                for (w, k) in left {
                    add_term(&mut r, w, -k);
                }
                reduce_chain(self.ring(), &mut r);
                (!r.is_empty()).then(|| ProductViolation {
                    check: "mu associativity".into(),
                    args: vec![self.show_bar(&one(a)), self.show_bar(&one(b)), self.show_bar(&one(c))],
                    residual: self.show_bar(&r),
                })
            })
            .collect();
        ProductReport { checked: triples.len(), violations }
    }

    /// `φ³(u⊗[ ], v⊗[ ], 1⊗[b̄]) = −(−1)^{|u|} E_{2,1}(u, v; b)⊗[ ]`, and zero on other shapes.
    pub fn phi3(&self, x: &Word, y: &Word, z: &Word) -> Combo {
        let unit = self.dga.carrier.unit;
        let mut out = Combo::new();
        if !(x.letters.is_empty() && y.letters.is_empty() && z.head == Some(unit) && z.letters.len() == 1) {
            return out;
        }
        let (Some(u), Some(v)) = (x.head, y.head) else {
            return out;
        };
        let s = pm(self.deg(u) + 1);
        for (c, k) in self.e(&[u, v], z.letters[0]) {
            add_term(&mut out, Word { head: Some(c), letters: Vec::new() }, s * k);
        }
        reduce_chain(self.ring(), &mut out);
        out
    }

    /// `(xy)z − x(yz)`.
    pub fn associator(&self, x: &Word, y: &Word, z: &Word) -> Combo {
        let one = |w: &Word| Combo::from([(w.clone(), 1)]);
        let left = self.lambda_combo(&self.lambda_e(x, y), &one(z));
        let right = self.lambda_combo(&one(x), &self.lambda_e(y, z));
        self.residual(&left, &right)
    }

    /// Integral basis of the positive-degree cocycles of the carrier, as vectors.
    pub fn cocycle_basis(&self) -> Vec<Vector> {
        let c = &self.dga.carrier;
        let ring = self.ring();
        let top = c.degrees.iter().copied().max().unwrap_or(0);
        let mut out = Vec::new();
        for k in 1..=top {
            let src: Vec<usize> = (0..c.labels.len()).filter(|&b| c.degrees[b] == k).collect();
            let dst: Vec<usize> = (0..c.labels.len()).filter(|&b| c.degrees[b] == k + 1).collect();
            let row: HashMap<usize, usize> = dst.iter().enumerate().map(|(i, &b)| (b, i)).collect();
            let mut m = SparseMatrix::zero(dst.len(), src.len());
            for (j, &b) in src.iter().enumerate() {
                for (t, &v) in &self.dga.d[b] {
                    m.add_entry(ring, row[t], j, &BigInt::from(v));
                }
            }
            let snf = smith_normal_form(&m, ring, true);
            let rank = snf.rank();
            let right = snf.right.expect("tracked");
            for col in rank..src.len() {
                let v: Vector = src
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &b)| {
                        let x = &right[i][col];
                        (!x.is_zero()).then(|| (b, i64::try_from(x).expect("small coefficient")))
                    })
                    .collect();
                out.push(v);
            }
        }
        out
    }

    /// `dφ³(x, y, z) = (xy)z − x(yz)` for the displayed shape over a basis of
    /// positive-degree cocycles `u, v, b` with `|u| + |v| + |b| − 1 ≤ bound`.
    pub fn check_phi3(&self, bound: usize) -> ProductReport {
        let unit = self.dga.carrier.unit;
        let cocycles = self.cocycle_basis();
        let vdeg = |v: &Vector| self.deg(*v.keys().next().expect("nonzero cocycle"));
        let mut triples = Vec::new();
        for u in &cocycles {
            for v in &cocycles {
                for b in &cocycles {
                    if vdeg(u) + vdeg(v) + vdeg(b) <= bound + 1 {
                        triples.push((u, v, b));
                    }
                }
            }
        }
        let lift = |v: &Vector, bar: bool| -> Combo {
            v.iter()
                .map(|(&c, &k)| {
                    let w = if bar { Word { head: Some(unit), letters: vec![c] } } else { Word { head: Some(c), letters: Vec::new() } };
                    (w, k)
                })
                .collect()
        };
        let violations = triples
            .par_iter()
            .filter_map(|&(u, v, b)| {
                let (x, y, z) = (lift(u, false), lift(v, false), lift(b, true));
                let mut lhs = Combo::new();
                for (wx, &i) in &x {
                    for (wy, &j) in &y {
                        for (wz, &k) in &z {
                            for (w, c) in self.phi3(wx, wy, wz) {
                                add_term(&mut lhs, w, i * j * k * c);
                            }
                        }
                    }
                }
                let lhs = self.d(&lhs);
                let left = self.lambda_combo(&self.lambda_combo(&x, &y), &z);
                let right = self.lambda_combo(&x, &self.lambda_combo(&y, &z));
                let r = self.residual(&lhs, &self.residual(&left, &right));
                (!r.is_empty()).then(|| ProductViolation {
                    check: "phi3 homotopy".into(),
                    args: vec![self.show(&x), self.show(&y), self.show(&z)],
                    residual: self.show(&r),
                })
            })
            .collect();
        ProductReport { checked: triples.len(), violations }
    }

    /// First triple `(u⊗[ ], v⊗[ ], 1⊗[b̄])` of total degree at most `bound`, in
    /// order of total degree, with a nonzero associator.
    pub fn associator_witness(&self, bound: usize) -> Option<(Word, Word, Word, Combo)> {
        let c = &self.dga.carrier;
        let heads: Vec<usize> = (0..c.labels.len()).filter(|&u| u != c.unit).collect();
        let mut triples = Vec::new();
        for &u in &heads {
            for &v in &heads {
                for b in c.letters() {
                    let t = self.deg(u) + self.deg(v) + self.deg(b) - 1;
                    if t <= bound {
                        triples.push((t, u, v, b));
                    }
                }
            }
        }
        triples.sort();
        triples.into_par_iter().find_map_first(|(_, u, v, b)| {
            let x = Word { head: Some(u), letters: Vec::new() };
            let y = Word { head: Some(v), letters: Vec::new() };
            let z = Word { head: Some(c.unit), letters: vec![b] };
            let a = self.associator(&x, &y, &z);
            (!a.is_empty()).then_some((x, y, z, a))
        })
    }

    /// Hochschild homology through `bound` with products induced by `λ_E`;
    /// `reverse` flips the word order inside each block to change the lifts.
    pub fn hh_ring(&self, bound: usize, reverse: bool) -> Result<HomologyRing<Word>> {
        let wc = hochschild(&self.dga, bound + 1)?;
        let mut cells: Vec<(usize, Word)> = wc.words.iter().flat_map(|(&k, ws)| ws.iter().map(move |w| (k, w.clone()))).collect();
        if reverse {
            cells.reverse();
        }
        let mut hr = HomologyRing::new(self.ring(), bound, cells, |w| self.weight(w), |w| wc.d(w))?;
        hr.multiply(|a, b| self.lambda_combo(a, b))?;
        Ok(hr)
    }
}

fn expand(pieces: &[Vector], sign: i64, out: &mut BarChain) {
    let mut acc: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), sign)];
    for p in pieces {
        let mut next = Vec::new();
        for (w, c) in &acc {
            for (&x, &e) in p {
                let mut w2 = w.clone();
                w2.push(x);
                next.push((w2, c * e));
            }
        }
        acc = next;
    }
    for (w, c) in acc {
        add_term(out, w, c);
    }
}

pub(crate) fn reduce_chain<K: Ord>(ring: crate::chain::Ring, v: &mut BTreeMap<K, i64>) {
    if let crate::chain::Ring::Mod(p) = ring {
        for c in v.values_mut() {
            *c = c.rem_euclid(p as i64);
        }
    }
    v.retain(|_, c| *c != 0);
}

/// A failed product identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductViolation {
    pub check: String,
    pub args: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, Default)]
pub struct ProductReport {
    pub checked: usize,
    pub violations: Vec<ProductViolation>,
}

impl ProductReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(mut self, o: ProductReport) -> ProductReport {
        self.checked += o.checked;
        self.violations.extend(o.violations);
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checked": self.checked,
            "passed": self.passed(),
            "violations": self.violations.iter().take(5).map(|v| json!({
                "check": v.check, "args": v.args, "residual": v.residual,
            })).collect::<Vec<_>>(),
        })
    }
}

/// The reference ring `S(U) ⊗ Λ(s⁻¹U)` on monomials `x^α x̄^S`.
#[derive(Clone, Debug)]
pub struct FreeReference {
    pub ring: Ring,
    pub generators: Vec<(String, usize)>,
    pub bound: usize,
    /// Exponents of the `x`'s and the set of `x̄`'s as a bit mask.
    pub monomials: Vec<(Vec<usize>, u64)>,
    index: HashMap<(Vec<usize>, u64), usize>,
}

impl FreeReference {
    pub fn new(ring: Ring, generators: Vec<(String, usize)>, bound: usize) -> Self {
        let t = TrivialHga::new(ring, generators.clone(), bound).expect("positive degrees");
        let n = generators.len();
        let mut monomials = Vec::new();
        for k in 0..=bound {
            for b in t.basis(k) {
                let alpha = t.weight(b);
                for s in 0..1u64 << n {
                    let bar: usize = (0..n).filter(|i| s >> i & 1 == 1).map(|i| generators[i].1 - 1).sum();
                    if k + bar <= bound {
                        monomials.push((alpha.clone(), s));
                    }
                }
            }
        }
        let mut r = FreeReference { ring, generators, bound, monomials, index: HashMap::new() };
        let mut keyed: Vec<(usize, (Vec<usize>, u64))> = r.monomials.iter().map(|m| (r.degree(m), m.clone())).collect();
        keyed.sort();
        r.monomials = keyed.into_iter().map(|p| p.1).collect();
        r.index = r.monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        r
    }

    fn bar_deg(&self, i: usize) -> usize {
        self.generators[i].1 - 1
    }

    pub fn degree(&self, m: &(Vec<usize>, u64)) -> usize {
        let poly: usize = m.0.iter().zip(&self.generators).map(|(e, (_, d))| e * d).sum();
        poly + (0..self.generators.len()).filter(|i| m.1 >> i & 1 == 1).map(|i| self.bar_deg(i)).sum::<usize>()
    }

    pub fn ranks(&self) -> Vec<usize> {
        let mut out = vec![0; self.bound + 1];
        for m in &self.monomials {
            out[self.degree(m)] += 1;
        }
        out
    }

    pub fn label(&self, i: usize) -> String {
        let (a, s) = &self.monomials[i];
        let mut parts: Vec<String> = Vec::new();
        for (e, (n, _)) in a.iter().zip(&self.generators) {
            match e {
                0 => {}
                1 => parts.push(n.clone()),
                _ => parts.push(format!("{n}^{e}")),
            }
        }
        for (i, (n, _)) in self.generators.iter().enumerate() {
            if s >> i & 1 == 1 {
                parts.push(format!("{n}̄"));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }

    /// Product of two monomials as `(index, sign)`, `None` when it vanishes
    /// or leaves the bound.
    pub fn mul(&self, i: usize, j: usize) -> Option<(usize, i64)> {
        let ((a, s), (b, t)) = (&self.monomials[i], &self.monomials[j]);
        if s & t != 0 {
            return None;
        }
        let n = self.generators.len();
        let g = &self.generators;
        let char2 = self.ring == Ring::Mod(2);
        if !char2 && (0..n).any(|i| g[i].1 % 2 == 1 && a[i] + b[i] > 1) {
            return None;
        }
        let bar_s: usize = (0..n).filter(|i| s >> i & 1 == 1).map(|i| self.bar_deg(i)).sum();
        let poly_b: usize = b.iter().zip(g).map(|(e, (_, d))| e * d).sum();
        let mut e = bar_s * poly_b;
        for p in 0..n {
            for q in 0..p {
                // odd polynomial generators: b's x_q passes a's x_p
                e += a[p] * b[q] * g[p].1 * g[q].1;
                // x̄_q from the right passes x̄_p from the left
                if s >> p & 1 == 1 && t >> q & 1 == 1 {
                    e += self.bar_deg(p) * self.bar_deg(q);
                }
            }
        }
        let c: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        let k = *self.index.get(&(c, s | t))?;
        Some((k, pm(e)))
    }
}

/// Outcome of comparing `HH_*` of a trivial hga with `S(U) ⊗ Λ(s⁻¹U)`.
#[derive(Clone, Debug)]
pub struct Theorem1Report {
    pub generators: Vec<(String, usize)>,
    pub ring: Ring,
    pub bound: usize,
    pub hh_ranks: Vec<usize>,
    pub hh_torsion: Vec<Vec<BigInt>>,
    pub reference_ranks: Vec<usize>,
    /// The correspondence is invertible over the ring in every degree.
    pub invertible: bool,
    pub products_checked: usize,
    pub mismatches: Vec<String>,
    pub presentation: RingPresentation,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.hh_ranks == self.reference_ranks && self.hh_torsion.iter().all(Vec::is_empty) && self.invertible && self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "generators": self.generators.iter().map(|(n, d)| json!({"name": n, "degree": d})).collect::<Vec<_>>(),
            "ring": self.ring.to_string(),
            "bound": self.bound,
            "hh_ranks": self.hh_ranks,
            "hh_torsion": self.hh_torsion.iter().map(|t| t.iter().map(|o| o.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "reference_ranks": self.reference_ranks,
            "invertible": self.invertible,
            "products_checked": self.products_checked,
            "mismatches": self.mismatches.iter().take(5).collect::<Vec<_>>(),
            "passed": self.passed(),
            "presentation": self.presentation.to_json(),
        })
    }
}

/// True when the square integer matrix is invertible over the ring.
pub fn is_invertible(ring: Ring, m: &[Vec<BigInt>]) -> bool {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) || span_rank(ring, m) != n {
        return false;
    }
    if ring.is_field() {
        return true;
    }
    // Bareiss elimination gives the exact determinant
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return false;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = sign * &a[n - 1][n - 1];
    det == BigInt::one() || det == -BigInt::one()
}

fn add_coords(acc: &mut Coords, c: &Coords, s: i64) {
    for (k, v) in c {
        *acc.entry(*k).or_insert_with(BigInt::zero) += v * s;
    }
}

/// Parses `"x:2,y:3"` into named generators with degrees.
pub fn parse_generators(s: &str) -> Result<Vec<(String, usize)>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (name, deg) = t.split_once(':').ok_or_else(|| Error::Parse(format!("generator {t:?} is not name:degree")))?;
            let deg = deg.trim().parse().map_err(|_| Error::Parse(format!("bad degree in {t:?}")))?;
            Ok((name.trim().to_string(), deg))
        })
        .collect()
}

/// Compares `HH_*` of the trivial hga on `S(U)` through `bound` with the
/// reference `S(U) ⊗ Λ(s⁻¹U)` under `x ↦ [x⊗[ ]]`, `x̄ ↦ [1⊗[x̄]]`.
pub fn theorem1_check(generators: &[(String, usize)], ring: Ring, bound: usize) -> Result<Theorem1Report> {
    if !(ring == Ring::Mod(2) || generators.iter().all(|(_, d)| d % 2 == 0)) {
        return Err(Error::Invalid("Sq₁ = 0 needs even generators or coefficients in Z/2".into()));
    }
    if generators.iter().any(|(_, d)| *d < 2) {
        return Err(Error::NotOneReduced("generators need degree at least 2".into()));
    }
    let t = TrivialHga::new(ring, generators.to_vec(), bound + 1)?;
    let h = HochschildAlgebra::new(&t)?;
    let hr = h.hh_ring(bound, false)?;
    let reference = FreeReference::new(ring, generators.to_vec(), bound);
    let poincare = hr.poincare();
    let n = generators.len();
    let unit = h.dga.carrier.unit;
    let class_of = |w: Word| hr.project(&Chain::from([(w, 1)])).expect("cycle");
    let mut images: Vec<Coords> = Vec::with_capacity(reference.monomials.len());
    for (alpha, s) in &reference.monomials {
        let head = h.index_of(t.monomial(alpha).expect("in range")).expect("carried");
        let mut c = class_of(Word { head: Some(head), letters: Vec::new() });
        for i in (0..n).filter(|i| s >> i & 1 == 1) {
            let mut e = vec![0; n];
            e[i] = 1;
            let letter = h.index_of(t.monomial(&e).expect("in range")).expect("carried");
            c = hr.mul_coords(&c, &class_of(Word { head: Some(unit), letters: vec![letter] }));
        }
        images.push(c);
    }
    let mut invertible = true;
    for k in 0..=bound {
        let cols: Vec<usize> = (0..hr.classes.len()).filter(|&i| hr.classes[i].degree == k).collect();
        let rows: Vec<Vec<BigInt>> = (0..reference.monomials.len())
            .filter(|&m| reference.degree(&reference.monomials[m]) == k)
            .map(|m| cols.iter().map(|c| images[m].get(c).cloned().unwrap_or_default()).collect())
            .collect();
        invertible &= is_invertible(ring, &rows);
    }
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for i in 0..reference.monomials.len() {
        for j in 0..reference.monomials.len() {
            if reference.degree(&reference.monomials[i]) + reference.degree(&reference.monomials[j]) > bound {
                continue;
            }
            checked += 1;
            let lhs = hr.mul_coords(&images[i], &images[j]);
            let mut rhs = Coords::new();
            if let Some((k, s)) = reference.mul(i, j) {
                add_coords(&mut rhs, &images[k], s);
            }
            hr.normalize(&mut rhs);
            if lhs != rhs {
                mismatches.push(format!("{} · {}", reference.label(i), reference.label(j)));
            }
        }
    }
    Ok(Theorem1Report {
        generators: generators.to_vec(),
        ring,
        bound,
        hh_ranks: poincare.iter().map(|p| p.0).collect(),
        hh_torsion: poincare.into_iter().map(|p| p.1).collect(),
        reference_ranks: reference.ranks(),
        invertible,
        products_checked: checked,
        mismatches,
        presentation: hr.presentation(),
    })
}

/// A basis element `x^a y^b ⊗ w` of the closing example, with `w` a word in
/// `x̄ = 0`, `ȳ = 1`, `z = 2` free of `x̄x̄` and `ȳȳ`.
pub type ExampleCell = (usize, usize, Vec<u8>);

/// Which quotient of `T(x̄, ȳ, z)` models the fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FibreModel {
    /// `T(x̄, ȳ, z)/(x̄², ȳ²)` as printed.
    Printed,
    /// Additionally `z² = 0` and `z` graded-commutes with `x̄, ȳ`; words are
    /// normalized with `z` last. Its cohomology is `Λ(x̄, ȳ)`.
    ExteriorZ,
}

impl FibreModel {
    fn admits(self, w: &[u8]) -> bool {
        let no_squares = w.windows(2).all(|p| !(p[0] == p[1] && p[0] < 2));
        match self {
            FibreModel::Printed => no_squares,
            FibreModel::ExteriorZ => no_squares && w.iter().rev().skip(1).all(|&l| l < 2),
        }
    }
}

fn example_cells(top: usize, polynomial: bool, model: FibreModel) -> Vec<(usize, ExampleCell)> {
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..top {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 0..3u8 {
                if l < 2 && w.last() == Some(&l) {
                    continue;
                }
                let mut v: Vec<u8> = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    for w in words.into_iter().filter(|w| model.admits(w)) {
        for a in 0..=top / 2 {
            for b in 0..=top / 2 {
                let k = 2 * (a + b) + w.len();
                if k <= top && (polynomial || a + b == 0) {
                    out.push((k, (a, b, w.clone())));
                }
            }
        }
    }
    out
}

fn example_weight(c: &ExampleCell) -> Vec<usize> {
    let (a, b, w) = c;
    let bars = w.iter().filter(|&&l| l < 2).count();
    let zs = w.len() - bars;
    vec![bars + 2 * zs + 2 * (a + b), *b]
}

fn example_product(x: &ExampleCell, y: &ExampleCell, model: FibreModel) -> Option<(ExampleCell, i64)> {
    let (mut w, mut s) = (x.2.clone(), 1);
    let moved_z = model == FibreModel::ExteriorZ && w.last() == Some(&2);
    if moved_z {
        // z moves past the letters of y, and z² = 0
        if y.2.last() == Some(&2) {
            return None;
        }
        w.pop();
        s = pm(y.2.len());
    }
    w.extend(&y.2);
    if moved_z {
        w.push(2);
    }
    model.admits(&w).then_some(((x.0 + y.0, x.1 + y.1, w), s))
}

fn example_chain_product(x: &Chain<ExampleCell>, y: &Chain<ExampleCell>, ring: Ring, model: FibreModel) -> Chain<ExampleCell> {
    let mut out = Chain::new();
    for (a, &c) in x {
        for (b, &e) in y {
            if let Some((p, s)) = example_product(a, b, model) {
                add_term(&mut out, p, s * c * e);
            }
        }
    }
    reduce_chain(ring, &mut out);
    out
}

/// `dz = x̄ȳ + ȳx̄`, plus `h(z) = x` when `twisted`, extended as a derivation.
fn example_d(c: &ExampleCell, twisted: bool, ring: Ring) -> Chain<ExampleCell> {
    let (a, b, w) = c;
    let mut out = Chain::new();
    for (i, &l) in w.iter().enumerate() {
        if l != 2 {
            continue;
        }
        let s = pm(i);
        let (pre, post) = (&w[..i], &w[i + 1..]);
        for mid in [[0u8, 1], [1, 0]] {
            let mut v = pre.to_vec();
            v.extend(mid);
            v.extend(post);
            if v.windows(2).all(|p| !(p[0] == p[1] && p[0] < 2)) {
                add_term(&mut out, (*a, *b, v), s);
            }
        }
        if twisted {
            let mut v = pre.to_vec();
            v.extend(post);
            if v.windows(2).all(|p| !(p[0] == p[1] && p[0] < 2)) {
                add_term(&mut out, (a + 1, *b, v), s);
            }
        }
    }
    reduce_chain(ring, &mut out);
    out
}

/// Cohomology ring of `C = 𝕜[x,y] ⊗ B` with `d = d^⊗ + h` (or of `B` alone
/// when `polynomial` is false) through `bound`.
pub fn example1_ring(ring: Ring, bound: usize, polynomial: bool, model: FibreModel) -> Result<HomologyRing<ExampleCell>> {
    let cells = example_cells(bound + 1, polynomial, model);
    let mut hr = HomologyRing::new(ring, bound, cells, example_weight, |c| example_d(c, polynomial, ring))?;
    hr.multiply(|x, y| example_chain_product(x, y, ring, model))?;
    Ok(hr)
}

/// Graded algebra maps `Λ(x̄, ȳ) → H` in degree 1 that respect the degree-2
/// relations `x̄² = ȳ² = x̄ȳ + ȳx̄ = 0` and are bijective in degree 1,
/// enumerated exhaustively over a prime field: `(checked, respecting)`.
pub fn exterior_maps<K: Ord + Clone + std::hash::Hash + Send + Sync>(hr: &HomologyRing<K>) -> (usize, usize) {
    let Some(p) = hr.ring.modulus() else {
        return (0, 0);
    };
    let deg1: Vec<usize> = (0..hr.classes.len()).filter(|&i| hr.classes[i].degree == 1).collect();
    if deg1.len() != 2 {
        return (0, 0);
    }
    let p = p as i64;
    let (mut checked, mut respecting) = (0, 0);
    for m in 0..p.pow(4) {
        let e = [m % p, m / p % p, m / p / p % p, m / p / p / p];
        if (e[0] * e[3] - e[1] * e[2]).rem_euclid(p) == 0 {
            continue;
        }
        checked += 1;
        let g = |a: i64, b: i64| -> Coords {
            let mut c = Coords::from([(deg1[0], BigInt::from(a)), (deg1[1], BigInt::from(b))]);
            hr.normalize(&mut c);
            c
        };
        let (g1, g2) = (g(e[0], e[1]), g(e[2], e[3]));
        let mut anti = hr.mul_coords(&g1, &g2);
        add_coords(&mut anti, &hr.mul_coords(&g2, &g1), 1);
        hr.normalize(&mut anti);
        if hr.mul_coords(&g1, &g1).is_empty() && hr.mul_coords(&g2, &g2).is_empty() && anti.is_empty() {
            respecting += 1;
        }
    }
    (checked, respecting)
}

/// Outcome of the closing example.
#[derive(Clone, Debug)]
pub struct Example1Report {
    pub model: FibreModel,
    pub ring: Ring,
    pub bound: usize,
    pub ranks: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
    pub reference_ranks: Vec<usize>,
    /// `H(B)` has the ranks of `Λ(x̄, ȳ)`.
    pub fibre_ranks: Vec<usize>,
    /// Prime of the field over which maps are enumerated.
    pub search_prime: u64,
    pub maps_checked: usize,
    /// Maps respecting the relations for `H(C)`; zero certifies non-isomorphism.
    pub maps_respecting: usize,
    /// The same count for `H(B)`, which is `Λ(x̄, ȳ)`: every map qualifies.
    pub fibre_maps_respecting: usize,
}

impl Example1Report {
    pub fn poincare_equal(&self) -> bool {
        self.ranks == self.reference_ranks && self.torsion.iter().all(Vec::is_empty)
    }

    /// Degree of the obstruction to a ring isomorphism, if one was found.
    pub fn witness_degree(&self) -> Option<usize> {
        (self.maps_checked > 0 && self.maps_respecting == 0).then_some(2)
    }

    /// The filtration by polynomial degree collapses: `E_2 = 𝕜[x,y] ⊗ H(B)` and
    /// `H(B) ≅ Λ(x̄, ȳ)` as rings.
    pub fn associated_graded_agrees(&self) -> bool {
        let mut lam = vec![0; self.bound + 1];
        for (k, v) in [(0, 1), (1, 2), (2, 1)] {
            if k <= self.bound {
                lam[k] = v;
            }
        }
        self.fibre_ranks == lam && self.fibre_maps_respecting == self.maps_checked && self.maps_checked > 0
    }

    pub fn passed(&self) -> bool {
        self.poincare_equal() && self.witness_degree().is_some() && self.associated_graded_agrees()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "model": format!("{:?}", self.model),
            "ring": self.ring.to_string(),
            "bound": self.bound,
            "ranks": self.ranks,
            "reference_ranks": self.reference_ranks,
            "torsion_free": self.torsion.iter().all(Vec::is_empty),
            "poincare_equal": self.poincare_equal(),
            "fibre_ranks": self.fibre_ranks,
            "search_prime": self.search_prime,
            "maps_checked": self.maps_checked,
            "maps_respecting": self.maps_respecting,
            "fibre_maps_respecting": self.fibre_maps_respecting,
            "witness_degree": self.witness_degree(),
            "associated_graded_agrees": self.associated_graded_agrees(),
            "passed": self.passed(),
        })
    }
}

/// The closing example: same Poincaré series as `S(x,y) ⊗ Λ(x̄,ȳ)` through
/// `bound`, but no ring isomorphism. Over Z the map search runs over Z/3,
/// which is valid because `H(C; Z)` is torsion-free in the range.
pub fn example1(ring: Ring, bound: usize, model: FibreModel) -> Result<Example1Report> {
    if bound > 10 {
        return Err(Error::Bound(format!("closing example needs bound ≤ 10, got {bound}")));
    }
    let hc = example1_ring(ring, bound, true, model)?;
    let poincare = hc.poincare();
    let search = match ring {
        Ring::Integers => Ring::Mod(3),
        r => r,
    };
    let search_prime = search.modulus().expect("prime field");
    let (hc_f, hb_f) = if search == ring {
        (None, example1_ring(search, bound.min(3), false, model)?)
    } else {
        (Some(example1_ring(search, 2, true, model)?), example1_ring(search, bound.min(3), false, model)?)
    };
    let (maps_checked, maps_respecting) = exterior_maps(hc_f.as_ref().unwrap_or(&hc));
    let (_, fibre_maps_respecting) = exterior_maps(&hb_f);
    let hb = example1_ring(ring, bound, false, model)?;
    let reference = FreeReference::new(ring, vec![("x".into(), 2), ("y".into(), 2)], bound);
    Ok(Example1Report {
        model,
        ring,
        bound,
        ranks: poincare.iter().map(|p| p.0).collect(),
        torsion: poincare.into_iter().map(|p| p.1).collect(),
        reference_ranks: reference.ranks(),
        fibre_ranks: hb.poincare().iter().map(|p| p.0).collect(),
        search_prime,
        maps_checked,
        maps_respecting,
        fibre_maps_respecting,
    })
}
