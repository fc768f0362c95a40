//! Homotopy G-algebras: the operation interface, Baues operations on simplicial
//! cochains, the trivial structure on a graded commutative algebra, and checkers
//! for the defining identities.

use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cell::add_term;
use crate::chain::{from_boundary, homology_basis, ChainComplex, Ring};
use crate::error::{Error, Result};
use crate::simplicial::{aw_diagonal, simplex_boundary, Simplex, SimplicialSet};

/// A sparse vector over a basis of the carrier.
pub type Vector = BTreeMap<usize, i64>;

/// Reduces coefficients into the ring, dropping zeros.
pub fn reduce(ring: Ring, v: &mut Vector) {
    if let Ring::Mod(p) = ring {
        let p = p as i64;
        for c in v.values_mut() {
            *c = c.rem_euclid(p);
        }
    }
    v.retain(|_, c| *c != 0);
}

/// A dg algebra with operations `E_{k,1}`, truncated above `top()`.
pub trait Hga: Sync {
    fn ring(&self) -> Ring;
    /// Largest degree carried.
    fn top(&self) -> usize;
    fn basis(&self, deg: usize) -> Vec<usize>;
    fn degree(&self, b: usize) -> usize;
    fn label(&self, b: usize) -> String;
    fn unit(&self) -> usize;
    fn d(&self, b: usize) -> Vector;
    fn mul(&self, a: usize, b: usize) -> Vector;
    /// `E_{k,1}(a_1, …, a_k; b)` for `k = a.len() ≥ 1`.
    fn e(&self, a: &[usize], b: usize) -> Vector;
    /// An additive grading preserved by `d` and `E_{k,1}`; empty when none is known.
    fn weight(&self, _b: usize) -> Vec<usize> {
        Vec::new()
    }
}

pub fn scale(v: &Vector, s: i64) -> Vector {
    v.iter().map(|(&k, &c)| (k, c * s)).collect()
}

pub fn add_into(acc: &mut Vector, v: &Vector, s: i64) {
    for (&k, &c) in v {
        add_term(acc, k, c * s);
    }
}

fn pm(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Degree of a homogeneous vector; `None` when zero.
pub fn vdeg<H: Hga + ?Sized>(h: &H, v: &Vector) -> Option<usize> {
    v.keys().next().map(|&b| h.degree(b))
}

pub fn d_vec<H: Hga + ?Sized>(h: &H, v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (&b, &c) in v {
        add_into(&mut out, &h.d(b), c);
    }
    reduce(h.ring(), &mut out);
    out
}

pub fn mul_vec<H: Hga + ?Sized>(h: &H, x: &Vector, y: &Vector) -> Vector {
    let mut out = Vector::new();
    for (&a, &c) in x {
        for (&b, &e) in y {
            add_into(&mut out, &h.mul(a, b), c * e);
        }
    }
    reduce(h.ring(), &mut out);
    out
}

/// Multilinear `E_{k,1}`; `k = 0` returns `b`.
pub fn e_vec<H: Hga + ?Sized>(h: &H, a: &[Vector], b: &Vector) -> Vector {
    if a.is_empty() {
        return b.clone();
    }
    let mut out = Vector::new();
    let mut idx = vec![0usize; a.len()];
    let lists: Vec<Vec<(usize, i64)>> = a.iter().map(|v| v.iter().map(|(&k, &c)| (k, c)).collect()).collect();
    if lists.iter().any(|l| l.is_empty()) {
        return out;
    }
    loop {
        let args: Vec<usize> = idx.iter().zip(&lists).map(|(&i, l)| l[i].0).collect();
        let coef: i64 = idx.iter().zip(&lists).map(|(&i, l)| l[i].1).product();
        for (&bb, &cb) in b {
            add_into(&mut out, &h.e(&args, bb), coef * cb);
        }
        let mut t = 0;
        loop {
            if t == a.len() {
                reduce(h.ring(), &mut out);
                return out;
            }
            idx[t] += 1;
            if idx[t] < lists[t].len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}

pub fn basis_vec(b: usize) -> Vector {
    BTreeMap::from([(b, 1)])
}

/// One term of Baues' cooperation on a simplex `σ` of dimension `n`: the cut
/// vertices `J` and the blocks `[x, y]` with `y > x + 1` that feed the `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BauesTerm {
    pub n: usize,
    pub cuts: Vec<usize>,
    pub blocks: Vec<(usize, usize)>,
}

pub type SignRule = Arc<dyn Fn(&BauesTerm) -> i64 + Send + Sync>;

/// The sign of a Baues term: the Serre unshuffle sign of the cut set `J`
/// against the remaining interior vertices, times
/// `(−1)^{Σ_{s<u} (|a_s|+1)(|a_u|+1) + (|b|+1) Σ_s (|a_s|+1) + k}`.
pub fn baues_sign(t: &BauesTerm) -> i64 {
    let mut e = 0;
    for v in 1..t.n {
        if !t.cuts.contains(&v) {
            e += t.cuts.iter().filter(|&&l| l < v).count();
        }
    }
    let dims: Vec<usize> = t.blocks.iter().map(|(x, y)| y - x).collect();
    let bdim = t.cuts.len() + 1;
    for s in 0..dims.len() {
        for u in s + 1..dims.len() {
            e += (dims[s] + 1) * (dims[u] + 1);
        }
        e += (bdim + 1) * (dims[s] + 1) + 1;
    }
    pm(e)
}

/// Simplicial cochains of a 1-reduced simplicial set with the cup product
/// and Baues' operations.
pub struct Cochains {
    pub x: SimplicialSet,
    pub ring: Ring,
    pub bound: usize,
    sign: SignRule,
    codiff: Vec<Vector>,
    products: HashMap<(usize, usize), Vector>,
    ops: HashMap<(Vec<usize>, usize), Vector>,
}

impl Cochains {
    pub fn new(x: SimplicialSet, ring: Ring, bound: usize) -> Self {
        Self::with_sign(x, ring, bound, Arc::new(baues_sign))
    }

    /// Same carrier with a replaced sign rule (for comparing conventions and fault injection).
    pub fn with_sign(x: SimplicialSet, ring: Ring, bound: usize, sign: SignRule) -> Self {
        let mut c = Cochains {
            x,
            ring,
            bound,
            sign,
            codiff: Vec::new(),
            products: HashMap::new(),
            ops: HashMap::new(),
        };
        c.build();
        c
    }

    fn build(&mut self) {
        let x = &self.x;
        let gens: Vec<usize> = (0..x.gens.len()).filter(|&g| x.gens[g].dim <= self.bound).collect();
        // δf = −(−1)^{|f|} f∘∂
        let mut codiff = vec![Vector::new(); x.gens.len()];
        for &s in &gens {
            let p = x.gens[s].dim;
            for (f, v) in simplex_boundary(x, s) {
                add_term(&mut codiff[f], s, -pm(p - 1) * v);
            }
        }
        // (a·b)(σ) = (−1)^{|a||b|} a(front) b(back)
        let mut products: HashMap<(usize, usize), Vector> = HashMap::new();
        for &s in &gens {
            for ((f, b), v) in aw_diagonal(x, s) {
                let sg = pm(x.gens[f].dim * x.gens[b].dim);
                add_term(products.entry((f, b)).or_default(), s, sg * v);
            }
        }
        let terms: Vec<Vec<((Vec<usize>, usize), i64)>> = gens.par_iter().map(|&s| self.baues_terms(s)).collect();
        let mut ops: HashMap<(Vec<usize>, usize), Vector> = HashMap::new();
        for (&s, list) in gens.iter().zip(terms) {
            for (key, v) in list {
                add_term(ops.entry(key).or_default(), s, v);
            }
        }
        for v in codiff.iter_mut().chain(products.values_mut()).chain(ops.values_mut()) {
            reduce(self.ring, v);
        }
        self.codiff = codiff;
        self.products = products;
        self.ops = ops;
    }

    /// Nonzero terms of the cooperation `E^{k,1}` on generator `s`, all `k ≥ 1`.
    fn baues_terms(&self, s: usize) -> Vec<((Vec<usize>, usize), i64)> {
        let x = &self.x;
        let n = x.gens[s].dim;
        let sigma = Simplex::generator(s);
        let mut out = Vec::new();
        if n < 2 {
            return out;
        }
        for t in baues_terms_on_simplex(n) {
            let mut verts = vec![0];
            verts.extend(&t.cuts);
            verts.push(n);
            let back = x.vertex_face(&sigma, &verts);
            if back.is_degenerate() {
                continue;
            }
            let faces: Vec<Simplex> = t.blocks.iter().map(|&(a, b)| x.vertex_face(&sigma, &(a..=b).collect::<Vec<_>>())).collect();
            if faces.iter().any(Simplex::is_degenerate) {
                continue;
            }
            let args = faces.into_iter().map(|f| f.gen).collect();
            out.push(((args, back.gen), (self.sign)(&t)));
        }
        out
    }
}

impl Hga for Cochains {
    fn ring(&self) -> Ring {
        self.ring
    }

    fn top(&self) -> usize {
        self.bound
    }

    fn basis(&self, deg: usize) -> Vec<usize> {
        if deg > self.bound {
            return Vec::new();
        }
        self.x.generators(deg)
    }

    fn degree(&self, b: usize) -> usize {
        self.x.gens[b].dim
    }

    fn label(&self, b: usize) -> String {
        format!("{}*", self.x.gens[b].name)
    }

    fn unit(&self) -> usize {
        self.x.basepoint()
    }

    fn d(&self, b: usize) -> Vector {
        self.codiff[b].clone()
    }

    fn mul(&self, a: usize, b: usize) -> Vector {
        self.products.get(&(a, b)).cloned().unwrap_or_default()
    }

    fn e(&self, a: &[usize], b: usize) -> Vector {
        self.ops.get(&(a.to_vec(), b)).cloned().unwrap_or_default()
    }
}

/// The Baues terms on an `n`-simplex: every cut set with at least one block.
pub fn baues_terms_on_simplex(n: usize) -> Vec<BauesTerm> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let cuts: Vec<usize> = (1..n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let mut verts = vec![0];
        verts.extend(&cuts);
        verts.push(n);
        let blocks: Vec<(usize, usize)> = verts.windows(2).filter(|w| w[1] > w[0] + 1).map(|w| (w[0], w[1])).collect();
        if !blocks.is_empty() {
            out.push(BauesTerm { n, cuts, blocks });
        }
    }
    out
}

/// The frozen sign table for simplices of dimension `2..=max_n`.
pub fn sign_table(max_n: usize, sign: &dyn Fn(&BauesTerm) -> i64) -> Value {
    let rows: Vec<Value> = (2..=max_n)
        .flat_map(baues_terms_on_simplex)
        .map(|t| json!({"n": t.n, "cuts": t.cuts, "blocks": t.blocks, "sign": sign(&t)}))
        .collect();
    json!({ "terms": rows })
}

/// The carrier as a cochain complex (step `+1`) in degrees `0..=top`.
pub fn cochain_complex<H: Hga + ?Sized>(h: &H) -> ChainComplex {
    let bases = (0..=h.top()).map(|k| (k as i64, h.basis(k).into_iter().map(|b| h.label(b)).collect())).collect();
    let index: HashMap<String, usize> = (0..=h.top()).flat_map(|k| h.basis(k)).map(|b| (h.label(b), b)).collect();
    from_boundary(h.ring(), 1, bases, |_, lab| {
        h.d(index[lab]).into_iter().map(|(b, v)| (h.label(b), BigInt::from(v))).collect()
    })
}

/// Coordinates of a cocycle in a chosen basis of `H^k`.
pub fn cohomology_class<H: Hga + ?Sized>(h: &H, z: &Vector) -> Result<Vec<BigInt>> {
    let Some(k) = vdeg(h, z) else {
        return Ok(Vec::new());
    };
    let c = cochain_complex(h);
    let basis = h.basis(k);
    let coords: Vec<BigInt> = basis.iter().map(|b| BigInt::from(z.get(b).copied().unwrap_or(0))).collect();
    homology_basis(&c, k as i64)
        .project(&coords)
        .ok_or_else(|| Error::Invalid("not a cocycle".into()))
}

/// Outcome of `Sq₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sq1 {
    /// Coordinates of `[z ∪₁ z]` in `H^{2n−1}`.
    Defined(Vec<BigInt>),
    /// `z ∪₁ z` is not a cocycle: `n` is odd and `z²` is not of second order.
    Undefined,
}

/// `Sq₁[z] = [z ∪₁ z]` for a homogeneous cocycle `z`.
pub fn sq1<H: Hga + ?Sized>(h: &H, z: &Vector) -> Result<Sq1> {
    let mut z = z.clone();
    reduce(h.ring(), &mut z);
    let Some(n) = vdeg(h, &z) else {
        return Ok(Sq1::Defined(Vec::new()));
    };
    if z.keys().any(|&b| h.degree(b) != n) {
        return Err(Error::Invalid("inhomogeneous cochain".into()));
    }
    if 2 * n - 1 > h.top() {
        return Err(Error::Bound(format!("Sq₁ of a degree-{n} class needs degree {}", 2 * n - 1)));
    }
    if !d_vec(h, &z).is_empty() {
        return Err(Error::Invalid("Sq₁ needs a cocycle".into()));
    }
    let w = e_vec(h, std::slice::from_ref(&z), &z);
    if !d_vec(h, &w).is_empty() {
        return Ok(Sq1::Undefined);
    }
    let c = cochain_complex(h);
    let k = 2 * n - 1;
    let coords: Vec<BigInt> = h.basis(k).iter().map(|b| BigInt::from(w.get(b).copied().unwrap_or(0))).collect();
    let hb = homology_basis(&c, k as i64);
    Ok(Sq1::Defined(hb.project(&coords).expect("cocycle")))
}

/// The trivial hga on the free graded commutative algebra `S(U)`:
/// polynomial on even generators, exterior on odd ones (polynomial over Z/2),
/// `d = 0`, `E_{k,1} = 0`.
pub struct TrivialHga {
    pub ring: Ring,
    pub top: usize,
    pub generators: Vec<(String, usize)>,
    monomials: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl TrivialHga {
    pub fn new(ring: Ring, generators: Vec<(String, usize)>, top: usize) -> Result<Self> {
        if generators.iter().any(|(_, d)| *d == 0) {
            return Err(Error::Invalid("generators need positive degree".into()));
        }
        let mut monomials = vec![vec![0; generators.len()]];
        for (i, (_, d)) in generators.iter().enumerate() {
            let mut next = Vec::new();
            for m in &monomials {
                let used: usize = m.iter().zip(&generators).map(|(e, (_, g))| e * g).sum();
                let cap = if d % 2 == 1 && ring != Ring::Mod(2) { 1 } else { usize::MAX };
                let mut e = 0;
                while e <= cap && used + e * d <= top {
                    let mut m2 = m.clone();
                    m2[i] = e;
                    next.push(m2);
                    e += 1;
                }
            }
            monomials = next;
        }
        monomials.sort_by_key(|m| (m.iter().zip(&generators).map(|(e, (_, d))| e * d).sum::<usize>(), m.clone()));
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(TrivialHga {
            ring,
            top,
            generators,
            monomials,
            index,
        })
    }

    pub fn monomial(&self, exps: &[usize]) -> Option<usize> {
        self.index.get(exps).copied()
    }
}

impl Hga for TrivialHga {
    fn ring(&self) -> Ring {
        self.ring
    }

    fn top(&self) -> usize {
        self.top
    }

    fn basis(&self, deg: usize) -> Vec<usize> {
        (0..self.monomials.len()).filter(|&b| self.degree(b) == deg).collect()
    }

    fn degree(&self, b: usize) -> usize {
        self.monomials[b].iter().zip(&self.generators).map(|(e, (_, d))| e * d).sum()
    }

    fn label(&self, b: usize) -> String {
        let parts: Vec<String> = self.monomials[b]
            .iter()
            .zip(&self.generators)
            .filter(|(e, _)| **e > 0)
            .map(|(e, (n, _))| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }

    fn unit(&self) -> usize {
        0
    }

    fn d(&self, _: usize) -> Vector {
        Vector::new()
    }

    fn mul(&self, a: usize, b: usize) -> Vector {
        let (x, y) = (&self.monomials[a], &self.monomials[b]);
        let odd = |i: usize| self.generators[i].1 % 2 == 1 && self.ring != Ring::Mod(2);
        let mut e = 0;
        for i in 0..x.len() {
            for j in 0..i {
                if odd(i) && odd(j) {
                    e += x[i] * y[j];
                }
            }
        }
        let m: Vec<usize> = x.iter().zip(y).map(|(p, q)| p + q).collect();
        let mut out = Vector::new();
        if m.iter().enumerate().any(|(i, &v)| odd(i) && v > 1) {
            return out;
        }
        if let Some(&c) = self.index.get(&m) {
            out.insert(c, pm(e));
        }
        reduce(self.ring, &mut out);
        out
    }

    fn e(&self, _: &[usize], _: usize) -> Vector {
        Vector::new()
    }

    fn weight(&self, b: usize) -> Vec<usize> {
        self.monomials[b].clone()
    }
}

/// A failed identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HgaViolation {
    pub identity: String,
    pub args: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default)]
pub struct HgaReport {
    pub instances: usize,
    pub violations: Vec<HgaViolation>,
}

impl HgaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(mut self, o: HgaReport) -> HgaReport {
        self.instances += o.instances;
        self.violations.extend(o.violations);
        self
    }
}

pub fn show_vec<H: Hga + ?Sized>(h: &H, v: &Vector) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(|(&b, &c)| format!("{c:+}{}", h.label(b))).collect::<Vec<_>>().join(" ")
}

/// Tuples of positive-degree basis elements of length `len` with degree sum `≤ max_sum`.
pub fn tuples<H: Hga + ?Sized>(h: &H, len: usize, max_sum: usize) -> Vec<Vec<usize>> {
    let pos: Vec<usize> = (1..=h.top()).flat_map(|d| h.basis(d)).collect();
    let mut out = vec![(Vec::new(), 0usize)];
    for _ in 0..len {
        let mut next = Vec::new();
        for (t, s) in &out {
            for &b in &pos {
                let s2 = s + h.degree(b);
                if s2 <= max_sum {
                    let mut t2 = t.clone();
                    t2.push(b);
                    next.push((t2, s2));
                }
            }
        }
        out = next;
    }
    out.into_iter().map(|(t, _)| t).collect()
}

/// `ε_r = Σ_{i ≤ r} (|x_i| + 1)`.
fn eps<H: Hga + ?Sized>(h: &H, xs: &[usize], r: usize) -> usize {
    xs[..r].iter().map(|&x| h.degree(x) + 1).sum()
}

fn verdict<H: Hga + ?Sized>(h: &H, name: &str, args: &[usize], lhs: Vector, rhs: Vector) -> HgaReport {
    let mut rep = HgaReport {
        instances: 1,
        ..Default::default()
    };
    let (mut l, mut r) = (lhs, rhs);
    reduce(h.ring(), &mut l);
    reduce(h.ring(), &mut r);
    if l != r {
        rep.violations.push(HgaViolation {
            identity: name.into(),
            args: args.iter().map(|&b| h.label(b)).collect(),
            lhs: show_vec(h, &l),
            rhs: show_vec(h, &r),
        });
    }
    rep
}

fn run<H: Hga + ?Sized>(cases: Vec<Vec<usize>>, f: impl Fn(&[usize]) -> HgaReport + Sync) -> HgaReport {
    cases.par_iter().map(|t| f(t)).reduce(HgaReport::default, HgaReport::merge)
}

/// The differential identity for `E_{k,1}`.
pub fn check_differential<H: Hga + ?Sized>(h: &H, k: usize) -> HgaReport {
    let cases: Vec<Vec<usize>> = tuples(h, k + 1, (h.top() + k).saturating_sub(1));
    run::<H>(cases, |t| {
        let (a, b) = (&t[..k], t[k]);
        let av: Vec<Vector> = a.iter().map(|&x| basis_vec(x)).collect();
        let bv = basis_vec(b);
        let lhs = d_vec(h, &h.e(a, b));
        let mut rhs = Vector::new();
        for i in 0..k {
            let mut args = av.clone();
            args[i] = d_vec(h, &av[i]);
            add_into(&mut rhs, &e_vec(h, &args, &bv), pm(eps(h, a, i)));
        }
        add_into(&mut rhs, &e_vec(h, &av, &d_vec(h, &bv)), pm(eps(h, a, k)));
        for i in 0..k.saturating_sub(1) {
            let mut args: Vec<Vector> = av[..i].to_vec();
            args.push(mul_vec(h, &av[i], &av[i + 1]));
            args.extend(av[i + 2..].iter().cloned());
            add_into(&mut rhs, &e_vec(h, &args, &bv), pm(eps(h, a, i + 1)));
        }
        let sk = pm(eps(h, a, k) + h.degree(a[k - 1]) * h.degree(b));
        add_into(&mut rhs, &mul_vec(h, &e_vec(h, &av[..k - 1], &bv), &av[k - 1]), sk);
        add_into(&mut rhs, &mul_vec(h, &av[0], &e_vec(h, &av[1..], &bv)), pm(h.degree(a[0])));
        verdict(h, &format!("dE_{k},1"), t, lhs, rhs)
    })
}

/// `E_{k,1}(a; b·c) = Σ_i ± E_{i,1}(a_1..a_i; b)·E_{k−i,1}(a_{i+1}..a_k; c)`.
pub fn check_product<H: Hga + ?Sized>(h: &H, k: usize) -> HgaReport {
    let cases = tuples(h, k + 2, h.top() + k);
    run::<H>(cases, |t| {
        let (a, b, c) = (&t[..k], t[k], t[k + 1]);
        let av: Vec<Vector> = a.iter().map(|&x| basis_vec(x)).collect();
        let lhs = e_vec(h, &av, &h.mul(b, c));
        let mut rhs = Vector::new();
        for i in 0..=k {
            let s = pm(h.degree(b) * (eps(h, a, i) + eps(h, a, k)));
            let l = e_vec(h, &av[..i], &basis_vec(b));
            let r = e_vec(h, &av[i..], &basis_vec(c));
            add_into(&mut rhs, &mul_vec(h, &l, &r), s);
        }
        verdict(h, &format!("E_{k},1(a;bc)"), t, lhs, rhs)
    })
}

/// Right side of the composition identity as a list of `(sign, x_1..x_p)`.
fn compositions<H: Hga + ?Sized>(h: &H, a: &[usize], b: &[usize]) -> Vec<(i64, Vec<Vector>)> {
    let k = a.len();
    let total = eps(h, a, k);
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize, usize, Vec<Vector>)> = vec![(0, 0, 0, Vec::new())];
    while let Some((i, j, e, xs)) = stack.pop() {
        if i == k && j == b.len() {
            out.push((pm(e), xs));
            continue;
        }
        if i < k {
            let mut x2 = xs.clone();
            x2.push(basis_vec(a[i]));
            stack.push((i + 1, j, e, x2));
        }
        if j < b.len() {
            for r in 0..=(k - i) {
                let args: Vec<Vector> = a[i..i + r].iter().map(|&x| basis_vec(x)).collect();
                let v = e_vec(h, &args, &basis_vec(b[j]));
                if v.is_empty() {
                    continue;
                }
                let mut x2 = xs.clone();
                x2.push(v);
                let e2 = e + (h.degree(b[j]) + 1) * (total - eps(h, a, i + r));
                stack.push((i + r, j + 1, e2, x2));
            }
        }
    }
    out
}

/// `Σ ± E_{p,1}(…; c) = E_{k,1}(a; E_{ℓ,1}(b; c))`.
pub fn check_composition<H: Hga + ?Sized>(h: &H, k: usize, l: usize) -> HgaReport {
    let cases = tuples(h, k + l + 1, h.top() + k + l);
    run::<H>(cases, |t| {
        let (a, b, c) = (&t[..k], &t[k..k + l], t[k + l]);
        let av: Vec<Vector> = a.iter().map(|&x| basis_vec(x)).collect();
        let rhs = e_vec(h, &av, &h.e(b, c));
        let mut lhs = Vector::new();
        for (s, xs) in compositions(h, a, b) {
            add_into(&mut lhs, &e_vec(h, &xs, &basis_vec(c)), s);
        }
        verdict(h, &format!("E_{k},1(a;E_{l},1(b;c))"), t, lhs, rhs)
    })
}

/// The three defining identities for all `k ≤ kmax`, compositions with `k + ℓ ≤ kmax + 1`.
pub fn verify_hga<H: Hga + ?Sized>(h: &H, kmax: usize) -> HgaReport {
    let mut rep = HgaReport::default();
    for k in 1..=kmax {
        rep = rep.merge(check_differential(h, k)).merge(check_product(h, k));
        for l in 1..=(kmax + 1 - k) {
            rep = rep.merge(check_composition(h, k, l));
        }
    }
    rep
}

/// `c ∪₁ (a·b) = (c ∪₁ a)·b + (−1)^{|a|(|c|+1)} a·(c ∪₁ b)` and the `E_{2,1}` homotopy formula.
pub fn hirsch_check<H: Hga + ?Sized>(h: &H) -> HgaReport {
    let cases = tuples(h, 3, h.top() + 1);
    let left = run::<H>(cases.clone(), |t| {
        let (c, a, b) = (t[0], t[1], t[2]);
        let lhs = e_vec(h, &[basis_vec(c)], &h.mul(a, b));
        let mut rhs = mul_vec(h, &h.e(&[c], a), &basis_vec(b));
        add_into(&mut rhs, &mul_vec(h, &basis_vec(a), &h.e(&[c], b)), pm(h.degree(a) * (h.degree(c) + 1)));
        verdict(h, "c∪₁(ab)", t, lhs, rhs)
    });
    let homotopy = run::<H>(cases, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let (da, db, dc) = (h.degree(a), h.degree(b), h.degree(c));
        let (av, bv, cv) = (basis_vec(a), basis_vec(b), basis_vec(c));
        let cup1 = |x: &Vector, y: &Vector| e_vec(h, std::slice::from_ref(x), y);
        let lhs = d_vec(h, &h.e(&[a, b], c));
        let mut rhs = e_vec(h, &[d_vec(h, &av), bv.clone()], &cv);
        add_into(&mut rhs, &e_vec(h, &[av.clone(), d_vec(h, &bv)], &cv), -pm(da));
        add_into(&mut rhs, &e_vec(h, &[av.clone(), bv.clone()], &d_vec(h, &cv)), pm(da + db));
        add_into(&mut rhs, &cup1(&h.mul(a, b), &cv), -pm(da));
        add_into(&mut rhs, &mul_vec(h, &cup1(&av, &cv), &bv), pm(da + db + db * dc));
        add_into(&mut rhs, &mul_vec(h, &av, &cup1(&bv, &cv)), pm(da));
        verdict(h, "dE_2,1(a,b;c)", t, lhs, rhs)
    });
    left.merge(homotopy)
}

/// First triple violating the strict right derivation `(a·b) ∪₁ c = ±(a ∪₁ c)·b + a·(b ∪₁ c)`.
pub fn right_hirsch_witness<H: Hga + ?Sized>(h: &H) -> Option<HgaViolation> {
    tuples(h, 3, h.top() + 1).into_iter().find_map(|t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let lhs = e_vec(h, &[h.mul(a, b)], &basis_vec(c));
        let mut rhs = mul_vec(h, &h.e(&[a], c), &basis_vec(b));
        rhs = scale(&rhs, pm(h.degree(b) * h.degree(c)));
        add_into(&mut rhs, &mul_vec(h, &basis_vec(a), &h.e(&[b], c)), 1);
        verdict(h, "(ab)∪₁c", &t, lhs, rhs).violations.pop()
    })
}
