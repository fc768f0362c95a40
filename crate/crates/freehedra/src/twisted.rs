//! Cobar and bar constructions, their acyclic versions, and the bitwisted
//! Cartier and Hochschild complexes, all truncated at a total degree.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::cell::add_term;
use crate::chain::{from_boundary, ChainComplex, Ring};
use crate::error::{Error, Result};
use crate::hga::{reduce, Hga, Vector};
use crate::simplicial::{aw_diagonal, simplex_boundary, SimplicialSet};

fn pm(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Basis bookkeeping shared by coalgebras and algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    pub ring: Ring,
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
    pub unit: usize,
}

impl Carrier {
    fn check_one_reduced(&self) -> Result<()> {
        let zero = self.degrees.iter().filter(|&&d| d == 0).count();
        if zero != 1 || self.degrees[self.unit] != 0 {
            return Err(Error::NotOneReduced("degree 0 must be spanned by the unit".into()));
        }
        if let Some(i) = self.degrees.iter().position(|&d| d == 1) {
            return Err(Error::NotOneReduced(format!("{} has degree 1", self.labels[i])));
        }
        Ok(())
    }

    fn index(&self) -> HashMap<&str, usize> {
        self.labels.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect()
    }

    /// Elements of positive degree, the letters of bar and cobar words.
    pub fn letters(&self) -> Vec<usize> {
        (0..self.labels.len()).filter(|&i| self.degrees[i] > 0).collect()
    }

    fn generators_json(&self) -> Value {
        Value::Array(
            self.labels
                .iter()
                .zip(&self.degrees)
                .map(|(l, d)| json!({"label": l, "degree": d, "parity": d % 2}))
                .collect(),
        )
    }

    fn parse(v: &Value, ring: Ring) -> Result<Self> {
        let gens = v["generators"].as_array().ok_or_else(|| Error::Parse("missing generators".into()))?;
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        for g in gens {
            let l = g["label"].as_str().ok_or_else(|| Error::Parse("generator label".into()))?;
            let d = g["degree"].as_u64().ok_or_else(|| Error::Parse(format!("degree of {l}")))? as usize;
            if let Some(p) = g.get("parity").and_then(Value::as_u64) {
                if p as usize != d % 2 {
                    return Err(Error::Parse(format!("parity of {l}")));
                }
            }
            labels.push(l.to_string());
            degrees.push(d);
        }
        let unit = match v.get("unit").and_then(Value::as_str) {
            Some(u) => labels.iter().position(|l| l == u).ok_or_else(|| Error::Parse(format!("unknown unit {u}")))?,
            None => degrees.iter().position(|&d| d == 0).ok_or_else(|| Error::Parse("no unit".into()))?,
        };
        Ok(Carrier { ring, labels, degrees, unit })
    }
}

fn parse_vector(v: &Value, idx: &HashMap<&str, usize>) -> Result<Vector> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("expected {label: coefficient}".into()))?;
    let mut out = Vector::new();
    for (k, c) in obj {
        let i = *idx.get(k.as_str()).ok_or_else(|| Error::Parse(format!("unknown label {k}")))?;
        add_term(&mut out, i, c.as_i64().ok_or_else(|| Error::Parse(format!("coefficient of {k}")))?);
    }
    Ok(out)
}

fn vector_json(c: &Carrier, v: &Vector) -> Value {
    Value::Object(v.iter().map(|(&i, &x)| (c.labels[i].clone(), json!(x))).collect())
}

fn parse_diff(v: &Value, c: &Carrier, idx: &HashMap<&str, usize>) -> Result<Vec<Vector>> {
    let mut d = vec![Vector::new(); c.labels.len()];
    if let Some(obj) = v.get("diff").and_then(Value::as_object) {
        for (k, img) in obj {
            let i = *idx.get(k.as_str()).ok_or_else(|| Error::Parse(format!("unknown label {k}")))?;
            d[i] = parse_vector(img, idx)?;
        }
    }
    Ok(d)
}

fn diff_json(c: &Carrier, d: &[Vector]) -> Value {
    let mut m = Map::new();
    for (i, v) in d.iter().enumerate() {
        if !v.is_empty() {
            m.insert(c.labels[i].clone(), vector_json(c, v));
        }
    }
    Value::Object(m)
}

/// A degreewise finite dg coalgebra with a chosen basis; `d` lowers degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dgc {
    pub carrier: Carrier,
    pub d: Vec<Vector>,
    pub delta: Vec<BTreeMap<(usize, usize), i64>>,
}

impl Dgc {
    /// Normalized chains of `x` up to dimension `bound` with the AW diagonal.
    pub fn from_simplicial(x: &SimplicialSet, ring: Ring, bound: usize) -> Result<Self> {
        if !x.is_one_reduced() {
            return Err(Error::NotOneReduced(x.name.clone()));
        }
        let keep: Vec<usize> = (0..x.gens.len()).filter(|&g| x.gens[g].dim <= bound).collect();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let carrier = Carrier {
            ring,
            labels: keep.iter().map(|&g| x.gens[g].name.clone()).collect(),
            degrees: keep.iter().map(|&g| x.gens[g].dim).collect(),
            unit: pos[&x.basepoint()],
        };
        let d = keep
            .iter()
            .map(|&g| {
                let mut v: Vector = simplex_boundary(x, g).into_iter().map(|(h, c)| (pos[&h], c)).collect();
                reduce(ring, &mut v);
                v
            })
            .collect();
        let delta = keep
            .iter()
            .map(|&g| aw_diagonal(x, g).into_iter().map(|((a, b), c)| ((pos[&a], pos[&b]), c)).collect())
            .collect();
        Ok(Dgc { carrier, d, delta })
    }

    /// The coalgebra of a point.
    pub fn point(ring: Ring) -> Self {
        Dgc {
            carrier: Carrier {
                ring,
                labels: vec!["1".into()],
                degrees: vec![0],
                unit: 0,
            },
            d: vec![Vector::new()],
            delta: vec![BTreeMap::from([((0, 0), 1)])],
        }
    }

    /// `Δ' = Δ − Id⊗1 − 1⊗Id` on a positive-degree element.
    pub fn reduced_delta(&self, v: usize) -> Vec<(usize, usize, i64)> {
        let u = self.carrier.unit;
        self.delta[v]
            .iter()
            .filter(|(&(a, b), _)| a != u && b != u)
            .map(|(&(a, b), &c)| (a, b, c))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let c = &self.carrier;
        let mut co = Map::new();
        for (i, t) in self.delta.iter().enumerate() {
            co.insert(
                c.labels[i].clone(),
                Value::Array(t.iter().map(|(&(a, b), &x)| json!([c.labels[a], c.labels[b], x])).collect()),
            );
        }
        json!({
            "generators": c.generators_json(),
            "unit": c.labels[c.unit],
            "diff": diff_json(c, &self.d),
            "coproduct": Value::Object(co),
        })
    }

    pub fn from_json(v: &Value, ring: Ring) -> Result<Self> {
        let carrier = Carrier::parse(v, ring)?;
        let idx = carrier.index();
        let d = parse_diff(v, &carrier, &idx)?;
        let mut delta = vec![BTreeMap::new(); carrier.labels.len()];
        let co = v["coproduct"].as_object().ok_or_else(|| Error::Parse("missing coproduct".into()))?;
        for (k, terms) in co {
            let i = *idx.get(k.as_str()).ok_or_else(|| Error::Parse(format!("unknown label {k}")))?;
            for t in terms.as_array().ok_or_else(|| Error::Parse(format!("coproduct of {k}")))? {
                let get = |j: usize| -> Result<usize> {
                    let s = t[j].as_str().ok_or_else(|| Error::Parse("coproduct term".into()))?;
                    idx.get(s).copied().ok_or_else(|| Error::Parse(format!("unknown label {s}")))
                };
                let c = t[2].as_i64().ok_or_else(|| Error::Parse("coproduct coefficient".into()))?;
                add_term(&mut delta[i], (get(0)?, get(1)?), c);
            }
        }
        drop(idx);
        Ok(Dgc { carrier, d, delta })
    }
}

/// A degreewise finite dg algebra with a chosen basis; `d` raises degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dga {
    pub carrier: Carrier,
    pub d: Vec<Vector>,
    pub product: HashMap<(usize, usize), Vector>,
}

impl Dga {
    /// The underlying dg algebra of an hga, in degrees `0..=top`.
    pub fn from_hga<H: Hga + ?Sized>(h: &H) -> Self {
        let basis: Vec<usize> = (0..=h.top()).flat_map(|k| h.basis(k)).collect();
        let pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let carrier = Carrier {
            ring: h.ring(),
            labels: basis.iter().map(|&b| h.label(b)).collect(),
            degrees: basis.iter().map(|&b| h.degree(b)).collect(),
            unit: pos[&h.unit()],
        };
        let remap = |v: Vector| -> Vector { v.into_iter().filter_map(|(b, c)| pos.get(&b).map(|&i| (i, c))).collect() };
        let d = basis.iter().map(|&b| remap(h.d(b))).collect();
        let mut product = HashMap::new();
        for (i, &a) in basis.iter().enumerate() {
            for (j, &b) in basis.iter().enumerate() {
                if h.degree(a) + h.degree(b) <= h.top() {
                    let v = remap(h.mul(a, b));
                    if !v.is_empty() {
                        product.insert((i, j), v);
                    }
                }
            }
        }
        Dga { carrier, d, product }
    }

    pub fn mul(&self, a: usize, b: usize) -> Vector {
        self.product.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        let c = &self.carrier;
        let mut prods: Vec<_> = self.product.iter().collect();
        prods.sort_by_key(|(k, _)| **k);
        json!({
            "generators": c.generators_json(),
            "unit": c.labels[c.unit],
            "diff": diff_json(c, &self.d),
            "product": Value::Array(prods.into_iter().map(|(&(a, b), v)| json!([c.labels[a], c.labels[b], vector_json(c, v)])).collect()),
        })
    }

    pub fn from_json(v: &Value, ring: Ring) -> Result<Self> {
        let carrier = Carrier::parse(v, ring)?;
        let idx = carrier.index();
        let d = parse_diff(v, &carrier, &idx)?;
        let mut product = HashMap::new();
        for t in v["product"].as_array().ok_or_else(|| Error::Parse("missing product".into()))? {
            let get = |j: usize| -> Result<usize> {
                let s = t[j].as_str().ok_or_else(|| Error::Parse("product term".into()))?;
                idx.get(s).copied().ok_or_else(|| Error::Parse(format!("unknown label {s}")))
            };
            product.insert((get(0)?, get(1)?), parse_vector(&t[2], &idx)?);
        }
        let u = carrier.unit;
        for i in 0..carrier.labels.len() {
            product.entry((u, i)).or_insert_with(|| Vector::from([(i, 1)]));
            product.entry((i, u)).or_insert_with(|| Vector::from([(i, 1)]));
        }
        drop(idx);
        Ok(Dga { carrier, d, product })
    }
}

/// A basis element `head ⊗ [x_1|…|x_n]`; `head` is absent for bare words.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    pub head: Option<usize>,
    pub letters: Vec<usize>,
}

pub type Combo = BTreeMap<Word, i64>;

/// A truncated complex spanned by words, with its differential tabulated.
#[derive(Clone, Debug)]
pub struct WordComplex {
    pub name: String,
    pub carrier: Carrier,
    /// `−1` for chain complexes (cobar side), `+1` for cochain complexes (bar side).
    pub step: i64,
    pub bound: usize,
    pub words: BTreeMap<usize, Vec<Word>>,
    pub diff: HashMap<Word, Combo>,
}

impl WordComplex {
    pub fn degree(&self, w: &Word) -> usize {
        word_degree(&self.carrier, w)
    }

    pub fn label(&self, w: &Word) -> String {
        let c = &self.carrier;
        let mut s = String::new();
        if let Some(h) = w.head {
            let _ = write!(s, "{}⊗", c.labels[h]);
        }
        s.push('[');
        s.push_str(&w.letters.iter().map(|&l| c.labels[l].as_str()).collect::<Vec<_>>().join("|"));
        s.push(']');
        s
    }

    pub fn d(&self, w: &Word) -> Combo {
        self.diff.get(w).cloned().unwrap_or_default()
    }

    pub fn d_combo(&self, x: &Combo) -> Combo {
        let mut out = Combo::new();
        for (w, &c) in x {
            for (v, e) in self.d(w) {
                add_term(&mut out, v, c * e);
            }
        }
        reduce_combo(self.carrier.ring, &mut out);
        out
    }

    pub fn dim(&self, k: usize) -> usize {
        self.words.get(&k).map_or(0, Vec::len)
    }

    pub fn to_chain_complex(&self) -> ChainComplex {
        let index: HashMap<String, &Word> = self.words.values().flatten().map(|w| (self.label(w), w)).collect();
        let bases = self.words.iter().map(|(&k, ws)| (k as i64, ws.iter().map(|w| self.label(w)).collect())).collect();
        from_boundary(self.carrier.ring, self.step, bases, |_, lab| {
            self.d(index[lab]).into_iter().map(|(w, c)| (self.label(&w), BigInt::from(c))).collect()
        })
    }

    /// First word with `d(d(w)) ≠ 0`.
    pub fn square_witness(&self) -> Option<(Word, Combo)> {
        self.words.values().flatten().find_map(|w| {
            let dd = self.d_combo(&self.d(w));
            (!dd.is_empty()).then(|| (w.clone(), dd))
        })
    }
}

fn word_degree(c: &Carrier, w: &Word) -> usize {
    w.head.map_or(0, |h| c.degrees[h]) + w.letters.iter().map(|&l| c.degrees[l] - 1).sum::<usize>()
}

fn reduce_combo(ring: Ring, v: &mut Combo) {
    if let Ring::Mod(p) = ring {
        for c in v.values_mut() {
            *c = c.rem_euclid(p as i64);
        }
    }
    v.retain(|_, c| *c != 0);
}

/// All letter sequences of total desuspended degree `≤ budget`.
fn letter_words(c: &Carrier, budget: usize) -> Vec<Vec<usize>> {
    let letters = c.letters();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), 0usize)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, s) in &frontier {
            for &l in &letters {
                let s2 = s + c.degrees[l] - 1;
                if s2 <= budget {
                    let mut w2: Vec<usize> = w.clone();
                    w2.push(l);
                    out.push(w2.clone());
                    next.push((w2, s2));
                }
            }
        }
        frontier = next;
    }
    out
}

fn build(name: &str, c: &Carrier, step: i64, bound: usize, heads: bool, f: impl Fn(&Word) -> Combo + Sync) -> WordComplex {
    let mut all = Vec::new();
    if heads {
        for h in 0..c.labels.len() {
            if c.degrees[h] <= bound {
                for l in letter_words(c, bound - c.degrees[h]) {
                    all.push(Word { head: Some(h), letters: l });
                }
            }
        }
    } else {
        for l in letter_words(c, bound) {
            all.push(Word { head: None, letters: l });
        }
    }
    let mut words: BTreeMap<usize, Vec<Word>> = (0..=bound).map(|k| (k, Vec::new())).collect();
    for w in &all {
        words.get_mut(&word_degree(c, w)).expect("in range").push(w.clone());
    }
    for ws in words.values_mut() {
        ws.sort();
    }
    let diff: HashMap<Word, Combo> = all
        .par_iter()
        .map(|w| {
            let mut v = f(w);
            v.retain(|t, _| word_degree(c, t) <= bound);
            reduce_combo(c.ring, &mut v);
            (w.clone(), v)
        })
        .collect();
    WordComplex {
        name: name.into(),
        carrier: c.clone(),
        step,
        bound,
        words,
        diff,
    }
}

fn splice(w: &[usize], i: usize, piece: &[usize], drop: usize) -> Vec<usize> {
    let mut out = w[..i].to_vec();
    out.extend_from_slice(piece);
    out.extend_from_slice(&w[i + drop..]);
    out
}

/// The cobar differential on a bare letter sequence.
fn cobar_d(c: &Dgc, w: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    let deg = &c.carrier.degrees;
    let mut out = BTreeMap::new();
    let mut shift = 0;
    for (i, &x) in w.iter().enumerate() {
        let s = pm(shift);
        // d₁[c̄] = −[d_C c‾]
        for (&y, &v) in &c.d[x] {
            add_term(&mut out, splice(w, i, &[y], 1), -s * v);
        }
        // d₂[c̄] = Σ (−1)^{|c′|} [c̄′|c̄″]
        for (a, b, v) in c.reduced_delta(x) {
            add_term(&mut out, splice(w, i, &[a, b], 1), s * pm(deg[a]) * v);
        }
        shift += deg[x] - 1;
    }
    out
}

/// `ε_i = |a_1| + … + |a_i| + i`.
fn eps(deg: &[usize], w: &[usize], i: usize) -> usize {
    w[..i].iter().map(|&a| deg[a] + 1).sum()
}

/// The bar differential on a bare letter sequence, signs exactly as displayed.
fn bar_d(a: &Dga, w: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    let deg = &a.carrier.degrees;
    let mut out = BTreeMap::new();
    for i in 0..w.len() {
        for (&y, &v) in &a.d[w[i]] {
            add_term(&mut out, splice(w, i, &[y], 1), -pm(eps(deg, w, i)) * v);
        }
    }
    for i in 0..w.len().saturating_sub(1) {
        for (&y, &v) in &a.mul(w[i], w[i + 1]) {
            add_term(&mut out, splice(w, i, &[y], 2), -pm(eps(deg, w, i + 1)) * v);
        }
    }
    out
}

fn bare(v: BTreeMap<Vec<usize>, i64>) -> Combo {
    v.into_iter().map(|(l, c)| (Word { head: None, letters: l }, c)).collect()
}

fn headed(h: usize, v: BTreeMap<Vec<usize>, i64>, sign: i64) -> impl Iterator<Item = (Word, i64)> {
    v.into_iter().map(move |(l, c)| (Word { head: Some(h), letters: l }, c * sign))
}

/// `ΩC` up to total degree `bound`.
pub fn cobar(c: &Dgc, bound: usize) -> Result<WordComplex> {
    c.carrier.check_one_reduced()?;
    Ok(build("ΩC", &c.carrier, -1, bound, false, |w| bare(cobar_d(c, &w.letters))))
}

/// `BA` up to total degree `bound`.
pub fn bar(a: &Dga, bound: usize) -> Result<WordComplex> {
    a.carrier.check_one_reduced()?;
    Ok(build("BA", &a.carrier, 1, bound, false, |w| bare(bar_d(a, &w.letters))))
}

/// Which twisting terms a tensor complex carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Twist {
    Left,
    Both,
}

fn cartier_d(c: &Dgc, w: &Word, twist: Twist) -> Combo {
    let deg = &c.carrier.degrees;
    let u = c.carrier.unit;
    let v = w.head.expect("headed word");
    let rest = &w.letters;
    let mut out = Combo::new();
    for (&y, &x) in &c.d[v] {
        add_term(&mut out, Word { head: Some(y), letters: rest.clone() }, x);
    }
    for (t, x) in headed(v, cobar_d(c, rest), pm(deg[v])) {
        add_term(&mut out, t, x);
    }
    // θ₁ from Δ₁ = Δ − Id⊗1
    for (&(a, b), &x) in &c.delta[v] {
        if b == u {
            continue;
        }
        add_term(&mut out, Word { head: Some(a), letters: splice(rest, 0, &[b], 0) }, -pm(deg[a]) * x);
    }
    if twist == Twist::Both {
        // θ₂ from Δ₂ = Δ − 1⊗Id
        let e = eps(deg, rest, rest.len());
        for (&(a, b), &x) in &c.delta[v] {
            if a == u {
                continue;
            }
            let mut l = rest.clone();
            l.push(a);
            add_term(&mut out, Word { head: Some(b), letters: l }, pm((deg[a] + 1) * (deg[b] + e)) * x);
        }
    }
    out
}

fn hochschild_d(a: &Dga, w: &Word, twist: Twist) -> Combo {
    let deg = &a.carrier.degrees;
    let u = w.head.expect("headed word");
    let rest = &w.letters;
    let mut out = Combo::new();
    for (&y, &x) in &a.d[u] {
        add_term(&mut out, Word { head: Some(y), letters: rest.clone() }, x);
    }
    for (t, x) in headed(u, bar_d(a, rest), pm(deg[u])) {
        add_term(&mut out, t, x);
    }
    if let Some(&a1) = rest.first() {
        // θ¹ = −(−1)^{|u|} u a₁ ⊗ [ā₂|…]
        for (&y, &x) in &a.mul(u, a1) {
            add_term(&mut out, Word { head: Some(y), letters: rest[1..].to_vec() }, -pm(deg[u]) * x);
        }
    }
    if twist == Twist::Both {
        if let Some(&an) = rest.last() {
            let n = rest.len();
            let s = pm((deg[an] + 1) * (deg[u] + eps(deg, rest, n - 1)));
            for (&y, &x) in &a.mul(an, u) {
                add_term(&mut out, Word { head: Some(y), letters: rest[..n - 1].to_vec() }, s * x);
            }
        }
    }
    out
}

/// `Ω(C;C) = C ⊗_τ ΩC`, acyclic.
pub fn acyclic_cobar(c: &Dgc, bound: usize) -> Result<WordComplex> {
    c.carrier.check_one_reduced()?;
    Ok(build("Ω(C;C)", &c.carrier, -1, bound, true, |w| cartier_d(c, w, Twist::Left)))
}

/// `B(A;A) = A ⊗_τ BA`, acyclic.
pub fn acyclic_bar(a: &Dga, bound: usize) -> Result<WordComplex> {
    a.carrier.check_one_reduced()?;
    Ok(build("B(A;A)", &a.carrier, 1, bound, true, |w| hochschild_d(a, w, Twist::Left)))
}

/// The Cartier complex `ΛC = C ⊗_τ ⊗_τ ΩC`.
pub fn cartier(c: &Dgc, bound: usize) -> Result<WordComplex> {
    c.carrier.check_one_reduced()?;
    Ok(build("ΛC", &c.carrier, -1, bound, true, |w| cartier_d(c, w, Twist::Both)))
}

/// The Hochschild complex `ΛA = A ⊗_τ ⊗_τ BA`.
pub fn hochschild(a: &Dga, bound: usize) -> Result<WordComplex> {
    a.carrier.check_one_reduced()?;
    Ok(build("ΛA", &a.carrier, 1, bound, true, |w| hochschild_d(a, w, Twist::Both)))
}

/// The twisting part `θ₁ + θ₂` of the Cartier differential on one word.
pub fn cartier_theta(c: &Dgc, w: &Word) -> Combo {
    let deg = &c.carrier.degrees;
    let v = w.head.expect("headed word");
    let mut full = cartier_d(c, w, Twist::Both);
    for (&y, &x) in &c.d[v] {
        add_term(&mut full, Word { head: Some(y), letters: w.letters.clone() }, -x);
    }
    for (t, x) in headed(v, cobar_d(c, &w.letters), -pm(deg[v])) {
        add_term(&mut full, t, x);
    }
    reduce_combo(c.carrier.ring, &mut full);
    full
}

/// The `θ₂` part of the Cartier differential on one word.
pub fn cartier_theta2(c: &Dgc, w: &Word) -> Combo {
    let mut out = cartier_d(c, w, Twist::Both);
    for (t, x) in cartier_d(c, w, Twist::Left) {
        add_term(&mut out, t, -x);
    }
    reduce_combo(c.carrier.ring, &mut out);
    out
}

/// The bar differential on a letter sequence.
pub fn bar_differential(a: &Dga, w: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    bar_d(a, w)
}

/// The Hochschild differential on one word, untruncated.
pub fn hochschild_differential(a: &Dga, w: &Word) -> Combo {
    let mut v = hochschild_d(a, w, Twist::Both);
    reduce_combo(a.carrier.ring, &mut v);
    v
}
