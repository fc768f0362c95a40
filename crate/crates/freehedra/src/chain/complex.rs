//! Bounded free graded complexes with sparse differentials.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};
use std::collections::{BTreeMap, HashMap};

use super::matrix::SparseMatrix;
use super::ring::{sign, Ring};
use crate::error::{Error, Result};

/// A free graded module with a differential of degree `step` (−1 for chains, +1 for cochains).
///
/// `diffs[k]` is the matrix of `d: C_k → C_{k+step}`; rows index the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub ring: Ring,
    pub step: i64,
    pub bases: BTreeMap<i64, Vec<String>>,
    pub diffs: BTreeMap<i64, SparseMatrix>,
}

/// Where `d∘d` fails to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroWitness {
    pub degree: i64,
    pub row: usize,
    pub col: usize,
    pub value: BigInt,
}

impl ChainComplex {
    pub fn new(ring: Ring, step: i64) -> Self {
        assert!(step == 1 || step == -1, "step must be ±1");
        ChainComplex {
            ring,
            step,
            bases: BTreeMap::new(),
            diffs: BTreeMap::new(),
        }
    }

    pub fn dim(&self, k: i64) -> usize {
        self.bases.get(&k).map_or(0, |b| b.len())
    }

    pub fn basis(&self, k: i64) -> &[String] {
        self.bases.get(&k).map_or(&[], |b| b.as_slice())
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.bases.keys().copied()
    }

    pub fn lo(&self) -> Option<i64> {
        self.bases.keys().next().copied()
    }

    pub fn hi(&self) -> Option<i64> {
        self.bases.keys().next_back().copied()
    }

    /// The differential out of degree `k`, as a `dim(k+step) × dim(k)` matrix.
    pub fn d(&self, k: i64) -> SparseMatrix {
        match self.diffs.get(&k) {
            Some(m) => m.clone(),
            None => SparseMatrix::zero(self.dim(k + self.step), self.dim(k)),
        }
    }

    pub fn d_ref(&self, k: i64) -> Option<&SparseMatrix> {
        self.diffs.get(&k)
    }

    pub fn set_basis(&mut self, k: i64, labels: Vec<String>) {
        self.bases.insert(k, labels);
    }

    pub fn set_d(&mut self, k: i64, m: SparseMatrix) {
        assert_eq!(m.cols, self.dim(k), "differential source dimension");
        assert_eq!(m.rows, self.dim(k + self.step), "differential target dimension");
        if !m.is_zero() {
            self.diffs.insert(k, m);
        } else {
            self.diffs.remove(&k);
        }
    }

    pub fn index_of(&self, k: i64) -> HashMap<&str, usize> {
        self.basis(k).iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.bases.values().map(|b| b.len()).sum()
    }

    /// Euler characteristic Σ (−1)^k dim C_k.
    pub fn euler_characteristic(&self) -> i64 {
        self.bases.iter().map(|(k, b)| sign(*k) * b.len() as i64).sum()
    }
}

/// Checks every composite `d∘d`; returns the first nonzero entry found.
pub fn compose_is_zero(c: &ChainComplex) -> std::result::Result<(), ZeroWitness> {
    for (&k, d1) in &c.diffs {
        if let Some(d2) = c.diffs.get(&(k + c.step)) {
            let prod = d2.mul(c.ring, d1);
            if let Some((&(row, col), value)) = prod.entries.iter().next() {
                return Err(ZeroWitness {
                    degree: k,
                    row,
                    col,
                    value: value.clone(),
                });
            }
        }
    }
    Ok(())
}

/// Asserts `d∘d = 0`, returning the structural error otherwise.
pub fn check_complex(c: &ChainComplex) -> Result<()> {
    compose_is_zero(c).map_err(|w| Error::NotAComplex {
        degree: w.degree,
        row: w.row,
        col: w.col,
        value: w.value.to_string(),
    })
}

/// Tensor product with the Koszul sign `d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db`.
pub fn tensor(c1: &ChainComplex, c2: &ChainComplex) -> Result<ChainComplex> {
    if c1.ring != c2.ring {
        return Err(Error::RingMismatch(c1.ring.to_string(), c2.ring.to_string()));
    }
    if c1.step != c2.step {
        return Err(Error::Invalid("cannot tensor a chain complex with a cochain complex".into()));
    }
    let ring = c1.ring;
    let step = c1.step;
    let mut out = ChainComplex::new(ring, step);
    // position of (p, i, j) inside total degree p+q
    let mut pos: BTreeMap<i64, Vec<(i64, usize, usize)>> = BTreeMap::new();
    for (&p, b1) in &c1.bases {
        for (&q, b2) in &c2.bases {
            let e = pos.entry(p + q).or_default();
            for i in 0..b1.len() {
                for j in 0..b2.len() {
                    e.push((p, i, j));
                }
            }
        }
    }
    let cols1: BTreeMap<i64, _> = c1.diffs.iter().map(|(&k, d)| (k, d.columns())).collect();
    let cols2: BTreeMap<i64, _> = c2.diffs.iter().map(|(&k, d)| (k, d.columns())).collect();
    let mut index: HashMap<(i64, i64, usize, usize), usize> = HashMap::new();
    for (&n, list) in &pos {
        let mut labels = Vec::with_capacity(list.len());
        for (idx, &(p, i, j)) in list.iter().enumerate() {
            index.insert((p, n - p, i, j), idx);
            labels.push(format!("{}⊗{}", c1.basis(p)[i], c2.basis(n - p)[j]));
        }
        out.set_basis(n, labels);
    }
    for (&n, list) in &pos {
        let mut m = SparseMatrix::zero(out.dim(n + step), list.len());
        for (col, &(p, i, j)) in list.iter().enumerate() {
            let q = n - p;
            if let Some(d1) = cols1.get(&p) {
                for (r, v) in &d1[i] {
                    let row = index[&(p + step, q, *r, j)];
                    m.add_entry(ring, row, col, v);
                }
            }
            if let Some(d2) = cols2.get(&q) {
                let s = BigInt::from(sign(p));
                for (r, v) in &d2[j] {
                    let row = index[&(p, q + step, i, *r)];
                    m.add_entry(ring, row, col, &(v * &s));
                }
            }
        }
        out.set_d(n, m);
    }
    Ok(out)
}

/// Linear dual with `(δf)(x) = −(−1)^{|f|} f(dx)`; labels gain a trailing `*`.
pub fn dualize(c: &ChainComplex) -> ChainComplex {
    let mut out = ChainComplex::new(c.ring, -c.step);
    for (&k, b) in &c.bases {
        out.set_basis(k, b.iter().map(|s| dual_label(s)).collect());
    }
    for &k in c.bases.keys() {
        // δ out of degree k is the transpose of d into degree k.
        let src = k - c.step;
        if let Some(d) = c.d_ref(src) {
            let s = BigInt::from(-sign(k));
            out.set_d(k, d.transpose().scale(c.ring, &s));
        }
    }
    out
}

fn dual_label(s: &str) -> String {
    format!("{s}*")
}

/// Rescales basis vectors by `(−1)^k` in degree `k`: the evaluation isomorphism
/// `x ↦ (−1)^{|x|} ev_x` that identifies a complex with its double dual.
pub fn koszul_evaluation(c: &ChainComplex) -> ChainComplex {
    let mut out = c.clone();
    out.bases = c
        .bases
        .iter()
        .map(|(&k, b)| (k, b.iter().map(|s| s.strip_suffix("**").unwrap_or(s).to_string()).collect()))
        .collect();
    for (&k, d) in &c.diffs {
        // entry (r in k+step, c in k) scales by (−1)^{k} (−1)^{k+step} = −1
        let s = BigInt::from(sign(k) * sign(k + c.step));
        out.diffs.insert(k, d.scale(c.ring, &s));
    }
    out
}

impl ChainComplex {
    pub fn to_json(&self) -> Value {
        let mut degrees = Map::new();
        for (k, b) in &self.bases {
            degrees.insert(k.to_string(), json!(b));
        }
        let mut diffs = Map::new();
        for (k, d) in &self.diffs {
            let entries: Vec<Value> = d
                .entries
                .iter()
                .map(|(&(r, c), v)| json!([r, c, v.to_string().parse::<i64>().map(Value::from).unwrap_or(Value::String(v.to_string()))]))
                .collect();
            diffs.insert(k.to_string(), Value::Array(entries));
        }
        json!({
            "ring": self.ring.to_string(),
            "step": self.step,
            "degrees": degrees,
            "differentials": diffs,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ring: Ring = v
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing ring".into()))?
            .parse()?;
        let step = v.get("step").and_then(Value::as_i64).unwrap_or(-1);
        if step != 1 && step != -1 {
            return Err(Error::Parse("step must be 1 or -1".into()));
        }
        let mut c = ChainComplex::new(ring, step);
        let degrees = v
            .get("degrees")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("missing degrees".into()))?;
        for (k, labels) in degrees {
            let k: i64 = k.parse().map_err(|_| Error::Parse(format!("bad degree {k}")))?;
            let labels: Vec<String> = serde_json::from_value(labels.clone())?;
            let mut seen = std::collections::HashSet::new();
            for l in &labels {
                if !seen.insert(l) {
                    return Err(Error::Parse(format!("duplicate label {l} in degree {k}")));
                }
            }
            c.set_basis(k, labels);
        }
        if let Some(diffs) = v.get("differentials").and_then(Value::as_object) {
            for (k, entries) in diffs {
                let k: i64 = k.parse().map_err(|_| Error::Parse(format!("bad degree {k}")))?;
                let mut m = SparseMatrix::zero(c.dim(k + step), c.dim(k));
                let entries = entries
                    .as_array()
                    .ok_or_else(|| Error::Parse("differential must be a list".into()))?;
                for e in entries {
                    let e = e.as_array().filter(|e| e.len() == 3).ok_or_else(|| Error::Parse("entry must be [row,col,value]".into()))?;
                    let r = e[0].as_u64().ok_or_else(|| Error::Parse("bad row".into()))? as usize;
                    let col = e[1].as_u64().ok_or_else(|| Error::Parse("bad col".into()))? as usize;
                    let val: BigInt = match &e[2] {
                        Value::Number(n) => BigInt::from(n.as_i64().ok_or_else(|| Error::Parse("bad value".into()))?),
                        Value::String(s) => s.parse().map_err(|_| Error::Parse("bad value".into()))?,
                        _ => return Err(Error::Parse("bad value".into())),
                    };
                    if r >= m.rows || col >= m.cols {
                        return Err(Error::Parse(format!("entry ({r},{col}) out of range in degree {k}")));
                    }
                    m.add_entry(ring, r, col, &val);
                }
                c.set_d(k, m);
            }
        }
        Ok(c)
    }
}

/// The complex with one generator in degree 0.
pub fn point(ring: Ring) -> ChainComplex {
    let mut c = ChainComplex::new(ring, -1);
    c.set_basis(0, vec!["pt".into()]);
    c
}

/// Cellular chains of the interval: two vertices and an edge.
pub fn interval(ring: Ring) -> ChainComplex {
    let mut c = ChainComplex::new(ring, -1);
    c.set_basis(0, vec!["0".into(), "1".into()]);
    c.set_basis(1, vec!["01".into()]);
    let mut d = SparseMatrix::zero(2, 1);
    d.add_entry(ring, 1, 0, &BigInt::one());
    d.add_entry(ring, 0, 0, &-BigInt::one());
    c.set_d(1, d);
    c
}

/// Builds a complex from per-degree label lists and a boundary function on labels.
pub fn from_boundary<F>(ring: Ring, step: i64, bases: BTreeMap<i64, Vec<String>>, mut bd: F) -> ChainComplex
where
    F: FnMut(i64, &str) -> Vec<(String, BigInt)>,
{
    let mut c = ChainComplex::new(ring, step);
    c.bases = bases;
    let keys: Vec<i64> = c.bases.keys().copied().collect();
    for k in keys {
        let target = c.index_of(k + step).into_iter().map(|(s, i)| (s.to_string(), i)).collect::<HashMap<_, _>>();
        let mut m = SparseMatrix::zero(c.dim(k + step), c.dim(k));
        for (col, lab) in c.basis(k).to_vec().iter().enumerate() {
            for (t, v) in bd(k, lab) {
                if v.is_zero() {
                    continue;
                }
                let row = *target
                    .get(&t)
                    .unwrap_or_else(|| panic!("boundary of {lab} hits {t}, not in degree {}", k + step));
                m.add_entry(ring, row, col, &v);
            }
        }
        c.set_d(k, m);
    }
    c
}
