//! Finite simplicial sets given by nondegenerate generators and face words.

use num_bigint::BigInt;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

use crate::cell::add_term;
use crate::chain::{check_complex, ChainComplex, Ring, SparseMatrix};
use crate::error::{Error, Result};

/// `s_{i_1} s_{i_2} ⋯ s_{i_r} g` with `i_1 > i_2 > ⋯ > i_r` (outermost first).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub gen: usize,
    pub degen: Vec<usize>,
}

impl Simplex {
    pub fn generator(gen: usize) -> Self {
        Simplex { gen, degen: Vec::new() }
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degen.is_empty()
    }
}

/// A nondegenerate generator with its faces `∂_0, …, ∂_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub dim: usize,
    pub faces: Vec<Simplex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    pub name: String,
    pub gens: Vec<Generator>,
}

/// Puts a degeneracy word into the form `i_1 > i_2 > ⋯` using `s_i s_j = s_{j+1} s_i` for `i ≤ j`.
pub(crate) fn normalize_degen(mut w: Vec<usize>) -> Vec<usize> {
    loop {
        let mut changed = false;
        for t in 0..w.len().saturating_sub(1) {
            if w[t] <= w[t + 1] {
                let (i, j) = (w[t], w[t + 1]);
                w[t] = j + 1;
                w[t + 1] = i;
                changed = true;
            }
        }
        if !changed {
            return w;
        }
    }
}

impl SimplicialSet {
    pub fn dim(&self, x: &Simplex) -> usize {
        self.gens[x.gen].dim + x.degen.len()
    }

    pub fn basepoint(&self) -> usize {
        self.gens.iter().position(|g| g.dim == 0).expect("a vertex")
    }

    /// Nondegenerate simplices of dimension `k`.
    pub fn generators(&self, k: usize) -> Vec<usize> {
        (0..self.gens.len()).filter(|&g| self.gens[g].dim == k).collect()
    }

    pub fn max_dim(&self) -> usize {
        self.gens.iter().map(|g| g.dim).max().unwrap_or(0)
    }

    pub fn degeneracy(&self, x: &Simplex, i: usize) -> Simplex {
        assert!(i <= self.dim(x), "s_{i} on a {}-simplex", self.dim(x));
        let mut w = vec![i];
        w.extend(&x.degen);
        Simplex {
            gen: x.gen,
            degen: normalize_degen(w),
        }
    }

    /// `∂_i x`, pushing the face through the degeneracies.
    pub fn face(&self, x: &Simplex, i: usize) -> Simplex {
        assert!(i <= self.dim(x), "∂_{i} on a {}-simplex", self.dim(x));
        let mut prefix = Vec::new();
        let mut face = Some(i);
        for (t, &j) in x.degen.iter().enumerate() {
            let Some(f) = face else {
                prefix.extend(&x.degen[t..]);
                break;
            };
            if f < j {
                prefix.push(j - 1);
            } else if f == j || f == j + 1 {
                face = None;
            } else {
                prefix.push(j);
                face = Some(f - 1);
            }
        }
        let base = match face {
            None => Simplex::generator(x.gen),
            Some(f) => self.gens[x.gen].faces[f].clone(),
        };
        let mut w = prefix;
        w.extend(&base.degen);
        Simplex {
            gen: base.gen,
            degen: normalize_degen(w),
        }
    }

    /// The face spanned by the listed vertices (strictly increasing).
    pub fn vertex_face(&self, x: &Simplex, verts: &[usize]) -> Simplex {
        let n = self.dim(x);
        let mut y = x.clone();
        for v in (0..=n).rev() {
            if !verts.contains(&v) {
                y = self.face(&y, v);
            }
        }
        y
    }

    /// Checks `∂_i ∂_j = ∂_{j−1} ∂_i` for `i < j` on all generators.
    pub fn check_identities(&self) -> Result<()> {
        for (g, gen) in self.gens.iter().enumerate() {
            if gen.faces.len() != if gen.dim == 0 { 0 } else { gen.dim + 1 } {
                return Err(Error::Invalid(format!("{} has {} faces", gen.name, gen.faces.len())));
            }
            for f in &gen.faces {
                if self.dim(f) + 1 != gen.dim {
                    return Err(Error::Invalid(format!("face of {} has wrong dimension", gen.name)));
                }
            }
            if gen.dim < 2 {
                continue;
            }
            let x = Simplex::generator(g);
            for j in 1..=gen.dim {
                for i in 0..j {
                    let a = self.face(&self.face(&x, j), i);
                    let b = self.face(&self.face(&x, i), j - 1);
                    if a != b {
                        return Err(Error::Invalid(format!(
                            "∂{i}∂{j} ≠ ∂{}∂{i} on {}: {} vs {}",
                            j - 1,
                            gen.name,
                            self.show(&a),
                            self.show(&b)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_one_reduced(&self) -> bool {
        self.generators(0).len() == 1 && self.generators(1).is_empty()
    }

    pub fn show(&self, x: &Simplex) -> String {
        let mut s = String::new();
        for i in &x.degen {
            s.push_str(&format!("s{i} "));
        }
        s.push_str(&self.gens[x.gen].name);
        s
    }

    fn parse_word(&self, w: &str, names: &BTreeMap<String, usize>) -> Result<Simplex> {
        let toks: Vec<&str> = w.split_whitespace().collect();
        let (last, degs) = toks.split_last().ok_or_else(|| Error::Parse("empty face word".into()))?;
        let gen = *names.get(*last).ok_or_else(|| Error::Parse(format!("unknown generator {last}")))?;
        let mut degen = Vec::new();
        for t in degs {
            let i = t
                .strip_prefix('s')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad degeneracy token {t}")))?;
            degen.push(i);
        }
        Ok(Simplex {
            gen,
            degen: normalize_degen(degen),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let name = v.get("name").and_then(Value::as_str).unwrap_or("").to_string();
        let gens = v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing generators".into()))?;
        let mut names = BTreeMap::new();
        let mut out = SimplicialSet { name, gens: Vec::new() };
        for g in gens {
            let gname = g.get("name").and_then(Value::as_str).ok_or_else(|| Error::Parse("generator name".into()))?;
            let dim = g.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("generator dim".into()))? as usize;
            names.insert(gname.to_string(), out.gens.len());
            out.gens.push(Generator {
                name: gname.into(),
                dim,
                faces: Vec::new(),
            });
        }
        for (i, g) in gens.iter().enumerate() {
            if let Some(fs) = g.get("faces").and_then(Value::as_array) {
                for f in fs {
                    let w = f.as_str().ok_or_else(|| Error::Parse("face word".into()))?;
                    let s = out.parse_word(w, &names)?;
                    out.gens[i].faces.push(s);
                }
            }
        }
        out.check_identities()?;
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .gens
            .iter()
            .map(|g| {
                let faces: Vec<String> = g.faces.iter().map(|f| self.show(f)).collect();
                json!({"name": g.name, "dim": g.dim, "faces": faces})
            })
            .collect();
        json!({"name": self.name, "generators": gens})
    }

    /// `Δ^n` with its 1-skeleton collapsed to a point.
    pub fn simplex_mod_edges(n: usize) -> Self {
        let mut out = SimplicialSet {
            name: format!("delta{n}/sk1"),
            gens: vec![Generator {
                name: "*".into(),
                dim: 0,
                faces: Vec::new(),
            }],
        };
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for k in 2..=n {
            for verts in subsets(n + 1, k + 1) {
                let faces = (0..=k)
                    .map(|i| {
                        let mut f = verts.clone();
                        f.remove(i);
                        match index.get(&f) {
                            Some(&g) => Simplex::generator(g),
                            None => Simplex {
                                gen: 0,
                                degen: (0..k - 1).rev().collect(),
                            },
                        }
                    })
                    .collect();
                index.insert(verts.clone(), out.gens.len());
                out.gens.push(Generator {
                    name: verts.iter().map(|v| v.to_string()).collect(),
                    dim: k,
                    faces,
                });
            }
        }
        out
    }
}

/// Increasing `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Normalized boundary `Σ (−1)^i ∂_i x` on generator `g`.
pub fn simplex_boundary(x: &SimplicialSet, g: usize) -> BTreeMap<usize, i64> {
    let s = Simplex::generator(g);
    let mut out = BTreeMap::new();
    for i in 0..=x.gens[g].dim {
        if x.gens[g].dim == 0 {
            break;
        }
        let f = x.face(&s, i);
        if !f.is_degenerate() {
            add_term(&mut out, f.gen, if i % 2 == 0 { 1 } else { -1 });
        }
    }
    out
}

/// Normalized chains of `x` in degrees `0..=bound`.
pub fn chains(x: &SimplicialSet, ring: Ring, bound: usize) -> Result<ChainComplex> {
    let mut c = ChainComplex::new(ring, -1);
    let mut pos = vec![0; x.gens.len()];
    for k in 0..=bound {
        let gens = x.generators(k);
        for (i, &g) in gens.iter().enumerate() {
            pos[g] = i;
        }
        c.set_basis(k as i64, gens.iter().map(|&g| x.gens[g].name.clone()).collect());
    }
    for k in 1..=bound {
        let gens = x.generators(k);
        let mut m = SparseMatrix::zero(c.dim(k as i64 - 1), gens.len());
        for (j, &g) in gens.iter().enumerate() {
            for (h, v) in simplex_boundary(x, g) {
                m.add_entry(ring, pos[h], j, &BigInt::from(v));
            }
        }
        c.set_d(k as i64, m);
    }
    check_complex(&c)?;
    Ok(c)
}

/// Normalized Alexander–Whitney diagonal of generator `g`, as pairs of generators.
pub fn aw_diagonal(x: &SimplicialSet, g: usize) -> BTreeMap<(usize, usize), i64> {
    let n = x.gens[g].dim;
    let s = Simplex::generator(g);
    let mut out = BTreeMap::new();
    for p in 0..=n {
        let front = x.vertex_face(&s, &(0..=p).collect::<Vec<_>>());
        let back = x.vertex_face(&s, &(p..=n).collect::<Vec<_>>());
        if !front.is_degenerate() && !back.is_degenerate() {
            add_term(&mut out, (front.gen, back.gen), 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_words_normalize() {
        assert_eq!(normalize_degen(vec![0, 0]), vec![1, 0]);
        assert_eq!(normalize_degen(vec![0, 1]), vec![2, 0]);
        assert_eq!(normalize_degen(vec![2, 0]), vec![2, 0]);
    }

    #[test]
    fn faces_of_degenerate_simplices() {
        let x = SimplicialSet::simplex_mod_edges(3);
        let a = Simplex::generator(x.generators(2)[0]);
        let sa = x.degeneracy(&a, 1);
        assert_eq!(x.face(&sa, 1), a);
        assert_eq!(x.face(&sa, 2), a);
        assert!(x.face(&sa, 0).is_degenerate());
        x.check_identities().unwrap();
        assert!(x.is_one_reduced());
    }
}
