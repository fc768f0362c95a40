//! Homology rings of finite graded cochain complexes: SNF bases per weight
//! block, products of lifted cycles, and graded presentations.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chain::{homology_basis, ChainComplex, HomologyBasis, Ring, SparseMatrix};
use crate::error::{Error, Result};

/// A sparse chain over basis elements of type `K`.
pub type Chain<K> = BTreeMap<K, i64>;

/// Sparse coordinates in a homology basis.
pub type Coords = BTreeMap<usize, BigInt>;

/// One generator of a homology group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub degree: usize,
    pub weight: Vec<usize>,
    /// 0 for a free generator, the order otherwise.
    pub order: BigInt,
}

struct Block<K> {
    index: HashMap<K, usize>,
    basis: HomologyBasis,
    first: usize,
}

/// Homology through a degree bound with a chosen basis of lifted cycles.
pub struct HomologyRing<K: Ord> {
    pub ring: Ring,
    pub bound: usize,
    pub classes: Vec<Class>,
    pub reps: Vec<Chain<K>>,
    /// Products of basis classes whose degrees sum to at most the bound.
    pub products: BTreeMap<(usize, usize), Coords>,
    blocks: BTreeMap<(usize, Vec<usize>), Block<K>>,
    locate: HashMap<K, (usize, Vec<usize>)>,
}

impl<K: Ord + Clone + Hash + Send + Sync> HomologyRing<K> {
    /// Homology in degrees `0..=bound` of the cochain complex on `cells`
    /// (which must reach degree `bound + 1`), split into blocks by `weight`.
    pub fn new<D, W>(ring: Ring, bound: usize, cells: Vec<(usize, K)>, weight: W, d: D) -> Result<Self>
    where
        D: Fn(&K) -> Chain<K> + Sync,
        W: Fn(&K) -> Vec<usize>,
    {
        let mut groups: BTreeMap<Vec<usize>, BTreeMap<usize, Vec<K>>> = BTreeMap::new();
        let mut locate = HashMap::new();
        for (k, c) in cells {
            let w = weight(&c);
            locate.insert(c.clone(), (k, w.clone()));
            groups.entry(w).or_default().entry(k).or_default().push(c);
        }
        let built: Vec<Result<Vec<((usize, Vec<usize>), HashMap<K, usize>, HomologyBasis)>>> = groups
            .into_par_iter()
            .map(|(w, by_deg)| {
                let mut c = ChainComplex::new(ring, 1);
                let index: BTreeMap<usize, HashMap<K, usize>> = by_deg
                    .iter()
                    .map(|(&k, cs)| (k, cs.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect()))
                    .collect();
                for (&k, cs) in &by_deg {
                    c.set_basis(k as i64, (0..cs.len()).map(|i| i.to_string()).collect());
                }
                for (&k, cs) in &by_deg {
                    if k > bound {
                        continue;
                    }
                    let target = index.get(&(k + 1));
                    let rows = target.map_or(0, HashMap::len);
                    let mut m = SparseMatrix::zero(rows, cs.len());
                    for (col, x) in cs.iter().enumerate() {
                        for (y, v) in d(x) {
                            let row = target.and_then(|t| t.get(&y)).ok_or_else(|| {
                                Error::Invalid(format!("differential leaves the weight block in degree {}", k + 1))
                            })?;
                            m.add_entry(ring, *row, col, &BigInt::from(v));
                        }
                    }
                    c.set_d(k as i64, m);
                }
                Ok(by_deg
                    .keys()
                    .filter(|&&k| k <= bound)
                    .map(|&k| ((k, w.clone()), index[&k].clone(), homology_basis(&c, k as i64)))
                    .collect())
            })
            .collect();
        let mut flat = Vec::new();
        for b in built {
            flat.extend(b?);
        }
        flat.sort_by(|a, b| a.0.cmp(&b.0));
        let (mut classes, mut reps, mut blocks) = (Vec::new(), Vec::new(), BTreeMap::new());
        for (key, index, basis) in flat {
            let first = classes.len();
            let words: Vec<K> = {
                let mut v: Vec<(usize, K)> = index.iter().map(|(x, &i)| (i, x.clone())).collect();
                v.sort_by_key(|p| p.0);
                v.into_iter().map(|p| p.1).collect()
            };
            for (g, order) in basis.generators.iter().zip(&basis.orders) {
                classes.push(Class { degree: key.0, weight: key.1.clone(), order: order.clone() });
                let mut z = Chain::new();
                for (i, v) in g.iter().enumerate() {
                    if !v.is_zero() {
                        let v = v.to_i64().ok_or_else(|| Error::Invalid("cycle coefficient overflow".into()))?;
                        z.insert(words[i].clone(), v);
                    }
                }
                reps.push(z);
            }
            blocks.insert(key, Block { index, basis, first });
        }
        Ok(HomologyRing { ring, bound, classes, reps, products: BTreeMap::new(), blocks, locate })
    }

    /// Coordinates of the class of a cycle of degree at most the bound.
    pub fn project(&self, z: &Chain<K>) -> Option<Coords> {
        let mut parts: BTreeMap<&(usize, Vec<usize>), Vec<(usize, i64)>> = BTreeMap::new();
        for (x, &v) in z {
            if v == 0 {
                continue;
            }
            let key = self.locate.get(x)?;
            let Some((k, b)) = self.blocks.get_key_value(key) else {
                return None;
            };
            parts.entry(k).or_default().push((b.index[x], v));
        }
        let mut out = Coords::new();
        for (key, entries) in parts {
            let b = &self.blocks[key];
            let mut vec = vec![BigInt::zero(); b.basis.dim];
            for (i, v) in entries {
                vec[i] = self.ring.add(&vec[i], &BigInt::from(v));
            }
            for (g, c) in b.basis.project(&vec)?.into_iter().enumerate() {
                if !c.is_zero() {
                    out.insert(b.first + g, c);
                }
            }
        }
        Some(out)
    }

    /// Fills the product table from a chain-level product of cycles.
    pub fn multiply<M>(&mut self, mul: M) -> Result<()>
    where
        M: Fn(&Chain<K>, &Chain<K>) -> Chain<K> + Sync,
    {
        let n = self.classes.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.classes[i].degree + self.classes[j].degree <= self.bound)
            .collect();
        let table: Vec<Result<((usize, usize), Coords)>> = pairs
            .into_par_iter()
            .map(|(i, j)| {
                let z = mul(&self.reps[i], &self.reps[j]);
                self.project(&z)
                    .map(|c| ((i, j), c))
                    .ok_or_else(|| Error::Invalid(format!("product of classes {i} and {j} is not a cycle")))
            })
            .collect();
        for t in table {
            let (k, v) = t?;
            self.products.insert(k, v);
        }
        Ok(())
    }

    /// Reduces coordinates modulo the ring and the torsion orders.
    pub fn normalize(&self, c: &mut Coords) {
        for (i, v) in c.iter_mut() {
            *v = self.ring.normalize(v.clone());
            let o = &self.classes[*i].order;
            if !o.is_zero() {
                *v = num_integer::Integer::mod_floor(&*v, o);
            }
        }
        c.retain(|_, v| !v.is_zero());
    }

    /// The product of two classes given in coordinates.
    pub fn mul_coords(&self, a: &Coords, b: &Coords) -> Coords {
        let mut out = Coords::new();
        for (i, x) in a {
            for (j, y) in b {
                if let Some(p) = self.products.get(&(*i, *j)) {
                    for (k, z) in p {
                        let e = out.entry(*k).or_insert_with(BigInt::zero);
                        *e += x * y * z;
                    }
                }
            }
        }
        self.normalize(&mut out);
        out
    }

    /// Free rank and torsion orders per degree.
    pub fn poincare(&self) -> Vec<(usize, Vec<BigInt>)> {
        let mut out = vec![(0, Vec::new()); self.bound + 1];
        for c in &self.classes {
            if c.order.is_zero() {
                out[c.degree].0 += 1;
            } else {
                out[c.degree].1.push(c.order.clone());
            }
        }
        out
    }

    /// Checks that the basis change to `other` (same complex, different lifts)
    /// carries this product table onto the other one.
    pub fn agrees_with(&self, other: &HomologyRing<K>) -> bool {
        if self.poincare() != other.poincare() {
            return false;
        }
        let Some(t): Option<Vec<Coords>> = self.reps.iter().map(|z| other.project(z)).collect() else {
            return false;
        };
        self.products.iter().all(|(&(i, j), p)| {
            let mut lhs = Coords::new();
            for (k, c) in p {
                for (l, e) in &t[*k] {
                    *lhs.entry(*l).or_insert_with(BigInt::zero) += c * e;
                }
            }
            other.normalize(&mut lhs);
            lhs == other.mul_coords(&t[i], &t[j])
        })
    }

    /// The graded presentation: classes, structure constants, indecomposables.
    pub fn presentation(&self) -> RingPresentation {
        let mut generators = Vec::new();
        for k in 1..=self.bound {
            let free: Vec<usize> = (0..self.classes.len())
                .filter(|&i| self.classes[i].degree == k && (self.ring.is_field() || self.classes[i].order.is_zero()))
                .collect();
            let col: HashMap<usize, usize> = free.iter().enumerate().map(|(c, &i)| (i, c)).collect();
            let row_of = |c: &Coords| -> Vec<BigInt> {
                let mut r = vec![BigInt::zero(); free.len()];
                for (i, v) in c {
                    if let Some(&p) = col.get(i) {
                        r[p] = v.clone();
                    }
                }
                r
            };
            let mut rows: Vec<Vec<BigInt>> = self
                .products
                .iter()
                .filter(|((i, j), _)| {
                    let (a, b) = (self.classes[*i].degree, self.classes[*j].degree);
                    a > 0 && b > 0 && a + b == k
                })
                .map(|(_, c)| row_of(c))
                .collect();
            let mut r = span_rank(self.ring, &rows);
            for &i in &free {
                rows.push(row_of(&Coords::from([(i, BigInt::one())])));
                let r2 = span_rank(self.ring, &rows);
                if r2 > r {
                    generators.push(i);
                    r = r2;
                } else {
                    rows.pop();
                }
            }
        }
        RingPresentation {
            ring: self.ring,
            bound: self.bound,
            classes: self.classes.clone(),
            products: self.products.clone(),
            generators,
        }
    }
}

/// Rank of the span of integer rows, over the field of the ring (Q for Z).
pub fn span_rank(ring: Ring, rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|v| ring.normalize(v.clone())).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for r in 0..m.len() {
            if r == rank || m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone();
            for j in 0..cols {
                let v = &m[r][j] * &piv - &f * &m[rank][j];
                m[r][j] = ring.normalize(v);
            }
        }
        rank += 1;
    }
    rank
}

/// Generators with degrees and structure constants on a homology basis.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub ring: Ring,
    pub bound: usize,
    pub classes: Vec<Class>,
    pub products: BTreeMap<(usize, usize), Coords>,
    /// Indecomposable classes, chosen greedily in basis order.
    pub generators: Vec<usize>,
}

impl RingPresentation {
    pub fn ranks(&self) -> Vec<usize> {
        let mut out = vec![0; self.bound + 1];
        for c in &self.classes {
            if c.order.is_zero() {
                out[c.degree] += 1;
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let coords = |c: &Coords| -> Value { c.iter().map(|(i, v)| json!([i, v.to_string()])).collect() };
        json!({
            "ring": self.ring.to_string(),
            "bound": self.bound,
            "ranks": self.ranks(),
            "classes": self.classes.iter().map(|c| json!({
                "degree": c.degree,
                "weight": c.weight,
                "order": c.order.to_string(),
            })).collect::<Vec<_>>(),
            "generators": self.generators.iter().map(|&g| json!({"class": g, "degree": self.classes[g].degree})).collect::<Vec<_>>(),
            "products": self.products.iter().filter(|(_, c)| !c.is_empty()).map(|((i, j), c)| json!({"left": i, "right": j, "value": coords(c)})).collect::<Vec<_>>(),
        })
    }
}
