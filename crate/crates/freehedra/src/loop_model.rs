//! Truncating twisting functions, the monoidal cubical set `ΩX` with the
//! universal `τ_U`, bitwisted Cartesian products and the Cartier–Hochschild set
//! `ΛX`, together with the identification of its normalized chains with the
//! Cartier complex of `C_*(X)`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use crate::cell::add_term;
use crate::chain::{from_boundary, ChainComplex, Ring};
use crate::error::{Error, Result};
use crate::fnset::{boundary, FnOps, FnSet};
use crate::simplicial::{normalize_degen, Simplex, SimplicialSet};
use crate::twisted::{cartier, cartier_theta2, cobar, Dgc, Word};

/// A cubical set with an associative unital product.
///
/// `face` takes `1 ≤ i ≤ dim`, `degeneracy` takes `1 ≤ i ≤ dim + 1`.
pub trait MonoidalCubical: Sync {
    type Elem: Clone + Ord + Hash + Debug + Display + Send + Sync;

    fn dim(&self, a: &Self::Elem) -> usize;
    fn unit(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn face(&self, a: &Self::Elem, eps: u8, i: usize) -> Self::Elem;
    fn degeneracy(&self, a: &Self::Elem, i: usize) -> Self::Elem;
    fn is_degenerate(&self, a: &Self::Elem) -> bool;
}

/// A cubical set with commuting left and right actions of `Q`.
pub trait CubicalBimodule<Q: MonoidalCubical>: Sync {
    type Elem: Clone + Ord + Hash + Debug + Display + Send + Sync;

    fn dim(&self, y: &Self::Elem) -> usize;
    fn face(&self, y: &Self::Elem, eps: u8, i: usize) -> Self::Elem;
    fn degeneracy(&self, y: &Self::Elem, i: usize) -> Self::Elem;
    fn is_degenerate(&self, y: &Self::Elem) -> bool;
    fn left(&self, q: &Q::Elem, y: &Self::Elem) -> Self::Elem;
    fn right(&self, y: &Self::Elem, q: &Q::Elem) -> Self::Elem;
    /// Nondegenerate elements of dimension `n`.
    fn nondegenerate(&self, n: usize) -> Vec<Self::Elem>;
}

/// Maps `τ_n: X_n → Q_{n−1}` meant to satisfy the truncating axioms.
pub trait TruncatingTwistingFunction: Sync {
    type Target: MonoidalCubical;

    fn source(&self) -> &SimplicialSet;
    fn target(&self) -> &Self::Target;
    fn apply(&self, x: &Simplex) -> <Self::Target as MonoidalCubical>::Elem;
}

/// A twisting function given by a closure.
pub struct TwistingMap<'a, Q: MonoidalCubical> {
    pub source: &'a SimplicialSet,
    pub target: &'a Q,
    pub map: Box<dyn Fn(&Simplex) -> Q::Elem + Sync + 'a>,
}

impl<Q: MonoidalCubical> TruncatingTwistingFunction for TwistingMap<'_, Q> {
    type Target = Q;

    fn source(&self) -> &SimplicialSet {
        self.source
    }

    fn target(&self) -> &Q {
        self.target
    }

    fn apply(&self, x: &Simplex) -> Q::Elem {
        (self.map)(x)
    }
}

/// `η_D(τ(x_1)⋯τ(x_k))`: a degeneracy word over a product of barred simplices.
///
/// Factors have dimension `≥ 2` and carry no top degeneracy, since
/// `τ(s_n x) = η_n τ(x)`; a degenerate factor makes the cube degenerate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cube {
    pub degen: Vec<usize>,
    pub factors: Vec<Simplex>,
}

fn simplex_code(x: &Simplex) -> String {
    let mut s: String = x.degen.iter().map(|i| format!("s{i}")).collect();
    s.push_str(&format!("#{}", x.gen));
    s
}

impl Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.degen {
            write!(f, "η{i}")?;
        }
        let parts: Vec<String> = self.factors.iter().map(simplex_code).collect();
        write!(f, "[{}]", parts.join("|"))
    }
}

/// The monoidal cubical set `ΩX` of a 1-reduced simplicial set.
#[derive(Clone, Debug)]
pub struct OmegaX {
    pub space: SimplicialSet,
}

impl OmegaX {
    pub fn new(x: &SimplicialSet) -> Result<Self> {
        if !x.is_one_reduced() {
            return Err(Error::NotOneReduced(x.name.clone()));
        }
        Ok(OmegaX { space: x.clone() })
    }

    /// `τ_U(y) = ȳ`, with `τ_U = e` on `X_1` and top degeneracies turned into `η`.
    pub fn tau(&self, y: &Simplex) -> Cube {
        let n = self.space.dim(y);
        if n <= 1 {
            return self.unit();
        }
        if y.degen.first() == Some(&(n - 1)) {
            let inner = Simplex {
                gen: y.gen,
                degen: y.degen[1..].to_vec(),
            };
            return MonoidalCubical::degeneracy(self, &self.tau(&inner), n - 1);
        }
        Cube {
            degen: Vec::new(),
            factors: vec![y.clone()],
        }
    }

    /// Products of barred nondegenerate simplices of total dimension `n`.
    pub fn monomials(&self, n: usize) -> Vec<Cube> {
        let gens: Vec<(usize, usize)> =
            (0..self.space.gens.len()).filter(|&g| self.space.gens[g].dim >= 2).map(|g| (g, self.space.gens[g].dim - 1)).collect();
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), 0usize)];
        while let Some((w, d)) = stack.pop() {
            if d == n {
                out.push(Cube {
                    degen: Vec::new(),
                    factors: w.iter().map(|&g| Simplex::generator(g)).collect(),
                });
                continue;
            }
            for &(g, p) in &gens {
                if d + p <= n {
                    let mut v: Vec<usize> = w.clone();
                    v.push(g);
                    stack.push((v, d + p));
                }
            }
        }
        out.sort();
        out
    }

    /// `[x̄_1|…|x̄_k]` with generator names, prefixed by its degeneracies.
    pub fn label(&self, c: &Cube) -> String {
        let mut s: String = c.degen.iter().map(|i| format!("η{i}")).collect();
        let parts: Vec<String> = c.factors.iter().map(|x| self.space.show(x)).collect();
        s.push('[');
        s.push_str(&parts.join("|"));
        s.push(']');
        s
    }

    /// `x⊗[x̄_1|…|x̄_k]` for a cell of `ΛX`.
    pub fn cell_label(&self, c: &BiCell<Cube>) -> String {
        format!("{}⊗{}", self.space.show(&c.x), self.label(&c.y))
    }

    fn product(&self, factors: &[Simplex]) -> Cube {
        Cube {
            degen: Vec::new(),
            factors: factors.to_vec(),
        }
    }

    fn monomial_face(&self, factors: &[Simplex], eps: u8, i: usize) -> Cube {
        let x = &self.space;
        let mut off = 0;
        for (t, f) in factors.iter().enumerate() {
            let n = x.dim(f);
            if i <= off + n - 1 {
                let j = i - off;
                let repl = if eps == 1 {
                    self.tau(&x.face(f, j))
                } else {
                    let front: Vec<usize> = (0..=j).collect();
                    let back: Vec<usize> = (j..=n).collect();
                    self.mul(&self.tau(&x.vertex_face(f, &front)), &self.tau(&x.vertex_face(f, &back)))
                };
                let left = self.mul(&self.product(&factors[..t]), &repl);
                return self.mul(&left, &self.product(&factors[t + 1..]));
            }
            off += n - 1;
        }
        panic!("cube face index {i} out of range");
    }
}

impl MonoidalCubical for OmegaX {
    type Elem = Cube;

    fn dim(&self, a: &Cube) -> usize {
        a.degen.len() + a.factors.iter().map(|f| self.space.dim(f) - 1).sum::<usize>()
    }

    fn unit(&self) -> Cube {
        Cube {
            degen: Vec::new(),
            factors: Vec::new(),
        }
    }

    /// `η_D(u)·η_E(v) = η_D η_{E+|u|}(u·v)`.
    fn mul(&self, a: &Cube, b: &Cube) -> Cube {
        let q = MonoidalCubical::dim(self, a) - a.degen.len();
        let mut w = a.degen.clone();
        w.extend(b.degen.iter().map(|j| j + q));
        let mut factors = a.factors.clone();
        factors.extend(b.factors.iter().cloned());
        Cube {
            degen: normalize_degen(w),
            factors,
        }
    }

    fn face(&self, a: &Cube, eps: u8, i: usize) -> Cube {
        assert!((1..=MonoidalCubical::dim(self, a)).contains(&i), "cube face {i} on dimension {}", MonoidalCubical::dim(self, a));
        let Some(&j) = a.degen.first() else {
            return self.monomial_face(&a.factors, eps, i);
        };
        let rest = Cube {
            degen: a.degen[1..].to_vec(),
            factors: a.factors.clone(),
        };
        match i.cmp(&j) {
            std::cmp::Ordering::Less => MonoidalCubical::degeneracy(self, &MonoidalCubical::face(self, &rest, eps, i), j - 1),
            std::cmp::Ordering::Equal => rest,
            std::cmp::Ordering::Greater => MonoidalCubical::degeneracy(self, &MonoidalCubical::face(self, &rest, eps, i - 1), j),
        }
    }

    fn degeneracy(&self, a: &Cube, i: usize) -> Cube {
        assert!((1..=MonoidalCubical::dim(self, a) + 1).contains(&i), "η_{i} on dimension {}", MonoidalCubical::dim(self, a));
        let mut w = vec![i];
        w.extend(&a.degen);
        Cube {
            degen: normalize_degen(w),
            factors: a.factors.clone(),
        }
    }

    fn is_degenerate(&self, a: &Cube) -> bool {
        !a.degen.is_empty() || a.factors.iter().any(Simplex::is_degenerate)
    }
}

impl TruncatingTwistingFunction for OmegaX {
    type Target = OmegaX;

    fn source(&self) -> &SimplicialSet {
        &self.space
    }

    fn target(&self) -> &OmegaX {
        self
    }

    fn apply(&self, x: &Simplex) -> Cube {
        self.tau(x)
    }
}

impl CubicalBimodule<OmegaX> for OmegaX {
    type Elem = Cube;

    fn dim(&self, y: &Cube) -> usize {
        MonoidalCubical::dim(self, y)
    }

    fn face(&self, y: &Cube, eps: u8, i: usize) -> Cube {
        MonoidalCubical::face(self, y, eps, i)
    }

    fn degeneracy(&self, y: &Cube, i: usize) -> Cube {
        MonoidalCubical::degeneracy(self, y, i)
    }

    fn is_degenerate(&self, y: &Cube) -> bool {
        MonoidalCubical::is_degenerate(self, y)
    }

    fn left(&self, q: &Cube, y: &Cube) -> Cube {
        self.mul(q, y)
    }

    fn right(&self, y: &Cube, q: &Cube) -> Cube {
        self.mul(y, q)
    }

    fn nondegenerate(&self, n: usize) -> Vec<Cube> {
        self.monomials(n)
    }
}

/// `ΩX` as an `F_n`-set concentrated in `m = 0`.
impl FnOps for OmegaX {
    type Elem = Cube;

    fn bidegree(&self, x: &Cube) -> (usize, usize) {
        (0, MonoidalCubical::dim(self, x))
    }

    fn face(&self, x: &Cube, eps: u8, i: usize) -> Option<Cube> {
        (eps < 2 && (1..=MonoidalCubical::dim(self, x)).contains(&i)).then(|| MonoidalCubical::face(self, x, eps, i))
    }

    fn degeneracy(&self, x: &Cube, i: usize) -> Option<Cube> {
        (1..=MonoidalCubical::dim(self, x) + 1).contains(&i).then(|| MonoidalCubical::degeneracy(self, x, i))
    }

    fn is_degenerate(&self, x: &Cube) -> bool {
        MonoidalCubical::is_degenerate(self, x)
    }
}

impl FnSet for OmegaX {
    fn nondegenerate(&self, r: usize) -> Vec<Cube> {
        self.monomials(r)
    }
}

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: String,
    pub simplex: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TruncatingReport {
    pub checked: usize,
    pub violations: Vec<AxiomViolation>,
}

impl TruncatingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checked": self.checked,
            "passed": self.passed(),
            "violations": self.violations.iter().map(|v| json!({
                "axiom": v.axiom, "simplex": v.simplex, "lhs": v.lhs, "rhs": v.rhs,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Every simplex of dimension `≤ bound`, degenerate ones included.
pub fn all_simplices(x: &SimplicialSet, bound: usize) -> Vec<Simplex> {
    let mut seen: BTreeSet<Simplex> = (0..x.gens.len()).filter(|&g| x.gens[g].dim <= bound).map(Simplex::generator).collect();
    let mut frontier: Vec<Simplex> = seen.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        let d = x.dim(&s);
        if d >= bound {
            continue;
        }
        for i in 0..=d {
            let t = x.degeneracy(&s, i);
            if seen.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// Checks the truncating axioms on all simplices of dimension `≤ bound`, and
/// that the induced monoidal map `ΩX → Q` commutes with faces.
pub fn verify_truncating<T: TruncatingTwistingFunction>(tau: &T, bound: usize) -> TruncatingReport {
    let x = tau.source();
    let q = tau.target();
    let mut rep = TruncatingReport::default();
    let check = |rep: &mut TruncatingReport, axiom: String, s: &Simplex, a: <T::Target as MonoidalCubical>::Elem, b| {
        rep.checked += 1;
        if a != b {
            rep.violations.push(AxiomViolation {
                axiom,
                simplex: x.show(s),
                lhs: a.to_string(),
                rhs: b.to_string(),
            });
        }
    };
    for s in all_simplices(x, bound) {
        let n = x.dim(&s);
        if n == 0 {
            continue;
        }
        let ts = tau.apply(&s);
        if n == 1 {
            check(&mut rep, "τ = e on X_1".into(), &s, ts.clone(), q.unit());
        } else {
            for i in 1..n {
                let front: Vec<usize> = (0..=i).collect();
                let back: Vec<usize> = (i..=n).collect();
                let rhs = q.mul(&tau.apply(&x.vertex_face(&s, &front)), &tau.apply(&x.vertex_face(&s, &back)));
                check(&mut rep, format!("d0_{i} τ"), &s, q.face(&ts, 0, i), rhs);
                check(&mut rep, format!("d1_{i} τ"), &s, q.face(&ts, 1, i), tau.apply(&x.face(&s, i)));
            }
        }
        if n < bound {
            check(&mut rep, format!("η_{n} τ = τ s_{n}"), &s, q.degeneracy(&ts, n), tau.apply(&x.degeneracy(&s, n)));
        }
    }
    // the induced monoidal map f(η_D(x̄_1⋯x̄_k)) = η_D(τ(x_1)⋯τ(x_k))
    let omega = OmegaX { space: x.clone() };
    let induced = |c: &Cube| {
        let mut v = c.factors.iter().fold(q.unit(), |acc, f| q.mul(&acc, &tau.apply(f)));
        for &i in c.degen.iter().rev() {
            v = q.degeneracy(&v, i);
        }
        v
    };
    for r in 1..bound {
        for w in omega.monomials(r) {
            for eps in 0..2u8 {
                for i in 1..=r {
                    let a = induced(&MonoidalCubical::face(&omega, &w, eps, i));
                    let b = q.face(&induced(&w), eps, i);
                    rep.checked += 1;
                    if a != b {
                        rep.violations.push(AxiomViolation {
                            axiom: format!("f d{eps}_{i} = d{eps}_{i} f"),
                            simplex: omega.label(&w),
                            lhs: a.to_string(),
                            rhs: b.to_string(),
                        });
                    }
                }
            }
        }
    }
    rep
}

/// A pair `(x, y) ∈ X_m × L_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiCell<E> {
    pub x: Simplex,
    pub y: E,
}

impl<E: Display> Display for BiCell<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", simplex_code(&self.x), self.y)
    }
}

/// The bitwisted Cartesian product `X ×_τ ×_τ L`.
pub struct BitwistedProduct<'a, T: TruncatingTwistingFunction, L> {
    pub tau: &'a T,
    pub module: &'a L,
}

/// The Cartier–Hochschild set: `L = ΩX`, `τ = τ_U`.
pub type LambdaX<'a> = BitwistedProduct<'a, OmegaX, OmegaX>;

pub fn lambda_set(omega: &OmegaX) -> LambdaX<'_> {
    BitwistedProduct { tau: omega, module: omega }
}

impl<T, L> BitwistedProduct<'_, T, L>
where
    T: TruncatingTwistingFunction,
    L: CubicalBimodule<T::Target>,
{
    /// The representative with no top degeneracy on `x`, using
    /// `(s_m x, y) ∼ (x, η_1 y)`.
    pub fn canonical(&self, c: &BiCell<L::Elem>) -> BiCell<L::Elem> {
        let x = self.tau.source();
        let mut c = c.clone();
        loop {
            let m = x.dim(&c.x);
            if m == 0 || c.x.degen.first() != Some(&(m - 1)) {
                return c;
            }
            c.x.degen.remove(0);
            c.y = self.module.degeneracy(&c.y, 1);
        }
    }
}

impl<T, L> FnOps for BitwistedProduct<'_, T, L>
where
    T: TruncatingTwistingFunction,
    L: CubicalBimodule<T::Target>,
{
    type Elem = BiCell<L::Elem>;

    fn bidegree(&self, c: &Self::Elem) -> (usize, usize) {
        (self.tau.source().dim(&c.x), self.module.dim(&c.y))
    }

    fn face(&self, c: &Self::Elem, eps: u8, i: usize) -> Option<Self::Elem> {
        let x = self.tau.source();
        let (m, n) = self.bidegree(c);
        let l = self.module;
        let verts = |a: usize, b: usize| x.vertex_face(&c.x, &(a..=b).collect::<Vec<_>>());
        match eps {
            0 if (1..=m).contains(&i) => Some(BiCell {
                x: verts(0, i - 1),
                y: l.left(&self.tau.apply(&verts(i - 1, m)), &c.y),
            }),
            1 if (1..=m).contains(&i) => Some(BiCell {
                x: x.face(&c.x, i - 1),
                y: c.y.clone(),
            }),
            0 | 1 if (m + 1..=m + n).contains(&i) => Some(BiCell {
                x: c.x.clone(),
                y: l.face(&c.y, eps, i - m),
            }),
            2 if (1..=m).contains(&i) => Some(BiCell {
                x: verts(i, m),
                y: l.right(&c.y, &self.tau.apply(&verts(0, i))),
            }),
            _ => None,
        }
    }

    fn degeneracy(&self, c: &Self::Elem, i: usize) -> Option<Self::Elem> {
        let n = self.module.dim(&c.y);
        (1..=n + 1).contains(&i).then(|| BiCell {
            x: c.x.clone(),
            y: self.module.degeneracy(&c.y, i),
        })
    }

    fn is_degenerate(&self, c: &Self::Elem) -> bool {
        c.x.is_degenerate() || self.module.is_degenerate(&c.y)
    }
}

impl<T, L> FnSet for BitwistedProduct<'_, T, L>
where
    T: TruncatingTwistingFunction,
    L: CubicalBimodule<T::Target>,
{
    fn nondegenerate(&self, r: usize) -> Vec<Self::Elem> {
        let x = self.tau.source();
        let mut out = Vec::new();
        for m in 0..=r {
            for g in x.generators(m) {
                for y in self.module.nondegenerate(r - m) {
                    out.push(BiCell {
                        x: Simplex::generator(g),
                        y,
                    });
                }
            }
        }
        out
    }
}

/// Normalized chains with basis labels chosen by `label`.
pub fn labelled_chains<S: FnSet>(s: &S, ring: Ring, bound: usize, label: &(dyn Fn(&S::Elem) -> String + Sync)) -> ChainComplex {
    let cells: Vec<Vec<S::Elem>> = (0..=bound).map(|r| s.nondegenerate(r)).collect();
    let bd: HashMap<String, Vec<(String, BigInt)>> = cells
        .par_iter()
        .flatten()
        .map(|c| (label(c), boundary(s, c).into_iter().map(|(y, v)| (label(&y), BigInt::from(v))).collect()))
        .collect();
    let bases = cells.iter().enumerate().map(|(r, cs)| (r as i64, cs.iter().map(label).collect())).collect();
    from_boundary(ring, -1, bases, |_, lab| bd[lab].clone())
}

/// The first disagreement between two labelled complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    Basis { degree: i64, only_left: Vec<String>, only_right: Vec<String> },
    Entry { degree: i64, row: String, col: String, left: BigInt, right: BigInt },
}

impl Mismatch {
    pub fn to_json(&self) -> Value {
        match self {
            Mismatch::Basis { degree, only_left, only_right } => {
                json!({"kind": "basis", "degree": degree, "only_left": only_left, "only_right": only_right})
            }
            Mismatch::Entry { degree, row, col, left, right } => json!({
                "kind": "entry", "degree": degree, "row": row, "col": col,
                "left": left.to_string(), "right": right.to_string(),
            }),
        }
    }
}

/// Compares bases and the nonzero differential entries, matching basis
/// elements by label. Returns the number of entries compared.
pub fn compare_complexes(a: &ChainComplex, b: &ChainComplex) -> (usize, Option<Mismatch>) {
    let degrees: BTreeSet<i64> = a.degrees().chain(b.degrees()).collect();
    for &k in &degrees {
        let la: BTreeSet<&String> = a.basis(k).iter().collect();
        let lb: BTreeSet<&String> = b.basis(k).iter().collect();
        if la != lb {
            return (
                0,
                Some(Mismatch::Basis {
                    degree: k,
                    only_left: la.difference(&lb).map(|s| s.to_string()).collect(),
                    only_right: lb.difference(&la).map(|s| s.to_string()).collect(),
                }),
            );
        }
    }
    let mut compared = 0;
    let entries = |c: &ChainComplex, k: i64, t: i64| -> BTreeMap<(String, String), BigInt> {
        let (rows, cols) = (c.basis(t), c.basis(k));
        c.d(k).entries.into_iter().map(|((r, j), v)| ((rows[r].clone(), cols[j].clone()), v)).collect()
    };
    for &k in &degrees {
        let t = k + a.step;
        if !degrees.contains(&t) {
            continue;
        }
        let (ea, eb) = (entries(a, k, t), entries(b, k, t));
        let keys: BTreeSet<&(String, String)> = ea.keys().chain(eb.keys()).collect();
        let zero = BigInt::from(0);
        for key in keys {
            let (x, y) = (ea.get(key).unwrap_or(&zero), eb.get(key).unwrap_or(&zero));
            compared += 1;
            if x != y {
                let mismatch = Mismatch::Entry {
                    degree: k,
                    row: key.0.clone(),
                    col: key.1.clone(),
                    left: x.clone(),
                    right: y.clone(),
                };
                return (compared, Some(mismatch));
            }
        }
    }
    (compared, None)
}

/// Basis bijection and matrix comparison between a combinatorial chain
/// complex and its algebraic model.
#[derive(Clone, Debug)]
pub struct IdentificationCertificate {
    pub check: String,
    pub space: String,
    pub ring: Ring,
    pub bound: usize,
    /// `(degree, cell, word)`.
    pub bijection: Vec<(usize, String, String)>,
    pub entries_compared: usize,
    pub mismatch: Option<Mismatch>,
}

impl IdentificationCertificate {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "space": self.space,
            "ring": self.ring.to_string(),
            "bound": self.bound,
            "passed": self.passed(),
            "entries_compared": self.entries_compared,
            "bijection": self.bijection.iter().map(|(d, c, w)| json!({"degree": d, "cell": c, "word": w})).collect::<Vec<_>>(),
            "mismatch": self.mismatch.as_ref().map(Mismatch::to_json),
        })
    }
}

fn certify<S: FnSet>(
    check: &str,
    x: &SimplicialSet,
    s: &S,
    ring: Ring,
    bound: usize,
    label: &(dyn Fn(&S::Elem) -> String + Sync),
    model: &ChainComplex,
) -> IdentificationCertificate {
    let ours = labelled_chains(s, ring, bound, label);
    let (entries_compared, mismatch) = compare_complexes(&ours, model);
    let bijection = (0..=bound).flat_map(|r| s.nondegenerate(r).into_iter().map(move |c| (r, c))).map(|(r, c)| (r, c.to_string(), label(&c))).collect();
    IdentificationCertificate {
        check: check.into(),
        space: x.name.clone(),
        ring,
        bound,
        bijection,
        entries_compared,
        mismatch,
    }
}

/// `C^⊙_*(ΛX)` against the Cartier complex `ΛC_*(X)`, cell `(x, x̄_1⋯x̄_k)` ↔
/// word `x⊗[x_1|…|x_k]`.
pub fn identify_cartier(x: &SimplicialSet, ring: Ring, bound: usize) -> Result<IdentificationCertificate> {
    let omega = OmegaX::new(x)?;
    let lam = lambda_set(&omega);
    let model = cartier(&Dgc::from_simplicial(x, ring, bound)?, bound)?.to_chain_complex();
    Ok(certify("identify_cartier", x, &lam, ring, bound, &|c| omega.cell_label(c), &model))
}

/// `C_*(ΩX)` against the cobar construction `ΩC_*(X)`.
pub fn identify_cobar(x: &SimplicialSet, ring: Ring, bound: usize) -> Result<IdentificationCertificate> {
    let omega = OmegaX::new(x)?;
    let model = cobar(&Dgc::from_simplicial(x, ring, bound)?, bound)?.to_chain_complex();
    Ok(certify("identify_cobar", x, &omega, ring, bound, &|c| omega.label(c), &model))
}

/// Compares the `d²` part `Σ_{i≥2} (−1)^{(i−1)(m+n)} d²_i` of the `ΛX`
/// differential with the `θ₂` part of the Cartier differential on every basis
/// element. Returns the number of cells checked and the first disagreement.
pub fn theta2_correspondence(x: &SimplicialSet, ring: Ring, bound: usize) -> Result<(usize, Option<String>)> {
    let omega = OmegaX::new(x)?;
    let lam = lambda_set(&omega);
    let dgc = Dgc::from_simplicial(x, ring, bound)?;
    let lc = cartier(&dgc, bound)?;
    let words: HashMap<String, &Word> = lc.words.values().flatten().map(|w| (lc.label(w), w)).collect();
    let mut checked = 0;
    for r in 1..=bound {
        for c in lam.nondegenerate(r) {
            let (m, n) = lam.bidegree(&c);
            let mut ours: BTreeMap<String, i64> = BTreeMap::new();
            for i in 2..=m {
                let f = lam.face(&c, 2, i).expect("legal d2");
                if !FnOps::is_degenerate(&lam, &f) {
                    add_term(&mut ours, omega.cell_label(&f), if (i - 1) * (m + n) % 2 == 0 { 1 } else { -1 });
                }
            }
            let label = omega.cell_label(&c);
            let w = words.get(&label).ok_or_else(|| Error::Invalid(format!("no Cartier word {label}")))?;
            let theirs: BTreeMap<String, i64> = cartier_theta2(&dgc, w).into_iter().map(|(v, k)| (lc.label(&v), k)).collect();
            let mut ours = ours;
            if let Ring::Mod(p) = ring {
                ours.values_mut().for_each(|v| *v = v.rem_euclid(p as i64));
            }
            ours.retain(|_, v| *v != 0);
            checked += 1;
            if ours != theirs {
                return Ok((checked, Some(format!("{label}: d² gives {ours:?}, θ₂ gives {theirs:?}"))));
            }
        }
    }
    Ok((checked, None))
}
