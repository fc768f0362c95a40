//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use freehedra::cell::add_term;
use freehedra::hga::{Hga, Vector};
use freehedra::hochschild_ring::HochschildAlgebra;
use freehedra::simplicial::SimplicialSet;
use freehedra::twisted::{Combo, Word};
use std::collections::BTreeMap;

pub fn load(text: &str) -> SimplicialSet {
    SimplicialSet::from_json(&serde_json::from_str(text).unwrap()).unwrap()
}

/// The spaces the product checks run on.
pub fn product_corpus() -> Vec<SimplicialSet> {
    vec![
        load(include_str!("../../corpus/s2.json")),
        load(include_str!("../../corpus/two3.json")),
        load(include_str!("../../corpus/wedge.json")),
    ]
}

fn sign(e: usize) -> i64 {
    1 - 2 * (e % 2) as i64
}

/// Shuffles of two letter sequences with the Koszul sign of the shifted degrees,
/// by the first-letter recursion.
pub fn shuffle(deg: &dyn Fn(usize) -> usize, a: &[usize], b: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    if a.is_empty() || b.is_empty() {
        let w: Vec<usize> = a.iter().chain(b).copied().collect();
        return BTreeMap::from([(w, 1)]);
    }
    let mut out = BTreeMap::new();
    for (w, c) in shuffle(deg, &a[1..], b) {
        add_term(&mut out, [&[a[0]][..], &w].concat(), c);
    }
    let passed: usize = a.iter().map(|&x| deg(x) + 1).sum();
    let s = sign((deg(b[0]) + 1) * passed);
    for (w, c) in shuffle(deg, a, &b[1..]) {
        add_term(&mut out, [&[b[0]][..], &w].concat(), s * c);
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `(u⊗[a])(v⊗[b]) = (−1)^{|v|ε(a)} uv ⊗ sh(a, b)` on a trivial carrier.
pub fn shuffle_product<H: Hga>(h: &HochschildAlgebra<H>, x: &Word, y: &Word) -> Combo {
    let deg = |c: usize| h.deg(c);
    let (u, v) = (x.head.unwrap(), y.head.unwrap());
    let ea: usize = x.letters.iter().map(|&c| deg(c) + 1).sum();
    let s = sign(deg(v) * ea);
    let mut out = Combo::new();
    for (&uv, &k) in &h.mul(u, v) {
        for (w, c) in shuffle(&deg, &x.letters, &y.letters) {
            add_term(&mut out, Word { head: Some(uv), letters: w }, s * k * c);
        }
    }
    if let freehedra::chain::Ring::Mod(p) = h.ring() {
        for c in out.values_mut() {
            *c = c.rem_euclid(p as i64);
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn tensor(head: &Vector, tail: &[Vec<usize>]) -> Combo {
    let mut out = Combo::new();
    for (&h, &c) in head {
        for t in tail {
            add_term(&mut out, Word { head: Some(h), letters: t.clone() }, c);
        }
    }
    out
}

fn times(h: &HochschildAlgebra<impl Hga>, x: &Vector, y: &Vector) -> Vector {
    let mut out = Vector::new();
    for (&a, &c) in x {
        for (&b, &e) in y {
            for (z, f) in h.mul(a, b) {
                add_term(&mut out, z, c * e * f);
            }
        }
    }
    out
}

/// The eight summands of the `m = n = 1` display, unsigned.
pub fn display_summands<H: Hga>(h: &HochschildAlgebra<H>, u: usize, a: usize, v: usize, b: usize) -> Vec<Combo> {
    let one = |c: usize| Vector::from([(c, 1)]);
    let uv = times(h, &one(u), &one(v));
    let mut e_ab = Combo::new();
    for (&c, &k) in &h.e(&[a], b) {
        for (&w, &m) in &uv {
            add_term(&mut e_ab, Word { head: Some(w), letters: vec![c] }, k * m);
        }
    }
    vec![
        tensor(&uv, &[vec![a, b]]),
        tensor(&uv, &[vec![b, a]]),
        e_ab,
        tensor(&times(h, &one(u), &h.e(&[a], v)), &[vec![b]]),
        tensor(&times(h, &h.e(&[u], b), &one(v)), &[vec![a]]),
        tensor(&times(h, &h.e(&[u], b), &h.e(&[a], v)), &[vec![]]),
        tensor(&times(h, &h.e(&[u, a], b), &one(v)), &[vec![]]),
        tensor(&times(h, &h.e(&[a, u], b), &one(v)), &[vec![]]),
    ]
}

/// True when `target` is a signed sum of the summands, one sign each.
pub fn matches_up_to_signs(target: &Combo, summands: &[Combo]) -> bool {
    (0..1u32 << summands.len()).any(|m| {
        let mut acc = Combo::new();
        for (i, s) in summands.iter().enumerate() {
            let e = if m >> i & 1 == 1 { -1 } else { 1 };
            for (w, &c) in s {
                add_term(&mut acc, w.clone(), e * c);
            }
        }
        acc.retain(|_, c| *c != 0);
        &acc == target
    })
}
