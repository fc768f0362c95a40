use freehedra::chain::{compose_is_zero, homology, Ring};
use freehedra::hga::*;
use freehedra::simplicial::{aw_diagonal, chains, SimplicialSet, Simplex};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

fn load(text: &str) -> SimplicialSet {
    SimplicialSet::from_json(&serde_json::from_str(text).unwrap()).unwrap()
}

fn corpus() -> Vec<SimplicialSet> {
    vec![
        load(include_str!("../corpus/s2.json")),
        load(include_str!("../corpus/wedge.json")),
        load(include_str!("../corpus/two3.json")),
        load(include_str!("../corpus/delta5.json")),
    ]
}

fn delta5() -> &'static Cochains {
    static C: OnceLock<Cochains> = OnceLock::new();
    C.get_or_init(|| Cochains::new(SimplicialSet::simplex_mod_edges(5), Ring::Integers, 5))
}

fn gen(x: &SimplicialSet, name: &str) -> usize {
    x.gens.iter().position(|g| g.name == name).unwrap()
}

#[test]
fn corpus_is_simplicial_and_one_reduced() {
    for x in corpus() {
        x.check_identities().unwrap();
        assert!(x.is_one_reduced(), "{}", x.name);
        let back = SimplicialSet::from_json(&x.to_json()).unwrap();
        assert_eq!(back, x);
    }
    let x = SimplicialSet::simplex_mod_edges(6);
    x.check_identities().unwrap();
}

#[test]
fn two_simplices_keep_only_outer_terms() {
    let x = &corpus()[0];
    let z = gen(x, "z");
    let p = x.basepoint();
    assert_eq!(aw_diagonal(x, z), BTreeMap::from([((p, z), 1), ((z, p), 1)]));
    assert_eq!(aw_diagonal(x, p), BTreeMap::from([((p, p), 1)]));
}

/// Full simplex chains: every vertex subset is a nondegenerate face.
#[test]
fn aw_is_coassociative() {
    for x in corpus() {
        for g in 0..x.gens.len() {
            let mut left: BTreeMap<(usize, usize, usize), i64> = BTreeMap::new();
            let mut right = left.clone();
            for ((f, b), v) in aw_diagonal(&x, g) {
                for ((ff, fb), w) in aw_diagonal(&x, f) {
                    *left.entry((ff, fb, b)).or_default() += v * w;
                }
                for ((bf, bb), w) in aw_diagonal(&x, b) {
                    *right.entry((f, bf, bb)).or_default() += v * w;
                }
            }
            assert_eq!(left, right, "{}", x.gens[g].name);
        }
    }
}

#[test]
fn chains_of_the_corpus() {
    let hs: Vec<Vec<i64>> = corpus()
        .iter()
        .map(|x| homology(&chains(x, Ring::Integers, x.max_dim()).unwrap()).unwrap().support())
        .collect();
    assert_eq!(hs[0], vec![0, 2]);
    assert_eq!(hs[1], vec![0, 2, 3]);
    assert_eq!(hs[3], vec![0, 2]);
    for x in corpus() {
        assert!(compose_is_zero(&cochain_complex(&Cochains::new(x, Ring::Integers, 5))).is_ok());
    }
}

#[test]
fn cup_product_is_associative_and_delta_is_a_derivation() {
    let h = delta5();
    let pos: Vec<usize> = (0..=5).flat_map(|d| h.basis(d)).collect();
    for &a in &pos {
        for &b in &pos {
            let (da, db) = (h.degree(a), h.degree(b));
            if da + db > 5 {
                continue;
            }
            let lhs = d_vec(h, &h.mul(a, b));
            let mut rhs = mul_vec(h, &h.d(a), &basis_vec(b));
            let sign = if da % 2 == 0 { 1 } else { -1 };
            add_into(&mut rhs, &mul_vec(h, &basis_vec(a), &h.d(b)), sign);
            reduce(h.ring(), &mut rhs);
            assert_eq!(lhs, rhs, "δ({}·{})", h.label(a), h.label(b));
            for &c in &pos {
                if da + db + h.degree(c) > 5 {
                    continue;
                }
                let l = mul_vec(h, &h.mul(a, b), &basis_vec(c));
                let r = mul_vec(h, &basis_vec(a), &h.mul(b, c));
                assert_eq!(l, r);
            }
        }
    }
    let u = basis_vec(h.unit());
    for &a in &pos {
        assert_eq!(mul_vec(h, &u, &basis_vec(a)), basis_vec(a));
        assert_eq!(mul_vec(h, &basis_vec(a), &u), basis_vec(a));
    }
}

#[test]
fn baues_operations_pass_on_the_corpus() {
    for x in corpus().into_iter().take(3) {
        let name = x.name.clone();
        let h = Cochains::new(x, Ring::Integers, 6);
        let rep = verify_hga(&h, 3);
        assert!(rep.passed(), "{name}: {:?}", &rep.violations[..1]);
        assert!(hirsch_check(&h).passed(), "{name}");
    }
    let h = delta5();
    for k in 1..=2 {
        let rep = check_differential(h, k).merge(check_product(h, k));
        assert!(rep.passed(), "k={k}: {:?}", &rep.violations[..1]);
        assert!(rep.instances > 1000);
    }
    assert!(check_composition(h, 1, 1).passed());
    assert!(hirsch_check(h).passed());
}

#[test]
fn baues_operations_pass_mod_two() {
    let h = Cochains::new(SimplicialSet::simplex_mod_edges(5), Ring::Mod(2), 5);
    assert!(check_differential(&h, 2).passed());
    assert!(check_product(&h, 1).passed());
}

#[test]
fn a_flipped_sign_is_caught() {
    let flip: SignRule = Arc::new(|t: &BauesTerm| {
        let s = baues_sign(t);
        if t.n == 4 && t.cuts == [3] {
            -s
        } else {
            s
        }
    });
    let h = Cochains::with_sign(SimplicialSet::simplex_mod_edges(4), Ring::Integers, 4, flip);
    let rep = check_differential(&h, 1);
    assert!(!rep.passed());
    let w = &rep.violations[0];
    assert_eq!(w.identity, "dE_1,1");
    assert_ne!(w.lhs, w.rhs);
}

#[test]
fn right_hirsch_is_not_a_strict_derivation() {
    let w = right_hirsch_witness(delta5()).expect("a witness");
    assert_ne!(w.lhs, w.rhs);
    assert_eq!(w.args.len(), 3);
}

#[test]
fn sign_table_is_frozen() {
    let golden: serde_json::Value = serde_json::from_str(include_str!("../corpus/golden/baues_signs.json")).unwrap();
    assert_eq!(sign_table(7, &baues_sign), golden);
}

/// Steenrod's cup-1: `(u ∪₁ v)(σ) = Σ_i (−1)^{(p−i)(q+1)} u(0..i, i+q..n) v(i..i+q)`.
fn steenrod_term(p: usize, q: usize, i: usize) -> i64 {
    if ((p - i) * (q + 1)) % 2 == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn cup_one_agrees_with_steenrod_up_to_a_degree_sign() {
    for n in 3..=8 {
        // inner block [i, i+q] fed to a, of degree q
        for q in 2..n {
            let p = n + 1 - q;
            let ratios: Vec<i64> = (0..=n - q)
                .map(|i| {
                    let cuts: Vec<usize> = (1..n).filter(|&v| v <= i || v >= i + q).collect();
                    let t = BauesTerm { n, cuts, blocks: vec![(i, i + q)] };
                    baues_sign(&t) * steenrod_term(p, q, i)
                })
                .collect();
            assert!(ratios.iter().all(|&r| r == ratios[0]), "n={n} q={q}: {ratios:?}");
        }
    }
}

#[test]
fn operations_vanish_past_the_block_count() {
    let h = delta5();
    let pos: Vec<usize> = (2..=5).flat_map(|d| h.basis(d)).collect();
    let mut top_nonzero = false;
    for k in 1..=3 {
        for t in tuples(h, k, 4) {
            for &b in &pos {
                let v = h.e(&t, b);
                if k > h.degree(b) {
                    assert!(v.is_empty());
                }
                if k == h.degree(b) && !v.is_empty() {
                    top_nonzero = true;
                }
            }
        }
    }
    assert!(top_nonzero);
    assert!(e_vec(h, &[], &basis_vec(pos[0])) == basis_vec(pos[0]));
}

#[test]
fn cup_one_square_on_the_two_sphere() {
    for ring in [Ring::Integers, Ring::Mod(2)] {
        let x = corpus()[0].clone();
        let z = gen(&x, "z");
        let h = Cochains::new(x, ring, 4);
        assert!(h.e(&[z], z).is_empty());
        assert_eq!(sq1(&h, &basis_vec(z)).unwrap(), Sq1::Defined(vec![]));
    }
}

#[test]
fn sq1_gate() {
    let zero = |v: &[BigInt]| v.iter().all(|c| c == &BigInt::from(0));
    // evenly graded: Sq₁ vanishes
    let x = corpus()[1].clone();
    let a = gen(&x, "a");
    let h = Cochains::new(x, Ring::Integers, 4);
    match sq1(&h, &basis_vec(a)).unwrap() {
        Sq1::Defined(c) => assert!(zero(&c) && c.len() == 1),
        Sq1::Undefined => panic!(),
    }
    assert!(sq1(&h, &basis_vec(a)).is_ok());
    // not a cocycle
    let d5 = delta5();
    let e = d5.basis(2)[0];
    assert!(sq1(d5, &basis_vec(e)).is_err());
    // odd degree over Z with z² ≠ 0 on cochains
    let h6 = Cochains::new(SimplicialSet::simplex_mod_edges(6), Ring::Integers, 6);
    let two = h6.basis(2);
    let z = two
        .iter()
        .flat_map(|&u| two.iter().map(move |&w| (u, w)))
        .map(|(u, w)| d_vec(&h6, &BTreeMap::from([(u, 1), (w, 1)])))
        .find(|z| !mul_vec(&h6, z, z).is_empty())
        .expect("a cocycle with nonzero square");
    assert_eq!(sq1(&h6, &z).unwrap(), Sq1::Undefined);
    // mod 2 the same cocycle has a class
    let h6 = Cochains::new(SimplicialSet::simplex_mod_edges(6), Ring::Mod(2), 6);
    let mut z2 = z.clone();
    reduce(Ring::Mod(2), &mut z2);
    assert!(matches!(sq1(&h6, &z2).unwrap(), Sq1::Defined(_)));
    // bound too small
    let h = Cochains::new(corpus()[0].clone(), Ring::Integers, 2);
    assert!(sq1(&h, &basis_vec(1)).is_err());
}

#[test]
fn trivial_structure_passes() {
    let gens = vec![("u".to_string(), 2), ("v".to_string(), 3), ("w".to_string(), 3)];
    for ring in [Ring::Integers, Ring::Mod(3)] {
        let h = TrivialHga::new(ring, gens.clone(), 9).unwrap();
        let rep = verify_hga(&h, 3);
        assert!(rep.passed(), "{:?}", &rep.violations[..1]);
        assert!(rep.instances > 0);
        assert!(hirsch_check(&h).passed());
    }
    let h = TrivialHga::new(Ring::Integers, gens, 9).unwrap();
    let (v, w) = (h.monomial(&[0, 1, 0]).unwrap(), h.monomial(&[0, 0, 1]).unwrap());
    let vw = h.monomial(&[0, 1, 1]).unwrap();
    assert_eq!(h.mul(v, w), BTreeMap::from([(vw, 1)]));
    assert_eq!(h.mul(w, v), BTreeMap::from([(vw, -1)]));
    assert!(h.mul(v, v).is_empty());
    assert_eq!(h.label(h.monomial(&[2, 1, 0]).unwrap()), "u^2v");
    assert_eq!(h.basis(6).len(), 2);
    assert!(TrivialHga::new(Ring::Integers, vec![("c".into(), 0)], 3).is_err());
}

#[test]
fn non_commutative_carrier_fails_the_trivial_identities() {
    // odd generators multiplied without the Koszul sign
    struct Bad(TrivialHga);
    impl Hga for Bad {
        fn ring(&self) -> Ring {
            self.0.ring()
        }
        fn top(&self) -> usize {
            self.0.top()
        }
        fn basis(&self, d: usize) -> Vec<usize> {
            self.0.basis(d)
        }
        fn degree(&self, b: usize) -> usize {
            self.0.degree(b)
        }
        fn label(&self, b: usize) -> String {
            self.0.label(b)
        }
        fn unit(&self) -> usize {
            0
        }
        fn d(&self, _: usize) -> Vector {
            Vector::new()
        }
        fn mul(&self, a: usize, b: usize) -> Vector {
            self.0.mul(a, b).into_iter().map(|(k, _)| (k, 1)).collect()
        }
        fn e(&self, _: &[usize], _: usize) -> Vector {
            Vector::new()
        }
    }
    let h = Bad(TrivialHga::new(Ring::Integers, vec![("v".into(), 3), ("w".into(), 3)], 6).unwrap());
    assert!(!check_differential(&h, 1).passed());
}

#[test]
fn simplices_print_with_degeneracies() {
    let x = corpus()[0].clone();
    let p = Simplex::generator(x.basepoint());
    let s = x.degeneracy(&x.degeneracy(&p, 0), 0);
    assert_eq!(x.show(&s), "s1 s0 *");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The differential identity is linear, so random combinations must pass too.
    #[test]
    fn cup_one_identity_on_random_combinations(ca in prop::collection::vec(-3i64..4, 10), cb in prop::collection::vec(-3i64..4, 10)) {
        let h = delta5();
        let two = h.basis(2);
        let a: Vector = two.iter().zip(&ca).map(|(&g, &c)| (g, c)).filter(|(_, c)| *c != 0).collect();
        let b: Vector = two.iter().zip(&cb).map(|(&g, &c)| (g, c)).filter(|(_, c)| *c != 0).collect();
        let lhs = d_vec(h, &e_vec(h, std::slice::from_ref(&a), &b));
        let mut rhs = e_vec(h, &[d_vec(h, &a)], &b);
        add_into(&mut rhs, &e_vec(h, std::slice::from_ref(&a), &d_vec(h, &b)), -1);
        add_into(&mut rhs, &mul_vec(h, &b, &a), -1);
        add_into(&mut rhs, &mul_vec(h, &a, &b), 1);
        reduce(h.ring(), &mut rhs);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_is_a_derivation_on_combinations(c in prop::collection::vec(-2i64..3, 20)) {
        let h = delta5();
        let two = h.basis(2);
        let v = |s: &[i64]| -> Vector { two.iter().zip(s).map(|(&g, &c)| (g, c)).filter(|(_, c)| *c != 0).collect() };
        let (a, b) = (v(&c[..10]), v(&c[10..]));
        let mut rhs = mul_vec(h, &d_vec(h, &a), &b);
        add_into(&mut rhs, &mul_vec(h, &a, &d_vec(h, &b)), 1);
        reduce(h.ring(), &mut rhs);
        prop_assert_eq!(d_vec(h, &mul_vec(h, &a, &b)), rhs);
    }
}
