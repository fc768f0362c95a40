use freehedra::chain::{homology, ChainComplex, Ring};
use freehedra::fnset::{verify_fnset, FnOps, FnSet};
use freehedra::loop_model::*;
use freehedra::simplicial::{Simplex, SimplicialSet};
use freehedra::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn load(text: &str) -> SimplicialSet {
    SimplicialSet::from_json(&serde_json::from_str(text).unwrap()).unwrap()
}

fn s2() -> SimplicialSet {
    load(include_str!("../corpus/s2.json"))
}

fn two3() -> SimplicialSet {
    load(include_str!("../corpus/two3.json"))
}

fn wedge() -> SimplicialSet {
    load(include_str!("../corpus/wedge.json"))
}

fn point() -> SimplicialSet {
    load(r#"{"name": "pt", "generators": [{"name": "*", "dim": 0}]}"#)
}

fn gen(x: &SimplicialSet, name: &str) -> Simplex {
    Simplex::generator(x.gens.iter().position(|g| g.name == name).unwrap())
}

fn bar(x: &SimplicialSet, names: &[&str]) -> Cube {
    Cube {
        degen: vec![],
        factors: names.iter().map(|n| gen(x, n)).collect(),
    }
}

#[test]
fn s2_monomials_are_powers() {
    let o = OmegaX::new(&s2()).unwrap();
    for k in 0..=8 {
        let m = o.monomials(k);
        assert_eq!(m.len(), 1);
        assert_eq!(o.label(&m[0]), format!("[{}]", vec!["z"; k].join("|")));
        assert_eq!(MonoidalCubical::dim(&o, &m[0]), k);
    }
    let z = bar(&o.space, &["z"]);
    for eps in 0..2 {
        assert_eq!(MonoidalCubical::face(&o, &z, eps, 1), o.unit());
    }
}

#[test]
fn point_gives_trivial_monoid() {
    let x = point();
    let o = OmegaX::new(&x).unwrap();
    assert_eq!(o.monomials(0), vec![o.unit()]);
    assert!((1..6).all(|k| o.monomials(k).is_empty()));
    let cert = identify_cartier(&x, Ring::Integers, 4).unwrap();
    assert!(cert.passed());
    assert_eq!(cert.bijection, vec![(0, "#0⊗[]".to_string(), "*⊗[]".to_string())]);
}

#[test]
fn faces_of_a_barred_three_simplex() {
    // x has faces (a, b, a, b)
    let x = two3();
    let o = OmegaX::new(&x).unwrap();
    let xb = bar(&x, &["x"]);
    let f = |e, i| o.label(&MonoidalCubical::face(&o, &xb, e, i));
    assert_eq!(f(1, 1), "[b]");
    assert_eq!(f(1, 2), "[a]");
    assert_eq!(f(0, 1), "[a]");
    assert_eq!(f(0, 2), "[b]");
    // factor-wise on a product, with the index shift
    let p = bar(&x, &["a", "x", "y"]);
    assert_eq!(o.label(&MonoidalCubical::face(&o, &p, 1, 2)), "[a|b|y]");
    assert_eq!(o.label(&MonoidalCubical::face(&o, &p, 0, 4)), "[a|x|b]");
    assert_eq!(o.label(&MonoidalCubical::face(&o, &p, 0, 1)), "[x|y]");
}

#[test]
fn top_degeneracy_becomes_eta() {
    let x = two3();
    let o = OmegaX::new(&x).unwrap();
    let a = gen(&x, "a");
    assert_eq!(o.tau(&x.degeneracy(&a, 2)), MonoidalCubical::degeneracy(&o, &o.tau(&a), 2));
    let lower = o.tau(&x.degeneracy(&a, 1));
    assert!(MonoidalCubical::is_degenerate(&o, &lower));
    assert!(lower.degen.is_empty());
}

#[test]
fn universal_twisting_function_is_truncating() {
    for (x, b) in [(s2(), 8), (two3(), 6), (wedge(), 6), (SimplicialSet::simplex_mod_edges(4), 5)] {
        let o = OmegaX::new(&x).unwrap();
        let rep = verify_truncating(&o, b);
        assert!(rep.passed(), "{}: {:?}", x.name, rep.violations.first());
        assert!(rep.checked > 0);
    }
}

#[test]
fn corrupted_twisting_function_is_caught() {
    let x = two3();
    let o = OmegaX::new(&x).unwrap();
    let (gx, gy) = (gen(&x, "x"), gen(&x, "y"));
    let tau = TwistingMap {
        source: &x,
        target: &o,
        map: Box::new(|s: &Simplex| if *s == gx { o.tau(&gy) } else { o.tau(s) }),
    };
    let rep = verify_truncating(&tau, 4);
    assert!(!rep.passed());
    let w = &rep.violations[0];
    assert_eq!(w.simplex, "x");
    assert!(w.axiom.starts_with("d0_1") || w.axiom.starts_with("d1_1"), "{}", w.axiom);
}

#[test]
fn point_is_a_vacuous_pass() {
    let x = point();
    let o = OmegaX::new(&x).unwrap();
    assert!(verify_truncating(&o, 4).passed());
}

#[test]
fn not_one_reduced_is_rejected() {
    let x = load(r#"{"name": "circle", "generators": [{"name": "*", "dim": 0}, {"name": "e", "dim": 1, "faces": ["*", "*"]}]}"#);
    assert!(matches!(OmegaX::new(&x), Err(Error::NotOneReduced(_))));
    assert!(matches!(identify_cartier(&x, Ring::Integers, 3), Err(Error::NotOneReduced(_))));
}

#[test]
fn lambda_passes_the_structural_identities() {
    for (x, b) in [(s2(), 6), (wedge(), 6), (two3(), 6), (SimplicialSet::simplex_mod_edges(4), 4)] {
        let o = OmegaX::new(&x).unwrap();
        let rep = verify_fnset(&lambda_set(&o), b);
        assert!(rep.violations.is_empty(), "{}: {:?}", x.name, rep.violations.first());
        assert!(rep.instances > 0);
    }
}

#[test]
fn remark_identity_and_first_faces() {
    let x = two3();
    let o = OmegaX::new(&x).unwrap();
    let lam = lambda_set(&o);
    let base = Simplex::generator(x.basepoint());
    for g in ["a", "b", "x", "y"] {
        let c = BiCell { x: gen(&x, g), y: o.unit() };
        let m = x.dim(&c.x);
        let want = BiCell { x: base.clone(), y: o.tau(&c.x) };
        assert_eq!(lam.face(&c, 0, 1), Some(want.clone()));
        assert_eq!(lam.face(&c, 2, m), Some(want));
    }
    for r in 1..=5 {
        for c in lam.nondegenerate(r) {
            if lam.bidegree(&c).0 > 0 {
                assert_eq!(lam.face(&c, 2, 1), lam.face(&c, 1, 1));
            }
        }
    }
}

#[test]
fn degenerate_pairs_are_identified() {
    let x = two3();
    let o = OmegaX::new(&x).unwrap();
    let lam = lambda_set(&o);
    for r in 0..=4 {
        for c in lam.nondegenerate(r) {
            let m = x.dim(&c.x);
            let up = BiCell { x: x.degeneracy(&c.x, m), y: c.y.clone() };
            let side = BiCell { x: c.x.clone(), y: MonoidalCubical::degeneracy(&o, &c.y, 1) };
            assert_eq!(lam.canonical(&up), lam.canonical(&side));
            // the relation is compatible with the d⁰ and d¹ faces
            for eps in 0..2 {
                for i in 1..=r + 1 {
                    let a = lam.face(&up, eps, i).map(|f| lam.canonical(&f));
                    let b = lam.face(&side, eps, i).map(|f| lam.canonical(&f));
                    assert_eq!(a, b, "{} d{eps}_{i}", o.cell_label(&c));
                }
            }
        }
    }
}

#[test]
fn zero_row_is_omega() {
    let x = two3();
    let o = OmegaX::new(&x).unwrap();
    let lam = lambda_set(&o);
    let base = Simplex::generator(x.basepoint());
    for r in 0..=5 {
        let cells: Vec<_> = lam.nondegenerate(r).into_iter().filter(|c| x.dim(&c.x) == 0).collect();
        assert_eq!(cells.iter().map(|c| c.y.clone()).collect::<Vec<_>>(), FnSet::nondegenerate(&o, r));
        for c in cells {
            for j in 1..=r + 1 {
                let d = FnOps::degeneracy(&o, &c.y, j).unwrap();
                assert_eq!(lam.degeneracy(&c, j), Some(BiCell { x: base.clone(), y: d.clone() }));
                for e in 0..3u8 {
                    for i in 0..=r + 2 {
                        let want = FnOps::face(&o, &d, e, i).map(|y| BiCell { x: base.clone(), y });
                        assert_eq!(lam.face(&BiCell { x: base.clone(), y: d.clone() }, e, i), want);
                    }
                }
            }
        }
    }
}

#[test]
fn chains_of_omega_are_the_cobar_construction() {
    for (x, b) in [(s2(), 8), (two3(), 6), (wedge(), 6), (SimplicialSet::simplex_mod_edges(4), 5)] {
        let cert = identify_cobar(&x, Ring::Integers, b).unwrap();
        assert!(cert.passed(), "{}: {:?}", x.name, cert.mismatch);
    }
}

#[test]
fn cartier_identification_s2() {
    let cert = identify_cartier(&s2(), Ring::Integers, 8).unwrap();
    assert!(cert.passed(), "{:?}", cert.mismatch);
    // z^k in the zero row and z⊗z^k beside it
    assert_eq!(cert.bijection.len(), 9 + 7);
    assert_eq!(cert.entries_compared, 3);
    let j = cert.to_json();
    assert_eq!(j["passed"], true);
    assert_eq!(j["bijection"][0]["word"], "*⊗[]");
}

#[test]
fn cartier_identification_corpus() {
    for (x, b) in [(two3(), 6), (wedge(), 6), (SimplicialSet::simplex_mod_edges(4), 4)] {
        for ring in [Ring::Integers, Ring::Mod(2)] {
            let cert = identify_cartier(&x, ring, b).unwrap();
            assert!(cert.passed(), "{} over {ring}: {:?}", x.name, cert.mismatch);
            assert!(cert.entries_compared > 0);
        }
    }
}

#[test]
fn cartier_homology_of_s2_via_lambda() {
    let o = OmegaX::new(&s2()).unwrap();
    let lam = lambda_set(&o);
    let c = labelled_chains(&lam, Ring::Integers, 8, &|c| o.cell_label(c));
    let h = homology(&c).unwrap();
    for k in 0..8 {
        assert_eq!(h.rank(k), 1, "degree {k}");
        let torsion: Vec<BigInt> = if k >= 2 && k % 2 == 0 { vec![BigInt::from(2)] } else { vec![] };
        assert_eq!(h.torsion(k), torsion, "degree {k}");
    }
}

#[test]
fn theta2_is_the_d2_component() {
    for (x, b) in [(s2(), 8), (two3(), 6), (wedge(), 6), (SimplicialSet::simplex_mod_edges(4), 4)] {
        let (checked, bad) = theta2_correspondence(&x, Ring::Integers, b).unwrap();
        assert!(bad.is_none(), "{}: {:?}", x.name, bad);
        assert!(checked > 0);
    }
}

#[test]
fn mismatches_are_reported() {
    let o = OmegaX::new(&two3()).unwrap();
    let lam = lambda_set(&o);
    let good = labelled_chains(&lam, Ring::Integers, 4, &|c| o.cell_label(c));
    let mut bad: ChainComplex = good.clone();
    let mut d = bad.d(3);
    let (&(r, c), v) = d.entries.iter().next().unwrap();
    let flipped = -v.clone();
    d.entries.insert((r, c), flipped.clone());
    bad.set_d(3, d);
    let (_, m) = compare_complexes(&good, &bad);
    match m {
        Some(Mismatch::Entry { degree, left, right, .. }) => {
            assert_eq!(degree, 3);
            assert_eq!(right, flipped);
            assert_eq!(left, -flipped);
        }
        other => panic!("{other:?}"),
    }
    assert!(compare_complexes(&good, &good).1.is_none());
}

fn arb_product() -> impl Strategy<Value = Vec<usize>> {
    // two3 generators: a = 1, b = 2, x = 3, y = 4
    prop::collection::vec(1usize..5, 1..4)
}

proptest! {
    #[test]
    fn cubical_and_monoidal_identities(f in arb_product(), g in arb_product(), seed in 0usize..1000) {
        let x = two3();
        let o = OmegaX::new(&x).unwrap();
        let mk = |v: &[usize]| Cube { degen: vec![], factors: v.iter().map(|&i| Simplex::generator(i)).collect() };
        let (a, b) = (mk(&f), mk(&g));
        let ab = o.mul(&a, &b);
        let p = MonoidalCubical::dim(&o, &a);
        let n = MonoidalCubical::dim(&o, &ab);
        for eps in 0..2u8 {
            for i in 1..=n {
                let want = if i <= p {
                    o.mul(&MonoidalCubical::face(&o, &a, eps, i), &b)
                } else {
                    o.mul(&a, &MonoidalCubical::face(&o, &b, eps, i - p))
                };
                prop_assert_eq!(MonoidalCubical::face(&o, &ab, eps, i), want);
            }
        }
        // d_i d_j = d_{j−1} d_i on a degenerate element
        let k = 1 + seed % (n + 1);
        let e = MonoidalCubical::degeneracy(&o, &ab, k);
        for (s, t) in [(0u8, 0u8), (0, 1), (1, 0), (1, 1)] {
            for j in 2..=n + 1 {
                for i in 1..j {
                    let l = MonoidalCubical::face(&o, &MonoidalCubical::face(&o, &e, t, j), s, i);
                    let r = MonoidalCubical::face(&o, &MonoidalCubical::face(&o, &e, s, i), t, j - 1);
                    prop_assert_eq!(l, r);
                }
            }
        }
        prop_assert_eq!(MonoidalCubical::face(&o, &e, 0, k), ab.clone());
        prop_assert_eq!(MonoidalCubical::face(&o, &e, 1, k), ab);
    }
}
