use freehedra::cell::*;
use freehedra::chain::{compose_is_zero, from_boundary, homology, Ring};
use freehedra::fnset::{chain_map_failure, FModel};
use num_bigint::BigInt;
use std::collections::BTreeMap;

fn cell(s: &str) -> Cell {
    s.parse().unwrap()
}

fn chain2(terms: &[(&str, &str, i64)]) -> CellChain2 {
    let mut out = CellChain2::new();
    for &(a, b, v) in terms {
        add_term(&mut out, (cell(a), cell(b)), v);
    }
    out
}

/// f-vector of a product from the factors' f-vectors.
fn product(p: &[u128], q: &[u128]) -> Vec<u128> {
    let mut out = vec![0; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn cube(n: usize) -> Vec<u128> {
    (0..n).fold(vec![1], |acc, _| product(&acc, &[2, 1]))
}

/// Independent f-vector: F_n is simple, so each k-face lies in exactly n − k
/// facets, and the facets are F_{i−1}×I^{n−i}, F_{n−1} (n−1 times) and
/// I^{i−1}×F_{n−i}.
fn f_oracle(n: usize, memo: &mut BTreeMap<usize, Vec<u128>>) -> Vec<u128> {
    if n == 0 {
        return vec![1];
    }
    if let Some(v) = memo.get(&n) {
        return v.clone();
    }
    let mut facets = Vec::new();
    for i in 1..=n {
        facets.push(product(&f_oracle(i - 1, memo), &cube(n - i)));
        facets.push(product(&cube(i - 1), &f_oracle(n - i, memo)));
    }
    for _ in 2..=n {
        facets.push(f_oracle(n - 1, memo));
    }
    let mut out = vec![0; n + 1];
    for (k, slot) in out.iter_mut().enumerate().take(n) {
        let s: u128 = facets.iter().map(|f| f.get(k).copied().unwrap_or(0)).sum();
        assert_eq!(s % (n - k) as u128, 0);
        *slot = s / (n - k) as u128;
    }
    out[n] = 1;
    memo.insert(n, out.clone());
    out
}

#[test]
fn f_vectors_of_small_freehedra() {
    assert_eq!(f_vector(2).unwrap(), vec![5, 5, 1]);
    assert_eq!(f_vector(3).unwrap(), vec![12, 18, 8, 1]);
    assert_eq!(f_vector(1).unwrap(), vec![2, 1]);
}

#[test]
fn f_vectors_match_simple_polytope_recursion() {
    let mut memo = BTreeMap::new();
    for n in 1..=7 {
        let want: Vec<usize> = f_oracle(n, &mut memo).iter().map(|&x| x as usize).collect();
        assert_eq!(f_vector(n).unwrap(), want, "F_{n}");
    }
}

#[test]
fn codimension_one_faces_form_a_progression() {
    for n in 1..=6 {
        assert_eq!(f_vector(n).unwrap()[n - 1], 3 * n - 1);
    }
}

#[test]
fn face_counts_of_small_products() {
    let count = |m, n| enumerate_faces(m, n).unwrap().values().map(Vec::len).sum::<usize>();
    assert_eq!(count(2, 0), 11);
    assert_eq!(count(3, 0), 39);
    assert_eq!(count(1, 0), 3);
    assert_eq!(count(0, 2), 9);
    assert_eq!(count(1, 1), 9);
}

#[test]
fn top_cells() {
    assert_eq!(top_cell(2, 0).to_string(), "012]");
    assert_eq!(top_cell(0, 0).to_string(), "0]");
    assert_eq!(top_cell(0, 0).dim(), 0);
    assert_eq!(top_cell(1, 1).dim(), 2);
    assert_eq!(top_cell(2, 3).cell_type(), (2, 3));
}

#[test]
fn faces_from_the_figure() {
    let t = top_cell(3, 0);
    assert_eq!(t.face(2, 1).unwrap().to_string(), "123][01]");
    assert_eq!(t.face(0, 1).unwrap().to_string(), "0][0123]");
    assert_eq!(t.face(2, 3).unwrap().to_string(), "3][0123]");
    assert_eq!(top_cell(2, 0).face(1, 2).unwrap().to_string(), "02]");
    assert_eq!(t.face(1, 1).unwrap(), t.face(2, 1).unwrap());
}

#[test]
fn face_range_errors() {
    let t = top_cell(2, 0);
    assert!(t.face(0, 3).is_err());
    assert!(t.face(2, 3).is_err());
    assert!(t.face(0, 0).is_err());
    assert!(t.degeneracy(2).is_err());
    assert!(t.degeneracy(1).is_ok());
}

#[test]
fn degeneracy_examples() {
    let sq = top_cell(1, 1);
    let e = sq.degeneracy(1).unwrap();
    assert_eq!(e.face(0, 2).unwrap(), sq);
    assert_eq!(e.face(1, 2).unwrap(), sq);
    for (i, j) in [(1, 1), (1, 2), (2, 2)] {
        let lhs = sq.degeneracy(j).unwrap().degeneracy(i).unwrap();
        let rhs = sq.degeneracy(i).unwrap().degeneracy(j + 1).unwrap();
        assert_eq!(lhs, rhs, "η{i}η{j}");
    }
}

#[test]
fn pentagon_boundary_signs() {
    let want: CellChain = [("0][012]", -1), ("12][01]", 1), ("01][12]", 1), ("02]", -1), ("2][012]", 1)]
        .into_iter()
        .map(|(s, v)| (cell(s), v))
        .collect();
    assert_eq!(boundary(&cell("012]")), want);
    assert!(boundary(&cell("0]")).is_empty());
}

#[test]
fn boundary_squares_to_zero() {
    for total in 0..=6 {
        for m in 0..=total {
            for c in enumerate_faces(m, total - m).unwrap().values().flatten() {
                let bb = boundary_chain(&boundary(c));
                assert!(bb.is_empty(), "d∘d({c}) = {bb:?}");
            }
        }
    }
}

#[test]
fn dimension_formula_agrees_with_block_count() {
    for n in 1..=6 {
        for c in enumerate_faces(n, 0).unwrap().values().flatten() {
            assert_eq!(c.chain_q(), Some(c.dim() as i64), "{c}");
        }
    }
}

fn cell_complex(m: usize, n: usize, ring: Ring) -> freehedra::chain::ChainComplex {
    let cells = enumerate_faces(m, n).unwrap();
    let bases = cells
        .iter()
        .map(|(k, v)| (*k as i64, v.iter().map(Cell::to_string).collect()))
        .collect();
    from_boundary(ring, -1, bases, |_, s| {
        boundary(&cell(s)).into_iter().map(|(c, v)| (c.to_string(), BigInt::from(v))).collect()
    })
}

#[test]
fn freehedra_are_contractible() {
    for n in 0..=6 {
        let c = cell_complex(n, 0, Ring::Integers);
        assert!(compose_is_zero(&c).is_ok());
        let h = homology(&c).unwrap();
        assert_eq!(h.support(), vec![0], "F_{n}");
        assert_eq!(h.rank(0), 1);
        assert!(h.torsion(0).is_empty());
        let chi: i64 = f_vector(n).unwrap().iter().enumerate().map(|(k, f)| if k % 2 == 0 { *f as i64 } else { -(*f as i64) }).sum();
        assert_eq!(chi, c.euler_characteristic());
        assert_eq!(chi, 1);
    }
    let c = cell_complex(3, 0, Ring::Mod(2));
    assert_eq!(homology(&c).unwrap().support(), vec![0]);
}

#[test]
fn sign_flipped_pentagon_is_not_a_complex() {
    let mut c = cell_complex(2, 0, Ring::Integers);
    assert!(compose_is_zero(&c).is_ok());
    let mut d2 = c.d(2);
    let (&key, _) = d2.entries.iter().next().unwrap();
    let v = d2.entries[&key].clone();
    d2.entries.insert(key, -v);
    c.set_d(2, d2);
    let w = compose_is_zero(&c).unwrap_err();
    assert_eq!(w.degree, 2);
}

#[test]
fn diagonal_of_the_pentagon() {
    let want = chain2(&[
        ("0][01][12]", "012]", 1),
        ("012]", "2][02]", 1),
        ("0][012]", "02]", -1),
        ("01][12]", "12][01]", 1),
        ("01][12]", "2][012]", 1),
        ("12][01]", "2][012]", 1),
    ]);
    assert_eq!(diagonal_f(&cell("012]")), want);
}

#[test]
fn diagonal_of_the_three_dimensional_freehedron() {
    let want = chain2(&[
        ("0][01][12][23]", "0123]", 1),
        ("0123]", "3][03]", 1),
        ("0][0123]", "03]", 1),
        ("01][123]", "13][01]", -1),
        ("012][23]", "23][02]", 1),
        ("01][12][23]", "123][01]", 1),
        ("0][01][123]", "013]", 1),
        ("0][012][23]", "023]", -1),
        ("01][123]", "3][013]", -1),
        ("123][01]", "3][013]", -1),
        ("012][23]", "3][023]", 1),
        ("23][012]", "3][023]", 1),
        ("01][12][23]", "23][012]", -1),
        ("01][12][23]", "3][0123]", 1),
        ("12][23][01]", "23][012]", -1),
        ("12][23][01]", "3][0123]", 1),
        ("23][01][12]", "3][0123]", 1),
    ]);
    assert_eq!(diagonal_f(&cell("0123]")), want);
}

#[test]
fn diagonal_of_a_point_is_grouplike() {
    assert_eq!(diagonal_f(&cell("0]")), chain2(&[("0]", "0]", 1)]));
}

#[test]
fn diagonal_is_a_chain_map() {
    for n in 1..=5 {
        assert_eq!(chain_map_failure(&FModel::new(n, 0).unwrap(), n), None, "F_{n}");
    }
    for (m, n) in [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3), (0, 3)] {
        assert_eq!(chain_map_failure(&FModel::new(m, n).unwrap(), m + n), None, "F_{m}×I^{n}");
    }
}

#[test]
fn diagonal_is_not_coassociative() {
    assert!(!coassociator(&cell("012]")).is_empty());
    assert!(coassociator(&cell("01]")).is_empty());
}

#[test]
fn compatible_with_alexander_whitney() {
    for n in 0..=4 {
        assert_eq!(aw_compatibility_failure(n).unwrap(), None, "F_{n}");
    }
}

#[test]
fn pure_cube_cells_carry_the_serre_diagonal() {
    for n in 1..=4 {
        assert_eq!(serre_failure(n).unwrap(), None, "I^{n}");
    }
}

#[test]
fn projection_to_the_simplex() {
    assert_eq!(project_phi(&cell("0][0123]")).unwrap(), vec![0]);
    assert_eq!(project_phi(&cell("3][0123]")).unwrap(), vec![3]);
    assert_eq!(project_phi(&cell("012]")).unwrap(), vec![0, 1, 2]);
    assert_eq!(project_phi(&cell("12][01]")).unwrap(), vec![1, 2]);
    assert!(project_phi(&top_cell(1, 1)).is_err());
}
