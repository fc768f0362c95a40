//! SVG drawings of the freehedra `F_n`, `n ≤ 3`, from their cell incidences.
//!
//! Vertices and edges are the 0- and 1-cells of `F_n`. For `n = 3` the graph
//! is drawn by a Tutte embedding with a pentagonal facet as the outer face.
//! Codimension-one faces carry the names of the face operators of the top
//! cell that produce them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::cell::{boundary, enumerate_faces, top_cell, Cell};
use crate::error::{Error, Result};

/// An SVG drawing with the incidence counts it was built from.
#[derive(Clone, Debug)]
pub struct Figure {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    /// `(face cell, operator names)` for the codimension-one faces.
    pub facets: Vec<(String, Vec<String>)>,
    pub svg: String,
}

const SUP: [&str; 3] = ["⁰", "¹", "²"];
const SUB: [&str; 10] = ["₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"];

/// `d^ε_i` in display form.
pub fn operator_name(eps: u8, i: usize) -> String {
    format!("d{}{}", SUP[eps as usize], SUB[i % 10])
}

/// Codimension-one faces of the top cell of `F_n` with the operators producing them.
pub fn facet_operators(n: usize) -> Result<BTreeMap<Cell, Vec<String>>> {
    let top = top_cell(n, 0);
    let mut out: BTreeMap<Cell, Vec<String>> = BTreeMap::new();
    for eps in 0..3u8 {
        for i in 1..=n {
            out.entry(top.face(eps, i)?).or_default().push(operator_name(eps, i));
        }
    }
    Ok(out)
}

fn endpoints(e: &Cell, index: &BTreeMap<Cell, usize>) -> (usize, usize) {
    let ends: Vec<usize> = boundary(e).keys().map(|v| index[v]).collect();
    (ends[0], ends[1])
}

/// Vertices of a cycle given by its edges, starting at the smallest vertex.
fn cycle(edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let start = *adj.keys().next().expect("nonempty cycle");
    let mut out = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().min().expect("degree two");
    while cur != start {
        out.push(cur);
        let next = *adj[&cur].iter().find(|&&x| x != prev).expect("degree two");
        prev = cur;
        cur = next;
    }
    out
}

fn polygon(k: usize, r: f64) -> Vec<(f64, f64)> {
    (0..k)
        .map(|i| {
            let t = std::f64::consts::PI * (0.5 + 2.0 * i as f64 / k as f64);
            (r * t.cos(), -r * t.sin())
        })
        .collect()
}

/// Tutte embedding: the outer cycle is fixed and every other vertex sits at
/// the average of its neighbours.
fn tutte(nv: usize, edges: &[(usize, usize)], outer: &[usize], r: f64) -> Vec<(f64, f64)> {
    let mut pos = vec![(0.0, 0.0); nv];
    let fixed: BTreeSet<usize> = outer.iter().copied().collect();
    for (&v, p) in outer.iter().zip(polygon(outer.len(), r)) {
        pos[v] = p;
    }
    let mut adj = vec![Vec::new(); nv];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for _ in 0..2000 {
        for v in 0..nv {
            if fixed.contains(&v) || adj[v].is_empty() {
                continue;
            }
            let k = adj[v].len() as f64;
            let (sx, sy) = adj[v].iter().fold((0.0, 0.0), |(x, y), &u| (x + pos[u].0, y + pos[u].1));
            pos[v] = (sx / k, sy / k);
        }
    }
    pos
}

/// The drawing of `F_n` for `n ≤ 3`.
pub fn freehedron_figure(n: usize) -> Result<Figure> {
    if n > 3 {
        return Err(Error::Bound(format!("figures are drawn for n ≤ 3, got {n}")));
    }
    let cells = enumerate_faces(n, 0)?;
    let verts: Vec<Cell> = cells.get(&0).cloned().unwrap_or_default();
    let index: BTreeMap<Cell, usize> = verts.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let edge_cells: Vec<Cell> = cells.get(&1).cloned().unwrap_or_default();
    let edges: Vec<(usize, usize)> = edge_cells.iter().map(|e| endpoints(e, &index)).collect();
    let edge_of: BTreeMap<Cell, (usize, usize)> = edge_cells.iter().cloned().zip(edges.iter().copied()).collect();
    let face_verts = |f: &Cell| -> Vec<usize> {
        match f.dim() {
            0 => vec![index[f]],
            1 => {
                let (a, b) = edge_of[f];
                vec![a, b]
            }
            _ => cycle(&boundary(f).keys().map(|e| edge_of[e]).collect::<Vec<_>>()),
        }
    };
    let r = 150.0;
    let pos = match n {
        0 => vec![(0.0, 0.0)],
        1 => vec![(-r, 0.0), (r, 0.0)],
        2 => {
            let order = cycle(&edges);
            let mut pos = vec![(0.0, 0.0); verts.len()];
            for (&v, p) in order.iter().zip(polygon(order.len(), r)) {
                pos[v] = p;
            }
            pos
        }
        _ => {
            let outer = cells[&2].iter().map(face_verts).find(|c| c.len() == 5).expect("a pentagonal facet");
            tutte(verts.len(), &edges, &outer, r)
        }
    };
    let facets = facet_operators(n)?;
    let mut svg = String::new();
    let w = 2.0 * r + 160.0;
    let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.2} {:.2} {w:.2} {w:.2}" font-family="serif">"#, -w / 2.0, -w / 2.0);
    let _ = writeln!(svg, r#"<text x="{:.2}" y="{:.2}" font-size="18">F{}</text>"#, -w / 2.0 + 10.0, -w / 2.0 + 24.0, SUB[n]);
    for &(a, b) in &edges {
        let _ = writeln!(svg, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1.5"/>"#, pos[a].0, pos[a].1, pos[b].0, pos[b].1);
    }
    for (v, c) in verts.iter().enumerate() {
        let (x, y) = pos[v];
        let _ = writeln!(svg, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3"/>"#);
        let _ = writeln!(svg, r#"<text x="{:.2}" y="{:.2}" font-size="9" fill="gray">{}</text>"#, x + 5.0, y - 5.0, escape(&c.to_string()));
    }
    let mut facet_list = Vec::new();
    for (f, names) in &facets {
        let label = names.join("=");
        let vs = face_verts(f);
        let (cx, cy) = vs.iter().fold((0.0, 0.0), |(x, y), &v| (x + pos[v].0, y + pos[v].1));
        let (cx, cy) = (cx / vs.len() as f64, cy / vs.len() as f64);
        // push edge labels of the pentagon outward, and the outer facet of F₃ below the drawing
        let (x, y) = if n == 3 && vs.iter().all(|&v| pos[v].0.hypot(pos[v].1) > r - 1e-6) {
            (0.0, r + 40.0)
        } else if n == 2 {
            (cx * 1.25, cy * 1.25)
        } else {
            (cx, cy)
        };
        let _ = writeln!(svg, r#"<text x="{x:.2}" y="{y:.2}" font-size="13" text-anchor="middle" fill="darkred">{}</text>"#, escape(&label));
        facet_list.push((f.to_string(), names.clone()));
    }
    svg.push_str("</svg>\n");
    Ok(Figure { n, vertices: verts.len(), edges: edges.len(), facets: facet_list, svg })
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::f_vector;

    #[test]
    fn counts_match_the_f_vector() {
        for n in 0..=3 {
            let f = freehedron_figure(n).unwrap();
            let fv = f_vector(n).unwrap();
            assert_eq!(f.vertices, fv[0]);
            assert_eq!(f.edges, fv.get(1).copied().unwrap_or(0));
        }
        let f = freehedron_figure(3).unwrap();
        assert_eq!((f.vertices, f.edges, f.facets.len()), (12, 18, 8));
        assert!(matches!(freehedron_figure(4), Err(Error::Bound(_))));
    }

    #[test]
    fn pentagon_labels() {
        let f = freehedron_figure(2).unwrap();
        let names: Vec<String> = f.facets.iter().flat_map(|(_, n)| n.clone()).collect();
        for eps in 0..3u8 {
            for i in 1..=2 {
                assert!(names.contains(&operator_name(eps, i)));
            }
        }
        assert_eq!(f.facets.len(), 5);
        assert!(f.svg.contains("d¹₁=d²₁"));
        assert_eq!(f.svg, freehedron_figure(2).unwrap().svg);
    }

    #[test]
    fn point() {
        let f = freehedron_figure(0).unwrap();
        assert_eq!((f.vertices, f.edges), (1, 0));
        assert_eq!(f.svg.matches("<circle").count(), 1);
    }
}
