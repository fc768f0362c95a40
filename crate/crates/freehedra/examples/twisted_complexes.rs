//! Cobar, Cartier and Hochschild complexes of the two-sphere and their homology.

use freehedra::chain::{homology, Ring};
use freehedra::corpus;
use freehedra::hga::Cochains;
use freehedra::twisted::{cartier, cobar, hochschild, Dga, Dgc, WordComplex};

fn show(w: &WordComplex, bound: usize) -> freehedra::Result<()> {
    let h = homology(&w.to_chain_complex())?;
    let groups: Vec<String> = (0..bound as i64).map(|k| format!("{}{:?}", h.rank(k), h.torsion(k))).collect();
    println!("{}: {}", w.name, groups.join(" "));
    Ok(())
}

fn main() -> freehedra::Result<()> {
    let x = corpus::space("s2")?;
    let c = Dgc::from_simplicial(&x, Ring::Integers, x.max_dim())?;
    show(&cobar(&c, 8)?, 8)?;
    show(&cartier(&c, 8)?, 8)?;
    let a = Dga::from_hga(&Cochains::new(x.clone(), Ring::Integers, x.max_dim()));
    show(&hochschild(&a, 8)?, 8)?;
    Ok(())
}
