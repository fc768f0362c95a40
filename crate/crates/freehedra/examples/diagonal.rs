//! The diagonal of the pentagon F_2 and its coassociator.

use freehedra::cell::{boundary, coassociator, diagonal_f, Cell};

fn main() -> freehedra::Result<()> {
    let top: Cell = "012]".parse()?;
    println!("d {top} =");
    for (c, v) in boundary(&top) {
        println!("  {v:+} {c}");
    }
    println!("Δ {top} =");
    for ((a, b), v) in diagonal_f(&top) {
        println!("  {v:+} {a} ⊗ {b}");
    }
    let a = coassociator(&top);
    println!("(Δ⊗1)Δ − (1⊗Δ)Δ has {} terms, e.g.", a.len());
    for ((x, y, z), v) in a.iter().take(3) {
        println!("  {v:+} {x} ⊗ {y} ⊗ {z}");
    }
    Ok(())
}
