//! f-vectors of the freehedra F_0..F_6 and their facet counts.

use freehedra::cell::f_vector;

fn main() -> freehedra::Result<()> {
    for n in 0..=6 {
        let f = f_vector(n)?;
        let facets = if n > 0 { f[n - 1] } else { 0 };
        println!("F_{n}: {f:?}, {facets} facets");
    }
    Ok(())
}
