//! HH of the trivial hga on free graded commutative algebras against S(U) ⊗ Λ(s⁻¹U).

use freehedra::chain::Ring;
use freehedra::hochschild_ring::{parse_generators, theorem1_check};

fn main() -> freehedra::Result<()> {
    for (gens, ring, bound) in [("x:2", Ring::Integers, 10), ("x:2,y:2", Ring::Integers, 8), ("x:3", Ring::Mod(2), 9)] {
        let r = theorem1_check(&parse_generators(gens)?, ring, bound)?;
        println!("{gens} over {ring}: ranks {:?}, {} products checked, passed {}", r.hh_ranks, r.products_checked, r.passed());
    }
    Ok(())
}
