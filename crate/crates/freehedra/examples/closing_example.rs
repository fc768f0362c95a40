//! A twisted tensor product with the Poincaré series of S(x,y) ⊗ Λ(x̄,ȳ) but a
//! different ring structure, under both fibre models.

use freehedra::chain::Ring;
use freehedra::hochschild_ring::{example1, FibreModel};

fn main() -> freehedra::Result<()> {
    for model in [FibreModel::ExteriorZ, FibreModel::Printed] {
        let r = example1(Ring::Integers, 6, model)?;
        println!("{model:?}");
        println!("  H(C) ranks {:?}, reference {:?}", r.ranks, r.reference_ranks);
        println!("  fibre ranks {:?}", r.fibre_ranks);
        println!("  ring maps respecting products over Z/{}: {} of {}", r.search_prime, r.maps_respecting, r.maps_checked);
        println!("  passed {}", r.passed());
    }
    Ok(())
}
