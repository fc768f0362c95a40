//! Structural identities on the cell models F_m × I^n, and the cellular chains of F_2 × I.

use freehedra::chain::{homology, Ring};
use freehedra::fnset::{normalized_chains, verify_fnset, FModel};

fn main() -> freehedra::Result<()> {
    for (m, n) in [(2, 0), (3, 0), (2, 1), (1, 2), (0, 3)] {
        let rep = verify_fnset(&FModel::new(m, n)?, m + n);
        println!("F_{m}×I^{n}: {} instances, {} violations", rep.instances, rep.violations.len());
    }
    let c = normalized_chains(&FModel::new(2, 1)?, Ring::Integers, 3)?;
    let h = homology(&c)?;
    println!("H_*(F_2×I) ranks: {:?}", (0..=3).map(|k| h.rank(k)).collect::<Vec<_>>());
    Ok(())
}
