//! The simplicial loop model ΛX for the minimal two-sphere: identities, the
//! Cartier identification and the homology of the free loop space.

use freehedra::chain::{homology, Ring};
use freehedra::corpus;
use freehedra::fnset::verify_fnset;
use freehedra::loop_model::{identify_cartier, labelled_chains, lambda_set, verify_truncating, OmegaX};

fn main() -> freehedra::Result<()> {
    let x = corpus::space("s2")?;
    let omega = OmegaX::new(&x)?;
    println!("truncating twisting function: {}", verify_truncating(&omega, 6).passed());
    let lam = lambda_set(&omega);
    let rep = verify_fnset(&lam, 6);
    println!("ΛS² identities: {} instances, {} violations", rep.instances, rep.violations.len());
    let cert = identify_cartier(&x, Ring::Integers, 8)?;
    println!("Cartier identification: {} cells matched, passed {}", cert.bijection.len(), cert.passed());
    let h = homology(&labelled_chains(&lam, Ring::Integers, 8, &|c| omega.cell_label(c)))?;
    for k in 0..8 {
        println!("H_{k}(ΛS²) = Z^{} {:?}", h.rank(k), h.torsion(k));
    }
    Ok(())
}
