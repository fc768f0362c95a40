//! Baues operations on normalized cochains: the hga identities, the Hirsch
//! formula, and the failure of the right derivation rule.

use freehedra::chain::Ring;
use freehedra::corpus;
use freehedra::hga::{hirsch_check, right_hirsch_witness, verify_hga, Cochains};

fn main() -> freehedra::Result<()> {
    for name in ["s2", "two3", "wedge"] {
        // products and operations of degree up to 6 are checked
        let h = Cochains::new(corpus::space(name)?, Ring::Integers, 6);
        let rep = verify_hga(&h, 3).merge(hirsch_check(&h));
        println!("{name}: {} instances, passed {}", rep.instances, rep.passed());
    }
    let h = Cochains::new(corpus::space("delta5")?, Ring::Integers, 5);
    if let Some(w) = right_hirsch_witness(&h) {
        println!("right derivation fails: {} at ({})", w.identity, w.args.join(", "));
        println!("  lhs {}\n  rhs {}", w.lhs, w.rhs);
    }
    Ok(())
}
