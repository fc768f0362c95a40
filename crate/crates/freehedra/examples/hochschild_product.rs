//! The product λ_E on the Hochschild complex of the two-sphere cochains, and
//! the resulting ring HH_*.

use freehedra::chain::Ring;
use freehedra::corpus;
use freehedra::hga::Cochains;
use freehedra::hochschild_ring::HochschildAlgebra;

fn main() -> freehedra::Result<()> {
    let x = corpus::space("s2")?;
    let c = Cochains::new(x.clone(), Ring::Integers, x.max_dim());
    let h = HochschildAlgebra::new(&c)?;
    let words = h.words(4)?;
    for a in words.iter().filter(|w| !w.letters.is_empty()).take(2) {
        for b in words.iter().filter(|w| w.letters.len() == 1).take(2) {
            println!("({}) · ({}) = {}", h.label(a), h.label(b), h.show(&h.lambda_e(a, b)));
        }
    }
    println!("λ_E chain map through degree 6: {}", h.check_lambda_chain_map(6)?.passed());
    let p = h.hh_ring(6, false)?.presentation();
    println!("HH ranks {:?}", p.ranks());
    for (k, c) in p.classes.iter().enumerate().filter(|(_, c)| c.order > 0.into()) {
        println!("class {k} in degree {} has order {}", c.degree, c.order);
    }
    Ok(())
}
