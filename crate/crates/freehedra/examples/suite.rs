//! Runs a few registered checks on two workers and prints their certificates.

use freehedra::suite::{certificates_json, run_suite, CheckSpec, SuiteConfig};

fn main() -> freehedra::Result<()> {
    let config = SuiteConfig {
        checks: ["fvector", "diagonal_display", "coassociator", "theorem1"].iter().map(|n| CheckSpec::named(n)).collect(),
        seed: None,
    };
    let certs = run_suite(&config, 2)?;
    for c in &certs {
        println!("{:<18} {}", c.name, if c.passed { "pass" } else { "FAIL" });
    }
    println!("{}", serde_json::to_string_pretty(&certificates_json(&certs, false))?);
    Ok(())
}
