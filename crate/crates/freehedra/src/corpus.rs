//! The bundled simplicial sets and name resolution for the command line.

use crate::error::{Error, Result};
use crate::simplicial::SimplicialSet;

const BUNDLED: [(&str, &str); 4] = [
    ("s2", include_str!("../corpus/s2.json")),
    ("two3", include_str!("../corpus/two3.json")),
    ("wedge", include_str!("../corpus/wedge.json")),
    ("delta5", include_str!("../corpus/delta5.json")),
];

/// Names of the bundled spaces.
pub fn names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

/// A bundled space by name, `simplex:n` for `Δⁿ/sk₁`, or a path to a JSON file.
pub fn space(name: &str) -> Result<SimplicialSet> {
    if let Some((_, text)) = BUNDLED.iter().find(|(n, _)| *n == name) {
        return SimplicialSet::from_json(&serde_json::from_str(text)?);
    }
    if let Some(n) = name.strip_prefix("simplex:") {
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad simplex dimension in {name}")))?;
        if !(2..=8).contains(&n) {
            return Err(Error::Bound(format!("simplex:{n} outside 2..=8")));
        }
        return Ok(SimplicialSet::simplex_mod_edges(n));
    }
    let text = std::fs::read_to_string(name).map_err(|e| Error::Io(format!("{name}: {e}")))?;
    SimplicialSet::from_json(&serde_json::from_str(&text)?)
}

/// The small spaces on which the exhaustive product checks run.
pub fn product_spaces() -> Vec<SimplicialSet> {
    ["s2", "two3", "wedge"].iter().map(|n| space(n).expect("bundled")).collect()
}
