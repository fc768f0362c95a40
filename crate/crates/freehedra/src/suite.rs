//! The verification suite: named checks, fault injection, and certificates.
//!
//! Each check returns a verdict with witnesses. Checks run on a worker pool
//! and the certificates are sorted by name, so the JSON form is identical
//! across runs for a fixed configuration and seed. Durations are kept out of
//! the JSON unless asked for.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cell::{cell_complex, coassociator, diagonal_f, f_vector, Cell, CellChain2};
use crate::chain::{compose_is_zero, Ring};
use crate::corpus;
use crate::error::{Error, Result};
use crate::fnset::{chain_map_failure, verify_fnset, verify_fnset_with, EtaRule, FModel};
use crate::hga::{baues_sign, hirsch_check, right_hirsch_witness, verify_hga, BauesTerm, Cochains, SignRule, TrivialHga};
use crate::hochschild_ring::{example1, theorem1_check, FibreModel, HochschildAlgebra};
use crate::loop_model::{identify_cartier, lambda_set, verify_truncating, OmegaX, TwistingMap};
use crate::simplicial::{Simplex, SimplicialSet};

pub const DEFAULT_SEED: u64 = 20_061_204;

/// One requested check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    /// Run the check on corrupted input instead.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub fault: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

impl CheckSpec {
    pub fn named(name: &str) -> Self {
        CheckSpec { name: name.into(), ..Default::default() }
    }

    fn ring(&self) -> Result<Ring> {
        self.ring.as_deref().map_or(Ok(Ring::Integers), str::parse)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub checks: Vec<CheckSpec>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl SuiteConfig {
    /// Every registered check with its default parameters.
    pub fn default_suite() -> Self {
        SuiteConfig { checks: REGISTRY.iter().map(|c| CheckSpec::named(c.name)).collect(), seed: None }
    }

    /// Every check that has a fault-injected variant, with the fault on; all must fail.
    pub fn fault_suite() -> Self {
        let checks = REGISTRY.iter().filter(|c| c.fault.is_some()).map(|c| CheckSpec { fault: true, ..CheckSpec::named(c.name) }).collect();
        SuiteConfig { checks, seed: None }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SuiteConfig = serde_json::from_str(text).map_err(|e| Error::Parse(format!("suite config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Unknown checks, faults without a variant, and bad rings are rejected.
    pub fn validate(&self) -> Result<()> {
        for c in &self.checks {
            let entry = lookup(&c.name).ok_or_else(|| Error::Invalid(format!("unknown check {}", c.name)))?;
            if c.fault && entry.fault.is_none() {
                return Err(Error::Invalid(format!("check {} has no fault-injected variant", c.name)));
            }
            c.ring()?;
        }
        Ok(())
    }
}

/// The verdict of one check.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub name: String,
    pub params: CheckSpec,
    pub passed: bool,
    pub witnesses: Vec<String>,
    pub details: Value,
    pub duration: Duration,
}

impl Certificate {
    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "check": self.name,
            "params": self.params,
            "verdict": if self.passed { "pass" } else { "fail" },
            "witnesses": self.witnesses,
            "details": self.details,
        });
        if timings {
            v["duration_ms"] = json!(self.duration.as_secs_f64() * 1e3);
        }
        v
    }
}

pub fn certificates_json(certs: &[Certificate], timings: bool) -> Value {
    json!({
        "passed": certs.iter().all(|c| c.passed),
        "certificates": certs.iter().map(|c| c.to_json(timings)).collect::<Vec<_>>(),
    })
}

/// What a check reports before it is wrapped in a certificate.
pub struct Outcome {
    pub passed: bool,
    pub witnesses: Vec<String>,
    pub details: Value,
}

impl Outcome {
    fn new(passed: bool, witnesses: Vec<String>, details: Value) -> Self {
        Outcome { passed, witnesses, details }
    }
}

type CheckFn = fn(&CheckSpec, u64) -> Result<Outcome>;

struct Entry {
    name: &'static str,
    run: CheckFn,
    /// The same check on corrupted input; it must fail with a witness.
    fault: Option<CheckFn>,
}

const REGISTRY: &[Entry] = &[
    Entry { name: "cartier_identification", run: cartier_identification, fault: None },
    Entry { name: "cell_complex", run: cell_complex_check, fault: Some(cell_complex_fault) },
    Entry { name: "coassociator", run: coassociator_check, fault: None },
    Entry { name: "diagonal_chain_map", run: diagonal_chain_map, fault: None },
    Entry { name: "diagonal_display", run: diagonal_display, fault: Some(diagonal_display_fault) },
    Entry { name: "example1", run: example1_check, fault: None },
    Entry { name: "fnset_identities", run: fnset_identities, fault: Some(fnset_fault) },
    Entry { name: "fvector", run: fvector, fault: None },
    Entry { name: "hga_identities", run: hga_identities, fault: Some(hga_fault) },
    Entry { name: "lambda_chain_map", run: lambda_chain_map, fault: None },
    Entry { name: "lambda_identities", run: lambda_identities, fault: None },
    Entry { name: "mu_associativity", run: mu_associativity, fault: None },
    Entry { name: "phi3", run: phi3, fault: None },
    Entry { name: "random_associativity", run: random_associativity, fault: None },
    Entry { name: "right_hirsch", run: right_hirsch, fault: None },
    Entry { name: "theorem1", run: theorem1, fault: None },
    Entry { name: "truncating", run: truncating, fault: Some(truncating_fault) },
];

fn lookup(name: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.name == name)
}

/// Names of all registered checks.
pub fn check_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.name).collect()
}

/// Runs the configured checks on `workers` threads and returns certificates
/// sorted by name, then by parameters.
pub fn run_suite(config: &SuiteConfig, workers: usize) -> Result<Vec<Certificate>> {
    config.validate()?;
    let seed = config.seed.unwrap_or(DEFAULT_SEED);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Invalid(format!("worker pool: {e}")))?;
    let mut certs: Vec<Certificate> = pool.install(|| {
        config
            .checks
            .par_iter()
            .map(|spec| {
                let entry = lookup(&spec.name).expect("validated");
                let f = if spec.fault { entry.fault.expect("validated") } else { entry.run };
                let t = Instant::now();
                let out = f(spec, seed).unwrap_or_else(|e| Outcome::new(false, vec![e.to_string()], Value::Null));
                Certificate {
                    name: spec.name.clone(),
                    params: spec.clone(),
                    passed: out.passed,
                    witnesses: out.witnesses,
                    details: out.details,
                    duration: t.elapsed(),
                }
            })
            .collect()
    });
    certs.sort_by_cached_key(|c| (c.name.clone(), serde_json::to_string(&c.params).unwrap_or_default()));
    Ok(certs)
}

fn first<T: std::fmt::Debug>(v: &[T]) -> Vec<String> {
    v.first().map(|x| format!("{x:?}")).into_iter().collect()
}

fn fvector(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let bound = spec.bound.unwrap_or(6);
    let (f2, f3) = (f_vector(2)?, f_vector(3)?);
    let mut witnesses = Vec::new();
    if f2 != [5, 5, 1] {
        witnesses.push(format!("F_2 = {f2:?}"));
    }
    if f3 != [12, 18, 8, 1] {
        witnesses.push(format!("F_3 = {f3:?}"));
    }
    let mut facets = Vec::new();
    for n in 1..=bound {
        let f = f_vector(n)?;
        let c = f[n - 1];
        facets.push(c);
        if c != 3 * n - 1 {
            witnesses.push(format!("F_{n} has {c} facets"));
        }
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"F_2": f2, "F_3": f3, "facets": facets})))
}

fn golden_diagonals() -> Result<BTreeMap<String, CellChain2>> {
    let v: BTreeMap<String, Vec<(String, String, i64)>> = serde_json::from_str(include_str!("../corpus/golden/diagonals.json"))?;
    v.into_iter()
        .map(|(k, terms)| {
            let mut chain = CellChain2::new();
            for (a, b, s) in terms {
                chain.insert((a.parse()?, b.parse()?), s);
            }
            Ok((k, chain))
        })
        .collect()
}

fn compare_diagonals(golden: BTreeMap<String, CellChain2>) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    let mut terms = BTreeMap::new();
    for (cell, want) in golden {
        let got = diagonal_f(&cell.parse::<Cell>()?);
        terms.insert(cell.clone(), got.len());
        for k in want.keys().chain(got.keys()) {
            if want.get(k) != got.get(k) {
                witnesses.push(format!("{cell}: {}⊗{} expected {:?}, got {:?}", k.0, k.1, want.get(k), got.get(k)));
                break;
            }
        }
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"terms": terms})))
}

fn diagonal_display(_: &CheckSpec, _: u64) -> Result<Outcome> {
    compare_diagonals(golden_diagonals()?)
}

fn diagonal_display_fault(_: &CheckSpec, _: u64) -> Result<Outcome> {
    let mut g = golden_diagonals()?;
    let chain = g.get_mut("0123]").expect("golden");
    let key = chain.keys().next().expect("nonempty").clone();
    *chain.get_mut(&key).expect("key") *= -1;
    compare_diagonals(g)
}

fn cell_complex_check(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let ring = spec.ring()?;
    let mut witnesses = Vec::new();
    for n in 0..=spec.bound.unwrap_or(5) {
        if let Err(w) = compose_is_zero(&cell_complex(n, 0, ring)?) {
            witnesses.push(format!("F_{n}: {w:?}"));
        }
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, Value::Null))
}

fn cell_complex_fault(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let mut c = cell_complex(2, 0, spec.ring()?)?;
    let mut d2 = c.d(2);
    let (&key, v) = d2.entries.iter().next().map(|(k, v)| (k, v.clone())).expect("nonzero");
    d2.entries.insert(key, -v);
    c.set_d(2, d2);
    Ok(match compose_is_zero(&c) {
        Ok(()) => Outcome::new(true, Vec::new(), Value::Null),
        Err(w) => Outcome::new(false, vec![format!("{w:?}")], Value::Null),
    })
}

fn diagonal_chain_map(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    for n in 1..=spec.bound.unwrap_or(5) {
        if let Some(c) = chain_map_failure(&FModel::new(n, 0)?, n) {
            witnesses.push(format!("F_{n}: {c:?}"));
        }
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, Value::Null))
}

fn coassociator_check(_: &CheckSpec, _: u64) -> Result<Outcome> {
    let a = coassociator(&"012]".parse()?);
    let witnesses = a.iter().take(3).map(|((x, y, z), v)| format!("{v:+}·{x}⊗{y}⊗{z}")).collect();
    Ok(Outcome::new(!a.is_empty(), witnesses, json!({"terms": a.len()})))
}

fn fnset_identities(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let bound = spec.bound.unwrap_or(6);
    let mut instances = 0;
    let mut witnesses = Vec::new();
    for total in 0..=bound {
        for m in 0..=total {
            let rep = verify_fnset(&FModel::new(m, total - m)?, total);
            instances += rep.instances;
            witnesses.extend(first(&rep.violations));
        }
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"instances": instances})))
}

fn fnset_fault(_: &CheckSpec, _: u64) -> Result<Outcome> {
    let rep = verify_fnset_with(&FModel::new(2, 1)?, 3, EtaRule::Printed);
    Ok(Outcome::new(rep.passed(), first(&rep.violations), json!({"violations": rep.violations.len()})))
}

fn spaces(spec: &CheckSpec, bound: usize) -> Vec<(SimplicialSet, usize)> {
    let b = spec.bound.unwrap_or(bound);
    corpus::product_spaces().into_iter().map(|x| (x, b)).collect()
}

fn lambda_identities(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    let mut instances = 0;
    for (x, b) in spaces(spec, 6) {
        let o = OmegaX::new(&x)?;
        let rep = verify_fnset(&lambda_set(&o), b);
        instances += rep.instances;
        witnesses.extend(first(&rep.violations).into_iter().map(|w| format!("{}: {w}", x.name)));
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"instances": instances})))
}

fn truncating(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    for (x, b) in spaces(spec, 6) {
        let rep = verify_truncating(&OmegaX::new(&x)?, b);
        witnesses.extend(first(&rep.violations).into_iter().map(|w| format!("{}: {w}", x.name)));
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, Value::Null))
}

fn truncating_fault(_: &CheckSpec, _: u64) -> Result<Outcome> {
    let x = corpus::space("two3")?;
    let o = OmegaX::new(&x)?;
    let gen = |n: &str| Simplex::generator(x.gens.iter().position(|g| g.name == n).expect("generator"));
    let (gx, gy) = (gen("x"), gen("y"));
    let tau = TwistingMap { source: &x, target: &o, map: Box::new(|s: &Simplex| if *s == gx { o.tau(&gy) } else { o.tau(s) }) };
    let rep = verify_truncating(&tau, 4);
    Ok(Outcome::new(rep.passed(), first(&rep.violations), Value::Null))
}

fn cartier_identification(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let ring = spec.ring()?;
    let cases = [("s2", spec.bound.unwrap_or(8)), ("two3", spec.bound.unwrap_or(6))];
    let mut witnesses = Vec::new();
    let mut compared = BTreeMap::new();
    for (name, b) in cases {
        let cert = identify_cartier(&corpus::space(name)?, ring, b)?;
        compared.insert(name, cert.entries_compared);
        if let Some(m) = &cert.mismatch {
            witnesses.push(format!("{name}: {}", m.to_json()));
        }
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"entries_compared": compared})))
}

fn baues_corpus() -> Result<Vec<(String, Cochains)>> {
    corpus::names()
        .into_iter()
        .map(|n| {
            let x = corpus::space(n)?;
            // the tuple sums, not only the cells, have to fit under the top degree
            let top = if n == "delta5" { 5 } else { 6 };
            Ok((n.to_string(), Cochains::new(x, Ring::Integers, top)))
        })
        .collect()
}

fn hga_identities(_: &CheckSpec, _: u64) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    let mut instances = 0;
    for (name, h) in baues_corpus()? {
        let k = if name == "delta5" { 2 } else { 3 };
        let rep = verify_hga(&h, k).merge(hirsch_check(&h));
        instances += rep.instances;
        witnesses.extend(first(&rep.violations).into_iter().map(|w| format!("{name}: {w}")));
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"instances": instances})))
}

fn hga_fault(_: &CheckSpec, _: u64) -> Result<Outcome> {
    let flip: SignRule = Arc::new(|t: &BauesTerm| if t.n == 4 && t.cuts == [3] { -baues_sign(t) } else { baues_sign(t) });
    let h = Cochains::with_sign(SimplicialSet::simplex_mod_edges(4), Ring::Integers, 4, flip);
    let rep = verify_hga(&h, 1);
    Ok(Outcome::new(rep.passed(), first(&rep.violations), Value::Null))
}

fn right_hirsch(_: &CheckSpec, _: u64) -> Result<Outcome> {
    let h = Cochains::new(corpus::space("delta5")?, Ring::Integers, 5);
    let w = right_hirsch_witness(&h);
    Ok(Outcome::new(w.is_some(), w.iter().map(|w| format!("{w:?}")).collect(), Value::Null))
}

fn product_algebras<T>(f: impl Fn(&str, &HochschildAlgebra<Cochains>) -> T) -> Result<Vec<T>> {
    corpus::product_spaces()
        .into_iter()
        .map(|x| {
            let name = x.name.clone();
            let c = Cochains::new(x.clone(), Ring::Integers, x.max_dim());
            let h = HochschildAlgebra::new(&c)?;
            Ok(f(&name, &h))
        })
        .collect()
}

fn lambda_chain_map(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let bound = spec.bound.unwrap_or(7);
    let mut witnesses = Vec::new();
    let mut checked = 0;
    for r in product_algebras(|n, h| (n.to_string(), h.check_lambda_chain_map(bound)))? {
        let rep = r.1?;
        checked += rep.checked;
        witnesses.extend(first(&rep.violations).into_iter().map(|w| format!("{}: {w}", r.0)));
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"pairs": checked})))
}

fn phi3(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let bound = spec.bound.unwrap_or(8);
    let mut reports = product_algebras(|n, h| (n.to_string(), h.check_phi3(bound)))?;
    let c = Cochains::new(corpus::space("delta5")?, Ring::Integers, 5);
    reports.push(("delta5".into(), HochschildAlgebra::new(&c)?.check_phi3(bound)));
    let mut witnesses = Vec::new();
    let mut checked = BTreeMap::new();
    for (n, rep) in reports {
        checked.insert(n.clone(), rep.checked);
        witnesses.extend(first(&rep.violations).into_iter().map(|w| format!("{n}: {w}")));
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"triples": checked})))
}

fn trivial(gens: &[(&str, usize)], ring: Ring, top: usize) -> Result<TrivialHga> {
    TrivialHga::new(ring, gens.iter().map(|(n, d)| (n.to_string(), *d)).collect(), top)
}

fn mu_associativity(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let bound = spec.bound.unwrap_or(8);
    let t = trivial(&[("x", 2), ("y", 3)], Ring::Integers, bound)?;
    let mut reps = vec![("S(x₂,y₃)".to_string(), HochschildAlgebra::new(&t)?.check_mu_associativity(4, bound))];
    reps.extend(product_algebras(|n, h| (n.to_string(), h.check_mu_associativity(4, 6)))?);
    let mut witnesses = Vec::new();
    let mut checked = BTreeMap::new();
    for (n, rep) in reps {
        checked.insert(n.clone(), rep.checked);
        witnesses.extend(first(&rep.violations).into_iter().map(|w| format!("{n}: {w}")));
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"triples": checked})))
}

/// Seeded spot check: random triples of Hochschild words on a trivial carrier
/// have zero associator.
fn random_associativity(spec: &CheckSpec, seed: u64) -> Result<Outcome> {
    let bound = spec.bound.unwrap_or(6);
    let t = trivial(&[("x", 2), ("y", 3)], spec.ring()?, bound)?;
    let h = HochschildAlgebra::new(&t)?;
    let words = h.words(bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witnesses = Vec::new();
    let samples = 200;
    for _ in 0..samples {
        let pick = |r: &mut ChaCha8Rng| &words[r.gen_range(0..words.len())];
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if !h.associator(x, y, z).is_empty() {
            witnesses.push(format!("({})({})({})", h.label(x), h.label(y), h.label(z)));
            break;
        }
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, json!({"samples": samples, "seed": seed})))
}

fn theorem1(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let g = |v: &[(&str, usize)]| v.iter().map(|(n, d)| (n.to_string(), *d)).collect::<Vec<_>>();
    let cases = [
        (g(&[("x", 2)]), Ring::Integers, 10),
        (g(&[("x", 2), ("y", 2)]), Ring::Integers, 8),
        (g(&[("x", 3)]), Ring::Mod(2), 9),
    ];
    let mut witnesses = Vec::new();
    let mut details = Vec::new();
    for (gens, ring, b) in cases {
        let r = theorem1_check(&gens, ring, spec.bound.unwrap_or(b))?;
        if !r.passed() {
            witnesses.push(format!("{gens:?} over {ring}: {:?}", r.mismatches.first()));
        }
        details.push(json!({"generators": gens, "ring": ring.to_string(), "bound": r.bound, "ranks": r.hh_ranks, "passed": r.passed()}));
    }
    Ok(Outcome::new(witnesses.is_empty(), witnesses, Value::Array(details)))
}

/// Parses an `example1` model name.
pub fn fibre_model(s: &str) -> Result<FibreModel> {
    match s {
        "printed" => Ok(FibreModel::Printed),
        "exterior-z" => Ok(FibreModel::ExteriorZ),
        _ => Err(Error::Invalid(format!("unknown model {s}; expected printed or exterior-z"))),
    }
}

fn example1_check(spec: &CheckSpec, _: u64) -> Result<Outcome> {
    let model = fibre_model(spec.variant.as_deref().unwrap_or("exterior-z"))?;
    let r = example1(spec.ring()?, spec.bound.unwrap_or(8), model)?;
    let mut witnesses = Vec::new();
    if !r.poincare_equal() {
        witnesses.push(format!("ranks {:?} differ from {:?}", r.ranks, r.reference_ranks));
    }
    if r.witness_degree().is_none() {
        witnesses.push("no non-isomorphism witness".into());
    }
    if !r.associated_graded_agrees() {
        witnesses.push("associated graded rings differ".into());
    }
    Ok(Outcome::new(r.passed(), witnesses, r.to_json()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_gives_no_certificates() {
        let certs = run_suite(&SuiteConfig::default(), 2).unwrap();
        assert!(certs.is_empty());
    }

    #[test]
    fn malformed_configs_are_rejected() {
        assert!(matches!(SuiteConfig::from_json(r#"{"checks": [{"name": "nope"}]}"#), Err(Error::Invalid(_))));
        assert!(matches!(SuiteConfig::from_json(r#"{"checks": [{"name": "fvector", "fault": true}]}"#), Err(Error::Invalid(_))));
        assert!(matches!(SuiteConfig::from_json(r#"{"checks": [{"name": "fvector", "colour": 1}]}"#), Err(Error::Parse(_))));
        assert!(matches!(SuiteConfig::from_json(r#"{"checks": [{"name": "fvector", "ring": "Q"}]}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn certificates_are_sorted_and_deterministic() {
        let cfg = SuiteConfig::from_json(r#"{"checks": [{"name": "fvector"}, {"name": "coassociator"}, {"name": "cell_complex", "bound": 3}]}"#).unwrap();
        let a = certificates_json(&run_suite(&cfg, 3).unwrap(), false);
        let b = certificates_json(&run_suite(&cfg, 1).unwrap(), false);
        assert_eq!(a.to_string(), b.to_string());
        let names: Vec<&str> = a["certificates"].as_array().unwrap().iter().map(|c| c["check"].as_str().unwrap()).collect();
        assert_eq!(names, ["cell_complex", "coassociator", "fvector"]);
        assert_eq!(a["passed"], true);
    }

    #[test]
    fn faults_fail_with_witnesses() {
        let certs = run_suite(&SuiteConfig::fault_suite(), 4).unwrap();
        assert_eq!(certs.len(), 5);
        for c in certs {
            assert!(!c.passed, "{}", c.name);
            assert!(!c.witnesses.is_empty(), "{}", c.name);
        }
    }
}
