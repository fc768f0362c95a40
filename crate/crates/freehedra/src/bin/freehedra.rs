//! Command-line front end. Exit codes: 0 pass, 1 check failure, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use freehedra::cell::{diagonal_f, f_vector, Cell};
use freehedra::chain::Ring;
use freehedra::corpus;
use freehedra::figures::freehedron_figure;
use freehedra::hga::{Cochains, TrivialHga};
use freehedra::hochschild_ring::{example1, parse_generators, theorem1_check, HochschildAlgebra};
use freehedra::loop_model::identify_cartier;
use freehedra::suite::{certificates_json, fibre_model, run_suite, CheckSpec, SuiteConfig, DEFAULT_SEED};
use freehedra::{Error, Result};

#[derive(Parser)]
#[command(name = "freehedra", version, about = "Freehedra, loop space models and Hochschild products over exact integers")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Coefficient ring: Z or Z/p.
    #[arg(long, global = true)]
    ring: Option<Ring>,
    /// Degree or dimension bound.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 4)]
    workers: usize,
    /// Write the JSON result to this file (`-` for stdout).
    #[arg(long, global = true)]
    json: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// f-vectors of F_n and their facet counts.
    Fvector,
    /// The diagonal Δ_F of a cell.
    Diagonal {
        #[arg(long, default_value = "012]")]
        cell: String,
    },
    /// Run the verification suite.
    Verify {
        /// Suite configuration file; defaults to every registered check.
        #[arg(long)]
        config: Option<String>,
        /// Run only these checks.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Run the fault-injected variants.
        #[arg(long)]
        fault: bool,
        /// Include wall-clock durations in the JSON.
        #[arg(long)]
        timings: bool,
        /// List the registered checks.
        #[arg(long)]
        list: bool,
    },
    /// SVG drawing of F_n for n ≤ 3.
    Svg {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<String>,
    },
    /// Simplicial loop space models.
    Loopmodel {
        #[command(subcommand)]
        command: LoopCommand,
    },
    /// Hochschild homology rings of homotopy G-algebras.
    Hochschild {
        #[command(subcommand)]
        command: HochschildCommand,
    },
}

#[derive(Subcommand)]
enum LoopCommand {
    /// Certify that normalized chains of ΛX equal the Cartier complex.
    Identify {
        /// Bundled space, simplex:n, or a JSON file.
        #[arg(long, default_value = "s2")]
        space: String,
    },
}

#[derive(Subcommand)]
enum HochschildCommand {
    /// HH_* ring with products from λ_E.
    Ring {
        /// Generators of a free graded commutative algebra, e.g. "x:2,y:2".
        #[arg(long, conflicts_with_all = ["space", "algebra"])]
        gens: Option<String>,
        /// Cochains of a bundled space with Baues operations.
        #[arg(long, conflicts_with = "algebra")]
        space: Option<String>,
        /// Algebra file {"generators": "x:2,y:2"}; needs --trivial-hga.
        #[arg(long)]
        algebra: Option<String>,
        /// Use the trivial hga structure on the algebra.
        #[arg(long)]
        trivial_hga: bool,
    },
    /// HH of the trivial hga on S(U) against S(U)⊗Λ(s⁻¹U).
    Theorem1 {
        #[arg(long, default_value = "x:2")]
        gens: String,
    },
    /// The closing example: additive but not multiplicative agreement.
    Example1 {
        /// printed or exterior-z.
        #[arg(long, default_value = "exterior-z")]
        model: String,
    },
}

struct Output {
    text: String,
    json: Value,
    passed: bool,
}

fn emit(g: &Global, out: Output) -> Result<ExitCode> {
    match g.json.as_deref() {
        Some("-") => println!("{}", serde_json::to_string_pretty(&out.json)?),
        Some(path) => {
            std::fs::write(path, serde_json::to_string_pretty(&out.json)? + "\n")?;
            print!("{}", out.text);
        }
        None => print!("{}", out.text),
    }
    Ok(if out.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn fvector(g: &Global) -> Result<Output> {
    let bound = g.bound.unwrap_or(6);
    let mut text = String::new();
    let mut rows = Vec::new();
    for n in 0..=bound {
        let f = f_vector(n)?;
        text += &format!("F_{n}: {f:?}\n");
        rows.push(json!({"n": n, "f_vector": f}));
    }
    Ok(Output { text, json: Value::Array(rows), passed: true })
}

fn diagonal(cell: &str) -> Result<Output> {
    let c: Cell = cell.parse()?;
    let d = diagonal_f(&c);
    let terms: Vec<Value> = d.iter().map(|((a, b), v)| json!([a.to_string(), b.to_string(), v])).collect();
    let text = d.iter().map(|((a, b), v)| format!("{v:+} {a} ⊗ {b}\n")).collect();
    Ok(Output { text, json: json!({"cell": cell, "terms": terms}), passed: true })
}

fn verify(g: &Global, config: Option<String>, checks: Vec<String>, fault: bool, timings: bool) -> Result<Output> {
    let mut cfg = match config {
        Some(path) => SuiteConfig::from_json(&std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{path}: {e}")))?)?,
        None if fault => SuiteConfig::fault_suite(),
        None => SuiteConfig::default_suite(),
    };
    if !checks.is_empty() {
        cfg.checks = checks.iter().map(|n| CheckSpec { fault, ..CheckSpec::named(n) }).collect();
    }
    for c in &mut cfg.checks {
        c.bound = c.bound.or(g.bound);
        c.ring = c.ring.clone().or(g.ring.map(|r| r.to_string()));
    }
    cfg.seed = cfg.seed.or(Some(g.seed));
    let certs = run_suite(&cfg, g.workers)?;
    let mut text = String::new();
    for c in &certs {
        let verdict = if c.passed { "pass" } else { "FAIL" };
        text += &format!("{verdict}  {:<24} {:>9.1} ms\n", c.name, c.duration.as_secs_f64() * 1e3);
        for w in c.witnesses.iter().filter(|_| !c.passed) {
            text += &format!("      {w}\n");
        }
    }
    let j = certificates_json(&certs, timings);
    let passed = j["passed"] == true;
    Ok(Output { text, json: j, passed })
}

fn svg(n: usize, out: Option<String>) -> Result<Output> {
    let f = freehedron_figure(n)?;
    let summary = json!({"n": n, "vertices": f.vertices, "edges": f.edges, "facets": f.facets});
    let text = match out {
        Some(path) => {
            std::fs::write(&path, &f.svg)?;
            format!("F_{n}: {} vertices, {} edges -> {path}\n", f.vertices, f.edges)
        }
        None => f.svg,
    };
    Ok(Output { text, json: summary, passed: true })
}

fn identify(g: &Global, space: &str) -> Result<Output> {
    let x = corpus::space(space)?;
    let cert = identify_cartier(&x, g.ring.unwrap_or(Ring::Integers), g.bound.unwrap_or(6))?;
    let text = format!(
        "{}: {} cells matched, {} entries compared, {}\n",
        cert.space,
        cert.bijection.len(),
        cert.entries_compared,
        if cert.passed() { "identical" } else { "MISMATCH" }
    );
    Ok(Output { text, passed: cert.passed(), json: cert.to_json() })
}

fn hh_ring(g: &Global, gens: Option<String>, space: Option<String>, algebra: Option<String>, trivial_hga: bool) -> Result<Output> {
    let ring = g.ring.unwrap_or(Ring::Integers);
    let bound = g.bound.unwrap_or(6);
    let gens = match (gens, algebra) {
        (Some(s), _) => Some(s),
        (None, Some(path)) => {
            if !trivial_hga {
                return Err(Error::Invalid("an algebra file carries no hga operations; pass --trivial-hga".into()));
            }
            let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{path}: {e}")))?)?;
            Some(v["generators"].as_str().ok_or_else(|| Error::Parse("algebra file needs a \"generators\" string".into()))?.to_string())
        }
        (None, None) => None,
    };
    let p = match (gens, space) {
        (Some(s), _) => {
            let t = TrivialHga::new(ring, parse_generators(&s)?, bound + 1)?;
            HochschildAlgebra::new(&t)?.hh_ring(bound, false)?.presentation()
        }
        (None, Some(name)) => {
            let x = corpus::space(&name)?;
            let c = Cochains::new(x.clone(), ring, x.max_dim());
            HochschildAlgebra::new(&c)?.hh_ring(bound, false)?.presentation()
        }
        (None, None) => return Err(Error::Invalid("give --gens, --space or --algebra".into())),
    };
    let text = format!("ranks {:?}\ngenerators in degrees {:?}\n", p.ranks(), p.generators.iter().map(|&i| p.classes[i].degree).collect::<Vec<_>>());
    Ok(Output { text, json: p.to_json(), passed: true })
}

fn theorem1(g: &Global, gens: &str) -> Result<Output> {
    let r = theorem1_check(&parse_generators(gens)?, g.ring.unwrap_or(Ring::Integers), g.bound.unwrap_or(8))?;
    let text = format!("HH ranks {:?}\nreference {:?}\n{}\n", r.hh_ranks, r.reference_ranks, if r.passed() { "pass" } else { "FAIL" });
    Ok(Output { text, passed: r.passed(), json: r.to_json() })
}

fn closing_example(g: &Global, model: &str) -> Result<Output> {
    let r = example1(g.ring.unwrap_or(Ring::Integers), g.bound.unwrap_or(8), fibre_model(model)?)?;
    let text = format!(
        "H(C) ranks {:?}\nreference  {:?}\nring maps respecting products: {} of {} (over Z/{})\nwitness degree {:?}\n{}\n",
        r.ranks,
        r.reference_ranks,
        r.maps_respecting,
        r.maps_checked,
        r.search_prime,
        r.witness_degree(),
        if r.passed() { "pass" } else { "FAIL" }
    );
    Ok(Output { text, passed: r.passed(), json: r.to_json() })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let g = &cli.global;
    let out = match cli.command {
        Command::Fvector => fvector(g)?,
        Command::Diagonal { cell } => diagonal(&cell)?,
        Command::Verify { list: true, .. } => {
            let names = freehedra::suite::check_names();
            Output { text: names.iter().map(|n| format!("{n}\n")).collect(), json: json!(names), passed: true }
        }
        Command::Verify { config, checks, fault, timings, .. } => verify(g, config, checks, fault, timings)?,
        Command::Svg { n, out } => svg(n, out)?,
        Command::Loopmodel { command: LoopCommand::Identify { space } } => identify(g, &space)?,
        Command::Hochschild { command } => match command {
            HochschildCommand::Ring { gens, space, algebra, trivial_hga } => hh_ring(g, gens, space, algebra, trivial_hga)?,
            HochschildCommand::Theorem1 { gens } => theorem1(g, &gens)?,
            HochschildCommand::Example1 { model } => closing_example(g, &model)?,
        },
    };
    emit(g, out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
