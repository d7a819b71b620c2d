//! Command-line driver: run named reproduction scenarios in a work pool and
//! print a PASS/FAIL report.
//!
//! Exit codes: 0 when every selected scenario passes, 1 when at least one
//! fails, 2 for configuration or resource errors (unknown scenario names,
//! unreadable config, breached limits).

use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde_json::Value;

use reflinv::report;
use reflinv::scenarios::{self, ScenarioDef, ScenarioOptions, ScenarioRecord};
use reflinv::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Md,
}

/// Reproduce invariant-ring computations for reflection groups over
/// cyclotomic integers and certify each ring as polynomial, polynomial
/// after localizing, or neither.
#[derive(Parser, Debug)]
#[command(name = "reflinv", version)]
struct Cli {
    /// Scenario name to run; repeat the flag to run several.
    #[arg(long = "scenario", value_name = "NAME")]
    scenario: Vec<String>,

    /// Run every registered scenario.
    #[arg(long)]
    all: bool,

    /// Report format (default json).
    #[arg(long, value_enum, value_name = "json|md")]
    format: Option<Format>,

    /// Cap on group closures (default 4000).
    #[arg(long, value_name = "INT")]
    max_order: Option<usize>,

    /// Cap on the degree of any polynomial handed to the ring test
    /// (default 64).
    #[arg(long, value_name = "INT")]
    max_degree: Option<u32>,

    /// Cap on rational primes allowed in verdicts (default 100).
    #[arg(long, value_name = "INT")]
    prime_bound: Option<u64>,

    /// Worker threads in the scenario pool (default: rayon's choice).
    #[arg(long, value_name = "INT")]
    jobs: Option<usize>,

    /// JSON config file with the same keys as the long flags
    /// (scenario, all, format, max_order, max_degree, prime_bound, jobs);
    /// explicit flags win over the file.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Default)]
struct FileConfig {
    scenario: Vec<String>,
    all: bool,
    format: Option<Format>,
    max_order: Option<usize>,
    max_degree: Option<u32>,
    prime_bound: Option<u64>,
    jobs: Option<usize>,
}

fn bad_key(key: &str, want: &str) -> Error {
    Error::Config(format!("config key \"{key}\" must be {want}"))
}

fn read_config(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)?;
    let value: Value = serde_json::from_str(&text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Config("config file must hold a JSON object".into()))?;
    let mut cfg = FileConfig::default();
    for (key, v) in obj {
        match key.as_str() {
            "scenario" => {
                let arr = v.as_array().ok_or_else(|| bad_key(key, "an array of names"))?;
                for n in arr {
                    cfg.scenario.push(
                        n.as_str()
                            .ok_or_else(|| bad_key(key, "an array of names"))?
                            .to_string(),
                    );
                }
            }
            "all" => cfg.all = v.as_bool().ok_or_else(|| bad_key(key, "a boolean"))?,
            "format" => {
                cfg.format = Some(match v.as_str() {
                    Some("json") => Format::Json,
                    Some("md") => Format::Md,
                    _ => return Err(bad_key(key, "\"json\" or \"md\"")),
                })
            }
            "max_order" => {
                cfg.max_order =
                    Some(v.as_u64().ok_or_else(|| bad_key(key, "an integer"))? as usize)
            }
            "max_degree" => {
                cfg.max_degree =
                    Some(v.as_u64().ok_or_else(|| bad_key(key, "an integer"))? as u32)
            }
            "prime_bound" => {
                cfg.prime_bound = Some(v.as_u64().ok_or_else(|| bad_key(key, "an integer"))?)
            }
            "jobs" => {
                cfg.jobs = Some(v.as_u64().ok_or_else(|| bad_key(key, "an integer"))? as usize)
            }
            other => {
                return Err(Error::Config(format!("unknown config key \"{other}\"")));
            }
        }
    }
    Ok(cfg)
}

fn select(names: &[String], all: bool) -> Result<Vec<&'static ScenarioDef>> {
    if all {
        return Ok(scenarios::all().iter().collect());
    }
    if names.is_empty() {
        return Err(Error::Config(
            "nothing selected; pass --all or --scenario NAME".into(),
        ));
    }
    let mut defs: Vec<&'static ScenarioDef> = Vec::new();
    for n in names {
        let def = scenarios::find(n)?;
        if !defs.iter().any(|d| d.name == def.name) {
            defs.push(def);
        }
    }
    Ok(defs)
}

fn run(cli: Cli) -> Result<i32> {
    let file = match &cli.config {
        Some(p) => read_config(p)?,
        None => FileConfig::default(),
    };
    let defaults = ScenarioOptions::default();
    let opts = ScenarioOptions {
        max_order: cli.max_order.or(file.max_order).unwrap_or(defaults.max_order),
        max_degree: cli
            .max_degree
            .or(file.max_degree)
            .unwrap_or(defaults.max_degree),
        prime_bound: cli
            .prime_bound
            .or(file.prime_bound)
            .unwrap_or(defaults.prime_bound),
    };
    let format = cli.format.or(file.format).unwrap_or(Format::Json);
    let jobs = cli.jobs.or(file.jobs);
    let names = if cli.scenario.is_empty() {
        file.scenario
    } else {
        cli.scenario
    };
    let defs = select(&names, cli.all || file.all)?;

    let execute_all = || -> Result<Vec<ScenarioRecord>> {
        defs.par_iter()
            .map(|d| scenarios::execute(d, &opts))
            .collect()
    };
    let records = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Config(format!("cannot build a {j}-thread pool: {e}")))?
            .install(execute_all),
        None => execute_all(),
    }?;

    match format {
        Format::Json => println!("{}", report::render_json(&records)),
        Format::Md => print!("{}", report::render_markdown(&records)),
    }
    Ok(if records.iter().all(|r| r.passed) { 0 } else { 1 })
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}
