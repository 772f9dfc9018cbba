//! The `sp6orbits` command line tool.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::api::{self, AnyField};
use crate::error::{Error, Result};
use crate::orbits::{CensusScope, GroupMode, ReduceConfig};

#[derive(Parser, Debug)]
#[command(name = "sp6orbits", version, about = "Orbits of Sp6 on the 14-dimensional representation")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Ground field: Q or F:p.
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Group: sp6, sp6gl1 or gsp6gl1.
    #[arg(long, global = true, default_value = "sp6")]
    pub mode: String,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for the census.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Pivot words tried before reduction gives up.
    #[arg(long, global = true, default_value_t = 512)]
    pub pivot_budget: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply a group element or generator word to a point.
    Act { input: String },
    /// J, grad J, covariant rank and stratum at a point.
    J { input: String },
    /// Reduce a point to (1, y0, 0, diag).
    Reduce { input: String },
    /// Orbit invariant of a point.
    Classify { input: String },
    /// Stratum and fiber counts over F_p.
    Census {
        #[arg(long, default_value_t = 3)]
        p: u64,
        /// Enumerate every vector (p = 3 only).
        #[arg(long, conflicts_with = "samples")]
        full: bool,
        /// Number of random vectors.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Norm form of a composition algebra: k, cd:a,b,c or zorn.
    Algebra { spec: String },
    /// Trace form of H3(C, Γ) against its closed form.
    Freudenthal {
        #[arg(long = "c", default_value = "k")]
        c: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,1,1")]
        gamma: Vec<String>,
    },
    /// Invariants, isotropy and isometry of quadratic forms.
    Form { input: String },
}

fn read_input(path: &str) -> Result<Value> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Parse(e.to_string()))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    }
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn execute(cli: &Cli) -> Result<(String, Value)> {
    let g = &cli.global;
    let field: AnyField = g.field.parse()?;
    let mode: GroupMode = g.mode.parse()?;
    let cfg = ReduceConfig { pivot_budget: g.pivot_budget, seed: g.seed };
    Ok(match &cli.command {
        Command::Act { input } => ("act".into(), api::act_report(&field, &read_input(input)?)?),
        Command::J { input } => ("j".into(), api::j_report(&field, &read_input(input)?)?),
        Command::Reduce { input } => ("reduce".into(), api::reduce_report(&field, &read_input(input)?, &cfg)?),
        Command::Classify { input } => {
            ("classify".into(), api::classify_report(&field, &read_input(input)?, mode, &cfg)?)
        }
        Command::Census { p, full, samples } => {
            let scope = if *full { CensusScope::Full } else { CensusScope::Sample { n: *samples, seed: g.seed } };
            ("census".into(), api::census_report(*p, scope, g.jobs, g.seed)?)
        }
        Command::Algebra { spec } => ("algebra".into(), api::algebra_report(&field, spec)?),
        Command::Freudenthal { c, gamma } => ("freudenthal".into(), api::freudenthal_report(&field, c, gamma)?),
        Command::Form { input } => ("form".into(), api::form_report(&field, &read_input(input)?)?),
    })
}

fn config_echo(g: &Global) -> Value {
    json!({
        "field": g.field,
        "mode": g.mode,
        "seed": g.seed,
        "jobs": g.jobs,
        "pivot_budget": g.pivot_budget,
    })
}

/// Runs the tool on already-parsed arguments; returns the exit status.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(cli) {
        Ok((name, result)) => {
            let report = api::envelope(&name, config_echo(&cli.global), result);
            let text = serde_json::to_string_pretty(&report).expect("serializable report") + "\n";
            let written = match &cli.global.output {
                Some(p) => std::fs::write(p, &text).map_err(|e| e.to_string()),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "{e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", serde_json::to_string_pretty(&api::error_json(&e)).unwrap());
            api::exit_code(&e)
        }
    }
}

pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
