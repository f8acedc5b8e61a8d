use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use symbreak::automorphism::{generators_capped, group_order_capped, orbits_capped};
use symbreak::bounds::full_report;
use symbreak::distinguishing::{
    distinguishing_index_capped, distinguishing_number_capped, is_distinguishing_capped,
    is_distinguishing_edges_capped, DistinguishingIndex,
};
use symbreak::io::write_graph6;
use symbreak::join_partition::certificate;
use symbreak::Caps;

mod failure;
mod input;
mod manifest;
mod table;
mod verify;

use failure::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "symbreak", version, about = "Distinguishing numbers and indices of graphs and their joins")]
struct Cli {
    /// Largest order accepted by automorphism enumeration.
    #[arg(long, global = true, default_value_t = 16)]
    aut_cap: usize,
    /// Largest order accepted by the labeling solvers.
    #[arg(long, global = true, default_value_t = 16)]
    label_cap: usize,
    /// Seconds per exact call; 0 disables the limit.
    #[arg(long, global = true, default_value_t = 60.0)]
    time_budget: f64,
    /// Include wall-clock times in the output (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generated graph in graph6.
    Gen {
        /// Family name, or a full spec such as `friendship:3`.
        family: String,
        /// Family parameters; graph specs for `join` and `cartesian`.
        params: Vec<String>,
    },
    /// Exact distinguishing number, index, or automorphism group.
    Compute {
        #[arg(long, value_enum)]
        what: What,
        /// graph6 string, @file, or family spec.
        graph: String,
    },
    /// Closure partition, Γ classes and constructed labelings of G₁ + G₂.
    Partition { g1: String, g2: String },
    /// Every bound check on G₁ + G₂.
    Bounds {
        g1: String,
        g2: String,
        /// Run the exact solvers even on joins above 10 vertices.
        #[arg(long)]
        exact: bool,
    },
    /// Sweep one statement over a parameter range.
    Verify {
        #[arg(long)]
        theorem: String,
        /// e.g. `n=2..5,k=2` or `corpus<=5`.
        #[arg(long)]
        range: Option<String>,
        /// Write the run manifest here instead of standard output.
        #[arg(long)]
        manifest: Option<std::path::PathBuf>,
    },
    /// CSV over all pairs of connected graphs up to an order.
    Corpus {
        #[arg(long)]
        max_order: usize,
        /// graph6 list (one per line) used instead of internal generation.
        #[arg(long)]
        input: Option<std::path::PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum What {
    Number,
    Index,
    Aut,
}

impl Cli {
    fn caps(&self) -> CliResult<Caps> {
        if !(self.time_budget >= 0.0 && self.time_budget.is_finite()) {
            return Err(CliError::Input("--time-budget must be a nonnegative number".into()));
        }
        Ok(Caps {
            aut_order: self.aut_cap,
            label_order: self.label_cap,
            time_budget: (self.time_budget > 0.0).then(|| Duration::from_secs_f64(self.time_budget)),
            ..Caps::default()
        })
    }
}

fn print_json(value: &impl serde::Serialize) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        // a closed reader such as `head` is not an error
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn compute(what: What, graph: &str, caps: &Caps, timings: bool) -> CliResult<()> {
    let g = input::resolve(graph)?;
    let start = Instant::now();
    let mut out = match what {
        What::Number => {
            let r = distinguishing_number_capped(&g, caps)?;
            if !is_distinguishing_capped(&g, &r.witness, caps)? {
                return Err(CliError::Violation("witness failed verification".into()));
            }
            json!({ "what": "number", "value": r.value, "witness": r.witness })
        }
        What::Index => match distinguishing_index_capped(&g, caps)? {
            DistinguishingIndex::Value { value, witness } => {
                if g.size() > 0 && !is_distinguishing_edges_capped(&g, &witness, caps)? {
                    return Err(CliError::Violation("witness failed verification".into()));
                }
                json!({ "what": "index", "status": "value", "value": value, "witness": witness })
            }
            DistinguishingIndex::NotDefined => {
                json!({ "what": "index", "status": "not_defined", "value": null })
            }
        },
        What::Aut => {
            let gens = generators_capped(&g, caps)?;
            let orbits: Vec<Vec<usize>> = orbits_capped(&g, caps)?
                .iter()
                .map(|o| o.to_vec())
                .collect();
            let order = group_order_capped(&g, caps)?;
            // orders beyond u64 are emitted as decimal strings
            let value = u64::try_from(order).map_or_else(|_| json!(order.to_string()), |o| json!(o));
            json!({
                "what": "aut",
                "value": value,
                "generators": gens,
                "orbits": orbits,
            })
        }
    };
    out["graph"] = json!(write_graph6(&g));
    if timings {
        out["runtime_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    }
    print_json(&out)
}

fn run(cli: &Cli) -> CliResult<()> {
    let caps = cli.caps()?;
    match &cli.command {
        Command::Gen { family, params } => {
            let g = input::generate(family, params)?;
            println!("{}", write_graph6(&g));
            Ok(())
        }
        Command::Compute { what, graph } => compute(*what, graph, &caps, cli.timings),
        Command::Partition { g1, g2 } => {
            let (g1, g2) = (input::resolve(g1)?, input::resolve(g2)?);
            print_json(&certificate(&g1, &g2, &caps)?)
        }
        Command::Bounds { g1, g2, exact } => {
            let (g1, g2) = (input::resolve(g1)?, input::resolve(g2)?);
            let report = full_report(&g1, &g2, &caps, *exact)?;
            print_json(&report)?;
            let violations = report.violations();
            if violations.is_empty() {
                Ok(())
            } else {
                let names: Vec<&str> = violations.iter().map(|e| e.theorem).collect();
                Err(CliError::Violation(format!("violated: {}", names.join(", "))))
            }
        }
        Command::Verify {
            theorem,
            range,
            manifest,
        } => verify::run(theorem, range.as_deref(), manifest.as_deref(), &caps, cli.timings),
        Command::Corpus { max_order, input } => {
            table::run(*max_order, input.as_deref(), &caps, std::io::stdout().lock())
        }
    }
}

fn configure_threads() -> CliResult<()> {
    if let Ok(v) = std::env::var("SYMBREAK_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| CliError::Input(format!("SYMBREAK_THREADS={v:?} is not a number")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Input(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
