use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use graph_census::census::{CensusOptions, Mode};
use graph_census::report::{run, Format, RunConfig};

/// Count graphs and self-complementary graphs by automorphism-group order.
#[derive(Debug, Parser)]
#[command(name = "graph-census", version)]
struct Args {
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// `graphs` or `sc` (self-complementary).
    #[arg(long, default_value = "graphs")]
    mode: Mode,
    /// `table`, `csv` or `json`.
    #[arg(long, default_value = "table")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Check the engine against the brute-force oracle.
    #[arg(long)]
    verify: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    workers: Option<usize>,
    /// Run orders above the default caps.
    #[arg(long)]
    allow_large: bool,
    /// Print one permutation's pair cycles, weights and terms, e.g. "(1 2 3 4)(5)".
    #[arg(long, value_name = "CYCLES")]
    debug_permutation: Option<String>,
    /// Write "L,coefficient" lines for every index.
    #[arg(long, value_name = "PATH")]
    dump_coefficients: Option<PathBuf>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = Args::parse();
    let config = RunConfig {
        n: args.n,
        mode: args.mode,
        format: args.format,
        verify: args.verify,
        workers: args.workers.unwrap_or_else(|| CensusOptions::default().workers),
        output_path: args.out.clone(),
        allow_large: args.allow_large,
        dump_coefficients: args.dump_coefficients,
        debug_permutation: args.debug_permutation,
        fault: None,
    };
    match run(&config) {
        Ok(outcome) => {
            if let Some(v) = &outcome.verification {
                eprintln!("{v}");
            }
            if args.out.is_none() || config.debug_permutation.is_some() {
                print!("{}", outcome.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("graph-census: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
