use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use lielab::checks::{is_lemma_id, run_check, CheckParams, LEMMA_IDS};
use lielab::report::{Status, VerificationReport};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "lielab",
    version,
    about = "Exact verification of rank-one Lie algebra lemmas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks by lemma id, or `all`.
    Verify {
        #[arg(required = true, value_name = "ID|all")]
        ids: Vec<String>,
        /// Upper end of the n (and rank-one k) range.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, env = "LIELAB_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include wall-clock seconds in JSON output.
        #[arg(long)]
        with_timing: bool,
    },
    /// Print the lemma ids in run order.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct RunDocument<'a> {
    max_n: usize,
    seed: u64,
    status: Status,
    reports: &'a [VerificationReport],
}

fn select(ids: &[String]) -> Result<Vec<&'static str>, String> {
    let mut wanted = BTreeSet::new();
    for id in ids {
        if id == "all" {
            wanted.extend(LEMMA_IDS);
        } else if is_lemma_id(id) {
            wanted.insert(LEMMA_IDS.iter().copied().find(|l| l == id).unwrap());
        } else {
            return Err(format!("unknown lemma id {id:?}; run `lielab list`"));
        }
    }
    Ok(LEMMA_IDS.iter().copied().filter(|l| wanted.contains(l)).collect())
}

fn overall(reports: &[VerificationReport]) -> Status {
    if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if reports.iter().any(|r| r.status == Status::Inconclusive) {
        Status::Inconclusive
    } else {
        Status::Pass
    }
}

fn render_params(r: &VerificationReport) -> String {
    r.params
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            v => format!("{k}={v}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn verify(ids: &[String], max_n: usize, seed: u64, format: Format, with_timing: bool) -> ExitCode {
    let selected = match select(ids) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let params = match CheckParams::new(max_n, seed) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    // par_iter keeps the input order in collect
    let mut reports: Vec<VerificationReport> = selected
        .par_iter()
        .map(|id| {
            let start = Instant::now();
            let mut r = run_check(id, &params).expect("selected ids are known");
            r.timing_seconds = Some(start.elapsed().as_secs_f64());
            r
        })
        .collect();
    let status = overall(&reports);
    match format {
        Format::Text => {
            for r in &reports {
                println!(
                    "{} [{}] {} ({:.2}s)",
                    r.lemma_id,
                    render_params(r),
                    r.status.label(),
                    r.timing_seconds.unwrap_or_default()
                );
                for c in &r.counterexamples {
                    println!("  counterexample: {c}");
                }
                for n in &r.notes {
                    println!("  note: {n}");
                }
            }
        }
        Format::Json => {
            if !with_timing {
                for r in &mut reports {
                    r.timing_seconds = None;
                }
            }
            let doc = RunDocument {
                max_n,
                seed,
                status,
                reports: &reports,
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("reports serialize"));
        }
    }
    match status {
        Status::Pass => ExitCode::SUCCESS,
        _ => ExitCode::from(EXIT_FAIL),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            ids,
            max_n,
            seed,
            format,
            with_timing,
        } => verify(&ids, max_n, seed, format, with_timing),
        Command::List => {
            for id in LEMMA_IDS {
                println!("{id}");
            }
            ExitCode::SUCCESS
        }
    }
}
