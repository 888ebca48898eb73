//! Command dispatch for the `bouquet-kit` binary. Each subcommand maps onto
//! one library call; this module only parses, times and renders.
//!
//! Exit codes: 0 success, 1 error (including usage errors and a failed
//! identity in `verify`), 2 size guard.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{check_pd_bound, projective_dimension, Field};
use crate::bouquets::{construct_bouquets_from_cover, d_prime_bruteforce, verify_duality, DualityMode};
use crate::covers::{alpha0_prime, enumerate_minimal_covers};
use crate::error::Result;
use crate::generate::{generate_random_hypergraph, parse_arity};
use crate::hypergraph::{BuildMode, Hypergraph};
use crate::io::{parse_hypergraph_file, parse_label_list};
use crate::limits::Limits;
use crate::report::{self, AnalysisReport, Payload, Status, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "bouquet-kit", version, about = "Minimal vertex covers, bouquets and projective dimension of simple hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Hypergraph file (text or JSON); `-` reads standard input.
    file: PathBuf,
    #[arg(long)]
    json: bool,
    /// Drop edges containing other edges instead of rejecting the input.
    #[arg(long)]
    minimalize: bool,
    #[arg(long)]
    cap_vertices: Option<usize>,
    #[arg(long)]
    cap_covers: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a hypergraph.
    Check(Input),
    /// List all minimal vertex covers.
    Covers(Input),
    /// Largest minimal vertex cover.
    Alpha(Input),
    /// Semi-strongly disjoint bouquets whose flowers are a given minimal cover.
    Bouquets {
        #[command(flatten)]
        input: Input,
        /// Comma-separated labels; defaults to a maximum minimal cover.
        #[arg(long)]
        from_cover: Option<String>,
    },
    /// Exhaustive search for d'.
    Dprime(Input),
    /// Projective dimension via multigraded Betti numbers.
    Pd {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// Check alpha0' = d', and pd >= d' with --pd.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Compute d' by exhaustive search instead of construction.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        pd: bool,
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// Print a seeded random hypergraph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "2..2")]
        arity: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Covers(_) => "covers",
            Command::Alpha(_) => "alpha",
            Command::Bouquets { .. } => "bouquets",
            Command::Dprime(_) => "dprime",
            Command::Pd { .. } => "pd",
            Command::Verify { .. } => "verify",
            Command::Gen { .. } => "gen",
        }
    }

    fn input(&self) -> Option<&Input> {
        match self {
            Command::Check(i) | Command::Covers(i) | Command::Alpha(i) | Command::Dprime(i) => Some(i),
            Command::Bouquets { input, .. } | Command::Pd { input, .. } | Command::Verify { input, .. } => Some(input),
            Command::Gen { .. } => None,
        }
    }

    fn json(&self) -> bool {
        match self {
            Command::Gen { json, .. } => *json,
            other => other.input().is_some_and(|i| i.json),
        }
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
    pub report: Option<AnalysisReport>,
}

pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { stdout: text, stderr: String::new(), exit_code: 0, report: None }
                }
                _ => Outcome { stdout: String::new(), stderr: text, exit_code: 1, report: None },
            };
        }
    };

    let command = cli.command;
    let mut timings = BTreeMap::new();
    let mut digest = None;
    let result = execute(&command, &mut timings, &mut digest);

    let mut stderr = String::new();
    let (status, results, exit_code) = match result {
        Ok(payload) => {
            let failed = matches!(payload, Payload::Verify { all_hold: false, .. });
            if failed {
                stderr.push_str("error: an asserted identity does not hold\n");
            }
            (Status::Ok, Some(payload), if failed { 1 } else { 0 })
        }
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            if e.is_size_guard() {
                (Status::SizeGuard, None, 2)
            } else {
                (Status::Error(e.to_string()), None, 1)
            }
        }
    };
    let report = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        command: command.name().to_owned(),
        input_digest: digest,
        status,
        results,
        timings,
    };

    let stdout = if command.json() {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        match (&report.status, &report.results) {
            (Status::Ok, Some(p)) => p.to_text(),
            _ => String::new(),
        }
    };
    Outcome { stdout, stderr, exit_code, report: Some(report) }
}

fn timed<T>(timings: &mut BTreeMap<String, f64>, phase: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.insert(phase.to_owned(), start.elapsed().as_secs_f64());
    out
}

fn limits_for(input: &Input) -> Result<Limits> {
    let mut limits = Limits::from_env()?;
    if let Some(v) = input.cap_vertices {
        limits.vertices = v;
    }
    if let Some(c) = input.cap_covers {
        limits.covers = c;
    }
    Ok(limits)
}

fn load(input: &Input, timings: &mut BTreeMap<String, f64>, digest: &mut Option<String>) -> Result<Hypergraph> {
    let mode = if input.minimalize { BuildMode::Minimalize } else { BuildMode::Strict };
    let h = timed(timings, "parse", || parse_hypergraph_file(&input.file, mode))?;
    *digest = Some(report::input_digest(&h));
    Ok(h)
}

fn execute(
    command: &Command,
    timings: &mut BTreeMap<String, f64>,
    digest: &mut Option<String>,
) -> Result<Payload> {
    if let Command::Gen { n, m, arity, seed, .. } = command {
        let (lo, hi) = parse_arity(arity)?;
        let h = timed(timings, "generate", || generate_random_hypergraph(*n, *m, lo, hi, *seed))?;
        *digest = Some(report::input_digest(&h));
        return Ok(Payload::Gen { n: *n, m: *m, arity: (lo, hi), seed: *seed, edges: h.raw_edges() });
    }
    let input = command.input().expect("every other command reads a file");
    let limits = limits_for(input)?;
    let h = load(input, timings, digest)?;

    timed(timings, "compute", || match command {
        Command::Check(_) => Ok(Payload::Check { vertices: h.labels().to_vec(), edges: h.raw_edges() }),
        Command::Covers(_) => {
            let covers = enumerate_minimal_covers(&h, &limits)?;
            Ok(Payload::Covers {
                count: covers.len(),
                covers: covers.iter().map(|c| report::labels(&h, &c.cover)).collect(),
            })
        }
        Command::Alpha(_) => {
            let (alpha, w) = alpha0_prime(&h, &limits)?;
            Ok(Payload::Alpha { alpha, witness: report::labels(&h, &w.cover) })
        }
        Command::Bouquets { from_cover, .. } => {
            let cover = match from_cover {
                Some(list) => h.vertex_set(parse_label_list(list))?,
                None => alpha0_prime(&h, &limits)?.1.set(),
            };
            let set = construct_bouquets_from_cover(&h, &cover)?;
            Ok(Payload::Bouquets { cover: h.labels_of(&cover), bouquets: report::labeled_bouquets(&h, &set) })
        }
        Command::Dprime(_) => {
            let (d_prime, w) = d_prime_bruteforce(&h, &limits)?;
            Ok(Payload::Dprime { d_prime, witness: report::labeled_bouquets(&h, &w) })
        }
        Command::Pd { field, .. } => {
            let table = projective_dimension(&h, *field, &limits)?;
            Ok(Payload::Pd(report::pd_summary(&h, &table)))
        }
        Command::Verify { exact, pd, field, .. } => {
            let mode = if *exact { DualityMode::Exact } else { DualityMode::Constructive };
            let duality = verify_duality(&h, mode, &limits)?;
            let bound = if *pd { Some(check_pd_bound(&h, *field, &limits)?) } else { None };
            Ok(report::verify_payload(&h, &duality, *exact, bound))
        }
        Command::Gen { .. } => unreachable!("handled above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_one() {
        let out = run_command(["bouquet-kit", "frobnicate"]);
        assert_eq!(out.exit_code, 1);
        assert!(out.report.is_none());
        let out = run_command(["bouquet-kit", "pd", "x.hg", "--field", "r"]);
        assert_eq!(out.exit_code, 1);
        let out = run_command(["bouquet-kit", "--help"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("verify"));
    }

    #[test]
    fn missing_file_is_an_error() {
        let out = run_command(["bouquet-kit", "alpha", "/nonexistent/file.hg", "--json"]);
        assert_eq!(out.exit_code, 1);
        assert!(matches!(out.report.unwrap().status, Status::Error(_)));
    }

    #[test]
    fn gen_is_deterministic() {
        let a = run_command(["bouquet-kit", "gen", "--n", "6", "--m", "4", "--arity", "2..2", "--seed", "7"]);
        let b = run_command(["bouquet-kit", "gen", "--n", "6", "--m", "4", "--arity", "2..2", "--seed", "7"]);
        assert_eq!(a.exit_code, 0);
        assert_eq!(a.stdout, b.stdout);
        assert!(a.stdout.lines().all(|l| l.split(' ').count() == 2));
    }
}
