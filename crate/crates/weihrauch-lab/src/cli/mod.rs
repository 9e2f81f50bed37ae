//! Command-line front end: list the catalog, verify reductions over seeded
//! families, and run/solve single instances loaded from JSON files.
//!
//! Exit codes: 0 success, 1 a check came back invalid, 2 unknown names or
//! unusable input, 3 the verdict stayed unknown at the given budget.

mod instance_file;

pub use instance_file::{
    CertificateRepr, GraphRepr, InstanceFile, PayloadRepr, ProblemRepr, TreeRepr,
};

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::harness::{self, catalog};
use crate::problems::{check_solution, solve_certified, Budget, Instance};
use crate::reductions::Reduction;
use crate::verdict::Verdict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

pub const BUDGET_ENV: &str = "WEIHRAUCH_LAB_BUDGET";

#[derive(Parser)]
#[command(
    name = "wlab",
    about = "An executable laboratory for Weihrauch reductions",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the problem and reduction catalogs.
    List {
        /// Shorthand for `--format json`.
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate a seeded family of certified instances and check a reduction
    /// on every one of them.
    Verify {
        #[arg(long)]
        reduction: String,
        /// Source family name; defaults to the reduction's natural family.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        /// Fuel figure the checking budget is derived from.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Push one instance file through a reduction: forward transform, solve
    /// the target, map the solution back, and check it.
    Run {
        #[arg(long)]
        reduction: String,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve one instance file from its certificate and check the result.
    Solve {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Entry point for the `wlab` binary; returns the process exit code.
pub fn main() -> i32 {
    run_args(std::env::args_os())
}

/// Parses and dispatches; separated from [`main`] so tests can drive it.
pub fn run_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::List { json, format } => cmd_list(if json { Format::Json } else { format }),
        Cmd::Verify {
            reduction,
            family,
            seed,
            count,
            budget,
            k,
            n,
            format,
        } => cmd_verify(
            &reduction,
            family.as_deref(),
            seed,
            count,
            budget,
            k,
            n,
            format,
        ),
        Cmd::Run {
            reduction,
            instance,
            budget,
            k,
            n,
            format,
        } => cmd_run(&reduction, &instance, budget, k, n, format),
        Cmd::Solve {
            instance,
            budget,
            format,
        } => cmd_solve(&instance, budget, format),
    }
}

/// `--budget` flag, else the `WEIHRAUCH_LAB_BUDGET` environment variable,
/// else the default budget.
fn resolve_budget(flag: Option<u64>) -> Result<Budget, String> {
    if let Some(fuel) = flag {
        return Ok(Budget::from_fuel(fuel));
    }
    match std::env::var(BUDGET_ENV) {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map(Budget::from_fuel)
            .map_err(|_| format!("{BUDGET_ENV} must be a fuel number, got {text:?}")),
        Err(_) => Ok(Budget::default()),
    }
}

fn cmd_list(format: Format) -> i32 {
    let entries = catalog::catalog();
    let combinators = catalog::combinator_anchors();
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "problems": catalog::problem_names(),
                "reductions": entries
                    .iter()
                    .map(|e| serde_json::json!({
                        "name": e.display_name(),
                        "anchor": e.anchor,
                    }))
                    .collect::<Vec<_>>(),
                "combinators": combinators
                    .iter()
                    .map(|(name, anchor)| serde_json::json!({
                        "name": name,
                        "anchor": anchor,
                    }))
                    .collect::<Vec<_>>(),
                "families": harness::family_names(),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("list serializes")
            );
        }
        Format::Text => {
            println!("problems:");
            for name in catalog::problem_names() {
                println!("  {name}");
            }
            println!("reductions:");
            for e in &entries {
                println!("  {} ({})", e.display_name(), e.anchor);
            }
            println!("combinators:");
            for (name, anchor) in &combinators {
                println!("  {name} ({anchor})");
            }
            println!("families:");
            for name in harness::family_names() {
                println!("  {name}");
            }
        }
    }
    EXIT_OK
}

/// Looks the reduction up and applies `--k`/`--n`; usage problems go to
/// stderr with exit 2.
fn resolve_reduction(name: &str, k: Option<u64>, n: Option<u64>) -> Result<Reduction, i32> {
    let entry = match catalog::find(name) {
        Some(e) => e,
        None => {
            eprintln!("unknown reduction {name:?}; see `wlab list`");
            return Err(EXIT_USAGE);
        }
    };
    match entry.param_value(k, n) {
        Ok(p) => Ok(entry.build(p)),
        Err(e) => {
            eprintln!("{e}");
            Err(EXIT_USAGE)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    name: &str,
    family: Option<&str>,
    seed: u64,
    count: u64,
    budget: Option<u64>,
    k: Option<u64>,
    n: Option<u64>,
    format: Format,
) -> i32 {
    let entry = match catalog::find(name) {
        Some(e) => e,
        None => {
            eprintln!("unknown reduction {name:?}; see `wlab list`");
            return EXIT_USAGE;
        }
    };
    let param = match entry.param_value(k, n) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    };
    let reduction = entry.build(param);
    let family_name = family
        .map(str::to_owned)
        .unwrap_or_else(|| entry.default_family(param));
    let fam = match harness::family(&family_name) {
        Some(f) => f,
        None => {
            eprintln!("unknown family {family_name:?}; see `wlab list`");
            return EXIT_USAGE;
        }
    };
    let budget = match resolve_budget(budget) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    };
    let report = match harness::verify_reduction(&reduction, &fam, seed, count, &budget) {
        Ok(r) => r,
        Err(Error::ReductionMismatch(e)) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
        Err(e) => {
            eprintln!("{e}");
            return EXIT_INVALID;
        }
    };
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => {
            println!(
                "{} on {}: {} cases, {} valid, {} invalid, {} unknown (seed {})",
                report.reduction,
                report.family,
                report.cases,
                report.valid,
                report.invalid,
                report.unknown,
                report.seed,
            );
            for f in &report.failures {
                println!(
                    "  case {} [{}]: {}",
                    f.index,
                    f.stage,
                    verdict_line(&f.verdict)
                );
            }
        }
    }
    if report.invalid > 0 {
        EXIT_INVALID
    } else if report.unknown > 0 {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    }
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::Valid => "valid".into(),
        Verdict::Invalid { witness } => format!("invalid: {witness}"),
        Verdict::Unknown { reason } => format!("unknown: {reason}"),
    }
}

fn load_instance(path: &PathBuf) -> Result<Instance, i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return Err(EXIT_USAGE);
        }
    };
    let parsed = InstanceFile::parse(&text)
        .and_then(|f| f.to_instance())
        .map_err(|e| {
            eprintln!("{}: {e}", path.display());
            EXIT_USAGE
        })?;
    Ok(parsed)
}

/// Solver failures that mean "not decided at this budget" rather than a bad
/// invocation.
fn solve_exit(e: &Error) -> i32 {
    match e {
        Error::MissingCertificate(_) | Error::FuelExhausted { .. } => EXIT_UNKNOWN,
        _ => EXIT_USAGE,
    }
}

fn verdict_exit(v: &Verdict) -> i32 {
    match v {
        Verdict::Valid => EXIT_OK,
        Verdict::Invalid { .. } => EXIT_INVALID,
        Verdict::Unknown { .. } => EXIT_UNKNOWN,
    }
}

fn cmd_solve(path: &PathBuf, budget: Option<u64>, format: Format) -> i32 {
    let inst = match load_instance(path) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let budget = match resolve_budget(budget) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    };
    let solution = match solve_certified(&inst, &budget) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return solve_exit(&e);
        }
    };
    let verdict = match check_solution(&inst, &solution, &budget) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            return solve_exit(&e);
        }
    };
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "problem": inst.problem.to_string(),
                "solution": solution.digest(),
                "check": verdict,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializes")
            );
        }
        Format::Text => {
            println!("{}", solution.digest());
            println!("check: {}", verdict_line(&verdict));
        }
    }
    verdict_exit(&verdict)
}

fn cmd_run(
    name: &str,
    path: &PathBuf,
    budget: Option<u64>,
    k: Option<u64>,
    n: Option<u64>,
    format: Format,
) -> i32 {
    let reduction = match resolve_reduction(name, k, n) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let source = match load_instance(path) {
        Ok(i) => i,
        Err(code) => return code,
    };
    if source.problem != reduction.source {
        eprintln!(
            "{} expects a {} instance, the file holds {}",
            reduction.name, reduction.source, source.problem
        );
        return EXIT_USAGE;
    }
    let budget = match resolve_budget(budget) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    };
    let target = match reduction.forward(&source) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("{e}");
            return solve_exit(&e);
        }
    };
    let target_solution = match solve_certified(&target, &budget) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return solve_exit(&e);
        }
    };
    let back = match reduction.back(&source, &target_solution) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return solve_exit(&e);
        }
    };
    let verdict = match check_solution(&source, &back, &budget) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            return solve_exit(&e);
        }
    };
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "reduction": reduction.name,
                "source": source.problem.to_string(),
                "target": target.problem.to_string(),
                "forward": harness::payload_digest(&target.payload),
                "target_solution": target_solution.digest(),
                "back": back.digest(),
                "check": verdict,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializes")
            );
        }
        Format::Text => {
            println!(
                "forward: {} instance {}",
                target.problem,
                harness::payload_digest(&target.payload)
            );
            println!("target solution: {}", target_solution.digest());
            println!("back: {}", back.digest());
            println!("check: {}", verdict_line(&verdict));
        }
    }
    verdict_exit(&verdict)
}
