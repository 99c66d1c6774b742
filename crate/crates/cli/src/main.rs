//! `su3st`: emit generator matrices and structure constants, apply finite
//! transformations to nine-vectors, and run the verification suites.
//!
//! Exit codes: 0 success, 1 a verification check failed (or a runtime
//! error), 2 usage error.

mod export;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use su3st::invariants;
use su3st::ninerep;
use su3st::numerics::{Backend, Complex64, ExactScalar, Matrix, Scalar};
use su3st::par::ExecMode;
use su3st::sixrep;
use su3st::su3::{self, Branch, Rep, StructureConstants};
use su3st::suite::{self, Corruption, Suite, SuiteConfig};
use su3st::transforms::{self, NineVector, TransformParams};

use export::{GenDump, Render};

#[derive(Parser)]
#[command(name = "su3st", version)]
#[command(about = "SU(3) spacetime algebra: generators, structure constants, transforms, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the J, K, V or P matrices of one representation
    Gens {
        /// 3, 3bar, 6, 9 or 10
        #[arg(long, value_parser = parse_rep)]
        rep: Rep,
        #[arg(long, value_enum)]
        which: Which,
        /// Branch for K (9, 10) and P (6, 10): + or -
        #[arg(long, value_parser = parse_branch, allow_hyphen_values = true, default_value = "+")]
        branch: Branch,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_parser = parse_backend, default_value = "exact")]
        backend: Backend,
    },
    /// Emit the nonzero f and d entries in canonical index order
    Structure {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_parser = parse_backend, default_value = "exact")]
        backend: Backend,
    },
    /// Apply the Poincaré-type transform (rotate, boost, translate) to a nine-vector
    Transform {
        /// Eight comma-separated rotation angles
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        /// Eight comma-separated boost parameters
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        /// Nine comma-separated translation components
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, value_parser = parse_branch, allow_hyphen_values = true, default_value = "+")]
        branch: Branch,
        /// Nine comma-separated components; the ninth is time
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Run a verification suite; exits 1 if any check fails
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long, value_parser = parse_backend, default_value = "exact")]
        backend: Backend,
        #[arg(long, env = "SU3ST_SEED", default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
        /// Write the JSON report here
        #[arg(long)]
        output: Option<PathBuf>,
        /// Override the algebraic tolerance (default: 0 exact, 1e-12 float)
        #[arg(long, env = "SU3ST_TOLERANCE")]
        tolerance: Option<f64>,
        /// Shift one structure-constant entry by 1e-6, e.g. f:1,2,3
        #[arg(long, value_parser = parse_corruption)]
        corrupt: Option<Corruption>,
        /// Run probes on one thread
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "J", alias = "j")]
    J,
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "V", alias = "v")]
    V,
    #[value(name = "P", alias = "p")]
    P,
}

impl Which {
    fn letter(self) -> &'static str {
        match self {
            Which::J => "J",
            Which::K => "K",
            Which::V => "V",
            Which::P => "P",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] su3st::AlgebraError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

fn parse_rep(s: &str) -> Result<Rep, String> {
    s.parse()
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    s.parse()
}

fn parse_backend(s: &str) -> Result<Backend, String> {
    s.parse::<Backend>().map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

fn parse_corruption(s: &str) -> Result<Corruption, String> {
    s.parse::<Corruption>().map_err(|e| e.to_string())
}

const VALID_COMBOS: &str = "3: J K V; 3bar: J; 6: J K P; 9: J K; 10: J K P";

fn named<S: Scalar>(prefix: &str, mats: Vec<Matrix<S>>) -> Vec<(String, Matrix<S>)> {
    mats.into_iter()
        .enumerate()
        .map(|(i, m)| (format!("{prefix}{}", i + 1), m))
        .collect()
}

fn generators<S: Scalar>(rep: Rep, which: Which, branch: Branch) -> Result<Vec<(String, Matrix<S>)>, CliError> {
    let sc = StructureConstants::<S>::fundamental();
    let one = S::one();
    let mats = match (rep, which) {
        (Rep::Triplet, Which::J) => su3::gellmann::<S>().j,
        (Rep::Triplet, Which::K) => sixrep::triplet_vk::<S>(&one, &one).k.unwrap_or_default(),
        (Rep::Triplet, Which::V) => sixrep::triplet_vk::<S>(&one, &one).v.unwrap_or_default(),
        (Rep::Antitriplet, Which::J) => su3::antitriplet::<S>().j,
        (Rep::Six, Which::J) => sixrep::six_with_momentum::<S>(branch, &one, &one)?.j,
        (Rep::Six, Which::K) => sixrep::six_with_momentum::<S>(branch, &one, &one)?.k.unwrap_or_default(),
        (Rep::Six, Which::P) => sixrep::momentum_matrices::<S>(branch, &one, &one)?.p,
        (Rep::Nine, Which::J) => ninerep::j9(&sc),
        (Rep::Nine, Which::K) => ninerep::k9(&sc, branch),
        (Rep::Ten, Which::J) => ninerep::ten_rep(&sc, branch).j,
        (Rep::Ten, Which::K) => ninerep::ten_rep(&sc, branch).k.unwrap_or_default(),
        (Rep::Ten, Which::P) => ninerep::ten_rep(&sc, branch).v.unwrap_or_default(),
        (rep, which) => {
            return Err(CliError::Usage(format!(
                "no {} matrices in the {rep} rep; valid combinations are {VALID_COMBOS}",
                which.letter()
            )))
        }
    };
    Ok(named(which.letter(), mats))
}

fn emit_gens<S: Render>(rep: Rep, which: Which, branch: Branch, format: Format) -> Result<String, CliError> {
    let uses_branch = matches!((rep, which), (Rep::Six, Which::P) | (Rep::Nine, Which::K) | (Rep::Ten, _));
    let branch_label = branch.to_string();
    let dump = GenDump {
        rep: rep.label(),
        which: which.letter(),
        branch: uses_branch.then_some(branch_label.as_str()),
        matrices: generators::<S>(rep, which, branch)?,
    };
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&dump.to_json())?,
        Format::Csv => dump.to_csv(),
    })
}

fn emit_structure<S: Render>(format: Format) -> Result<String, CliError> {
    let sc = StructureConstants::<S>::fundamental();
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&export::structure_json(&sc))?,
        Format::Csv => export::structure_csv(&sc),
    })
}

fn parse_list<const N: usize>(flag: &str, s: Option<&str>) -> Result<[f64; N], CliError> {
    let Some(s) = s else {
        return Ok([0.0; N]);
    };
    let vals: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("--{flag}: {e} in {s:?}")))?;
    if vals.iter().any(|v| !v.is_finite()) {
        return Err(CliError::Usage(format!("--{flag}: values must be finite")));
    }
    vals.try_into()
        .map_err(|v: Vec<f64>| CliError::Usage(format!("--{flag} needs {N} comma-separated values, got {}", v.len())))
}

fn transform(theta: [f64; 8], phi: [f64; 8], a: [f64; 9], branch: Branch, x: NineVector) -> Result<String, CliError> {
    let p = TransformParams { theta, phi, a, branch };
    let d = transforms::poincare10(&p)?;
    let y = transforms::apply(&d, &x)?;
    type Quantity = (&'static str, fn(&NineVector) -> f64);
    let quantities: [Quantity; 5] = [
        ("quad_space", invariants::quad_space),
        ("interval", invariants::interval),
        ("cubic_sym", invariants::cubic_sym),
        ("I+", |v| invariants::cubic_invariant(v, Branch::Plus)),
        ("I-", |v| invariants::cubic_invariant(v, Branch::Minus)),
    ];
    let ledger: Vec<_> = quantities
        .iter()
        .map(|(name, f)| {
            let (before, after) = (f(&x), f(&y));
            json!({ "quantity": name, "before": before, "after": after, "delta": after - before })
        })
        .collect();
    Ok(serde_json::to_string_pretty(&json!({
        "params": p,
        "x": x.0,
        "x_prime": y.0,
        "ledger": ledger,
    }))?)
}

fn summarize(report: &suite::VerificationReport) -> String {
    let mut out = String::new();
    for r in &report.records {
        if !r.passed && !r.informational {
            out.push_str(&format!(
                "FAIL {:<40} residual {:e} (tolerance {:e}, {})  {}\n",
                r.id, r.residual, r.tolerance, r.backend, r.relation
            ));
        }
    }
    let failed = report.failures().count();
    let info = report.records.iter().filter(|r| r.informational).count();
    out.push_str(&format!(
        "suite {} ({} backend, seed {}{}): {} checks, {} failed, {} informational, {:.2}s\n",
        report.suite,
        report.backend,
        report.seed,
        report.corrupt.as_deref().map(|c| format!(", corrupted {c}")).unwrap_or_default(),
        report.records.len() - info,
        failed,
        info,
        report.elapsed_seconds,
    ));
    out.push_str(if report.passed { "PASS\n" } else { "FAIL\n" });
    out
}

/// Writes to stdout with a trailing newline; a closed pipe is not an error.
fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    let res = out.write_all(text.as_bytes()).and_then(|_| {
        if text.ends_with('\n') {
            Ok(())
        } else {
            out.write_all(b"\n")
        }
    });
    match res.and_then(|_| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Gens {
            rep,
            which,
            branch,
            format,
            backend,
        } => {
            let text = match backend {
                Backend::Exact => emit_gens::<ExactScalar>(rep, which, branch, format)?,
                Backend::Float => emit_gens::<Complex64>(rep, which, branch, format)?,
            };
            emit(&text)?;
            Ok(true)
        }
        Command::Structure { format, backend } => {
            let text = match backend {
                Backend::Exact => emit_structure::<ExactScalar>(format)?,
                Backend::Float => emit_structure::<Complex64>(format)?,
            };
            emit(&text)?;
            Ok(true)
        }
        Command::Transform { theta, phi, a, branch, x } => {
            let theta = parse_list::<8>("theta", theta.as_deref())?;
            let phi = parse_list::<8>("phi", phi.as_deref())?;
            let a = parse_list::<9>("a", a.as_deref())?;
            let x = NineVector::new(parse_list::<9>("x", Some(&x))?);
            emit(&transform(theta, phi, a, branch, x)?)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            backend,
            seed,
            output,
            tolerance,
            corrupt,
            sequential,
        } => {
            if let Some(t) = tolerance {
                if !(t.is_finite() && t >= 0.0) {
                    return Err(CliError::Usage(format!("--tolerance must be a nonnegative number, got {t}")));
                }
            }
            let cfg = SuiteConfig {
                suite,
                backend,
                seed,
                tolerance,
                corrupt,
                mode: if sequential { ExecMode::Sequential } else { ExecMode::Parallel },
            };
            let report = suite::run(&cfg);
            if let Some(path) = output {
                std::fs::write(&path, serde_json::to_string_pretty(&report)? + "\n")?;
            }
            emit(&summarize(&report))?;
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
