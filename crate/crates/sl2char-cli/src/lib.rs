//! Batch driver for the SL(2) character-bound library: parameter sweeps,
//! asymptotic-decay reports, constant tables, and verification suites, all
//! with deterministic CSV output.
//!
//! Exit status: 0 when every verified inequality holds, 1 when any row or
//! check fails, 2 on configuration or usage errors.

pub mod cmd;
pub mod config;
pub mod gamma;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use config::SweepConfig;

#[derive(Parser, Debug)]
#[command(
    name = "sl2char",
    version,
    about = "Supercuspidal character magnitudes of SL(2) over p-adic fields: \
             bound sweeps, decay reports, and constant tables"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate every admissible parameter against torus representatives and
    /// verify D^(1/2)|Θ| ≤ 2 + D^(1/2) row by row (CSV output).
    SweepBound(BaseArgs),
    /// Fix one torus element and report the max |Θ|/deg per parameter family
    /// as the depth grows, with a fitted log_q slope.
    Asymptotics(AsymptoticsArgs),
    /// Emit the constant table (dim, #Φ⁺, h_G, κ, A, flags) for split simple
    /// types.
    KappaTable(KappaArgs),
    /// Run the built-in verification suites and print machine-readable
    /// CHECK lines.
    Checks(ChecksArgs),
}

/// Flags shared by every command. All depth flags are in half-units (twice
/// the depth), so ramified half-odd depths stay integral: `--r-max 6` means
/// depth r ≤ 3. Values given here override the config file.
#[derive(Args, Debug, Default)]
pub struct BaseArgs {
    /// Primes to run, comma-separated (each ≥ 5) [default: 5,7]
    #[arg(long, value_name = "LIST")]
    pub p: Option<String>,
    /// Working p-adic precision in digits [default: the policy minimum]
    #[arg(long, value_name = "N")]
    pub prec: Option<u32>,
    /// Max parameter depth, half-units [default: 6]
    #[arg(long = "r-max", value_name = "HALF_UNITS")]
    pub r_max: Option<i64>,
    /// Max γ depth, half-units [default: 8]
    #[arg(long = "gamma-depth-max", value_name = "HALF_UNITS")]
    pub gamma_depth_max: Option<i64>,
    /// Torus classes to include: 'all' or comma list of codes
    /// (eps.1 eps.pi pi.1 pi.eps epspi.1 epspi.eps split) [default: all]
    #[arg(long, value_name = "LIST")]
    pub classes: Option<String>,
    /// Seed for the deterministic γ sampler [default: 17]
    #[arg(long, value_name = "U64")]
    pub seed: Option<u64>,
    /// Tolerance for floating-point comparisons [default: 1e-9]
    #[arg(long, value_name = "EPS")]
    pub tol: Option<f64>,
    /// Output CSV path (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// key=value config file; explicit flags win over file values
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// log_q of the C₁ constant used by the bound-shape check [default: 0]
    #[arg(long = "c1-log-q", value_name = "X")]
    pub c1_log_q: Option<f64>,
}

#[derive(Args, Debug, Default)]
pub struct AsymptoticsArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// Torus class of the fixed γ [default: eps.1]
    #[arg(long = "gamma-class", value_name = "CODE")]
    pub gamma_class: Option<String>,
    /// Depth of the fixed γ, half-units [default: 2]
    #[arg(long = "gamma-depth", value_name = "HALF_UNITS")]
    pub gamma_depth: Option<i64>,
}

#[derive(Args, Debug, Default)]
pub struct KappaArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// Comma list of types like A1,C2,G2; empty for a header-only table
    /// [default: every shipped type]
    #[arg(long, value_name = "LIST")]
    pub types: Option<String>,
}

#[derive(Args, Debug, Default)]
pub struct ChecksArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// Sample budget for the randomized suites [default: 400]
    #[arg(long, value_name = "N")]
    pub samples: Option<u64>,
    /// Fault injection for exercising the failure path (wrong-legendre)
    #[arg(long, value_name = "NAME")]
    pub fault: Option<String>,
}

/// Defaults < config file < flags, in that order.
pub fn resolve_config(base: &BaseArgs) -> anyhow::Result<SweepConfig> {
    let mut cfg = SweepConfig::default();
    if let Some(path) = &base.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("cannot read config {}: {e}", path.display()))?;
        cfg.apply_file(&text)?;
    }
    if let Some(p) = &base.p {
        cfg.ps = config::parse_u64_list(p)?;
    }
    if let Some(n) = base.prec {
        cfg.prec = Some(n);
    }
    if let Some(r) = base.r_max {
        cfg.r2_max = r;
    }
    if let Some(d) = base.gamma_depth_max {
        cfg.gd2_max = d;
    }
    if let Some(c) = &base.classes {
        cfg.classes = {
            let mut tmp = SweepConfig::default();
            tmp.apply_file(&format!("classes={c}\n"))?;
            tmp.classes
        };
    }
    if let Some(s) = base.seed {
        cfg.seed = s;
    }
    if let Some(t) = base.tol {
        cfg.tol = t;
    }
    if let Some(o) = &base.out {
        cfg.out = Some(o.clone());
    }
    if let Some(c1) = base.c1_log_q {
        cfg.c1_log_q = c1;
    }
    Ok(cfg)
}

/// Parse the command line, run the command, and map results onto the exit
/// contract. Never panics on user errors.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::SweepBound(base) => resolve_config(base).and_then(|cfg| {
            let summary = cmd::sweep::run(&cfg)?;
            summary.print(&cfg.ps);
            Ok(if summary.failures > 0 { 1 } else { 0 })
        }),
        Command::Asymptotics(args) => resolve_config(&args.base).and_then(|mut cfg| {
            if let Some(c) = &args.gamma_class {
                cfg.gamma_class = c.clone();
            }
            if let Some(d) = args.gamma_depth {
                cfg.gamma_d2 = d;
            }
            cmd::asymptotics::run(&cfg)?;
            Ok(0)
        }),
        Command::KappaTable(args) => resolve_config(&args.base).and_then(|mut cfg| {
            if let Some(t) = &args.types {
                cfg.types = Some(t.clone());
            }
            let summary = cmd::kappa::run(&cfg)?;
            println!(
                "KAPPA-TABLE rows={} skipped={}",
                summary.rows,
                summary.skipped.len()
            );
            Ok(0)
        }),
        Command::Checks(args) => resolve_config(&args.base).and_then(|mut cfg| {
            if let Some(s) = args.samples {
                cfg.samples = s;
            }
            if let Some(f) = &args.fault {
                cfg.fault = Some(f.clone());
            }
            let report = cmd::checks::run(&cfg)?;
            report.print();
            Ok(if report.failed() > 0 { 1 } else { 0 })
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}
