use std::f64::consts::PI;
use std::path::PathBuf;

use bwma_core::Levels;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bwma",
    version,
    about = "Verify TLA/BWMA spin-1 representations and build topological basis reports"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Numeric relation suite at one parameter point.
    Verify(VerifyArgs),
    /// Relation suite as exact Laurent-polynomial identities.
    ExactVerify(ExactArgs),
    /// Negativity sweep of the cup state over q.
    Negativity(NegativityArgs),
    /// Topological basis, reduced operators and similarity checks.
    Basis(BasisArgs),
    /// Total-spin norms of the basis at q=1, phi_nu=pi.
    Singlet(SingletArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,

    /// Absolute tolerance for numeric checks.
    #[arg(long, env = "BWMA_TOL", default_value = "1e-10", value_parser = parse_tol)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long, default_value = "2", allow_hyphen_values = true, value_parser = parse_q)]
    pub q: f64,

    /// Radians; accepts `pi`, `k*pi`, `pi/k`.
    #[arg(long = "phi-nu", default_value = "0", allow_hyphen_values = true, value_parser = parse_angle)]
    pub phi_nu: f64,

    /// Radians; accepts `pi`, `k*pi`, `pi/k`.
    #[arg(long = "phi-ml", default_value = "0", allow_hyphen_values = true, value_parser = parse_angle)]
    pub phi_mu_lambda: f64,

    /// Level assignment (lambda,mu,nu), a permutation of +1,0,-1.
    #[arg(long, default_value = "+1,-1,0", allow_hyphen_values = true, value_parser = parse_levels)]
    pub levels: Levels,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub out: OutputArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long, default_value = "+1,-1,0", allow_hyphen_values = true, value_parser = parse_levels)]
    pub levels: Levels,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NegativityArgs {
    #[arg(long = "q-min", default_value = "0.1", allow_hyphen_values = true, value_parser = parse_q)]
    pub q_min: f64,
    #[arg(long = "q-max", default_value = "10", allow_hyphen_values = true, value_parser = parse_q)]
    pub q_max: f64,
    #[arg(long, default_value = "100", value_parser = parse_steps)]
    pub steps: usize,
    /// Space sample points evenly in log q.
    #[arg(long = "log-grid")]
    pub log_grid: bool,
    #[command(flatten)]
    pub out: OutputArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub out: OutputArgs,
    /// Only `json` is supported.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct SingletArgs {
    #[command(flatten)]
    pub out: OutputArgs,
    /// Only `json` is supported.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

fn parse_number(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("not a number: {s:?}"))
}

fn parse_q(s: &str) -> Result<f64, String> {
    let q = parse_number(s)?;
    if q > 0.0 && q.is_finite() {
        Ok(q)
    } else {
        Err("q must be positive".into())
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t = parse_number(s)?;
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err("tolerance must be positive".into())
    }
}

fn parse_steps(s: &str) -> Result<usize, String> {
    let n: usize = s
        .trim()
        .parse()
        .map_err(|_| format!("not a count: {s:?}"))?;
    if n < 2 {
        return Err("steps must be at least 2".into());
    }
    Ok(n)
}

fn parse_levels(s: &str) -> Result<Levels, String> {
    s.parse::<Levels>().map_err(|e| e.to_string())
}

/// Plain radians or a multiple of `pi`: `pi`, `-pi`, `2*pi`, `pi/3`, `2*pi/3`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if !t.contains("pi") {
        let x = parse_number(t)?;
        return if x.is_finite() {
            Ok(x)
        } else {
            Err(format!("angle must be finite: {s:?}"))
        };
    }
    let bad = || format!("cannot parse angle {s:?}");
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, t),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let factor = match num.trim() {
        "pi" => 1.0,
        other => {
            let k = other
                .strip_suffix("pi")
                .and_then(|k| k.trim().strip_suffix('*'))
                .ok_or_else(bad)?;
            k.trim().parse::<f64>().map_err(|_| bad())?
        }
    };
    let divisor = match den {
        Some(d) => d.trim().parse::<f64>().map_err(|_| bad())?,
        None => 1.0,
    };
    let x = sign * factor * PI / divisor;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(bad())
    }
}
