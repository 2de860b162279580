//! Batch front end: each subcommand reads one polynomial, runs one pipeline
//! and writes a JSON report or a CSV table.
//!
//! Exit codes: 0 success, 1 usage, 2 unparsable input, 3 numerical failure,
//! 4 inconclusive classification (the report is still written).

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use dircyc::approximant::{BasisFamily, BasisSpec, DecayConfig};
use dircyc::poly::{parse_expression, PolyJson};
use dircyc::prooflab::QConfig;
use dircyc::zeroset::{BidiskConfig, TorusConfig};
use dircyc::{Complex64, Poly2};

mod commands;
pub mod output;

pub use commands::{FactorReport, ZerosReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "dircyc",
    version,
    about = "Cyclicity experiments for polynomials on the bidisk"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Squared norms in the isotropic, anisotropic and doubled isotropic spaces.
    Norm {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        alpha: Vec<f64>,
    },
    /// One optimal approximant as JSON.
    Opa {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// `total:N`, `diagonal:N` or `bidegree:N1,N2`.
        #[arg(long, default_value = "total:5")]
        basis: BasisArg,
    },
    /// Distance table over alpha x n as CSV.
    Scan {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        alpha: Vec<f64>,
        #[arg(long, default_value_t = 60)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Total)]
        basis: FamilyArg,
    },
    /// Torus zero set and bidisk zero search as JSON.
    Zeros {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        common: Common,
    },
    /// Predicted and observed cyclicity as a JSON report.
    Classify {
        #[command(flatten)]
        input: OptionalPolyInput,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        alpha: Vec<f64>,
        #[arg(long, default_value_t = dircyc::classify::DEFAULT_N_MAX)]
        nmax: usize,
        /// Basis family; chosen from the polynomial when absent.
        #[arg(long, value_enum)]
        basis: Option<FamilyArg>,
        /// Classify a product through its factors; repeatable, replaces `-p`.
        #[arg(long = "factor", allow_hyphen_values = true, conflicts_with_all = ["poly", "poly_json"])]
        factors: Vec<String>,
    },
    /// Residuals of the orthogonality recurrence for `g` as CSV.
    Recurrence {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        common: Common,
        /// Largest `k`; defaults to the `z1` degree of `g`.
        #[arg(long)]
        kmax: Option<usize>,
        /// Largest `l`; defaults to the `z2` degree of `g`.
        #[arg(long)]
        lmax: Option<usize>,
    },
    /// Smoothness of the quotient `Q = g / p` as JSON.
    Qsmooth {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        common: Common,
        /// Torus zero `z1,z2` of `p`, each a constant expression; repeatable.
        /// When absent the zeros are computed.
        #[arg(long = "zero", allow_hyphen_values = true)]
        zeros: Vec<String>,
        #[arg(long, default_value_t = 6)]
        exponent: u32,
        #[arg(long, default_value_t = 512)]
        grid: usize,
        /// Writes `|Q^(k,l)|` for `k, l < grid/2` as CSV.
        #[arg(long)]
        qhat: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PolyInput {
    /// Polynomial expression in `z1`, `z2` and `i`.
    #[arg(short = 'p', long = "poly", allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Polynomial in the JSON coefficient format.
    #[arg(long = "poly-json")]
    pub poly_json: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalPolyInput {
    #[arg(short = 'p', long = "poly", allow_hyphen_values = true)]
    pub poly: Option<String>,
    #[arg(long = "poly-json")]
    pub poly_json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Common {
    /// TOML file overriding tolerances, e.g. `torus.circle_tol = 1e-7`.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output path; stdout when absent.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Total,
    Diagonal,
}

impl From<FamilyArg> for BasisFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Total => BasisFamily::TotalDegree,
            FamilyArg::Diagonal => BasisFamily::DiagonalOnly,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisArg(pub BasisSpec);

impl FromStr for BasisArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("invalid basis '{s}': expected total:N, diagonal:N or bidegree:N1,N2");
        let (shape, size) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let spec = match shape.trim() {
            "total" => BasisSpec::total_degree(num(size)?),
            "diagonal" => BasisSpec::diagonal(num(size)?),
            "bidegree" => {
                let (a, b) = size.split_once(',').ok_or_else(bad)?;
                BasisSpec::bidegree(num(a)?, num(b)?)
            }
            _ => return Err(bad()),
        };
        Ok(BasisArg(spec))
    }
}

/// Tolerance overrides read from `--config`; omitted keys keep their defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Overrides {
    pub torus: TorusConfig,
    pub bidisk: BidiskConfig,
    pub decay: DecayConfig,
    pub q: QConfig,
}

pub fn load_overrides(path: Option<&Path>) -> Result<Overrides, CliError> {
    let Some(path) = path else {
        return Ok(Overrides::default());
    };
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn parse_poly(expr: &str) -> Result<Poly2, CliError> {
    parse_expression(expr).map_err(|e| CliError::Parse(format!("'{expr}': {e}")))
}

pub fn read_poly_json(path: &Path) -> Result<Poly2, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let j: PolyJson = serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Poly2::try_from(j).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

impl PolyInput {
    pub fn load(&self) -> Result<Poly2, CliError> {
        load(self.poly.as_deref(), self.poly_json.as_deref())
    }
}

impl OptionalPolyInput {
    pub fn load(&self) -> Result<Option<Poly2>, CliError> {
        if self.poly.is_none() && self.poly_json.is_none() {
            return Ok(None);
        }
        load(self.poly.as_deref(), self.poly_json.as_deref()).map(Some)
    }
}

fn load(expr: Option<&str>, json: Option<&Path>) -> Result<Poly2, CliError> {
    match (expr, json) {
        (Some(e), _) => parse_poly(e),
        (None, Some(p)) => read_poly_json(p),
        (None, None) => Err(CliError::Usage("a polynomial is required (-p or --poly-json)".into())),
    }
}

/// A constant expression such as `1`, `-i` or `0.6 + 0.8*i`.
pub fn parse_constant(expr: &str) -> Result<Complex64, CliError> {
    let p = parse_poly(expr)?;
    if p.bidegree() != (0, 0) {
        return Err(CliError::Parse(format!("'{expr}' is not a constant")));
    }
    Ok(p.coeff(0, 0))
}

/// Parses `argv` and runs the subcommand; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match commands::execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
