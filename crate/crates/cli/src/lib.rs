//! Argument parsing and command implementations for the `lowdeg` binary.
//! Commands return their rendered output so tests can call them directly.

mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lowdeg_core::Error;

pub use commands::run;

/// Default field for construction commands.
pub const DEFAULT_PRIME: u64 = 10007;
/// Default field for secant computations.
pub const DEFAULT_SECANT_PRIME: u64 = 1_000_003;

#[derive(Debug, Parser)]
#[command(
    name = "lowdeg",
    version,
    about = "Hypersurfaces containing low-degree projective varieties"
)]
pub struct Cli {
    #[command(flatten)]
    pub run: RunArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Work over GF(p).
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Work over the rationals.
    #[arg(long, global = true)]
    pub q: bool,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate bound functions and check their identities.
    Formula {
        #[command(subcommand)]
        which: FormulaCmd,
    },
    /// Build a curve and report its deficiency profile and classification.
    Curve {
        #[command(subcommand)]
        kind: CurveKind,
        /// Report a_m for m = 1..=M.
        #[arg(long, global = true)]
        m_max: Option<u32>,
    },
    /// Properties of a point configuration.
    Points {
        #[command(subcommand)]
        action: PointsCmd,
    },
    /// Reproduce the h^1 table of non-linearly normal curves.
    Table1 {
        #[arg(long, default_value_t = 7)]
        c: u32,
    },
    /// Reproduce the quadratic-embedding invariant table.
    Table2 {
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Secant invariants of the quadratic embedding.
    Secants {
        #[command(subcommand)]
        kind: SecantKind,
        #[arg(long, global = true, default_value_t = 3)]
        trials: usize,
    },
    /// Check a_m against the extremal values on the standard constructions.
    VerifyMain,
}

#[derive(Debug, Subcommand)]
pub enum FormulaCmd {
    /// F(n,c,m), the minimal-degree value.
    #[command(name = "F", alias = "f")]
    F {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        m: u32,
    },
    /// G_t(n,c,m), the almost-minimal-degree value at depth t.
    #[command(name = "G", alias = "g")]
    G {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        m: u32,
    },
    /// H_k(n,c,m), the ACM degree-(c+k) value.
    #[command(name = "H", alias = "h")]
    H {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        m: u32,
    },
    /// u_{c,g,d}(m) for curves.
    #[command(name = "u")]
    U {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
    },
    /// k-th largest value of a_m, k <= 4.
    Delta {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
    },
    /// k-th largest value of a_m on curves, m >= c.
    DeltaCurve {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
    },
    /// Check every identity family over a grid.
    Identities {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        #[arg(long, default_value_t = 7)]
        cmax: u32,
        #[arg(long, default_value_t = 7)]
        mmax: u32,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum CurveKind {
    /// Rational normal curve in P^r.
    Rnc {
        #[arg(long)]
        r: u32,
    },
    /// Rational normal curve of degree r projected from a general (center-dim)-plane.
    Projection {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        center_dim: u32,
    },
    /// Curve of class H + kF on the scroll S(a,b).
    ScrollSection {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        k: u32,
    },
    /// Elliptic normal curve y^2 = x^3 + ea x + eb of degree c+2.
    Elliptic {
        #[arg(long)]
        c: u32,
        #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
        ea: i64,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        eb: i64,
    },
    /// Linearly normal genus-2 curve y^2 = f(x) of degree c+3.
    Genus2 {
        #[arg(long)]
        c: u32,
        /// Coefficients of f, lowest degree first.
        #[arg(long, default_value = "1,2,0,3,0,1", allow_hyphen_values = true)]
        f: String,
    },
    /// Genus-g curve of degree c+k-1 in P^{c+1} with a (k-g)-secant line.
    Multisecant {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        g: u32,
    },
}

#[derive(Debug, Clone, Args)]
pub struct PointSource {
    /// Point file: `field p|Q`, `c n`, then one point per line.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Sample points on the rational normal curve in P^R instead.
    #[arg(long)]
    pub rnc: Option<u32>,
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum PointsCmd {
    /// Span, Hilbert function, regularity and the nu-vector.
    Info {
        #[command(flatten)]
        source: PointSource,
    },
    /// A certified spanning 3-regular subset of 2c+1 points.
    Extract3 {
        #[command(flatten)]
        source: PointSource,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum SecantKind {
    Rnc {
        #[arg(long)]
        r: u32,
    },
    Scroll {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    Veronese,
    /// Rational normal curve of degree r projected from a general (center-dim)-plane.
    ProjectedRnc {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        center_dim: u32,
    },
}

/// Exit code 2 for usage and input errors, 1 for failed constructions or
/// verifications.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::InvalidField(_)
            | Error::OutOfRange(_)
            | Error::NotCovered(_)
            | Error::Malformed(_)
            | Error::FieldTooSmall(_)
            | Error::Unsupported(_)
            | Error::FieldMismatch { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

/// Rendered output plus the exit code it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub code: i32,
}
