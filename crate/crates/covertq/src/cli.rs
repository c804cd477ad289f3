//! Command-line grammar. Every parameter is optional on the command line:
//! unset values fall back to the config file (`--config`), then to the
//! built-in defaults (η₀ = 0.9, n̄_B,0 = 0.12, δ = 0.05, n = 1e8).

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "covertq",
    version,
    about = "Planner and verifier for covert quantum communication over lossy thermal channels",
    propagate_version = true
)]
pub struct Cli {
    /// Flat key=value config file supplying defaults for any parameter.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<std::path::PathBuf>,

    /// Output file; "-" or omitted writes to stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<String>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Worst-case covert payload guaranteed over an uncertainty box.
    Bound(PlanArgs),
    /// Nominal-design plan versus the robust plan, with infeasibility
    /// witnesses for the nominal design.
    NaiveCompare(PlanArgs),
    /// Critical depolarizing probability and the uncertainty level at which
    /// the guaranteed payload collapses to zero.
    Cliff(CliffArgs),
    /// Payload fraction lost to the mismatch between the covertness and
    /// reliability worst-case corners.
    Tax(PlanArgs),
    /// Grid of critical uncertainty and guaranteed payload over nominal
    /// operating points.
    Map(MapArgs),
    /// Guaranteed payload versus the number of channel uses at several
    /// uncertainty levels.
    SweepN(SweepNArgs),
    /// Guaranteed payload versus the symmetric uncertainty level.
    SweepU(SweepUArgs),
    /// Symmetric margins versus one fixed asymmetric-margin box, with the
    /// equivalent symmetric margin located by bisection.
    AsymCompare(AsymCompareArgs),
    /// Simulated distinguishability coefficient versus Fock-space cutoff,
    /// compared with the closed-form limit.
    Chi2Converge(Chi2Args),
    /// Built-in scenario presets: free-space optical and fiber links.
    WorkedExamples,
}

/// Nominal channel operating point.
#[derive(Args, Debug, Clone, Default)]
pub struct NominalArgs {
    /// Nominal transmittance η₀, in (0, 1).
    #[arg(long, value_name = "ETA")]
    pub eta0: Option<f64>,

    /// Nominal mean thermal photon number n̄_B,0, > 0.
    #[arg(long, value_name = "NB")]
    pub nb0: Option<f64>,
}

/// Covertness policy: frame length and detection-bias budget.
#[derive(Args, Debug, Clone, Default)]
pub struct PolicyArgs {
    /// Number of channel uses; scientific notation accepted (e.g. 1e8).
    #[arg(long, value_name = "N")]
    pub n: Option<String>,

    /// Covertness budget δ, in (0, 1).
    #[arg(long, value_name = "DELTA")]
    pub delta: Option<f64>,
}

/// Uncertainty-box specification: exactly one style per run.
#[derive(Args, Debug, Clone, Default)]
pub struct BoxArgs {
    /// Symmetric relative margin u in [0, 1):
    /// η ∈ [η₀(1−u), η₀(1+u)], n̄_B ∈ [n̄₀(1−u), n̄₀(1+u)].
    #[arg(long, value_name = "U")]
    pub u: Option<f64>,

    /// Asymmetric relative margins a,b,c,d in [0, 1):
    /// η ∈ [η₀(1−a), η₀(1+b)], n̄_B ∈ [n̄₀(1−c), n̄₀(1+d)].
    #[arg(long, value_name = "A,B,C,D")]
    pub asym: Option<String>,

    /// Explicit box endpoints emin,emax,nmin,nmax.
    #[arg(long = "box", value_name = "EMIN,EMAX,NMIN,NMAX")]
    pub box_spec: Option<String>,
}

/// Arguments shared by the box-based planning commands.
#[derive(Args, Debug, Clone, Default)]
pub struct PlanArgs {
    #[command(flatten)]
    pub nominal: NominalArgs,

    #[command(flatten)]
    pub box_spec: BoxArgs,

    #[command(flatten)]
    pub policy: PolicyArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct CliffArgs {
    #[command(flatten)]
    pub nominal: NominalArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct MapArgs {
    /// Symmetric relative margin applied at every grid point (required).
    #[arg(long, value_name = "U")]
    pub u: Option<f64>,

    /// Grid dimensions as N_ETAxN_NB [default: 61x61].
    #[arg(long, value_name = "NxM")]
    pub grid: Option<String>,

    /// Nominal-transmittance range lo:hi [default: 0.75:0.99].
    #[arg(long, value_name = "LO:HI")]
    pub eta_range: Option<String>,

    /// Nominal thermal-occupation range lo:hi [default: 0.01:0.30].
    #[arg(long, value_name = "LO:HI")]
    pub nb_range: Option<String>,

    #[command(flatten)]
    pub policy: PolicyArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SweepNArgs {
    #[command(flatten)]
    pub nominal: NominalArgs,

    /// Channel-use range lo:hi, log-spaced [default: 1e4:1e10].
    #[arg(long, value_name = "LO:HI")]
    pub n_range: Option<String>,

    /// Number of sweep points [default: 25].
    #[arg(long, value_name = "K")]
    pub points: Option<usize>,

    /// Comma-separated uncertainty levels [default: 0.02,0.05,0.08].
    #[arg(long, value_name = "U1,U2,...")]
    pub u_levels: Option<String>,

    /// Covertness budget δ, in (0, 1).
    #[arg(long, value_name = "DELTA")]
    pub delta: Option<f64>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SweepUArgs {
    #[command(flatten)]
    pub nominal: NominalArgs,

    /// Uncertainty-level range lo:hi [default: 0:0.12].
    #[arg(long, value_name = "LO:HI")]
    pub u_range: Option<String>,

    /// Number of sweep points [default: 121].
    #[arg(long, value_name = "K")]
    pub points: Option<usize>,

    #[command(flatten)]
    pub policy: PolicyArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct AsymCompareArgs {
    #[command(flatten)]
    pub nominal: NominalArgs,

    /// Asymmetric margins a,b,c,d of the fixed comparison box (required).
    #[arg(long, value_name = "A,B,C,D")]
    pub asym: Option<String>,

    /// Symmetric-margin range lo:hi to sweep [default: 0:0.12].
    #[arg(long, value_name = "LO:HI")]
    pub u_range: Option<String>,

    /// Number of sweep points [default: 121].
    #[arg(long, value_name = "K")]
    pub points: Option<usize>,

    #[command(flatten)]
    pub policy: PolicyArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Chi2Args {
    #[command(flatten)]
    pub nominal: NominalArgs,

    /// Fock cutoffs: an inclusive range "3..10" or a comma list "3,5,7"
    /// [default: 3..10].
    #[arg(long, value_name = "SPEC")]
    pub cutoffs: Option<String>,
}
