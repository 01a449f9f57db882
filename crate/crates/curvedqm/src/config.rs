//! Command-line flags and their validation into a [`JobConfig`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use curvedqm_core::rational::{ExtensionSpec, ExtensionType};
use curvedqm_core::{Error, SystemKind, SystemSpec};

use crate::verify::Group;
use crate::AppError;

#[derive(Parser, Debug)]
#[command(name = "curvedqm")]
#[command(about = "Oscillator and Kepler-Coulomb problems in constant-curvature spaces")]
#[command(version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form bound-state energies
    Spectrum {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        extension: ExtensionArgs,
        /// Maximum number of levels
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Potentials, wavefunctions and superpotentials on a radial grid
    Sample {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        extension: ExtensionArgs,
        /// Radial quantum number of the sampled state
        #[arg(long = "n-r", default_value_t = 0, allow_hyphen_values = true)]
        n_r: i64,
        /// First radius (default: a small fraction of the state scale)
        #[arg(long = "r-min", allow_hyphen_values = true)]
        r_min: Option<f64>,
        /// Last radius (default: inside the domain, several state scales out)
        #[arg(long = "r-max", allow_hyphen_values = true)]
        r_max: Option<f64>,
        /// Number of radii
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the verification suite (built-in matrix, or one user system)
    Verify {
        #[command(flatten)]
        system: OptionalSystemArgs,
        #[command(flatten)]
        extension: ExtensionArgs,
        /// Restrict to a group of checks (repeatable)
        #[arg(long = "group")]
        groups: Vec<Group>,
        /// Omit the timestamp so that reruns are byte-identical
        #[arg(long)]
        reproducible: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write the formula-to-code concordance table
    Concordance {
        /// Output file (stdout when absent)
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Nlho,
    Nlkc,
}

impl From<KindArg> for SystemKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Nlho => SystemKind::Oscillator,
            KindArg::Nlkc => SystemKind::Coulomb,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    /// System: nlho (oscillator) or nlkc (Kepler-Coulomb)
    #[arg(long)]
    pub kind: KindArg,
    /// Dimension d >= 2
    #[arg(long)]
    pub d: u32,
    /// Angular momentum l >= 0
    #[arg(long)]
    pub l: u32,
    /// Oscillator coupling
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Kepler-Coulomb coupling
    #[arg(long = "Q", allow_hyphen_values = true)]
    pub q: Option<f64>,
    /// Curvature (negative: sphere, positive: hyperbolic space)
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: f64,
}

/// System flags that are all optional (the verify command falls back to
/// its built-in matrix when none are given).
#[derive(Args, Debug, Clone, Default)]
pub struct OptionalSystemArgs {
    /// System: nlho (oscillator) or nlkc (Kepler-Coulomb)
    #[arg(long)]
    pub kind: Option<KindArg>,
    /// Dimension d >= 2
    #[arg(long)]
    pub d: Option<u32>,
    /// Angular momentum l >= 0
    #[arg(long)]
    pub l: Option<u32>,
    /// Oscillator coupling
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Kepler-Coulomb coupling
    #[arg(long = "Q", allow_hyphen_values = true)]
    pub q: Option<f64>,
    /// Curvature (negative: sphere, positive: hyperbolic space)
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ExtensionArgs {
    /// Rational extension type: I, II or III
    #[arg(long = "ext-type")]
    pub ext_type: Option<ExtensionType>,
    /// Degree of the denominator polynomial
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (stdout when absent)
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Sampling grid of the sample command.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleGrid {
    pub n_r: i64,
    pub r_min: f64,
    pub r_max: f64,
    pub points: usize,
}

/// A validated job.
#[derive(Clone, Debug, PartialEq)]
pub enum JobConfig {
    Spectrum { system: SystemSpec, extension: Option<ExtensionSpec>, count: usize, output: OutputArgs },
    Sample { system: SystemSpec, extension: Option<ExtensionSpec>, grid: SampleGrid, output: OutputArgs },
    Verify { target: VerifyTarget, groups: Vec<Group>, reproducible: bool, output: OutputArgs },
    Concordance { output: Option<PathBuf> },
}

/// What the verify command checks.
#[derive(Clone, Debug, PartialEq)]
pub enum VerifyTarget {
    DefaultMatrix,
    System(SystemSpec),
    /// A user extension, or the reason it was rejected.
    Extension(SystemSpec, Result<ExtensionSpec, String>),
}

impl PartialEq for OutputArgs {
    fn eq(&self, other: &Self) -> bool {
        self.format == other.format && self.output == other.output
    }
}

fn bad(msg: impl Into<String>) -> AppError {
    AppError::Config(msg.into())
}

impl SystemArgs {
    fn build(&self) -> Result<SystemSpec, AppError> {
        system_from_parts(self.kind, self.d, self.l, self.beta, self.q, self.lambda)
    }
}

fn system_from_parts(
    kind: KindArg,
    d: u32,
    l: u32,
    beta: Option<f64>,
    q: Option<f64>,
    lambda: f64,
) -> Result<SystemSpec, AppError> {
    let kind = SystemKind::from(kind);
    let coupling = match (kind, beta, q) {
        (SystemKind::Oscillator, Some(b), None) => b,
        (SystemKind::Coulomb, None, Some(q)) => q,
        (SystemKind::Oscillator, _, Some(_)) => return Err(bad("--Q applies to --kind nlkc, not nlho")),
        (SystemKind::Coulomb, Some(_), _) => return Err(bad("--beta applies to --kind nlho, not nlkc")),
        (SystemKind::Oscillator, None, None) => return Err(bad("--kind nlho needs --beta")),
        (SystemKind::Coulomb, None, None) => return Err(bad("--kind nlkc needs --Q")),
    };
    SystemSpec::new(kind, lambda, d, l as i32, coupling).map_err(|e| bad(e.to_string()))
}

/// Extension from flags: `None` without `--ext-type`; flag-level
/// inconsistencies are configuration errors, violated admissibility
/// inequalities are returned as the inner `Err`.
fn extension_from_args(
    system: &SystemSpec,
    args: &ExtensionArgs,
) -> Result<Option<Result<ExtensionSpec, String>>, AppError> {
    let (ty, m) = match (args.ext_type, args.m) {
        (None, None) => return Ok(None),
        (None, Some(_)) => return Err(bad("--m needs --ext-type")),
        (Some(_), None) => return Err(bad("--ext-type needs --m")),
        (Some(t), Some(m)) => (t, m),
    };
    if ty == ExtensionType::III && m % 2 == 1 {
        return Err(bad(format!("type III extensions need an even m (got m = {m})")));
    }
    match ExtensionSpec::new(*system, ty, m) {
        Ok(e) => Ok(Some(Ok(e))),
        Err(Error::ExtensionInadmissible(reason)) => Ok(Some(Err(reason))),
        Err(e) => Err(bad(e.to_string())),
    }
}

fn required_extension(system: &SystemSpec, args: &ExtensionArgs) -> Result<Option<ExtensionSpec>, AppError> {
    match extension_from_args(system, args)? {
        None => Ok(None),
        Some(Ok(e)) => Ok(Some(e)),
        Some(Err(reason)) => Err(AppError::Inadmissible(reason)),
    }
}

/// Default sampling interval: inside the radial domain, out to several
/// state scales.
fn default_radii(system: &SystemSpec) -> (f64, f64) {
    let scale = system.length_scale();
    match system.radial_domain().r_max {
        Some(max) => ((0.01 * scale).min(0.01 * max), (8.0 * scale).min(0.99 * max)),
        None => (0.01 * scale, 8.0 * scale),
    }
}

impl JobConfig {
    /// Validates the parsed flags.
    pub fn from_cli(cli: Cli) -> Result<JobConfig, AppError> {
        match cli.command {
            Command::Spectrum { system, extension, count, output } => {
                let system = system.build()?;
                let extension = required_extension(&system, &extension)?;
                Ok(JobConfig::Spectrum { system, extension, count, output })
            }
            Command::Sample { system, extension, n_r, r_min, r_max, points, output } => {
                let system = system.build()?;
                let extension = required_extension(&system, &extension)?;
                let (lo, hi) = default_radii(&system);
                let (r_min, r_max) = (r_min.unwrap_or(lo), r_max.unwrap_or(hi));
                if points == 0 {
                    return Err(bad("--points must be positive"));
                }
                if !(r_min.is_finite() && r_max.is_finite()) || r_min <= 0.0 || r_max < r_min {
                    return Err(bad(format!("radial grid [{r_min}, {r_max}] must satisfy 0 < r-min <= r-max")));
                }
                if !system.radial_domain().contains(r_max) {
                    return Err(bad(format!(
                        "r-max = {r_max} lies outside the radial domain (0, {})",
                        system.radial_domain().upper()
                    )));
                }
                if points > 1 && r_max == r_min {
                    return Err(bad("r-min = r-max needs --points 1"));
                }
                let grid = SampleGrid { n_r, r_min, r_max, points };
                Ok(JobConfig::Sample { system, extension, grid, output })
            }
            Command::Verify { system, extension, groups, reproducible, output } => {
                let groups = if groups.is_empty() {
                    Group::ALL.to_vec()
                } else {
                    let mut g = groups;
                    g.sort();
                    g.dedup();
                    g
                };
                let given = system.kind.is_some()
                    || system.d.is_some()
                    || system.l.is_some()
                    || system.beta.is_some()
                    || system.q.is_some()
                    || system.lambda.is_some();
                let target = if !given {
                    if extension.ext_type.is_some() || extension.m.is_some() {
                        return Err(bad("extension flags need a system (--kind, --d, --l, --beta/--Q, --lambda)"));
                    }
                    VerifyTarget::DefaultMatrix
                } else {
                    let (Some(kind), Some(d), Some(l), Some(lambda)) = (system.kind, system.d, system.l, system.lambda)
                    else {
                        return Err(bad("a user system needs --kind, --d, --l, --lambda and its coupling"));
                    };
                    let spec = system_from_parts(kind, d, l, system.beta, system.q, lambda)?;
                    match extension_from_args(&spec, &extension)? {
                        None => VerifyTarget::System(spec),
                        Some(ext) => VerifyTarget::Extension(spec, ext),
                    }
                };
                Ok(JobConfig::Verify { target, groups, reproducible, output })
            }
            Command::Concordance { output } => Ok(JobConfig::Concordance { output }),
        }
    }
}
