use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "unruh-fluid", version, about = "Circular-orbit detector response in a quasi-2D dipolar condensate")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// key=value or JSON file; explicit flags win over its entries
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Write output here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Worker threads for sweeps (0: one per core)
    #[arg(long, global = true, env = "UNRUH_FLUID_THREADS", default_value_t = 0)]
    pub threads: usize,

    /// Relative tolerance of the mode sum
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate f² and f over ζ
    Dispersion {
        #[command(flatten)]
        medium: MediumArgs,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Excitation and de-excitation rates
    Rate {
        #[command(flatten)]
        medium: MediumArgs,
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Cross-check every row against the smeared-delta oracle
        #[arg(long)]
        verify: bool,
    },
    /// Detailed-balance temperature over v
    Temperature {
        #[command(flatten)]
        medium: MediumArgs,
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long)]
        verify: bool,
    },
    /// Laboratory parameters to dimensionless inputs, as JSON
    MapPhysical(SetupArgs),
    /// Compare the mode sum with the independent oracles at one point
    Verify {
        #[command(flatten)]
        medium: MediumArgs,
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Also run the windowed time-domain oracle with this window
        #[arg(long, value_name = "T")]
        wightman: Option<f64>,
    },
}

#[derive(Debug, Args, Clone, Default)]
pub struct MediumArgs {
    /// Dipolar ratio R0 in [0, sqrt(pi/2)]
    #[arg(long, allow_hyphen_values = true)]
    pub r0: Option<f64>,
    /// Chemical-potential ratio A
    #[arg(long = "a", allow_hyphen_values = true)]
    pub a: Option<f64>,
}

#[derive(Debug, Args, Clone, Default)]
pub struct OrbitArgs {
    /// Orbit radius in units of hbar c0 / M*
    #[arg(long, allow_hyphen_values = true)]
    pub mtilde: Option<f64>,
    /// Orbital speed in units of c0
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<f64>,
    /// Detector gap R omega0 / c0
    #[arg(long, conflicts_with = "omega0_mstar", allow_hyphen_values = true)]
    pub etilde: Option<f64>,
    /// Detector gap in units of M*/hbar
    #[arg(long = "omega0-mstar", allow_hyphen_values = true)]
    pub omega0_mstar: Option<f64>,
}

#[derive(Debug, Args, Clone, Default)]
pub struct SweepArgs {
    /// [axis=]start:stop:points
    #[arg(long, alias = "zeta", value_name = "SPEC")]
    pub sweep: Option<String>,
    /// Log-spaced sweep points
    #[arg(long)]
    pub log: bool,
}

#[derive(Debug, Args, Clone, Default)]
pub struct SetupArgs {
    /// Boson mass, kg
    #[arg(long)]
    pub m_b: Option<f64>,
    /// Areal density, m^-2
    #[arg(long)]
    pub rho0: Option<f64>,
    /// Trap frequency, rad/s
    #[arg(long)]
    pub omega_z: Option<f64>,
    /// Scattering length, m
    #[arg(long, allow_hyphen_values = true)]
    pub a_c: Option<f64>,
    /// Dipole moment, J/T
    #[arg(long)]
    pub mu_m: Option<f64>,
    /// Detector coupling difference, J m^2
    #[arg(long, allow_hyphen_values = true)]
    pub g_minus: Option<f64>,
    /// Orbit radius, m
    #[arg(long)]
    pub radius: Option<f64>,
    /// Orbital angular velocity, rad/s
    #[arg(long)]
    pub omega_orbit: Option<f64>,
    /// Detector gap, rad/s
    #[arg(long)]
    pub omega0: Option<f64>,
}
