//! Command-line front end.
//!
//! Exit codes: 0 success, 1 configuration or domain error, 2 I/O error,
//! 3 no bound mode, 4 physical singularity, 5 numeric phase outside the
//! configured tolerance.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::config::{self, RunConfig};
use crate::deit::{kerr_at_frequency, max_gas_temperature, xpm_phase_shift, FrequencyUnit};
use crate::dispersion::{find_low_loss_frequency, linear_grid, sweep, sweep_point, Polarization};
use crate::error::Error;
use crate::output::{format_number, write_sweep_csv};
use crate::propagation::{propagate_pair, walkthrough_collision, write_envelope_csv, PropagationConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_NO_BOUND_MODE: i32 = 3;
pub const EXIT_SINGULARITY: i32 = 4;
pub const EXIT_TOLERANCE: i32 = 5;

pub const KERR_HEADER: &str = "omega_norm,chi_a,phi_b,status";
pub const TEMPERATURE_HEADER: &str = "convention,delta,v_max,T_max,selected";

#[derive(Debug, Parser)]
#[command(name = "polariton-lab", version, about = "Low-loss surface polaritons and cross-phase modulation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the surface mode over the configured band.
    Sweep(CommonArgs),
    /// Locate the frequency of least absorption.
    FindOmega0(CommonArgs),
    /// Kerr coefficient and phase shift over the configured band.
    Kerr(CommonArgs),
    /// Simulate the two-pulse collision and compare with the analytic phase.
    Propagate(CommonArgs),
    /// Doppler limit on the gas temperature.
    Temperature(CommonArgs),
    /// Regenerate figure data from the bundled parameter set.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// TOML run configuration.
    #[arg(short, long)]
    pub config: PathBuf,
    #[command(flatten)]
    pub overrides: Overrides,
}

#[derive(Debug, Clone, Args)]
pub struct ReproduceArgs {
    pub target: Figure,
    /// Replaces the bundled parameter set.
    #[arg(short, long)]
    pub config: Option<PathBuf>,
    #[command(flatten)]
    pub overrides: Overrides,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Overrides {
    /// Output file or directory; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Number of sweep points.
    #[arg(long)]
    pub points: Option<usize>,
    /// Surface-mode polarization (tm or te).
    #[arg(long)]
    pub polarization: Option<Polarization>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    /// Absorption, confinement and mode length.
    Fig2,
    /// Energy fractions.
    Fig3,
    /// Kerr coefficient and phase shift.
    Fig6,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("relative deviation {deviation:e} exceeds tolerance {tolerance:e}")]
    Tolerance { deviation: f64, tolerance: f64 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::NoBoundMode { .. }) => EXIT_NO_BOUND_MODE,
            CliError::Core(Error::Singularity(_)) => EXIT_SINGULARITY,
            CliError::Core(_) => EXIT_CONFIG,
            CliError::Io { .. } => EXIT_IO,
            CliError::Tolerance { .. } => EXIT_TOLERANCE,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

fn polarization(cfg: &RunConfig, o: &Overrides) -> Polarization {
    o.polarization.or_else(|| cfg.sweep.map(|s| s.polarization)).unwrap_or(Polarization::TM)
}

fn band_grid(cfg: &RunConfig, o: &Overrides) -> CliResult<Vec<f64>> {
    let iface = cfg.interface()?;
    let s = cfg.sweep()?;
    let (lo, hi) = s.band(iface.nimm.omega_e)?;
    let points = o.points.unwrap_or(s.points);
    if points == 0 {
        return Err(Error::Config("sweep needs at least one point".into()).into());
    }
    Ok(linear_grid(lo, hi, points))
}

/// Sweep CSV for the configured band.
pub fn cmd_sweep(cfg: &RunConfig, o: &Overrides) -> CliResult<String> {
    let iface = cfg.interface()?;
    let grid = band_grid(cfg, o)?;
    let rows = sweep(&iface, polarization(cfg, o), &grid, cfg.sweep()?.wavelength)?;
    let mut buf = Vec::new();
    write_sweep_csv(&mut buf, &rows).expect("writing to memory");
    Ok(String::from_utf8(buf).expect("ascii output"))
}

/// One-line report of the least-absorption frequency.
pub fn cmd_find_omega0(cfg: &RunConfig, o: &Overrides) -> CliResult<String> {
    let iface = cfg.interface()?;
    let s = cfg.sweep()?;
    let pol = polarization(cfg, o);
    let band = s.band(iface.nimm.omega_e)?;
    let omega0 = find_low_loss_frequency(&iface, pol, band)?;
    let row = sweep_point(omega0, &iface, pol, s.wavelength);
    Ok(format!(
        "omega0_norm={},kappa={},zeta1_over_lambda={},Lz_over_lambda={},status={}\n",
        format_number(row.omega_norm),
        format_number(row.kappa),
        format_number(row.zeta1_over_lambda),
        format_number(row.lz_over_lambda),
        row.status.as_str(),
    ))
}

fn kerr_status(e: &Error) -> Option<&'static str> {
    match e {
        Error::NoBoundMode { .. } => Some("no_bound_mode"),
        Error::Singularity(_) => Some("singular"),
        Error::Domain(_) => Some("out_of_domain"),
        _ => None,
    }
}

/// Kerr coefficient and phase shift CSV over the configured band.
pub fn cmd_kerr(cfg: &RunConfig, o: &Overrides) -> CliResult<String> {
    let iface = cfg.interface()?;
    let pol = polarization(cfg, o);
    let deit = cfg.deit()?;
    let scenario = deit.scenario(&iface, pol)?;
    let collision = cfg.collision()?.setup(|_| Ok(0.0))?;
    xpm_phase_shift(&collision)?;
    let grid = band_grid(cfg, o)?;
    let rows: Vec<_> =
        grid.par_iter().map(|&w| kerr_at_frequency(w, &iface, pol, &scenario, &collision, deit.spot_width)).collect();
    let mut out = format!("{KERR_HEADER}\n");
    for (w, row) in grid.iter().zip(rows) {
        let omega_norm = format_number(w / iface.nimm.omega_e);
        match row {
            Ok(p) => {
                writeln!(out, "{omega_norm},{},{},ok", format_number(p.chi_a), format_number(p.phi_b)).unwrap();
            }
            Err(e) => match kerr_status(&e) {
                Some(status) => writeln!(out, "{omega_norm},nan,nan,{status}").unwrap(),
                None => return Err(e.into()),
            },
        }
    }
    Ok(out)
}

/// Collision setup with χ_a from the config or from the operating point.
fn collision_setup(cfg: &RunConfig, pol: Polarization) -> CliResult<crate::deit::CollisionSetup> {
    let section = cfg.collision()?;
    let setup = section.setup(|base| {
        xpm_phase_shift(base)?;
        let iface = cfg.interface()?;
        let deit = cfg.deit()?;
        let scenario = deit.scenario(&iface, pol)?;
        Ok(kerr_at_frequency(deit.omega(&iface), &iface, pol, &scenario, base, deit.spot_width)?.chi_a)
    })?;
    Ok(setup)
}

/// Numeric collision against the analytic phase formulas.
#[derive(Debug, Clone, PartialEq)]
pub struct PropagateOutcome {
    pub report: String,
    pub phi_numeric: f64,
    pub phi_exact: f64,
    pub deviation: f64,
    pub tolerance: f64,
}

impl PropagateOutcome {
    pub fn check(&self) -> CliResult<()> {
        if self.deviation > self.tolerance || self.deviation.is_nan() {
            return Err(CliError::Tolerance { deviation: self.deviation, tolerance: self.tolerance });
        }
        Ok(())
    }
}

pub fn cmd_propagate(cfg: &RunConfig, o: &Overrides) -> CliResult<PropagateOutcome> {
    let pol = polarization(cfg, o);
    let p = cfg.propagation()?.clone();
    let setup = collision_setup(cfg, pol)?;
    let analytic = xpm_phase_shift(&setup)?;
    let run = walkthrough_collision(&setup, p.shape, p.dx, p.dt)?;
    let pcfg = PropagationConfig { g_spm: p.g_spm, kappa: p.kappa, snapshot_every: p.snapshot_every, ..run.config };
    let result = propagate_pair(&run.a, &run.b, &pcfg)?;
    let numeric = result.phase_at_centroid_b()?;

    if let (Some(dir), true) = (&p.snapshot_dir, p.snapshot_every > 0) {
        fs::create_dir_all(dir).map_err(io_error(dir))?;
        for s in &result.snapshots {
            for (label, state) in [("a", &s.a), ("b", &s.b)] {
                let path = dir.join(format!("snapshot_{:06}_{label}.csv", s.step));
                let mut buf = Vec::new();
                write_envelope_csv(&mut buf, state).expect("writing to memory");
                fs::write(&path, buf).map_err(io_error(&path))?;
            }
        }
    }

    let deviation = if analytic.phi_exact == 0.0 {
        numeric.abs()
    } else {
        ((numeric - analytic.phi_exact) / analytic.phi_exact).abs()
    };
    let report = format!(
        "phi_numeric={}\nphi_exact={}\nphi_walkthrough={}\ndeviation={}\ntolerance={}\nchi_a={}\ng_xpm={}\nsteps={}\n",
        format_number(numeric),
        format_number(analytic.phi_exact),
        format_number(analytic.phi_walkthrough),
        format_number(deviation),
        format_number(p.tolerance),
        format_number(setup.chi_a),
        format_number(run.config.g_xpm),
        result.steps,
    );
    Ok(PropagateOutcome {
        report,
        phi_numeric: numeric,
        phi_exact: analytic.phi_exact,
        deviation,
        tolerance: p.tolerance,
    })
}

/// Temperature bound under both readings of the detuning.
pub fn cmd_temperature(cfg: &RunConfig, _o: &Overrides) -> CliResult<String> {
    let d = cfg.deit()?;
    let mut out = format!("{TEMPERATURE_HEADER}\n");
    for unit in [FrequencyUnit::Angular, FrequencyUnit::Ordinary] {
        let delta = unit.to_angular(d.detuning);
        let bound = max_gas_temperature(d.wavelength, delta, d.atom_mass)?;
        writeln!(
            out,
            "{},{},{},{},{}",
            unit.as_str(),
            format_number(delta),
            format_number(bound.v_max),
            format_number(bound.t_max),
            unit == d.frequency_unit,
        )
        .unwrap();
    }
    Ok(out)
}

fn emit(content: &str, cfg: &RunConfig, o: &Overrides) -> CliResult<()> {
    match o.output.as_ref().or(cfg.output.as_ref()) {
        Some(path) => fs::write(path, content).map_err(io_error(path)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes()).map_err(io_error(Path::new("<stdout>")))
        }
    }
}

fn load(path: &Path) -> CliResult<RunConfig> {
    Ok(config::load(path).map_err(io_error(path))??)
}

/// Execute a parsed command line.
pub fn execute(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Reproduce(r) => {
            let cfg = match &r.config {
                Some(path) => load(path)?,
                None => RunConfig::bundled(),
            };
            let content = match r.target {
                Figure::Fig2 | Figure::Fig3 => cmd_sweep(&cfg, &r.overrides)?,
                Figure::Fig6 => cmd_kerr(&cfg, &r.overrides)?,
            };
            emit(&content, &cfg, &r.overrides)
        }
        Command::Propagate(a) => {
            let cfg = load(&a.config)?;
            let outcome = cmd_propagate(&cfg, &a.overrides)?;
            emit(&outcome.report, &cfg, &a.overrides)?;
            outcome.check()
        }
        Command::Sweep(a) | Command::FindOmega0(a) | Command::Kerr(a) | Command::Temperature(a) => {
            let cfg = load(&a.config)?;
            let content = match &cli.command {
                Command::Sweep(_) => cmd_sweep(&cfg, &a.overrides)?,
                Command::FindOmega0(_) => cmd_find_omega0(&cfg, &a.overrides)?,
                Command::Kerr(_) => cmd_kerr(&cfg, &a.overrides)?,
                _ => cmd_temperature(&cfg, &a.overrides)?,
            };
            emit(&content, &cfg, &a.overrides)
        }
    }
}

/// Parse `args`, run, report errors on stderr and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
