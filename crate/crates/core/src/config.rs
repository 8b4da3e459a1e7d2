//! TOML run configuration. Unknown keys are rejected.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::constants::RB87_MASS;
use crate::deit::{CollisionSetup, DeitScenario, FrequencyUnit};
use crate::dispersion::{solve_mode, InterfaceSpec, Polarization};
use crate::error::{Error, Result};
use crate::media::{DrudeMedium, UniformMedium};
use crate::propagation::PulseShape;

/// Parameter set shipped with the binary for `reproduce`.
pub const BUNDLED_CONFIG: &str = include_str!("../configs/reference.toml");

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub output: Option<PathBuf>,
    pub media: Option<MediaSection>,
    pub sweep: Option<SweepSection>,
    pub deit: Option<DeitSection>,
    pub collision: Option<CollisionSection>,
    pub propagation: Option<PropagationSection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MediaSection {
    pub eps1: f64,
    pub mu1: f64,
    pub eps_b: f64,
    pub mu_b: f64,
    pub omega_e: f64,
    pub gamma_e: f64,
    pub omega_m: f64,
    pub gamma_m: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    /// Lower end of the band, in units of ω_e.
    pub omega_min: f64,
    /// Upper end of the band, in units of ω_e.
    pub omega_max: f64,
    pub points: usize,
    #[serde(default = "default_polarization")]
    pub polarization: Polarization,
    /// Normalisation length for the ζ₁ and L_z columns, m.
    #[serde(default = "default_wavelength")]
    pub wavelength: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeitSection {
    /// How `detuning` and `rabi_control` are read.
    pub frequency_unit: FrequencyUnit,
    pub n1: f64,
    pub n3: f64,
    pub d24: f64,
    pub d15: f64,
    pub d35: f64,
    pub detuning: f64,
    pub rabi_control: f64,
    pub spot_width: f64,
    /// Operating frequency in units of ω_e.
    pub omega_norm: f64,
    /// Control z-wavenumber, 1/m. Defaults to Re k₁ at the operating frequency.
    pub kc: Option<f64>,
    /// Atomic layer thickness, m. Defaults to 1/kc.
    pub z0: Option<f64>,
    #[serde(default = "default_atom_mass")]
    pub atom_mass: f64,
    #[serde(default = "default_wavelength")]
    pub wavelength: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollisionSection {
    pub tau: f64,
    pub lx: f64,
    pub v_a0: f64,
    pub v_b0: f64,
    pub beta_a: f64,
    pub beta_b: f64,
    /// Defaults to the Kerr coefficient at the operating frequency.
    pub chi_a: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropagationSection {
    pub dx: f64,
    pub dt: Option<f64>,
    #[serde(default = "default_shape")]
    pub shape: PulseShape,
    #[serde(default)]
    pub g_spm: f64,
    #[serde(default)]
    pub kappa: f64,
    /// Largest accepted relative deviation from the analytic phase.
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub snapshot_every: usize,
    pub snapshot_dir: Option<PathBuf>,
}

fn default_polarization() -> Polarization {
    Polarization::TM
}

fn default_wavelength() -> f64 {
    780e-9
}

fn default_atom_mass() -> f64 {
    RB87_MASS
}

fn default_shape() -> PulseShape {
    PulseShape::Square
}

fn default_tolerance() -> f64 {
    0.05
}

fn missing(section: &str) -> Error {
    Error::Config(format!("missing [{section}] section"))
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn bundled() -> Self {
        Self::parse(BUNDLED_CONFIG).expect("bundled configuration is valid")
    }

    pub fn media(&self) -> Result<&MediaSection> {
        self.media.as_ref().ok_or_else(|| missing("media"))
    }

    pub fn sweep(&self) -> Result<&SweepSection> {
        self.sweep.as_ref().ok_or_else(|| missing("sweep"))
    }

    pub fn deit(&self) -> Result<&DeitSection> {
        self.deit.as_ref().ok_or_else(|| missing("deit"))
    }

    pub fn collision(&self) -> Result<&CollisionSection> {
        self.collision.as_ref().ok_or_else(|| missing("collision"))
    }

    pub fn propagation(&self) -> Result<&PropagationSection> {
        self.propagation.as_ref().ok_or_else(|| missing("propagation"))
    }

    pub fn interface(&self) -> Result<InterfaceSpec> {
        self.media()?.interface()
    }
}

/// Read a configuration file. I/O failures are returned separately so the
/// caller can distinguish them from parse errors.
pub fn load(path: &Path) -> std::result::Result<Result<RunConfig>, std::io::Error> {
    let text = std::fs::read_to_string(path)?;
    Ok(RunConfig::parse(&text))
}

impl MediaSection {
    pub fn interface(&self) -> Result<InterfaceSpec> {
        let dielectric = UniformMedium::new(self.eps1, self.mu1)?;
        let nimm = DrudeMedium::new(self.eps_b, self.mu_b, self.omega_e, self.gamma_e, self.omega_m, self.gamma_m)?;
        InterfaceSpec::new(dielectric, nimm)
    }
}

impl SweepSection {
    /// Band edges in rad/s.
    pub fn band(&self, omega_e: f64) -> Result<(f64, f64)> {
        if !(self.omega_min > 0.0 && self.omega_max > self.omega_min && self.omega_max.is_finite()) {
            return Err(Error::Config(format!(
                "sweep band [{}, {}] must satisfy 0 < omega_min < omega_max",
                self.omega_min, self.omega_max
            )));
        }
        Ok((self.omega_min * omega_e, self.omega_max * omega_e))
    }
}

impl DeitSection {
    pub fn delta(&self) -> f64 {
        self.frequency_unit.to_angular(self.detuning)
    }

    pub fn omega_c(&self) -> f64 {
        self.frequency_unit.to_angular(self.rabi_control)
    }

    /// Operating frequency in rad/s.
    pub fn omega(&self, iface: &InterfaceSpec) -> f64 {
        self.omega_norm * iface.nimm.omega_e
    }

    /// Scenario with probe wavenumbers and defaults taken from the mode at the
    /// operating frequency.
    pub fn scenario(&self, iface: &InterfaceSpec, pol: Polarization) -> Result<DeitScenario> {
        let kp = solve_mode(self.omega(iface), iface, pol)?.k1.re;
        let kc = self.kc.unwrap_or(kp);
        let z0 = match self.z0 {
            Some(z0) => z0,
            None if kc > 0.0 => 1.0 / kc,
            None => return Err(Error::Config("z0 defaults to 1/kc but kc is not positive".into())),
        };
        let s = DeitScenario {
            n1: self.n1,
            n3: self.n3,
            z0,
            d24: self.d24,
            d15: self.d15,
            d35: self.d35,
            delta: self.delta(),
            omega_c: self.omega_c(),
            kp_a: kp,
            kp_b: kp,
            kc,
        };
        s.validate()?;
        Ok(s)
    }
}

impl CollisionSection {
    /// Setup with `chi_a` taken from the section or, if absent, from `fallback`.
    pub fn setup(&self, fallback: impl FnOnce(&CollisionSetup) -> Result<f64>) -> Result<CollisionSetup> {
        let mut setup = CollisionSetup {
            tau: self.tau,
            lx: self.lx,
            v_a0: self.v_a0,
            v_b0: self.v_b0,
            beta_a: self.beta_a,
            beta_b: self.beta_b,
            chi_a: self.chi_a.unwrap_or(0.0),
        };
        setup.validate()?;
        if self.chi_a.is_none() {
            setup.chi_a = fallback(&setup)?;
        }
        Ok(setup)
    }
}
