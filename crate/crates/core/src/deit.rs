//! Double-EIT Kerr coupling between two slow surface-polariton pulses.
//!
//! Field strengths entering the dipole couplings are single-photon fields.
//! A photon of energy ħω spread over `L_z × w × v τ` has
//! `|E|² = ħω / (ε₀ ε₁ L_z w v τ)`. The couplings use the areal form
//! `|E|² w v τ = ħω / (ε₀ ε₁ L_z)`, i.e. the `1/√L_z` normalisation of the
//! interface mode profile. With that choice the slow-down parameter β is
//! dimensionless as written, and the Kerr coefficient becomes dimensionless
//! after division by the transverse spot width.
//!
//! Dipole orientation is averaged isotropically: `⟨|d·E|²⟩ = |d|²|E|²/3`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::{BOLTZMANN, EPSILON_0, HBAR};
use crate::dispersion::{mode_profile, solve_mode, InterfaceSpec, Polarization};
use crate::error::{ensure_positive, Error, Result};

/// Orientation average of `|d·E|²` relative to `|d|²|E|²`.
pub const DIPOLE_ORIENTATION_AVERAGE: f64 = 1.0 / 3.0;

/// How detuning and Rabi-frequency entries are to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrequencyUnit {
    /// Values are angular frequencies in rad/s.
    Angular,
    /// Values are cyclic frequencies in Hz and get multiplied by 2π.
    Ordinary,
}

impl FrequencyUnit {
    pub fn to_angular(self, value: f64) -> f64 {
        match self {
            FrequencyUnit::Angular => value,
            FrequencyUnit::Ordinary => 2.0 * PI * value,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FrequencyUnit::Angular => "angular",
            FrequencyUnit::Ordinary => "ordinary",
        }
    }
}

/// Atomic layer and drive parameters. Frequencies are in rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeitScenario {
    /// Density on level 1, 1/m³.
    pub n1: f64,
    /// Density on level 3, 1/m³.
    pub n3: f64,
    /// Thickness of the atomic layer above the interface, m.
    pub z0: f64,
    /// Dipole moments |d₂₄|, |d₁₅|, |d₃₅|, C·m.
    pub d24: f64,
    pub d15: f64,
    pub d35: f64,
    /// Probe detuning Δ, rad/s.
    pub delta: f64,
    /// Control Rabi frequency Ω_c, rad/s.
    pub omega_c: f64,
    /// Real z-wavenumbers of the probe modes a and b, 1/m.
    pub kp_a: f64,
    pub kp_b: f64,
    /// z-wavenumber of the control field, 1/m.
    pub kc: f64,
}

impl DeitScenario {
    pub fn validate(&self) -> Result<()> {
        let non_negative = [
            ("n1", self.n1),
            ("n3", self.n3),
            ("z0", self.z0),
            ("d24", self.d24),
            ("d15", self.d15),
            ("d35", self.d35),
        ];
        for (name, value) in non_negative {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(Error::Domain(format!("{name} must be >= 0, got {value}")));
            }
        }
        if self.omega_c == 0.0 {
            return Err(Error::Singularity("control Rabi frequency is zero".into()));
        }
        if self.delta == 0.0 {
            return Err(Error::Singularity("detuning is zero".into()));
        }
        if !(self.omega_c.is_finite() && self.delta.is_finite()) {
            return Err(Error::Domain("detuning and Rabi frequency must be finite".into()));
        }
        Ok(())
    }

    /// Same scenario with both probe z-wavenumbers set to `kp`.
    pub fn with_probe_wavenumber(&self, kp: f64) -> Self {
        Self { kp_a: kp, kp_b: kp, ..*self }
    }
}

/// Classical field of a one-photon pulse in the interface mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinglePhotonField {
    /// Peak electric-field amplitude, V/m.
    pub amplitude: f64,
    /// Carrier angular frequency, rad/s.
    pub omega: f64,
    /// Permittivity of the host dielectric.
    pub eps1: f64,
    /// Mode length L_z, m.
    pub mode_length: f64,
    /// Transverse (y) width, m.
    pub spot_width: f64,
    /// Spatial pulse length v τ, m.
    pub pulse_length: f64,
}

impl SinglePhotonField {
    pub fn new(omega: f64, eps1: f64, mode_length: f64, spot_width: f64, pulse_length: f64) -> Result<Self> {
        ensure_positive("omega", omega)?;
        ensure_positive("eps1", eps1)?;
        ensure_positive("mode_length", mode_length)?;
        ensure_positive("spot_width", spot_width)?;
        ensure_positive("pulse_length", pulse_length)?;
        let volume = mode_length * spot_width * pulse_length;
        let amplitude = (HBAR * omega / (EPSILON_0 * eps1 * volume)).sqrt();
        Ok(Self { amplitude, omega, eps1, mode_length, spot_width, pulse_length })
    }

    pub fn mode_volume(&self) -> f64 {
        self.mode_length * self.spot_width * self.pulse_length
    }

    /// `ε₀ ε₁ |E|² V`, which equals ħω by construction.
    pub fn pulse_energy(&self) -> f64 {
        EPSILON_0 * self.eps1 * self.amplitude * self.amplitude * self.mode_volume()
    }

    /// `|E|²` integrated over the x–y footprint, V²: `ħω / (ε₀ ε₁ L_z)`.
    pub fn areal_intensity(&self) -> f64 {
        self.amplitude * self.amplitude * self.spot_width * self.pulse_length
    }

    /// Orientation-averaged `⟨|d·E|²⟩` with the areal field, J²·m².
    fn dipole_coupling(&self, dipole: f64) -> f64 {
        DIPOLE_ORIENTATION_AVERAGE * dipole * dipole * self.areal_intensity()
    }
}

/// `Φ(u) = e^{−u} sinh(u)/u = (1 − e^{−2u})/(2u)`, with `Φ(0) = 1`.
pub fn phi(u: f64) -> Result<f64> {
    if u.is_nan() || u < 0.0 || u.is_infinite() {
        return Err(Error::Domain(format!("overlap argument must be finite and >= 0, got {u}")));
    }
    if u == 0.0 {
        return Ok(1.0);
    }
    Ok(-(-2.0 * u).exp_m1() / (2.0 * u))
}

/// Dimensionless cross-Kerr coefficient χ_a acting on pulse b.
///
/// ```text
/// χ_a = 2π n₁ z₀ Φ[(k_a + k_b − k_c) z₀] ⟨|d₂₄·E_b|²⟩⟨|d₁₅·E_a|²⟩ / (ħ⁴ v_b0 |Ω_c|² Δ w)
/// ```
///
/// where `w` is the transverse spot width. The sign follows Δ.
pub fn kerr_coefficient(s: &DeitScenario, fa: &SinglePhotonField, fb: &SinglePhotonField, v_b0: f64) -> Result<f64> {
    s.validate()?;
    ensure_positive("v_b0", v_b0)?;
    let overlap = phi((s.kp_a + s.kp_b - s.kc) * s.z0)?;
    let width = (fa.spot_width * fb.spot_width).sqrt();
    let couplings = fb.dipole_coupling(s.d24) * fa.dipole_coupling(s.d15);
    let hbar2 = HBAR * HBAR;
    let prefactor = 2.0 * PI * s.n1 * s.z0 / (v_b0 * s.omega_c * s.omega_c * s.delta * width);
    Ok(prefactor * overlap * couplings / (hbar2 * hbar2))
}

/// Slow-down parameter of pulse b:
/// `β_b = 2π n₃ z₀ Φ[(k_b − k_c) z₀] ⟨|d₃₅·E_b|²⟩ / (ħ² |Ω_c|²)`.
pub fn slowdown_beta(s: &DeitScenario, fb: &SinglePhotonField) -> Result<f64> {
    s.validate()?;
    let overlap = phi((s.kp_b - s.kc) * s.z0)?;
    Ok(2.0 * PI * s.n3 * s.z0 * overlap * fb.dipole_coupling(s.d35) / (HBAR * HBAR * s.omega_c * s.omega_c))
}

/// `v = v₀ / (1 + β)` for `v₀ > 0`, `β ≥ 0`.
pub fn group_velocity(v0: f64, beta: f64) -> f64 {
    debug_assert!(v0 > 0.0 && beta >= 0.0);
    v0 / (1.0 + beta)
}

/// Two-pulse collision in a medium of length `lx`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollisionSetup {
    /// Pulse duration τ, s.
    pub tau: f64,
    /// Medium length L_x, m.
    pub lx: f64,
    /// Group velocities without atoms, m/s.
    pub v_a0: f64,
    pub v_b0: f64,
    /// Slow-down parameters.
    pub beta_a: f64,
    pub beta_b: f64,
    /// Dimensionless Kerr coefficient χ_a.
    pub chi_a: f64,
}

impl CollisionSetup {
    pub fn v_a(&self) -> f64 {
        group_velocity(self.v_a0, self.beta_a)
    }

    pub fn v_b(&self) -> f64 {
        group_velocity(self.v_b0, self.beta_b)
    }

    /// `1/v_a − 1/v_b`, s/m.
    pub fn walkoff(&self) -> f64 {
        1.0 / self.v_a() - 1.0 / self.v_b()
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("tau", self.tau)?;
        ensure_positive("lx", self.lx)?;
        ensure_positive("v_a0", self.v_a0)?;
        ensure_positive("v_b0", self.v_b0)?;
        for (name, beta) in [("beta_a", self.beta_a), ("beta_b", self.beta_b)] {
            if !(beta >= 0.0 && beta.is_finite()) {
                return Err(Error::Domain(format!("{name} must be >= 0, got {beta}")));
            }
        }
        if !self.chi_a.is_finite() {
            return Err(Error::Domain("chi_a must be finite".into()));
        }
        Ok(())
    }

    /// XPM coupling per unit length seen by pulse b at unit normalised
    /// intensity of pulse a: `g = χ_a / (v_a0 τ)`, rad/m.
    pub fn xpm_coupling(&self) -> f64 {
        self.chi_a / (self.v_a0 * self.tau)
    }

    /// Medium length satisfying `L_x (1/v_a − 1/v_b) = 2τ` for these velocities.
    pub fn walkthrough_length(&self) -> f64 {
        2.0 * self.tau / self.walkoff()
    }
}

/// Cross-phase shift on pulse b after pulse a has been overtaken.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseShift {
    /// `χ_a / (v_a0 (1/v_a − 1/v_b))`.
    pub phi_exact: f64,
    /// `(L_x / 2τ) χ_a / v_a0`.
    pub phi_walkthrough: f64,
}

pub fn xpm_phase_shift(c: &CollisionSetup) -> Result<PhaseShift> {
    c.validate()?;
    let (v_a, v_b) = (c.v_a(), c.v_b());
    if v_a == v_b {
        return Err(Error::Singularity("equal group velocities: pulses never walk through".into()));
    }
    if v_b < v_a {
        return Err(Error::Domain(format!("pulse b ({v_b:e} m/s) must be faster than pulse a ({v_a:e} m/s)")));
    }
    Ok(PhaseShift {
        phi_exact: c.chi_a / (c.v_a0 * c.walkoff()),
        phi_walkthrough: c.lx / (2.0 * c.tau) * c.chi_a / c.v_a0,
    })
}

/// Doppler limit on the atomic gas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalBound {
    /// Largest admissible mean thermal speed, m/s.
    pub v_max: f64,
    /// Corresponding temperature, K.
    pub t_max: f64,
}

/// `v_max = 0.1 λ Δ / 2π`, `T_max = m v_max² / (2 k_B)`; Δ in rad/s.
pub fn max_gas_temperature(lambda: f64, delta: f64, atom_mass: f64) -> Result<ThermalBound> {
    ensure_positive("lambda", lambda)?;
    ensure_positive("delta", delta)?;
    ensure_positive("atom_mass", atom_mass)?;
    let v_max = 0.1 * lambda * delta / (2.0 * PI);
    Ok(ThermalBound { v_max, t_max: atom_mass * v_max * v_max / (2.0 * BOLTZMANN) })
}

/// Kerr coefficient and phase shift at one carrier frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KerrPoint {
    pub omega: f64,
    pub chi_a: f64,
    pub phi_b: f64,
    /// Mode length used for the single-photon fields, m.
    pub mode_length: f64,
    /// Probe z-wavenumber Re k₁, 1/m.
    pub kp: f64,
}

/// Evaluate χ_a and φ_b at carrier frequency `omega`, with L_z and the probe
/// z-wavenumbers taken from the interface mode. Pulse lengths use the slowed
/// velocities of `collision`; `collision.chi_a` is ignored.
pub fn kerr_at_frequency(
    omega: f64,
    iface: &InterfaceSpec,
    pol: Polarization,
    scenario: &DeitScenario,
    collision: &CollisionSetup,
    spot_width: f64,
) -> Result<KerrPoint> {
    let mode = solve_mode(omega, iface, pol)?;
    let profile = mode_profile(&mode, iface)?;
    if profile.deconfined {
        return Err(Error::NoBoundMode { omega });
    }
    let kp = mode.k1.re;
    let eps1 = iface.dielectric.eps1;
    let fa = SinglePhotonField::new(omega, eps1, profile.lz, spot_width, collision.v_a() * collision.tau)?;
    let fb = SinglePhotonField::new(omega, eps1, profile.lz, spot_width, collision.v_b() * collision.tau)?;
    let chi_a = kerr_coefficient(&scenario.with_probe_wavenumber(kp), &fa, &fb, collision.v_b0)?;
    let shift = xpm_phase_shift(&CollisionSetup { chi_a, ..*collision })?;
    Ok(KerrPoint { omega, chi_a, phi_b: shift.phi_exact, mode_length: profile.lz, kp })
}
