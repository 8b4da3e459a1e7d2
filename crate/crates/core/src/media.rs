//! Constitutive models for the two half-spaces.
//!
//! The upper half-space (z > 0) is a non-dispersive dielectric. The lower
//! half-space (z < 0) is a negative-index metamaterial whose permittivity and
//! permeability each follow a Drude form
//!
//! ```text
//! f(ω) = f_b − ω_p² / (ω (ω + iγ))
//! ```
//!
//! with the `Im f ≥ 0` sign convention for absorption. All frequencies are
//! angular frequencies in rad/s.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_positive, Error, Result};

/// Lossless, dispersionless dielectric occupying z > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniformMedium {
    /// Relative permittivity ε₁.
    pub eps1: f64,
    /// Relative permeability μ₁.
    pub mu1: f64,
}

impl UniformMedium {
    pub fn new(eps1: f64, mu1: f64) -> Result<Self> {
        let medium = Self { eps1, mu1 };
        medium.validate()?;
        Ok(medium)
    }

    pub fn vacuum() -> Self {
        Self { eps1: 1.0, mu1: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("eps1", self.eps1)?;
        ensure_positive("mu1", self.mu1)
    }

    /// The same medium with the roles of ε and μ exchanged.
    pub fn dual(&self) -> Self {
        Self { eps1: self.mu1, mu1: self.eps1 }
    }
}

/// Drude-type negative-index metamaterial occupying z < 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrudeMedium {
    /// Background permittivity ε_b.
    pub eps_b: f64,
    /// Background permeability μ_b.
    pub mu_b: f64,
    /// Electric plasma frequency ω_e, rad/s.
    pub omega_e: f64,
    /// Electric decay rate γ_e, rad/s.
    pub gamma_e: f64,
    /// Magnetic plasma frequency ω_m, rad/s.
    pub omega_m: f64,
    /// Magnetic decay rate γ_m, rad/s.
    pub gamma_m: f64,
}

impl DrudeMedium {
    pub fn new(eps_b: f64, mu_b: f64, omega_e: f64, gamma_e: f64, omega_m: f64, gamma_m: f64) -> Result<Self> {
        let medium = Self { eps_b, mu_b, omega_e, gamma_e, omega_m, gamma_m };
        medium.validate()?;
        Ok(medium)
    }

    /// Reference metamaterial: ω_e = 1.37×10¹⁶ s⁻¹, γ_e = 2.73×10¹³ s⁻¹,
    /// ω_m = ω_e/6, γ_m = γ_e/1000, ε_b = μ_b = 2.
    pub fn reference() -> Self {
        let omega_e = 1.37e16;
        let gamma_e = 2.73e13;
        Self { eps_b: 2.0, mu_b: 2.0, omega_e, gamma_e, omega_m: omega_e / 6.0, gamma_m: gamma_e / 1000.0 }
    }

    /// Same background and plasma frequencies with both decay rates set to zero.
    pub fn lossless(&self) -> Self {
        Self { gamma_e: 0.0, gamma_m: 0.0, ..*self }
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("omega_e", self.omega_e)?;
        let non_negative = [("omega_m", self.omega_m), ("gamma_e", self.gamma_e), ("gamma_m", self.gamma_m)];
        for (name, value) in non_negative {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(Error::Domain(format!("{name} must be >= 0, got {value}")));
            }
        }
        if !(self.eps_b >= 1.0 && self.eps_b.is_finite()) {
            return Err(Error::Domain(format!("eps_b must be >= 1, got {}", self.eps_b)));
        }
        if !(self.mu_b >= 1.0 && self.mu_b.is_finite()) {
            return Err(Error::Domain(format!("mu_b must be >= 1, got {}", self.mu_b)));
        }
        Ok(())
    }

    /// The same medium with the electric and magnetic responses exchanged.
    pub fn dual(&self) -> Self {
        Self {
            eps_b: self.mu_b,
            mu_b: self.eps_b,
            omega_e: self.omega_m,
            gamma_e: self.gamma_m,
            omega_m: self.omega_e,
            gamma_m: self.gamma_e,
        }
    }
}

/// Which constitutive function an energy factor refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Electric,
    Magnetic,
}

/// Which half-space an energy factor refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Dielectric,
    Nimm,
}

fn drude(omega: f64, background: f64, plasma: f64, gamma: f64) -> Complex64 {
    Complex64::new(background, 0.0) - plasma * plasma / (omega * Complex64::new(omega, gamma))
}

/// `Re d(ω f)/dω` for the Drude form: `f_b + ω_p² Re[1/(ω + iγ)²]`.
fn drude_energy_factor(omega: f64, background: f64, plasma: f64, gamma: f64) -> f64 {
    let denom = Complex64::new(omega, gamma);
    background + (plasma * plasma / (denom * denom)).re
}

/// ε₂(ω) of the metamaterial.
pub fn permittivity_nimm(omega: f64, m: &DrudeMedium) -> Result<Complex64> {
    ensure_positive("omega", omega)?;
    Ok(drude(omega, m.eps_b, m.omega_e, m.gamma_e))
}

/// μ₂(ω) of the metamaterial.
pub fn permeability_nimm(omega: f64, m: &DrudeMedium) -> Result<Complex64> {
    ensure_positive("omega", omega)?;
    Ok(drude(omega, m.mu_b, m.omega_m, m.gamma_m))
}

/// Energy-density factor `f̃ = Re[∂(ω f)/∂ω]` for `f ∈ {ε, μ}` on either side.
///
/// The dielectric side is dispersionless so the factor is just ε₁ or μ₁. The
/// metamaterial side uses the closed-form derivative of the Drude expression.
pub fn energy_factor(
    kind: FieldKind,
    side: Side,
    omega: f64,
    dielectric: &UniformMedium,
    nimm: &DrudeMedium,
) -> Result<f64> {
    ensure_positive("omega", omega)?;
    Ok(match (side, kind) {
        (Side::Dielectric, FieldKind::Electric) => dielectric.eps1,
        (Side::Dielectric, FieldKind::Magnetic) => dielectric.mu1,
        (Side::Nimm, FieldKind::Electric) => drude_energy_factor(omega, nimm.eps_b, nimm.omega_e, nimm.gamma_e),
        (Side::Nimm, FieldKind::Magnetic) => drude_energy_factor(omega, nimm.mu_b, nimm.omega_m, nimm.gamma_m),
    })
}
