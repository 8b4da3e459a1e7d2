//! Interface surface-polariton dispersion, branch selection and mode profile.
//!
//! For a TM mode the complex propagation constant is
//!
//! ```text
//! K∥ = (ω/c) √( ε₂μ₂ (1 − η_ε/η_μ) / (1 − η_ε²) ),   η_ε = ε₂/ε₁, η_μ = μ₂/μ₁
//! ```
//!
//! and the TE mode follows by exchanging η_ε ↔ η_μ. The normal wavenumbers
//! come from `k_j² = K∥² − ω² ε_j μ_j / c²` with the branch chosen so the field
//! decays away from the interface on both sides.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{ensure_positive, Error, Result};
use crate::media::{energy_factor, permeability_nimm, permittivity_nimm, DrudeMedium, FieldKind, Side, UniformMedium};

/// Relative tolerance on the boundary-condition residual `|k₂/k₁ + η| / |η|`.
pub const BOUNDARY_TOLERANCE: f64 = 1e-8;
/// Relative tolerance on the normal-wavenumber residual of `k_j² = K∥² − ω²ε_jμ_j/c²`.
pub const NORMAL_RESIDUAL_TOLERANCE: f64 = 1e-10;
/// `|1 − η²|` below this is treated as the surface-plasmon pole.
pub const POLE_TOLERANCE: f64 = 1e-12;
/// Default number of coarse grid points scanned before golden-section refinement.
pub const DEFAULT_SCAN_POINTS: usize = 4096;
/// Relative width at which the golden-section refinement stops.
pub const GOLDEN_TOLERANCE: f64 = 1e-8;

/// Dielectric over metamaterial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InterfaceSpec {
    /// Region z > 0.
    pub dielectric: UniformMedium,
    /// Region z < 0.
    pub nimm: DrudeMedium,
}

impl InterfaceSpec {
    pub fn new(dielectric: UniformMedium, nimm: DrudeMedium) -> Result<Self> {
        dielectric.validate()?;
        nimm.validate()?;
        Ok(Self { dielectric, nimm })
    }

    /// Vacuum-like dielectric on the reference metamaterial.
    pub fn reference() -> Self {
        Self { dielectric: UniformMedium::vacuum(), nimm: DrudeMedium::reference() }
    }

    /// Interface with ε and μ exchanged in both media.
    pub fn dual(&self) -> Self {
        Self { dielectric: self.dielectric.dual(), nimm: self.nimm.dual() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarization {
    TM,
    TE,
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarization::TM => "TM",
            Polarization::TE => "TE",
        })
    }
}

impl FromStr for Polarization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "TM" => Ok(Polarization::TM),
            "TE" => Ok(Polarization::TE),
            other => Err(Error::Domain(format!("unknown polarization '{other}' (expected TM or TE)"))),
        }
    }
}

/// A bound interface mode at one real frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceMode {
    pub omega: f64,
    pub polarization: Polarization,
    /// `K∥ = k∥ + iκ`, 1/m.
    pub k_parallel: Complex64,
    /// Normal wavenumber in the dielectric, 1/m.
    pub k1: Complex64,
    /// Normal wavenumber in the metamaterial, 1/m.
    pub k2: Complex64,
    pub eta_eps: Complex64,
    pub eta_mu: Complex64,
    /// ε₂μ₂ at `omega`, kept for residual checks.
    pub eps_mu_nimm: Complex64,
    /// ε₁μ₁.
    pub eps_mu_dielectric: f64,
}

impl SurfaceMode {
    /// Propagation loss κ = Im K∥, 1/m.
    pub fn kappa(&self) -> f64 {
        self.k_parallel.im
    }

    /// η entering the boundary condition for this polarization.
    pub fn eta(&self) -> Complex64 {
        match self.polarization {
            Polarization::TM => self.eta_eps,
            Polarization::TE => self.eta_mu,
        }
    }

    /// `|k₂/k₁ + η| / |η|`.
    pub fn boundary_residual(&self) -> f64 {
        let eta = self.eta();
        (self.k2 / self.k1 + eta).norm() / eta.norm()
    }

    /// Relative residuals of `k_j² = K∥² − ω²ε_jμ_j/c²` for j = 1, 2, scaled by |K∥²|.
    pub fn normal_residuals(&self) -> (f64, f64) {
        let q2 = (self.omega / SPEED_OF_LIGHT).powi(2);
        let kk = self.k_parallel * self.k_parallel;
        let scale = kk.norm();
        let r1 = (self.k1 * self.k1 - (kk - q2 * self.eps_mu_dielectric)).norm() / scale;
        let r2 = (self.k2 * self.k2 - (kk - q2 * self.eps_mu_nimm)).norm() / scale;
        (r1, r2)
    }
}

/// Confinement and energy bookkeeping of a mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeProfile {
    /// Confinement length 1/Re k₁ in the dielectric, m (`+inf` when deconfined).
    pub zeta1: f64,
    /// Confinement length 1/Re k₂ in the metamaterial, m.
    pub zeta2: f64,
    /// Energy-weighted mode length, m.
    pub lz: f64,
    /// Dielectric contribution to `lz`, m.
    pub term_dielectric: f64,
    /// Metamaterial contribution to `lz`, m.
    pub term_nimm: f64,
    pub frac_dielectric: f64,
    pub frac_nimm: f64,
    /// True when either normal wavenumber has zero real part.
    pub deconfined: bool,
}

/// The pair (η_a, η_b) entering `K∥² = (ω/c)² ε₂μ₂ (1 − η_a/η_b)/(1 − η_a²)`.
fn ordered_etas(pol: Polarization, eta_eps: Complex64, eta_mu: Complex64) -> (Complex64, Complex64) {
    match pol {
        Polarization::TM => (eta_eps, eta_mu),
        Polarization::TE => (eta_mu, eta_eps),
    }
}

/// Principal root, sign-flipped so that the real part is non-negative.
/// On the imaginary axis the root with `Im ≥ 0` is kept.
fn decaying_root(z: Complex64) -> Complex64 {
    let r = z.sqrt();
    if r.re < 0.0 || (r.re == 0.0 && r.im < 0.0) {
        -r
    } else {
        r
    }
}

/// Complex propagation constant from the closed-form dispersion relation,
/// before any bound-mode checks. Re K∥ ≥ 0 by construction.
pub fn propagation_constant(omega: f64, iface: &InterfaceSpec, pol: Polarization) -> Result<Complex64> {
    ensure_positive("omega", omega)?;
    let eps2 = permittivity_nimm(omega, &iface.nimm)?;
    let mu2 = permeability_nimm(omega, &iface.nimm)?;
    let eta_eps = eps2 / iface.dielectric.eps1;
    let eta_mu = mu2 / iface.dielectric.mu1;
    k_parallel_from_etas(omega, eps2 * mu2, pol, eta_eps, eta_mu)
}

fn k_parallel_from_etas(
    omega: f64,
    eps_mu_nimm: Complex64,
    pol: Polarization,
    eta_eps: Complex64,
    eta_mu: Complex64,
) -> Result<Complex64> {
    let (eta_a, eta_b) = ordered_etas(pol, eta_eps, eta_mu);
    let denom = Complex64::new(1.0, 0.0) - eta_a * eta_a;
    if denom.norm() <= POLE_TOLERANCE * (1.0 + eta_a.norm_sqr()) {
        return Err(Error::Singularity(format!("1 - eta^2 vanishes at omega = {omega:e} rad/s ({pol})")));
    }
    if eta_b.norm() == 0.0 {
        return Err(Error::Singularity(format!(
            "eta in the numerator ratio vanishes at omega = {omega:e} rad/s ({pol})"
        )));
    }
    let q = omega / SPEED_OF_LIGHT;
    let k2 = q * q * eps_mu_nimm * (1.0 - eta_a / eta_b) / denom;
    Ok(decaying_root(k2))
}

/// Solve for the bound interface mode at `omega`.
pub fn solve_mode(omega: f64, iface: &InterfaceSpec, pol: Polarization) -> Result<SurfaceMode> {
    ensure_positive("omega", omega)?;
    let eps2 = permittivity_nimm(omega, &iface.nimm)?;
    let mu2 = permeability_nimm(omega, &iface.nimm)?;
    let eps_mu_nimm = eps2 * mu2;
    let eps_mu_dielectric = iface.dielectric.eps1 * iface.dielectric.mu1;
    let eta_eps = eps2 / iface.dielectric.eps1;
    let eta_mu = mu2 / iface.dielectric.mu1;

    let k_parallel = k_parallel_from_etas(omega, eps_mu_nimm, pol, eta_eps, eta_mu)?;
    if k_parallel.im < 0.0 {
        return Err(Error::NoBoundMode { omega });
    }

    let q2 = (omega / SPEED_OF_LIGHT).powi(2);
    let kk = k_parallel * k_parallel;
    let k1 = decaying_root(kk - q2 * eps_mu_dielectric);
    let k2 = decaying_root(kk - q2 * eps_mu_nimm);

    let mode =
        SurfaceMode { omega, polarization: pol, k_parallel, k1, k2, eta_eps, eta_mu, eps_mu_nimm, eps_mu_dielectric };
    let residual = mode.boundary_residual();
    if residual.is_nan() || residual > BOUNDARY_TOLERANCE {
        return Err(Error::NoBoundMode { omega });
    }
    Ok(mode)
}

fn confinement_length(k: Complex64) -> f64 {
    if k.re > 0.0 {
        1.0 / k.re
    } else {
        f64::INFINITY
    }
}

/// Confinement lengths, mode length and per-side energy fractions.
///
/// Each side contributes
/// `[f̃_a (1 + |k∥|²/|k_j|²) + (ω/c)² f̃_b |f_a|²/|k_j|²] ζ_j`, where `(f_a, f_b)` is
/// `(ε, μ)` for TM and `(μ, ε)` for TE.
pub fn mode_profile(mode: &SurfaceMode, iface: &InterfaceSpec) -> Result<ModeProfile> {
    let omega = mode.omega;
    let (dielectric, nimm) = match mode.polarization {
        Polarization::TM => (iface.dielectric, iface.nimm),
        Polarization::TE => (iface.dielectric.dual(), iface.nimm.dual()),
    };
    let a1 = energy_factor(FieldKind::Electric, Side::Dielectric, omega, &dielectric, &nimm)?;
    let b1 = energy_factor(FieldKind::Magnetic, Side::Dielectric, omega, &dielectric, &nimm)?;
    let a2 = energy_factor(FieldKind::Electric, Side::Nimm, omega, &dielectric, &nimm)?;
    let b2 = energy_factor(FieldKind::Magnetic, Side::Nimm, omega, &dielectric, &nimm)?;
    let f1_abs2 = dielectric.eps1 * dielectric.eps1;
    let f2_abs2 = permittivity_nimm(omega, &nimm)?.norm_sqr();

    let q2 = (omega / SPEED_OF_LIGHT).powi(2);
    let kp2 = mode.k_parallel.norm_sqr();

    let zeta1 = confinement_length(mode.k1);
    let zeta2 = confinement_length(mode.k2);
    let bracket = |a: f64, b: f64, f_abs2: f64, k: Complex64| {
        let k_abs2 = k.norm_sqr();
        a * (1.0 + kp2 / k_abs2) + q2 * b * f_abs2 / k_abs2
    };
    let term_dielectric = bracket(a1, b1, f1_abs2, mode.k1) * zeta1;
    let term_nimm = bracket(a2, b2, f2_abs2, mode.k2) * zeta2;
    let lz = term_dielectric + term_nimm;
    let deconfined = zeta1.is_infinite() || zeta2.is_infinite();

    let (frac_dielectric, frac_nimm) = match (term_dielectric.is_infinite(), term_nimm.is_infinite()) {
        (false, false) => (term_dielectric / lz, term_nimm / lz),
        (true, false) => (1.0, 0.0),
        (false, true) => (0.0, 1.0),
        (true, true) => (f64::NAN, f64::NAN),
    };

    Ok(ModeProfile { zeta1, zeta2, lz, term_dielectric, term_nimm, frac_dielectric, frac_nimm, deconfined })
}

/// κ of the bound mode, or `+inf` where no bound mode exists.
fn loss_or_infinity(omega: f64, iface: &InterfaceSpec, pol: Polarization) -> f64 {
    match solve_mode(omega, iface, pol) {
        Ok(mode) => mode.kappa(),
        Err(_) => f64::INFINITY,
    }
}

/// Frequency of minimum loss `argmin κ(ω)` inside `bracket` (rad/s).
///
/// A uniform scan of [`DEFAULT_SCAN_POINTS`] points locates the coarse minimum,
/// which is then refined by golden-section search between its neighbours.
/// Frequencies without a bound mode count as infinitely lossy, so a minimum
/// at the lower edge of the bound band is found from the bound side.
///
/// Without damping κ vanishes across the whole bound band; the grid argmin
/// (the first bound grid point) is returned unrefined in that case.
pub fn find_low_loss_frequency(iface: &InterfaceSpec, pol: Polarization, bracket: (f64, f64)) -> Result<f64> {
    find_low_loss_frequency_with(iface, pol, bracket, DEFAULT_SCAN_POINTS)
}

pub fn find_low_loss_frequency_with(
    iface: &InterfaceSpec,
    pol: Polarization,
    bracket: (f64, f64),
    scan_points: usize,
) -> Result<f64> {
    let (lo, hi) = bracket;
    ensure_positive("bracket lower edge", lo)?;
    if !(hi > lo && hi.is_finite()) {
        return Err(Error::Bracket(format!("empty bracket [{lo:e}, {hi:e}]")));
    }
    if scan_points < 3 {
        return Err(Error::Domain("scan needs at least 3 points".into()));
    }
    let step = (hi - lo) / (scan_points - 1) as f64;
    let grid: Vec<f64> = (0..scan_points).map(|i| lo + step * i as f64).collect();
    let losses: Vec<f64> = grid.par_iter().map(|&w| loss_or_infinity(w, iface, pol)).collect();

    let (best, best_loss) =
        losses.iter().copied().enumerate().fold((0, f64::INFINITY), |acc, (i, k)| if k < acc.1 { (i, k) } else { acc });
    if best_loss.is_infinite() {
        return Err(Error::NoBoundMode { omega: 0.5 * (lo + hi) });
    }
    if best_loss == 0.0 {
        return Ok(grid[best]);
    }
    if best == 0 || best == scan_points - 1 {
        return Err(Error::Bracket(format!("loss minimum lies on the bracket edge at omega = {:e} rad/s", grid[best])));
    }

    let objective = |w: f64| loss_or_infinity(w, iface, pol);
    let omega0 = golden_section_min(objective, grid[best - 1], grid[best + 1], GOLDEN_TOLERANCE);
    // The refined point can land a rounding step outside the bound band.
    if objective(omega0).is_finite() {
        Ok(omega0)
    } else {
        Ok(grid[best])
    }
}

/// Golden-section minimisation of a unimodal function on `[a, b]`,
/// stopping once the bracket is narrower than `rel_tol` times its midpoint.
pub(crate) fn golden_section_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, rel_tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a) > rel_tol * (0.5 * (a + b)).abs() {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        c
    } else {
        d
    }
}

/// Outcome of one sweep point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeStatus {
    Ok,
    Deconfined,
    NoBoundMode,
    Singular,
}

impl ModeStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModeStatus::Ok => "ok",
            ModeStatus::Deconfined => "deconfined",
            ModeStatus::NoBoundMode => "no_bound_mode",
            ModeStatus::Singular => "singular",
        }
    }
}

impl FromStr for ModeStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ok" => Ok(ModeStatus::Ok),
            "deconfined" => Ok(ModeStatus::Deconfined),
            "no_bound_mode" => Ok(ModeStatus::NoBoundMode),
            "singular" => Ok(ModeStatus::Singular),
            other => Err(Error::Domain(format!("unknown mode status '{other}'"))),
        }
    }
}

/// One row of a frequency sweep, in the normalised units used for plotting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// ω/ω_e.
    pub omega_norm: f64,
    /// Re K∥, 1/m.
    pub k_parallel: f64,
    /// Im K∥, 1/m.
    pub kappa: f64,
    pub zeta1_over_lambda: f64,
    pub lz_over_lambda: f64,
    pub frac_dielectric: f64,
    pub frac_nimm: f64,
    pub status: ModeStatus,
}

impl SweepRow {
    fn missing(omega_norm: f64, status: ModeStatus) -> Self {
        Self {
            omega_norm,
            k_parallel: f64::NAN,
            kappa: f64::NAN,
            zeta1_over_lambda: f64::NAN,
            lz_over_lambda: f64::NAN,
            frac_dielectric: f64::NAN,
            frac_nimm: f64::NAN,
            status,
        }
    }
}

/// Evaluate one sweep point; failures become status flags.
pub fn sweep_point(omega: f64, iface: &InterfaceSpec, pol: Polarization, wavelength: f64) -> SweepRow {
    let omega_norm = omega / iface.nimm.omega_e;
    let mode = match solve_mode(omega, iface, pol) {
        Ok(mode) => mode,
        Err(Error::Singularity(_)) => return SweepRow::missing(omega_norm, ModeStatus::Singular),
        Err(_) => return SweepRow::missing(omega_norm, ModeStatus::NoBoundMode),
    };
    let profile = match mode_profile(&mode, iface) {
        Ok(p) => p,
        Err(_) => return SweepRow::missing(omega_norm, ModeStatus::Singular),
    };
    SweepRow {
        omega_norm,
        k_parallel: mode.k_parallel.re,
        kappa: mode.kappa(),
        zeta1_over_lambda: profile.zeta1 / wavelength,
        lz_over_lambda: profile.lz / wavelength,
        frac_dielectric: profile.frac_dielectric,
        frac_nimm: profile.frac_nimm,
        status: if profile.deconfined { ModeStatus::Deconfined } else { ModeStatus::Ok },
    }
}

/// Sweep a strictly increasing list of angular frequencies (rad/s). Lengths
/// are reported relative to `wavelength` (m). Row order follows `grid`.
pub fn sweep(iface: &InterfaceSpec, pol: Polarization, grid: &[f64], wavelength: f64) -> Result<Vec<SweepRow>> {
    if grid.is_empty() {
        return Err(Error::Domain("sweep grid is empty".into()));
    }
    ensure_positive("wavelength", wavelength)?;
    if let Some(bad) = grid.iter().find(|w| !(**w > 0.0 && w.is_finite())) {
        return Err(Error::Domain(format!("sweep frequencies must be positive, got {bad}")));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("sweep grid must be strictly increasing".into()));
    }
    Ok(grid.par_iter().map(|&w| sweep_point(w, iface, pol, wavelength)).collect())
}

/// `n` points uniformly spaced on `[lo, hi]` (inclusive).
pub fn linear_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n).map(|i| lo + step * i as f64).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn at(x: f64) -> f64 {
        x * DrudeMedium::reference().omega_e
    }

    #[test]
    fn lossless_mode_has_zero_kappa() {
        let iface = InterfaceSpec { nimm: DrudeMedium::reference().lossless(), ..InterfaceSpec::reference() };
        for x in [0.12, 0.15, 0.2, 0.3, 0.5] {
            let mode = solve_mode(at(x), &iface, Polarization::TM).unwrap();
            assert_eq!(mode.kappa(), 0.0, "x = {x}");
        }
    }

    #[test]
    fn below_band_edge_there_is_no_bound_mode() {
        let iface = InterfaceSpec::reference();
        assert!(matches!(solve_mode(at(0.10), &iface, Polarization::TM), Err(Error::NoBoundMode { .. })));
    }

    #[test]
    fn accepted_modes_satisfy_residuals_and_decay() {
        let iface = InterfaceSpec::reference();
        for x in linear_grid(0.118, 0.3, 50) {
            let mode = solve_mode(at(x), &iface, Polarization::TM).unwrap();
            assert!(mode.k1.re >= 0.0 && mode.k2.re >= 0.0);
            assert!(mode.kappa() >= 0.0);
            assert!(mode.boundary_residual() <= BOUNDARY_TOLERANCE);
            let (r1, r2) = mode.normal_residuals();
            assert!(r1 <= NORMAL_RESIDUAL_TOLERANCE && r2 <= NORMAL_RESIDUAL_TOLERANCE);
        }
    }

    #[test]
    fn surface_plasmon_pole_is_a_singularity() {
        // ε₂ = −ε₁ exactly: lossless Drude with ε_b = 2 at ω = ω_e/√3.
        let nimm = DrudeMedium::new(2.0, 2.0, 1.0e16, 0.0, 1.0e15, 0.0).unwrap();
        let iface = InterfaceSpec::new(UniformMedium::vacuum(), nimm).unwrap();
        let omega = 1.0e16 / 3f64.sqrt();
        assert!(matches!(solve_mode(omega, &iface, Polarization::TM), Err(Error::Singularity(_))));
    }

    #[test]
    fn profile_fractions_sum_to_one() {
        let iface = InterfaceSpec::reference();
        let mode = solve_mode(at(0.15), &iface, Polarization::TM).unwrap();
        let p = mode_profile(&mode, &iface).unwrap();
        assert_relative_eq!(p.frac_dielectric + p.frac_nimm, 1.0, epsilon = 1e-12);
        assert_relative_eq!(p.lz, p.term_dielectric + p.term_nimm, max_relative = 1e-15);
        assert_relative_eq!(p.zeta1, 1.0 / mode.k1.re);
        assert!(!p.deconfined);
    }

    #[test]
    fn purely_imaginary_normal_wavenumber_is_deconfined() {
        let iface = InterfaceSpec::reference();
        let mut mode = solve_mode(at(0.15), &iface, Polarization::TM).unwrap();
        mode.k1 = Complex64::new(0.0, mode.k1.norm());
        let p = mode_profile(&mode, &iface).unwrap();
        assert!(p.deconfined);
        assert!(p.zeta1.is_infinite());
        assert_eq!((p.frac_dielectric, p.frac_nimm), (1.0, 0.0));
    }

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let x = golden_section_min(|x| (x - 1.234).powi(2), 0.0, 3.0, 1e-10);
        assert_relative_eq!(x, 1.234, max_relative = 1e-8);
    }

    #[test]
    fn low_loss_search_rejects_edge_minimum() {
        let iface = InterfaceSpec::reference();
        // κ grows monotonically on this bracket, so the minimum is its left edge.
        let err = find_low_loss_frequency(&iface, Polarization::TM, (at(0.13), at(0.2))).unwrap_err();
        assert!(matches!(err, Error::Bracket(_)), "{err:?}");
    }

    #[test]
    fn low_loss_search_without_bound_modes_fails() {
        let iface = InterfaceSpec::reference();
        let err = find_low_loss_frequency(&iface, Polarization::TM, (at(0.05), at(0.1))).unwrap_err();
        assert!(matches!(err, Error::NoBoundMode { .. }));
    }

    #[test]
    fn lossless_search_returns_zero_loss_grid_point() {
        let iface = InterfaceSpec { nimm: DrudeMedium::reference().lossless(), ..InterfaceSpec::reference() };
        let w0 = find_low_loss_frequency(&iface, Polarization::TM, (at(0.1), at(0.2))).unwrap();
        assert_eq!(solve_mode(w0, &iface, Polarization::TM).unwrap().kappa(), 0.0);
    }

    #[test]
    fn sweep_validates_grid() {
        let iface = InterfaceSpec::reference();
        assert!(sweep(&iface, Polarization::TM, &[], 780e-9).is_err());
        assert!(sweep(&iface, Polarization::TM, &[at(0.2), at(0.1)], 780e-9).is_err());
        assert!(sweep(&iface, Polarization::TM, &[-1.0, at(0.1)], 780e-9).is_err());
    }

    #[test]
    fn sweep_flags_unbound_rows() {
        let iface = InterfaceSpec::reference();
        let rows = sweep(&iface, Polarization::TM, &linear_grid(at(0.1), at(0.2), 21), 780e-9).unwrap();
        assert_eq!(rows.len(), 21);
        assert_eq!(rows[0].status, ModeStatus::NoBoundMode);
        assert!(rows[0].kappa.is_nan());
        assert_eq!(rows[20].status, ModeStatus::Ok);
    }

    #[test]
    fn polarization_parses() {
        assert_eq!("te".parse::<Polarization>().unwrap(), Polarization::TE);
        assert_eq!(" TM ".parse::<Polarization>().unwrap(), Polarization::TM);
        assert!("TEM".parse::<Polarization>().is_err());
    }
}
