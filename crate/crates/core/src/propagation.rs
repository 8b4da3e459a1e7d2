//! One-dimensional split-step integration of two slow pulses coupled by
//! cross-phase modulation.
//!
//! The simulation runs in the rest frame of pulse b, so b never moves on the
//! grid and pulse a drifts at `v_a − v_b`. Each step advects a exactly (cyclic
//! integer shift or FFT phase ramp), rotates both envelopes by their
//! intensity-dependent phases and applies the optional loss.

use std::f64::consts::PI;
use std::io::Write;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::deit::{xpm_phase_shift, CollisionSetup};
use crate::error::{ensure_positive, Error, Result};

/// Relative intensity below which a sample is outside a pulse's support.
pub const SUPPORT_THRESHOLD: f64 = 1e-6;
/// Relative amplitude below which the phase of a sample is undefined.
pub const PHASE_THRESHOLD: f64 = 1e-6;

/// Uniform grid `x_i = x0 + i·dx`, `i = 0..len`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub x0: f64,
    pub dx: f64,
    pub len: usize,
}

impl Grid {
    pub fn new(x0: f64, dx: f64, len: usize) -> Result<Self> {
        ensure_positive("dx", dx)?;
        if len < 2 {
            return Err(Error::Config(format!("grid needs at least 2 points, got {len}")));
        }
        if !x0.is_finite() {
            return Err(Error::Config("grid origin must be finite".into()));
        }
        Ok(Self { x0, dx, len })
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + self.dx * i as f64
    }

    pub fn positions(&self) -> Vec<f64> {
        (0..self.len).map(|i| self.x(i)).collect()
    }

    pub fn extent(&self) -> f64 {
        self.dx * self.len as f64
    }

    pub fn shifted(&self, by: f64) -> Self {
        Self { x0: self.x0 + by, ..*self }
    }

    fn same_sampling(&self, other: &Grid) -> bool {
        self.len == other.len && self.dx == other.dx
    }
}

/// Temporal profile of a pulse of duration τ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PulseShape {
    /// Unit amplitude over a length `|v| τ`.
    Square,
    /// Unit peak amplitude, intensity FWHM `|v| τ`.
    Gaussian,
}

/// Envelope of one pulse sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PulseState {
    pub envelope: Vec<Complex64>,
    /// Group velocity, m/s.
    pub v: f64,
    pub grid: Grid,
}

impl PulseState {
    pub fn new(envelope: Vec<Complex64>, v: f64, grid: Grid) -> Result<Self> {
        if envelope.len() != grid.len {
            return Err(Error::Config(format!("envelope has {} samples but grid has {}", envelope.len(), grid.len)));
        }
        if envelope.iter().any(|e| !(e.re.is_finite() && e.im.is_finite())) {
            return Err(Error::Config("envelope must be finite".into()));
        }
        if !v.is_finite() {
            return Err(Error::Config("group velocity must be finite".into()));
        }
        Ok(Self { envelope, v, grid })
    }

    /// Pulse of duration `tau` centred at `center`.
    pub fn shaped(shape: PulseShape, grid: Grid, v: f64, center: f64, tau: f64) -> Result<Self> {
        ensure_positive("tau", tau)?;
        let length = v.abs() * tau;
        ensure_positive("pulse length", length)?;
        let envelope = grid
            .positions()
            .into_iter()
            .map(|x| {
                let d = x - center;
                let amp = match shape {
                    PulseShape::Square => {
                        if d.abs() < 0.5 * length {
                            1.0
                        } else {
                            0.0
                        }
                    }
                    PulseShape::Gaussian => {
                        let sigma = length / (2.0 * (2.0 * 2f64.ln()).sqrt());
                        (-d * d / (4.0 * sigma * sigma)).exp()
                    }
                };
                Complex64::new(amp, 0.0)
            })
            .collect();
        Self::new(envelope, v, grid)
    }

    pub fn intensity(&self) -> Vec<f64> {
        self.envelope.iter().map(|e| e.norm_sqr()).collect()
    }

    /// Photon-number norm `Σ|E|² dx`.
    pub fn norm(&self) -> f64 {
        self.envelope.iter().map(|e| e.norm_sqr()).sum::<f64>() * self.grid.dx
    }

    /// Intensity-weighted mean position, `None` for a vanishing envelope.
    pub fn centroid(&self) -> Option<f64> {
        let (mut weight, mut moment) = (0.0, 0.0);
        for (i, e) in self.envelope.iter().enumerate() {
            let w = e.norm_sqr();
            weight += w;
            moment += w * self.grid.x(i);
        }
        (weight > 0.0).then(|| moment / weight)
    }

    fn centroid_index(&self) -> Option<usize> {
        let c = self.centroid()?;
        let i = ((c - self.grid.x0) / self.grid.dx).round();
        (i >= 0.0 && (i as usize) < self.grid.len).then_some(i as usize)
    }

    fn support(&self) -> Vec<bool> {
        let intensity = self.intensity();
        let peak = intensity.iter().cloned().fold(0.0, f64::max);
        intensity.iter().map(|&i| peak > 0.0 && i > SUPPORT_THRESHOLD * peak).collect()
    }
}

/// Integration parameters. Couplings act at unit normalised intensity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationConfig {
    /// Time step, s.
    pub dt: f64,
    /// Total propagation time, s.
    pub t_final: f64,
    /// Cross-phase coupling, rad/m.
    pub g_xpm: f64,
    /// Self-phase coupling, rad/m.
    pub g_spm: f64,
    /// Amplitude attenuation, 1/m.
    pub kappa: f64,
    /// Record a snapshot every this many steps; 0 disables snapshots.
    pub snapshot_every: usize,
}

impl PropagationConfig {
    pub fn new(dt: f64, t_final: f64, g_xpm: f64) -> Self {
        Self { dt, t_final, g_xpm, g_spm: 0.0, kappa: 0.0, snapshot_every: 0 }
    }
}

/// Lab-frame state of both pulses after `step` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub step: usize,
    pub time: f64,
    pub a: PulseState,
    pub b: PulseState,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropagationResult {
    pub a_final: PulseState,
    pub b_final: PulseState,
    /// Nonlinear phase accumulated by each sample of pulse b, rad.
    pub phase_profile_b: Vec<f64>,
    pub steps: usize,
    pub snapshots: Vec<Snapshot>,
}

impl PropagationResult {
    /// Accumulated phase of b at its intensity-weighted centroid.
    pub fn phase_at_centroid_b(&self) -> Result<f64> {
        let i = self.b_final.centroid_index().ok_or_else(|| Error::Extraction("pulse b has vanished".into()))?;
        Ok(self.phase_profile_b[i])
    }

    /// Largest accumulated phase magnitude over pulse b, signed.
    pub fn peak_phase_b(&self) -> f64 {
        self.phase_profile_b.iter().cloned().fold(0.0, |acc: f64, p| if p.abs() > acc.abs() { p } else { acc })
    }
}

/// Exact translation of a periodic envelope by a fixed distance.
struct Translation {
    kind: TranslationKind,
}

enum TranslationKind {
    Identity,
    Cells(isize),
    Spectral { forward: Arc<dyn Fft<f64>>, inverse: Arc<dyn Fft<f64>>, ramp: Vec<Complex64>, scratch: Vec<Complex64> },
}

impl Translation {
    fn new(distance: f64, grid: &Grid) -> Self {
        let cells = distance / grid.dx;
        let rounded = cells.round();
        if (cells - rounded).abs() < 1e-9 {
            let kind =
                if rounded == 0.0 { TranslationKind::Identity } else { TranslationKind::Cells(rounded as isize) };
            return Self { kind };
        }
        let n = grid.len;
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(n);
        let inverse = planner.plan_fft_inverse(n);
        let scale = 1.0 / n as f64;
        let ramp = (0..n)
            .map(|m| {
                let m = if m <= n / 2 { m as f64 } else { m as f64 - n as f64 };
                let k = 2.0 * PI * m / grid.extent();
                Complex64::from_polar(scale, -k * distance)
            })
            .collect();
        let scratch_len = forward.get_inplace_scratch_len().max(inverse.get_inplace_scratch_len());
        let scratch = vec![Complex64::new(0.0, 0.0); scratch_len];
        Self { kind: TranslationKind::Spectral { forward, inverse, ramp, scratch } }
    }

    fn apply(&mut self, data: &mut [Complex64]) {
        match &mut self.kind {
            TranslationKind::Identity => {}
            TranslationKind::Cells(k) => {
                let n = data.len() as isize;
                data.rotate_right(k.rem_euclid(n) as usize);
            }
            TranslationKind::Spectral { forward, inverse, ramp, scratch } => {
                forward.process_with_scratch(data, scratch);
                for (d, r) in data.iter_mut().zip(ramp.iter()) {
                    *d *= r;
                }
                inverse.process_with_scratch(data, scratch);
            }
        }
    }
}

fn validate_pair(a: &PulseState, b: &PulseState, cfg: &PropagationConfig) -> Result<()> {
    if !a.grid.same_sampling(&b.grid) || a.grid.x0 != b.grid.x0 {
        return Err(Error::Config("both pulses must share one grid".into()));
    }
    ensure_positive("dt", cfg.dt).map_err(|e| Error::Config(e.to_string()))?;
    if !(cfg.t_final >= 0.0 && cfg.t_final.is_finite()) {
        return Err(Error::Config(format!("t_final must be >= 0, got {}", cfg.t_final)));
    }
    for (name, value) in [("g_xpm", cfg.g_xpm), ("g_spm", cfg.g_spm)] {
        if !value.is_finite() {
            return Err(Error::Config(format!("{name} must be finite")));
        }
    }
    if !(cfg.kappa >= 0.0 && cfg.kappa.is_finite()) {
        return Err(Error::Config(format!("kappa must be >= 0, got {}", cfg.kappa)));
    }
    let v_max = a.v.abs().max(b.v.abs());
    let dt_max = a.grid.dx / v_max;
    if cfg.dt > dt_max * (1.0 + 1e-12) {
        return Err(Error::Config(format!("time step {:e} s exceeds the CFL limit {:e} s", cfg.dt, dt_max)));
    }
    let (sa, sb) = (a.support(), b.support());
    if sa.iter().zip(sb.iter()).any(|(x, y)| *x && *y) {
        return Err(Error::Config("pulses overlap initially".into()));
    }
    let (ca, cb) = match (a.centroid(), b.centroid()) {
        (Some(ca), Some(cb)) => (ca, cb),
        _ => return Err(Error::Config("pulse envelope is identically zero".into())),
    };
    if (b.v - a.v) * (ca - cb) <= 0.0 {
        return Err(Error::Config("pulse b must trail pulse a and close in on it".into()));
    }
    Ok(())
}

fn rotate(envelope: &mut [Complex64], phase: impl Iterator<Item = f64>, damping: f64) {
    for (e, p) in envelope.iter_mut().zip(phase) {
        *e *= Complex64::from_polar(damping, p);
    }
}

/// Integrate the coupled envelopes from `t = 0` to `cfg.t_final`.
///
/// `a0` and `b0` are lab-frame states on a shared periodic grid. The returned
/// states live on that grid translated by `v_b · t_final`.
pub fn propagate_pair(a0: &PulseState, b0: &PulseState, cfg: &PropagationConfig) -> Result<PropagationResult> {
    validate_pair(a0, b0, cfg)?;
    let steps = (cfg.t_final / cfg.dt).ceil() as usize;
    let dt = if steps == 0 { 0.0 } else { cfg.t_final / steps as f64 };
    let grid = a0.grid;
    let mut a = a0.envelope.clone();
    let mut b = b0.envelope.clone();
    let mut phase_b = vec![0.0; grid.len];
    let mut snapshots = Vec::new();
    let mut shift = Translation::new((a0.v - b0.v) * dt, &grid);

    let path_a = a0.v.abs() * dt;
    let path_b = b0.v.abs() * dt;
    let damp_a = (-cfg.kappa * path_a).exp();
    let damp_b = (-cfg.kappa * path_b).exp();
    let mut ia = vec![0.0; grid.len];
    let mut ib = vec![0.0; grid.len];

    let snapshot = |step: usize, a: &[Complex64], b: &[Complex64]| {
        let t = step as f64 * dt;
        let lab = grid.shifted(b0.v * t);
        Snapshot {
            step,
            time: t,
            a: PulseState { envelope: a.to_vec(), v: a0.v, grid: lab },
            b: PulseState { envelope: b.to_vec(), v: b0.v, grid: lab },
        }
    };
    if cfg.snapshot_every > 0 {
        snapshots.push(snapshot(0, &a, &b));
    }

    for step in 1..=steps {
        shift.apply(&mut a);
        for i in 0..grid.len {
            ia[i] = a[i].norm_sqr();
            ib[i] = b[i].norm_sqr();
        }
        let dphi_b = |i: usize| (cfg.g_xpm * ia[i] + cfg.g_spm * ib[i]) * path_b;
        let dphi_a = |i: usize| (cfg.g_xpm * ib[i] + cfg.g_spm * ia[i]) * path_a;
        for (i, p) in phase_b.iter_mut().enumerate() {
            *p += dphi_b(i);
        }
        rotate(&mut b, (0..grid.len).map(dphi_b), damp_b);
        rotate(&mut a, (0..grid.len).map(dphi_a), damp_a);
        if cfg.snapshot_every > 0 && (step % cfg.snapshot_every == 0 || step == steps) {
            snapshots.push(snapshot(step, &a, &b));
        }
    }

    let lab = grid.shifted(b0.v * cfg.t_final);
    Ok(PropagationResult {
        a_final: PulseState { envelope: a, v: a0.v, grid: lab },
        b_final: PulseState { envelope: b, v: b0.v, grid: lab },
        phase_profile_b: phase_b,
        steps,
        snapshots,
    })
}

/// Ready-to-run two-pulse collision.
#[derive(Debug, Clone, PartialEq)]
pub struct CollisionRun {
    pub a: PulseState,
    pub b: PulseState,
    pub config: PropagationConfig,
}

/// Distance from a pulse centre beyond which its intensity is below
/// [`SUPPORT_THRESHOLD`] of the peak.
fn half_extent(shape: PulseShape, length: f64) -> f64 {
    match shape {
        PulseShape::Square => 0.5 * length,
        PulseShape::Gaussian => 2.5 * length,
    }
}

/// Complete walk-through of pulse b across pulse a.
///
/// Both pulses have duration `setup.tau` and the slowed velocities of
/// `setup`; the coupling is `g = χ_a / (v_a0 τ)`. Pulse a starts just ahead
/// of b and ends just behind it. The grid is padded to a power of two. A
/// missing `dt` selects the largest step allowed by the CFL limit.
pub fn walkthrough_collision(
    setup: &CollisionSetup,
    shape: PulseShape,
    dx: f64,
    dt: Option<f64>,
) -> Result<CollisionRun> {
    xpm_phase_shift(setup)?;
    ensure_positive("dx", dx).map_err(|e| Error::Config(e.to_string()))?;
    let (v_a, v_b) = (setup.v_a(), setup.v_b());
    let ha = half_extent(shape, v_a * setup.tau);
    let hb = half_extent(shape, v_b * setup.tau);
    let gap = 0.25 * (ha + hb) + 2.0 * dx;
    let start = hb + gap + ha;
    let half_span = start + ha + gap;
    let cells = (2.0 * half_span / dx).ceil() as usize;
    if cells > 1 << 26 {
        return Err(Error::Config(format!("collision needs {cells} grid cells; increase dx")));
    }
    let len = cells.next_power_of_two();
    let grid = Grid::new(-0.5 * dx * len as f64, dx, len)?;
    let a = PulseState::shaped(shape, grid, v_a, start, setup.tau)?;
    let b = PulseState::shaped(shape, grid, v_b, 0.0, setup.tau)?;
    let t_final = 2.0 * start / (v_b - v_a);
    let dt = dt.unwrap_or(dx / v_a.abs().max(v_b.abs()));
    let config = PropagationConfig::new(dt, t_final, setup.xpm_coupling());
    Ok(CollisionRun { a, b, config })
}

/// Phase of `after` relative to `before` at the intensity-weighted centroid
/// of `after`, unwrapped across the pulse starting from its leading sample.
///
/// Feeding the output of a zero-coupling reference run as `before` removes
/// any phase common to both runs.
pub fn extract_phase(before: &PulseState, after: &PulseState) -> Result<f64> {
    if !before.grid.same_sampling(&after.grid) {
        return Err(Error::Extraction("states are sampled differently".into()));
    }
    let center = after.centroid_index().ok_or_else(|| Error::Extraction("envelope vanishes".into()))?;
    let floor = |s: &PulseState| PHASE_THRESHOLD * s.envelope.iter().map(|e| e.norm()).fold(0.0, f64::max);
    let (fb, fa) = (floor(before), floor(after));
    let defined = |i: usize| before.envelope[i].norm() > fb && after.envelope[i].norm() > fa;
    if !defined(center) {
        return Err(Error::Extraction(format!("envelope vanishes at the centroid (sample {center})")));
    }
    let ratio = |i: usize| (after.envelope[i] * before.envelope[i].conj()).arg();
    let mut start = center;
    while start > 0 && defined(start - 1) {
        start -= 1;
    }
    let mut phase = ratio(start);
    let mut previous = phase;
    for i in start + 1..=center {
        let wrapped = ratio(i);
        let mut delta = wrapped - previous;
        delta -= 2.0 * PI * (delta / (2.0 * PI)).round();
        phase += delta;
        previous = wrapped;
    }
    Ok(phase)
}

/// Write `x, Re, Im, |E|², phase` rows for one pulse.
pub fn write_envelope_csv<W: Write>(out: &mut W, state: &PulseState) -> std::io::Result<()> {
    writeln!(out, "x,re,im,intensity,phase")?;
    for (i, e) in state.envelope.iter().enumerate() {
        writeln!(
            out,
            "{},{},{},{},{}",
            crate::output::format_number(state.grid.x(i)),
            crate::output::format_number(e.re),
            crate::output::format_number(e.im),
            crate::output::format_number(e.norm_sqr()),
            crate::output::format_number(e.arg()),
        )?;
    }
    Ok(())
}
