//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use polariton_lab::config::RunConfig;
use polariton_lab::deit::{
    kerr_at_frequency, kerr_coefficient, max_gas_temperature, phi, xpm_phase_shift, CollisionSetup, DeitScenario,
    FrequencyUnit, SinglePhotonField,
};
use polariton_lab::dispersion::{
    find_low_loss_frequency, linear_grid, mode_profile, solve_mode, sweep, InterfaceSpec, ModeStatus, Polarization,
    SweepRow, BOUNDARY_TOLERANCE, NORMAL_RESIDUAL_TOLERANCE,
};
use polariton_lab::media::{
    energy_factor, permeability_nimm, permittivity_nimm, DrudeMedium, FieldKind, Side, UniformMedium,
};
use polariton_lab::propagation::{propagate_pair, walkthrough_collision, PulseShape};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const WAVELENGTH: f64 = 780e-9;
const BAND: (f64, f64) = (0.10, 0.20);
const SWEEP_POINTS: usize = 512;
const RANDOM_DRAWS: usize = 1000;
const SEED: u64 = 0x5eed_2024;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

fn reference_sweep() -> (InterfaceSpec, Vec<SweepRow>) {
    let iface = InterfaceSpec::reference();
    let we = iface.nimm.omega_e;
    let grid: Vec<f64> = linear_grid(BAND.0 * we, BAND.1 * we, SWEEP_POINTS);
    let rows = sweep(&iface, Polarization::TM, &grid, WAVELENGTH).expect("sweep");
    (iface, rows)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn random_drude(rng: &mut StdRng) -> DrudeMedium {
    let omega_e = rng.gen_range(1e15..5e16);
    DrudeMedium {
        eps_b: rng.gen_range(1.0..10.0),
        mu_b: rng.gen_range(1.0..10.0),
        omega_e,
        gamma_e: rng.gen_range(0.0..0.05) * omega_e,
        omega_m: rng.gen_range(0.02..1.0) * omega_e,
        gamma_m: rng.gen_range(0.0..0.05) * omega_e,
    }
}

fn zero_damping_suppresses_loss() -> Outcome {
    let iface = InterfaceSpec { nimm: InterfaceSpec::reference().nimm.lossless(), ..InterfaceSpec::reference() };
    let we = iface.nimm.omega_e;
    let (worst, elapsed) = timed(|| {
        let mut worst: Option<f64> = Some(0.0);
        for w in linear_grid(0.12 * we, 0.55 * we, 100) {
            worst = match (worst, solve_mode(w, &iface, Polarization::TM)) {
                (Some(m), Ok(mode)) => Some(m.max(mode.k_parallel.im.abs() / mode.k_parallel.norm())),
                _ => None,
            };
        }
        worst
    });
    match worst {
        Some(ratio) => Outcome::new(
            ratio <= 1e-12 && elapsed < Duration::from_secs(1),
            format!("max |Im K|/|K| = {ratio:.2e} over 100 points in [0.12, 0.55] w_e, {elapsed:.2?}"),
        ),
        None => Outcome::new(false, "a frequency in [0.12, 0.55] w_e has no bound mode"),
    }
}

fn low_loss_window() -> Outcome {
    let ((result, kappa_max), elapsed) = timed(|| {
        let (iface, rows) = reference_sweep();
        let we = iface.nimm.omega_e;
        let kappa_max = rows.iter().map(|r| r.kappa).filter(|k| k.is_finite()).fold(0.0, f64::max);
        let omega0 = find_low_loss_frequency(&iface, Polarization::TM, (BAND.0 * we, BAND.1 * we))
            .and_then(|w| Ok((w / we, solve_mode(w, &iface, Polarization::TM)?.kappa())));
        (omega0, kappa_max)
    });
    match result {
        Ok((x0, kappa0)) => Outcome::new(
            x0 > BAND.0 && x0 < BAND.1 && kappa0 <= 1e-3 * kappa_max && elapsed < Duration::from_secs(5),
            format!("w0 = {x0:.6} w_e, kappa(w0) = {kappa0:.3e} 1/m, max kappa = {kappa_max:.1} 1/m, {elapsed:.2?}"),
        ),
        Err(e) => Outcome::new(false, format!("no low-loss frequency: {e}")),
    }
}

fn mode_length_minimum() -> Outcome {
    let ((min, at), elapsed) = timed(|| {
        let (_, rows) = reference_sweep();
        rows.iter()
            .filter(|r| r.status == ModeStatus::Ok)
            .map(|r| (r.lz_over_lambda, r.omega_norm))
            .fold((f64::INFINITY, f64::NAN), |acc, x| if x.0 < acc.0 { x } else { acc })
    });
    Outcome::new(
        (30.0..=120.0).contains(&min) && elapsed < Duration::from_secs(5),
        format!("min Lz/lambda = {min:.2} at {at:.4} w_e (required within [30, 120]), {elapsed:.2?}"),
    )
}

fn energy_fractions() -> Outcome {
    let (iface, rows) = reference_sweep();
    let worst = rows
        .iter()
        .filter(|r| r.status == ModeStatus::Ok)
        .map(|r| (r.frac_dielectric + r.frac_nimm - 1.0).abs())
        .fold(0.0, f64::max);
    let we = iface.nimm.omega_e;
    let frac0 = find_low_loss_frequency(&iface, Polarization::TM, (BAND.0 * we, BAND.1 * we))
        .and_then(|w| mode_profile(&solve_mode(w, &iface, Polarization::TM)?, &iface))
        .map(|p| p.frac_nimm);
    match frac0 {
        Ok(f) => {
            Outcome::new(worst <= 1e-9 && f <= 0.05, format!("max |sum - 1| = {worst:.1e}, frac_nimm(w0) = {f:.4}"))
        }
        Err(e) => Outcome::new(false, format!("w0 unavailable: {e}")),
    }
}

fn derivative_cross_check() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let dielectric = UniformMedium::vacuum();
    let mut worst: f64 = 0.0;
    for i in 0..RANDOM_DRAWS {
        let m = random_drude(&mut rng);
        let omega = rng.gen_range(0.05..2.0) * m.omega_e;
        let kind = if i % 2 == 0 { FieldKind::Electric } else { FieldKind::Magnetic };
        let response = |w: f64| match kind {
            FieldKind::Electric => permittivity_nimm(w, &m).unwrap(),
            FieldKind::Magnetic => permeability_nimm(w, &m).unwrap(),
        };
        let h = 1e-5 * omega;
        let g = |w: f64| (Complex64::new(w, 0.0) * response(w)).re;
        let fd = (g(omega + h) - g(omega - h)) / (2.0 * h);
        let exact = energy_factor(kind, Side::Nimm, omega, &dielectric, &m).unwrap();
        worst = worst.max(((fd - exact) / exact).abs());
    }
    Outcome::new(worst <= 1e-6, format!("max relative deviation {worst:.2e} over {RANDOM_DRAWS} draws"))
}

fn te_tm_swap() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let (mut worst, mut compared, mut mismatched): (f64, usize, usize) = (0.0, 0, 0);
    for _ in 0..RANDOM_DRAWS {
        let iface = InterfaceSpec {
            dielectric: UniformMedium { eps1: rng.gen_range(1.0..4.0), mu1: rng.gen_range(1.0..4.0) },
            nimm: random_drude(&mut rng),
        };
        let omega = rng.gen_range(0.02..1.5) * iface.nimm.omega_e;
        match (solve_mode(omega, &iface, Polarization::TE), solve_mode(omega, &iface.dual(), Polarization::TM)) {
            (Ok(te), Ok(tm)) => {
                let rel = |a: Complex64, b: Complex64| (a - b).norm() / b.norm();
                worst = worst.max(rel(te.k_parallel, tm.k_parallel)).max(rel(te.k1, tm.k1)).max(rel(te.k2, tm.k2));
                compared += 1;
            }
            (Err(_), Err(_)) => {}
            _ => mismatched += 1,
        }
    }
    Outcome::new(
        worst <= 1e-12 && mismatched == 0,
        format!("max relative deviation {worst:.1e} over {compared} bound draws, {mismatched} asymmetric outcomes"),
    )
}

fn dispersion_residuals() -> Outcome {
    let lossy = InterfaceSpec::reference();
    let lossless = InterfaceSpec { nimm: lossy.nimm.lossless(), ..lossy };
    let (mut worst_boundary, mut worst_normal, mut accepted): (f64, f64, usize) = (0.0, 0.0, 0);
    for iface in [lossy, lossless] {
        for pol in [Polarization::TM, Polarization::TE] {
            for w in linear_grid(0.05 * iface.nimm.omega_e, 0.6 * iface.nimm.omega_e, 1000) {
                if let Ok(mode) = solve_mode(w, &iface, pol) {
                    let (n1, n2) = mode.normal_residuals();
                    worst_boundary = worst_boundary.max(mode.boundary_residual());
                    worst_normal = worst_normal.max(n1).max(n2);
                    accepted += 1;
                }
            }
        }
    }
    Outcome::new(
        accepted > 0 && worst_boundary <= BOUNDARY_TOLERANCE && worst_normal <= NORMAL_RESIDUAL_TOLERANCE,
        format!("{accepted} modes, boundary residual <= {worst_boundary:.1e}, normal residual <= {worst_normal:.1e}"),
    )
}

fn overlap_factor() -> Outcome {
    let at_zero = phi(0.0).unwrap();
    let n = 1_000_000;
    let mut previous = at_zero;
    let mut monotone = true;
    for i in 1..=n {
        let value = phi(10.0 * i as f64 / n as f64).unwrap();
        monotone &= value < previous;
        previous = value;
    }
    let closed = (1.0 - (-2.0f64).exp()) / 2.0;
    let err = ((phi(1.0).unwrap() - closed) / closed).abs();
    Outcome::new(
        at_zero == 1.0 && monotone && err <= 1e-12,
        format!("phi(0) = {at_zero}, strictly decreasing on 1e6 points of (0, 10]: {monotone}, phi(1) error {err:.1e}"),
    )
}

fn operating_point(cfg: &RunConfig) -> (InterfaceSpec, DeitScenario, CollisionSetup, f64, f64) {
    let iface = cfg.interface().unwrap();
    let deit = cfg.deit().unwrap();
    let scenario = deit.scenario(&iface, Polarization::TM).unwrap();
    let collision = cfg.collision().unwrap().setup(|_| Ok(0.0)).unwrap();
    (iface, scenario, collision, deit.spot_width, deit.omega(&iface))
}

fn xpm_oracle_equivalence() -> Outcome {
    let cfg = RunConfig::bundled();
    let (iface, scenario, base, width, omega) = operating_point(&cfg);
    let chi_a = kerr_at_frequency(omega, &iface, Polarization::TM, &scenario, &base, width).unwrap().chi_a;
    let setup = CollisionSetup { chi_a, ..base };
    let shift = xpm_phase_shift(&setup).unwrap();
    let condition = (setup.lx * setup.walkoff() - 2.0 * setup.tau).abs() / (2.0 * setup.tau);
    let formulas_agree = ((shift.phi_exact - shift.phi_walkthrough) / shift.phi_exact).abs() <= 1e-12;
    let dx = cfg.propagation().unwrap().dx;

    let ((coarse, fine), elapsed) = timed(|| {
        let run = |dx: f64| {
            let c = walkthrough_collision(&setup, PulseShape::Square, dx, None).unwrap();
            propagate_pair(&c.a, &c.b, &c.config).unwrap().phase_at_centroid_b().unwrap()
        };
        (run(dx), run(0.5 * dx))
    });
    let dev = |p: f64| ((p - shift.phi_exact) / shift.phi_exact).abs();
    let change = ((fine - coarse) / coarse).abs();
    Outcome::new(
        formulas_agree && dev(coarse) < 0.05 && dev(fine) < 0.02 && change < 0.01 && elapsed < Duration::from_secs(30),
        format!(
            "phi_exact = {:.4} rad, numeric {coarse:.4} (dev {:.1e}), refined {fine:.4} (dev {:.1e}), \
             walk-through mismatch {condition:.1e}, exact vs walk-through agree: {formulas_agree}, {elapsed:.2?}",
            shift.phi_exact,
            dev(coarse),
            dev(fine)
        ),
    )
}

fn order_pi_phase() -> Outcome {
    let cfg = RunConfig::bundled();
    let (iface, scenario, collision, width, omega) = operating_point(&cfg);
    match kerr_at_frequency(omega, &iface, Polarization::TM, &scenario, &collision, width) {
        Ok(p) => {
            let in_pi = p.phi_b / PI;
            Outcome::new(
                (0.3..=3.0).contains(&in_pi),
                format!("phi_b(0.144 w_e) = {in_pi:.3} pi, chi_a = {:.3e}", p.chi_a),
            )
        }
        Err(e) => Outcome::new(false, format!("evaluation failed: {e}")),
    }
}

fn monotonic_trend() -> Outcome {
    let cfg = RunConfig::bundled();
    let (iface, scenario, collision, width, _) = operating_point(&cfg);
    let we = iface.nimm.omega_e;
    let points: Result<Vec<_>, _> = linear_grid(0.13 * we, 0.20 * we, 141)
        .into_iter()
        .map(|w| kerr_at_frequency(w, &iface, Polarization::TM, &scenario, &collision, width))
        .collect();
    match points {
        Ok(p) => {
            let chi_up = p.windows(2).all(|w| w[1].chi_a > w[0].chi_a);
            let phi_up = p.windows(2).all(|w| w[1].phi_b > w[0].phi_b);
            Outcome::new(
                chi_up && phi_up,
                format!("on [0.13, 0.20] w_e: chi_a increasing {chi_up}, phi_b increasing {phi_up}"),
            )
        }
        Err(e) => Outcome::new(false, format!("evaluation failed: {e}")),
    }
}

fn temperature_bound() -> Outcome {
    let cfg = RunConfig::bundled();
    let d = cfg.deit().unwrap();
    let target = 0.8e-6;
    let mut within = false;
    let mut parts = Vec::new();
    for unit in [FrequencyUnit::Angular, FrequencyUnit::Ordinary] {
        let t = max_gas_temperature(d.wavelength, unit.to_angular(d.detuning), d.atom_mass).unwrap().t_max;
        let ratio = t / target;
        within |= (1.0 / 3.0..=3.0).contains(&ratio);
        parts.push(format!("{}: {:.3} uK", unit.as_str(), t * 1e6));
    }
    Outcome::new(within, format!("{} (target 0.8 uK within factor 3)", parts.join(", ")))
}

fn scaling_properties() -> Outcome {
    let cfg = RunConfig::bundled();
    let (iface, s, collision, width, omega) = operating_point(&cfg);
    let lz = mode_profile(&solve_mode(omega, &iface, Polarization::TM).unwrap(), &iface).unwrap().lz;
    let eps1 = iface.dielectric.eps1;
    let fa = SinglePhotonField::new(omega, eps1, lz, width, collision.v_a() * collision.tau).unwrap();
    let fb = SinglePhotonField::new(omega, eps1, lz, width, collision.v_b() * collision.tau).unwrap();
    let chi = |s: &DeitScenario| kerr_coefficient(s, &fa, &fb, collision.v_b0).unwrap();
    let base = chi(&s);
    let rel = |got: f64, want: f64| ((got - want) / want).abs();
    let checks = [
        ("n1", rel(chi(&DeitScenario { n1: 2.0 * s.n1, ..s }), 2.0 * base)),
        (
            "z0",
            rel(
                chi(&DeitScenario { z0: 2.0 * s.z0, kp_a: 0.5 * s.kp_a, kp_b: 0.5 * s.kp_b, kc: 0.5 * s.kc, ..s }),
                2.0 * base,
            ),
        ),
        ("omega_c", rel(chi(&DeitScenario { omega_c: 2.0 * s.omega_c, ..s }), 0.25 * base)),
        ("delta", rel(chi(&DeitScenario { delta: 2.0 * s.delta, ..s }), 0.5 * base)),
        (
            "phi_b",
            rel(
                xpm_phase_shift(&CollisionSetup { chi_a: 2.0 * base, ..collision }).unwrap().phi_exact,
                2.0 * xpm_phase_shift(&CollisionSetup { chi_a: base, ..collision }).unwrap().phi_exact,
            ),
        ),
    ];
    let worst = checks.iter().map(|c| c.1).fold(0.0, f64::max);
    let detail = checks.iter().map(|(n, e)| format!("{n} {e:.1e}")).collect::<Vec<_>>().join(", ");
    Outcome::new(worst <= 1e-10, format!("relative errors under factor-2 scaling: {detail}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 13] = [
        ("zero-damping loss suppression", zero_damping_suppresses_loss),
        ("low-loss window", low_loss_window),
        ("mode-length minimum", mode_length_minimum),
        ("energy fractions", energy_fractions),
        ("energy-factor derivative", derivative_cross_check),
        ("TE/TM swap identity", te_tm_swap),
        ("dispersion residuals", dispersion_residuals),
        ("overlap factor", overlap_factor),
        ("XPM oracle equivalence", xpm_oracle_equivalence),
        ("order-pi phase", order_pi_phase),
        ("monotonic Kerr trend", monotonic_trend),
        ("temperature bound", temperature_bound),
        ("scaling properties", scaling_properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict}  {name}: {}", i + 1, outcome.detail);
        failed += usize::from(!outcome.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
