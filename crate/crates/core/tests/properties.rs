use num_complex::Complex64;
use polariton_lab::deit::{
    group_velocity, kerr_coefficient, phi, slowdown_beta, xpm_phase_shift, CollisionSetup, DeitScenario,
    SinglePhotonField,
};
use polariton_lab::dispersion::{mode_profile, solve_mode, InterfaceSpec, Polarization};
use polariton_lab::media::{
    energy_factor, permeability_nimm, permittivity_nimm, DrudeMedium, FieldKind, Side, UniformMedium,
};
use polariton_lab::output::{format_number, parse_number};
use proptest::prelude::*;

fn drude_strategy() -> impl Strategy<Value = DrudeMedium> {
    (1.0..4.0f64, 1.0..4.0f64, 1e15..5e16f64, 0.0..1e-2f64, 0.05..0.5f64, 0.0..1e-2f64).prop_map(
        |(eps_b, mu_b, omega_e, ge, m_ratio, gm)| DrudeMedium {
            eps_b,
            mu_b,
            omega_e,
            gamma_e: ge * omega_e,
            omega_m: m_ratio * omega_e,
            gamma_m: gm * omega_e,
        },
    )
}

fn scenario() -> DeitScenario {
    DeitScenario {
        n1: 1e20,
        n3: 3e16,
        z0: 1.25e-6,
        d24: 3.4e-29,
        d15: 3.4e-29,
        d35: 3.4e-29,
        delta: 1.38e6,
        omega_c: 1e6,
        kp_a: 8e5,
        kp_b: 8e5,
        kc: 8e5,
    }
}

fn field(len: f64) -> SinglePhotonField {
    SinglePhotonField::new(1.97e15, 1.0, 1.8e-4, 1.5e-6, len).unwrap()
}

proptest! {
    #[test]
    fn metamaterial_is_passive(m in drude_strategy(), x in 0.01..3.0f64) {
        let omega = x * m.omega_e;
        prop_assert!(permittivity_nimm(omega, &m).unwrap().im >= 0.0);
        prop_assert!(permeability_nimm(omega, &m).unwrap().im >= 0.0);
    }

    #[test]
    fn energy_factor_is_derivative(m in drude_strategy(), x in 0.05..2.0f64) {
        let omega = x * m.omega_e;
        let d = UniformMedium::vacuum();
        let h = 1e-5 * omega;
        let g = |w: f64| (Complex64::new(w, 0.0) * permittivity_nimm(w, &m).unwrap()).re;
        let fd = (g(omega + h) - g(omega - h)) / (2.0 * h);
        let exact = energy_factor(FieldKind::Electric, Side::Nimm, omega, &d, &m).unwrap();
        prop_assert!(((fd - exact) / exact).abs() < 1e-6, "{} vs {}", fd, exact);
    }

    #[test]
    fn te_equals_tm_of_dual(m in drude_strategy(), x in 0.02..1.0f64) {
        let iface = InterfaceSpec { dielectric: UniformMedium { eps1: 1.3, mu1: 1.1 }, nimm: m };
        let omega = x * m.omega_e;
        let te = solve_mode(omega, &iface, Polarization::TE);
        let tm = solve_mode(omega, &iface.dual(), Polarization::TM);
        match (te, tm) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(a.k_parallel, b.k_parallel);
                let (pa, pb) = (mode_profile(&a, &iface).unwrap(), mode_profile(&b, &iface.dual()).unwrap());
                prop_assert_eq!(pa.lz, pb.lz);
            }
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "asymmetric outcome {:?} / {:?}", a, b),
        }
    }

    #[test]
    fn overlap_factor_is_bounded_and_decreasing(u in 0.0..50.0f64, du in 1e-6..1.0f64) {
        let (p, q) = (phi(u).unwrap(), phi(u + du).unwrap());
        prop_assert!(p > 0.0 && p <= 1.0);
        prop_assert!(q < p);
    }

    #[test]
    fn kerr_scaling_laws(k in 0.5..4.0f64) {
        let s = scenario();
        let (fa, fb) = (field(1e-4), field(3e-4));
        let base = kerr_coefficient(&s, &fa, &fb, 3e8).unwrap();
        let rel = |x: f64, y: f64| ((x - y) / y).abs();
        let n1 = kerr_coefficient(&DeitScenario { n1: k * s.n1, ..s }, &fa, &fb, 3e8).unwrap();
        prop_assert!(rel(n1, k * base) < 1e-12);
        let oc = kerr_coefficient(&DeitScenario { omega_c: k * s.omega_c, ..s }, &fa, &fb, 3e8).unwrap();
        prop_assert!(rel(oc, base / (k * k)) < 1e-12);
        let dl = kerr_coefficient(&DeitScenario { delta: k * s.delta, ..s }, &fa, &fb, 3e8).unwrap();
        prop_assert!(rel(dl, base / k) < 1e-12);
    }

    #[test]
    fn slowdown_grows_with_level_three_density(n3 in 1e14..1e18f64, k in 1.01..3.0f64) {
        let s = DeitScenario { n3, ..scenario() };
        let denser = DeitScenario { n3: k * n3, ..s };
        let fb = field(3e-4);
        let v = group_velocity(3e8, slowdown_beta(&s, &fb).unwrap());
        let v_denser = group_velocity(3e8, slowdown_beta(&denser, &fb).unwrap());
        prop_assert!(v_denser < v);
    }

    #[test]
    fn phase_shift_is_linear_in_kerr_coefficient(chi in -1e8..1e8f64, k in 0.1..10.0f64) {
        let c = CollisionSetup { tau: 1e-6, lx: 3e-4, v_a0: 3e8, v_b0: 3e8, beta_a: 3e6, beta_b: 1e6, chi_a: chi };
        let a = xpm_phase_shift(&c).unwrap();
        let b = xpm_phase_shift(&CollisionSetup { chi_a: k * chi, ..c }).unwrap();
        prop_assert!((b.phi_exact - k * a.phi_exact).abs() <= 1e-12 * (k * a.phi_exact).abs());
        prop_assert!((b.phi_walkthrough - k * a.phi_walkthrough).abs() <= 1e-12 * (k * a.phi_walkthrough).abs());
    }

    #[test]
    fn formatted_numbers_round_trip(x in -1e20..1e20f64) {
        let y = parse_number(&format_number(x)).unwrap();
        prop_assert!((y - x).abs() <= 1e-11 * x.abs());
    }
}
