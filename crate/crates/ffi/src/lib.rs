//! C ABI for `polariton-lab`.
//!
//! Every fallible call returns a [`PlStatus`]; on failure the message is
//! available from [`pl_last_error_message`] on the same thread. Interfaces are
//! passed around as opaque [`PlInterface`] handles owned by the caller.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polariton_lab::deit::{self, CollisionSetup, DeitScenario};
use polariton_lab::dispersion::{self, InterfaceSpec, ModeStatus, Polarization};
use polariton_lab::media::{DrudeMedium, UniformMedium};
use polariton_lab::propagation::{propagate_pair, walkthrough_collision, PulseShape};
use polariton_lab::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Singularity = 3,
    NoBoundMode = 4,
    Bracket = 5,
    Config = 6,
    Extraction = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlPolarization {
    Tm = 0,
    Te = 1,
}

impl From<PlPolarization> for Polarization {
    fn from(p: PlPolarization) -> Self {
        match p {
            PlPolarization::Tm => Polarization::TM,
            PlPolarization::Te => Polarization::TE,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlPulseShape {
    Square = 0,
    Gaussian = 1,
}

/// Opaque dielectric / metamaterial interface.
pub struct PlInterface {
    inner: InterfaceSpec,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PlMode {
    pub k_parallel_re: f64,
    pub k_parallel_im: f64,
    pub k1_re: f64,
    pub k1_im: f64,
    pub k2_re: f64,
    pub k2_im: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PlProfile {
    pub zeta1: f64,
    pub zeta2: f64,
    pub lz: f64,
    pub frac_dielectric: f64,
    pub frac_nimm: f64,
    pub deconfined: bool,
}

/// Sweep row; `status` is 0 ok, 1 deconfined, 2 no bound mode, 3 singular.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PlSweepRow {
    pub omega_norm: f64,
    pub k_parallel: f64,
    pub kappa: f64,
    pub zeta1_over_lambda: f64,
    pub lz_over_lambda: f64,
    pub frac_dielectric: f64,
    pub frac_nimm: f64,
    pub status: u32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PlDeitScenario {
    pub n1: f64,
    pub n3: f64,
    pub z0: f64,
    pub d24: f64,
    pub d15: f64,
    pub d35: f64,
    pub delta: f64,
    pub omega_c: f64,
    pub kp_a: f64,
    pub kp_b: f64,
    pub kc: f64,
}

impl From<PlDeitScenario> for DeitScenario {
    fn from(s: PlDeitScenario) -> Self {
        DeitScenario {
            n1: s.n1,
            n3: s.n3,
            z0: s.z0,
            d24: s.d24,
            d15: s.d15,
            d35: s.d35,
            delta: s.delta,
            omega_c: s.omega_c,
            kp_a: s.kp_a,
            kp_b: s.kp_b,
            kc: s.kc,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PlCollisionSetup {
    pub tau: f64,
    pub lx: f64,
    pub v_a0: f64,
    pub v_b0: f64,
    pub beta_a: f64,
    pub beta_b: f64,
    pub chi_a: f64,
}

impl From<PlCollisionSetup> for CollisionSetup {
    fn from(c: PlCollisionSetup) -> Self {
        CollisionSetup {
            tau: c.tau,
            lx: c.lx,
            v_a0: c.v_a0,
            v_b0: c.v_b0,
            beta_a: c.beta_a,
            beta_b: c.beta_b,
            chi_a: c.chi_a,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PlPhaseShift {
    pub phi_exact: f64,
    pub phi_walkthrough: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PlThermalBound {
    pub v_max: f64,
    pub t_max: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PlKerrPoint {
    pub chi_a: f64,
    pub phi_b: f64,
    pub mode_length: f64,
    pub kp: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PlStatus {
    match e {
        Error::Domain(_) => PlStatus::Domain,
        Error::Singularity(_) => PlStatus::Singularity,
        Error::NoBoundMode { .. } => PlStatus::NoBoundMode,
        Error::Bracket(_) => PlStatus::Bracket,
        Error::Config(_) => PlStatus::Config,
        Error::Extraction(_) => PlStatus::Extraction,
    }
}

fn guard<F>(f: F) -> PlStatus
where
    F: FnOnce() -> Result<(), PlError>,
{
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PlStatus::Ok,
        Ok(Err(PlError::Null(what))) => {
            set_error(format!("{what} is null"));
            PlStatus::NullPointer
        }
        Ok(Err(PlError::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            PlStatus::Panic
        }
    }
}

enum PlError {
    Null(&'static str),
    Core(Error),
}

impl From<Error> for PlError {
    fn from(e: Error) -> Self {
        PlError::Core(e)
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, PlError> {
    p.as_ref().ok_or(PlError::Null(what))
}

unsafe fn write<T>(p: *mut T, value: T, what: &'static str) -> Result<(), PlError> {
    if p.is_null() {
        return Err(PlError::Null(what));
    }
    p.write(value);
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn pl_interface_new(
    eps1: f64,
    mu1: f64,
    eps_b: f64,
    mu_b: f64,
    omega_e: f64,
    gamma_e: f64,
    omega_m: f64,
    gamma_m: f64,
    out: *mut *mut PlInterface,
) -> PlStatus {
    guard(|| {
        let dielectric = UniformMedium::new(eps1, mu1)?;
        let nimm = DrudeMedium::new(eps_b, mu_b, omega_e, gamma_e, omega_m, gamma_m)?;
        let inner = InterfaceSpec::new(dielectric, nimm)?;
        if out.is_null() {
            return Err(PlError::Null("out"));
        }
        out.write(Box::into_raw(Box::new(PlInterface { inner })));
        Ok(())
    })
}

/// Vacuum against the reference metamaterial. Release with [`pl_interface_free`].
#[no_mangle]
pub extern "C" fn pl_interface_reference() -> *mut PlInterface {
    Box::into_raw(Box::new(PlInterface { inner: InterfaceSpec::reference() }))
}

/// # Safety
/// `iface` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pl_interface_free(iface: *mut PlInterface) {
    if !iface.is_null() {
        drop(Box::from_raw(iface));
    }
}

/// Electric plasma frequency of the metamaterial, rad/s; NaN for null.
///
/// # Safety
/// `iface` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pl_interface_omega_e(iface: *const PlInterface) -> f64 {
    iface.as_ref().map_or(f64::NAN, |i| i.inner.nimm.omega_e)
}

/// # Safety
/// `iface` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pl_solve_mode(
    iface: *const PlInterface,
    omega: f64,
    polarization: PlPolarization,
    out: *mut PlMode,
) -> PlStatus {
    guard(|| {
        let iface = deref(iface, "iface")?;
        let m = dispersion::solve_mode(omega, &iface.inner, polarization.into())?;
        let mode = PlMode {
            k_parallel_re: m.k_parallel.re,
            k_parallel_im: m.k_parallel.im,
            k1_re: m.k1.re,
            k1_im: m.k1.im,
            k2_re: m.k2.re,
            k2_im: m.k2.im,
        };
        write(out, mode, "out")
    })
}

/// # Safety
/// `iface` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pl_mode_profile(
    iface: *const PlInterface,
    omega: f64,
    polarization: PlPolarization,
    out: *mut PlProfile,
) -> PlStatus {
    guard(|| {
        let iface = deref(iface, "iface")?;
        let mode = dispersion::solve_mode(omega, &iface.inner, polarization.into())?;
        let p = dispersion::mode_profile(&mode, &iface.inner)?;
        let profile = PlProfile {
            zeta1: p.zeta1,
            zeta2: p.zeta2,
            lz: p.lz,
            frac_dielectric: p.frac_dielectric,
            frac_nimm: p.frac_nimm,
            deconfined: p.deconfined,
        };
        write(out, profile, "out")
    })
}

/// Frequency of least absorption in `[omega_lo, omega_hi]` (rad/s).
///
/// # Safety
/// `iface` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pl_find_low_loss_frequency(
    iface: *const PlInterface,
    polarization: PlPolarization,
    omega_lo: f64,
    omega_hi: f64,
    out: *mut f64,
) -> PlStatus {
    guard(|| {
        let iface = deref(iface, "iface")?;
        let w = dispersion::find_low_loss_frequency(&iface.inner, polarization.into(), (omega_lo, omega_hi))?;
        write(out, w, "out")
    })
}

/// Evaluate `len` frequencies (rad/s, strictly increasing) into `rows`.
///
/// # Safety
/// `omegas` must hold `len` values and `rows` room for `len` rows.
#[no_mangle]
pub unsafe extern "C" fn pl_sweep(
    iface: *const PlInterface,
    polarization: PlPolarization,
    omegas: *const f64,
    len: usize,
    wavelength: f64,
    rows: *mut PlSweepRow,
) -> PlStatus {
    guard(|| {
        let iface = deref(iface, "iface")?;
        if omegas.is_null() {
            return Err(PlError::Null("omegas"));
        }
        if rows.is_null() {
            return Err(PlError::Null("rows"));
        }
        let grid = std::slice::from_raw_parts(omegas, len);
        let result = dispersion::sweep(&iface.inner, polarization.into(), grid, wavelength)?;
        let out = std::slice::from_raw_parts_mut(rows, len);
        for (slot, r) in out.iter_mut().zip(result) {
            *slot = PlSweepRow {
                omega_norm: r.omega_norm,
                k_parallel: r.k_parallel,
                kappa: r.kappa,
                zeta1_over_lambda: r.zeta1_over_lambda,
                lz_over_lambda: r.lz_over_lambda,
                frac_dielectric: r.frac_dielectric,
                frac_nimm: r.frac_nimm,
                status: match r.status {
                    ModeStatus::Ok => 0,
                    ModeStatus::Deconfined => 1,
                    ModeStatus::NoBoundMode => 2,
                    ModeStatus::Singular => 3,
                },
            };
        }
        Ok(())
    })
}

/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pl_phi(u: f64, out: *mut f64) -> PlStatus {
    guard(|| write(out, deit::phi(u)?, "out"))
}

/// Kerr coefficient and phase at `omega` with single-photon fields of width
/// `spot_width`; the probe wavenumbers of `scenario` are replaced by Re k₁.
///
/// # Safety
/// Pointers must be live and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pl_kerr_at_frequency(
    iface: *const PlInterface,
    polarization: PlPolarization,
    scenario: *const PlDeitScenario,
    collision: *const PlCollisionSetup,
    spot_width: f64,
    omega: f64,
    out: *mut PlKerrPoint,
) -> PlStatus {
    guard(|| {
        let iface = deref(iface, "iface")?;
        let scenario: DeitScenario = (*deref(scenario, "scenario")?).into();
        let collision: CollisionSetup = (*deref(collision, "collision")?).into();
        let p = deit::kerr_at_frequency(omega, &iface.inner, polarization.into(), &scenario, &collision, spot_width)?;
        write(out, PlKerrPoint { chi_a: p.chi_a, phi_b: p.phi_b, mode_length: p.mode_length, kp: p.kp }, "out")
    })
}

/// # Safety
/// `setup` must be live and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pl_xpm_phase_shift(setup: *const PlCollisionSetup, out: *mut PlPhaseShift) -> PlStatus {
    guard(|| {
        let setup: CollisionSetup = (*deref(setup, "setup")?).into();
        let s = deit::xpm_phase_shift(&setup)?;
        write(out, PlPhaseShift { phi_exact: s.phi_exact, phi_walkthrough: s.phi_walkthrough }, "out")
    })
}

/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pl_max_gas_temperature(
    lambda: f64,
    delta: f64,
    atom_mass: f64,
    out: *mut PlThermalBound,
) -> PlStatus {
    guard(|| {
        let b = deit::max_gas_temperature(lambda, delta, atom_mass)?;
        write(out, PlThermalBound { v_max: b.v_max, t_max: b.t_max }, "out")
    })
}

/// Simulate a full walk-through collision and write the phase accumulated at
/// the centre of pulse b. A non-positive `dt` selects the CFL limit.
///
/// # Safety
/// `setup` must be live and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn pl_simulate_collision(
    setup: *const PlCollisionSetup,
    shape: PlPulseShape,
    dx: f64,
    dt: f64,
    out: *mut f64,
) -> PlStatus {
    guard(|| {
        let setup: CollisionSetup = (*deref(setup, "setup")?).into();
        let shape = match shape {
            PlPulseShape::Square => PulseShape::Square,
            PlPulseShape::Gaussian => PulseShape::Gaussian,
        };
        let run = walkthrough_collision(&setup, shape, dx, (dt > 0.0).then_some(dt))?;
        let result = propagate_pair(&run.a, &run.b, &run.config)?;
        write(out, result.phase_at_centroid_b()?, "out")
    })
}
