#ifndef POLARITON_LAB_H
#define POLARITON_LAB_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PlStatus {
  PL_STATUS_OK = 0,
  PL_STATUS_NULL_POINTER = 1,
  PL_STATUS_DOMAIN = 2,
  PL_STATUS_SINGULARITY = 3,
  PL_STATUS_NO_BOUND_MODE = 4,
  PL_STATUS_BRACKET = 5,
  PL_STATUS_CONFIG = 6,
  PL_STATUS_EXTRACTION = 7,
  PL_STATUS_PANIC = 8,
} PlStatus;

typedef enum PlPolarization {
  PL_POLARIZATION_TM = 0,
  PL_POLARIZATION_TE = 1,
} PlPolarization;

typedef enum PlPulseShape {
  PL_PULSE_SHAPE_SQUARE = 0,
  PL_PULSE_SHAPE_GAUSSIAN = 1,
} PlPulseShape;

/**
 * Opaque dielectric / metamaterial interface.
 */
typedef struct PlInterface PlInterface;

typedef struct PlMode {
  double k_parallel_re;
  double k_parallel_im;
  double k1_re;
  double k1_im;
  double k2_re;
  double k2_im;
} PlMode;

typedef struct PlProfile {
  double zeta1;
  double zeta2;
  double lz;
  double frac_dielectric;
  double frac_nimm;
  bool deconfined;
} PlProfile;

/**
 * Sweep row; `status` is 0 ok, 1 deconfined, 2 no bound mode, 3 singular.
 */
typedef struct PlSweepRow {
  double omega_norm;
  double k_parallel;
  double kappa;
  double zeta1_over_lambda;
  double lz_over_lambda;
  double frac_dielectric;
  double frac_nimm;
  uint32_t status;
} PlSweepRow;

typedef struct PlDeitScenario {
  double n1;
  double n3;
  double z0;
  double d24;
  double d15;
  double d35;
  double delta;
  double omega_c;
  double kp_a;
  double kp_b;
  double kc;
} PlDeitScenario;

typedef struct PlCollisionSetup {
  double tau;
  double lx;
  double v_a0;
  double v_b0;
  double beta_a;
  double beta_b;
  double chi_a;
} PlCollisionSetup;

typedef struct PlKerrPoint {
  double chi_a;
  double phi_b;
  double mode_length;
  double kp;
} PlKerrPoint;

typedef struct PlPhaseShift {
  double phi_exact;
  double phi_walkthrough;
} PlPhaseShift;

typedef struct PlThermalBound {
  double v_max;
  double t_max;
} PlThermalBound;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *pl_last_error_message(void);

/**
 * # Safety
 * `out` must be valid for writing a pointer.
 */
enum PlStatus pl_interface_new(double eps1,
                               double mu1,
                               double eps_b,
                               double mu_b,
                               double omega_e,
                               double gamma_e,
                               double omega_m,
                               double gamma_m,
                               struct PlInterface **out);

/**
 * Vacuum against the reference metamaterial. Release with [`pl_interface_free`].
 */
struct PlInterface *pl_interface_reference(void);

/**
 * # Safety
 * `iface` must come from this library and not be used afterwards.
 */
void pl_interface_free(struct PlInterface *iface);

/**
 * Electric plasma frequency of the metamaterial, rad/s; NaN for null.
 *
 * # Safety
 * `iface` must be null or a live handle.
 */
double pl_interface_omega_e(const struct PlInterface *iface);

/**
 * # Safety
 * `iface` must be a live handle and `out` valid for writing.
 */
enum PlStatus pl_solve_mode(const struct PlInterface *iface,
                            double omega,
                            enum PlPolarization polarization,
                            struct PlMode *out);

/**
 * # Safety
 * `iface` must be a live handle and `out` valid for writing.
 */
enum PlStatus pl_mode_profile(const struct PlInterface *iface,
                              double omega,
                              enum PlPolarization polarization,
                              struct PlProfile *out);

/**
 * Frequency of least absorption in `[omega_lo, omega_hi]` (rad/s).
 *
 * # Safety
 * `iface` must be a live handle and `out` valid for writing.
 */
enum PlStatus pl_find_low_loss_frequency(const struct PlInterface *iface,
                                         enum PlPolarization polarization,
                                         double omega_lo,
                                         double omega_hi,
                                         double *out);

/**
 * Evaluate `len` frequencies (rad/s, strictly increasing) into `rows`.
 *
 * # Safety
 * `omegas` must hold `len` values and `rows` room for `len` rows.
 */
enum PlStatus pl_sweep(const struct PlInterface *iface,
                       enum PlPolarization polarization,
                       const double *omegas,
                       size_t len,
                       double wavelength,
                       struct PlSweepRow *rows);

/**
 * # Safety
 * `out` must be valid for writing.
 */
enum PlStatus pl_phi(double u, double *out);

/**
 * Kerr coefficient and phase at `omega` with single-photon fields of width
 * `spot_width`; the probe wavenumbers of `scenario` are replaced by Re k₁.
 *
 * # Safety
 * Pointers must be live and `out` valid for writing.
 */
enum PlStatus pl_kerr_at_frequency(const struct PlInterface *iface,
                                   enum PlPolarization polarization,
                                   const struct PlDeitScenario *scenario,
                                   const struct PlCollisionSetup *collision,
                                   double spot_width,
                                   double omega,
                                   struct PlKerrPoint *out);

/**
 * # Safety
 * `setup` must be live and `out` valid for writing.
 */
enum PlStatus pl_xpm_phase_shift(const struct PlCollisionSetup *setup, struct PlPhaseShift *out);

/**
 * # Safety
 * `out` must be valid for writing.
 */
enum PlStatus pl_max_gas_temperature(double lambda,
                                     double delta,
                                     double atom_mass,
                                     struct PlThermalBound *out);

/**
 * Simulate a full walk-through collision and write the phase accumulated at
 * the centre of pulse b. A non-positive `dt` selects the CFL limit.
 *
 * # Safety
 * `setup` must be live and `out` valid for writing.
 */
enum PlStatus pl_simulate_collision(const struct PlCollisionSetup *setup,
                                    enum PlPulseShape shape,
                                    double dx,
                                    double dt,
                                    double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLARITON_LAB_H */
