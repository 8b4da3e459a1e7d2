//! Physical constants in SI units (CODATA 2018 exact values where defined).

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Vacuum permittivity, F/m.
pub const EPSILON_0: f64 = 8.854_187_812_8e-12;
/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Elementary charge, C.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// Bohr radius, m.
pub const BOHR_RADIUS: f64 = 5.291_772_109_03e-11;
/// Atomic mass constant, kg.
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;
/// Mass of a ⁸⁷Rb atom, kg (86.909180527 u).
pub const RB87_MASS: f64 = 86.909_180_527 * ATOMIC_MASS_UNIT;
