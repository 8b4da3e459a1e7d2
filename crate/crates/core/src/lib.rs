//! Surface-polariton modes at a dielectric / negative-index-metamaterial
//! interface and the cross-phase shift they mediate between two slow pulses.

pub mod cli;
pub mod config;
pub mod constants;
pub mod deit;
pub mod dispersion;
pub mod error;
pub mod media;
pub mod output;
pub mod propagation;

pub use error::{Error, Result};
