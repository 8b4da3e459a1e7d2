use thiserror::Error;

/// Errors raised by the physics and simulation layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the model (e.g. ω ≤ 0).
    #[error("domain error: {0}")]
    Domain(String),
    /// A closed-form expression hits a pole (η² = 1, Ω_c = 0, v_a = v_b, ...).
    #[error("singularity: {0}")]
    Singularity(String),
    /// No branch pair yields an evanescent, forward-decaying interface mode.
    #[error("no bound surface mode at omega = {omega:e} rad/s")]
    NoBoundMode { omega: f64 },
    /// The loss minimum sits on the edge of the search bracket.
    #[error("bracket error: {0}")]
    Bracket(String),
    /// Simulation setup rejected (CFL, overlapping pulses, bad grid).
    #[error("invalid configuration: {0}")]
    Config(String),
    /// Phase extraction failed because the envelope vanishes.
    #[error("phase extraction failed: {0}")]
    Extraction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {value}")))
    }
}
