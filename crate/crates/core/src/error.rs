//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enum. Variants map one-to-one onto the failure classes
/// of the public operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid construction input (dimensions, missing fields, bad ranges).
    #[error("configuration error: {0}")]
    Config(String),

    /// A function evaluation produced a non-finite value.
    #[error("evaluation error: {0}")]
    Evaluation(String),

    /// A numeric estimate did not reach the requested tolerance.
    #[error("estimation error: {message} (achieved {achieved:e}, requested {requested:e})")]
    Estimation {
        message: String,
        achieved: f64,
        requested: f64,
    },

    /// The partition integral diverges (or overflows past the guard).
    #[error("integrability error: {0}")]
    Integrability(String),

    /// Argument outside the domain of the operation (e.g. t outside [0, T]).
    #[error("domain error: {0}")]
    Domain(String),

    /// A trajectory does not contain a required protocol time.
    #[error("alignment error: trajectory has no state recorded at t = {t}")]
    Alignment { t: f64 },

    /// Not enough data for the requested statistic.
    #[error("statistics error: {0}")]
    Statistics(String),

    /// An observable violated its declared bound.
    #[error("observable error: {0}")]
    Observable(String),

    /// A combinatorial guard was exceeded.
    #[error("size error: {0}")]
    Size(String),

    /// A kernel that violates stationarity was passed to an estimator
    /// without the explicit override flag.
    #[error("kernel refused: {0}")]
    KernelRefused(String),

    /// Malformed protocol / config JSON, with the offending position.
    #[error("schema error at {position}: {message}")]
    Schema { position: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
