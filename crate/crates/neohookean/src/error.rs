//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by model construction, evaluation and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The deformation gradient is singular or inverts orientation.
    #[error("invalid deformation: det F = {det} must be positive")]
    InvalidDeformation { det: f64 },

    /// A volume ratio outside the domain J > 0 of a volumetric function.
    #[error("volumetric function evaluated at J = {j}, which must be positive")]
    Domain { j: f64 },

    /// Material constants that violate a model's admissibility range.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The incompressible model needs the hydrostatic pressure (or its rate).
    #[error("the incompressible model requires the pressure argument `{0}`")]
    MissingPressure(&'static str),

    /// The operation is not defined for the requested model or volumetric function.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// No sign change of the residual was found in the scanned bracket.
    #[error("no root of the transverse-stress residual in ln(lambda_T) in [{lo}, {hi}] ({samples} samples)")]
    NoBracket { lo: f64, hi: f64, samples: usize },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
