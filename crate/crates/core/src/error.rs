use thiserror::Error;

/// Errors raised while constructing models or evaluating set-ups.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A parameter violated its domain. `field` names the offending input.
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: String, reason: String },

    /// A numerical routine did not converge to the requested tolerance.
    #[error("quadrature did not converge: node doubling changed the result by {change:e} (tolerance {tolerance:e})")]
    NonConvergent { change: f64, tolerance: f64 },

    /// Configuration document could not be parsed or validated.
    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

impl Error {
    pub(crate) fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field: field.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Rejects non-finite and non-positive values.
pub(crate) fn require_positive(field: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(field, format!("must be finite and > 0, got {value}")))
    }
}

pub(crate) fn require_finite(field: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(field, format!("must be finite, got {value}")))
    }
}
