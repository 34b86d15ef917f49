use thiserror::Error;

/// Error classes map one-to-one onto CLI exit codes: parse -> 2,
/// domain/spectrum/capability -> 3, accuracy/non-convergence -> 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid spectrum: {0}")]
    Spectrum(String),

    #[error("unsupported: {0}")]
    Capability(String),

    #[error("accuracy target not met in {context}: achieved bound {achieved:.3e} > requested {requested:.3e}")]
    Accuracy {
        achieved: f64,
        requested: f64,
        context: String,
    },

    #[error("root finding did not converge: {0}")]
    NonConvergence(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Domain(_) | Error::Spectrum(_) | Error::Capability(_) => 3,
            Error::Accuracy { .. } | Error::NonConvergence(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
