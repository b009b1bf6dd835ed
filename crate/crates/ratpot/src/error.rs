//! Error types, one small enum per layer.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum OrthoError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("numeric error: {0}")]
    Numeric(String),
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum XPolyError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ModelError {
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("domain error: {0}")]
    Domain(String),
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum SusyError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("borderline normalizability: {0}")]
    Borderline(String),
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum SpectralError {
    #[error("grid error: {0}")]
    Grid(String),
    #[error("numeric error: {0}")]
    Numeric(String),
}

impl From<OrthoError> for XPolyError {
    fn from(e: OrthoError) -> Self {
        XPolyError::Domain(e.to_string())
    }
}

impl From<OrthoError> for SpectralError {
    fn from(e: OrthoError) -> Self {
        SpectralError::Numeric(e.to_string())
    }
}
