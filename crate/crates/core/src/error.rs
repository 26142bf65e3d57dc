use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QpaError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("target eigenvalue p_{k} is degenerate; a nondegenerate target is required")]
    DegenerateTarget { k: usize },

    #[error("target index k={k} out of range 1..={d}")]
    TargetOutOfRange { k: usize, d: usize },

    #[error("invalid removal: {0}")]
    InvalidRemoval(String),

    #[error("sector {0} has zero Schur weight; its fidelity is undefined")]
    UndefinedSector(String),

    #[error("shape mismatch: {0}")]
    Mismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, QpaError>;
