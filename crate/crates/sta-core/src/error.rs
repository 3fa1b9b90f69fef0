use thiserror::Error;

/// Errors produced by model construction, the forward/backward math and
/// model (de)serialization.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("training diverged: {0}")]
    TrainingDiverged(String),

    #[error("model file i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("model file parse: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("model file format version {found} is not supported (expected {expected})")]
    VersionMismatch { expected: u32, found: u32 },

    #[error("model shape inconsistency: {0}")]
    ShapeInconsistency(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
