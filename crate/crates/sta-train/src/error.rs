use sta_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TrainError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("empty dataset")]
    EmptyDataset,

    #[error("training diverged at epoch {epoch}, sample {sample}: {message}")]
    Diverged {
        epoch: u32,
        sample: usize,
        message: String,
    },

    #[error(transparent)]
    Core(CoreError),

    #[error("history i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl From<CoreError> for TrainError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidConfiguration(msg) => TrainError::InvalidConfig(msg),
            other => TrainError::Core(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, TrainError>;
