//! Seeded training of the topological autoencoder: model initialization,
//! the per-sample SGD loop with the annealed neighborhood, loss history,
//! and a finite-difference oracle for the analytic gradients.

pub mod error;
pub mod gradcheck;
pub mod history;
pub mod rng;
pub mod trainer;

pub use error::{Result, TrainError};
pub use gradcheck::gradient_check;
pub use history::{EpochRecord, TrainHistory};
pub use rng::{RngStream, RNG_ALGORITHM};
pub use trainer::{fit, init_model, train_epoch};
