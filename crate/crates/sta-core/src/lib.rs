//! Model types and the exact mathematics of the soft-supervised topological
//! autoencoder: a three-layer network whose hidden units sit on a 2-D grid.
//!
//! The forward pass picks the best matching unit among the reference
//! vectors, computes neighborhood-weighted RBF hidden activations, and
//! feeds them through sigmoid decoder and classifier heads. A mixing
//! coefficient `kappa` blends the reconstruction and classification
//! objectives; the analytic gradients here are the true gradients of that
//! mixed cost with the winner frozen, validated against finite differences.

pub mod backprop;
pub mod error;
pub mod forward;
pub mod grid;
pub mod io;
pub mod model;

pub use backprop::{
    apply_updates, compute_gradients, compute_gradients_from_trace, hidden_delta, output_deltas,
    Gradients,
};
pub use error::{CoreError, Result};
pub use forward::{
    annealing_width, best_matching_unit, forward, forward_with_win, hidden_activations, loss,
    loss_terms, neighborhood_coeff, sigmoid, ForwardTrace,
};
pub use grid::{grid_distance, GridTopology};
pub use io::{load_model, model_from_str, model_to_string, save_model, FORMAT_VERSION};
pub use model::{FeatureRange, StaModel, TrainConfig};
