//! Dataset ingestion and preparation: CSV loading, min-max normalization,
//! one-hot label encoding, bundled Iris/Wine data and seeded synthetic
//! Gaussian-cluster generators.

pub mod bundled;
pub mod csv_load;
pub mod dataset;
pub mod error;
pub mod synth;

pub use bundled::{bundled_dataset, DATA_DIR_ENV};
pub use csv_load::{load_csv, load_csv_reader};
pub use dataset::{apply_normalization, normalize, one_hot, Dataset};
pub use error::{DataError, Result};
pub use synth::{gen_gaussian_clusters, toy3_spec, toy4_spec, ClusterSpec, GaussianCluster};
