use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::grid::GridTopology;

/// Per-feature min/max of the raw training data, used to map new inputs
/// into the model's normalized coordinate frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureRange {
    pub min: f64,
    pub max: f64,
}

/// The trained network: reference vectors plus both output heads.
///
/// `w[j]` is the d-dimensional reference vector of hidden unit `j`;
/// `v_dec[j][k]` feeds decoder output `k` and `v_cls[j][l]` feeds class
/// output `l`. `num_classes` may be 0 for a pure autoencoder.
#[derive(Debug, Clone, PartialEq)]
pub struct StaModel {
    pub grid: GridTopology,
    pub w: Vec<Vec<f64>>,
    pub v_dec: Vec<Vec<f64>>,
    pub v_cls: Vec<Vec<f64>>,
    pub sigma_rbf: f64,
    pub input_dim: usize,
    pub num_classes: usize,
    /// One name per class; empty when `num_classes` is 0.
    pub class_names: Vec<String>,
    /// One range per input feature.
    pub normalization: Vec<FeatureRange>,
}

impl StaModel {
    /// Builds a model from explicit parameters. Class names default to
    /// `class_0..` and the normalization to the identity range [0,1].
    pub fn new(
        grid: GridTopology,
        w: Vec<Vec<f64>>,
        v_dec: Vec<Vec<f64>>,
        v_cls: Vec<Vec<f64>>,
        sigma_rbf: f64,
    ) -> Result<Self> {
        let input_dim = w.first().map_or(0, Vec::len);
        let num_classes = v_cls.first().map_or(0, Vec::len);
        let model = Self {
            grid,
            w,
            v_dec,
            v_cls,
            sigma_rbf,
            input_dim,
            num_classes,
            class_names: (0..num_classes).map(|l| format!("class_{l}")).collect(),
            normalization: vec![FeatureRange { min: 0.0, max: 1.0 }; input_dim],
        };
        model.validate()?;
        Ok(model)
    }

    pub fn n_units(&self) -> usize {
        self.grid.n_units()
    }

    /// Checks shape consistency and that every parameter is finite.
    pub fn validate(&self) -> Result<()> {
        let n = self.grid.n_units();
        if !(self.sigma_rbf.is_finite() && self.sigma_rbf > 0.0) {
            return Err(CoreError::ShapeInconsistency(format!(
                "sigma_rbf must be positive and finite, got {}",
                self.sigma_rbf
            )));
        }
        for (name, mat, width) in [
            ("W", &self.w, self.input_dim),
            ("V_dec", &self.v_dec, self.input_dim),
            ("V_cls", &self.v_cls, self.num_classes),
        ] {
            if mat.len() != n {
                return Err(CoreError::ShapeInconsistency(format!(
                    "{name} has {} rows, expected {n}",
                    mat.len()
                )));
            }
            for (j, row) in mat.iter().enumerate() {
                if row.len() != width {
                    return Err(CoreError::ShapeInconsistency(format!(
                        "{name}[{j}] has {} entries, expected {width}",
                        row.len()
                    )));
                }
                if row.iter().any(|v| !v.is_finite()) {
                    return Err(CoreError::ShapeInconsistency(format!(
                        "{name}[{j}] contains a non-finite value"
                    )));
                }
            }
        }
        if !self.class_names.is_empty() && self.class_names.len() != self.num_classes {
            return Err(CoreError::ShapeInconsistency(format!(
                "{} class names for {} classes",
                self.class_names.len(),
                self.num_classes
            )));
        }
        if self.normalization.len() != self.input_dim {
            return Err(CoreError::ShapeInconsistency(format!(
                "{} normalization ranges for {} features",
                self.normalization.len(),
                self.input_dim
            )));
        }
        Ok(())
    }

    /// True when every parameter of every matrix is finite.
    pub fn all_finite(&self) -> bool {
        self.w
            .iter()
            .chain(self.v_dec.iter())
            .chain(self.v_cls.iter())
            .all(|row| row.iter().all(|v| v.is_finite()))
    }
}

/// Hyperparameters of one training run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    /// Mixing coefficient in [0,1]: 0 trains an autoencoder, 1 a classifier.
    pub kappa: f64,
    /// SGD learning rate.
    pub eta: f64,
    /// Initial neighborhood annealing width.
    pub sigma0: f64,
    /// Final neighborhood annealing width; `sigma0 > sigma_inf > 0`.
    pub sigma_inf: f64,
    /// Termination epoch of the annealing schedule.
    pub t_inf: u32,
    /// Number of epochs to run; at most `t_inf`. 0 is allowed and returns
    /// the initialized model untouched.
    pub epochs: u32,
    pub grid_rows: usize,
    pub grid_cols: usize,
    /// Fixed RBF width of the hidden activations.
    pub sigma_rbf: f64,
    pub seed: u64,
}

impl TrainConfig {
    /// Defaults matching the CLI: 15x15 grid, 500 epochs, eta 0.05,
    /// sigma0 = max(rows,cols)/2, sigma_inf 0.5, sigma_rbf 1.0, seed 42.
    pub fn with_kappa(kappa: f64) -> Self {
        Self {
            kappa,
            eta: 0.05,
            sigma0: 7.5,
            sigma_inf: 0.5,
            t_inf: 500,
            epochs: 500,
            grid_rows: 15,
            grid_cols: 15,
            sigma_rbf: 1.0,
            seed: 42,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.kappa) || !self.kappa.is_finite() {
            return Err(CoreError::InvalidConfiguration(format!(
                "kappa must be in [0,1], got {}",
                self.kappa
            )));
        }
        if !(self.eta.is_finite() && self.eta > 0.0) {
            return Err(CoreError::InvalidConfiguration(format!(
                "eta must be positive, got {}",
                self.eta
            )));
        }
        if !(self.sigma0 > self.sigma_inf && self.sigma_inf > 0.0) {
            return Err(CoreError::InvalidConfiguration(format!(
                "annealing widths must satisfy sigma0 > sigma_inf > 0, got sigma0={} sigma_inf={}",
                self.sigma0, self.sigma_inf
            )));
        }
        if self.t_inf == 0 {
            return Err(CoreError::InvalidConfiguration(
                "t_inf must be a positive epoch count".into(),
            ));
        }
        if self.epochs > self.t_inf {
            return Err(CoreError::InvalidConfiguration(format!(
                "epochs ({}) must not exceed t_inf ({})",
                self.epochs, self.t_inf
            )));
        }
        if !(self.sigma_rbf.is_finite() && self.sigma_rbf > 0.0) {
            return Err(CoreError::InvalidConfiguration(format!(
                "sigma_rbf must be positive, got {}",
                self.sigma_rbf
            )));
        }
        if self.grid_rows * self.grid_cols < 4 {
            return Err(CoreError::InvalidConfiguration(format!(
                "grid must have at least 4 units, got {}x{}",
                self.grid_rows, self.grid_cols
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_model() -> StaModel {
        StaModel::new(
            GridTopology::new(2, 2).unwrap(),
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]],
            vec![vec![0.1, 0.2]; 4],
            vec![vec![0.3]; 4],
            1.0,
        )
        .unwrap()
    }

    #[test]
    fn new_infers_dims_and_defaults() {
        let m = small_model();
        assert_eq!(m.input_dim, 2);
        assert_eq!(m.num_classes, 1);
        assert_eq!(m.class_names, vec!["class_0"]);
        assert_eq!(m.normalization.len(), 2);
    }

    #[test]
    fn validate_rejects_ragged_and_nonfinite() {
        let mut m = small_model();
        m.w[2] = vec![0.5];
        assert!(m.validate().is_err());

        let mut m = small_model();
        m.v_dec[1][0] = f64::NAN;
        assert!(m.validate().is_err());
    }

    #[test]
    fn config_validation_catches_bad_ranges() {
        let mut c = TrainConfig::with_kappa(0.5);
        assert!(c.validate().is_ok());
        c.kappa = 1.5;
        assert!(c.validate().is_err());

        let mut c = TrainConfig::with_kappa(0.0);
        c.sigma_inf = c.sigma0 + 1.0;
        assert!(c.validate().is_err());

        let mut c = TrainConfig::with_kappa(0.0);
        c.epochs = c.t_inf + 1;
        assert!(c.validate().is_err());
    }
}
