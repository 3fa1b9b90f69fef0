use sta_core::FeatureRange;

use crate::error::{DataError, Result};

/// A feature matrix with optional integer labels.
///
/// Raw datasets carry the features exactly as ingested; [`normalize`] maps
/// every column to [0,1] and records the original per-feature ranges so new
/// samples can be mapped into the same frame later.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    /// n x d feature matrix.
    pub x: Vec<Vec<f64>>,
    /// One label in `0..num_classes()` per sample, when present.
    pub labels: Option<Vec<usize>>,
    /// Class names in label-index order; empty for unlabeled data.
    pub class_names: Vec<String>,
    /// Per-feature (min, max) of the data this dataset was normalized from;
    /// identity ranges until `normalize` has run.
    pub norm_params: Vec<FeatureRange>,
}

impl Dataset {
    pub fn new(x: Vec<Vec<f64>>, labels: Option<Vec<usize>>, class_names: Vec<String>) -> Self {
        let d = x.first().map_or(0, Vec::len);
        Self {
            x,
            labels,
            class_names,
            norm_params: vec![FeatureRange { min: 0.0, max: 1.0 }; d],
        }
    }

    pub fn n_samples(&self) -> usize {
        self.x.len()
    }

    pub fn n_features(&self) -> usize {
        self.x.first().map_or(0, Vec::len)
    }

    pub fn num_classes(&self) -> usize {
        self.class_names.len()
    }
}

/// Per-feature min-max scaling to [0,1]. Constant features map to 0.5
/// everywhere. The scaling parameters of the input data are recorded in
/// `norm_params`.
pub fn normalize(raw: &Dataset) -> Dataset {
    let d = raw.n_features();
    let mut params = Vec::with_capacity(d);
    for k in 0..d {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for row in &raw.x {
            min = min.min(row[k]);
            max = max.max(row[k]);
        }
        params.push(FeatureRange { min, max });
    }
    let x = raw
        .x
        .iter()
        .map(|row| {
            row.iter()
                .zip(&params)
                .map(|(v, r)| scale_feature(*v, r))
                .collect()
        })
        .collect();
    Dataset {
        x,
        labels: raw.labels.clone(),
        class_names: raw.class_names.clone(),
        norm_params: params,
    }
}

fn scale_feature(v: f64, r: &FeatureRange) -> f64 {
    if r.max > r.min {
        (v - r.min) / (r.max - r.min)
    } else {
        0.5
    }
}

/// Maps raw features into the [0,1] frame of a previously fitted model
/// using its stored per-feature ranges.
pub fn apply_normalization(raw: &Dataset, params: &[FeatureRange]) -> Result<Dataset> {
    if raw.n_features() != params.len() {
        return Err(DataError::InvalidArgument(format!(
            "data has {} features but the normalization expects {}",
            raw.n_features(),
            params.len()
        )));
    }
    let x = raw
        .x
        .iter()
        .map(|row| {
            row.iter()
                .zip(params)
                .map(|(v, r)| scale_feature(*v, r))
                .collect()
        })
        .collect();
    Ok(Dataset {
        x,
        labels: raw.labels.clone(),
        class_names: raw.class_names.clone(),
        norm_params: params.to_vec(),
    })
}

/// One-hot teacher vector: 1 at `label`, 0 elsewhere.
pub fn one_hot(label: usize, num_classes: usize) -> Result<Vec<f64>> {
    if label >= num_classes {
        return Err(DataError::InvalidArgument(format!(
            "label {label} out of range for {num_classes} classes"
        )));
    }
    let mut t = vec![0.0; num_classes];
    t[label] = 1.0;
    Ok(t)
}
