use sta_core::{
    annealing_width, apply_updates, compute_gradients_from_trace, forward, loss_terms,
    GridTopology, StaModel, TrainConfig,
};
use sta_data::{one_hot, Dataset};

use crate::error::{Result, TrainError};
use crate::history::{EpochRecord, TrainHistory};
use crate::rng::RngStream;

/// Builds the initial model for a normalized dataset: reference vectors are
/// drawn uniformly within each feature's data range, head weights uniformly
/// in [-0.5, 0.5]. Deterministic given the stream's seed.
pub fn init_model(config: &TrainConfig, dataset: &Dataset, rng: &mut RngStream) -> Result<StaModel> {
    config.validate()?;
    if dataset.n_samples() == 0 {
        return Err(TrainError::EmptyDataset);
    }
    let d = dataset.n_features();
    let c = dataset.num_classes();
    let grid = GridTopology::new(config.grid_rows, config.grid_cols)?;
    let n = grid.n_units();

    let mut ranges = Vec::with_capacity(d);
    for k in 0..d {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for row in &dataset.x {
            min = min.min(row[k]);
            max = max.max(row[k]);
        }
        ranges.push((min, max));
    }

    let w = (0..n)
        .map(|_| ranges.iter().map(|&(lo, hi)| rng.uniform(lo, hi)).collect())
        .collect();
    let mut head = |width: usize| -> Vec<Vec<f64>> {
        (0..n)
            .map(|_| (0..width).map(|_| rng.uniform(-0.5, 0.5)).collect())
            .collect()
    };
    let v_dec = head(d);
    let v_cls = head(c);

    let model = StaModel {
        grid,
        w,
        v_dec,
        v_cls,
        sigma_rbf: config.sigma_rbf,
        input_dim: d,
        num_classes: c,
        class_names: dataset.class_names.clone(),
        normalization: dataset.norm_params.clone(),
    };
    model.validate()?;
    Ok(model)
}

/// Runs one SGD epoch: every sample exactly once in a freshly shuffled
/// order, each visited sample contributing its pre-update loss to the
/// epoch means.
pub fn train_epoch(
    model: &mut StaModel,
    dataset: &Dataset,
    t: u32,
    config: &TrainConfig,
    rng: &mut RngStream,
) -> Result<EpochRecord> {
    let n = dataset.n_samples();
    if n == 0 {
        return Err(TrainError::EmptyDataset);
    }
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);

    let empty: Vec<f64> = Vec::new();
    let mut sum_rec = 0.0;
    let mut sum_cls = 0.0;
    for (visit, &i) in order.iter().enumerate() {
        let x = &dataset.x[i];
        let target = match &dataset.labels {
            Some(labels) => one_hot(labels[i], model.num_classes)
                .map_err(|e| TrainError::InvalidConfig(e.to_string()))?,
            None => empty.clone(),
        };
        let trace = forward(x, t, model, config)?;
        let (rec, cls) = loss_terms(&trace, x, &target, config.kappa)?;
        sum_rec += rec;
        sum_cls += cls;
        let grads = compute_gradients_from_trace(&trace, x, &target, model, config.kappa)?;
        apply_updates(model, &grads, config.eta).map_err(|e| TrainError::Diverged {
            epoch: t,
            sample: visit,
            message: e.to_string(),
        })?;
    }
    if !model.all_finite() {
        return Err(TrainError::Diverged {
            epoch: t,
            sample: n,
            message: "non-finite parameter at epoch boundary".into(),
        });
    }
    let m = n as f64;
    Ok(EpochRecord {
        epoch: t,
        s_t: annealing_width(t, config),
        loss_rec: sum_rec / m,
        loss_cls: sum_cls / m,
        loss_total: (sum_rec + sum_cls) / m,
    })
}

/// Full training run: seeded initialization followed by `config.epochs`
/// epochs of per-sample SGD. `(dataset, config)` determines the result
/// bit for bit.
pub fn fit(dataset: &Dataset, config: &TrainConfig) -> Result<(StaModel, TrainHistory)> {
    config.validate()?;
    if config.kappa > 0.0 && dataset.labels.is_none() {
        return Err(TrainError::InvalidConfig(
            "kappa > 0 requires labeled data".into(),
        ));
    }
    let mut init_rng = RngStream::init_stream(config.seed);
    let mut model = init_model(config, dataset, &mut init_rng)?;

    let mut shuffle_rng = RngStream::shuffle_stream(config.seed);
    let mut history = TrainHistory::default();
    for t in 0..config.epochs {
        let record = train_epoch(&mut model, dataset, t, config, &mut shuffle_rng)?;
        history.records.push(record);
    }
    Ok((model, history))
}
