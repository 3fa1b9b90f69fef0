use crate::error::{CoreError, Result};
use crate::grid::GridTopology;
use crate::model::{StaModel, TrainConfig};

/// Logistic function `1/(1+e^-x)`, computed with the branch form that never
/// overflows the exponential.
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Squared Euclidean distance between an input and a reference vector.
fn squared_distance(x: &[f64], w: &[f64]) -> f64 {
    x.iter().zip(w).map(|(a, b)| (a - b) * (a - b)).sum()
}

/// Index of the reference vector nearest to `x`; ties go to the lowest index.
pub fn best_matching_unit(x: &[f64], model: &StaModel) -> Result<usize> {
    if x.len() != model.input_dim {
        return Err(CoreError::DimensionMismatch {
            expected: model.input_dim,
            got: x.len(),
            context: "best_matching_unit input",
        });
    }
    let mut win = 0;
    let mut best = squared_distance(x, &model.w[0]);
    for (j, w) in model.w.iter().enumerate().skip(1) {
        let d = squared_distance(x, w);
        if d < best {
            best = d;
            win = j;
        }
    }
    Ok(win)
}

/// Annealed neighborhood width
/// `S(t) = sigma_inf + (sigma0 - sigma_inf)/2 * (1 + cos(pi*t/t_inf))`.
/// Epochs past `t_inf` clamp to `sigma_inf`.
pub fn annealing_width(t: u32, config: &TrainConfig) -> f64 {
    if t >= config.t_inf {
        return config.sigma_inf;
    }
    let phase = std::f64::consts::PI * t as f64 / config.t_inf as f64;
    config.sigma_inf + 0.5 * (config.sigma0 - config.sigma_inf) * (1.0 + phase.cos())
}

/// Neighborhood coefficient `exp(-dist(win,j)/S(t))`, 1 at the winner.
pub fn neighborhood_coeff(
    j: usize,
    win: usize,
    t: u32,
    config: &TrainConfig,
    grid: &GridTopology,
) -> Result<f64> {
    let dist = grid.distance(win, j)?;
    Ok((-dist / annealing_width(t, config)).exp())
}

/// Hidden activations `H_j = exp(-dist(win,j)/S(t)) * exp(-|x - w_j|^2 / sigma_rbf^2)`.
pub fn hidden_activations(
    x: &[f64],
    model: &StaModel,
    win: usize,
    t: u32,
    config: &TrainConfig,
) -> Result<Vec<f64>> {
    if x.len() != model.input_dim {
        return Err(CoreError::DimensionMismatch {
            expected: model.input_dim,
            got: x.len(),
            context: "hidden_activations input",
        });
    }
    let s = annealing_width(t, config);
    let inv_sigma_sq = 1.0 / (model.sigma_rbf * model.sigma_rbf);
    model
        .w
        .iter()
        .enumerate()
        .map(|(j, w)| {
            let neigh = (-model.grid.distance(win, j)? / s).exp();
            Ok(neigh * (-squared_distance(x, w) * inv_sigma_sq).exp())
        })
        .collect()
}

/// One forward evaluation: winner, hidden vector and both output heads.
#[derive(Debug, Clone, PartialEq)]
pub struct ForwardTrace {
    pub win: usize,
    pub h: Vec<f64>,
    pub o_dec: Vec<f64>,
    pub o_cls: Vec<f64>,
}

/// Forward pass with the winner fixed by the caller. Used by the training
/// loop and by gradient checking, where the winner must stay frozen while
/// parameters are perturbed.
pub fn forward_with_win(
    x: &[f64],
    win: usize,
    t: u32,
    model: &StaModel,
    config: &TrainConfig,
) -> Result<ForwardTrace> {
    let h = hidden_activations(x, model, win, t, config)?;
    let head = |v: &[Vec<f64>], width: usize| -> Vec<f64> {
        (0..width)
            .map(|k| {
                let net: f64 = v.iter().zip(&h).map(|(row, hj)| row[k] * hj).sum();
                sigmoid(net)
            })
            .collect()
    };
    let o_dec = head(&model.v_dec, model.input_dim);
    let o_cls = head(&model.v_cls, model.num_classes);
    Ok(ForwardTrace { win, h, o_dec, o_cls })
}

/// Full forward pass: winner selection, hidden activations, output heads.
pub fn forward(x: &[f64], t: u32, model: &StaModel, config: &TrainConfig) -> Result<ForwardTrace> {
    let win = best_matching_unit(x, model)?;
    forward_with_win(x, win, t, model, config)
}

/// The reconstruction and classification terms of the cost, already weighted
/// by `(1-kappa)/2` and `kappa/2`. The total loss is their sum.
pub fn loss_terms(
    trace: &ForwardTrace,
    x: &[f64],
    target: &[f64],
    kappa: f64,
) -> Result<(f64, f64)> {
    if trace.o_dec.len() != x.len() {
        return Err(CoreError::DimensionMismatch {
            expected: trace.o_dec.len(),
            got: x.len(),
            context: "loss reconstruction target",
        });
    }
    if trace.o_cls.is_empty() && kappa > 0.0 {
        return Err(CoreError::InvalidConfiguration(
            "kappa > 0 requires a classifier head (num_classes > 0)".into(),
        ));
    }
    if trace.o_cls.len() != target.len() {
        return Err(CoreError::DimensionMismatch {
            expected: trace.o_cls.len(),
            got: target.len(),
            context: "loss classification target",
        });
    }
    let rec: f64 = trace
        .o_dec
        .iter()
        .zip(x)
        .map(|(o, xi)| (o - xi) * (o - xi))
        .sum();
    let cls: f64 = trace
        .o_cls
        .iter()
        .zip(target)
        .map(|(o, ti)| (o - ti) * (o - ti))
        .sum();
    Ok((0.5 * (1.0 - kappa) * rec, 0.5 * kappa * cls))
}

/// Mixed cost `L = (1-k)/2 sum_k (O_dec_k - x_k)^2 + k/2 sum_l (O_cls_l - T_l)^2`.
pub fn loss(trace: &ForwardTrace, x: &[f64], target: &[f64], kappa: f64) -> Result<f64> {
    let (rec, cls) = loss_terms(trace, x, target, kappa)?;
    Ok(rec + cls)
}
