use crate::error::{CoreError, Result};
use crate::forward::{forward, ForwardTrace};
use crate::model::{StaModel, TrainConfig};

/// Output-layer error signals `delta_k = (O_k - target_k) * O_k * (1 - O_k)`.
/// The kappa weights are applied later, in the gradients.
pub fn output_deltas(
    trace: &ForwardTrace,
    x: &[f64],
    target: &[f64],
) -> Result<(Vec<f64>, Vec<f64>)> {
    if trace.o_dec.len() != x.len() || trace.o_cls.len() != target.len() {
        return Err(CoreError::DimensionMismatch {
            expected: trace.o_dec.len(),
            got: x.len(),
            context: "output_deltas targets",
        });
    }
    let delta = |o: &f64, t: &f64| (o - t) * o * (1.0 - o);
    let d_dec = trace.o_dec.iter().zip(x).map(|(o, t)| delta(o, t)).collect();
    let d_cls = trace.o_cls.iter().zip(target).map(|(o, t)| delta(o, t)).collect();
    Ok((d_dec, d_cls))
}

/// Error signal backpropagated to hidden unit `j`:
/// `(1/sigma_rbf^2) * ((1-kappa) * sum_k d_dec_k v_dec[j][k] + kappa * sum_l d_cls_l v_cls[j][l])`.
pub fn hidden_delta(
    delta_dec: &[f64],
    delta_cls: &[f64],
    model: &StaModel,
    kappa: f64,
) -> Result<Vec<f64>> {
    if delta_dec.len() != model.input_dim || delta_cls.len() != model.num_classes {
        return Err(CoreError::DimensionMismatch {
            expected: model.input_dim,
            got: delta_dec.len(),
            context: "hidden_delta inputs",
        });
    }
    let inv_sigma_sq = 1.0 / (model.sigma_rbf * model.sigma_rbf);
    Ok((0..model.n_units())
        .map(|j| {
            let dec: f64 = if kappa == 1.0 {
                0.0
            } else {
                delta_dec
                    .iter()
                    .zip(&model.v_dec[j])
                    .map(|(d, v)| d * v)
                    .sum()
            };
            let cls: f64 = if kappa == 0.0 {
                0.0
            } else {
                delta_cls
                    .iter()
                    .zip(&model.v_cls[j])
                    .map(|(d, v)| d * v)
                    .sum()
            };
            inv_sigma_sq * ((1.0 - kappa) * dec + kappa * cls)
        })
        .collect())
}

/// Gradients of the cost with respect to every parameter group.
#[derive(Debug, Clone, PartialEq)]
pub struct Gradients {
    pub w: Vec<Vec<f64>>,
    pub v_dec: Vec<Vec<f64>>,
    pub v_cls: Vec<Vec<f64>>,
}

impl Gradients {
    pub fn all_finite(&self) -> bool {
        self.w
            .iter()
            .chain(self.v_dec.iter())
            .chain(self.v_cls.iter())
            .all(|row| row.iter().all(|v| v.is_finite()))
    }
}

/// Gradients computed from an existing forward trace. The winner inside the
/// trace is treated as a constant of the differentiation.
///
/// With `d_hid` from [`hidden_delta`], the reference-vector gradient is
/// `dL/dW_j = 2 * d_hid_j * H_j * (x - W_j)`; descending it decreases the
/// cost, verified against central finite differences. Degenerate kappa
/// values (0 or 1) produce exact zeros for the disabled head so the
/// corresponding weights stay bitwise untouched under SGD.
pub fn compute_gradients_from_trace(
    trace: &ForwardTrace,
    x: &[f64],
    target: &[f64],
    model: &StaModel,
    kappa: f64,
) -> Result<Gradients> {
    let (d_dec, d_cls) = output_deltas(trace, x, target)?;
    let d_hid = hidden_delta(&d_dec, &d_cls, model, kappa)?;

    let n = model.n_units();
    let mut g_w = vec![vec![0.0; model.input_dim]; n];
    let mut g_dec = vec![vec![0.0; model.input_dim]; n];
    let mut g_cls = vec![vec![0.0; model.num_classes]; n];

    for j in 0..n {
        let hj = trace.h[j];
        let scale = 2.0 * d_hid[j] * hj;
        for (gi, (xi, wi)) in g_w[j].iter_mut().zip(x.iter().zip(&model.w[j])) {
            *gi = scale * (xi - wi);
        }
        if kappa < 1.0 {
            for (g, d) in g_dec[j].iter_mut().zip(&d_dec) {
                *g = (1.0 - kappa) * d * hj;
            }
        }
        if kappa > 0.0 {
            for (g, d) in g_cls[j].iter_mut().zip(&d_cls) {
                *g = kappa * d * hj;
            }
        }
    }
    Ok(Gradients { w: g_w, v_dec: g_dec, v_cls: g_cls })
}

/// Full per-sample gradient computation: forward pass (winner selection
/// included), output deltas, hidden deltas, then all three gradients.
pub fn compute_gradients(
    x: &[f64],
    target: &[f64],
    t: u32,
    model: &StaModel,
    config: &TrainConfig,
) -> Result<Gradients> {
    let trace = forward(x, t, model, config)?;
    compute_gradients_from_trace(&trace, x, target, model, config.kappa)
}

/// SGD step `p <- p - eta * grad_p` over every parameter.
pub fn apply_updates(model: &mut StaModel, grads: &Gradients, eta: f64) -> Result<()> {
    if grads.w.len() != model.w.len()
        || grads.v_dec.len() != model.v_dec.len()
        || grads.v_cls.len() != model.v_cls.len()
    {
        return Err(CoreError::DimensionMismatch {
            expected: model.w.len(),
            got: grads.w.len(),
            context: "apply_updates gradient shapes",
        });
    }
    if !grads.all_finite() {
        return Err(CoreError::TrainingDiverged(
            "non-finite gradient encountered".into(),
        ));
    }
    let step = |params: &mut Vec<Vec<f64>>, grads: &[Vec<f64>]| {
        for (row, grow) in params.iter_mut().zip(grads) {
            for (p, g) in row.iter_mut().zip(grow) {
                *p -= eta * g;
            }
        }
    };
    step(&mut model.w, &grads.w);
    step(&mut model.v_dec, &grads.v_dec);
    step(&mut model.v_cls, &grads.v_cls);
    Ok(())
}
