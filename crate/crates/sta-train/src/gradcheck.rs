use sta_core::{
    best_matching_unit, compute_gradients, forward_with_win, loss, StaModel, TrainConfig,
};

use crate::error::Result;

/// Differences below this are treated as zero when forming relative errors,
/// so finite-difference noise around exactly-zero gradients cannot fail the
/// check.
const ABS_FLOOR: f64 = 1e-8;

fn frozen_loss(
    model: &StaModel,
    x: &[f64],
    target: &[f64],
    win: usize,
    epoch: u32,
    config: &TrainConfig,
) -> Result<f64> {
    let trace = forward_with_win(x, win, epoch, model, config)?;
    Ok(loss(&trace, x, target, config.kappa)?)
}

/// Compares the analytic gradients with central finite differences of the
/// cost over every parameter, keeping the winner frozen across
/// perturbations, and returns the worst relative error.
pub fn gradient_check(
    model: &StaModel,
    x: &[f64],
    target: &[f64],
    epoch: u32,
    config: &TrainConfig,
    step: f64,
) -> Result<f64> {
    let win = best_matching_unit(x, model)?;
    let analytic = compute_gradients(x, target, epoch, model, config)?;

    let mut worst: f64 = 0.0;
    let groups: [(&dyn Fn(&mut StaModel) -> &mut Vec<Vec<f64>>, &Vec<Vec<f64>>); 3] = [
        (&|m: &mut StaModel| &mut m.w, &analytic.w),
        (&|m: &mut StaModel| &mut m.v_dec, &analytic.v_dec),
        (&|m: &mut StaModel| &mut m.v_cls, &analytic.v_cls),
    ];
    for (select, grads) in groups {
        for j in 0..grads.len() {
            for i in 0..grads[j].len() {
                let mut hi = model.clone();
                select(&mut hi)[j][i] += step;
                let mut lo = model.clone();
                select(&mut lo)[j][i] -= step;
                let fd = (frozen_loss(&hi, x, target, win, epoch, config)?
                    - frozen_loss(&lo, x, target, win, epoch, config)?)
                    / (2.0 * step);
                let a = grads[j][i];
                let diff = (a - fd).abs();
                if diff > ABS_FLOOR {
                    worst = worst.max(diff / a.abs().max(fd.abs()));
                }
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;
    use crate::trainer::init_model;
    use sta_data::Dataset;

    fn check_config(kappa: f64, rows: usize, cols: usize, sigma_rbf: f64) -> TrainConfig {
        TrainConfig {
            kappa,
            eta: 0.05,
            sigma0: 2.0,
            sigma_inf: 0.5,
            t_inf: 20,
            epochs: 20,
            grid_rows: rows,
            grid_cols: cols,
            sigma_rbf,
            seed: 0,
        }
    }

    /// 3x3 grid, d = 4, C = 3 model drawn through the normal initializer.
    fn random_case(kappa: f64, sigma_rbf: f64, seed: u64) -> (StaModel, Vec<f64>, Vec<f64>, TrainConfig) {
        let cfg = check_config(kappa, 3, 3, sigma_rbf);
        let mut rng = RngStream::init_stream(seed);
        let x: Vec<f64> = (0..4).map(|_| rng.uniform(0.0, 1.0)).collect();
        let xs = vec![
            x.clone(),
            x.iter().map(|v| 1.0 - v).collect(),
            x.iter().map(|v| v * 0.5).collect(),
        ];
        let ds = Dataset::new(xs, Some(vec![0, 1, 2]), vec!["a".into(), "b".into(), "c".into()]);
        let model = init_model(&cfg, &ds, &mut rng).unwrap();
        let mut target = vec![0.0; 3];
        target[(seed % 3) as usize] = 1.0;
        (model, x, target, cfg)
    }

    #[test]
    fn mixed_objective_gradients_pass() {
        let (model, x, target, cfg) = random_case(0.5, 1.0, 17);
        let err = gradient_check(&model, &x, &target, 4, &cfg, 1e-5).unwrap();
        assert!(err < 1e-4, "max relative error {err}");
    }

    #[test]
    fn kappa_zero_classifier_differences_vanish() {
        let (model, x, target, cfg) = random_case(0.0, 1.0, 23);
        let err = gradient_check(&model, &x, &target, 4, &cfg, 1e-5).unwrap();
        assert!(err < 1e-4, "max relative error {err}");
    }

    #[test]
    fn check_holds_under_rbf_width_reparameterization() {
        let (model, x, target, cfg) = random_case(0.7, 0.5, 31);
        let err = gradient_check(&model, &x, &target, 4, &cfg, 1e-5).unwrap();
        assert!(err < 1e-4, "max relative error {err}");
    }
}
