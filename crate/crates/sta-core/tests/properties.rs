//! Property tests for the forward-pass invariants and the serialization
//! contract.

use proptest::prelude::*;
use sta_core::{
    best_matching_unit, forward, hidden_activations, model_from_str, model_to_string,
    GridTopology, StaModel, TrainConfig,
};

fn config_for(rows: usize, cols: usize, sigma0: f64, t_inf: u32) -> TrainConfig {
    TrainConfig {
        kappa: 0.0,
        eta: 0.05,
        sigma0,
        sigma_inf: 0.5,
        t_inf,
        epochs: t_inf,
        grid_rows: rows,
        grid_cols: cols,
        sigma_rbf: 1.0,
        seed: 0,
    }
}

prop_compose! {
    fn arb_model()(rows in 2usize..5, cols in 2usize..5, d in 1usize..6)
        (w in prop::collection::vec(prop::collection::vec(0.0..1.0f64, d), rows * cols),
         v in prop::collection::vec(prop::collection::vec(-0.5..0.5f64, d), rows * cols),
         rows in Just(rows), cols in Just(cols), d in Just(d))
        -> (StaModel, usize) {
        let model = StaModel::new(
            GridTopology::new(rows, cols).unwrap(),
            w,
            v,
            vec![vec![]; rows * cols],
            1.0,
        ).unwrap();
        (model, d)
    }
}

proptest! {
    #[test]
    fn hidden_activations_bounded_and_exact_at_winner(
        (model, d) in arb_model(),
        xs in prop::collection::vec(0.0..1.0f64, 8),
        t in 0u32..12,
    ) {
        let x = &xs[..d];
        let cfg = config_for(model.grid.rows(), model.grid.cols(), 3.0, 12);
        let win = best_matching_unit(x, &model).unwrap();
        let h = hidden_activations(x, &model, win, t, &cfg).unwrap();
        for &hj in &h {
            prop_assert!(hj > 0.0 && hj <= 1.0);
        }
        // neighborhood coefficient is exactly 1 at the winner, so H_win is
        // the bare Gaussian of the reference distance
        let sq: f64 = x.iter().zip(&model.w[win]).map(|(a, b)| (a - b) * (a - b)).sum();
        prop_assert_eq!(h[win], (-sq).exp());
    }

    #[test]
    fn bmu_unchanged_by_duplicate_of_non_winning_reference(
        w in prop::collection::vec(prop::collection::vec(0.0..1.0f64, 3), 5),
        x in prop::collection::vec(0.0..1.0f64, 3),
        dup in 0usize..5,
    ) {
        let base = StaModel::new(
            GridTopology::new(1, 5).unwrap(),
            w.clone(),
            vec![vec![0.0; 3]; 5],
            vec![vec![]; 5],
            1.0,
        ).unwrap();
        let win = best_matching_unit(&x, &base).unwrap();
        prop_assume!(dup != win);

        let mut w_ext = w;
        w_ext.push(w_ext[dup].clone());
        let extended = StaModel::new(
            GridTopology::new(1, 6).unwrap(),
            w_ext,
            vec![vec![0.0; 3]; 6],
            vec![vec![]; 6],
            1.0,
        ).unwrap();
        prop_assert_eq!(best_matching_unit(&x, &extended).unwrap(), win);
    }

    #[test]
    fn forward_outputs_stay_in_open_unit_interval(
        (model, d) in arb_model(),
        xs in prop::collection::vec(0.0..1.0f64, 8),
        t in 0u32..12,
    ) {
        let x = &xs[..d];
        let cfg = config_for(model.grid.rows(), model.grid.cols(), 3.0, 12);
        let trace = forward(x, t, &model, &cfg).unwrap();
        for &o in trace.o_dec.iter().chain(trace.o_cls.iter()) {
            prop_assert!(o > 0.0 && o < 1.0);
        }
    }

    #[test]
    fn serialization_round_trip_is_identity(
        (model, _d) in arb_model(),
    ) {
        let text = model_to_string(&model).unwrap();
        let back = model_from_str(&text).unwrap();
        prop_assert_eq!(back, model);
    }
}
