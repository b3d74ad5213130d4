mod common;

use common::*;
use qbos::{final_density_closed_form, flip_channel, initial_density, DensityMatrix, StrategyProfile};

#[test]
fn initial_density_is_a_rank_one_projector() {
    let mut rng = rng(11);
    for _ in 0..500 {
        let state = random_state(&mut rng);
        let rho = initial_density(&state);
        assert!((rho.trace().re - 1.0).abs() <= 1e-12);
        let square = rho.matrix() * rho.matrix();
        let diff = (square - rho.matrix()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(diff <= 1e-12, "rho^2 != rho by {diff}");
        let eig = rho.eigenvalues();
        assert!(eig[..3].iter().all(|&e| e.abs() < 1e-10));
        assert!((eig[3] - 1.0).abs() < 1e-10);
        let amps = state.amplitudes();
        for i in 0..4 {
            for j in 0..4 {
                assert!((rho.entry(i, j) - amps[i] * amps[j].conj()).norm() <= 1e-15);
            }
        }
    }
}

#[test]
fn channel_matches_permutation_oracle_and_closed_form() {
    let mut rng = rng(12);
    for _ in 0..2000 {
        let state = random_state(&mut rng);
        let profile = random_profile(&mut rng);
        let by_channel = flip_channel(&initial_density(&state), &profile);
        let by_formula = final_density_closed_form(&state, &profile);
        let oracle = permutation_oracle(&state, profile.p(), profile.q());
        for (i, row) in oracle.iter().enumerate() {
            for (j, &expected) in row.iter().enumerate() {
                assert!((by_channel.entry(i, j) - expected).norm() <= 1e-12);
                assert!((by_formula.entry(i, j) - expected).norm() <= 1e-12);
            }
        }
    }
}

#[test]
fn closed_form_at_fixed_profile() {
    let mut rng = rng(13);
    let profile = StrategyProfile::new(0.3, 0.7).unwrap();
    for _ in 0..200 {
        let state = random_state(&mut rng);
        let a = flip_channel(&initial_density(&state), &profile);
        let b = final_density_closed_form(&state, &profile);
        assert!(a.max_abs_diff(&b) <= 1e-12);
    }
}

#[test]
fn channel_output_is_a_density_matrix() {
    let mut rng = rng(14);
    for _ in 0..1000 {
        let state = random_state(&mut rng);
        let rho = flip_channel(&initial_density(&state), &random_profile(&mut rng));
        assert!((rho.trace().re - 1.0).abs() <= 1e-12 && rho.trace().im.abs() <= 1e-12);
        assert!(rho.hermitian_deviation() <= 1e-12);
        assert!(rho.min_eigenvalue() >= -1e-10);
        assert!(DensityMatrix::new(*rho.matrix()).is_ok());
    }
}

#[test]
fn channel_accepts_mixed_inputs() {
    // Mixing two channel outputs and feeding the result back in still
    // preserves the density-matrix invariants.
    let mut rng = rng(15);
    for _ in 0..200 {
        let first = initial_density(&random_state(&mut rng));
        let second = initial_density(&random_state(&mut rng));
        let mixed =
            DensityMatrix::new(first.matrix() * qbos::C64::new(0.4, 0.0) + second.matrix() * qbos::C64::new(0.6, 0.0))
                .unwrap();
        let out = flip_channel(&mixed, &random_profile(&mut rng));
        assert!((out.trace().re - 1.0).abs() <= 1e-12);
        assert!(out.min_eigenvalue() >= -1e-10);
        assert!(out.purity() <= 1.0 + 1e-12);
    }
}
