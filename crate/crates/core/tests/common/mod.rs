#![allow(dead_code)]

use qbos::{GamePayoffs, InitialState, StrategyProfile, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn default_payoffs() -> GamePayoffs {
    GamePayoffs::new(2.0, 1.0, 0.0).unwrap()
}

pub fn sixteenths(m: [f64; 4]) -> InitialState {
    InitialState::from_moduli_squared(m.map(|x| x / 16.0)).unwrap()
}

pub fn random_state(rng: &mut impl Rng) -> InitialState {
    loop {
        let raw: [C64; 4] = std::array::from_fn(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return InitialState::new(raw.map(|z| z / norm)).unwrap();
        }
    }
}

pub fn random_moduli_state(rng: &mut impl Rng) -> InitialState {
    let raw: [f64; 4] = std::array::from_fn(|_| rng.random_range(0.0..1.0));
    let total: f64 = raw.iter().sum();
    InitialState::from_moduli_squared(raw.map(|x| x / total)).unwrap()
}

pub fn random_canonical_payoffs(rng: &mut impl Rng) -> GamePayoffs {
    let gamma = rng.random_range(-5.0..5.0);
    let beta = gamma + rng.random_range(0.01..5.0);
    let alpha = beta + rng.random_range(0.01..5.0);
    GamePayoffs::new(alpha, beta, gamma).unwrap()
}

pub fn random_profile(rng: &mut impl Rng) -> StrategyProfile {
    StrategyProfile::new(rng.random_range(0.0..=1.0), rng.random_range(0.0..=1.0)).unwrap()
}

/// Final density matrix built by relabelling basis indices: each product of
/// flips permutes the computational basis, so `ρ_f[i][j]` is a weighted sum
/// of `ψ[π(i)]·conj(ψ[π(j)])`.
pub fn permutation_oracle(state: &InitialState, p: f64, q: f64) -> [[C64; 4]; 4] {
    let psi = state.amplitudes();
    let flip = |index: usize, alice: bool, bob: bool| {
        let (mut a, mut b) = (index >> 1, index & 1);
        if alice {
            a ^= 1;
        }
        if bob {
            b ^= 1;
        }
        (a << 1) | b
    };
    let branches = [
        (p * q, false, false),
        (p * (1.0 - q), false, true),
        ((1.0 - p) * q, true, false),
        ((1.0 - p) * (1.0 - q), true, true),
    ];
    let mut out = [[C64::new(0.0, 0.0); 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for &(w, fa, fb) in &branches {
                *cell += psi[flip(i, fa, fb)] * psi[flip(j, fa, fb)].conj() * w;
            }
        }
    }
    out
}
