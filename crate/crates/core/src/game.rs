//! Expected payoffs of the quantized game.
//!
//! Both payoffs are bilinear in `(p, q)`:
//!
//! ```text
//! $A(p, q) = p·(q·Ω + K_A) + q·L_A + Θ_A
//! $B(p, q) = q·(p·Ω + K_B) + p·L_B + Θ_B
//! ```
//!
//! [`payoffs_trace`] evaluates `Tr[P ρ_f]` through the channel and serves as
//! the reference for [`payoffs_closed_form`].

use crate::density::{flip_channel, initial_density};
use crate::payoffs::{payoff_operator, GamePayoffs, PayoffPair, Player};
use crate::state::{InitialState, StrategyProfile};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilinearCoefficients {
    /// `|a|² - |b|² - |c|² + |d|²`
    pub zeta: f64,
    /// `(α + β - 2γ)·ζ`, the shared `p·q` coefficient.
    pub omega_cap: f64,
    /// `α - γ`
    pub phi: f64,
    /// `β - γ`
    pub lambda: f64,
    pub k_alice: f64,
    pub l_alice: f64,
    pub theta_alice: f64,
    pub k_bob: f64,
    pub l_bob: f64,
    pub theta_bob: f64,
}

pub fn bilinear_coefficients(state: &InitialState, payoffs: &GamePayoffs) -> BilinearCoefficients {
    let [a2, b2, c2, d2] = state.moduli_squared();
    let (alpha, beta, gamma) = (payoffs.alpha(), payoffs.beta(), payoffs.gamma());
    let phi = alpha - gamma;
    let lambda = beta - gamma;
    let zeta = a2 - b2 - c2 + d2;

    BilinearCoefficients {
        zeta,
        omega_cap: (alpha + beta - 2.0 * gamma) * zeta,
        phi,
        lambda,
        k_alice: -lambda * a2 + phi * b2 + lambda * c2 - phi * d2,
        l_alice: -lambda * a2 + lambda * b2 + phi * c2 - phi * d2,
        theta_alice: alpha * d2 + gamma * c2 + gamma * b2 + beta * a2,
        k_bob: -phi * a2 + phi * b2 + lambda * c2 - lambda * d2,
        l_bob: -phi * a2 + lambda * b2 + phi * c2 - lambda * d2,
        theta_bob: beta * d2 + gamma * c2 + gamma * b2 + alpha * a2,
    }
}

impl BilinearCoefficients {
    /// `∂$A/∂p` at Bob's mixing probability `q`.
    pub fn alice_gain(&self, q: f64) -> f64 {
        q * self.omega_cap + self.k_alice
    }

    /// `∂$B/∂q` at Alice's mixing probability `p`.
    pub fn bob_gain(&self, p: f64) -> f64 {
        p * self.omega_cap + self.k_bob
    }

    pub fn gain(&self, player: Player, opponent_prob: f64) -> f64 {
        match player {
            Player::Alice => self.alice_gain(opponent_prob),
            Player::Bob => self.bob_gain(opponent_prob),
        }
    }

    pub fn alice_payoff(&self, p: f64, q: f64) -> f64 {
        p * self.alice_gain(q) + q * self.l_alice + self.theta_alice
    }

    pub fn bob_payoff(&self, p: f64, q: f64) -> f64 {
        q * self.bob_gain(p) + p * self.l_bob + self.theta_bob
    }

    pub fn payoffs_at(&self, p: f64, q: f64) -> PayoffPair {
        PayoffPair::new(self.alice_payoff(p, q), self.bob_payoff(p, q))
    }
}

/// `(Tr[P_A ρ_f], Tr[P_B ρ_f])` with `ρ_f` produced by the channel.
pub fn payoffs_trace(state: &InitialState, payoffs: &GamePayoffs, profile: &StrategyProfile) -> PayoffPair {
    let rho_f = flip_channel(&initial_density(state), profile);
    PayoffPair::new(
        rho_f.expectation_diagonal(&payoff_operator(Player::Alice, payoffs).0),
        rho_f.expectation_diagonal(&payoff_operator(Player::Bob, payoffs).0),
    )
}

pub fn payoffs_closed_form(state: &InitialState, payoffs: &GamePayoffs, profile: &StrategyProfile) -> PayoffPair {
    bilinear_coefficients(state, payoffs).payoffs_at(profile.p(), profile.q())
}
