use std::fmt;

use crate::error::{GameError, Result};
use crate::state::Basis;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn other(self) -> Self {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Alice => f.write_str("Alice"),
            Player::Bob => f.write_str("Bob"),
        }
    }
}

/// The classical payoff triple. Coordinating on the preferred venue pays
/// `alpha`, coordinating on the other player's venue pays `beta`, and
/// miscoordination pays `gamma` to both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GamePayoffs {
    alpha: f64,
    beta: f64,
    gamma: f64,
    canonical: bool,
}

impl GamePayoffs {
    /// Canonical construction: requires `alpha > beta > gamma`.
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let payoffs = Self::relaxed(alpha, beta, gamma)?;
        if !payoffs.canonical {
            return Err(GameError::NonCanonicalPayoffs { alpha, beta, gamma });
        }
        Ok(payoffs)
    }

    /// Accepts any finite triple; the ordering is recorded in
    /// [`is_canonical`](Self::is_canonical).
    pub fn relaxed(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && gamma.is_finite()) {
            return Err(GameError::NonFinitePayoffs { alpha, beta, gamma });
        }
        Ok(Self { alpha, beta, gamma, canonical: alpha > beta && beta > gamma })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn require_canonical(&self) -> Result<()> {
        if self.canonical {
            Ok(())
        } else {
            Err(GameError::NonCanonicalPayoffs { alpha: self.alpha, beta: self.beta, gamma: self.gamma })
        }
    }

    /// `(s·alpha + t, s·beta + t, s·gamma + t)`. Canonicity is preserved for `s > 0`.
    pub fn affine(&self, scale: f64, shift: f64) -> Result<Self> {
        Self::relaxed(scale * self.alpha + shift, scale * self.beta + shift, scale * self.gamma + shift)
    }

    /// Exchanges `alpha` and `beta`; the result is never canonical.
    pub fn swap_preferences(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
            gamma: self.gamma,
            canonical: self.beta > self.alpha && self.alpha > self.gamma,
        }
    }

    /// Largest absolute payoff, used to scale absolute tolerances.
    pub fn magnitude(&self) -> f64 {
        self.alpha.abs().max(self.beta.abs()).max(self.gamma.abs())
    }
}

impl fmt::Display for GamePayoffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(alpha={}, beta={}, gamma={})", self.alpha, self.beta, self.gamma)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PayoffPair {
    pub alice: f64,
    pub bob: f64,
}

impl PayoffPair {
    pub fn new(alice: f64, bob: f64) -> Self {
        Self { alice, bob }
    }

    pub fn get(&self, player: Player) -> f64 {
        match player {
            Player::Alice => self.alice,
            Player::Bob => self.bob,
        }
    }

    pub fn swapped(&self) -> Self {
        Self { alice: self.bob, bob: self.alice }
    }

    pub fn max_abs_diff(&self, other: &PayoffPair) -> f64 {
        (self.alice - other.alice).abs().max((self.bob - other.bob).abs())
    }

    pub fn approx_eq(&self, other: &PayoffPair, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }
}

/// A payoff observable, diagonal in the (OO, OT, TO, TT) basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalOperator(pub [f64; 4]);

impl DiagonalOperator {
    pub fn eigenvalue(&self, basis: Basis) -> f64 {
        self.0[basis.index()]
    }

    pub fn diagonal(&self) -> [f64; 4] {
        self.0
    }
}

/// Alice collects `alpha` on |OO>, `beta` on |TT>; Bob the reverse. Both get
/// `gamma` on the mismatched outcomes.
pub fn payoff_operator(player: Player, payoffs: &GamePayoffs) -> DiagonalOperator {
    let (on_oo, on_tt) = match player {
        Player::Alice => (payoffs.alpha, payoffs.beta),
        Player::Bob => (payoffs.beta, payoffs.alpha),
    };
    DiagonalOperator([on_oo, payoffs.gamma, payoffs.gamma, on_tt])
}
