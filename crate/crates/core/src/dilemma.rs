//! Whether the quantum state turns the coordination dilemma into a game with
//! a single focal outcome.
//!
//! Both coordination corners must be equilibria paying the same pair, and
//! each player's pure security level (worst payoff over the opponent's pure
//! choices) must single out the same corner.

use crate::equilibrium::{corner_check_from, corner_matrix_from, CornerMatrix};
use crate::error::Result;
use crate::game::bilinear_coefficients;
use crate::payoffs::GamePayoffs;
use crate::state::{Corner, InitialState};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MaximinChoice {
    P0,
    P1,
    Indifferent,
}

impl MaximinChoice {
    fn compare(security_one: f64, security_zero: f64) -> Self {
        if security_one - security_zero > tolerance::EQUILIBRIUM {
            MaximinChoice::P1
        } else if security_zero - security_one > tolerance::EQUILIBRIUM {
            MaximinChoice::P0
        } else {
            MaximinChoice::Indifferent
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MaximinChoice::P0 => "0",
            MaximinChoice::P1 => "1",
            MaximinChoice::Indifferent => "indifferent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilemmaVerdict {
    pub corner_00_is_ne: bool,
    pub corner_11_is_ne: bool,
    pub equal_corner_payoffs: bool,
    pub maximin_choice_alice: MaximinChoice,
    pub maximin_choice_bob: MaximinChoice,
    /// Worst-case payoff of the identity and of the flip, in that order.
    pub security_alice: [f64; 2],
    pub security_bob: [f64; 2],
    pub unique_solution: Option<Corner>,
    pub resolved: bool,
    pub corner_matrix: CornerMatrix,
}

/// Rejects non-canonical payoffs.
pub fn dilemma_analysis(state: &InitialState, payoffs: &GamePayoffs) -> Result<DilemmaVerdict> {
    payoffs.require_canonical()?;
    let coeffs = bilinear_coefficients(state, payoffs);
    let m = corner_matrix_from(&coeffs);

    let corner_00_is_ne = corner_check_from(&coeffs, Corner::ZeroZero).is_nash;
    let corner_11_is_ne = corner_check_from(&coeffs, Corner::OneOne).is_nash;
    let equal_corner_payoffs = m.get(Corner::OneOne).approx_eq(&m.get(Corner::ZeroZero), tolerance::EQUILIBRIUM);

    let security_alice = [
        m.get(Corner::OneOne).alice.min(m.get(Corner::OneZero).alice),
        m.get(Corner::ZeroOne).alice.min(m.get(Corner::ZeroZero).alice),
    ];
    let security_bob = [
        m.get(Corner::OneOne).bob.min(m.get(Corner::ZeroOne).bob),
        m.get(Corner::OneZero).bob.min(m.get(Corner::ZeroZero).bob),
    ];
    let maximin_choice_alice = MaximinChoice::compare(security_alice[0], security_alice[1]);
    let maximin_choice_bob = MaximinChoice::compare(security_bob[0], security_bob[1]);

    let selected = match (maximin_choice_alice, maximin_choice_bob) {
        (MaximinChoice::P1, MaximinChoice::P1) => Some(Corner::OneOne),
        (MaximinChoice::P0, MaximinChoice::P0) => Some(Corner::ZeroZero),
        _ => None,
    };
    let resolved = corner_00_is_ne && corner_11_is_ne && equal_corner_payoffs && selected.is_some();

    Ok(DilemmaVerdict {
        corner_00_is_ne,
        corner_11_is_ne,
        equal_corner_payoffs,
        maximin_choice_alice,
        maximin_choice_bob,
        security_alice,
        security_bob,
        unique_solution: if resolved { selected } else { None },
        resolved,
        corner_matrix: m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GameError;

    fn default_payoffs() -> GamePayoffs {
        GamePayoffs::new(2.0, 1.0, 0.0).unwrap()
    }

    fn moduli(m: [f64; 4]) -> InitialState {
        InitialState::from_moduli_squared(m.map(|x| x / 16.0)).unwrap()
    }

    #[test]
    fn sixteenths_state_selects_identity_corner() {
        let v = dilemma_analysis(&moduli([5.0, 5.0, 1.0, 5.0]), &default_payoffs()).unwrap();
        assert!(v.resolved);
        assert_eq!(v.unique_solution, Some(Corner::OneOne));
        assert!((v.security_alice[0] - 11.0 / 16.0).abs() < 1e-12);
        assert!((v.security_alice[1] - 7.0 / 16.0).abs() < 1e-12);
        assert_eq!(v.maximin_choice_bob, MaximinChoice::P1);
    }

    #[test]
    fn dual_state_selects_flip_corner() {
        let v = dilemma_analysis(&moduli([5.0, 1.0, 5.0, 5.0]), &default_payoffs()).unwrap();
        assert!(v.resolved);
        assert_eq!(v.unique_solution, Some(Corner::ZeroZero));
        assert_eq!(v.maximin_choice_alice, MaximinChoice::P0);
    }

    #[test]
    fn maximally_entangled_state_stays_unresolved() {
        let v = dilemma_analysis(&InitialState::maximally_entangled(), &default_payoffs()).unwrap();
        assert!(v.corner_00_is_ne && v.corner_11_is_ne && v.equal_corner_payoffs);
        assert_eq!(v.maximin_choice_alice, MaximinChoice::Indifferent);
        assert_eq!(v.maximin_choice_bob, MaximinChoice::Indifferent);
        assert!(!v.resolved);
        assert_eq!(v.unique_solution, None);
    }

    #[test]
    fn classical_state_has_unequal_equilibria() {
        let v = dilemma_analysis(&InitialState::classical(), &default_payoffs()).unwrap();
        assert!(v.corner_00_is_ne && v.corner_11_is_ne);
        assert!(!v.equal_corner_payoffs);
        assert!(!v.resolved);
    }

    #[test]
    fn non_canonical_payoffs_are_refused() {
        let relaxed = GamePayoffs::relaxed(1.0, 2.0, 3.0).unwrap();
        assert!(matches!(
            dilemma_analysis(&InitialState::classical(), &relaxed),
            Err(GameError::NonCanonicalPayoffs { .. })
        ));
    }
}
