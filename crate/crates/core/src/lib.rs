//! Analysis engine for the quantized Battle of the Sexes.
//!
//! An arbiter prepares `a|OO> + b|OT> + c|TO> + d|TT>`; Alice and Bob each
//! apply the identity with probability `p` (resp. `q`) and the flip
//! otherwise. Payoffs are expectations of diagonal observables in the final
//! state, and are bilinear in `(p, q)`.

pub mod density;
pub mod dilemma;
pub mod equilibrium;
pub mod error;
pub mod explorer;
pub mod format;
pub mod game;
pub mod payoffs;
pub mod state;
pub mod tolerance;

pub use density::{final_density_closed_form, flip_channel, initial_density, DensityMatrix};
pub use dilemma::{dilemma_analysis, DilemmaVerdict, MaximinChoice};
pub use equilibrium::{
    best_response, corner_payoff_matrix, enumerate_equilibria, grid_consistency, is_corner_nash,
    verify_equilibria_grid, BestResponse, CornerCheck, CornerMatrix, Equilibrium, EquilibriumKind, GridConsistency,
};
pub use error::{GameError, Result};
pub use explorer::{
    find_resolving_states, reproduce_reference_results, scan_simplex, CheckOutcome, ReferenceReport, ResolvingStates,
    ScanRecord, SimplexLattice,
};
pub use game::{bilinear_coefficients, payoffs_closed_form, payoffs_trace, BilinearCoefficients};
pub use payoffs::{payoff_operator, DiagonalOperator, GamePayoffs, PayoffPair, Player};
pub use state::{make_initial_state, Basis, Corner, InitialState, StrategyProfile, C64};
