//! Numeric tolerances shared by every module.

/// Arithmetic agreement between two routes computing the same quantity.
pub const ARITH: f64 = 1e-12;

/// Amplitude norms closer than this to one are accepted as-is.
pub const NORM_EXACT: f64 = 1e-12;

/// Norm deviations below this are renormalized; larger ones are rejected.
pub const NORM_RENORMALIZE: f64 = 1e-6;

/// Lowest eigenvalue a density matrix may have and still count as PSD.
pub const PSD_FLOOR: f64 = -1e-10;

/// Slack allowed in Nash inequalities, indifference tests and payoff ties.
pub const EQUILIBRIUM: f64 = 1e-9;

/// Allowed deviation of a moduli-squared vector's sum from one.
pub const MODULI_SUM: f64 = 1e-9;
