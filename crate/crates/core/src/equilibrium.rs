//! Nash equilibria of the bilinear game on the unit square.
//!
//! Each player's payoff is affine in their own probability, with slope given
//! by [`BilinearCoefficients::alice_gain`] / [`BilinearCoefficients::bob_gain`].
//! A player's best-response graph is therefore a union of axis-aligned
//! pieces, and the equilibrium set is the intersection of the two graphs.

use crate::error::{GameError, Result};
use crate::game::{bilinear_coefficients, BilinearCoefficients};
use crate::payoffs::{GamePayoffs, PayoffPair, Player};
use crate::state::{check_probability, Corner, InitialState, StrategyProfile};
use crate::tolerance;

/// Payoff pairs at the four pure profiles. Rows are `p = 1, 0`, columns `q = 1, 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerMatrix {
    pub cells: [[PayoffPair; 2]; 2],
}

impl CornerMatrix {
    pub fn get(&self, corner: Corner) -> PayoffPair {
        let (row, col) = corner.cell();
        self.cells[row][col]
    }

    /// The matrix seen after Alice and Bob exchange roles.
    pub fn role_swapped(&self) -> Self {
        let mut cells = self.cells;
        for (row, line) in cells.iter_mut().enumerate() {
            for (col, cell) in line.iter_mut().enumerate() {
                *cell = self.cells[col][row].swapped();
            }
        }
        Self { cells }
    }

    pub fn max_abs_diff(&self, other: &CornerMatrix) -> f64 {
        Corner::ALL.iter().map(|&c| self.get(c).max_abs_diff(&other.get(c))).fold(0.0, f64::max)
    }
}

pub fn corner_payoff_matrix(state: &InitialState, payoffs: &GamePayoffs) -> CornerMatrix {
    corner_matrix_from(&bilinear_coefficients(state, payoffs))
}

pub(crate) fn corner_matrix_from(coeffs: &BilinearCoefficients) -> CornerMatrix {
    let at = |c: Corner| coeffs.payoffs_at(c.p(), c.q());
    CornerMatrix { cells: [[at(Corner::OneOne), at(Corner::OneZero)], [at(Corner::ZeroOne), at(Corner::ZeroZero)]] }
}

/// Outcome of the unilateral-deviation test at a pure profile.
///
/// A slack is the payoff the player loses by switching to the other pure
/// strategy; the corner is an equilibrium when both slacks are `>= -1e-9`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerCheck {
    pub corner: Corner,
    pub is_nash: bool,
    pub slack_alice: f64,
    pub slack_bob: f64,
}

impl CornerCheck {
    pub fn is_strict(&self) -> bool {
        self.is_nash && self.slack_alice > tolerance::EQUILIBRIUM && self.slack_bob > tolerance::EQUILIBRIUM
    }
}

pub fn is_corner_nash(state: &InitialState, payoffs: &GamePayoffs, corner: Corner) -> CornerCheck {
    corner_check_from(&bilinear_coefficients(state, payoffs), corner)
}

pub(crate) fn corner_check_from(coeffs: &BilinearCoefficients, corner: Corner) -> CornerCheck {
    let sign = |identity: f64| if identity == 1.0 { 1.0 } else { -1.0 };
    let slack_alice = sign(corner.p()) * coeffs.alice_gain(corner.q());
    let slack_bob = sign(corner.q()) * coeffs.bob_gain(corner.p());
    CornerCheck {
        corner,
        is_nash: slack_alice >= -tolerance::EQUILIBRIUM && slack_bob >= -tolerance::EQUILIBRIUM,
        slack_alice,
        slack_bob,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BestResponse {
    /// Only the flip (`p = 0` or `q = 0`).
    OnlyZero,
    /// Only the identity.
    OnlyOne,
    /// Indifferent: every mixture in `[0, 1]`.
    Any,
}

impl BestResponse {
    fn from_gain(gain: f64) -> Self {
        if gain > tolerance::EQUILIBRIUM {
            BestResponse::OnlyOne
        } else if gain < -tolerance::EQUILIBRIUM {
            BestResponse::OnlyZero
        } else {
            BestResponse::Any
        }
    }

    pub fn contains(self, x: f64) -> bool {
        match self {
            BestResponse::OnlyZero => x == 0.0,
            BestResponse::OnlyOne => x == 1.0,
            BestResponse::Any => (0.0..=1.0).contains(&x),
        }
    }
}

pub fn best_response(
    player: Player,
    state: &InitialState,
    payoffs: &GamePayoffs,
    opponent_prob: f64,
) -> Result<BestResponse> {
    check_probability("opponent_prob", opponent_prob)?;
    let coeffs = bilinear_coefficients(state, payoffs);
    Ok(BestResponse::from_gain(coeffs.gain(player, opponent_prob)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EquilibriumKind {
    Corner(Corner),
    /// A continuum along which `free` can mix anywhere in `interval` while
    /// the other player's choice stays fixed.
    EdgeSegment {
        free: Player,
        interval: (f64, f64),
    },
    /// An isolated mixed equilibrium at which both players are indifferent.
    InteriorPoint,
    /// Both players indifferent everywhere.
    FullSquare,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equilibrium {
    /// The point itself; for segments and the full square, the end with the
    /// smallest free coordinate.
    pub profile: StrategyProfile,
    pub kind: EquilibriumKind,
    pub strict: bool,
    /// Payoffs at `profile`.
    pub payoffs: PayoffPair,
}

impl Equilibrium {
    /// `([p_lo, p_hi], [q_lo, q_hi])` covered by this equilibrium.
    pub fn bounds(&self) -> ((f64, f64), (f64, f64)) {
        let (p, q) = (self.profile.p(), self.profile.q());
        match self.kind {
            EquilibriumKind::Corner(_) | EquilibriumKind::InteriorPoint => ((p, p), (q, q)),
            EquilibriumKind::EdgeSegment { free: Player::Alice, interval } => (interval, (q, q)),
            EquilibriumKind::EdgeSegment { free: Player::Bob, interval } => ((p, p), interval),
            EquilibriumKind::FullSquare => ((0.0, 1.0), (0.0, 1.0)),
        }
    }

    /// Chebyshev distance from `(p, q)` to the equilibrium set.
    pub fn distance_to(&self, p: f64, q: f64) -> f64 {
        let ((p_lo, p_hi), (q_lo, q_hi)) = self.bounds();
        let gap = |x: f64, lo: f64, hi: f64| (lo - x).max(x - hi).max(0.0);
        gap(p, p_lo, p_hi).max(gap(q, q_lo, q_hi))
    }

    pub fn corner(&self) -> Option<Corner> {
        match self.kind {
            EquilibriumKind::Corner(c) => Some(c),
            _ => None,
        }
    }

    pub fn kind_label(&self) -> &'static str {
        match self.kind {
            EquilibriumKind::Corner(_) => "corner",
            EquilibriumKind::EdgeSegment { .. } => "edge-segment",
            EquilibriumKind::InteriorPoint => "interior-point",
            EquilibriumKind::FullSquare => "full-square",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    const UNIT: Interval = Interval { lo: 0.0, hi: 1.0 };

    fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    fn intersect(self, other: Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    fn contains(self, other: Interval) -> bool {
        self.lo <= other.lo + tolerance::ARITH && other.hi <= self.hi + tolerance::ARITH
    }

    fn is_point(self) -> bool {
        self.hi - self.lo <= tolerance::ARITH
    }
}

/// A piece of a best-response graph: `own` is the player's response set
/// while the opponent plays anything in `opponent`.
#[derive(Debug, Clone, Copy)]
struct Piece {
    own: Interval,
    opponent: Interval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

fn classify(gain: f64) -> Sign {
    match BestResponse::from_gain(gain) {
        BestResponse::OnlyOne => Sign::Pos,
        BestResponse::OnlyZero => Sign::Neg,
        BestResponse::Any => Sign::Zero,
    }
}

/// Best-response graph of a player whose marginal gain is affine in the
/// opponent's probability, taking `gain_at_zero` and `gain_at_one` at the
/// two ends.
fn response_graph(gain_at_zero: f64, gain_at_one: f64) -> Vec<Piece> {
    let pure = |sign: Sign| match sign {
        Sign::Pos => Interval::point(1.0),
        Sign::Neg => Interval::point(0.0),
        Sign::Zero => Interval::UNIT,
    };
    let piece = |own, opponent| Piece { own, opponent };
    let (s0, s1) = (classify(gain_at_zero), classify(gain_at_one));
    match (s0, s1) {
        _ if s0 == s1 => vec![piece(pure(s0), Interval::UNIT)],
        (Sign::Zero, other) => vec![piece(Interval::UNIT, Interval::point(0.0)), piece(pure(other), Interval::UNIT)],
        (other, Sign::Zero) => vec![piece(pure(other), Interval::UNIT), piece(Interval::UNIT, Interval::point(1.0))],
        _ => {
            // Strict sign change: the crossing is interior.
            let slope = gain_at_one - gain_at_zero;
            let cross = (-gain_at_zero / slope).clamp(0.0, 1.0);
            vec![
                piece(pure(s0), Interval { lo: 0.0, hi: cross }),
                piece(Interval::UNIT, Interval::point(cross)),
                piece(pure(s1), Interval { lo: cross, hi: 1.0 }),
            ]
        }
    }
}

/// Every Nash equilibrium, each reported once.
pub fn enumerate_equilibria(state: &InitialState, payoffs: &GamePayoffs) -> Vec<Equilibrium> {
    enumerate_from(&bilinear_coefficients(state, payoffs))
}

pub(crate) fn enumerate_from(coeffs: &BilinearCoefficients) -> Vec<Equilibrium> {
    let alice = response_graph(coeffs.alice_gain(0.0), coeffs.alice_gain(1.0));
    let bob = response_graph(coeffs.bob_gain(0.0), coeffs.bob_gain(1.0));

    // Rectangles as (p-interval, q-interval).
    let mut rects: Vec<(Interval, Interval)> = Vec::new();
    for a in &alice {
        for b in &bob {
            if let (Some(p), Some(q)) = (a.own.intersect(b.opponent), a.opponent.intersect(b.own)) {
                rects.push((p, q));
            }
        }
    }

    let mut kept: Vec<(Interval, Interval)> = Vec::new();
    for (i, &(p, q)) in rects.iter().enumerate() {
        let covered = rects.iter().enumerate().any(|(j, &(p2, q2))| {
            if i == j || !(p2.contains(p) && q2.contains(q)) {
                return false;
            }
            // Break ties between identical rectangles by index.
            let identical = p.contains(p2) && q.contains(q2);
            !identical || j < i
        });
        if !covered {
            kept.push((p, q));
        }
    }

    let mut out: Vec<Equilibrium> = kept.into_iter().map(|(p, q)| classify_rect(coeffs, p, q)).collect();
    out.sort_by(|x, y| order_key(x).partial_cmp(&order_key(y)).unwrap_or(std::cmp::Ordering::Equal));
    out
}

fn order_key(e: &Equilibrium) -> (u8, f64, f64) {
    let rank = match e.kind {
        EquilibriumKind::Corner(c) => c as u8,
        EquilibriumKind::EdgeSegment { .. } => 4,
        EquilibriumKind::InteriorPoint => 5,
        EquilibriumKind::FullSquare => 6,
    };
    (rank, e.profile.p(), e.profile.q())
}

fn classify_rect(coeffs: &BilinearCoefficients, p: Interval, q: Interval) -> Equilibrium {
    let profile = StrategyProfile::new(p.lo, q.lo).expect("best-response pieces stay in the unit square");
    let payoffs = coeffs.payoffs_at(p.lo, q.lo);
    let (kind, strict) = match (p.is_point(), q.is_point()) {
        (true, true) => match profile.as_corner() {
            Some(corner) => (EquilibriumKind::Corner(corner), corner_check_from(coeffs, corner).is_strict()),
            None => (EquilibriumKind::InteriorPoint, false),
        },
        (false, true) => (EquilibriumKind::EdgeSegment { free: Player::Alice, interval: (p.lo, p.hi) }, false),
        (true, false) => (EquilibriumKind::EdgeSegment { free: Player::Bob, interval: (q.lo, q.hi) }, false),
        (false, false) => (EquilibriumKind::FullSquare, false),
    };
    Equilibrium { profile, kind, strict, payoffs }
}

/// Outcome of comparing the enumeration against a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridConsistency {
    pub resolution: usize,
    /// Grid profiles at which no player gains more than 1e-9 by deviating.
    pub flagged: Vec<(f64, f64)>,
    /// Flagged profiles farther than one grid step from every enumerated equilibrium.
    pub unexplained: Vec<(f64, f64)>,
    /// Indices of enumerated equilibria with no near-stable grid profile nearby.
    pub unconfirmed: Vec<usize>,
}

impl GridConsistency {
    pub fn is_consistent(&self) -> bool {
        self.unexplained.is_empty() && self.unconfirmed.is_empty()
    }
}

/// Grid oracle for [`enumerate_equilibria`].
///
/// Deviation gains are computed by brute force over the `(n+1)²` grid
/// profiles. Every exactly-stable grid profile must lie within one grid step
/// of an enumerated equilibrium. In the other direction, an equilibrium off
/// the grid is only approximately stable at its grid neighbours, so each
/// enumerated equilibrium must have a neighbour whose deviation gain is
/// within the first-order bound `step · (max |marginal gain| + |Ω|)`.
pub fn grid_consistency(state: &InitialState, payoffs: &GamePayoffs, resolution: usize) -> Result<GridConsistency> {
    if resolution == 0 {
        return Err(GameError::InvalidResolution { min: 1, got: 0 });
    }
    let coeffs = bilinear_coefficients(state, payoffs);
    let equilibria = enumerate_from(&coeffs);
    let n = resolution;
    let step = 1.0 / n as f64;
    let xs: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();

    // alice[i][j] = $A(xs[i], xs[j]); same indexing for bob.
    let alice: Vec<Vec<f64>> = xs.iter().map(|&p| xs.iter().map(|&q| coeffs.alice_payoff(p, q)).collect()).collect();
    let bob: Vec<Vec<f64>> = xs.iter().map(|&p| xs.iter().map(|&q| coeffs.bob_payoff(p, q)).collect()).collect();
    let alice_best: Vec<f64> =
        (0..=n).map(|j| (0..=n).map(|i| alice[i][j]).fold(f64::NEG_INFINITY, f64::max)).collect();
    let bob_best: Vec<f64> = (0..=n).map(|i| bob[i].iter().copied().fold(f64::NEG_INFINITY, f64::max)).collect();
    let gain = |i: usize, j: usize| (alice_best[j] - alice[i][j]).max(bob_best[i] - bob[i][j]);

    let marginal = [alice[n][0] - alice[0][0], alice[n][n] - alice[0][n], bob[0][n] - bob[0][0], bob[n][n] - bob[n][0]];
    let max_marginal = marginal.iter().fold(0.0f64, |m, g| m.max(g.abs()));
    let curvature = (marginal[1] - marginal[0]).abs().max((marginal[3] - marginal[2]).abs());
    let near_bound = tolerance::EQUILIBRIUM + 2.0 * step * (max_marginal + curvature);
    let reach = step + tolerance::ARITH;

    let mut flagged = Vec::new();
    let mut unexplained = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            if gain(i, j) <= tolerance::EQUILIBRIUM {
                let point = (xs[i], xs[j]);
                flagged.push(point);
                if !equilibria.iter().any(|e| e.distance_to(point.0, point.1) <= reach) {
                    unexplained.push(point);
                }
            }
        }
    }

    let index_range = |lo: f64, hi: f64| {
        let first = ((lo - step) * n as f64).floor().max(0.0) as usize;
        let last = (((hi + step) * n as f64).ceil() as usize).min(n);
        first..=last
    };
    let unconfirmed = equilibria
        .iter()
        .enumerate()
        .filter(|(_, e)| {
            let ((p_lo, p_hi), (q_lo, q_hi)) = e.bounds();
            !index_range(p_lo, p_hi).any(|i| {
                index_range(q_lo, q_hi).any(|j| e.distance_to(xs[i], xs[j]) <= reach && gain(i, j) <= near_bound)
            })
        })
        .map(|(k, _)| k)
        .collect();

    Ok(GridConsistency { resolution, flagged, unexplained, unconfirmed })
}

pub fn verify_equilibria_grid(state: &InitialState, payoffs: &GamePayoffs, resolution: usize) -> Result<bool> {
    Ok(grid_consistency(state, payoffs, resolution)?.is_consistent())
}
