//! Initial states, strategy profiles and the pure corners of the strategy square.
//!
//! Basis order is fixed to (|OO>, |OT>, |TO>, |TT>) with Alice in the first
//! tensor slot. `O` is index 0 and `T` index 1 within a slot.

use std::fmt;

use nalgebra::Complex;

use crate::error::{GameError, Result};
use crate::tolerance;

pub type C64 = Complex<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    OO,
    OT,
    TO,
    TT,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::OO, Basis::OT, Basis::TO, Basis::TT];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Basis {
        Self::ALL[index]
    }

    pub fn label(self) -> &'static str {
        match self {
            Basis::OO => "OO",
            Basis::OT => "OT",
            Basis::TO => "TO",
            Basis::TT => "TT",
        }
    }
}

/// A unit-norm two-qubit state `a|OO> + b|OT> + c|TO> + d|TT>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialState {
    amplitudes: [C64; 4],
    renormalized: bool,
}

/// Validates raw amplitudes. Norm errors up to 1e-6 are treated as rounding
/// and renormalized (flagged); anything larger is a caller data error.
pub fn make_initial_state(a: C64, b: C64, c: C64, d: C64) -> Result<InitialState> {
    InitialState::new([a, b, c, d])
}

impl InitialState {
    pub fn new(amplitudes: [C64; 4]) -> Result<Self> {
        for (index, z) in amplitudes.iter().enumerate() {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(GameError::NonFiniteAmplitude { index });
            }
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr == 0.0 {
            return Err(GameError::ZeroNorm);
        }
        let norm = norm_sqr.sqrt();
        let deviation = (norm - 1.0).abs();
        if deviation <= tolerance::NORM_EXACT {
            return Ok(Self { amplitudes, renormalized: false });
        }
        if deviation >= tolerance::NORM_RENORMALIZE {
            return Err(GameError::NormDeviation { norm, limit: tolerance::NORM_RENORMALIZE });
        }
        Ok(Self { amplitudes: amplitudes.map(|z| z / norm), renormalized: true })
    }

    /// Real nonnegative amplitudes `sqrt(m_i)`.
    pub fn from_moduli_squared(moduli: [f64; 4]) -> Result<Self> {
        for (index, &value) in moduli.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(GameError::InvalidModulus { index, value });
            }
        }
        Self::new(moduli.map(|m| C64::new(m.sqrt(), 0.0)))
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::new([a, b, c, d].map(|x| C64::new(x, 0.0)))
    }

    /// `|OO>`: the classical game.
    pub fn classical() -> Self {
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        Self { amplitudes: [one, zero, zero, zero], renormalized: false }
    }

    /// `(|OO> + |TT>)/sqrt(2)`, the maximally entangled state with b = c = 0.
    pub fn maximally_entangled() -> Self {
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let zero = C64::new(0.0, 0.0);
        Self { amplitudes: [h, zero, zero, h], renormalized: false }
    }

    pub fn amplitudes(&self) -> [C64; 4] {
        self.amplitudes
    }

    pub fn amplitude(&self, basis: Basis) -> C64 {
        self.amplitudes[basis.index()]
    }

    pub fn a(&self) -> C64 {
        self.amplitudes[0]
    }

    pub fn b(&self) -> C64 {
        self.amplitudes[1]
    }

    pub fn c(&self) -> C64 {
        self.amplitudes[2]
    }

    pub fn d(&self) -> C64 {
        self.amplitudes[3]
    }

    pub fn moduli_squared(&self) -> [f64; 4] {
        self.amplitudes.map(|z| z.norm_sqr())
    }

    pub fn was_renormalized(&self) -> bool {
        self.renormalized
    }

    /// Multiplies each amplitude by `exp(i·phase_k)`.
    pub fn with_phases(&self, phases: [f64; 4]) -> Self {
        let mut amplitudes = self.amplitudes;
        for (z, phase) in amplitudes.iter_mut().zip(phases) {
            *z *= C64::from_polar(1.0, phase);
        }
        Self { amplitudes, renormalized: self.renormalized }
    }

    /// Exchanges the tensor slots, i.e. swaps the |OT> and |TO> amplitudes.
    pub fn swap_slots(&self) -> Self {
        let [a, b, c, d] = self.amplitudes;
        Self { amplitudes: [a, c, b, d], renormalized: self.renormalized }
    }

    /// Relabels O <-> T in both slots: (a, b, c, d) -> (d, c, b, a).
    pub fn relabel_outcomes(&self) -> Self {
        let [a, b, c, d] = self.amplitudes;
        Self { amplitudes: [d, c, b, a], renormalized: self.renormalized }
    }

    /// The basis state this state coincides with, if it is one.
    pub fn as_basis_state(&self) -> Option<Basis> {
        let moduli = self.moduli_squared();
        Basis::ALL.into_iter().find(|b| (moduli[b.index()] - 1.0).abs() <= tolerance::ARITH)
    }
}

/// `p` is the probability Alice applies the identity, `q` the same for Bob.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyProfile {
    p: f64,
    q: f64,
}

impl StrategyProfile {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        check_probability("p", p)?;
        check_probability("q", q)?;
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn transposed(&self) -> Self {
        Self { p: self.q, q: self.p }
    }

    pub fn as_corner(&self) -> Option<Corner> {
        let pure = |x: f64| {
            if x == 1.0 {
                Some(true)
            } else if x == 0.0 {
                Some(false)
            } else {
                None
            }
        };
        Some(Corner::from_choices(pure(self.p)?, pure(self.q)?))
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

pub(crate) fn check_probability(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(GameError::InvalidProbability { name, value })
    }
}

/// A pure profile. `One` means the identity is played with certainty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    OneOne,
    OneZero,
    ZeroOne,
    ZeroZero,
}

impl Corner {
    /// In payoff-matrix reading order: rows p = 1, 0; columns q = 1, 0.
    pub const ALL: [Corner; 4] = [Corner::OneOne, Corner::OneZero, Corner::ZeroOne, Corner::ZeroZero];

    pub fn from_choices(alice_identity: bool, bob_identity: bool) -> Self {
        match (alice_identity, bob_identity) {
            (true, true) => Corner::OneOne,
            (true, false) => Corner::OneZero,
            (false, true) => Corner::ZeroOne,
            (false, false) => Corner::ZeroZero,
        }
    }

    pub fn p(self) -> f64 {
        match self {
            Corner::OneOne | Corner::OneZero => 1.0,
            Corner::ZeroOne | Corner::ZeroZero => 0.0,
        }
    }

    pub fn q(self) -> f64 {
        match self {
            Corner::OneOne | Corner::ZeroOne => 1.0,
            Corner::OneZero | Corner::ZeroZero => 0.0,
        }
    }

    pub fn profile(self) -> StrategyProfile {
        StrategyProfile { p: self.p(), q: self.q() }
    }

    /// Position in the 2x2 corner matrix.
    pub fn cell(self) -> (usize, usize) {
        (1 - self.p() as usize, 1 - self.q() as usize)
    }

    pub fn transposed(self) -> Self {
        Corner::from_choices(self.q() == 1.0, self.p() == 1.0)
    }

    pub fn label(self) -> &'static str {
        match self {
            Corner::OneOne => "11",
            Corner::OneZero => "10",
            Corner::ZeroOne => "01",
            Corner::ZeroZero => "00",
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p(), self.q())
    }
}
