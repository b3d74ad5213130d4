//! Density matrices and the probabilistic identity/flip channel.

use nalgebra::{Matrix2, Matrix4};

use crate::error::{GameError, Result};
use crate::state::{InitialState, StrategyProfile, C64};
use crate::tolerance;

pub type Matrix4c = Matrix4<C64>;

/// A 4x4 Hermitian, unit-trace, positive-semidefinite operator on the
/// (OO, OT, TO, TT) basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(Matrix4c);

impl DensityMatrix {
    /// Validates Hermiticity and trace at 1e-12 and PSD at -1e-10.
    pub fn new(matrix: Matrix4c) -> Result<Self> {
        let rho = DensityMatrix(matrix);
        let deviation = rho.hermitian_deviation();
        if deviation > tolerance::ARITH {
            return Err(GameError::NotHermitian { deviation });
        }
        let trace = rho.trace();
        if (trace.re - 1.0).abs() > tolerance::ARITH || trace.im.abs() > tolerance::ARITH {
            return Err(GameError::BadTrace { trace: trace.re });
        }
        let lowest = rho.min_eigenvalue();
        if lowest < tolerance::PSD_FLOOR {
            return Err(GameError::NotPositive { eigenvalue: lowest });
        }
        Ok(rho)
    }

    pub(crate) fn new_unchecked(matrix: Matrix4c) -> Self {
        DensityMatrix(matrix)
    }

    pub fn matrix(&self) -> &Matrix4c {
        &self.0
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.0[(row, col)]
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn hermitian_deviation(&self) -> f64 {
        let m = &self.0;
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let values = self.0.symmetric_eigenvalues();
        let mut out = [values[0], values[1], values[2], values[3]];
        out.sort_by(f64::total_cmp);
        out
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// `Tr[rho^2]`; equals 1 for pure states.
    pub fn purity(&self) -> f64 {
        (self.0 * self.0).trace().re
    }

    pub fn diagonal(&self) -> [f64; 4] {
        [0, 1, 2, 3].map(|i| self.0[(i, i)].re)
    }

    /// `Tr[diag(weights) · rho]`.
    pub fn expectation_diagonal(&self, weights: &[f64; 4]) -> f64 {
        let op = Matrix4c::from_diagonal(&nalgebra::Vector4::from(weights.map(|w| C64::new(w, 0.0))));
        (op * self.0).trace().re
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        (self.0 - other.0).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// `rho_in = |psi><psi|`.
pub fn initial_density(state: &InitialState) -> DensityMatrix {
    let amps = state.amplitudes();
    DensityMatrix::new_unchecked(Matrix4c::from_fn(|i, j| amps[i] * amps[j].conj()))
}

fn identity2() -> Matrix2<C64> {
    Matrix2::identity()
}

/// The one-qubit flip `C|O> = |T>, C|T> = |O>`.
pub fn flip() -> Matrix2<C64> {
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    Matrix2::new(zero, one, one, zero)
}

/// Two-qubit operator `alice ⊗ bob` with Alice in the first tensor slot.
pub fn local_operator(alice: &Matrix2<C64>, bob: &Matrix2<C64>) -> Matrix4c {
    alice.kronecker(bob)
}

/// Applies Alice's `p·I + (1-p)·C` and Bob's `q·I + (1-q)·C` as a mixture of
/// the four product unitaries acting by conjugation.
pub fn flip_channel(rho_in: &DensityMatrix, profile: &StrategyProfile) -> DensityMatrix {
    let (p, q) = (profile.p(), profile.q());
    let (id, c) = (identity2(), flip());
    let branches = [
        (p * q, local_operator(&id, &id)),
        (p * (1.0 - q), local_operator(&id, &c)),
        (q * (1.0 - p), local_operator(&c, &id)),
        ((1.0 - p) * (1.0 - q), local_operator(&c, &c)),
    ];
    let rho = rho_in.matrix();
    let mut out = Matrix4c::zeros();
    for (weight, u) in branches {
        if weight != 0.0 {
            out += (u * rho * u.adjoint()) * C64::new(weight, 0.0);
        }
    }
    DensityMatrix::new_unchecked(out)
}

/// The final density matrix written out entry by entry for a pure initial
/// state, as a polynomial in `p` and `q` with the four interference
/// combinations below.
pub fn final_density_closed_form(state: &InitialState, profile: &StrategyProfile) -> DensityMatrix {
    let [a, b, c, d] = state.amplitudes();
    let (p, q) = (profile.p(), profile.q());
    let x = |u: C64, v: C64| u * v.conj();
    let r = |v: f64| C64::new(v, 0.0);
    let pq = r(p * q);
    let (pp, qq) = (r(p), r(q));

    let [ma, mb, mc, md] = state.moduli_squared().map(r);
    let eps = x(a, b) - x(b, a) - x(c, d) + x(d, c);
    let zeta = ma - mb - mc + md;
    let omega = x(a, c) - x(b, d) - x(c, a) + x(d, b);
    let xi = x(a, d) - x(b, c) - x(c, b) + x(d, a);

    // Each entry is pq·(interference) + constant + p·(...) + q·(...).
    #[rustfmt::skip]
    let entries = [
        pq * zeta + md + pp * (mb - md) + qq * (mc - md),
        pq * eps + x(d, c) + pp * (x(b, a) - x(d, c)) + qq * (x(c, d) - x(d, c)),
        pq * omega + x(d, b) + pp * (x(b, d) - x(d, b)) + qq * (x(c, a) - x(d, b)),
        pq * xi + x(d, a) + pp * (x(b, c) - x(d, a)) + qq * (x(c, b) - x(d, a)),

        -pq * eps + x(c, d) + pp * (x(a, b) - x(c, d)) + qq * (x(d, c) - x(c, d)),
        -pq * zeta + mc + pp * (ma - mc) + qq * (md - mc),
        -pq * xi + x(c, b) + pp * (x(a, d) - x(c, b)) + qq * (x(d, a) - x(c, b)),
        -pq * omega + x(c, a) + pp * (x(a, c) - x(c, a)) + qq * (x(d, b) - x(c, a)),

        -pq * omega + x(b, d) + pp * (x(d, b) - x(b, d)) + qq * (x(a, c) - x(b, d)),
        -pq * xi + x(b, c) + pp * (x(d, a) - x(b, c)) + qq * (x(a, d) - x(b, c)),
        -pq * zeta + mb + pp * (md - mb) + qq * (ma - mb),
        -pq * eps + x(b, a) + pp * (x(d, c) - x(b, a)) + qq * (x(a, b) - x(b, a)),

        pq * xi + x(a, d) + pp * (x(c, b) - x(a, d)) + qq * (x(b, c) - x(a, d)),
        pq * omega + x(a, c) + pp * (x(c, a) - x(a, c)) + qq * (x(b, d) - x(a, c)),
        pq * eps + x(a, b) + pp * (x(c, d) - x(a, b)) + qq * (x(b, a) - x(a, b)),
        pq * zeta + ma + pp * (mc - ma) + qq * (mb - ma),
    ];
    DensityMatrix::new_unchecked(Matrix4c::from_row_slice(&entries))
}
