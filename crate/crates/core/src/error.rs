use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("initial state has zero norm")]
    ZeroNorm,

    #[error("initial state norm {norm} deviates from 1 by more than {limit}")]
    NormDeviation { norm: f64, limit: f64 },

    #[error("amplitude {index} is not finite")]
    NonFiniteAmplitude { index: usize },

    #[error("squared modulus {index} is negative or not finite: {value}")]
    InvalidModulus { index: usize, value: f64 },

    #[error("payoffs must be finite, got ({alpha}, {beta}, {gamma})")]
    NonFinitePayoffs { alpha: f64, beta: f64, gamma: f64 },

    #[error("payoffs ({alpha}, {beta}, {gamma}) violate alpha > beta > gamma")]
    NonCanonicalPayoffs { alpha: f64, beta: f64, gamma: f64 },

    #[error("probability {name} = {value} lies outside [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("resolution must be at least {min}, got {got}")]
    InvalidResolution { min: usize, got: usize },

    #[error("density matrix is not Hermitian (max asymmetry {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("density matrix trace {trace} differs from 1")]
    BadTrace { trace: f64 },

    #[error("density matrix has negative eigenvalue {eigenvalue:e}")]
    NotPositive { eigenvalue: f64 },
}

pub type Result<T> = std::result::Result<T, GameError>;
