use thiserror::Error;

/// Errors surfaced by the algebra engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ring context mismatch: {0}")]
    RingMismatch(String),
    #[error("characteristic {0} is not 0 or a prime below 2^63")]
    InvalidCharacteristic(u64),
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    ExponentLengthMismatch(usize, usize),
    #[error("leading term of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("basis does not carry a Groebner flag")]
    NotGroebner,
    #[error("empty generator list")]
    EmptyBasis,
    #[error("ideal power with exponent 0 rejected")]
    ZeroIdealPower,
    #[error("colon by the zero polynomial")]
    ZeroColonDivisor,
    #[error("saturation did not stabilize within {0} colon iterations")]
    SaturationDiverged(usize),
    #[error("resolution truncated at length {have}, need at least {need}")]
    ResolutionTooShort { have: usize, need: usize },
    #[error("operation requires a nonzero module")]
    ZeroModule,
    #[error("projective dimension is not certified finite: resolution still nonzero at step {0}")]
    InfiniteProjectiveDimension(usize),
    #[error("inhomogeneous data: {0}")]
    Inhomogeneous(String),
    #[error("hypersurface polynomial must be homogeneous of degree >= 2")]
    BadHypersurface,
    #[error("oracle parameters invalid: nMax {nmax} must exceed stabilityWindow {window}")]
    BadOracleParams { nmax: usize, window: usize },
    #[error("predictor and oracle verdicts disagree: predictor {predictor}, oracle {oracle}")]
    VerdictDisagreement { predictor: String, oracle: String },
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
