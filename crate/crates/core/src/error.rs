//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("polynomial is empty after merging like terms")]
    EmptyPolynomial,

    #[error("degenerate support: {0}")]
    DegenerateSupport(String),

    #[error("operation not implemented for dimension {0}")]
    UnsupportedDimension(usize),

    #[error("weights do not match the support: {0}")]
    WeightMismatch(String),

    #[error("t = {0} lies outside (0, 1/e]")]
    TOutOfRange(f64),

    #[error("t = {0} is below e^-10; fiber solving is unreliable at that scale")]
    TUnderflow(f64),

    #[error("quadrature discarded {discarded} of {total} nodes (over the 1% budget)")]
    QuadratureBudget { discarded: usize, total: usize },

    #[error("{failed} of {total} fiber solves failed (over the 1% budget)")]
    FiberFailures { failed: usize, total: usize },

    #[error("amoeba is empty: {0}")]
    EmptyAmoeba(String),

    #[error("empty point cloud passed to a set-distance computation")]
    EmptyCloud,

    #[error("component witness is only {distance} pixels from the amoeba (need >= {required})")]
    ThinComponent { distance: u32, required: u32 },

    #[error("gradient {gradient:?} is {distance} from the nearest lattice point (limit 0.25)")]
    AmbiguousOrder { gradient: Vec<f64>, distance: f64 },

    #[error("direction does not make {0} a strict maximizer over the support")]
    NotStrictlyMaximal(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors arising from bad input rather than failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::DimensionMismatch { .. }
                | Error::EmptyPolynomial
                | Error::DegenerateSupport(_)
                | Error::UnsupportedDimension(_)
                | Error::WeightMismatch(_)
                | Error::TOutOfRange(_)
                | Error::TUnderflow(_)
                | Error::Config(_)
        )
    }
}
