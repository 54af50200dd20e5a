use num_bigint::BigInt;
use thiserror::Error;

use crate::normal::NormalPoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient a must be nonzero")]
    ZeroCoefficient,

    #[error("need at least 3 variables, got {0}")]
    TooFewVariables(usize),

    #[error("expected {expected} coordinates, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("point {coords:?} is not on the variety (lhs = {lhs}, k = {k})")]
    NotOnVariety {
        coords: Vec<BigInt>,
        lhs: BigInt,
        k: BigInt,
    },

    #[error("coordinate index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("double sign change needs 1 <= s < t <= {n}, got ({s}, {t})")]
    InvalidSignPair { s: usize, t: usize, n: usize },

    #[error("{0:?} is not a permutation of 1..=n")]
    NotAPermutation(Vec<usize>),

    #[error("{0:?} is not in normal form")]
    NotCanonical(Vec<BigInt>),

    #[error("operation requires a > 0, got a = {0}; apply negate_a_transform first")]
    NonPositiveCoefficient(BigInt),

    #[error("negate_a_transform requires a < 0, got a = {0}")]
    NonNegativeCoefficient(BigInt),

    /// A point outside every stratum with no strictly descending Vieta
    /// neighbour, or a descent that ran past the step cap.
    #[error(
        "reduction stuck at {point:?} (height {height}) after {steps} steps: {reason}; \
         neighbour heights {neighbour_heights:?}"
    )]
    ReductionStuck {
        point: NormalPoint,
        height: BigInt,
        steps: usize,
        neighbour_heights: Vec<BigInt>,
        reason: &'static str,
    },
}
