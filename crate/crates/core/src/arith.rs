//! Small exact-arithmetic helpers shared across modules.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact square root: `Some(r)` with `r >= 0` and `r * r == value`, else `None`.
pub fn exact_sqrt(value: &BigInt) -> Option<BigInt> {
    if value.is_negative() {
        return None;
    }
    let root = value.sqrt();
    (&root * &root == *value).then_some(root)
}

/// Floor of the square root of a nonnegative value; `None` for negatives.
pub fn isqrt(value: &BigInt) -> Option<BigInt> {
    (!value.is_negative()).then(|| value.sqrt())
}

pub fn product<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigInt>,
{
    values.into_iter().fold(BigInt::one(), |acc, v| acc * v)
}

pub fn sum_of_squares<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigInt>,
{
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc + v * v)
}
