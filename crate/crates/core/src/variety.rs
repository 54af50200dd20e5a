//! The variety `V_{a,k,n}` and its integral points.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{product, sum_of_squares};
use crate::error::{Error, Result};
use crate::moves::Move;

/// Parameters `(a, k, n)` of `x1^2 + ... + xn^2 - a x1...xn = k`.
///
/// Construction rejects `a = 0` and `n < 3`. Negative `a` is representable so
/// that [`negate_a_transform`] has something to act on, but every reduction and
/// enumeration entry point requires `a > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Params {
    a: BigInt,
    k: BigInt,
    n: usize,
}

impl Params {
    pub fn new(a: impl Into<BigInt>, k: impl Into<BigInt>, n: usize) -> Result<Self> {
        let a = a.into();
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        if n < 3 {
            return Err(Error::TooFewVariables(n));
        }
        Ok(Self { a, k: k.into(), n })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn require_positive(&self) -> Result<()> {
        if self.a.is_positive() {
            Ok(())
        } else {
            Err(Error::NonPositiveCoefficient(self.a.clone()))
        }
    }

    fn check_len(&self, coords: &[BigInt]) -> Result<()> {
        if coords.len() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                actual: coords.len(),
            })
        }
    }

    /// `sum xi^2 - a prod xi`, without the length check.
    pub(crate) fn lhs(&self, coords: &[BigInt]) -> BigInt {
        sum_of_squares(coords) - &self.a * product(coords)
    }

    /// True iff `coords` satisfies the equation exactly.
    pub fn check_on_variety(&self, coords: &[BigInt]) -> Result<bool> {
        self.check_len(coords)?;
        Ok(self.lhs(coords) == self.k)
    }

    /// Validates `coords` and wraps it as a [`Point`].
    pub fn point<I, T>(&self, coords: I) -> Result<Point>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coords: Vec<BigInt> = coords.into_iter().map(Into::into).collect();
        self.check_len(&coords)?;
        let lhs = self.lhs(&coords);
        if lhs != self.k {
            return Err(Error::NotOnVariety {
                coords,
                lhs,
                k: self.k.clone(),
            });
        }
        Ok(Point { coords })
    }

    /// `x_i -> a * prod_{j != i} x_j - x_i` (1-based `i`).
    pub fn vieta(&self, p: &Point, i: usize) -> Result<Point> {
        Move::Vieta(i).apply(self, p)
    }

    /// Negates coordinates `s < t` (1-based).
    pub fn double_sign(&self, p: &Point, s: usize, t: usize) -> Result<Point> {
        Move::DoubleSign(s, t).apply(self, p)
    }

    /// Coordinate `i` of the result is `x_{sigma(i)}`; `sigma` is 1-based.
    pub fn permute(&self, p: &Point, sigma: &[usize]) -> Result<Point> {
        Move::Permute(sigma.to_vec()).apply(self, p)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}, k={}, n={}", self.a, self.k, self.n)
    }
}

/// An integral point known to lie on the variety of the [`Params`] that built it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub(crate) coords: Vec<BigInt>,
}

impl Point {
    /// Wraps coordinates whose membership has already been established.
    pub(crate) fn trusted(coords: Vec<BigInt>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `|x1| + ... + |xn|`.
    pub fn height(&self) -> BigInt {
        height_of(&self.coords)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.coords)
    }
}

pub(crate) fn fmt_tuple(f: &mut fmt::Formatter<'_>, coords: &[BigInt]) -> fmt::Result {
    write!(f, "(")?;
    for (idx, c) in coords.iter().enumerate() {
        if idx > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

pub fn height_of(coords: &[BigInt]) -> BigInt {
    coords.iter().map(|c| c.abs()).sum()
}

/// `(x1, ..., xn; a) -> (-x1, ..., xn; -a)` for any sign of `a`.
///
/// This is an involution between `V_{a,k,n}` and `V_{-a,k,n}`.
pub fn flip_coefficient_sign(p: &Point, params: &Params) -> (Point, Params) {
    let mut coords = p.coords.clone();
    coords[0] = -&coords[0];
    let flipped = Params {
        a: -&params.a,
        k: params.k.clone(),
        n: params.n,
    };
    (Point::trusted(coords), flipped)
}

/// Carries a point of `V_{a,k,n}` with `a < 0` to `V_{-a,k,n}`.
pub fn negate_a_transform(p: &Point, params: &Params) -> Result<(Point, Params)> {
    if !params.a.is_negative() {
        return Err(Error::NonNegativeCoefficient(params.a.clone()));
    }
    Ok(flip_coefficient_sign(p, params))
}
