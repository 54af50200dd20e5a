//! Generators of the group action: Vieta involutions, double sign changes and
//! coordinate permutations. All indices are 1-based.

use std::fmt;

use num_bigint::BigInt;

use crate::arith::product;
use crate::error::{Error, Result};
use crate::variety::{Params, Point};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// Replace `x_i` by the other root of the equation viewed as a quadratic in `x_i`.
    Vieta(usize),
    /// Negate `x_s` and `x_t`, `s < t`.
    DoubleSign(usize, usize),
    /// Coordinate `i` of the image is `x_{sigma(i)}`.
    Permute(Vec<usize>),
}

impl Move {
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            Move::Vieta(i) => {
                if (1..=n).contains(i) {
                    Ok(())
                } else {
                    Err(Error::IndexOutOfRange { index: *i, n })
                }
            }
            Move::DoubleSign(s, t) => {
                if 1 <= *s && s < t && *t <= n {
                    Ok(())
                } else {
                    Err(Error::InvalidSignPair { s: *s, t: *t, n })
                }
            }
            Move::Permute(sigma) => {
                let mut seen = vec![false; n];
                let ok = sigma.len() == n
                    && sigma.iter().all(|&j| {
                        (1..=n).contains(&j) && !std::mem::replace(&mut seen[j - 1], true)
                    });
                if ok {
                    Ok(())
                } else {
                    Err(Error::NotAPermutation(sigma.clone()))
                }
            }
        }
    }

    pub fn apply(&self, params: &Params, p: &Point) -> Result<Point> {
        self.validate(p.len())?;
        if p.len() != params.n() {
            return Err(Error::LengthMismatch {
                expected: params.n(),
                actual: p.len(),
            });
        }
        let mut coords = p.coords().to_vec();
        self.apply_unchecked(params.a(), &mut coords);
        debug_assert!(params.check_on_variety(&coords).unwrap_or(false));
        Ok(Point::trusted(coords))
    }

    /// Applies a validated move in place.
    pub(crate) fn apply_unchecked(&self, a: &BigInt, coords: &mut Vec<BigInt>) {
        match self {
            Move::Vieta(i) => {
                let idx = i - 1;
                let others = product(
                    coords
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != idx)
                        .map(|(_, c)| c),
                );
                coords[idx] = a * others - &coords[idx];
            }
            Move::DoubleSign(s, t) => {
                coords[s - 1] = -&coords[s - 1];
                coords[t - 1] = -&coords[t - 1];
            }
            Move::Permute(sigma) => {
                *coords = sigma.iter().map(|&j| coords[j - 1].clone()).collect();
            }
        }
    }

    pub fn inverse(&self) -> Move {
        match self {
            Move::Permute(sigma) => {
                let mut inv = vec![0; sigma.len()];
                for (i, &j) in sigma.iter().enumerate() {
                    inv[j - 1] = i + 1;
                }
                Move::Permute(inv)
            }
            other => other.clone(),
        }
    }

    pub fn is_vieta(&self) -> bool {
        matches!(self, Move::Vieta(_))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Vieta(i) => write!(f, "V{i}"),
            Move::DoubleSign(s, t) => write!(f, "S{s},{t}"),
            Move::Permute(sigma) => {
                let parts: Vec<String> = sigma.iter().map(ToString::to_string).collect();
                write!(f, "P[{}]", parts.join(" "))
            }
        }
    }
}

/// Applies `word` left to right.
pub fn apply_word(params: &Params, p: &Point, word: &[Move]) -> Result<Point> {
    word.iter()
        .try_fold(p.clone(), |acc, m| m.apply(params, &acc))
}

/// The word undoing `word`.
pub fn inverse_word(word: &[Move]) -> Vec<Move> {
    word.iter().rev().map(Move::inverse).collect()
}
