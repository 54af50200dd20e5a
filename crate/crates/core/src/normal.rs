//! Canonical representatives under permutations and double sign changes.
//!
//! Double sign changes preserve the parity of the number of negative entries
//! among nonzero coordinates, and a zero coordinate can absorb any lone sign.
//! So each class is determined by the sorted absolute values together with
//! that parity when no coordinate vanishes. The representative sorts by
//! absolute value and, when a sign must survive, puts it on the first entry:
//! `|x1| <= x2 <= ... <= xn`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::moves::Move;
use crate::variety::{fmt_tuple, height_of, Params, Point};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalPoint(Vec<BigInt>);

impl NormalPoint {
    /// Validates canonical shape and variety membership.
    pub fn from_coords<I, T>(params: &Params, coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let point = params.point(coords)?;
        if !is_canonical(point.coords()) {
            return Err(Error::NotCanonical(point.into_coords()));
        }
        Ok(Self(point.into_coords()))
    }

    pub(crate) fn trusted(coords: Vec<BigInt>) -> Self {
        debug_assert!(is_canonical(&coords), "{coords:?}");
        Self(coords)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn height(&self) -> BigInt {
        height_of(&self.0)
    }

    pub fn to_point(&self) -> Point {
        Point::trusted(self.0.clone())
    }
}

impl fmt::Display for NormalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

/// `|x1| <= x2 <= ... <= xn` with `x2, ..., xn >= 0`.
pub fn is_canonical(coords: &[BigInt]) -> bool {
    let Some((first, rest)) = coords.split_first() else {
        return true;
    };
    if rest.iter().any(Signed::is_negative) {
        return false;
    }
    let first_ok = rest.first().is_none_or(|second| &first.abs() <= second);
    first_ok && rest.windows(2).all(|w| w[0] <= w[1])
}

/// Result of normalizing raw coordinates.
pub(crate) struct Normalization {
    pub coords: Vec<BigInt>,
    pub word: Vec<Move>,
    /// `position[j]` is the 0-based slot that input coordinate `j` ends up in.
    pub position: Vec<usize>,
}

pub(crate) fn normalize_coords(mut coords: Vec<BigInt>) -> Normalization {
    let n = coords.len();
    let mut word = Vec::new();
    let flip = |coords: &mut Vec<BigInt>, i: usize, j: usize, word: &mut Vec<Move>| {
        let (s, t) = if i < j { (i, j) } else { (j, i) };
        coords[s] = -&coords[s];
        coords[t] = -&coords[t];
        word.push(Move::DoubleSign(s + 1, t + 1));
    };

    let negatives: Vec<usize> = (0..n).filter(|&j| coords[j].is_negative()).collect();
    for pair in negatives.chunks(2) {
        if let [s, t] = *pair {
            flip(&mut coords, s, t, &mut word);
        }
    }
    if negatives.len() % 2 == 1 {
        let lone = *negatives.last().unwrap();
        if let Some(zero) = coords.iter().position(Zero::is_zero) {
            flip(&mut coords, lone, zero, &mut word);
        } else {
            let smallest = (0..n).min_by_key(|&j| coords[j].abs()).unwrap();
            if coords[smallest].abs() < coords[lone].abs() {
                flip(&mut coords, lone, smallest, &mut word);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        coords[i]
            .abs()
            .cmp(&coords[j].abs())
            .then_with(|| (!coords[i].is_negative()).cmp(&!coords[j].is_negative()))
    });
    let mut position = vec![0; n];
    for (slot, &j) in order.iter().enumerate() {
        position[j] = slot;
    }
    if order.iter().enumerate().any(|(slot, &j)| slot != j) {
        word.push(Move::Permute(order.iter().map(|j| j + 1).collect()));
        coords = order.iter().map(|&j| coords[j].clone()).collect();
    }
    debug_assert!(is_canonical(&coords), "{coords:?}");
    Normalization {
        coords,
        word,
        position,
    }
}

/// Canonical representative of `p` and a word of sign and permutation moves
/// carrying `p` onto it. Height is unchanged.
pub fn normalize(p: &Point) -> (NormalPoint, Vec<Move>) {
    let Normalization { coords, word, .. } = normalize_coords(p.coords().to_vec());
    (NormalPoint(coords), word)
}
