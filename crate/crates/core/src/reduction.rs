//! Height descent to the fundamental domain.
//!
//! Starting from any point, normalize, stop as soon as the current normal
//! point is a stratum member, and otherwise take the Vieta neighbour of
//! smallest height (smallest index on ties). Every non-member has a strictly
//! lower neighbour, so heights strictly decrease and the loop terminates at
//! the unique fundamental-domain representative of the orbit.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::moves::{apply_word, inverse_word, Move};
use crate::normal::{normalize, normalize_coords, NormalPoint};
use crate::stratum::{stratum_member, Stratum};
use crate::variety::{Params, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Runaway guard on the number of Vieta steps.
    pub max_steps: usize,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        Self {
            max_steps: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub point: NormalPoint,
    pub height: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub representative: NormalPoint,
    pub stratum: Stratum,
    /// Replaying this on the input point yields `representative` exactly.
    pub word: Vec<Move>,
    /// Normal points visited, starting with the normalized input.
    pub trace: Vec<TraceStep>,
}

impl ReductionResult {
    pub fn vieta_steps(&self) -> usize {
        self.word.iter().filter(|m| m.is_vieta()).count()
    }

    pub fn initial_height(&self) -> &BigInt {
        &self.trace[0].height
    }

    pub fn final_height(&self) -> &BigInt {
        &self.trace[self.trace.len() - 1].height
    }
}

/// Heights of the `n` Vieta neighbours of `coords`, in index order.
fn neighbour_heights(a: &BigInt, coords: &[BigInt], height: &BigInt) -> Vec<BigInt> {
    (1..=coords.len())
        .map(|i| {
            let mut next = coords.to_vec();
            Move::Vieta(i).apply_unchecked(a, &mut next);
            height - coords[i - 1].abs() + next[i - 1].abs()
        })
        .collect()
}

/// True iff every Vieta neighbour of `q` is strictly higher than `q`.
pub fn is_last_vertex(q: &NormalPoint, params: &Params) -> Result<bool> {
    params.require_positive()?;
    if !params.check_on_variety(q.coords())? {
        return Err(Error::NotOnVariety {
            coords: q.coords().to_vec(),
            lhs: params.lhs(q.coords()),
            k: params.k().clone(),
        });
    }
    let height = q.height();
    Ok(neighbour_heights(params.a(), q.coords(), &height)
        .iter()
        .all(|h| h > &height))
}

pub fn reduce(p: &Point, params: &Params) -> Result<ReductionResult> {
    reduce_with(p, params, &ReduceOptions::default())
}

pub fn reduce_with(p: &Point, params: &Params, opts: &ReduceOptions) -> Result<ReductionResult> {
    params.require_positive()?;
    if !params.check_on_variety(p.coords())? {
        return Err(Error::NotOnVariety {
            coords: p.coords().to_vec(),
            lhs: params.lhs(p.coords()),
            k: params.k().clone(),
        });
    }

    let (mut current, mut word) = normalize(p);
    let mut height = current.height();
    let mut trace = Vec::new();
    let mut steps = 0usize;

    loop {
        trace.push(TraceStep {
            point: current.clone(),
            height: height.clone(),
        });
        if let Some(stratum) = stratum_member(&current, params)? {
            return Ok(ReductionResult {
                representative: current,
                stratum,
                word,
                trace,
            });
        }

        let heights = neighbour_heights(params.a(), current.coords(), &height);
        // min_by_key keeps the first minimum, i.e. the smallest index
        let (best, best_height) = heights
            .iter()
            .enumerate()
            .min_by_key(|(_, h)| *h)
            .map(|(i, h)| (i + 1, h.clone()))
            .expect("n >= 3");
        if best_height >= height {
            return Err(Error::ReductionStuck {
                point: current,
                height,
                steps,
                neighbour_heights: heights,
                reason: "no stratum contains the point and no Vieta neighbour is lower",
            });
        }
        if steps >= opts.max_steps {
            return Err(Error::ReductionStuck {
                point: current,
                height,
                steps,
                neighbour_heights: heights,
                reason: "step cap exceeded",
            });
        }

        let mut next = current.into_coords();
        Move::Vieta(best).apply_unchecked(params.a(), &mut next);
        let normalized = normalize_coords(next);
        word.push(Move::Vieta(best));
        word.extend(normalized.word);
        current = NormalPoint::trusted(normalized.coords);
        height = best_height;
        steps += 1;
        log::trace!("descent step {steps}: V{best} -> {current} (height {height})");
    }
}

/// Whether `p` and `q` lie in the same orbit.
pub fn equivalent(p: &Point, q: &Point, params: &Params) -> Result<bool> {
    Ok(reduce(p, params)?.representative == reduce(q, params)?.representative)
}

/// A word carrying `p` to `q` when they are equivalent.
pub fn equivalence_word(p: &Point, q: &Point, params: &Params) -> Result<Option<Vec<Move>>> {
    let from_p = reduce(p, params)?;
    let from_q = reduce(q, params)?;
    if from_p.representative != from_q.representative {
        return Ok(None);
    }
    let mut word = from_p.word;
    word.extend(inverse_word(&from_q.word));
    debug_assert_eq!(apply_word(params, p, &word).as_ref(), Ok(q));
    Ok(Some(word))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: i64, k: i64, n: usize) -> Params {
        Params::new(a, k, n).unwrap()
    }

    fn ints(q: &NormalPoint) -> Vec<i64> {
        q.coords()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn last_vertex(a: i64, k: i64, n: usize, c: &[i64]) -> bool {
        let pr = params(a, k, n);
        let q = NormalPoint::from_coords(&pr, c.iter().copied()).unwrap();
        is_last_vertex(&q, &pr).unwrap()
    }

    #[test]
    fn last_vertex_examples() {
        assert!(last_vertex(1, 4, 3, &[-1, 1, 1]));
        assert!(!last_vertex(1, 0, 3, &[3, 3, 6]));
        // Vieta fixes the origin, so the strict inequality fails
        assert!(!last_vertex(1, 0, 3, &[0, 0, 0]));
        // V2 maps (2,3,3) to itself
        assert!(!last_vertex(1, 4, 3, &[2, 3, 3]));
    }

    #[test]
    fn reduce_markoff_single_step() {
        let pr = params(1, 0, 3);
        let p = pr.point([3, 3, 6]).unwrap();
        let r = reduce(&p, &pr).unwrap();
        assert_eq!(ints(&r.representative), [3, 3, 3]);
        assert_eq!(r.stratum, Stratum::Sgt2Pos);
        assert_eq!(r.word, vec![Move::Vieta(3)]);
        assert_eq!(
            apply_word(&pr, &p, &r.word).unwrap(),
            r.representative.to_point()
        );
    }

    #[test]
    fn reduce_by_normalization_only() {
        let pr = params(1, 5, 3);
        let p = pr.point([0, -2, 1]).unwrap();
        let r = reduce(&p, &pr).unwrap();
        assert_eq!(ints(&r.representative), [0, 1, 2]);
        assert_eq!(r.stratum, Stratum::S0);
        assert_eq!(r.vieta_steps(), 0);
        assert_eq!(
            apply_word(&pr, &p, &r.word).unwrap(),
            r.representative.to_point()
        );
    }

    #[test]
    fn reduce_fixed_point_in_s1() {
        let pr = params(1, 8, 3);
        let p = pr.point([-1, 1, 2]).unwrap();
        let r = reduce(&p, &pr).unwrap();
        assert_eq!(ints(&r.representative), [-1, 1, 2]);
        assert_eq!(r.stratum, Stratum::S1);
        assert!(r.word.is_empty());
    }

    #[test]
    fn reduce_t1_point_with_leading_one() {
        // (1,1,2): 6 - 2 = 4
        let pr = params(1, 4, 3);
        let p = pr.point([1, 1, 2]).unwrap();
        let r = reduce(&p, &pr).unwrap();
        assert_eq!(ints(&r.representative), [-1, 1, 1]);
        assert_eq!(r.stratum, Stratum::S1);
        assert_eq!(r.word[0], Move::Vieta(3));
    }

    #[test]
    fn trace_heights_strictly_decrease() {
        let pr = params(1, 0, 3);
        let mut p = pr.point([3, 3, 3]).unwrap();
        for i in [3, 1, 2, 3, 1, 2, 1] {
            p = pr.vieta(&p, i).unwrap();
        }
        let r = reduce(&p, &pr).unwrap();
        assert_eq!(ints(&r.representative), [3, 3, 3]);
        assert!(r.trace.windows(2).all(|w| w[1].height < w[0].height));
        assert_eq!(r.trace.len(), r.vieta_steps() + 1);
    }

    #[test]
    fn equivalence_examples() {
        let pr = params(1, 0, 3);
        let p = pr.point([3, 3, 6]).unwrap();
        let q = pr.point([3, 6, 15]).unwrap();
        assert!(equivalent(&p, &q, &pr).unwrap());
        let w = equivalence_word(&p, &q, &pr).unwrap().unwrap();
        assert_eq!(apply_word(&pr, &p, &w).unwrap(), q);

        let zero = pr.point([0, 0, 0]).unwrap();
        let three = pr.point([3, 3, 3]).unwrap();
        assert!(!equivalent(&zero, &three, &pr).unwrap());
        assert_eq!(equivalence_word(&zero, &three, &pr).unwrap(), None);

        let w = equivalence_word(&p, &p, &pr).unwrap().unwrap();
        assert_eq!(apply_word(&pr, &p, &w).unwrap(), p);
    }

    #[test]
    fn sign_and_permutation_images_are_equivalent() {
        let pr = params(1, 0, 3);
        let p = pr.point([3, 6, 15]).unwrap();
        let q = pr.double_sign(&p, 1, 2).unwrap();
        let q = pr.permute(&q, &[3, 1, 2]).unwrap();
        assert!(equivalent(&p, &q, &pr).unwrap());
    }

    #[test]
    fn step_cap_surfaces_as_error() {
        let pr = params(1, 0, 3);
        let p = pr.point([3, 6, 15]).unwrap();
        let err = reduce_with(&p, &pr, &ReduceOptions { max_steps: 1 }).unwrap_err();
        assert!(matches!(
            err,
            Error::ReductionStuck {
                reason: "step cap exceeded",
                ..
            }
        ));
    }

    #[test]
    fn rejects_negative_a_and_off_variety() {
        let neg = params(-1, 54, 3);
        let p = neg.point([3, 3, 3]).unwrap();
        assert!(matches!(
            reduce(&p, &neg),
            Err(Error::NonPositiveCoefficient(_))
        ));
        let other = params(1, 1, 3);
        assert!(matches!(
            reduce(&p, &other),
            Err(Error::NotOnVariety { .. })
        ));
    }
}
