use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::arith::{exact_sqrt, product, sum_of_squares};
use crate::error::{Error, Result};
use crate::normal::NormalPoint;
use crate::variety::Params;

/// Every normal point with height at most `height_bound`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub params: Params,
    pub height_bound: u64,
    pub points: Vec<NormalPoint>,
}

/// Integer roots `xn` of the equation with the first `n - 1` coordinates
/// fixed, ascending. The equation is the monic quadratic
/// `xn^2 - P xn + (S - k) = 0` with `P = a * prod(prefix)`, `S = sum(prefix^2)`.
pub(crate) fn last_coordinate_roots(a: &BigInt, k: &BigInt, prefix: &[BigInt]) -> Vec<BigInt> {
    let p = a * product(prefix);
    let c = sum_of_squares(prefix) - k;
    let disc = &p * &p - BigInt::from(4) * c;
    let Some(root) = exact_sqrt(&disc) else {
        return Vec::new();
    };
    let lo = &p - &root;
    // D = P^2 - 4c has the parity of P, so this only guards the division
    if lo.is_odd() {
        return Vec::new();
    }
    let lo: BigInt = lo / 2;
    let hi: BigInt = (&p + &root) / 2;
    if lo == hi {
        vec![lo]
    } else {
        vec![lo, hi]
    }
}

/// All integers `xn` completing `prefix` to a solution.
pub fn solve_last_coordinate(prefix: &[BigInt], params: &Params) -> Result<Vec<BigInt>> {
    params.require_positive()?;
    if prefix.len() + 1 != params.n() {
        return Err(Error::LengthMismatch {
            expected: params.n() - 1,
            actual: prefix.len(),
        });
    }
    Ok(last_coordinate_roots(params.a(), params.k(), prefix))
}

pub fn enumerate_solutions(params: &Params, height_bound: u64) -> Result<SolutionSet> {
    params.require_positive()?;
    let n = params.n();
    // Chunks are keyed by the first two absolute values of the prefix.
    let seeds: Vec<(u64, u64)> = (0..=height_bound)
        .flat_map(|t1| (t1..=height_bound).map(move |t2| (t1, t2)))
        .filter(|&(t1, t2)| t1 + t2 * (n as u64 - 1) <= height_bound)
        .collect();
    let found: Vec<Vec<NormalPoint>> = seeds
        .par_iter()
        .map(|&(t1, t2)| {
            let mut out = Vec::new();
            let mut prefix = vec![t1, t2];
            extend_prefix(params, &mut prefix, height_bound - t1 - t2, &mut out);
            out
        })
        .collect();
    let points: BTreeSet<NormalPoint> = found.into_iter().flatten().collect();
    Ok(SolutionSet {
        params: params.clone(),
        height_bound,
        points: points.into_iter().collect(),
    })
}

/// `prefix` holds nondecreasing absolute values; `remaining` is the height
/// budget left for the coordinates not yet chosen.
fn extend_prefix(
    params: &Params,
    prefix: &mut Vec<u64>,
    remaining: u64,
    out: &mut Vec<NormalPoint>,
) {
    let n = params.n();
    if prefix.len() == n - 1 {
        complete_prefix(params, prefix, remaining, out);
        return;
    }
    let lo = *prefix.last().unwrap();
    // the new entry and every later one (including xn) are at least t
    let slots = (n - prefix.len()) as u64;
    let mut t = lo;
    while t * slots <= remaining {
        prefix.push(t);
        extend_prefix(params, prefix, remaining - t, out);
        prefix.pop();
        t += 1;
    }
}

fn complete_prefix(
    params: &Params,
    abs_prefix: &[u64],
    remaining: u64,
    out: &mut Vec<NormalPoint>,
) {
    let last = BigInt::from(*abs_prefix.last().unwrap());
    let budget = BigInt::from(remaining);
    let mut coords: Vec<BigInt> = abs_prefix.iter().map(|&t| BigInt::from(t)).collect();
    let signs: &[i8] = if abs_prefix[0] == 0 { &[1] } else { &[1, -1] };
    for &sign in signs {
        if sign < 0 {
            coords[0] = -BigInt::from(abs_prefix[0]);
        }
        for root in last_coordinate_roots(params.a(), params.k(), &coords) {
            if root >= last && root <= budget {
                let mut full = coords.clone();
                full.push(root);
                out.push(NormalPoint::trusted(full));
            }
        }
    }
}
