//! Membership in the four pieces of the fundamental domain.
//!
//! For canonical `q` with `a > 0` the pieces are separated by the size of
//! `|a x1 ... x_{n-2}|`: zero for `S0`, one for `S1`, two for `S2`, more than two
//! for `Sgt2`. Every test is exact integer arithmetic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::product;
use crate::error::{Error, Result};
use crate::normal::NormalPoint;
use crate::variety::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    /// `x1 = 0`.
    S0,
    /// `a = 1`, `(-1, 1, ..., 1, x, y)`.
    S1,
    /// The infinite families `(1,...,1,2,x,x)` (`a = 1`) and `(1,...,1,x,x)` (`a = 2`).
    S2Pos,
    /// `a = 1`: `(-1,1,...,1,2,x,y)`; `a = 2`: `(-1,1,...,1,x,y)`.
    S2Neg,
    /// Positive points with `2 xn <= a x1...x_{n-1}` and `a x1...x_{n-2} > 2`.
    Sgt2Pos,
    /// `x1 < 0` and `a x1...x_{n-2} < -2`.
    Sgt2Neg,
}

impl Stratum {
    pub const ALL: [Stratum; 6] = [
        Stratum::S0,
        Stratum::S1,
        Stratum::S2Pos,
        Stratum::S2Neg,
        Stratum::Sgt2Pos,
        Stratum::Sgt2Neg,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Stratum::S0 => "S0",
            Stratum::S1 => "S1",
            Stratum::S2Pos => "S2_POS",
            Stratum::S2Neg => "S2_NEG",
            Stratum::Sgt2Pos => "SGT2_POS",
            Stratum::Sgt2Neg => "SGT2_NEG",
        }
    }

    fn contains(self, q: &[BigInt], params: &Params) -> bool {
        match self {
            Stratum::S0 => in_s0(q, params),
            Stratum::S1 => in_s1(q, params),
            Stratum::S2Pos => in_s2_pos(q, params),
            Stratum::S2Neg => in_s2_neg(q, params),
            Stratum::Sgt2Pos => in_sgt2_pos(q, params),
            Stratum::Sgt2Neg => in_sgt2_neg(q, params),
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Stratum {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Stratum::ALL
            .into_iter()
            .find(|st| st.tag() == s)
            .ok_or_else(|| format!("unknown stratum tag {s:?}"))
    }
}

fn is_int(x: &BigInt, v: i64) -> bool {
    *x == BigInt::from(v)
}

fn all_ones(xs: &[BigInt]) -> bool {
    xs.iter().all(One::is_one)
}

fn k_minus(params: &Params, offset: i64) -> BigInt {
    params.k() - BigInt::from(offset)
}

fn in_s0(q: &[BigInt], params: &Params) -> bool {
    q[0].is_zero() && q[1..].iter().map(|x| x * x).sum::<BigInt>() == *params.k()
}

fn in_s1(q: &[BigInt], params: &Params) -> bool {
    let n = q.len();
    let (x, y) = (&q[n - 2], &q[n - 1]);
    params.a().is_one()
        && is_int(&q[0], -1)
        && all_ones(&q[1..n - 2])
        && x >= &BigInt::one()
        && x * x + y * y + x * y == k_minus(params, n as i64 - 2)
}

/// `|q| = (1, ..., 1, 2, *, *)` with the 2 in slot `n-2`; for `n = 3` that is `|x1| = 2`.
fn a1_two_pattern(q: &[BigInt]) -> bool {
    let n = q.len();
    q[..n - 3].iter().all(|x| x.abs().is_one()) && is_int(&q[n - 3].abs(), 2)
}

fn in_s2_pos(q: &[BigInt], params: &Params) -> bool {
    let n = q.len();
    let (x, y) = (&q[n - 2], &q[n - 1]);
    if params.a().is_one() {
        q[0].is_positive()
            && a1_two_pattern(q)
            && x == y
            && x >= &BigInt::from(2)
            && *params.k() == BigInt::from(n + 1)
    } else if is_int(params.a(), 2) {
        all_ones(&q[..n - 2]) && x == y && x >= &BigInt::one() && *params.k() == BigInt::from(n) - 2
    } else {
        false
    }
}

fn in_s2_neg(q: &[BigInt], params: &Params) -> bool {
    let n = q.len();
    let (x, y) = (&q[n - 2], &q[n - 1]);
    let sum_sq = (x + y) * (x + y);
    if params.a().is_one() {
        q[0].is_negative()
            && a1_two_pattern(q)
            && x >= &BigInt::from(2)
            && x <= y
            && sum_sq == k_minus(params, n as i64 + 1)
    } else if is_int(params.a(), 2) {
        is_int(&q[0], -1)
            && all_ones(&q[1..n - 2])
            && x >= &BigInt::one()
            && x <= y
            && sum_sq == k_minus(params, n as i64 - 2)
    } else {
        false
    }
}

fn in_sgt2_pos(q: &[BigInt], params: &Params) -> bool {
    let n = q.len();
    let head = params.a() * product(&q[..n - 2]);
    q[0].is_positive() && head > BigInt::from(2) && BigInt::from(2) * &q[n - 1] <= &head * &q[n - 2]
}

fn in_sgt2_neg(q: &[BigInt], params: &Params) -> bool {
    let n = q.len();
    q[0].is_negative() && params.a() * product(&q[..n - 2]) < BigInt::from(-2)
}

fn check_input(q: &NormalPoint, params: &Params) -> Result<()> {
    params.require_positive()?;
    if !params.check_on_variety(q.coords())? {
        return Err(Error::NotOnVariety {
            coords: q.coords().to_vec(),
            lhs: params.lhs(q.coords()),
            k: params.k().clone(),
        });
    }
    Ok(())
}

/// The stratum containing `q`, tested in the order `S0, S1, S2Pos, S2Neg,
/// Sgt2Pos, Sgt2Neg`; `None` when `q` is not a fundamental-domain member.
pub fn stratum_member(q: &NormalPoint, params: &Params) -> Result<Option<Stratum>> {
    check_input(q, params)?;
    Ok(Stratum::ALL
        .into_iter()
        .find(|s| s.contains(q.coords(), params)))
}

/// Every stratum whose defining predicate holds for `q`, each evaluated
/// independently. Disjointness means this has at most one element.
pub fn strata_containing(q: &NormalPoint, params: &Params) -> Result<Vec<Stratum>> {
    check_input(q, params)?;
    Ok(Stratum::ALL
        .into_iter()
        .filter(|s| s.contains(q.coords(), params))
        .collect())
}
