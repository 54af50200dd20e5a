//! Generation of fundamental-domain members, stratum by stratum.
//!
//! `S0`, `S1`, `S2Neg` and `Sgt2Neg` are bounded by `k` alone. The positive
//! branch of `Sgt2` uses the exact consequences of `y <= z <= (aQ/2) y` with
//! `Q = x1...x_{n-2}`, `y = x_{n-1}`, `z = xn`:
//!
//! * `(aQ - 2) y^2 <= S - k` where `S = x1^2 + ... + x_{n-2}^2`, so `S > k`;
//! * with `y >= x_{n-2}` and `S <= (n-2) x_{n-2}^2` that gives
//!   `(aQ - n) x_{n-2}^2 <= -k`, which bounds every prefix.
//!
//! The cap bounds family parameters and positive-branch coordinates; hitting
//! it sets [`FdSet::truncated`].

use std::cell::Cell;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{exact_sqrt, isqrt, product, sum_of_squares};
use crate::enumeration::solutions::last_coordinate_roots;
use crate::error::Result;
use crate::normal::NormalPoint;
use crate::stratum::{stratum_member, Stratum};
use crate::variety::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `a = 1, k = n + 1`: `(1, ..., 1, 2, x, x)` for `x >= 2`.
    OnesTwoPair,
    /// `a = 2, k = n - 2`: `(1, ..., 1, x, x)` for `x >= 1`.
    OnesPair,
}

/// An infinite one-parameter family inside `S2Pos`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    pub n: usize,
    /// Members with parameter at most the cap.
    pub members: Vec<NormalPoint>,
}

impl FamilyDescriptor {
    pub fn min_parameter(&self) -> u64 {
        match self.kind {
            FamilyKind::OnesTwoPair => 2,
            FamilyKind::OnesPair => 1,
        }
    }

    pub fn pattern(&self) -> String {
        match self.kind {
            FamilyKind::OnesTwoPair => format!("({}2,x,x), x >= 2", "1,".repeat(self.n - 3)),
            FamilyKind::OnesPair => format!("({}x,x), x >= 1", "1,".repeat(self.n - 2)),
        }
    }

    /// The member with parameter `x`.
    pub fn member(&self, x: &BigInt) -> NormalPoint {
        let mut coords = match self.kind {
            FamilyKind::OnesTwoPair => {
                let mut c = vec![BigInt::one(); self.n - 3];
                c.push(BigInt::from(2));
                c
            }
            FamilyKind::OnesPair => vec![BigInt::one(); self.n - 2],
        };
        coords.push(x.clone());
        coords.push(x.clone());
        NormalPoint::trusted(coords)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FdSet {
    pub params: Params,
    pub cap: u64,
    /// Sorted by point; excludes members of infinite families.
    pub finite_members: Vec<(NormalPoint, Stratum)>,
    pub infinite_families: Vec<FamilyDescriptor>,
    /// The cap cut the positive `Sgt2` search short of its natural bound.
    pub truncated: bool,
}

impl FdSet {
    pub fn members_in(&self, stratum: Stratum) -> impl Iterator<Item = &NormalPoint> {
        self.finite_members
            .iter()
            .filter(move |(_, s)| *s == stratum)
            .map(|(q, _)| q)
    }

    /// Finite members followed by every listed family member.
    pub fn all_members(&self) -> impl Iterator<Item = (&NormalPoint, Stratum)> {
        self.finite_members.iter().map(|(q, s)| (q, *s)).chain(
            self.infinite_families
                .iter()
                .flat_map(|f| f.members.iter().map(|q| (q, Stratum::S2Pos))),
        )
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Calls `leaf` on every nondecreasing sequence of `len` values starting at
/// `start` whose partial sequences pass `keep`. `keep` must be monotone: once
/// it rejects `t` for a given partial sequence, it rejects every larger `t`.
fn nondecreasing(
    len: usize,
    start: &BigInt,
    prefix: &mut Vec<BigInt>,
    keep: &mut dyn FnMut(&[BigInt], &BigInt) -> bool,
    leaf: &mut dyn FnMut(&[BigInt]),
) {
    if prefix.len() == len {
        leaf(prefix);
        return;
    }
    let mut t = prefix.last().cloned().unwrap_or_else(|| start.clone());
    while keep(prefix, &t) {
        prefix.push(t.clone());
        nondecreasing(len, start, prefix, keep, leaf);
        prefix.pop();
        t += 1;
    }
}

fn s0_candidates(params: &Params) -> Vec<NormalPoint> {
    let n = params.n();
    let k = params.k();
    let mut out = Vec::new();
    if k.is_negative() {
        return out;
    }
    // x2..x_{n-1} nondecreasing, each later entry (and xn) at least as large
    nondecreasing(
        n - 2,
        &BigInt::zero(),
        &mut Vec::new(),
        &mut |prefix, t| {
            let slots = BigInt::from(n - 1 - prefix.len());
            sum_of_squares(prefix) + slots * t * t <= *k
        },
        &mut |prefix| {
            if let Some(last) = exact_sqrt(&(k - sum_of_squares(prefix))) {
                if prefix.last().is_none_or(|p| &last >= p) {
                    let mut coords = vec![BigInt::zero()];
                    coords.extend_from_slice(prefix);
                    coords.push(last);
                    out.push(NormalPoint::trusted(coords));
                }
            }
        },
    );
    out
}

fn s1_candidates(params: &Params) -> Vec<NormalPoint> {
    let n = params.n();
    let mut out = Vec::new();
    if !params.a().is_one() {
        return out;
    }
    // x^2 + y^2 + xy = k - n + 2 with 1 <= x <= y, so 3x^2 <= k - n + 2
    let target = params.k() - BigInt::from(n) + 2;
    let mut prefix = vec![int(-1)];
    prefix.extend(std::iter::repeat_n(BigInt::one(), n - 3));
    let mut x = BigInt::one();
    while int(3) * &x * &x <= target {
        prefix.push(x.clone());
        for y in last_coordinate_roots(params.a(), params.k(), &prefix) {
            if y >= x {
                let mut coords = prefix.clone();
                coords.push(y);
                out.push(NormalPoint::trusted(coords));
            }
        }
        prefix.pop();
        x += 1;
    }
    out
}

/// `S2Neg` candidates: fixed head, tail `(x, s - x)` with `min <= x <= s - x`.
fn s2_neg_candidates(head: Vec<BigInt>, min: i64, square: BigInt) -> Vec<NormalPoint> {
    let Some(s) = exact_sqrt(&square) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut x = int(min);
    while int(2) * &x <= s {
        let mut coords = head.clone();
        coords.push(x.clone());
        coords.push(&s - &x);
        out.push(NormalPoint::trusted(coords));
        x += 1;
    }
    out
}

fn s2(params: &Params, cap: u64) -> (Vec<NormalPoint>, Option<FamilyDescriptor>) {
    let n = params.n();
    let k = params.k();
    let nn = BigInt::from(n);
    let (kind, family_k, head, min, square) = if params.a().is_one() {
        // n = 3: (-2, x, y); n >= 4: (-1, 1, ..., 1, 2, x, y)
        let head = if n == 3 {
            vec![int(-2)]
        } else {
            let mut h = vec![int(-1)];
            h.extend(std::iter::repeat_n(BigInt::one(), n - 4));
            h.push(int(2));
            h
        };
        (FamilyKind::OnesTwoPair, &nn + 1, head, 2, k - &nn - 1)
    } else if *params.a() == int(2) {
        let mut head = vec![int(-1)];
        head.extend(std::iter::repeat_n(BigInt::one(), n - 3));
        (FamilyKind::OnesPair, &nn - 2, head, 1, k - &nn + 2)
    } else {
        return (Vec::new(), None);
    };
    let negative = s2_neg_candidates(head, min, square);
    let family = (*k == family_k).then(|| {
        let mut family = FamilyDescriptor {
            kind,
            n,
            members: Vec::new(),
        };
        family.members = (family.min_parameter()..=cap)
            .map(|x| family.member(&BigInt::from(x)))
            .collect();
        family
    });
    (negative, family)
}

fn sgt2_neg_candidates(params: &Params) -> Vec<NormalPoint> {
    let n = params.n();
    let k = params.k();
    let mut out = Vec::new();
    if !k.is_positive() {
        return out;
    }
    // k = sum xi^2 + a |x1...xn| > sum xi^2
    nondecreasing(
        n - 1,
        &BigInt::one(),
        &mut Vec::new(),
        &mut |prefix, t| {
            let slots = BigInt::from(n - prefix.len());
            sum_of_squares(prefix) + slots * t * t < *k
        },
        &mut |abs_prefix| {
            let mut prefix = abs_prefix.to_vec();
            prefix[0] = -&prefix[0];
            let last = &abs_prefix[n - 2];
            for z in last_coordinate_roots(params.a(), k, &prefix) {
                if &z >= last {
                    let mut coords = prefix.clone();
                    coords.push(z);
                    out.push(NormalPoint::trusted(coords));
                }
            }
        },
    );
    out
}

fn sgt2_pos_candidates(params: &Params, cap: u64, truncated: &mut bool) -> Vec<NormalPoint> {
    let n = params.n();
    let a = params.a();
    let k = params.k();
    let cap = BigInt::from(cap);
    let two = int(2);
    let nn = BigInt::from(n);
    let mut out = Vec::new();
    let hit_cap = Cell::new(false);
    nondecreasing(
        n - 2,
        &BigInt::one(),
        &mut Vec::new(),
        &mut |prefix, t| {
            // smallest Q reachable once every remaining entry is at least t
            let remaining = (n - 2 - prefix.len()) as u32;
            let q_min = product(prefix) * t.pow(remaining);
            let slack = a * q_min - &nn;
            if slack.is_positive() && slack * t * t > -k {
                return false;
            }
            if t > &cap {
                hit_cap.set(true);
                return false;
            }
            true
        },
        &mut |prefix| {
            let q = a * product(prefix);
            let s = sum_of_squares(prefix);
            if q <= two || s <= *k {
                return;
            }
            let mut y_max = isqrt(&((&s - k) / (&q - &two))).unwrap_or_default();
            if y_max > cap {
                hit_cap.set(true);
                y_max = cap.clone();
            }
            let mut y = prefix[n - 3].clone();
            let mut full = prefix.to_vec();
            while y <= y_max {
                full.push(y.clone());
                for z in last_coordinate_roots(a, k, &full) {
                    if z >= y && &two * &z <= &q * &y {
                        let mut coords = full.clone();
                        coords.push(z);
                        out.push(NormalPoint::trusted(coords));
                    }
                }
                full.pop();
                y += 1;
            }
        },
    );
    *truncated |= hit_cap.get();
    out
}

/// Fundamental-domain members of `V_{a,k,n}`, with infinite families reported
/// as descriptors whose listed members stop at `cap`.
pub fn enumerate_fd(params: &Params, cap: u64) -> Result<FdSet> {
    params.require_positive()?;
    let mut truncated = false;
    let (s2_negative, family) = s2(params, cap);
    let candidates = s0_candidates(params)
        .into_iter()
        .chain(s1_candidates(params))
        .chain(s2_negative)
        .chain(sgt2_neg_candidates(params))
        .chain(sgt2_pos_candidates(params, cap, &mut truncated));

    let mut members = BTreeSet::new();
    for q in candidates {
        match stratum_member(&q, params)? {
            Some(stratum) => {
                members.insert((q, stratum));
            }
            None => log::debug!("fd candidate {q} failed stratum validation"),
        }
    }
    Ok(FdSet {
        params: params.clone(),
        cap,
        finite_members: members.into_iter().collect(),
        infinite_families: family.into_iter().collect(),
        truncated,
    })
}
