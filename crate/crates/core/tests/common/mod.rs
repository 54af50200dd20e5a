//! Shared generators and oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use markoff_hurwitz::{
    apply_word, equivalence_word, normalize, reduce, strata_containing, Move, Params, Point,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// A point together with the parameters of the variety it lies on.
#[derive(Debug, Clone)]
pub struct Case {
    pub params: Params,
    pub point: Point,
}

pub fn level(a: &BigInt, coords: &[BigInt]) -> BigInt {
    let squares: BigInt = coords.iter().map(|x| x * x).sum();
    let product: BigInt = coords.iter().product();
    squares - a * product
}

fn build(a: i64, coords: Vec<i64>, word: Vec<usize>) -> Case {
    let a = BigInt::from(a);
    let coords: Vec<BigInt> = coords.into_iter().map(BigInt::from).collect();
    let params = Params::new(a.clone(), level(&a, &coords), coords.len()).unwrap();
    let mut point = params.point(coords).unwrap();
    for i in word {
        point = params.vieta(&point, i % params.n() + 1).unwrap();
    }
    Case { params, point }
}

fn coords_and_word(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = (Vec<i64>, Vec<usize>)> {
    (
        prop::collection::vec(lo..=hi, n),
        prop::collection::vec(0usize..n, 0..=5),
    )
}

/// Any nonzero `a`, `3 <= n <= 5`, a random lattice vector pushed around by
/// a short Vieta word. `k` is whatever the vector evaluates to.
pub fn any_case() -> impl Strategy<Value = Case> {
    (3usize..=5, prop_oneof![-4i64..=-1, 1i64..=4])
        .prop_flat_map(|(n, a)| (Just(a), coords_and_word(n, -25, 25)))
        .prop_map(|(a, (coords, word))| build(a, coords, word))
}

/// As [`any_case`] with `a > 0`.
pub fn positive_case() -> impl Strategy<Value = Case> {
    (3usize..=5, 1i64..=4)
        .prop_flat_map(|(n, a)| (Just(a), coords_and_word(n, -25, 25)))
        .prop_map(|(a, (coords, word))| build(a, coords, word))
}

/// Points whose every (n-2)-fold product, times `a`, exceeds 2 in absolute value.
pub fn outside_small_products() -> impl Strategy<Value = Case> {
    (3usize..=5, prop_oneof![-4i64..=-1, 1i64..=4])
        .prop_flat_map(|(n, a)| {
            (
                Just(a),
                prop::collection::vec((3i64..=30, any::<bool>()), n),
                prop::collection::vec(0usize..n, 0..=5),
            )
        })
        .prop_map(|(a, signed, word)| {
            let coords: Vec<i64> = signed
                .into_iter()
                .map(|(x, neg)| if neg { -x } else { x })
                .collect();
            let moved = build(a, coords.clone(), word);
            if small_products(&moved.params, moved.point.coords()) {
                build(a, coords, vec![])
            } else {
                moved
            }
        })
}

pub fn small_products(params: &Params, coords: &[BigInt]) -> bool {
    let mut abs: Vec<BigInt> = coords.iter().map(|x| x.abs()).collect();
    abs.sort();
    let product: BigInt = abs[..coords.len() - 2].iter().product();
    params.a().abs() * product <= BigInt::from(2)
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

/// A case plus a random move of each kind.
pub fn case_with_moves() -> impl Strategy<Value = (Case, usize, (usize, usize), Vec<usize>)> {
    any_case().prop_flat_map(|case| {
        let n = case.params.n();
        (
            Just(case),
            1..=n,
            (1..=n, 1..=n).prop_filter("ordered pair", |(s, t)| s < t),
            permutation(n),
        )
    })
}

/// A random word over double sign changes and permutations.
pub fn scramble(n: usize) -> impl Strategy<Value = Vec<Move>> {
    let step = prop_oneof![
        (1..=n, 1..=n)
            .prop_filter("ordered pair", |(s, t)| s < t)
            .prop_map(|(s, t)| Move::DoubleSign(s, t)),
        permutation(n).prop_map(Move::Permute),
    ];
    prop::collection::vec(step, 0..=6)
}

fn vieta_value(params: &Params, coords: &[BigInt], i: usize) -> BigInt {
    let others: BigInt = coords
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .map(|(_, x)| x)
        .product();
    params.a() * others - &coords[i]
}

// Property checks, shared by the proptest suite and the acceptance target.

pub fn check_equation_invariance(
    (case, i, (s, t), sigma): (Case, usize, (usize, usize), Vec<usize>),
) -> Result<(), TestCaseError> {
    let Case { params, point } = case;
    for m in [Move::Vieta(i), Move::DoubleSign(s, t), Move::Permute(sigma)] {
        let image = m.apply(&params, &point).unwrap();
        prop_assert!(
            params.check_on_variety(image.coords()).unwrap(),
            "{m} {:?}",
            point
        );
    }
    Ok(())
}

pub fn check_involutions(
    (case, i, (s, t), _): (Case, usize, (usize, usize), Vec<usize>),
) -> Result<(), TestCaseError> {
    let Case { params, point } = case;
    let v = params.vieta(&params.vieta(&point, i).unwrap(), i).unwrap();
    prop_assert_eq!(&v, &point);
    let d = params
        .double_sign(&params.double_sign(&point, s, t).unwrap(), s, t)
        .unwrap();
    prop_assert_eq!(&d, &point);
    Ok(())
}

pub fn check_commutations(
    (case, i, (s, t), sigma): (Case, usize, (usize, usize), Vec<usize>),
) -> Result<(), TestCaseError> {
    let Case { params, point } = case;
    let n = params.n();
    for j in (1..=n).filter(|&j| j != s && j != t) {
        let lhs = params
            .vieta(&params.double_sign(&point, s, t).unwrap(), j)
            .unwrap();
        let rhs = params
            .double_sign(&params.vieta(&point, j).unwrap(), s, t)
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
    for j in [s, t] {
        let lhs = params
            .vieta(&params.double_sign(&point, s, t).unwrap(), j)
            .unwrap();
        let rhs = params
            .double_sign(&params.vieta(&point, j).unwrap(), s, t)
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
    let lhs = params
        .vieta(&params.permute(&point, &sigma).unwrap(), i)
        .unwrap();
    let rhs = params
        .permute(&params.vieta(&point, sigma[i - 1]).unwrap(), &sigma)
        .unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn check_height_invariance(
    (case, _, (s, t), sigma): (Case, usize, (usize, usize), Vec<usize>),
) -> Result<(), TestCaseError> {
    let Case { params, point } = case;
    prop_assert_eq!(
        params.double_sign(&point, s, t).unwrap().height(),
        point.height()
    );
    prop_assert_eq!(
        params.permute(&point, &sigma).unwrap().height(),
        point.height()
    );
    Ok(())
}

pub fn check_normalization((case, word): (Case, Vec<Move>)) -> Result<(), TestCaseError> {
    let Case { params, point } = case;
    let (q, steps) = normalize(&point);
    prop_assert!(steps.iter().all(|m| !m.is_vieta()));
    let replay = apply_word(&params, &point, &steps).unwrap();
    prop_assert_eq!(replay.coords(), q.coords());
    let (again, _) = normalize(&q.to_point());
    prop_assert_eq!(&again, &q);
    let scrambled = apply_word(&params, &point, &word).unwrap();
    prop_assert_eq!(normalize(&scrambled).0, q);
    Ok(())
}

/// At most one Vieta direction fails to increase `|x_i|`, and it belongs to
/// the strictly largest coordinate; no Vieta move merely flips a sign.
pub fn check_single_descent(case: Case) -> Result<(), TestCaseError> {
    let Case { params, point } = case;
    let x = point.coords();
    prop_assert!(!small_products(&params, x));
    for i in 0..x.len() {
        let y = vieta_value(&params, x, i);
        prop_assert_ne!(&y, &-&x[i]);
        if y.abs() <= x[i].abs() {
            for (j, xj) in x.iter().enumerate().filter(|(j, _)| *j != i) {
                prop_assert!(
                    xj.abs() < x[i].abs(),
                    "index {} vs {} in {:?}",
                    i + 1,
                    j + 1,
                    x
                );
            }
        }
    }
    Ok(())
}

pub fn check_reduction(case: Case) -> Result<(), TestCaseError> {
    let Case { params, point } = case;
    let r = reduce(&point, &params).unwrap();
    let replay = apply_word(&params, &point, &r.word).unwrap();
    prop_assert_eq!(replay.coords(), r.representative.coords());
    for pair in r.trace.windows(2) {
        prop_assert!(pair[1].height < pair[0].height);
    }
    prop_assert_eq!(
        strata_containing(&r.representative, &params).unwrap(),
        vec![r.stratum]
    );
    let again = reduce(&r.representative.to_point(), &params).unwrap();
    prop_assert_eq!(&again.representative, &r.representative);
    prop_assert_eq!(again.vieta_steps(), 0);
    Ok(())
}

pub fn check_witness((case, word): (Case, Vec<usize>)) -> Result<(), TestCaseError> {
    let Case { params, point } = case;
    let word: Vec<Move> = word
        .into_iter()
        .map(|i| Move::Vieta(i % params.n() + 1))
        .collect();
    let target = apply_word(&params, &point, &word).unwrap();
    let witness = equivalence_word(&point, &target, &params).unwrap();
    prop_assert!(witness.is_some());
    let image = apply_word(&params, &point, &witness.unwrap()).unwrap();
    prop_assert_eq!(image, target);
    Ok(())
}

pub fn normalization_case() -> impl Strategy<Value = (Case, Vec<Move>)> {
    any_case().prop_flat_map(|c| {
        let n = c.params.n();
        (Just(c), scramble(n))
    })
}

pub fn witness_case() -> impl Strategy<Value = (Case, Vec<usize>)> {
    positive_case().prop_flat_map(|c| {
        let n = c.params.n();
        (Just(c), prop::collection::vec(0..n, 0..=6))
    })
}

/// Independent canonical form: sort by absolute value, then keep one minus
/// sign on the first entry iff the count of negatives is odd and nothing is 0.
pub fn canonical_i64(mut x: Vec<i64>) -> Vec<i64> {
    let negatives = x.iter().filter(|v| **v < 0).count();
    let zero = x.contains(&0);
    for v in x.iter_mut() {
        *v = v.abs();
    }
    x.sort_unstable();
    if negatives % 2 == 1 && !zero {
        x[0] = -x[0];
    }
    x
}

/// Every normal form of a solution of the three-variable equation with
/// `|x1| + |x2| + |x3| <= h`, by exhaustive search of the box.
pub fn naive_scan3(a: i64, k: i64, h: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for x in -h..=h {
        for y in -h..=h {
            for z in -h..=h {
                if x.abs() + y.abs() + z.abs() <= h && x * x + y * y + z * z - a * x * y * z == k {
                    out.insert(canonical_i64(vec![x, y, z]));
                }
            }
        }
    }
    out
}

pub fn as_i64(coords: &[BigInt]) -> Vec<i64> {
    coords.iter().map(|c| i64::try_from(c).unwrap()).collect()
}

pub fn is_zero_point(coords: &[BigInt]) -> bool {
    coords.iter().all(Zero::is_zero)
}
