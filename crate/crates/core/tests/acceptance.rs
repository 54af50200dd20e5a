//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use markoff_hurwitz::{
    enumerate_fd, enumerate_solutions, equivalent, markoff_compat_check, reduce,
    verify_fundamental_domain, with_workers, FamilyKind, NormalPoint, Params, Stratum,
};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tuple(q: &NormalPoint) -> Vec<i64> {
    as_i64(q.coords())
}

fn markoff_ground_truth() -> Outcome {
    let params = Params::new(1, 0, 3).unwrap();
    let fd = enumerate_fd(&params, 200).unwrap();
    let members: Vec<Vec<i64>> = fd.finite_members.iter().map(|(q, _)| tuple(q)).collect();
    ensure(members == vec![vec![0, 0, 0], vec![3, 3, 3]], || {
        format!("fd members {members:?}")
    })?;
    ensure(fd.infinite_families.is_empty() && !fd.truncated, || {
        "unexpected family or truncation".into()
    })?;
    let solutions = enumerate_solutions(&params, 200).unwrap();
    for q in &solutions.points {
        let r = reduce(&q.to_point(), &params).unwrap();
        let expected = if is_zero_point(q.coords()) {
            vec![0, 0, 0]
        } else {
            vec![3, 3, 3]
        };
        ensure(tuple(&r.representative) == expected, || {
            format!("{q} reduced to {}", r.representative)
        })?;
    }
    Ok(format!(
        "{} solutions with height <= 200",
        solutions.points.len()
    ))
}

fn family_reproduction() -> Outcome {
    let mut checked = 0;
    for n in [3usize, 4] {
        for (a, k, kind) in [
            (1i64, n as i64 + 1, FamilyKind::OnesTwoPair),
            (2, n as i64 - 2, FamilyKind::OnesPair),
        ] {
            let params = Params::new(a, k, n).unwrap();
            let fd = enumerate_fd(&params, 50).unwrap();
            ensure(
                fd.infinite_families.len() == 1 && fd.infinite_families[0].kind == kind,
                || format!("a={a} k={k} n={n}: families {:?}", fd.infinite_families),
            )?;
            let lo = if kind == FamilyKind::OnesTwoPair {
                2
            } else {
                1
            };
            let mut points = Vec::new();
            for x in lo..=50i64 {
                let mut coords = vec![1i64; n - 2];
                if kind == FamilyKind::OnesTwoPair {
                    coords[n - 3] = 2;
                }
                coords.extend([x, x]);
                let p = params
                    .point(coords.clone())
                    .map_err(|e| format!("{coords:?}: {e}"))?;
                let r = reduce(&p, &params).unwrap();
                ensure(
                    r.vieta_steps() == 0 && r.representative.coords() == p.coords(),
                    || format!("{coords:?} is not fixed; reduced to {}", r.representative),
                )?;
                ensure(r.stratum == Stratum::S2Pos, || {
                    format!("{coords:?} in {}", r.stratum)
                })?;
                points.push(p);
            }
            for (i, p) in points.iter().enumerate() {
                for q in &points[i + 1..] {
                    ensure(!equivalent(p, q, &params).unwrap(), || {
                        format!("{p:?} ~ {q:?}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} pairs inequivalent"))
}

const A_GRID: [i64; 3] = [1, 2, 3];
const N_GRID: [usize; 2] = [3, 4];
const K_GRID: std::ops::RangeInclusive<i64> = -10..=10;

fn uniqueness_grid() -> Outcome {
    let mut solutions = 0;
    for a in A_GRID {
        for n in N_GRID {
            for k in K_GRID {
                let params = Params::new(a, k, n).unwrap();
                let report = with_workers(4, || verify_fundamental_domain(&params, 40)).unwrap();
                for c in &report.checks {
                    ensure(c.passed, || {
                        format!("a={a} k={k} n={n} {}: {:?}", c.name, c.counterexamples)
                    })?;
                }
                solutions += report.solutions;
            }
        }
    }
    Ok(format!("{solutions} solutions across 126 parameter sets"))
}

fn finiteness() -> Outcome {
    let mut sets = 0;
    for a in A_GRID {
        for n in N_GRID {
            for k in K_GRID {
                let nk = n as i64;
                if (a, k) == (1, nk + 1) || (a, k) == (2, nk - 2) {
                    continue;
                }
                let params = Params::new(a, k, n).unwrap();
                let small = enumerate_fd(&params, 100).unwrap();
                let large = enumerate_fd(&params, 200).unwrap();
                ensure(
                    small.finite_members.len() == large.finite_members.len(),
                    || {
                        format!(
                            "a={a} k={k} n={n}: {} members at cap 100, {} at cap 200",
                            small.finite_members.len(),
                            large.finite_members.len()
                        )
                    },
                )?;
                ensure(
                    small.infinite_families.is_empty() && large.infinite_families.is_empty(),
                    || format!("a={a} k={k} n={n}: unexpected family"),
                )?;
                sets += 1;
            }
        }
    }
    Ok(format!("{sets} parameter sets stable"))
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    check: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config {
        cases: 10_000,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut runner = TestRunner::new_with_rng(config, rng);
    runner
        .run(&strategy, check)
        .map_err(|e| format!("{name}: {e}"))
}

fn algebraic_properties() -> Outcome {
    run_property(
        "equation invariance",
        case_with_moves(),
        check_equation_invariance,
    )?;
    run_property("involutions", case_with_moves(), check_involutions)?;
    run_property("commutations", case_with_moves(), check_commutations)?;
    run_property(
        "height invariance",
        case_with_moves(),
        check_height_invariance,
    )?;
    run_property(
        "single descending direction",
        outside_small_products(),
        check_single_descent,
    )?;
    Ok("5 properties x 10000 cases".into())
}

fn markoff_compatibility() -> Outcome {
    let report = markoff_compat_check(10_000, 0).unwrap();
    for c in &report.checks {
        ensure(c.passed, || format!("{}: {:?}", c.name, c.counterexamples))?;
    }
    // Worked instances of the identity.
    for (y, z, lhs) in [(1i64, 1i64, 12i64), (2, 5, 156)] {
        ensure(
            4 * (y * y + z * z + y * z) == lhs && (2 * y + z).pow(2) + 3 * z * z == lhs,
            || format!("identity at ({y},{z})"),
        )?;
    }
    let fd = enumerate_fd(&Params::new(1, 5, 3).unwrap(), 200).unwrap();
    let s0: Vec<Vec<i64>> = fd.members_in(Stratum::S0).map(tuple).collect();
    ensure(s0 == vec![vec![0, 1, 2]], || format!("k=5 S0 = {s0:?}"))?;
    ensure(
        fd.members_in(Stratum::S2Pos)
            .chain(fd.members_in(Stratum::S2Neg))
            .next()
            .is_none(),
        || "k=5 S2 not empty".into(),
    )?;
    let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
    Ok(format!("checks {}", names.join(", ")))
}

fn completeness() -> Outcome {
    const H: i64 = 20;
    let mut compared = 0;
    for a in [1i64, 2] {
        for k in -10i64..=10 {
            let scan = naive_scan3(a, k, H);
            let params = Params::new(a, k, 3).unwrap();
            for h in 0..=H {
                let expected: BTreeSet<Vec<i64>> = scan
                    .iter()
                    .filter(|x| x.iter().map(|v| v.abs()).sum::<i64>() <= h)
                    .cloned()
                    .collect();
                let got = enumerate_solutions(&params, h as u64).unwrap();
                let got_vec: Vec<Vec<i64>> = got.points.iter().map(tuple).collect();
                let got_set: BTreeSet<Vec<i64>> = got_vec.iter().cloned().collect();
                ensure(got_set.len() == got_vec.len(), || {
                    format!("a={a} k={k} H={h}: duplicates")
                })?;
                ensure(got_set == expected, || {
                    format!("a={a} k={k} H={h}: got {got_set:?}, scan {expected:?}")
                })?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} (a, k, H) triples match the box scan"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("markoff ground truth", markoff_ground_truth),
        ("exceptional families", family_reproduction),
        ("orbit uniqueness grid", uniqueness_grid),
        ("finiteness away from exceptional levels", finiteness),
        ("algebraic properties", algebraic_properties),
        ("markoff compatibility", markoff_compatibility),
        ("enumeration completeness", completeness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
