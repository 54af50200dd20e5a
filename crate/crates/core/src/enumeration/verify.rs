//! Brute-force cross-check of the fundamental-domain description on every
//! solution up to a height bound.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::enumeration::fd::enumerate_fd;
use crate::enumeration::graph::orbit_graph;
use crate::error::{Error, Result};
use crate::normal::NormalPoint;
use crate::reduction::{reduce, ReductionResult};
use crate::stratum::{strata_containing, stratum_member};
use crate::variety::Params;

const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Number of items the check looked at.
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl CheckResult {
    pub(crate) fn new(name: &'static str) -> Self {
        Self {
            name,
            passed: true,
            checked: 0,
            counterexamples: Vec::new(),
        }
    }

    pub(crate) fn fail(&mut self, detail: impl FnOnce() -> String) {
        self.passed = false;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(detail());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub params: Params,
    pub height_bound: u64,
    pub solutions: usize,
    pub components: usize,
    pub fd_members: usize,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs every check over all solutions with height at most `height_bound`:
///
/// 1. `reduce_terminates`: no solution raises an error during descent;
/// 2. `unique_stratum`: each representative satisfies exactly one stratum predicate;
/// 3. `connected_share_representative`: vertices joined in the bounded graph reduce alike;
/// 4. `fd_members_fixed`: bounded fundamental-domain members are reduction fixed points;
/// 5. `fd_members_inequivalent`: distinct members have distinct representatives
///    and no bounded component holds two of them;
/// 6. `fd_matches_scan`: the generated members are exactly the scanned
///    solutions that pass the stratum test;
/// 7. `representatives_in_fd`: every component representative was generated.
pub fn verify_fundamental_domain(params: &Params, height_bound: u64) -> Result<VerificationReport> {
    params.require_positive()?;
    let graph = orbit_graph(params, height_bound)?;
    let bound = BigInt::from(height_bound);

    let reductions: Vec<Result<ReductionResult>> = graph
        .vertices
        .par_iter()
        .map(|q| reduce(&q.to_point(), params))
        .collect();

    let mut terminates = CheckResult::new("reduce_terminates");
    let mut unique = CheckResult::new("unique_stratum");
    let mut reps: Vec<Option<&NormalPoint>> = Vec::with_capacity(reductions.len());
    for (q, r) in graph.vertices.iter().zip(&reductions) {
        terminates.checked += 1;
        match r {
            Ok(r) => {
                unique.checked += 1;
                let strata = strata_containing(&r.representative, params)?;
                if strata.len() != 1 {
                    unique.fail(|| format!("{} lies in {strata:?}", r.representative));
                }
                reps.push(Some(&r.representative));
            }
            Err(err @ Error::ReductionStuck { .. }) => {
                terminates.fail(|| format!("{q}: {err}"));
                reps.push(None);
            }
            Err(err) => return Err(err.clone()),
        }
    }

    let mut connected = CheckResult::new("connected_share_representative");
    for comp in &graph.components {
        connected.checked += 1;
        let distinct: BTreeSet<_> = comp.vertices.iter().filter_map(|&v| reps[v]).collect();
        if distinct.len() > 1 || distinct.iter().any(|r| **r != comp.representative) {
            connected.fail(|| {
                format!(
                    "component of {} reduces to {:?}",
                    graph.vertices[comp.vertices[0]],
                    distinct.iter().map(ToString::to_string).collect::<Vec<_>>()
                )
            });
        }
    }

    let fd = enumerate_fd(params, height_bound)?;
    let bounded: Vec<&NormalPoint> = fd
        .all_members()
        .map(|(q, _)| q)
        .filter(|q| q.height() <= bound)
        .collect();

    let mut fixed = CheckResult::new("fd_members_fixed");
    let mut member_reps = BTreeMap::new();
    for q in &bounded {
        fixed.checked += 1;
        let r = reduce(&q.to_point(), params)?;
        if &&r.representative != q || r.vieta_steps() != 0 {
            fixed.fail(|| format!("{q} reduces to {}", r.representative));
        }
        member_reps
            .entry(r.representative)
            .or_insert_with(Vec::new)
            .push(*q);
    }

    let mut inequivalent = CheckResult::new("fd_members_inequivalent");
    for (rep, members) in &member_reps {
        inequivalent.checked += 1;
        if members.len() > 1 {
            inequivalent.fail(|| format!("{members:?} all reduce to {rep}"));
        }
    }
    let of = graph.component_of();
    let mut per_component: BTreeMap<usize, Vec<&NormalPoint>> = BTreeMap::new();
    for q in &bounded {
        match graph.vertex_index(q) {
            Some(v) => per_component.entry(of[v]).or_default().push(q),
            None => inequivalent.fail(|| format!("member {q} is not a bounded solution")),
        }
    }
    for members in per_component.values() {
        if members.len() > 1 {
            inequivalent.fail(|| format!("one bounded component holds {members:?}"));
        }
    }

    let mut matches = CheckResult::new("fd_matches_scan");
    let mut scanned = BTreeSet::new();
    for q in &graph.vertices {
        matches.checked += 1;
        if stratum_member(q, params)?.is_some() {
            scanned.insert(q);
        }
    }
    let generated: BTreeSet<&NormalPoint> = bounded.iter().copied().collect();
    for q in scanned.symmetric_difference(&generated) {
        let side = if generated.contains(q) {
            "generated only"
        } else {
            "scan only"
        };
        matches.fail(|| format!("{q}: {side}"));
    }

    let mut covered = CheckResult::new("representatives_in_fd");
    for comp in &graph.components {
        covered.checked += 1;
        if !generated.contains(&comp.representative) {
            covered.fail(|| format!("representative {} was not generated", comp.representative));
        }
    }

    Ok(VerificationReport {
        params: params.clone(),
        height_bound,
        solutions: graph.vertices.len(),
        components: graph.components.len(),
        fd_members: bounded.len(),
        checks: vec![
            terminates,
            unique,
            connected,
            fixed,
            inequivalent,
            matches,
            covered,
        ],
    })
}
