//! Exact arithmetic for integral points of the Markoff-Hurwitz variety
//!
//! ```text
//! x1^2 + ... + xn^2 - a * x1 * ... * xn = k
//! ```
//!
//! The group generated by Vieta involutions, coordinate permutations and
//! double sign changes acts on the integral points. This crate reduces any
//! point to the unique canonical representative of its orbit, enumerates
//! bounded solution sets and fundamental-domain members, builds bounded orbit
//! graphs, and cross-checks the fundamental-domain description by brute force.
//!
//! All arithmetic is on [`num_bigint::BigInt`]; Vieta moves grow coordinates
//! multiplicatively and nothing here is allowed to overflow.

pub mod arith;
pub mod enumeration;
pub mod error;
pub mod moves;
pub mod normal;
pub mod reduction;
pub mod stratum;
pub mod variety;

pub use enumeration::{
    compat::{markoff_compat_check, CompatReport},
    fd::{enumerate_fd, FamilyDescriptor, FamilyKind, FdSet},
    graph::{orbit_graph, Component, Edge, FrontierMarker, OrbitGraph},
    solutions::{enumerate_solutions, solve_last_coordinate, SolutionSet},
    verify::{verify_fundamental_domain, CheckResult, VerificationReport},
    with_workers,
};
pub use error::{Error, Result};
pub use moves::{apply_word, inverse_word, Move};
pub use normal::{normalize, NormalPoint};
pub use reduction::{
    equivalence_word, equivalent, is_last_vertex, reduce, reduce_with, ReduceOptions,
    ReductionResult,
};
pub use stratum::{strata_containing, stratum_member, Stratum};
pub use variety::{flip_coefficient_sign, negate_a_transform, Params, Point};
