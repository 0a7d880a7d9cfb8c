//! Bi-objective biclustering of binary data.
//!
//! Given an `r x n` 0/1 matrix whose rows form a reference set, the goal is
//! to find row subsets `S` that are simultaneously large and agree on many
//! columns. The crate provides:
//!
//! - the intersect-set and analog-vector algebra ([`matrix`], [`ternary`]),
//! - greedy constructive heuristics and their accelerated forms plus a
//!   multi-start driver producing overlapping quasi-clusters ([`construct`]),
//! - exhaustive exact oracles and biclique checks ([`exact`]),
//! - the epsilon-constraint front sweep ([`pareto`]),
//! - integer-programming model export in LP format ([`mip`]),
//! - instance generation and I/O ([`instances`]) and an experiment harness ([`bench`]).

mod bits;
pub mod bench;
pub mod construct;
pub mod error;
pub mod exact;
pub mod instances;
pub mod matrix;
pub mod mip;
pub mod objective;
pub mod pareto;
pub mod ternary;

pub use error::{Error, Result};
pub use matrix::{intersect_count, intersect_sets, BinaryMatrix, IntersectMode};
pub use objective::{dominates, ideal_nadir, Bicluster, IdealNadir, ObjectivePoint};
pub use ternary::{analog_vector, count_v, ternary_meet, TernaryVector, Trit};
