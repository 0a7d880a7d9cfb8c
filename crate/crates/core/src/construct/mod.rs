//! Constructive heuristics for the seeded problems.
//!
//! Both problems grow a row set `S` from a seed row `x(h)`, adding at every
//! step the row whose meet with the current analog vector keeps the most
//! agreeing columns:
//!
//! - the *rows* problem ([`algorithm1`]) keeps adding while `|N_v(S)|` stays at
//!   or above a lower limit, maximizing `|S|`;
//! - the *columns* problem ([`algorithm2`]) adds exactly until `|S|` reaches a
//!   target size, greedily maximizing `|N_v(S)|`.
//!
//! The `_accelerated` variants return identical results. They scan only the
//! columns still in agreement and permanently drop rows that can no longer
//! meet the lower limit.

mod accelerated;
mod frequency;
mod greedy;
mod master;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, IntersectMode};

pub use accelerated::{algorithm1_accelerated, algorithm2_accelerated};
pub use frequency::{frequency_counts, higher_order_frequency, pairwise_overlaps};
pub use greedy::{algorithm1, algorithm1_logged, algorithm2, algorithm2_logged, Evaluation, GrowthLog, GrowthStep};
pub use master::{master, InnerProblem, MasterConfig, MasterStop, QuasiClusterReport};

/// How ties in the greedy argmax are resolved.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum TieBreak {
    /// First row in index order among the tied candidates.
    #[default]
    LowestIndex,
    /// Larger externally supplied score wins, then lowest index. One score per row.
    HighestScore(Arc<[f64]>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicConfig {
    pub mode: IntersectMode,
    /// Lower limit on `|N_v(S)|` for the rows problem, target `|S|` for the columns problem.
    pub bound: usize,
    /// Seed row `h`, 1-based.
    pub seed_row: usize,
    pub tie_break: TieBreak,
    /// Stop early when the best addition would leave fewer than this fraction of
    /// the current agreeing columns.
    pub adaptive_cutoff: Option<f64>,
}

impl HeuristicConfig {
    pub fn new(mode: IntersectMode, seed_row: usize, bound: usize) -> Self {
        HeuristicConfig { mode, bound, seed_row, tie_break: TieBreak::LowestIndex, adaptive_cutoff: None }
    }

    pub fn with_tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }

    pub fn with_adaptive_cutoff(mut self, fraction: f64) -> Self {
        self.adaptive_cutoff = Some(fraction);
        self
    }

    fn validate(&self, matrix: &BinaryMatrix) -> Result<()> {
        matrix.check_row(self.seed_row)?;
        if let Some(q) = self.adaptive_cutoff {
            if !(0.0..=1.0).contains(&q) {
                return Err(Error::InvalidConfig(format!("adaptive cutoff {q} outside [0, 1]")));
            }
        }
        if let TieBreak::HighestScore(scores) = &self.tie_break {
            if scores.len() != matrix.r() {
                return Err(Error::LengthMismatch { left: matrix.r(), right: scores.len() });
            }
        }
        Ok(())
    }

    /// Rows problem precondition: the seed alone must meet the limit.
    fn check_rows_problem(&self, matrix: &BinaryMatrix) -> Result<()> {
        self.validate(matrix)?;
        let available = matrix.row_count(self.seed_row, self.mode);
        if self.bound > available {
            return Err(Error::InfeasibleSeed { row: self.seed_row, available, bound: self.bound });
        }
        Ok(())
    }

    fn check_columns_problem(&self, matrix: &BinaryMatrix) -> Result<()> {
        self.validate(matrix)?;
        if self.bound > matrix.r() {
            return Err(Error::BoundTooLarge { bound: self.bound, rows: matrix.r() });
        }
        Ok(())
    }

    fn stops_early(&self, best: usize, current: usize) -> bool {
        self.adaptive_cutoff.is_some_and(|q| (best as f64) < q * current as f64)
    }
}

/// Running argmax over candidates visited in increasing row order.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Best {
    pub row0: usize,
    pub count: usize,
}

pub(crate) fn improves(tie: &TieBreak, count: usize, row0: usize, best: Option<Best>) -> bool {
    match best {
        None => true,
        Some(b) if count != b.count => count > b.count,
        Some(b) => match tie {
            TieBreak::LowestIndex => false,
            TieBreak::HighestScore(scores) => scores[row0] > scores[b.row0],
        },
    }
}

/// How a fresh seed is picked for `ZeroOne`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SeedRule {
    /// Largest `| |x|_1 - |x|_0 |`.
    #[default]
    MaxImbalance,
    /// Smallest `| |x|_1 - |x|_0 |`: the most evenly split row.
    Balanced,
}

/// Row outside `excluded` with the most components equal to `v`; for
/// `ZeroOne` the most imbalanced row. Ties go to the lowest index.
pub fn select_seed(matrix: &BinaryMatrix, mode: IntersectMode, excluded: &[usize]) -> Result<usize> {
    select_seed_with(matrix, mode, excluded, SeedRule::MaxImbalance)
}

pub fn select_seed_with(matrix: &BinaryMatrix, mode: IntersectMode, excluded: &[usize], rule: SeedRule) -> Result<usize> {
    let mut skip = vec![false; matrix.r()];
    for &i in excluded {
        matrix.check_row(i)?;
        skip[i - 1] = true;
    }
    // larger key wins
    let key = |i: usize| -> i64 {
        match mode {
            IntersectMode::ZeroOne => {
                let gap = matrix.row_count(i, IntersectMode::One).abs_diff(matrix.row_count(i, IntersectMode::Zero)) as i64;
                match rule {
                    SeedRule::MaxImbalance => gap,
                    SeedRule::Balanced => -gap,
                }
            }
            _ => matrix.row_count(i, mode) as i64,
        }
    };
    let mut best: Option<(usize, i64)> = None;
    for i in (1..=matrix.r()).filter(|&i| !skip[i - 1]) {
        let k = key(i);
        if best.is_none_or(|(_, bk)| k > bk) {
            best = Some((i, k));
        }
    }
    best.map(|(i, _)| i).ok_or(Error::AllRowsExcluded)
}
