//! Multi-start generation of quasi-clusters.
//!
//! Each round seeds from the rows not yet covered by an earlier set, so later
//! sets are pushed elsewhere but may still share rows with earlier ones.

use serde::{Deserialize, Serialize};

use super::{
    algorithm1, algorithm1_accelerated, algorithm2, algorithm2_accelerated, higher_order_frequency, pairwise_overlaps,
    select_seed_with, HeuristicConfig, SeedRule, TieBreak,
};
use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, IntersectMode};
use crate::objective::Bicluster;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "snake_case")]
pub enum InnerProblem {
    /// Rows problem with lower limit `bound` on `|N_v(S)|`.
    Rows { bound: usize },
    /// Columns problem with target size `bound`.
    Columns { bound: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct MasterConfig {
    pub mode: IntersectMode,
    /// `U`: most sets to generate.
    pub max_sets: usize,
    /// `L`: stop once a set has fewer rows than this.
    pub min_size: usize,
    pub inner: InnerProblem,
    pub accelerated: bool,
    pub seed_rule: SeedRule,
    pub tie_break: TieBreak,
    pub adaptive_cutoff: Option<f64>,
}

impl MasterConfig {
    pub fn new(mode: IntersectMode, max_sets: usize, min_size: usize, inner: InnerProblem) -> Self {
        MasterConfig {
            mode,
            max_sets,
            min_size,
            inner,
            accelerated: true,
            seed_rule: SeedRule::MaxImbalance,
            tie_break: TieBreak::LowestIndex,
            adaptive_cutoff: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_sets == 0 {
            return Err(Error::InvalidConfig("U must be at least 1".into()));
        }
        if self.min_size == 0 {
            return Err(Error::InvalidConfig("L must be at least 1".into()));
        }
        Ok(())
    }
}

/// Why generation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum MasterStop {
    /// `U` sets were generated.
    SetLimit,
    /// The latest set has fewer than `L` rows.
    BelowMinimum,
    /// The chosen seed cannot meet the inner lower limit on its own.
    InfeasibleSeed { row: usize, available: usize },
    /// Every row is already covered by some set.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuasiClusterReport {
    pub mode: IntersectMode,
    pub sets: Vec<Bicluster>,
    /// Seed row of each set.
    pub seeds: Vec<usize>,
    /// `overlaps[i][k]` = rows shared by sets `i` and `k`.
    pub overlaps: Vec<Vec<Vec<usize>>>,
    pub higher_order_freq: Vec<usize>,
    pub stop: MasterStop,
}

pub fn master(matrix: &BinaryMatrix, cfg: &MasterConfig) -> Result<QuasiClusterReport> {
    cfg.validate()?;
    let mut covered = vec![false; matrix.r()];
    let mut sets: Vec<Bicluster> = Vec::new();
    let mut seeds = Vec::new();

    let stop = loop {
        if sets.len() >= cfg.max_sets {
            break MasterStop::SetLimit;
        }
        let excluded: Vec<usize> = (1..=matrix.r()).filter(|&i| covered[i - 1]).collect();
        let h = match select_seed_with(matrix, cfg.mode, &excluded, cfg.seed_rule) {
            Ok(h) => h,
            Err(Error::AllRowsExcluded) => break MasterStop::Exhausted,
            Err(e) => return Err(e),
        };
        let (bound, rows_problem) = match cfg.inner {
            InnerProblem::Rows { bound } => (bound, true),
            InnerProblem::Columns { bound } => (bound, false),
        };
        let hc = HeuristicConfig {
            mode: cfg.mode,
            bound,
            seed_row: h,
            tie_break: cfg.tie_break.clone(),
            adaptive_cutoff: cfg.adaptive_cutoff,
        };
        let result = match (rows_problem, cfg.accelerated) {
            (true, true) => algorithm1_accelerated(matrix, &hc),
            (true, false) => algorithm1(matrix, &hc),
            (false, true) => algorithm2_accelerated(matrix, &hc),
            (false, false) => algorithm2(matrix, &hc),
        };
        let set = match result {
            Ok(s) => s,
            Err(Error::InfeasibleSeed { row, available, .. }) => break MasterStop::InfeasibleSeed { row, available },
            Err(e) => return Err(e),
        };
        for &i in set.rows() {
            covered[i - 1] = true;
        }
        let small = set.rows().len() < cfg.min_size;
        sets.push(set);
        seeds.push(h);
        if small {
            break MasterStop::BelowMinimum;
        }
    };

    let overlaps = pairwise_overlaps(&sets);
    let higher_order_freq = higher_order_frequency(&sets, cfg.mode, matrix.n())?;
    Ok(QuasiClusterReport { mode: cfg.mode, sets, seeds, overlaps, higher_order_freq, stop })
}
