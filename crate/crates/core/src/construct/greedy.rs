//! Plain greedy growth over full analog vectors.
//!
//! Every candidate is met with the current vector across all `n` columns.

use serde::Serialize;

use super::{improves, Best, HeuristicConfig};
use crate::error::Result;
use crate::matrix::{BinaryMatrix, IntersectMode};
use crate::objective::Bicluster;
use crate::ternary::{count_v, TernaryVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub row: usize,
    /// `|z ∩ x(row)|_v` for the current analog vector `z`.
    pub count: usize,
}

/// One pass of the candidate scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthStep {
    /// `S` before this step, in insertion order.
    pub rows: Vec<usize>,
    /// Analog vector of `rows`.
    pub z: TernaryVector,
    pub evaluations: Vec<Evaluation>,
    /// Row added by this step, `None` when growth stopped here.
    pub chosen: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct GrowthLog {
    pub steps: Vec<GrowthStep>,
    /// Final `S` in insertion order.
    pub order: Vec<usize>,
    /// Analog vector of the final `S`.
    pub final_z: Option<TernaryVector>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Rows,
    Columns,
}

/// Greedy heuristic for the seeded rows problem: maximize `|S|` while
/// `|N_v(S)| >= bound`, with the seed row always in `S`.
pub fn algorithm1(matrix: &BinaryMatrix, cfg: &HeuristicConfig) -> Result<Bicluster> {
    cfg.check_rows_problem(matrix)?;
    Ok(grow(matrix, cfg, Goal::Rows, None))
}

pub fn algorithm1_logged(matrix: &BinaryMatrix, cfg: &HeuristicConfig) -> Result<(Bicluster, GrowthLog)> {
    cfg.check_rows_problem(matrix)?;
    let mut log = GrowthLog::default();
    let b = grow(matrix, cfg, Goal::Rows, Some(&mut log));
    Ok((b, log))
}

/// Greedy heuristic for the seeded columns problem: add the best row until
/// `|S| = bound` (or `S = R`), greedily keeping `|N_v(S)|` large.
pub fn algorithm2(matrix: &BinaryMatrix, cfg: &HeuristicConfig) -> Result<Bicluster> {
    cfg.check_columns_problem(matrix)?;
    Ok(grow(matrix, cfg, Goal::Columns, None))
}

pub fn algorithm2_logged(matrix: &BinaryMatrix, cfg: &HeuristicConfig) -> Result<(Bicluster, GrowthLog)> {
    cfg.check_columns_problem(matrix)?;
    let mut log = GrowthLog::default();
    let b = grow(matrix, cfg, Goal::Columns, Some(&mut log));
    Ok((b, log))
}

fn meet_count(z: &TernaryVector, row: &[u8], mode: IntersectMode) -> usize {
    z.comps()
        .iter()
        .zip(row)
        .filter(|(t, &x)| t.meet(crate::ternary::Trit::from_bit(x)).counts_under(mode))
        .count()
}

fn grow(matrix: &BinaryMatrix, cfg: &HeuristicConfig, goal: Goal, mut log: Option<&mut GrowthLog>) -> Bicluster {
    let r = matrix.r();
    let h0 = cfg.seed_row - 1;
    let mut in_s = vec![false; r];
    in_s[h0] = true;
    let mut order = vec![cfg.seed_row];
    let mut z = TernaryVector::from_bits(matrix.row0(h0));
    let mut current = count_v(&z, cfg.mode);

    while order.len() < r {
        if goal == Goal::Columns && order.len() >= cfg.bound {
            break;
        }
        let mut evaluations = Vec::new();
        let mut best: Option<Best> = None;
        for i in (0..r).filter(|&i| !in_s[i]) {
            let count = meet_count(&z, matrix.row0(i), cfg.mode);
            if log.is_some() {
                evaluations.push(Evaluation { row: i + 1, count });
            }
            if improves(&cfg.tie_break, count, i, best) {
                best = Some(Best { row0: i, count });
            }
        }
        let best = best.expect("a row outside S exists");
        let accept = (goal == Goal::Columns || best.count >= cfg.bound) && !cfg.stops_early(best.count, current);
        if let Some(log) = log.as_deref_mut() {
            log.steps.push(GrowthStep {
                rows: order.clone(),
                z: z.clone(),
                evaluations,
                chosen: accept.then_some(best.row0 + 1),
            });
        }
        if !accept {
            break;
        }
        in_s[best.row0] = true;
        order.push(best.row0 + 1);
        z.meet_bits_in_place(matrix.row0(best.row0));
        current = best.count;
        debug_assert_eq!(current, count_v(&z, cfg.mode));
    }

    let mut rows = order.clone();
    rows.sort_unstable();
    let b = Bicluster::from_parts(rows, z.columns(cfg.mode), cfg.mode);
    if let Some(log) = log {
        log.order = order;
        log.final_z = Some(z);
    }
    b
}
