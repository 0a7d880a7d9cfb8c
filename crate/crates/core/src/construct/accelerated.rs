//! Accelerated growth.
//!
//! Only the columns still in agreement (`N*`) are scanned, and for the rows
//! problem a candidate that falls below the limit once is dropped for good:
//! `|N_v(S)|` can only shrink as `S` grows.

use super::{improves, Best, HeuristicConfig};
use crate::error::Result;
use crate::matrix::{BinaryMatrix, IntersectMode};
use crate::objective::Bicluster;

/// Same output as [`super::algorithm1`].
pub fn algorithm1_accelerated(matrix: &BinaryMatrix, cfg: &HeuristicConfig) -> Result<Bicluster> {
    cfg.check_rows_problem(matrix)?;
    Ok(grow(matrix, cfg, true))
}

/// Same output as [`super::algorithm2`].
pub fn algorithm2_accelerated(matrix: &BinaryMatrix, cfg: &HeuristicConfig) -> Result<Bicluster> {
    cfg.check_columns_problem(matrix)?;
    Ok(grow(matrix, cfg, false))
}

fn grow(matrix: &BinaryMatrix, cfg: &HeuristicConfig, rows_problem: bool) -> Bicluster {
    let r = matrix.r();
    let mode = cfg.mode;
    let h0 = cfg.seed_row - 1;
    let seed = matrix.row0(h0);

    // N*: (column, value) pairs still counted under the mode
    let mut live: Vec<(usize, u8)> = seed
        .iter()
        .enumerate()
        .filter(|&(_, &x)| match mode.value() {
            Some(v) => x == v,
            None => true,
        })
        .map(|(j, &x)| (j, x))
        .collect();

    // candidate pool: rows outside S and F
    let mut open = vec![true; r];
    open[h0] = false;
    let mut size = 1usize;
    if rows_problem && mode != IntersectMode::ZeroOne {
        for (i, o) in open.iter_mut().enumerate() {
            if *o && matrix.row_count(i + 1, mode) < cfg.bound {
                *o = false;
            }
        }
    }

    let mut in_s = vec![false; r];
    in_s[h0] = true;
    loop {
        if !rows_problem && size >= cfg.bound.min(r) {
            break;
        }
        let mut best: Option<Best> = None;
        for (i, o) in open.iter_mut().enumerate() {
            if !*o {
                continue;
            }
            let row = matrix.row0(i);
            let count = live.iter().filter(|&&(j, x)| row[j] == x).count();
            if rows_problem && count < cfg.bound {
                *o = false;
                continue;
            }
            if improves(&cfg.tie_break, count, i, best) {
                best = Some(Best { row0: i, count });
            }
        }
        let Some(best) = best else { break };
        if cfg.stops_early(best.count, live.len()) {
            break;
        }
        open[best.row0] = false;
        in_s[best.row0] = true;
        size += 1;
        let row = matrix.row0(best.row0);
        live.retain(|&(j, x)| row[j] == x);
    }

    let rows: Vec<usize> = (0..r).filter(|&i| in_s[i]).map(|i| i + 1).collect();
    let cols = live.iter().map(|&(j, _)| j + 1).collect();
    Bicluster::from_parts(rows, cols, mode)
}
