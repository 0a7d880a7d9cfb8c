//! Biclusters, their objective pairs `(|S|, |N_v(S)|)`, and Pareto dominance.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::{intersect_sets, BinaryMatrix, IntersectMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ObjectivePoint {
    pub size_s: usize,
    pub size_n: usize,
}

impl ObjectivePoint {
    pub const fn new(size_s: usize, size_n: usize) -> Self {
        ObjectivePoint { size_s, size_n }
    }
}

impl fmt::Display for ObjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.size_s, self.size_n)
    }
}

impl From<(usize, usize)> for ObjectivePoint {
    fn from((size_s, size_n): (usize, usize)) -> Self {
        ObjectivePoint { size_s, size_n }
    }
}

/// `p` dominates `q`: no worse in both objectives and strictly better in one.
pub fn dominates(p: ObjectivePoint, q: ObjectivePoint) -> bool {
    p.size_s >= q.size_s && p.size_n >= q.size_n && (p.size_s > q.size_s || p.size_n > q.size_n)
}

/// A row set together with its intersect column set.
///
/// Rows and columns are 1-based and kept sorted; `cols` always equals
/// `N_v(rows)` for the stored mode.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bicluster {
    rows: Vec<usize>,
    cols: Vec<usize>,
    mode: IntersectMode,
}

impl Bicluster {
    pub fn from_rows(matrix: &BinaryMatrix, rows: &[usize], mode: IntersectMode) -> Result<Self> {
        let mut rows = rows.to_vec();
        rows.sort_unstable();
        rows.dedup();
        let cols = intersect_sets(&rows, matrix, mode)?;
        Ok(Bicluster { rows, cols, mode })
    }

    /// Caller guarantees `cols == N_v(rows)` and `rows` sorted and unique.
    pub(crate) fn from_parts(rows: Vec<usize>, cols: Vec<usize>, mode: IntersectMode) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] < w[1]));
        Bicluster { rows, cols, mode }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn mode(&self) -> IntersectMode {
        self.mode
    }

    pub fn objectives(&self) -> ObjectivePoint {
        ObjectivePoint::new(self.rows.len(), self.cols.len())
    }

    pub fn contains_row(&self, row: usize) -> bool {
        self.rows.binary_search(&row).is_ok()
    }

    /// Recomputes `N_v(rows)` and compares with the stored columns.
    pub fn is_consistent(&self, matrix: &BinaryMatrix) -> bool {
        intersect_sets(&self.rows, matrix, self.mode).is_ok_and(|cols| cols == self.cols)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealNadir {
    pub ideal: ObjectivePoint,
    pub nadir: ObjectivePoint,
}

/// Ideal and Nadir points of the bi-objective problem under `mode`.
///
/// Ideal is `(r, max_i |N_v({i})|)` (`n` for `ZeroOne`); Nadir is `(1, |N_v(R)|)`.
pub fn ideal_nadir(matrix: &BinaryMatrix, mode: IntersectMode) -> IdealNadir {
    let best_single = match mode {
        IntersectMode::ZeroOne => matrix.n(),
        _ => (1..=matrix.r()).map(|i| matrix.row_count(i, mode)).max().unwrap_or(0),
    };
    let (zeros, ones) = matrix.agreement0(0..matrix.r());
    let whole = crate::matrix::agreement_count(&zeros, &ones, mode);
    IdealNadir {
        ideal: ObjectivePoint::new(matrix.r(), best_single),
        nadir: ObjectivePoint::new(1, whole),
    }
}
