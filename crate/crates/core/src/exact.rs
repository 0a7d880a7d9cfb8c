//! Exact oracles by exhaustive enumeration of row subsets.
//!
//! Subsets are visited depth-first in pre-order, which is lexicographic order
//! of their sorted row lists. Since `|N_v(S)|` can only shrink as `S` grows,
//! whole subtrees are cut once they cannot beat the incumbent, and the first
//! optimum found is the lexicographically smallest one.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::matrix::{agreement_columns, intersect_sets, BinaryMatrix, IntersectMode};
use crate::objective::{ideal_nadir, Bicluster, ObjectivePoint};
use crate::pareto::{FrontPoint, ParetoFront, Termination};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactLimits {
    /// Largest `r` accepted; enumeration visits up to `2^r` subsets.
    pub max_r_enumeration: usize,
    #[serde(default)]
    pub time_budget: Option<Duration>,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits { max_r_enumeration: 22, time_budget: None }
    }
}

impl ExactLimits {
    pub fn with_max_r(mut self, max_r: usize) -> Self {
        self.max_r_enumeration = max_r;
        self
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    fn check(&self, matrix: &BinaryMatrix) -> Result<()> {
        if self.max_r_enumeration == 0 {
            return Err(Error::InvalidConfig("max_r_enumeration must be at least 1".into()));
        }
        if matrix.r() > self.max_r_enumeration {
            return Err(Error::EnumerationLimit { rows: matrix.r(), limit: self.max_r_enumeration });
        }
        Ok(())
    }
}

/// A visited subset: 0-based rows in increasing order, its agreement count,
/// and how many rows remain after the last one.
struct Node<'p> {
    path: &'p [usize],
    count: usize,
    rem: usize,
}

impl Node<'_> {
    fn size(&self) -> usize {
        self.path.len()
    }
}

struct Dfs<'a> {
    matrix: &'a BinaryMatrix,
    mode: IntersectMode,
    words: usize,
    zeros: Vec<u64>,
    ones: Vec<u64>,
    path: Vec<usize>,
    visited: u64,
    deadline: Option<Instant>,
    expired: bool,
}

impl<'a> Dfs<'a> {
    fn new(matrix: &'a BinaryMatrix, mode: IntersectMode, limits: &ExactLimits) -> Self {
        let words = matrix.words();
        let r = matrix.r();
        // slot d holds the agreement of the first d rows on the path; slot 0 is "everything"
        let mut zeros = vec![0u64; (r + 1) * words];
        let mut ones = vec![0u64; (r + 1) * words];
        zeros[..words].fill(u64::MAX);
        ones[..words].fill(u64::MAX);
        Dfs {
            matrix,
            mode,
            words,
            zeros,
            ones,
            path: Vec::with_capacity(r),
            visited: 0,
            deadline: limits.time_budget.map(|b| Instant::now() + b),
            expired: false,
        }
    }

    /// Walks every subset for which all ancestors were accepted by `visit`.
    fn run(mut self, visit: &mut impl FnMut(&Node) -> bool) -> Result<()> {
        self.descend(0, 0, visit);
        if self.expired {
            Err(Error::TimeBudgetExceeded)
        } else {
            Ok(())
        }
    }

    fn descend(&mut self, depth: usize, start: usize, visit: &mut impl FnMut(&Node) -> bool) {
        let r = self.matrix.r();
        let w = self.words;
        for i in start..r {
            self.visited += 1;
            if self.visited & 0xfff == 0 {
                if let Some(deadline) = self.deadline {
                    if Instant::now() >= deadline {
                        self.expired = true;
                    }
                }
            }
            if self.expired {
                return;
            }
            let (head, tail) = self.zeros.split_at_mut((depth + 1) * w);
            bits::and_into(&mut tail[..w], &head[depth * w..], self.matrix.zeros0(i));
            let (head, tail) = self.ones.split_at_mut((depth + 1) * w);
            bits::and_into(&mut tail[..w], &head[depth * w..], self.matrix.ones0(i));
            let slot = (depth + 1) * w..(depth + 2) * w;
            let count = match self.mode {
                IntersectMode::Zero => bits::count(&self.zeros[slot]),
                IntersectMode::One => bits::count(&self.ones[slot]),
                IntersectMode::ZeroOne => bits::count(&self.zeros[slot.clone()]) + bits::count(&self.ones[slot]),
            };
            self.path.push(i);
            let node = Node { path: &self.path, count, rem: r - 1 - i };
            if visit(&node) && node.rem > 0 {
                self.descend(depth + 1, i + 1, visit);
            }
            self.path.pop();
        }
    }
}

fn to_bicluster(matrix: &BinaryMatrix, path: &[usize], mode: IntersectMode) -> Bicluster {
    let rows: Vec<usize> = path.iter().map(|&i| i + 1).collect();
    let (zeros, ones) = matrix.agreement0(path.iter().copied());
    Bicluster::from_parts(rows, agreement_columns(&zeros, &ones, mode), mode)
}

/// Largest `S` with `|N_v(S)| >= bound`; ties go to the larger `|N_v(S)|`,
/// then to the lexicographically smallest row set. `None` when even the
/// best single row falls short.
pub fn exact_g1(matrix: &BinaryMatrix, mode: IntersectMode, bound: usize, limits: &ExactLimits) -> Result<Option<Bicluster>> {
    limits.check(matrix)?;
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    Dfs::new(matrix, mode, limits).run(&mut |node| {
        if node.count < bound {
            return false;
        }
        let key = (node.size(), node.count);
        if best.as_ref().is_none_or(|(k, c, _)| key > (*k, *c)) {
            best = Some((key.0, key.1, node.path.to_vec()));
        }
        let (k, c, _) = best.as_ref().unwrap();
        (node.size() + node.rem, node.count) > (*k, *c)
    })?;
    Ok(best.map(|(_, _, path)| to_bicluster(matrix, &path, mode)))
}

/// `S` with `|S| >= bound` maximizing `|N_v(S)|`; ties go to the larger `|S|`,
/// then to the lexicographically smallest row set.
pub fn exact_g2(matrix: &BinaryMatrix, mode: IntersectMode, bound: usize, limits: &ExactLimits) -> Result<Bicluster> {
    limits.check(matrix)?;
    if bound > matrix.r() {
        return Err(Error::BoundTooLarge { bound, rows: matrix.r() });
    }
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    Dfs::new(matrix, mode, limits).run(&mut |node| {
        let reach = node.size() + node.rem;
        if reach < bound {
            return false;
        }
        if node.size() >= bound && best.as_ref().is_none_or(|(c, k, _)| (node.count, node.size()) > (*c, *k)) {
            best = Some((node.count, node.size(), node.path.to_vec()));
        }
        best.as_ref().is_none_or(|(c, k, _)| (node.count, reach) > (*c, *k))
    })?;
    let (_, _, path) = best.expect("the full row set satisfies every admissible bound");
    Ok(to_bicluster(matrix, &path, mode))
}

/// The complete nondominated front, one representative per point, sorted by
/// descending `|S|`. Each representative is the lexicographically smallest
/// row set of its size reaching the point.
pub fn exact_pareto(matrix: &BinaryMatrix, mode: IntersectMode, limits: &ExactLimits) -> Result<ParetoFront> {
    limits.check(matrix)?;
    let r = matrix.r();
    let nadir = ideal_nadir(matrix, mode).nadir.size_n;
    // best[k]: largest count over sets of size k, with its first path
    let mut best: Vec<Option<(usize, Vec<usize>)>> = vec![None; r + 1];
    Dfs::new(matrix, mode, limits).run(&mut |node| {
        let k = node.size();
        if best[k].as_ref().is_none_or(|(c, _)| node.count > *c) {
            best[k] = Some((node.count, node.path.to_vec()));
        }
        // supersets all sit at the nadir, which the full set already attains
        if node.count == nadir {
            return false;
        }
        (k + 1..=k + node.rem).any(|k2| best[k2].as_ref().is_none_or(|(c, _)| *c < node.count))
    })?;
    best[r] = Some((nadir, (0..r).collect()));

    let mut points = Vec::new();
    let mut floor: Option<usize> = None;
    for k in (1..=r).rev() {
        if let Some((c, path)) = &best[k] {
            if floor.is_none_or(|f| *c > f) {
                floor = Some(*c);
                points.push(FrontPoint { point: ObjectivePoint::new(k, *c), bicluster: to_bicluster(matrix, path, mode) });
            }
        }
    }
    Ok(ParetoFront { mode, points, trace: Vec::new(), termination: Termination::Completed })
}

fn check_pair(matrix: &BinaryMatrix, mode: IntersectMode, rows: &[usize], cols: &[usize]) -> Result<u8> {
    let Some(v) = mode.value() else {
        return Err(Error::UnsupportedMode { op: "biclique test", mode });
    };
    matrix.check_rows(rows)?;
    if cols.is_empty() {
        return Err(Error::EmptyColumnSet);
    }
    if let Some(&col) = cols.iter().find(|&&j| j == 0 || j > matrix.n()) {
        return Err(Error::ColumnOutOfRange { col, cols: matrix.n() });
    }
    Ok(v)
}

/// Every entry `x(i)_j` with `i` in `rows` and `j` in `cols` equals `v`.
pub fn is_biclique(matrix: &BinaryMatrix, mode: IntersectMode, rows: &[usize], cols: &[usize]) -> Result<bool> {
    let v = check_pair(matrix, mode, rows, cols)?;
    Ok(rows.iter().all(|&i| cols.iter().all(|&j| matrix.entry(i, j) == v)))
}

/// A biclique to which no row and no column can be added.
pub fn is_maximal_biclique(matrix: &BinaryMatrix, mode: IntersectMode, rows: &[usize], cols: &[usize]) -> Result<bool> {
    if !is_biclique(matrix, mode, rows, cols)? {
        return Ok(false);
    }
    let v = mode.value().expect("checked by is_biclique");
    let row_fits = |i: usize| cols.iter().all(|&j| matrix.entry(i, j) == v);
    if (1..=matrix.r()).any(|i| !rows.contains(&i) && row_fits(i)) {
        return Ok(false);
    }
    let mut own: Vec<usize> = cols.to_vec();
    own.sort_unstable();
    own.dedup();
    Ok(intersect_sets(rows, matrix, mode)? == own)
}

/// Splits the columns of a `ZeroOne` bicluster into its 0-part and 1-part.
pub fn split_zero_one(matrix: &BinaryMatrix, bicluster: &Bicluster) -> Result<(Vec<usize>, Vec<usize>)> {
    if bicluster.mode() != IntersectMode::ZeroOne {
        return Err(Error::ModeMismatch { expected: IntersectMode::ZeroOne, found: bicluster.mode() });
    }
    let first = bicluster.rows()[0];
    Ok(bicluster.cols().iter().partition(|&&j| matrix.entry(first, j) == 0))
}
