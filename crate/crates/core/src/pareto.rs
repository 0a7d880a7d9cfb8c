//! The ε-constraint sweep over the two objectives `|S|` and `|N_v(S)|`.
//!
//! One objective is kept, the other becomes a lower bound `L` that starts just
//! above its nadir value and is pushed past each solved point by `epsilon`.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::construct::{algorithm1, algorithm1_accelerated, algorithm2, algorithm2_accelerated, HeuristicConfig};
use crate::error::{Error, Result};
use crate::exact::{exact_g1, exact_g2, ExactLimits};
use crate::instances::choose_target;
use crate::matrix::{BinaryMatrix, IntersectMode};
use crate::objective::{dominates, ideal_nadir, Bicluster, ObjectivePoint};

/// The objective kept as objective; the other one is bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kept {
    /// `p = 1`: maximize `|S|` subject to `|N_v(S)| >= L`.
    Rows,
    /// `p = 2`: maximize `|N_v(S)|` subject to `|S| >= L`.
    Columns,
}

impl Kept {
    pub fn from_p(p: u8) -> Result<Self> {
        match p {
            1 => Ok(Kept::Rows),
            2 => Ok(Kept::Columns),
            other => Err(Error::InvalidConfig(format!("p must be 1 or 2, got {other}"))),
        }
    }

    pub fn p(self) -> u8 {
        match self {
            Kept::Rows => 1,
            Kept::Columns => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Seeding {
    /// A single run from the row picked by [`choose_target`].
    #[default]
    Target,
    /// One run from every row, keeping the best.
    EveryRow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Solver {
    Exact(ExactLimits),
    Heuristic { seeding: Seeding, accelerated: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonConfig {
    pub mode: IntersectMode,
    pub kept: Kept,
    pub epsilon: usize,
    pub solver: Solver,
}

impl EpsilonConfig {
    pub fn exact(mode: IntersectMode, kept: Kept) -> Self {
        EpsilonConfig { mode, kept, epsilon: 1, solver: Solver::Exact(ExactLimits::default()) }
    }

    pub fn heuristic(mode: IntersectMode, kept: Kept) -> Self {
        EpsilonConfig {
            mode,
            kept,
            epsilon: 1,
            solver: Solver::Heuristic { seeding: Seeding::Target, accelerated: true },
        }
    }

    pub fn with_epsilon(mut self, epsilon: usize) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_solver(mut self, solver: Solver) -> Self {
        self.solver = solver;
        self
    }
}

/// One solved subproblem of the sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub iter: usize,
    /// The bound `L` on the non-kept objective.
    pub bound: usize,
    pub point: ObjectivePoint,
    pub bicluster: Bicluster,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrontPoint {
    pub point: ObjectivePoint,
    pub bicluster: Bicluster,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Termination {
    /// The bound passed the ideal value.
    Completed,
    /// No set was found for this bound.
    Infeasible { bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParetoFront {
    pub mode: IntersectMode,
    /// Nondominated points, descending `|S|`.
    pub points: Vec<FrontPoint>,
    /// Raw sweep, dominated points included. Empty for a direct enumeration.
    pub trace: Vec<TraceRow>,
    pub termination: Termination,
}

impl ParetoFront {
    pub fn objective_points(&self) -> Vec<ObjectivePoint> {
        self.points.iter().map(|p| p.point).collect()
    }
}

/// Positions of the survivors: first occurrence of each nondominated point.
fn survivors(points: &[ObjectivePoint]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| {
            let p = points[i];
            !points.iter().any(|&q| dominates(q, p)) && !points[..i].contains(&p)
        })
        .collect()
}

/// Drops dominated points and repeats, keeping the order of the rest.
pub fn filter_dominated(points: &[ObjectivePoint]) -> Vec<ObjectivePoint> {
    survivors(points).into_iter().map(|i| points[i]).collect()
}

struct Sweep<'a> {
    matrix: &'a BinaryMatrix,
    cfg: &'a EpsilonConfig,
}

impl Sweep<'_> {
    fn solve(&self, bound: usize) -> Result<Option<Bicluster>> {
        let (matrix, mode) = (self.matrix, self.cfg.mode);
        match (self.cfg.solver, self.cfg.kept) {
            (Solver::Exact(limits), Kept::Rows) => exact_g1(matrix, mode, bound, &limits),
            (Solver::Exact(limits), Kept::Columns) => exact_g2(matrix, mode, bound, &limits).map(Some),
            (Solver::Heuristic { seeding, accelerated }, kept) => {
                let seeds: Vec<usize> = match seeding {
                    Seeding::Target => vec![choose_target(matrix, mode)],
                    Seeding::EveryRow => (1..=matrix.r()).collect(),
                };
                let mut best: Option<Bicluster> = None;
                for h in seeds {
                    let hc = HeuristicConfig::new(mode, h, bound);
                    let run = match (kept, accelerated) {
                        (Kept::Rows, true) => algorithm1_accelerated(matrix, &hc),
                        (Kept::Rows, false) => algorithm1(matrix, &hc),
                        (Kept::Columns, true) => algorithm2_accelerated(matrix, &hc),
                        (Kept::Columns, false) => algorithm2(matrix, &hc),
                    };
                    let b = match run {
                        Ok(b) => b,
                        Err(Error::InfeasibleSeed { .. }) => continue,
                        Err(e) => return Err(e),
                    };
                    if best.as_ref().is_none_or(|cur| self.key(&b) > self.key(cur)) {
                        best = Some(b);
                    }
                }
                Ok(best)
            }
        }
    }

    fn key(&self, b: &Bicluster) -> (usize, usize) {
        let p = b.objectives();
        match self.cfg.kept {
            Kept::Rows => (p.size_s, p.size_n),
            Kept::Columns => (p.size_n, p.size_s),
        }
    }

    /// The value of the bounded objective at `p`.
    fn bounded(&self, p: ObjectivePoint) -> usize {
        match self.cfg.kept {
            Kept::Rows => p.size_n,
            Kept::Columns => p.size_s,
        }
    }
}

/// Runs the sweep and returns the raw trace plus the filtered front.
pub fn epsilon_constraint(matrix: &BinaryMatrix, cfg: &EpsilonConfig) -> Result<ParetoFront> {
    if cfg.epsilon == 0 {
        return Err(Error::InvalidConfig("epsilon must be at least 1".into()));
    }
    if let Solver::Exact(limits) = cfg.solver {
        if matrix.r() > limits.max_r_enumeration {
            return Err(Error::EnumerationLimit { rows: matrix.r(), limit: limits.max_r_enumeration });
        }
    }
    let mode = cfg.mode;
    let bounds = ideal_nadir(matrix, mode);
    let sweep = Sweep { matrix, cfg };

    // the extreme point where the kept objective is at its ideal
    let (start, ceiling) = match cfg.kept {
        Kept::Rows => {
            let all: Vec<usize> = (1..=matrix.r()).collect();
            (Bicluster::from_rows(matrix, &all, mode)?, bounds.ideal.size_n)
        }
        Kept::Columns => {
            let h = (1..=matrix.r())
                .find(|&i| matrix.row_count(i, mode) == bounds.ideal.size_n)
                .expect("the ideal is attained by some row");
            (Bicluster::from_rows(matrix, &[h], mode)?, matrix.r())
        }
    };
    let mut trace = vec![TraceRow {
        iter: 1,
        bound: sweep.bounded(start.objectives()),
        point: start.objectives(),
        bicluster: start,
    }];
    let mut bound = sweep.bounded(trace[0].point) + cfg.epsilon;
    let mut termination = Termination::Completed;
    while bound <= ceiling {
        let Some(b) = sweep.solve(bound)? else {
            termination = Termination::Infeasible { bound };
            break;
        };
        let point = b.objectives();
        trace.push(TraceRow { iter: trace.len() + 1, bound, point, bicluster: b });
        bound = sweep.bounded(point) + cfg.epsilon;
    }

    let pts: Vec<ObjectivePoint> = trace.iter().map(|t| t.point).collect();
    let mut points: Vec<FrontPoint> = survivors(&pts)
        .into_iter()
        .map(|i| FrontPoint { point: trace[i].point, bicluster: trace[i].bicluster.clone() })
        .collect();
    points.sort_by_key(|p| std::cmp::Reverse(p.point.size_s));
    Ok(ParetoFront { mode, points, trace, termination })
}

pub const CSV_HEADER: &str = "iter,L,size_S,size_N,rows,cols";

fn joined(ix: &[usize]) -> String {
    ix.iter().map(usize::to_string).collect::<Vec<_>>().join(";")
}

/// One line per trace row.
pub fn write_trace_csv<W: Write>(front: &ParetoFront, mut out: W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for t in &front.trace {
        let b = &t.bicluster;
        writeln!(out, "{},{},{},{},{},{}", t.iter, t.bound, t.point.size_s, t.point.size_n, joined(b.rows()), joined(b.cols()))?;
    }
    Ok(())
}

/// One line per front point; `iter` numbers the points and `L` is left blank.
pub fn write_front_csv<W: Write>(front: &ParetoFront, mut out: W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for (k, p) in front.points.iter().enumerate() {
        let b = &p.bicluster;
        writeln!(out, "{},,{},{},{},{}", k + 1, p.point.size_s, p.point.size_n, joined(b.rows()), joined(b.cols()))?;
    }
    Ok(())
}

/// Checks a `p = 1` trace against the sweep's rules: the opening row is the
/// full row set at the nadir bound, each bound is the previous `|N_v|` plus
/// `epsilon`, every row is an optimal (not necessarily tie-broken) solution of
/// its subproblem, and the sweep ends once the bound passes the ideal.
/// Returns one message per problem found.
pub fn validate_trace(
    matrix: &BinaryMatrix,
    mode: IntersectMode,
    epsilon: usize,
    trace: &[TraceRow],
    limits: &ExactLimits,
) -> Result<Vec<String>> {
    let bounds = ideal_nadir(matrix, mode);
    let mut issues = Vec::new();
    let Some(first) = trace.first() else {
        return Ok(vec!["empty trace".into()]);
    };
    if first.point != ObjectivePoint::new(matrix.r(), bounds.nadir.size_n) || first.bound != bounds.nadir.size_n {
        issues.push(format!("iter 1: expected {} at L = {}", ObjectivePoint::new(matrix.r(), bounds.nadir.size_n), bounds.nadir.size_n));
    }
    for (k, t) in trace.iter().enumerate() {
        if t.bicluster.mode() != mode || !t.bicluster.is_consistent(matrix) {
            issues.push(format!("iter {}: stored columns are not N_v(S)", t.iter));
        }
        if t.bicluster.objectives() != t.point {
            issues.push(format!("iter {}: point {} does not match the set", t.iter, t.point));
        }
        if k > 0 {
            let want = trace[k - 1].point.size_n + epsilon;
            if t.bound != want {
                issues.push(format!("iter {}: L = {} but the previous point gives {}", t.iter, t.bound, want));
            }
            if t.point.size_n < t.bound {
                issues.push(format!("iter {}: |N_v| = {} violates L = {}", t.iter, t.point.size_n, t.bound));
            }
            match exact_g1(matrix, mode, t.bound, limits)? {
                Some(opt) if opt.rows().len() == t.point.size_s => {}
                Some(opt) => issues.push(format!("iter {}: |S| = {} but the optimum is {}", t.iter, t.point.size_s, opt.rows().len())),
                None => issues.push(format!("iter {}: L = {} is infeasible", t.iter, t.bound)),
            }
        }
    }
    let last = trace.last().unwrap();
    if last.point.size_n + epsilon <= bounds.ideal.size_n {
        issues.push(format!("trace stops early: next L = {} is still attainable", last.point.size_n + epsilon));
    }
    Ok(issues)
}
