//! Experiment harness: heuristic, accelerated heuristic and the exact oracle
//! on grids of random instances.
//!
//! Per instance the target row and the limit `L` are derived from the matrix,
//! then the rows problem is solved three ways. Per cell the harness reports
//! mean objectives and CPU time plus three counts:
//!
//! - `#OptOracle`: exact solves finished within the budget;
//! - `#E1`: instances where the heuristic reaches the exact `|S*|`;
//! - `#E2`: `#E1` instances where the heuristic's `|N_v(S*)|` is strictly
//!   larger than that of the exact representative.

use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::{algorithm1, algorithm1_accelerated, HeuristicConfig};
use crate::error::{Error, Result};
use crate::exact::{exact_g1, ExactLimits};
use crate::instances::{choose_target, compute_l1, generate, GenSpec};
use crate::matrix::IntersectMode;
use crate::objective::ObjectivePoint;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub r: usize,
    pub n: usize,
    #[serde(default = "half")]
    pub density: f64,
    pub alpha: f64,
}

fn half() -> f64 {
    0.5
}

/// Cartesian product shorthand for `cells`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Grid {
    pub r: Vec<usize>,
    pub n: Vec<usize>,
    #[serde(default = "half_list")]
    pub density: Vec<f64>,
    pub alpha: Vec<f64>,
}

fn half_list() -> Vec<f64> {
    vec![0.5]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchConfig {
    #[serde(default)]
    pub cells: Vec<Cell>,
    #[serde(default)]
    pub grid: Option<Grid>,
    pub instances_per_cell: usize,
    pub modes: Vec<IntersectMode>,
    /// Wall-clock budget per exact solve, in seconds.
    #[serde(default)]
    pub time_budget_secs: Option<f64>,
    #[serde(default)]
    pub rng_seed_base: u64,
    /// Cells with more rows run heuristics only.
    #[serde(default = "default_max_r")]
    pub max_r_enumeration: usize,
    /// Worker threads; `None` uses every core.
    #[serde(default)]
    pub jobs: Option<usize>,
}

fn default_max_r() -> usize {
    ExactLimits::default().max_r_enumeration
}

impl BenchConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: BenchConfig = toml::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.instances_per_cell == 0 {
            return Err(Error::InvalidConfig("instances_per_cell must be at least 1".into()));
        }
        if self.modes.is_empty() {
            return Err(Error::InvalidConfig("at least one mode is required".into()));
        }
        if self.all_cells().is_empty() {
            return Err(Error::InvalidConfig("no cells configured".into()));
        }
        if self.time_budget_secs.is_some_and(|t| !(t.is_finite() && t > 0.0)) {
            return Err(Error::InvalidConfig("time_budget_secs must be positive".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::InvalidConfig("jobs must be at least 1".into()));
        }
        Ok(())
    }

    /// Explicit cells followed by the grid expansion.
    pub fn all_cells(&self) -> Vec<Cell> {
        let mut out = self.cells.clone();
        if let Some(g) = &self.grid {
            for &r in &g.r {
                for &n in &g.n {
                    for &density in &g.density {
                        for &alpha in &g.alpha {
                            out.push(Cell { r, n, density, alpha });
                        }
                    }
                }
            }
        }
        out
    }

    /// Seed of instance `i` in cell `cell`; every mode sees the same matrices.
    pub fn instance_seed(&self, cell: usize, i: usize) -> u64 {
        self.rng_seed_base
            .wrapping_add((cell * self.instances_per_cell) as u64)
            .wrapping_add(i as u64)
    }

    fn limits(&self) -> ExactLimits {
        ExactLimits {
            max_r_enumeration: self.max_r_enumeration,
            time_budget: self.time_budget_secs.map(Duration::from_secs_f64),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveRecord {
    pub size_s: usize,
    pub size_n: usize,
    pub secs: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactStatus {
    Solved,
    TimedOut,
    /// `r` above the enumeration limit.
    Skipped,
}

/// One line of the JSON-lines log.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceLog {
    pub cell: usize,
    pub instance: usize,
    pub seed: u64,
    pub r: usize,
    pub n: usize,
    pub density: f64,
    pub alpha: f64,
    pub mode: IntersectMode,
    pub target: usize,
    pub bound: usize,
    pub heuristic: SolveRecord,
    pub accelerated: SolveRecord,
    pub exact_status: ExactStatus,
    pub exact: Option<SolveRecord>,
}

impl InstanceLog {
    fn e1(&self) -> bool {
        self.exact.is_some_and(|x| x.size_s == self.heuristic.size_s)
    }

    fn e2(&self) -> bool {
        self.e1() && self.exact.is_some_and(|x| self.heuristic.size_n > x.size_n)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub r: usize,
    pub n: usize,
    pub density: f64,
    pub alpha: f64,
    pub mode: IntersectMode,
    pub instances: usize,
    pub bound_mean: f64,
    pub h_size_s: f64,
    pub h_size_n: f64,
    pub h_secs: f64,
    pub ah_size_s: f64,
    pub ah_size_n: f64,
    pub ah_secs: f64,
    /// Means over the instances the oracle finished; `None` when it never did.
    pub x_size_s: Option<f64>,
    pub x_size_n: Option<f64>,
    pub x_secs: Option<f64>,
    pub opt: usize,
    pub e1: usize,
    pub e2: usize,
    /// Instances where plain and accelerated disagree on the objectives.
    pub h_ah_mismatches: usize,
    /// Instances where the heuristic beats the oracle on `|S|` (never expected).
    pub oracle_violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub logs: Vec<InstanceLog>,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let t = Instant::now();
    let out = f()?;
    Ok((out, t.elapsed().as_secs_f64()))
}

fn record(p: ObjectivePoint, secs: f64) -> SolveRecord {
    SolveRecord { size_s: p.size_s, size_n: p.size_n, secs }
}

fn run_instance(cfg: &BenchConfig, cell_ix: usize, cell: &Cell, mode: IntersectMode, i: usize) -> Result<InstanceLog> {
    let seed = cfg.instance_seed(cell_ix, i);
    let a = generate(&GenSpec { r: cell.r, n: cell.n, density: cell.density, rng_seed: seed })?;
    let target = choose_target(&a, mode);
    let bound = compute_l1(&a, mode, target, cell.alpha)?;
    let hc = HeuristicConfig::new(mode, target, bound);
    let (h, h_secs) = timed(|| algorithm1(&a, &hc))?;
    let (ah, ah_secs) = timed(|| algorithm1_accelerated(&a, &hc))?;

    let limits = cfg.limits();
    let (exact_status, exact) = if cell.r > limits.max_r_enumeration {
        (ExactStatus::Skipped, None)
    } else {
        match timed(|| exact_g1(&a, mode, bound, &limits)) {
            Ok((Some(b), secs)) => (ExactStatus::Solved, Some(record(b.objectives(), secs))),
            Ok((None, _)) => unreachable!("the target row meets its own limit"),
            Err(Error::TimeBudgetExceeded) => (ExactStatus::TimedOut, None),
            Err(e) => return Err(e),
        }
    };
    Ok(InstanceLog {
        cell: cell_ix,
        instance: i,
        seed,
        r: cell.r,
        n: cell.n,
        density: cell.density,
        alpha: cell.alpha,
        mode,
        target,
        bound,
        heuristic: record(h.objectives(), h_secs),
        accelerated: record(ah.objectives(), ah_secs),
        exact_status,
        exact,
    })
}

fn mean(xs: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, k) = xs.fold((0.0, 0usize), |(s, k), x| (s + x, k + 1));
    (k > 0).then(|| sum / k as f64)
}

fn aggregate(cell: &Cell, mode: IntersectMode, logs: &[InstanceLog]) -> BenchRow {
    let all = |f: fn(&InstanceLog) -> f64| mean(logs.iter().map(f)).unwrap_or(0.0);
    let solved: Vec<SolveRecord> = logs.iter().filter_map(|l| l.exact).collect();
    let over_solved = |f: fn(&SolveRecord) -> f64| mean(solved.iter().map(f));
    BenchRow {
        r: cell.r,
        n: cell.n,
        density: cell.density,
        alpha: cell.alpha,
        mode,
        instances: logs.len(),
        bound_mean: all(|l| l.bound as f64),
        h_size_s: all(|l| l.heuristic.size_s as f64),
        h_size_n: all(|l| l.heuristic.size_n as f64),
        h_secs: all(|l| l.heuristic.secs),
        ah_size_s: all(|l| l.accelerated.size_s as f64),
        ah_size_n: all(|l| l.accelerated.size_n as f64),
        ah_secs: all(|l| l.accelerated.secs),
        x_size_s: over_solved(|x| x.size_s as f64),
        x_size_n: over_solved(|x| x.size_n as f64),
        x_secs: over_solved(|x| x.secs),
        opt: solved.len(),
        e1: logs.iter().filter(|l| l.e1()).count(),
        e2: logs.iter().filter(|l| l.e2()).count(),
        h_ah_mismatches: logs
            .iter()
            .filter(|l| (l.heuristic.size_s, l.heuristic.size_n) != (l.accelerated.size_s, l.accelerated.size_n))
            .count(),
        oracle_violations: logs.iter().filter(|l| l.exact.is_some_and(|x| l.heuristic.size_s > x.size_s)).count(),
    }
}

/// Runs every cell in every mode; instances within a cell run in parallel.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    cfg.validate()?;
    let work = || -> Result<BenchReport> {
        let mut rows = Vec::new();
        let mut logs = Vec::new();
        for (cell_ix, cell) in cfg.all_cells().iter().enumerate() {
            for &mode in &cfg.modes {
                let cell_logs = (0..cfg.instances_per_cell)
                    .into_par_iter()
                    .map(|i| run_instance(cfg, cell_ix, cell, mode, i))
                    .collect::<Result<Vec<_>>>()?;
                rows.push(aggregate(cell, mode, &cell_logs));
                logs.extend(cell_logs);
            }
        }
        Ok(BenchReport { rows, logs })
    };
    match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?
            .install(work),
        None => work(),
    }
}

pub const REPORT_HEADER: &str = "r,n,density,alpha,mode,instances,L_mean,H_size_S,H_size_N,H_cpu,AH_size_S,AH_size_N,AH_cpu,X_size_S,X_size_N,X_cpu,#OptOracle,#E1,#E2";

fn opt_f(x: Option<f64>) -> String {
    x.map_or(String::new(), |v| format!("{v:.3}"))
}

/// CSV with one line per row and a trailing `average` line weighted by instance count.
pub fn write_report<W: Write>(rows: &[BenchRow], mut out: W) -> Result<()> {
    writeln!(out, "{REPORT_HEADER}")?;
    for b in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{:.3},{:.3},{:.3},{:.6},{:.3},{:.3},{:.6},{},{},{},{},{},{}",
            b.r,
            b.n,
            b.density,
            b.alpha,
            b.mode,
            b.instances,
            b.bound_mean,
            b.h_size_s,
            b.h_size_n,
            b.h_secs,
            b.ah_size_s,
            b.ah_size_n,
            b.ah_secs,
            opt_f(b.x_size_s),
            opt_f(b.x_size_n),
            b.x_secs.map_or(String::new(), |v| format!("{v:.6}")),
            b.opt,
            b.e1,
            b.e2
        )?;
    }
    if rows.is_empty() {
        return Ok(());
    }
    let total: usize = rows.iter().map(|b| b.instances).sum();
    let w = |f: fn(&BenchRow) -> f64| rows.iter().map(|b| f(b) * b.instances as f64).sum::<f64>() / total as f64;
    // exact means are weighted by the number of finished solves
    let solved: usize = rows.iter().map(|b| b.opt).sum();
    let wx = |f: fn(&BenchRow) -> Option<f64>| {
        (solved > 0).then(|| rows.iter().filter_map(|b| f(b).map(|v| v * b.opt as f64)).sum::<f64>() / solved as f64)
    };
    writeln!(
        out,
        "average,,,,,{},{:.3},{:.3},{:.3},{:.6},{:.3},{:.3},{:.6},{},{},{},{:.2},{:.2},{:.2}",
        total,
        w(|b| b.bound_mean),
        w(|b| b.h_size_s),
        w(|b| b.h_size_n),
        w(|b| b.h_secs),
        w(|b| b.ah_size_s),
        w(|b| b.ah_size_n),
        w(|b| b.ah_secs),
        opt_f(wx(|b| b.x_size_s)),
        opt_f(wx(|b| b.x_size_n)),
        wx(|b| b.x_secs).map_or(String::new(), |v| format!("{v:.6}")),
        rows.iter().map(|b| b.opt as f64).sum::<f64>() / rows.len() as f64,
        rows.iter().map(|b| b.e1 as f64).sum::<f64>() / rows.len() as f64,
        rows.iter().map(|b| b.e2 as f64).sum::<f64>() / rows.len() as f64,
    )?;
    Ok(())
}

pub fn write_logs<W: Write>(logs: &[InstanceLog], mut out: W) -> Result<()> {
    for l in logs {
        serde_json::to_writer(&mut out, l).map_err(|e| Error::Io(e.into()))?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
