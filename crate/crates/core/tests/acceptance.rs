//! Acceptance criteria 1-11, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use biclust::bench::{run_bench, write_report, BenchConfig, Cell};
use biclust::construct::{
    algorithm1, algorithm1_accelerated, algorithm1_logged, frequency_counts, higher_order_frequency, master, HeuristicConfig,
    InnerProblem, MasterConfig,
};
use biclust::exact::{exact_g1, exact_pareto, ExactLimits};
use biclust::instances::{algorithm_12x12, choose_target, compute_l1, construction_4x11, generate, GenSpec};
use biclust::mip::{build_ip1, build_ip2, verify_assignment, ExportOptions};
use biclust::pareto::{epsilon_constraint, filter_dominated, validate_trace, EpsilonConfig, Kept, ParetoFront, TraceRow};
use biclust::{
    analog_vector, count_v, ideal_nadir, intersect_count, intersect_sets, Bicluster, BinaryMatrix, IntersectMode, ObjectivePoint,
    TernaryVector,
};
use IntersectMode::{One, Zero, ZeroOne};

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let a = construction_4x11();
    let t = Instant::now();
    let z = analog_vector(&[1, 2, 3, 4], &a).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let want = TernaryVector::parse("#10##1####0").unwrap();
    ensure(z == want, || format!("z = {z}"))?;
    for (mode, cols) in [(Zero, vec![3, 11]), (One, vec![2, 6]), (ZeroOne, vec![2, 3, 6, 11])] {
        ensure(z.columns(mode) == cols, || format!("N_{mode} = {:?}", z.columns(mode)))?;
        let direct = intersect_sets(&[1, 2, 3, 4], &a, mode).unwrap();
        ensure(direct == cols, || format!("intersect_sets N_{mode} = {direct:?}"))?;
    }
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!("z = ({z}) in {elapsed:?}"))
}

const GOLDEN_RUNS: [(IntersectMode, usize, usize, &[usize], usize); 4] = [
    (Zero, 1, 5, &[1, 2, 3], 5),
    (One, 4, 4, &[3, 4, 5], 5),
    (ZeroOne, 6, 9, &[6, 7, 8], 9),
    (One, 9, 4, &[9, 10, 11, 12], 5),
];

fn criterion_2() -> Outcome {
    let a = algorithm_12x12();
    for (mode, h, bound, rows, size_n) in GOLDEN_RUNS {
        let cfg = HeuristicConfig::new(mode, h, bound);
        for (name, b) in [("H", algorithm1(&a, &cfg)), ("AH", algorithm1_accelerated(&a, &cfg))] {
            let b = b.map_err(|e| e.to_string())?;
            ensure(b.rows() == rows && b.objectives().size_n == size_n, || {
                format!("{name} v={mode} h={h} L={bound}: {:?} with |N|={}", b.rows(), b.objectives().size_n)
            })?;
        }
    }
    Ok("4 runs, plain and accelerated".into())
}

/// Extended tables: the displayed vectors, per step `(0, 1, 01)` counts, and
/// the candidate vectors of the stopped iteration with their evaluation.
struct Extended {
    mode: IntersectMode,
    seed: usize,
    bound: usize,
    steps: [(&'static [usize], &'static str, [usize; 3]); 3],
    candidates: [(usize, &'static str, usize); 9],
}

const EXTENDED: [Extended; 2] = [
    Extended {
        mode: Zero,
        seed: 1,
        bound: 5,
        steps: [
            (&[1], "110100001000", [8, 4, 12]),
            (&[1, 2], "#####000#000", [6, 2, 8]),
            (&[1, 2, 3], "#####0#0#000", [5, 1, 6]),
        ],
        candidates: [
            (4, "#####1#1#000", 3),
            (5, "#####1#0#010", 3),
            (6, "#####1#1#101", 1),
            (7, "#####1#1#011", 1),
            (8, "#####1#1#111", 0),
            (9, "#####0#1#111", 1),
            (10, "#####0#1#111", 1),
            (11, "#####0#1#101", 2),
            (12, "#####0#1#101", 2),
        ],
    },
    Extended {
        mode: One,
        seed: 4,
        bound: 4,
        steps: [
            (&[4], "11111111####", [4, 8, 12]),
            (&[4, 5], "111#111#####", [3, 6, 9]),
            (&[4, 5, 3], "111#1#1#####", [2, 5, 7]),
        ],
        candidates: [
            (1, "110#0#0#####", 2),
            (2, "001#1#0#####", 2),
            (6, "010#0#0#####", 1),
            (7, "010#0#0#####", 1),
            (8, "010#0#0#####", 1),
            (9, "000#1#1#####", 2),
            (10, "010#0#1#####", 2),
            (11, "100#0#1#####", 2),
            (12, "000#1#1#####", 2),
        ],
    },
];

fn criterion_3() -> Outcome {
    let a = algorithm_12x12();
    for ext in &EXTENDED {
        let v = ext.mode;
        let (_, log) = algorithm1_logged(&a, &HeuristicConfig::new(v, ext.seed, ext.bound)).map_err(|e| e.to_string())?;
        ensure(log.steps.len() == 3, || format!("v={v}: {} steps", log.steps.len()))?;
        for (step, (rows, shown, counts)) in log.steps.iter().zip(ext.steps) {
            ensure(step.rows == rows, || format!("v={v}: step rows {:?}, want {rows:?}", step.rows))?;
            let shown = TernaryVector::parse(shown).unwrap();
            ensure(step.z.masked(v) == shown.masked(v), || format!("v={v} S={rows:?}: z = {}", step.z))?;
            let got = [count_v(&step.z, Zero), count_v(&step.z, One), count_v(&step.z, ZeroOne)];
            ensure(got == counts, || format!("v={v} S={rows:?}: counts {got:?}, want {counts:?}"))?;
        }
        let last = log.steps.last().unwrap();
        ensure(last.chosen.is_none(), || format!("v={v}: growth continued with {:?}", last.chosen))?;
        let zv = last.z.masked(v);
        let got: Vec<(usize, usize)> = last.evaluations.iter().map(|e| (e.row, e.count)).collect();
        let want: Vec<(usize, usize)> = ext.candidates.iter().map(|&(i, _, c)| (i, c)).collect();
        ensure(got == want, || format!("v={v}: evaluations {got:?}"))?;
        for &(i, shown, count) in &ext.candidates {
            let restricted: String = zv
                .comps()
                .iter()
                .zip(a.row(i))
                .map(|(z, x)| if z.counts_under(v) { char::from(b'0' + x) } else { '#' })
                .collect();
            ensure(restricted == shown, || format!("v={v} x({i}) on N_v(S): {restricted}, table {shown}"))?;
            let symbol = if v == Zero { '0' } else { '1' };
            ensure(shown.chars().filter(|&c| c == symbol).count() == count, || format!("v={v} x({i}): table count"))?;
        }
    }
    Ok("z vectors, counts and stopped-iteration evaluations match for v=0 and v=1".into())
}

type TableRow = (usize, usize, usize, &'static [usize], &'static [usize]);

const ALL: &[usize] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];

const TABLE_V0: [TableRow; 7] = [
    (0, 12, 0, ALL, &[]),
    (1, 8, 1, &[1, 6, 7, 8, 9, 10, 11, 12], &[3]),
    (2, 6, 2, &[1, 6, 7, 8, 10, 11], &[3, 5]),
    (3, 4, 3, &[1, 2, 3, 4], &[10, 11, 12]),
    (4, 3, 5, &[1, 2, 3], &[6, 8, 10, 11, 12]),
    (6, 2, 6, &[1, 2], &[6, 7, 8, 10, 11, 12]),
    (7, 1, 8, &[1], &[3, 5, 6, 7, 8, 10, 11, 12]),
];

const TABLE_V1: [TableRow; 8] = [
    (0, 12, 0, ALL, &[]),
    (1, 8, 1, &[1, 3, 4, 5, 6, 7, 8, 10], &[2]),
    (2, 7, 2, &[6, 7, 8, 9, 10, 11, 12], &[8, 12]),
    (3, 6, 3, &[6, 8, 9, 10, 11, 12], &[8, 10, 12]),
    (4, 4, 5, &[9, 10, 11, 12], &[7, 8, 9, 10, 12]),
    (6, 2, 6, &[9, 12], &[5, 7, 8, 9, 10, 12]),
    (7, 1, 7, &[9], &[5, 7, 8, 9, 10, 11, 12]),
    (8, 1, 8, &[4], &[1, 2, 3, 4, 5, 6, 7, 8]),
];

const TABLE_V01: [TableRow; 11] = [
    (0, 12, 0, ALL, &[]),
    (1, 8, 1, &[1, 3, 4, 5, 6, 7, 8, 10], &[2]),
    (2, 7, 3, &[6, 7, 8, 9, 10, 11, 12], &[3, 8, 12]),
    (4, 6, 4, &[6, 8, 9, 10, 11, 12], &[3, 8, 10, 12]),
    (5, 5, 5, &[8, 9, 10, 11, 12], &[3, 4, 8, 10, 12]),
    (6, 4, 6, &[6, 7, 8, 10], &[1, 2, 3, 5, 8, 12]),
    (7, 4, 8, &[9, 10, 11, 12], &[3, 4, 6, 7, 8, 9, 10, 12]),
    (9, 3, 9, &[6, 7, 8], &[1, 2, 3, 5, 6, 7, 8, 9, 12]),
    (10, 2, 10, &[6, 8], &[1, 2, 3, 5, 6, 7, 8, 9, 10, 12]),
    (11, 2, 11, &[9, 12], &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12]),
    (12, 1, 12, &[11], ALL),
];

fn table_mismatches(front: &ParetoFront, table: &[TableRow]) -> Vec<String> {
    let mut out = Vec::new();
    if front.trace.len() != table.len() {
        out.push(format!("{} rows, table has {}", front.trace.len(), table.len()));
    }
    for (t, &(bound, s, n, rows, cols)) in front.trace.iter().zip(table) {
        let b = &t.bicluster;
        if (t.bound, t.point.size_s, t.point.size_n, b.rows(), b.cols()) != (bound, s, n, rows, cols) {
            out.push(format!(
                "iter {}: L={} ({},{}) S={:?}, table L={bound} ({s},{n}) S={rows:?}",
                t.iter, t.bound, t.point.size_s, t.point.size_n, b.rows()
            ));
        }
    }
    out
}

fn table_trace(a: &BinaryMatrix, mode: IntersectMode, table: &[TableRow]) -> Vec<TraceRow> {
    table
        .iter()
        .enumerate()
        .map(|(k, &(bound, s, n, rows, _))| TraceRow {
            iter: k + 1,
            bound,
            point: ObjectivePoint::new(s, n),
            bicluster: Bicluster::from_rows(a, rows, mode).unwrap(),
        })
        .collect()
}

fn criterion_4() -> Outcome {
    let a = algorithm_12x12();
    let t = Instant::now();
    let mut problems = Vec::new();
    for (mode, table) in [(Zero, &TABLE_V0[..]), (One, &TABLE_V1[..]), (ZeroOne, &TABLE_V01[..])] {
        let front = epsilon_constraint(&a, &EpsilonConfig::exact(mode, Kept::Rows)).map_err(|e| e.to_string())?;
        let diffs = table_mismatches(&front, table);
        if !diffs.is_empty() {
            let issues = validate_trace(&a, mode, 1, &table_trace(&a, mode, table), &ExactLimits::default())
                .map_err(|e| e.to_string())?;
            problems.push(format!(
                "v={mode}: {} [table rows checked as optimal sweep rows: {} issue(s)]",
                diffs.join("; "),
                issues.len()
            ));
        }
    }
    let elapsed = t.elapsed();
    ensure(problems.is_empty(), || problems.join(" | "))?;
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("7/8/11 rows reproduced in {elapsed:?}"))
}

fn criterion_5() -> Outcome {
    let a = algorithm_12x12();
    for (mode, ideal, nadir) in [(Zero, (12, 8), (1, 0)), (One, (12, 8), (1, 0)), (ZeroOne, (12, 12), (1, 0))] {
        let p = ideal_nadir(&a, mode);
        ensure(p.ideal == ideal.into() && p.nadir == nadir.into(), || format!("v={mode}: {} / {}", p.ideal, p.nadir))?;
        let front = exact_pareto(&a, mode, &ExactLimits::default()).map_err(|e| e.to_string())?;
        let pts = front.objective_points();
        // endpoints (r, |N_v(R)|) and (1, ideal_N)
        ensure(pts.first() == Some(&ObjectivePoint::new(12, 0)), || format!("v={mode}: first {:?}", pts.first()))?;
        ensure(pts.last() == Some(&ObjectivePoint::new(1, ideal.1)), || format!("v={mode}: last {:?}", pts.last()))?;
    }
    Ok("(12,8)/(1,0), (12,8)/(1,0), (12,12)/(1,0)".into())
}

fn criterion_6() -> Outcome {
    let a = algorithm_12x12();
    let freq = frequency_counts(&a, One).map_err(|e| e.to_string())?;
    ensure(freq == [5, 8, 4, 5, 6, 5, 7, 8, 7, 6, 5, 7], || format!("frequency {freq:?}"))?;
    let sets = [Bicluster::from_rows(&a, &[4, 5, 3], One).unwrap(), Bicluster::from_rows(&a, &[9, 10, 11, 12], One).unwrap()];
    let hof = higher_order_frequency(&sets, One, a.n()).map_err(|e| e.to_string())?;
    ensure(hof[6] == 2, || format!("higher-order {hof:?}"))?;
    let report = master(&a, &MasterConfig::new(One, 2, 2, InnerProblem::Rows { bound: 4 })).map_err(|e| e.to_string())?;
    ensure(report.sets == sets.iter().map(|s| Bicluster::from_rows(&a, s.rows(), One).unwrap()).collect::<Vec<_>>(), || {
        format!("master sets {:?}", report.sets.iter().map(|s| s.rows().to_vec()).collect::<Vec<_>>())
    })?;
    ensure(report.higher_order_freq == hof, || "master frequency differs".into())?;
    Ok(format!("higher-order frequency {hof:?}"))
}

fn naive_front(a: &BinaryMatrix, mode: IntersectMode) -> Vec<ObjectivePoint> {
    let r = a.r();
    let pts: Vec<ObjectivePoint> = (1u32..1 << r)
        .map(|mask| {
            let rows: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            ObjectivePoint::new(rows.len(), intersect_count(&rows, a, mode).unwrap())
        })
        .collect();
    let mut front: Vec<ObjectivePoint> =
        pts.iter().copied().filter(|p| !pts.iter().any(|q| biclust::dominates(*q, *p))).collect();
    front.sort_unstable_by(|p, q| q.cmp(p));
    front.dedup();
    front
}

fn random_instance(i: usize, max_r: usize, max_n: usize, salt: u64) -> (BinaryMatrix, IntersectMode) {
    let r = 1 + (i * 7 + i / 3) % max_r;
    let n = 1 + (i * 11 + i / 5) % max_n;
    let density = [0.2, 0.35, 0.5, 0.65, 0.8][i % 5];
    let a = generate(&GenSpec::new(r, n, salt + i as u64).with_density(density)).unwrap();
    (a, IntersectMode::ALL[i % 3])
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    let mut mismatches = Vec::new();
    for i in 0..500 {
        let (a, mode) = random_instance(i, 10, 12, 7_000);
        let exact = exact_pareto(&a, mode, &ExactLimits::default()).map_err(|e| e.to_string())?.objective_points();
        if exact != naive_front(&a, mode) {
            mismatches.push(format!("#{i} enumeration"));
        }
        for kept in [Kept::Rows, Kept::Columns] {
            let sweep = epsilon_constraint(&a, &EpsilonConfig::exact(mode, kept)).map_err(|e| e.to_string())?;
            if sweep.objective_points() != exact || filter_dominated(&sweep.objective_points()) != exact {
                mismatches.push(format!("#{i} sweep p={}", kept.p()));
            }
        }
    }
    let elapsed = t.elapsed();
    ensure(mismatches.is_empty(), || format!("{} mismatches: {:?}", mismatches.len(), &mismatches[..mismatches.len().min(5)]))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("500 instances, 0 mismatches in {elapsed:.2?}"))
}

fn criterion_8() -> Outcome {
    let mut violations = Vec::new();
    let alphas = [0.2, 0.4, 0.6, 0.8];
    for i in 0..1000 {
        let (a, mode) = random_instance(i, 20, 50, 80_000);
        let alpha = alphas[(i / 3) % 4];
        let target = choose_target(&a, mode);
        let bound = compute_l1(&a, mode, target, alpha).map_err(|e| e.to_string())?;
        let cfg = HeuristicConfig::new(mode, target, bound);
        let h = algorithm1(&a, &cfg).map_err(|e| e.to_string())?;
        let ah = algorithm1_accelerated(&a, &cfg).map_err(|e| e.to_string())?;
        let feasible = h.contains_row(target) && h.is_consistent(&a) && h.objectives().size_n >= bound;
        let opt = exact_g1(&a, mode, bound, &ExactLimits::default()).map_err(|e| e.to_string())?;
        let within = opt.is_some_and(|o| h.objectives().size_s <= o.objectives().size_s);
        if !feasible || !within || h != ah {
            violations.push(format!("#{i} v={mode} L={bound}"));
        }
    }
    ensure(violations.is_empty(), || format!("{} violations: {:?}", violations.len(), &violations[..violations.len().min(5)]))?;
    Ok("1000 instances, 0 violations".into())
}

fn criterion_9() -> Outcome {
    let t = Instant::now();
    let opts: Vec<ExportOptions> = [None, Some(1), Some(2), Some(3)]
        .into_iter()
        .flat_map(|seed_row| {
            [(false, false), (true, false), (false, true), (true, true)]
                .map(|(strengthen, preprocess)| ExportOptions { strengthen, preprocess, seed_row })
        })
        .collect();
    let subsets: Vec<Vec<usize>> =
        (1u32..8).map(|m| (0..3).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect()).collect();
    let mut checks = 0usize;
    let mut mismatches = Vec::new();
    for bits in 0u32..1 << 9 {
        let rows: Vec<Vec<u8>> = (0..3).map(|i| (0..3).map(|j| (bits >> (3 * i + j) & 1) as u8).collect()).collect();
        let a = BinaryMatrix::from_rows(&rows).unwrap();
        for mode in IntersectMode::ALL {
            for o in &opts {
                let with_seed = |s: &[usize]| {
                    let mut s = s.to_vec();
                    s.extend(o.seed_row);
                    s.sort_unstable();
                    s.dedup();
                    s
                };
                for bound in 0..=3 {
                    let m = build_ip1(&a, mode, bound, o).map_err(|e| e.to_string())?;
                    for s in &subsets {
                        let direct = intersect_count(&with_seed(s), &a, mode).unwrap() >= bound;
                        checks += 1;
                        if verify_assignment(&m, s, &a, mode).map_err(|e| e.to_string())? != direct {
                            mismatches.push(format!("ip1 {bits:09b} v={mode} L={bound} {o:?} S={s:?}"));
                        }
                    }
                }
                for bound in 1..=3 {
                    let m = build_ip2(&a, mode, bound, o).map_err(|e| e.to_string())?;
                    for s in &subsets {
                        let direct = with_seed(s).len() >= bound;
                        checks += 1;
                        if verify_assignment(&m, s, &a, mode).map_err(|e| e.to_string())? != direct {
                            mismatches.push(format!("ip2 {bits:09b} v={mode} L={bound} {o:?} S={s:?}"));
                        }
                    }
                }
            }
        }
    }
    let elapsed = t.elapsed();
    ensure(mismatches.is_empty(), || format!("{} mismatches: {:?}", mismatches.len(), &mismatches[..mismatches.len().min(3)]))?;
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("512 matrices, {checks} checks, 0 mismatches in {elapsed:.2?}"))
}

fn criterion_10() -> Outcome {
    let cells: Vec<Cell> = [(10, 20), (14, 30), (18, 40)]
        .into_iter()
        .flat_map(|(r, n)| [0.2, 0.4, 0.6, 0.8].map(|alpha| Cell { r, n, density: 0.5, alpha }))
        .collect();
    let cfg = BenchConfig {
        cells,
        grid: None,
        instances_per_cell: 8,
        modes: IntersectMode::ALL.to_vec(),
        time_budget_secs: None,
        rng_seed_base: 2_024,
        max_r_enumeration: 22,
        jobs: None,
    };
    let report = run_bench(&cfg).map_err(|e| e.to_string())?;
    for row in &report.rows {
        let tag = format!("r={} n={} a={} v={}", row.r, row.n, row.alpha, row.mode);
        ensure(row.e2 <= row.e1 && row.e1 <= cfg.instances_per_cell, || format!("{tag}: #E1={} #E2={}", row.e1, row.e2))?;
        ensure(row.opt == cfg.instances_per_cell, || format!("{tag}: #Opt={}", row.opt))?;
        ensure(row.h_ah_mismatches == 0, || format!("{tag}: H/AH differ"))?;
        ensure((row.h_size_s, row.h_size_n) == (row.ah_size_s, row.ah_size_n), || format!("{tag}: H/AH columns differ"))?;
    }
    for log in &report.logs {
        let x = log.exact.ok_or_else(|| format!("seed {}: no exact solve", log.seed))?;
        ensure(x.size_s >= log.heuristic.size_s, || format!("seed {}: exact {} < heuristic {}", log.seed, x.size_s, log.heuristic.size_s))?;
    }
    let mut csv = Vec::new();
    write_report(&report.rows, &mut csv).map_err(|e| e.to_string())?;
    let lines = String::from_utf8(csv).unwrap().lines().count();
    ensure(lines == report.rows.len() + 2, || format!("{lines} report lines"))?;
    let e1: usize = report.rows.iter().map(|r| r.e1).sum();
    let e2: usize = report.rows.iter().map(|r| r.e2).sum();
    Ok(format!("{} cells x 3 modes, #E1={e1} #E2={e2} of {}", cfg.all_cells().len(), report.logs.len()))
}

fn criterion_11() -> Outcome {
    let cfg = BenchConfig {
        cells: vec![Cell { r: 100, n: 500, density: 0.5, alpha: 0.4 }, Cell { r: 200, n: 1000, density: 0.5, alpha: 0.4 }],
        grid: None,
        instances_per_cell: 6,
        modes: vec![Zero, One, ZeroOne],
        time_budget_secs: None,
        rng_seed_base: 11,
        max_r_enumeration: 22,
        jobs: Some(1),
    };
    let report = run_bench(&cfg).map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for row in &report.rows {
        ensure(row.opt == 0, || "oracle ran on a large cell".into())?;
        ensure(row.ah_secs <= row.h_secs, || {
            format!("r={} n={} v={}: AH {:.6}s > H {:.6}s", row.r, row.n, row.mode, row.ah_secs, row.h_secs)
        })?;
        summary.push(format!("{}x{} v={}: {:.1}x", row.r, row.n, row.mode, row.h_secs / row.ah_secs.max(1e-12)));
    }
    Ok(format!("H/AH speedup {}", summary.join(", ")))
}

fn main() {
    let criteria: [Check; 11] = [
        ("construction example", criterion_1),
        ("algorithm 1 golden runs", criterion_2),
        ("growth traces", criterion_3),
        ("epsilon-constraint traces", criterion_4),
        ("ideal and nadir points", criterion_5),
        ("frequency tables", criterion_6),
        ("oracle equivalence", criterion_7),
        ("heuristic soundness", criterion_8),
        ("MIP model/set equivalence", criterion_9),
        ("bench structure", criterion_10),
        ("timing sanity", criterion_11),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
