use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn biclust(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biclust")).args(args).env_remove("BICLUST_MAX_R").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("biclust-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

const SOLVE_12: [&str; 6] = ["solve", "--instance", "algorithm_12x12", "--mode", "0", "--problem"];

#[test]
fn solve_worked_example() {
    let mut args = SOLVE_12.to_vec();
    args.extend(["g1", "--bound", "5", "--seed-row", "1", "--algo", "heuristic"]);
    let o = biclust(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3 5\n1 2 3\n6 8 10 11 12\n");
}

#[test]
fn solve_bound_zero_takes_every_row() {
    let mut args = SOLVE_12.to_vec();
    args.extend(["g1", "--bound", "0", "--algo", "exact", "--format", "csv"]);
    let o = biclust(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(1).unwrap(), "12,0,1;2;3;4;5;6;7;8;9;10;11;12,");
}

#[test]
fn heuristic_never_beats_exact() {
    for mode in ["0", "1", "01"] {
        for bound in [2, 4, 6, 8] {
            let size = |algo: &str| {
                let o = biclust(&[
                    "solve", "--instance", "algorithm_12x12", "--mode", mode, "--problem", "g1", "--bound",
                    &bound.to_string(), "--algo", algo, "--format", "json",
                ]);
                let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
                v["size_S"].as_u64().unwrap()
            };
            assert!(size("heuristic") <= size("exact"), "mode {mode}, bound {bound}");
        }
    }
}

#[test]
fn json_output_has_the_documented_fields() {
    let mut args = SOLVE_12.to_vec();
    args.extend(["g2", "--bound", "3", "--format", "json"]);
    let o = biclust(&args);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    let cols = v["cols"].as_array().unwrap();
    assert_eq!(v["size_S"].as_u64().unwrap() as usize, rows.len());
    assert_eq!(v["size_N"].as_u64().unwrap() as usize, cols.len());
    assert_eq!(v["mode"], "0");
    assert!(rows.len() >= 3);
}

#[test]
fn infeasible_bound_exits_2_naming_the_bound() {
    let mut args = SOLVE_12.to_vec();
    args.extend(["g1", "--bound", "9", "--seed-row", "1"]);
    let o = biclust(&args);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound 9"));

    let mut args = SOLVE_12.to_vec();
    args.extend(["g1", "--bound", "13", "--algo", "exact"]);
    let o = biclust(&args);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("13"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(biclust(&["solve", "--frobnicate"]).status.code(), Some(1));
    assert_eq!(biclust(&["pareto", "--instance", "algorithm_12x12", "--mode", "2"]).status.code(), Some(1));
    assert_eq!(biclust(&["pareto", "--instance", "algorithm_12x12", "--mode", "0", "--p", "3"]).status.code(), Some(1));
    assert_eq!(biclust(&[]).status.code(), Some(1));
    assert_eq!(biclust(&["--help"]).status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_biclust"))
        .args(["pareto", "--instance", "algorithm_12x12", "--mode", "0"])
        .env("BICLUST_MAX_R", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn missing_instance_exits_2() {
    let o = biclust(&["pareto", "--instance", "/nonexistent/m.bmat", "--mode", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn max_r_env_caps_enumeration() {
    let o = Command::new(env!("CARGO_BIN_EXE_biclust"))
        .args(["pareto", "--instance", "algorithm_12x12", "--mode", "0"])
        .env("BICLUST_MAX_R", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit of 10"));
}

#[test]
fn pareto_zero_one_trace_endpoints() {
    let o = biclust(&["pareto", "--instance", "algorithm_12x12", "--mode", "01", "--p", "1", "--solver", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "iter,L,size_S,size_N,rows,cols");
    let rows: Vec<&str> = lines.collect();
    assert!(!rows.is_empty());
    assert_eq!(rows[0], "1,0,12,0,1;2;3;4;5;6;7;8;9;10;11;12,");
    assert!(rows.last().unwrap().starts_with(&format!("{},12,1,12,", rows.len())));
}

#[test]
fn single_row_front_collapses() {
    let dir = scratch("single");
    let path = dir.join("one.bmat");
    fs::write(&path, "1 5\n0 1 1 0 1\n").unwrap();
    let o = biclust(&["pareto", "--instance", path.to_str().unwrap(), "--mode", "0", "--front-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "iter,L,size_S,size_N,rows,cols\n1,,1,2,1,1;4\n");
}

#[test]
fn heuristic_front_is_dominated_by_exact() {
    let front = |solver: &str| -> Vec<(usize, usize)> {
        let o = biclust(&["pareto", "--instance", "algorithm_12x12", "--mode", "1", "--solver", solver, "--front-only"]);
        stdout(&o)
            .lines()
            .skip(1)
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                (f[2].parse().unwrap(), f[3].parse().unwrap())
            })
            .collect()
    };
    let exact = front("exact");
    for (s, n) in front("heuristic") {
        assert!(exact.iter().any(|&(es, en)| es >= s && en >= n), "({s}, {n}) not covered");
    }
}

#[test]
fn sweep_and_enumeration_agree() {
    let pts = |extra: &[&str]| -> Vec<String> {
        let mut args = vec!["pareto", "--instance", "algorithm_12x12", "--mode", "0", "--front-only"];
        args.extend(extra);
        stdout(&biclust(&args)).lines().map(|l| l.split(',').skip(2).take(2).collect::<Vec<_>>().join(",")).collect()
    };
    assert_eq!(pts(&[]), pts(&["--enumerate"]));
    assert_eq!(pts(&[]), pts(&["--p", "2"]));
}

#[test]
fn pareto_json_and_out_file() {
    let dir = scratch("pareto");
    let out = dir.join("front.json");
    let o = biclust(&[
        "pareto", "--instance", "algorithm_12x12", "--mode", "0", "--format", "json", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["termination"]["status"], "completed");
    assert!(!v["points"].as_array().unwrap().is_empty());
    assert!(!v["trace"].as_array().unwrap().is_empty());
}

#[test]
fn generate_zero_density() {
    let o = biclust(&["generate", "--r", "4", "--n", "4", "--density", "0", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4 4\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
}

#[test]
fn generate_is_deterministic_and_readable() {
    let dir = scratch("gen");
    let path = dir.join("g.bmat");
    let args = ["generate", "--r", "6", "--n", "9", "--seed", "42", "--out", path.to_str().unwrap()];
    assert_eq!(biclust(&args).status.code(), Some(0));
    let first = fs::read_to_string(&path).unwrap();
    assert_eq!(biclust(&args).status.code(), Some(0));
    assert_eq!(first, fs::read_to_string(&path).unwrap());
    let o = biclust(&["solve", "--instance", path.to_str().unwrap(), "--mode", "1", "--problem", "g2", "--bound", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(biclust(&["generate", "--r", "2", "--n", "2", "--density", "1.5"]).status.code(), Some(1));
}

#[test]
fn export_matches_golden_file() {
    let o = biclust(&["export-mip", "--instance", "algorithm_12x12", "--mode", "0", "--problem", "g1", "--bound", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let golden = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/data/ip1_v0_L5.lp")).unwrap();
    assert_eq!(stdout(&o), golden);
}

#[test]
fn export_variants() {
    let dir = scratch("mip");
    let bi = dir.join("bi.lp");
    let o = biclust(&[
        "export-mip", "--instance", "algorithm_12x12", "--mode", "01", "--problem", "bi", "--strengthen", "--out",
        bi.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    for f in ["bi_obj1.lp", "bi_obj2.lp"] {
        let text = fs::read_to_string(dir.join(f)).unwrap();
        assert!(biclust::mip::parse_lp(&text).is_ok());
    }
    let seeded = dir.join("seeded.lp");
    let o = biclust(&[
        "export-mip", "--instance", "algorithm_12x12", "--mode", "1", "--problem", "g2", "--bound", "3", "--seed-row",
        "4", "--preprocess", "--out", seeded.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let model = biclust::mip::parse_lp(&fs::read_to_string(&seeded).unwrap()).unwrap();
    assert_eq!(model.meta.seed_row, Some(4));
    assert!(model.meta.preprocess);

    assert_eq!(
        biclust(&["export-mip", "--instance", "algorithm_12x12", "--mode", "0", "--problem", "g1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        biclust(&["export-mip", "--instance", "algorithm_12x12", "--mode", "0", "--problem", "g2", "--bound", "13"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bench_writes_report_and_logs() {
    let dir = scratch("bench");
    let cfg = dir.join("small.toml");
    fs::write(
        &cfg,
        "instances_per_cell = 3\nmodes = [\"0\"]\nrng_seed_base = 5\n\n[[cells]]\nr = 8\nn = 12\nalpha = 0.6\n\n[[cells]]\nr = 10\nn = 10\nalpha = 0.4\n",
    )
    .unwrap();
    let out = dir.join("out");
    let o = biclust(&["bench", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report = fs::read_to_string(out.join("report.csv")).unwrap();
    // header, one line per cell, average
    assert_eq!(report.lines().count(), 1 + 2 + 1);
    assert!(report.lines().last().unwrap().starts_with("average"));
    let logs = fs::read_to_string(out.join("instances.jsonl")).unwrap();
    assert_eq!(logs.lines().count(), 6);
    for l in logs.lines() {
        serde_json::from_str::<serde_json::Value>(l).unwrap();
    }

    fs::write(&cfg, "instances_per_cell = 0\nmodes = [\"0\"]\n").unwrap();
    let o = biclust(&["bench", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
