//! `biclust` command-line front-end.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use biclust::bench::{run_bench, write_logs, write_report, BenchConfig};
use biclust::construct::{algorithm1, algorithm1_accelerated, algorithm2, algorithm2_accelerated, HeuristicConfig};
use biclust::exact::{exact_g1, exact_g2, exact_pareto, ExactLimits};
use biclust::instances::{choose_target, generate, named_instance, read_instance, write_instance, GenSpec};
use biclust::mip::{build_bi_objective, build_ip1, build_ip2, write_model, ExportOptions};
use biclust::pareto::{epsilon_constraint, write_front_csv, write_trace_csv, EpsilonConfig, Kept, Seeding, Solver};
use biclust::{Bicluster, BinaryMatrix, IntersectMode};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

const MAX_R_ENV: &str = "BICLUST_MAX_R";

#[derive(Parser)]
#[command(name = "biclust", version, about = "Bi-objective biclustering of binary matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one seeded rows (g1) or columns (g2) problem.
    Solve(SolveArgs),
    /// Sweep the Pareto front with the epsilon-constraint method.
    Pareto(ParetoArgs),
    /// Write a random instance.
    Generate(GenerateArgs),
    /// Export an integer-programming model in LP format.
    ExportMip(ExportArgs),
    /// Run a benchmark grid from a TOML config.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance file, or `algorithm_12x12` / `construction_4x11`.
    #[arg(long)]
    instance: String,
    #[arg(long, value_parser = parse_mode)]
    mode: IntersectMode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    G1,
    G2,
}

#[derive(Clone, Copy, ValueEnum)]
enum MipProblem {
    G1,
    G2,
    Bi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Heuristic,
    Accelerated,
    Exact,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InstanceArgs,
    #[arg(long, value_enum)]
    problem: Problem,
    #[arg(long)]
    bound: usize,
    /// Seed row for the heuristics; defaults to the target row.
    #[arg(long)]
    seed_row: Option<usize>,
    #[arg(long, value_enum, default_value = "accelerated")]
    algo: Algo,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Exact,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedingArg {
    Target,
    EveryRow,
}

#[derive(Args)]
struct ParetoArgs {
    #[command(flatten)]
    input: InstanceArgs,
    /// 1 keeps |S| and bounds |N_v(S)|, 2 the reverse.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), default_value_t = 1)]
    p: u8,
    #[arg(long, value_enum, default_value = "exact")]
    solver: SolverArg,
    #[arg(long, default_value_t = 1)]
    epsilon: usize,
    #[arg(long, value_enum, default_value = "target")]
    seeding: SeedingArg,
    /// Enumerate the front directly instead of sweeping.
    #[arg(long, conflicts_with_all = ["solver", "p", "epsilon", "seeding"])]
    enumerate: bool,
    /// Print only the nondominated points.
    #[arg(long)]
    front_only: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    input: InstanceArgs,
    #[arg(long, value_enum)]
    problem: MipProblem,
    #[arg(long, required_if_eq_any = [("problem", "g1"), ("problem", "g2")])]
    bound: Option<usize>,
    #[arg(long)]
    seed_row: Option<usize>,
    #[arg(long)]
    strengthen: bool,
    #[arg(long)]
    preprocess: bool,
    /// Output file; `bi` writes `<stem>_obj1.lp` and `<stem>_obj2.lp` next to it.
    #[arg(long, required_if_eq("problem", "bi"))]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    config: PathBuf,
    /// Directory receiving `report.csv` and `instances.jsonl`.
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    jobs: Option<usize>,
}

enum Failure {
    Usage(String),
    Solve(String),
}

impl From<biclust::Error> for Failure {
    fn from(e: biclust::Error) -> Self {
        Failure::Solve(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Solve(e.to_string())
    }
}

type CliResult<T = ()> = std::result::Result<T, Failure>;

fn parse_mode(s: &str) -> Result<IntersectMode, String> {
    s.parse().map_err(|e: biclust::Error| e.to_string())
}

fn load(path: &str) -> CliResult<BinaryMatrix> {
    if let Some(m) = named_instance(path) {
        return Ok(m);
    }
    let file = File::open(path).map_err(|e| Failure::Solve(format!("{path}: {e}")))?;
    read_instance(file).map_err(|e| Failure::Solve(format!("{path}: {e}")))
}

fn env_max_r() -> CliResult<Option<usize>> {
    match std::env::var(MAX_R_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{MAX_R_ENV} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn limits() -> CliResult<ExactLimits> {
    let base = ExactLimits::default();
    Ok(match env_max_r()? {
        Some(r) => base.with_max_r(r),
        None => base,
    })
}

fn output(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Failure::Solve(format!("{}: {e}", p.display())))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn joined(ix: &[usize], sep: &str) -> String {
    ix.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

fn solve(args: SolveArgs) -> CliResult {
    let a = load(&args.input.instance)?;
    let mode = args.input.mode;
    let seed = match args.seed_row {
        Some(h) => h,
        None => choose_target(&a, mode),
    };
    let cfg = HeuristicConfig::new(mode, seed, args.bound);
    let b: Bicluster = match (args.problem, args.algo) {
        (Problem::G1, Algo::Heuristic) => algorithm1(&a, &cfg)?,
        (Problem::G1, Algo::Accelerated) => algorithm1_accelerated(&a, &cfg)?,
        (Problem::G1, Algo::Exact) => exact_g1(&a, mode, args.bound, &limits()?)?.ok_or_else(|| {
            Failure::Solve(format!("infeasible: no row set has |N_v(S)| >= {} (bound)", args.bound))
        })?,
        (Problem::G2, Algo::Heuristic) => algorithm2(&a, &cfg)?,
        (Problem::G2, Algo::Accelerated) => algorithm2_accelerated(&a, &cfg)?,
        (Problem::G2, Algo::Exact) => exact_g2(&a, mode, args.bound, &limits()?)?,
    };
    let p = b.objectives();
    let mut out = output(None)?;
    match args.format {
        Format::Text => {
            writeln!(out, "{} {}", p.size_s, p.size_n)?;
            writeln!(out, "{}", joined(b.rows(), " "))?;
            writeln!(out, "{}", joined(b.cols(), " "))?;
        }
        Format::Csv => {
            writeln!(out, "size_S,size_N,rows,cols")?;
            writeln!(out, "{},{},{},{}", p.size_s, p.size_n, joined(b.rows(), ";"), joined(b.cols(), ";"))?;
        }
        Format::Json => {
            let v = json!({
                "mode": mode.to_string(),
                "size_S": p.size_s,
                "size_N": p.size_n,
                "rows": b.rows(),
                "cols": b.cols(),
            });
            writeln!(out, "{v}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn pareto(args: ParetoArgs) -> CliResult {
    let a = load(&args.input.instance)?;
    let mode = args.input.mode;
    let lim = limits()?;
    let front = if args.enumerate {
        exact_pareto(&a, mode, &lim)?
    } else {
        let kept = Kept::from_p(args.p)?;
        let solver = match args.solver {
            SolverArg::Exact => Solver::Exact(lim),
            SolverArg::Heuristic => Solver::Heuristic {
                seeding: match args.seeding {
                    SeedingArg::Target => Seeding::Target,
                    SeedingArg::EveryRow => Seeding::EveryRow,
                },
                accelerated: true,
            },
        };
        if args.epsilon == 0 {
            return Err(Failure::Usage("--epsilon must be at least 1".into()));
        }
        epsilon_constraint(&a, &EpsilonConfig::exact(mode, kept).with_epsilon(args.epsilon).with_solver(solver))?
    };
    let mut out = output(args.out.as_deref())?;
    match args.format {
        Format::Json => {
            serde_json::to_writer(&mut out, &front).map_err(|e| Failure::Solve(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv | Format::Text => {
            if args.front_only || front.trace.is_empty() {
                write_front_csv(&front, &mut out)?;
            } else {
                write_trace_csv(&front, &mut out)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn generate_cmd(args: GenerateArgs) -> CliResult {
    let m = generate(&GenSpec::new(args.r, args.n, args.seed).with_density(args.density))
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let mut out = output(args.out.as_deref())?;
    write_instance(&m, &mut out)?;
    out.flush()?;
    Ok(())
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let ext = path.extension().map(|e| e.to_string_lossy().into_owned()).unwrap_or_else(|| "lp".into());
    path.with_file_name(format!("{stem}_{suffix}.{ext}"))
}

fn export_mip(args: ExportArgs) -> CliResult {
    let a = load(&args.input.instance)?;
    let mode = args.input.mode;
    let opts = ExportOptions { strengthen: args.strengthen, preprocess: args.preprocess, seed_row: args.seed_row };
    let bound = || args.bound.ok_or_else(|| Failure::Usage("--bound is required for g1 and g2".into()));
    match args.problem {
        MipProblem::G1 | MipProblem::G2 => {
            let model = match args.problem {
                MipProblem::G1 => build_ip1(&a, mode, bound()?, &opts)?,
                _ => build_ip2(&a, mode, bound()?, &opts)?,
            };
            let mut out = output(args.out.as_deref())?;
            write_model(&model, &mut out)?;
            out.flush()?;
        }
        MipProblem::Bi => {
            let path = args.out.as_deref().ok_or_else(|| Failure::Usage("--out is required for bi".into()))?;
            let (first, second) = build_bi_objective(&a, mode, &opts)?;
            for (model, suffix) in [(first, "obj1"), (second, "obj2")] {
                let target = sibling(path, suffix);
                let mut out = output(Some(&target))?;
                write_model(&model, &mut out)?;
                out.flush()?;
            }
        }
    }
    Ok(())
}

fn bench(args: BenchArgs) -> CliResult {
    let text = fs::read_to_string(&args.config).map_err(|e| Failure::Solve(format!("{}: {e}", args.config.display())))?;
    let mut cfg = BenchConfig::from_toml(&text).map_err(|e| Failure::Usage(e.to_string()))?;
    if let Some(jobs) = args.jobs {
        cfg.jobs = Some(jobs);
    }
    if let Some(r) = env_max_r()? {
        cfg.max_r_enumeration = r;
    }
    let report = run_bench(&cfg)?;
    fs::create_dir_all(&args.out)?;
    let mut csv = output(Some(&args.out.join("report.csv")))?;
    write_report(&report.rows, &mut csv)?;
    csv.flush()?;
    let mut log = output(Some(&args.out.join("instances.jsonl")))?;
    write_logs(&report.logs, &mut log)?;
    log.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Solve(a) => solve(a),
        Command::Pareto(a) => pareto(a),
        Command::Generate(a) => generate_cmd(a),
        Command::ExportMip(a) => export_mip(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Solve(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
