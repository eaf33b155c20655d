//! `ged`: geometric edit distance between point trajectories.
//!
//! Reads trajectories from CSV files (one point per line, `#` comments),
//! runs the chosen algorithm, and prints a JSON or TSV report. Exit codes:
//! 0 success (including a band-exceeded verdict), 1 usage error, 2 data or
//! computation error.

mod bench;
mod points;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{ensure, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use ged::{
    alpha_recommended_range, banded_ged, exact_ged, ged_alpha_approx, ged_sqrt_approx,
    matching_cost, ApproxParams, CostModel, GedResult, PointSequence,
};

use crate::bench::{run_bench, BenchConfig};
use crate::points::parse_points;
use crate::report::{
    band_exceeded_report, match_report, print_bench, print_compare, print_match, CompareReport,
    CompareRow, Format, REPORT_COST_EPS,
};

#[derive(Parser)]
#[command(name = "ged", version, about = "Geometric edit distance between point trajectories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact distance by the full dynamic program
    Exact {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact distance searched inside a diagonal band
    Banded {
        #[command(flatten)]
        input: InputArgs,
        /// Band half-width in gap units; any distance at most k is exact
        #[arg(long, value_name = "INT")]
        k: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Randomized approximation with ratio on the order of sqrt(n)
    ApproxSqrt {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        random: RandomArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Randomized approximation with ratio on the order of alpha
    ApproxAlpha {
        #[command(flatten)]
        input: InputArgs,
        /// Approximation target; larger is faster but coarser
        #[arg(long, value_name = "REAL")]
        alpha: f64,
        #[command(flatten)]
        random: RandomArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run exact and both approximations and report cost ratios
    Compare {
        #[command(flatten)]
        input: InputArgs,
        /// Approximation target for the alpha run; defaults to n^(1/4)
        #[arg(long, value_name = "REAL")]
        alpha: Option<f64>,
        #[command(flatten)]
        random: RandomArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Synthetic scaling sweep over planted trajectory pairs
    Bench {
        /// Comma-separated instance sizes
        #[arg(long, value_delimiter = ',', default_value = "64,128,256,512", value_name = "N,..")]
        sizes: Vec<usize>,
        /// Repetitions per size (medians are reported)
        #[arg(long, default_value_t = 3, value_name = "INT")]
        reps: usize,
        /// Per-coordinate step bound of the generating random walk
        #[arg(long, default_value_t = 0.5, value_name = "REAL")]
        walk_step: f64,
        /// Per-coordinate amplitude of the resampling noise
        #[arg(long, default_value_t = 0.02, value_name = "REAL")]
        noise: f64,
        /// How many points of the copy are displaced far away
        #[arg(long, default_value_t = 2, value_name = "INT")]
        outliers: usize,
        #[command(flatten)]
        random: RandomArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// First trajectory (CSV, one point per line)
    #[arg(long, value_name = "FILE")]
    p: PathBuf,
    /// Second trajectory (CSV, one point per line)
    #[arg(long, value_name = "FILE")]
    q: PathBuf,
}

#[derive(Args)]
struct OutputArgs {
    /// Penalty charged for each unmatched point
    #[arg(long, default_value_t = 1.0, value_name = "REAL")]
    gap_penalty: f64,
    /// Emit the report as pretty JSON (the default)
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    /// Emit the report as tab-separated lines
    #[arg(long)]
    tsv: bool,
    /// Include wall-clock fields (breaks byte-for-byte reproducibility)
    #[arg(long)]
    timing: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        Format::pick(self.json, self.tsv)
    }
}

#[derive(Args)]
struct RandomArgs {
    /// RNG seed; falls back to the GED_SEED environment variable, then 0
    #[arg(long, value_name = "INT")]
    seed: Option<u64>,
    /// Amplification constant: trials per guess scale with c·lg n
    #[arg(long, default_value_t = 2.0, value_name = "REAL")]
    c: f64,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(2);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Exact { input, output } => run_exact(&input, &output),
        Command::Banded { input, k, output } => run_banded(&input, k, &output),
        Command::ApproxSqrt { input, random, output } => {
            run_approx(Flavor::Sqrt, &input, &random, &output)
        }
        Command::ApproxAlpha { input, alpha, random, output } => {
            run_approx(Flavor::Alpha(alpha), &input, &random, &output)
        }
        Command::Compare { input, alpha, random, output } => {
            run_compare(&input, alpha, &random, &output)
        }
        Command::Bench { sizes, reps, walk_step, noise, outliers, random, output } => {
            run_bench_cmd(sizes, reps, walk_step, noise, outliers, &random, &output)
        }
    }
}

fn load(input: &InputArgs, output: &OutputArgs) -> Result<(PointSequence, PointSequence, CostModel)> {
    let p = parse_points(&input.p)?;
    let q = parse_points(&input.q)?;
    let model = CostModel::new(output.gap_penalty)?;
    Ok((p, q, model))
}

fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("GED_SEED") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .with_context(|| format!("GED_SEED must be an unsigned integer, got {text:?}")),
        Err(_) => Ok(0),
    }
}

fn prefix(seq: &PointSequence, len: usize) -> PointSequence {
    PointSequence::new(seq.points()[..len].to_vec()).expect("prefix of a valid sequence")
}

fn run_exact(input: &InputArgs, output: &OutputArgs) -> Result<()> {
    let (p, q, model) = load(input, output)?;
    let t0 = Instant::now();
    let r = exact_ged(&p, &q, &model)?;
    let wall = output.timing.then(|| t0.elapsed().as_secs_f64() * 1e3);
    let rep = match_report(r.meta.algorithm, &p, &q, &r.matching, r.cost, &r.meta, &model, wall)?;
    print_match(&rep, output.format())
}

fn run_banded(input: &InputArgs, k: usize, output: &OutputArgs) -> Result<()> {
    let (p, q, model) = load(input, output)?;
    let t0 = Instant::now();
    let outcome = banded_ged(&p, &q, k, &model)?;
    let wall = output.timing.then(|| t0.elapsed().as_secs_f64() * 1e3);
    let rep = match outcome.result() {
        Some(r) => {
            match_report(r.meta.algorithm, &p, &q, &r.matching, r.cost, &r.meta, &model, wall)?
        }
        None => {
            eprintln!("distance exceeds the band of {k} gap units; rerun with a larger --k");
            band_exceeded_report(&p, &q, &model, wall)
        }
    };
    print_match(&rep, output.format())
}

#[derive(Clone, Copy)]
enum Flavor {
    Sqrt,
    Alpha(f64),
}

/// The randomized algorithms need equal lengths; on unequal inputs they run
/// on the shared prefix and the report charges the leftover tail as gaps.
fn shared_prefix(
    p: &PointSequence,
    q: &PointSequence,
) -> (PointSequence, PointSequence, usize) {
    let shared = p.len().min(q.len());
    if p.len() != q.len() {
        eprintln!(
            "warning: trajectory lengths differ ({} vs {}); approximating on the first {shared} \
             points and charging the remainder as gaps",
            p.len(),
            q.len()
        );
        (prefix(p, shared), prefix(q, shared), shared)
    } else {
        (p.clone(), q.clone(), shared)
    }
}

fn run_approx(
    flavor: Flavor,
    input: &InputArgs,
    random: &RandomArgs,
    output: &OutputArgs,
) -> Result<()> {
    let (p, q, model) = load(input, output)?;
    let seed = resolve_seed(random.seed)?;
    let (pp, qq, shared) = shared_prefix(&p, &q);
    let alpha = match flavor {
        Flavor::Sqrt => None,
        Flavor::Alpha(a) => {
            let (lo, hi) = alpha_recommended_range(shared);
            if a < lo || a > hi {
                eprintln!(
                    "warning: --alpha {a} is outside the recommended range [{lo:.2}, {hi:.2}] \
                     for {shared} points"
                );
            }
            Some(a)
        }
    };
    let params = ApproxParams { seed, c: random.c, alpha };
    let t0 = Instant::now();
    let r = match flavor {
        Flavor::Sqrt => ged_sqrt_approx(&pp, &qq, &params, &model)?,
        Flavor::Alpha(_) => ged_alpha_approx(&pp, &qq, &params, &model)?,
    };
    let wall = output.timing.then(|| t0.elapsed().as_secs_f64() * 1e3);
    // the matching lives inside the shared prefix, so it is also a valid
    // matching of the full inputs; costing it there charges the tails
    let cost = matching_cost(&p, &q, &r.matching, &model)?;
    let rep = match_report(r.meta.algorithm, &p, &q, &r.matching, cost, &r.meta, &model, wall)?;
    print_match(&rep, output.format())
}

fn run_compare(
    input: &InputArgs,
    alpha_flag: Option<f64>,
    random: &RandomArgs,
    output: &OutputArgs,
) -> Result<()> {
    let (p, q, model) = load(input, output)?;
    let seed = resolve_seed(random.seed)?;
    let (pp, qq, shared) = shared_prefix(&p, &q);
    let alpha = alpha_flag.unwrap_or_else(|| (shared as f64).powf(0.25));
    let params = ApproxParams { seed, c: random.c, alpha: Some(alpha) };

    let mut rows = Vec::with_capacity(3);
    let t0 = Instant::now();
    let exact = exact_ged(&p, &q, &model)?;
    rows.push(CompareRow {
        algorithm: exact.meta.algorithm.to_string(),
        cost: exact.cost,
        ratio: 1.0,
        wall_time_ms: output.timing.then(|| t0.elapsed().as_secs_f64() * 1e3),
    });

    let t0 = Instant::now();
    let r = ged_sqrt_approx(&pp, &qq, &params, &model)?;
    let ms = output.timing.then(|| t0.elapsed().as_secs_f64() * 1e3);
    push_approx_row(&mut rows, &p, &q, r, exact.cost, &model, ms)?;

    let t0 = Instant::now();
    let r = ged_alpha_approx(&pp, &qq, &params, &model)?;
    let ms = output.timing.then(|| t0.elapsed().as_secs_f64() * 1e3);
    push_approx_row(&mut rows, &p, &q, r, exact.cost, &model, ms)?;

    let report = CompareReport {
        seed,
        n: p.len(),
        m: q.len(),
        d: p.dim(),
        gap_penalty: model.gap_penalty(),
        c: random.c,
        alpha,
        rows,
    };
    print_compare(&report, output.format())
}

fn push_approx_row(
    rows: &mut Vec<CompareRow>,
    p: &PointSequence,
    q: &PointSequence,
    r: GedResult,
    exact_cost: f64,
    model: &CostModel,
    wall_time_ms: Option<f64>,
) -> Result<()> {
    let cost = matching_cost(p, q, &r.matching, model)?;
    let ratio = if exact_cost > 0.0 {
        cost / exact_cost
    } else {
        // a zero optimum means identical inputs, where the snapped strings
        // are equal and the approximations must also find a free matching
        ensure!(
            cost <= REPORT_COST_EPS,
            "{} returned {cost} where the optimum is 0",
            r.meta.algorithm
        );
        1.0
    };
    ensure!(
        ratio >= 1.0 - 1e-9,
        "{} undercut the optimum: {cost} < {exact_cost}",
        r.meta.algorithm
    );
    rows.push(CompareRow {
        algorithm: r.meta.algorithm.to_string(),
        cost,
        ratio,
        wall_time_ms,
    });
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_bench_cmd(
    sizes: Vec<usize>,
    reps: usize,
    walk_step: f64,
    noise: f64,
    outliers: usize,
    random: &RandomArgs,
    output: &OutputArgs,
) -> Result<()> {
    ensure!(!sizes.is_empty(), "--sizes needs at least one value");
    ensure!(sizes.iter().all(|&n| n >= 1), "--sizes entries must be at least 1");
    ensure!(reps >= 1, "--reps must be at least 1");
    ensure!(walk_step.is_finite() && walk_step > 0.0, "--walk-step must be positive");
    ensure!(noise.is_finite() && noise >= 0.0, "--noise must be non-negative");
    let cfg = BenchConfig {
        seed: resolve_seed(random.seed)?,
        c: random.c,
        model: CostModel::new(output.gap_penalty)?,
        sizes,
        reps,
        walk_step,
        noise,
        outliers,
        timing: output.timing,
    };
    let report = run_bench(&cfg)?;
    print_bench(&report, output.format())
}
