//! Structured run reports and their JSON/TSV renderings.
//!
//! Reports never include anything run-dependent unless `--timing` asked for
//! it, so a seeded command prints byte-identical output on every run.

use anyhow::{ensure, Result};
use ged::{matching_cost, CostModel, GedMeta, Matching, PointSequence};
use serde::Serialize;

/// How tightly a report's cost must agree with re-costing its own pairs.
pub const REPORT_COST_EPS: f64 = 1e-9;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

impl Format {
    pub fn pick(json: bool, tsv: bool) -> Format {
        // clap rejects the flags together; json is the default
        let _ = json;
        if tsv {
            Format::Tsv
        } else {
            Format::Json
        }
    }
}

#[derive(Serialize)]
pub struct MatchReport {
    pub algorithm: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Points in the first sequence.
    pub n: usize,
    /// Points in the second sequence.
    pub m: usize,
    /// Coordinate dimension.
    pub d: usize,
    pub gap_penalty: f64,
    /// Total cost; absent when a banded run exceeded its band.
    pub cost: Option<f64>,
    pub band_exceeded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub guess: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iteration: Option<u32>,
    /// Matched index pairs with their point distances, 1-based.
    pub matched_pairs: Vec<(usize, usize, f64)>,
    pub gaps_p: Vec<usize>,
    pub gaps_q: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// Builds the report for a finished run and revalidates its cost against an
/// independent re-costing of the reported pairs and gaps.
pub fn match_report(
    algorithm: &str,
    p: &PointSequence,
    q: &PointSequence,
    matching: &Matching,
    cost: f64,
    meta: &GedMeta,
    model: &CostModel,
    wall_time_ms: Option<f64>,
) -> Result<MatchReport> {
    let recost = matching_cost(p, q, matching, model)?;
    ensure!(
        (recost - cost).abs() <= REPORT_COST_EPS,
        "internal error: cost {cost} does not recompute from the matching ({recost})"
    );
    let matched_pairs: Vec<(usize, usize, f64)> = matching
        .pairs()
        .iter()
        .map(|&(i, j)| (i, j, p.point(i).dist(q.point(j))))
        .collect();
    Ok(MatchReport {
        algorithm: algorithm.to_string(),
        seed: meta.seed,
        n: p.len(),
        m: q.len(),
        d: p.dim(),
        gap_penalty: model.gap_penalty(),
        cost: Some(cost),
        band_exceeded: false,
        guess: meta.guess,
        iteration: meta.iteration,
        matched_pairs,
        gaps_p: unmatched(p.len(), matching.pairs().iter().map(|&(i, _)| i)),
        gaps_q: unmatched(q.len(), matching.pairs().iter().map(|&(_, j)| j)),
        wall_time_ms,
    })
}

/// Report for a banded run that gave up: no cost, no pairs, just the fact.
pub fn band_exceeded_report(
    p: &PointSequence,
    q: &PointSequence,
    model: &CostModel,
    wall_time_ms: Option<f64>,
) -> MatchReport {
    MatchReport {
        algorithm: "banded".to_string(),
        seed: None,
        n: p.len(),
        m: q.len(),
        d: p.dim(),
        gap_penalty: model.gap_penalty(),
        cost: None,
        band_exceeded: true,
        guess: None,
        iteration: None,
        matched_pairs: Vec::new(),
        gaps_p: Vec::new(),
        gaps_q: Vec::new(),
        wall_time_ms,
    }
}

fn unmatched(len: usize, matched: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut hit = vec![false; len + 1];
    for i in matched {
        hit[i] = true;
    }
    (1..=len).filter(|&i| !hit[i]).collect()
}

#[derive(Serialize)]
pub struct CompareRow {
    pub algorithm: String,
    pub cost: f64,
    /// Cost relative to the exact optimum on the same inputs.
    pub ratio: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Serialize)]
pub struct CompareReport {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub gap_penalty: f64,
    pub c: f64,
    pub alpha: f64,
    pub rows: Vec<CompareRow>,
}

#[derive(Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub exact_cost_median: f64,
    pub sqrt_ratio_median: f64,
    pub alpha_ratio_median: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_ms_median: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sqrt_ms_median: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_ms_median: Option<f64>,
}

#[derive(Serialize)]
pub struct BenchReport {
    pub seed: u64,
    pub gap_penalty: f64,
    pub c: f64,
    pub walk_step: f64,
    pub noise: f64,
    pub outliers: usize,
    pub reps: usize,
    pub rows: Vec<BenchRow>,
}

pub fn print_match(report: &MatchReport, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Format::Tsv => {
            let mut out = String::new();
            kv(&mut out, "algorithm", &report.algorithm);
            if let Some(seed) = report.seed {
                kv(&mut out, "seed", &seed);
            }
            kv(&mut out, "n", &report.n);
            kv(&mut out, "m", &report.m);
            kv(&mut out, "d", &report.d);
            kv(&mut out, "gap_penalty", &report.gap_penalty);
            match report.cost {
                Some(cost) => kv(&mut out, "cost", &cost),
                None => kv(&mut out, "cost", &""),
            }
            kv(&mut out, "band_exceeded", &report.band_exceeded);
            if let Some(guess) = report.guess {
                kv(&mut out, "guess", &guess);
            }
            if let Some(iteration) = report.iteration {
                kv(&mut out, "iteration", &iteration);
            }
            for (i, j, dist) in &report.matched_pairs {
                out.push_str(&format!("pair\t{i}\t{j}\t{dist}\n"));
            }
            for i in &report.gaps_p {
                kv(&mut out, "gap_p", i);
            }
            for j in &report.gaps_q {
                kv(&mut out, "gap_q", j);
            }
            if let Some(ms) = report.wall_time_ms {
                kv(&mut out, "wall_time_ms", &ms);
            }
            print!("{out}");
        }
    }
    Ok(())
}

pub fn print_compare(report: &CompareReport, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Format::Tsv => {
            let mut out = String::new();
            kv(&mut out, "seed", &report.seed);
            kv(&mut out, "n", &report.n);
            kv(&mut out, "m", &report.m);
            kv(&mut out, "d", &report.d);
            kv(&mut out, "gap_penalty", &report.gap_penalty);
            kv(&mut out, "c", &report.c);
            kv(&mut out, "alpha", &report.alpha);
            for row in &report.rows {
                match row.wall_time_ms {
                    Some(ms) => out.push_str(&format!(
                        "row\t{}\t{}\t{}\t{ms}\n",
                        row.algorithm, row.cost, row.ratio
                    )),
                    None => out.push_str(&format!(
                        "row\t{}\t{}\t{}\n",
                        row.algorithm, row.cost, row.ratio
                    )),
                }
            }
            print!("{out}");
        }
    }
    Ok(())
}

pub fn print_bench(report: &BenchReport, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Format::Tsv => {
            let mut out = String::new();
            kv(&mut out, "seed", &report.seed);
            kv(&mut out, "gap_penalty", &report.gap_penalty);
            kv(&mut out, "c", &report.c);
            kv(&mut out, "walk_step", &report.walk_step);
            kv(&mut out, "noise", &report.noise);
            kv(&mut out, "outliers", &report.outliers);
            kv(&mut out, "reps", &report.reps);
            for row in &report.rows {
                out.push_str(&format!(
                    "row\t{}\t{}\t{}\t{}",
                    row.n, row.exact_cost_median, row.sqrt_ratio_median, row.alpha_ratio_median
                ));
                if let (Some(e), Some(s), Some(a)) =
                    (row.exact_ms_median, row.sqrt_ms_median, row.alpha_ms_median)
                {
                    out.push_str(&format!("\t{e}\t{s}\t{a}"));
                }
                out.push('\n');
            }
            print!("{out}");
        }
    }
    Ok(())
}

fn kv(out: &mut String, key: &str, value: &dyn std::fmt::Display) {
    out.push_str(&format!("{key}\t{value}\n"));
}
