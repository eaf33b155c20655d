//! Synthetic benchmark sweep: random-walk trajectory pairs with resampling
//! noise and injected outliers, across a ladder of sizes.

use std::time::Instant;

use anyhow::Result;
use ged::{
    exact_ged_cost, ged_alpha_approx, ged_sqrt_approx, ApproxParams, CostModel, PointSequence,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::report::{BenchReport, BenchRow};

pub struct BenchConfig {
    pub seed: u64,
    pub c: f64,
    pub model: CostModel,
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub walk_step: f64,
    pub noise: f64,
    pub outliers: usize,
    pub timing: bool,
}

/// One planted instance: a random walk and a noisy copy with a few points
/// thrown far off, so the optimum is near-diagonal but not free.
fn instance(rng: &mut StdRng, n: usize, cfg: &BenchConfig) -> (PointSequence, PointSequence) {
    let mut here = [0.0f64; 2];
    let mut base = Vec::with_capacity(n);
    for _ in 0..n {
        for c in here.iter_mut() {
            *c += rng.random_range(-cfg.walk_step..cfg.walk_step);
        }
        base.push(here.to_vec());
    }
    let mut copy: Vec<Vec<f64>> = base
        .iter()
        .map(|row| {
            row.iter()
                .map(|&c| {
                    if cfg.noise > 0.0 {
                        c + rng.random_range(-cfg.noise..cfg.noise)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    for _ in 0..cfg.outliers.min(n) {
        let at = rng.random_range(0..n);
        for c in copy[at].iter_mut() {
            *c += rng.random_range(50.0..90.0);
        }
    }
    (
        PointSequence::from_coords(base).unwrap(),
        PointSequence::from_coords(copy).unwrap(),
    )
}

fn median(values: &mut Vec<f64>) -> f64 {
    values.sort_by(f64::total_cmp);
    values[values.len() / 2]
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    let mut rows = Vec::with_capacity(cfg.sizes.len());
    for (si, &n) in cfg.sizes.iter().enumerate() {
        let mut exact_costs = Vec::new();
        let mut sqrt_ratios = Vec::new();
        let mut alpha_ratios = Vec::new();
        let (mut exact_ms, mut sqrt_ms, mut alpha_ms) = (Vec::new(), Vec::new(), Vec::new());
        for rep in 0..cfg.reps {
            // one reproducible stream per (size, rep) cell
            let mut rng =
                StdRng::seed_from_u64(cfg.seed ^ (((si as u64) << 32) | rep as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let (p, q) = instance(&mut rng, n, cfg);
            let params =
                ApproxParams { seed: rng.random(), c: cfg.c, alpha: Some((n as f64).powf(0.25)) };

            let t0 = Instant::now();
            let exact = exact_ged_cost(&p, &q, &cfg.model)?;
            exact_ms.push(t0.elapsed().as_secs_f64() * 1e3);

            let t0 = Instant::now();
            let sqrt = ged_sqrt_approx(&p, &q, &params, &cfg.model)?;
            sqrt_ms.push(t0.elapsed().as_secs_f64() * 1e3);

            let t0 = Instant::now();
            let alpha = ged_alpha_approx(&p, &q, &params, &cfg.model)?;
            alpha_ms.push(t0.elapsed().as_secs_f64() * 1e3);

            exact_costs.push(exact);
            let ratio = |cost: f64| if exact > 0.0 { cost / exact } else { 1.0 };
            sqrt_ratios.push(ratio(sqrt.cost));
            alpha_ratios.push(ratio(alpha.cost));
        }
        rows.push(BenchRow {
            n,
            exact_cost_median: median(&mut exact_costs),
            sqrt_ratio_median: median(&mut sqrt_ratios),
            alpha_ratio_median: median(&mut alpha_ratios),
            exact_ms_median: cfg.timing.then(|| median(&mut exact_ms)),
            sqrt_ms_median: cfg.timing.then(|| median(&mut sqrt_ms)),
            alpha_ms_median: cfg.timing.then(|| median(&mut alpha_ms)),
        });
    }
    Ok(BenchReport {
        seed: cfg.seed,
        gap_penalty: cfg.model.gap_penalty(),
        c: cfg.c,
        walk_step: cfg.walk_step,
        noise: cfg.noise,
        outliers: cfg.outliers,
        reps: cfg.reps,
        rows,
    })
}
