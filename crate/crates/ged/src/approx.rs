//! Randomized approximation algorithms for geometric edit distance.
//!
//! Both algorithms guess the answer in geometrically growing steps and,
//! for each guess g, run a batch of independent trials on freshly drawn
//! random grids. A trial snaps both sequences to its grid and reduces the
//! problem to a string question on cell ids: [`ged_sqrt_approx`] asks an
//! exact insertion/deletion distance query ([`crate::sed::sed_decide`])
//! and carries an O(√n) approximation factor; [`ged_alpha_approx`] asks
//! the budgeted wave relaxation ([`crate::aged::aged`]) on a coarser grid
//! and trades the factor down to O(α) for α in roughly
//! [√log n, √(n/log n)].
//!
//! Trials are embarrassingly parallel. Each is seeded as
//! `seed ⊕ mix(i, j)` from the master seed and the loop indices, and the
//! batch always yields its lowest-index success, so output is identical
//! across runs and thread counts.

use std::f64::consts::SQRT_2;

use rayon::iter::{IntoParallelIterator, ParallelIterator};

use crate::aged::aged;
use crate::cost::{matching_cost, CostModel, GedMeta, GedResult};
use crate::error::GedError;
use crate::grid::{snap_sequence, GridConfig};
use crate::matching::Matching;
use crate::point::PointSequence;
use crate::sed::{dense_codes, sed_decide};
use crate::Result;

/// Tuning knobs shared by the approximation algorithms.
#[derive(Clone, Copy, Debug)]
pub struct ApproxParams {
    /// Master seed; every random grid is derived from it.
    pub seed: u64,
    /// Amplification constant: each guess gets ⌈c·lg n⌉ trials, giving
    /// success probability 1 − 1/n^c.
    pub c: f64,
    /// Approximation target for [`ged_alpha_approx`]; unused by
    /// [`ged_sqrt_approx`].
    pub alpha: Option<f64>,
}

impl Default for ApproxParams {
    fn default() -> Self {
        ApproxParams {
            seed: 0,
            c: 2.0,
            alpha: None,
        }
    }
}

/// The α range where [`ged_alpha_approx`]'s guarantee is meaningful:
/// (√lg n, √(n / lg n)). Callers may still run outside it.
pub fn alpha_recommended_range(n: usize) -> (f64, f64) {
    let lg = (n as f64).log2();
    ((lg).sqrt(), (n as f64 / lg).sqrt())
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Seed for trial j of guess index i: independent streams, each
/// individually reproducible.
fn stream_seed(master: u64, i: u32, j: u32) -> u64 {
    master ^ splitmix64((u64::from(i) << 32) | u64::from(j))
}

fn check_common(p: &PointSequence, q: &PointSequence, params: &ApproxParams) -> Result<()> {
    if p.is_empty() || q.is_empty() {
        return Err(GedError::EmptyInput);
    }
    if p.len() != q.len() {
        return Err(GedError::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    if p.dim() != q.dim() {
        return Err(GedError::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    if !params.c.is_finite() || params.c <= 0.0 {
        return Err(GedError::InvalidC { value: params.c });
    }
    Ok(())
}

/// Σ dist(p_i, q_i) in gap units; the cheap certificate that the aligned
/// matching is already near-optimal.
fn diagonal_sum(p: &PointSequence, q: &PointSequence, ell: f64) -> f64 {
    (1..=p.len())
        .map(|i| p.point(i).dist(q.point(i)) / ell)
        .sum()
}

fn full_diagonal(n: usize) -> Matching {
    Matching::new((1..=n).map(|i| (i, i)).collect())
}

/// Trials per guess: ⌈c·lg n⌉.
fn trial_count(n: usize, c: f64) -> u32 {
    (c * (n as f64).log2()).ceil() as u32
}

/// Smallest t with 4^t ≥ n, i.e. ⌈lg √n⌉, without float logs.
fn sqrt_guess_ceiling(n: usize) -> u32 {
    let mut t = 0u32;
    while (1u128 << (2 * t)) < n as u128 {
        t += 1;
    }
    t
}

/// Smallest t with 2^t·α ≥ n, i.e. ⌈lg (n/α)⌉ for the guess ladder.
fn alpha_guess_ceiling(n: usize, alpha: f64) -> u32 {
    let mut t = 0u32;
    while ((1u128 << t) as f64) * alpha < n as f64 {
        t += 1;
    }
    t
}

/// Package a candidate matching, falling back to the empty matching when
/// its true cost is worse; the all-gaps cost 2nℓ is an unconditional
/// ceiling on the output.
fn finish(
    p: &PointSequence,
    q: &PointSequence,
    matching: Matching,
    model: &CostModel,
    meta: GedMeta,
) -> Result<GedResult> {
    let cost = matching_cost(p, q, &matching, model)?;
    let bound = model.gap_penalty() * (p.len() + q.len()) as f64;
    if cost > bound {
        return Ok(GedResult {
            cost: bound,
            matching: Matching::empty(),
            meta,
        });
    }
    Ok(GedResult {
        cost,
        matching,
        meta,
    })
}

/// O(√n)-approximate geometric edit distance for equal-length sequences.
///
/// Normalizes the gap penalty away, then for guesses g = 1, 2, 4, … up
/// to ~√n runs ⌈c·lg n⌉ independent trials: snap both sequences to a
/// random grid of resolution g/√n and accept the first trial whose cell
/// strings come within indel distance ⌈12√n + 2g⌉. The accepted
/// matching is re-costed on the original points. With probability
/// ≥ 1 − 1/n^c the result is an O(√n) factor from optimal, and it never
/// exceeds the all-gaps cost 2nℓ.
pub fn ged_sqrt_approx(
    p: &PointSequence,
    q: &PointSequence,
    params: &ApproxParams,
    model: &CostModel,
) -> Result<GedResult> {
    check_common(p, q, params)?;
    let n = p.len();
    let ell = model.gap_penalty();
    let meta = |guess: Option<f64>, iteration: Option<u32>| GedMeta {
        algorithm: "approx-sqrt",
        seed: Some(params.seed),
        guess,
        iteration,
    };
    if diagonal_sum(p, q, ell) <= 1.0 {
        return finish(p, q, full_diagonal(n), model, meta(None, None));
    }
    let p_norm = p.scaled(1.0 / ell);
    let q_norm = q.scaled(1.0 / ell);
    let root_n = (n as f64).sqrt();
    let trials = trial_count(n, params.c);
    for i in 0..=sqrt_guess_ceiling(n) {
        let g = (1u64 << i) as f64;
        let delta = g / root_n;
        let k_g = (12.0 * root_n + 2.0 * g).ceil() as usize;
        let hit = (1..=trials).into_par_iter().find_map_first(|j| {
            let grid = GridConfig::new(delta, p_norm.dim(), stream_seed(params.seed, i, j))
                .expect("guess resolution is positive and finite");
            let sp = snap_sequence(&grid, &p_norm).expect("inputs validated above");
            let sq = snap_sequence(&grid, &q_norm).expect("inputs validated above");
            let (s, t, _) = dense_codes(sp.cells(), sq.cells());
            sed_decide(&s, &t, k_g).map(|m| (j, m))
        });
        if let Some((j, matching)) = hit {
            return finish(p, q, matching, model, meta(Some(g), Some(j)));
        }
    }
    finish(p, q, Matching::empty(), model, meta(None, None))
}

/// O(α)-approximate geometric edit distance for equal-length sequences.
///
/// Same guess-and-amplify scheme as [`ged_sqrt_approx`], but each trial
/// snaps to a coarser grid of resolution gα/n and runs the budgeted wave
/// relaxation with threshold (4√2+6)·g, so the whole run is near-linear
/// for α in the recommended range. `params.alpha` must be set; values
/// outside [`alpha_recommended_range`] still execute (callers are
/// expected to warn).
pub fn ged_alpha_approx(
    p: &PointSequence,
    q: &PointSequence,
    params: &ApproxParams,
    model: &CostModel,
) -> Result<GedResult> {
    check_common(p, q, params)?;
    let alpha = params.alpha.ok_or(GedError::AlphaRequired)?;
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(GedError::InvalidAlpha { value: alpha });
    }
    let n = p.len();
    let ell = model.gap_penalty();
    let meta = |guess: Option<f64>, iteration: Option<u32>| GedMeta {
        algorithm: "approx-alpha",
        seed: Some(params.seed),
        guess,
        iteration,
    };
    if diagonal_sum(p, q, ell) <= 1.0 {
        return finish(p, q, full_diagonal(n), model, meta(None, None));
    }
    let p_norm = p.scaled(1.0 / ell);
    let q_norm = q.scaled(1.0 / ell);
    let unit = CostModel::default();
    let trials = trial_count(n, params.c);
    for i in 0..=alpha_guess_ceiling(n, alpha) {
        let g = (1u64 << i) as f64;
        let delta = g * alpha / n as f64;
        let threshold = (4.0 * SQRT_2 + 6.0) * g;
        let hit = (1..=trials).into_par_iter().find_map_first(|j| {
            let grid = GridConfig::new(delta, p_norm.dim(), stream_seed(params.seed, i, j))
                .expect("guess resolution is positive and finite");
            let sp = snap_sequence(&grid, &p_norm).expect("inputs validated above");
            let sq = snap_sequence(&grid, &q_norm).expect("inputs validated above");
            aged(&sp, &sq, threshold, &unit)
                .expect("snapped on one shared grid with a valid threshold")
                .map(|r| (j, r.matching))
        });
        if let Some((j, matching)) = hit {
            return finish(p, q, matching, model, meta(Some(g), Some(j)));
        }
    }
    finish(p, q, Matching::empty(), model, meta(None, None))
}
