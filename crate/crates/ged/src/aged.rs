//! Constant-factor approximation of geometric edit distance for sequences
//! snapped to a shared grid.
//!
//! [`aged`] runs the same diagonal waves as [`crate::sed`], but a slide may
//! also swallow matched pairs at nonzero distance as long as the
//! accumulated distance within that slide stays within a fixed budget of
//! two gap units. Runs of identical cells cost nothing and are skipped in
//! O(1) via an LCP index over the cell-id strings; every other pair costs
//! at least the grid resolution Δ, so a slide performs at most ⌈2/Δ⌉ + 1
//! individual additions. Work is O(k²/Δ) cells plus the O(n log n) index.
//!
//! When the snapped sequences admit a matching of cost g* ≤ k, the wave
//! search succeeds and the backtracked matching costs at most 3·g*.
//! [`label_matrix`] materializes the per-entry wave labels on small inputs
//! so tests can check the label invariants directly.

use crate::cost::{matching_cost, CostModel, GedMeta, GedResult};
use crate::error::GedError;
use crate::grid::SnappedSequence;
use crate::lcp::LcpIndex;
use crate::sed::{backtrack_waves, dense_codes, wave_entry, WaveCell, WaveTable};
use crate::Result;

/// Slack absorbing float accumulation in the per-slide distance budget.
const BUDGET_EPS: f64 = 1e-12;

/// Per-slide distance budget, in gap units.
const SLIDE_BUDGET: f64 = 2.0;

/// Side-length cap for [`label_matrix`], which stores a dense
/// (m+1)×(n+1) table.
pub const LABEL_MATRIX_CAP: usize = 512;

/// Work counters for one [`aged_with_stats`] run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AgedStats {
    /// Wave cells computed.
    pub cells: u64,
    /// Matched pairs added one by one against the distance budget.
    pub manual_adds: u64,
    /// Largest number of manual additions any single slide performed.
    pub max_adds_per_slide: u64,
}

fn check_inputs(pp: &SnappedSequence, qp: &SnappedSequence, k: f64) -> Result<()> {
    if pp.grid() != qp.grid() {
        return Err(GedError::GridMismatch);
    }
    if !k.is_finite() || k < 0.0 {
        return Err(GedError::InvalidThreshold { value: k });
    }
    Ok(())
}

struct WaveRun {
    table: WaveTable,
    /// Wave index at which the target diagonal reached row m, if any.
    success: Option<usize>,
    stats: AgedStats,
}

/// Shared wave loop. `stop_at_success` short-circuits for the decision
/// path; the label materializer runs every wave.
fn run_budget_waves(
    pp: &SnappedSequence,
    qp: &SnappedSequence,
    ell: f64,
    k: f64,
    stop_at_success: bool,
) -> WaveRun {
    let m = pp.len() as i64;
    let n = qp.len() as i64;
    let target = n - m;
    // labels are integers bounded by the all-gaps cost m+n, so further
    // waves can never be needed regardless of how large k is
    let max_e = (k.ceil() as usize).min((m + n) as usize);
    let (s, t, _) = dense_codes(pp.cells(), qp.cells());
    let index = LcpIndex::new(&s, &t);
    // distinct cells sit at least Δ apart, which caps budget additions
    let adds_cap = (SLIDE_BUDGET * ell / pp.grid().delta()).ceil() as u64 + 1;
    let mut stats = AgedStats::default();
    let mut table = WaveTable::new();
    let mut success = None;
    if target.unsigned_abs() as usize > max_e {
        return WaveRun { table, success, stats };
    }
    for e in 0..=max_e {
        let ei = e as i64;
        let mut wave = Vec::with_capacity(e + 1);
        let mut h = -ei;
        while h <= ei {
            let (start, pred) = wave_entry(&table, h, e);
            let (l, adds) = budget_slide(pp, qp, &index, ell, start, h);
            debug_assert!(adds <= adds_cap, "slide exceeded its budget accounting");
            stats.cells += 1;
            stats.manual_adds += adds;
            stats.max_adds_per_slide = stats.max_adds_per_slide.max(adds);
            wave.push(WaveCell { l, start, pred });
            h += 2;
        }
        table.push_wave(wave);
        if target.abs() <= ei
            && (target + ei) % 2 == 0
            && table.frontier(target, e) >= m
        {
            success = Some(e);
            if stop_at_success {
                break;
            }
        }
    }
    WaveRun { table, success, stats }
}

/// Extend a slide down diagonal h from `start`: free runs of identical
/// cells first, then one pair at a time while the distance budget lasts.
fn budget_slide(
    pp: &SnappedSequence,
    qp: &SnappedSequence,
    index: &LcpIndex,
    ell: f64,
    start: i64,
    h: i64,
) -> (i64, u64) {
    let end = (pp.len() as i64).min(qp.len() as i64 - h);
    let mut r = start;
    let mut sum = 0.0;
    let mut adds = 0u64;
    loop {
        r += index.lcp((r + 1) as usize, (r + 1 + h) as usize) as i64;
        if r >= end {
            break;
        }
        let d = pp
            .points()
            .point((r + 1) as usize)
            .dist(qp.points().point((r + 1 + h) as usize))
            / ell;
        if sum + d <= SLIDE_BUDGET + BUDGET_EPS {
            sum += d;
            r += 1;
            adds += 1;
        } else {
            break;
        }
    }
    (r, adds)
}

/// Factor-3 approximate matcher for grid-snapped sequences.
///
/// Returns `Ok(None)` when no matching within the wave budget exists;
/// otherwise the matching's cost is at most three times the optimum for
/// the snapped sequences whenever that optimum is at most `k`.
pub fn aged(
    pp: &SnappedSequence,
    qp: &SnappedSequence,
    k: f64,
    model: &CostModel,
) -> Result<Option<GedResult>> {
    aged_with_stats(pp, qp, k, model).map(|(result, _)| result)
}

/// [`aged`] plus work counters, for instrumentation and scaling tests.
pub fn aged_with_stats(
    pp: &SnappedSequence,
    qp: &SnappedSequence,
    k: f64,
    model: &CostModel,
) -> Result<(Option<GedResult>, AgedStats)> {
    check_inputs(pp, qp, k)?;
    let run = run_budget_waves(pp, qp, model.gap_penalty(), k, true);
    let result = match run.success {
        None => None,
        Some(e) => {
            let target = qp.len() as i64 - pp.len() as i64;
            let matching = backtrack_waves(&run.table, target, e);
            let cost = matching_cost(pp.points(), qp.points(), &matching, model)?;
            Some(GedResult {
                cost,
                matching,
                meta: GedMeta {
                    algorithm: "aged",
                    ..GedMeta::default()
                },
            })
        }
    };
    Ok((result, run.stats))
}

/// Dense table of wave labels over the full (m+1)×(n+1) alignment grid.
///
/// Entry (i, j) holds the wave index that first covered it, or `None` if
/// no wave within the budget did.
pub struct LabelMatrix {
    rows: usize,
    cols: usize,
    labels: Vec<Option<u32>>,
}

impl LabelMatrix {
    /// Number of table rows, m+1.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of table columns, n+1.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        assert!(i < self.rows && j < self.cols, "label index out of range");
        self.labels[i * self.cols + j]
    }

    fn set_if_unlabeled(&mut self, i: i64, j: i64, e: u32) -> bool {
        let idx = i as usize * self.cols + j as usize;
        if self.labels[idx].is_none() {
            self.labels[idx] = Some(e);
            true
        } else {
            false
        }
    }
}

/// Materialize every wave label on a debug-scale input.
///
/// Boundary entries (i, 0) and (0, j) are labeled by their own index;
/// each wave labels its slide rows and back-fills the unlabeled stretch
/// above its start. Entries keep the first label they receive.
pub fn label_matrix(pp: &SnappedSequence, qp: &SnappedSequence, k: f64) -> Result<LabelMatrix> {
    check_inputs(pp, qp, k)?;
    for len in [pp.len(), qp.len()] {
        if len > LABEL_MATRIX_CAP {
            return Err(GedError::SizeCap {
                n: len,
                cap: LABEL_MATRIX_CAP,
            });
        }
    }
    let m = pp.len() as i64;
    let n = qp.len() as i64;
    let run = run_budget_waves(pp, qp, 1.0, k, false);
    let waves = run.table.waves_computed();
    let mut matrix = LabelMatrix {
        rows: pp.len() + 1,
        cols: qp.len() + 1,
        labels: vec![None; (pp.len() + 1) * (qp.len() + 1)],
    };
    if waves == 0 {
        return Ok(matrix);
    }
    let e_max = (waves - 1) as i64;
    for i in 0..=m.min(e_max) {
        matrix.set_if_unlabeled(i, 0, i as u32);
    }
    for j in 0..=n.min(e_max) {
        matrix.set_if_unlabeled(0, j, j as u32);
    }
    for e in 0..waves {
        let ei = e as i64;
        let mut h = -ei;
        while h <= ei {
            let cell = run.table.cell(h, e);
            let end = m.min(n - h);
            // slide rows, clipped to the real grid
            let mut r = cell.start;
            while r <= cell.l.min(end) {
                matrix.set_if_unlabeled(r, r + h, e as u32);
                r += 1;
            }
            // back-fill upward from the entry row to the previous label
            let mut r = (cell.start - 1).min(end);
            let floor = (-h).max(0);
            while r >= floor && matrix.set_if_unlabeled(r, r + h, e as u32) {
                r -= 1;
            }
            h += 2;
        }
    }
    Ok(matrix)
}
