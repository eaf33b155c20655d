//! Exact distance by dynamic programming.
//!
//! The table is the classic alignment recurrence: a cell (i, j) holds the
//! cheapest cost of aligning the first i points of P with the first j points
//! of Q, where skipping a point costs one gap and matching costs the
//! Euclidean distance. All table values are kept in units of the gap penalty
//! (distances divided by it), so gaps cost exactly 1; public costs are
//! rescaled back on the way out.
//!
//! Three entry points: [`exact_ged`] keeps the full (m+1)x(n+1) table and
//! backtracks an optimal matching, [`exact_ged_cost`] keeps two rows and
//! returns only the cost, and [`banded_ged`] fills just the diagonals within
//! half-width `k` of the end-to-end diagonal, which is exact whenever the
//! true cost is at most `k` gap units.

use crate::cost::{matching_cost, CostModel, GedMeta, GedResult};
use crate::error::GedError;
use crate::matching::Matching;
use crate::point::PointSequence;

/// Full prefix-cost table, in units of the gap penalty.
#[derive(Debug, Clone)]
pub struct DpMatrix {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl DpMatrix {
    /// Number of rows, |P| + 1.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns, |Q| + 1.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Value at (i, j); i indexes P prefixes, j indexes Q prefixes.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.values[i * self.cols + j] = v;
    }
}

fn check_pair(p: &PointSequence, q: &PointSequence) -> Result<(), GedError> {
    if p.is_empty() || q.is_empty() {
        return Err(GedError::EmptyInput);
    }
    if p.dim() != q.dim() {
        return Err(GedError::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    Ok(())
}

/// Fills the full table for P vs Q under `model`.
pub fn dp_matrix(
    p: &PointSequence,
    q: &PointSequence,
    model: &CostModel,
) -> Result<DpMatrix, GedError> {
    check_pair(p, q)?;
    let (m, n) = (p.len(), q.len());
    let ell = model.gap_penalty();
    let mut dp = DpMatrix {
        rows: m + 1,
        cols: n + 1,
        values: vec![0.0; (m + 1) * (n + 1)],
    };
    for j in 0..=n {
        dp.set(0, j, j as f64);
    }
    for i in 1..=m {
        dp.set(i, 0, i as f64);
        for j in 1..=n {
            let d = p.point(i).dist(q.point(j)) / ell;
            let v = (dp.get(i - 1, j - 1) + d)
                .min(dp.get(i - 1, j) + 1.0)
                .min(dp.get(i, j - 1) + 1.0);
            dp.set(i, j, v);
        }
    }
    Ok(dp)
}

/// Shared backtracking over any table accessor. Ties are broken in favor of
/// matching, then skipping the P point, then skipping the Q point; equality
/// is exact because the stored value is bit-identical to the chosen branch.
fn backtrack_pairs(
    get: impl Fn(usize, usize) -> f64,
    dist_norm: impl Fn(usize, usize) -> f64,
    m: usize,
    n: usize,
) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    let (mut i, mut j) = (m, n);
    while i > 0 || j > 0 {
        let here = get(i, j);
        if i > 0 && j > 0 && here == get(i - 1, j - 1) + dist_norm(i, j) {
            pairs.push((i, j));
            i -= 1;
            j -= 1;
        } else if i > 0 && here == get(i - 1, j) + 1.0 {
            i -= 1;
        } else {
            debug_assert!(j > 0 && here == get(i, j - 1) + 1.0);
            j -= 1;
        }
    }
    pairs.reverse();
    pairs
}

/// Exact distance with an optimal matching, from the full table.
pub fn exact_ged(
    p: &PointSequence,
    q: &PointSequence,
    model: &CostModel,
) -> Result<GedResult, GedError> {
    let dp = dp_matrix(p, q, model)?;
    let ell = model.gap_penalty();
    let pairs = backtrack_pairs(
        |i, j| dp.get(i, j),
        |i, j| p.point(i).dist(q.point(j)) / ell,
        p.len(),
        q.len(),
    );
    let matching = Matching::new(pairs);
    let cost = matching_cost(p, q, &matching, model)?;
    Ok(GedResult {
        cost,
        matching,
        meta: GedMeta {
            algorithm: "exact",
            ..GedMeta::default()
        },
    })
}

/// Exact cost only, with two-row storage. Suitable for large inputs where
/// the full table would not fit.
pub fn exact_ged_cost(
    p: &PointSequence,
    q: &PointSequence,
    model: &CostModel,
) -> Result<f64, GedError> {
    check_pair(p, q)?;
    let (m, n) = (p.len(), q.len());
    let ell = model.gap_penalty();
    let mut prev: Vec<f64> = (0..=n).map(|j| j as f64).collect();
    let mut cur = vec![0.0; n + 1];
    for i in 1..=m {
        cur[0] = i as f64;
        for j in 1..=n {
            let d = p.point(i).dist(q.point(j)) / ell;
            cur[j] = (prev[j - 1] + d).min(prev[j] + 1.0).min(cur[j - 1] + 1.0);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[n] * ell)
}

/// Result of the banded computation: either the exact result (the optimum
/// fits in the band) or a report that the band was exceeded.
#[derive(Debug, Clone, PartialEq)]
pub enum BandedOutcome {
    Within(GedResult),
    Exceeded,
}

impl BandedOutcome {
    pub fn result(&self) -> Option<&GedResult> {
        match self {
            BandedOutcome::Within(r) => Some(r),
            BandedOutcome::Exceeded => None,
        }
    }

    pub fn is_exceeded(&self) -> bool {
        matches!(self, BandedOutcome::Exceeded)
    }
}

/// Fills only the cells whose diagonal j - i lies within `k` of the
/// end-to-end diagonal |Q| - |P|, in O((m+n)k) time and space.
///
/// Any alignment of cost at most `k` gap units stays inside that band, so a
/// final value at most `k` is the exact distance and is returned with its
/// matching. A larger value only proves the distance exceeds `k`, so
/// [`BandedOutcome::Exceeded`] is reported instead of a possibly inflated
/// number.
pub fn banded_ged(
    p: &PointSequence,
    q: &PointSequence,
    k: usize,
    model: &CostModel,
) -> Result<BandedOutcome, GedError> {
    if k < 1 {
        return Err(GedError::InvalidBand { got: k });
    }
    check_pair(p, q)?;
    let (m, n) = (p.len(), q.len());
    // at least |n - m| points are unmatched in any alignment
    if n.abs_diff(m) > k {
        return Ok(BandedOutcome::Exceeded);
    }
    let ell = model.gap_penalty();
    let center = n as i64 - m as i64;
    let ki = k as i64;
    let width = 2 * k + 1;
    let mut values = vec![f64::INFINITY; (m + 1) * width];
    // cell (i, j) lives at offset j - (i + center - k) within row i
    let slot = |i: usize, j: usize| -> Option<usize> {
        let t = j as i64 - (i as i64 + center - ki);
        (0..width as i64).contains(&t).then(|| i * width + t as usize)
    };
    let get = |values: &[f64], i: usize, j: usize| -> f64 {
        match slot(i, j) {
            Some(s) => values[s],
            None => f64::INFINITY,
        }
    };
    for i in 0..=m {
        let lo = (i as i64 + center - ki).max(0) as usize;
        let hi = ((i as i64 + center + ki) as usize).min(n);
        for j in lo..=hi {
            let v = if i == 0 && j == 0 {
                0.0
            } else {
                let mut v = f64::INFINITY;
                if i > 0 && j > 0 {
                    let d = p.point(i).dist(q.point(j)) / ell;
                    v = v.min(get(&values, i - 1, j - 1) + d);
                }
                if i > 0 {
                    v = v.min(get(&values, i - 1, j) + 1.0);
                }
                if j > 0 {
                    v = v.min(get(&values, i, j - 1) + 1.0);
                }
                v
            };
            values[slot(i, j).expect("cell in band")] = v;
        }
    }
    let final_value = get(&values, m, n);
    if final_value > k as f64 {
        return Ok(BandedOutcome::Exceeded);
    }
    let pairs = backtrack_pairs(
        |i, j| get(&values, i, j),
        |i, j| p.point(i).dist(q.point(j)) / ell,
        m,
        n,
    );
    let matching = Matching::new(pairs);
    let cost = matching_cost(p, q, &matching, model)?;
    Ok(BandedOutcome::Within(GedResult {
        cost,
        matching,
        meta: GedMeta {
            algorithm: "banded",
            ..GedMeta::default()
        },
    }))
}
