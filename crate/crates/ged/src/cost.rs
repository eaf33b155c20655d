//! Cost model and matching cost evaluation.

use crate::error::GedError;
use crate::matching::{validate_matching, Matching};
use crate::point::PointSequence;

/// Cost parameters: every unmatched point costs `gap_penalty`, every matched
/// pair costs the Euclidean distance between its points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostModel {
    gap_penalty: f64,
}

impl CostModel {
    pub fn new(gap_penalty: f64) -> Result<Self, GedError> {
        if !(gap_penalty.is_finite() && gap_penalty > 0.0) {
            return Err(GedError::InvalidGapPenalty { value: gap_penalty });
        }
        Ok(CostModel { gap_penalty })
    }

    pub fn gap_penalty(&self) -> f64 {
        self.gap_penalty
    }
}

impl Default for CostModel {
    /// Unit gap penalty.
    fn default() -> Self {
        CostModel { gap_penalty: 1.0 }
    }
}

/// Total cost of a matching between P and Q: matched distances plus the gap
/// penalty times the number of unmatched points. Validates the matching
/// first and returns a structured report when it is malformed.
pub fn matching_cost(
    p: &PointSequence,
    q: &PointSequence,
    m: &Matching,
    model: &CostModel,
) -> Result<f64, GedError> {
    if !p.is_empty() && !q.is_empty() && p.dim() != q.dim() {
        return Err(GedError::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    validate_matching(p, q, m)?;
    let matched: f64 = m
        .pairs()
        .iter()
        .map(|&(i, j)| p.point(i).dist(q.point(j)))
        .sum();
    let gaps = (p.len() + q.len() - 2 * m.len()) as f64;
    Ok(matched + model.gap_penalty * gaps)
}

/// A computed distance: the cost, a matching realizing it, and bookkeeping
/// about how it was produced. `cost` always equals the matching's cost under
/// the model the algorithm ran with.
#[derive(Debug, Clone, PartialEq)]
pub struct GedResult {
    pub cost: f64,
    pub matching: Matching,
    pub meta: GedMeta,
}

/// Provenance attached to a result.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GedMeta {
    /// Which algorithm produced the result.
    pub algorithm: &'static str,
    /// Seed of the randomized run, if any.
    pub seed: Option<u64>,
    /// Accepted guess of the normalized cost (randomized algorithms only).
    pub guess: Option<f64>,
    /// Repetition index at which the accepted guess succeeded.
    pub iteration: Option<u32>,
}
