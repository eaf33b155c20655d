//! Geometric edit distance between point sequences.
//!
//! Two sequences of d-dimensional points are compared through a monotone
//! matching: an order-respecting set of index pairs with distinct endpoints.
//! A matching costs the sum of Euclidean distances between matched points
//! plus a fixed gap penalty for every unmatched point on either side. The
//! geometric edit distance is the cheapest such cost.
//!
//! The crate provides three routes to it:
//!
//! - [`exact_ged`] / [`banded_ged`]: the quadratic dynamic program, in full
//!   (with backtracking) or restricted to a diagonal band of half-width `k`
//!   (exact whenever the distance is at most `k`).
//! - [`ged_sqrt_approx`]: a randomized near-linear algorithm. It guesses the
//!   cost in powers of two, rounds points to the cells of a randomly shifted
//!   grid, and decides each guess with an insertion/deletion-only string
//!   edit distance ([`sed_decide`]) over the cell labels.
//! - [`ged_alpha_approx`]: the same guessing scheme with a tunable accuracy
//!   knob `alpha`, deciding each guess directly on grid-snapped points with
//!   a distance-budgeted wave relaxation ([`aged`]).
//!
//! Both randomized algorithms return an explicit matching re-costed on the
//! original points, so their output is a certified upper bound. All
//! randomness is seeded and results are reproducible; the repeated trials
//! inside the approximations run in parallel without affecting the outcome.
//!
//! Indices in matchings and reports are 1-based. Costs are reported in the
//! input scale; internally the algorithms normalize so one gap costs 1.

mod error;

pub mod aged;
pub mod approx;
pub mod cost;
pub mod exact;
pub mod grid;
pub mod lcp;
pub mod matching;
pub mod point;
pub mod sed;

pub use aged::{aged, aged_with_stats, label_matrix, AgedStats, LabelMatrix, LABEL_MATRIX_CAP};
pub use approx::{alpha_recommended_range, ged_alpha_approx, ged_sqrt_approx, ApproxParams};
pub use cost::{matching_cost, CostModel, GedMeta, GedResult};
pub use error::GedError;
pub use exact::{banded_ged, dp_matrix, exact_ged, exact_ged_cost, BandedOutcome, DpMatrix};
pub use grid::{snap_sequence, CellId, GridConfig, SnappedSequence};
pub use lcp::LcpIndex;
pub use matching::{validate_matching, Matching, MatchingViolations, Violation};
pub use point::{Point, PointSequence};
pub use sed::{dense_codes, sed_decide, IntString};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, GedError>;
