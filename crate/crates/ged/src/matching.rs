//! Monotone matchings and their validation.

use std::fmt;

use crate::point::PointSequence;

/// A set of 1-based index pairs matching points of a left sequence to points
/// of a right sequence. Stored in canonical order (sorted by left index,
/// then right index) and immutable after construction.
///
/// A matching is valid for sequences P, Q when every pair (i, j) satisfies
/// 1 <= i <= |P| and 1 <= j <= |Q|, no index repeats on either side, and the
/// pairs respect order: i < i' implies j < j'.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching from pairs in any order; they are sorted
    /// canonically. Validity is checked separately by [`validate_matching`].
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        Matching { pairs }
    }

    /// The matching with no pairs: every point is a gap.
    pub fn empty() -> Self {
        Matching { pairs: Vec::new() }
    }

    /// Pairs in canonical order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// One structural defect in a candidate matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An index is 0 or exceeds its sequence length.
    OutOfRange { pair: (usize, usize) },
    /// The same left index appears in two pairs.
    RepeatedLeft { index: usize },
    /// The same right index appears in two pairs.
    RepeatedRight { index: usize },
    /// Consecutive pairs in canonical order cross: i < i' but j >= j'.
    OrderInversion {
        earlier: (usize, usize),
        later: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { pair } => {
                write!(f, "pair ({}, {}) is out of range", pair.0, pair.1)
            }
            Violation::RepeatedLeft { index } => {
                write!(f, "left index {index} is matched twice")
            }
            Violation::RepeatedRight { index } => {
                write!(f, "right index {index} is matched twice")
            }
            Violation::OrderInversion { earlier, later } => write!(
                f,
                "pairs ({}, {}) and ({}, {}) cross",
                earlier.0, earlier.1, later.0, later.1
            ),
        }
    }
}

/// Every violation found in a matching, in one report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingViolations {
    pub violations: Vec<Violation>,
}

impl fmt::Display for MatchingViolations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid matching: ")?;
        for (t, v) in self.violations.iter().enumerate() {
            if t > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for MatchingViolations {}

/// Checks a matching against the two sequences it refers to. Collects every
/// violated constraint rather than stopping at the first.
pub fn validate_matching(
    p: &PointSequence,
    q: &PointSequence,
    m: &Matching,
) -> Result<(), MatchingViolations> {
    validate_lengths(p.len(), q.len(), m)
}

/// Same checks when only the sequence lengths are at hand (strings,
/// snapped cells).
pub(crate) fn validate_lengths(
    left_len: usize,
    right_len: usize,
    m: &Matching,
) -> Result<(), MatchingViolations> {
    let mut violations = Vec::new();
    for &(i, j) in m.pairs() {
        if i == 0 || i > left_len || j == 0 || j > right_len {
            violations.push(Violation::OutOfRange { pair: (i, j) });
        }
    }
    for w in m.pairs().windows(2) {
        let (a, b) = (w[0], w[1]);
        if a.0 == b.0 {
            violations.push(Violation::RepeatedLeft { index: a.0 });
        } else if a.1 == b.1 {
            violations.push(Violation::RepeatedRight { index: a.1 });
        } else if a.1 > b.1 {
            // canonical order guarantees a.0 < b.0 here
            violations.push(Violation::OrderInversion {
                earlier: a,
                later: b,
            });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(MatchingViolations { violations })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: usize) -> PointSequence {
        PointSequence::from_coords((0..n).map(|i| vec![i as f64]).collect()).unwrap()
    }

    #[test]
    fn canonical_order() {
        let m = Matching::new(vec![(3, 4), (1, 2), (2, 3)]);
        assert_eq!(m.pairs(), &[(1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn accepts_valid_matching() {
        let p = seq(4);
        let q = seq(4);
        let m = Matching::new(vec![(1, 1), (2, 3), (4, 4)]);
        assert!(validate_matching(&p, &q, &m).is_ok());
        assert!(validate_matching(&p, &q, &Matching::empty()).is_ok());
    }

    #[test]
    fn reports_every_violation() {
        let p = seq(3);
        let q = seq(3);
        // out of range, repeated left, and an inversion all at once
        let m = Matching::new(vec![(1, 2), (1, 3), (2, 1), (5, 9)]);
        let report = validate_matching(&p, &q, &m).unwrap_err();
        assert!(report
            .violations
            .contains(&Violation::OutOfRange { pair: (5, 9) }));
        assert!(report
            .violations
            .contains(&Violation::RepeatedLeft { index: 1 }));
        assert!(report.violations.contains(&Violation::OrderInversion {
            earlier: (1, 3),
            later: (2, 1)
        }));
    }

    #[test]
    fn detects_repeated_right() {
        let p = seq(3);
        let q = seq(3);
        let m = Matching::new(vec![(1, 2), (2, 2)]);
        let report = validate_matching(&p, &q, &m).unwrap_err();
        assert_eq!(
            report.violations,
            vec![Violation::RepeatedRight { index: 2 }]
        );
    }
}
