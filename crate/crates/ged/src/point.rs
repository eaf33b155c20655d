//! Points and point sequences.

use crate::error::GedError;

/// A point in d-dimensional Euclidean space. Coordinates are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    /// Builds a point, rejecting empty coordinate lists and non-finite values.
    pub fn new(coords: Vec<f64>) -> Result<Self, GedError> {
        if coords.is_empty() {
            return Err(GedError::EmptyPoint);
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(GedError::NonFiniteCoordinate { index });
        }
        Ok(Point { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Euclidean distance to another point of the same dimension.
    pub fn dist(&self, other: &Point) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

/// An ordered sequence of points sharing one dimension.
///
/// Positions are 1-based everywhere in the public API: the i-th point of a
/// sequence of length n has index i in 1..=n.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSequence {
    points: Vec<Point>,
    dim: usize,
}

impl PointSequence {
    /// Wraps points after checking they all share one dimension. An empty
    /// sequence is representable; the distance algorithms reject it at entry.
    pub fn new(points: Vec<Point>) -> Result<Self, GedError> {
        let dim = points.first().map_or(0, Point::dim);
        for p in &points {
            if p.dim() != dim {
                return Err(GedError::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        Ok(PointSequence { points, dim })
    }

    /// Convenience constructor from raw coordinate rows.
    pub fn from_coords(rows: Vec<Vec<f64>>) -> Result<Self, GedError> {
        let points = rows.into_iter().map(Point::new).collect::<Result<_, _>>()?;
        Self::new(points)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Dimension shared by all points; 0 for the empty sequence.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// 1-based access; panics when i is 0 or past the end.
    pub fn point(&self, i: usize) -> &Point {
        &self.points[i - 1]
    }

    /// Copy with every coordinate multiplied by `factor`. Used to normalize
    /// the gap penalty to 1 before running the randomized algorithms.
    pub(crate) fn scaled(&self, factor: f64) -> PointSequence {
        let points = self
            .points
            .iter()
            .map(|p| Point {
                coords: p.coords.iter().map(|c| c * factor).collect(),
            })
            .collect();
        PointSequence {
            points,
            dim: self.dim,
        }
    }
}
