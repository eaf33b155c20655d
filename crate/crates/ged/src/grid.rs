//! Randomly shifted axis-aligned grids and snapping.
//!
//! A grid is a partition of space into axis-aligned cubes of side `delta`,
//! translated by a random offset drawn uniformly per axis from [0, delta).
//! The random shift is what makes rounding probabilistically safe: two
//! points at distance r land in different cells with probability at most
//! the sum of their per-axis separations divided by delta.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GedError;
use crate::point::{Point, PointSequence};

/// Integer lattice coordinates of one grid cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellId(pub Vec<i64>);

/// A randomly shifted grid: cell size and one offset per axis in [0, delta).
#[derive(Debug, Clone)]
pub struct GridConfig {
    delta: f64,
    offset: Vec<f64>,
    seed: u64,
}

impl PartialEq for GridConfig {
    /// Two grids are the same partition of space when their cell size and
    /// offsets agree; the seed that produced them is bookkeeping.
    fn eq(&self, other: &Self) -> bool {
        self.delta == other.delta && self.offset == other.offset
    }
}

impl GridConfig {
    /// Draws per-axis offsets uniformly from [0, delta) with a seeded
    /// generator. The same (delta, dim, seed) triple always yields the same
    /// grid, on every platform.
    pub fn new(delta: f64, dim: usize, seed: u64) -> Result<Self, GedError> {
        if !(delta.is_finite() && delta > 0.0) {
            return Err(GedError::InvalidDelta { value: delta });
        }
        if dim == 0 {
            return Err(GedError::ZeroDimension);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let offset = (0..dim)
            .map(|_| {
                let b = rng.random::<f64>() * delta;
                // guard the half-open bound against rounding at large delta
                if b >= delta {
                    0.0
                } else {
                    b
                }
            })
            .collect();
        Ok(GridConfig {
            delta,
            offset,
            seed,
        })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn offset(&self) -> &[f64] {
        &self.offset
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn dim(&self) -> usize {
        self.offset.len()
    }

    /// Lattice coordinates of the cell containing `p`: per axis,
    /// floor((x - offset) / delta).
    pub fn cell_of(&self, p: &Point) -> Result<CellId, GedError> {
        if p.dim() != self.dim() {
            return Err(GedError::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        Ok(self.cell_unchecked(p))
    }

    pub(crate) fn cell_unchecked(&self, p: &Point) -> CellId {
        CellId(
            p.coords()
                .iter()
                .zip(&self.offset)
                .map(|(x, b)| ((x - b) / self.delta).floor() as i64)
                .collect(),
        )
    }

    /// Lower-left corner of a cell: offset + delta * lattice coordinates.
    pub fn corner(&self, cell: &CellId) -> Point {
        let coords = cell
            .0
            .iter()
            .zip(&self.offset)
            .map(|(&c, b)| b + self.delta * c as f64)
            .collect();
        Point::new(coords).expect("corner coordinates are finite")
    }
}

/// A sequence snapped to the lower-left corners of its grid cells, keeping
/// the source sequence (index-aligned) and the lattice coordinates.
///
/// Two snapped points are bitwise equal exactly when their cells agree, so
/// zero distance and equal [`CellId`] are interchangeable tests.
#[derive(Debug, Clone)]
pub struct SnappedSequence {
    points: PointSequence,
    cells: Vec<CellId>,
    source: PointSequence,
    grid: GridConfig,
}

impl SnappedSequence {
    /// The snapped points (cell corners).
    pub fn points(&self) -> &PointSequence {
        &self.points
    }

    /// Lattice coordinates, index-aligned with the points.
    pub fn cells(&self) -> &[CellId] {
        &self.cells
    }

    /// The sequence that was snapped.
    pub fn source(&self) -> &PointSequence {
        &self.source
    }

    pub fn grid(&self) -> &GridConfig {
        &self.grid
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points.dim()
    }
}

/// Snaps every point of `seq` to the lower-left corner of its cell.
pub fn snap_sequence(grid: &GridConfig, seq: &PointSequence) -> Result<SnappedSequence, GedError> {
    if seq.is_empty() {
        return Err(GedError::EmptyInput);
    }
    if seq.dim() != grid.dim() {
        return Err(GedError::DimensionMismatch {
            expected: grid.dim(),
            got: seq.dim(),
        });
    }
    let cells: Vec<CellId> = seq.points().iter().map(|p| grid.cell_unchecked(p)).collect();
    let corners: Vec<Point> = cells.iter().map(|c| grid.corner(c)).collect();
    Ok(SnappedSequence {
        points: PointSequence::new(corners).expect("corners share the grid dimension"),
        cells,
        source: seq.clone(),
        grid: grid.clone(),
    })
}
