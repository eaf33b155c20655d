//! Trajectory file ingestion.
//!
//! Format: one point per line, comma-separated decimal coordinates. Lines
//! starting with '#' and blank lines are skipped; the dimension is inferred
//! from the first data row and enforced on the rest.

use std::path::Path;

use anyhow::{bail, Context, Result};
use ged::PointSequence;

pub fn parse_points(path: &Path) -> Result<PointSequence> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut arity: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut coords = Vec::new();
        for token in line.split(',') {
            let token = token.trim();
            let value: f64 = token.parse().map_err(|_| {
                anyhow::anyhow!("{}:{line_no}: invalid coordinate {token:?}", path.display())
            })?;
            if !value.is_finite() {
                bail!("{}:{line_no}: coordinate {token:?} is not finite", path.display());
            }
            coords.push(value);
        }
        match arity {
            None => arity = Some(coords.len()),
            Some(d) if d != coords.len() => bail!(
                "{}:{line_no}: expected {d} coordinates, found {}",
                path.display(),
                coords.len()
            ),
            Some(_) => {}
        }
        rows.push(coords);
    }
    if rows.is_empty() {
        bail!("{}: no data rows", path.display());
    }
    PointSequence::from_coords(rows)
        .with_context(|| format!("{}: rejected point data", path.display()))
}
