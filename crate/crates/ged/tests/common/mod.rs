//! Independent oracles and instance generators for the acceptance suite.
//!
//! The oracles re-derive answers by explicit enumeration or by textbook
//! quadratic programs that share no code with the library, so a disagreement
//! always points at the implementation under test.

use ged::{CostModel, PointSequence};
use rand::rngs::StdRng;
use rand::Rng;

/// Minimum geometric edit cost over every monotone matching, by exhaustive
/// enumeration. Each matching is visited exactly once (pairs are chosen in
/// strictly increasing index order on both sides), so this is feasible up to
/// about ten points per side.
pub fn enumerated_ged(p: &PointSequence, q: &PointSequence, model: &CostModel) -> f64 {
    fn extend(
        dist: &[Vec<f64>],
        cols: usize,
        ell: f64,
        total: usize,
        from_i: usize,
        from_j: usize,
        matched: usize,
        acc: f64,
        best: &mut f64,
    ) {
        // The pair set built so far is itself a complete monotone matching.
        let cost = acc + ell * (total - 2 * matched) as f64;
        if cost < *best {
            *best = cost;
        }
        for i in from_i..dist.len() {
            for j in from_j..cols {
                extend(dist, cols, ell, total, i + 1, j + 1, matched + 1, acc + dist[i][j], best);
            }
        }
    }

    let dist: Vec<Vec<f64>> = (1..=p.len())
        .map(|i| (1..=q.len()).map(|j| p.point(i).dist(q.point(j))).collect())
        .collect();
    let mut best = f64::INFINITY;
    extend(
        &dist,
        q.len(),
        model.gap_penalty(),
        p.len() + q.len(),
        0,
        0,
        0,
        0.0,
        &mut best,
    );
    best
}

/// Insert/delete-only string edit distance by the quadratic two-row DP.
pub fn indel_distance(s: &[u32], t: &[u32]) -> usize {
    let n = t.len();
    let mut prev: Vec<usize> = (0..=n).collect();
    let mut cur = vec![0usize; n + 1];
    for (i, &a) in s.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &b) in t.iter().enumerate() {
            let mut best = (prev[j + 1] + 1).min(cur[j] + 1);
            if a == b {
                best = best.min(prev[j]);
            }
            cur[j + 1] = best;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[n]
}

/// Full insert/delete DP table, for checking structural properties of the
/// distance function itself.
pub fn indel_table(s: &[u32], t: &[u32]) -> Vec<Vec<usize>> {
    let (m, n) = (s.len(), t.len());
    let mut d = vec![vec![0usize; n + 1]; m + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for j in 0..=n {
        d[0][j] = j;
    }
    for i in 1..=m {
        for j in 1..=n {
            let mut best = (d[i - 1][j] + 1).min(d[i][j - 1] + 1);
            if s[i - 1] == t[j - 1] {
                best = best.min(d[i - 1][j - 1]);
            }
            d[i][j] = best;
        }
    }
    d
}

/// Longest common prefix of S[i..] and T[j..] by direct comparison, with the
/// same 1-based indexing and out-of-range convention as `LcpIndex::lcp`.
pub fn naive_lcp(s: &[u32], t: &[u32], i: usize, j: usize) -> usize {
    if i == 0 || j == 0 || i > s.len() || j > t.len() {
        return 0;
    }
    s[i - 1..]
        .iter()
        .zip(&t[j - 1..])
        .take_while(|(a, b)| a == b)
        .count()
}

/// Points drawn independently and uniformly from a centred box.
pub fn uniform_points(rng: &mut StdRng, len: usize, dim: usize, spread: f64) -> PointSequence {
    let rows = (0..len)
        .map(|_| (0..dim).map(|_| rng.random_range(-spread..spread)).collect())
        .collect();
    PointSequence::from_coords(rows).unwrap()
}

/// A random walk: consecutive points differ by at most `step` per axis.
pub fn random_walk(rng: &mut StdRng, len: usize, dim: usize, step: f64) -> PointSequence {
    let mut here = vec![0.0f64; dim];
    let rows = (0..len)
        .map(|_| {
            for c in here.iter_mut() {
                *c += rng.random_range(-step..step);
            }
            here.clone()
        })
        .collect();
    PointSequence::from_coords(rows).unwrap()
}

/// Copy of `base` with every coordinate nudged by at most `amplitude`.
pub fn jittered_copy(rng: &mut StdRng, base: &PointSequence, amplitude: f64) -> PointSequence {
    let rows = base
        .points()
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|&c| c + rng.random_range(-amplitude..amplitude))
                .collect()
        })
        .collect();
    PointSequence::from_coords(rows).unwrap()
}

/// Equal-length pair with a planted near-identity matching: Q is a jittered
/// copy of a random walk P, with `outliers` points thrown far off so the
/// optimum must leave them unmatched.
pub fn planted_pair(
    rng: &mut StdRng,
    n: usize,
    jitter: f64,
    outliers: usize,
) -> (PointSequence, PointSequence) {
    let p = random_walk(rng, n, 2, 0.5);
    let mut rows: Vec<Vec<f64>> = jittered_copy(rng, &p, jitter)
        .points()
        .iter()
        .map(|pt| pt.coords().to_vec())
        .collect();
    for _ in 0..outliers {
        let at = rng.random_range(0..n);
        for c in rows[at].iter_mut() {
            *c += rng.random_range(50.0..90.0);
        }
    }
    (p, PointSequence::from_coords(rows).unwrap())
}

/// Random integer string over an alphabet of `sigma` symbols.
pub fn random_symbols(rng: &mut StdRng, len: usize, sigma: u32) -> Vec<u32> {
    (0..len).map(|_| rng.random_range(0..sigma)).collect()
}

/// Copy of `base` after `edits` random single-symbol insertions/deletions,
/// so the true insert/delete distance stays small and known-ish.
pub fn mutated_symbols(rng: &mut StdRng, base: &[u32], sigma: u32, edits: usize) -> Vec<u32> {
    let mut out = base.to_vec();
    for _ in 0..edits {
        if !out.is_empty() && rng.random::<bool>() {
            let at = rng.random_range(0..out.len());
            out.remove(at);
        } else {
            let at = rng.random_range(0..=out.len());
            out.insert(at, rng.random_range(0..sigma));
        }
    }
    out
}

/// Checks the raw shape of a matching over two sequences of the given
/// lengths: 1-based indices in range, strictly increasing on both sides.
pub fn assert_monotone(pairs: &[(usize, usize)], m: usize, n: usize) {
    for &(i, j) in pairs {
        assert!(
            (1..=m).contains(&i) && (1..=n).contains(&j),
            "pair ({i},{j}) out of range for lengths {m}/{n}"
        );
    }
    for w in pairs.windows(2) {
        assert!(
            w[0].0 < w[1].0 && w[0].1 < w[1].1,
            "pairs {:?} and {:?} are not strictly increasing",
            w[0],
            w[1]
        );
    }
}
