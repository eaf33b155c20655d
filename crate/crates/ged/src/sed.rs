//! Insertion/deletion-only string edit distance, decided wave by wave.
//!
//! The distance between integer strings S (length m) and T (length n) is
//! m + n − 2·|M| over the best monotone matching M of equal symbols — the
//! classic indel distance. [`sed_decide`] answers "is it at most k?" in
//! O(k²) frontier cells plus O((m+n) log (m+n)) preprocessing: wave e
//! stores, per diagonal h = j − i, the furthest row reachable with e
//! unmatched symbols, and each slide along a diagonal is one
//! longest-common-prefix query instead of a symbol-by-symbol walk.
//!
//! Frontiers live on a virtually unbounded grid: rows may run past the
//! real string ends, where no symbol ever matches, so slides stop at the
//! true boundaries by themselves. Walking off the edge costs at least as
//! much as staying inside it, hence the first wave whose target-diagonal
//! frontier reaches row m equals the exact distance, and backtracking
//! that wave yields an optimal matching.

use std::collections::HashMap;

use crate::grid::CellId;
use crate::lcp::LcpIndex;
use crate::matching::Matching;

/// A string over a dense integer alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntString {
    symbols: Vec<u32>,
}

impl IntString {
    pub fn new(symbols: Vec<u32>) -> Self {
        IntString { symbols }
    }

    /// Byte-per-symbol convenience constructor.
    pub fn from_text(text: &str) -> Self {
        IntString {
            symbols: text.bytes().map(u32::from).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// 1-based symbol access.
    pub fn symbol(&self, i: usize) -> u32 {
        self.symbols[i - 1]
    }
}

/// Relabel two cell sequences over a shared dense alphabet 0..σ.
///
/// Codes are assigned in first-appearance order scanning `left` then
/// `right`, so the result is deterministic. Returns both strings and the
/// alphabet size σ.
pub fn dense_codes(left: &[CellId], right: &[CellId]) -> (IntString, IntString, u32) {
    fn encode<'a>(
        table: &mut HashMap<&'a CellId, u32>,
        next: &mut u32,
        cells: &'a [CellId],
    ) -> Vec<u32> {
        cells
            .iter()
            .map(|cell| {
                *table.entry(cell).or_insert_with(|| {
                    let code = *next;
                    *next += 1;
                    code
                })
            })
            .collect()
    }
    let mut table = HashMap::new();
    let mut next = 0u32;
    let l = encode(&mut table, &mut next, left);
    let r = encode(&mut table, &mut next, right);
    (IntString::new(l), IntString::new(r), next)
}

/// Which neighbouring diagonal a wave cell was entered from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Pred {
    /// Entered from diagonal h−1: one T symbol left unmatched.
    FromLeft,
    /// Entered from diagonal h+1: one S symbol left unmatched.
    FromRight,
    /// Wave origin; backtracking stops here.
    Boundary,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct WaveCell {
    /// Furthest row reached on this diagonal (after the slide).
    pub l: i64,
    /// Row at which the diagonal was entered, before the slide.
    pub start: i64,
    pub pred: Pred,
}

/// Per-wave frontier storage; wave e holds diagonals −e, −e+2, …, e.
pub(crate) struct WaveTable {
    waves: Vec<Vec<WaveCell>>,
}

impl WaveTable {
    pub fn new() -> Self {
        WaveTable { waves: Vec::new() }
    }

    pub fn cell(&self, h: i64, e: usize) -> &WaveCell {
        debug_assert!(h.unsigned_abs() as usize <= e && (h + e as i64) % 2 == 0);
        &self.waves[e][((h + e as i64) / 2) as usize]
    }

    pub fn frontier(&self, h: i64, e: usize) -> i64 {
        self.cell(h, e).l
    }

    pub fn push_wave(&mut self, wave: Vec<WaveCell>) {
        debug_assert_eq!(wave.len(), self.waves.len() + 1);
        self.waves.push(wave);
    }

    pub fn waves_computed(&self) -> usize {
        self.waves.len()
    }
}

/// Entry row and predecessor for diagonal h on wave e.
///
/// Edge diagonals have a single feasible predecessor; interior cells take
/// the further of the two, preferring the S-skip on ties.
pub(crate) fn wave_entry(table: &WaveTable, h: i64, e: usize) -> (i64, Pred) {
    if e == 0 {
        return (0, Pred::Boundary);
    }
    let ei = e as i64;
    if h == -ei {
        (table.frontier(h + 1, e - 1) + 1, Pred::FromRight)
    } else if h == ei {
        (table.frontier(h - 1, e - 1), Pred::FromLeft)
    } else {
        let left = table.frontier(h - 1, e - 1);
        let right = table.frontier(h + 1, e - 1) + 1;
        if right >= left {
            (right, Pred::FromRight)
        } else {
            (left, Pred::FromLeft)
        }
    }
}

/// Reconstruct the matched pairs from a successful wave cell.
///
/// Every emitted pair lies on a slide, so both indices are within the
/// real strings even when the surrounding walk strayed past their ends.
pub(crate) fn backtrack_waves(table: &WaveTable, start_h: i64, start_e: usize) -> Matching {
    let mut h = start_h;
    let mut e = start_e;
    let mut row = table.cell(h, e).l;
    let mut pairs = Vec::new();
    loop {
        let cell = table.cell(h, e);
        let mut r = row;
        while r > cell.start {
            pairs.push((r as usize, (r + h) as usize));
            r -= 1;
        }
        match cell.pred {
            Pred::Boundary => break,
            Pred::FromRight => {
                row = cell.start - 1;
                h += 1;
                e -= 1;
            }
            Pred::FromLeft => {
                row = cell.start;
                h -= 1;
                e -= 1;
            }
        }
    }
    pairs.reverse();
    Matching::new(pairs)
}

/// Decide whether the indel distance between `s` and `t` is at most `k`.
///
/// Returns a cost-minimal matching of equal symbols when it is, `None`
/// when it is not. The work is O(k²) cells; each cell costs one LCP
/// query.
pub fn sed_decide(s: &IntString, t: &IntString, k: usize) -> Option<Matching> {
    let m = s.len() as i64;
    let n = t.len() as i64;
    let target = n - m;
    if target.unsigned_abs() as usize > k {
        return None;
    }
    let index = LcpIndex::new(s, t);
    let mut table = WaveTable::new();
    for e in 0..=k {
        let ei = e as i64;
        let mut wave = Vec::with_capacity(e + 1);
        let mut h = -ei;
        while h <= ei {
            let (start, pred) = wave_entry(&table, h, e);
            let l = start + index.lcp((start + 1) as usize, (start + h + 1) as usize) as i64;
            wave.push(WaveCell { l, start, pred });
            h += 2;
        }
        table.push_wave(wave);
        if target.abs() <= ei && (target + ei) % 2 == 0 && table.frontier(target, e) >= m {
            return Some(backtrack_waves(&table, target, e));
        }
    }
    None
}
