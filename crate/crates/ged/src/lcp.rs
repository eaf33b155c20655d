//! Constant-time longest-common-prefix queries between suffixes of two
//! strings, backed by a suffix array.
//!
//! The two strings are joined with a separator symbol strictly larger than
//! every alphabet code, so no common prefix can run across the boundary. A
//! prefix-doubling suffix array (counting sort per round, O(n log n)), the
//! linear-time LCP array, and a sparse table for range minima turn each
//! query into one range-minimum lookup.

use crate::sed::IntString;

/// Suffix array by prefix doubling; ranks are bucket-sorted each round.
fn suffix_array(s: &[u64]) -> Vec<usize> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut sa: Vec<usize> = (0..n).collect();
    sa.sort_unstable_by_key(|&i| s[i]);
    // ranks start at 1; 0 is reserved for "past the end"
    let mut rank = vec![0usize; n];
    let mut r = 1usize;
    rank[sa[0]] = 1;
    for t in 1..n {
        if s[sa[t]] != s[sa[t - 1]] {
            r += 1;
        }
        rank[sa[t]] = r;
    }
    let mut len = 1usize;
    let mut order = vec![0usize; n];
    let mut new_rank = vec![0usize; n];
    while r < n {
        let second = |i: usize| if i + len < n { rank[i + len] } else { 0 };
        // stable counting sort by the second key, then by the first
        let mut cnt = vec![0usize; r + 1];
        for i in 0..n {
            cnt[second(i)] += 1;
        }
        let mut sum = 0;
        for c in cnt.iter_mut() {
            let here = *c;
            *c = sum;
            sum += here;
        }
        for i in 0..n {
            let key = second(i);
            order[cnt[key]] = i;
            cnt[key] += 1;
        }
        let mut cnt = vec![0usize; r + 1];
        for &i in order.iter() {
            cnt[rank[i]] += 1;
        }
        let mut sum = 0;
        for c in cnt.iter_mut() {
            let here = *c;
            *c = sum;
            sum += here;
        }
        for &i in order.iter() {
            sa[cnt[rank[i]]] = i;
            cnt[rank[i]] += 1;
        }
        let mut nr = 1usize;
        new_rank[sa[0]] = 1;
        for t in 1..n {
            let (a, b) = (sa[t - 1], sa[t]);
            if rank[a] != rank[b] || second(a) != second(b) {
                nr += 1;
            }
            new_rank[sa[t]] = nr;
        }
        std::mem::swap(&mut rank, &mut new_rank);
        r = nr;
        len <<= 1;
    }
    sa
}

/// LCP of lexicographically adjacent suffixes (Kasai's walk).
fn lcp_array(s: &[u64], sa: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut pos = vec![0usize; n];
    for (t, &i) in sa.iter().enumerate() {
        pos[i] = t;
    }
    let mut lcp = vec![0usize; n];
    let mut k = 0usize;
    for i in 0..n {
        if pos[i] == 0 {
            k = 0;
            continue;
        }
        let j = sa[pos[i] - 1];
        while i + k < n && j + k < n && s[i + k] == s[j + k] {
            k += 1;
        }
        lcp[pos[i]] = k;
        k = k.saturating_sub(1);
    }
    lcp
}

/// Static range-minimum structure over a fixed array.
struct SparseTable {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl SparseTable {
    fn new(data: Vec<usize>) -> Self {
        let n = data.len();
        let mut rows = vec![data];
        let mut j = 1usize;
        while n >= (1 << j) {
            let half = 1 << (j - 1);
            let prev = &rows[j - 1];
            let row: Vec<usize> = (0..=n - (1 << j))
                .map(|i| prev[i].min(prev[i + half]))
                .collect();
            rows.push(row);
            j += 1;
        }
        SparseTable { n, rows }
    }

    /// Minimum over the inclusive range [l, r].
    fn min(&self, l: usize, r: usize) -> usize {
        debug_assert!(l <= r && r < self.n);
        let k = (r - l + 1).ilog2() as usize;
        self.rows[k][l].min(self.rows[k][r + 1 - (1 << k)])
    }
}

/// Longest-common-prefix oracle between the suffixes of two strings.
pub struct LcpIndex {
    s_len: usize,
    t_len: usize,
    pos: Vec<usize>,
    table: SparseTable,
}

impl LcpIndex {
    pub fn new(s: &IntString, t: &IntString) -> Self {
        let (m, n) = (s.len(), t.len());
        let sep = s
            .symbols()
            .iter()
            .chain(t.symbols())
            .copied()
            .max()
            .map_or(0u64, |v| v as u64 + 1);
        let mut concat: Vec<u64> = Vec::with_capacity(m + n + 1);
        concat.extend(s.symbols().iter().map(|&c| c as u64));
        concat.push(sep);
        concat.extend(t.symbols().iter().map(|&c| c as u64));
        let sa = suffix_array(&concat);
        let lcp = lcp_array(&concat, &sa);
        let mut pos = vec![0usize; concat.len()];
        for (t, &i) in sa.iter().enumerate() {
            pos[i] = t;
        }
        LcpIndex {
            s_len: m,
            t_len: n,
            pos,
            table: SparseTable::new(lcp),
        }
    }

    /// Length of the longest common prefix of S[i..] and T[j..], with
    /// 1-based start positions. Starts past either end yield 0. The
    /// separator caps every answer at the remaining lengths of both
    /// suffixes.
    pub fn lcp(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 || i > self.s_len || j > self.t_len {
            return 0;
        }
        let a = self.pos[i - 1];
        let b = self.pos[self.s_len + 1 + (j - 1)];
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.table.min(lo + 1, hi)
    }
}
