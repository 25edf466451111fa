//! Partitions and tableau-counting brute force.
//!
//! Everything here enumerates explicit combinatorial objects (partitions,
//! hook lengths, semistandard fillings, contingency tables). These are the
//! independent yardsticks the polytope machinery is measured against, so
//! none of it touches the counting engine.

use crate::arith::Int;

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u64>);

impl Partition {
    /// Build from any weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<u64>>) -> Self {
        let mut parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Part at `i`, zero beyond the end.
    pub fn part(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Zero-padded copy of the parts.
    pub fn padded(&self, len: usize) -> Vec<u64> {
        assert!(len >= self.len(), "padding shorter than the partition");
        let mut v = self.0.clone();
        v.resize(len, 0);
        v
    }

    /// Containment of Young diagrams (`self` fits inside `other`).
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.0.iter().filter(|&&p| p > c as u64).count() as u64)
            .collect::<Vec<_>>();
        Partition(parts)
    }

    /// Multiset of hook lengths of the diagram.
    pub fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut hooks = Vec::new();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u64 - 1;
                let leg = conj.part(j) - i as u64 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// No hook length divisible by `a`.
    pub fn is_core(&self, a: u64) -> bool {
        self.hook_lengths().iter().all(|h| h % a != 0)
    }
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u64> = Vec::new();
    fn go(rem: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        let top = max.min(rem);
        for p in (1..=top).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    go(n, n, &mut cur, &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts.
pub fn partitions_of_bounded(n: u64, max_len: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

/// Weak compositions of `n` into exactly `k` parts.
pub fn compositions(n: u64, k: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; k];
    fn go(pos: usize, rem: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if pos + 1 == cur.len() {
            cur[pos] = rem;
            out.push(cur.clone());
            return;
        }
        for v in 0..=rem {
            cur[pos] = v;
            go(pos + 1, rem - v, cur, out);
        }
    }
    if k == 0 {
        if n == 0 {
            out.push(vec![]);
        }
        return out;
    }
    go(0, n, &mut cur, &mut out);
    out
}

/// Count semistandard fillings of the skew shape `outer/inner` with exactly
/// `content[i]` entries equal to `i + 1`. Rows weakly increase, columns
/// strictly increase; cells missing from `inner` impose no constraints.
/// When `ballot` is set, only fillings whose reverse reading word is a
/// lattice word are counted (the Littlewood-Richardson tableaux).
fn skew_fillings(outer: &Partition, inner: &Partition, content: &[u64], ballot: bool) -> Int {
    if !inner.contained_in(outer) {
        return Int::from(0u8);
    }
    if outer.size() - inner.size() != content.iter().sum::<u64>() {
        return Int::from(0u8);
    }
    let rows = outer.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inner.part(r) as usize..outer.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..rows)
        .map(|r| vec![0usize; outer.part(r) as usize])
        .collect();
    let mut remaining: Vec<u64> = content.to_vec();
    let mut count = Int::from(0u8);

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        inner: &Partition,
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<u64>,
        ballot: bool,
        count: &mut Int,
    ) {
        if idx == cells.len() {
            if !ballot || reading_word_is_lattice(grid, inner) {
                *count += 1u8;
            }
            return;
        }
        let (r, c) = cells[idx];
        let min_left = if c > inner.part(r) as usize {
            grid[r][c - 1]
        } else {
            1
        };
        let above_exists = r > 0 && c >= inner.part(r - 1) as usize && c < grid[r - 1].len();
        let min_above = if above_exists { grid[r - 1][c] + 1 } else { 1 };
        let lo = min_left.max(min_above);
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v;
            go(idx + 1, cells, inner, grid, remaining, ballot, count);
            remaining[v - 1] += 1;
        }
        grid[r][c] = 0;
    }

    go(
        0,
        &cells,
        inner,
        &mut grid,
        &mut remaining,
        ballot,
        &mut count,
    );
    count
}

/// Reverse reading word (rows top to bottom, each right to left) is a
/// lattice word: every prefix has at least as many `i` as `i + 1`.
fn reading_word_is_lattice(grid: &[Vec<usize>], inner: &Partition) -> bool {
    let max_entry = grid
        .iter()
        .flat_map(|row| row.iter().copied())
        .max()
        .unwrap_or(0);
    let mut seen = vec![0i64; max_entry + 1];
    for (r, row) in grid.iter().enumerate() {
        for c in (inner.part(r) as usize..row.len()).rev() {
            let v = row[c];
            seen[v - 1] += 1;
            if v >= 2 && seen[v - 2] < seen[v - 1] {
                return false;
            }
        }
    }
    true
}

/// Kostka number `K_{lambda, alpha}` by explicit tableau enumeration.
pub fn kostka_bruteforce(lambda: &Partition, alpha: &[u64]) -> Int {
    skew_fillings(lambda, &Partition::empty(), alpha, false)
}

/// Skew Kostka number `K_{lambda/mu, alpha}`.
pub fn skew_kostka_bruteforce(lambda: &Partition, mu: &Partition, alpha: &[u64]) -> Int {
    skew_fillings(lambda, mu, alpha, false)
}

/// Littlewood-Richardson coefficient `c^{lambda}_{mu, nu}` by enumerating
/// LR skew tableaux of shape `lambda/mu` and content `nu`.
pub fn lr_bruteforce(lambda: &Partition, mu: &Partition, nu: &Partition) -> Int {
    skew_fillings(lambda, mu, nu.parts(), true)
}

/// Number of nonnegative integer matrices with row sums `mu` and column sums
/// `nu`, by direct recursion.
pub fn contingency_bruteforce(mu: &[u64], nu: &[u64]) -> Int {
    if mu.iter().sum::<u64>() != nu.iter().sum::<u64>() {
        return Int::from(0u8);
    }
    fn go(row: usize, mu: &[u64], cols: &mut Vec<u64>) -> Int {
        if row == mu.len() {
            return if cols.iter().all(|&c| c == 0) {
                Int::from(1u8)
            } else {
                Int::from(0u8)
            };
        }
        // Distribute mu[row] over the columns without exceeding their budgets.
        fn dist(j: usize, rem: u64, row: usize, mu: &[u64], cols: &mut Vec<u64>) -> Int {
            if j + 1 == cols.len() {
                if rem <= cols[j] {
                    cols[j] -= rem;
                    let r = go(row + 1, mu, cols);
                    cols[j] += rem;
                    return r;
                }
                return Int::from(0u8);
            }
            let mut acc = Int::from(0u8);
            for v in 0..=rem.min(cols[j]) {
                cols[j] -= v;
                acc += dist(j + 1, rem - v, row, mu, cols);
                cols[j] += v;
            }
            acc
        }
        if cols.is_empty() {
            return if mu[row..].iter().all(|&r| r == 0) {
                Int::from(1u8)
            } else {
                Int::from(0u8)
            };
        }
        dist(0, mu[row], row, mu, cols)
    }
    let mut cols = nu.to_vec();
    go(0, mu, &mut cols)
}
