//! Permutations in one-line notation and the operations of the substitution
//! decomposition: containment, symmetries, intervals, simplicity, sums and
//! inflation.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("empty permutation")]
    Empty,
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("values are not a rearrangement of 1..{0}")]
    NotBijective(usize),
    #[error("skeleton of length {skeleton} needs {skeleton} blocks, got {blocks}")]
    BlockCountMismatch { skeleton: usize, blocks: usize },
}

/// A permutation of `1..=n`, `n >= 1`, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotBijective(n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations are non-empty");
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        assert!(n >= 1, "permutations are non-empty");
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    /// The permutation order isomorphic to `seq`, whose entries must be distinct.
    pub fn standardize(seq: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_unstable_by_key(|&i| seq[i]);
        let mut values = vec![0; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank + 1;
        }
        Permutation::from_vec_unchecked(values)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// Value at 0-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i]
    }

    /// 0-based position holding value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.values
            .iter()
            .position(|&x| x == v)
            .expect("value out of range")
    }

    pub fn is_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] > w[1])
    }

    /// Removes the entry at 0-based position `i` and renormalizes, or `None`
    /// when that would leave the empty permutation.
    pub fn delete(&self, i: usize) -> Option<Self> {
        if self.len() == 1 {
            return None;
        }
        let removed = self.values[i];
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Some(Permutation::from_vec_unchecked(values))
    }

    /// Removes the entries at the given 0-based positions.
    pub fn delete_positions(&self, positions: &[usize]) -> Option<Self> {
        let kept: Vec<usize> = self
            .values
            .iter()
            .enumerate()
            .filter(|(j, _)| !positions.contains(j))
            .map(|(_, &v)| v)
            .collect();
        if kept.is_empty() {
            None
        } else {
            Some(Permutation::standardize(&kept))
        }
    }

    /// Inserts the new maximum `n + 1` before 0-based position `i`
    /// (`i == n` appends it).
    pub fn insert_max(&self, i: usize) -> Self {
        let mut values = Vec::with_capacity(self.len() + 1);
        values.extend_from_slice(&self.values[..i]);
        values.push(self.len() + 1);
        values.extend_from_slice(&self.values[i..]);
        Permutation { values }
    }

    /// True iff some subsequence of `self` is order isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if k > self.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        self.embed(pattern, 0, &mut chosen)
    }

    // Backtracking embedding: `chosen` holds the haystack positions matched to
    // the first `chosen.len()` entries of the pattern.
    fn embed(&self, pattern: &Permutation, start: usize, chosen: &mut Vec<usize>) -> bool {
        let j = chosen.len();
        let k = pattern.len();
        if j == k {
            return true;
        }
        let target = pattern.values[j];
        let mut low = 0;
        let mut high = usize::MAX;
        for (t, &pos) in chosen.iter().enumerate() {
            let v = self.values[pos];
            if pattern.values[t] < target {
                low = low.max(v);
            } else {
                high = high.min(v);
            }
        }
        let last = self.len() - (k - j);
        for i in start..=last {
            let v = self.values[i];
            if v > low && v < high {
                chosen.push(i);
                if self.embed(pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn avoids_all<'a, I>(&self, basis: I) -> bool
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        basis.into_iter().all(|b| !self.contains(b))
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Permutation { values }
    }

    pub fn reverse(&self) -> Self {
        Permutation {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn reverse_complement(&self) -> Self {
        self.reverse().complement()
    }

    pub fn apply(&self, op: Symmetry) -> Self {
        let mut p = self.clone();
        if op.inverse {
            p = p.inverse();
        }
        if op.reverse {
            p = p.reverse();
        }
        if op.complement {
            p = p.complement();
        }
        p
    }

    /// Every proper interval of length at least two, as 0-based half-open
    /// position ranges, ordered by start then end.
    pub fn nontrivial_intervals(&self) -> Vec<Range<usize>> {
        let n = self.len();
        let mut out = Vec::new();
        for start in 0..n {
            let mut lo = self.values[start];
            let mut hi = lo;
            for end in start + 1..n {
                lo = lo.min(self.values[end]);
                hi = hi.max(self.values[end]);
                if hi - lo == end - start && end - start + 1 < n {
                    out.push(start..end + 1);
                }
            }
        }
        out
    }

    /// 1, 12 and 21 count as simple; no permutation of length 3 is.
    pub fn is_simple(&self) -> bool {
        self.nontrivial_intervals().is_empty()
    }

    // Smallest k in 1..n such that the first k entries hold the lowest
    // (or highest) k values.
    fn first_cut(&self, skew: bool) -> Option<usize> {
        let n = self.len();
        let mut extreme = 0;
        let mut low = usize::MAX;
        for k in 1..n {
            let v = self.values[k - 1];
            if skew {
                low = low.min(v);
                if low == n - k + 1 {
                    return Some(k);
                }
            } else {
                extreme = extreme.max(v);
                if extreme == k {
                    return Some(k);
                }
            }
        }
        None
    }

    pub fn is_sum_decomposable(&self) -> bool {
        self.first_cut(false).is_some()
    }

    pub fn is_skew_decomposable(&self) -> bool {
        self.first_cut(true).is_some()
    }

    /// `a ⊕ b`: `b` placed above and to the right of `a`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let n = self.len();
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + n));
        Permutation { values }
    }

    /// `a ⊖ b`: `b` placed below and to the right of `a`.
    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let m = other.len();
        let mut values: Vec<usize> = self.values.iter().map(|&v| v + m).collect();
        values.extend_from_slice(&other.values);
        Permutation { values }
    }

    /// Replaces each entry of `self` by an interval order isomorphic to the
    /// matching block.
    pub fn inflate(&self, blocks: &[Permutation]) -> Result<Self, PermError> {
        if blocks.len() != self.len() {
            return Err(PermError::BlockCountMismatch {
                skeleton: self.len(),
                blocks: blocks.len(),
            });
        }
        // offset[v] = number of entries in blocks of skeleton values below v
        let mut offset = vec![0; self.len() + 1];
        let inverse = self.inverse();
        for v in 1..=self.len() {
            let block = &blocks[inverse.values[v - 1] - 1];
            offset[v] = offset[v - 1] + block.len();
        }
        let mut values = Vec::with_capacity(offset[self.len()]);
        for (block, &v) in blocks.iter().zip(&self.values) {
            values.extend(block.values.iter().map(|&b| b + offset[v - 1]));
        }
        Ok(Permutation { values })
    }

    /// The substitution decomposition: the unique simple skeleton together
    /// with its blocks. For skeletons 12 and 21 the first block is sum
    /// (resp. skew) indecomposable.
    pub fn decompose(&self) -> Decomposition {
        let n = self.len();
        if n == 1 {
            return Decomposition {
                skeleton: self.clone(),
                blocks: vec![self.clone()],
            };
        }
        for skew in [false, true] {
            if let Some(k) = self.first_cut(skew) {
                let skeleton = if skew {
                    Permutation::decreasing(2)
                } else {
                    Permutation::identity(2)
                };
                let blocks = vec![
                    Permutation::standardize(&self.values[..k]),
                    Permutation::standardize(&self.values[k..]),
                ];
                return Decomposition { skeleton, blocks };
            }
        }
        // Neither sum nor skew decomposable: the maximal proper intervals
        // partition the positions, and each is the longest proper interval
        // starting at its first position.
        let mut longest_from = vec![1; n];
        for range in self.nontrivial_intervals() {
            let len = range.end - range.start;
            if len > longest_from[range.start] {
                longest_from[range.start] = len;
            }
        }
        let mut blocks = Vec::new();
        let mut representatives = Vec::new();
        let mut start = 0;
        while start < n {
            let end = start + longest_from[start];
            blocks.push(Permutation::standardize(&self.values[start..end]));
            representatives.push(self.values[start]);
            start = end;
        }
        Decomposition {
            skeleton: Permutation::standardize(&representatives),
            blocks,
        }
    }

    /// The four extremal points (leftmost, rightmost, highest, lowest) read
    /// in position order, as a pattern. `None` for length < 4 or when two of
    /// them coincide.
    pub fn extremal_pattern(&self) -> Option<Permutation> {
        let n = self.len();
        if n < 4 {
            return None;
        }
        let mut positions = vec![0, n - 1, self.position_of(n), self.position_of(1)];
        positions.sort_unstable();
        positions.dedup();
        if positions.len() < 4 {
            return None;
        }
        let seq: Vec<usize> = positions.iter().map(|&i| self.values[i]).collect();
        Some(Permutation::standardize(&seq))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts whitespace/comma separated integers, or a run of digits when
    /// every value is a single digit.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PermError::Empty);
        }
        let separated = text.contains(|c: char| c.is_whitespace() || c == ',');
        let values = if separated {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| PermError::MalformedToken(t.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| PermError::MalformedToken(c.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        Permutation::new(values)
    }
}

/// Shorthand for tests and constants: `perm("2413")`, `perm("6 12 11 7")`.
///
/// Panics on malformed input.
pub fn perm(text: &str) -> Permutation {
    text.parse()
        .unwrap_or_else(|e| panic!("bad permutation literal {text:?}: {e}"))
}

/// `skeleton[blocks]` for a simple skeleton.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub skeleton: Permutation,
    pub blocks: Vec<Permutation>,
}

impl Decomposition {
    pub fn inflate(&self) -> Permutation {
        self.skeleton
            .inflate(&self.blocks)
            .expect("decomposition has one block per skeleton entry")
    }
}

/// An element of the symmetry group of the square, written as: optionally
/// invert, then optionally reverse, then optionally complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Symmetry {
    pub inverse: bool,
    pub reverse: bool,
    pub complement: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry::new(false, false, false);
    pub const INVERSE: Symmetry = Symmetry::new(true, false, false);
    pub const REVERSE: Symmetry = Symmetry::new(false, true, false);
    pub const COMPLEMENT: Symmetry = Symmetry::new(false, false, true);
    pub const REVERSE_COMPLEMENT: Symmetry = Symmetry::new(false, true, true);

    pub const fn new(inverse: bool, reverse: bool, complement: bool) -> Self {
        Symmetry {
            inverse,
            reverse,
            complement,
        }
    }

    pub fn all() -> impl Iterator<Item = Symmetry> {
        (0..8u8).map(|bits| Symmetry::new(bits & 1 != 0, bits & 2 != 0, bits & 4 != 0))
    }

    // Signed 2x2 matrix acting on centred plot coordinates.
    fn matrix(self) -> [[i8; 2]; 2] {
        let mut m = if self.inverse {
            [[0, 1], [1, 0]]
        } else {
            [[1, 0], [0, 1]]
        };
        if self.reverse {
            m[0] = [-m[0][0], -m[0][1]];
        }
        if self.complement {
            m[1] = [-m[1][0], -m[1][1]];
        }
        m
    }

    fn from_matrix(m: [[i8; 2]; 2]) -> Self {
        let inverse = m[0][0] == 0;
        let (x, y) = if inverse {
            (m[0][1], m[1][0])
        } else {
            (m[0][0], m[1][1])
        };
        Symmetry::new(inverse, x < 0, y < 0)
    }

    /// The symmetry that applies `self` and then `next`.
    pub fn then(self, next: Symmetry) -> Symmetry {
        let a = self.matrix();
        let b = next.matrix();
        let mut m = [[0i8; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = b[i][0] * a[0][j] + b[i][1] * a[1][j];
            }
        }
        Symmetry::from_matrix(m)
    }
}

/// All permutations of length `n` in lexicographic order.
pub fn permutations_of_length(n: usize) -> Permutations {
    Permutations {
        next: (n >= 1).then(|| (1..=n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        if let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| succ[i] < succ[i + 1])
        {
            let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(current))
    }
}
