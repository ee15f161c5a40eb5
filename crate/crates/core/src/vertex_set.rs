//! Vertex subsets as 64-bit masks, binomial coefficients and colex ranking.
//!
//! The colex rank of a sorted set `a_1 < a_2 < ... < a_r` is
//! `C(a_1, 1) + C(a_2, 2) + ... + C(a_r, r)`. It does not depend on the size
//! of the ground set, so restricting a hypergraph to a prefix of its vertices
//! keeps every edge at the same rank.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

static BINOM: [[u64; 65]; 65] = {
    let mut t = [[0u64; 65]; 65];
    let mut n = 0;
    while n < 65 {
        t[n][0] = 1;
        let mut r = 1;
        while r <= n {
            // C(64, 32) < 2^63, so nothing here overflows.
            t[n][r] = t[n - 1][r - 1] + if r < n { t[n - 1][r] } else { 0 };
            r += 1;
        }
        n += 1;
    }
    t
};

/// `C(n, r)`, zero when `r > n`.
#[inline]
pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    assert!(n <= 64, "binomial({n}, {r}) outside the precomputed table");
    BINOM[n][r]
}

/// A set of vertices in `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        vs.iter().copied().collect()
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Largest vertex index plus one, or 0 for the empty set.
    pub fn span(self) -> usize {
        self.last().map_or(0, |m| m + 1)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position of `v` among the members of `self` (number of smaller members).
    #[inline]
    pub fn rank_of(self, v: usize) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }

    /// Colex rank among all sets of the same cardinality.
    pub fn colex_rank(self) -> u64 {
        self.iter().enumerate().map(|(i, v)| binomial(v, i + 1)).sum()
    }

    /// Inverse of [`VertexSet::colex_rank`] for `r`-element sets.
    pub fn colex_unrank(mut rank: u64, r: usize) -> Self {
        let mut bits = 0u64;
        for i in (1..=r).rev() {
            // largest v with C(v, i) <= rank
            let mut v = i - 1;
            while binomial(v + 1, i) <= rank {
                v += 1;
            }
            rank -= binomial(v, i);
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }

    /// All `r`-element subsets of `self`, in colex order.
    pub fn subsets_of_size(self, r: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(self, r)
    }

    /// Every subset of `self`, in increasing order of the underlying mask.
    pub fn all_subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full {
                None
            } else {
                Some((s.wrapping_sub(full)) & full)
            };
            Some(VertexSet(s))
        })
    }

    /// Relabel `self` (a subset of `within`) by rank inside `within`.
    pub fn compress(self, within: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (i, v) in within.iter().enumerate() {
            if self.contains(v) {
                out |= 1 << i;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`VertexSet::compress`].
    pub fn expand(self, within: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (i, v) in within.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << v;
            }
        }
        VertexSet(out)
    }

    /// Checks every member is below `n`.
    pub fn check_range(self, n: usize) -> Result<()> {
        match self.last() {
            Some(m) if m >= n => Err(Error::VertexOutOfRange { vertex: m, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |acc, v| acc | 1u64 << v))
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(VertexSet::from_slice(&v))
    }
}

/// Members of a [`VertexSet`] in increasing order.
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

/// Fixed-size subsets of a ground set, colex order.
pub struct SubsetsOfSize {
    ground: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl SubsetsOfSize {
    fn new(ground: VertexSet, r: usize) -> Self {
        let ground = ground.to_vec();
        let done = r > ground.len();
        SubsetsOfSize {
            idx: (0..r).collect(),
            ground,
            done,
        }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out: VertexSet = self.idx.iter().map(|&i| self.ground[i]).collect();
        // colex successor on index tuples
        let r = self.idx.len();
        let mut j = 0;
        loop {
            if j == r {
                self.done = true;
                break;
            }
            let limit = if j + 1 < r { self.idx[j + 1] } else { self.ground.len() };
            if self.idx[j] + 1 < limit {
                self.idx[j] += 1;
                for (i, slot) in self.idx.iter_mut().enumerate().take(j) {
                    *slot = i;
                }
                break;
            }
            j += 1;
        }
        Some(out)
    }
}
