//! The hypergraph Ramsey numbers `R_s(k)`: the least `n` such that every
//! `s`-coloring of the `(k-1)`-subsets of an `n`-set has a `k`-set whose
//! `k` subsets of size `k-1` all share a color.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::vertex_set::{binomial, VertexSet};

/// Where a table value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    /// `R_s(2) = s + 1` and `R_1(k) = k`.
    ClosedForm,
    /// Established here by exhaustive search over every coloring on
    /// `value - 1` and `value` points. `bound` is the largest `n` searched.
    BruteForced {
        bound: usize,
    },
    /// A literature value that this crate does not re-derive.
    External,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyEntry {
    pub s: usize,
    pub k: usize,
    pub value: Option<usize>,
    pub provenance: Provenance,
}

/// Known values of `R_s(k)`.
#[derive(Clone, Debug)]
pub struct RamseyTable {
    searched: BTreeMap<(usize, usize), RamseyEntry>,
    external: bool,
}

/// Values shipped as external facts; excluded unless enabled.
const EXTERNAL: &[(usize, usize, usize)] = &[(3, 3, 17)];

/// Pairs settled by [`RamseyTable::new`] through exhaustive search.
const BRUTE_FORCED: &[(usize, usize)] = &[(1, 3), (2, 3)];

impl RamseyTable {
    /// Closed forms plus the brute-forced entries, with external values off.
    pub fn new() -> RamseyTable {
        let mut searched = BTreeMap::new();
        for &(s, k) in BRUTE_FORCED {
            let value = brute_force(s, k, 8).expect("small table entries are within reach");
            searched.insert(
                (s, k),
                RamseyEntry {
                    s,
                    k,
                    value: Some(value),
                    provenance: Provenance::BruteForced { bound: value },
                },
            );
        }
        RamseyTable {
            searched,
            external: false,
        }
    }

    /// Also answer with external literature values.
    pub fn with_external(mut self, on: bool) -> RamseyTable {
        self.external = on;
        self
    }

    /// The shared default table.
    pub fn standard() -> &'static RamseyTable {
        static TABLE: OnceLock<RamseyTable> = OnceLock::new();
        TABLE.get_or_init(RamseyTable::new)
    }

    pub fn entry(&self, s: usize, k: usize) -> RamseyEntry {
        let e = |value, provenance| RamseyEntry {
            s,
            k,
            value,
            provenance,
        };
        if s == 0 || k < 2 {
            return e(None, Provenance::Unknown);
        }
        if k == 2 {
            return e(Some(s + 1), Provenance::ClosedForm);
        }
        if let Some(found) = self.searched.get(&(s, k)) {
            return *found;
        }
        if s == 1 {
            return e(Some(k), Provenance::ClosedForm);
        }
        if self.external {
            if let Some(&(_, _, v)) = EXTERNAL.iter().find(|x| x.0 == s && x.1 == k) {
                return e(Some(v), Provenance::External);
            }
        }
        e(None, Provenance::Unknown)
    }

    pub fn get(&self, s: usize, k: usize) -> Option<usize> {
        self.entry(s, k).value
    }

    /// Largest known `R_{s'}(k)` with `s' ≤ s`; a lower bound for `R_s(k)`
    /// since extra colors never help force a monochromatic set.
    pub fn lower_bound(&self, s: usize, k: usize) -> usize {
        (1..=s).filter_map(|t| self.get(t, k)).max().unwrap_or(k)
    }

    /// Every entry the table can answer, in `(s, k)` order, for `s, k ≤ max`.
    pub fn known(&self, max: usize) -> Vec<RamseyEntry> {
        let mut out = Vec::new();
        for k in 2..=max {
            for s in 1..=max {
                let e = self.entry(s, k);
                if e.value.is_some() {
                    out.push(e);
                }
            }
        }
        out
    }
}

impl Default for RamseyTable {
    fn default() -> Self {
        RamseyTable::new()
    }
}

/// `R_s(k)` from the standard table.
pub fn ramsey_number(s: usize, k: usize) -> Option<usize> {
    RamseyTable::standard().get(s, k)
}

/// An `s`-coloring of the `(k-1)`-subsets of `0..n` (indexed by colex rank)
/// with no monochromatic `k`-set, found by trying colorings in lexicographic
/// order. `None` means every coloring has one.
pub fn mono_free_coloring(s: usize, k: usize, n: usize) -> Option<Vec<u8>> {
    assert!(s >= 1 && k >= 2 && s < 256);
    let vars = binomial(n, k - 1) as usize;
    let ksets: Vec<Vec<usize>> = VertexSet::full(n)
        .subsets_of_size(k)
        .map(|e| e.iter().map(|u| e.remove(u).colex_rank() as usize).collect())
        .collect();
    let mono_free = |c: &[u8]| ksets.iter().all(|f| f.iter().any(|&i| c[i] != c[f[0]]));
    let mut c = vec![0u8; vars];
    loop {
        if mono_free(&c) {
            return Some(c);
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == vars {
                return None;
            }
            c[i] += 1;
            if (c[i] as usize) < s {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Smallest `n ≤ max_n` where every `s`-coloring has a monochromatic
/// `k`-set, by exhaustive search. Sizes with more than `2^40` colorings
/// are skipped.
pub fn brute_force(s: usize, k: usize, max_n: usize) -> Option<usize> {
    (k - 1..=max_n).find(|&n| {
        let space = (binomial(n, k - 1) as f64) * (s as f64).log2();
        space <= 40.0 && mono_free_coloring(s, k, n).is_none()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        for s in 1..10 {
            assert_eq!(ramsey_number(s, 2), Some(s + 1));
        }
        assert_eq!(ramsey_number(4, 2), Some(5));
        assert_eq!(ramsey_number(1, 5), Some(5));
        assert_eq!(ramsey_number(0, 3), None);
    }

    #[test]
    fn searched_entries() {
        assert_eq!(ramsey_number(1, 3), Some(3));
        assert_eq!(ramsey_number(2, 3), Some(6));
        let e = RamseyTable::standard().entry(2, 3);
        assert_eq!(e.provenance, Provenance::BruteForced { bound: 6 });
    }

    #[test]
    fn k5_has_a_triangle_free_two_coloring() {
        let c = mono_free_coloring(2, 3, 5).unwrap();
        assert_eq!(c.len(), 10);
        assert!(mono_free_coloring(2, 3, 6).is_none());
    }

    #[test]
    fn external_values_are_opt_in() {
        let t = RamseyTable::new();
        assert_eq!(t.get(3, 3), None);
        let t = t.with_external(true);
        assert_eq!(t.get(3, 3), Some(17));
        assert_eq!(t.entry(3, 3).provenance, Provenance::External);
    }

    #[test]
    fn lower_bounds_are_monotone() {
        let t = RamseyTable::standard();
        assert_eq!(t.lower_bound(5, 3), 6);
        assert_eq!(t.lower_bound(3, 2), 4);
    }
}
