//! Canonical forms for isomorphism classes of small hypergraphs.
//!
//! Vertices are partitioned by an isomorphism-invariant color refinement,
//! and ties are broken by individualizing vertices one at a time. The key is
//! the smallest relabeled edge set over all leaves of that search. An
//! isomorphism maps the leaves of one instance onto the leaves of the other,
//! so equal keys coincide with isomorphism.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::hypergraph::KHypergraph;
use crate::vertex_set::VertexSet;

/// Isomorphism-class key of a [`KHypergraph`].
///
/// `ranks` holds the colex ranks of the edges of the canonical relabeling in
/// decreasing order; comparing these lexicographically compares the edge
/// bitsets as binary numbers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    k: u8,
    n: u8,
    ranks: Vec<u32>,
}

impl CanonicalForm {
    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative.
    pub fn to_hypergraph(&self) -> KHypergraph {
        let k = self.k();
        let edges = self.ranks.iter().map(|&r| VertexSet::colex_unrank(r as u64, k));
        KHypergraph::from_edge_sets(k, self.n(), edges).expect("canonical form of a valid instance")
    }
}

impl fmt::Display for CanonicalForm {
    /// `k<k>n<n>:<hex>` with the hex digits of the canonical edge bitset,
    /// most significant first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k{}n{}:", self.k, self.n)?;
        let slots = crate::vertex_set::binomial(self.n(), self.k()) as usize;
        let digits = slots.div_ceil(4).max(1);
        let mut nibbles = vec![0u8; digits];
        for &r in &self.ranks {
            nibbles[r as usize / 4] |= 1 << (r % 4);
        }
        for d in nibbles.iter().rev() {
            write!(f, "{d:x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn relabeled_ranks(g: &KHypergraph, pos: &[usize], buf: &mut Vec<u32>) {
    buf.clear();
    for e in g.edges() {
        let m: VertexSet = e.iter().map(|v| pos[v]).collect();
        buf.push(m.colex_rank() as u32);
    }
    buf.sort_unstable_by(|a, b| b.cmp(a));
}

/// Refines `color` until stable. New colors are ranks of sorted
/// signatures that start with the old color, so the result does not depend
/// on the labeling and keeps the order of the old classes.
fn refine(incident: &[Vec<VertexSet>], mut color: Vec<u32>) -> Vec<u32> {
    let n = color.len();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(u32, Vec<Vec<u32>>)> = (0..n)
            .map(|v| {
                let mut per_edge: Vec<Vec<u32>> = incident[v]
                    .iter()
                    .map(|e| {
                        let mut c: Vec<u32> = e.remove(v).iter().map(|u| color[u]).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                per_edge.sort_unstable();
                (color[v], per_edge)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<Vec<u32>>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        color = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).expect("present") as u32)
            .collect();
        if sorted.len() == classes {
            return color;
        }
        classes = sorted.len();
    }
}

/// Canonical form plus a labeling `pos` (vertex `v` goes to `pos[v]`) that
/// realizes it.
pub fn canonical_labeling(g: &KHypergraph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let mk = |ranks| CanonicalForm {
        k: g.k() as u8,
        n: n as u8,
        ranks,
    };
    if g.is_edgeless() || g.is_complete() {
        let mut ranks = Vec::new();
        relabeled_ranks(g, &(0..n).collect::<Vec<_>>(), &mut ranks);
        return (mk(ranks), (0..n).collect());
    }
    let mut incident: Vec<Vec<VertexSet>> = vec![Vec::new(); n];
    for e in g.edges() {
        for v in e.iter() {
            incident[v].push(*e);
        }
    }
    let mut search = Search {
        g,
        incident,
        best: None,
        best_pos: Vec::new(),
        buf: Vec::new(),
    };
    search.descend(vec![0; n]);
    let best = search.best.take().expect("at least one labeling");
    (mk(best), search.best_pos)
}

/// Individualization and refinement: the first non-singleton cell (in color
/// order) is split by giving each of its vertices in turn a color of its
/// own. The tree depends only on the isomorphism class, so the smallest
/// leaf is canonical.
struct Search<'a> {
    g: &'a KHypergraph,
    incident: Vec<Vec<VertexSet>>,
    best: Option<Vec<u32>>,
    best_pos: Vec<usize>,
    buf: Vec<u32>,
}

impl Search<'_> {
    fn descend(&mut self, color: Vec<u32>) {
        let color = refine(&self.incident, color);
        let n = color.len();
        let mut size = vec![0usize; n];
        for &c in &color {
            size[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| size[c] > 1) else {
            let pos: Vec<usize> = color.iter().map(|&c| c as usize).collect();
            relabeled_ranks(self.g, &pos, &mut self.buf);
            if self.best.as_ref().is_none_or(|b| self.buf < *b) {
                self.best = Some(self.buf.clone());
                self.best_pos = pos;
            }
            return;
        };
        for v in (0..n).filter(|&v| color[v] as usize == target) {
            let split: Vec<u32> = (0..n).map(|u| 2 * color[u] + u32::from(u != v)).collect();
            self.descend(split);
        }
    }
}

/// Canonical form of `g`.
pub fn canonical_form(g: &KHypergraph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Reference canonical form: minimum over all `n!` relabelings. Only for
/// small `n`; used to cross-check [`canonical_form`].
pub fn canonical_form_exhaustive(g: &KHypergraph) -> CanonicalForm {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u32>> = None;
    let mut buf = Vec::new();
    heap_permutations(&mut perm, &mut |p| {
        relabeled_ranks(g, p, &mut buf);
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    });
    CanonicalForm {
        k: g.k() as u8,
        n: n as u8,
        ranks: best.unwrap_or_default(),
    }
}

/// Calls `f` on every permutation of `items` (Heap's algorithm).
pub fn heap_permutations<T, F: FnMut(&[T])>(items: &mut [T], f: &mut F) {
    let n = items.len();
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// An explicit isomorphism `a -> b` (vertex `v` of `a` maps to `map[v]`),
/// found by trying every permutation.
pub fn find_isomorphism(a: &KHypergraph, b: &KHypergraph) -> Option<Vec<usize>> {
    if a.k() != b.k() || a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut perm: Vec<usize> = (0..a.n()).collect();
    let mut found = None;
    heap_permutations(&mut perm, &mut |p| {
        if found.is_none() && a.edges().iter().all(|e| b.has_edge(e.iter().map(|v| p[v]).collect())) {
            found = Some(p.to_vec());
        }
    });
    found
}

/// Whether `a` and `b` are isomorphic.
pub fn is_isomorphic(a: &KHypergraph, b: &KHypergraph) -> bool {
    a.k() == b.k() && a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use rand::{seq::SliceRandom, Rng, SeedableRng};

    #[test]
    fn relabeled_copies_share_form() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let k = rng.random_range(2..=3);
            let n = rng.random_range(1..=7);
            let g = families::random_hypergraph(k, n, 0.5, &mut rng).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            assert_eq!(canonical_form(&g), canonical_form(&h));
            let (form, pos) = canonical_labeling(&g);
            assert_eq!(g.relabel(&pos), form.to_hypergraph());
        }
    }

    #[test]
    fn agrees_with_exhaustive_minimum_in_equivalence() {
        // Both keys must induce the same partition of all labeled 3-graphs on 4 vertices.
        let all: Vec<_> = (0..16u64)
            .map(|m| KHypergraph::from_rank_mask(3, 4, m).unwrap())
            .collect();
        for a in &all {
            for b in &all {
                assert_eq!(
                    canonical_form(a) == canonical_form(b),
                    canonical_form_exhaustive(a) == canonical_form_exhaustive(b)
                );
            }
        }
    }

    #[test]
    fn non_isomorphic_same_degrees() {
        // C6 and two triangles: both 2-regular on 6 vertices.
        let c6 = families::cycle(6).unwrap();
        let t = families::cycle(3).unwrap();
        let tt = families::graph_union(&[&t, &t]).unwrap();
        assert!(!is_isomorphic(c6.as_hypergraph(), tt.as_hypergraph()));
        assert!(find_isomorphism(c6.as_hypergraph(), tt.as_hypergraph()).is_none());
    }

    #[test]
    fn display_is_stable() {
        let k4 = KHypergraph::complete(3, 4).unwrap();
        assert_eq!(canonical_form(&k4).to_string(), "k3n4:f");
    }
}
