//! Clique and independence numbers of uniform hypergraphs.
//!
//! Any vertex set with fewer than `k` vertices is a clique (and independent),
//! so `ω(G) >= min(n, k-1)`.

use crate::hypergraph::KHypergraph;
use crate::vertex_set::VertexSet;

/// For every `(k-1)`-set `S` (indexed by colex rank) the vertices `u` with
/// `S ∪ {u}` an edge.
struct Completions {
    masks: Vec<u64>,
}

impl Completions {
    fn new(g: &KHypergraph) -> Self {
        let k = g.k();
        let mut masks = vec![0u64; crate::vertex_set::binomial(g.n(), k - 1) as usize];
        for e in g.edges() {
            for u in e.iter() {
                let s = e.remove(u);
                masks[s.colex_rank() as usize] |= 1 << u;
            }
        }
        Completions { masks }
    }

    #[inline]
    fn of(&self, s: VertexSet) -> u64 {
        self.masks[s.colex_rank() as usize]
    }
}

/// A maximum clique of `g`.
pub fn max_clique(g: &KHypergraph) -> VertexSet {
    let k = g.k();
    let n = g.n();
    if n < k {
        return VertexSet::full(n);
    }
    if k == 1 {
        return g.edges().iter().fold(VertexSet::EMPTY, |a, &e| a.union(e));
    }
    if g.is_complete() {
        return g.vertices();
    }
    let comp = Completions::new(g);
    let mut best = VertexSet::full(k - 1);
    expand(&comp, k, VertexSet::EMPTY, g.vertices().bits(), &mut best);
    best
}

fn expand(comp: &Completions, k: usize, clique: VertexSet, mut cand: u64, best: &mut VertexSet) {
    if cand == 0 {
        if clique.len() > best.len() {
            *best = clique;
        }
        return;
    }
    while cand != 0 {
        if clique.len() + cand.count_ones() as usize <= best.len() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let mut next = cand;
        // Every new (k-1)-subset contains v: it is T ∪ {v} with T ⊆ clique, |T| = k-2.
        if clique.len() >= k - 2 {
            for t in clique.subsets_of_size(k - 2) {
                next &= comp.of(t.insert(v));
                if next == 0 {
                    break;
                }
            }
        }
        expand(comp, k, clique.insert(v), next, best);
    }
    if clique.len() > best.len() {
        *best = clique;
    }
}

/// `ω(G)`.
pub fn clique_number(g: &KHypergraph) -> usize {
    max_clique(g).len()
}

/// A maximum independent set (a maximum clique of the complement).
pub fn max_independent_set(g: &KHypergraph) -> VertexSet {
    max_clique(&g.complement())
}

/// `α(G) = ω(G^c)`.
pub fn independence_number(g: &KHypergraph) -> usize {
    clique_number(&g.complement())
}

/// All maximal cliques, in no particular order. Exponential; small inputs only.
pub fn maximal_cliques(g: &KHypergraph) -> Vec<VertexSet> {
    let k = g.k();
    if k == 1 || g.n() < k {
        return vec![max_clique(g)];
    }
    let comp = Completions::new(g);
    let mut out = Vec::new();
    let all = g.vertices().bits();
    fn rec(comp: &Completions, k: usize, clique: VertexSet, cand: u64, all: u64, out: &mut Vec<VertexSet>) {
        // maximal iff no outside vertex extends it
        let ext = extenders(comp, k, clique, all & !clique.bits());
        if ext == 0 {
            out.push(clique);
            return;
        }
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let next_cand = if clique.len() >= k - 2 {
                clique
                    .subsets_of_size(k - 2)
                    .fold(c, |acc, t| acc & comp.of(t.insert(v)))
            } else {
                c
            };
            rec(comp, k, clique.insert(v), next_cand, all, out);
        }
    }
    fn extenders(comp: &Completions, k: usize, clique: VertexSet, outside: u64) -> u64 {
        if clique.len() < k - 1 {
            return outside;
        }
        clique.subsets_of_size(k - 1).fold(outside, |acc, s| acc & comp.of(s))
    }
    rec(&comp, k, VertexSet::EMPTY, all, all, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Exhaustive oracle: largest subset inducing a complete hypergraph.
    fn brute_omega(g: &KHypergraph) -> usize {
        g.vertices()
            .all_subsets()
            .filter(|&s| g.is_clique(s))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn complete_and_empty() {
        let k5 = KHypergraph::complete(3, 5).unwrap();
        assert_eq!(clique_number(&k5), 5);
        assert_eq!(independence_number(&k5), 2);
        let e5 = KHypergraph::empty(3, 5).unwrap();
        assert_eq!(clique_number(&e5), 2);
        assert_eq!(clique_number(&KHypergraph::empty(3, 1).unwrap()), 1);
        assert_eq!(clique_number(&KHypergraph::empty(2, 0).unwrap()), 0);
    }

    #[test]
    fn matches_brute_force_on_random_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let k = rng.random_range(2..=4);
            let n = rng.random_range(0..=8);
            let p = rng.random_range(0.2..0.95);
            let g = families::random_hypergraph(k, n, p, &mut rng).unwrap();
            assert_eq!(clique_number(&g), brute_omega(&g), "{g:?}");
            let c = max_clique(&g);
            assert!(g.is_clique(c));
        }
    }

    #[test]
    fn maximal_cliques_are_maximal() {
        let c5 = families::cycle(5).unwrap();
        let mc = maximal_cliques(c5.as_hypergraph());
        assert_eq!(mc.len(), 5);
        assert!(mc.iter().all(|s| s.len() == 2));
        let k4 = KHypergraph::complete(3, 4).unwrap();
        assert_eq!(maximal_cliques(&k4), vec![k4.vertices()]);
    }
}
