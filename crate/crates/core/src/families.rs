//! Named graphs and random instance generators.

use rand::Rng;

use crate::error::Result;
use crate::hypergraph::{Graph, KHypergraph};
use crate::vertex_set::VertexSet;

/// `C_n` on `0..n` with edges `i ~ i+1 (mod n)`.
pub fn cycle(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `P_n`: a path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::new(leaves + 1, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in a..a + b {
            edges.push((i, j));
        }
    }
    Graph::new(a + b, &edges)
}

/// The wheel `W_n`: `C_n` on `0..n` plus hub `n` adjacent to all of it.
pub fn wheel(n: usize) -> Result<Graph> {
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Graph::new(n + 1, &edges)
}

pub fn petersen() -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges)
}

/// The Mycielskian `μ(G)`: vertices `0..n` are `G`, `n..2n` the shadows
/// (`n+i` adjacent to `N_G(i)`), and `2n` the apex adjacent to every shadow.
/// It is triangle-free when `G` is and has chromatic number `χ(G) + 1`.
pub fn mycielskian(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut edges: Vec<_> = g.edge_pairs().collect();
    for (a, b) in g.edge_pairs() {
        edges.push((a, n + b));
        edges.push((b, n + a));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Graph::new(2 * n + 1, &edges)
}

/// The Grötzsch graph, `μ(C_5)`: 11 vertices, triangle-free, `χ = 4`.
pub fn grotzsch() -> Result<Graph> {
    mycielskian(&cycle(5)?)
}

/// `μ(μ(C_5))`: 23 vertices, triangle-free, `χ = 5`.
pub fn mycielski_grotzsch() -> Result<Graph> {
    mycielskian(&grotzsch()?)
}

/// Disjoint union of graphs, relabeled consecutively.
pub fn graph_union(parts: &[&Graph]) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut off = 0;
    for g in parts {
        edges.extend(g.edge_pairs().map(|(a, b)| (a + off, b + off)));
        off += g.n();
    }
    Graph::new(off, &edges)
}

/// `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    Ok(Graph::from_hypergraph(random_hypergraph(2, n, p, rng)?).expect("2-uniform"))
}

/// Each `k`-subset of `0..n` is an edge independently with probability `p`.
pub fn random_hypergraph<R: Rng + ?Sized>(k: usize, n: usize, p: f64, rng: &mut R) -> Result<KHypergraph> {
    let edges: Vec<VertexSet> = VertexSet::full(n)
        .subsets_of_size(k)
        .filter(|_| rng.random_bool(p))
        .collect();
    KHypergraph::from_edge_sets(k, n, edges)
}

/// A random `k`-uniform hypergraph in which no two edges share more than
/// `k-2` vertices. Edges are proposed in random order and kept greedily.
pub fn random_simple_hypergraph<R: Rng + ?Sized>(
    k: usize,
    n: usize,
    attempts: usize,
    rng: &mut R,
) -> Result<KHypergraph> {
    let all: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(k).collect();
    let mut chosen: Vec<VertexSet> = Vec::new();
    if !all.is_empty() {
        for _ in 0..attempts {
            let e = all[rng.random_range(0..all.len())];
            if chosen.iter().all(|f| f.intersection(e).len() + 2 <= k) {
                chosen.push(e);
            }
        }
    }
    KHypergraph::from_edge_sets(k, n, chosen)
}

/// A random triangle-free graph: edges proposed in random order, kept when
/// they close no triangle.
pub fn random_triangle_free<R: Rng + ?Sized>(n: usize, attempts: usize, rng: &mut R) -> Result<Graph> {
    let mut adj = vec![VertexSet::EMPTY; n];
    if n >= 2 {
        for _ in 0..attempts {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a == b || adj[a].contains(b) || !adj[a].intersection(adj[b]).is_empty() {
                continue;
            }
            adj[a] = adj[a].insert(b);
            adj[b] = adj[b].insert(a);
        }
    }
    Graph::from_adjacency(&adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(petersen().unwrap().edge_count(), 15);
        let g = grotzsch().unwrap();
        assert_eq!((g.n(), g.edge_count()), (11, 20));
        let m = mycielski_grotzsch().unwrap();
        assert_eq!((m.n(), m.edge_count()), (23, 71));
        assert!(m.find_triangle().is_none());
        assert_eq!(wheel(5).unwrap().edge_count(), 10);
    }

    #[test]
    fn simple_hypergraphs_are_simple() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let h = random_simple_hypergraph(3, 8, 40, &mut rng).unwrap();
        for (i, a) in h.edges().iter().enumerate() {
            for b in &h.edges()[i + 1..] {
                assert!(a.intersection(*b).len() <= 1);
            }
        }
    }
}
