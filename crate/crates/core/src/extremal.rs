//! Constructions that preserve perfectness, the Turán-type construction,
//! intersecting examples, and exhaustive edge-maximization.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{is_clique_friendly, is_h_alpha_perfect, is_h_omega_perfect, is_h_perfect};
use crate::coloring::Checker;
use crate::enumerate::{iso_classes, DEFAULT_CAP_EXPONENT};
use crate::error::{Error, Result};
use crate::hypergraph::KHypergraph;
use crate::vertex_set::VertexSet;

/// `v * H`: every edge gains the new vertex `n`.
///
/// Keeps H-perfectness. Clique friendliness survives only when `h` has no
/// complete `(k+1)`-set, whose cone spans `k + 1` edges on `k + 2` vertices.
pub fn cone(h: &KHypergraph) -> Result<KHypergraph> {
    let apex = h.n();
    KHypergraph::from_edge_sets(h.k() + 1, h.n() + 1, h.edges().iter().map(|e| e.insert(apex)))
}

/// `a` on vertices `0..a.n()` and `b` shifted after it.
pub fn disjoint_union(a: &KHypergraph, b: &KHypergraph) -> Result<KHypergraph> {
    if a.k() != b.k() {
        return Err(Error::UniformityMismatch {
            expected: a.k(),
            got: b.k(),
        });
    }
    let shift = a.n();
    let moved = b.edges().iter().map(|e| VertexSet(e.bits() << shift));
    KHypergraph::from_edge_sets(a.k(), a.n() + b.n(), a.edges().iter().copied().chain(moved))
}

/// The `r`-uniform hypergraph of `r`-cliques of `g`, for `r > k`.
pub fn clique_hypergraph(g: &KHypergraph, r: usize) -> Result<KHypergraph> {
    if r <= g.k() {
        return Err(Error::InvalidArgument(format!(
            "clique size {r} must exceed the uniformity {}",
            g.k()
        )));
    }
    let cliques: Vec<VertexSet> = g.vertices().subsets_of_size(r).filter(|&s| g.is_clique(s)).collect();
    KHypergraph::from_edge_sets(r, g.n(), cliques)
}

/// Balanced contiguous parts `A, B, C` of `0..n`, sizes differing by at most one.
fn three_parts(n: usize) -> [VertexSet; 3] {
    let mut start = 0;
    [0, 1, 2].map(|i| {
        let size = n / 3 + usize::from(i < n % 3);
        let part = VertexSet(VertexSet::full(size).bits() << start);
        start += size;
        part
    })
}

/// Edges `abc`, `aa'b`, `bb'c` and `cc'a` over a balanced partition.
pub fn turan_construction(n: usize) -> Result<KHypergraph> {
    if n < 3 {
        return Err(Error::TooFewVertices {
            kind: "turan",
            min: 3,
            n,
        });
    }
    let parts = three_parts(n);
    let mut edges = Vec::new();
    for i in 0..3 {
        let (own, next) = (parts[i], parts[(i + 1) % 3]);
        for pair in own.subsets_of_size(2) {
            edges.extend(next.iter().map(|v| pair.insert(v)));
        }
    }
    for a in parts[0].iter() {
        for b in parts[1].iter() {
            edges.extend(parts[2].iter().map(|c| VertexSet::from_slice(&[a, b, c])));
        }
    }
    KHypergraph::from_edge_sets(3, n, edges)
}

/// `max n1·n2·n3` over `n1 + n2 + n3 = n`.
pub fn tripartite_max_edges(n: usize) -> usize {
    let [a, b, c] = three_parts(n);
    a.len() * b.len() * c.len()
}

/// The complete tripartite 3-uniform hypergraph over a balanced partition.
pub fn complete_tripartite(n: usize) -> Result<KHypergraph> {
    let [a, b, c] = three_parts(n);
    let mut edges = Vec::new();
    for x in a.iter() {
        for y in b.iter() {
            edges.extend(c.iter().map(|z| VertexSet::from_slice(&[x, y, z])));
        }
    }
    KHypergraph::from_edge_sets(3, n, edges)
}

/// Every two edges meet.
pub fn is_intersecting(g: &KHypergraph) -> bool {
    let e = g.edges();
    e.iter()
        .enumerate()
        .all(|(i, a)| e[i + 1..].iter().all(|b| !a.intersection(*b).is_empty()))
}

/// No `k + 1` vertices span every possible edge.
pub fn is_complete_free(g: &KHypergraph) -> bool {
    g.vertices()
        .subsets_of_size(g.k() + 1)
        .all(|s| g.edges_within(s) < g.k() + 1)
}

/// Intersecting 3-uniform examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntersectingKind {
    /// `K_5^3` plus isolated vertices.
    A,
    /// Every triple with at least two of the vertices `0, 1, 2`.
    B,
    /// A cone over a balanced complete bipartite graph.
    C,
    /// `K_4^3` on `0..4`, and every further vertex has link the triangle on
    /// `0, 1, 2`. With one common triangle this is isomorphic to `B`;
    /// letting the triangle vary per vertex breaks intersection.
    LinkTriangle,
    /// `K_4^3` on `0..4`, and every further vertex has link the star from `0` to `1, 2, 3`.
    LinkStar,
}

impl IntersectingKind {
    pub const ALL: [IntersectingKind; 5] = [
        IntersectingKind::A,
        IntersectingKind::B,
        IntersectingKind::C,
        IntersectingKind::LinkTriangle,
        IntersectingKind::LinkStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IntersectingKind::A => "a",
            IntersectingKind::B => "b",
            IntersectingKind::C => "c",
            IntersectingKind::LinkTriangle => "link_triangle",
            IntersectingKind::LinkStar => "link_star",
        }
    }

    pub fn min_vertices(self) -> usize {
        match self {
            IntersectingKind::A => 5,
            IntersectingKind::B | IntersectingKind::C => 3,
            IntersectingKind::LinkTriangle | IntersectingKind::LinkStar => 4,
        }
    }

    /// Edge count of the example on `n` vertices.
    pub fn edge_count(self, n: usize) -> usize {
        match self {
            IntersectingKind::A => 10,
            IntersectingKind::B | IntersectingKind::LinkTriangle | IntersectingKind::LinkStar => 3 * n - 8,
            IntersectingKind::C => (n - 1) * (n - 1) / 4,
        }
    }
}

impl fmt::Display for IntersectingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IntersectingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IntersectingKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase().replace('-', "_"))
            .ok_or_else(|| Error::Unknown {
                what: "intersecting kind",
                name: s.into(),
            })
    }
}

pub fn intersecting_example(kind: IntersectingKind, n: usize) -> Result<KHypergraph> {
    let min = kind.min_vertices();
    if n < min {
        return Err(Error::TooFewVertices {
            kind: kind.name(),
            min,
            n,
        });
    }
    let all = VertexSet::full(n);
    let edges: Vec<VertexSet> = match kind {
        IntersectingKind::A => VertexSet::full(5).subsets_of_size(3).collect(),
        IntersectingKind::B => {
            let special = VertexSet::full(3);
            all.subsets_of_size(3)
                .filter(|e| e.intersection(special).len() >= 2)
                .collect()
        }
        IntersectingKind::C => {
            let left = (n - 1) / 2;
            let mut out = Vec::new();
            for x in 1..=left {
                out.extend((left + 1..n).map(|y| VertexSet::from_slice(&[0, x, y])));
            }
            out
        }
        IntersectingKind::LinkTriangle | IntersectingKind::LinkStar => {
            let link: Vec<VertexSet> = if kind == IntersectingKind::LinkTriangle {
                VertexSet::full(3).subsets_of_size(2).collect()
            } else {
                (1..4).map(|x| VertexSet::from_slice(&[0, x])).collect()
            };
            let mut out: Vec<VertexSet> = VertexSet::full(4).subsets_of_size(3).collect();
            for v in 4..n {
                out.extend(link.iter().map(|p| p.insert(v)));
            }
            out
        }
    };
    KHypergraph::from_edge_sets(3, n, edges)
}

/// Named predicates for [`extremal_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    HOmega,
    HAlpha,
    HPerfect,
    CliqueFriendly,
    Berge,
    Doubly,
    /// No `k + 1` vertices spanning all their `k`-subsets.
    CompleteFree,
    Intersecting,
}

impl Predicate {
    pub const ALL: [Predicate; 8] = [
        Predicate::HOmega,
        Predicate::HAlpha,
        Predicate::HPerfect,
        Predicate::CliqueFriendly,
        Predicate::Berge,
        Predicate::Doubly,
        Predicate::CompleteFree,
        Predicate::Intersecting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::HOmega => "h_omega",
            Predicate::HAlpha => "h_alpha",
            Predicate::HPerfect => "h_perfect",
            Predicate::CliqueFriendly => "clique_friendly",
            Predicate::Berge => "berge",
            Predicate::Doubly => "doubly",
            Predicate::CompleteFree => "k4_free",
            Predicate::Intersecting => "intersecting",
        }
    }

    /// `None` when a search budget ran out.
    pub fn test(self, g: &KHypergraph) -> Option<bool> {
        match self {
            Predicate::HOmega => is_h_omega_perfect(g).verdict.as_bool(),
            Predicate::HAlpha => is_h_alpha_perfect(g).verdict.as_bool(),
            Predicate::HPerfect => is_h_perfect(g).verdict.as_bool(),
            Predicate::CliqueFriendly => is_clique_friendly(g).verdict.as_bool(),
            Predicate::Berge => Checker::global().is_berge(g).verdict.as_bool(),
            Predicate::Doubly => crate::classify::is_doubly_perfect(g).verdict.as_bool(),
            Predicate::CompleteFree => Some(is_complete_free(g)),
            Predicate::Intersecting => Some(is_intersecting(g)),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase().replace('-', "_");
        let s = match s.as_str() {
            "complete_free" | "k_free" => "k4_free",
            "h_omega_perfect" | "hw" => "h_omega",
            other => other,
        };
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "predicate",
                name: s.into(),
            })
    }
}

/// Outcome of an edge-maximization over one isomorphism class per shape.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalResult {
    pub k: usize,
    pub n: usize,
    pub predicates: Vec<Predicate>,
    pub max_edges: usize,
    /// Every extremal class representative, in canonical order.
    pub extremal: Vec<KHypergraph>,
    pub examined: usize,
}

/// Maximum edge count of a 3-uniform hypergraph on `n` vertices satisfying
/// every predicate.
pub fn extremal_search(n: usize, predicates: &[Predicate]) -> Result<ExtremalResult> {
    extremal_search_uniform(3, n, predicates)
}

pub fn extremal_search_uniform(k: usize, n: usize, predicates: &[Predicate]) -> Result<ExtremalResult> {
    let classes = iso_classes(k, n, DEFAULT_CAP_EXPONENT)?;
    let examined = classes.len();
    let verdicts: Vec<Option<bool>> = classes
        .par_iter()
        .map(|g| {
            let mut all = Some(true);
            for p in predicates {
                match p.test(g) {
                    Some(true) => {}
                    Some(false) => return Some(false),
                    None => all = None,
                }
            }
            all
        })
        .collect();
    if verdicts.iter().any(Option::is_none) {
        return Err(Error::BudgetExceeded(Checker::global().budget().nodes.unwrap_or(0)));
    }
    let max_edges = classes
        .iter()
        .zip(&verdicts)
        .filter(|(_, v)| **v == Some(true))
        .map(|(g, _)| g.edge_count())
        .max()
        .unwrap_or(0);
    let extremal = classes
        .into_iter()
        .zip(verdicts)
        .filter(|(g, v)| *v == Some(true) && g.edge_count() == max_edges)
        .map(|(g, _)| g)
        .collect();
    Ok(ExtremalResult {
        k,
        n,
        predicates: predicates.to_vec(),
        max_edges,
        extremal,
        examined,
    })
}
