//! Cocycles (two-graphs) of graphs, Seidel switching, and the purity
//! conditions that decide when a cocycle has perfect vertex links.

use serde::Serialize;

use crate::certificate::{Certificate, Witness};
use crate::clique::clique_number;
use crate::coloring::{search_coloring_with, Budget};
use crate::error::{Error, Result};
use crate::graph_perfect::{chromatic_number_with, find_odd_hole, odd_holes};
use crate::hypergraph::{Graph, KHypergraph};
use crate::vertex_set::VertexSet;

/// The 3-uniform hypergraph of triples spanning an odd number of edges.
pub fn co(g: &Graph) -> KHypergraph {
    let edges = VertexSet::full(g.n()).subsets_of_size(3).filter(|t| {
        let v = t.to_vec();
        let m = g.adjacent(v[0], v[1]) as u8 + g.adjacent(v[0], v[2]) as u8 + g.adjacent(v[1], v[2]) as u8;
        m % 2 == 1
    });
    KHypergraph::from_edge_sets(3, g.n(), edges.collect::<Vec<_>>()).expect("triples of a valid graph")
}

fn require_three(h: &KHypergraph) -> Result<()> {
    if h.k() != 3 {
        return Err(Error::UniformityMismatch {
            expected: 3,
            got: h.k(),
        });
    }
    Ok(())
}

/// A 4-set spanning an odd number of edges, if any.
fn odd_four_set(h: &KHypergraph) -> Option<(VertexSet, usize)> {
    VertexSet::full(h.n())
        .subsets_of_size(4)
        .map(|s| (s, h.edges_within(s)))
        .find(|&(_, m)| m % 2 == 1)
}

/// A graph `G` with `co(G) = h` in which vertex 0 is isolated, or `None`
/// if `h` is not a cocycle.
pub fn cocycle_representative(h: &KHypergraph) -> Result<Option<Graph>> {
    require_three(h)?;
    if odd_four_set(h).is_some() {
        return Ok(None);
    }
    let n = h.n();
    let mut pairs = Vec::new();
    for a in 1..n {
        for b in a + 1..n {
            if h.has_edge(VertexSet::from_slice(&[0, a, b])) {
                pairs.push((a, b));
            }
        }
    }
    let g = Graph::new(n, &pairs)?;
    debug_assert_eq!(&co(&g), h);
    Ok(Some(g))
}

/// Every 4-set spans an even number of edges. The positive certificate is
/// a representative graph, the negative one an odd 4-set.
pub fn is_cocycle(h: &KHypergraph) -> Result<Certificate> {
    require_three(h)?;
    if let Some((vertices, edges)) = odd_four_set(h) {
        return Ok(Certificate::fails(Witness::EdgeCount { vertices, edges }));
    }
    let g = cocycle_representative(h)?.expect("no odd 4-set");
    Ok(Certificate::holds(Witness::CocycleRepresentative {
        edges: g.edge_pairs().collect(),
    }))
}

/// `G⁺(v)`: on `V \ {v}` (renumbered in increasing order), `xy` is an edge
/// when `x, y` are on the same side of `v` and adjacent, or on different
/// sides and non-adjacent. It equals the link of `v` in `co(G)`.
pub fn link_graph_plus(g: &Graph, v: usize) -> Result<Graph> {
    VertexSet::singleton(v).check_range(g.n())?;
    let rest: Vec<usize> = g.vertices().remove(v).iter().collect();
    let nb = g.neighbors(v);
    let mut pairs = Vec::new();
    for (i, &x) in rest.iter().enumerate() {
        for (j, &y) in rest.iter().enumerate().skip(i + 1) {
            let same_side = nb.contains(x) == nb.contains(y);
            if g.adjacent(x, y) == same_side {
                pairs.push((i, j));
            }
        }
    }
    Graph::new(rest.len(), &pairs)
}

/// Complements every pair with exactly one end in `a`.
pub fn seidel_switch(g: &Graph, a: VertexSet) -> Result<Graph> {
    a.check_range(g.n())?;
    let n = g.n();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let cross = a.contains(x) != a.contains(y);
            if g.adjacent(x, y) != cross {
                pairs.push((x, y));
            }
        }
    }
    Graph::new(n, &pairs)
}

/// The sector structure of a pre-odd-hole: sectors alternate between
/// non-neighbors (first, third, ...) and neighbors of the center, and each
/// is listed as an induced path in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreOddHoleWitness {
    pub center: usize,
    pub sectors: Vec<Vec<usize>>,
}

fn check_sector_sizes(sizes: &[usize]) -> Result<usize> {
    let bad = |msg: &str| Err(Error::SectorSizes(format!("{msg}: {sizes:?}")));
    if sizes.len() < 2 || sizes.len() % 2 == 1 {
        return bad("need an even number of sectors, at least two");
    }
    if sizes.contains(&0) {
        return bad("sectors must be non-empty");
    }
    let total: usize = sizes.iter().sum();
    if total.is_multiple_of(2) || total < 5 {
        return bad("sector sizes must sum to an odd number of at least 5");
    }
    if total + 1 > crate::vertex_set::MAX_VERTICES {
        return bad("too many vertices");
    }
    Ok(total)
}

/// Adjacency of the pre-odd-hole with the given sector sizes, on the
/// positions `0..total` (sector by sector, each path in order), excluding
/// the center.
fn sector_adjacent(sizes: &[usize], sector_of: &[(usize, usize)], x: usize, y: usize) -> bool {
    let k = sizes.len();
    let ((i, a), (j, b)) = (sector_of[x], sector_of[y]);
    if i == j {
        return a.abs_diff(b) == 1;
    }
    if i % 2 == j % 2 {
        return false;
    }
    let last = |s: usize| sizes[s] - 1;
    if k == 2 {
        // the two joints p_last^1 p_first^2 and p_first^1 p_last^2 are missing
        let (a1, b2) = if i == 0 { (a, b) } else { (b, a) };
        return !((a1 == last(0) && b2 == 0) || (a1 == 0 && b2 == last(1)));
    }
    if (i + 1) % k == j {
        return !(a == last(i) && b == 0);
    }
    if (j + 1) % k == i {
        return !(b == last(j) && a == 0);
    }
    true
}

fn sector_positions(sizes: &[usize]) -> Vec<(usize, usize)> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| (0..m).map(move |a| (i, a)))
        .collect()
}

/// The pre-odd-hole with the given sector sizes. The center is vertex 0 and
/// the sectors follow in order on `1..`.
pub fn generate_pre_odd_hole(sizes: &[usize]) -> Result<(Graph, usize)> {
    let total = check_sector_sizes(sizes)?;
    let pos = sector_positions(sizes);
    let mut pairs = Vec::new();
    for x in 0..total {
        if pos[x].0 % 2 == 1 {
            pairs.push((0, x + 1));
        }
        for y in x + 1..total {
            if sector_adjacent(sizes, &pos, x, y) {
                pairs.push((x + 1, y + 1));
            }
        }
    }
    Ok((Graph::new(total + 1, &pairs)?, 0))
}

/// Vertices of an induced path on `part`, in order, or `None` if `g[part]`
/// is not a path.
fn as_path(g: &Graph, part: VertexSet) -> Option<Vec<usize>> {
    let deg = |v: usize| g.neighbors(v).intersection(part).len();
    let start = part.iter().find(|&v| deg(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .intersection(part)
            .iter()
            .find(|&w| w != prev && !order.contains(&w));
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
                order.push(w);
            }
            None => break,
        }
    }
    let edges: usize = part.iter().map(deg).sum::<usize>() / 2;
    (order.len() == part.len() && edges + 1 == part.len()).then_some(order)
}

fn components(g: &Graph, part: VertexSet) -> Vec<VertexSet> {
    let mut left = part;
    let mut out = Vec::new();
    while let Some(s) = left.first() {
        let mut comp = VertexSet::singleton(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier.iter() {
                next = next.union(g.neighbors(u).intersection(part));
            }
            frontier = next.difference(comp);
            comp = comp.union(frontier);
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut v = items.to_vec();
    crate::canon::heap_permutations(&mut v, &mut |p: &[usize]| out.push(p.to_vec()));
    out
}

/// Whether `(g, v)` is a pre-odd-hole centered at `v`, decided from the
/// definition: the sectors are the components of the neighborhood and of
/// the non-neighborhood of `v`, and some cyclic arrangement and orientation
/// of them must reproduce every adjacency.
pub fn recognize_pre_odd_hole(g: &Graph, v: usize) -> Result<Option<PreOddHoleWitness>> {
    VertexSet::singleton(v).check_range(g.n())?;
    let n = g.n();
    if n < 6 || n % 2 == 1 {
        return Ok(None);
    }
    let nb = g.neighbors(v);
    let non = g.non_neighbors(v);
    let to_paths =
        |part| -> Option<Vec<Vec<usize>>> { components(g, part).into_iter().map(|c| as_path(g, c)).collect() };
    let (Some(m_paths), Some(n_paths)) = (to_paths(non), to_paths(nb)) else {
        return Ok(None);
    };
    if m_paths.len() != n_paths.len() || m_paths.is_empty() {
        return Ok(None);
    }
    let half = m_paths.len();
    let k = 2 * half;
    // rotating by two sectors keeps parity, so the first non-neighbor
    // component may be fixed in the first position
    let m_rest: Vec<usize> = (1..half).collect();
    for m_perm in permutations(&m_rest) {
        for n_perm in permutations(&(0..half).collect::<Vec<_>>()) {
            let mut sectors: Vec<&Vec<usize>> = Vec::with_capacity(k);
            for i in 0..half {
                sectors.push(if i == 0 { &m_paths[0] } else { &m_paths[m_perm[i - 1]] });
                sectors.push(&n_paths[n_perm[i]]);
            }
            let sizes: Vec<usize> = sectors.iter().map(|s| s.len()).collect();
            if check_sector_sizes(&sizes).is_err() {
                return Ok(None);
            }
            let pos = sector_positions(&sizes);
            for flips in 0..1u64 << k {
                if (0..k).any(|i| flips >> i & 1 == 1 && sizes[i] == 1) {
                    continue;
                }
                let seq: Vec<usize> = sectors
                    .iter()
                    .enumerate()
                    .flat_map(|(i, s)| {
                        let mut s = (*s).clone();
                        if flips >> i & 1 == 1 {
                            s.reverse();
                        }
                        s
                    })
                    .collect();
                let fits = (0..seq.len()).all(|x| {
                    (x + 1..seq.len()).all(|y| g.adjacent(seq[x], seq[y]) == sector_adjacent(&sizes, &pos, x, y))
                });
                if fits {
                    let mut at = 0;
                    let sectors = sizes
                        .iter()
                        .map(|&m| {
                            at += m;
                            seq[at - m..at].to_vec()
                        })
                        .collect();
                    return Ok(Some(PreOddHoleWitness { center: v, sectors }));
                }
            }
        }
    }
    Ok(None)
}

/// [`recognize_pre_odd_hole`] on the complement.
pub fn recognize_pre_odd_antihole(g: &Graph, v: usize) -> Result<Option<PreOddHoleWitness>> {
    recognize_pre_odd_hole(&g.complement(), v)
}

/// `G⁺(v)` is a single odd cycle of length at least 5 through every vertex
/// other than `v`, and `v` has both neighbors and non-neighbors.
pub fn plus_graph_is_spanning_odd_hole(g: &Graph, v: usize) -> Result<bool> {
    let h = link_graph_plus(g, v)?;
    let m = h.n();
    if m < 5 || m % 2 == 0 || g.neighbors(v).is_empty() || g.non_neighbors(v).is_empty() {
        return Ok(false);
    }
    if (0..m).any(|x| h.neighbors(x).len() != 2) {
        return Ok(false);
    }
    Ok(components(&h, h.vertices()).len() == 1)
}

/// The first purity condition `v` violates, checked directly on `g`:
/// 1-4 are a center or anticenter of an odd hole or antihole, 5-6 an
/// induced pre-odd-hole or pre-odd-antihole centered at `v`. Returns the
/// condition number and the offending vertices (the hole, or the induced
/// subgraph in sector order after the center).
pub fn impurity(g: &Graph, v: usize) -> Result<Option<(u8, Vec<usize>)>> {
    impurity_with(g, v, &odd_holes(g), &odd_holes(&g.complement()))
}

fn impurity_with(
    g: &Graph,
    v: usize,
    holes: &[Vec<usize>],
    antiholes: &[Vec<usize>],
) -> Result<Option<(u8, Vec<usize>)>> {
    VertexSet::singleton(v).check_range(g.n())?;
    let nb = g.neighbors(v);
    let non = g.non_neighbors(v);
    let within = |c: &[usize], side: VertexSet| c.iter().all(|&u| side.contains(u));
    let checks: [(u8, &[Vec<usize>], VertexSet); 4] =
        [(1, holes, nb), (2, antiholes, nb), (3, holes, non), (4, antiholes, non)];
    for (cond, list, side) in checks {
        if let Some(c) = list.iter().find(|c| within(c, side)) {
            return Ok(Some((cond, c.clone())));
        }
    }
    let n = g.n();
    let comp = g.complement();
    for (cond, host) in [(5u8, g), (6u8, &comp)] {
        for size in (6..=n).step_by(2) {
            for s in VertexSet::full(n).remove(v).subsets_of_size(size - 1) {
                let s = s.insert(v);
                let sub = host.induced(s)?;
                if let Some(w) = recognize_pre_odd_hole(&sub, s.rank_of(v))? {
                    let members = s.to_vec();
                    let mut seq = vec![v];
                    seq.extend(w.sectors.iter().flatten().map(|&i| members[i]));
                    return Ok(Some((cond, seq)));
                }
            }
        }
    }
    Ok(None)
}

/// Every vertex satisfies the six purity conditions.
///
/// Each vertex is decided twice: directly from the conditions, and by
/// scanning `G⁺(v)` for odd holes and antiholes. A disagreement is reported
/// as [`Error::ImplicationViolated`].
pub fn is_pure(g: &Graph) -> Result<Certificate> {
    let holes = odd_holes(g);
    let antiholes = odd_holes(&g.complement());
    let mut first: Option<Certificate> = None;
    for v in 0..g.n() {
        let direct = impurity_with(g, v, &holes, &antiholes)?;
        let plus = link_graph_plus(g, v)?;
        let via_link = find_odd_hole(&plus).is_some() || find_odd_hole(&plus.complement()).is_some();
        if direct.is_some() != via_link {
            return Err(Error::ImplicationViolated(format!(
                "vertex {v} is {} by the purity conditions but G+(v) {} an odd hole or antihole",
                if direct.is_some() { "impure" } else { "pure" },
                if via_link { "has" } else { "has no" }
            )));
        }
        if let (Some((condition, vertices)), None) = (direct, &first) {
            first = Some(Certificate::fails(Witness::Impure {
                vertex: v,
                condition,
                vertices,
            }));
        }
    }
    Ok(first.unwrap_or_else(|| Certificate::holds(Witness::None)))
}

/// The switching construction: a new vertex 0 joined to `a`, a copy of `h`
/// on `1..=|V(h)|`, and every pair between `a` and the rest of `h`
/// complemented. `h` must be triangle-free; `a` uses `h`'s labels.
pub fn switching_counterexample(h: &Graph, a: VertexSet) -> Result<Graph> {
    if let Some(t) = h.find_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    a.check_range(h.n())?;
    let m = h.n();
    let mut pairs: Vec<(usize, usize)> = a.iter().map(|x| (0, x + 1)).collect();
    for x in 0..m {
        for y in x + 1..m {
            let cross = a.contains(x) != a.contains(y);
            if h.adjacent(x, y) != cross {
                pairs.push((x + 1, y + 1));
            }
        }
    }
    Graph::new(m + 1, &pairs)
}

/// Checked facts about one switching construction.
#[derive(Clone, Debug, Serialize)]
pub struct SwitchingReport {
    /// The vertex link of 0 in the cocycle is `h` itself.
    pub link_is_input: bool,
    /// Clique number of the cocycle.
    pub omega: usize,
    /// `χ(h)`, or `None` if the budget ran out.
    pub chi: Option<usize>,
    /// When `χ(h) > 4`: the cocycle, with `X` the new vertex, has no proper
    /// `(ω - 1)`-coloring restricting properly to the link of `X`.
    pub obstruction: Option<Witness>,
}

/// Builds the construction for `(h, a)` and checks the link identity, the
/// clique number and, when `χ(h) > 4`, the coloring obstruction.
pub fn verify_switching(h: &Graph, a: VertexSet, budget: Budget) -> Result<(Graph, SwitchingReport)> {
    let g = switching_counterexample(h, a)?;
    let cocycle = co(&g);
    let link = cocycle.link(VertexSet::singleton(0))?;
    let link_is_input = &link == h.as_hypergraph();
    let omega = clique_number(&cocycle);
    let chi = chromatic_number_with(h, budget).ok();
    let mut obstruction = None;
    if chi.is_some_and(|c| c > 4) {
        let t = omega - 1;
        let x = VertexSet::singleton(0);
        match search_coloring_with(&cocycle, x, t, budget)? {
            None => {
                obstruction = Some(Witness::NoColoring {
                    vertices: cocycle.vertices(),
                    x,
                    colors: t,
                })
            }
            Some(_) => {
                return Err(Error::ImplicationViolated(format!(
                    "a {t}-coloring restricting to a proper coloring of a graph with chromatic number {}",
                    chi.unwrap()
                )))
            }
        }
    }
    Ok((
        g,
        SwitchingReport {
            link_is_input,
            omega,
            chi,
            obstruction,
        },
    ))
}
