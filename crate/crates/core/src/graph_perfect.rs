//! Exact vertex coloring, odd hole search, and three independent tests of
//! graph perfectness.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::certificate::{Certificate, Witness};
use crate::clique::{clique_number, independence_number};
use crate::coloring::Budget;
use crate::error::{Error, Result};
use crate::hypergraph::Graph;
use crate::vertex_set::VertexSet;

/// A proper vertex coloring with at most `t` colors, or `None` if there is
/// none. DSATUR-ordered backtracking; `None` is a proof.
pub fn is_colorable(g: &Graph, t: usize, budget: Budget) -> Result<Option<Vec<u8>>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if t == 0 {
        return Ok(None);
    }
    let t = t.min(n);
    let mut st = ColorState {
        g,
        t,
        color: vec![u8::MAX; n],
        nodes: 0,
        budget,
    };
    match st.search(VertexSet::full(n), 0) {
        Ok(true) => Ok(Some(st.color)),
        Ok(false) => Ok(None),
        Err(()) => Err(Error::BudgetExceeded(budget.nodes.unwrap_or(0))),
    }
}

struct ColorState<'a> {
    g: &'a Graph,
    t: usize,
    color: Vec<u8>,
    nodes: u64,
    budget: Budget,
}

impl ColorState<'_> {
    fn used_around(&self, v: usize) -> u64 {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&u| self.color[u] != u8::MAX)
            .fold(0, |m, u| m | 1 << self.color[u])
    }

    fn search(&mut self, uncolored: VertexSet, used: usize) -> std::result::Result<bool, ()> {
        // most saturated vertex, then most uncolored neighbors
        let mut pick: Option<(u32, usize, usize, u64)> = None;
        for v in uncolored.iter() {
            let taken = self.used_around(v);
            let sat = taken.count_ones();
            let deg = self.g.neighbors(v).intersection(uncolored).len();
            if pick.is_none_or(|p| (sat, deg) > (p.0, p.1)) {
                pick = Some((sat, deg, v, taken));
            }
        }
        let Some((_, _, v, taken)) = pick else {
            return Ok(true);
        };
        let rest = uncolored.remove(v);
        let limit = (used + 1).min(self.t);
        for c in 0..limit {
            if taken >> c & 1 == 1 {
                continue;
            }
            self.nodes += 1;
            if self.budget.exceeded(self.nodes) {
                return Err(());
            }
            self.color[v] = c as u8;
            if self.search(rest, used.max(c + 1))? {
                return Ok(true);
            }
        }
        self.color[v] = u8::MAX;
        Ok(false)
    }
}

/// `χ(G)` within a node budget.
pub fn chromatic_number_with(g: &Graph, budget: Budget) -> Result<usize> {
    let mut t = clique_number(g.as_hypergraph()).max(1);
    if g.n() == 0 {
        return Ok(0);
    }
    loop {
        if is_colorable(g, t, budget)?.is_some() {
            return Ok(t);
        }
        t += 1;
    }
}

/// `χ(G)`, computed exactly without a budget.
pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_number_with(g, Budget::UNLIMITED).expect("no budget")
}

/// Visits each induced cycle of odd length at least 5 once, as a vertex
/// sequence starting at its smallest vertex. Stops when `f` returns `true`.
fn scan_odd_holes(g: &Graph, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        let allowed = VertexSet(g.vertices().bits() & !(((1u64 << s) - 1) | (1 << s)));
        path.clear();
        path.push(s);
        for p1 in g.neighbors(s).intersection(allowed).iter() {
            path.push(p1);
            if extend(g, allowed, &mut path, f) {
                return true;
            }
            path.pop();
        }
    }
    false
}

// `path` is an induced path starting at its smallest vertex.
fn extend(g: &Graph, allowed: VertexSet, path: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let s = path[0];
    let last = *path.last().unwrap();
    let inner_nb = path[1..path.len() - 1]
        .iter()
        .fold(VertexSet::EMPTY, |m, &u| m.union(g.neighbors(u)));
    for w in g.neighbors(last).intersection(allowed).iter() {
        if path.contains(&w) || inner_nb.contains(w) {
            continue;
        }
        if g.adjacent(w, s) {
            // closes an induced cycle; report each cycle in one direction only
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 && path[1] < w {
                path.push(w);
                let stop = f(path);
                path.pop();
                if stop {
                    return true;
                }
            }
            continue;
        }
        path.push(w);
        if extend(g, allowed, path, f) {
            return true;
        }
        path.pop();
    }
    false
}

/// An odd hole (induced cycle of odd length at least 5), if any.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    scan_odd_holes(g, &mut |c| {
        found = Some(c.to_vec());
        true
    });
    found
}

/// An odd antihole: an odd hole of the complement, in cyclic order there.
pub fn find_odd_antihole(g: &Graph) -> Option<Vec<usize>> {
    find_odd_hole(&g.complement())
}

/// Every odd hole, each listed once.
pub fn odd_holes(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    scan_odd_holes(g, &mut |c| {
        out.push(c.to_vec());
        false
    });
    out
}

/// How [`is_graph_perfect`] decides.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PerfectnessMethod {
    /// `χ = ω` on every induced subgraph.
    Coloring,
    /// `α·ω ≥ |V|` on every induced subgraph.
    AlphaOmega,
    /// No odd hole and no odd antihole.
    #[default]
    HoleScan,
}

impl PerfectnessMethod {
    pub const ALL: [PerfectnessMethod; 3] = [
        PerfectnessMethod::Coloring,
        PerfectnessMethod::AlphaOmega,
        PerfectnessMethod::HoleScan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PerfectnessMethod::Coloring => "coloring",
            PerfectnessMethod::AlphaOmega => "alpha_omega",
            PerfectnessMethod::HoleScan => "hole_scan",
        }
    }
}

impl fmt::Display for PerfectnessMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PerfectnessMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PerfectnessMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "perfectness method",
                name: s.to_string(),
            })
    }
}

/// Whether `g` is perfect. Negative certificates name the smallest offending
/// induced subgraph (first in colex order) or an odd hole or antihole.
pub fn is_graph_perfect(g: &Graph, method: PerfectnessMethod) -> Certificate {
    match method {
        PerfectnessMethod::HoleScan => {
            if let Some(cycle) = find_odd_hole(g) {
                return Certificate::fails(Witness::OddHole { cycle, antihole: false });
            }
            if let Some(cycle) = find_odd_antihole(g) {
                return Certificate::fails(Witness::OddHole { cycle, antihole: true });
            }
            Certificate::holds(Witness::None)
        }
        PerfectnessMethod::Coloring => {
            let n = g.n();
            for size in 1..=n {
                for s in VertexSet::full(n).subsets_of_size(size) {
                    let sub = g.induced(s).expect("subset of the vertex set");
                    let omega = clique_number(sub.as_hypergraph());
                    if is_colorable(&sub, omega, Budget::UNLIMITED)
                        .expect("no budget")
                        .is_none()
                    {
                        return Certificate::fails(Witness::ChiAboveOmega {
                            vertices: s,
                            chi: chromatic_number(&sub),
                            omega,
                        });
                    }
                }
            }
            Certificate::holds(Witness::None)
        }
        PerfectnessMethod::AlphaOmega => {
            let n = g.n();
            for size in 1..=n {
                for s in VertexSet::full(n).subsets_of_size(size) {
                    let sub = g.induced(s).expect("subset of the vertex set");
                    let omega = clique_number(sub.as_hypergraph());
                    let alpha = independence_number(sub.as_hypergraph());
                    if alpha * omega < size {
                        return Certificate::fails(Witness::AlphaOmegaDeficit {
                            vertices: s,
                            alpha,
                            omega,
                        });
                    }
                }
            }
            Certificate::holds(Witness::None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::graphs;
    use crate::families;

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chromatic_number(&families::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&families::cycle(6).unwrap()), 2);
        for n in 1..8 {
            assert_eq!(chromatic_number(&Graph::complete(n).unwrap()), n);
        }
        assert_eq!(chromatic_number(&families::petersen().unwrap()), 3);
        assert_eq!(chromatic_number(&families::grotzsch().unwrap()), 4);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn colorings_are_proper() {
        let g = families::petersen().unwrap();
        let c = is_colorable(&g, 3, Budget::UNLIMITED).unwrap().unwrap();
        for (a, b) in g.edge_pairs() {
            assert_ne!(c[a], c[b]);
        }
    }

    #[test]
    fn holes() {
        let c5 = families::cycle(5).unwrap();
        assert_eq!(find_odd_hole(&c5).unwrap().len(), 5);
        assert_eq!(odd_holes(&c5).len(), 1);
        assert!(find_odd_hole(&families::cycle(6).unwrap()).is_none());
        let c7 = families::cycle(7).unwrap();
        assert_eq!(odd_holes(&c7).len(), 1);
        assert!(find_odd_antihole(&c7).is_none());
        assert_eq!(find_odd_antihole(&c7.complement()).unwrap().len(), 7);
        assert!(find_odd_hole(&families::wheel(5).unwrap()).is_some());
        // Petersen has twelve 5-cycles, all induced
        assert_eq!(
            odd_holes(&families::petersen().unwrap())
                .iter()
                .filter(|c| c.len() == 5)
                .count(),
            12
        );
    }

    #[test]
    fn c5_fails_every_way() {
        let c5 = families::cycle(5).unwrap();
        let by_col = is_graph_perfect(&c5, PerfectnessMethod::Coloring);
        assert!(matches!(
            by_col.witness,
            Witness::ChiAboveOmega { chi: 3, omega: 2, .. }
        ));
        let by_ao = is_graph_perfect(&c5, PerfectnessMethod::AlphaOmega);
        assert!(matches!(
            by_ao.witness,
            Witness::AlphaOmegaDeficit { alpha: 2, omega: 2, .. }
        ));
        let by_holes = is_graph_perfect(&c5, PerfectnessMethod::HoleScan);
        assert_eq!(
            by_holes.witness,
            Witness::OddHole {
                cycle: vec![0, 1, 2, 3, 4],
                antihole: false
            }
        );
    }

    #[test]
    fn bipartite_is_perfect() {
        let g = families::complete_bipartite(3, 4).unwrap();
        for m in PerfectnessMethod::ALL {
            assert!(is_graph_perfect(&g, m).is_true());
        }
    }

    #[test]
    fn methods_agree_up_to_six() {
        for n in 0..=6 {
            for g in graphs(n).unwrap() {
                let v: Vec<bool> = PerfectnessMethod::ALL
                    .iter()
                    .map(|&m| is_graph_perfect(&g, m).is_true())
                    .collect();
                assert!(v.iter().all(|&b| b == v[0]), "{g:?}");
            }
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in PerfectnessMethod::ALL {
            assert_eq!(m.name().parse::<PerfectnessMethod>().unwrap(), m);
        }
        assert!("nope".parse::<PerfectnessMethod>().is_err());
    }
}
