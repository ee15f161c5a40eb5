//! Proper colorings of `(k-1)`-tuples and the exact search for them.
//!
//! A coloring of a `k`-uniform hypergraph assigns a color to every
//! `(k-1)`-subset of the vertex set. It is proper when no edge has all of its
//! `k` facets the same color. It restricts properly to the link of `X` when,
//! for every edge `F ⊇ X`, the facets of `F` that contain `X` are not all the
//! same color.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use dashmap::DashMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::canon::{canonical_form, CanonicalForm};
use crate::certificate::{Certificate, Verdict, Witness};
use crate::clique::clique_number;
use crate::error::{Error, Result};
use crate::hypergraph::KHypergraph;
use crate::vertex_set::{binomial, VertexSet};

/// Default node limit for a single exact search.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// Node limit for exact searches. Reads `HYPERFECT_BUDGET` when built with
/// [`Budget::from_env`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { nodes: None };

    pub fn nodes(n: u64) -> Budget {
        Budget { nodes: Some(n) }
    }

    /// `HYPERFECT_BUDGET` if set and numeric, else [`DEFAULT_NODE_BUDGET`].
    pub fn from_env() -> Budget {
        static ENV: OnceLock<Option<u64>> = OnceLock::new();
        let v = *ENV.get_or_init(|| {
            std::env::var("HYPERFECT_BUDGET")
                .ok()
                .and_then(|s| s.trim().parse().ok())
        });
        Budget {
            nodes: Some(v.unwrap_or(DEFAULT_NODE_BUDGET)),
        }
    }

    #[inline]
    pub(crate) fn exceeded(&self, used: u64) -> bool {
        self.nodes.is_some_and(|b| used > b)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

/// A total map from the `arity`-subsets of `0..n` to colors `0..t`,
/// indexed by colex rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TupleColoring {
    arity: usize,
    n: usize,
    t: usize,
    colors: Vec<u32>,
}

impl TupleColoring {
    pub fn new(arity: usize, n: usize, t: usize, colors: Vec<u32>) -> Result<Self> {
        if colors.len() as u64 != binomial(n, arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                got: colors.len(),
            });
        }
        if t == 0 && !colors.is_empty() {
            return Err(Error::NoColors);
        }
        if colors.iter().any(|&c| c as usize >= t) {
            return Err(Error::NoColors);
        }
        Ok(TupleColoring { arity, n, t, colors })
    }

    /// Builds a coloring from a function on tuples.
    pub fn from_fn(arity: usize, n: usize, t: usize, mut f: impl FnMut(VertexSet) -> u32) -> Result<Self> {
        let colors = VertexSet::full(n).subsets_of_size(arity).map(&mut f).collect();
        Self::new(arity, n, t, colors)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Palette size.
    pub fn colors(&self) -> usize {
        self.t
    }

    #[inline]
    pub fn get(&self, tuple: VertexSet) -> u32 {
        self.colors[tuple.colex_rank() as usize]
    }

    /// `(tuple, color)` pairs in colex order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, u32)> + '_ {
        VertexSet::full(self.n)
            .subsets_of_size(self.arity)
            .zip(self.colors.iter().copied())
    }

    /// One line per tuple: the tuple's vertices then its color.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (s, c) in self.iter() {
            for v in s.iter() {
                out.push_str(&v.to_string());
                out.push(' ');
            }
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for TupleColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TupleColoring(arity={}, t={}, {:?})",
            self.arity, self.t, self.colors
        )
    }
}

impl Serialize for TupleColoring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<usize>> = self
            .iter()
            .map(|(tuple, c)| tuple.iter().chain(std::iter::once(c as usize)).collect())
            .collect();
        let mut st = s.serialize_struct("TupleColoring", 3)?;
        st.serialize_field("arity", &self.arity)?;
        st.serialize_field("colors", &self.t)?;
        st.serialize_field("assignment", &rows)?;
        st.end()
    }
}

fn check_coloring(g: &KHypergraph, c: &TupleColoring) -> Result<()> {
    if c.arity + 1 != g.k() {
        return Err(Error::ArityMismatch {
            expected: g.k() - 1,
            got: c.arity,
        });
    }
    if c.n != g.n() {
        return Err(Error::VertexCountMismatch {
            expected: g.n(),
            got: c.n,
        });
    }
    Ok(())
}

fn monochromatic<I: Iterator<Item = VertexSet>>(c: &TupleColoring, mut facets: I) -> bool {
    match facets.next() {
        None => true,
        Some(first) => {
            let col = c.get(first);
            facets.all(|f| c.get(f) == col)
        }
    }
}

/// No edge has all its facets the same color.
pub fn is_proper(g: &KHypergraph, c: &TupleColoring) -> Result<bool> {
    check_coloring(g, c)?;
    Ok(g.edges()
        .iter()
        .all(|e| !monochromatic(c, e.iter().map(|u| e.remove(u)))))
}

/// The coloring `Z ↦ c(X ∪ Z)` of the `(k-1-|X|)`-subsets of `V \ X` is
/// proper for `lk_G(X)`. Requires `|X| < k - 1`.
pub fn restricts_properly(g: &KHypergraph, x: VertexSet, c: &TupleColoring) -> Result<bool> {
    check_coloring(g, c)?;
    x.check_range(g.n())?;
    if x.len() + 1 >= g.k() {
        return Err(Error::SetTooLarge {
            size: x.len(),
            limit: g.k() - 2,
        });
    }
    Ok(g.edges()
        .iter()
        .filter(|e| x.is_subset(**e))
        .all(|e| !monochromatic(c, e.difference(x).iter().map(|u| e.remove(u)))))
}

/// A proper `t`-coloring of `g` that restricts properly to `lk_G(X)`, or
/// `None` if there is none. The search is exhaustive, so `None` is a proof of
/// non-existence. Uses the [`Budget::from_env`] node limit.
pub fn search_coloring(g: &KHypergraph, x: VertexSet, t: usize) -> Result<Option<TupleColoring>> {
    search_coloring_with(g, x, t, Budget::from_env())
}

pub fn search_coloring_with(g: &KHypergraph, x: VertexSet, t: usize, budget: Budget) -> Result<Option<TupleColoring>> {
    x.check_range(g.n())?;
    if x.len() + 1 >= g.k() && !(x.is_empty() && g.k() == 1) {
        return Err(Error::SetTooLarge {
            size: x.len(),
            limit: g.k().saturating_sub(2),
        });
    }
    if t == 0 {
        return Err(Error::NoColors);
    }
    let csp = Csp::new(g, x, t);
    if !x.is_empty() {
        // The constraints among tuples containing X form a sub-problem; if it
        // has no solution neither does the whole.
        if csp.restricted_to_prefix().solve(budget)?.is_none() {
            return Ok(None);
        }
    }
    let colors = csp.solve(budget)?;
    Ok(colors.map(|cols| TupleColoring {
        arity: g.k() - 1,
        n: g.n(),
        t,
        colors: cols.into_iter().map(u32::from).collect(),
    }))
}

const UNSET: u8 = u8::MAX;

/// Not-all-equal constraint satisfaction over tuple variables.
struct Csp {
    t: usize,
    nvars: usize,
    cons: Vec<Vec<u32>>,
    var_cons: Vec<Vec<u32>>,
    /// static tie-break order: lower is tried first
    priority: Vec<u32>,
    /// number of variables whose tuple contains X
    prefix: usize,
}

impl Csp {
    fn new(g: &KHypergraph, x: VertexSet, t: usize) -> Csp {
        let arity = g.k() - 1;
        let nvars = binomial(g.n(), arity) as usize;
        let mut cons: Vec<Vec<u32>> = Vec::with_capacity(g.edge_count());
        for e in g.edges() {
            let free = if !x.is_empty() && x.is_subset(*e) {
                e.difference(x)
            } else {
                *e
            };
            cons.push(free.iter().map(|u| e.remove(u).colex_rank() as u32).collect());
        }
        // tuples containing X first, colex order otherwise
        let mut order: Vec<usize> = (0..nvars).collect();
        let mut prefix = nvars;
        if !x.is_empty() {
            order.sort_by_key(|&r| (!x.is_subset(VertexSet::colex_unrank(r as u64, arity)), r));
            prefix = order
                .iter()
                .take_while(|&&r| x.is_subset(VertexSet::colex_unrank(r as u64, arity)))
                .count();
        }
        let mut priority = vec![0u32; nvars];
        for (p, &v) in order.iter().enumerate() {
            priority[v] = p as u32;
        }
        Csp::from_parts(t, nvars, cons, priority, prefix)
    }

    fn from_parts(t: usize, nvars: usize, cons: Vec<Vec<u32>>, priority: Vec<u32>, prefix: usize) -> Csp {
        let mut var_cons = vec![Vec::new(); nvars];
        for (i, c) in cons.iter().enumerate() {
            for &v in c {
                var_cons[v as usize].push(i as u32);
            }
        }
        Csp {
            // never more colors than variables; palettes are u64 masks
            t: t.min(nvars.max(1)).min(64),
            nvars,
            cons,
            var_cons,
            priority,
            prefix,
        }
    }

    /// The constraints whose variables all rank below `prefix` in the static order.
    fn restricted_to_prefix(&self) -> Csp {
        let p = self.prefix as u32;
        let cons = self
            .cons
            .iter()
            .filter(|c| c.iter().all(|&v| self.priority[v as usize] < p))
            .cloned()
            .collect();
        Csp::from_parts(self.t, self.nvars, cons, self.priority.clone(), self.nvars)
    }

    fn solve(&self, budget: Budget) -> Result<Option<Vec<u8>>> {
        // a one-variable not-all-equal constraint can never hold
        if self.cons.iter().any(|c| c.len() <= 1) || (self.t == 1 && !self.cons.is_empty()) {
            return Ok(None);
        }
        let full = if self.t >= 64 { u64::MAX } else { (1u64 << self.t) - 1 };
        let mut st = State {
            color: vec![UNSET; self.nvars],
            dom: vec![full; self.nvars],
            trail: Vec::new(),
            used: 0,
            nodes: 0,
        };
        for v in 0..self.nvars {
            if self.var_cons[v].is_empty() {
                st.color[v] = 0;
            }
        }
        let unassigned = st.color.iter().filter(|&&c| c == UNSET).count();
        match self.search(&mut st, unassigned, budget) {
            Ok(true) => {
                for c in st.color.iter_mut() {
                    if *c == UNSET {
                        *c = 0;
                    }
                }
                Ok(Some(st.color))
            }
            Ok(false) => Ok(None),
            Err(()) => Err(Error::BudgetExceeded(budget.nodes.unwrap_or(0))),
        }
    }

    fn pick(&self, st: &State) -> Option<usize> {
        let allowed = if st.used as usize >= self.t {
            u64::MAX
        } else {
            (1u64 << (st.used as usize + 1)) - 1
        };
        let mut best: Option<(u32, u32, usize)> = None;
        for v in 0..self.nvars {
            if st.color[v] != UNSET {
                continue;
            }
            let size = (st.dom[v] & allowed).count_ones();
            let key = (size, self.priority[v], v);
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
                if size <= 1 {
                    break;
                }
            }
        }
        best.map(|b| b.2)
    }

    fn search(&self, st: &mut State, unassigned: usize, budget: Budget) -> std::result::Result<bool, ()> {
        if unassigned == 0 {
            return Ok(true);
        }
        let var = self.pick(st).expect("an unassigned variable exists");
        let limit = (st.used as usize + 1).min(self.t);
        let mut d = st.dom[var] & if limit >= 64 { u64::MAX } else { (1u64 << limit) - 1 };
        while d != 0 {
            let c = d.trailing_zeros() as u8;
            d &= d - 1;
            st.nodes += 1;
            if budget.exceeded(st.nodes) {
                return Err(());
            }
            let mark = st.trail.len();
            let prev_used = st.used;
            if c == st.used {
                st.used += 1;
            }
            st.color[var] = c;
            if self.propagate(st, var, c) && self.search(st, unassigned - 1, budget)? {
                return Ok(true);
            }
            st.color[var] = UNSET;
            st.used = prev_used;
            while st.trail.len() > mark {
                let (v, old) = st.trail.pop().unwrap();
                st.dom[v as usize] = old;
            }
        }
        Ok(false)
    }

    /// Forward checking after `var := c`.
    fn propagate(&self, st: &mut State, var: usize, c: u8) -> bool {
        for &ci in &self.var_cons[var] {
            let mut open = None;
            let mut n_open = 0;
            let mut differs = false;
            for &v in &self.cons[ci as usize] {
                let cv = st.color[v as usize];
                if cv == UNSET {
                    n_open += 1;
                    open = Some(v as usize);
                } else if cv != c {
                    differs = true;
                    break;
                }
            }
            if differs {
                continue;
            }
            match n_open {
                0 => return false,
                1 => {
                    let u = open.unwrap();
                    let bit = 1u64 << c;
                    if st.dom[u] & bit != 0 {
                        st.trail.push((u as u32, st.dom[u]));
                        st.dom[u] &= !bit;
                        if st.dom[u] == 0 {
                            return false;
                        }
                    }
                }
                _ => {}
            }
        }
        true
    }
}

struct State {
    color: Vec<u8>,
    dom: Vec<u64>,
    trail: Vec<(u32, u64)>,
    used: u8,
    nodes: u64,
}

/// Glues per-`Y` colorings into one coloring, where `Y` ranges over the
/// `(k-2)`-sets. Vertices are ordered with `x` first (ascending), then the
/// rest ascending. A tuple `Z` gets the color `c_Y(Z)` for `Y` the first
/// `k-2` vertices of `Z` in that order.
///
/// Each needed `c_Y` must be proper for `g` and restrict properly to the link
/// of `Y`. The result is then proper and restricts properly to the link of `x`.
pub fn compose_berge_coloring(
    g: &KHypergraph,
    x: VertexSet,
    per_y: &HashMap<VertexSet, TupleColoring>,
) -> Result<TupleColoring> {
    let k = g.k();
    if k < 2 {
        return Err(Error::Uniformity(k));
    }
    x.check_range(g.n())?;
    if x.len() + 2 > k {
        return Err(Error::SetTooLarge {
            size: x.len(),
            limit: k - 2,
        });
    }
    let n = g.n();
    let order: Vec<usize> = x.iter().chain(VertexSet::full(n).difference(x).iter()).collect();
    let mut place = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        place[v] = i;
    }
    let head = |z: VertexSet| -> VertexSet {
        let mut vs: Vec<usize> = z.iter().collect();
        vs.sort_by_key(|&v| place[v]);
        vs[..k - 2].iter().copied().collect()
    };
    let mut checked: HashSet<VertexSet> = HashSet::new();
    let mut t = 1;
    let mut colors = Vec::with_capacity(binomial(n, k - 1) as usize);
    for z in VertexSet::full(n).subsets_of_size(k - 1) {
        let y = head(z);
        let cy = per_y.get(&y).ok_or_else(|| Error::MissingColoring(y.to_vec()))?;
        if !checked.contains(&y) {
            let ok = is_proper(g, cy)? && restricts_properly(g, y, cy)?;
            if !ok {
                return Err(Error::ImproperInput(y.to_vec()));
            }
            checked.insert(y);
            t = t.max(cy.colors());
        }
        colors.push(cy.get(z));
    }
    TupleColoring::new(k - 1, n, t, colors)
}

/// Which family of link sets a hereditary coloring check quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Mode {
    /// `|X| = k - 2`
    Berge,
    /// `|X| < k - 1`
    COmega,
}

/// Hereditary coloring checks with a verdict cache shared across calls.
///
/// Verdicts for induced subhypergraphs are cached by isomorphism class, so
/// checking a whole corpus re-searches each small class once.
pub struct Checker {
    budget: Budget,
    memo: DashMap<(Mode, CanonicalForm), Verdict>,
}

impl Default for Checker {
    fn default() -> Self {
        Checker::new(Budget::from_env())
    }
}

impl Checker {
    pub fn new(budget: Budget) -> Checker {
        Checker {
            budget,
            memo: DashMap::new(),
        }
    }

    /// A process-wide checker using the [`Budget::from_env`] budget.
    pub fn global() -> &'static Checker {
        static GLOBAL: OnceLock<Checker> = OnceLock::new();
        GLOBAL.get_or_init(Checker::default)
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// Every induced `G'` and every `X` with `|X| = k - 2` admit a proper
    /// `(ω(G') - k + 2)`-coloring restricting properly to the link of `X`.
    pub fn is_berge(&self, g: &KHypergraph) -> Certificate {
        self.hereditary(g, Mode::Berge)
    }

    /// As [`Checker::is_berge`] but for every `X` with `|X| < k - 1`.
    pub fn is_c_omega_perfect(&self, g: &KHypergraph) -> Certificate {
        self.hereditary(g, Mode::COmega)
    }

    /// The complement is C_ω-perfect.
    pub fn is_c_alpha_perfect(&self, g: &KHypergraph) -> Certificate {
        self.hereditary(&g.complement(), Mode::COmega)
    }

    fn hereditary(&self, g: &KHypergraph, mode: Mode) -> Certificate {
        let k = g.k();
        if k < 2 {
            return Certificate::holds(Witness::None);
        }
        let n = g.n();
        let mut unsettled: Option<VertexSet> = None;
        for size in k..=n {
            for s in VertexSet::full(n).subsets_of_size(size) {
                if g.edges_within(s) == 0 {
                    continue;
                }
                let sub = g.induced(s).expect("subset of the vertex set");
                let key = (mode, canonical_form(&sub));
                let verdict = match self.memo.get(&key) {
                    Some(v) => *v,
                    None => {
                        let v = self.local(&sub, mode).0;
                        self.memo.insert(key, v);
                        v
                    }
                };
                match verdict {
                    Verdict::Holds => {}
                    Verdict::Indeterminate => {
                        unsettled.get_or_insert(s);
                    }
                    Verdict::Fails => {
                        let (_, x, t) = self.local(&sub, mode);
                        return Certificate::fails(Witness::NoColoring {
                            vertices: s,
                            x: x.expand(s),
                            colors: t,
                        });
                    }
                }
            }
        }
        match unsettled {
            None => Certificate::holds(Witness::None),
            Some(s) => Certificate::indeterminate(format!(
                "coloring search on the induced subhypergraph {s:?} exceeded the node budget"
            )),
        }
    }

    /// Checks one instance against every admissible `X`. On failure also
    /// returns the first failing `X` (by size, then colex) and the palette.
    fn local(&self, g: &KHypergraph, mode: Mode) -> (Verdict, VertexSet, usize) {
        let k = g.k();
        let t = clique_number(g) + 2 - k;
        let sizes = match mode {
            Mode::Berge => k - 2..=k - 2,
            Mode::COmega => 0..=k - 2,
        };
        let mut verdict = Verdict::Holds;
        for size in sizes {
            for x in g.vertices().subsets_of_size(size) {
                match search_coloring_with(g, x, t, self.budget) {
                    Ok(Some(_)) => {}
                    Ok(None) => return (Verdict::Fails, x, t),
                    Err(_) => verdict = Verdict::Indeterminate,
                }
            }
        }
        (verdict, VertexSet::EMPTY, t)
    }
}

/// [`Checker::is_berge`] on the shared [`Checker::global`] cache.
pub fn is_berge(g: &KHypergraph) -> Certificate {
    Checker::global().is_berge(g)
}

/// [`Checker::is_c_omega_perfect`] on the shared [`Checker::global`] cache.
pub fn is_c_omega_perfect(g: &KHypergraph) -> Certificate {
    Checker::global().is_c_omega_perfect(g)
}

/// [`Checker::is_c_alpha_perfect`] on the shared [`Checker::global`] cache.
pub fn is_c_alpha_perfect(g: &KHypergraph) -> Certificate {
    Checker::global().is_c_alpha_perfect(g)
}
