//! Uniform hypergraphs and the algebra on them: complement, induced
//! subhypergraphs and links.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{binomial, VertexSet, MAX_VERTICES};

/// Upper bound on `C(n, k)`, the number of edge slots of a single instance.
pub const MAX_EDGE_SLOTS: u64 = 1 << 24;

/// A `k`-uniform hypergraph on the vertices `0..n`.
///
/// Edges live in a bitset indexed by colex rank, alongside the list of edge
/// vertex sets in colex order. Instances are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KHypergraph {
    k: usize,
    n: usize,
    bits: Vec<u64>,
    edges: Vec<VertexSet>,
}

fn check_shape(k: usize, n: usize) -> Result<u64> {
    if k == 0 {
        return Err(Error::Uniformity(k));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: n,
            max: MAX_VERTICES,
        });
    }
    let slots = binomial(n, k);
    if slots > MAX_EDGE_SLOTS {
        return Err(Error::SetTooLarge {
            size: slots as usize,
            limit: MAX_EDGE_SLOTS as usize,
        });
    }
    Ok(slots)
}

impl KHypergraph {
    /// Builds a hypergraph from explicit edges. Duplicates are merged.
    ///
    /// Uniformity 1 is accepted because links of `(k-1)`-sets are 1-uniform.
    pub fn new<E, I>(k: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let sets = edges
            .into_iter()
            .map(|e| {
                let e = e.as_ref();
                let s = VertexSet::from_slice(e);
                if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                    return Err(Error::VertexOutOfRange { vertex: bad, n });
                }
                if s.len() != k || e.len() != k {
                    return Err(Error::BadEdge { edge: e.to_vec(), k });
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_edge_sets(k, n, sets)
    }

    /// Builds a hypergraph from edges given as vertex sets.
    pub fn from_edge_sets<I: IntoIterator<Item = VertexSet>>(k: usize, n: usize, edges: I) -> Result<Self> {
        let slots = check_shape(k, n)?;
        let mut bits = vec![0u64; slots.div_ceil(64) as usize];
        for e in edges {
            e.check_range(n)?;
            if e.len() != k {
                return Err(Error::BadEdge { edge: e.to_vec(), k });
            }
            let r = e.colex_rank() as usize;
            bits[r / 64] |= 1 << (r % 64);
        }
        Ok(Self::from_bits(k, n, bits))
    }

    /// Instance whose edge bitset is `mask`, for `C(n, k) <= 64`.
    pub fn from_rank_mask(k: usize, n: usize, mask: u64) -> Result<Self> {
        let slots = check_shape(k, n)?;
        if slots > 64 {
            return Err(Error::SetTooLarge {
                size: slots as usize,
                limit: 64,
            });
        }
        let mask = if slots == 64 {
            mask
        } else {
            mask & ((1u64 << slots) - 1)
        };
        Ok(Self::from_bits(k, n, vec![mask]))
    }

    pub(crate) fn from_bits(k: usize, n: usize, bits: Vec<u64>) -> Self {
        let mut edges = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            let mut word = word;
            while word != 0 {
                let b = word.trailing_zeros() as u64;
                word &= word - 1;
                edges.push(VertexSet::colex_unrank(w as u64 * 64 + b, k));
            }
        }
        KHypergraph { k, n, bits, edges }
    }

    /// `K_n^k`.
    pub fn complete(k: usize, n: usize) -> Result<Self> {
        let slots = check_shape(k, n)?;
        let mut bits = vec![u64::MAX; slots.div_ceil(64) as usize];
        trim(&mut bits, slots);
        Ok(Self::from_bits(k, n, bits))
    }

    pub fn empty(k: usize, n: usize) -> Result<Self> {
        let slots = check_shape(k, n)?;
        Ok(KHypergraph {
            k,
            n,
            bits: vec![0; slots.div_ceil(64) as usize],
            edges: Vec::new(),
        })
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in colex order.
    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of `k`-subsets, i.e. `C(n, k)`.
    pub fn slot_count(&self) -> u64 {
        binomial(self.n, self.k)
    }

    /// Raw colex-indexed edge bitset.
    pub fn edge_bits(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    pub fn has_edge(&self, e: VertexSet) -> bool {
        if e.len() != self.k || e.span() > self.n {
            return false;
        }
        let r = e.colex_rank() as usize;
        self.bits[r / 64] >> (r % 64) & 1 == 1
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() as u64 == self.slot_count()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Number of edges contained in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        if s.len() < self.k {
            return 0;
        }
        // Cheaper to probe the k-subsets of a small set than to scan every edge.
        if binomial(s.len(), self.k) < self.edges.len() as u64 {
            s.subsets_of_size(self.k).filter(|&e| self.has_edge(e)).count()
        } else {
            self.edges.iter().filter(|e| e.is_subset(s)).count()
        }
    }

    /// Whether every `k`-subset of `s` is an edge. Sets smaller than `k`
    /// count as complete.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        self.edges_within(s) as u64 == binomial(s.len(), self.k)
    }

    /// Whether `s` contains no edge.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        if s.len() < self.k {
            return true;
        }
        if binomial(s.len(), self.k) < self.edges.len() as u64 {
            s.subsets_of_size(self.k).all(|e| !self.has_edge(e))
        } else {
            !self.edges.iter().any(|e| e.is_subset(s))
        }
    }

    /// `G^c`: the `k`-subsets that are not edges of `self`.
    pub fn complement(&self) -> KHypergraph {
        let slots = self.slot_count();
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        trim(&mut bits, slots);
        Self::from_bits(self.k, self.n, bits)
    }

    /// `G[X]`, relabeled so that the members of `x` become `0..|x|` in order.
    pub fn induced(&self, x: VertexSet) -> Result<KHypergraph> {
        x.check_range(self.n)?;
        Ok(self.induced_unchecked(x))
    }

    pub(crate) fn induced_unchecked(&self, x: VertexSet) -> KHypergraph {
        let n = x.len();
        if x == VertexSet::full(self.n) {
            return self.clone();
        }
        if x == VertexSet::full(n) {
            // a prefix keeps colex ranks
            let slots = binomial(n, self.k);
            let mut bits: Vec<u64> = self.bits[..slots.div_ceil(64) as usize].to_vec();
            trim(&mut bits, slots);
            return Self::from_bits(self.k, n, bits);
        }
        let slots = binomial(n, self.k);
        let mut bits = vec![0u64; slots.div_ceil(64) as usize];
        for e in &self.edges {
            if e.is_subset(x) {
                let r = e.compress(x).colex_rank() as usize;
                bits[r / 64] |= 1 << (r % 64);
            }
        }
        Self::from_bits(self.k, n, bits)
    }

    /// `lk_G(X)`: the `(k-|X|)`-uniform hypergraph on `V \ X` whose edges
    /// are the sets `Y` with `X ∪ Y` an edge. Vertices of `V \ X` are
    /// relabeled by rank.
    pub fn link(&self, x: VertexSet) -> Result<KHypergraph> {
        x.check_range(self.n)?;
        if x.len() >= self.k {
            return Err(Error::SetTooLarge {
                size: x.len(),
                limit: self.k - 1,
            });
        }
        let rest = self.vertices().difference(x);
        let k = self.k - x.len();
        let slots = binomial(rest.len(), k);
        let mut bits = vec![0u64; slots.div_ceil(64) as usize];
        for e in &self.edges {
            if x.is_subset(*e) {
                let r = e.difference(x).compress(rest).colex_rank() as usize;
                bits[r / 64] |= 1 << (r % 64);
            }
        }
        Ok(Self::from_bits(k, rest.len(), bits))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> KHypergraph {
        assert_eq!(perm.len(), self.n);
        let slots = self.slot_count();
        let mut bits = vec![0u64; slots.div_ceil(64) as usize];
        for e in &self.edges {
            let r = e.iter().map(|v| perm[v]).collect::<VertexSet>().colex_rank() as usize;
            bits[r / 64] |= 1 << (r % 64);
        }
        Self::from_bits(self.k, self.n, bits)
    }

    /// Appends `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> Result<KHypergraph> {
        KHypergraph::from_edge_sets(self.k, self.n + extra, self.edges.iter().copied())
    }
}

fn trim(bits: &mut [u64], slots: u64) {
    let rem = slots % 64;
    if rem != 0 {
        if let Some(last) = bits.last_mut() {
            *last &= (1u64 << rem) - 1;
        }
    }
}

impl fmt::Debug for KHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KHypergraph(k={}, n={}, edges=[", self.k, self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            for v in e.iter() {
                write!(f, "{}", to_digit(v))?;
            }
        }
        f.write_str("])")
    }
}

fn to_digit(v: usize) -> char {
    std::char::from_digit(v as u32, 36).unwrap_or('?')
}

/// A simple graph: a 2-uniform hypergraph with cached neighborhoods.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    h: KHypergraph,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let h = KHypergraph::new(2, n, edges.iter().map(|&(a, b)| [a, b]))?;
        Ok(Graph::from_parts(h))
    }

    pub fn from_hypergraph(h: KHypergraph) -> Result<Graph> {
        if h.k() != 2 {
            return Err(Error::UniformityMismatch {
                expected: 2,
                got: h.k(),
            });
        }
        Ok(Graph::from_parts(h))
    }

    pub fn from_adjacency(adj: &[VertexSet]) -> Result<Graph> {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, nb) in adj.iter().enumerate() {
            for v in nb.iter().filter(|&v| v > u) {
                edges.push(VertexSet::from_slice(&[u, v]));
            }
        }
        let h = KHypergraph::from_edge_sets(2, n, edges)?;
        let g = Graph::from_parts(h);
        if g.adj != adj {
            return Err(Error::Parse {
                line: 0,
                msg: "adjacency is not symmetric or has loops".into(),
            });
        }
        Ok(g)
    }

    fn from_parts(h: KHypergraph) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; h.n()];
        for e in h.edges() {
            let (a, b) = (e.first().unwrap(), e.last().unwrap());
            adj[a] = adj[a].insert(b);
            adj[b] = adj[b].insert(a);
        }
        Graph { h, adj }
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Ok(Graph::from_parts(KHypergraph::empty(2, n)?))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Ok(Graph::from_parts(KHypergraph::complete(2, n)?))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.h.n()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        self.h.vertices()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Vertices other than `v` that are not adjacent to it.
    #[inline]
    pub fn non_neighbors(&self, v: usize) -> VertexSet {
        self.vertices().difference(self.adj[v]).remove(v)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.h.edge_count()
    }

    pub fn edge_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.h.edges().iter().map(|e| (e.first().unwrap(), e.last().unwrap()))
    }

    pub fn as_hypergraph(&self) -> &KHypergraph {
        &self.h
    }

    pub fn into_hypergraph(self) -> KHypergraph {
        self.h
    }

    pub fn complement(&self) -> Graph {
        Graph::from_parts(self.h.complement())
    }

    pub fn induced(&self, x: VertexSet) -> Result<Graph> {
        Ok(Graph::from_parts(self.h.induced(x)?))
    }

    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_parts(self.h.relabel(perm))
    }

    /// Some triangle, if one exists.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (a, b) in self.edge_pairs() {
            let common = self.adj[a].intersection(self.adj[b]);
            if let Some(c) = common.first() {
                let mut t = [a, b, c];
                t.sort_unstable();
                return Some(t);
            }
        }
        None
    }

    /// Whether `v` is adjacent to every vertex of `s`.
    pub fn is_complete_to(&self, v: usize, s: VertexSet) -> bool {
        s.is_subset(self.adj[v])
    }

    /// Whether `v` has no neighbor in `s`.
    pub fn is_anticomplete_to(&self, v: usize, s: VertexSet) -> bool {
        self.adj[v].intersection(s).is_empty()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edge_pairs().collect::<Vec<_>>()
        )
    }
}

impl TryFrom<KHypergraph> for Graph {
    type Error = Error;
    fn try_from(h: KHypergraph) -> Result<Graph> {
        Graph::from_hypergraph(h)
    }
}

impl From<Graph> for KHypergraph {
    fn from(g: Graph) -> KHypergraph {
        g.h
    }
}

impl AsRef<KHypergraph> for Graph {
    fn as_ref(&self) -> &KHypergraph {
        &self.h
    }
}

impl AsRef<KHypergraph> for KHypergraph {
    fn as_ref(&self) -> &KHypergraph {
        self
    }
}

impl serde::Serialize for KHypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("KHypergraph", 3)?;
        st.serialize_field("k", &self.k())?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("edges", &self.edges().iter().map(|e| e.to_vec()).collect::<Vec<_>>())?;
        st.end()
    }
}
