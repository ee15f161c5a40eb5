//! Verdicts and the witnesses attached to them.

use serde::{Serialize, Serializer};

use crate::coloring::TupleColoring;
use crate::vertex_set::VertexSet;

/// Outcome of a decision procedure. `Indeterminate` means a search budget
/// ran out before the question was settled; it is never a disguised `false`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    Indeterminate,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }

    pub fn fails(self) -> bool {
        self == Verdict::Fails
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails => Some(false),
            Verdict::Indeterminate => None,
        }
    }

    /// Conjunction with indeterminate absorbing unless some operand fails.
    pub fn and(self, o: Verdict) -> Verdict {
        match (self, o) {
            (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
            (Verdict::Holds, Verdict::Holds) => Verdict::Holds,
            _ => Verdict::Indeterminate,
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Holds => s.serialize_bool(true),
            Verdict::Fails => s.serialize_bool(false),
            Verdict::Indeterminate => s.serialize_str("indeterminate"),
        }
    }
}

/// Concrete evidence for a verdict. Vertex labels always refer to the
/// hypergraph the verdict is about.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    None,
    /// A proper coloring of the `(k-1)`-tuples.
    Coloring {
        coloring: TupleColoring,
    },
    /// Colorings of `G` and `G^c` and the size of their product palette.
    ColoringPair {
        of_graph: TupleColoring,
        of_complement: TupleColoring,
        product_colors: usize,
    },
    /// `G[vertices]` has no proper `colors`-coloring restricting properly to
    /// the link of `x`.
    NoColoring {
        vertices: VertexSet,
        x: VertexSet,
        colors: usize,
    },
    /// The complement has no proper `colors`-coloring.
    ComplementNoColoring {
        colors: usize,
    },
    /// An induced subgraph with `χ > ω`.
    ChiAboveOmega {
        vertices: VertexSet,
        chi: usize,
        omega: usize,
    },
    /// An induced subgraph with `α·ω < |V|`.
    AlphaOmegaDeficit {
        vertices: VertexSet,
        alpha: usize,
        omega: usize,
    },
    /// An odd hole, or an odd antihole when `antihole` is set, in cyclic order.
    OddHole {
        cycle: Vec<usize>,
        antihole: bool,
    },
    /// A vertex set spanning a forbidden number of edges.
    EdgeCount {
        vertices: VertexSet,
        edges: usize,
    },
    /// The link of `x` fails, with the reason.
    Link {
        x: VertexSet,
        cause: Box<Certificate>,
    },
    /// `|V(L)| >= R_s(k)` for `L` the link of `x` inside `G[vertices]`.
    RamseyBound {
        vertices: VertexSet,
        x: VertexSet,
        size: usize,
        s: usize,
        k: usize,
        bound: usize,
    },
    /// The index `R_s(k)` is not known.
    RamseyUnknown {
        vertices: VertexSet,
        x: VertexSet,
        s: usize,
        k: usize,
    },
    /// Every `p`-set holds a `q`-clique, yet the clique cover number exceeds `p - q + 1`.
    HadwigerDebrunner {
        p: usize,
        q: usize,
        cover_number: usize,
    },
    /// A cover of the vertex set by independent sets or cliques.
    Cover {
        sets: Vec<VertexSet>,
    },
    /// A cover larger than the bound.
    CoverTooLarge {
        bound: usize,
        cover: Vec<VertexSet>,
    },
    /// An induced subhypergraph where the upper chromatic number and `α` differ.
    Voloshin {
        vertices: VertexSet,
        upper_chromatic: usize,
        alpha: usize,
    },
    /// A graph `G` with `co(G)` equal to the hypergraph.
    CocycleRepresentative {
        edges: Vec<(usize, usize)>,
    },
    /// A vertex that is not pure, the failed condition (1 to 6) and the
    /// offending vertex set or cyclic sequence.
    Impure {
        vertex: usize,
        condition: u8,
        vertices: Vec<usize>,
    },
    /// Free-form note, used with indeterminate verdicts.
    Note {
        text: String,
    },
}

impl Witness {
    /// The same witness with every vertex `v` renamed to `f(v)`. Colorings
    /// are left unchanged.
    pub fn map_vertices(&self, f: &dyn Fn(usize) -> usize) -> Witness {
        let set = |s: &VertexSet| s.iter().map(f).collect::<VertexSet>();
        let list = |v: &[usize]| v.iter().map(|&u| f(u)).collect::<Vec<_>>();
        match self {
            Witness::NoColoring { vertices, x, colors } => Witness::NoColoring {
                vertices: set(vertices),
                x: set(x),
                colors: *colors,
            },
            Witness::ChiAboveOmega { vertices, chi, omega } => Witness::ChiAboveOmega {
                vertices: set(vertices),
                chi: *chi,
                omega: *omega,
            },
            Witness::AlphaOmegaDeficit { vertices, alpha, omega } => Witness::AlphaOmegaDeficit {
                vertices: set(vertices),
                alpha: *alpha,
                omega: *omega,
            },
            Witness::OddHole { cycle, antihole } => Witness::OddHole {
                cycle: list(cycle),
                antihole: *antihole,
            },
            Witness::EdgeCount { vertices, edges } => Witness::EdgeCount {
                vertices: set(vertices),
                edges: *edges,
            },
            Witness::Link { x, cause } => Witness::Link {
                x: set(x),
                cause: Box::new(Certificate {
                    verdict: cause.verdict,
                    witness: cause.witness.map_vertices(f),
                }),
            },
            Witness::RamseyBound {
                vertices,
                x,
                size,
                s,
                k,
                bound,
            } => Witness::RamseyBound {
                vertices: set(vertices),
                x: set(x),
                size: *size,
                s: *s,
                k: *k,
                bound: *bound,
            },
            Witness::RamseyUnknown { vertices, x, s, k } => Witness::RamseyUnknown {
                vertices: set(vertices),
                x: set(x),
                s: *s,
                k: *k,
            },
            Witness::Cover { sets } => Witness::Cover {
                sets: sets.iter().map(set).collect(),
            },
            Witness::CoverTooLarge { bound, cover } => Witness::CoverTooLarge {
                bound: *bound,
                cover: cover.iter().map(set).collect(),
            },
            Witness::Voloshin {
                vertices,
                upper_chromatic,
                alpha,
            } => Witness::Voloshin {
                vertices: set(vertices),
                upper_chromatic: *upper_chromatic,
                alpha: *alpha,
            },
            Witness::CocycleRepresentative { edges } => Witness::CocycleRepresentative {
                edges: edges.iter().map(|&(a, b)| (f(a), f(b))).collect(),
            },
            Witness::Impure {
                vertex,
                condition,
                vertices,
            } => Witness::Impure {
                vertex: f(*vertex),
                condition: *condition,
                vertices: list(vertices),
            },
            other => other.clone(),
        }
    }
}

/// A verdict with its witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub witness: Witness,
}

impl Certificate {
    pub fn holds(witness: Witness) -> Self {
        Certificate {
            verdict: Verdict::Holds,
            witness,
        }
    }

    pub fn fails(witness: Witness) -> Self {
        Certificate {
            verdict: Verdict::Fails,
            witness,
        }
    }

    pub fn indeterminate(text: impl Into<String>) -> Self {
        Certificate {
            verdict: Verdict::Indeterminate,
            witness: Witness::Note { text: text.into() },
        }
    }

    pub fn is_true(&self) -> bool {
        self.verdict.holds()
    }

    pub fn is_false(&self) -> bool {
        self.verdict.fails()
    }

    /// Conjunction: the first failing operand's certificate, else the first
    /// indeterminate one, else `self`.
    pub fn and(self, other: Certificate) -> Certificate {
        match (self.verdict, other.verdict) {
            (Verdict::Fails, _) => self,
            (_, Verdict::Fails) => other,
            (Verdict::Indeterminate, _) => self,
            (_, Verdict::Indeterminate) => other,
            _ => self,
        }
    }
}
