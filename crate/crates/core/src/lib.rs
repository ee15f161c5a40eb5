//! Exact decision procedures for perfectness classes of small `k`-uniform
//! hypergraphs, with a certificate attached to every verdict.

pub mod canon;
pub mod certificate;
pub mod classify;
pub mod clique;
pub mod cocycle;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph_perfect;
pub mod hypergraph;
pub mod khg;
pub mod ramsey;
pub mod verify;
pub mod vertex_set;

pub use certificate::{Certificate, Verdict, Witness};
pub use error::{Error, Result};
pub use hypergraph::{Graph, KHypergraph};
pub use vertex_set::VertexSet;

// The guide's snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hypergraphs.md")]
    mod hypergraphs {}
    #[doc = include_str!("../../../book/src/classes.md")]
    mod classes {}
    #[doc = include_str!("../../../book/src/coloring.md")]
    mod coloring {}
    #[doc = include_str!("../../../book/src/cocycles.md")]
    mod cocycles {}
    #[doc = include_str!("../../../book/src/extremal.md")]
    mod extremal {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
