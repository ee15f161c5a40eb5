//! Exhaustive streams of small uniform hypergraphs, labeled or one per
//! isomorphism class.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, KHypergraph};
use crate::vertex_set::{binomial, VertexSet};

/// Default log2 bound on the number of instances (or augmentation steps) an
/// enumeration may touch.
pub const DEFAULT_CAP_EXPONENT: usize = 26;

/// Every labeled `k`-uniform hypergraph on `n` vertices, in increasing order
/// of the colex-indexed edge bitset.
pub fn labeled(k: usize, n: usize, cap_exponent: usize) -> Result<impl Iterator<Item = KHypergraph> + Send> {
    if k == 0 {
        return Err(Error::Uniformity(k));
    }
    let slots = binomial(n, k) as usize;
    if slots > cap_exponent || slots >= 64 {
        return Err(Error::EnumerationTooLarge {
            exponent: slots,
            cap: cap_exponent.min(63),
        });
    }
    Ok((0..1u64 << slots).map(move |m| KHypergraph::from_rank_mask(k, n, m).expect("checked shape")))
}

/// One representative per isomorphism class (the canonical one), sorted by
/// [`CanonicalForm`].
///
/// Classes on `n` vertices are grown from the classes on `n - 1` vertices by
/// adding vertex `n - 1` with every possible link.
pub fn iso_classes(k: usize, n: usize, cap_exponent: usize) -> Result<Vec<KHypergraph>> {
    if k == 0 {
        return Err(Error::Uniformity(k));
    }
    let mut reps = vec![KHypergraph::empty(k, 0)?];
    for m in 1..=n {
        reps = extend_by_vertex(&reps, k, m, cap_exponent)?;
    }
    Ok(reps)
}

fn extend_by_vertex(reps: &[KHypergraph], k: usize, m: usize, cap_exponent: usize) -> Result<Vec<KHypergraph>> {
    let link_slots = binomial(m - 1, k - 1) as usize;
    let work = reps.len().max(1).ilog2() as usize + 1 + link_slots;
    if work > cap_exponent || link_slots >= 64 {
        return Err(Error::EnumerationTooLarge {
            exponent: work,
            cap: cap_exponent,
        });
    }
    let last = m - 1;
    let link_sets: Vec<VertexSet> = VertexSet::full(m - 1).subsets_of_size(k - 1).collect();
    let forms: HashSet<CanonicalForm> = reps
        .par_iter()
        .flat_map_iter(|r| {
            let base: Vec<VertexSet> = r.edges().to_vec();
            let link_sets = &link_sets;
            (0..1u64 << link_slots).map(move |mask| {
                let mut edges = base.clone();
                edges.extend(VertexSet(mask).iter().map(|i| link_sets[i].insert(last)));
                let g = KHypergraph::from_edge_sets(k, m, edges).expect("valid augmentation");
                canonical_form(&g)
            })
        })
        .collect();
    let mut forms: Vec<CanonicalForm> = forms.into_iter().collect();
    forms.sort();
    Ok(forms.iter().map(CanonicalForm::to_hypergraph).collect())
}

/// All `k`-uniform hypergraphs on `n` vertices, each exactly once (up to
/// isomorphism if `iso` is set), in a deterministic order.
pub fn enumerate(k: usize, n: usize, iso: bool) -> Result<Box<dyn Iterator<Item = KHypergraph> + Send>> {
    enumerate_capped(k, n, iso, DEFAULT_CAP_EXPONENT)
}

pub fn enumerate_capped(
    k: usize,
    n: usize,
    iso: bool,
    cap_exponent: usize,
) -> Result<Box<dyn Iterator<Item = KHypergraph> + Send>> {
    if iso {
        Ok(Box::new(iso_classes(k, n, cap_exponent)?.into_iter()))
    } else {
        Ok(Box::new(labeled(k, n, cap_exponent)?))
    }
}

/// Iso classes of graphs on `n` vertices.
pub fn graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(iso_classes(2, n, DEFAULT_CAP_EXPONENT)?
        .into_iter()
        .map(|h| Graph::from_hypergraph(h).expect("2-uniform"))
        .collect())
}

/// Iso classes of graphs on at most `n` vertices, by increasing size.
pub fn graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for m in 0..=n {
        out.extend(graphs(m)?);
    }
    Ok(out)
}

/// Iso classes of `k`-uniform hypergraphs on at most `n` vertices.
pub fn iso_classes_up_to(k: usize, n: usize) -> Result<Vec<KHypergraph>> {
    let mut out = Vec::new();
    for m in 0..=n {
        out.extend(iso_classes(k, m, DEFAULT_CAP_EXPONENT)?);
    }
    Ok(out)
}
