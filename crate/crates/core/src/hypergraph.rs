//! Hypergraph covers: every hyperedge must lie inside one of the subsets.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertices `0..n` and a duplicate-free family of hyperedges, each with at
/// least two vertices. Hyperedges are kept in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let mut out = Vec::new();
        for e in edges {
            if e.len() < 2 {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {e} has fewer than two vertices"
                )));
            }
            e.check_range(n)?;
            out.push(e);
        }
        out.sort();
        out.dedup();
        Ok(Hypergraph { n, edges: out })
    }

    pub fn from_graph(g: &Graph) -> Self {
        Hypergraph {
            n: g.order(),
            edges: g.edges().iter().map(|&(u, v)| VertexSet::from([u, v])).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }
}

/// Drops every hyperedge strictly contained in another one. A subset that
/// contains a hyperedge contains all of its sub-edges, so validity of any
/// cover is unchanged.
pub fn normalize(h: &Hypergraph) -> Hypergraph {
    let edges = h
        .edges
        .iter()
        .filter(|e| !h.edges.iter().any(|f| f.len() > e.len() && e.is_subset(f)))
        .cloned()
        .collect();
    Hypergraph { n: h.n, edges }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperCover {
    pub subsets: Vec<VertexSet>,
    /// Largest allowed subset, if enforced.
    pub size_cap: Option<usize>,
}

/// Hyperedges not contained in any subset. Subsets over the cap are an
/// error rather than a violation.
pub fn validate_hypercover(h: &Hypergraph, c: &HyperCover) -> Result<Vec<VertexSet>> {
    for s in &c.subsets {
        s.check_range(h.n)?;
    }
    if let Some(cap) = c.size_cap {
        let over: Vec<usize> = c
            .subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.len() > cap)
            .map(|(i, _)| i)
            .collect();
        if !over.is_empty() {
            return Err(Error::CapViolation { subsets: over, cap });
        }
    }
    Ok(h.edges
        .iter()
        .filter(|e| !c.subsets.iter().any(|s| e.is_subset(s)))
        .cloned()
        .collect())
}
