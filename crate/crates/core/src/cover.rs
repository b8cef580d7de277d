//! The solution object: `k` vertex subsets whose induced subgraphs must
//! jointly contain every edge of the host graph.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An ordered list of vertex subsets of a host graph of order `host_order`.
///
/// Slots may be empty; algorithms always return exactly `k` slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    host_order: usize,
    subsets: Vec<VertexSet>,
}

impl Cover {
    pub fn new(host_order: usize, subsets: Vec<VertexSet>) -> Result<Self> {
        for s in &subsets {
            if let Some(v) = s.max().filter(|&v| v >= host_order) {
                return Err(Error::InvalidCover(format!(
                    "vertex {v} out of range for graph of order {host_order}"
                )));
            }
        }
        Ok(Cover {
            host_order,
            subsets,
        })
    }

    /// `k` empty slots.
    pub fn empty(host_order: usize, k: usize) -> Self {
        Cover {
            host_order,
            subsets: vec![VertexSet::new(); k],
        }
    }

    /// Like [`Cover::new`] but appends empty slots until there are `k`.
    pub fn padded(host_order: usize, mut subsets: Vec<VertexSet>, k: usize) -> Result<Self> {
        if subsets.len() > k {
            return Err(Error::InvalidCover(format!(
                "{} subsets exceed k = {k}",
                subsets.len()
            )));
        }
        subsets.resize(k, VertexSet::new());
        Cover::new(host_order, subsets)
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn k(&self) -> usize {
        self.subsets.len()
    }

    pub fn subsets(&self) -> &[VertexSet] {
        &self.subsets
    }

    pub fn into_subsets(self) -> Vec<VertexSet> {
        self.subsets
    }

    pub fn nonempty_count(&self) -> usize {
        self.subsets.iter().filter(|s| !s.is_empty()).count()
    }

    pub fn cost(&self) -> usize {
        cover_cost(self)
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.subsets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// An edge of the host graph that no subset contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoverViolation {
    pub edge: (usize, usize),
}

/// Every edge of `g` not contained in some subset, in canonical edge order.
/// An empty result means `c` is feasible.
pub fn validate_cover(g: &Graph, c: &Cover) -> Result<Vec<CoverViolation>> {
    if c.host_order != g.order() {
        return Err(Error::InvalidCover(format!(
            "cover is for a graph of order {}, host has order {}",
            c.host_order,
            g.order()
        )));
    }
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (i, s) in c.subsets.iter().enumerate() {
        s.check_range(g.order())
            .map_err(|e| Error::InvalidCover(e.to_string()))?;
        for v in s {
            member_of[v].push(i);
        }
    }
    let shares_subset = |u: usize, v: usize| {
        let (a, b) = (&member_of[u], &member_of[v]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    };
    Ok(g.edges()
        .iter()
        .filter(|&&(u, v)| !shares_subset(u, v))
        .map(|&edge| CoverViolation { edge })
        .collect())
}

pub fn is_valid_cover(g: &Graph, c: &Cover) -> bool {
    matches!(validate_cover(g, c), Ok(v) if v.is_empty())
}

/// Largest subset cardinality; 0 when every slot is empty.
pub fn cover_cost(c: &Cover) -> usize {
    c.subsets.iter().map(VertexSet::len).max().unwrap_or(0)
}

/// Fills every subset up to the cover's cost with the smallest-index
/// vertices it does not yet contain. Cost and validity are unchanged.
pub fn pad_equalize(g: &Graph, c: &Cover) -> Result<Cover> {
    let violations = validate_cover(g, c)?;
    if let Some(first) = violations.first() {
        return Err(Error::InvalidCover(format!(
            "edge {:?} is not covered",
            first.edge
        )));
    }
    let cost = cover_cost(c);
    if cost > g.order() {
        return Err(Error::InvalidCover(format!(
            "cost {cost} exceeds graph order {}",
            g.order()
        )));
    }
    let subsets = c
        .subsets
        .iter()
        .map(|s| {
            let mut s = s.clone();
            let mut next = 0;
            while s.len() < cost {
                s.insert(next);
                next += 1;
            }
            s
        })
        .collect();
    Cover::new(c.host_order, subsets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cover(n: usize, sets: &[&[usize]]) -> Cover {
        Cover::new(n, sets.iter().map(|s| s.iter().copied().collect()).collect()).unwrap()
    }

    #[test]
    fn validation_examples() {
        let g = path(3);
        assert!(validate_cover(&g, &cover(3, &[&[0, 1], &[1, 2]])).unwrap().is_empty());
        assert_eq!(
            validate_cover(&g, &cover(3, &[&[0, 1], &[0, 2]])).unwrap(),
            vec![CoverViolation { edge: (1, 2) }]
        );

        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            validate_cover(&k4, &cover(4, &[&[0, 1, 2], &[0, 1, 3]])).unwrap(),
            vec![CoverViolation { edge: (2, 3) }]
        );
    }

    #[test]
    fn out_of_range_cover_is_rejected() {
        assert!(Cover::new(3, vec![VertexSet::from([3])]).is_err());
        let c = cover(4, &[&[3]]);
        assert!(matches!(validate_cover(&path(3), &c), Err(Error::InvalidCover(_))));
    }

    #[test]
    fn cost_examples() {
        assert_eq!(cover_cost(&cover(3, &[&[0, 1], &[1, 2]])), 2);
        assert_eq!(cover_cost(&Cover::empty(3, 2)), 0);
        assert_eq!(cover_cost(&cover(6, &[&[0, 1, 2, 3], &[3, 4, 5]])), 4);
    }

    #[test]
    fn padding_examples() {
        let g = path(3);
        let padded = pad_equalize(&g, &cover(3, &[&[0, 1, 2], &[1, 2]])).unwrap();
        assert_eq!(padded, cover(3, &[&[0, 1, 2], &[0, 1, 2]]));
        assert_eq!(pad_equalize(&g, &padded).unwrap(), padded);

        let p5 = path(5);
        let c = cover(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(pad_equalize(&p5, &c).unwrap(), c);

        assert!(pad_equalize(&g, &cover(3, &[&[0, 1]])).is_err());
    }

    #[test]
    fn padded_slots() {
        let c = Cover::padded(3, vec![VertexSet::from([0, 1])], 3).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(c.nonempty_count(), 1);
        assert!(Cover::padded(3, vec![VertexSet::new(); 2], 1).is_err());
    }
}
