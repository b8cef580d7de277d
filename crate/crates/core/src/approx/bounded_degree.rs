use crate::cover::Cover;
use crate::error::Result;
use crate::graph::{closed_neighborhood, maximal_matching_vertex_cover, Graph, VertexSet};

use super::check_k;

/// Closed neighbourhoods of a matching-based vertex cover, grouped into
/// `k` subsets.
///
/// With `c` cover vertices, neighbourhoods are ranked by descending size
/// (smaller cover vertex first on ties) and dealt round-robin, so each
/// group unions at most `⌈c/k⌉` neighbourhoods and the cost is at most
/// `⌈c/k⌉·(Δ+1)`.
pub fn cover_bounded_degree(g: &Graph, k: usize) -> Result<Cover> {
    check_k(k)?;
    let centres = maximal_matching_vertex_cover(g);
    let mut hoods = centres
        .iter()
        .map(|u| closed_neighborhood(g, u))
        .collect::<Result<Vec<_>>>()?;
    if hoods.len() <= k {
        return Cover::padded(g.order(), hoods, k);
    }
    // stable sort keeps ascending centre order within equal sizes
    hoods.sort_by_key(|h| std::cmp::Reverse(h.len()));
    let mut groups = vec![VertexSet::new(); k];
    for (rank, hood) in hoods.into_iter().enumerate() {
        groups[rank % k].extend(hood.iter());
    }
    Cover::new(g.order(), groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::is_valid_cover;

    #[test]
    fn examples() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = cover_bounded_degree(&p4, 1).unwrap();
        assert_eq!(c.subsets()[0], VertexSet::from([0, 1, 2, 3]));

        let edge = Graph::new(2, [(0, 1)]).unwrap();
        let c = cover_bounded_degree(&edge, 2).unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(c.cost(), 2);

        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c = cover_bounded_degree(&star, 2).unwrap();
        assert_eq!(c.cost(), 5);
        assert_eq!(c.subsets()[1], VertexSet::from([0, 1]));
        assert!(is_valid_cover(&star, &c));
    }

    #[test]
    fn grouping_respects_bound() {
        // P8: cover {0..7}, 8 neighbourhoods of size ≤ 3 into 3 groups
        let g = Graph::new(8, (1..8).map(|i| (i - 1, i))).unwrap();
        let c = cover_bounded_degree(&g, 3).unwrap();
        assert!(is_valid_cover(&g, &c));
        assert!(c.cost() <= 3 * 3);
    }

    #[test]
    fn edgeless() {
        let c = cover_bounded_degree(&Graph::edgeless(3), 2).unwrap();
        assert_eq!(c.cost(), 0);
        assert_eq!(c.k(), 2);
    }
}
