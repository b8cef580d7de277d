use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

use super::check_k;

/// Largest `g` with `g(g+1)/2 ≤ k`.
pub fn clique_group_count(k: usize) -> usize {
    let mut g = 0;
    while (g + 1) * (g + 2) / 2 <= k {
        g += 1;
    }
    g
}

/// Cover of the complete graph `K_n` with cost `O(n/√k)`.
///
/// Vertices are split into `g` near-equal contiguous groups (larger groups
/// first). One subset per unordered pair of groups is emitted, in
/// lexicographic order, followed by one subset per group; that is
/// `g(g+1)/2 ≤ k` subsets of at most `2⌈n/g⌉` vertices. Remaining slots are
/// left empty.
pub fn cover_clique(n: usize, k: usize) -> Result<Cover> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::Parameter("clique order must be at least 1".into()));
    }
    let g = clique_group_count(k);
    let (base, extra) = (n / g, n % g);
    let mut groups = Vec::with_capacity(g);
    let mut start = 0;
    for i in 0..g {
        let len = base + usize::from(i < extra);
        groups.push((start..start + len).collect::<VertexSet>());
        start += len;
    }
    let mut subsets = Vec::with_capacity(k);
    for i in 0..g {
        for j in i + 1..g {
            subsets.push(groups[i].union(&groups[j]));
        }
    }
    subsets.extend(groups);
    Cover::padded(n, subsets, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::is_valid_cover;
    use crate::graph::Graph;

    fn clique(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn group_counts() {
        assert_eq!(clique_group_count(1), 1);
        assert_eq!(clique_group_count(2), 1);
        assert_eq!(clique_group_count(3), 2);
        assert_eq!(clique_group_count(6), 3);
        assert_eq!(clique_group_count(9), 3);
        assert_eq!(clique_group_count(10), 4);
    }

    #[test]
    fn examples() {
        let c = cover_clique(4, 1).unwrap();
        assert_eq!(c.cost(), 4);

        let c = cover_clique(6, 3).unwrap();
        assert_eq!(c.subsets()[0], (0..6).collect());
        assert_eq!(c.subsets()[1], VertexSet::from([0, 1, 2]));
        assert_eq!(c.subsets()[2], VertexSet::from([3, 4, 5]));
        assert_eq!(c.cost(), 6);

        let c = cover_clique(9, 6).unwrap();
        assert_eq!(c.nonempty_count(), 6);
        assert_eq!(c.cost(), 6);
        assert!(is_valid_cover(&clique(9), &c));
    }

    #[test]
    fn more_groups_than_vertices() {
        let c = cover_clique(2, 10).unwrap();
        assert_eq!(c.k(), 10);
        assert!(is_valid_cover(&clique(2), &c));
        assert!(cover_clique(0, 3).is_err());
        assert!(cover_clique(3, 0).is_err());
    }
}
