//! Deterministic instance generators.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("generated edges are simple and in range")
}

/// Path `0 - 1 - … - (n−1)`.
pub fn gen_path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter("a cycle needs at least 3 vertices".into()));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

/// Centre 0 with leaves `1..=leaves`.
pub fn gen_star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|l| (0, l)).collect())
}

pub fn gen_clique(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
}

/// Disjoint paths with the given vertex counts, laid out in contiguous
/// blocks in the order given.
pub fn gen_forest_of_paths(lengths: &[usize]) -> Result<Graph> {
    if lengths.contains(&0) {
        return Err(Error::Parameter("path lengths must be positive".into()));
    }
    let mut edges = Vec::new();
    let mut offset = 0;
    for &len in lengths {
        edges.extend((offset + 1..offset + len).map(|v| (v - 1, v)));
        offset += len;
    }
    Ok(build(offset, edges))
}

/// Spine `0 - 1 - … - (spine_len−1)`; leaves are numbered after the spine,
/// spine vertex by spine vertex.
pub fn gen_caterpillar(spine_len: usize, leaf_counts: &[usize]) -> Result<Graph> {
    if spine_len == 0 {
        return Err(Error::Parameter("spine must have at least one vertex".into()));
    }
    if leaf_counts.len() != spine_len {
        return Err(Error::Parameter(format!(
            "expected {spine_len} leaf counts, got {}",
            leaf_counts.len()
        )));
    }
    let mut edges: Vec<_> = (1..spine_len).map(|i| (i - 1, i)).collect();
    let mut next = spine_len;
    for (s, &count) in leaf_counts.iter().enumerate() {
        for _ in 0..count {
            edges.push((s, next));
            next += 1;
        }
    }
    Ok(build(next, edges))
}

/// Complete ternary tree of height `h` in breadth-first numbering: the
/// root is 0 and the children of `v` are `3v+1..=3v+3`. It has
/// `(3^(h+1) − 1)/2` vertices.
pub fn gen_ternary_tree(h: u32) -> Result<Graph> {
    let n = 3usize
        .checked_pow(h + 1)
        .filter(|&p| p <= 1 << 24)
        .map(|p| (p - 1) / 2)
        .ok_or_else(|| Error::Parameter(format!("height {h} is too large")))?;
    let internal = (n - 1) / 3;
    let edges = (0..internal)
        .flat_map(|v| (1..=3).map(move |c| (v, 3 * v + c)))
        .collect();
    Ok(build(n, edges))
}

/// Random graph of degeneracy at most `c`: vertex `v` picks between 0 and
/// `min(c, v)` distinct earlier neighbours uniformly.
pub fn gen_random_degenerate(n: usize, c: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        let count = rng.gen_range(0..=c.min(v));
        let mut back: Vec<usize> = sample(&mut rng, v, count).into_vec();
        back.sort_unstable();
        edges.extend(back.into_iter().map(|u| (u, v)));
    }
    build(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{caterpillar_spine, degeneracy_order};

    #[test]
    fn small_shapes() {
        let g = gen_path(1);
        assert_eq!((g.order(), g.edge_count()), (1, 0));
        let g = gen_caterpillar(3, &[2, 1, 0]).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 5));
        assert!(caterpillar_spine(&g).is_some());
        assert!(gen_caterpillar(3, &[1, 1]).is_err());
        let g = gen_forest_of_paths(&[3, 3, 4]).unwrap();
        assert_eq!((g.order(), g.edge_count()), (10, 7));
        assert!(gen_forest_of_paths(&[2, 0]).is_err());
        assert_eq!(gen_clique(5).edge_count(), 10);
        assert_eq!(gen_star(4).max_degree(), 4);
        assert!(gen_cycle(2).is_err());
    }

    #[test]
    fn ternary_trees() {
        let sizes: Vec<_> = (0..5)
            .map(|h| gen_ternary_tree(h).unwrap())
            .map(|g| (g.order(), g.edge_count()))
            .collect();
        assert_eq!(sizes, vec![(1, 0), (4, 3), (13, 12), (40, 39), (121, 120)]);
        for h in 1..5 {
            let prev = gen_ternary_tree(h - 1).unwrap().order();
            let cur = gen_ternary_tree(h).unwrap();
            assert_eq!(cur.order(), 3 * prev + 1);
            assert!(cur.is_tree());
            assert_eq!(cur.degree(0), 3);
        }
        assert!(gen_ternary_tree(40).is_err());
    }

    #[test]
    fn degenerate_generator_respects_c() {
        for seed in 0..20 {
            for c in 0..4 {
                let g = gen_random_degenerate(20, c, seed);
                assert!(degeneracy_order(&g).degeneracy <= c);
            }
        }
        assert_eq!(gen_random_degenerate(15, 2, 9), gen_random_degenerate(15, 2, 9));
        assert!(degeneracy_order(&gen_random_degenerate(20, 2, 1)).degeneracy <= 2);
    }
}
