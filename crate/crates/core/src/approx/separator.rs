use std::collections::VecDeque;

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, SeparatorResult, VertexSet};

use super::check_k;

/// A strategy that splits a connected graph into `A`, `B` and a separator
/// `C` with no `A`–`B` edge.
pub trait SeparatorProvider {
    fn name(&self) -> &'static str;

    /// Declared balance: neither side exceeds `alpha·n`. `None` when the
    /// provider makes no promise.
    fn alpha(&self) -> Option<f64>;

    /// Human-readable bound on `|C|`.
    fn separator_size(&self) -> &'static str;

    fn separate(&self, g: &Graph) -> Result<SeparatorResult>;
}

/// Single-vertex centroid separators of trees.
#[derive(Clone, Copy, Debug, Default)]
pub struct Centroid;

impl SeparatorProvider for Centroid {
    fn name(&self) -> &'static str {
        "centroid"
    }

    fn alpha(&self) -> Option<f64> {
        Some(2.0 / 3.0)
    }

    fn separator_size(&self) -> &'static str {
        "1"
    }

    fn separate(&self, g: &Graph) -> Result<SeparatorResult> {
        centroid_separator(g)
    }
}

/// Breadth-first layers; works on any connected graph, no guarantee.
#[derive(Clone, Copy, Debug, Default)]
pub struct BfsLevels;

impl SeparatorProvider for BfsLevels {
    fn name(&self) -> &'static str {
        "bfs"
    }

    fn alpha(&self) -> Option<f64> {
        None
    }

    fn separator_size(&self) -> &'static str {
        "one BFS layer"
    }

    fn separate(&self, g: &Graph) -> Result<SeparatorResult> {
        bfs_level_separator(g)
    }
}

/// Packs groups into two sides, largest group first onto the lighter side.
fn pack_two(mut groups: Vec<Vec<usize>>) -> (VertexSet, VertexSet) {
    groups.sort_by_key(|grp| std::cmp::Reverse(grp.len()));
    let (mut a, mut b) = (VertexSet::new(), VertexSet::new());
    for grp in groups {
        let side = if a.len() <= b.len() { &mut a } else { &mut b };
        side.extend(grp);
    }
    (a, b)
}

/// Centroid `c` of a tree (smallest index among centroids) with the
/// components of `T − c` packed into two sides. Every component has at
/// most `⌊n/2⌋` vertices, so neither side exceeds `2n/3`.
pub fn centroid_separator(g: &Graph) -> Result<SeparatorResult> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.order();
    // subtree sizes with the tree rooted at 0
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().skip(1).rev() {
        size[parent[v]] += size[v];
    }
    let heaviest = |v: usize| {
        let up = n - size[v];
        g.neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| size[w])
            .fold(up, usize::max)
    };
    let centre = (0..n)
        .find(|&v| heaviest(v) <= n / 2)
        .expect("every tree has a centroid");

    let mut seen = vec![false; n];
    seen[centre] = true;
    let mut components = Vec::new();
    for &w in g.neighbors(centre) {
        let mut comp = vec![w];
        seen[w] = true;
        let mut queue = VecDeque::from([w]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    queue.push_back(y);
                }
            }
        }
        components.push(comp);
    }
    let (a, b) = pack_two(components);
    Ok(SeparatorResult {
        a,
        b,
        c: VertexSet::from([centre]),
    })
}

/// BFS layering from vertex 0; the separator is the layer minimising the
/// larger of `|A ∪ C|` and `|B ∪ C|` (earliest layer on ties), with `A` the
/// layers before it and `B` the layers after.
pub fn bfs_level_separator(g: &Graph) -> Result<SeparatorResult> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut depth = vec![usize::MAX; g.order()];
    depth[0] = 0;
    let mut layers: Vec<Vec<usize>> = vec![vec![0]];
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                if layers.len() <= depth[w] {
                    layers.push(Vec::new());
                }
                layers[depth[w]].push(w);
                queue.push_back(w);
            }
        }
    }
    let n = g.order();
    let mut before = 0;
    let mut best = (usize::MAX, 0);
    for (i, layer) in layers.iter().enumerate() {
        let after = n - before - layer.len();
        let score = before.max(after) + layer.len();
        if score < best.0 {
            best = (score, i);
        }
        before += layer.len();
    }
    let cut = best.1;
    let gather = |range: &mut dyn Iterator<Item = &Vec<usize>>| -> VertexSet {
        range.flat_map(|l| l.iter().copied()).collect()
    };
    Ok(SeparatorResult {
        a: gather(&mut layers[..cut].iter()),
        b: gather(&mut layers[cut + 1..].iter()),
        c: layers[cut].iter().copied().collect(),
    })
}

/// Recursive separator heuristic.
///
/// With `k = 1` the answer is all non-isolated vertices. Otherwise the
/// graph (isolated vertices dropped) is split into `A`, `B`, `C` with
/// `|A| ≤ |B|`, and `⌊k/2⌋` subsets cover `G[A ∪ C]` while `⌈k/2⌉` cover
/// `G[B ∪ C]`; subsets of the `A` branch come first. Disconnected inputs
/// are split along components with an empty separator instead of asking
/// the provider.
pub fn cover_separator(g: &Graph, k: usize, provider: &dyn SeparatorProvider) -> Result<Cover> {
    check_k(k)?;
    let subsets = split_cover(g, k, provider)?;
    Cover::new(g.order(), subsets)
}

fn split_cover(g: &Graph, k: usize, provider: &dyn SeparatorProvider) -> Result<Vec<VertexSet>> {
    let mut out = vec![VertexSet::new(); k];
    if g.edge_count() == 0 {
        return Ok(out);
    }
    if k == 1 {
        out[0] = g.non_isolated();
        return Ok(out);
    }
    let core = induced_subgraph(g, &g.non_isolated())?;
    let h = &core.graph;
    let sep = if h.is_connected() {
        let sep = provider.separate(h)?;
        sep.verify(h)?;
        sep
    } else {
        let (a, b) = pack_two(h.components());
        SeparatorResult {
            a,
            b,
            c: VertexSet::new(),
        }
    };
    let (a, b) = if sep.a.len() <= sep.b.len() {
        (sep.a, sep.b)
    } else {
        (sep.b, sep.a)
    };
    let mut subsets = Vec::with_capacity(k);
    for (side, share) in [(a, k / 2), (b, k - k / 2)] {
        let part = induced_subgraph(h, &side.union(&sep.c))?;
        for s in split_cover(&part.graph, share, provider)? {
            subsets.push(core.lift(&part.lift(&s)));
        }
    }
    Ok(subsets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::is_valid_cover;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    #[test]
    fn centroid_examples() {
        let s = centroid_separator(&path(6)).unwrap();
        assert_eq!(s.c, VertexSet::from([2]));
        assert!(s.a.len() <= 3 && s.b.len() <= 3);
        s.verify(&path(6)).unwrap();

        let s = centroid_separator(&star(5)).unwrap();
        assert_eq!(s.c, VertexSet::from([0]));
        let mut sides = [s.a.len(), s.b.len()];
        sides.sort();
        assert_eq!(sides, [2, 3]);

        let s = centroid_separator(&Graph::edgeless(1)).unwrap();
        assert_eq!(s.c, VertexSet::from([0]));
        assert!(s.a.is_empty() && s.b.is_empty());

        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(centroid_separator(&c4), Err(Error::NotATree));
    }

    #[test]
    fn centroid_of_spider_with_three_equal_legs() {
        // legs of two vertices: the best packing has sides 4 and 2
        let g = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let s = centroid_separator(&g).unwrap();
        assert_eq!(s.c, VertexSet::from([0]));
        assert!(s.a.len().max(s.b.len()) as f64 <= 2.0 / 3.0 * 7.0);
    }

    #[test]
    fn bfs_examples() {
        let s = bfs_level_separator(&path(5)).unwrap();
        assert_eq!(s.c, VertexSet::from([2]));
        assert_eq!(s.a, VertexSet::from([0, 1]));
        assert_eq!(s.b, VertexSet::from([3, 4]));

        let s = bfs_level_separator(&star(4)).unwrap();
        assert_eq!(s.c, VertexSet::from([0]));

        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = bfs_level_separator(&k4).unwrap();
        assert_eq!(s.c, VertexSet::from([0]));
        assert!(s.a.is_empty());
        assert_eq!(s.b, VertexSet::from([1, 2, 3]));

        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_level_separator(&two), Err(Error::Disconnected));
    }

    #[test]
    fn recursive_cover_examples() {
        let c = cover_separator(&path(6), 2, &Centroid).unwrap();
        assert_eq!(c.subsets()[0], VertexSet::from([0, 1, 2]));
        assert_eq!(c.subsets()[1], VertexSet::from([2, 3, 4, 5]));
        assert_eq!(c.cost(), 4);

        let g = Graph::new(5, [(0, 1), (1, 2)]).unwrap();
        let c = cover_separator(&g, 1, &Centroid).unwrap();
        assert_eq!(c.subsets(), &[VertexSet::from([0, 1, 2])]);

        let c = cover_separator(&path(7), 4, &Centroid).unwrap();
        assert_eq!(c.k(), 4);
        assert!(is_valid_cover(&path(7), &c));
        assert!(c.cost() <= 4);
    }

    #[test]
    fn bfs_provider_on_non_trees() {
        let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        for k in 1..=6 {
            let c = cover_separator(&k5, k, &BfsLevels).unwrap();
            assert_eq!(c.k(), k);
            assert!(is_valid_cover(&k5, &c));
        }
        assert_eq!(cover_separator(&k5, 2, &Centroid), Err(Error::NotATree));
    }

    #[test]
    fn forests_split_along_components() {
        let g = Graph::new(8, [(0, 1), (1, 2), (3, 4), (5, 6), (6, 7)]).unwrap();
        let c = cover_separator(&g, 3, &Centroid).unwrap();
        assert!(is_valid_cover(&g, &c));
        assert_eq!(c.cost(), 3);
    }
}
