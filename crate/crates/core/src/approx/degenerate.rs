use crate::cover::Cover;
use crate::error::Result;
use crate::graph::{degeneracy_order, Graph, VertexSet};

use super::check_k;

/// `(c+1)`-approximation for `c`-degenerate graphs.
///
/// The degeneracy ordering, restricted to non-isolated vertices, is cut
/// into `k` contiguous blocks of size `⌊n/k⌋` or `⌈n/k⌉` (larger blocks
/// first). Each block is extended by the later neighbours of its members;
/// a vertex has at most `c` of those, so every subset has at most `(c+1)·⌈n/k⌉` vertices. An edge whose earlier
/// endpoint lies in block `i` is covered by subset `i`.
pub fn cover_degenerate(g: &Graph, k: usize) -> Result<Cover> {
    check_k(k)?;
    let order = degeneracy_order(g);
    let pos = order.positions();
    let active: Vec<usize> = order
        .ordering
        .iter()
        .copied()
        .filter(|&v| g.degree(v) > 0)
        .collect();
    let n = active.len();
    let (base, extra) = (n / k, n % k);
    let mut subsets = Vec::with_capacity(k);
    let mut start = 0;
    for i in 0..k {
        let len = base + usize::from(i < extra);
        let block = &active[start..start + len];
        let mut subset: VertexSet = block.iter().copied().collect();
        for &v in block {
            for &w in g.neighbors(v) {
                if pos[w] > pos[v] {
                    subset.insert(w);
                }
            }
        }
        subsets.push(subset);
        start += len;
    }
    Cover::new(g.order(), subsets)
}
