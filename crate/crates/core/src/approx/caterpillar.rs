use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::{caterpillar_spine, Graph, VertexSet};

use super::check_k;

/// Optimum cover of a connected caterpillar.
///
/// Vertices are listed from one spine end, each spine vertex followed by
/// its leaves, so every vertex after the first hangs off an earlier spine
/// vertex. Windows of `q + 1` vertices (`q = ⌈(n−1)/k⌉`) are cut from this
/// list; each covers exactly `q` fresh edges and the next window restarts
/// at the last spine vertex of the previous one. No edge is covered twice
/// and the cost is `⌈(n−1)/k⌉ + 1`, which meets the connected lower bound.
pub fn cover_caterpillar(g: &Graph, k: usize) -> Result<Cover> {
    check_k(k)?;
    let spine = caterpillar_spine(g).ok_or(Error::NotACaterpillar)?;
    let n = g.order();
    if g.edge_count() == 0 {
        return Ok(Cover::empty(n, k));
    }

    let mut on_spine = vec![false; n];
    for &v in &spine {
        on_spine[v] = true;
    }
    let mut order = Vec::with_capacity(n);
    for &s in &spine {
        order.push(s);
        order.extend(g.neighbors(s).iter().copied().filter(|&w| !on_spine[w]));
    }
    debug_assert_eq!(order.len(), n);

    let quota = (n - 1).div_ceil(k);
    let mut subsets = Vec::with_capacity(k);
    let mut anchor = order[0];
    let mut pos = 1;
    while pos < n {
        let mut window = VertexSet::from([anchor]);
        let end = (pos + quota).min(n);
        for &v in &order[pos..end] {
            window.insert(v);
            if on_spine[v] {
                anchor = v;
            }
        }
        subsets.push(window);
        pos = end;
    }
    Cover::padded(n, subsets, k)
}
