//! Simple undirected graphs on dense vertex indices and the structural
//! routines the covering algorithms are built from.
//!
//! Vertices are `0..n`. Every routine that has to break a tie picks the
//! smallest vertex index, so all outputs are reproducible bit for bit.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A set of vertex indices, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Fails with [`Error::InvalidVertex`] on the first member `>= n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(v) if v >= n => Err(Error::InvalidVertex { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph. Edges are stored as `(u, v)` with `u < v`,
/// sorted; adjacency lists are sorted as well.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Parameter(format!("self-loop at vertex {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical (sorted) edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// Vertices with at least one incident edge.
    pub fn non_isolated(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) > 0).collect()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }
}

/// Result of [`induced_subgraph`]: the subgraph on `0..|s|` plus the
/// original label of every new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl InducedSubgraph {
    /// Original label of subgraph vertex `v`.
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.labels[v]).collect()
    }
}

/// G[s], re-indexed in ascending order of the original labels.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<InducedSubgraph> {
    s.check_range(g.order())?;
    let labels = s.to_vec();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in labels.iter().enumerate() {
        index[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
        .map(|&(u, v)| (index[u], index[v]));
    let graph = Graph::new(labels.len(), edges)?;
    Ok(InducedSubgraph { graph, labels })
}

/// Open neighbourhood N(S): vertices outside `s` adjacent to a member.
pub fn neighborhood(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    s.check_range(g.order())?;
    Ok(s
        .iter()
        .flat_map(|u| g.neighbors(u).iter().copied())
        .filter(|&w| !s.contains(w))
        .collect())
}

/// Closed neighbourhood N[u].
pub fn closed_neighborhood(g: &Graph, u: usize) -> Result<VertexSet> {
    g.check_vertex(u)?;
    let mut out: VertexSet = g.neighbors(u).iter().copied().collect();
    out.insert(u);
    Ok(out)
}

/// Vertex connectivity κ(G).
///
/// Complete graphs get `n - 1`, disconnected graphs `0`. Otherwise the
/// minimum local connectivity is taken over non-adjacent pairs
/// `(v_i, v_j)`, `j > i`, with `i` running only up to the best value found
/// so far: a minimum separator cannot contain all of `v_0..=v_κ`.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    let mut flow = SplitFlow::new(g);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(flow.local_connectivity(i, j, best));
            }
        }
        i += 1;
    }
    Ok(best)
}

/// Unit-capacity flow network with every vertex split into in/out halves.
struct SplitFlow {
    // (head, residual capacity); edge e's reverse is e ^ 1
    arcs: Vec<(usize, u32)>,
    original: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitFlow {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = SplitFlow {
            arcs: Vec::new(),
            original: Vec::new(),
            out: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1);
        }
        for &(u, v) in g.edges() {
            net.add_arc(2 * u + 1, 2 * v);
            net.add_arc(2 * v + 1, 2 * u);
        }
        net.original = net.arcs.iter().map(|a| a.1).collect();
        net
    }

    fn add_arc(&mut self, from: usize, to: usize) {
        self.out[from].push(self.arcs.len());
        self.arcs.push((to, 1));
        self.out[to].push(self.arcs.len());
        self.arcs.push((from, 0));
    }

    /// Number of internally vertex-disjoint s-t paths, stopping once `cap`
    /// is reached.
    fn local_connectivity(&mut self, s: usize, t: usize, cap: usize) -> usize {
        for (arc, &c) in self.arcs.iter_mut().zip(&self.original) {
            arc.1 = c;
        }
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.out.len()];
        while flow < cap {
            parent.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &e in &self.out[x] {
                    let (y, c) = self.arcs[e];
                    if c > 0 && y != source && parent[y] == usize::MAX {
                        parent[y] = e;
                        if y == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut y = sink;
            while y != source {
                let e = parent[y];
                self.arcs[e].1 -= 1;
                self.arcs[e ^ 1].1 += 1;
                y = self.arcs[e ^ 1].0;
            }
            flow += 1;
        }
        flow
    }
}

/// An elimination ordering and the degeneracy it certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub ordering: Vec<usize>,
    pub degeneracy: usize,
}

impl DegeneracyOrder {
    /// `position[v]` = index of `v` in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.ordering.len()];
        for (i, &v) in self.ordering.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Repeatedly removes a minimum-degree vertex (smallest index on ties).
/// Every vertex has at most `degeneracy` neighbours later in the ordering.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut ordering = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        ordering.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    DegeneracyOrder {
        ordering,
        degeneracy,
    }
}

/// Greedy maximal matching over the canonical edge order.
pub fn maximal_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut matched = vec![false; g.order()];
    let mut matching = Vec::new();
    for &(u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            matching.push((u, v));
        }
    }
    matching
}

/// Both endpoints of every edge in [`maximal_matching`]; a vertex cover at
/// most twice the minimum.
pub fn maximal_matching_vertex_cover(g: &Graph) -> VertexSet {
    maximal_matching(g)
        .into_iter()
        .flat_map(|(u, v)| [u, v])
        .collect()
}

/// The spine of a connected caterpillar, in path order starting from its
/// smallest-index endpoint; `None` if `g` is not a connected caterpillar.
///
/// Graphs on one or two vertices return `[0]`; stars return their centre.
pub fn caterpillar_spine(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 || !g.is_tree() {
        return None;
    }
    if n <= 2 {
        return Some(vec![0]);
    }
    let inner: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 2).collect();
    // inner vertices of a tree induce a subtree; it is a path iff every
    // inner vertex has at most two inner neighbours
    let is_inner = |v: usize| g.degree(v) >= 2;
    let inner_deg = |v: usize| g.neighbors(v).iter().filter(|&&w| is_inner(w)).count();
    if inner.iter().any(|&v| inner_deg(v) > 2) {
        return None;
    }
    let start = *inner.iter().find(|&&v| inner_deg(v) <= 1)?;
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| is_inner(w) && w != prev);
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
                spine.push(w);
            }
            None => break,
        }
    }
    debug_assert_eq!(spine.len(), inner.len());
    Some(spine)
}

/// Partition of the vertex set into `a`, `b` and separator `c` with no
/// edge between `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorResult {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

impl SeparatorResult {
    /// Checks the partition and separation properties against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        for part in [&self.a, &self.b, &self.c] {
            part.check_range(g.order())?;
        }
        if !self.a.is_disjoint(&self.b) || !self.a.is_disjoint(&self.c) || !self.b.is_disjoint(&self.c) {
            return Err(Error::Parameter("separator parts overlap".into()));
        }
        if self.a.len() + self.b.len() + self.c.len() != g.order() {
            return Err(Error::Parameter("separator parts do not cover the graph".into()));
        }
        for &(u, v) in g.edges() {
            if (self.a.contains(u) && self.b.contains(v)) || (self.b.contains(u) && self.a.contains(v)) {
                return Err(Error::Parameter(format!("edge ({u},{v}) joins A and B")));
            }
        }
        Ok(())
    }
}
