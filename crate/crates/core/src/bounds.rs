//! Lower bounds on the optimum cover cost.
//!
//! Every bound here is a certificate: no cover with `k` subsets can have a
//! smaller maximum subset. [`best_lower_bound`] evaluates all of them on the
//! non-isolated part of the graph and reports the strongest.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, vertex_connectivity, Graph, VertexSet};

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::Parameter("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// ⌈n/k⌉. `n` should count only vertices of positive degree.
pub fn lb_trivial(n: usize, k: usize) -> Result<usize> {
    check_k(k)?;
    Ok(ceil_div(n, k))
}

/// ⌈(n+k−1)/k⌉ for connected graphs with at least two vertices.
///
/// The intersection graph of the subsets must be connected, so at least
/// `k − 1` vertices are shared and the subset sizes sum to `n + k − 1`.
pub fn lb_connected(g: &Graph, k: usize) -> Result<Option<usize>> {
    check_k(k)?;
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return Ok(None);
    }
    Ok(Some(ceil_div(n + k - 1, k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConnectivityBound {
    pub value: usize,
    pub kappa: usize,
}

/// Bound from vertex connectivity κ:
/// `min{ n − κ, ⌈min(2n/k, n/k + κ/2)⌉ }`.
///
/// When the largest subset has fewer than `n − κ` vertices, each nonempty
/// subset `V_i` shares at least `min(κ, |V_i|)` of its vertices with other
/// subsets. Summing shared multiplicities gives the second term; the `2n/k`
/// branch covers subsets smaller than κ and only matters when κ > 2n/k.
pub fn lb_connectivity(g: &Graph, k: usize) -> Result<Option<ConnectivityBound>> {
    check_k(k)?;
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return Ok(None);
    }
    let kappa = vertex_connectivity(g)?;
    let mean_term = ceil_div(2 * n + k * kappa, 2 * k).min(ceil_div(2 * n, k));
    Ok(Some(ConnectivityBound {
        value: (n - kappa).min(mean_term),
        kappa,
    }))
}

/// Upper bound ρ(m) on the number of edges of any induced subgraph of
/// order `m`.
pub struct DensityFunction {
    rho: Box<dyn Fn(usize) -> usize + Send + Sync>,
}

impl DensityFunction {
    pub fn new(rho: impl Fn(usize) -> usize + Send + Sync + 'static) -> Self {
        DensityFunction { rho: Box::new(rho) }
    }

    /// ρ(m) = m(m−1)/2, valid for every graph.
    pub fn binomial() -> Self {
        Self::new(|m| m * m.saturating_sub(1) / 2)
    }

    pub fn eval(&self, m: usize) -> usize {
        (self.rho)(m)
    }
}

impl Default for DensityFunction {
    fn default() -> Self {
        Self::binomial()
    }
}

/// Smallest `m ≤ n` with `k·ρ(m) ≥ e(G)`.
pub fn lb_density(g: &Graph, k: usize, rho: &DensityFunction) -> Result<usize> {
    check_k(k)?;
    let e = g.edge_count();
    (0..=g.order())
        .find(|&m| k.saturating_mul(rho.eval(m)) >= e)
        .ok_or(Error::NoCertificate { edges: e, k })
}

/// Controls the maximisation of `|S| + |N(S)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeighborhoodSearch {
    /// Graphs up to this order are enumerated exhaustively.
    pub exact_limit: usize,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for NeighborhoodSearch {
    fn default() -> Self {
        NeighborhoodSearch {
            exact_limit: 20,
            restarts: 32,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodBound {
    pub value: usize,
    pub witness: VertexSet,
    pub exact: bool,
}

/// `⌈max_S (|S| + |N(S)|) / k⌉`.
///
/// Any single `S` certifies a bound: every subset touching `S` is among
/// at most `k` subsets, and their union contains `S ∪ N(S)`. The maximum is
/// taken exhaustively up to `search.exact_limit` vertices, otherwise by
/// steepest-ascent local search with random restarts. The witness is a
/// maximiser of minimum cardinality.
pub fn lb_neighborhood(
    g: &Graph,
    k: usize,
    search: &NeighborhoodSearch,
) -> Result<NeighborhoodBound> {
    check_k(k)?;
    let (best, witness, exact) = if g.order() <= search.exact_limit.min(24) {
        let (best, witness) = max_closed_set_exhaustive(g);
        (best, witness, true)
    } else {
        let (best, witness) = max_closed_set_local_search(g, search);
        (best, witness, false)
    };
    Ok(NeighborhoodBound {
        value: ceil_div(best, k),
        witness,
        exact,
    })
}

fn objective(g: &Graph, inside: &[bool]) -> (usize, usize) {
    let mut size = 0;
    let mut touched = vec![false; g.order()];
    for v in 0..g.order() {
        if inside[v] {
            size += 1;
            for &w in g.neighbors(v) {
                touched[w] = true;
            }
        }
    }
    let nb = (0..g.order()).filter(|&w| touched[w] && !inside[w]).count();
    (size + nb, size)
}

fn max_closed_set_exhaustive(g: &Graph) -> (usize, VertexSet) {
    let n = g.order();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let total = 1usize << n;
    let mut reach = vec![0u32; total];
    let mut best = (0usize, 0usize, 0u32); // (value, |S|, mask)
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        reach[mask] = reach[mask & (mask - 1)] | adj[low];
        let s = mask as u32;
        let size = s.count_ones() as usize;
        let value = size + (reach[mask] & !s).count_ones() as usize;
        if value > best.0 || (value == best.0 && size < best.1) {
            best = (value, size, s);
        }
    }
    let witness = (0..n).filter(|&v| best.2 & (1 << v) != 0).collect();
    (best.0, witness)
}

fn max_closed_set_local_search(g: &Graph, search: &NeighborhoodSearch) -> (usize, VertexSet) {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    let better = |a: (usize, usize), b: (usize, usize)| a.0 > b.0 || (a.0 == b.0 && a.1 < b.1);
    let mut best_score = (0usize, 0usize);
    let mut best_set = vec![false; n];
    for _ in 0..search.restarts.max(1) {
        let mut inside: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let mut score = objective(g, &inside);
        loop {
            let mut step: Option<(usize, (usize, usize))> = None;
            for v in 0..n {
                inside[v] = !inside[v];
                let s = objective(g, &inside);
                inside[v] = !inside[v];
                let incumbent = step.map_or(score, |(_, s)| s);
                if better(s, incumbent) {
                    step = Some((v, s));
                }
            }
            match step {
                Some((v, s)) => {
                    inside[v] = !inside[v];
                    score = s;
                }
                None => break,
            }
        }
        if better(score, best_score) {
            best_score = score;
            best_set = inside;
        }
    }
    let witness = (0..n).filter(|&v| best_set[v]).collect();
    (best_score.0, witness)
}

/// Certificate data behind the reported bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundWitnesses {
    pub kappa: Option<usize>,
    pub density_order: usize,
    pub neighborhood_set: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundValues {
    pub trivial: usize,
    pub connected: Option<usize>,
    pub connectivity: Option<usize>,
    pub density: usize,
    pub neighborhood: usize,
    pub best: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub lb_trivial: usize,
    pub lb_connected: Option<usize>,
    pub lb_connectivity: Option<usize>,
    pub lb_density: usize,
    pub lb_neighborhood: usize,
    pub neighborhood_exact: bool,
    pub best: usize,
    pub witnesses: BoundWitnesses,
}

impl BoundReport {
    pub fn values(&self) -> BoundValues {
        BoundValues {
            trivial: self.lb_trivial,
            connected: self.lb_connected,
            connectivity: self.lb_connectivity,
            density: self.lb_density,
            neighborhood: self.lb_neighborhood,
            best: self.best,
        }
    }

    /// All present bound values.
    pub fn all(&self) -> Vec<usize> {
        [
            Some(self.lb_trivial),
            self.lb_connected,
            self.lb_connectivity,
            Some(self.lb_density),
            Some(self.lb_neighborhood),
        ]
        .into_iter()
        .flatten()
        .collect()
    }
}

pub fn best_lower_bound(g: &Graph, k: usize) -> Result<BoundReport> {
    best_lower_bound_with(g, k, &NeighborhoodSearch::default())
}

/// Evaluates every bound on the subgraph induced by non-isolated vertices.
/// Edgeless graphs need no subsets at all and report zero throughout.
pub fn best_lower_bound_with(
    g: &Graph,
    k: usize,
    search: &NeighborhoodSearch,
) -> Result<BoundReport> {
    check_k(k)?;
    if g.edge_count() == 0 {
        return Ok(BoundReport {
            lb_trivial: 0,
            lb_connected: Some(0),
            lb_connectivity: Some(0),
            lb_density: 0,
            lb_neighborhood: 0,
            neighborhood_exact: true,
            best: 0,
            witnesses: BoundWitnesses {
                kappa: None,
                density_order: 0,
                neighborhood_set: VertexSet::new(),
            },
        });
    }
    let core = induced_subgraph(g, &g.non_isolated())?;
    let h = &core.graph;
    let trivial = lb_trivial(h.order(), k)?;
    let connected = lb_connected(h, k)?;
    let connectivity = lb_connectivity(h, k)?;
    let density = lb_density(g, k, &DensityFunction::binomial())?;
    let nb = lb_neighborhood(h, k, search)?;
    let mut report = BoundReport {
        lb_trivial: trivial,
        lb_connected: connected,
        lb_connectivity: connectivity.map(|c| c.value),
        lb_density: density,
        lb_neighborhood: nb.value,
        neighborhood_exact: nb.exact,
        best: 0,
        witnesses: BoundWitnesses {
            kappa: connectivity.map(|c| c.kappa),
            density_order: density,
            neighborhood_set: core.lift(&nb.witness),
        },
    };
    report.best = report.all().into_iter().max().unwrap_or(0);
    Ok(report)
}
