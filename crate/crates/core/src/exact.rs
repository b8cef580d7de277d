//! Exhaustive search for optimum covers at desk scale.
//!
//! The search colours edges with subset indices; a subset is the set of
//! endpoints of its edges. Colours open in order (the first edge always
//! gets colour 0), an edge whose endpoints already share a subset is put
//! there without branching, and a branch dies once a subset exceeds the
//! size cap or the subsets cannot absorb the vertices not yet placed.

use std::time::{Duration, Instant};

use crate::bounds::best_lower_bound;
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: u64,
    pub time_budget: Duration,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 500_000_000,
            time_budget: Duration::from_secs(120),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub cost: usize,
    pub cover: Cover,
    pub nodes_explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualResult {
    pub p: usize,
    pub cover: Cover,
    pub nodes_explored: u64,
}

/// Shared node/time accounting across repeated feasibility searches.
struct Budget {
    limits: SearchLimits,
    started: Instant,
    nodes: u64,
}

impl Budget {
    fn new(limits: SearchLimits) -> Self {
        Budget {
            limits,
            started: Instant::now(),
            nodes: 0,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes
            || (self.nodes & 0xfff == 0 && self.started.elapsed() > self.limits.time_budget)
        {
            return Err(Error::BudgetExhausted { nodes: self.nodes });
        }
        Ok(())
    }
}

/// Edges by descending degree sum, canonical order on ties.
fn search_order(g: &Graph) -> Vec<(usize, usize)> {
    let mut edges = g.edges().to_vec();
    edges.sort_by_key(|&(u, v)| std::cmp::Reverse(g.degree(u) + g.degree(v)));
    edges
}

struct Colouring<'a> {
    edges: &'a [(usize, usize)],
    k: usize,
    cap: usize,
    /// `members[c][v]`: edges of colour `c` incident to `v`
    members: Vec<Vec<u32>>,
    sizes: Vec<usize>,
    /// number of colours containing `v`
    placed: Vec<u32>,
    unplaced: usize,
    total: usize,
    colour: Vec<usize>,
}

impl<'a> Colouring<'a> {
    fn new(g: &Graph, edges: &'a [(usize, usize)], k: usize, cap: usize) -> Self {
        let n = g.order();
        Colouring {
            edges,
            k,
            cap,
            members: vec![vec![0; n]; k],
            sizes: vec![0; k],
            placed: vec![0; n],
            unplaced: (0..n).filter(|&v| g.degree(v) > 0).count(),
            total: 0,
            colour: vec![usize::MAX; edges.len()],
        }
    }

    fn add(&mut self, c: usize, v: usize) {
        if self.members[c][v] == 0 {
            self.sizes[c] += 1;
            self.total += 1;
            if self.placed[v] == 0 {
                self.unplaced -= 1;
            }
            self.placed[v] += 1;
        }
        self.members[c][v] += 1;
    }

    fn remove(&mut self, c: usize, v: usize) {
        self.members[c][v] -= 1;
        if self.members[c][v] == 0 {
            self.sizes[c] -= 1;
            self.total -= 1;
            self.placed[v] -= 1;
            if self.placed[v] == 0 {
                self.unplaced += 1;
            }
        }
    }

    fn search(&mut self, idx: usize, open: usize, budget: &mut Budget) -> Result<bool> {
        if idx == self.edges.len() {
            return Ok(true);
        }
        budget.tick()?;
        let (u, v) = self.edges[idx];
        if let Some(c) = (0..open).find(|&c| self.members[c][u] > 0 && self.members[c][v] > 0) {
            self.colour[idx] = c;
            return self.search(idx + 1, open, budget);
        }
        let slots = self.k * self.cap;
        for c in 0..(open + 1).min(self.k) {
            let fresh = (self.members[c][u] == 0) as usize + (self.members[c][v] == 0) as usize;
            if self.sizes[c] + fresh > self.cap {
                continue;
            }
            self.add(c, u);
            self.add(c, v);
            if self.total + self.unplaced <= slots {
                self.colour[idx] = c;
                if self.search(idx + 1, open.max(c + 1), budget)? {
                    return Ok(true);
                }
            }
            self.remove(c, u);
            self.remove(c, v);
        }
        Ok(false)
    }

    fn cover(&self, n: usize) -> Cover {
        let mut subsets = vec![VertexSet::new(); self.k];
        for (&(u, v), &c) in self.edges.iter().zip(&self.colour) {
            subsets[c].insert(u);
            subsets[c].insert(v);
        }
        Cover::new(n, subsets).expect("edge endpoints are in range")
    }
}

fn feasible_with(g: &Graph, k: usize, cap: usize, budget: &mut Budget) -> Result<Option<Cover>> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    if g.edge_count() == 0 {
        return Ok(Some(Cover::empty(g.order(), k)));
    }
    if cap < 2 {
        return Ok(None);
    }
    let edges = search_order(g);
    let mut state = Colouring::new(g, &edges, k, cap);
    if state.search(0, 0, budget)? {
        Ok(Some(state.cover(g.order())))
    } else {
        Ok(None)
    }
}

/// A cover with `k` subsets of at most `m` vertices each, or `None` if the
/// exhaustive search proves there is none.
pub fn exact_feasible(g: &Graph, k: usize, m: usize, limits: SearchLimits) -> Result<Option<Cover>> {
    feasible_with(g, k, m, &mut Budget::new(limits))
}

/// Optimum cover, searching upward from the best lower bound.
pub fn exact_opt(g: &Graph, k: usize, limits: SearchLimits) -> Result<ExactResult> {
    let start = best_lower_bound(g, k)?.best;
    exact_opt_from(g, k, start, limits)
}

/// Optimum cover, searching upward from `start`. Every cap below the
/// returned cost (down to `start`) has been proved infeasible, so starting
/// from 0 gives a certificate that does not rely on any lower bound.
pub fn exact_opt_from(g: &Graph, k: usize, start: usize, limits: SearchLimits) -> Result<ExactResult> {
    let mut budget = Budget::new(limits);
    let ceiling = g.non_isolated().len();
    for cap in start.min(ceiling)..=ceiling {
        if let Some(cover) = feasible_with(g, k, cap, &mut budget)? {
            return Ok(ExactResult {
                cost: cover.cost(),
                cover,
                nodes_explored: budget.nodes,
            });
        }
    }
    unreachable!("a single subset of all non-isolated vertices is always feasible")
}

/// Fewest subsets of at most `m` vertices covering `g`, searching upward
/// from ⌈e(G) / C(m,2)⌉.
pub fn exact_dual(g: &Graph, m: usize, limits: SearchLimits) -> Result<DualResult> {
    let e = g.edge_count();
    if e == 0 {
        return Ok(DualResult {
            p: 0,
            cover: Cover::empty(g.order(), 0),
            nodes_explored: 0,
        });
    }
    if m < 2 {
        return Err(Error::Infeasible(format!(
            "subsets of at most {m} vertex cannot contain an edge"
        )));
    }
    let mut budget = Budget::new(limits);
    let pairs = m * (m - 1) / 2;
    for p in e.div_ceil(pairs)..=e {
        if let Some(cover) = feasible_with(g, p, m, &mut budget)? {
            return Ok(DualResult {
                p,
                cover,
                nodes_explored: budget.nodes,
            });
        }
    }
    unreachable!("one subset per edge is always feasible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{is_valid_cover, validate_cover};

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn clique(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Independent oracle: every assignment of edges to `k` colours.
    fn brute_opt(g: &Graph, k: usize) -> usize {
        let e = g.edge_count();
        let mut best = usize::MAX;
        let mut colour = vec![0usize; e];
        loop {
            let mut sets = vec![VertexSet::new(); k];
            for (&(u, v), &c) in g.edges().iter().zip(&colour) {
                sets[c].insert(u);
                sets[c].insert(v);
            }
            best = best.min(sets.iter().map(VertexSet::len).max().unwrap());
            let mut i = 0;
            while i < e && colour[i] == k - 1 {
                colour[i] = 0;
                i += 1;
            }
            if i == e {
                return best;
            }
            colour[i] += 1;
        }
    }

    #[test]
    fn brute_force_oracle_values() {
        assert_eq!(brute_opt(&path(5), 2), 3);
        assert_eq!(brute_opt(&clique(4), 2), 4);
        assert_eq!(brute_opt(&path(6), 2), 4);
    }

    #[test]
    fn feasibility_examples() {
        let limits = SearchLimits::default();
        assert_eq!(exact_feasible(&clique(4), 2, 3, limits).unwrap(), None);
        let c = exact_feasible(&clique(4), 2, 4, limits).unwrap().unwrap();
        assert!(is_valid_cover(&clique(4), &c));
        let c = exact_feasible(&path(5), 2, 3, limits).unwrap().unwrap();
        assert!(validate_cover(&path(5), &c).unwrap().is_empty());
        assert!(c.subsets().iter().all(|s| s.len() <= 3));
    }

    #[test]
    fn optimum_examples() {
        let limits = SearchLimits::default();
        assert_eq!(exact_opt(&path(5), 2, limits).unwrap().cost, 3);
        assert_eq!(exact_opt(&clique(4), 2, limits).unwrap().cost, 4);
        let g = Graph::new(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(exact_opt(&g, 1, limits).unwrap().cost, 5);
        assert_eq!(exact_opt_from(&clique(4), 2, 0, limits).unwrap().cost, 4);
    }

    #[test]
    fn dual_examples() {
        let limits = SearchLimits::default();
        let d = exact_dual(&clique(4), 3, limits).unwrap();
        assert_eq!(d.p, 3);
        assert!(is_valid_cover(&clique(4), &d.cover));
        assert_eq!(exact_dual(&path(6), 4, limits).unwrap().p, 2);
        assert_eq!(exact_dual(&Graph::edgeless(3), 1, limits).unwrap().p, 0);
        assert!(matches!(exact_dual(&clique(4), 1, limits), Err(Error::Infeasible(_))));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let limits = SearchLimits {
            max_nodes: 10,
            time_budget: Duration::from_secs(10),
        };
        assert!(matches!(
            exact_opt_from(&clique(6), 3, 0, limits),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(2..=7);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.4))
                .take(9)
                .collect();
            let g = Graph::new(n, edges).unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            for k in 1..=3 {
                let r = exact_opt_from(&g, k, 0, SearchLimits::default()).unwrap();
                assert_eq!(r.cost, brute_opt(&g, k), "{g:?} k={k}");
                assert!(is_valid_cover(&g, &r.cover));
            }
        }
    }
}
