#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use induced_cover::generators::{
    gen_caterpillar, gen_clique, gen_cycle, gen_path, gen_random_degenerate, gen_star,
    gen_ternary_tree,
};
use induced_cover::Graph;

pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// Every leaf-count vector over `{0, …, max_leaves}` for spines of length
/// `1..=max_spine`, keeping graphs with `min_n ≤ n ≤ max_n`.
pub fn caterpillars(
    max_spine: usize,
    max_leaves: usize,
    min_n: usize,
    max_n: usize,
) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for len in 1..=max_spine {
        let mut counts = vec![0usize; len];
        loop {
            let n = len + counts.iter().sum::<usize>();
            if (min_n..=max_n).contains(&n) {
                let g = gen_caterpillar(len, &counts).unwrap();
                out.push((format!("caterpillar{counts:?}"), g));
            }
            let Some(i) = counts.iter().position(|&c| c < max_leaves) else {
                break;
            };
            counts[i] += 1;
            counts[..i].fill(0);
        }
    }
    out
}

/// `(n, c, seed, graph)` for the seeded degenerate corpus.
pub fn degenerate_corpus() -> Vec<(usize, usize, u64, Graph)> {
    (0..200u64)
        .map(|seed| {
            let n = 4 + (seed as usize % 9);
            let c = 1 + (seed as usize / 9) % 3;
            (n, c, seed, gen_random_degenerate(n, c, seed))
        })
        .collect()
}

/// Small named graphs with `n ≤ 10` and `e ≤ 14`.
pub fn desk_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 2..=10 {
        out.push((format!("P{n}"), gen_path(n)));
    }
    for n in 3..=10 {
        out.push((format!("C{n}"), gen_cycle(n).unwrap()));
    }
    for l in 1..=9 {
        out.push((format!("star{l}"), gen_star(l)));
    }
    for n in 2..=5 {
        out.push((format!("K{n}"), gen_clique(n)));
    }
    for (a, b) in [(1, 1), (2, 2), (2, 3), (2, 4), (3, 3), (2, 5), (3, 4)] {
        out.push((format!("K{a},{b}"), complete_bipartite(a, b)));
    }
    out.push(("T1".into(), gen_ternary_tree(1).unwrap()));
    out.push(("edgeless4".into(), Graph::edgeless(4)));
    out.push((
        "two-triangles".into(),
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap(),
    ));
    out.extend(caterpillars(4, 2, 2, 10).into_iter().step_by(3));
    for seed in 0..60u64 {
        let n = 5 + (seed as usize % 6);
        let c = 1 + (seed as usize % 3);
        out.push((format!("degenerate{n},{c}#{seed}"), gen_random_degenerate(n, c, seed)));
    }
    for seed in 0..60u64 {
        let n = 4 + (seed as usize % 7);
        let p = [0.25, 0.4, 0.55][seed as usize % 3];
        out.push((format!("gnp{n},{p}#{seed}"), gnp(n, p, 1000 + seed)));
    }
    out.retain(|(_, g)| g.order() <= 10 && g.edge_count() <= 14);
    out
}
