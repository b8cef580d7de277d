//! 3-Partition → Cover reduction: each value `a_i` becomes a path on `a_i`
//! vertices, `k = m`, and the instance is a yes-instance exactly when the
//! forest can be covered at cost `S`.

use crate::cover::{is_valid_cover, Cover};
use crate::error::{Error, Result};
use crate::generators::gen_forest_of_paths;
use crate::graph::Graph;

/// `3m` positive integers strictly between `S/4` and `S/2` summing to `mS`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreePartitionInstance {
    m: usize,
    target: usize,
    values: Vec<usize>,
}

impl ThreePartitionInstance {
    pub fn new(m: usize, target: usize, values: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInstance("m must be at least 1".into()));
        }
        if values.len() != 3 * m {
            return Err(Error::InvalidInstance(format!(
                "expected {} values, got {}",
                3 * m,
                values.len()
            )));
        }
        // S/4 < a < S/2  ⇔  S < 4a  and  2a < S
        if let Some(&a) = values.iter().find(|&&a| !(target < 4 * a && 2 * a < target)) {
            return Err(Error::InvalidInstance(format!(
                "value {a} is not strictly between {target}/4 and {target}/2"
            )));
        }
        let sum: usize = values.iter().sum();
        if sum != m * target {
            return Err(Error::InvalidInstance(format!(
                "values sum to {sum}, expected {}",
                m * target
            )));
        }
        Ok(ThreePartitionInstance { m, target, values })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// `m` disjoint triples of value indices (0-based), each summing to `S`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ThreePartitionSolution {
    pub groups: Vec<[usize; 3]>,
}

impl ThreePartitionSolution {
    pub fn is_valid_for(&self, inst: &ThreePartitionInstance) -> bool {
        let mut used = vec![false; inst.values.len()];
        self.groups.len() == inst.m
            && self.groups.iter().all(|t| {
                t.iter().map(|&i| inst.values.get(i).copied().unwrap_or(0)).sum::<usize>()
                    == inst.target
                    && t.iter().all(|&i| i < used.len() && !std::mem::replace(&mut used[i], true))
            })
    }

    pub fn group_values(&self, inst: &ThreePartitionInstance) -> Vec<[usize; 3]> {
        self.groups
            .iter()
            .map(|t| t.map(|i| inst.values[i]))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    pub k: usize,
    pub target: usize,
    /// First vertex of each path.
    pub offsets: Vec<usize>,
}

pub fn reduce_3partition(inst: &ThreePartitionInstance) -> Reduction {
    let graph = gen_forest_of_paths(&inst.values).expect("values are positive");
    let offsets = inst
        .values
        .iter()
        .scan(0, |acc, &a| {
            let start = *acc;
            *acc += a;
            Some(start)
        })
        .collect();
    Reduction {
        graph,
        k: inst.m,
        target: inst.target,
        offsets,
    }
}

/// Reads a 3-partition off a cover of the reduced forest of cost at most
/// `S`. Returns `None` for invalid covers or covers costing more than `S`.
///
/// With cost ≤ S the subsets hold at most `mS` vertex slots and every
/// vertex of positive degree needs one, so each such vertex lies in exactly
/// one subset and each path sits inside a single subset.
pub fn lift_cover_to_partition(
    inst: &ThreePartitionInstance,
    cover: &Cover,
) -> Result<Option<ThreePartitionSolution>> {
    let red = reduce_3partition(inst);
    let n = red.graph.order();
    if cover.host_order() != n || cover.k() != inst.m {
        return Err(Error::MismatchedInstance(format!(
            "expected {} subsets over {n} vertices, got {} over {}",
            inst.m,
            cover.k(),
            cover.host_order()
        )));
    }
    if cover.cost() > inst.target || !is_valid_cover(&red.graph, cover) {
        return Ok(None);
    }

    let mut owner = vec![None; n];
    let mut slots = 0;
    for (j, s) in cover.subsets().iter().enumerate() {
        slots += s.len();
        for v in s {
            if red.graph.degree(v) > 0 {
                assert!(owner[v].is_none(), "vertex {v} in two subsets at cost ≤ S");
            }
            owner[v] = Some(j);
        }
    }
    assert!(slots <= inst.m * inst.target);

    let mut load = vec![0usize; inst.m];
    let mut groups = vec![Vec::new(); inst.m];
    let mut loose = Vec::new();
    for (i, (&start, &a)) in red.offsets.iter().zip(&inst.values).enumerate() {
        match owner[start] {
            Some(j) => {
                assert!((start..start + a).all(|v| owner[v] == Some(j)));
                load[j] += a;
                groups[j].push(i);
            }
            // single-vertex paths need not be covered at all
            None => loose.push(i),
        }
    }
    for i in loose {
        let a = inst.values[i];
        let j = (0..inst.m)
            .find(|&j| load[j] + a <= inst.target && groups[j].len() < 3)
            .expect("a cost-S cover leaves exactly enough room");
        load[j] += a;
        groups[j].push(i);
    }

    let mut triples: Vec<[usize; 3]> = groups
        .into_iter()
        .map(|mut grp| {
            grp.sort_unstable();
            <[usize; 3]>::try_from(grp).expect("every group has three values")
        })
        .collect();
    triples.sort_unstable();
    let solution = ThreePartitionSolution { groups: triples };
    assert!(solution.is_valid_for(inst));
    Ok(Some(solution))
}

/// Exhaustive 3-partition search for `3m ≤ 12`. The first solution found
/// (smallest unused index first, partners in lexicographic order) is the
/// lexicographically smallest.
pub fn brute_3partition(inst: &ThreePartitionInstance) -> Result<Option<ThreePartitionSolution>> {
    if inst.values.len() > 12 {
        return Err(Error::SizeLimit(format!(
            "{} values; exhaustive search is limited to 12",
            inst.values.len()
        )));
    }
    fn go(values: &[usize], target: usize, used: &mut [bool], out: &mut Vec<[usize; 3]>) -> bool {
        let Some(i) = used.iter().position(|&u| !u) else {
            return true;
        };
        used[i] = true;
        for j in i + 1..values.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            for l in j + 1..values.len() {
                if !used[l] && values[i] + values[j] + values[l] == target {
                    used[l] = true;
                    out.push([i, j, l]);
                    if go(values, target, used, out) {
                        return true;
                    }
                    out.pop();
                    used[l] = false;
                }
            }
            used[j] = false;
        }
        used[i] = false;
        false
    }
    let mut used = vec![false; inst.values.len()];
    let mut groups = Vec::with_capacity(inst.m);
    Ok(go(&inst.values, inst.target, &mut used, &mut groups)
        .then_some(ThreePartitionSolution { groups }))
}
