//! Solver used for the dense-optimum branch of the sampling scheme.

use rayon::prelude::*;

use crate::error::Result;
use crate::instance::Instance;
use crate::partition::Partition;
use crate::rng::{derive_seed, Rng};

/// A heuristic producing some partition with at most `k` blocks.
pub trait DenseSolver: Sync {
    fn solve(&self, inst: &Instance, k: usize, seed: u64) -> Result<Partition>;
}

/// Multi-start best-improvement local search over single-element moves.
///
/// Each restart draws uniform labels in `0..k` and repeatedly applies the
/// single move with the most negative exact cost delta (lowest element, then
/// lowest block, on ties) until none improves. The best restart by
/// `(cost, labels)` wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalSearch {
    pub restarts: usize,
}

pub const DEFAULT_RESTARTS: usize = 20;

impl Default for LocalSearch {
    fn default() -> Self {
        LocalSearch {
            restarts: DEFAULT_RESTARTS,
        }
    }
}

impl DenseSolver for LocalSearch {
    fn solve(&self, inst: &Instance, k: usize, seed: u64) -> Result<Partition> {
        let k = k.max(1);
        let best = (0..self.restarts.max(1) as u64)
            .into_par_iter()
            .map(|r| {
                let labels = descend(inst, k, derive_seed(seed, r));
                let part = Partition::canonicalize(&labels).expect("nonempty universe");
                let cost = inst.cost_of(&part).expect("same universe");
                (cost, part)
            })
            .reduce_with(|a, b| if (b.0, &b.1) < (a.0, &a.1) { b } else { a })
            .expect("at least one restart");
        Ok(best.1)
    }
}

fn descend(inst: &Instance, k: usize, seed: u64) -> Vec<usize> {
    let n = inst.n();
    let l = inst.l() as i64;
    let mut rng = Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (0..n).map(|_| rng.index(k)).collect();
    // weight(u, x) = d - s: what co-clustering u with x adds over separating them
    let weight = |u: usize, x: usize| l - 2 * inst.s(u, x) as i64;
    // pull[u][c] = sum of weight(u, x) over x != u currently in block c
    let mut pull = vec![0i64; n * k];
    for u in 0..n {
        for x in 0..n {
            if x != u {
                pull[u * k + labels[x]] += weight(u, x);
            }
        }
    }
    loop {
        let mut best: Option<(i64, usize, usize)> = None;
        for u in 0..n {
            let from = labels[u];
            let here = pull[u * k + from];
            for to in 0..k {
                if to == from {
                    continue;
                }
                let delta = pull[u * k + to] - here;
                if delta < 0 && best.is_none_or(|b| delta < b.0) {
                    best = Some((delta, u, to));
                }
            }
        }
        let Some((_, u, to)) = best else { break };
        let from = labels[u];
        labels[u] = to;
        for x in 0..n {
            if x != u {
                let w = weight(x, u);
                pull[x * k + from] -= w;
                pull[x * k + to] += w;
            }
        }
    }
    labels
}
