//! Exhaustive k-bounded consensus clustering.

use rayon::prelude::*;

use crate::enumerate::{count_partitions, partitions_unbounded, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};
use crate::partition::Partition;

/// Prefix length used to split the search into independent subtrees.
const SPLIT_DEPTH: usize = 6;

/// Optimal partition with at most `k` blocks using the default budget.
pub fn solve_exact(inst: &Instance, k: usize) -> Result<Solution> {
    solve_exact_with_budget(inst, k, DEFAULT_BUDGET)
}

/// Whether exhaustive search over `<= k`-block partitions of `n` elements
/// fits in `budget`.
pub fn within_budget(n: usize, k: usize, budget: u64) -> bool {
    count_partitions(n, k) <= budget as u128
}

/// Optimal partition with at most `k` blocks by visiting every candidate.
///
/// Pair costs are accumulated along a depth-first walk of restricted-growth
/// strings, so each node costs `O(n)`. Subtrees below a fixed-length prefix
/// are searched in parallel and reduced by `(cost, labels)`, which yields the
/// lexicographically smallest optimum regardless of scheduling.
pub fn solve_exact_with_budget(inst: &Instance, k: usize, budget: u64) -> Result<Solution> {
    let n = inst.n();
    if k == 0 {
        return Err(Error::InvalidParameter("block bound must be at least 1".into()));
    }
    let needed = count_partitions(n, k);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    if k == 1 {
        let partition = Partition::single_block(n)?;
        return Ok(Solution {
            cost: inst.one_block_cost(),
            partition,
            k,
        });
    }
    let depth = SPLIT_DEPTH.min(n);
    let prefixes: Vec<Vec<usize>> = partitions_unbounded(depth, k)
        .map(|p| p.labels().to_vec())
        .collect();
    let best = prefixes
        .into_par_iter()
        .map(|prefix| search_subtree(inst, k, prefix))
        .reduce_with(|a, b| if (b.0, &b.1) < (a.0, &a.1) { b } else { a })
        .expect("at least one prefix");
    let blocks = best.1.iter().max().map_or(0, |m| m + 1);
    Ok(Solution {
        partition: Partition::from_canonical_unchecked(best.1, blocks),
        cost: best.0,
        k,
    })
}

fn search_subtree(inst: &Instance, k: usize, prefix: Vec<usize>) -> (u64, Vec<usize>) {
    let n = inst.n();
    let mut labels = vec![0usize; n];
    let mut cost = 0u64;
    let mut max_label = 0usize;
    for (x, &c) in prefix.iter().enumerate() {
        labels[x] = c;
        cost += (0..x).map(|y| inst.pair_cost(y, x, labels[y] == c)).sum::<u64>();
        max_label = max_label.max(c);
    }
    let mut best = (u64::MAX, Vec::new());
    let mut walk = Walk {
        inst,
        k,
        labels: &mut labels,
        best: &mut best,
    };
    walk.descend(prefix.len(), cost, max_label);
    best
}

struct Walk<'a> {
    inst: &'a Instance,
    k: usize,
    labels: &'a mut Vec<usize>,
    best: &'a mut (u64, Vec<usize>),
}

impl Walk<'_> {
    fn descend(&mut self, x: usize, cost: u64, max_label: usize) {
        let n = self.inst.n();
        if x == n {
            if cost < self.best.0 {
                self.best.0 = cost;
                self.best.1.clone_from(self.labels);
            }
            return;
        }
        let top = (max_label + 1).min(self.k - 1);
        for c in 0..=top {
            let mut added = 0;
            for y in 0..x {
                added += self.inst.pair_cost(y, x, self.labels[y] == c);
            }
            self.labels[x] = c;
            self.descend(x + 1, cost + added, max_label.max(c));
        }
    }
}
