use super::assignment::BlockAssignment;
use crate::error::{Error, Result};
use crate::instance::Instance;

/// Cost of placing `u` in each of `slots` blocks, counting only the pairs
/// `{u} x S` against the sample partition.
pub fn placement_costs(inst: &Instance, sample: &BlockAssignment, u: usize, slots: usize) -> Vec<u64> {
    let mut separated = 0u64;
    let mut into = vec![0i64; slots];
    for (x, label) in sample.iter() {
        if x == u {
            continue;
        }
        let s = inst.s(u, x);
        separated += s;
        into[label] += inst.d(u, x) as i64 - s as i64;
    }
    into.iter()
        .map(|&delta| (separated as i64 + delta) as u64)
        .collect()
}

/// Extends a partition of the sample to the whole universe: each element
/// outside the sample independently joins the block minimizing the cost of
/// its pairs with sampled elements (lowest block index on ties).
///
/// The result has `max(k, sample.slots())` blocks; sampled elements keep
/// their block numbers and empty blocks remain valid targets.
pub fn greedy_extend(inst: &Instance, sample: &BlockAssignment, k: usize) -> Result<BlockAssignment> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let n = inst.n();
    let slots = k.max(sample.slots());
    let mut labels = vec![usize::MAX; n];
    for (x, label) in sample.iter() {
        if x >= n {
            return Err(Error::OutOfRange { index: x, n });
        }
        labels[x] = label;
    }
    for u in 0..n {
        if labels[u] != usize::MAX {
            continue;
        }
        let costs = placement_costs(inst, sample, u, slots);
        labels[u] = argmin_first(&costs);
    }
    BlockAssignment::new((0..n).collect(), labels, slots)
}

fn argmin_first(costs: &[u64]) -> usize {
    let mut best = 0;
    for (i, &c) in costs.iter().enumerate() {
        if c < costs[best] {
            best = i;
        }
    }
    best
}

/// Classification of the blocks of a clustering into large and small ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    /// Blocks with `|C_j| >= n / (2k)`.
    pub large: Vec<usize>,
    pub small: Vec<usize>,
    /// Union of the small blocks, in element order.
    pub merged: Vec<usize>,
}

/// Splits the blocks of `clusters` at the size threshold `n / (2k)`, with
/// `n` the number of clustered elements. Every block index in
/// `0..clusters.slots()` lands in exactly one of the two lists.
pub fn split_large_small(clusters: &BlockAssignment, k: usize) -> SplitReport {
    let n = clusters.len();
    let sizes = clusters.block_sizes();
    let (large, small): (Vec<usize>, Vec<usize>) =
        (0..clusters.slots()).partition(|&j| 2 * k * sizes[j] >= n);
    let mut is_small = vec![false; clusters.slots()];
    for &j in &small {
        is_small[j] = true;
    }
    let mut merged: Vec<usize> = clusters
        .iter()
        .filter(|&(_, label)| is_small[label])
        .map(|(e, _)| e)
        .collect();
    merged.sort_unstable();
    SplitReport { large, small, merged }
}
