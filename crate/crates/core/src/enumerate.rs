//! Streaming enumeration of set partitions as restricted-growth strings.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on the number of candidate partitions an exhaustive search may
/// visit.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "CONSENSUS_BUDGET";

/// Reads the enumeration budget from `CONSENSUS_BUDGET`, falling back to the
/// default when unset or unparsable.
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Number of partitions of `n` elements into at most `k_max` blocks,
/// `sum_{j<=k_max} S(n, j)`, saturating at `u128::MAX`.
pub fn count_partitions(n: usize, k_max: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let k_max = k_max.min(n);
    // row[j] = S(i, j)
    let mut row = vec![0u128; k_max + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k_max).rev() {
            row[j] = (j as u128)
                .saturating_mul(row[j])
                .saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[1..].iter().fold(0u128, |acc, &x| acc.saturating_add(x))
}

/// Iterator over the canonical partitions of `0..n` with at most `k_max`
/// blocks, in lexicographic order of their label arrays.
///
/// Only the current restricted-growth string is kept in memory.
#[derive(Clone, Debug)]
pub struct PartitionIter {
    labels: Vec<usize>,
    // prefix_max[i] = max(labels[..=i])
    prefix_max: Vec<usize>,
    k_max: usize,
    started: bool,
    done: bool,
}

impl PartitionIter {
    fn new(n: usize, k_max: usize) -> Self {
        PartitionIter {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            k_max,
            started: false,
            done: false,
        }
    }

    /// Advances to the next string in place; returns `false` when exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.labels.len();
        for i in (1..n).rev() {
            let bound = self.prefix_max[i - 1] + 1;
            if self.labels[i] < bound && self.labels[i] + 1 < self.k_max {
                self.labels[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    /// The current label array (valid after `advance` returned `true`).
    pub fn current(&self) -> &[usize] {
        &self.labels
    }

    pub fn current_blocks(&self) -> usize {
        self.prefix_max.last().map_or(0, |m| m + 1)
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.advance() {
            Some(Partition::from_canonical_unchecked(
                self.labels.clone(),
                self.current_blocks(),
            ))
        } else {
            None
        }
    }
}

/// Streams every partition of `0..n` with at most `k_max` blocks, refusing
/// when their count exceeds `budget`.
pub fn enumerate_partitions(n: usize, k_max: usize, budget: u64) -> Result<PartitionIter> {
    if n == 0 {
        return Err(Error::EmptyUniverse);
    }
    if k_max == 0 {
        return Err(Error::InvalidParameter("block bound must be at least 1".into()));
    }
    let needed = count_partitions(n, k_max);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(PartitionIter::new(n, k_max))
}

/// Same as [`enumerate_partitions`] without a budget check.
pub fn partitions_unbounded(n: usize, k_max: usize) -> PartitionIter {
    PartitionIter::new(n, k_max.max(1))
}
