//! Consensus-clustering instances and the two equivalent cost functions.

use crate::error::{Error, Result};
use crate::partition::{choose2, pair_distance, Partition};

/// A list of `l` input partitions over one universe together with the dense
/// co-clustering count matrix `s(i, j)`.
///
/// `s(i, j)` is the number of input partitions placing `i` and `j` in the same
/// block and `d(i, j) = l - s(i, j)` the number separating them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    partitions: Vec<Partition>,
    together: Vec<u16>,
}

impl Instance {
    pub fn new(partitions: Vec<Partition>) -> Result<Self> {
        let first = partitions.first().ok_or(Error::NoPartitions)?;
        let n = first.n();
        if let Some(bad) = partitions.iter().find(|p| p.n() != n) {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: bad.n(),
            });
        }
        if partitions.len() > u16::MAX as usize {
            return Err(Error::TooManyPartitions(partitions.len()));
        }
        let mut together = vec![0u16; n * n];
        for partition in &partitions {
            for block in partition.blocks() {
                for (a, &x) in block.iter().enumerate() {
                    together[x * n + x] += 1;
                    for &y in &block[a + 1..] {
                        together[x * n + y] += 1;
                        together[y * n + x] += 1;
                    }
                }
            }
        }
        Ok(Instance {
            n,
            partitions,
            together,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.partitions.len()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Number of input partitions co-clustering `i` and `j`.
    #[inline]
    pub fn s(&self, i: usize, j: usize) -> u64 {
        self.together[i * self.n + j] as u64
    }

    /// Number of input partitions separating `i` and `j`.
    #[inline]
    pub fn d(&self, i: usize, j: usize) -> u64 {
        self.l() as u64 - self.s(i, j)
    }

    /// Cost contribution of the pair `(i, j)` given whether the candidate
    /// co-clusters it.
    #[inline]
    pub fn pair_cost(&self, i: usize, j: usize, together: bool) -> u64 {
        if together {
            self.d(i, j)
        } else {
            self.s(i, j)
        }
    }

    fn check(&self, candidate: &Partition) -> Result<()> {
        if candidate.n() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                found: candidate.n(),
            });
        }
        Ok(())
    }

    /// Total distance `sum_i d(candidate, partitions[i])`.
    pub fn cost_of(&self, candidate: &Partition) -> Result<u64> {
        self.check(candidate)?;
        self.partitions
            .iter()
            .map(|p| pair_distance(candidate, p))
            .sum()
    }

    /// The same cost evaluated pair by pair from the count matrix:
    /// co-clustered pairs pay `d(i, j)`, separated pairs pay `s(i, j)`.
    pub fn cost_via_pair_counts(&self, candidate: &Partition) -> Result<u64> {
        self.check(candidate)?;
        let labels = candidate.labels();
        let mut total = 0;
        for i in 0..self.n {
            let row = &self.together[i * self.n..(i + 1) * self.n];
            let li = labels[i];
            for j in i + 1..self.n {
                let s = row[j] as u64;
                total += if labels[j] == li { self.l() as u64 - s } else { s };
            }
        }
        Ok(total)
    }

    /// Pair-count cost restricted to an explicit set of pairs.
    pub fn pair_set_cost(&self, candidate: &Partition, pairs: &[(usize, usize)]) -> Result<u64> {
        self.check(candidate)?;
        let mut total = 0;
        for &(i, j) in pairs {
            for e in [i, j] {
                if e >= self.n {
                    return Err(Error::OutOfRange { index: e, n: self.n });
                }
            }
            if i == j {
                return Err(Error::DegeneratePair(i));
            }
            total += self.pair_cost(i, j, candidate.co_clustered(i, j));
        }
        Ok(total)
    }

    /// `sum_{i<j} d(i, j)`, the cost of the one-block solution.
    pub fn one_block_cost(&self) -> u64 {
        let mut total = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                total += self.d(i, j);
            }
        }
        total
    }

    /// Upper bound `l * C(n, 2)` on any cost.
    pub fn max_cost(&self) -> u64 {
        self.l() as u64 * choose2(self.n as u64)
    }

    /// The instance induced on `elements`; element `elements[t]` becomes `t`.
    pub fn restrict(&self, elements: &[usize]) -> Result<Instance> {
        if elements.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let parts = self
            .partitions
            .iter()
            .map(|p| p.restrict(elements))
            .collect::<Result<Vec<_>>>()?;
        Instance::new(parts)
    }
}

/// A partition with at most `k` blocks and its exact cost against an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub partition: Partition,
    pub cost: u64,
    pub k: usize,
}

impl Solution {
    pub fn evaluate(inst: &Instance, partition: Partition, k: usize) -> Result<Self> {
        if partition.block_count() > k {
            return Err(Error::InvalidParameter(format!(
                "solution has {} blocks, bound is {k}",
                partition.block_count()
            )));
        }
        let cost = inst.cost_of(&partition)?;
        Ok(Solution { partition, cost, k })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(labels: &[usize]) -> Partition {
        Partition::canonicalize(labels).unwrap()
    }

    fn running() -> Instance {
        Instance::new(vec![p(&[0, 0, 1, 1]), p(&[0, 0, 0, 1])]).unwrap()
    }

    #[test]
    fn build_single_partition() {
        let inst = Instance::new(vec![p(&[0, 0, 1])]).unwrap();
        assert_eq!(inst.s(0, 1), 1);
        assert_eq!(inst.s(0, 2), 0);
        assert_eq!(inst.s(2, 2), 1);
    }

    #[test]
    fn build_running_example() {
        let inst = running();
        assert_eq!(inst.s(0, 1), 2);
        assert_eq!(inst.s(0, 2), 1);
        assert_eq!(inst.s(0, 3), 0);
        assert_eq!(inst.s(2, 0), 1);
        for i in 0..4 {
            assert_eq!(inst.s(i, i), 2);
        }
    }

    #[test]
    fn build_unanimous() {
        let q = p(&[0, 1, 0, 2, 1]);
        let inst = Instance::new(vec![q.clone(), q.clone(), q]).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert!(matches!(inst.s(i, j), 0 | 3));
            }
        }
    }

    #[test]
    fn build_errors() {
        assert_eq!(Instance::new(vec![]), Err(Error::NoPartitions));
        let err = Instance::new(vec![p(&[0, 1]), p(&[0, 0, 0])]).unwrap_err();
        assert!(err.to_string().contains("universe mismatch"));
    }

    #[test]
    fn cost_examples() {
        let inst = running();
        let one = Partition::single_block(4).unwrap();
        assert_eq!(inst.cost_of(&p(&[0, 0, 1, 1])).unwrap(), 3);
        assert_eq!(inst.cost_of(&one).unwrap(), 7);
        assert_eq!(inst.one_block_cost(), 7);
        for cand in [p(&[0, 0, 1, 1]), one.clone(), p(&[0, 1, 0, 2])] {
            assert_eq!(
                inst.cost_of(&cand).unwrap(),
                inst.cost_via_pair_counts(&cand).unwrap()
            );
        }
        let self_inst = Instance::new(vec![p(&[0, 1, 0, 2])]).unwrap();
        assert_eq!(self_inst.cost_of(&p(&[0, 1, 0, 2])).unwrap(), 0);
    }

    #[test]
    fn singletons_cost_is_sum_of_counts() {
        let inst = running();
        let singles = Partition::singletons(4).unwrap();
        let mut sum = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                sum += inst.s(i, j);
            }
        }
        assert_eq!(inst.cost_via_pair_counts(&singles).unwrap(), sum);
    }

    #[test]
    fn split_vote_pair_costs_one_either_way() {
        let inst = running();
        // s(0,2) = 1 with l = 2
        assert_eq!(inst.pair_cost(0, 2, true), 1);
        assert_eq!(inst.pair_cost(0, 2, false), 1);
    }

    #[test]
    fn pair_set_cost_examples() {
        let inst = running();
        let cand = p(&[0, 0, 1, 1]);
        let all: Vec<_> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .collect();
        assert_eq!(
            inst.pair_set_cost(&cand, &all).unwrap(),
            inst.cost_via_pair_counts(&cand).unwrap()
        );
        assert_eq!(inst.pair_set_cost(&cand, &[]).unwrap(), 0);
        assert_eq!(inst.pair_set_cost(&cand, &[(0, 1)]).unwrap(), 0);
        assert!(matches!(
            inst.pair_set_cost(&cand, &[(0, 4)]),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            inst.pair_set_cost(&cand, &[(2, 2)]),
            Err(Error::DegeneratePair(2))
        ));
    }

    #[test]
    fn cost_universe_mismatch() {
        assert!(running().cost_of(&p(&[0, 1])).is_err());
        assert!(running().cost_via_pair_counts(&p(&[0, 1])).is_err());
    }
}
