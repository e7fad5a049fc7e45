//! Seeded instance and graph generators.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::Instance;
use crate::partition::Partition;
use crate::rng::Rng;

/// Parameters of a planted instance: a hidden `k`-block partition copied `l`
/// times, each copy independently relabeling every element with probability
/// `noise`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlantedSpec {
    pub n: usize,
    pub l: usize,
    pub k: usize,
    pub noise: f64,
    pub seed: u64,
}

impl PlantedSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyUniverse);
        }
        if self.l == 0 {
            return Err(Error::NoPartitions);
        }
        if self.k == 0 || self.k > self.n {
            return Err(Error::InvalidParameter(format!(
                "planted block count {} must be in 1..={}",
                self.k, self.n
            )));
        }
        if !(0.0..=1.0).contains(&self.noise) {
            return Err(Error::InvalidParameter(format!(
                "noise {} outside [0, 1]",
                self.noise
            )));
        }
        Ok(())
    }
}

/// Draws a planted instance and returns it with its ground truth.
///
/// Ground-truth labels are dealt round-robin (`i mod k`) and then shuffled,
/// so block sizes differ by at most one. A relabeled element gets a uniform
/// label in `0..k`, possibly its original one.
pub fn gen_planted(spec: &PlantedSpec) -> Result<(Instance, Partition)> {
    spec.validate()?;
    let mut rng = Rng::seed_from_u64(spec.seed);
    let mut truth: Vec<usize> = (0..spec.n).map(|i| i % spec.k).collect();
    rng.shuffle(&mut truth);
    let mut partitions = Vec::with_capacity(spec.l);
    for _ in 0..spec.l {
        let mut labels = truth.clone();
        for label in labels.iter_mut() {
            if rng.bernoulli(spec.noise) {
                *label = rng.index(spec.k);
            }
        }
        partitions.push(Partition::canonicalize(&labels)?);
    }
    Ok((Instance::new(partitions)?, Partition::canonicalize(&truth)?))
}

/// `l` partitions whose labels are drawn uniformly from `0..max_blocks` and
/// canonicalized.
pub fn gen_random_partitions(n: usize, l: usize, max_blocks: usize, seed: u64) -> Result<Instance> {
    if max_blocks == 0 {
        return Err(Error::InvalidParameter("max_blocks must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::EmptyUniverse);
    }
    if l == 0 {
        return Err(Error::NoPartitions);
    }
    let mut rng = Rng::seed_from_u64(seed);
    let partitions = (0..l)
        .map(|_| {
            let labels: Vec<usize> = (0..n).map(|_| rng.index(max_blocks)).collect();
            Partition::canonicalize(&labels)
        })
        .collect::<Result<Vec<_>>>()?;
    Instance::new(partitions)
}

/// A random partition of `0..n` with labels uniform in `0..max_blocks`.
pub fn random_partition(n: usize, max_blocks: usize, rng: &mut Rng) -> Result<Partition> {
    let labels: Vec<usize> = (0..n).map(|_| rng.index(max_blocks.max(1))).collect();
    Partition::canonicalize(&labels)
}

/// Erdos-Renyi `G(n, p)`: pairs `(a, b)`, `a < b`, are visited in
/// lexicographic order and kept with probability `p`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddVertexCount(n));
    }
    let mut rng = Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.bernoulli(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::solve_exact;

    #[test]
    fn noise_free_planted_is_unanimous() {
        let spec = PlantedSpec { n: 12, l: 3, k: 3, noise: 0.0, seed: 5 };
        let (inst, truth) = gen_planted(&spec).unwrap();
        assert!(inst.partitions().iter().all(|p| *p == truth));
        let mut sizes = truth.block_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![4, 4, 4]);
        let sol = solve_exact(&inst, 3).unwrap();
        assert_eq!(sol.cost, 0);
        assert_eq!(sol.partition, truth);
    }

    #[test]
    fn full_noise_uses_at_most_k_labels() {
        let spec = PlantedSpec { n: 40, l: 4, k: 3, noise: 1.0, seed: 8 };
        let (inst, truth) = gen_planted(&spec).unwrap();
        assert!(inst.partitions().iter().all(|p| p.block_count() <= 3));
        assert!(inst.partitions().iter().any(|p| *p != truth));
    }

    #[test]
    fn planted_validation() {
        let bad_k = PlantedSpec { n: 3, l: 1, k: 4, noise: 0.0, seed: 0 };
        assert!(gen_planted(&bad_k).is_err());
        let bad_noise = PlantedSpec { n: 3, l: 1, k: 2, noise: 1.5, seed: 0 };
        assert!(gen_planted(&bad_noise).is_err());
    }

    #[test]
    fn random_partitions() {
        let inst = gen_random_partitions(9, 4, 1, 3).unwrap();
        assert!(inst.partitions().iter().all(|p| p.block_count() == 1));
        assert_eq!(inst.cost_of(&Partition::single_block(9).unwrap()).unwrap(), 0);
        assert_eq!(gen_random_partitions(7, 3, 3, 21).unwrap(), gen_random_partitions(7, 3, 3, 21).unwrap());
        let inst = gen_random_partitions(6, 3, 3, 1).unwrap();
        for i in 0..6 {
            for j in i + 1..6 {
                let direct = inst.partitions().iter().filter(|p| p.co_clustered(i, j)).count() as u64;
                assert_eq!(inst.s(i, j), direct);
                assert_eq!(inst.s(i, j) + inst.d(i, j), 3);
            }
        }
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gen_gnp(8, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gen_gnp(8, 1.0, 1).unwrap().edge_count(), 28);
        assert!(gen_gnp(5, 0.5, 1).is_err());
        assert!(gen_gnp(4, 1.5, 1).is_err());
    }
}
