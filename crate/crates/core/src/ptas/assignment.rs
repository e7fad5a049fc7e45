use crate::error::{Error, Result};
use crate::partition::Partition;

/// A partition of a subset `A` of the universe into `slots` numbered blocks,
/// some of which may be empty.
///
/// Unlike [`Partition`], block numbers are meaningful here: the sample
/// partitions and greedy extensions of the sampling scheme keep block `i`
/// aligned across the sample and the full universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAssignment {
    elements: Vec<usize>,
    labels: Vec<usize>,
    slots: usize,
}

impl BlockAssignment {
    pub fn new(elements: Vec<usize>, labels: Vec<usize>, slots: usize) -> Result<Self> {
        if elements.len() != labels.len() {
            return Err(Error::UniverseMismatch {
                expected: elements.len(),
                found: labels.len(),
            });
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= slots) {
            return Err(Error::InvalidBlock {
                block: bad,
                blocks: slots,
            });
        }
        Ok(BlockAssignment {
            elements,
            labels,
            slots,
        })
    }

    /// `partition` describes the subset `elements` position by position.
    pub fn from_partition(elements: Vec<usize>, partition: &Partition) -> Result<Self> {
        if elements.len() != partition.n() {
            return Err(Error::UniverseMismatch {
                expected: elements.len(),
                found: partition.n(),
            });
        }
        let slots = partition.block_count();
        BlockAssignment::new(elements, partition.labels().to_vec(), slots)
    }

    /// A full-universe partition viewed as an assignment over `0..n`.
    pub fn full(partition: &Partition) -> Self {
        BlockAssignment {
            elements: (0..partition.n()).collect(),
            labels: partition.labels().to_vec(),
            slots: partition.block_count(),
        }
    }

    /// Restriction of `full` to `subset`, keeping `full`'s block numbers.
    pub fn restrict(full: &Partition, subset: &[usize]) -> Result<Self> {
        let labels = subset
            .iter()
            .map(|&e| {
                if e < full.n() {
                    Ok(full.label(e))
                } else {
                    Err(Error::OutOfRange { index: e, n: full.n() })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BlockAssignment {
            elements: subset.to_vec(),
            labels,
            slots: full.block_count(),
        })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Block of `u`, if `u` belongs to the subset.
    pub fn block_of(&self, u: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == u).map(|p| self.labels[p])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.elements.iter().copied().zip(self.labels.iter().copied())
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.slots];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }

    /// Canonical partition of a subset that is exactly `0..n` (in any order).
    pub fn to_partition(&self, n: usize) -> Result<Partition> {
        if self.elements.len() != n {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: self.elements.len(),
            });
        }
        let mut raw = vec![usize::MAX; n];
        for (e, l) in self.iter() {
            if e >= n || raw[e] != usize::MAX {
                return Err(Error::SampleNotSubset(format!(
                    "element {e} is out of range or repeated"
                )));
            }
            raw[e] = l;
        }
        Partition::canonicalize(&raw)
    }
}
