//! Set partitions of a universe `0..n` in canonical restricted-growth form.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A partition of `0..n` stored as one block label per element.
///
/// Labels are always canonical: blocks are numbered in order of first
/// appearance, so `labels[0] == 0` and every new label is one more than the
/// largest label seen before it. Two `Partition`s are equal iff they describe
/// the same set partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
    blocks: usize,
}

impl Partition {
    /// Renumbers arbitrary tokens by first appearance.
    pub fn canonicalize<T: Eq + Hash>(raw: &[T]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut seen: HashMap<&T, usize> = HashMap::with_capacity(raw.len());
        let labels = raw
            .iter()
            .map(|token| {
                let next = seen.len();
                *seen.entry(token).or_insert(next)
            })
            .collect();
        Ok(Partition {
            labels,
            blocks: seen.len(),
        })
    }

    /// Builds a partition from labels that are already in restricted-growth
    /// form. Returns `None` otherwise.
    pub fn from_canonical(labels: Vec<usize>) -> Option<Self> {
        if labels.is_empty() {
            return None;
        }
        let mut blocks = 0;
        for &label in &labels {
            if label > blocks {
                return None;
            }
            if label == blocks {
                blocks += 1;
            }
        }
        Some(Partition { labels, blocks })
    }

    pub(crate) fn from_canonical_unchecked(labels: Vec<usize>, blocks: usize) -> Self {
        debug_assert!(Partition::from_canonical(labels.clone()).map(|p| p.blocks) == Some(blocks));
        Partition { labels, blocks }
    }

    pub fn single_block(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        Ok(Partition {
            labels: vec![0; n],
            blocks: 1,
        })
    }

    pub fn singletons(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        Ok(Partition {
            labels: (0..n).collect(),
            blocks: n,
        })
    }

    /// Builds a partition from explicit blocks. Every element of `0..n`
    /// must appear in exactly one block.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut raw = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &e in block {
                if e >= n {
                    return Err(Error::OutOfRange { index: e, n });
                }
                raw[e] = b;
            }
        }
        if let Some(missing) = raw.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidParameter(format!(
                "element {missing} is not covered by any block"
            )));
        }
        Partition::canonicalize(&raw)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, element: usize) -> usize {
        self.labels[element]
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn co_clustered(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    /// Block sizes indexed by label.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.blocks];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }

    /// Members of every block, in element order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (e, &l) in self.labels.iter().enumerate() {
            out[l].push(e);
        }
        out
    }

    /// Number of unordered pairs `i < j` sharing a block.
    pub fn co_clustered_pairs(&self) -> u64 {
        self.block_sizes().iter().map(|&s| choose2(s as u64)).sum()
    }

    /// The partition induced on `elements` (in the given order).
    pub fn restrict(&self, elements: &[usize]) -> Result<Partition> {
        let raw = elements
            .iter()
            .map(|&e| {
                self.labels
                    .get(e)
                    .copied()
                    .ok_or(Error::OutOfRange { index: e, n: self.n() })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::canonicalize(&raw)
    }

    /// Applies a permutation of the universe: element `e` of `self` becomes
    /// element `perm[e]` of the result.
    pub fn permute(&self, perm: &[usize]) -> Result<Partition> {
        if perm.len() != self.n() {
            return Err(Error::UniverseMismatch {
                expected: self.n(),
                found: perm.len(),
            });
        }
        let mut raw = vec![0; self.n()];
        for (e, &target) in perm.iter().enumerate() {
            raw[target] = self.labels[e];
        }
        Partition::canonicalize(&raw)
    }

    fn check_same_universe(&self, other: &Partition) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::UniverseMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    /// Number of pairs `i < j` co-clustered in both partitions.
    pub fn common_pairs(&self, other: &Partition) -> Result<u64> {
        self.check_same_universe(other)?;
        let mut cells: HashMap<(usize, usize), u64> = HashMap::new();
        for (&a, &b) in self.labels.iter().zip(&other.labels) {
            *cells.entry((a, b)).or_insert(0) += 1;
        }
        Ok(cells.values().map(|&c| choose2(c)).sum())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.labels)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.labels {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

pub(crate) fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Symmetric difference distance: the number of pairs `i < j` co-clustered in
/// exactly one of the two partitions.
///
/// Computed from the contingency table in `O(n)`.
pub fn pair_distance(a: &Partition, b: &Partition) -> Result<u64> {
    let common = a.common_pairs(b)?;
    Ok(a.co_clustered_pairs() + b.co_clustered_pairs() - 2 * common)
}

/// Number of pairs on which the two partitions agree, `C(n,2) - d(a,b)`.
pub fn pair_similarity(a: &Partition, b: &Partition) -> Result<u64> {
    Ok(choose2(a.n() as u64) - pair_distance(a, b)?)
}
