//! Agreement statistics of single elements against partial partitions:
//! per-level agreement fractions, move-and-evaluate profiles, sample goodness
//! and bad-element detection.
//!
//! For an element `u` and a partition `A` of a subset, each pair `(u, x)`
//! with `x` in `A` other than `u` has an agreement level: `s(x, u)` if `A`
//! co-clusters them, `d(x, u)` otherwise. A [`ValProfile`] counts the pairs
//! at each level `0..=l` and keeps everything as integers over the shared
//! denominator `|A \ {u}|`.

use std::cmp::Ordering;

use super::assignment::BlockAssignment;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValProfile {
    pub element: usize,
    /// Block `u` was moved into, for move profiles.
    pub target: Option<usize>,
    /// `level_counts[j]` pairs agree with exactly `j` input partitions.
    pub level_counts: Vec<u64>,
    /// `|A \ {u}|`.
    pub pairs: u64,
    pub l: usize,
}

impl ValProfile {
    /// Fraction of pairs at agreement level `j`.
    pub fn level(&self, j: usize) -> f64 {
        self.level_counts[j] as f64 / self.pairs as f64
    }

    pub fn levels(&self) -> Vec<f64> {
        (0..=self.l).map(|j| self.level(j)).collect()
    }

    /// Sum of agreement levels over all pairs.
    pub fn agreement(&self) -> u64 {
        self.level_counts
            .iter()
            .enumerate()
            .map(|(j, &c)| j as u64 * c)
            .sum()
    }

    /// Overall agreement fraction `agreement / (l * pairs)`.
    pub fn val(&self) -> f64 {
        self.agreement() as f64 / (self.l as u64 * self.pairs) as f64
    }

    /// Exact comparison of `val` between two profiles.
    pub fn cmp_val(&self, other: &ValProfile) -> Ordering {
        let lhs = self.agreement() as u128 * (other.l as u128 * other.pairs as u128);
        let rhs = other.agreement() as u128 * (self.l as u128 * self.pairs as u128);
        lhs.cmp(&rhs)
    }
}

fn profile(
    inst: &Instance,
    ctx: &BlockAssignment,
    u: usize,
    u_block: Option<usize>,
    target: Option<usize>,
) -> Result<ValProfile> {
    if u >= inst.n() {
        return Err(Error::OutOfRange { index: u, n: inst.n() });
    }
    let l = inst.l();
    let mut level_counts = vec![0u64; l + 1];
    let mut pairs = 0;
    for (x, label) in ctx.iter() {
        if x == u {
            continue;
        }
        let level = if Some(label) == u_block {
            inst.s(x, u)
        } else {
            inst.d(x, u)
        };
        level_counts[level as usize] += 1;
        pairs += 1;
    }
    if pairs == 0 {
        return Err(Error::EmptyContext);
    }
    Ok(ValProfile {
        element: u,
        target,
        level_counts,
        pairs,
        l,
    })
}

fn check_context(inst: &Instance, ctx: &BlockAssignment) -> Result<()> {
    if let Some(&bad) = ctx.elements().iter().find(|&&e| e >= inst.n()) {
        return Err(Error::OutOfRange { index: bad, n: inst.n() });
    }
    Ok(())
}

/// Agreement profile of `u` against the partition `ctx` of a subset. If `u`
/// is outside the subset it is treated as co-clustered with nobody.
pub fn val_levels(inst: &Instance, ctx: &BlockAssignment, u: usize) -> Result<ValProfile> {
    check_context(inst, ctx)?;
    profile(inst, ctx, u, ctx.block_of(u), None)
}

/// Agreement profile of `u` after moving (or adding) it into block `target`.
/// `target == ctx.slots()` denotes a fresh empty block.
pub fn pval_levels(
    inst: &Instance,
    ctx: &BlockAssignment,
    u: usize,
    target: usize,
) -> Result<ValProfile> {
    check_context(inst, ctx)?;
    if target > ctx.slots() {
        return Err(Error::InvalidBlock {
            block: target,
            blocks: ctx.slots(),
        });
    }
    profile(inst, ctx, u, Some(target), Some(target))
}

/// Block maximizing `pval` for `u` among `0..slots`; ties go to the lowest
/// index. Comparisons are exact.
pub fn pval_argmax(inst: &Instance, ctx: &BlockAssignment, u: usize, slots: usize) -> Result<usize> {
    let mut best: Option<(usize, ValProfile)> = None;
    for target in 0..slots {
        let prof = profile(inst, ctx, u, Some(target), Some(target))?;
        let better = match &best {
            None => true,
            Some((_, b)) => prof.cmp_val(b) == Ordering::Greater,
        };
        if better {
            best = Some((target, prof));
        }
    }
    best.map(|(t, _)| t)
        .ok_or_else(|| Error::InvalidParameter("no target blocks".into()))
}

/// Outcome of a sample goodness check.
#[derive(Clone, Debug, PartialEq)]
pub struct GoodnessReport {
    pub good: bool,
    pub max_deviation: f64,
    /// `(element, level, block)` where the maximum deviation occurred.
    pub worst: Option<(usize, usize, usize)>,
}

/// Checks that the sample partition reproduces the move profiles of the full
/// partition: for every element `u`, level `j` and block `i`, the level-`j`
/// fraction of `u` moved into block `i` differs by at most `beta` between the
/// sample and the full partition.
///
/// Block numbers of `sample` must be aligned with `full_opt`, as produced by
/// [`BlockAssignment::restrict`].
pub fn is_beta_good(
    inst: &Instance,
    full_opt: &Partition,
    sample: &BlockAssignment,
    beta: f64,
) -> Result<GoodnessReport> {
    let n = inst.n();
    if full_opt.n() != n {
        return Err(Error::UniverseMismatch {
            expected: n,
            found: full_opt.n(),
        });
    }
    let mut seen = vec![false; n];
    for &e in sample.elements() {
        if e >= n || seen[e] {
            return Err(Error::SampleNotSubset(format!(
                "element {e} is out of range or repeated"
            )));
        }
        seen[e] = true;
    }
    let full = BlockAssignment::full(full_opt);
    let blocks = full_opt.block_count().max(sample.slots());
    let mut report = GoodnessReport {
        good: true,
        max_deviation: 0.0,
        worst: None,
    };
    for u in 0..n {
        for i in 0..blocks {
            let on_full = profile(inst, &full, u, Some(i), Some(i))?;
            let on_sample = match profile(inst, sample, u, Some(i), Some(i)) {
                Ok(p) => p,
                // u is the only sampled element; nothing to compare.
                Err(Error::EmptyContext) => continue,
                Err(e) => return Err(e),
            };
            for j in 0..=inst.l() {
                let dev = (on_full.level(j) - on_sample.level(j)).abs();
                if dev > report.max_deviation || report.worst.is_none() {
                    report.max_deviation = dev.max(report.max_deviation);
                    report.worst = Some((u, j, i));
                }
            }
        }
    }
    report.good = report.max_deviation <= beta;
    Ok(report)
}

/// Agreement threshold `1 - 1/(20 k^2)` at or below which an element is bad.
pub fn good_threshold(k: usize) -> f64 {
    1.0 - 1.0 / (20.0 * (k * k) as f64)
}

/// Elements whose agreement with `opt` is at most [`good_threshold`].
pub fn identify_bad_elements(inst: &Instance, opt: &Partition, k: usize) -> Result<Vec<usize>> {
    let n = inst.n();
    if opt.n() != n {
        return Err(Error::UniverseMismatch {
            expected: n,
            found: opt.n(),
        });
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let full = BlockAssignment::full(opt);
    let scale = 20 * (k * k) as u128;
    let mut bad = Vec::new();
    for u in 0..n {
        let prof = val_levels(inst, &full, u)?;
        // val <= 1 - 1/(20k^2)  <=>  20k^2 * agreement <= (20k^2 - 1) * l * pairs
        let lhs = scale * prof.agreement() as u128;
        let rhs = (scale - 1) * prof.l as u128 * prof.pairs as u128;
        if lhs <= rhs {
            bad.push(u);
        }
    }
    Ok(bad)
}
