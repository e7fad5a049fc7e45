//! Sampling-based approximation scheme for consensus clustering with at most
//! `k` output blocks.
//!
//! The driver runs two branches and keeps the cheaper result:
//!
//! * a dense-case branch, delegated to a [`DenseSolver`] (multi-start local
//!   search by default);
//! * a sampling branch: draw a sample `S`, and for every partition of `S`
//!   with at most `k` blocks extend it greedily to the whole universe, keep
//!   the large blocks and re-solve the union of the small blocks recursively
//!   with the number of small blocks as the new bound and a third of the
//!   accuracy.
//!
//! Instances with `k = 1`, or small enough for exhaustive search, are solved
//! exactly. The approximation guarantee therefore holds on the exact path;
//! elsewhere the scheme is a heuristic, because the literal sample sizes of
//! the analysis are far beyond any enumeration budget. The effective sample
//! size is capped so that `k^|S|` fits [`PtasParams::candidate_budget`].

mod assignment;
pub mod dense;
pub mod extend;
pub mod stats;

use rayon::prelude::*;

pub use assignment::BlockAssignment;
pub use dense::{DenseSolver, LocalSearch};
pub use extend::{greedy_extend, placement_costs, split_large_small, SplitReport};
pub use stats::{
    good_threshold, identify_bad_elements, is_beta_good, pval_argmax, pval_levels, val_levels,
    GoodnessReport, ValProfile,
};

use crate::enumerate::{count_partitions, partitions_unbounded, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::exact::solve_exact_with_budget;
use crate::instance::{Instance, Solution};
use crate::partition::Partition;
use crate::rng::{derive_seed, Rng};

pub const DEFAULT_CANDIDATE_BUDGET: u64 = 1_000_000;

/// Candidates evaluated per parallel batch.
const BATCH: usize = 4096;

/// How the goodness slack is derived from `epsilon` when not given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BetaRule {
    /// `epsilon / (128 * 20^2 * k^4)`.
    #[default]
    Standard,
    /// `epsilon / (20 * 160 * k^2 * l)`, the variant used when bounding the
    /// extension cost; depends on the number of input partitions.
    PerPartition,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PtasParams {
    pub k: usize,
    pub epsilon: f64,
    /// Explicit goodness slack; derived from `beta_rule` when `None`.
    pub beta: Option<f64>,
    pub beta_rule: BetaRule,
    /// Number of draws (with replacement) for the sample, overriding the
    /// derived size.
    pub sample_override: Option<usize>,
    /// Maximum number of sample partitions enumerated per call.
    pub candidate_budget: u64,
    pub seed: u64,
    /// Largest universe solved exhaustively; `None` leaves it to
    /// `exact_budget` alone.
    pub exact_cap: Option<usize>,
    pub exact_budget: u64,
    pub restarts: usize,
}

impl PtasParams {
    pub fn new(k: usize, epsilon: f64) -> Self {
        PtasParams {
            k,
            epsilon,
            beta: None,
            beta_rule: BetaRule::Standard,
            sample_override: None,
            candidate_budget: DEFAULT_CANDIDATE_BUDGET,
            seed: 0,
            exact_cap: None,
            exact_budget: DEFAULT_BUDGET,
            restarts: dense::DEFAULT_RESTARTS,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if let Some(beta) = self.beta {
            if !(beta > 0.0) {
                return Err(Error::InvalidParameter(format!("beta must be positive, got {beta}")));
            }
        }
        if self.candidate_budget == 0 {
            return Err(Error::InvalidParameter("candidate budget must be at least 1".into()));
        }
        Ok(())
    }

    /// Goodness slack for a call with bound `k`, accuracy `epsilon` and `l`
    /// input partitions.
    pub fn beta_for(&self, k: usize, epsilon: f64, l: usize) -> f64 {
        if let Some(beta) = self.beta {
            return beta;
        }
        let k = k as f64;
        match self.beta_rule {
            BetaRule::Standard => epsilon / (128.0 * 400.0 * k.powi(4)),
            BetaRule::PerPartition => epsilon / (20.0 * 160.0 * k * k * l as f64),
        }
    }
}

/// `500 ln(n) / beta^2`, the sample size of the analysis (rounded up).
pub fn theoretical_sample_size(n: usize, beta: f64) -> f64 {
    (500.0 * (n as f64).ln() / (beta * beta)).ceil()
}

/// `2560000 k^4 ln(n) / epsilon^2`, the alternative sample size quoted in the
/// analysis. Informational only.
pub fn theoretical_t(n: usize, k: usize, epsilon: f64) -> f64 {
    2_560_000.0 * (k as f64).powi(4) * (n as f64).ln() / (epsilon * epsilon)
}

/// Largest `s` with `k^s <= budget` (`budget` itself when `k == 1`).
fn log_floor(k: usize, budget: u64) -> usize {
    if k <= 1 {
        return usize::try_from(budget).unwrap_or(usize::MAX);
    }
    let mut s = 0;
    let mut pow: u128 = 1;
    while pow * k as u128 <= budget as u128 {
        pow *= k as u128;
        s += 1;
    }
    s
}

/// Number of draws made for a universe of `n` elements.
pub fn effective_sample_draws(params: &PtasParams, n: usize, k: usize, epsilon: f64, l: usize) -> usize {
    if let Some(s) = params.sample_override {
        return s.max(1);
    }
    let theory = theoretical_sample_size(n, params.beta_for(k, epsilon, l));
    let theory = if theory.is_finite() && theory < usize::MAX as f64 {
        theory as usize
    } else {
        usize::MAX
    };
    theory.min(log_floor(k, params.candidate_budget)).min(n).max(1)
}

/// `draws` uniform draws from `0..n` with replacement, deduplicated and
/// sorted.
pub fn draw_sample(n: usize, draws: usize, seed: u64) -> Vec<usize> {
    let mut rng = Rng::seed_from_u64(seed);
    let mut sample: Vec<usize> = (0..draws).map(|_| rng.index(n)).collect();
    sample.sort_unstable();
    sample.dedup();
    sample
}

/// Which branch produced the returned solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverPath {
    Exact,
    Dense,
    Sampled,
}

impl SolverPath {
    pub fn as_str(self) -> &'static str {
        match self {
            SolverPath::Exact => "exact",
            SolverPath::Dense => "dense",
            SolverPath::Sampled => "sampled",
        }
    }
}

impl std::fmt::Display for SolverPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of a top-level run, with bookkeeping about the branches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtasOutcome {
    pub solution: Solution,
    pub path: SolverPath,
    pub dense_cost: Option<u64>,
    pub sampled_cost: Option<u64>,
    /// Distinct sampled elements at the top level.
    pub sample_size: usize,
    pub candidates_evaluated: u64,
    /// The sample had more partitions than the candidate budget allowed.
    pub candidates_truncated: bool,
    /// No sample partition could be evaluated; the dense result was used.
    pub fell_back: bool,
}

/// Runs the scheme with the default local-search dense solver.
pub fn min_dis_ag(inst: &Instance, params: &PtasParams) -> Result<PtasOutcome> {
    let dense = LocalSearch {
        restarts: params.restarts,
    };
    min_dis_ag_with(inst, params, &dense)
}

/// Runs the scheme with a caller-supplied dense solver.
pub fn min_dis_ag_with<D: DenseSolver>(
    inst: &Instance,
    params: &PtasParams,
    dense: &D,
) -> Result<PtasOutcome> {
    params.validate()?;
    let engine = Engine { params, dense };
    engine.run(inst, params.k, params.epsilon, params.seed)
}

struct Engine<'a, D> {
    params: &'a PtasParams,
    dense: &'a D,
}

impl<D: DenseSolver> Engine<'_, D> {
    fn exact_applies(&self, n: usize, k: usize) -> bool {
        n <= 16 * k * k
            && self.params.exact_cap.is_none_or(|cap| n <= cap)
            && count_partitions(n, k) <= self.params.exact_budget as u128
    }

    fn run(&self, inst: &Instance, k: usize, epsilon: f64, seed: u64) -> Result<PtasOutcome> {
        let n = inst.n();
        let plain = |solution: Solution, path| PtasOutcome {
            solution,
            path,
            dense_cost: None,
            sampled_cost: None,
            sample_size: 0,
            candidates_evaluated: 0,
            candidates_truncated: false,
            fell_back: false,
        };
        if k == 1 {
            let partition = Partition::single_block(n)?;
            let sol = Solution {
                cost: inst.one_block_cost(),
                partition,
                k,
            };
            return Ok(plain(sol, SolverPath::Exact));
        }
        if self.exact_applies(n, k) {
            let sol = solve_exact_with_budget(inst, k, self.params.exact_budget)?;
            return Ok(plain(sol, SolverPath::Exact));
        }

        let dense_part = self.dense.solve(inst, k, derive_seed(seed, u64::MAX))?;
        let dense_sol = Solution::evaluate(inst, dense_part, k)?;

        let draws = effective_sample_draws(self.params, n, k, epsilon, inst.l());
        let sample = draw_sample(n, draws, seed);

        let total = count_partitions(sample.len(), k);
        let limit = total.min(self.params.candidate_budget as u128) as u64;
        let truncated = total > limit as u128;

        let mut best: Option<(u64, u64, Partition)> = None;
        let mut evaluated = 0u64;
        let mut candidates = partitions_unbounded(sample.len(), k);
        while evaluated < limit {
            let mut batch = Vec::with_capacity(BATCH);
            while batch.len() < BATCH && evaluated + (batch.len() as u64) < limit {
                match candidates.next() {
                    Some(c) => batch.push((evaluated + batch.len() as u64, c)),
                    None => break,
                }
            }
            if batch.is_empty() {
                break;
            }
            evaluated += batch.len() as u64;
            let batch_best = batch
                .into_par_iter()
                .map(|(idx, cand)| {
                    let part = self.assemble(inst, k, epsilon, &sample, &cand, derive_seed(seed, idx))?;
                    let cost = inst.cost_of(&part)?;
                    Ok((cost, idx, part))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .min_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
            if let Some(cand) = batch_best {
                if best.as_ref().is_none_or(|b| (cand.0, cand.1) < (b.0, b.1)) {
                    best = Some(cand);
                }
            }
        }

        let mut outcome = PtasOutcome {
            dense_cost: Some(dense_sol.cost),
            sampled_cost: best.as_ref().map(|b| b.0),
            sample_size: sample.len(),
            candidates_evaluated: evaluated,
            candidates_truncated: truncated,
            fell_back: best.is_none(),
            solution: dense_sol,
            path: SolverPath::Dense,
        };
        if let Some((cost, _, partition)) = best {
            if cost < outcome.solution.cost {
                outcome.solution = Solution { partition, cost, k };
                outcome.path = SolverPath::Sampled;
            }
        }
        Ok(outcome)
    }

    /// Extends one sample partition, keeps the large blocks and re-solves the
    /// union of the small ones.
    fn assemble(
        &self,
        inst: &Instance,
        k: usize,
        epsilon: f64,
        sample: &[usize],
        cand: &Partition,
        seed: u64,
    ) -> Result<Partition> {
        let n = inst.n();
        let sample_part = BlockAssignment::new(sample.to_vec(), cand.labels().to_vec(), k)?;
        let clusters = greedy_extend(inst, &sample_part, k)?;
        let split = split_large_small(&clusters, k);

        let mut raw = vec![usize::MAX; n];
        let mut next = 0;
        let mut is_large = vec![false; clusters.slots()];
        for &j in &split.large {
            is_large[j] = true;
        }
        let mut relabel = vec![usize::MAX; clusters.slots()];
        for (e, label) in clusters.iter() {
            if is_large[label] {
                if relabel[label] == usize::MAX {
                    relabel[label] = next;
                    next += 1;
                }
                raw[e] = relabel[label];
            }
        }
        if !split.merged.is_empty() {
            let sub = inst.restrict(&split.merged)?;
            let sub_part = if split.large.is_empty() {
                self.dense.solve(&sub, split.small.len(), seed)?
            } else {
                self.run(&sub, split.small.len(), epsilon / 3.0, seed)?
                    .solution
                    .partition
            };
            for (t, &e) in split.merged.iter().enumerate() {
                raw[e] = next + sub_part.label(t);
            }
        }
        Partition::canonicalize(&raw)
    }
}
