//! Seeded benchmark runs over planted instances, written as CSV.
//!
//! Columns, in order:
//! `seed,n,l,k,epsilon,generator,exact_cost,ptas_cost,ratio,exact_ms,ptas_ms,solver_path`.
//! `exact_cost` and `ratio` are empty when the exhaustive search does not fit
//! the budget. `ratio` is `both-zero` when both costs are 0 and `inf` when
//! only the exact cost is. Timing columns are empty unless timing is
//! requested, which keeps the default output byte-for-byte reproducible.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;

use crate::enumerate::DEFAULT_BUDGET;
use crate::error::{Error, Result};
use crate::exact::{solve_exact_with_budget, within_budget};
use crate::generate::{gen_planted, PlantedSpec};
use crate::ptas::{min_dis_ag, PtasParams, SolverPath};

pub const CSV_HEADER: [&str; 12] = [
    "seed",
    "n",
    "l",
    "k",
    "epsilon",
    "generator",
    "exact_cost",
    "ptas_cost",
    "ratio",
    "exact_ms",
    "ptas_ms",
    "solver_path",
];

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub trials: usize,
    pub n: usize,
    pub l: usize,
    pub k: usize,
    pub epsilon: f64,
    pub noise: f64,
    pub seed0: u64,
    /// Budget for the reference exhaustive solve.
    pub exact_budget: u64,
    /// Template for the scheme's parameters; `k`, `epsilon` and `seed` are
    /// overwritten per trial.
    pub ptas: PtasParams,
    pub timing: bool,
}

impl BenchConfig {
    pub fn new(trials: usize, n: usize, l: usize, k: usize, epsilon: f64, noise: f64, seed0: u64) -> Self {
        BenchConfig {
            trials,
            n,
            l,
            k,
            epsilon,
            noise,
            seed0,
            exact_budget: DEFAULT_BUDGET,
            ptas: PtasParams::new(k, epsilon),
            timing: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Ratio {
    Value(f64),
    BothZero,
    Infinite,
}

impl Ratio {
    fn of(ptas: u64, exact: u64) -> Ratio {
        match (exact, ptas) {
            (0, 0) => Ratio::BothZero,
            (0, _) => Ratio::Infinite,
            _ => Ratio::Value(ptas as f64 / exact as f64),
        }
    }

    pub fn within(self, bound: f64) -> bool {
        match self {
            Ratio::Value(r) => r <= bound,
            Ratio::BothZero => true,
            Ratio::Infinite => false,
        }
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ratio::Value(r) => write!(f, "{r:.6}"),
            Ratio::BothZero => f.write_str("both-zero"),
            Ratio::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRecord {
    pub seed: u64,
    pub n: usize,
    pub l: usize,
    pub k: usize,
    pub epsilon: f64,
    pub generator: String,
    pub exact_cost: Option<u64>,
    pub ptas_cost: u64,
    pub ratio: Option<Ratio>,
    pub exact_ms: Option<f64>,
    pub ptas_ms: Option<f64>,
    pub solver_path: SolverPath,
}

impl ExperimentRecord {
    fn fields(&self) -> [String; 12] {
        let opt = |v: Option<String>| v.unwrap_or_default();
        [
            self.seed.to_string(),
            self.n.to_string(),
            self.l.to_string(),
            self.k.to_string(),
            self.epsilon.to_string(),
            self.generator.clone(),
            opt(self.exact_cost.map(|c| c.to_string())),
            self.ptas_cost.to_string(),
            opt(self.ratio.map(|r| r.to_string())),
            opt(self.exact_ms.map(|t| format!("{t:.3}"))),
            opt(self.ptas_ms.map(|t| format!("{t:.3}"))),
            self.solver_path.to_string(),
        ]
    }
}

fn run_trial(cfg: &BenchConfig, seed: u64) -> Result<ExperimentRecord> {
    let spec = PlantedSpec {
        n: cfg.n,
        l: cfg.l,
        k: cfg.k,
        noise: cfg.noise,
        seed,
    };
    let (inst, _) = gen_planted(&spec)?;

    let (exact_cost, exact_ms) = if within_budget(cfg.n, cfg.k, cfg.exact_budget) {
        let start = Instant::now();
        let sol = solve_exact_with_budget(&inst, cfg.k, cfg.exact_budget)?;
        (Some(sol.cost), Some(start.elapsed().as_secs_f64() * 1e3))
    } else {
        (None, None)
    };

    let mut params = cfg.ptas.clone();
    params.k = cfg.k;
    params.epsilon = cfg.epsilon;
    params.seed = seed;
    let start = Instant::now();
    let out = min_dis_ag(&inst, &params)?;
    let ptas_ms = start.elapsed().as_secs_f64() * 1e3;

    Ok(ExperimentRecord {
        seed,
        n: cfg.n,
        l: cfg.l,
        k: cfg.k,
        epsilon: cfg.epsilon,
        generator: format!("planted:noise={}", cfg.noise),
        exact_cost,
        ptas_cost: out.solution.cost,
        ratio: exact_cost.map(|e| Ratio::of(out.solution.cost, e)),
        exact_ms: exact_ms.filter(|_| cfg.timing),
        ptas_ms: Some(ptas_ms).filter(|_| cfg.timing),
        solver_path: out.path,
    })
}

/// One record per trial, seeds `seed0..seed0 + trials`, in seed order.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<ExperimentRecord>> {
    if cfg.trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is required".into()));
    }
    (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| run_trial(cfg, cfg.seed0.wrapping_add(t)))
        .collect()
}

pub fn write_csv<W: Write>(records: &[ExperimentRecord], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    writer.write_record(CSV_HEADER).map_err(io)?;
    for rec in records {
        writer.write_record(rec.fields()).map_err(io)?;
    }
    writer.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchSummary {
    pub trials: usize,
    /// Trials with an exact reference cost.
    pub compared: usize,
    /// Compared trials with `ratio <= 1 + epsilon` (both-zero counts).
    pub within: usize,
}

impl BenchSummary {
    pub fn of(records: &[ExperimentRecord], epsilon: f64) -> Self {
        let compared = records.iter().filter(|r| r.ratio.is_some()).count();
        let within = records
            .iter()
            .filter_map(|r| r.ratio)
            .filter(|r| r.within(1.0 + epsilon))
            .count();
        BenchSummary {
            trials: records.len(),
            compared,
            within,
        }
    }

    pub fn fraction(&self) -> Option<f64> {
        (self.compared > 0).then(|| self.within as f64 / self.compared as f64)
    }
}

impl std::fmt::Display for BenchSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.fraction() {
            Some(frac) => write!(
                f,
                "summary: trials={} compared={} within_bound={} fraction={frac:.4}",
                self.trials, self.compared, self.within
            ),
            None => write!(
                f,
                "summary: trials={} compared=0 (exact reference beyond budget)",
                self.trials
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_cases() {
        assert_eq!(Ratio::of(0, 0), Ratio::BothZero);
        assert_eq!(Ratio::of(3, 0), Ratio::Infinite);
        assert_eq!(Ratio::of(3, 2).to_string(), "1.500000");
        assert!(Ratio::BothZero.within(1.0));
        assert!(!Ratio::Infinite.within(10.0));
    }

    #[test]
    fn noise_free_trial_is_both_zero() {
        let cfg = BenchConfig::new(1, 10, 3, 2, 0.5, 0.0, 4);
        let recs = run_bench(&cfg).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].exact_cost, Some(0));
        assert_eq!(recs[0].ratio, Some(Ratio::BothZero));
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "seed,n,l,k,epsilon,generator,exact_cost,ptas_cost,ratio,exact_ms,ptas_ms,solver_path"
        );
        assert_eq!(text.lines().nth(1).unwrap(), "4,10,3,2,0.5,planted:noise=0,0,0,both-zero,,,exact");
    }

    #[test]
    fn exact_beyond_budget_leaves_columns_empty() {
        let mut cfg = BenchConfig::new(1, 14, 2, 3, 0.5, 0.1, 0);
        cfg.exact_budget = 10;
        cfg.ptas.exact_budget = 10;
        cfg.ptas.candidate_budget = 50;
        let recs = run_bench(&cfg).unwrap();
        assert_eq!(recs[0].exact_cost, None);
        assert_eq!(recs[0].ratio, None);
        assert_eq!(BenchSummary::of(&recs, 0.5).fraction(), None);
    }
}
