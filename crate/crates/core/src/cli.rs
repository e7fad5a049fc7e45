//! Command-line surface shared by the `consensus` binary and the tests.
//!
//! Exit codes: 0 on success, 1 on input errors (including usage errors and a
//! failed reduction check), 2 when an enumeration budget or cap is exceeded.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, write_csv, BenchConfig, BenchSummary};
use crate::enumerate::budget_from_env;
use crate::error::{Error, Result};
use crate::exact::solve_exact_with_budget;
use crate::generate::{gen_gnp, gen_planted, gen_random_partitions, PlantedSpec};
use crate::graph::DEFAULT_BISECTION_CAP;
use crate::io;
use crate::ptas::{min_dis_ag, BetaRule, DenseSolver, LocalSearch, PtasParams};
use crate::reduction::{build_reduction, verify_cut_cost_correspondence};

#[derive(Debug, Parser)]
#[command(name = "consensus", about = "Consensus clustering with a bounded number of clusters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal solution by exhaustive enumeration.
    SolveExact {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Sampling-based approximation scheme.
    SolvePtas(PtasArgs),
    /// Multi-start local search alone.
    SolveGreedy {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = crate::ptas::dense::DEFAULT_RESTARTS)]
        restarts: usize,
    },
    /// Cost of a candidate partition (one line of labels).
    Eval {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        candidate: PathBuf,
    },
    GenRandom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        max_blocks: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    GenPlanted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Also write the planted partition as a candidate file.
        #[arg(long)]
        truth: Option<PathBuf>,
    },
    /// Build the bisection gadget instance from a graph file or a random graph.
    GenReduction {
        #[arg(long, conflicts_with_all = ["gnp_n", "p"])]
        graph: Option<PathBuf>,
        #[arg(long, requires = "p")]
        gnp_n: Option<usize>,
        #[arg(long, requires = "gnp_n")]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the cut/cost correspondence of a generated reduction instance.
    VerifyReduction {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BISECTION_CAP)]
        cap: usize,
    },
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BetaRuleArg {
    Standard,
    PerPartition,
}

#[derive(Debug, Args)]
pub struct PtasArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[command(flatten)]
    pub tuning: PtasTuning,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct PtasTuning {
    /// Number of sample draws, overriding the derived size.
    #[arg(long)]
    pub sample_size: Option<usize>,
    #[arg(long, default_value_t = crate::ptas::DEFAULT_CANDIDATE_BUDGET)]
    pub candidate_budget: u64,
    /// Largest universe solved exhaustively inside the scheme.
    #[arg(long)]
    pub exact_cap: Option<usize>,
    #[arg(long, default_value_t = crate::ptas::dense::DEFAULT_RESTARTS)]
    pub restarts: usize,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long, value_enum, default_value_t = BetaRuleArg::Standard)]
    pub beta_rule: BetaRuleArg,
}

impl PtasTuning {
    fn params(&self, k: usize, epsilon: f64, seed: u64, budget: u64) -> PtasParams {
        let mut params = PtasParams::new(k, epsilon).with_seed(seed);
        params.sample_override = self.sample_size;
        params.candidate_budget = self.candidate_budget;
        params.exact_cap = self.exact_cap;
        params.exact_budget = budget;
        params.restarts = self.restarts;
        params.beta = self.beta;
        params.beta_rule = match self.beta_rule {
            BetaRuleArg::Standard => BetaRule::Standard,
            BetaRuleArg::PerPartition => BetaRule::PerPartition,
        };
        params
    }
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub trials: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub l: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0.1)]
    pub noise: f64,
    #[arg(long, default_value_t = 0)]
    pub seed0: u64,
    #[arg(long)]
    pub out: PathBuf,
    /// Fill the timing columns (makes the CSV run-dependent).
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub tuning: PtasTuning,
}

/// Parses `args` (including the program name) and runs the command, writing
/// its report to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = write!(out, "{}", err.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(out, "error: {err}");
            exit_code(&err)
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } | Error::BisectionCapExceeded { .. } => 2,
        _ => 1,
    }
}

fn report_solution(out: &mut dyn Write, cost: u64, labels: &crate::partition::Partition) -> Result<()> {
    writeln!(out, "cost={cost}")?;
    writeln!(out, "{labels}")?;
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let budget = budget_from_env();
    match cmd {
        Command::SolveExact { instance, k } => {
            let inst = io::parse_instance_file(instance)?;
            let sol = solve_exact_with_budget(&inst, k, budget)?;
            report_solution(out, sol.cost, &sol.partition)?;
        }
        Command::SolvePtas(args) => {
            let inst = io::parse_instance_file(&args.instance)?;
            let params = args.tuning.params(args.k, args.epsilon, args.seed, budget);
            let res = min_dis_ag(&inst, &params)?;
            report_solution(out, res.solution.cost, &res.solution.partition)?;
            writeln!(
                out,
                "path={} sample={} candidates={}{}",
                res.path,
                res.sample_size,
                res.candidates_evaluated,
                if res.candidates_truncated { " truncated" } else { "" }
            )?;
        }
        Command::SolveGreedy {
            instance,
            k,
            seed,
            restarts,
        } => {
            if k == 0 {
                return Err(Error::InvalidParameter("k must be at least 1".into()));
            }
            let inst = io::parse_instance_file(instance)?;
            let part = LocalSearch { restarts }.solve(&inst, k, seed)?;
            report_solution(out, inst.cost_of(&part)?, &part)?;
        }
        Command::Eval { instance, candidate } => {
            let inst = io::parse_instance_file(instance)?;
            let cand = io::parse_candidate_str(&std::fs::read_to_string(candidate)?)?;
            writeln!(out, "cost={}", inst.cost_of(&cand)?)?;
        }
        Command::GenRandom {
            n,
            l,
            max_blocks,
            seed,
            out: path,
        } => {
            let inst = gen_random_partitions(n, l, max_blocks, seed)?;
            io::write_instance_file(&inst, &path)?;
            writeln!(out, "wrote {}", path.display())?;
        }
        Command::GenPlanted {
            n,
            l,
            k,
            noise,
            seed,
            out: path,
            truth,
        } => {
            let (inst, planted) = gen_planted(&PlantedSpec { n, l, k, noise, seed })?;
            io::write_instance_file(&inst, &path)?;
            if let Some(truth) = truth {
                std::fs::write(truth, format!("{planted}\n"))?;
            }
            writeln!(out, "wrote {}", path.display())?;
        }
        Command::GenReduction {
            graph,
            gnp_n,
            p,
            seed,
            out: path,
        } => {
            let g = match (graph, gnp_n, p) {
                (Some(file), _, _) => io::parse_graph_str(&std::fs::read_to_string(file)?)?,
                (None, Some(n), Some(p)) => gen_gnp(n, p, seed)?,
                _ => {
                    return Err(Error::InvalidParameter(
                        "either --graph or --gnp-n with --p is required".into(),
                    ))
                }
            };
            let art = build_reduction(&g)?;
            io::write_artifact(&art, &path)?;
            writeln!(
                out,
                "wrote {} ({} elements, {} edge pairs)",
                path.display(),
                art.universe_size(),
                art.edge_pairs.len()
            )?;
        }
        Command::VerifyReduction { instance, cap } => {
            let art = io::read_artifact(instance)?;
            let rep = verify_cut_cost_correspondence(&art, cap)?;
            for row in &rep.rows {
                let side: String = row
                    .bisection
                    .side()
                    .iter()
                    .map(|&s| if s { '1' } else { '0' })
                    .collect();
                writeln!(
                    out,
                    "bisection={side} cut={} cost={} co_clustered_pairs={}",
                    row.bisection.cut_size(),
                    row.cost,
                    row.co_clustered
                )?;
            }
            let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
            writeln!(out, "intercept={}", rep.intercept)?;
            writeln!(out, "slope-check: {}", verdict(rep.slope_ok))?;
            writeln!(out, "pair-check: {}", verdict(rep.pairs_ok))?;
            writeln!(out, "argmin-check: {}", verdict(rep.argmin_ok))?;
            if !rep.passed() {
                return Ok(1);
            }
        }
        Command::Bench(args) => {
            let mut cfg = BenchConfig::new(
                args.trials,
                args.n,
                args.l,
                args.k,
                args.epsilon,
                args.noise,
                args.seed0,
            );
            cfg.exact_budget = budget;
            cfg.ptas = args.tuning.params(args.k, args.epsilon, args.seed0, budget);
            cfg.timing = args.timing;
            let records = run_bench(&cfg)?;
            let file = File::create(&args.out)?;
            write_csv(&records, BufWriter::new(file))?;
            writeln!(out, "{}", BenchSummary::of(&records, args.epsilon))?;
        }
    }
    Ok(0)
}
