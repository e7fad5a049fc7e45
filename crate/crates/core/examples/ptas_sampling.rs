//! Runs the sampling scheme on a planted instance too large for brute force
//! and reports which branch won.
//!
//!     cargo run --release --example ptas_sampling -- [n] [seed]

use consensus_core::generate::{gen_planted, PlantedSpec};
use consensus_core::{min_dis_ag, PtasParams};

fn main() -> consensus_core::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(120);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);

    let spec = PlantedSpec { n, l: 5, k: 3, noise: 0.15, seed };
    let (inst, truth) = gen_planted(&spec)?;
    let truth_cost = inst.cost_of(&truth)?;

    let mut params = PtasParams::new(3, 0.5).with_seed(seed);
    params.candidate_budget = 200_000;
    let out = min_dis_ag(&inst, &params)?;

    println!("planted partition cost: {truth_cost}");
    println!("returned cost:          {} via {}", out.solution.cost, out.path);
    println!("dense branch cost:      {:?}", out.dense_cost);
    println!("sampled branch cost:    {:?}", out.sampled_cost);
    println!(
        "sample={} candidates={}{}",
        out.sample_size,
        out.candidates_evaluated,
        if out.candidates_truncated { " (truncated)" } else { "" }
    );
    Ok(())
}
