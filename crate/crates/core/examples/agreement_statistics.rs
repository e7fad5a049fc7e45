//! Per-element agreement profiles, sample goodness and the low-agreement set.

use consensus_core::generate::{gen_planted, PlantedSpec};
use consensus_core::ptas::{
    draw_sample, greedy_extend, identify_bad_elements, is_beta_good, pval_levels, val_levels,
    BlockAssignment,
};

fn main() -> consensus_core::Result<()> {
    let (inst, truth) = gen_planted(&PlantedSpec { n: 80, l: 4, k: 2, noise: 0.01, seed: 11 })?;
    let full = BlockAssignment::full(&truth);

    let u = 1;
    let here = val_levels(&inst, &full, u)?;
    println!("element {u}: val={:.4} levels={:?}", here.val(), here.level_counts);
    for t in 0..=full.slots() {
        let moved = pval_levels(&inst, &full, u, t)?;
        println!("  moved to block {t}: val={:.4} levels={:?}", moved.val(), moved.level_counts);
    }

    let bad = identify_bad_elements(&inst, &truth, 2)?;
    println!("{} of {} elements fall below the agreement threshold", bad.len(), inst.n());

    let sample = draw_sample(inst.n(), 30, 5);
    let restricted = BlockAssignment::restrict(&truth, &sample)?;
    let rep = is_beta_good(&inst, &truth, &restricted, 0.25)?;
    println!(
        "sample of {} is 0.25-good: {} (max deviation {:.3})",
        sample.len(),
        rep.good,
        rep.max_deviation
    );

    let extended = greedy_extend(&inst, &restricted, 2)?.to_partition(inst.n())?;
    println!(
        "greedy extension cost {} vs planted {}",
        inst.cost_of(&extended)?,
        inst.cost_of(&truth)?
    );
    Ok(())
}
