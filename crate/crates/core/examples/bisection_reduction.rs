//! Builds the gadget instance for a graph and shows that consensus cost
//! tracks the bisection cut.

use consensus_core::graph::{unordered_bisections, DEFAULT_BISECTION_CAP};
use consensus_core::reduction::{standard_solution_of, verify_cut_cost_correspondence};
use consensus_core::{build_reduction, solve_min_bisection, Graph};

fn main() -> consensus_core::Result<()> {
    // a path 0-1-2-3 plus the chord 0-2
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 2)])?;
    let art = build_reduction(&g)?;
    println!(
        "universe={} partitions={} gadget sizes x={} y={}",
        art.universe_size(),
        art.instance.l(),
        art.sizes.x,
        art.sizes.y
    );

    for b in unordered_bisections(&g, DEFAULT_BISECTION_CAP)? {
        let sol = standard_solution_of(&art, &b)?;
        println!("side={:?} cut={} cost={}", b.side(), b.cut_size(), art.instance.cost_of(&sol.partition)?);
    }

    let best = solve_min_bisection(&g, DEFAULT_BISECTION_CAP)?;
    println!("minimum bisection cut={}", best.cut_size());

    let report = verify_cut_cost_correspondence(&art, DEFAULT_BISECTION_CAP)?;
    println!("cost = {} + 2*cut holds: {}", report.intercept, report.passed());
    Ok(())
}
