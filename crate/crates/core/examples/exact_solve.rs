//! Exhaustive consensus on a small instance, for every block limit.
//!
//!     cargo run --example exact_solve

use consensus_core::enumerate::count_partitions;
use consensus_core::{solve_exact, Instance, Partition};

fn main() -> consensus_core::Result<()> {
    let inputs = vec![
        Partition::canonicalize(&[0, 0, 1, 1, 2, 2])?,
        Partition::canonicalize(&[0, 0, 0, 1, 1, 1])?,
        Partition::canonicalize(&[0, 1, 1, 2, 2, 0])?,
    ];
    let inst = Instance::new(inputs)?;
    println!("n={} l={} upper bound on cost={}", inst.n(), inst.l(), inst.max_cost());

    for k in 1..=inst.n() {
        let sol = solve_exact(&inst, k)?;
        println!(
            "k={k} candidates={:>3} cost={:>2} partition=[{}]",
            count_partitions(inst.n(), k),
            sol.cost,
            sol.partition
        );
    }
    Ok(())
}
