//! Seeded benchmark of the scheme against brute force, written as CSV to stdout.
//!
//!     cargo run --release --example planted_benchmark > runs.csv

use consensus_core::bench::{run_bench, write_csv, BenchConfig, BenchSummary};

fn main() -> consensus_core::Result<()> {
    let mut cfg = BenchConfig::new(12, 16, 3, 2, 0.5, 0.1, 0);
    cfg.ptas.exact_cap = Some(12);
    let records = run_bench(&cfg)?;
    write_csv(&records, std::io::stdout().lock())?;
    eprintln!("{}", BenchSummary::of(&records, cfg.epsilon));
    Ok(())
}
