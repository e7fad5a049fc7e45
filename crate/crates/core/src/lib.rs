//! Solvers for consensus clustering with at most `k` output clusters.
//!
//! Given `l` partitions of a universe of `n` elements, find a partition with
//! at most `k` blocks minimizing the total number of element pairs on which
//! it disagrees with the inputs.
//!
//! * [`partition`] and [`instance`]: partitions in canonical form, the
//!   symmetric-difference distance and two independent cost evaluations.
//! * [`enumerate`] and [`exact`]: restricted-growth enumeration and the
//!   exhaustive optimum.
//! * [`ptas`]: the sampling-based approximation scheme and its agreement
//!   statistics.
//! * [`graph`] and [`reduction`]: minimum bisection and the gadget
//!   construction mapping it to two-cluster consensus with three inputs.
//! * [`generate`], [`io`], [`bench`], [`cli`]: seeded generators, text
//!   formats, the benchmark harness and the command-line front end.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod bench;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod io;
pub mod partition;
pub mod ptas;
pub mod reduction;
pub mod rng;

pub use error::{Error, Result};
pub use exact::{solve_exact, solve_exact_with_budget};
pub use graph::{solve_min_bisection, Bisection, Graph};
pub use instance::{Instance, Solution};
pub use partition::{pair_distance, Partition};
pub use ptas::{min_dis_ag, PtasOutcome, PtasParams, SolverPath};
pub use reduction::{build_reduction, ReductionArtifact};
