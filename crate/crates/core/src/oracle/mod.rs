//! Brute-force lower-bound search and instance generators used to certify
//! the solvers.

mod generators;
mod search;

pub use generators::{gen_lower_bound_fixture, gen_random_convex, gen_random_simple, FixtureKind};
pub use search::{oracle_solve, OracleConfig};
