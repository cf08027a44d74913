//! Zero forcing toolkit.
//!
//! Simulates the forcing process on simple undirected graphs, computes the
//! zero forcing number exactly for small graphs, builds zero forcing sets with
//! several constructive and randomized procedures, and evaluates upper and
//! lower bounds on the zero forcing number in exact rational arithmetic.

pub mod bounds;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod exceptional;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod graph6;
pub mod heuristics;
pub mod io;
pub mod random;
pub mod vertex_set;

pub use bounds::Rational;
pub use error::{Error, Result};
pub use exact::{brute_force_oracle, zero_forcing_number, ExactOutcome, ExactResult};
pub use exceptional::{identify_exceptional, ExceptionalGraph};
pub use families::NamedFamily;
pub use forcing::{closure, is_zero_forcing_set, permutation_to_set, verify_trace, ForcingStep, ForcingTrace};
pub use graph::Graph;
pub use graph6::{parse_graph6, to_graph6};
pub use heuristics::{expected_size, random_zfs, HeuristicResult, Method};
pub use vertex_set::VertexSet;
