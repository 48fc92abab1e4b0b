//! A toolkit for the Mostar index and related irregularity measures.
//!
//! The crate has three layers:
//!
//! * an exact, BFS-backed oracle for the Mostar index, Albertson
//!   irregularity, and total irregularity ([`invariants`]), over immutable
//!   simple graphs ([`graph`]), family generators ([`families`]), and the
//!   product constructions whose indices have published closed forms
//!   ([`operators`]);
//! * evaluators for every registered closed form and upper bound
//!   ([`formulas`]), each tagged as a proven equality, a proven bound, or a
//!   worked example taken at face value;
//! * a verification harness ([`verify`]) that sweeps parameter grids and a
//!   seeded random corpus, compares every registered claim against the
//!   oracle, and emits a machine-readable claims ledger. Published values
//!   do not all survive this comparison; the ledger reports each mismatch
//!   with both numbers instead of inheriting it.

pub mod edgelist;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod invariants;
pub mod operators;
pub mod verify;

pub use graph::{DistanceMatrix, Graph, GraphError, Vertex};
