//! Exact distance-based graph invariants (Wiener index, Zagreb eccentricity
//! indices) and executable checks of the inequalities relating them.
//!
//! Graphs are small, simple and unweighted. Every comparison is carried out
//! in integers or reduced rationals, never floating point.

pub mod distance;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod rational;
pub mod theorems;
pub mod ud;

pub use distance::{all_pairs_distances, DistanceData};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{emit_graph6, parse_graph6};
pub use invariants::{full_report, InvariantReport};
pub use rational::Rational;
