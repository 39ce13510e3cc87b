//! Closed-form bounds, non-colorability tests and per-graph reports.

mod dclass;
mod factor;
mod formulas;
mod invariants;
mod noncolorable;
mod report;

pub use dclass::{d_profile, hamming_d_vector, torus_d_vector, verify_d_membership};
pub use factor::Factorization;
pub use formulas::*;
pub use invariants::Invariants;
pub use noncolorable::{
    eulerian_odd, eulerian_product, overfull, test_chromatic_index, test_eulerian_odd,
    test_eulerian_product, ChromaticTest, Obstruction, DEFAULT_EDGE_BUDGET,
};
pub use report::{
    report, report_graph, report_with, BoundEntry, BoundReport, Direction, ReportOptions,
};
