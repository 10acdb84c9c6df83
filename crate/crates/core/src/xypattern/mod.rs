//! The product `XY` of two generic matrices: its entries, the selection
//! pattern, the certification order, and the theorem-level certificate.

mod counterexample;
mod pattern;
mod product;
mod theorem;

pub use counterexample::{counterexample_n2, CounterexampleReport, WitnessCheck};
pub use pattern::{
    build_f, build_ftilde, expected_effective_lead, is_selected, k_value, pattern_rows,
    pattern_size, PatternColumn, PatternError, PatternItem, PatternSpec,
};
pub use product::{build_ring, matrix_ring, paper_order, GenericProduct, OrderChoice};
pub use theorem::certify_theorem;
