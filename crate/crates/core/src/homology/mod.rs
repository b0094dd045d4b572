//! Simplicial complexes, reduced cohomology over a field, and multigraded
//! Betti numbers of squarefree ideals.

mod betti;
mod complex;
mod fast;
mod field;
mod poly;

pub use betti::{
    betti_multidegree, betti_polynomial, cm_oracle_report, component_betti_assembly, fast_betti_table,
    full_betti_table, has_linear_resolution_oracle, is_cm_oracle, BettiEntry, BettiTable, CmOracleReport,
};
pub use complex::{
    independence_complex, join, order_complex, reduced_cohomology_poly, restrict, stanley_reisner_complex, suspension,
    y_complex, SimplicialComplex,
};
pub use fast::{betti_polynomial_fast, in_first_strand, x_complexes};
pub use field::FieldSpec;
pub use poly::LaurentPoly;
