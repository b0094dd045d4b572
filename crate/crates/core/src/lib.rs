//! Flag ideals of finite posets: vertex covers, Betti numbers, and structural
//! tests for unmixedness, Cohen-Macaulayness and linear resolutions.

pub mod bits;
pub mod budget;
pub mod characterize;
pub mod covers;
pub mod error;
pub mod homology;
pub mod ideals;
pub mod poset;
pub mod random;
pub mod report;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use homology::{FieldSpec, LaurentPoly};
pub use ideals::SquarefreeIdeal;
pub use poset::{BipartiteLayer, Chain, GradedPoset, Poset};
