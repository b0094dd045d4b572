use serde::{Deserialize, Serialize};

/// Explicit limits for the exponential searches. Exhausting one yields
/// [`Error::BudgetExceeded`](crate::Error::BudgetExceeded), never a partial answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Largest poset (or variable set) for minimal-transversal enumeration.
    pub cover_enum: usize,
    /// Largest variable set for full Betti tables.
    pub betti_vars: usize,
    /// Search nodes for matching and labeling enumeration.
    pub matching_nodes: usize,
    /// Largest poset handed to the isomorphism search.
    pub iso_elements: usize,
    /// Saturated-chain pairs examined by the recombination conditions.
    pub chain_pairs: usize,
    /// Search nodes for the linear-quotients ordering search.
    pub quotient_nodes: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            cover_enum: 24,
            betti_vars: 18,
            matching_nodes: 1_000_000,
            iso_elements: 24,
            chain_pairs: 2_000_000,
            quotient_nodes: 1_000_000,
        }
    }
}
