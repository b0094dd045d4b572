//! Structural tests for unmixedness, Cohen-Macaulayness and linear
//! resolutions, each returning a certificate or a witness.

mod cm;
mod decomposition;
mod ferrers;
mod matching;
mod unmixed;
mod verdict;

pub use cm::{check_cm_structural, herzog_hibi_bipartite_cm, is_bi_cm, BiCmCertificate, HerzogHibiLabeling};
pub use decomposition::{ChainDecomposition, ChainDecompositionIds};
pub use ferrers::{has_2k2, has_linear_resolution_structural, is_ferrers, FerrersOrdering};
pub use unmixed::{check_unmixed_structural, check_weak_conditions};
pub use verdict::{Edge, Verdict, Witness};
