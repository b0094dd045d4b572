use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relations contain a cycle through `{0}`")]
    CycleDetected(String),
    #[error("cover `{0} < {1}` is implied by a longer path")]
    RedundantCover(String, String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("duplicate cover `{0} < {1}`")]
    DuplicateCover(String, String),
    #[error("rank selection is empty")]
    EmptySelection,
    #[error("rank {rank} is outside 1..={max}")]
    RankOutOfRange { rank: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} budget exceeded (limit {limit})")]
    BudgetExceeded { what: &'static str, limit: usize },
    #[error("at most {limit} elements are supported, got {got}")]
    CapacityExceeded { limit: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,
    #[error("operation would produce the unit ideal")]
    UnitIdeal,
    #[error("not a V poset: {0}")]
    NotAVPoset(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("vertex `{0}` occurs in both complexes")]
    VertexClash(String),
    #[error("variable `{0}` occurs in both ideals")]
    VariableClash(String),
    #[error("poset is not graded")]
    NotGraded,
    #[error("no decomposition into disjoint maximal chains along perfect layer matchings")]
    NoChainDecomposition,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn budget(what: &'static str, limit: usize) -> Self {
        Error::BudgetExceeded { what, limit }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::CapacityExceeded { .. })
    }
}
