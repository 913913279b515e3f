use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ungraded alphabet: generator `{0}` has no group label")]
    UngradedAlphabet(String),
    #[error("degenerate relation #{index}: {reason}")]
    DegenerateRelation { index: usize, reason: String },
    #[error("degree {degree} is out of certified range (bound {bound})")]
    OutOfCertifiedRange { degree: usize, bound: usize },
    #[error("presentation `{0}` is not homogeneous; use the filtered variant")]
    Inhomogeneous(String),
    #[error("oracle refused degree {degree}: {monomials} monomials exceed cap {cap}")]
    OracleCap { degree: usize, monomials: usize, cap: usize },
    #[error("module generator is not homogeneous: {0}")]
    NonHomogeneousGenerator(String),
    #[error("rank-deficient spanning set: expected rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("subalgebra is not of the classified form: {0}")]
    NotClassified(String),
    #[error("subspace is not closed under the bracket")]
    NotClosed,
    #[error("functional is not admissible: {0}")]
    Inadmissible(String),
    #[error("admissibility routes disagree: closed form says {closed_form}, properness says {properness}")]
    RoutesDisagree { closed_form: bool, properness: bool },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("invalid line: {0}")]
    InvalidLine(String),
}
