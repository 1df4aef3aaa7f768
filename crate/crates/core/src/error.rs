use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i64, strands: usize },
    #[error("strand count mismatch ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("at least {need} strands required, got {got}")]
    TooFewStrands { need: usize, got: usize },
    #[error("permutation degree mismatch ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("step budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("generated group has more than {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("B_{{{n_minus_k},{k}}} modulo its centre is torsion-free")]
    TorsionFree { n_minus_k: usize, k: usize },
}

impl Error {
    /// Short stable identifier used in machine-readable error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::GeneratorOutOfRange { .. } => "generator-out-of-range",
            Error::StrandMismatch(..) => "strand-mismatch",
            Error::TooFewStrands { .. } => "too-few-strands",
            Error::DegreeMismatch(..) => "degree-mismatch",
            Error::Parse(_) => "parse",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::GroupTooLarge { .. } => "group-too-large",
            Error::Infeasible(_) => "infeasible",
            Error::TorsionFree { .. } => "torsion-free",
        }
    }
}
