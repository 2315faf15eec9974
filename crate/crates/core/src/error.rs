use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("element does not belong to its group: {0}")]
    ParentMismatch(String),
    #[error("ambient group mismatch: {0}")]
    AmbientMismatch(String),
    #[error("cap exceeded: {what} has size {size}, cap is {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("not a Lagrangian subgroup: {0}")]
    NotLagrangian(String),
    #[error("correspondence is not invertible: {0}")]
    NotInvertible(String),
    #[error("cocycle condition violated: {0}")]
    CocycleViolation(String),
    #[error("element is not central: {0}")]
    NonCentralElement(String),
    #[error("class is not invariant: {0}")]
    NotInvariant(String),
    #[error("only odd-order groups are supported: {0}")]
    UnsupportedOddOnly(String),
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidData(_) => "invalid_data",
            Error::ParentMismatch(_) => "parent_mismatch",
            Error::AmbientMismatch(_) => "ambient_mismatch",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::BudgetExceeded(_) => "budget_exceeded",
            Error::NotLagrangian(_) => "not_lagrangian",
            Error::NotInvertible(_) => "not_invertible",
            Error::CocycleViolation(_) => "cocycle_violation",
            Error::NonCentralElement(_) => "non_central_element",
            Error::NotInvariant(_) => "not_invariant",
            Error::UnsupportedOddOnly(_) => "unsupported_odd_only",
            Error::ObjectMismatch(_) => "object_mismatch",
            Error::Internal(_) => "internal",
        }
    }

    /// True when the input was well formed but the requested object does not exist.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            Error::NotInvertible(_) | Error::NotInvariant(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
