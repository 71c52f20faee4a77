use thiserror::Error;

/// Errors raised by ring constructions, ideal operations and predicate checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring order {order} exceeds the cap of {cap} elements")]
    CapExceeded { order: usize, cap: usize },
    #[error("invalid grade group: {0}")]
    InvalidGradeGroup(String),
    #[error("inconsistent grading: {0}")]
    InvalidGrading(String),
    #[error("invalid ring structure: {0}")]
    InvalidStructure(String),
    #[error("invalid modulus polynomial: {0}")]
    InvalidModulus(String),
    #[error("grade groups differ")]
    MismatchedGradeGroups,
    #[error("operands belong to different rings")]
    MismatchedRings,
    #[error("element {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("ideal is not graded")]
    NotGraded,
    #[error("ideal not proper")]
    NotProper,
    #[error("ideal meets the multiplicative set")]
    NotDisjoint,
    #[error("multiplicative closure reaches zero")]
    ZeroInMultSet,
    #[error("multiplicative set is not contained in the identity component")]
    SetNotInIdentityComponent,
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
