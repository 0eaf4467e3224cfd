use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("malformed cycle notation {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("unknown generator letter {0:?}")]
    UnknownLetter(char),
    #[error("group action is inconsistent: {0}")]
    InconsistentAction(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("enumeration cap of {0} elements exceeded")]
    CapExceeded(usize),
    #[error("block system not preserved by generator {0}")]
    BlocksNotPreserved(usize),
    #[error("element is not in the stabiliser of H6")]
    NotInStabilizer,
    #[error("zero code has no minimum distance")]
    ZeroCode,
    #[error("empty generating set")]
    NoGenerators,
}

pub type Result<T> = std::result::Result<T, Error>;
