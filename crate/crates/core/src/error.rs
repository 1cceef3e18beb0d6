use thiserror::Error;

/// Errors raised by group, group-ring, transform and construction routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("element has {found} coordinates, group has {expected} factors")]
    ElementMismatch { expected: usize, found: usize },
    #[error("coordinate {index} = {value} is out of range for a factor of order {order}")]
    CoordinateOutOfRange { index: usize, value: u32, order: u32 },
    #[error("operands live in different groups: {left:?} vs {right:?}")]
    GroupMismatch { left: Vec<u32>, right: Vec<u32> },
    #[error("expected a subset (0/1 coefficients), found coefficient {0}")]
    NotASubset(String),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("exact character sums need an exponent dividing 4, group exponent is {0}")]
    UnsupportedExponent(u32),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("partition blocks overlap at element index {0}")]
    Overlap(usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("numerical residual {residual:e} exceeds {limit:e}")]
    Numerical { residual: f64, limit: f64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
