use alloc::vec::Vec;

/// Errors raised by constructors and numerical routines.
///
/// Constraint violations of a well-formed tensor (columns that do not sum
/// to one, entries outside `[0, 1]`) are not errors; they are reported by
/// [`TransitionTensor::validate`](crate::TransitionTensor::validate).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("order must be at least 3, got {0}")]
    OrderTooSmall(usize),
    #[error("dimension must be at least 2, got {0}")]
    DimTooSmall(usize),
    #[error("order {order} dim {dim} needs {expected} entries, got {got}")]
    EntryCount {
        order: usize,
        dim: usize,
        expected: usize,
        got: usize,
    },
    #[error("order {order} exceeds the limit {limit} for {what}")]
    OrderLimit {
        order: usize,
        limit: usize,
        what: &'static str,
    },
    #[error("{what} has {size} elements, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("parameter a = {0} is outside [0, 1]")]
    ParameterOutOfRange(f64),
    #[error("x = {0} is outside [0, 1]")]
    OutOfDomain(f64),
    #[error("vector of length {got} does not match dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vector is off the simplex (sum {sum}, min {min})")]
    OffSimplex { sum: f64, min: f64 },
    #[error("binomial C({n}, {k}) is out of range")]
    BinomialRange { n: u32, k: u32 },
    #[error("non-finite value {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },
    #[error("state {state} is out of range for dimension {dim}")]
    StateOutOfRange { state: usize, dim: usize },
    #[error("invalid option {name}: {reason}")]
    InvalidOption {
        name: &'static str,
        reason: &'static str,
    },
    #[error("index tuple {0:?} has the wrong length or an out-of-range component")]
    BadIndex(Vec<usize>),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
