//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Errors reported by the exact-arithmetic kernels and graph operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation requiring a square matrix was given a rectangular one.
    NonSquare { rows: usize, cols: usize },
    /// An operation requiring a non-singular matrix was given a singular one.
    Singular,
    /// Matrix or vector dimensions do not line up.
    DimensionMismatch { expected: usize, found: usize },
    /// A polynomial operation received a zero polynomial where one is not allowed.
    ZeroPolynomial,
    /// A polynomial operation requires a monic input.
    NonMonic,
    /// The p-adic valuation of zero is undefined.
    ZeroValuation,
    /// Two `F_p` values with different moduli were mixed.
    ModulusMismatch { left: u64, right: u64 },
    /// The modulus is not a prime in the supported range (2..=2^61).
    UnsupportedModulus(u64),
    /// A vertex index was out of range for the graph.
    VertexOutOfRange { vertex: usize, order: usize },
    /// Input text could not be parsed as a graph.
    Parse(String),
    /// A configured size cap was exceeded.
    CapExceeded { limit: usize, requested: usize },
    /// The subspace is not invariant under the given matrix.
    NotInvariant,
    /// The graph is not controllable (its walk matrix is singular).
    NotControllable,
    /// The prime does not divide the quantity it is required to divide.
    PrimeDoesNotDivide(u64),
    /// The two graphs do not have the same number of vertices.
    OrderMismatch { left: usize, right: usize },
    /// A precondition of a construction failed; the message names the condition.
    Precondition(String),
    /// An identity that is guaranteed by theory failed to hold: this is a bug
    /// in the library (or a falsification event), never a user error.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquare { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
            Error::Singular => write!(f, "matrix is singular"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::NonMonic => write!(f, "polynomial must be monic"),
            Error::ZeroValuation => write!(f, "p-adic valuation of 0 is undefined"),
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::UnsupportedModulus(p) => {
                write!(f, "unsupported modulus {p}: must be a prime <= 2^61")
            }
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for graph of order {order}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::CapExceeded { limit, requested } => {
                write!(f, "size cap exceeded: {requested} > {limit}")
            }
            Error::NotInvariant => write!(f, "subspace is not invariant under the matrix"),
            Error::NotControllable => write!(f, "graph is not controllable (det W = 0)"),
            Error::PrimeDoesNotDivide(p) => {
                write!(f, "prime {p} does not divide the required quantity")
            }
            Error::OrderMismatch { left, right } => {
                write!(f, "graphs have different orders: {left} vs {right}")
            }
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::Internal(msg) => write!(f, "internal consistency violation: {msg}"),
        }
    }
}

#[cfg(any(test, feature = "std"))]
impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
