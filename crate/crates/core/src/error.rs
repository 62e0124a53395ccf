use alloc::string::String;
use core::fmt;

use crate::algebra::ValidationReport;
use crate::ring::ScalarRing;

/// Errors raised by the exact kernels and the Lie-theoretic operations built on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `GF(p)` was requested for a `p` that is not prime.
    NotPrime(u64),
    /// `GF(p)` was requested for a prime too large for single-word residues.
    ModulusTooLarge(u64),
    /// A scalar literal could not be parsed in the given ring.
    ParseScalar { ring: ScalarRing, literal: String },
    /// A ring descriptor string was not one of `Q`, `Z`, `GF(p)`.
    ParseRing(String),
    /// Two operands live over different coefficient rings.
    RingMismatch {
        expected: ScalarRing,
        found: ScalarRing,
    },
    /// Vector or matrix shapes disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// The operation needs field coefficients (Q or GF(p)).
    FieldRequired(&'static str),
    /// A structure failed its axiom check.
    Validation(ValidationReport),
    /// A carrier is not invariant under the acting algebra.
    NotInvariant(&'static str),
    /// A carrier is not closed under the bracket.
    NotClosed(&'static str),
    /// An input violates the documented precondition of an operation.
    Precondition(&'static str),
    /// A catalog name was not recognised.
    UnknownCatalog(String),
    /// A catalog size parameter lies outside `1..=12`.
    ParameterOutOfRange(usize),
    /// A witness search ran through its budget without refuting nilpotency.
    Exhausted { budget: usize },
    /// A value produced by a construction failed its own re-verification.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ModulusTooLarge(p) => write!(f, "modulus {p} exceeds 2^32"),
            Error::ParseScalar { ring, literal } => {
                write!(f, "cannot parse {literal:?} as an element of {ring}")
            }
            Error::ParseRing(s) => write!(f, "unknown ring {s:?} (expected Q, Z or GF(p))"),
            Error::RingMismatch { expected, found } => {
                write!(f, "ring mismatch: expected {expected}, found {found}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::FieldRequired(op) => write!(f, "{op} requires field coefficients"),
            Error::Validation(report) => write!(f, "validation failed: {report}"),
            Error::NotInvariant(what) => write!(f, "{what} is not invariant under the action"),
            Error::NotClosed(what) => write!(f, "{what} is not closed under the bracket"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::UnknownCatalog(name) => write!(f, "unknown catalog entry {name:?}"),
            Error::ParameterOutOfRange(n) => write!(f, "parameter {n} outside 1..=12"),
            Error::Exhausted { budget } => {
                write!(f, "witness search exhausted its budget of {budget} samples")
            }
            Error::Internal(what) => write!(f, "internal consistency failure: {what}"),
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
