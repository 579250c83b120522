//! Error type shared by every module of the engine.

use crate::polyring::Variable;
use thiserror::Error;

/// Everything that can go wrong while building shapes, alphabets,
/// decompositions, lattices, or while verifying an identity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `mu` is not contained in `lambda`.
    #[error("inner partition not contained in outer: {0}")]
    ContainmentViolation(String),
    /// An operation (content range, cutting strips, ...) needs a nonempty shape.
    #[error("operation undefined on the empty shape")]
    EmptyShape,
    /// A letter outside `1..=size` was used with an alphabet.
    #[error("letter {letter} outside alphabet 1..={size}")]
    OutOfRangeLetter { letter: usize, size: usize },
    /// Determinant of a non-square matrix.
    #[error("matrix is not square")]
    NonSquare,
    /// Rational evaluation hit a variable without an assigned value.
    #[error("no value assigned to variable {0}")]
    UnassignedVariable(Variable),
    /// A specialization expects only `x[k,c]` / `y[l,c]` variables.
    #[error("polynomial contains foreign-family variable {0}")]
    ForeignFamily(Variable),
    /// The cyclic shift map needs adjacent letters of opposite primedness.
    #[error("letters {r} and {next} have the same primedness", next = r + 1)]
    SamePrimedness { r: usize },
    /// A brute-force enumeration would exceed the configured guard.
    #[error("enumeration too large: {estimate} raw fillings exceeds limit {limit}")]
    TooLarge { estimate: u128, limit: u128 },
    /// Strip decompositions are only defined on edgewise connected shapes.
    #[error("shape is not edgewise connected")]
    DisconnectedShape,
    /// A cutting strip's content range must equal the shape's.
    #[error("cutting strip range {phi:?} does not match shape content range {shape:?}")]
    ContentMismatch { phi: (i64, i64), shape: (i64, i64) },
    /// Shift parameters are only defined for proper hash products.
    #[error("hash product is not a proper strip")]
    NotProper,
    /// A lattice path does not follow the edge table.
    #[error("malformed lattice path: {0}")]
    MalformedPath(String),
    /// Parts must weakly decrease and be positive.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    /// A cutting strip description was self-inconsistent.
    #[error("invalid cutting strip: {0}")]
    InvalidCuttingStrip(String),
}

pub type Result<T> = std::result::Result<T, Error>;
