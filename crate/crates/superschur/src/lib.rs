//! Exact symbolic engine for supersymmetric skew Schur functions.
//!
//! The engine works with marked alphabets (totally ordered letters, a subset
//! of which is primed) and supertableaux on skew shapes: fillings whose rows
//! and columns weakly increase, with no repeated unprimed letter in a column
//! and no repeated primed letter in a row.  Three weightings of the same
//! tableau family are supported:
//!
//! * the *ninth variation*: one indeterminate per (letter rank, diagonal)
//!   pair, `x[k,c]` for unprimed and `y[l,c]` for primed letters;
//! * the *sixth (factorial) variation*: `xs[k] + a[sigma(r)+c]` and
//!   `ys[l] - a[sigma(r)+c]`, obtained from the ninth by specialization;
//! * the *first variation*: plain `xs[k]` / `ys[l]`.
//!
//! On top of the tableau generating functions, the crate verifies, exactly
//! over arbitrary-precision integers:
//!
//! * outside-decomposition determinantal identities (hash-product matrices
//!   built from a cutting strip) for every cutting strip of a connected
//!   skew shape;
//! * supersymmetry and split-independence of the factorial weighting;
//! * agreement with the Molev double super-Schur convention and with the
//!   Bachmann two-statistic ordered-tableau sum;
//! * the explicit bijection between supertableaux and non-intersecting
//!   tuples of lattice paths.
//!
//! All computation is exact; there are no floating-point tolerances.

pub mod alphabets;
pub mod error;
pub mod identities;
pub mod lattice;
pub mod polyring;
pub mod reference;
pub mod shapes;
pub mod strips;
pub mod tableaux;

pub use error::{Error, Result};
