//! Generalized Sidon sets over the integers and cyclic groups.
//!
//! A set S is B2[g] when every value has at most g ordered representations
//! as a sum of two elements of S (counting s+s once and s+s' twice). This
//! crate provides:
//!
//! - exact verification of that bound for integer and cyclic sets ([`sets`]),
//! - algebraic constructions from finite fields that achieve it with
//!   near-extremal density ([`construct`], [`field`]),
//! - exhaustive branch-and-bound search for extremal sets at desk scale,
//!   with certificates ([`search`]),
//! - closed-form upper bounds and exact-rational density lower bounds
//!   ([`bounds`]),
//! - bundled reference tables of known extremal values and the machinery to
//!   reproduce them ([`tables`]).

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod error;
pub mod field;
pub mod search;
pub mod sets;
pub mod tables;

pub use error::{Error, Result};
