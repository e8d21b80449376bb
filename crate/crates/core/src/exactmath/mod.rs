//! Exact rational arithmetic and degree-one forms in the coefficient
//! indeterminates `c_1, ..., c_n`.
//!
//! Nothing in the crate uses floating point. Every value that reaches a
//! comparison is a [`Rational`] backed by arbitrary-precision integers.

mod form;
mod function;
mod rational;

pub use form::LinearForm;
pub use function::FunctionVector;
pub use rational::{format_rational, int, parse_rational, rat, Rational};

pub(crate) use rational::{serde_rational, serde_rational_vec, serde_rational_vecs};
