//! Exact verification workbench for canonical S-graphs.
//!
//! For a linear order `s_1 ≺ ... ≺ s_n` on the coefficient indices, binary
//! fusion builds a graph `G(c)` with `2^n` vertices, each carrying a linear
//! function in the coordinates `x_k = r^k - r^{k+1}`. The set `Z(c)` of those
//! functions is compared against the vertices of the polytope `K(c)` cut out
//! by a box and a family of chain inequalities.
//!
//! ```
//! use sgraph::{build_sgraph, numeric_zset, verify_theorem, CoeffOrder, NumericCoeffs};
//!
//! let order: CoeffOrder = "1,3,2".parse().unwrap();
//! let c: NumericCoeffs = "1,4,2".parse().unwrap();
//! let g = build_sgraph(&order);
//! assert_eq!(numeric_zset(&g, &c).unwrap().len(), 8);
//! assert!(verify_theorem(&order, &c).unwrap().passed);
//! ```
//!
//! Everything is exact: coefficients and coordinates are arbitrary-precision
//! rationals, and symbolic results are forms in the indeterminates `c_i`.

pub mod error;
pub mod exactmath;
pub mod fusion;
pub mod harness;
pub mod lp;
pub mod orders;
pub mod polytope;
pub mod tableau;

pub use error::{Error, Result};
pub use exactmath::{FunctionVector, LinearForm, Rational};
pub use fusion::{build_sgraph, numeric_zset, zset, EvaluationPoint, SGraph};
pub use orders::{sample_coeffs, CoeffOrder, NumericCoeffs, Profile};
pub use polytope::{build_system, enumerate_vertices, verify_theorem, InequalitySystem, Variant};
