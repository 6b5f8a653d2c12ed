//! Exact-arithmetic toolkit for syzygies, minimal free resolutions, and
//! slope-stability checks of logarithmic tangent sheaves of determinantal
//! hypersurfaces, together with the combinatorial and cohomological side
//! computations the checks rely on.
//!
//! Everything is exact: rationals of arbitrary precision or a prime field
//! chosen at runtime.  All randomized constructions are seeded and
//! reproducible.

pub mod detsuite;
pub mod error;
pub mod field;
pub mod geom;
pub mod groebner;
pub mod hypersurface;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod quiver;

pub use error::CoreError;
pub use field::{FieldSpec, K, DEFAULT_PRIME};
pub use linalg::ExactMatrix;
pub use poly::{graded_basis, parse_polynomial, Monomial, MonomialOrder, Polynomial};
