//! Exact symbolic kernel for twisted `(τ, σ)`-derivations over `Q(p, q)[t, t⁻¹]`,
//! the Hom-Lie brackets they carry, and the `(p, q)`-deformed Witt, `sl(2)` and
//! Virasoro algebras built from them.
//!
//! Everything is exact: scalars live in the rational function field `Q(p, q)`
//! and every identity is checked by symbolic equality.

pub mod bracket;
pub mod derivation;
pub mod error;
pub mod extension;
pub mod families;
pub mod laurent;
pub mod opcat;
pub mod report;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};
pub use laurent::{Endo, LaurentPoly};
pub use scalar::{ParamPoly, Scalar};
