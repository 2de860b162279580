//! Cyclicity of polynomials in Dirichlet-type spaces on the bidisk.
//!
//! The crate measures how well `1` is approximated by polynomial multiples of
//! a given `f` in the weighted sequence spaces `D_alpha` (isotropic weights
//! `(k+l+1)^alpha`), the anisotropic `(k+1)^alpha (l+1)^alpha` variant and the
//! one-variable `D_alpha`, and classifies the zero set of `f` on the torus.

pub mod exec;
pub(crate) mod linalg;
pub mod poly;

pub use num_complex::Complex64;
pub use poly::{ComplexScalar, Poly1, Poly2, PolyError, Variable};
pub mod approximant;
pub mod classify;
pub mod operators;
pub mod prooflab;
pub mod spaces;
pub mod zeroset;
