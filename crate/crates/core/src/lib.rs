//! Exact computational engine for annular quantum `gl_n` web calculus
//! relative to a Levi subalgebra.
//!
//! Webs evaluate to matrices over the fraction field of
//! `Z[v^{+-1}, u_1^{+-1}, ..., u_d^{+-1}]`. The crate provides the scalar
//! arithmetic, the labeled-basis sparse linear algebra, matrices of all web
//! and coil generators, a text DSL with evaluator, Ariki-Koike images, and
//! named verification suites for the defining and derived relations.

pub mod error;
pub mod scalar;

pub mod combinatorics;
pub mod linalg;
pub mod rep;
pub mod web;
pub mod ak;
pub mod suites;

pub use error::{Error, Result};
pub use scalar::{FieldElem, LaurentPoly};

/// Exact matrices between labeled basis spaces.
pub type LinMap = linalg::SparseMat<scalar::FieldElem>;
/// Prime-field matrices used for probabilistic rank.
pub type FpMat = linalg::SparseMat<scalar::Fp>;
