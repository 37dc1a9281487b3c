//! Exact arithmetic: rationals, polynomials in tagged variables, reduced
//! rational functions in `q, t`, and exact linear algebra.

mod matrix;
mod mpoly;
pub mod packed;
mod rat;
mod ratfunc;
pub mod sparse;
pub(crate) mod zpoly;

pub use matrix::{
    bareiss, determinant, echelon, kernel_basis, rank, solve_linear, BareissEchelon, BareissRing, Field, FractionFree,
    Matrix, Solution,
};
pub use mpoly::{MPoly, Monomial, Var, VarKind};
pub use rat::Rat;
pub use ratfunc::{has_nonneg_int_coeffs, is_qt_poly, RatFunc};
pub use sparse::{SparseEchelon, SparseVec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("domain error: {0}")]
    Domain(String),
}
