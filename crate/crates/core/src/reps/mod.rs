//! Matrix representations of `sl_n`, exact evaluation of twists and
//! R-matrices on them, and the matrix-level checks.

mod checks;
mod evaluate;
mod export;
mod matrix;
mod rep;
mod zpoly;

pub use checks::{
    classical_limit_check, cybe_check, determinant, frobenius_check, matrix_cocycle_residual, multiplicativity_failures, parabolic_basis, qybe_check,
};
pub use evaluate::{evaluate_pair, evaluate_twist, factor_matrix, fp_factors, fp_matrix, heine, rp_matrix};
pub use export::{bivector_latex, element_json, matrix_json, matrix_latex};
pub use matrix::RepMatrix;
pub use rep::{evaluate, evaluate_truncated, fundamental_rep, MatrixRep};
pub use zpoly::ZPoly;

use crate::ncalg::NcError;
use crate::twists::TwistError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("no image for generator {0}")]
    UnknownGenerator(String),
    #[error("coefficient series reaches its truncation order; raise the order")]
    Truncated,
    #[error("series does not terminate: {0}")]
    NonTerminating(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("not a bivector: {0}")]
    NotBivector(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Nc(#[from] NcError),
}

#[cfg(test)]
mod tests;
