//! Coproduct tables, their multiplicative extension, projected legs, and
//! twists with the Drinfeld cocycle check.

mod coproduct;
mod tables;
mod twist;

pub use coproduct::{
    project_onto, CoproductTable, CoproductTag, ProjectedLeg, RelationResidual, TABLE_ORDER,
};
pub use tables::{
    d2_standard, d3_delta_k, f2bar_coproduct, f2bar_coproduct_with, f3bar_coproduct,
    primitive_table,
};
pub use twist::{
    associator, cocycle_residual, cocycle_sides, twisted_coproduct, TwistElement, TwistFactor,
};

use crate::ncalg::NcError;
use crate::qcalc::QcalcError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("no coproduct for generator {0}")]
    MissingGenerator(String),
    #[error("no projection subalgebra defined")]
    MissingProjection,
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("twist expansion does not start with 1")]
    NotNormalized,
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Qcalc(#[from] QcalcError),
}

#[cfg(test)]
mod tests;
