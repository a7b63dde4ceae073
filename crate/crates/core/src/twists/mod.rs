//! The concrete twists: affine constructions at generic `q`, their rational
//! forms and `q = 1` limits, the Jordanian twists of `U(sl_n)`, the maps `ι`,
//! and the resulting parabolic twists and r-matrices.

mod affine2;
mod affine3;
mod aform;
mod carrier;
mod classical;
mod context;
mod errata;
mod rational;

pub use affine2::{
    build_f2_aff, build_f2_trivial, build_phi2, build_w2, coboundary, d2_context,
    verify_factorization_2,
};
pub use affine3::{
    build_f3_aff, build_f3_aff_proof_form, build_f3_trivial, build_lambdas, build_phi3, build_w3,
    d3_context, e_delta_beta_prime, f_generators, verify_factorization_3, W3Variant, Q_H_ALPHA,
    Q_H_ALPHA_BETA, Q_H_BETA,
};
pub use aform::{specialize, AFormBasis, GeneratorDef, Specialization};
pub use carrier::{Carrier, Truncated};
pub use classical::{
    build_fp, build_fp4_display, build_iota, build_psi, build_rp, classical_r, e1j_dressed,
    e1j_dressed_in, e24_prime, e24_prime_in, exp_minus_sigma, exp_minus_sigma_in, iota_for_r, iota_variant_for_r,
    iota_images, psi_args, sigma, sigma_in, usl_context, verify_iota, IotaFailure, IotaMap,
    IotaVariant,
};
pub use context::AlgebraContext;
pub use errata::{errata, errata_json, Erratum};
pub use rational::{
    build_f2bar_aff, build_f3bar_aff, build_f_aff_rational, f2_specialization, f2a_basis,
    f2bar_context, f3_specialization, f3a_basis, f3bar_context, RationalForm,
};

use crate::hopf::HopfError;
use crate::ncalg::NcError;
use crate::qcalc::QcalcError;
use crate::scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TwistError {
    #[error("truncation order {0} too low")]
    OrderTooLow(usize),
    #[error("coefficient has a pole at q=1: {0}")]
    PoleAtOne(String),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("evaluation failed: {0}")]
    Evaluation(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Qcalc(#[from] QcalcError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[cfg(test)]
mod tests;
