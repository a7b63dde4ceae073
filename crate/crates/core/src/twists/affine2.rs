use super::{AlgebraContext, TwistError};
use crate::algebras::d2;
use crate::hopf::{d2_standard, ProjectedLeg, TwistElement, TwistFactor};
use crate::ncalg::TensorElement;
use crate::qcalc::{PowerExponent, QBase, QPowerFactor};
use crate::scalars::QCoeff;

fn q(k: i64) -> QCoeff {
    QCoeff::q_pow(k, 1)
}

/// `1/(1 − q²)`.
fn sing() -> QCoeff {
    QCoeff::one()
        .sub(&q(2))
        .inv()
        .expect("1 - q^2 is invertible")
}

/// `𝒟⁽²⁾` with its standard coproduct.
pub fn d2_context() -> Result<AlgebraContext<QCoeff>, TwistError> {
    AlgebraContext::new(d2()?, d2_standard)
}

/// `W₂ = exp_{q²}(ζ/(1−q²) e_{δ−α}) exp_{q⁻²}(−ζ²/(1−q²) q^{−h} e_{−α})`.
pub fn build_w2(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
) -> Result<TwistElement<QCoeff>, TwistError> {
    if order < 1 {
        return Err(TwistError::OrderTooLow(order));
    }
    let a = ctx.el(&[(sing(), 1, "ed")], order)?;
    let b = ctx.el(&[(sing().neg(), 2, "k^-1 em")], order)?;
    Ok(TwistElement::new(
        ctx.pres.clone(),
        1,
        vec![
            TwistFactor::Exp {
                arg: a,
                base: Some(QBase::Q2),
            },
            TwistFactor::Exp {
                arg: b,
                base: Some(QBase::QInv2),
            },
        ],
    )?)
}

/// `(W⊗W)Δ(W⁻¹)` as an explicit series.
pub fn coboundary(
    ctx: &AlgebraContext<QCoeff>,
    w: &TwistElement<QCoeff>,
    order: usize,
) -> Result<TwistElement<QCoeff>, TwistError> {
    let we = w.expand(order)?;
    let wi = w.expand_inverse(order)?;
    let f = ctx.mul(&we.tensor(&we), &ctx.table.delta_extend(&wi)?)?;
    Ok(TwistElement::new(
        ctx.pres.clone(),
        2,
        vec![TwistFactor::Series(f)],
    )?)
}

pub fn build_f2_trivial(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
) -> Result<TwistElement<QCoeff>, TwistError> {
    coboundary(ctx, &build_w2(ctx, order)?, order)
}

/// `Φ₂ = e_{q²}(−ζ³ e_{δ−α} q^{−h} ⊗ q^{−h} e_{−α})`.
pub fn build_phi2(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
) -> Result<TwistElement<QCoeff>, TwistError> {
    phi2_with_sign(ctx, order, -1)
}

pub(crate) fn phi2_with_sign(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
    sign: i64,
) -> Result<TwistElement<QCoeff>, TwistError> {
    let arg = ctx.el2(&[(QCoeff::from_int(sign), 3, "ed k^-1", "k^-1 em")], order)?;
    Ok(TwistElement::new(
        ctx.pres.clone(),
        2,
        vec![TwistFactor::singular(arg, QBase::Q2, &ctx.pres)?],
    )?)
}

/// `(1 − ζ(e_{δ−α})₍₂₎ − ζ²(q^{−h}e_{−α})₍₂₎)_{q²}^{(−½h)₍₁₎}`.
pub fn build_f2_aff(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
) -> Result<TwistElement<QCoeff>, TwistError> {
    let em_hat = ctx.el(&[(QCoeff::one(), 2, "k^-1 em")], order)?;
    let u = ctx
        .el2(&[(QCoeff::one(), 1, "", "ed")], order)?
        .add(&ctx.table.projected_legs(&em_hat, ProjectedLeg::Two)?)?;
    let g = ctx.el2(&[(QCoeff::one(), 0, "k", "")], order)?;
    let f = QPowerFactor {
        u,
        exponent: PowerExponent::GroupLike(g),
        base: QBase::Q2,
    };
    Ok(TwistElement::new(
        ctx.pres.clone(),
        2,
        vec![TwistFactor::Power(f)],
    )?)
}

/// `F − Ad(W⊗W)(Φ)⁻¹ · F_aff`, all expanded at `order`.
pub(crate) fn factorization_residual(
    ctx: &AlgebraContext<QCoeff>,
    w: &TwistElement<QCoeff>,
    phi: &TwistElement<QCoeff>,
    f_aff: &TwistElement<QCoeff>,
    order: usize,
) -> Result<TensorElement<QCoeff>, TwistError> {
    let f = coboundary(ctx, w, order)?.expand(order)?;
    let we = w.expand(order)?;
    let ww = we.tensor(&we);
    let phi_w_inv = ctx.conj(&ww, &phi.expand_inverse(order)?)?;
    Ok(f.sub(&ctx.mul(&phi_w_inv, &*f_aff.expand(order)?)?)?)
}

pub fn verify_factorization_2(order: usize) -> Result<TensorElement<QCoeff>, TwistError> {
    let ctx = d2_context()?;
    factorization_residual(
        &ctx,
        &build_w2(&ctx, order)?,
        &build_phi2(&ctx, order)?,
        &build_f2_aff(&ctx, order)?,
        order,
    )
}
