use super::affine2::{coboundary, factorization_residual};
use super::{AlgebraContext, TwistError};
use crate::algebras::d3;
use crate::hopf::{d3_delta_k, ProjectedLeg, TwistElement, TwistFactor};
use crate::ncalg::TensorElement;
use crate::qcalc::{PowerExponent, QBase, QPowerFactor};
use crate::scalars::QCoeff;

/// `q^{h⊥_α}`, `q^{h⊥_β}`, `q^{h⊥_{α+β}}` in the cube-root Cartan letters.
pub const Q_H_ALPHA: &str = "ka^2 kb^4";
pub const Q_H_BETA: &str = "ka^4 kb^2";
pub const Q_H_ALPHA_BETA: &str = "ka^2 kb^-2";

fn q(k: i64) -> QCoeff {
    QCoeff::q_pow(k, 3)
}

fn one() -> QCoeff {
    QCoeff::one()
}

/// `1/(1 − q²)`.
fn sing() -> QCoeff {
    one().sub(&q(2)).inv().expect("1 - q^2 is invertible")
}

/// How the negative part of `W₃` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum W3Variant {
    /// `(e(−ζ²ê_{−β}) e(−ζê_{−α}) e(−ζ²ê_{−β}))⁻¹`, as displayed.
    Printed,
    /// Without the repeated `ê_{−β}` factor.
    TwoFactor,
}

/// `𝒟⁽³⁾` with the K-twisted coproduct.
pub fn d3_context() -> Result<AlgebraContext<QCoeff>, TwistError> {
    AlgebraContext::new(d3()?, d3_delta_k)
}

fn singular(
    ctx: &AlgebraContext<QCoeff>,
    arg: TensorElement<QCoeff>,
    base: QBase,
) -> Result<TwistFactor<QCoeff>, TwistError> {
    Ok(TwistFactor::singular(arg, base, &ctx.pres)?)
}

fn regular(arg: TensorElement<QCoeff>, base: QBase) -> TwistFactor<QCoeff> {
    TwistFactor::Exp {
        arg,
        base: Some(base),
    }
}

/// `e_{q²}(x)⁻¹ = e_{q⁻²}(q⁻²x)`.
fn singular_inverse(
    ctx: &AlgebraContext<QCoeff>,
    arg: TensorElement<QCoeff>,
) -> Result<TwistFactor<QCoeff>, TwistError> {
    singular(ctx, arg.scale(&q(-2)), QBase::QInv2)
}

pub fn build_w3(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
    variant: W3Variant,
) -> Result<TwistElement<QCoeff>, TwistError> {
    if order < 1 {
        return Err(TwistError::OrderTooLow(order));
    }
    let emb = ctx.el(&[(one().neg(), 2, "emb")], order)?;
    let ema = ctx.el(&[(one().neg(), 1, "ema")], order)?;
    let mut factors = vec![
        singular(
            ctx,
            ctx.el(&[(one(), 1, &format!("{Q_H_ALPHA} edb"))], order)?,
            QBase::Q2,
        )?,
        singular(
            ctx,
            ctx.el(
                &[(q(1).mul(&sing()).neg(), 2, &format!("{Q_H_BETA} edab"))],
                order,
            )?,
            QBase::Q2,
        )?,
    ];
    if variant == W3Variant::Printed {
        factors.push(singular_inverse(ctx, emb.clone())?);
    }
    factors.push(singular_inverse(ctx, ema)?);
    factors.push(singular_inverse(ctx, emb)?);
    Ok(TwistElement::new(ctx.pres.clone(), 1, factors)?)
}

pub fn build_f3_trivial(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
    variant: W3Variant,
) -> Result<TwistElement<QCoeff>, TwistError> {
    coboundary(ctx, &build_w3(ctx, order, variant)?, order)
}

/// `ê′_{δ−β} = [ê_α, ê_{δ−α−β}]`.
pub fn e_delta_beta_prime(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
) -> Result<TensorElement<QCoeff>, TwistError> {
    let ea = ctx.el(&[(one(), 0, "ea")], order)?;
    let edab = ctx.el(&[(one(), 0, "edab")], order)?;
    Ok(ctx.mul(&ea, &edab)?.sub(&ctx.mul(&edab, &ea)?)?)
}

/// The three factors `Λ₁`, `Λ₂`, `Λ₃`.
pub fn build_lambdas(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
) -> Result<[TwistElement<QCoeff>; 3], TwistError> {
    let s2 = sing().mul(&sing());
    let c1 = q(-1).mul(&s2).neg();
    let l1 = vec![
        regular(
            ctx.el2(&[(c1.clone(), 4, "edab", "emb")], order)?,
            QBase::Q2,
        ),
        regular(ctx.el2(&[(c1, 3, "edab", "ema")], order)?, QBase::Q2),
    ];
    let emab = ctx.el(&[(one(), 0, "emab")], order)?;
    let l2 = vec![regular(
        e_delta_beta_prime(ctx, order)?
            .tensor(&emab)
            .scale(&s2)
            .shift(4),
        QBase::Q2,
    )];
    let l3 = vec![regular(
        ctx.el2(&[(q(1).sub(&q(-1)).neg(), 1, "ea", "emb")], order)?,
        QBase::Q2,
    )];
    let mk = |f| TwistElement::new(ctx.pres.clone(), 2, f);
    Ok([mk(l1)?, mk(l2)?, mk(l3)?])
}

/// `Φ₃ = Λ₁Λ₂Λ₃`.
pub fn build_phi3(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
) -> Result<TwistElement<QCoeff>, TwistError> {
    let [l1, l2, l3] = build_lambdas(ctx, order)?;
    Ok(TwistElement::compose(
        &TwistElement::compose(&l1, &l2)?,
        &l3,
    )?)
}

/// The generators `f₀ … f₃` as elements of `𝒟⁽³⁾[[ζ]]`.
pub fn f_generators(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
) -> Result<[TensorElement<QCoeff>; 4], TwistError> {
    Ok([
        ctx.el(&[(q(1).sub(&q(-1)), 0, "emab")], order)?,
        ctx.el(
            &[(one(), 0, &format!("{Q_H_BETA} edab")), (q(-1), 1, "emab")],
            order,
        )?,
        ctx.el(&[(one().sub(&q(-2)), 0, "emb")], order)?,
        ctx.el(
            &[
                (one(), 0, &format!("{Q_H_ALPHA} edb")),
                (one().neg(), 1, "emb"),
            ],
            order,
        )?,
    ])
}

fn power(u: TensorElement<QCoeff>, g: TensorElement<QCoeff>, base: QBase) -> TwistFactor<QCoeff> {
    TwistFactor::Power(QPowerFactor {
        u,
        exponent: PowerExponent::GroupLike(g),
        base,
    })
}

/// The six-factor form of `F₃ᵃᶠᶠ` written with `f₀ … f₃`.
pub fn build_f3_aff(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
) -> Result<TwistElement<QCoeff>, TwistError> {
    let [f0, f1, f2, f3] = f_generators(ctx, order)?;
    let e = |terms: &[(QCoeff, usize, &str)]| ctx.el(terms, order);
    let unit = e(&[(one(), 0, "")])?;
    let ea = e(&[(one(), 0, "ea")])?;
    let ca = e(&[(one(), 0, Q_H_ALPHA)])?;
    let g_beta = e(&[(one(), 0, Q_H_BETA)])?.tensor(&unit);
    // (h⊥_β/2)_{q⁻²} and (h⊥_α/2)_{q²}
    let inv = |c: QCoeff| c.inv().expect("nonzero");
    let hb = e(&[(one(), 0, "ka^-4 kb^-2"), (one().neg(), 0, "")])?.scale(&inv(q(-2).sub(&one())));
    let ha = e(&[(one(), 0, Q_H_ALPHA), (one().neg(), 0, "")])?.scale(&inv(q(2).sub(&one())));
    let ema = e(&[(one(), 0, "ema")])?;

    let p1 = unit.tensor(&f3).shift(1).add(&hb.tensor(&f2).shift(2))?;
    let p2 = unit.tensor(&ema).scale(&q(-2).neg()).shift(1);
    let h3 = e(&[
        (one(), 0, &format!("ea {Q_H_ALPHA}")),
        (one().neg(), 0, "ea ka^-4 kb^-2"),
    ])?
    .scale(&inv(q(2).sub(&one())));
    let x3 = h3.tensor(&f0).shift(2);
    let x4 = ctx.mul(&ca, &ea)?.tensor(&f1).neg().shift(1);
    let x5 = ea.tensor(&f2).scale(&q(1).neg()).shift(1);
    let p6 = ca
        .tensor(&f3)
        .scale(&q(-2))
        .shift(1)
        .add(&ha.tensor(&f2).shift(2))?;
    let g6 = e(&[(one(), 0, "ka^-2 kb^2")])?.tensor(&unit);
    let factors = vec![
        power(p1, g_beta.clone(), QBase::Q2),
        power(p2, g_beta, QBase::QInv2),
        regular(x3, QBase::Q2),
        regular(x4, QBase::QInv2),
        regular(x5, QBase::Q2),
        power(p6, g6, QBase::QInv2),
    ];
    Ok(TwistElement::new(ctx.pres.clone(), 2, factors)?)
}

/// The form reached at the end of the factorization argument, with the
/// generators `ê_{−α}` and `ê_{−β}` in the second and last factor.
pub fn build_f3_aff_proof_form(
    ctx: &AlgebraContext<QCoeff>,
    order: usize,
    last: &str,
) -> Result<TwistElement<QCoeff>, TwistError> {
    let e = |terms: &[(QCoeff, usize, &str)]| ctx.el(terms, order);
    let unit = e(&[(one(), 0, "")])?;
    let ca_edb = e(&[(one(), 0, &format!("{Q_H_ALPHA} edb"))])?;
    let g_beta = e(&[(one(), 0, Q_H_BETA)])?.tensor(&unit);
    let t = &ctx.table;
    let p1 = ctx.el2(
        &[
            (one(), 1, "", &format!("{Q_H_ALPHA} edb")),
            (one().neg(), 2, "ka^-4 kb^-2", "emb"),
        ],
        order,
    )?;
    let p2 = ctx.el2(&[(q(-2).neg(), 1, "", "ema")], order)?;
    let y = ctx.el2(&[(q(-1).neg(), 2, "ea ka^-4 kb^-2", "emab")], order)?;
    let [_, _, l3] = build_lambdas(ctx, order)?;
    let three = t
        .projected_legs(&ca_edb, ProjectedLeg::Three)?
        .scale(&q(-2))
        .shift(1);
    let p6 = t
        .projected_legs(&ca_edb, ProjectedLeg::Two)?
        .scale(&q(-2))
        .shift(1)
        .sub(&ctx.el2(&[(q(-2), 2, "", last)], order)?)?;
    let g6 = e(&[(one(), 0, "ka^-2 kb^2")])?.tensor(&unit);
    let mut factors = vec![
        power(p1, g_beta.clone(), QBase::Q2),
        power(p2, g_beta, QBase::QInv2),
        regular(y, QBase::Q2),
    ];
    factors.extend(l3.factors().iter().cloned());
    factors.push(singular(ctx, three, QBase::QInv2)?);
    factors.push(power(p6, g6, QBase::QInv2));
    Ok(TwistElement::new(ctx.pres.clone(), 2, factors)?)
}

pub fn verify_factorization_3(
    order: usize,
    variant: W3Variant,
) -> Result<TensorElement<QCoeff>, TwistError> {
    let ctx = d3_context()?;
    factorization_residual(
        &ctx,
        &build_w3(&ctx, order, variant)?,
        &build_phi3(&ctx, order)?,
        &build_f3_aff(&ctx, order)?,
        order,
    )
}
