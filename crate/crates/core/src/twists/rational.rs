use super::aform::{specialize, AFormBasis, Specialization};
use super::{
    build_f2_aff, build_f3_aff, d2_context, d3_context, AlgebraContext, TwistError, Q_H_ALPHA,
    Q_H_BETA,
};
use crate::algebras::{f2bar, f3bar};
use crate::hopf::{f2bar_coproduct, f3bar_coproduct, TwistElement, TwistFactor};
use crate::ncalg::{GenKind, Presentation, TensorElement};
use crate::qcalc::{PowerExponent, QBase, QPowerFactor};
use crate::scalars::{QCoeff, Rat};
use std::sync::Arc;

/// `f₀ ≺ k ≺ f₁` inside `𝒟⁽²⁾[[ζ]]`.
pub fn f2a_basis(d2: Arc<Presentation<QCoeff>>) -> Result<AFormBasis, TwistError> {
    let q = |k| QCoeff::q_pow(k, 1);
    let one = QCoeff::one();
    AFormBasis::new(
        d2,
        "F2A",
        &[
            ("f0", GenKind::Ordinary, &[(q(-2).sub(&one), 0, "k^-1 em")]),
            ("k", GenKind::Cartan, &[(one.clone(), 0, "k")]),
            (
                "f1",
                GenKind::Ordinary,
                &[(one.clone(), 0, "ed"), (one.clone(), 1, "k^-1 em")],
            ),
        ],
    )
}

/// `f₂ ≺ f₀ ≺ ê_{−α} ≺ ka ≺ kb ≺ ê_α ≺ f₃ ≺ f₁` inside `𝒟⁽³⁾[[ζ]]`.
pub fn f3a_basis(d3: Arc<Presentation<QCoeff>>) -> Result<AFormBasis, TwistError> {
    let q = |k| QCoeff::q_pow(k, 3);
    let one = QCoeff::one();
    let ca = format!("{Q_H_ALPHA} edb");
    let cb = format!("{Q_H_BETA} edab");
    AFormBasis::new(
        d3,
        "F3A",
        &[
            ("f2", GenKind::Ordinary, &[(one.sub(&q(-2)), 0, "emb")]),
            ("f0", GenKind::Ordinary, &[(q(1).sub(&q(-1)), 0, "emab")]),
            ("ema", GenKind::Ordinary, &[(one.clone(), 0, "ema")]),
            ("ka", GenKind::Cartan, &[(one.clone(), 0, "ka")]),
            ("kb", GenKind::Cartan, &[(one.clone(), 0, "kb")]),
            ("ea", GenKind::Ordinary, &[(one.clone(), 0, "ea")]),
            (
                "f3",
                GenKind::Ordinary,
                &[(one.clone(), 0, &ca), (one.neg(), 1, "emb")],
            ),
            (
                "f1",
                GenKind::Ordinary,
                &[(one.clone(), 0, &cb), (q(-1), 1, "emab")],
            ),
        ],
    )
}

pub fn f2_specialization() -> Specialization {
    Specialization {
        letters: vec![("f0", "f0"), ("f1", "f1")],
        cartan: vec![("k", "H")],
    }
}

pub fn f3_specialization() -> Specialization {
    Specialization {
        letters: vec![
            ("f2", "f2"),
            ("f0", "f0"),
            ("ema", "em"),
            ("ea", "ea"),
            ("f3", "f3"),
            ("f1", "f1"),
        ],
        cartan: vec![("ka", "Ha"), ("kb", "Hb")],
    }
}

pub fn f2bar_context() -> Result<AlgebraContext<Rat>, TwistError> {
    AlgebraContext::new(f2bar()?, f2bar_coproduct)
}

pub fn f3bar_context() -> Result<AlgebraContext<Rat>, TwistError> {
    AlgebraContext::new(f3bar()?, f3bar_coproduct)
}

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

fn additive(u: TensorElement<Rat>, v: TensorElement<Rat>) -> TwistFactor<Rat> {
    TwistFactor::Power(QPowerFactor {
        u,
        exponent: PowerExponent::Additive(v),
        base: QBase::Q2,
    })
}

/// `(1⊗1 − ζ 1⊗f̄₁ − ζ²(H̄/2)⊗f̄₀)^{−½H̄⊗1}`.
pub fn build_f2bar_aff(
    ctx: &AlgebraContext<Rat>,
    order: usize,
) -> Result<TwistElement<Rat>, TwistError> {
    let u = ctx.el2(&[(r(1, 1), 1, "", "f1"), (r(1, 2), 2, "H", "f0")], order)?;
    let v = ctx.el2(&[(r(-1, 2), 0, "H", "")], order)?;
    Ok(TwistElement::new(
        ctx.pres.clone(),
        2,
        vec![additive(u, v)],
    )?)
}

/// The `q = 1` six-factor twist on `F̄⁽³⁾`, with `H̄⊥_α = ⅔Ha + ⁴⁄₃Hb`, `H̄⊥_β = ⁴⁄₃Ha + ⅔Hb`.
pub fn build_f3bar_aff(
    ctx: &AlgebraContext<Rat>,
    order: usize,
) -> Result<TwistElement<Rat>, TwistError> {
    let e = |t: &[(Rat, usize, &str, &str)]| ctx.el2(t, order);
    let v_beta = e(&[(r(-2, 3), 0, "Ha", ""), (r(-1, 3), 0, "Hb", "")])?;
    let p1 = e(&[
        (r(1, 1), 1, "", "f3"),
        (r(2, 3), 2, "Ha", "f2"),
        (r(1, 3), 2, "Hb", "f2"),
    ])?;
    let p2 = e(&[(r(-1, 1), 1, "", "em")])?;
    let x3 = e(&[(r(1, 1), 2, "ea Ha", "f0"), (r(1, 1), 2, "ea Hb", "f0")])?;
    let x4 = e(&[(r(-1, 1), 1, "ea", "f1")])?;
    let x5 = e(&[(r(-1, 1), 1, "ea", "f2")])?;
    let p6 = e(&[
        (r(1, 1), 1, "", "f3"),
        (r(1, 3), 2, "Ha", "f2"),
        (r(2, 3), 2, "Hb", "f2"),
    ])?;
    let v6 = e(&[(r(1, 3), 0, "Ha", ""), (r(-1, 3), 0, "Hb", "")])?;
    let exp = |arg| TwistFactor::Exp { arg, base: None };
    Ok(TwistElement::new(
        ctx.pres.clone(),
        2,
        vec![
            additive(p1, v_beta.clone()),
            additive(p2, v_beta),
            exp(x3),
            exp(x4),
            exp(x5),
            additive(p6, v6),
        ],
    )?)
}

/// `F_aff` at generic `q` rewritten in the A-form alphabet, and its term-wise `q = 1` specialisation.
pub struct RationalForm {
    pub basis: AFormBasis,
    pub a_form: TensorElement<QCoeff>,
    pub specialized: TensorElement<Rat>,
}

pub fn build_f_aff_rational(n: usize, order: usize) -> Result<RationalForm, TwistError> {
    let (basis, x, to, map) = match n {
        2 => {
            let ctx = d2_context()?;
            let x = build_f2_aff(&ctx, order)?.expand(order)?;
            (
                f2a_basis(ctx.pres.clone())?,
                x,
                Arc::new(f2bar()?),
                f2_specialization(),
            )
        }
        3 => {
            let ctx = d3_context()?;
            let x = build_f3_aff(&ctx, order)?.expand(order)?;
            (
                f3a_basis(ctx.pres.clone())?,
                x,
                Arc::new(f3bar()?),
                f3_specialization(),
            )
        }
        _ => return Err(TwistError::Unsupported(format!("n = {n}"))),
    };
    let a_form = basis.from_source_legs(&x)?;
    let specialized = specialize(&a_form, basis.target(), &to, &map)?;
    Ok(RationalForm {
        basis,
        a_form,
        specialized,
    })
}
