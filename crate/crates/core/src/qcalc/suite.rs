use super::*;
use crate::algebras::{d2, five_term_algebra, qplane};
use crate::scalars::QCoeff;

/// Outcome of one identity: the residual's term count (zero is a pass).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub order: usize,
    pub residual_terms: usize,
}

fn gen(p: &Presentation<QCoeff>, name: &str, order: usize) -> Result<TensorElement<QCoeff>, QcalcError> {
    Ok(TensorElement::gen(p, name, order)?.shift(1))
}

/// `e(u)·e(u·G')⁻¹` with `G' = G` for base `q²` and `G⁻¹` for `q⁻²`.
fn heine_rhs(
    u: &TensorElement<QCoeff>,
    g: &TensorElement<QCoeff>,
    base: QBase,
    p: &Presentation<QCoeff>,
) -> Result<TensorElement<QCoeff>, QcalcError> {
    let shift = match base {
        QBase::Q2 => g.clone(),
        QBase::QInv2 => g.inverse(p).map_err(|_| QcalcError::NonInvertibleExponent)?,
    };
    let e = qexp(u, Variant::Singular, base, p)?;
    Ok(e.mul(&qexp_inverse(&u.mul(&shift, p)?, base, p)?, p)?)
}

fn heine_residual(
    u: &TensorElement<QCoeff>,
    g: &TensorElement<QCoeff>,
    base: QBase,
    p: &Presentation<QCoeff>,
) -> Result<usize, QcalcError> {
    let f = QPowerFactor { u: u.clone(), exponent: PowerExponent::GroupLike(g.clone()), base };
    Ok(qpow(&f, p)?.sub(&heine_rhs(u, g, base, p)?)?.len())
}

/// The q-exponential product rules and the Heine formula in the q-plane
/// (`yx = q²xy`) at `order`, and the five-term flip at `five_order`.
pub fn identity_suite(order: usize, five_order: usize) -> Result<Vec<IdentityCheck>, QcalcError> {
    let mut out = Vec::new();
    let p = qplane::<QCoeff>()?;
    let (x, y) = (gen(&p, "x", order)?, gen(&p, "y", order)?);

    let e = |z: &TensorElement<QCoeff>| qexp(z, Variant::Singular, QBase::Q2, &p);
    let merged = e(&x.add(&y)?)?.sub(&e(&x)?.mul(&e(&y)?, &p)?)?;
    out.push(IdentityCheck { name: "product", order, residual_terms: merged.len() });

    let mut inv_terms = 0;
    for base in [QBase::Q2, QBase::QInv2] {
        let one = qexp(&x, Variant::Singular, base, &p)?.mul(&qexp_inverse(&x, base, &p)?, &p)?;
        inv_terms += one.sub(&TensorElement::one(1, order))?.len();
    }
    out.push(IdentityCheck { name: "inverse", order, residual_terms: inv_terms });

    let mut heine_terms = 0;
    for k in [-6, -3, 1, 4] {
        let g = TensorElement::scalar(1, ZetaSeries::constant(QCoeff::q_pow(k, 1), order));
        for base in [QBase::Q2, QBase::QInv2] {
            heine_terms += heine_residual(&x, &g, base, &p)?;
        }
    }
    let d = d2()?;
    let u = TensorElement::from_leg_words(&d, &["", "ed"], ZetaSeries::monomial(QCoeff::one(), 1, order))?;
    let g = TensorElement::from_leg_words(&d, &["k", ""], ZetaSeries::one(order))?;
    for base in [QBase::Q2, QBase::QInv2] {
        heine_terms += heine_residual(&u, &g, base, &d)?;
    }
    out.push(IdentityCheck { name: "heine", order, residual_terms: heine_terms });

    let f = five_term_algebra::<QCoeff>()?;
    let ft = five_term_flip(&gen(&f, "u", five_order)?, &gen(&f, "v", five_order)?, &f)?;
    out.push(IdentityCheck { name: "five-term", order: five_order, residual_terms: ft.residual.len() });
    Ok(out)
}
