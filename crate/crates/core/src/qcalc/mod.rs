//! q-exponentials, their product identities and the Heine q-power, acting on
//! elements of positive ζ-valuation.

use crate::ncalg::{NcError, Presentation, TensorElement};
use crate::scalars::{Coeff, ScalarError, ZetaSeries};
use thiserror::Error;

mod suite;
#[cfg(test)]
mod tests;

pub use suite::{identity_suite, IdentityCheck};

#[derive(Debug, Error)]
pub enum QcalcError {
    #[error("argument has zero ζ-valuation; the series would not terminate")]
    ZeroOrderArgument,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("exponent is not invertible")]
    NonInvertibleExponent,
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Base of a q-exponential: `q²` or `q⁻²`. At `q = 1` both are the ordinary exponential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QBase {
    Q2,
    QInv2,
}

impl QBase {
    pub fn exponent(self) -> i64 {
        match self {
            QBase::Q2 => 2,
            QBase::QInv2 => -2,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            QBase::Q2 => QBase::QInv2,
            QBase::QInv2 => QBase::Q2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `exp_{q²}(z) = Σ zᵏ/(k)_{q²}!`
    Regular,
    /// `e_{q²}(z) = exp_{q²}(z/(1−q²))`
    Singular,
}

/// `(j)_{q^b} = 1 + q^b + … + q^{b(j−1)}`, valid for `j ≥ 0` in any coefficient ring.
pub fn q_number<C: Coeff>(j: i64, base: QBase, d: u32) -> C {
    let b = base.exponent();
    let mut acc = C::zero();
    for i in 0..j {
        acc = acc.add(&C::q_pow(b * i, d));
    }
    acc
}

pub fn q_factorial<C: Coeff>(k: i64, base: QBase, d: u32) -> C {
    (1..=k).fold(C::one(), |acc, j| acc.mul(&q_number(j, base, d)))
}

/// `1 − q^b`; zero at `q = 1`.
pub fn one_minus_q<C: Coeff>(base: QBase, d: u32) -> C {
    C::one().sub(&C::q_pow(base.exponent(), d))
}

fn require_positive<C: Coeff>(x: &TensorElement<C>) -> Result<(), QcalcError> {
    match x.valuation() {
        Some(0) => Err(QcalcError::ZeroOrderArgument),
        _ => Ok(()),
    }
}

/// `Σ_k c_k xᵏ` truncated at the order of `x`; `coeff(k)` is the scalar of the k-th power.
fn power_series<C: Coeff>(
    x: &TensorElement<C>,
    pres: &Presentation<C>,
    coeff: impl Fn(i64) -> Result<C, QcalcError>,
) -> Result<TensorElement<C>, QcalcError> {
    require_positive(x)?;
    let mut sum = TensorElement::one(x.legs(), x.order());
    let mut p = TensorElement::one(x.legs(), x.order());
    for k in 1..=x.order() as i64 {
        p = p.mul(x, pres)?;
        if p.is_zero() {
            break;
        }
        sum = sum.add(&p.scale(&coeff(k)?))?;
    }
    Ok(sum)
}

/// q-exponential of `x` in either normalisation.
pub fn qexp<C: Coeff>(
    x: &TensorElement<C>,
    variant: Variant,
    base: QBase,
    pres: &Presentation<C>,
) -> Result<TensorElement<C>, QcalcError> {
    let d = pres.root_degree();
    let scale = match variant {
        Variant::Regular => C::one(),
        Variant::Singular => one_minus_q::<C>(base, d).inv()?,
    };
    power_series(x, pres, |k| {
        let mut c = q_factorial::<C>(k, base, d).inv()?;
        for _ in 0..k {
            c = c.mul(&scale);
        }
        Ok(c)
    })
}

/// Ordinary exponential `Σ xᵏ/k!`.
pub fn exp<C: Coeff>(
    x: &TensorElement<C>,
    pres: &Presentation<C>,
) -> Result<TensorElement<C>, QcalcError> {
    power_series(x, pres, |k| Ok(C::from_int((1..=k).product()).inv()?))
}

/// `ln(1 + x) = Σ (−1)^{k+1} xᵏ/k`.
pub fn log1p<C: Coeff>(
    x: &TensorElement<C>,
    pres: &Presentation<C>,
) -> Result<TensorElement<C>, QcalcError> {
    let s = power_series(x, pres, |k| {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        Ok(C::from_int(sign * k).inv()?)
    })?;
    Ok(s.sub(&TensorElement::one(x.legs(), x.order()))?)
}

/// `[x, y]_c = xy − c·yx`.
pub fn q_commutator<C: Coeff>(
    x: &TensorElement<C>,
    y: &TensorElement<C>,
    c: &C,
    pres: &Presentation<C>,
) -> Result<TensorElement<C>, QcalcError> {
    Ok(x.mul(y, pres)?.sub(&y.mul(x, pres)?.scale(c))?)
}

/// `e_{q²}(x + y) = e_{q²}(y)·e_{q²}(x)`, returned after checking `[x, y]_{q²} = 0` and comparing both sides.
pub fn qexp_merge<C: Coeff>(
    x: &TensorElement<C>,
    y: &TensorElement<C>,
    pres: &Presentation<C>,
) -> Result<TensorElement<C>, QcalcError> {
    let q2 = C::q_pow(2, pres.root_degree());
    if !q_commutator(x, y, &q2, pres)?.is_zero() {
        return Err(QcalcError::Hypothesis("[x, y]_{q^2} != 0".into()));
    }
    let lhs = qexp(&x.add(y)?, Variant::Singular, QBase::Q2, pres)?;
    let rhs = qexp(y, Variant::Singular, QBase::Q2, pres)?
        .mul(&qexp(x, Variant::Singular, QBase::Q2, pres)?, pres)?;
    if lhs != rhs {
        return Err(QcalcError::Hypothesis(
            "merged exponential differs from the product".into(),
        ));
    }
    Ok(lhs)
}

/// `e_{q²}(x)⁻¹ = e_{q⁻²}(q⁻²x)`.
pub fn qexp_inverse<C: Coeff>(
    x: &TensorElement<C>,
    base: QBase,
    pres: &Presentation<C>,
) -> Result<TensorElement<C>, QcalcError> {
    let c = C::q_pow(-base.exponent(), pres.root_degree());
    qexp(&x.scale(&c), Variant::Singular, base.flip(), pres)
}

/// Both sides of `e(u)e(v) = e(v)·e([u,v]/(1−q²))·e(u)` and their difference.
pub struct FiveTerm<C: Coeff> {
    pub lhs: TensorElement<C>,
    pub rhs: TensorElement<C>,
    pub residual: TensorElement<C>,
}

pub fn five_term_flip<C: Coeff>(
    u: &TensorElement<C>,
    v: &TensorElement<C>,
    pres: &Presentation<C>,
) -> Result<FiveTerm<C>, QcalcError> {
    let d = pres.root_degree();
    let one = C::one();
    let uv = q_commutator(u, v, &one, pres)?;
    if !q_commutator(u, &uv, &C::q_pow(2, d), pres)?.is_zero() {
        return Err(QcalcError::Hypothesis("[u,[u,v]]_{q^2} != 0".into()));
    }
    if !q_commutator(v, &uv, &C::q_pow(-2, d), pres)?.is_zero() {
        return Err(QcalcError::Hypothesis("[v,[u,v]]_{q^-2} != 0".into()));
    }
    let e = |x: &TensorElement<C>| qexp(x, Variant::Singular, QBase::Q2, pres);
    let lhs = e(u)?.mul(&e(v)?, pres)?;
    let mid = uv.scale(&one_minus_q::<C>(QBase::Q2, d).inv()?);
    let rhs = e(v)?.mul(&e(&mid)?, pres)?.mul(&e(u)?, pres)?;
    let residual = lhs.sub(&rhs)?;
    Ok(FiveTerm { lhs, rhs, residual })
}

/// Exponent `v` of a q-power, given either as the group-like `G = q^{−2v}` or additively (at `q = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerExponent<C: Coeff> {
    GroupLike(TensorElement<C>),
    Additive(TensorElement<C>),
}

/// `(1 − u)^{(v)}_{base}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPowerFactor<C: Coeff> {
    pub u: TensorElement<C>,
    pub exponent: PowerExponent<C>,
    pub base: QBase,
}

impl<C: Coeff> QPowerFactor<C> {
    /// Factor `(−v + l)_{base}` as an element.
    fn step(&self, l: i64, pres: &Presentation<C>) -> Result<TensorElement<C>, QcalcError> {
        let legs = self.u.legs();
        let order = self.u.order();
        let one = TensorElement::one(legs, order);
        match &self.exponent {
            PowerExponent::GroupLike(g) => {
                let d = pres.root_degree();
                let b = self.base.exponent();
                let den = C::q_pow(b, d).sub(&C::one()).inv()?;
                let shifted = match self.base {
                    QBase::Q2 => g.scale(&C::q_pow(b * l, d)),
                    // (−v+l)_{q⁻²} = (q^{2v−2l} − 1)/(q⁻² − 1), and q^{2v} = G⁻¹
                    QBase::QInv2 => g
                        .inverse(pres)
                        .map_err(|_| QcalcError::NonInvertibleExponent)?
                        .scale(&C::q_pow(b * l, d)),
                };
                Ok(shifted.sub(&one)?.scale(&den))
            }
            PowerExponent::Additive(v) => Ok(one.scale(&C::from_int(l)).sub(v)?),
        }
    }
}

/// Heine series `Σ_k c_k uᵏ`, coefficients placed to the left of `uᵏ`.
pub fn qpow<C: Coeff>(
    f: &QPowerFactor<C>,
    pres: &Presentation<C>,
) -> Result<TensorElement<C>, QcalcError> {
    require_positive(&f.u)?;
    if let PowerExponent::GroupLike(g) = &f.exponent {
        g.inverse(pres)
            .map_err(|_| QcalcError::NonInvertibleExponent)?;
    }
    let d = pres.root_degree();
    let legs = f.u.legs();
    let order = f.u.order();
    let mut sum = TensorElement::one(legs, order);
    let mut upow = TensorElement::one(legs, order);
    let mut coeff = TensorElement::one(legs, order);
    for k in 1..=order as i64 {
        upow = upow.mul(&f.u, pres)?;
        if upow.is_zero() {
            break;
        }
        let s = f
            .step(k - 1, pres)?
            .scale(&q_number::<C>(k, f.base, d).inv()?);
        coeff = coeff.mul(&s, pres)?;
        sum = sum.add(&coeff.mul(&upow, pres)?)?;
    }
    Ok(sum)
}

/// Convenience: a ζ-series scalar element.
pub fn zeta<C: Coeff>(legs: usize, k: usize, c: C, order: usize) -> TensorElement<C> {
    TensorElement::scalar(legs, ZetaSeries::monomial(c, k, order))
}
