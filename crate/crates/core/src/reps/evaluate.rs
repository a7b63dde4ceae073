use super::rep::evaluate;
use super::{MatrixRep, RepError, RepMatrix};
use crate::hopf::{TwistElement, TwistFactor};
use crate::ncalg::{Presentation, TensorElement};
use crate::qcalc::PowerExponent;
use crate::scalars::Rat;
use crate::twists::{build_f2bar_aff, build_f3bar_aff, f2bar_context, f3bar_context, iota_variant_for_r, psi_args};
use num_rational::BigRational;

/// Order at which the semi-classical twists are built before evaluation; their
/// exponents are polynomials of ζ-degree at most 2.
const FBAR_ORDER: usize = 4;

/// `(1 − u)^{(v)} = Σ_k c_k uᵏ` at `q = 1`, `c_k = c_{k−1}((k−1) − v)/k`.
pub fn heine(u: &RepMatrix, v: &RepMatrix) -> Result<RepMatrix, RepError> {
    let dim = u.dim();
    let id = RepMatrix::identity(dim);
    let mut sum = id.clone();
    let mut c = id.clone();
    let mut upow = id.clone();
    for k in 1..=dim + 1 {
        upow = upow.mul(u)?;
        if upow.is_zero() {
            return Ok(sum);
        }
        let l = BigRational::from_integer(((k - 1) as i64).into());
        let step = id.scale(&l).sub(v)?.scale(&BigRational::new(1.into(), (k as i64).into()));
        c = c.mul(&step)?;
        sum = sum.add(&c.mul(&upow)?)?;
    }
    Err(RepError::NonTerminating("q-power base is not nilpotent".into()))
}

/// Exact image of one factor.
pub fn factor_matrix(f: &TwistFactor<Rat>, pres: &Presentation<Rat>, reps: &[&MatrixRep]) -> Result<RepMatrix, RepError> {
    match f {
        TwistFactor::Exp { arg, base: None } => evaluate(arg, pres, reps)?.exp_nilpotent(),
        TwistFactor::Exp { .. } => Err(RepError::Unsupported("q-exponential at the matrix level".into())),
        TwistFactor::Power(p) => match &p.exponent {
            PowerExponent::Additive(v) => heine(&evaluate(&p.u, pres, reps)?, &evaluate(v, pres, reps)?),
            PowerExponent::GroupLike(_) => Err(RepError::Unsupported("group-like exponent at the matrix level".into())),
        },
        TwistFactor::Series(s) => evaluate(s, pres, reps),
    }
}

/// Exact image of a twist, factor by factor.
pub fn evaluate_twist(f: &TwistElement<Rat>, reps: &[&MatrixRep]) -> Result<RepMatrix, RepError> {
    let dim = reps.iter().map(|r| r.dim).product();
    let mut acc = RepMatrix::identity(dim);
    for x in f.factors() {
        acc = acc.mul(&factor_matrix(x, f.presentation(), reps)?)?;
    }
    Ok(acc)
}

/// The factors of `F_p(n, a)` as exact matrices on `reps[0] ⊗ reps[1]`:
/// those of `(ι⊗ι)(F̄ᵃᶠᶠ)` followed by those of `Ψ_n`.
pub fn fp_factors(n: usize, a: &Rat, reps: [&MatrixRep; 2]) -> Result<Vec<RepMatrix>, RepError> {
    let variant = iota_variant_for_r(n, a)?;
    let (src, fbar) = match n {
        3 => {
            let c = f2bar_context()?;
            let f = build_f2bar_aff(&c, FBAR_ORDER)?;
            (c, f)
        }
        _ => {
            let c = f3bar_context()?;
            let f = build_f3bar_aff(&c, FBAR_ORDER)?;
            (c, f)
        }
    };
    let pulled = [reps[0].pullback(&variant)?, reps[1].pullback(&variant)?];
    let mut out = Vec::new();
    for f in fbar.factors() {
        out.push(factor_matrix(f, &src.pres, &[&pulled[0], &pulled[1]])?);
    }
    for pairs in psi_args(reps[0], reps[1], n)? {
        let mut arg = RepMatrix::zero(reps[0].dim * reps[1].dim);
        for (l, r) in pairs {
            arg = arg.add(&l.kron(&r))?;
        }
        out.push(arg.exp_nilpotent()?);
    }
    Ok(out)
}

pub fn fp_matrix(n: usize, a: &Rat, reps: [&MatrixRep; 2]) -> Result<RepMatrix, RepError> {
    let dim = reps[0].dim * reps[1].dim;
    fp_factors(n, a, reps)?.iter().try_fold(RepMatrix::identity(dim), |acc, f| acc.mul(f))
}

/// `R = F₂₁F⁻¹` on `V⊗V`, `V` a single representation.
pub fn rp_matrix(n: usize, a: &Rat, rep: &MatrixRep) -> Result<RepMatrix, RepError> {
    let factors = fp_factors(n, a, [rep, rep])?;
    let dim = rep.dim * rep.dim;
    let mut f = RepMatrix::identity(dim);
    let mut finv = RepMatrix::identity(dim);
    for x in &factors {
        f = f.mul(x)?;
        finv = x.inverse()?.mul(&finv)?;
    }
    f.permute_legs(&[rep.dim, rep.dim], &[1, 0])?.mul(&finv)
}

/// Exact image of a universal two-leg element in `V⊗V`.
pub fn evaluate_pair(x: &TensorElement<Rat>, pres: &Presentation<Rat>, rep: &MatrixRep) -> Result<RepMatrix, RepError> {
    evaluate(x, pres, &[rep, rep])
}
