use super::carrier::{Carrier, Truncated};
use super::rational::{build_f2bar_aff, build_f3bar_aff, f2bar_context, f3bar_context};
use super::{AlgebraContext, TwistError};
use crate::algebras::usl;
use crate::hopf::{primitive_table, twisted_coproduct, HopfError, TwistElement, TwistFactor};
use crate::ncalg::{GenId, Presentation, TensorElement, Word};
use crate::scalars::{Coeff, Rat, ZetaSeries};
use dashmap::DashMap;
use std::collections::BTreeMap;
use std::sync::Arc;

/// `U(sl_n)` with the primitive coproduct.
pub fn usl_context(n: usize) -> Result<AlgebraContext<Rat>, TwistError> {
    AlgebraContext::new(usl(n)?, primitive_table)
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

fn one_minus_zeta_e12<B: Carrier>(b: &B) -> Result<B::El, TwistError> {
    b.sub(&b.unit(), &b.shift(&b.gen("E12")?, 1))
}

/// `σ = ln(1 − ζE₁₂)`.
pub fn sigma_in<B: Carrier>(b: &B) -> Result<B::El, TwistError> {
    b.log1p(&b.scale(&b.shift(&b.gen("E12")?, 1), &rat(-1, 1)))
}

/// `e^{−σ} = (1 − ζE₁₂)⁻¹`.
pub fn exp_minus_sigma_in<B: Carrier>(b: &B) -> Result<B::El, TwistError> {
    b.inverse(&one_minus_zeta_e12(b)?)
}

/// `E_{1j} e^{−σ}`.
pub fn e1j_dressed_in<B: Carrier>(b: &B, j: usize) -> Result<B::El, TwistError> {
    b.mul(&b.gen(&format!("E1{j}"))?, &exp_minus_sigma_in(b)?)
}

/// `E′₂₄ = E₂₄ − ζE₃₄E₁₃e^{−σ}`.
pub fn e24_prime_in<B: Carrier>(b: &B) -> Result<B::El, TwistError> {
    let t = b.mul(&b.gen("E34")?, &e1j_dressed_in(b, 3)?)?;
    b.sub(&b.gen("E24")?, &b.shift(&t, 1))
}

/// Exponents of the two factors of `Ψ_n` as sums of `left ⊗ right`:
/// `ζ Σ_j E_{j2}⊗E_{1j}e^{−σ}` (`j = 3..n`) and `D₁⊗σ`.
pub fn psi_args<A: Carrier, B: Carrier>(
    left: &A,
    right: &B,
    n: usize,
) -> Result<[Vec<(A::El, B::El)>; 2], TwistError> {
    if !(3..=4).contains(&n) {
        return Err(TwistError::Unsupported(format!("Psi for n = {n}")));
    }
    let mut first = Vec::new();
    for j in 3..=n {
        first.push((
            left.gen(&format!("E{j}2"))?,
            right.shift(&e1j_dressed_in(right, j)?, 1),
        ));
    }
    Ok([first, vec![(left.gen("D1")?, sigma_in(right)?)]])
}

pub fn sigma(ctx: &AlgebraContext<Rat>, order: usize) -> Result<TensorElement<Rat>, TwistError> {
    sigma_in(&Truncated { ctx, order })
}

pub fn exp_minus_sigma(
    ctx: &AlgebraContext<Rat>,
    order: usize,
) -> Result<TensorElement<Rat>, TwistError> {
    exp_minus_sigma_in(&Truncated { ctx, order })
}

pub fn e1j_dressed(
    ctx: &AlgebraContext<Rat>,
    j: usize,
    order: usize,
) -> Result<TensorElement<Rat>, TwistError> {
    e1j_dressed_in(&Truncated { ctx, order }, j)
}

pub fn e24_prime(
    ctx: &AlgebraContext<Rat>,
    order: usize,
) -> Result<TensorElement<Rat>, TwistError> {
    e24_prime_in(&Truncated { ctx, order })
}

/// The extended Jordanian twist `exp(ζ Σ_j E_{j2}⊗E_{1j}e^{−σ}) exp(D₁⊗σ)`, `j = 3..n`.
pub fn build_psi(
    ctx: &AlgebraContext<Rat>,
    n: usize,
    order: usize,
) -> Result<TwistElement<Rat>, TwistError> {
    let t = Truncated { ctx, order };
    let factors = psi_args(&t, &t, n)?
        .into_iter()
        .map(|pairs| {
            let mut arg = TensorElement::zero(2, order);
            for (l, r) in pairs {
                arg = arg.add(&l.tensor(&r))?;
            }
            Ok(TwistFactor::Exp {
                arg: arg.truncate(order),
                base: None,
            })
        })
        .collect::<Result<_, TwistError>>()?;
    Ok(TwistElement::new(ctx.pres.clone(), 2, factors)?)
}

/// Which generator table of `ι` to use.
#[derive(Clone, Debug, PartialEq)]
pub enum IotaVariant {
    /// `ι₂` with `H̄ ↦ −2D₁`, as displayed.
    Iota2Printed,
    /// `ι₂` with `H̄ ↦ −2D₂`.
    Iota2,
    /// `ι₃` as displayed (the family member `a = −1`).
    Iota3,
    /// `ι₃⁽ᵃ⁾`.
    Iota3Family(Rat),
}

/// An algebra map `F̄⁽ⁿ⁻¹⁾ → U(sl_n)[[ζ]]` fixed on generators.
pub struct IotaMap {
    pub variant: IotaVariant,
    pub n: usize,
    pub source: AlgebraContext<Rat>,
    pub target: AlgebraContext<Rat>,
    images: BTreeMap<GenId, TensorElement<Rat>>,
    order: usize,
    cache: DashMap<Word, Arc<TensorElement<Rat>>>,
}

impl std::fmt::Debug for IotaMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IotaMap")
            .field("variant", &self.variant)
            .field("n", &self.n)
            .finish()
    }
}

fn family_parameter(variant: &IotaVariant) -> Rat {
    match variant {
        IotaVariant::Iota3Family(a) => a.clone(),
        _ => rat(-1, 1),
    }
}

/// Generator images of `ι` in any carrier over `U(sl_n)`.
pub fn iota_images<B: Carrier>(
    b: &B,
    variant: &IotaVariant,
) -> Result<Vec<(&'static str, B::El)>, TwistError> {
    let g = |name: &str| b.gen(name);
    let lin = |terms: &[(i64, &str)]| -> Result<B::El, TwistError> {
        let mut acc = b.scale(&b.unit(), &Rat::zero());
        for (c, name) in terms {
            acc = b.add(&acc, &b.scale(&g(name)?, &rat(*c, 1)))?;
        }
        Ok(acc)
    };
    Ok(match variant {
        IotaVariant::Iota2Printed | IotaVariant::Iota2 => {
            let d = if *variant == IotaVariant::Iota2 {
                "D2"
            } else {
                "D1"
            };
            vec![
                ("H", lin(&[(-2, d)])?),
                ("f0", e1j_dressed_in(b, 3)?),
                ("f1", g("E23")?),
            ]
        }
        IotaVariant::Iota3 | IotaVariant::Iota3Family(_) => {
            let a = family_parameter(variant);
            if a.is_zero() {
                return Err(TwistError::Unsupported("a = 0".into()));
            }
            let ai = a.inv()?;
            vec![
                ("Ha", lin(&[(1, "D2"), (-2, "D3")])?),
                ("Hb", lin(&[(1, "D3"), (-2, "D2")])?),
                ("f0", b.scale(&e1j_dressed_in(b, 4)?, &ai)),
                ("f1", b.scale(&e24_prime_in(b)?, &ai.neg())),
                ("f2", e1j_dressed_in(b, 3)?),
                ("f3", g("E23")?),
                ("ea", b.scale(&g("E43")?, &a)),
                ("em", b.scale(&g("E34")?, &ai)),
            ]
        }
    })
}

pub fn build_iota(variant: IotaVariant, order: usize) -> Result<IotaMap, TwistError> {
    let (source, n) = match variant {
        IotaVariant::Iota2Printed | IotaVariant::Iota2 => (f2bar_context()?, 3),
        _ => (f3bar_context()?, 4),
    };
    let target = usl_context(n)?;
    let images = iota_images(
        &Truncated {
            ctx: &target,
            order,
        },
        &variant,
    )?;
    let images = images
        .into_iter()
        .map(|(g, x)| Ok((source.pres.gen(g)?, x)))
        .collect::<Result<_, TwistError>>()?;
    Ok(IotaMap {
        variant,
        n,
        source,
        target,
        images,
        order,
        cache: DashMap::new(),
    })
}

/// The table whose `F_p` has classical limit `classical_r(n, a)`: `ι₂` for `n = 3`, `ι₃⁽⁻ᵃ⁾` for `n = 4`.
pub fn iota_variant_for_r(n: usize, a: &Rat) -> Result<IotaVariant, TwistError> {
    match n {
        3 if a.is_one() => Ok(IotaVariant::Iota2),
        3 => Err(TwistError::Unsupported("the a-family exists for n = 4 only".into())),
        4 if a.is_zero() => Err(TwistError::Unsupported("a = 0".into())),
        4 => Ok(IotaVariant::Iota3Family(a.neg())),
        _ => Err(TwistError::Unsupported(format!("F_p for n = {n}"))),
    }
}

pub fn iota_for_r(n: usize, a: &Rat, order: usize) -> Result<IotaMap, TwistError> {
    build_iota(iota_variant_for_r(n, a)?, order)
}

impl IotaMap {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn image(&self, g: &str) -> Result<&TensorElement<Rat>, TwistError> {
        let id = self.source.pres.gen(g)?;
        self.images
            .get(&id)
            .ok_or_else(|| TwistError::Unsupported(format!("no image for {g}")))
    }

    fn word(&self, w: &Word) -> Result<Arc<TensorElement<Rat>>, TwistError> {
        if let Some(v) = self.cache.get(w) {
            return Ok(v.clone());
        }
        let p = &self.target.pres;
        let mut acc = TensorElement::one(1, self.order);
        for l in w.letters() {
            if l.exp < 0 {
                return Err(TwistError::Unsupported("negative power under iota".into()));
            }
            let img = self.images.get(&l.gen).ok_or_else(|| {
                TwistError::Unsupported(format!(
                    "no image for {}",
                    self.source.pres.gen_name(l.gen)
                ))
            })?;
            acc = acc.mul(&img.pow(l.exp as u32, p)?, p)?;
        }
        let acc = Arc::new(acc);
        self.cache.insert(w.clone(), acc.clone());
        Ok(acc)
    }

    /// `ι^{⊗k}` on a `k`-leg element.
    pub fn apply(&self, x: &TensorElement<Rat>) -> Result<TensorElement<Rat>, TwistError> {
        let order = x.order().min(self.order);
        let mut out = TensorElement::zero(x.legs(), order);
        for (legs, c) in x.terms() {
            let mut t = TensorElement::scalar(0, c.truncate(order));
            for w in legs.iter() {
                t = t.tensor(&*self.word(w)?);
            }
            out = out.add(&t.truncate(order))?;
        }
        Ok(out)
    }

    /// Push a twist on `F̄` through `ι ⊗ ι`.
    pub fn map_twist(&self, f: &TwistElement<Rat>) -> Result<TwistElement<Rat>, TwistError> {
        Ok(f.map_into(self.target.pres.clone(), |x| {
            self.apply(x).map_err(|e| HopfError::Shape(e.to_string()))
        })?)
    }
}

/// One failed check of [`verify_iota`].
#[derive(Clone, Debug)]
pub struct IotaFailure {
    pub check: String,
    pub residual: TensorElement<Rat>,
}

/// Every rewriting rule and every generator coproduct of the source, pushed through `ι`.
pub fn verify_iota(m: &IotaMap, psi: &TwistElement<Rat>) -> Result<Vec<IotaFailure>, TwistError> {
    let src = &m.source.pres;
    let order = m.order;
    let mut out = Vec::new();
    for r in src.rules() {
        let (b, a) = r.lhs;
        let mut rhs = TensorElement::zero(1, order);
        for (w, c) in &r.rhs {
            rhs.add_term(std::iter::once(w.clone()).collect(), c.truncate(order));
        }
        let lhs = m.target.mul(&m.images[&b], &m.images[&a])?;
        let residual = lhs.sub(&m.apply(&rhs)?)?;
        if !residual.is_zero() {
            out.push(IotaFailure {
                check: format!("relation {} {}", src.gen_name(b), src.gen_name(a)),
                residual,
            });
        }
    }
    for (g, img) in &m.images {
        let lhs = m.apply(&m.source.table.entry(*g)?.truncate(order))?;
        let rhs = twisted_coproduct(psi, img, &m.target.table, order)?;
        let residual = lhs.sub(&rhs)?;
        if !residual.is_zero() {
            out.push(IotaFailure {
                check: format!("coproduct {}", src.gen_name(*g)),
                residual,
            });
        }
    }
    Ok(out)
}

/// `F_p = (ι⊗ι)(F̄ᵃᶠᶠ)·Ψ_n`.
pub fn build_fp(m: &IotaMap, order: usize) -> Result<TwistElement<Rat>, TwistError> {
    let f_bar = match m.n {
        3 => build_f2bar_aff(&m.source, order)?,
        _ => build_f3bar_aff(&m.source, order)?,
    };
    let psi = build_psi(&m.target, m.n, order)?;
    Ok(TwistElement::compose(&m.map_twist(&f_bar)?, &psi)?)
}

/// `R = F₂₁F⁻¹`.
pub fn build_rp(f: &TwistElement<Rat>, order: usize) -> Result<TensorElement<Rat>, TwistError> {
    let x = f.expand(order)?;
    Ok(x.swap()?.mul(&f.expand_inverse(order)?, f.presentation())?)
}

/// `x∧y = x⊗y − y⊗x` for two generators.
fn wedge(
    p: &Presentation<Rat>,
    c: &Rat,
    x: &str,
    y: &str,
) -> Result<TensorElement<Rat>, TwistError> {
    let a = TensorElement::from_leg_words(p, &[x, y], ZetaSeries::constant(c.clone(), 0))?;
    let b = TensorElement::from_leg_words(p, &[y, x], ZetaSeries::constant(c.clone(), 0))?;
    Ok(a.sub(&b)?)
}

/// The boundary r-matrix `Σ_p D_p∧E_{p,p+1} + Σ_{i<j} Σ_m E_{i,j−m+1}∧E_{j,i+m}`; for `n = 4`
/// the family weights `(1/a)D₃∧E₃₄` and `a E₁₃∧E₄₃`.
pub fn classical_r(
    p: &Presentation<Rat>,
    n: usize,
    a: &Rat,
) -> Result<TensorElement<Rat>, TwistError> {
    if n < 2 {
        return Err(TwistError::Unsupported(format!("n = {n}")));
    }
    if a.is_zero() || (n != 4 && !a.is_one()) {
        return Err(TwistError::Unsupported(
            "the a-family exists for n = 4 only".into(),
        ));
    }
    let mut r = TensorElement::zero(2, 0);
    for k in 1..n {
        let c = if n == 4 && k == 3 {
            a.inv()?
        } else {
            Rat::one()
        };
        r = r.add(&wedge(p, &c, &format!("D{k}"), &format!("E{k}{}", k + 1))?)?;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for m in 1..j - i {
                let (x, y) = (format!("E{i}{}", j - m + 1), format!("E{j}{}", i + m));
                let c = if n == 4 && x == "E13" && y == "E43" {
                    a.clone()
                } else {
                    Rat::one()
                };
                r = r.add(&wedge(p, &c, &x, &y)?)?;
            }
        }
    }
    Ok(r)
}

/// The explicit six-factor display of `F_p` for `n = 4`, followed by `Ψ₄`.
pub fn build_fp4_display(
    ctx: &AlgebraContext<Rat>,
    order: usize,
) -> Result<TwistElement<Rat>, TwistError> {
    let e13 = e1j_dressed(ctx, 3, order)?;
    let e14 = e1j_dressed(ctx, 4, order)?;
    let g = |w: &str| ctx.el(&[(Rat::one(), 0, w)], order);
    let unit = g("")?;
    let power = |u: TensorElement<Rat>, v: TensorElement<Rat>| {
        TwistFactor::Power(crate::qcalc::QPowerFactor {
            u,
            exponent: crate::qcalc::PowerExponent::Additive(v),
            base: crate::qcalc::QBase::Q2,
        })
    };
    let ex = |arg: TensorElement<Rat>| TwistFactor::Exp { arg, base: None };
    let p1 = unit
        .tensor(&g("E23")?)
        .shift(1)
        .sub(&g("D3")?.tensor(&e13).shift(2))?;
    let p2 = unit.tensor(&g("E34")?).shift(1);
    let x3 = ctx
        .mul(
            &g("E43")?,
            &ctx.el(&[(Rat::one(), 0, "D2"), (Rat::one(), 0, "D3")], order)?,
        )?
        .tensor(&e14)
        .shift(2)
        .neg();
    let x4 = g("E43")?.tensor(&e24_prime(ctx, order)?).shift(1);
    let x5 = g("E43")?.tensor(&e13).shift(1);
    let p6 = unit
        .tensor(&g("E23")?)
        .shift(1)
        .sub(&g("D2")?.tensor(&e13).shift(2))?;
    let v6 = ctx
        .el(&[(Rat::one(), 0, "D2"), (rat(-1, 1), 0, "D3")], order)?
        .tensor(&unit);
    let d3 = g("D3")?.tensor(&unit);
    let factors = vec![
        power(p1.truncate(order), d3.clone()),
        power(p2.truncate(order), d3),
        ex(x3.truncate(order)),
        ex(x4.truncate(order)),
        ex(x5.truncate(order)),
        power(p6.truncate(order), v6),
    ];
    let head = TwistElement::new(ctx.pres.clone(), 2, factors)?;
    Ok(TwistElement::compose(&head, &build_psi(ctx, 4, order)?)?)
}
