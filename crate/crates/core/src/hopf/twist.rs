use super::{CoproductTable, HopfError};
use crate::ncalg::{Presentation, TensorElement};
use crate::qcalc::{self, one_minus_q, PowerExponent, QBase, QPowerFactor, Variant};
use crate::scalars::Coeff;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

/// One primitive factor of a twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistFactor<C: Coeff> {
    /// `exp_{base}(arg)`, regular normalisation; `None` is the ordinary exponential.
    Exp {
        arg: TensorElement<C>,
        base: Option<QBase>,
    },
    /// Heine q-power `(1 − u)^{(v)}`.
    Power(QPowerFactor<C>),
    /// Explicit series.
    Series(TensorElement<C>),
}

impl<C: Coeff> TwistFactor<C> {
    /// Singular `e_{base}(arg) = exp_{base}(arg/(1 − q^{±2}))`.
    pub fn singular(
        arg: TensorElement<C>,
        base: QBase,
        pres: &Presentation<C>,
    ) -> Result<Self, HopfError> {
        let s = one_minus_q::<C>(base, pres.root_degree())
            .inv()
            .map_err(qcalc::QcalcError::from)?;
        Ok(TwistFactor::Exp {
            arg: arg.scale(&s),
            base: Some(base),
        })
    }

    pub fn legs(&self) -> usize {
        match self {
            TwistFactor::Exp { arg, .. } => arg.legs(),
            TwistFactor::Power(f) => f.u.legs(),
            TwistFactor::Series(s) => s.legs(),
        }
    }

    pub fn expand(
        &self,
        order: usize,
        pres: &Presentation<C>,
    ) -> Result<TensorElement<C>, HopfError> {
        Ok(match self {
            TwistFactor::Exp { arg, base: Some(b) } => {
                qcalc::qexp(&arg.truncate(order), Variant::Regular, *b, pres)?
            }
            TwistFactor::Exp { arg, base: None } => qcalc::exp(&arg.truncate(order), pres)?,
            TwistFactor::Power(f) => {
                let exponent = match &f.exponent {
                    PowerExponent::GroupLike(g) => PowerExponent::GroupLike(g.truncate(order)),
                    PowerExponent::Additive(v) => PowerExponent::Additive(v.truncate(order)),
                };
                qcalc::qpow(
                    &QPowerFactor {
                        u: f.u.truncate(order),
                        exponent,
                        base: f.base,
                    },
                    pres,
                )?
            }
            TwistFactor::Series(s) => s.truncate(order),
        })
    }

    /// Apply a map to every element carried by the factor.
    pub fn map<D: Coeff>(
        &self,
        f: &impl Fn(&TensorElement<C>) -> Result<TensorElement<D>, HopfError>,
    ) -> Result<TwistFactor<D>, HopfError> {
        Ok(match self {
            TwistFactor::Exp { arg, base } => TwistFactor::Exp {
                arg: f(arg)?,
                base: *base,
            },
            TwistFactor::Power(p) => TwistFactor::Power(QPowerFactor {
                u: f(&p.u)?,
                exponent: match &p.exponent {
                    PowerExponent::GroupLike(g) => PowerExponent::GroupLike(f(g)?),
                    PowerExponent::Additive(v) => PowerExponent::Additive(f(v)?),
                },
                base: p.base,
            }),
            TwistFactor::Series(s) => TwistFactor::Series(f(s)?),
        })
    }
}

/// Ordered product of factors, expanded lazily with a per-order cache.
pub struct TwistElement<C: Coeff> {
    pres: Arc<Presentation<C>>,
    legs: usize,
    factors: Vec<TwistFactor<C>>,
    cache: Mutex<BTreeMap<usize, Arc<TensorElement<C>>>>,
}

impl<C: Coeff> Clone for TwistElement<C> {
    fn clone(&self) -> Self {
        TwistElement {
            pres: self.pres.clone(),
            legs: self.legs,
            factors: self.factors.clone(),
            cache: Mutex::new(self.cache.lock().map(|c| c.clone()).unwrap_or_default()),
        }
    }
}

impl<C: Coeff> std::fmt::Debug for TwistElement<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TwistElement")
            .field("algebra", &self.pres.name())
            .field("factors", &self.factors)
            .finish()
    }
}

impl<C: Coeff> TwistElement<C> {
    pub fn new(
        pres: Arc<Presentation<C>>,
        legs: usize,
        factors: Vec<TwistFactor<C>>,
    ) -> Result<Self, HopfError> {
        if let Some(f) = factors.iter().find(|f| f.legs() != legs) {
            return Err(HopfError::Shape(format!(
                "factor with {} legs in a {legs}-leg twist",
                f.legs()
            )));
        }
        Ok(TwistElement {
            pres,
            legs,
            factors,
            cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn unit(pres: Arc<Presentation<C>>, legs: usize) -> Self {
        TwistElement {
            pres,
            legs,
            factors: Vec::new(),
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation<C>> {
        &self.pres
    }

    pub fn factors(&self) -> &[TwistFactor<C>] {
        &self.factors
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    /// Product of the factor expansions, truncated at `order`.
    pub fn expand(&self, order: usize) -> Result<Arc<TensorElement<C>>, HopfError> {
        if let Some(hit) = self.cache.lock().ok().and_then(|c| c.get(&order).cloned()) {
            return Ok(hit);
        }
        let mut acc = TensorElement::one(self.legs, order);
        for f in &self.factors {
            acc = acc.mul(&f.expand(order, &self.pres)?, &self.pres)?;
        }
        if !acc.zeta_part(0).is_one() {
            return Err(HopfError::NotNormalized);
        }
        let acc = Arc::new(acc);
        if let Ok(mut c) = self.cache.lock() {
            c.insert(order, acc.clone());
        }
        Ok(acc)
    }

    pub fn expand_inverse(&self, order: usize) -> Result<TensorElement<C>, HopfError> {
        self.expand(order)?
            .inverse(&self.pres)
            .map_err(|_| HopfError::NotInvertible("twist expansion".into()))
    }

    /// `outer · inner` as a single factor list.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self, HopfError> {
        if outer.pres.name() != inner.pres.name() || outer.legs != inner.legs {
            return Err(HopfError::Shape("twists live on different algebras".into()));
        }
        let factors = outer
            .factors
            .iter()
            .chain(inner.factors.iter())
            .cloned()
            .collect();
        Self::new(outer.pres.clone(), outer.legs, factors)
    }

    /// Push every factor through an algebra map (for instance `ι ⊗ ι`).
    pub fn map_into<D: Coeff>(
        &self,
        pres: Arc<Presentation<D>>,
        f: impl Fn(&TensorElement<C>) -> Result<TensorElement<D>, HopfError>,
    ) -> Result<TwistElement<D>, HopfError> {
        let factors = self
            .factors
            .iter()
            .map(|x| x.map(&f))
            .collect::<Result<_, _>>()?;
        TwistElement::new(pres, self.legs, factors)
    }
}

/// `F Δ(x) F⁻¹`.
pub fn twisted_coproduct<C: Coeff>(
    f: &TwistElement<C>,
    x: &TensorElement<C>,
    table: &CoproductTable<C>,
    order: usize,
) -> Result<TensorElement<C>, HopfError> {
    let p = f.presentation();
    let dx = table.delta_extend(&x.truncate(order))?;
    Ok(f.expand(order)?
        .mul(&dx, p)?
        .mul(&f.expand_inverse(order)?, p)?)
}

/// `F₁₂(Δ⊗id)(F)` and `F₂₃(id⊗Δ)(F)`.
pub fn cocycle_sides<C: Coeff>(
    f: &TwistElement<C>,
    table: &CoproductTable<C>,
    order: usize,
) -> Result<(TensorElement<C>, TensorElement<C>), HopfError> {
    if f.legs() != 2 {
        return Err(HopfError::Shape(
            "cocycle check needs a two-leg twist".into(),
        ));
    }
    let p = f.presentation();
    let x = f.expand(order)?;
    let left = x.embed(&[0, 1], 3)?.mul(&table.apply_on_leg(&x, 0)?, p)?;
    let right = x.embed(&[1, 2], 3)?.mul(&table.apply_on_leg(&x, 1)?, p)?;
    Ok((left, right))
}

/// `F₁₂(Δ⊗id)(F) − F₂₃(id⊗Δ)(F)`; zero iff `F` is a twist to this order.
pub fn cocycle_residual<C: Coeff>(
    f: &TwistElement<C>,
    table: &CoproductTable<C>,
    order: usize,
) -> Result<TensorElement<C>, HopfError> {
    let (l, r) = cocycle_sides(f, table, order)?;
    Ok(l.sub(&r)?)
}

/// `F₂₃(id⊗Δ)(F)·(F₁₂(Δ⊗id)(F))⁻¹`.
pub fn associator<C: Coeff>(
    f: &TwistElement<C>,
    table: &CoproductTable<C>,
    order: usize,
) -> Result<TensorElement<C>, HopfError> {
    let (l, r) = cocycle_sides(f, table, order)?;
    let p = f.presentation();
    let li = l
        .inverse(p)
        .map_err(|_| HopfError::NotInvertible("cocycle side".into()))?;
    Ok(r.mul(&li, p)?)
}
