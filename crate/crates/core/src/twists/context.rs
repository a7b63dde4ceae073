use super::TwistError;
use crate::hopf::{CoproductTable, HopfError};
use crate::ncalg::{check_local_confluence, Presentation, TensorElement};
use crate::scalars::{Coeff, ZetaSeries};
use std::sync::Arc;

/// A presentation together with its coproduct.
#[derive(Clone, Debug)]
pub struct AlgebraContext<C: Coeff> {
    pub pres: Arc<Presentation<C>>,
    pub table: CoproductTable<C>,
}

impl<C: Coeff> AlgebraContext<C> {
    /// Checks degree-3 confluence before accepting the presentation.
    pub fn new(
        pres: Presentation<C>,
        table: impl FnOnce(Arc<Presentation<C>>) -> Result<CoproductTable<C>, HopfError>,
    ) -> Result<Self, TwistError> {
        let bad = check_local_confluence(&pres, 3)?;
        if !bad.is_empty() {
            return Err(TwistError::Unsupported(format!(
                "{} is not confluent at {}",
                pres.name(),
                bad[0].word
            )));
        }
        let pres = Arc::new(pres);
        Ok(AlgebraContext {
            table: table(pres.clone())?,
            pres,
        })
    }

    /// `Σ c ζᵏ w` on one leg.
    pub fn el(
        &self,
        terms: &[(C, usize, &str)],
        order: usize,
    ) -> Result<TensorElement<C>, TwistError> {
        let mut acc = TensorElement::zero(1, order);
        for (c, k, w) in terms {
            acc = acc.add(&TensorElement::from_leg_words(
                &self.pres,
                &[w],
                ZetaSeries::monomial(c.clone(), *k, order),
            )?)?;
        }
        Ok(acc)
    }

    /// `Σ c ζᵏ w₁ ⊗ w₂`.
    pub fn el2(
        &self,
        terms: &[(C, usize, &str, &str)],
        order: usize,
    ) -> Result<TensorElement<C>, TwistError> {
        let mut acc = TensorElement::zero(2, order);
        for (c, k, a, b) in terms {
            acc = acc.add(&TensorElement::from_leg_words(
                &self.pres,
                &[a, b],
                ZetaSeries::monomial(c.clone(), *k, order),
            )?)?;
        }
        Ok(acc)
    }

    pub fn mul(
        &self,
        a: &TensorElement<C>,
        b: &TensorElement<C>,
    ) -> Result<TensorElement<C>, TwistError> {
        Ok(a.mul(b, &self.pres)?)
    }

    /// `x y x⁻¹`.
    pub fn conj(
        &self,
        x: &TensorElement<C>,
        y: &TensorElement<C>,
    ) -> Result<TensorElement<C>, TwistError> {
        let xi = x.inverse(&self.pres)?;
        Ok(x.mul(y, &self.pres)?.mul(&xi, &self.pres)?)
    }
}
