use super::{AlgebraContext, TwistError};
use crate::ncalg::TensorElement;
use crate::qcalc::log1p;
use crate::scalars::{Coeff, Rat};

/// Arithmetic that the `ι` tables and `Ψ` are written in. Implemented by
/// truncated universal elements and by exact representation matrices.
pub trait Carrier {
    type El: Clone;
    fn gen(&self, name: &str) -> Result<Self::El, TwistError>;
    fn unit(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Result<Self::El, TwistError>;
    fn scale(&self, a: &Self::El, c: &Rat) -> Self::El;
    /// `ζᵏ·a`
    fn shift(&self, a: &Self::El, k: usize) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Result<Self::El, TwistError>;
    fn inverse(&self, a: &Self::El) -> Result<Self::El, TwistError>;
    /// `ln(1 + a)`, `a` of positive ζ-valuation.
    fn log1p(&self, a: &Self::El) -> Result<Self::El, TwistError>;

    fn sub(&self, a: &Self::El, b: &Self::El) -> Result<Self::El, TwistError> {
        self.add(a, &self.scale(b, &Rat::new(-1, 1)))
    }
}

/// Single-leg elements of a context, truncated at a fixed ζ-order.
pub struct Truncated<'a> {
    pub ctx: &'a AlgebraContext<Rat>,
    pub order: usize,
}

impl Carrier for Truncated<'_> {
    type El = TensorElement<Rat>;

    fn gen(&self, name: &str) -> Result<Self::El, TwistError> {
        self.ctx.el(&[(Rat::one(), 0, name)], self.order)
    }

    fn unit(&self) -> Self::El {
        TensorElement::one(1, self.order)
    }

    fn add(&self, a: &Self::El, b: &Self::El) -> Result<Self::El, TwistError> {
        Ok(a.add(b)?)
    }

    fn scale(&self, a: &Self::El, c: &Rat) -> Self::El {
        a.scale(c)
    }

    fn shift(&self, a: &Self::El, k: usize) -> Self::El {
        a.shift(k)
    }

    fn mul(&self, a: &Self::El, b: &Self::El) -> Result<Self::El, TwistError> {
        self.ctx.mul(a, b)
    }

    fn inverse(&self, a: &Self::El) -> Result<Self::El, TwistError> {
        Ok(a.inverse(&self.ctx.pres)?)
    }

    fn log1p(&self, a: &Self::El) -> Result<Self::El, TwistError> {
        Ok(log1p(a, &self.ctx.pres)?)
    }
}
