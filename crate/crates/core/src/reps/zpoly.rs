use crate::scalars::{Rat, ZetaSeries};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Exact polynomial in ζ with rational coefficients, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly(Vec<BigRational>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut v: Vec<BigRational>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        ZPoly(v)
    }

    /// Coefficients of a series below its order; `None` if the top coefficient
    /// is set (the series may be cut off). Order-0 series are constants.
    pub fn from_series(s: &ZetaSeries<Rat>) -> Option<Self> {
        if s.order() > 0 && !s.coeff(s.order()).0.is_zero() {
            return None;
        }
        Some(Self::from_truncated(s))
    }

    pub fn from_truncated(s: &ZetaSeries<Rat>) -> Self {
        Self::from_coeffs(s.coeffs().iter().map(|c| c.0.clone()).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.0.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let (long, short) = if self.0.len() >= o.0.len() { (self, o) } else { (o, self) };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(&short.0) {
            *a += b;
        }
        Self::from_coeffs(v)
    }

    pub fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.mul_trunc(o, usize::MAX)
    }

    /// Product with every degree above `max` dropped.
    pub fn mul_trunc(&self, o: &Self, max: usize) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let len = (self.0.len() + o.0.len() - 1).min(max.saturating_add(1));
        let mut v = vec![BigRational::zero(); len];
        for (i, a) in self.0.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate().take(len - i) {
                v[i + j] += a * b;
            }
        }
        Self::from_coeffs(v)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRational::zero(); k];
        v.extend(self.0.iter().cloned());
        ZPoly(v)
    }

    pub fn truncate(&self, max: usize) -> Self {
        Self::from_coeffs(self.0.iter().take(max.saturating_add(1)).cloned().collect())
    }

    pub fn add_assign(&mut self, o: &Self) {
        if self.0.len() < o.0.len() {
            self.0.resize(o.0.len(), BigRational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a += b;
        }
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})ζ")?,
                _ => write!(f, "({c})ζ^{k}")?,
            }
        }
        Ok(())
    }
}
