//! Truncated power series in the deformation parameter ζ.

use super::coeff::Coeff;
use super::ScalarError;

/// `Σ_{k ≤ order} c_k ζ^k`. Coefficients above `order` are never stored and
/// trailing zero coefficients are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZetaSeries<C> {
    coeffs: Vec<C>,
    order: usize,
}

impl<C: Coeff> ZetaSeries<C> {
    pub fn zero(order: usize) -> Self {
        ZetaSeries {
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c ζ^k`, zero if `k > order`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        if k > order || c.is_zero() {
            return Self::zero(order);
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        ZetaSeries { coeffs, order }
    }

    pub fn from_coeffs(coeffs: Vec<C>, order: usize) -> Self {
        let mut s = ZetaSeries { coeffs, order };
        s.coeffs.truncate(order + 1);
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest ζ-power present (`None` for zero).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order.min(self.order))
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self.order = order;
        self.trim();
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let n = self.coeffs.len().max(other.coeffs.len()).min(order + 1);
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => C::zero(),
            });
        }
        Self::from_coeffs(v, order)
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.order = self.order.min(other.order);
        self.coeffs.truncate(self.order + 1);
        for (k, b) in other.coeffs.iter().enumerate().take(self.order + 1) {
            if k < self.coeffs.len() {
                self.coeffs[k] = self.coeffs[k].add(b);
            } else {
                self.coeffs.push(b.clone());
            }
        }
        self.trim();
    }

    pub fn neg(&self) -> Self {
        ZetaSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        ZetaSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
            order: self.order,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        if self.is_zero() || other.is_zero() {
            return Self::zero(order);
        }
        if self.is_one() {
            return other.clone().with_order(order);
        }
        if other.is_one() {
            return self.clone().with_order(order);
        }
        let n = (self.coeffs.len() + other.coeffs.len() - 1).min(order + 1);
        let mut v = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= n {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(v, order)
    }

    /// Multiply by `ζ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(v, self.order)
    }

    /// Multiplicative inverse, exact to `order`; the constant term must be invertible.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        let c0 = self.coeff(0);
        let inv0 = c0.inv()?;
        let mut out = vec![inv0.clone()];
        for k in 1..=self.order {
            let mut acc = C::zero();
            for j in 1..=k {
                let a = self.coeff(j);
                if !a.is_zero() {
                    acc = acc.add(&a.mul(&out[k - j]));
                }
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(Self::from_coeffs(out, self.order))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> ZetaSeries<D> {
        ZetaSeries::from_coeffs(self.coeffs.iter().map(f).collect(), self.order)
    }

    pub fn try_map<D: Coeff, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<ZetaSeries<D>, E> {
        let v = self.coeffs.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(ZetaSeries::from_coeffs(v, self.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{QCoeff, Rat};
    use proptest::prelude::*;

    fn series(v: &[i64], order: usize) -> ZetaSeries<Rat> {
        ZetaSeries::from_coeffs(v.iter().map(|&c| Rat::from_int(c)).collect(), order)
    }

    #[test]
    fn truncation_discards_high_orders() {
        let a = series(&[1, 1], 2);
        let p = a.mul(&a).mul(&a);
        assert_eq!(p, series(&[1, 3, 3], 2));
    }

    #[test]
    fn inverse_of_q_series() {
        let q = QCoeff::q_pow(1, 1);
        let s = ZetaSeries::from_coeffs(vec![q.clone(), QCoeff::one(), q], 5);
        let inv = s.inverse().unwrap();
        assert!(s.mul(&inv).is_one());
    }

    proptest! {
        #[test]
        fn inverse_property(v in proptest::collection::vec(-9i64..9, 1..6), c0 in 1i64..5, n in 0usize..7) {
            let mut coeffs = vec![c0];
            coeffs.extend(v);
            let s = series(&coeffs, n);
            let inv = s.inverse().unwrap();
            prop_assert!(s.mul(&inv).is_one());
        }

        #[test]
        fn product_associative(a in proptest::collection::vec(-5i64..5, 0..5),
                               b in proptest::collection::vec(-5i64..5, 0..5),
                               c in proptest::collection::vec(-5i64..5, 0..5)) {
            let (a, b, c) = (series(&a, 4), series(&b, 4), series(&c, 4));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}
