//! Exact scalar arithmetic: integer polynomials, rational functions in a
//! root of `q`, rationals, and ζ-truncated series over either.

mod coeff;
mod qcoeff;
mod series;
mod upoly;

pub use coeff::{Coeff, Rat};
pub use qcoeff::{qint, qint_factorial, qint_factorial_base, QCoeff};
pub use series::ZetaSeries;
pub use upoly::UPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q=1: {0} is outside the localisation at q=1")]
    PoleAtOne(String),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// Value of a generic-`q` coefficient at `q = 1`.
pub fn specialize_q1(a: &QCoeff) -> Result<Rat, ScalarError> {
    a.specialize_q1().map(Rat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_qcoeff() -> impl Strategy<Value = QCoeff> {
        (
            proptest::collection::vec(-4i64..5, 1..4),
            proptest::collection::vec(-4i64..5, 1..4),
            0i64..3,
        )
            .prop_filter_map("nonzero denominator", |(n, d, s)| {
                let den = UPoly::from_i64(&d);
                if den.is_zero() {
                    return None;
                }
                Some(QCoeff::from_parts(
                    UPoly::from_i64(&n).shift(s as usize),
                    den,
                    1,
                ))
            })
    }

    proptest! {
        #[test]
        fn canonical_form_decides_equality(a in arb_qcoeff(), b in arb_qcoeff()) {
            // a*b/b == a regardless of the representative path
            if !b.is_zero() {
                let back = a.mul(&b).div(&b).unwrap();
                prop_assert_eq!(&back, &a);
                prop_assert_eq!(back.render(), a.render());
            }
            let s1 = a.add(&b).sub(&b);
            prop_assert_eq!(s1, a);
        }

        #[test]
        fn specialization_is_multiplicative(a in arb_qcoeff(), b in arb_qcoeff()) {
            if let (Ok(x), Ok(y)) = (a.specialize_q1(), b.specialize_q1()) {
                prop_assert_eq!(a.mul(&b).specialize_q1().unwrap(), x * y);
            }
        }
    }
}
