//! Rational functions in `t`, where the deformation parameter is `q = t^d`.

use super::upoly::UPoly;
use super::ScalarError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Exact element of `Q(t)` with `q = t^d`.
///
/// Always stored reduced: `gcd(num, den) = 1` in `Z[t]` and the leading
/// coefficient of `den` is positive. Constants carry `d = 1`, so the root
/// degree only matters once `t` actually appears.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QCoeff {
    num: UPoly,
    den: UPoly,
    d: u32,
}

impl QCoeff {
    pub fn zero() -> Self {
        QCoeff {
            num: UPoly::zero(),
            den: UPoly::one(),
            d: 1,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_parts(UPoly::constant(BigInt::from(n)), UPoly::one(), 1)
    }

    pub fn from_ratio(n: i64, m: i64) -> Self {
        Self::from_parts(
            UPoly::constant(BigInt::from(n)),
            UPoly::constant(BigInt::from(m)),
            1,
        )
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(
            UPoly::constant(r.numer().clone()),
            UPoly::constant(r.denom().clone()),
            1,
        )
    }

    /// `t^k` (negative `k` allowed) in the field with root degree `d`.
    pub fn t_pow(k: i64, d: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        let m = UPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k > 0 {
            Self::from_parts(m, UPoly::one(), d)
        } else {
            Self::from_parts(UPoly::one(), m, d)
        }
    }

    /// `q^k = t^(k d)`.
    pub fn q_pow(k: i64, d: u32) -> Self {
        Self::t_pow(k * d as i64, d)
    }

    /// Canonicalising constructor. Panics on a zero denominator.
    pub fn from_parts(num: UPoly, den: UPoly, d: u32) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut c = QCoeff { num, den, d };
        c.reduce();
        c
    }

    pub fn new(num: UPoly, den: UPoly, d: u32) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_parts(num, den, d))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UPoly::one();
            self.d = 1;
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        if self.den.lead().unwrap().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        if self.num.is_constant() && self.den.is_constant() {
            self.d = 1;
        }
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn root_degree(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn is_const(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    fn joint_degree(&self, other: &Self) -> u32 {
        match (self.is_const(), other.is_const()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(
                    self.d, other.d,
                    "root degree mismatch: t^{} vs t^{}",
                    self.d, other.d
                );
                self.d
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let d = self.joint_degree(other);
        if self.den == other.den {
            return Self::from_parts(self.num.add(&other.num), self.den.clone(), d);
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::from_parts(num, self.den.mul(&other.den), d)
    }

    pub fn neg(&self) -> Self {
        QCoeff {
            num: self.num.neg(),
            den: self.den.clone(),
            d: self.d,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let d = self.joint_degree(other);
        // cross-cancel keeps the intermediate sizes down
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.div_exact(&g1), other.den.div_exact(&g1))
        };
        let (n2, d1) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        let mut c = QCoeff {
            num: n1.mul(&n2),
            den: d1.mul(&d2),
            d,
        };
        if c.den.lead().unwrap().is_negative() {
            c.num = c.num.neg();
            c.den = c.den.neg();
        }
        if c.is_const() {
            c.d = 1;
        }
        c
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_parts(self.den.clone(), self.num.clone(), self.d))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Value at `t = 1`, i.e. the specialisation `q = 1`.
    pub fn specialize_q1(&self) -> Result<BigRational, ScalarError> {
        let den = self.den.eval_at_one();
        if den.is_zero() {
            return Err(ScalarError::PoleAtOne(self.to_string()));
        }
        Ok(BigRational::new(self.num.eval_at_one(), den))
    }

    /// Canonical text form `p(t)/q(t) [q=t^d]`.
    pub fn render(&self) -> String {
        format!(
            "({})/({}) [q=t^{}]",
            self.num.render("t"),
            self.den.render("t"),
            self.d
        )
    }
}

impl fmt::Display for QCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for QCoeff {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ScalarError::Parse(s.to_string());
        let s = s.trim();
        let (body, d) = match s.rfind('[') {
            Some(pos) => {
                let tag = s[pos..].trim();
                let d = tag
                    .strip_prefix("[q=t^")
                    .and_then(|r| r.strip_suffix(']'))
                    .and_then(|r| r.trim().parse::<u32>().ok())
                    .ok_or_else(bad)?;
                (s[..pos].trim(), d)
            }
            None => (s, 1),
        };
        if d == 0 {
            return Err(bad());
        }
        let strip = |x: &str| -> String {
            let x = x.trim();
            x.strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .unwrap_or(x)
                .to_string()
        };
        let (n, m) = match split_top_level_slash(body) {
            Some((a, b)) => (strip(a), strip(b)),
            None => (strip(body), "1".to_string()),
        };
        let num = UPoly::parse(&n, "t").ok_or_else(bad)?;
        let den = UPoly::parse(&m, "t").ok_or_else(bad)?;
        let c = QCoeff::new(num, den, d)?;
        Ok(c)
    }
}

fn split_top_level_slash(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// `(k)_{q^2}! = prod_{j=1..k} (1 - q^{2j}) / (1 - q^2)`.
pub fn qint_factorial(k: u32, d: u32) -> QCoeff {
    qint_factorial_base(k, 2, d)
}

/// `(k)_{q^b}!` for base `q^b`, `b` possibly negative.
pub fn qint_factorial_base(k: u32, b: i64, d: u32) -> QCoeff {
    let mut acc = QCoeff::one();
    for j in 1..=k as i64 {
        acc = acc.mul(&qint(j, b, d));
    }
    acc
}

/// `(j)_{q^b} = (1 - q^{bj}) / (1 - q^b)`.
pub fn qint(j: i64, b: i64, d: u32) -> QCoeff {
    let one = QCoeff::one();
    let num = one.sub(&QCoeff::q_pow(b * j, d));
    let den = one.sub(&QCoeff::q_pow(b, d));
    num.div(&den).expect("q^b != 1 for b != 0")
}

impl From<i64> for QCoeff {
    fn from(n: i64) -> Self {
        QCoeff::from_int(n)
    }
}

impl Zero for QCoeff {
    fn zero() -> Self {
        QCoeff::zero()
    }
    fn is_zero(&self) -> bool {
        QCoeff::is_zero(self)
    }
}

impl std::ops::Add for QCoeff {
    type Output = QCoeff;
    fn add(self, rhs: Self) -> Self {
        QCoeff::add(&self, &rhs)
    }
}

impl One for QCoeff {
    fn one() -> Self {
        QCoeff::one()
    }
}

impl std::ops::Mul for QCoeff {
    type Output = QCoeff;
    fn mul(self, rhs: Self) -> Self {
        QCoeff::mul(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(d: u32) -> QCoeff {
        QCoeff::q_pow(1, d)
    }

    #[test]
    fn q_minus_one_plus_one() {
        let a = q(1).sub(&QCoeff::one());
        assert_eq!(a.add(&QCoeff::one()), q(1));
    }

    #[test]
    fn cancels_common_factor() {
        let one = QCoeff::one();
        let num = q(1).mul(&q(1)).sub(&one);
        let den = q(1).sub(&one);
        let r = num.div(&den).unwrap();
        assert_eq!(r, q(1).add(&one));
    }

    #[test]
    fn fractional_powers_with_root_degree_three() {
        let a = QCoeff::t_pow(2, 3);
        let b = QCoeff::t_pow(4, 3);
        assert_eq!(a.mul(&b), QCoeff::q_pow(2, 3));
        assert_eq!(a.render(), "(t^2)/(1) [q=t^3]");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            QCoeff::one().div(&QCoeff::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn specialization() {
        let one = QCoeff::one();
        let r = q(1).mul(&q(1)).sub(&one).div(&q(1).sub(&one)).unwrap();
        assert_eq!(
            r.specialize_q1().unwrap(),
            BigRational::from_integer(2.into())
        );
        let pole = one.div(&q(1).sub(&one)).unwrap();
        assert!(matches!(
            pole.specialize_q1(),
            Err(ScalarError::PoleAtOne(_))
        ));
        // q^{-h} = 1 + (q-1) X: the scalar part specialises to 1
        assert_eq!(one.specialize_q1().unwrap(), BigRational::one());
    }

    #[test]
    fn q_factorials() {
        let d = 1;
        assert_eq!(qint_factorial(0, d), QCoeff::one());
        let q2 = QCoeff::q_pow(2, d);
        let one = QCoeff::one();
        assert_eq!(qint_factorial(2, d), one.add(&q2));
        let q4 = QCoeff::q_pow(4, d);
        let expect = one.add(&q2).mul(&one.add(&q2).add(&q4));
        assert_eq!(qint_factorial(3, d), expect);
    }

    #[test]
    fn text_roundtrip() {
        let c = QCoeff::t_pow(-2, 3).add(&QCoeff::from_ratio(-5, 7));
        let s = c.render();
        assert_eq!(s.parse::<QCoeff>().unwrap(), c);
        assert_eq!("3/4".parse::<QCoeff>().unwrap(), QCoeff::from_ratio(3, 4));
    }
}
