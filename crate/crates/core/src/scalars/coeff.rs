use super::qcoeff::QCoeff;
use super::ScalarError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::hash::Hash;

/// Exact coefficient ring used by the noncommutative engine.
///
/// Implemented by [`QCoeff`] (generic `q`) and [`Rat`] (the specialised
/// ring at `q = 1`, where every `t`-power evaluates to one).
pub trait Coeff: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;
    fn from_int(n: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    /// `t^k` in a field with root degree `d`.
    fn t_pow(k: i64, d: u32) -> Self;
    /// `q^k`.
    fn q_pow(k: i64, d: u32) -> Self {
        Self::t_pow(k * d as i64, d)
    }
    fn render(&self) -> String;
    fn parse_text(s: &str) -> Result<Self, ScalarError>;
}

impl Coeff for QCoeff {
    fn zero() -> Self {
        QCoeff::zero()
    }
    fn one() -> Self {
        QCoeff::one()
    }
    fn is_zero(&self) -> bool {
        QCoeff::is_zero(self)
    }
    fn is_one(&self) -> bool {
        QCoeff::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        QCoeff::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QCoeff::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QCoeff::mul(self, other)
    }
    fn neg(&self) -> Self {
        QCoeff::neg(self)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        QCoeff::inv(self)
    }
    fn from_int(n: i64) -> Self {
        QCoeff::from_int(n)
    }
    fn from_rational(r: &BigRational) -> Self {
        QCoeff::from_rational(r)
    }
    fn t_pow(k: i64, d: u32) -> Self {
        QCoeff::t_pow(k, d)
    }
    fn render(&self) -> String {
        QCoeff::render(self)
    }
    fn parse_text(s: &str) -> Result<Self, ScalarError> {
        s.parse()
    }
}

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(n: i64, d: i64) -> Self {
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl Display for Rat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Coeff for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.0.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }
    fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_rational(r: &BigRational) -> Self {
        Rat(r.clone())
    }
    fn t_pow(_k: i64, _d: u32) -> Self {
        Self::one()
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn parse_text(s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        let bad = || ScalarError::Parse(s.to_string());
        let r = match s.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                if b.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                BigRational::new(a, b)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
        };
        Ok(Rat(r))
    }
}
