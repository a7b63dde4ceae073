//! Dense univariate polynomials over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Polynomial in `t` with coefficients stored low degree first.
/// The zero polynomial has no coefficients; otherwise the last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<BigInt>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(v)
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
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
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::from_coeffs(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: v }
    }

    /// Lowest power of `t` with a nonzero coefficient.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divide by `t^k`; the caller guarantees `k <= valuation()`.
    pub fn unshift(&self, k: usize) -> Self {
        UPoly {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        }
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division by a scalar; every coefficient must be divisible.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// Exact division in `Z[t]`. Panics if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero polynomial");
        if other.is_one() {
            return self.clone();
        }
        if self.is_zero() {
            return Self::zero();
        }
        let db = other.coeffs.len() - 1;
        let lb = other.lead().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < other.coeffs.len() {
            panic!("inexact polynomial division");
        }
        let mut quo = vec![BigInt::zero(); rem.len() - db];
        for i in (0..quo.len()).rev() {
            let c = &rem[i + db];
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lb);
            assert!(r.is_zero(), "inexact polynomial division");
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[i + j] -= &q * b;
            }
            quo[i] = q;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "inexact polynomial division"
        );
        Self::from_coeffs(quo)
    }

    /// Pseudo-remainder of `self` by `other`.
    fn pseudo_rem(&self, other: &Self) -> Self {
        let db = other.coeffs.len() - 1;
        let lb = other.lead().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().unwrap().clone();
            // r <- lb * r - lr * t^(dr-db) * other
            r = r.scale(&lb).sub(&other.scale(&lr).shift(dr - db));
        }
        r
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        let mut p = if c.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&c)
        };
        if p.lead().unwrap().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Greatest common divisor in `Z[t]`, normalised to a positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let cg = self.content().gcd(&other.content());
        if self.is_constant() || other.is_constant() {
            return Self::constant(cg);
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&cg)
    }

    /// Render with variable name `var`, highest degree first, e.g. `3*t^2-t+1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            match k {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if !a.is_one() {
                        out.push_str(&a.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }

    /// Parse the format produced by [`UPoly::render`].
    pub fn parse(s: &str, var: &str) -> Option<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return None;
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' {
                neg = true;
            } else if ch != '+' {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        let mut p = Self::zero();
        for (neg, body) in terms {
            if body.is_empty() {
                return None;
            }
            let (c, k) = if let Some(pos) = body.find(var) {
                let head = &body[..pos];
                let tail = &body[pos + var.len()..];
                let c = if head.is_empty() {
                    BigInt::one()
                } else {
                    head.strip_suffix('*')?.parse::<BigInt>().ok()?
                };
                let k = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')?.parse::<usize>().ok()?
                };
                (c, k)
            } else {
                (body.parse::<BigInt>().ok()?, 0)
            };
            let c = if neg { -c } else { c };
            p = p.add(&Self::monomial(c, k));
        }
        Some(p)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_shared_factor() {
        // (t-1)(t+2) and (t-1)(t-3)
        let a = UPoly::from_i64(&[-2, 1, 1]);
        let b = UPoly::from_i64(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), UPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = UPoly::from_i64(&[-1, 0, 1]);
        let b = UPoly::from_i64(&[-1, 1]);
        assert_eq!(a.div_exact(&b), UPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn render_parse_roundtrip() {
        let p = UPoly::from_i64(&[1, -1, 0, 3, -12]);
        let s = p.render("t");
        assert_eq!(s, "-12*t^4+3*t^3-t+1");
        assert_eq!(UPoly::parse(&s, "t"), Some(p));
    }
}
