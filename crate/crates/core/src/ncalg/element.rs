use super::presentation::{Presentation, WordPoly};
use super::word::{Letter, Word};
use super::NcError;
use crate::par;
use crate::scalars::{Coeff, ZetaSeries};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub type Legs = SmallVec<[Word; 3]>;

/// Element of `A^{⊗legs}[[ζ]]/ζ^{order+1}`, every leg word in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement<C: Coeff> {
    legs: usize,
    order: usize,
    terms: BTreeMap<Legs, ZetaSeries<C>>,
}

/// Single-leg element.
pub type NcPoly<C> = TensorElement<C>;

fn unit_legs(n: usize) -> Legs {
    (0..n).map(|_| Word::empty()).collect()
}

impl<C: Coeff> TensorElement<C> {
    pub fn zero(legs: usize, order: usize) -> Self {
        TensorElement {
            legs,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(legs: usize, order: usize) -> Self {
        Self::scalar(legs, ZetaSeries::one(order))
    }

    pub fn scalar(legs: usize, s: ZetaSeries<C>) -> Self {
        let order = s.order();
        let mut e = Self::zero(legs, order);
        e.add_term(unit_legs(legs), s);
        e
    }

    /// A single normal-ordered term. The caller guarantees every leg is already normal.
    pub fn term(legs: Legs, c: ZetaSeries<C>) -> Self {
        let mut e = Self::zero(legs.len(), c.order());
        e.add_term(legs, c);
        e
    }

    /// `c ζ^k g` for a generator of a one-leg algebra.
    pub fn gen(pres: &Presentation<C>, name: &str, order: usize) -> Result<Self, NcError> {
        let g = pres.gen(name)?;
        Ok(Self::term(
            SmallVec::from_elem(Word::single(g, 1), 1),
            ZetaSeries::one(order),
        ))
    }

    /// Normal form of a product of letters placed on one leg.
    pub fn from_letters(
        pres: &Presentation<C>,
        letters: &[Letter],
        c: ZetaSeries<C>,
    ) -> Result<Self, NcError> {
        let order = c.order();
        let mut e = Self::zero(1, order);
        for (w, c2) in pres.normalize_word(letters, order)? {
            e.add_term(SmallVec::from_elem(w, 1), c.mul(&c2));
        }
        Ok(e)
    }

    /// Parse a space-separated word such as `"ka^-1 e1^2"` with a scalar coefficient.
    pub fn monomial(
        pres: &Presentation<C>,
        word: &str,
        c: C,
        order: usize,
    ) -> Result<Self, NcError> {
        let letters = pres.parse_word(word)?;
        Self::from_letters(pres, &letters, ZetaSeries::constant(c, order))
    }

    /// `c ⊗`-product of one normalised word per leg, e.g. `&["ka^2", "ea"]`.
    pub fn from_leg_words(
        pres: &Presentation<C>,
        words: &[&str],
        c: ZetaSeries<C>,
    ) -> Result<Self, NcError> {
        let order = c.order();
        let mut acc = Self::scalar(0, c);
        for w in words {
            let letters = pres.parse_word(w)?;
            acc = acc.tensor(&Self::from_letters(pres, &letters, ZetaSeries::one(order))?);
        }
        Ok(acc)
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Legs, ZetaSeries<C>> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&unit_legs(self.legs))
                .is_some_and(|c| c.is_one())
    }

    pub fn add_term(&mut self, legs: Legs, c: ZetaSeries<C>) {
        debug_assert_eq!(legs.len(), self.legs);
        if c.is_zero() {
            return;
        }
        let c = c.truncate(self.order);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_legs(&self, other: &Self) -> Result<(), NcError> {
        if self.legs != other.legs {
            return Err(NcError::LegMismatch(self.legs, other.legs));
        }
        Ok(())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut e = Self::zero(self.legs, order);
        for (l, c) in &self.terms {
            e.add_term(l.clone(), c.truncate(order));
        }
        e
    }

    pub fn add(&self, other: &Self) -> Result<Self, NcError> {
        self.check_legs(other)?;
        let mut e = self.truncate(other.order);
        for (l, c) in &other.terms {
            e.add_term(l.clone(), c.clone());
        }
        Ok(e)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, NcError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_series(|c| c.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_series(|s| s.scale(c))
    }

    pub fn scale_series(&self, s: &ZetaSeries<C>) -> Self {
        let order = self.order.min(s.order());
        let mut e = Self::zero(self.legs, order);
        for (l, c) in &self.terms {
            e.add_term(l.clone(), c.mul(s));
        }
        e
    }

    /// Multiply by `ζ^k`.
    pub fn shift(&self, k: usize) -> Self {
        self.map_series(|c| c.shift(k))
    }

    fn map_series(&self, f: impl Fn(&ZetaSeries<C>) -> ZetaSeries<C>) -> Self {
        let mut e = Self::zero(self.legs, self.order);
        for (l, c) in &self.terms {
            e.add_term(l.clone(), f(c));
        }
        e
    }

    /// Convert coefficients, e.g. specialise `q → 1`.
    pub fn try_map_coeffs<D: Coeff, E>(
        &self,
        f: impl Fn(&C) -> Result<D, E>,
    ) -> Result<TensorElement<D>, E> {
        let mut e = TensorElement::zero(self.legs, self.order);
        for (l, c) in &self.terms {
            e.add_term(l.clone(), c.try_map(&f)?);
        }
        Ok(e)
    }

    /// Coefficient of `ζ^k` on each basis tensor.
    pub fn zeta_coefficient(&self, k: usize) -> BTreeMap<Legs, C> {
        self.terms
            .iter()
            .filter_map(|(l, c)| {
                let a = c.coeff(k);
                (!a.is_zero()).then(|| (l.clone(), a))
            })
            .collect()
    }

    /// The `ζ^k` part, as an element.
    pub fn zeta_part(&self, k: usize) -> Self {
        let mut e = Self::zero(self.legs, self.order);
        for (l, a) in self.zeta_coefficient(k) {
            e.add_term(l, ZetaSeries::monomial(a, k, self.order));
        }
        e
    }

    /// Lowest ζ-degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.valuation()).min()
    }

    /// Leg-wise product in normal form.
    pub fn mul(&self, other: &Self, pres: &Presentation<C>) -> Result<Self, NcError> {
        self.check_legs(other)?;
        let order = self.order.min(other.order);
        if self.is_one() {
            return Ok(other.truncate(order));
        }
        if other.is_one() {
            return Ok(self.truncate(order));
        }
        let left: Vec<(&Legs, &ZetaSeries<C>)> = self.terms.iter().collect();
        let right: Vec<(&Legs, &ZetaSeries<C>)> = other.terms.iter().collect();
        let legs = self.legs;
        par::map_reduce(
            &left,
            || Ok(Self::zero(legs, order)),
            |(la, ca)| {
                let mut part = Self::zero(legs, order);
                for (lb, cb) in &right {
                    let c = ca.mul(cb);
                    if c.truncate(order).is_zero() {
                        continue;
                    }
                    let factors: Vec<std::sync::Arc<WordPoly<C>>> = la
                        .iter()
                        .zip(lb.iter())
                        .map(|(x, y)| pres.mul_words(x, y, order))
                        .collect::<Result<_, _>>()?;
                    product_into(&mut part, &factors, c);
                }
                Ok(part)
            },
            |a: Result<Self, NcError>, b: Result<Self, NcError>| {
                let mut a = a?;
                for (l, c) in b?.terms {
                    a.add_term(l, c);
                }
                Ok(a)
            },
        )
    }

    /// Sum of `Π_k self` for `k` up to the truncation, assuming positive valuation.
    pub fn pow(&self, k: u32, pres: &Presentation<C>) -> Result<Self, NcError> {
        let mut acc = Self::one(self.legs, self.order);
        for _ in 0..k {
            acc = acc.mul(self, pres)?;
        }
        Ok(acc)
    }

    /// Inverse, when the ζ⁰ part is an invertible monomial (scalar times Cartan words).
    pub fn inverse(&self, pres: &Presentation<C>) -> Result<Self, NcError> {
        let lead = self.zeta_coefficient(0);
        if lead.len() != 1 {
            return Err(NcError::NotInvertible);
        }
        let (l0, c0) = lead.into_iter().next().unwrap();
        if !l0
            .iter()
            .all(|w| w.letters().iter().all(|x| pres.is_cartan(x.gen)))
        {
            return Err(NcError::NotInvertible);
        }
        let inv_legs: Legs = l0
            .iter()
            .map(|w| {
                Word::from_letters(w.letters().iter().map(|x| Letter {
                    gen: x.gen,
                    exp: -x.exp,
                }))
            })
            .collect();
        let x0_inv = Self::term(inv_legs, ZetaSeries::constant(c0.inv()?, self.order));
        // x = x0 (1 + n) with n = x0⁻¹ (x − x0)
        let x0 = Self::term(l0, ZetaSeries::constant(c0, self.order));
        let n = x0_inv.mul(&self.sub(&x0)?, pres)?;
        let mut sum = Self::one(self.legs, self.order);
        let mut p = Self::one(self.legs, self.order);
        let mneg = n.neg();
        for _ in 0..self.order {
            p = p.mul(&mneg, pres)?;
            if p.is_zero() {
                break;
            }
            sum = sum.add(&p)?;
        }
        sum.mul(&x0_inv, pres)
    }

    /// Tensor product `self ⊗ other`; both factors must already be normal.
    pub fn tensor(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut e = Self::zero(self.legs + other.legs, order);
        for (la, ca) in &self.terms {
            for (lb, cb) in &other.terms {
                let l: Legs = la.iter().chain(lb.iter()).cloned().collect();
                e.add_term(l, ca.mul(cb));
            }
        }
        e
    }

    /// Place leg `i` of `self` at position `positions[i]` of a `total`-leg tensor, units elsewhere.
    pub fn embed(&self, positions: &[usize], total: usize) -> Result<Self, NcError> {
        if positions.len() != self.legs || positions.iter().any(|&p| p >= total) {
            return Err(NcError::LegMismatch(self.legs, positions.len()));
        }
        let mut e = Self::zero(total, self.order);
        for (l, c) in &self.terms {
            let mut nl = unit_legs(total);
            for (i, &p) in positions.iter().enumerate() {
                nl[p] = l[i].clone();
            }
            e.add_term(nl, c.clone());
        }
        Ok(e)
    }

    /// Permute legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, NcError> {
        if perm.len() != self.legs {
            return Err(NcError::LegMismatch(self.legs, perm.len()));
        }
        let mut e = Self::zero(self.legs, self.order);
        for (l, c) in &self.terms {
            e.add_term(perm.iter().map(|&p| l[p].clone()).collect(), c.clone());
        }
        Ok(e)
    }

    /// `x₂₁` for a two-leg element.
    pub fn swap(&self) -> Result<Self, NcError> {
        self.permute(&[1, 0])
    }

    /// Human-readable rendering, deterministic.
    pub fn render(&self, pres: &Presentation<C>) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let legs: Vec<String> = l.iter().map(|w| pres.render_word(w)).collect();
            let series: Vec<String> = c
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(k, a)| {
                    if k == 0 {
                        format!("({})", a.render())
                    } else {
                        format!("({})z^{k}", a.render())
                    }
                })
                .collect();
            let _ = write!(s, "[{}]·{}", series.join("+"), legs.join(" ⊗ "));
        }
        s
    }
}

/// Add `c · Π_i factors[i]` (cartesian product over legs) into `out`.
fn product_into<C: Coeff>(
    out: &mut TensorElement<C>,
    factors: &[std::sync::Arc<WordPoly<C>>],
    c: ZetaSeries<C>,
) {
    fn rec<C: Coeff>(
        out: &mut TensorElement<C>,
        factors: &[std::sync::Arc<WordPoly<C>>],
        i: usize,
        cur: &mut Legs,
        c: &ZetaSeries<C>,
    ) {
        if i == factors.len() {
            out.add_term(cur.clone(), c.clone());
            return;
        }
        for (w, ci) in factors[i].iter() {
            let c2 = c.mul(ci);
            if c2.is_zero() {
                continue;
            }
            cur.push(w.clone());
            rec(out, factors, i + 1, cur, &c2);
            cur.pop();
        }
    }
    let mut cur = Legs::new();
    rec(out, factors, 0, &mut cur, &c);
}
