use super::HopfError;
use crate::ncalg::{GenId, GenKind, Legs, Letter, Presentation, TensorElement, Word};
use crate::par;
use crate::scalars::{Coeff, ZetaSeries};
use dashmap::DashMap;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Truncation at which table entries are stored.
pub const TABLE_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoproductTag {
    Standard,
    KTwisted,
    Classical,
    PsiTwisted,
}

/// A coproduct fixed on generators and extended multiplicatively.
pub struct CoproductTable<C: Coeff> {
    tag: CoproductTag,
    pres: Arc<Presentation<C>>,
    entries: BTreeMap<GenId, TensorElement<C>>,
    projection: BTreeSet<GenId>,
    cache: DashMap<(Word, usize), Arc<TensorElement<C>>>,
}

impl<C: Coeff> Clone for CoproductTable<C> {
    fn clone(&self) -> Self {
        CoproductTable {
            tag: self.tag,
            pres: self.pres.clone(),
            entries: self.entries.clone(),
            projection: self.projection.clone(),
            cache: DashMap::new(),
        }
    }
}

impl<C: Coeff> std::fmt::Debug for CoproductTable<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoproductTable")
            .field("tag", &self.tag)
            .field("algebra", &self.pres.name())
            .field("entries", &self.entries.len())
            .finish()
    }
}

/// A relation whose image under Δ fails to hold.
#[derive(Clone, Debug)]
pub struct RelationResidual<C: Coeff> {
    pub relation: String,
    pub residual: TensorElement<C>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectedLeg {
    One,
    Two,
    Three,
}

impl<C: Coeff> CoproductTable<C> {
    /// Empty table; the default projection subalgebra is spanned by the Cartan generators.
    pub fn new(tag: CoproductTag, pres: Arc<Presentation<C>>) -> Self {
        let projection = pres
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, g)| g.kind == GenKind::Cartan)
            .map(|(i, _)| i as GenId)
            .collect();
        CoproductTable {
            tag,
            pres,
            entries: BTreeMap::new(),
            projection,
            cache: DashMap::new(),
        }
    }

    pub fn tag(&self) -> CoproductTag {
        self.tag
    }

    pub fn presentation(&self) -> &Arc<Presentation<C>> {
        &self.pres
    }

    pub fn entries(&self) -> &BTreeMap<GenId, TensorElement<C>> {
        &self.entries
    }

    pub fn entry(&self, g: GenId) -> Result<&TensorElement<C>, HopfError> {
        self.entries
            .get(&g)
            .ok_or_else(|| HopfError::MissingGenerator(self.pres.gen_name(g).to_string()))
    }

    pub fn set(&mut self, name: &str, delta: TensorElement<C>) -> Result<(), HopfError> {
        let g = self.pres.gen(name)?;
        if delta.legs() != 2 {
            return Err(HopfError::Shape(format!(
                "coproduct of {name} must have two legs"
            )));
        }
        self.entries.insert(g, delta);
        self.cache.clear();
        Ok(())
    }

    /// Sets `Δ(name) = Σ c ζᵏ w₁ ⊗ w₂`.
    pub fn set_terms(
        &mut self,
        name: &str,
        terms: &[(C, usize, &str, &str)],
    ) -> Result<(), HopfError> {
        let mut acc = TensorElement::zero(2, TABLE_ORDER);
        for (c, k, a, b) in terms {
            acc = acc.add(&TensorElement::from_leg_words(
                &self.pres,
                &[a, b],
                ZetaSeries::monomial(c.clone(), *k, TABLE_ORDER),
            )?)?;
        }
        self.set(name, acc)
    }

    pub fn primitive(&mut self, name: &str) -> Result<(), HopfError> {
        self.set_terms(name, &[(C::one(), 0, name, ""), (C::one(), 0, "", name)])
    }

    pub fn group_like(&mut self, name: &str) -> Result<(), HopfError> {
        self.set_terms(name, &[(C::one(), 0, name, name)])
    }

    /// Replace the subalgebra that `pr` projects onto.
    pub fn set_projection(&mut self, names: &[&str]) -> Result<(), HopfError> {
        self.projection = names
            .iter()
            .map(|n| self.pres.gen(n))
            .collect::<Result<_, _>>()?;
        Ok(())
    }

    pub fn projection(&self) -> &BTreeSet<GenId> {
        &self.projection
    }

    fn delta_unit(&self, l: Letter, order: usize) -> Result<TensorElement<C>, HopfError> {
        let d = self.entry(l.gen)?.truncate(order);
        if l.exp > 0 {
            Ok(d)
        } else {
            d.inverse(&self.pres)
                .map_err(|_| HopfError::NotInvertible(self.pres.gen_name(l.gen).to_string()))
        }
    }

    /// `Δ(w)` for a normal word, cached per truncation order.
    pub fn delta_word(&self, w: &Word, order: usize) -> Result<Arc<TensorElement<C>>, HopfError> {
        if let Some(v) = self.cache.get(&(w.clone(), order)) {
            return Ok(v.clone());
        }
        let result = match w.last() {
            None => TensorElement::one(2, order),
            Some(last) => {
                let unit = Letter {
                    gen: last.gen,
                    exp: last.exp.signum(),
                };
                let mut rest = w.without_last();
                if last.exp.abs() > 1 {
                    rest.push(Letter {
                        gen: last.gen,
                        exp: last.exp - unit.exp,
                    });
                }
                let head = self.delta_word(&rest, order)?;
                head.mul(&self.delta_unit(unit, order)?, &self.pres)?
            }
        };
        let result = Arc::new(result);
        self.cache.insert((w.clone(), order), result.clone());
        Ok(result)
    }

    /// Multiplicative, linear extension of the table to a one-leg element.
    pub fn delta_extend(&self, x: &TensorElement<C>) -> Result<TensorElement<C>, HopfError> {
        if x.legs() != 1 {
            return Err(HopfError::Shape(
                "delta_extend expects a one-leg element".into(),
            ));
        }
        self.apply_on_leg(x, 0)
    }

    /// Apply Δ to leg `leg`, producing one more leg.
    pub fn apply_on_leg(
        &self,
        x: &TensorElement<C>,
        leg: usize,
    ) -> Result<TensorElement<C>, HopfError> {
        if leg >= x.legs() {
            return Err(HopfError::Shape(format!("leg {leg} out of range")));
        }
        let order = x.order();
        let legs = x.legs() + 1;
        let terms: Vec<(&Legs, &ZetaSeries<C>)> = x.terms().iter().collect();
        par::map_reduce(
            &terms,
            || Ok(TensorElement::zero(legs, order)),
            |(l, c)| {
                let d = self.delta_word(&l[leg], order)?;
                let mut part = TensorElement::zero(legs, order);
                for (dl, dc) in d.terms() {
                    let mut nl: Legs = Legs::new();
                    nl.extend(l[..leg].iter().cloned());
                    nl.extend(dl.iter().cloned());
                    nl.extend(l[leg + 1..].iter().cloned());
                    part.add_term(nl, c.mul(dc));
                }
                Ok(part)
            },
            |a: Result<TensorElement<C>, HopfError>, b: Result<TensorElement<C>, HopfError>| {
                Ok(a?.add(&b?)?)
            },
        )
    }

    /// Keep the terms whose word on each masked leg lies in the projection subalgebra
    /// (`Some(true)`), or lies outside it (`Some(false)`).
    pub fn project(&self, x: &TensorElement<C>, mask: &[Option<bool>]) -> TensorElement<C> {
        project_onto(x, mask, &self.projection)
    }

    /// `(x)_{⟨1⟩}`, `(x)_{⟨2⟩}`, `(x)_{⟨3⟩}`.
    pub fn projected_legs(
        &self,
        x: &TensorElement<C>,
        which: ProjectedLeg,
    ) -> Result<TensorElement<C>, HopfError> {
        if self.projection.is_empty() {
            return Err(HopfError::MissingProjection);
        }
        let d = self.delta_extend(x)?;
        let mask = match which {
            ProjectedLeg::One => [None, Some(true)],
            ProjectedLeg::Two => [Some(true), None],
            ProjectedLeg::Three => [Some(false), Some(false)],
        };
        Ok(self.project(&d, &mask))
    }

    /// Residuals of `Δ(b)Δ(a) − Δ(rhs)` for every rewrite rule and every Cartan weight relation.
    pub fn check_homomorphism(&self, order: usize) -> Result<Vec<RelationResidual<C>>, HopfError> {
        let p = &self.pres;
        let mut relations: Vec<(String, TensorElement<C>, TensorElement<C>)> = Vec::new();
        for r in p.rules() {
            let (rb, ra) = r.lhs;
            let mut rhs = TensorElement::zero(1, order);
            for (w, c) in &r.rhs {
                rhs.add_term(std::iter::once(w.clone()).collect(), c.truncate(order));
            }
            let lhs = self
                .entry(rb)?
                .truncate(order)
                .mul(&self.entry(ra)?.truncate(order), p)?;
            let name = format!("{} {}", p.gen_name(rb), p.gen_name(ra));
            relations.push((name, lhs, self.delta_extend(&rhs)?));
        }
        let mut weighted: Vec<_> = p
            .weights()
            .iter()
            .filter(|(_, w)| **w != 0)
            .map(|(k, w)| (*k, *w))
            .collect();
        weighted.sort();
        for ((c, g), w) in weighted {
            if !self.entries.contains_key(&g) {
                continue;
            }
            let dc = self.entry(c)?.truncate(order);
            let dg = self.entry(g)?.truncate(order);
            let lhs = dc.mul(&dg, p)?.mul(&dc.inverse(p)?, p)?;
            let rhs = dg.scale(&C::t_pow(w, p.root_degree()));
            relations.push((
                format!("{} {} {}^-1", p.gen_name(c), p.gen_name(g), p.gen_name(c)),
                lhs,
                rhs,
            ));
        }
        let checked = par::map(
            &relations,
            |(name, lhs, rhs)| -> Result<Option<RelationResidual<C>>, HopfError> {
                let residual = lhs.sub(rhs)?;
                Ok((!residual.is_zero()).then(|| RelationResidual {
                    relation: name.clone(),
                    residual,
                }))
            },
        );
        checked.into_iter().filter_map(|r| r.transpose()).collect()
    }

    /// Generators where `(Δ⊗id)Δ ≠ (id⊗Δ)Δ`.
    pub fn check_coassociativity(
        &self,
        order: usize,
    ) -> Result<Vec<RelationResidual<C>>, HopfError> {
        let gens: Vec<GenId> = self.entries.keys().copied().collect();
        let checked = par::map(
            &gens,
            |&g| -> Result<Option<RelationResidual<C>>, HopfError> {
                let d = self.entry(g)?.truncate(order);
                let residual = self.apply_on_leg(&d, 0)?.sub(&self.apply_on_leg(&d, 1)?)?;
                Ok((!residual.is_zero()).then(|| RelationResidual {
                    relation: self.pres.gen_name(g).to_string(),
                    residual,
                }))
            },
        );
        checked.into_iter().filter_map(|r| r.transpose()).collect()
    }

    /// Generators without a table entry.
    pub fn missing_generators(&self) -> Vec<String> {
        self.pres
            .generators()
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.entries.contains_key(&(*i as GenId)))
            .map(|(_, g)| g.name.clone())
            .collect()
    }
}

/// [`CoproductTable::project`] onto an explicit generator set.
pub fn project_onto<C: Coeff>(
    x: &TensorElement<C>,
    mask: &[Option<bool>],
    onto: &BTreeSet<GenId>,
) -> TensorElement<C> {
    let mut e = TensorElement::zero(x.legs(), x.order());
    for (l, c) in x.terms() {
        let keep = l.iter().zip(mask).all(|(w, m)| match m {
            None => true,
            Some(inside) => w.letters().iter().all(|a| onto.contains(&a.gen)) == *inside,
        });
        if keep {
            e.add_term(l.clone(), c.clone());
        }
    }
    e
}
