use super::word::{GenId, Letter, Word};
use super::NcError;
use crate::scalars::{Coeff, ZetaSeries};
use dashmap::DashMap;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// ζ-order used for rule coefficients, effectively unbounded.
pub const RULE_ORDER: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    Ordinary,
    /// Invertible group-like generator; exponents may be negative.
    Cartan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSymbol {
    pub name: String,
    pub grade: i32,
    pub sort_index: usize,
    pub kind: GenKind,
}

/// Linear combination of words; the currency of rule right-hand sides and products.
pub type WordPoly<C> = Vec<(Word, ZetaSeries<C>)>;

/// One entry `b a -> rhs` of a rewrite table, `b` sorting after `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule<C> {
    pub lhs: (GenId, GenId),
    pub rhs: WordPoly<C>,
}

type CacheKey = (Word, Word, usize);

/// Ordered alphabet with a complete rewrite table, giving PBW normal forms.
///
/// Conjugation by a Cartan generator is a scalar: `c g c⁻¹ = t^w g` with
/// `w = weight(c, g)` and `t` the `d`-th root of `q`. A missing weight means `c`
/// and `g` commute.
pub struct Presentation<C: Coeff> {
    name: String,
    gens: Vec<GeneratorSymbol>,
    index: HashMap<String, GenId>,
    root_degree: u32,
    free: bool,
    rules: HashMap<(GenId, GenId), WordPoly<C>>,
    weights: HashMap<(GenId, GenId), i64>,
    cache: DashMap<CacheKey, Arc<WordPoly<C>>>,
}

impl<C: Coeff> Clone for Presentation<C> {
    fn clone(&self) -> Self {
        Presentation {
            name: self.name.clone(),
            gens: self.gens.clone(),
            index: self.index.clone(),
            root_degree: self.root_degree,
            free: self.free,
            rules: self.rules.clone(),
            weights: self.weights.clone(),
            cache: DashMap::new(),
        }
    }
}

impl<C: Coeff> std::fmt::Debug for Presentation<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field(
                "generators",
                &self.gens.iter().map(|g| &g.name).collect::<Vec<_>>(),
            )
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl<C: Coeff> Presentation<C> {
    /// Generators are given in normal order.
    pub fn new(name: &str, root_degree: u32, gens: &[(&str, GenKind)]) -> Result<Self, NcError> {
        let mut symbols = Vec::new();
        let mut index = HashMap::new();
        for (i, (n, k)) in gens.iter().enumerate() {
            if index.insert(n.to_string(), i as GenId).is_some() {
                return Err(NcError::DuplicateGenerator(n.to_string()));
            }
            symbols.push(GeneratorSymbol {
                name: n.to_string(),
                grade: 0,
                sort_index: i,
                kind: *k,
            });
        }
        Ok(Presentation {
            name: name.to_string(),
            gens: symbols,
            index,
            root_degree,
            free: false,
            rules: HashMap::new(),
            weights: HashMap::new(),
            cache: DashMap::new(),
        })
    }

    /// A presentation with no relations: products are concatenations.
    pub fn free(name: &str, root_degree: u32, gens: &[(&str, GenKind)]) -> Result<Self, NcError> {
        let mut p = Self::new(name, root_degree, gens)?;
        p.free = true;
        Ok(p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn root_degree(&self) -> u32 {
        self.root_degree
    }

    pub fn is_free(&self) -> bool {
        self.free
    }

    pub fn generators(&self) -> &[GeneratorSymbol] {
        &self.gens
    }

    pub fn gen(&self, name: &str) -> Result<GenId, NcError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| NcError::UnknownGenerator(name.to_string()))
    }

    pub fn gen_name(&self, id: GenId) -> &str {
        &self.gens[id as usize].name
    }

    pub fn kind(&self, id: GenId) -> GenKind {
        self.gens[id as usize].kind
    }

    pub fn is_cartan(&self, id: GenId) -> bool {
        self.kind(id) == GenKind::Cartan
    }

    pub fn set_weight(&mut self, cartan: GenId, g: GenId, w: i64) {
        if w == 0 {
            self.weights.remove(&(cartan, g));
        } else {
            self.weights.insert((cartan, g), w);
        }
        self.cache.clear();
    }

    pub fn weight(&self, cartan: GenId, g: GenId) -> i64 {
        self.weights.get(&(cartan, g)).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> &HashMap<(GenId, GenId), i64> {
        &self.weights
    }

    /// Install `b a -> rhs`; `b` must sort after `a` and both must be ordinary.
    pub fn add_rule(&mut self, b: GenId, a: GenId, rhs: WordPoly<C>) -> Result<(), NcError> {
        if b <= a || self.is_cartan(a) || self.is_cartan(b) {
            return Err(NcError::BadRule(format!(
                "{} {}",
                self.gen_name(b),
                self.gen_name(a)
            )));
        }
        let mut acc = Acc::new(RULE_ORDER);
        for (w, c) in rhs {
            acc.add(w, &c.with_order(RULE_ORDER));
        }
        self.rules.insert((b, a), acc.finish());
        self.cache.clear();
        Ok(())
    }

    pub fn remove_rule(&mut self, b: GenId, a: GenId) {
        self.rules.remove(&(b, a));
        self.cache.clear();
    }

    pub fn rule(&self, b: GenId, a: GenId) -> Option<&WordPoly<C>> {
        self.rules.get(&(b, a))
    }

    /// All rules sorted by left-hand side.
    pub fn rules(&self) -> Vec<RewriteRule<C>> {
        let mut v: Vec<_> = self
            .rules
            .iter()
            .map(|(k, r)| RewriteRule {
                lhs: *k,
                rhs: r.clone(),
            })
            .collect();
        v.sort_by_key(|r| r.lhs);
        v
    }

    /// Out-of-order ordinary pairs lacking a rule.
    pub fn missing_rules(&self) -> Vec<(GenId, GenId)> {
        if self.free {
            return Vec::new();
        }
        let n = self.gens.len() as GenId;
        let mut out = Vec::new();
        for b in 0..n {
            for a in 0..b {
                if !self.is_cartan(a) && !self.is_cartan(b) && !self.rules.contains_key(&(b, a)) {
                    out.push((b, a));
                }
            }
        }
        out
    }

    fn t_pow(&self, k: i64) -> C {
        C::t_pow(k, self.root_degree)
    }

    /// Normal form of the product of two normal words, truncated at ζ-order `order`.
    pub fn mul_words(&self, a: &Word, b: &Word, order: usize) -> Result<Arc<WordPoly<C>>, NcError> {
        if a.is_empty() || b.is_empty() || self.free {
            return Ok(Arc::new(vec![(a.concat(b), ZetaSeries::one(order))]));
        }
        let (x, y) = (a.last().unwrap(), b.first().unwrap());
        if x.gen < y.gen {
            return Ok(Arc::new(vec![(a.concat(b), ZetaSeries::one(order))]));
        }
        let key = (a.clone(), b.clone(), order);
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let out = Arc::new(self.mul_words_uncached(a, b, x, y, order)?);
        self.cache.insert(key, out.clone());
        Ok(out)
    }

    fn mul_words_uncached(
        &self,
        a: &Word,
        b: &Word,
        x: Letter,
        y: Letter,
        order: usize,
    ) -> Result<WordPoly<C>, NcError> {
        let mut acc = Acc::new(order);
        if x.gen == y.gen {
            let e = x.exp + y.exp;
            if e != 0 {
                acc.add(a.concat(b), &ZetaSeries::one(order));
            } else {
                for (w, c) in self
                    .mul_words(&a.without_last(), &b.without_first(), order)?
                    .iter()
                {
                    acc.add(w.clone(), c);
                }
            }
            return Ok(acc.finish());
        }
        let (head, rest) = if self.is_cartan(y.gen) || y.exp == 1 {
            (y, b.without_first())
        } else {
            let tail = Word::from_letters(
                std::iter::once(Letter {
                    gen: y.gen,
                    exp: y.exp - 1,
                })
                .chain(b.without_first().letters().iter().copied()),
            );
            (Letter { gen: y.gen, exp: 1 }, tail)
        };
        for (w, c) in self.swap_last(a, head, order)? {
            for (w2, c2) in self.mul_words(&w, &rest, order)?.iter() {
                acc.add(w2.clone(), &c.mul(c2));
            }
        }
        Ok(acc.finish())
    }

    /// `a · l` where `a`'s last letter sorts after `l`.
    fn swap_last(&self, a: &Word, l: Letter, order: usize) -> Result<WordPoly<C>, NcError> {
        let x = a.last().unwrap();
        let prefix = a.without_last();
        let lw = Word::single(l.gen, l.exp);
        let xw = Word::single(x.gen, x.exp);
        let mut acc = Acc::new(order);
        match (self.is_cartan(x.gen), self.is_cartan(l.gen)) {
            (false, false) => {
                let rhs = self
                    .rules
                    .get(&(x.gen, l.gen))
                    .ok_or_else(|| NcError::MissingRule {
                        b: self.gen_name(x.gen).to_string(),
                        a: self.gen_name(l.gen).to_string(),
                    })?;
                let mut left = prefix.clone();
                left.push(Letter {
                    gen: x.gen,
                    exp: x.exp - 1,
                });
                for (w, c) in rhs {
                    for (w2, c2) in self.mul_words(&left, w, order)?.iter() {
                        acc.add(w2.clone(), &c.mul(c2));
                    }
                }
            }
            (true, false) => {
                // c^m g = t^{m w} g c^m
                let s = ZetaSeries::constant(
                    self.t_pow(x.exp as i64 * self.weight(x.gen, l.gen)),
                    order,
                );
                for (w, c) in self.mul_words(&prefix, &lw, order)?.iter() {
                    for (w2, c2) in self.mul_words(w, &xw, order)?.iter() {
                        acc.add(w2.clone(), &c.mul(c2).mul(&s));
                    }
                }
            }
            (false, true) => {
                // g^e c^m = t^{-e m w} c^m g^e
                let s = ZetaSeries::constant(
                    self.t_pow(-(x.exp as i64) * l.exp as i64 * self.weight(l.gen, x.gen)),
                    order,
                );
                for (w, c) in self.mul_words(&prefix, &lw, order)?.iter() {
                    for (w2, c2) in self.mul_words(w, &xw, order)?.iter() {
                        acc.add(w2.clone(), &c.mul(c2).mul(&s));
                    }
                }
            }
            (true, true) => {
                for (w, c) in self.mul_words(&prefix, &lw, order)?.iter() {
                    for (w2, c2) in self.mul_words(w, &xw, order)?.iter() {
                        acc.add(w2.clone(), &c.mul(c2));
                    }
                }
            }
        }
        Ok(acc.finish())
    }

    /// Normal form of an arbitrary word, given as a letter sequence.
    pub fn normalize_word(&self, w: &[Letter], order: usize) -> Result<WordPoly<C>, NcError> {
        let mut cur: WordPoly<C> = vec![(Word::empty(), ZetaSeries::one(order))];
        for &l in w {
            let lw = Word::single(l.gen, l.exp);
            let mut acc = Acc::new(order);
            for (u, c) in &cur {
                for (v, c2) in self.mul_words(u, &lw, order)?.iter() {
                    acc.add(v.clone(), &c.mul(c2));
                }
            }
            cur = acc.finish();
        }
        Ok(cur)
    }

    /// Parse a word written as space-separated `name` or `name^k` tokens.
    pub fn parse_word(&self, s: &str) -> Result<Vec<Letter>, NcError> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i32>()
                        .map_err(|_| NcError::Parse(tok.to_string()))?,
                ),
                None => (tok, 1),
            };
            let gen = self.gen(name)?;
            if exp < 0 && !self.is_cartan(gen) {
                return Err(NcError::Parse(format!(
                    "negative power of non-invertible {name}"
                )));
            }
            out.push(Letter { gen, exp });
        }
        Ok(out)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|l| {
                if l.exp == 1 {
                    self.gen_name(l.gen).to_string()
                } else {
                    format!("{}^{}", self.gen_name(l.gen), l.exp)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }
}

/// Accumulates word terms, dropping zeros.
pub(crate) struct Acc<C: Coeff> {
    order: usize,
    map: BTreeMap<Word, ZetaSeries<C>>,
}

impl<C: Coeff> Acc<C> {
    pub(crate) fn new(order: usize) -> Self {
        Acc {
            order,
            map: BTreeMap::new(),
        }
    }

    pub(crate) fn add(&mut self, w: Word, c: &ZetaSeries<C>) {
        if c.is_zero() {
            return;
        }
        let c = c.truncate(self.order);
        match self.map.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    pub(crate) fn finish(self) -> WordPoly<C> {
        self.map.into_iter().collect()
    }
}
