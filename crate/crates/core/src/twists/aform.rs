use super::TwistError;
use crate::ncalg::{GenId, GenKind, Legs, Letter, Presentation, TensorElement, Word, RULE_ORDER};
use crate::scalars::{QCoeff, Rat, ZetaSeries};
use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Order at which generator definitions are stored.
const DEF_ORDER: usize = 64;
/// Order used when deriving the rewriting rules of the new alphabet.
const RULE_PROBE: usize = 12;

/// Definition of one generator of the new alphabet: name, kind and `Σ c ζᵏ w` in the source.
pub type GeneratorDef<'a> = (&'a str, GenKind, &'a [(QCoeff, usize, &'a str)]);

/// A second alphabet for the same algebra over `Q(q)[[ζ]]`, each new generator
/// given by its image in the source presentation. The new generators must be
/// triangular at `ζ⁰`: one source root vector times Cartan letters each.
pub struct AFormBasis {
    source: Arc<Presentation<QCoeff>>,
    target: Arc<Presentation<QCoeff>>,
    defs: Vec<TensorElement<QCoeff>>,
    lead: HashMap<GenId, GenId>,
    cartan_shift: Vec<BTreeMap<GenId, i32>>,
    cartan_to_source: HashMap<GenId, GenId>,
    images: DashMap<(Word, usize), Arc<TensorElement<QCoeff>>>,
    rewrites: DashMap<(Word, usize), Arc<TensorElement<QCoeff>>>,
}

impl std::fmt::Debug for AFormBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AFormBasis")
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .finish()
    }
}

impl AFormBasis {
    /// Builds the new alphabet, its Cartan weights and its rewriting rules.
    pub fn new(
        source: Arc<Presentation<QCoeff>>,
        name: &str,
        gens: &[GeneratorDef<'_>],
    ) -> Result<Self, TwistError> {
        let d = source.root_degree();
        let spec: Vec<(&str, GenKind)> = gens.iter().map(|(n, k, _)| (*n, *k)).collect();
        let mut target = Presentation::new(name, d, &spec)?;
        let mut defs = Vec::new();
        let mut lead = HashMap::new();
        let mut cartan_shift = Vec::new();
        let mut cartan_to_source = HashMap::new();
        for (i, (n, kind, terms)) in gens.iter().enumerate() {
            let mut x = TensorElement::zero(1, DEF_ORDER);
            for (c, k, w) in terms.iter() {
                x = x.add(&TensorElement::from_leg_words(
                    &source,
                    &[w],
                    ZetaSeries::monomial(c.clone(), *k, DEF_ORDER),
                )?)?;
            }
            let head = x.zeta_coefficient(0);
            let (legs, _) = match (head.len(), head.iter().next()) {
                (1, Some(t)) => t,
                _ => {
                    return Err(TwistError::Unsupported(format!(
                        "{n} is not a single source monomial at zeta^0"
                    )))
                }
            };
            let mut shift = BTreeMap::new();
            let mut root = None;
            for l in legs[0].letters() {
                if source.is_cartan(l.gen) {
                    *shift.entry(l.gen).or_insert(0) += l.exp;
                } else if root.replace(l.gen).is_some() || l.exp != 1 {
                    return Err(TwistError::Unsupported(format!(
                        "{n} has more than one root vector at zeta^0"
                    )));
                }
            }
            match (kind, root) {
                (GenKind::Cartan, None) if shift.len() == 1 && shift.values().all(|e| *e == 1) => {
                    cartan_to_source.insert(i as GenId, *shift.keys().next().unwrap());
                    shift.clear();
                }
                (GenKind::Ordinary, Some(r)) => {
                    if lead.insert(r, i as GenId).is_some() {
                        return Err(TwistError::Unsupported(format!(
                            "two generators lead with {}",
                            source.gen_name(r)
                        )));
                    }
                }
                _ => {
                    return Err(TwistError::Unsupported(format!(
                        "{n} does not match its declared kind"
                    )))
                }
            }
            defs.push(x);
            cartan_shift.push(shift);
        }
        for (&c, &sc) in &cartan_to_source {
            for (&r, &g) in &lead {
                target.set_weight(c, g, source.weight(sc, r));
            }
        }
        let mut basis = AFormBasis {
            source,
            target: Arc::new(target.clone()),
            defs,
            lead,
            cartan_shift,
            cartan_to_source,
            images: DashMap::new(),
            rewrites: DashMap::new(),
        };
        let ordinary: Vec<GenId> = (0..gens.len() as GenId)
            .filter(|g| !target.is_cartan(*g))
            .collect();
        for (bi, &b) in ordinary.iter().enumerate() {
            for &a in &ordinary[..bi] {
                let prod = basis.defs[b as usize]
                    .truncate(RULE_PROBE)
                    .mul(&basis.defs[a as usize].truncate(RULE_PROBE), &basis.source)?;
                let rhs = basis.from_source(&prod)?;
                let mut poly = Vec::new();
                for (legs, c) in rhs.terms() {
                    if !c.coeff(RULE_PROBE).is_zero() || !c.coeff(RULE_PROBE - 1).is_zero() {
                        return Err(TwistError::Unsupported(format!(
                            "rule for {} {} is not polynomial in zeta",
                            gens[b as usize].0, gens[a as usize].0
                        )));
                    }
                    poly.push((
                        legs[0].clone(),
                        ZetaSeries::from_coeffs(c.coeffs().to_vec(), RULE_ORDER),
                    ));
                }
                target.add_rule(b, a, poly)?;
            }
        }
        basis.target = Arc::new(target);
        Ok(basis)
    }

    pub fn source(&self) -> &Arc<Presentation<QCoeff>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation<QCoeff>> {
        &self.target
    }

    /// Image of a word of the new alphabet in the source.
    fn image(&self, w: &Word, order: usize) -> Result<Arc<TensorElement<QCoeff>>, TwistError> {
        if let Some(v) = self.images.get(&(w.clone(), order)) {
            return Ok(v.clone());
        }
        let mut acc = TensorElement::one(1, order);
        for l in w.letters() {
            let g = l.gen;
            let f = if let Some(&s) = self.cartan_to_source.get(&g) {
                TensorElement::from_letters(
                    &self.source,
                    &[Letter { gen: s, exp: l.exp }],
                    ZetaSeries::one(order),
                )?
            } else if l.exp > 0 {
                self.defs[g as usize]
                    .truncate(order)
                    .pow(l.exp as u32, &self.source)?
            } else {
                return Err(TwistError::Unsupported(format!(
                    "negative power of {}",
                    self.target.gen_name(g)
                )));
            };
            acc = acc.mul(&f, &self.source)?;
        }
        let acc = Arc::new(acc);
        self.images.insert((w.clone(), order), acc.clone());
        Ok(acc)
    }

    /// Substitute the definitions into an element written in the new alphabet.
    pub fn to_source(
        &self,
        x: &TensorElement<QCoeff>,
    ) -> Result<TensorElement<QCoeff>, TwistError> {
        let order = x.order();
        let mut out = TensorElement::zero(x.legs(), order);
        for (legs, c) in x.terms() {
            let mut t = TensorElement::scalar(0, c.clone());
            for w in legs.iter() {
                t = t.tensor(&*self.image(w, order)?);
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// The monomial of the new alphabet whose `ζ⁰` image is a multiple of `w`.
    fn partner(&self, w: &Word) -> Result<(Word, QCoeff), TwistError> {
        let mut exps: BTreeMap<GenId, i32> = BTreeMap::new();
        let src_to_cartan: HashMap<GenId, GenId> = self
            .cartan_to_source
            .iter()
            .map(|(a, b)| (*b, *a))
            .collect();
        for l in w.letters() {
            if let Some(&c) = src_to_cartan.get(&l.gen) {
                *exps.entry(c).or_insert(0) += l.exp;
            } else {
                let g = *self.lead.get(&l.gen).ok_or_else(|| {
                    TwistError::Unsupported(format!(
                        "{} has no partner",
                        self.source.gen_name(l.gen)
                    ))
                })?;
                *exps.entry(g).or_insert(0) += l.exp;
                for (sc, e) in &self.cartan_shift[g as usize] {
                    *exps.entry(src_to_cartan[sc]).or_insert(0) -= e * l.exp;
                }
            }
        }
        let m = Word::from_letters(
            exps.into_iter()
                .filter(|(_, e)| *e != 0)
                .map(|(gen, exp)| Letter { gen, exp }),
        );
        let head = self.image(&m, 0)?.zeta_coefficient(0);
        match head.get(&std::iter::once(w.clone()).collect::<Legs>()) {
            Some(s) if head.len() == 1 => Ok((m, s.clone())),
            _ => Err(TwistError::Unsupported(format!(
                "{} is not triangular",
                self.target.render_word(&m)
            ))),
        }
    }

    /// Rewrite a one-leg source element in the new alphabet, order by order in ζ.
    pub fn from_source(
        &self,
        x: &TensorElement<QCoeff>,
    ) -> Result<TensorElement<QCoeff>, TwistError> {
        if x.legs() != 1 {
            return Err(TwistError::Unsupported(
                "from_source expects one leg".into(),
            ));
        }
        let order = x.order();
        let mut rest = x.clone();
        let mut out = TensorElement::zero(1, order);
        for k in 0..=order {
            let part = rest.zeta_coefficient(k);
            let mut sub = TensorElement::zero(1, order);
            for (legs, c) in part {
                let (m, s) = self.partner(&legs[0])?;
                let alpha = c.div(&s)?;
                out.add_term(
                    std::iter::once(m.clone()).collect(),
                    ZetaSeries::monomial(alpha.clone(), k, order),
                );
                sub = sub.add(&self.image(&m, order)?.scale(&alpha).shift(k))?;
            }
            rest = rest.sub(&sub)?;
            debug_assert!(rest.zeta_coefficient(k).is_empty());
        }
        Ok(out)
    }

    fn rewrite_word(
        &self,
        w: &Word,
        order: usize,
    ) -> Result<Arc<TensorElement<QCoeff>>, TwistError> {
        if let Some(v) = self.rewrites.get(&(w.clone(), order)) {
            return Ok(v.clone());
        }
        let x = TensorElement::from_letters(&self.source, w.letters(), ZetaSeries::one(order))?;
        let r = Arc::new(self.from_source(&x)?);
        self.rewrites.insert((w.clone(), order), r.clone());
        Ok(r)
    }

    /// [`Self::from_source`] leg by leg.
    pub fn from_source_legs(
        &self,
        x: &TensorElement<QCoeff>,
    ) -> Result<TensorElement<QCoeff>, TwistError> {
        let order = x.order();
        let mut out = TensorElement::zero(x.legs(), order);
        for (legs, c) in x.terms() {
            let mut t = TensorElement::scalar(0, c.clone());
            for w in legs.iter() {
                t = t.tensor(&*self.rewrite_word(w, order)?);
            }
            out = out.add(&t.truncate(order))?;
        }
        Ok(out)
    }
}

/// How the new alphabet maps onto the `q = 1` algebra: root vectors by name,
/// Cartan letters `K = q^{h/d}` by the coroot `h` they exponentiate.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub letters: Vec<(&'static str, &'static str)>,
    pub cartan: Vec<(&'static str, &'static str)>,
}

type Poly = BTreeMap<Vec<u32>, BigRational>;

fn poly_add(a: &mut Poly, b: &Poly, s: &BigRational) {
    for (m, c) in b {
        let e = a.entry(m.clone()).or_insert_with(BigRational::zero);
        *e += c * s;
        if e.is_zero() {
            a.remove(m);
        }
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            poly_add(
                &mut out,
                &BTreeMap::from([(m, ca * cb)]),
                &BigRational::one(),
            );
        }
    }
    out
}

/// `binom(L·h, j)` for `j = 0..=top`.
fn binomials(l: &[i64], top: usize) -> Vec<Poly> {
    let n = l.len();
    let mut lin = Poly::new();
    for (i, &c) in l.iter().enumerate() {
        if c != 0 {
            let mut m = vec![0; n];
            m[i] = 1;
            lin.insert(m, BigRational::from_integer(c.into()));
        }
    }
    let mut out = vec![BTreeMap::from([(vec![0; n], BigRational::one())])];
    for j in 1..=top {
        let mut factor = lin.clone();
        poly_add(
            &mut factor,
            &BTreeMap::from([(vec![0; n], BigRational::one())]),
            &BigRational::from_integer(-BigInt::from(j as i64 - 1)),
        );
        let mut next = poly_mul(&out[j - 1], &factor);
        let inv = BigRational::new(BigInt::one(), BigInt::from(j as i64));
        for c in next.values_mut() {
            *c *= &inv;
        }
        out.push(next);
    }
    out
}

/// Coefficients of `p(1 + ε)`.
fn taylor_at_one(p: &[BigInt], stretch: usize) -> Vec<BigRational> {
    let deg = p.len().saturating_sub(1) * stretch;
    let mut out = vec![BigInt::zero(); deg + 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let i = i * stretch;
        let mut binom = BigInt::one();
        for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
            *slot += a * &binom;
            binom = binom * BigInt::from(i - j) / BigInt::from(j + 1);
        }
    }
    out.into_iter().map(BigRational::from_integer).collect()
}

/// Laurent coefficients of `c(t)` at `t = 1 + ε`, from the valuation up to `ε⁰`.
fn laurent_at_one(c: &QCoeff, d: u32) -> Result<(i64, Vec<BigRational>), TwistError> {
    let cd = c.root_degree();
    let stretch = if c.numer().is_constant() && c.denom().is_constant() {
        1
    } else if d.is_multiple_of(cd) {
        (d / cd) as usize
    } else {
        return Err(TwistError::Unsupported(format!(
            "coefficient in q^(1/{cd}) inside a q^(1/{d}) algebra"
        )));
    };
    let num = taylor_at_one(c.numer().coeffs(), stretch);
    let den = taylor_at_one(c.denom().coeffs(), stretch);
    let vn = num.iter().position(|x| !x.is_zero()).unwrap_or(num.len());
    let vd = den
        .iter()
        .position(|x| !x.is_zero())
        .expect("nonzero denominator");
    let v = vn as i64 - vd as i64;
    if vn == num.len() || v > 0 {
        return Ok((0, Vec::new()));
    }
    let count = (-v) as usize + 1;
    let n: Vec<BigRational> = (0..count)
        .map(|i| num.get(vn + i).cloned().unwrap_or_else(BigRational::zero))
        .collect();
    let dd: Vec<BigRational> = (0..count)
        .map(|i| den.get(vd + i).cloned().unwrap_or_else(BigRational::zero))
        .collect();
    let mut s: Vec<BigRational> = Vec::with_capacity(count);
    for i in 0..count {
        let mut acc = n[i].clone();
        for j in 1..=i {
            acc -= &dd[j] * &s[i - j];
        }
        s.push(acc / &dd[0]);
    }
    Ok((v, s))
}

/// Specialise an element of the new alphabet at `q = 1`, term by term in the
/// PBW basis: root vectors by name, Cartan Laurent parts `Σ c(t) t^{L·h}` by their
/// `ε⁰` coefficient at `t = 1 + ε`. Fails if any negative power of `ε` survives.
pub fn specialize(
    x: &TensorElement<QCoeff>,
    from: &Presentation<QCoeff>,
    to: &Presentation<Rat>,
    map: &Specialization,
) -> Result<TensorElement<Rat>, TwistError> {
    let d = from.root_degree();
    let legs = x.legs();
    let cartans: Vec<GenId> = map
        .cartan
        .iter()
        .map(|(a, _)| from.gen(a))
        .collect::<Result<_, _>>()?;
    let hs: Vec<GenId> = map
        .cartan
        .iter()
        .map(|(_, b)| to.gen(b))
        .collect::<Result<_, _>>()?;
    let letters: HashMap<GenId, GenId> = map
        .letters
        .iter()
        .map(|(a, b)| Ok((from.gen(a)?, to.gen(b)?)))
        .collect::<Result<_, TwistError>>()?;
    let nc = cartans.len();
    type Skeleton = Vec<(Vec<Letter>, Vec<Letter>)>;
    let mut groups: BTreeMap<(usize, Skeleton), Vec<(QCoeff, Vec<i64>)>> = BTreeMap::new();
    for (ls, c) in x.terms() {
        let mut skel = Vec::new();
        let mut lin = vec![0i64; legs * nc];
        for (li, w) in ls.iter().enumerate() {
            let (mut pre, mut post) = (Vec::new(), Vec::new());
            let mut seen_cartan = false;
            for l in w.letters() {
                if let Some(ci) = cartans.iter().position(|g| *g == l.gen) {
                    lin[li * nc + ci] += l.exp as i64;
                    seen_cartan = true;
                } else {
                    let g = *letters.get(&l.gen).ok_or_else(|| {
                        TwistError::Unsupported(format!("no image for {}", from.gen_name(l.gen)))
                    })?;
                    let slot = if seen_cartan
                        || from.generators()[l.gen as usize].sort_index
                            > from.generators()[cartans[0] as usize].sort_index
                    {
                        &mut post
                    } else {
                        &mut pre
                    };
                    slot.push(Letter { gen: g, exp: l.exp });
                }
            }
            skel.push((pre, post));
        }
        for (k, ck) in c.coeffs().iter().enumerate() {
            if !ck.is_zero() {
                groups
                    .entry((k, skel.clone()))
                    .or_default()
                    .push((ck.clone(), lin.clone()));
            }
        }
    }
    let order = x.order();
    let mut out = TensorElement::zero(legs, order);
    for ((k, skel), terms) in groups {
        let expanded: Vec<(i64, Vec<BigRational>, &Vec<i64>)> = terms
            .iter()
            .map(|(c, l)| laurent_at_one(c, d).map(|(v, s)| (v, s, l)))
            .collect::<Result<_, _>>()?;
        let depth = expanded
            .iter()
            .map(|(v, s, _)| if s.is_empty() { 0 } else { -v })
            .max()
            .unwrap_or(0) as usize;
        let mut acc: Vec<Poly> = vec![Poly::new(); depth + 1];
        for (v, s, l) in &expanded {
            if s.is_empty() {
                continue;
            }
            let b = binomials(l, depth);
            for (i, ce) in s.iter().enumerate() {
                let e = v + i as i64;
                for (j, bj) in b.iter().enumerate().take((-e) as usize + 1) {
                    let slot = (e + j as i64 + depth as i64) as usize;
                    poly_add(&mut acc[slot], bj, ce);
                }
            }
        }
        if acc[..depth].iter().any(|p| !p.is_empty()) {
            return Err(TwistError::PoleAtOne(format!(
                "zeta^{k} term of {}",
                from.name()
            )));
        }
        for (mono, c) in &acc[depth] {
            let mut t = TensorElement::scalar(0, ZetaSeries::monomial(Rat(c.clone()), k, order));
            for (li, (pre, post)) in skel.iter().enumerate() {
                let mut ws: Vec<Letter> = pre.clone();
                for (ci, h) in hs.iter().enumerate() {
                    if mono[li * nc + ci] > 0 {
                        ws.push(Letter {
                            gen: *h,
                            exp: mono[li * nc + ci] as i32,
                        });
                    }
                }
                ws.extend(post.iter().cloned());
                let mut leg = TensorElement::one(1, order);
                for l in ws {
                    leg = leg.mul(
                        &TensorElement::from_letters(to, &[l], ZetaSeries::one(order))?,
                        to,
                    )?;
                }
                t = t.tensor(&leg);
            }
            out = out.add(&t)?;
        }
    }
    Ok(out)
}
