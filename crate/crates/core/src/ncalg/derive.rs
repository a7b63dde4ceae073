//! Rule derivation from a Chevalley presentation with triangular
//! decomposition `U⁻ ⊗ U⁰ ⊗ U⁺`: the two nilpotent halves are free algebras
//! modulo homogeneous (Serre) ideals, reduced by graded linear algebra, and
//! `U⁰` is the Laurent algebra of the Cartan letters.

use super::element::NcPoly;
use super::presentation::{GenKind, Presentation, WordPoly, RULE_ORDER};
use super::word::{GenId, Letter, Word};
use super::NcError;
use crate::scalars::{Coeff, ScalarError, ZetaSeries};
use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeriveError {
    #[error("product {0} is not expressible in ordered words below the degree bound")]
    Inexpressible(String),
    #[error("ordered words are dependent in the truncated quotient while rewriting {0}")]
    InconsistentIdeal(String),
    #[error("bad Chevalley input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Chevalley generators split into the two triangular halves.
pub struct ChevalleyInput<C: Coeff> {
    /// Free presentation holding every letter; Cartan letters carry conjugation weights.
    pub alphabet: Presentation<C>,
    pub negative: Vec<GenId>,
    pub positive: Vec<GenId>,
    /// Root-lattice degree of each ordinary letter.
    pub roots: HashMap<GenId, Vec<i32>>,
    /// Homogeneous relations, each within a single half.
    pub serre: Vec<NcPoly<C>>,
    /// `x y − y x` for positive `x` and negative `y`, a Laurent polynomial in Cartan letters.
    /// Absent pairs commute.
    pub cross: HashMap<(GenId, GenId), NcPoly<C>>,
}

type Key = (Vec<GenId>, Vec<i32>, Vec<GenId>);
type Canon<C> = BTreeMap<Key, C>;

fn add_to<C: Coeff>(m: &mut Canon<C>, k: Key, c: C) {
    if c.is_zero() {
        return;
    }
    match m.entry(k) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get().add(&c);
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Reduction modulo a homogeneous ideal, one multidegree at a time.
struct Half<C: Coeff> {
    letters: Vec<GenId>,
    relations: Vec<(Vec<usize>, Vec<(Vec<GenId>, C)>)>,
    reducers: RefCell<HashMap<Vec<usize>, HashMap<Vec<GenId>, Vec<(Vec<GenId>, C)>>>>,
}

fn words_of(letters: &[GenId], md: &[usize]) -> Vec<Vec<GenId>> {
    fn rec(
        letters: &[GenId],
        left: &mut Vec<usize>,
        cur: &mut Vec<GenId>,
        out: &mut Vec<Vec<GenId>>,
    ) {
        if left.iter().all(|&n| n == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..letters.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(letters[i]);
                rec(letters, left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(letters, &mut md.to_vec(), &mut Vec::new(), &mut out);
    out
}

impl<C: Coeff> Half<C> {
    fn multidegree(&self, w: &[GenId]) -> Vec<usize> {
        let mut md = vec![0; self.letters.len()];
        for g in w {
            let i = self
                .letters
                .iter()
                .position(|l| l == g)
                .expect("letter of this half");
            md[i] += 1;
        }
        md
    }

    fn build(&self, md: &[usize]) -> HashMap<Vec<GenId>, Vec<(Vec<GenId>, C)>> {
        let mut words = words_of(&self.letters, md);
        words.sort_by(|a, b| b.cmp(a));
        let col: HashMap<&Vec<GenId>, usize> =
            words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut rows: Vec<Vec<C>> = Vec::new();
        for (rmd, rel) in &self.relations {
            if rmd.iter().zip(md).any(|(a, b)| a > b) {
                continue;
            }
            let rest: Vec<usize> = md.iter().zip(rmd).map(|(a, b)| a - b).collect();
            for w in words_of(&self.letters, &rest) {
                for split in 0..=w.len() {
                    let mut row = vec![C::zero(); words.len()];
                    for (rw, c) in rel {
                        let full: Vec<GenId> = w[..split]
                            .iter()
                            .chain(rw.iter())
                            .chain(w[split..].iter())
                            .copied()
                            .collect();
                        let j = col[&full];
                        row[j] = row[j].add(c);
                    }
                    rows.push(row);
                }
            }
        }
        let pivots = rref(&mut rows, words.len());
        let mut out = HashMap::new();
        for (r, &p) in pivots.iter().enumerate() {
            let image: Vec<(Vec<GenId>, C)> = (0..words.len())
                .filter(|&j| j != p && !rows[r][j].is_zero())
                .map(|j| (words[j].clone(), rows[r][j].neg()))
                .collect();
            out.insert(words[p].clone(), image);
        }
        out
    }

    /// Standard-word expansion of `w`.
    fn reduce(&self, w: &[GenId]) -> Vec<(Vec<GenId>, C)> {
        if self.relations.is_empty() || w.len() < 2 {
            return vec![(w.to_vec(), C::one())];
        }
        let md = self.multidegree(w);
        let mut cache = self.reducers.borrow_mut();
        let red = cache.entry(md.clone()).or_insert_with(|| self.build(&md));
        match red.get(w) {
            Some(img) => img.clone(),
            None => vec![(w.to_vec(), C::one())],
        }
    }
}

/// Row-reduce in place; returns pivot columns, one per surviving row.
fn rref<C: Coeff>(rows: &mut Vec<Vec<C>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = v.mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    if !rows[r][j].is_zero() {
                        rows[i][j] = rows[i][j].sub(&f.mul(&rows[r][j]));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

struct Engine<'a, C: Coeff> {
    input: &'a ChevalleyInput<C>,
    cartans: Vec<GenId>,
    neg: Half<C>,
    pos: Half<C>,
}

impl<'a, C: Coeff> Engine<'a, C> {
    fn new(input: &'a ChevalleyInput<C>) -> Result<Self, DeriveError> {
        let a = &input.alphabet;
        let cartans: Vec<GenId> = (0..a.generators().len() as GenId)
            .filter(|&g| a.is_cartan(g))
            .collect();
        let mut neg_rel = Vec::new();
        let mut pos_rel = Vec::new();
        let neg = Half {
            letters: input.negative.clone(),
            relations: vec![],
            reducers: RefCell::new(HashMap::new()),
        };
        let pos = Half {
            letters: input.positive.clone(),
            relations: vec![],
            reducers: RefCell::new(HashMap::new()),
        };
        for r in &input.serre {
            let mut terms = Vec::new();
            let mut side = None;
            for (legs, c) in r.terms() {
                let w: Vec<GenId> = legs[0].units().map(|l| l.gen).collect();
                let s = if w.iter().all(|g| input.negative.contains(g)) {
                    0
                } else if w.iter().all(|g| input.positive.contains(g)) {
                    1
                } else {
                    return Err(DeriveError::BadInput("relation mixes halves".into()));
                };
                if side.replace(s).is_some_and(|p| p != s) {
                    return Err(DeriveError::BadInput("relation mixes halves".into()));
                }
                terms.push((w, c.coeff(0)));
            }
            let Some(s) = side else { continue };
            let half = if s == 0 { &neg } else { &pos };
            let md = half.multidegree(&terms[0].0);
            if terms.iter().any(|(w, _)| half.multidegree(w) != md) {
                return Err(DeriveError::BadInput("inhomogeneous relation".into()));
            }
            if s == 0 {
                neg_rel.push((md, terms))
            } else {
                pos_rel.push((md, terms))
            }
        }
        let neg = Half {
            relations: neg_rel,
            ..neg
        };
        let pos = Half {
            relations: pos_rel,
            ..pos
        };
        Ok(Engine {
            input,
            cartans,
            neg,
            pos,
        })
    }

    fn t(&self, k: i64) -> C {
        C::t_pow(k, self.input.alphabet.root_degree())
    }

    fn cidx(&self, g: GenId) -> usize {
        self.cartans.iter().position(|&c| c == g).unwrap()
    }

    fn push(&self, key: Key, c: C, l: Letter, out: &mut Canon<C>) -> Result<(), DeriveError> {
        let a = &self.input.alphabet;
        if a.is_cartan(l.gen) {
            let (y, mut k, x) = key;
            let w: i64 = x.iter().map(|&g| a.weight(l.gen, g)).sum();
            k[self.cidx(l.gen)] += l.exp;
            add_to(out, (y, k, x), c.mul(&self.t(-(l.exp as i64) * w)));
        } else if self.input.positive.contains(&l.gen) {
            let (y, k, mut x) = key;
            x.push(l.gen);
            add_to(out, (y, k, x), c);
        } else if self.input.negative.contains(&l.gen) {
            self.move_neg(key, c, l.gen, out)?;
        } else {
            return Err(DeriveError::BadInput(format!(
                "letter {} in neither half",
                a.gen_name(l.gen)
            )));
        }
        Ok(())
    }

    /// `(Y K X)·y` with `y` negative.
    fn move_neg(&self, key: Key, c: C, y: GenId, out: &mut Canon<C>) -> Result<(), DeriveError> {
        let a = &self.input.alphabet;
        let (ys, k, mut xs) = key;
        let Some(x) = xs.pop() else {
            let w: i64 = self
                .cartans
                .iter()
                .zip(&k)
                .map(|(&cg, &e)| e as i64 * a.weight(cg, y))
                .sum();
            let mut ys = ys;
            ys.push(y);
            add_to(out, (ys, k, xs), c.mul(&self.t(w)));
            return Ok(());
        };
        let mut moved = Canon::new();
        self.move_neg(
            (ys.clone(), k.clone(), xs.clone()),
            c.clone(),
            y,
            &mut moved,
        )?;
        for (key2, c2) in moved {
            self.push(key2, c2, Letter { gen: x, exp: 1 }, out)?;
        }
        if let Some(br) = self.input.cross.get(&(x, y)) {
            for (legs, s) in br.terms() {
                let mut cur = Canon::new();
                add_to(
                    &mut cur,
                    (ys.clone(), k.clone(), xs.clone()),
                    c.mul(&s.coeff(0)),
                );
                for l in legs[0].letters() {
                    let mut next = Canon::new();
                    for (key2, c2) in cur {
                        self.push(key2, c2, *l, &mut next)?;
                    }
                    cur = next;
                }
                for (key2, c2) in cur {
                    add_to(out, key2, c2);
                }
            }
        }
        Ok(())
    }

    fn reduce(&self, m: Canon<C>) -> Canon<C> {
        let mut out = Canon::new();
        for ((y, k, x), c) in m {
            for (ys, cy) in self.neg.reduce(&y) {
                for (xs, cx) in self.pos.reduce(&x) {
                    add_to(&mut out, (ys.clone(), k.clone(), xs), c.mul(&cy).mul(&cx));
                }
            }
        }
        out
    }

    fn unit(&self) -> Canon<C> {
        let mut m = Canon::new();
        m.insert((vec![], vec![0; self.cartans.len()], vec![]), C::one());
        m
    }

    fn mul(&self, a: &Canon<C>, b: &Canon<C>) -> Result<Canon<C>, DeriveError> {
        let mut out = Canon::new();
        for ((by, bk, bx), bc) in b {
            let mut letters: Vec<Letter> = by.iter().map(|&g| Letter { gen: g, exp: 1 }).collect();
            for (i, &e) in bk.iter().enumerate() {
                if e != 0 {
                    letters.push(Letter {
                        gen: self.cartans[i],
                        exp: e,
                    });
                }
            }
            letters.extend(bx.iter().map(|&g| Letter { gen: g, exp: 1 }));
            let mut cur: Canon<C> = a.iter().map(|(k, c)| (k.clone(), c.mul(bc))).collect();
            for l in letters {
                let mut next = Canon::new();
                for (k, c) in cur {
                    self.push(k, c, l, &mut next)?;
                }
                cur = next;
            }
            for (k, c) in cur {
                add_to(&mut out, k, c);
            }
        }
        Ok(self.reduce(out))
    }

    fn from_poly(&self, p: &NcPoly<C>) -> Result<Canon<C>, DeriveError> {
        let mut out = Canon::new();
        for (legs, s) in p.terms() {
            let mut cur = self.unit();
            for k in cur.values_mut() {
                *k = s.coeff(0);
            }
            for l in legs[0].units() {
                let mut next = Canon::new();
                for (k, c) in cur {
                    self.push(k, c, l, &mut next)?;
                }
                cur = next;
            }
            for (k, c) in cur {
                add_to(&mut out, k, c);
            }
        }
        Ok(self.reduce(out))
    }

    fn cartan_monomial(&self, m: &[i32]) -> Canon<C> {
        let mut c = Canon::new();
        c.insert((vec![], m.to_vec(), vec![]), C::one());
        c
    }
}

struct Derived<C: Coeff> {
    canon: Canon<C>,
    degree: usize,
    root: Vec<i32>,
}

/// Derive the complete rewrite table of the algebra generated by `defs`,
/// ordered as in `order`. Cartan entries of `order` must name Cartan letters of
/// the alphabet. Returns the presentation with rules and weights installed.
pub fn derive_rule_table<C: Coeff>(
    input: &ChevalleyInput<C>,
    name: &str,
    order: &[(&str, GenKind)],
    defs: &[(&str, NcPoly<C>)],
    degree_bound: usize,
) -> Result<Presentation<C>, DeriveError> {
    let eng = Engine::new(input)?;
    let alphabet = &input.alphabet;
    let mut target = Presentation::new(name, alphabet.root_degree(), order)?;
    let rank = input.roots.values().next().map_or(0, |r| r.len());
    let mut derived: HashMap<GenId, Derived<C>> = HashMap::new();
    for (i, (gname, kind)) in order.iter().enumerate() {
        let g = i as GenId;
        if *kind == GenKind::Cartan {
            let ag = alphabet.gen(gname)?;
            if !alphabet.is_cartan(ag) {
                return Err(DeriveError::BadInput(format!(
                    "{gname} is not a Cartan letter"
                )));
            }
            continue;
        }
        let def = defs
            .iter()
            .find(|(n, _)| n == gname)
            .ok_or_else(|| DeriveError::BadInput(format!("no definition for {gname}")))?;
        let canon = eng.from_poly(&def.1)?;
        let (mut degree, mut root) = (0, vec![0; rank]);
        if let Some(((y, _, x), _)) = canon.iter().next() {
            degree = y.len() + x.len();
            for g in y.iter().chain(x.iter()) {
                for (r, v) in root.iter_mut().zip(&input.roots[g]) {
                    *r += v;
                }
            }
        }
        derived.insert(
            g,
            Derived {
                canon,
                degree,
                root,
            },
        );
    }
    // conjugation weights, read off the leading term of each definition
    for (i, (cname, kind)) in order.iter().enumerate() {
        if *kind != GenKind::Cartan {
            continue;
        }
        let ac = alphabet.gen(cname)?;
        for (&g, d) in &derived {
            let mut ws = BTreeSet::new();
            for (y, _, x) in d.canon.keys() {
                ws.insert(
                    y.iter()
                        .chain(x.iter())
                        .map(|&l| alphabet.weight(ac, l))
                        .sum::<i64>(),
                );
            }
            if ws.len() > 1 {
                return Err(DeriveError::BadInput(format!(
                    "{} is not a weight vector",
                    target.gen_name(g)
                )));
            }
            target.set_weight(i as GenId, g, ws.into_iter().next().unwrap_or(0));
        }
    }
    let ordinary: Vec<GenId> = (0..order.len() as GenId)
        .filter(|g| derived.contains_key(g))
        .collect();
    let first_cartan = order.iter().position(|(_, k)| *k == GenKind::Cartan);
    for (bi, &b) in ordinary.iter().enumerate() {
        for &a in &ordinary[..bi] {
            let label = format!("{} {}", target.gen_name(b), target.gen_name(a));
            let prod = eng.mul(&derived[&b].canon, &derived[&a].canon)?;
            let root: Vec<i32> = derived[&b]
                .root
                .iter()
                .zip(&derived[&a].root)
                .map(|(x, y)| x + y)
                .collect();
            let rhs = solve(
                &eng,
                &target,
                &derived,
                &ordinary,
                first_cartan,
                &prod,
                &root,
                degree_bound,
                &label,
            )?;
            target.add_rule(b, a, rhs)?;
        }
    }
    Ok(target)
}

#[allow(clippy::too_many_arguments)]
fn solve<C: Coeff>(
    eng: &Engine<C>,
    target: &Presentation<C>,
    derived: &HashMap<GenId, Derived<C>>,
    ordinary: &[GenId],
    first_cartan: Option<usize>,
    prod: &Canon<C>,
    root: &[i32],
    bound: usize,
    label: &str,
) -> Result<WordPoly<C>, DeriveError> {
    // ordered exponent vectors with the right root and bounded degree
    let mut shapes = Vec::new();
    fn rec<C: Coeff>(
        i: usize,
        ordinary: &[GenId],
        derived: &HashMap<GenId, Derived<C>>,
        left: usize,
        acc: &mut Vec<u32>,
        root: &mut Vec<i32>,
        goal: &[i32],
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == ordinary.len() {
            if root.as_slice() == goal {
                out.push(acc.clone());
            }
            return;
        }
        let d = &derived[&ordinary[i]];
        let max = left.checked_div(d.degree).unwrap_or(0);
        for n in 0..=max {
            acc.push(n as u32);
            for (r, v) in root.iter_mut().zip(&d.root) {
                *r += v * n as i32;
            }
            rec(
                i + 1,
                ordinary,
                derived,
                left - n * d.degree,
                acc,
                root,
                goal,
                out,
            );
            for (r, v) in root.iter_mut().zip(&d.root) {
                *r -= v * n as i32;
            }
            acc.pop();
        }
    }
    rec(
        0,
        ordinary,
        derived,
        bound,
        &mut Vec::new(),
        &mut vec![0; root.len()],
        root,
        &mut shapes,
    );

    let kset: BTreeSet<Vec<i32>> = prod.keys().map(|(_, k, _)| k.clone()).collect();
    let zero_k = vec![0; eng.cartans.len()];
    let mut columns: Vec<(Vec<u32>, Vec<i32>, Canon<C>)> = Vec::new();
    for shape in shapes {
        let split = |cartan_m: &[i32]| -> Result<Canon<C>, DeriveError> {
            let mut cur = eng.unit();
            let mut cartan_done = first_cartan.is_none();
            for (j, &g) in ordinary.iter().enumerate() {
                if !cartan_done && (g as usize) > first_cartan.unwrap() {
                    cur = eng.mul(&cur, &eng.cartan_monomial(cartan_m))?;
                    cartan_done = true;
                }
                for _ in 0..shape[j] {
                    cur = eng.mul(&cur, &derived[&g].canon)?;
                }
            }
            if !cartan_done {
                cur = eng.mul(&cur, &eng.cartan_monomial(cartan_m))?;
            }
            Ok(cur)
        };
        let base = split(&zero_k)?;
        let shifts: BTreeSet<Vec<i32>> = base.keys().map(|(_, k, _)| k.clone()).collect();
        let mut ms = BTreeSet::new();
        if first_cartan.is_some() {
            for kappa in &kset {
                for s in &shifts {
                    ms.insert(
                        kappa
                            .iter()
                            .zip(s)
                            .map(|(a, b)| a - b)
                            .collect::<Vec<i32>>(),
                    );
                }
            }
        } else {
            ms.insert(zero_k.clone());
        }
        for m in ms {
            let canon = if m == zero_k {
                base.clone()
            } else {
                split(&m)?
            };
            columns.push((shape.clone(), m, canon));
        }
    }
    // dense system A c = prod
    let mut rows_index: BTreeMap<Key, usize> = BTreeMap::new();
    for k in prod.keys().chain(columns.iter().flat_map(|c| c.2.keys())) {
        let n = rows_index.len();
        rows_index.entry(k.clone()).or_insert(n);
    }
    let ncols = columns.len();
    let mut mat = vec![vec![C::zero(); ncols + 1]; rows_index.len()];
    for (j, (_, _, canon)) in columns.iter().enumerate() {
        for (k, c) in canon {
            mat[rows_index[k]][j] = c.clone();
        }
    }
    for (k, c) in prod {
        mat[rows_index[k]][ncols] = c.clone();
    }
    let pivots = rref(&mut mat, ncols + 1);
    if pivots.contains(&ncols) {
        return Err(DeriveError::Inexpressible(label.to_string()));
    }
    if pivots.len() < ncols {
        return Err(DeriveError::InconsistentIdeal(label.to_string()));
    }
    let mut rhs = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        let c = mat[r][ncols].clone();
        if c.is_zero() {
            continue;
        }
        let (shape, m, _) = &columns[p];
        let mut w = Word::empty();
        let mut cartan_done = false;
        for (j, &g) in ordinary.iter().enumerate() {
            if !cartan_done && first_cartan.is_some_and(|fc| (g as usize) > fc) {
                push_cartan(&mut w, target, eng, m);
                cartan_done = true;
            }
            if shape[j] > 0 {
                w.push(Letter {
                    gen: g,
                    exp: shape[j] as i32,
                });
            }
        }
        if !cartan_done && first_cartan.is_some() {
            push_cartan(&mut w, target, eng, m);
        }
        rhs.push((w, ZetaSeries::constant(c, RULE_ORDER)));
    }
    rhs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(rhs)
}

fn push_cartan<C: Coeff>(w: &mut Word, target: &Presentation<C>, eng: &Engine<C>, m: &[i32]) {
    let mut letters: Vec<Letter> = m
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let name = eng.input.alphabet.gen_name(eng.cartans[i]);
            Letter {
                gen: target.gen(name).expect("target shares Cartan letters"),
                exp: e,
            }
        })
        .collect();
    letters.sort();
    for l in letters {
        w.push(l);
    }
}
