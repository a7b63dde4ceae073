use anyhow::{anyhow, bail, Result};
use std::collections::{BTreeMap, BTreeSet};
use twistcheck::algebras::{d2, d3, d3_derived, f2bar, f3bar, usl, D3_RULES};
use twistcheck::hopf::{cocycle_residual, d2_standard, d3_delta_k, f2bar_coproduct, f3bar_coproduct, primitive_table, CoproductTable};
use twistcheck::ncalg::{check_local_confluence, render_rules, Presentation};
use twistcheck::qcalc::identity_suite;
use twistcheck::reps::{
    classical_limit_check, cybe_check, evaluate, frobenius_check, fundamental_rep, matrix_cocycle_residual, multiplicativity_failures,
    qybe_check, rp_matrix, MatrixRep,
};
use twistcheck::scalars::{Coeff, Rat};
use twistcheck::twists::{
    build_f2_aff, build_f2bar_aff, build_f3_aff, build_f3bar_aff, build_f_aff_rational, build_fp, build_iota, build_psi, build_rp,
    classical_r, d2_context, d3_context, f2bar_context, f3bar_context, iota_for_r, usl_context, verify_factorization_2,
    verify_factorization_3, verify_iota, IotaVariant, W3Variant,
};

/// Family parameters used by the a-dependent checks.
pub const A_VALUES: [(i64, i64); 4] = [(1, 1), (2, 1), (-1, 1), (1, 3)];

#[derive(Clone, Debug, PartialEq)]
pub enum Kind {
    Identities,
    Prop1,
    Prop2,
    CocycleF2Aff,
    CocycleF3Aff,
    CocycleF2Bar,
    CocycleF3Bar,
    CocyclePsi(usize),
    CocycleFp(usize, Rat),
    MatrixCocycle(usize, Rat),
    Specialization(usize),
    Iota(IotaVariant),
    Qybe(usize),
    ClassicalLimit(usize, Rat),
    Cybe(usize),
    Frobenius(usize),
    Confluence,
    Coproducts,
    RepHomomorphism(usize),
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    /// Default ζ-order; `None` for checks that are exact in every degree.
    pub order: Option<usize>,
    pub kind: Kind,
}

/// Residual size of one run; zero is a pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub residual_terms: usize,
}

fn a_label(n: i64, d: i64) -> String {
    if d == 1 {
        format!("a={n}")
    } else {
        format!("a={n}/{d}")
    }
}

/// Every check, in report order.
pub fn catalog() -> Vec<Check> {
    let mut c = Vec::new();
    let mut push = |id: String, order: Option<usize>, kind: Kind| c.push(Check { id, order, kind });
    push("identities".into(), Some(8), Kind::Identities);
    push("prop1".into(), Some(6), Kind::Prop1);
    push("prop2".into(), Some(3), Kind::Prop2);
    push("cocycle:F2aff".into(), Some(5), Kind::CocycleF2Aff);
    push("cocycle:F3aff".into(), Some(3), Kind::CocycleF3Aff);
    push("cocycle:F2bar".into(), Some(5), Kind::CocycleF2Bar);
    push("cocycle:F3bar".into(), Some(4), Kind::CocycleF3Bar);
    push("cocycle:Psi3".into(), Some(4), Kind::CocyclePsi(3));
    push("cocycle:Psi4".into(), Some(4), Kind::CocyclePsi(4));
    push("cocycle:Fp3".into(), Some(4), Kind::CocycleFp(3, Rat::one()));
    for (n, d) in A_VALUES {
        push(format!("cocycle:Fp4:{}", a_label(n, d)), Some(4), Kind::CocycleFp(4, Rat::new(n, d)));
    }
    push("matrix-cocycle:n=3".into(), None, Kind::MatrixCocycle(3, Rat::one()));
    for (n, d) in A_VALUES {
        push(format!("matrix-cocycle:n=4:{}", a_label(n, d)), None, Kind::MatrixCocycle(4, Rat::new(n, d)));
    }
    push("specialization:n=2".into(), Some(4), Kind::Specialization(2));
    push("specialization:n=3".into(), Some(3), Kind::Specialization(3));
    push("iota:n=3".into(), Some(4), Kind::Iota(IotaVariant::Iota2));
    for (n, d) in A_VALUES {
        push(format!("iota:n=4:{}", a_label(n, d)), Some(4), Kind::Iota(IotaVariant::Iota3Family(Rat::new(n, d))));
    }
    push("qybe:n=3".into(), None, Kind::Qybe(3));
    push("qybe:n=4".into(), None, Kind::Qybe(4));
    push("classical-limit:n=3".into(), Some(2), Kind::ClassicalLimit(3, Rat::one()));
    for (n, d) in A_VALUES {
        push(format!("classical-limit:n=4:{}", a_label(n, d)), Some(2), Kind::ClassicalLimit(4, Rat::new(n, d)));
    }
    push("cybe:n=3".into(), None, Kind::Cybe(3));
    push("cybe:n=4".into(), None, Kind::Cybe(4));
    push("frobenius:n=3".into(), None, Kind::Frobenius(3));
    push("frobenius:n=4".into(), None, Kind::Frobenius(4));
    push("confluence".into(), None, Kind::Confluence);
    push("coproducts".into(), Some(3), Kind::Coproducts);
    push("rep-homomorphism:n=3".into(), None, Kind::RepHomomorphism(3));
    push("rep-homomorphism:n=4".into(), None, Kind::RepHomomorphism(4));
    c
}

/// `key` names `id` itself or a prefix of it ending at a `:` boundary.
pub fn matches(key: &str, id: &str) -> bool {
    id == key || id.strip_prefix(key).is_some_and(|rest| rest.starts_with(':'))
}

/// Resolve a comma-separated suite selection (`all`, ids, or id prefixes).
pub fn select(suite: &str, overrides: &BTreeMap<String, usize>) -> Result<Vec<Check>> {
    let all = catalog();
    let mut chosen = BTreeSet::new();
    for key in suite.split(',').map(str::trim).filter(|k| !k.is_empty()) {
        let hits: Vec<usize> = if key == "all" {
            (0..all.len()).collect()
        } else {
            (0..all.len()).filter(|&i| matches(key, &all[i].id)).collect()
        };
        if hits.is_empty() {
            bail!("unknown check `{key}`; see `twistcheck verify --list`");
        }
        chosen.extend(hits);
    }
    if chosen.is_empty() {
        bail!("empty suite");
    }
    let mut out: Vec<Check> = chosen.into_iter().map(|i| all[i].clone()).collect();
    for (key, order) in overrides {
        let mut hit = false;
        for c in out.iter_mut().filter(|c| matches(key, &c.id)) {
            if c.order.is_none() {
                bail!("check `{}` is exact and takes no ζ-order", c.id);
            }
            c.order = Some(*order);
            hit = true;
        }
        if !hit {
            bail!("order override `{key}` matches no selected check");
        }
    }
    Ok(out)
}

fn count_cocycle<C: Coeff>(f: &twistcheck::hopf::TwistElement<C>, t: &CoproductTable<C>, o: usize) -> Result<usize> {
    Ok(cocycle_residual(f, t, o)?.len())
}

fn table_residuals<C: Coeff>(t: &CoproductTable<C>, o: usize) -> Result<usize> {
    Ok(t.check_homomorphism(o)?.len() + t.check_coassociativity(o)?.len())
}

fn presentation_residuals<C: Coeff>(p: &Presentation<C>) -> Result<usize> {
    Ok(p.missing_rules().len() + check_local_confluence(p, 3)?.len())
}

impl Check {
    pub fn run(&self, seed: u64) -> Result<Outcome> {
        let o = self.order.unwrap_or(0);
        let residual_terms = match &self.kind {
            Kind::Identities => identity_suite(o, o.min(6))?.iter().map(|c| c.residual_terms).sum(),
            Kind::Prop1 => verify_factorization_2(o)?.len(),
            Kind::Prop2 => verify_factorization_3(o, W3Variant::Printed)?.len(),
            Kind::CocycleF2Aff => {
                let c = d2_context()?;
                count_cocycle(&build_f2_aff(&c, o)?, &c.table, o)?
            }
            Kind::CocycleF3Aff => {
                let c = d3_context()?;
                count_cocycle(&build_f3_aff(&c, o)?, &c.table, o)?
            }
            Kind::CocycleF2Bar => {
                let c = f2bar_context()?;
                count_cocycle(&build_f2bar_aff(&c, o)?, &c.table, o)?
            }
            Kind::CocycleF3Bar => {
                let c = f3bar_context()?;
                count_cocycle(&build_f3bar_aff(&c, o)?, &c.table, o)?
            }
            Kind::CocyclePsi(n) => {
                let c = usl_context(*n)?;
                count_cocycle(&build_psi(&c, *n, o)?, &c.table, o)?
            }
            Kind::CocycleFp(n, a) => {
                let m = iota_for_r(*n, a, o)?;
                count_cocycle(&build_fp(&m, o)?, &m.target.table, o)?
            }
            Kind::MatrixCocycle(n, a) => matrix_cocycle_residual(*n, a, &fundamental_rep(*n)?)?.nnz(),
            Kind::Specialization(n) => {
                let r = build_f_aff_rational(*n, o)?;
                let oracle = match n {
                    2 => build_f2bar_aff(&f2bar_context()?, o)?.expand(o)?,
                    _ => build_f3bar_aff(&f3bar_context()?, o)?.expand(o)?,
                };
                r.specialized.sub(&oracle)?.len()
            }
            Kind::Iota(v) => {
                let m = build_iota(v.clone(), o)?;
                let psi = build_psi(&m.target, m.n, o)?;
                verify_iota(&m, &psi)?.iter().map(|f| f.residual.len().max(1)).sum()
            }
            Kind::Qybe(n) => qybe_check(&rp_matrix(*n, &Rat::one(), &fundamental_rep(*n)?)?, *n)?.nnz(),
            Kind::ClassicalLimit(n, a) => {
                let m = iota_for_r(*n, a, o)?;
                let r = build_rp(&build_fp(&m, o)?, o)?;
                let cr = classical_r(&m.target.pres, *n, a)?;
                let (lhs, rhs) = (r.zeta_coefficient(1), cr.zeta_coefficient(0));
                let keys: BTreeSet<_> = lhs.keys().chain(rhs.keys()).collect();
                let symbolic = keys.into_iter().filter(|k| lhs.get(*k) != rhs.get(*k)).count();
                let v = fundamental_rep(*n)?;
                symbolic + classical_limit_check(&rp_matrix(*n, a, &v)?, &cr, &m.target.pres, &v)?.nnz()
            }
            Kind::Cybe(n) => {
                let c = usl_context(*n)?;
                let s = cybe_check(&classical_r(&c.pres, *n, &Rat::one())?, &c.pres)?;
                let v = fundamental_rep(*n)?;
                s.len() + evaluate(&s, &c.pres, &[&v, &v, &v])?.nnz()
            }
            Kind::Frobenius(n) => {
                let c = usl_context(*n)?;
                usize::from(frobenius_check(&classical_r(&c.pres, *n, &Rat::one())?, &c.pres, *n)?.is_zero())
            }
            Kind::Confluence => {
                let mut k = 0;
                for p in [usl(3)?, usl(4)?, f2bar()?, f3bar()?] {
                    k += presentation_residuals(&p)?;
                }
                for p in [d2()?, d3()?] {
                    k += presentation_residuals(&p)?;
                }
                k + usize::from(render_rules(&d3_derived(6)?) != D3_RULES)
            }
            Kind::Coproducts => {
                let mut k = table_residuals(&d2_standard(d2()?.into())?, o)?;
                k += table_residuals(&d3_delta_k(d3()?.into())?, o)?;
                k += table_residuals(&f2bar_coproduct(f2bar()?.into())?, o)?;
                k += table_residuals(&f3bar_coproduct(f3bar()?.into())?, o)?;
                for n in [3, 4] {
                    k += table_residuals(&primitive_table(usl(n)?.into())?, o)?;
                }
                k
            }
            Kind::RepHomomorphism(n) => {
                let p = usl(*n)?;
                let v = fundamental_rep(*n)?;
                let vv = MatrixRep::coproduct(&v, &v)?;
                v.homomorphism_failures(&p)?.len()
                    + vv.homomorphism_failures(&p)?.len()
                    + multiplicativity_failures(&p, &v, seed, 20)?
            }
        };
        Ok(Outcome { residual_terms })
    }
}

/// Parse `p` or `p/q` into a nonzero rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>()?, d.trim().parse::<i64>()?),
        None => (s.trim().parse::<i64>()?, 1),
    };
    if d == 0 {
        return Err(anyhow!("zero denominator in `{s}`"));
    }
    Ok(Rat::new(n, d))
}
