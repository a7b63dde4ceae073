use super::{CoproductTable, CoproductTag, HopfError};
use crate::ncalg::Presentation;
use crate::scalars::{Coeff, QCoeff, Rat};
use std::sync::Arc;

/// Standard coproduct of `e_{−α} ≺ q^{h_α} ≺ e_{δ−α}`.
pub fn d2_standard(p: Arc<Presentation<QCoeff>>) -> Result<CoproductTable<QCoeff>, HopfError> {
    let one = QCoeff::one();
    let mut t = CoproductTable::new(CoproductTag::Standard, p);
    t.group_like("k")?;
    t.set_terms(
        "ed",
        &[(one.clone(), 0, "k", "ed"), (one.clone(), 0, "ed", "")],
    )?;
    t.set_terms("em", &[(one.clone(), 0, "em", "k"), (one, 0, "", "em")])?;
    Ok(t)
}

/// The K-twisted coproduct on the hatted generators, `ka = q^{h_α/3}`, `kb = q^{h_β/3}`.
/// `q^{h⊥_α} = ka² kb⁴`, `q^{h⊥_β} = ka⁴ kb²`, `q^{h⊥_{α+β}} = ka² kb⁻²`.
pub fn d3_delta_k(p: Arc<Presentation<QCoeff>>) -> Result<CoproductTable<QCoeff>, HopfError> {
    let one = QCoeff::one();
    let q = |k| QCoeff::q_pow(k, 3);
    let mut t = CoproductTable::new(CoproductTag::KTwisted, p);
    t.group_like("ka")?;
    t.group_like("kb")?;
    t.set_terms(
        "emb",
        &[
            (one.clone(), 0, "ka^2 kb^-2", "emb"),
            (one.clone(), 0, "emb", ""),
        ],
    )?;
    t.set_terms(
        "ema",
        &[
            (one.clone(), 0, "ka^-4 kb^-2", "ema"),
            (one.clone(), 0, "ema", ""),
        ],
    )?;
    t.set_terms(
        "ea",
        &[
            (one.clone(), 0, "ea", "ka^2 kb^-2"),
            (one.clone(), 0, "", "ea"),
        ],
    )?;
    t.set_terms(
        "edab",
        &[
            (one.clone(), 0, "edab", "ka^-4 kb^-2"),
            (one.clone(), 0, "", "edab"),
        ],
    )?;
    t.set_terms(
        "edb",
        &[
            (one.clone(), 0, "edb", "ka^-2 kb^-4"),
            (one.clone(), 0, "", "edb"),
            (one.sub(&q(2)), 0, "ea", "edab ka^2 kb^-2"),
        ],
    )?;
    t.set_terms(
        "emab",
        &[
            (one.clone(), 0, "ka^-2 kb^-4", "emab"),
            (one.clone(), 0, "emab", ""),
            (one.sub(&q(-2)), 0, "emb ka^-4 kb^-2", "ema"),
        ],
    )?;
    Ok(t)
}

/// Every generator primitive.
pub fn primitive_table<C: Coeff>(p: Arc<Presentation<C>>) -> Result<CoproductTable<C>, HopfError> {
    let names: Vec<String> = p.generators().iter().map(|g| g.name.clone()).collect();
    let mut t = CoproductTable::new(CoproductTag::Classical, p);
    for n in &names {
        t.primitive(n)?;
    }
    Ok(t)
}

/// `Δ(f̄₁) = f̄₁⊗1 + 1⊗f̄₁ + ζ·H̄_α⊗f̄₀`; `zeta_power = 0` gives the variant without ζ.
pub fn f2bar_coproduct_with(
    p: Arc<Presentation<Rat>>,
    zeta_power: usize,
) -> Result<CoproductTable<Rat>, HopfError> {
    let mut t = primitive_table(p)?;
    let one = Rat::one();
    t.set_terms(
        "f1",
        &[
            (one.clone(), 0, "f1", ""),
            (one.clone(), 0, "", "f1"),
            (one, zeta_power, "H", "f0"),
        ],
    )?;
    Ok(t)
}

pub fn f2bar_coproduct(p: Arc<Presentation<Rat>>) -> Result<CoproductTable<Rat>, HopfError> {
    f2bar_coproduct_with(p, 1)
}

pub fn f3bar_coproduct(p: Arc<Presentation<Rat>>) -> Result<CoproductTable<Rat>, HopfError> {
    let mut t = primitive_table(p)?;
    let one = Rat::one();
    let m = one.neg();
    t.set_terms(
        "f1",
        &[
            (one.clone(), 0, "f1", ""),
            (one.clone(), 0, "", "f1"),
            (m.clone(), 1, "Ha", "f0"),
            (m, 1, "Hb", "f0"),
            (one.clone(), 1, "f2", "em"),
        ],
    )?;
    t.set_terms(
        "f3",
        &[
            (one.clone(), 0, "f3", ""),
            (one.clone(), 0, "", "f3"),
            (one.clone(), 1, "Hb", "f2"),
            (one, 1, "ea", "f0"),
        ],
    )?;
    Ok(t)
}
