use super::poly;
use crate::ncalg::{
    derive_rule_table, parse_rules, ChevalleyInput, DeriveError, GenKind, NcError, NcPoly,
    Presentation, Word, RULE_ORDER,
};
use crate::scalars::{QCoeff, UPoly, ZetaSeries};
use std::collections::HashMap;

/// Shipped rule table of the rank-two affine Borel-type subalgebra.
pub const D3_RULES: &str = include_str!("../../data/d3.rules");

/// `e_{−α} ≺ k ≺ e_{δ−α}` with `k = q^{h_α}`; the two root vectors commute.
pub fn d2() -> Result<Presentation<QCoeff>, NcError> {
    let mut p = Presentation::new(
        "D2",
        1,
        &[
            ("em", GenKind::Ordinary),
            ("k", GenKind::Cartan),
            ("ed", GenKind::Ordinary),
        ],
    )?;
    let (em, k, ed) = (p.gen("em")?, p.gen("k")?, p.gen("ed")?);
    p.set_weight(k, em, -2);
    p.set_weight(k, ed, -2);
    p.add_rule(
        ed,
        em,
        vec![(
            Word::from_letters([
                crate::ncalg::Letter { gen: em, exp: 1 },
                crate::ncalg::Letter { gen: ed, exp: 1 },
            ]),
            ZetaSeries::one(RULE_ORDER),
        )],
    )?;
    Ok(p)
}

fn q(k: i64) -> QCoeff {
    QCoeff::q_pow(k, 3)
}

/// `1/(q − q⁻¹)` with `q = t³`.
fn inv_q_minus_qinv() -> QCoeff {
    // t³/(t⁶ − 1)
    QCoeff::from_parts(
        UPoly::from_i64(&[0, 0, 0, 1]),
        UPoly::from_i64(&[-1, 0, 0, 0, 0, 0, 1]),
        3,
    )
}

/// Normal order of the derived algebra.
pub const D3_ORDER: [(&str, GenKind); 8] = [
    ("emb", GenKind::Ordinary),
    ("emab", GenKind::Ordinary),
    ("ema", GenKind::Ordinary),
    ("ka", GenKind::Cartan),
    ("kb", GenKind::Cartan),
    ("ea", GenKind::Ordinary),
    ("edb", GenKind::Ordinary),
    ("edab", GenKind::Ordinary),
];

/// Chevalley data of the affine `sl3` quantum group restricted to
/// `e_{−β}, e_{−α}, e_α, e_{α0}` and `ka = q^{h_α/3}`, `kb = q^{h_β/3}`, together
/// with the hatted generators as Chevalley polynomials.
///
/// `emb_prefactor` and `ema_prefactor` are the Cartan words multiplying
/// `e_{−β}` in `ê_{−β}` and `e_{−α}` in `ê_{−α}`.
pub fn d3_chevalley_with(
    emb_prefactor: &str,
    ema_prefactor: &str,
) -> Result<(ChevalleyInput<QCoeff>, Vec<(&'static str, NcPoly<QCoeff>)>), NcError> {
    let k = GenKind::Ordinary;
    let mut a = Presentation::free(
        "Uq-sl3-affine",
        3,
        &[
            ("yb", k),
            ("ya", k),
            ("ka", GenKind::Cartan),
            ("kb", GenKind::Cartan),
            ("xa", k),
            ("x0", k),
        ],
    )?;
    let (yb, ya, ka, kb, xa, x0) = (
        a.gen("yb")?,
        a.gen("ya")?,
        a.gen("ka")?,
        a.gen("kb")?,
        a.gen("xa")?,
        a.gen("x0")?,
    );
    // ka e_γ ka⁻¹ = t^{(α|γ)}, kb e_γ kb⁻¹ = t^{(β|γ)}
    for (g, wa, wb) in [(yb, 1, -2), (ya, -2, 1), (xa, 2, -1), (x0, -1, -1)] {
        a.set_weight(ka, g, wa);
        a.set_weight(kb, g, wb);
    }
    let one = QCoeff::one();
    let qq = q(1).add(&q(-1));
    let serre = vec![
        poly(
            &a,
            &[
                (one.clone(), "ya ya yb"),
                (qq.neg(), "ya yb ya"),
                (one.clone(), "yb ya ya"),
            ],
            0,
        )?,
        poly(
            &a,
            &[
                (one.clone(), "yb yb ya"),
                (qq.neg(), "yb ya yb"),
                (one.clone(), "ya yb yb"),
            ],
            0,
        )?,
        poly(
            &a,
            &[
                (one.clone(), "xa xa x0"),
                (qq.neg(), "xa x0 xa"),
                (one.clone(), "x0 xa xa"),
            ],
            0,
        )?,
        poly(
            &a,
            &[
                (one.clone(), "x0 x0 xa"),
                (qq.neg(), "x0 xa x0"),
                (one.clone(), "xa x0 x0"),
            ],
            0,
        )?,
    ];
    let c = inv_q_minus_qinv();
    let mut cross = HashMap::new();
    cross.insert(
        (xa, ya),
        poly(&a, &[(c.clone(), "ka^3"), (c.neg(), "ka^-3")], 0)?,
    );
    let mut roots = HashMap::new();
    roots.insert(ya, vec![-1, 0, 0]);
    roots.insert(yb, vec![0, -1, 0]);
    roots.insert(xa, vec![1, 0, 0]);
    roots.insert(x0, vec![0, 0, 1]);
    let emb = poly(&a, &[(one.clone(), &format!("{emb_prefactor} yb"))], 0)?;
    let ema = poly(&a, &[(one.clone(), &format!("{ema_prefactor} ya"))], 0)?;
    let ea = poly(&a, &[(one.clone(), "xa ka kb^-1")], 0)?;
    let edab = poly(&a, &[(one.clone(), "ka^-1 kb x0")], 0)?;
    let edb = ea.mul(&edab, &a)?.sub(&edab.mul(&ea, &a)?.scale(&q(2)))?;
    let emab = emb.mul(&ema, &a)?.sub(&ema.mul(&emb, &a)?.scale(&q(-2)))?;
    let input = ChevalleyInput {
        alphabet: a,
        negative: vec![yb, ya],
        positive: vec![xa, x0],
        roots,
        serre,
        cross,
    };
    Ok((
        input,
        vec![
            ("emb", emb),
            ("emab", emab),
            ("ema", ema),
            ("ea", ea),
            ("edb", edb),
            ("edab", edab),
        ],
    ))
}

/// Chevalley data with `ê_{−β} = q^{h_β^⊥/2} e_{−β}` and `ê_{−α} = q^{−h_β^⊥/2} e_{−α}`.
pub fn d3_chevalley(
) -> Result<(ChevalleyInput<QCoeff>, Vec<(&'static str, NcPoly<QCoeff>)>), NcError> {
    d3_chevalley_with(EMB_PREFACTOR, EMA_PREFACTOR)
}

/// `q^{h_β^⊥/2}` in the cube-root Cartan letters.
pub const EMB_PREFACTOR: &str = "ka^2 kb";
/// `q^{−h_β^⊥/2}`.
pub const EMA_PREFACTOR: &str = "ka^-2 kb^-1";

/// Derive the rank-two table from the Chevalley data.
pub fn d3_derived(degree_bound: usize) -> Result<Presentation<QCoeff>, DeriveError> {
    let (input, defs) = d3_chevalley()?;
    derive_rule_table(&input, "D3", &D3_ORDER, &defs, degree_bound)
}

/// The shipped table, loaded from its data file.
pub fn d3() -> Result<Presentation<QCoeff>, NcError> {
    parse_rules(D3_RULES)
}
