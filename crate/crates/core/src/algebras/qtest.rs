use crate::ncalg::{GenKind, NcError, Presentation, Word, WordPoly, RULE_ORDER};
use crate::scalars::{Coeff, ZetaSeries};

fn rhs<C: Coeff>(p: &Presentation<C>, terms: &[(C, &str)]) -> Result<WordPoly<C>, NcError> {
    terms
        .iter()
        .map(|(c, w)| {
            Ok((
                Word::from_letters(p.parse_word(w)?),
                ZetaSeries::constant(c.clone(), RULE_ORDER),
            ))
        })
        .collect()
}

/// The q-plane `y x = q² x y`.
pub fn qplane<C: Coeff>() -> Result<Presentation<C>, NcError> {
    let mut p = Presentation::new(
        "qplane",
        1,
        &[("x", GenKind::Ordinary), ("y", GenKind::Ordinary)],
    )?;
    let r = rhs(&p, &[(C::q_pow(2, 1), "x y")])?;
    p.add_rule(p.gen("y")?, p.gen("x")?, r)?;
    Ok(p)
}

/// Generators `u ≺ w ≺ v` with `w = [u, v]`, `[u, w]_{q²} = 0`, `[v, w]_{q⁻²} = 0`.
pub fn five_term_algebra<C: Coeff>() -> Result<Presentation<C>, NcError> {
    let mut p = Presentation::new(
        "fiveterm",
        1,
        &[
            ("u", GenKind::Ordinary),
            ("w", GenKind::Ordinary),
            ("v", GenKind::Ordinary),
        ],
    )?;
    let (u, w, v) = (p.gen("u")?, p.gen("w")?, p.gen("v")?);
    let r = rhs(&p, &[(C::one(), "u v"), (C::one().neg(), "w")])?;
    p.add_rule(v, u, r)?;
    let r = rhs(&p, &[(C::q_pow(-2, 1), "u w")])?;
    p.add_rule(w, u, r)?;
    let r = rhs(&p, &[(C::q_pow(-2, 1), "w v")])?;
    p.add_rule(v, w, r)?;
    Ok(p)
}

/// Polynomials in one variable `z`.
pub fn line<C: Coeff>() -> Result<Presentation<C>, NcError> {
    Presentation::new("line", 1, &[("z", GenKind::Ordinary)])
}
