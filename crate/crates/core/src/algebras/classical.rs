use crate::ncalg::{parse_rules, GenKind, NcError, Presentation, Word, WordPoly, RULE_ORDER};
use crate::scalars::{Coeff, Rat, ZetaSeries};

/// Shipped rule table of the three-generator-pair semi-classical algebra.
pub const F3BAR_RULES: &str = include_str!("../../data/f3bar.rules");

fn term(
    p: &Presentation<Rat>,
    c: Rat,
    zeta: usize,
    w: &str,
) -> Result<(Word, ZetaSeries<Rat>), NcError> {
    let letters = p.parse_word(w)?;
    Ok((
        Word::from_letters(letters),
        ZetaSeries::monomial(c, zeta, RULE_ORDER),
    ))
}

fn rule(p: &mut Presentation<Rat>, lhs: &str, rhs: &[(i64, usize, &str)]) -> Result<(), NcError> {
    let (b, a) = lhs.split_once(' ').expect("two letters");
    let (b, a) = (p.gen(b)?, p.gen(a)?);
    let poly: WordPoly<Rat> = rhs
        .iter()
        .map(|&(c, z, w)| term(p, Rat::from_int(c), z, w))
        .collect::<Result<_, _>>()?;
    p.add_rule(b, a, poly)
}

fn name_e(i: usize, j: usize) -> String {
    format!("E{i}{j}")
}

/// Value of `D_p` on the `i`-th basis vector: `(n−p)/n` for `i ≤ p`, else `−p/n`.
pub(crate) fn d_entry(n: usize, p: usize, i: usize) -> Rat {
    if i <= p {
        Rat::new((n - p) as i64, n as i64)
    } else {
        Rat::new(-(p as i64), n as i64)
    }
}

/// `E_ii − E_jj` in the `D` basis: `E_ii − I/n = D_i − D_{i−1}`.
fn cartan_diff(n: usize, i: usize, j: usize) -> Vec<(usize, i64)> {
    let mut c = vec![0i64; n + 1];
    c[i] += 1;
    c[i - 1] -= 1;
    c[j] -= 1;
    c[j - 1] += 1;
    (1..n).filter(|&p| c[p] != 0).map(|p| (p, c[p])).collect()
}

/// `U(sl_n)` on root vectors `E_ij` and the Cartan basis `D_1..D_{n−1}`.
/// Normal order: lowering vectors, then `D`s, then raising vectors.
pub fn usl(n: usize) -> Result<Presentation<Rat>, NcError> {
    let mut names = Vec::new();
    for i in 1..=n {
        for j in 1..i {
            names.push(name_e(i, j));
        }
    }
    for p in 1..n {
        names.push(format!("D{p}"));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            names.push(name_e(i, j));
        }
    }
    let spec: Vec<(&str, GenKind)> = names
        .iter()
        .map(|s| (s.as_str(), GenKind::Ordinary))
        .collect();
    let mut p = Presentation::new(&format!("Usl{n}"), 1, &spec)?;
    // bracket of two basis elements as (coefficient, name) pairs
    enum B {
        E(usize, usize),
        D(usize),
    }
    let parse = |s: &str| -> B {
        let d: Vec<usize> = s[1..]
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        if s.starts_with('D') {
            B::D(d[0])
        } else {
            B::E(d[0], d[1])
        }
    };
    let bracket = |x: &B, y: &B| -> Vec<(Rat, String)> {
        match (x, y) {
            (B::D(_), B::D(_)) => vec![],
            (B::D(p), B::E(i, j)) => {
                vec![(d_entry(n, *p, *i).sub(&d_entry(n, *p, *j)), name_e(*i, *j))]
            }
            (B::E(i, j), B::D(p)) => vec![(
                d_entry(n, *p, *i).sub(&d_entry(n, *p, *j)).neg(),
                name_e(*i, *j),
            )],
            (B::E(i, j), B::E(k, l)) => {
                let mut v = Vec::new();
                if j == k && i == l {
                    for (p, c) in cartan_diff(n, *i, *j) {
                        v.push((Rat::from_int(c), format!("D{p}")));
                    }
                } else {
                    if j == k {
                        v.push((Rat::one(), name_e(*i, *l)));
                    }
                    if l == i {
                        v.push((Rat::from_int(-1), name_e(*k, *j)));
                    }
                }
                v
            }
        }
    };
    for bi in 0..names.len() {
        for ai in 0..bi {
            let (b, a) = (bi as u16, ai as u16);
            let mut rhs: WordPoly<Rat> = vec![(
                Word::from_letters(p.parse_word(&format!("{} {}", names[ai], names[bi]))?),
                ZetaSeries::one(RULE_ORDER),
            )];
            for (c, g) in bracket(&parse(&names[bi]), &parse(&names[ai])) {
                rhs.push((
                    Word::from_letters(p.parse_word(&g)?),
                    ZetaSeries::constant(c, RULE_ORDER),
                ));
            }
            p.add_rule(b, a, rhs)?;
        }
    }
    Ok(p)
}

/// Semi-classical algebra on `f0 ≺ H ≺ f1`.
pub fn f2bar() -> Result<Presentation<Rat>, NcError> {
    let mut p = Presentation::new(
        "F2bar",
        1,
        &[
            ("f0", GenKind::Ordinary),
            ("H", GenKind::Ordinary),
            ("f1", GenKind::Ordinary),
        ],
    )?;
    rule(&mut p, "H f0", &[(1, 0, "f0 H"), (-2, 0, "f0")])?;
    rule(&mut p, "f1 f0", &[(1, 0, "f0 f1"), (-1, 1, "f0^2")])?;
    rule(&mut p, "f1 H", &[(1, 0, "H f1"), (2, 0, "f1")])?;
    Ok(p)
}

/// The semi-classical algebra on `f2 ≺ f0 ≺ em ≺ Ha ≺ Hb ≺ ea ≺ f3 ≺ f1`, built
/// from its commutator table. `em`, `ea` are the images of `ê_{∓α}` and `Ha`, `Hb`
/// the coroots.
pub fn f3bar_table() -> Result<Presentation<Rat>, NcError> {
    let gens = ["f2", "f0", "em", "Ha", "Hb", "ea", "f3", "f1"];
    let spec: Vec<(&str, GenKind)> = gens.iter().map(|g| (*g, GenKind::Ordinary)).collect();
    let mut p = Presentation::new("F3bar", 1, &spec)?;
    let r = &mut p;
    rule(r, "f0 f2", &[(1, 0, "f2 f0")])?;
    rule(r, "em f2", &[(1, 0, "f2 em"), (-1, 0, "f0")])?;
    rule(r, "em f0", &[(1, 0, "f0 em")])?;
    // [H, x] = w x for the weight vectors below the Cartan block
    for (h, x, w) in [
        ("Ha", "f2", 1),
        ("Ha", "f0", -1),
        ("Ha", "em", -2),
        ("Hb", "f2", -2),
        ("Hb", "f0", -1),
        ("Hb", "em", 1),
    ] {
        let xh = format!("{x} {h}");
        rule(r, &format!("{h} {x}"), &[(1, 0, &xh), (w, 0, x)])?;
    }
    rule(r, "Hb Ha", &[(1, 0, "Ha Hb")])?;
    rule(r, "ea f2", &[(1, 0, "f2 ea")])?;
    rule(r, "ea f0", &[(1, 0, "f0 ea"), (-1, 0, "f2")])?;
    rule(r, "ea em", &[(1, 0, "em ea"), (1, 0, "Ha")])?;
    // x H = H x − w x for the weight vectors above it
    for (x, h, w) in [
        ("ea", "Ha", 2),
        ("ea", "Hb", -1),
        ("f3", "Ha", 1),
        ("f3", "Hb", -2),
        ("f1", "Ha", -1),
        ("f1", "Hb", -1),
    ] {
        let hx = format!("{h} {x}");
        rule(r, &format!("{x} {h}"), &[(1, 0, &hx), (-w, 0, x)])?;
    }
    rule(r, "f3 f2", &[(1, 0, "f2 f3"), (-1, 1, "f2^2")])?;
    rule(r, "f3 f0", &[(1, 0, "f0 f3"), (-1, 1, "f2 f0")])?;
    rule(
        r,
        "f3 em",
        &[
            (1, 0, "em f3"),
            (-1, 1, "f0"),
            (-1, 0, "f1"),
            (1, 1, "f2 em"),
        ],
    )?;
    rule(r, "f3 ea", &[(1, 0, "ea f3")])?;
    rule(r, "f1 f2", &[(1, 0, "f2 f1")])?;
    rule(r, "f1 f0", &[(1, 0, "f0 f1"), (1, 1, "f0^2")])?;
    rule(r, "f1 em", &[(1, 0, "em f1"), (1, 1, "f0 em")])?;
    rule(
        r,
        "f1 ea",
        &[
            (1, 0, "ea f1"),
            (-1, 1, "f2"),
            (-1, 0, "f3"),
            (-1, 1, "f2 Ha"),
        ],
    )?;
    rule(r, "f1 f3", &[(1, 0, "f3 f1"), (1, 1, "f2 f1")])?;
    Ok(p)
}

/// The shipped table, loaded from its data file.
pub fn f3bar() -> Result<Presentation<Rat>, NcError> {
    parse_rules(F3BAR_RULES)
}
