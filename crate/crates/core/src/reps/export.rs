use super::{RepError, RepMatrix, ZPoly};
use crate::ncalg::{Presentation, TensorElement};
use crate::scalars::Rat;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

fn rat_str(c: &BigRational) -> String {
    c.to_string()
}

/// Row-major dense entries, each a ζ-coefficient array of rational strings.
pub fn matrix_json(m: &RepMatrix) -> Value {
    let rows: Vec<Value> = (0..m.dim())
        .map(|i| {
            Value::Array((0..m.dim()).map(|j| Value::Array(m.get(i, j).coeffs().iter().map(|c| Value::String(rat_str(c))).collect())).collect())
        })
        .collect();
    json!({ "dim": m.dim(), "entries": rows })
}

fn latex_rat(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// `c·x` with the sign pulled out; `x` empty for a bare number.
fn latex_term(c: &BigRational, x: &str, first: bool) -> String {
    let sign = match (c.is_negative(), first) {
        (true, true) => "-",
        (true, false) => " - ",
        (false, true) => "",
        (false, false) => " + ",
    };
    let a = c.abs();
    let body = if x.is_empty() {
        latex_rat(&a)
    } else if a.is_one() {
        x.to_string()
    } else {
        format!("{}\\,{x}", latex_rat(&a))
    };
    format!("{sign}{body}")
}

fn latex_poly(p: &ZPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, c) in p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let z = match k {
            0 => String::new(),
            1 => "\\zeta".into(),
            _ => format!("\\zeta^{{{k}}}"),
        };
        s += &latex_term(c, &z, s.is_empty());
    }
    s
}

pub fn matrix_latex(m: &RepMatrix) -> String {
    let rows: Vec<String> = (0..m.dim()).map(|i| (0..m.dim()).map(|j| latex_poly(&m.get(i, j))).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}\n", rows.join(" \\\\\n"))
}

fn latex_gen(name: &str) -> String {
    let (head, tail) = name.split_at(1);
    format!("{head}_{{{tail}}}")
}

/// `Σ c x∧y` for an antisymmetric constant bivector over generators.
pub fn bivector_latex(r: &TensorElement<Rat>, pres: &Presentation<Rat>) -> Result<String, RepError> {
    let mut coef: BTreeMap<(usize, usize), (String, String, BigRational)> = BTreeMap::new();
    for (legs, c) in r.terms() {
        if legs.len() != 2 || legs.iter().any(|w| w.letters().len() != 1 || w.letters()[0].exp != 1) {
            return Err(RepError::NotBivector("terms must be x⊗y".into()));
        }
        let (x, y) = (legs[0].letters()[0].gen, legs[1].letters()[0].gen);
        coef.insert((x as usize, y as usize), (pres.gen_name(x).to_string(), pres.gen_name(y).to_string(), c.coeff(0).0));
    }
    let mut out = String::new();
    for ((i, j), (x, y, c)) in &coef {
        let partner = coef.get(&(*j, *i)).map(|t| t.2.clone()).unwrap_or_else(BigRational::zero);
        if partner != -c.clone() {
            return Err(RepError::NotBivector(format!("{x}⊗{y} has no antisymmetric partner")));
        }
        // keep the orientation with D first, otherwise the upper-triangular leg first
        let keep = match (x.starts_with('D'), y.starts_with('D')) {
            (true, false) => true,
            (false, true) => false,
            _ => i < j,
        };
        if keep {
            out += &latex_term(c, &format!("{}\\wedge {}", latex_gen(x), latex_gen(y)), out.is_empty());
        }
    }
    Ok(if out.is_empty() { "0".into() } else { out })
}

/// `{legs, order, terms: [{words, coeffs}]}` with words rendered by the presentation.
pub fn element_json(x: &TensorElement<Rat>, pres: &Presentation<Rat>) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(legs, c)| {
            json!({
                "words": legs.iter().map(|w| pres.render_word(w)).collect::<Vec<_>>(),
                "coeffs": c.coeffs().iter().map(|a| rat_str(&a.0)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "legs": x.legs(), "order": x.order(), "terms": terms })
}
