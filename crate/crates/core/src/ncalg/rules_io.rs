//! Line-oriented rule-table files.
//!
//! ```text
//! twistcheck-rules 1
//! algebra D3
//! root-degree 3
//! generator f2 ordinary
//! generator ka cartan
//! weight ka f2 -1
//! rule f1 f0 -> [1] f0 f1 ; [-1] zeta f0^2
//! ```
//! A missing coefficient means 1, `1` is the empty word and `0` an empty
//! right-hand side.

use super::presentation::{GenKind, Presentation, WordPoly, RULE_ORDER};
use super::word::Word;
use super::NcError;
use crate::scalars::{Coeff, ZetaSeries};
use std::collections::BTreeMap;

const HEADER: &str = "twistcheck-rules 1";

pub fn render_rules<C: Coeff>(p: &Presentation<C>) -> String {
    let mut out = vec![
        HEADER.to_string(),
        format!("algebra {}", p.name()),
        format!("root-degree {}", p.root_degree()),
    ];
    if p.is_free() {
        out.push("free".to_string());
    }
    for g in p.generators() {
        let k = match g.kind {
            GenKind::Ordinary => "ordinary",
            GenKind::Cartan => "cartan",
        };
        out.push(format!("generator {} {}", g.name, k));
    }
    let mut weights: Vec<_> = p.weights().iter().collect();
    weights.sort();
    for ((c, g), w) in weights {
        out.push(format!(
            "weight {} {} {}",
            p.gen_name(*c),
            p.gen_name(*g),
            w
        ));
    }
    for r in p.rules() {
        let mut terms = Vec::new();
        for (w, c) in &r.rhs {
            for (k, a) in c.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut t = format!("[{}]", a.render());
                match k {
                    0 => {}
                    1 => t.push_str(" zeta"),
                    _ => t.push_str(&format!(" zeta^{k}")),
                }
                t.push(' ');
                t.push_str(&p.render_word(w));
                terms.push(t);
            }
        }
        let rhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" ; ")
        };
        out.push(format!(
            "rule {} {} -> {}",
            p.gen_name(r.lhs.0),
            p.gen_name(r.lhs.1),
            rhs
        ));
    }
    out.join("\n") + "\n"
}

/// Split `[coeff] rest` into its bracketed coefficient and the remainder.
fn split_coeff(s: &str) -> Result<(Option<&str>, &str), NcError> {
    let s = s.trim();
    if !s.starts_with('[') {
        return Ok((None, s));
    }
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return Ok((Some(&s[1..i]), s[i + 1..].trim()));
                }
            }
            _ => {}
        }
    }
    Err(NcError::Parse(format!("unbalanced brackets in {s:?}")))
}

fn parse_term<C: Coeff>(p: &Presentation<C>, s: &str) -> Result<(usize, C, Word), NcError> {
    let (coeff, rest) = split_coeff(s)?;
    let c = match coeff {
        Some(t) => C::parse_text(t)?,
        None => C::one(),
    };
    let mut zeta = 0usize;
    let mut word_toks = Vec::new();
    for tok in rest.split_whitespace() {
        if tok == "zeta" {
            zeta += 1;
        } else if let Some(k) = tok.strip_prefix("zeta^") {
            zeta += k
                .parse::<usize>()
                .map_err(|_| NcError::Parse(tok.to_string()))?;
        } else {
            word_toks.push(tok);
        }
    }
    let letters = p.parse_word(&word_toks.join(" "))?;
    let w = Word::from_letters(letters.iter().copied());
    if !p.is_free() && !w.is_sorted() {
        return Err(NcError::Parse(format!(
            "right-hand side word {rest:?} is not in normal order"
        )));
    }
    Ok((zeta, c, w))
}

pub fn parse_rules<C: Coeff>(text: &str) -> Result<Presentation<C>, NcError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    if lines.next() != Some(HEADER) {
        return Err(NcError::Parse(format!("expected header {HEADER:?}")));
    }
    let mut name = String::new();
    let mut root = 1u32;
    let mut free = false;
    let mut gens: Vec<(String, GenKind)> = Vec::new();
    let mut rest = Vec::new();
    for l in lines {
        let (head, tail) = l.split_once(' ').unwrap_or((l, ""));
        match head {
            "algebra" => name = tail.trim().to_string(),
            "root-degree" => {
                root = tail
                    .trim()
                    .parse()
                    .map_err(|_| NcError::Parse(l.to_string()))?
            }
            "free" => free = true,
            "generator" => {
                let mut it = tail.split_whitespace();
                let n = it.next().ok_or_else(|| NcError::Parse(l.to_string()))?;
                let k = match it.next() {
                    Some("ordinary") => GenKind::Ordinary,
                    Some("cartan") => GenKind::Cartan,
                    _ => return Err(NcError::Parse(l.to_string())),
                };
                gens.push((n.to_string(), k));
            }
            "weight" | "rule" => rest.push(l),
            _ => return Err(NcError::Parse(l.to_string())),
        }
    }
    let spec: Vec<(&str, GenKind)> = gens.iter().map(|(n, k)| (n.as_str(), *k)).collect();
    let mut p = if free {
        Presentation::free(&name, root, &spec)?
    } else {
        Presentation::new(&name, root, &spec)?
    };
    for l in rest {
        let (head, tail) = l.split_once(' ').unwrap();
        if head == "weight" {
            let v: Vec<&str> = tail.split_whitespace().collect();
            if v.len() != 3 {
                return Err(NcError::Parse(l.to_string()));
            }
            let w: i64 = v[2].parse().map_err(|_| NcError::Parse(l.to_string()))?;
            let (c, g) = (p.gen(v[0])?, p.gen(v[1])?);
            p.set_weight(c, g, w);
            continue;
        }
        let (lhs, rhs) = tail
            .split_once("->")
            .ok_or_else(|| NcError::Parse(l.to_string()))?;
        let lv: Vec<&str> = lhs.split_whitespace().collect();
        if lv.len() != 2 {
            return Err(NcError::Parse(l.to_string()));
        }
        let (b, a) = (p.gen(lv[0])?, p.gen(lv[1])?);
        let mut acc: BTreeMap<Word, Vec<C>> = BTreeMap::new();
        if rhs.trim() != "0" {
            for t in rhs.split(" ; ") {
                let (k, c, w) = parse_term(&p, t)?;
                let v = acc.entry(w).or_default();
                if v.len() <= k {
                    v.resize(k + 1, C::zero());
                }
                v[k] = v[k].add(&c);
            }
        }
        let poly: WordPoly<C> = acc
            .into_iter()
            .map(|(w, v)| (w, ZetaSeries::from_coeffs(v, RULE_ORDER)))
            .collect();
        p.add_rule(b, a, poly)?;
    }
    Ok(p)
}
