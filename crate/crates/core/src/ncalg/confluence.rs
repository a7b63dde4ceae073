use super::element::TensorElement;
use super::presentation::{GenKind, Presentation};
use super::word::{Letter, Word};
use super::NcError;
use crate::scalars::{Coeff, ZetaSeries};
use smallvec::smallvec;

/// An overlap word whose two bracketings normalise differently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub word: String,
    pub split: usize,
    pub difference: String,
}

fn product<C: Coeff>(
    p: &Presentation<C>,
    letters: &[Letter],
    order: usize,
) -> Result<TensorElement<C>, NcError> {
    let w = Word::from_letters(letters.iter().copied());
    if w.is_sorted() {
        return Ok(TensorElement::term(smallvec![w], ZetaSeries::one(order)));
    }
    TensorElement::from_letters(p, letters, ZetaSeries::one(order))
}

/// Check every strictly descending word of length 3..=`degree_bound` by
/// comparing `(u)(v)` for each split `w = uv`, with both factors normalised
/// first. Cartan generators enter with exponents ±1. An empty report means
/// all overlap ambiguities resolve.
pub fn check_local_confluence<C: Coeff>(
    p: &Presentation<C>,
    degree_bound: usize,
) -> Result<Vec<Ambiguity>, NcError> {
    let order = 4 * degree_bound.max(3);
    let mut letters = Vec::new();
    for (i, g) in p.generators().iter().enumerate() {
        letters.push(Letter {
            gen: i as u16,
            exp: 1,
        });
        if g.kind == GenKind::Cartan {
            letters.push(Letter {
                gen: i as u16,
                exp: -1,
            });
        }
    }
    // descending by generator, so each candidate word has every adjacent pair out of order
    letters.sort_by(|a, b| b.gen.cmp(&a.gen).then(b.exp.cmp(&a.exp)));
    let mut report = Vec::new();
    let mut stack: Vec<Letter> = Vec::new();
    descend(p, &letters, 0, degree_bound, order, &mut stack, &mut report)?;
    Ok(report)
}

fn descend<C: Coeff>(
    p: &Presentation<C>,
    letters: &[Letter],
    start: usize,
    bound: usize,
    order: usize,
    stack: &mut Vec<Letter>,
    report: &mut Vec<Ambiguity>,
) -> Result<(), NcError> {
    if stack.len() >= 3 {
        check_word(p, stack, order, report)?;
    }
    if stack.len() == bound {
        return Ok(());
    }
    for i in start..letters.len() {
        let l = letters[i];
        if stack.last().is_some_and(|x| x.gen <= l.gen) {
            continue;
        }
        stack.push(l);
        descend(p, letters, i + 1, bound, order, stack, report)?;
        stack.pop();
    }
    Ok(())
}

fn check_word<C: Coeff>(
    p: &Presentation<C>,
    w: &[Letter],
    order: usize,
    report: &mut Vec<Ambiguity>,
) -> Result<(), NcError> {
    let mut reference: Option<TensorElement<C>> = None;
    for split in 1..w.len() {
        let u = product(p, &w[..split], order)?;
        let v = product(p, &w[split..], order)?;
        let uv = u.mul(&v, p)?;
        match &reference {
            None => reference = Some(uv),
            Some(r) => {
                let d = uv.sub(r)?;
                if !d.is_zero() {
                    report.push(Ambiguity {
                        word: w
                            .iter()
                            .map(|l| {
                                if l.exp == 1 {
                                    p.gen_name(l.gen).to_string()
                                } else {
                                    format!("{}^{}", p.gen_name(l.gen), l.exp)
                                }
                            })
                            .collect::<Vec<_>>()
                            .join(" "),
                        split,
                        difference: d.render(p),
                    });
                }
            }
        }
    }
    Ok(())
}
