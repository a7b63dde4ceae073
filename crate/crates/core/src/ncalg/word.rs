use smallvec::SmallVec;
use std::fmt;

/// Index of a generator inside its presentation. Generators are stored in
/// normal order, so comparing ids compares sort positions.
pub type GenId = u16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: GenId,
    /// Positive for ordinary generators; any nonzero value for invertible (Cartan) ones.
    pub exp: i32,
}

/// Run-length encoded monomial. Adjacent letters always have distinct generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(SmallVec<[Letter; 4]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn single(gen: GenId, exp: i32) -> Self {
        let mut w = Word::empty();
        w.push(Letter { gen, exp });
        w
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Append a letter, merging with the last run when the generator repeats.
    pub fn push(&mut self, l: Letter) {
        if l.exp == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.gen == l.gen {
                last.exp += l.exp;
                if last.exp == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in other.letters() {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// The word without its last run.
    pub fn without_last(&self) -> Word {
        let mut w = self.clone();
        w.0.pop();
        w
    }

    /// The word without its first run.
    pub fn without_first(&self) -> Word {
        Word(self.0[1..].iter().copied().collect())
    }

    /// Total number of ordinary letters, counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
    }

    /// Letters expanded to unit exponents (Cartan runs kept whole).
    pub fn units(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().flat_map(|l| {
            let (n, e) = if l.exp > 0 { (l.exp, 1) } else { (-l.exp, -1) };
            std::iter::repeat_n(Letter { gen: l.gen, exp: e }, n as usize)
        })
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|p| p[0].gen < p[1].gen)
    }

    pub fn reversed(&self) -> Word {
        Word::from_letters(self.0.iter().rev().copied())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "g{}", l.gen)?;
            if l.exp != 1 {
                write!(f, "^{}", l.exp)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_merges_and_cancels() {
        let mut w = Word::single(3, 2);
        w.push(Letter { gen: 3, exp: -2 });
        assert!(w.is_empty());
        let w = Word::from_letters([
            Letter { gen: 1, exp: 1 },
            Letter { gen: 1, exp: 2 },
            Letter { gen: 2, exp: 1 },
        ]);
        assert_eq!(w.letters().len(), 2);
        assert_eq!(w.degree(), 4);
    }
}
