//! Letters and words in `A * B` and their reduced normal form.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::factors::{Element, GroupConfig};

/// Longest word any operation will materialise.
pub const MAX_WORD_LEN: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    pub fn letter_char(self) -> char {
        match self {
            Side::A => 'a',
            Side::B => 'b',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Side::A),
            "B" | "b" => Ok(Side::B),
            other => Err(Error::InvalidArgument(format!("unknown side {other:?}, expected A or B"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub side: Side,
    pub elem: Element,
}

impl Letter {
    pub fn new(side: Side, elem: Element) -> Self {
        Letter { side, elem }
    }
}

fn check_letters(group: &GroupConfig, letters: &[Letter]) -> Result<()> {
    for l in letters {
        let f = group.factor(l.side);
        if !f.contains(&l.elem) {
            return Err(Error::InvalidElement { factor: f.to_string(), elem: format!("{:?}", l.elem) });
        }
    }
    Ok(())
}

fn same_group(x: &Arc<GroupConfig>, y: &Arc<GroupConfig>) -> bool {
    Arc::ptr_eq(x, y) || **x == **y
}

/// Arbitrary product of letters, not necessarily reduced.
#[derive(Clone, Debug)]
pub struct Word {
    group: Arc<GroupConfig>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(group: Arc<GroupConfig>, letters: Vec<Letter>) -> Result<Self> {
        check_letters(&group, &letters)?;
        Ok(Word { group, letters })
    }

    pub fn empty(group: Arc<GroupConfig>) -> Self {
        Word { group, letters: Vec::new() }
    }

    pub fn group(&self) -> &Arc<GroupConfig> {
        &self.group
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub(crate) fn extend_from(&mut self, other: &Word) {
        self.letters.extend_from_slice(&other.letters);
    }

    /// Letter-wise inverse of the unreduced word.
    pub(crate) fn inverted(&self) -> Word {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter::new(l.side, self.group.factor(l.side).inv(&l.elem)))
            .collect();
        Word { group: self.group.clone(), letters }
    }

    pub fn reduce(&self) -> ReducedWord {
        reduce(self)
    }
}

impl From<ReducedWord> for Word {
    fn from(w: ReducedWord) -> Self {
        Word { group: w.group, letters: w.letters }
    }
}

/// Stack-based reducer: merges same-side neighbours and drops identities in
/// a single left-to-right pass.
pub(crate) struct Reducer<'g> {
    group: &'g GroupConfig,
    stack: Vec<Letter>,
}

impl<'g> Reducer<'g> {
    pub(crate) fn with_capacity(group: &'g GroupConfig, cap: usize) -> Self {
        Reducer { group, stack: Vec::with_capacity(cap) }
    }

    pub(crate) fn push(&mut self, letter: Letter) {
        let factor = self.group.factor(letter.side);
        if factor.is_identity(&letter.elem) {
            return;
        }
        match self.stack.last_mut() {
            Some(top) if top.side == letter.side => {
                let merged = factor.mul(&top.elem, &letter.elem);
                if factor.is_identity(&merged) {
                    self.stack.pop();
                } else {
                    top.elem = merged;
                }
            }
            _ => self.stack.push(letter),
        }
    }

    pub(crate) fn push_all<'a>(&mut self, letters: impl IntoIterator<Item = &'a Letter>) {
        for l in letters {
            self.push(l.clone());
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.stack.len()
    }

    pub(crate) fn finish(self, group: Arc<GroupConfig>) -> ReducedWord {
        ReducedWord { group, letters: self.stack }
    }
}

/// Canonical reduced representative of a word.
pub fn reduce(w: &Word) -> ReducedWord {
    let mut r = Reducer::with_capacity(&w.group, w.letters.len());
    r.push_all(&w.letters);
    r.finish(w.group.clone())
}

/// Reduced word: no identity letters and no two neighbours on the same side.
#[derive(Clone, Debug)]
pub struct ReducedWord {
    group: Arc<GroupConfig>,
    letters: Vec<Letter>,
}

impl PartialEq for ReducedWord {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && same_group(&self.group, &other.group)
    }
}

impl Eq for ReducedWord {}

impl ReducedWord {
    pub fn empty(group: Arc<GroupConfig>) -> Self {
        ReducedWord { group, letters: Vec::new() }
    }

    /// Single-letter word (empty if `elem` is the identity).
    pub fn letter(group: Arc<GroupConfig>, side: Side, elem: Element) -> Result<Self> {
        Word::new(group, vec![Letter::new(side, elem)]).map(|w| w.reduce())
    }

    /// Accepts a letter sequence that is already reduced.
    pub fn from_reduced_letters(group: Arc<GroupConfig>, letters: Vec<Letter>) -> Result<Self> {
        check_letters(&group, &letters)?;
        for (i, l) in letters.iter().enumerate() {
            if group.factor(l.side).is_identity(&l.elem) {
                return Err(Error::InvalidArgument(format!("letter {i} is the identity")));
            }
            if i > 0 && letters[i - 1].side == l.side {
                return Err(Error::InvalidArgument(format!("letters {} and {i} share a side", i - 1)));
            }
        }
        Ok(ReducedWord { group, letters })
    }

    pub fn group(&self) -> &Arc<GroupConfig> {
        &self.group
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<&Letter> {
        self.letters.first()
    }

    pub fn last(&self) -> Option<&Letter> {
        self.letters.last()
    }

    /// Elements of the letters on `side`, in order.
    pub fn side_tuple(&self, side: Side) -> impl Iterator<Item = &Element> + '_ {
        self.letters.iter().filter(move |l| l.side == side).map(|l| &l.elem)
    }

    pub fn is_compatible(&self, other: &ReducedWord) -> bool {
        same_group(&self.group, &other.group)
    }

    pub fn multiply(&self, other: &ReducedWord) -> Result<ReducedWord> {
        if !self.is_compatible(other) {
            return Err(Error::ConfigMismatch);
        }
        let mut r = Reducer::with_capacity(&self.group, self.len() + other.len());
        r.push_all(&self.letters);
        r.push_all(&other.letters);
        Ok(r.finish(self.group.clone()))
    }

    pub fn invert(&self) -> ReducedWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter::new(l.side, self.group.factor(l.side).inv(&l.elem)))
            .collect();
        ReducedWord { group: self.group.clone(), letters }
    }

    /// `self^n`. Words starting and ending on different sides are simply
    /// repeated; everything else goes through the reducer.
    pub fn power(&self, n: i64) -> Result<ReducedWord> {
        if n == 0 || self.is_empty() {
            return Ok(ReducedWord::empty(self.group.clone()));
        }
        let base = if n < 0 { self.invert() } else { self.clone() };
        let reps = n.unsigned_abs() as usize;
        if base.len().saturating_mul(reps) > MAX_WORD_LEN {
            return Err(Error::WordTooLong { limit: MAX_WORD_LEN });
        }
        let (first, last) = (base.first().unwrap(), base.last().unwrap());
        if first.side != last.side {
            let mut letters = Vec::with_capacity(base.len() * reps);
            for _ in 0..reps {
                letters.extend_from_slice(&base.letters);
            }
            return Ok(ReducedWord { group: base.group, letters });
        }
        let mut r = Reducer::with_capacity(&base.group, base.len() * reps);
        for _ in 0..reps {
            r.push_all(&base.letters);
        }
        Ok(r.finish(base.group.clone()))
    }

    /// Prefix of the first `n` letters (still reduced).
    pub fn prefix(&self, n: usize) -> ReducedWord {
        ReducedWord { group: self.group.clone(), letters: self.letters[..n.min(self.len())].to_vec() }
    }

    /// Suffix starting at letter `n` (still reduced).
    pub fn suffix(&self, n: usize) -> ReducedWord {
        ReducedWord { group: self.group.clone(), letters: self.letters[n.min(self.len())..].to_vec() }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::format_word(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::Factor;

    fn z5_z2() -> Arc<GroupConfig> {
        GroupConfig::new(Factor::cyclic(5).unwrap(), Factor::cyclic(2).unwrap(), None).into_shared()
    }

    fn zz() -> Arc<GroupConfig> {
        GroupConfig::new(Factor::Integer, Factor::Integer, None).into_shared()
    }

    fn a(k: u32) -> Letter {
        Letter::new(Side::A, Element::Finite(k))
    }

    fn b(k: u32) -> Letter {
        Letter::new(Side::B, Element::Finite(k))
    }

    #[test]
    fn inverse_pair_cancels() {
        let w = Word::new(z5_z2(), vec![a(1), a(4)]).unwrap();
        assert!(w.reduce().is_empty());
    }

    #[test]
    fn boundary_merge_keeps_nontrivial_product() {
        // (a b c)(c^-1 d e) with b, d on side A and bd != 1
        let g = z5_z2();
        let w1 = ReducedWord::from_reduced_letters(g.clone(), vec![b(1), a(2), b(1)]).unwrap();
        let w2 = ReducedWord::from_reduced_letters(g.clone(), vec![b(1), a(1), b(1)]).unwrap();
        let p = w1.multiply(&w2).unwrap();
        assert_eq!(p.letters(), &[b(1), a(3), b(1)]);
    }

    #[test]
    fn reduce_is_idempotent_on_reduced_words() {
        let g = z5_z2();
        let w = ReducedWord::from_reduced_letters(g, vec![a(2), b(1), a(3)]).unwrap();
        assert_eq!(Word::from(w.clone()).reduce(), w);
    }

    #[test]
    fn multiply_examples() {
        let g = zz();
        let int = |s: Side, k: i64| Letter::new(s, Element::int(k));
        let u = ReducedWord::from_reduced_letters(g.clone(), vec![int(Side::A, 2), int(Side::B, 1)]).unwrap();
        let v = ReducedWord::from_reduced_letters(g.clone(), vec![int(Side::B, -1), int(Side::A, 3)]).unwrap();
        assert_eq!(u.multiply(&v).unwrap().letters(), &[int(Side::A, 5)]);
        assert_eq!(u.multiply(&ReducedWord::empty(g.clone())).unwrap(), u);
        assert!(u.multiply(&u.invert()).unwrap().is_empty());
    }

    #[test]
    fn mixed_configs_rejected() {
        let u = ReducedWord::letter(z5_z2(), Side::A, Element::Finite(1)).unwrap();
        let v = ReducedWord::letter(zz(), Side::A, Element::int(1)).unwrap();
        assert!(matches!(u.multiply(&v), Err(Error::ConfigMismatch)));
    }

    #[test]
    fn invert_examples() {
        let g = z5_z2();
        assert!(ReducedWord::empty(g.clone()).invert().is_empty());
        let w = ReducedWord::from_reduced_letters(g, vec![a(2), b(1)]).unwrap();
        assert_eq!(w.invert().letters(), &[b(1), a(3)]);
        assert_eq!(w.invert().invert(), w);
    }

    #[test]
    fn power_examples() {
        let g = z5_z2();
        let w = ReducedWord::from_reduced_letters(g.clone(), vec![a(1), b(1), a(2), b(1)]).unwrap();
        assert!(w.power(0).unwrap().is_empty());
        assert_eq!(w.power(1).unwrap(), w);
        let w3 = w.power(3).unwrap();
        assert_eq!(w3.len(), 12);
        assert_eq!(&w3.letters()[4..8], w.letters());
        assert_eq!(w.power(-2).unwrap(), w.invert().power(2).unwrap());
        // same-side ends merge: (a b a)^2 = a b a^2 b a
        let u = ReducedWord::from_reduced_letters(g, vec![a(1), b(1), a(1)]).unwrap();
        assert_eq!(u.power(2).unwrap().letters(), &[a(1), b(1), a(2), b(1), a(1)]);
    }

    #[test]
    fn from_reduced_letters_rejects_unreduced() {
        assert!(ReducedWord::from_reduced_letters(z5_z2(), vec![a(1), a(1)]).is_err());
        assert!(ReducedWord::from_reduced_letters(z5_z2(), vec![a(0)]).is_err());
        assert!(ReducedWord::from_reduced_letters(z5_z2(), vec![a(7)]).is_err());
    }
}
