//! Text grammar for words.
//!
//! ```text
//! word   := term (ws term)*
//! term   := atom ['^' signed-int]
//! atom   := letter | '(' word ')' | '1'
//! letter := ('a' | 'b') ['[' element ']']
//! ```
//!
//! A bare `a`/`b` is the generator `1` of an integer or cyclic factor. A
//! letter raised to a power folds to a single letter; a parenthesised word
//! raised to a power is expanded. `1` is the empty word.

use std::sync::Arc;

use num::{BigInt, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::factors::GroupConfig;
use crate::words::{Letter, ReducedWord, Side, Word, MAX_WORD_LEN};

struct Cursor<'t> {
    text: &'t str,
    pos: usize,
}

impl<'t> Cursor<'t> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
        self.pos > start
    }

    fn error_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        let before = &self.text[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::syntax(line, column, msg)
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        self.error_at(self.pos, msg)
    }
}

struct WordParser<'t, 'g> {
    cur: Cursor<'t>,
    group: &'g Arc<GroupConfig>,
}

impl WordParser<'_, '_> {
    fn word(&mut self, nested: bool) -> Result<Word> {
        let mut out = Word::empty(self.group.clone());
        let mut terms = 0usize;
        loop {
            self.cur.skip_ws();
            match self.cur.peek() {
                None if nested => return Err(self.cur.error("unclosed '('")),
                None => break,
                Some(')') if nested => break,
                Some(')') => return Err(self.cur.error("unmatched ')'")),
                _ => {}
            }
            let term = self.term()?;
            out.extend_from(&term);
            if out.len() > MAX_WORD_LEN {
                return Err(Error::WordTooLong { limit: MAX_WORD_LEN });
            }
            terms += 1;
            if let Some(c) = self.cur.peek() {
                if !(c.is_whitespace() || c == ')' || c == '(') {
                    return Err(self.cur.error(format!(
                        "unexpected {c:?}; terms must be separated by whitespace"
                    )));
                }
            }
        }
        if terms == 0 {
            return Err(self.cur.error("expected a word"));
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Word> {
        let start = self.cur.pos;
        let atom = self.atom()?;
        if self.cur.peek() != Some('^') {
            return Ok(match atom {
                Atom::Letter(l) => {
                    let mut w = Word::empty(self.group.clone());
                    w.push(l);
                    w
                }
                Atom::Group(w) => w,
            });
        }
        self.cur.bump();
        let exp = self.exponent()?;
        match atom {
            Atom::Letter(l) => {
                let elem = self.group.factor(l.side).power(&l.elem, &exp)?;
                let mut w = Word::empty(self.group.clone());
                w.push(Letter::new(l.side, elem));
                Ok(w)
            }
            Atom::Group(w) => {
                if exp.is_zero() || w.is_empty() {
                    return Ok(Word::empty(self.group.clone()));
                }
                let reps = exp
                    .abs()
                    .to_usize()
                    .filter(|r| r.saturating_mul(w.len()) <= MAX_WORD_LEN)
                    .ok_or_else(|| self.cur.error_at(start, "power expands beyond the word-length limit"))?;
                let base = if exp.is_negative() { w.inverted() } else { w };
                let mut out = Word::empty(self.group.clone());
                for _ in 0..reps {
                    out.extend_from(&base);
                }
                Ok(out)
            }
        }
    }

    fn exponent(&mut self) -> Result<BigInt> {
        let start = self.cur.pos;
        if matches!(self.cur.peek(), Some('-' | '+')) {
            self.cur.bump();
        }
        let digits_start = self.cur.pos;
        while self.cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.cur.bump();
        }
        if self.cur.pos == digits_start {
            return Err(self.cur.error("expected an integer exponent after '^'"));
        }
        Ok(self.cur.text[start..self.cur.pos].parse().expect("checked digits"))
    }

    fn atom(&mut self) -> Result<Atom> {
        let start = self.cur.pos;
        match self.cur.bump() {
            Some('(') => {
                let w = self.word(true)?;
                if self.cur.bump() != Some(')') {
                    return Err(self.cur.error("expected ')'"));
                }
                Ok(Atom::Group(w))
            }
            Some('1') => Ok(Atom::Group(Word::empty(self.group.clone()))),
            Some(c @ ('a' | 'b')) => {
                let side = if c == 'a' { Side::A } else { Side::B };
                let factor = self.group.factor(side);
                if self.cur.peek() == Some('[') {
                    self.cur.bump();
                    let name_start = self.cur.pos;
                    while self.cur.peek().is_some_and(|c| c != ']') {
                        self.cur.bump();
                    }
                    if self.cur.peek() != Some(']') {
                        return Err(self.cur.error("unclosed '['"));
                    }
                    let name = &self.cur.text[name_start..self.cur.pos];
                    self.cur.bump();
                    let elem = factor.parse_element(name)?;
                    Ok(Atom::Letter(Letter::new(side, elem)))
                } else {
                    let elem = factor.generator().ok_or(Error::NoGenerator(side))?;
                    Ok(Atom::Letter(Letter::new(side, elem)))
                }
            }
            Some(c) => Err(self.cur.error_at(start, format!("unexpected {c:?}"))),
            None => Err(self.cur.error("unexpected end of input")),
        }
    }
}

enum Atom {
    Letter(Letter),
    Group(Word),
}

/// Parses a word without reducing it.
pub fn parse_word(text: &str, group: &Arc<GroupConfig>) -> Result<Word> {
    let mut p = WordParser { cur: Cursor { text, pos: 0 }, group };
    p.word(false)
}

/// Parses and reduces.
pub fn parse_reduced(text: &str, group: &Arc<GroupConfig>) -> Result<ReducedWord> {
    parse_word(text, group).map(|w| w.reduce())
}

/// Canonical text form; the empty word prints as `1`.
pub fn format_word(w: &ReducedWord) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let group = w.group();
    let parts: Vec<String> = w
        .letters()
        .iter()
        .map(|l| {
            let factor = group.factor(l.side);
            let c = l.side.letter_char();
            match factor.generator() {
                Some(g) if g == l.elem => c.to_string(),
                Some(_) => format!("{c}^{}", factor.format_element(&l.elem)),
                None => format!("{c}[{}]", factor.format_element(&l.elem)),
            }
        })
        .collect();
    parts.join(" ")
}
