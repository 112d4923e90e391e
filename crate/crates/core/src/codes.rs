//! A-codes, B-codes and weighted Z-codes of reduced words, and counting of
//! disjoint pattern occurrences inside them.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigUint, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{ReducedWord, Side};

/// Tuple of strictly positive integers extracted from a word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Code(Vec<BigUint>);

impl Code {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArgument("code entries must be positive".into()));
        }
        Ok(Code(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Code::new(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Code {
        Code(self.0.iter().rev().cloned().collect())
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[BigUint]) -> fmt::Result {
    f.write_str("(")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str(")")
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Non-empty tuple of positive integers counted inside codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Vec<BigUint>);

impl Pattern {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("pattern must be non-empty".into()));
        }
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArgument("pattern entries must be positive".into()));
        }
        Ok(Pattern(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Pattern::new(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Pattern {
        Pattern(self.0.iter().rev().cloned().collect())
    }

    pub fn contains_entry(&self, x: &BigUint) -> bool {
        self.0.contains(x)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts `(1,2,3)` or `1,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let entries = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<BigUint>()
                    .map_err(|_| Error::InvalidArgument(format!("bad pattern entry {:?} in {s:?}", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(entries)
    }
}

/// Run lengths of equal consecutive letters in the `side`-tuple of `w`.
pub fn code(w: &ReducedWord, side: Side) -> Code {
    let mut entries = Vec::new();
    let mut current: Option<&crate::factors::Element> = None;
    let mut run = 0u64;
    for e in w.side_tuple(side) {
        if current == Some(e) {
            run += 1;
        } else {
            if run > 0 {
                entries.push(BigUint::from(run));
            }
            current = Some(e);
            run = 1;
        }
    }
    if run > 0 {
        entries.push(BigUint::from(run));
    }
    Code(entries)
}

/// Per maximal same-sign run of integer letters on `side`, the absolute
/// value of the run's sum.
pub fn weighted_z_code(w: &ReducedWord, side: Side) -> Result<Code> {
    if !w.group().factor(side).is_integer() {
        return Err(Error::NotIntegerFactor(side));
    }
    let mut entries = Vec::new();
    let mut acc = BigInt::zero();
    for e in w.side_tuple(side) {
        let k = e.as_integer().expect("integer factor");
        if !acc.is_zero() && acc.is_positive() != k.is_positive() {
            entries.push(acc.magnitude().clone());
            acc = BigInt::zero();
        }
        acc += k;
    }
    if !acc.is_zero() {
        entries.push(acc.magnitude().clone());
    }
    Ok(Code(entries))
}

fn failure_table<T: PartialEq>(pat: &[T]) -> Vec<usize> {
    let mut fail = vec![0usize; pat.len()];
    let mut k = 0;
    for i in 1..pat.len() {
        while k > 0 && pat[i] != pat[k] {
            k = fail[k - 1];
        }
        if pat[i] == pat[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Maximum number of pairwise-disjoint occurrences of `z` as a block of
/// consecutive entries of `c`.
///
/// Leftmost-greedy matching is optimal here: the earliest-ending occurrence
/// can always replace the first occurrence of any disjoint family.
pub fn count_disjoint(c: &[BigUint], z: &Pattern) -> usize {
    let pat = z.entries();
    if c.len() < pat.len() {
        return 0;
    }
    let fail = failure_table(pat);
    let mut count = 0;
    let mut k = 0;
    for x in c {
        while k > 0 && *x != pat[k] {
            k = fail[k - 1];
        }
        if *x == pat[k] {
            k += 1;
        }
        if k == pat.len() {
            count += 1;
            k = 0;
        }
    }
    count
}

/// Position of the first occurrence of `needle` in `hay`.
fn find<T: PartialEq>(hay: &[T], needle: &[T]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    let fail = failure_table(needle);
    let mut k = 0;
    for (i, x) in hay.iter().enumerate() {
        while k > 0 && *x != needle[k] {
            k = fail[k - 1];
        }
        if *x == needle[k] {
            k += 1;
        }
        if k == needle.len() {
            return Some(i + 1 - k);
        }
    }
    None
}

/// `z` is generic when its reversal is not a block of `z·z`.
pub fn is_generic(z: &Pattern) -> bool {
    let doubled: Vec<&BigUint> = z.entries().iter().chain(z.entries()).collect();
    let rev: Vec<&BigUint> = z.entries().iter().rev().collect();
    find(&doubled, &rev).is_none()
}
