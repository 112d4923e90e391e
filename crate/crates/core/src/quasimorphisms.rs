//! Code quasimorphisms, weighted code quasimorphisms and their rational
//! linear combinations.
//!
//! For a pattern `z`, `theta_z(g)` counts disjoint occurrences of `z` in a
//! code of `g` and the quasimorphism is `f_z(g) = theta_z(g) - theta_zbar(g)`.
//! Both kinds have defect at most 30.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};

use crate::codes::{self, Code, Pattern};
use crate::error::{Error, Result};
use crate::factors::GroupConfig;
use crate::words::{ReducedWord, Side};

/// A-priori defect bound of a single code or weighted code quasimorphism.
pub const ATOM_DEFECT_BOUND: i64 = 30;

/// Bound on `|theta(w1 w2) - theta(w1) - theta(w2)|` for reduced concatenations.
pub const THETA_SUBADDITIVITY_BOUND: usize = 2;

/// Bound on `|f(x)|` for a single letter `x`.
pub const LETTER_BOUND: i64 = 2;

/// Default power used when homogenising.
pub const DEFAULT_HOMOGENISATION_POWER: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeKind {
    Plain,
    Weighted,
}

/// One code or weighted code quasimorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub kind: CodeKind,
    pub side: Side,
    pub pattern: Pattern,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            CodeKind::Plain => "code",
            CodeKind::Weighted => "weighted",
        };
        write!(f, "{kind}:{}:{}", self.side, self.pattern)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QmSpec {
    Code { side: Side, pattern: Pattern },
    Weighted { side: Side, pattern: Pattern },
    Combination(Vec<(BigRational, QmSpec)>),
}

impl QmSpec {
    pub fn code(side: Side, pattern: Pattern) -> Self {
        QmSpec::Code { side, pattern }
    }

    pub fn weighted(side: Side, pattern: Pattern) -> Self {
        QmSpec::Weighted { side, pattern }
    }

    /// `f^A_z + f^B_z`.
    pub fn symmetric_sum(pattern: Pattern) -> Self {
        QmSpec::Combination(vec![
            (BigRational::from_integer(1.into()), QmSpec::code(Side::A, pattern.clone())),
            (BigRational::from_integer(1.into()), QmSpec::code(Side::B, pattern)),
        ])
    }

    fn from_atom(atom: Atom) -> Self {
        match atom.kind {
            CodeKind::Plain => QmSpec::Code { side: atom.side, pattern: atom.pattern },
            CodeKind::Weighted => QmSpec::Weighted { side: atom.side, pattern: atom.pattern },
        }
    }

    /// Checks that weighted terms sit on integer factors and that every
    /// combination is non-empty.
    pub fn validate(&self, cfg: &GroupConfig) -> Result<()> {
        match self {
            QmSpec::Code { .. } => Ok(()),
            QmSpec::Weighted { side, .. } => {
                if cfg.factor(*side).is_integer() {
                    Ok(())
                } else {
                    Err(Error::NotIntegerFactor(*side))
                }
            }
            QmSpec::Combination(terms) => {
                if terms.is_empty() {
                    return Err(Error::InvalidArgument("empty combination".into()));
                }
                terms.iter().try_for_each(|(_, q)| q.validate(cfg))
            }
        }
    }

    /// Flattened linear combination with equal atoms merged, in atom order.
    pub fn terms(&self) -> Vec<(BigRational, Atom)> {
        let mut acc: std::collections::BTreeMap<Atom, BigRational> = Default::default();
        self.collect_terms(&BigRational::from_integer(1.into()), &mut acc);
        acc.into_iter().map(|(a, c)| (c, a)).collect()
    }

    fn collect_terms(&self, scale: &BigRational, acc: &mut std::collections::BTreeMap<Atom, BigRational>) {
        let atom = match self {
            QmSpec::Code { side, pattern } => Atom { kind: CodeKind::Plain, side: *side, pattern: pattern.clone() },
            QmSpec::Weighted { side, pattern } => {
                Atom { kind: CodeKind::Weighted, side: *side, pattern: pattern.clone() }
            }
            QmSpec::Combination(terms) => {
                for (c, q) in terms {
                    q.collect_terms(&(scale * c), acc);
                }
                return;
            }
        };
        *acc.entry(atom).or_insert_with(BigRational::zero) += scale;
    }

    /// Whether exchanging the sides leaves the combination unchanged.
    pub fn is_side_symmetric(&self) -> bool {
        let terms: Vec<_> = self.terms().into_iter().filter(|(c, _)| !c.is_zero()).collect();
        let mut swapped: Vec<_> = terms
            .iter()
            .map(|(c, a)| (Atom { side: a.side.other(), ..a.clone() }, c.clone()))
            .collect();
        swapped.sort();
        let mut original: Vec<_> = terms.into_iter().map(|(c, a)| (a, c)).collect();
        original.sort();
        original == swapped
    }
}

impl fmt::Display for QmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QmSpec::Code { side, pattern } => write!(f, "code:{side}:{pattern}"),
            QmSpec::Weighted { side, pattern } => write!(f, "weighted:{side}:{pattern}"),
            QmSpec::Combination(_) => {
                let terms = self.terms();
                if terms.is_empty() {
                    return f.write_str("0*code:A:(1)");
                }
                for (i, (c, atom)) in terms.iter().enumerate() {
                    if c.is_negative() {
                        write!(f, "-{}*{atom}", -c)?;
                    } else if i > 0 {
                        write!(f, "+{c}*{atom}")?;
                    } else {
                        write!(f, "{c}*{atom}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

fn parse_atom(text: &str) -> Result<Atom> {
    let bad = || Error::InvalidArgument(format!("bad quasimorphism {text:?}; expected code:A:(1,2,3) or weighted:B:(1,2,3)"));
    let mut parts = text.trim().splitn(3, ':');
    let kind = match parts.next().ok_or_else(bad)?.trim() {
        "code" => CodeKind::Plain,
        "weighted" => CodeKind::Weighted,
        _ => return Err(bad()),
    };
    let side: Side = parts.next().ok_or_else(bad)?.parse()?;
    let pattern: Pattern = parts.next().ok_or_else(bad)?.parse()?;
    Ok(Atom { kind, side, pattern })
}

impl FromStr for QmSpec {
    type Err = Error;

    /// `code:A:(1,2,3)`, `weighted:A:(1,2,3)` or a signed sum of
    /// `coef*atom` terms such as `1/2*code:A:(1,2,3)+1/2*code:B:(1,2,3)`.
    fn from_str(s: &str) -> Result<Self> {
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut current = String::new();
        let mut negative = false;
        for ch in s.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && !current.trim().is_empty() && !current.trim_end().ends_with('*') => {
                    pieces.push((negative, std::mem::take(&mut current)));
                    negative = ch == '-';
                    continue;
                }
                '-' if depth == 0 && current.trim().is_empty() => {
                    negative = !negative;
                    continue;
                }
                '+' if depth == 0 && current.trim().is_empty() => continue,
                _ => {}
            }
            current.push(ch);
        }
        pieces.push((negative, current));

        if pieces.len() == 1 && !pieces[0].0 && !pieces[0].1.contains('*') {
            return parse_atom(&pieces[0].1).map(QmSpec::from_atom);
        }
        let mut terms = Vec::with_capacity(pieces.len());
        for (neg, piece) in pieces {
            let (coef, atom) = match piece.split_once('*') {
                Some((c, a)) => {
                    let c: BigRational = c
                        .trim()
                        .parse()
                        .map_err(|_| Error::InvalidArgument(format!("bad coefficient {:?}", c.trim())))?;
                    (c, parse_atom(a)?)
                }
                None => (BigRational::from_integer(1.into()), parse_atom(&piece)?),
            };
            terms.push((if neg { -coef } else { coef }, QmSpec::from_atom(atom)));
        }
        Ok(QmSpec::Combination(terms))
    }
}

/// `theta` for one side: disjoint occurrences of `z` in the (weighted) code.
pub fn theta(w: &ReducedWord, side: Side, z: &Pattern, weighted: bool) -> Result<usize> {
    let c = if weighted { codes::weighted_z_code(w, side)? } else { codes::code(w, side) };
    Ok(codes::count_disjoint(c.entries(), z))
}

/// Codes of one word, computed at most once per (side, kind).
struct CodeCache<'w> {
    word: &'w ReducedWord,
    slots: [Option<Code>; 4],
}

impl<'w> CodeCache<'w> {
    fn new(word: &'w ReducedWord) -> Self {
        CodeCache { word, slots: Default::default() }
    }

    fn get(&mut self, side: Side, kind: CodeKind) -> Result<&Code> {
        let idx = (side as usize) * 2 + kind as usize;
        if self.slots[idx].is_none() {
            let c = match kind {
                CodeKind::Plain => codes::code(self.word, side),
                CodeKind::Weighted => codes::weighted_z_code(self.word, side)?,
            };
            self.slots[idx] = Some(c);
        }
        Ok(self.slots[idx].as_ref().unwrap())
    }
}

fn atom_value(cache: &mut CodeCache<'_>, atom: &Atom) -> Result<i64> {
    let c = cache.get(atom.side, atom.kind)?;
    let forward = codes::count_disjoint(c.entries(), &atom.pattern) as i64;
    let backward = codes::count_disjoint(c.entries(), &atom.pattern.reversed()) as i64;
    Ok(forward - backward)
}

/// Value of the quasimorphism on `w`.
pub fn evaluate(q: &QmSpec, w: &ReducedWord) -> Result<BigRational> {
    q.validate(w.group())?;
    let mut cache = CodeCache::new(w);
    match q {
        QmSpec::Code { side, pattern } | QmSpec::Weighted { side, pattern } => {
            let kind = if matches!(q, QmSpec::Code { .. }) { CodeKind::Plain } else { CodeKind::Weighted };
            let v = atom_value(&mut cache, &Atom { kind, side: *side, pattern: pattern.clone() })?;
            Ok(BigRational::from_integer(v.into()))
        }
        QmSpec::Combination(_) => {
            let mut total = BigRational::zero();
            for (c, atom) in q.terms() {
                if c.is_zero() {
                    continue;
                }
                total += c * BigRational::from_integer(atom_value(&mut cache, &atom)?.into());
            }
            Ok(total)
        }
    }
}

/// Upper bound on a defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectBound(BigRational);

impl DefectBound {
    pub fn new(value: BigRational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::InvalidArgument("defect bound must be non-negative".into()));
        }
        Ok(DefectBound(value))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for DefectBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// 30 for a single atom, `sum |c_i| D(q_i)` for a combination.
pub fn a_priori_defect(q: &QmSpec) -> DefectBound {
    fn go(q: &QmSpec) -> BigRational {
        match q {
            QmSpec::Code { .. } | QmSpec::Weighted { .. } => BigRational::from_integer(ATOM_DEFECT_BOUND.into()),
            QmSpec::Combination(terms) => terms.iter().map(|(c, q)| c.abs() * go(q)).sum(),
        }
    }
    DefectBound(go(q))
}

/// `f(w^N)/N` together with the certified error `D/N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogenisationEstimate {
    pub value: BigRational,
    pub error_bound: BigRational,
    pub power: u64,
}

impl HomogenisationEstimate {
    pub fn lower(&self) -> BigRational {
        &self.value - &self.error_bound
    }

    pub fn upper(&self) -> BigRational {
        &self.value + &self.error_bound
    }
}

/// Interval estimate of the homogenisation `lim f(w^n)/n`.
pub fn homogenise(q: &QmSpec, w: &ReducedWord, power: u64) -> Result<HomogenisationEstimate> {
    if power == 0 {
        return Err(Error::InvalidArgument("homogenisation power must be at least 1".into()));
    }
    let exp = i64::try_from(power).map_err(|_| Error::InvalidArgument("power too large".into()))?;
    let wn = w.power(exp)?;
    let n = BigRational::from_integer(BigInt::from(power));
    let value = evaluate(q, &wn)? / &n;
    let error_bound = a_priori_defect(q).value() / &n;
    Ok(HomogenisationEstimate { value, error_bound, power })
}
