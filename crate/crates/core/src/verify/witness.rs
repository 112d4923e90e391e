//! Witness words on which code quasimorphisms grow linearly, and the
//! commutator witness in `[Aut(G), G]`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{BigInt, BigUint, One, ToPrimitive};

use crate::automorphisms::{aut_commutator, Automorphism, AutomorphismGen, FactorMap};
use crate::codes::{code, is_generic, Code, Pattern};
use crate::error::{Error, Result};
use crate::factors::{unit_inverse, CayleyTable, Element, Factor, GroupConfig};
use crate::quasimorphisms::QmSpec;
use crate::words::{Letter, ReducedWord, Reducer, Side, MAX_WORD_LEN};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessMode {
    /// `f^A_z` on `A * B`.
    CodeDistinct,
    /// `f^A_z + f^B_z` on `A * B` with `A` isomorphic to `B`.
    CodeIsomorphic,
    /// `f^Z_z` on `Z * B`.
    Weighted,
}

impl FromStr for WitnessMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "code-distinct-factors" | "distinct" => Ok(WitnessMode::CodeDistinct),
            "code-isomorphic-factors" | "isomorphic" => Ok(WitnessMode::CodeIsomorphic),
            "weighted" => Ok(WitnessMode::Weighted),
            other => Err(Error::InvalidArgument(format!("unknown witness mode {other:?}"))),
        }
    }
}

impl fmt::Display for WitnessMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessMode::CodeDistinct => "code-distinct-factors",
            WitnessMode::CodeIsomorphic => "code-isomorphic-factors",
            WitnessMode::Weighted => "weighted",
        })
    }
}

/// Pattern, tail entry and letters for a witness word.
///
/// In the code modes `a1 != a2` are non-trivial in `A`; `b1` (and in the
/// isomorphic mode `b2 != b1`) are non-trivial in `B`. In the weighted mode
/// only `b1` is used, from the factor opposite the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSpec {
    pub z: Pattern,
    pub m: BigUint,
    pub a1: Element,
    pub a2: Element,
    pub b1: Element,
    pub b2: Element,
}

fn nontrivial(f: &Factor, skip: &[Element]) -> Option<Element> {
    let candidates: Vec<Element> = match f {
        Factor::Integer => (1..=4).map(Element::int).collect(),
        _ => f.elements().expect("finite factor"),
    };
    candidates.into_iter().find(|x| !f.is_identity(x) && !skip.contains(x))
}

impl WitnessSpec {
    /// Smallest `m` not among the entries of `z`.
    pub fn default_m(z: &Pattern) -> BigUint {
        let mut m = BigUint::one();
        while z.contains_entry(&m) {
            m += 1u32;
        }
        m
    }

    /// Default letters for `mode`: the first two non-trivial elements of
    /// `A`, and the first one or two of `B` (their swap images in the
    /// isomorphic mode).
    pub fn with_defaults(z: Pattern, m: Option<BigUint>, cfg: &GroupConfig, mode: WitnessMode) -> Result<Self> {
        let m = m.unwrap_or_else(|| WitnessSpec::default_m(&z));
        let (sa, sb) = match mode {
            WitnessMode::Weighted => {
                let s = cfg.integer_side().ok_or(Error::Precondition(
                    "weighted witnesses need an infinite cyclic factor".into(),
                ))?;
                (s, s.other())
            }
            _ => (Side::A, Side::B),
        };
        let fa = cfg.factor(sa);
        let fb = cfg.factor(sb);
        let too_small = |side: Side| Error::Precondition(format!("factor {side} needs at least three elements"));
        let (a1, a2) = match mode {
            WitnessMode::Weighted => (Element::int(1), Element::int(-1)),
            _ => {
                let a1 = nontrivial(fa, &[]).ok_or_else(|| too_small(sa))?;
                let a2 = nontrivial(fa, &[a1.clone()]).ok_or_else(|| too_small(sa))?;
                (a1, a2)
            }
        };
        let (b1, b2) = match mode {
            WitnessMode::CodeIsomorphic => {
                let iso = cfg.swap().ok_or(Error::SwapUnavailable)?;
                (iso.to_b(&a1), iso.to_b(&a2))
            }
            _ => {
                let b1 = fb.generator().or_else(|| nontrivial(fb, &[])).ok_or_else(|| too_small(sb))?;
                (b1.clone(), b1)
            }
        };
        Ok(WitnessSpec { z, m, a1, a2, b1, b2 })
    }

    fn validate(&self, cfg: &GroupConfig, mode: WitnessMode) -> Result<()> {
        if !is_generic(&self.z) {
            return Err(Error::NonGeneric(self.z.to_string()));
        }
        if self.z.len() % 2 == 1 && (self.m == BigUint::ZERO || self.z.contains_entry(&self.m)) {
            return Err(Error::Precondition(format!("m = {} must be positive and not an entry of {}", self.m, self.z)));
        }
        let check = |side: Side, x: &Element, name: &str| -> Result<()> {
            let f = cfg.factor(side);
            if !f.contains(x) {
                return Err(Error::InvalidElement { factor: f.to_string(), elem: format!("{x:?}") });
            }
            if f.is_identity(x) {
                return Err(Error::Precondition(format!("{name} must be non-trivial")));
            }
            Ok(())
        };
        match mode {
            WitnessMode::Weighted => {
                let s = cfg.integer_side().ok_or(Error::Precondition(
                    "weighted witnesses need an infinite cyclic factor".into(),
                ))?;
                check(s.other(), &self.b1, "b")
            }
            WitnessMode::CodeDistinct | WitnessMode::CodeIsomorphic => {
                check(Side::A, &self.a1, "a1")?;
                check(Side::A, &self.a2, "a2")?;
                if self.a1 == self.a2 {
                    return Err(Error::Precondition("a1 and a2 must be distinct (A needs at least three elements)".into()));
                }
                check(Side::B, &self.b1, "b1")?;
                if mode == WitnessMode::CodeIsomorphic {
                    if cfg.swap().is_none() {
                        return Err(Error::SwapUnavailable);
                    }
                    check(Side::B, &self.b2, "b2")?;
                    if self.b1 == self.b2 {
                        return Err(Error::Precondition("b1 and b2 must be distinct".into()));
                    }
                }
                Ok(())
            }
        }
    }
}

fn exponent(n: &BigUint) -> Result<usize> {
    n.to_usize().filter(|&k| k <= MAX_WORD_LEN).ok_or(Error::WordTooLong { limit: MAX_WORD_LEN })
}

/// The witness word: `code(w, A)` (or the weighted Z-code) is `z` when
/// `len(z)` is even and `(z, m)` when it is odd, and the matching
/// quasimorphism grows by exactly 1 (2 in the isomorphic mode) per power.
pub fn witness_word(spec: &WitnessSpec, cfg: &Arc<GroupConfig>, mode: WitnessMode) -> Result<ReducedWord> {
    spec.validate(cfg, mode)?;
    let mut entries: Vec<&BigUint> = spec.z.entries().iter().collect();
    if entries.len() % 2 == 1 {
        entries.push(&spec.m);
    }
    let mut out = Reducer::with_capacity(cfg, 0);
    match mode {
        WitnessMode::CodeDistinct | WitnessMode::CodeIsomorphic => {
            let b2 = if mode == WitnessMode::CodeIsomorphic { &spec.b2 } else { &spec.b1 };
            let mut total = 0usize;
            for (i, n) in entries.iter().enumerate() {
                let (a, b) = if i % 2 == 0 { (&spec.a1, &spec.b1) } else { (&spec.a2, b2) };
                let reps = exponent(n)?;
                total = total.saturating_add(reps.saturating_mul(2));
                if total > MAX_WORD_LEN {
                    return Err(Error::WordTooLong { limit: MAX_WORD_LEN });
                }
                for _ in 0..reps {
                    out.push(Letter::new(Side::A, a.clone()));
                    out.push(Letter::new(Side::B, b.clone()));
                }
            }
        }
        WitnessMode::Weighted => {
            let s = cfg.integer_side().expect("validated");
            for (i, n) in entries.iter().enumerate() {
                let k = BigInt::from((*n).clone());
                out.push(Letter::new(s, Element::Integer(if i % 2 == 0 { k } else { -k })));
                out.push(Letter::new(s.other(), spec.b1.clone()));
            }
        }
    }
    Ok(out.finish(cfg.clone()))
}

/// The quasimorphism that `witness_word` is built for.
pub fn witness_qm(spec: &WitnessSpec, cfg: &GroupConfig, mode: WitnessMode) -> Result<QmSpec> {
    Ok(match mode {
        WitnessMode::CodeDistinct => QmSpec::code(Side::A, spec.z.clone()),
        WitnessMode::CodeIsomorphic => QmSpec::symmetric_sum(spec.z.clone()),
        WitnessMode::Weighted => {
            let s = cfg.integer_side().ok_or(Error::Precondition(
                "weighted witnesses need an infinite cyclic factor".into(),
            ))?;
            QmSpec::weighted(s, spec.z.clone())
        }
    })
}

/// Letter choices for the commutator witness; unset fields get defaults.
#[derive(Clone, Debug, Default)]
pub struct CommutatorChoices {
    /// Factor carrying the automorphism `f`.
    pub side: Option<Side>,
    pub map: Option<FactorMap>,
    pub a1: Option<Element>,
    pub a: Option<Element>,
    /// Letter of the other factor; fixed to `s(a)` when the factors are
    /// identified by a swap.
    pub h: Option<Element>,
}

/// One aut-commutator `[phi, g] = phi(g) g^-1` used to assemble the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub name: String,
    pub phi: Automorphism,
    pub argument: ReducedWord,
    pub value: ReducedWord,
}

#[derive(Clone, Debug)]
pub struct CommutatorWitness {
    pub word: ReducedWord,
    pub qm: QmSpec,
    pub z: Pattern,
    pub isomorphic: bool,
    pub side: Side,
    pub n_list: Vec<u64>,
    /// `[iota_a, h]`, `[f, a1]` and the third factor, in that order; the
    /// word is `prod_i steps[0] (steps[1] steps[2])^{n_i}`.
    pub steps: Vec<DerivationStep>,
}

impl CommutatorWitness {
    /// Human-readable membership derivation in `[Aut(G), G]`.
    pub fn derivation_log(&self) -> Vec<String> {
        let cfg = self.word.group();
        let mut lines: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("{} = [{}, {}] = {}", s.name, s.phi.format(cfg), s.argument, s.value))
            .collect();
        let ns = self.n_list.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        lines.push(format!("w = prod_i u (x y)^n_i, n = ({ns})"));
        lines
    }
}

fn nontrivial_map(factor: &Factor) -> Option<FactorMap> {
    match factor {
        Factor::Integer => Some(FactorMap::Integer { negate: true }),
        Factor::Cyclic { order } if *order >= 3 => {
            let unit = if unit_inverse(2, *order).is_some() { 2 } else { order - 1 };
            Some(FactorMap::CyclicMul { order: *order, unit })
        }
        Factor::Cyclic { .. } => None,
        Factor::Table(t) => table_nontrivial_map(t),
    }
}

fn table_nontrivial_map(t: &CayleyTable) -> Option<FactorMap> {
    let n = t.order() as u32;
    if !t.is_abelian() {
        let g = (0..n).find(|&g| (0..n).any(|x| t.mul(g, x) != t.mul(x, g)))?;
        return Some(FactorMap::Permutation((0..n).map(|x| t.mul(t.mul(g, x), t.inv(g))).collect()));
    }
    if (0..n).any(|x| t.inv(x) != x) {
        return Some(FactorMap::Permutation((0..n).map(|x| t.inv(x)).collect()));
    }
    // elementary abelian 2-group: exchange two basis vectors
    let mut coords = vec![u32::MAX; n as usize];
    coords[t.identity() as usize] = 0;
    let mut span = vec![t.identity()];
    let mut bits = 0;
    for x in 0..n {
        if coords[x as usize] != u32::MAX {
            continue;
        }
        let mut added = Vec::new();
        for &s in &span {
            let y = t.mul(s, x);
            coords[y as usize] = coords[s as usize] | (1 << bits);
            added.push(y);
        }
        span.extend(added);
        bits += 1;
    }
    if bits < 2 {
        return None;
    }
    let mut by_coord = vec![0u32; n as usize];
    for x in 0..n {
        by_coord[coords[x as usize] as usize] = x;
    }
    let swap_bits = |c: u32| {
        let (b0, b1) = (c & 1, (c >> 1) & 1);
        (c & !3) | (b0 << 1) | b1
    };
    Some(FactorMap::Permutation((0..n).map(|x| by_coord[swap_bits(coords[x as usize]) as usize]).collect()))
}

fn finite_elements(f: &Factor) -> Vec<Element> {
    f.elements().expect("finite factor")
}

/// Builds `w = prod_i ([a, h] (c h c h^-1)^{n_i})` with `c = f(a1) a1^-1`,
/// or `prod_i ([a, b] (c d)^{n_i})` with `d = s(c)` when the factors are
/// identified by a swap, together with its derivation as a product of
/// aut-commutators and the generic pattern `z = code(w, side)`.
pub fn witness_commutator_word(
    cfg: &Arc<GroupConfig>,
    n_list: &[u64],
    choices: &CommutatorChoices,
) -> Result<CommutatorWitness> {
    if n_list.len() < 3 {
        return Err(Error::Precondition("n_list needs at least three entries".into()));
    }
    if n_list.contains(&0) {
        return Err(Error::Precondition("n_list entries must be positive".into()));
    }
    let mut sorted = n_list.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != n_list.len() {
        return Err(Error::Precondition("n_list entries must be distinct".into()));
    }
    for side in [Side::A, Side::B] {
        if cfg.factor(side).is_integer() {
            return Err(Error::Precondition(format!(
                "factor {side} is infinite cyclic; use a weighted-code witness instead"
            )));
        }
    }
    let side = match choices.side {
        Some(s) => s,
        None => [Side::A, Side::B]
            .into_iter()
            .find(|&s| nontrivial_map(cfg.factor(s)).is_some())
            .ok_or_else(|| Error::Precondition("no nontrivial factor automorphism exists on either factor".into()))?,
    };
    let (fs, ft) = (cfg.factor(side), cfg.factor(side.other()));
    let map = match &choices.map {
        Some(m) => {
            m.validate(fs)?;
            m.clone()
        }
        None => nontrivial_map(fs)
            .ok_or_else(|| Error::Precondition(format!("factor {side} has no nontrivial factor automorphism")))?,
    };
    if map.is_identity() {
        return Err(Error::Precondition("the factor automorphism f must be nontrivial".into()));
    }
    let a1 = match &choices.a1 {
        Some(x) => x.clone(),
        None => finite_elements(fs).into_iter().find(|x| map.apply(x) != *x).expect("nontrivial map moves something"),
    };
    if !fs.contains(&a1) {
        return Err(Error::InvalidElement { factor: fs.to_string(), elem: format!("{a1:?}") });
    }
    let a2 = map.apply(&a1);
    if a2 == a1 {
        return Err(Error::Precondition("f must move a1".into()));
    }
    let c = fs.mul(&a2, &fs.inv(&a1));
    let a = match &choices.a {
        Some(x) => {
            if !fs.contains(x) {
                return Err(Error::InvalidElement { factor: fs.to_string(), elem: format!("{x:?}") });
            }
            x.clone()
        }
        None => {
            let cands: Vec<Element> =
                finite_elements(fs).into_iter().filter(|x| !fs.is_identity(x) && *x != c).collect();
            cands
                .iter()
                .find(|x| fs.inv(x) != c && fs.inv(x) != **x)
                .or_else(|| cands.first())
                .cloned()
                .ok_or_else(|| Error::Precondition(format!("factor {side} is too small for a letter a != f(a1) a1^-1")))?
        }
    };
    if fs.is_identity(&a) || a == c {
        return Err(Error::Precondition("a must be non-trivial and different from f(a1) a1^-1".into()));
    }
    let iso = cfg.swap();
    let isomorphic = iso.is_some();
    let to_other = |x: &Element| -> Element {
        let iso = iso.expect("isomorphic case");
        match side {
            Side::A => iso.to_b(x),
            Side::B => iso.to_a(x),
        }
    };
    let h = if isomorphic {
        let b = to_other(&a);
        if let Some(h) = &choices.h {
            if *h != b {
                return Err(Error::Precondition("with a swap, the other letter is fixed to s(a)".into()));
            }
        }
        b
    } else {
        match &choices.h {
            Some(h) => h.clone(),
            None => ft.generator().or_else(|| nontrivial(ft, &[])).expect("non-trivial factor"),
        }
    };
    if !ft.contains(&h) || ft.is_identity(&h) {
        return Err(Error::Precondition("h must be a non-trivial element of the other factor".into()));
    }

    let letter = |s: Side, x: &Element| ReducedWord::letter(cfg.clone(), s, x.clone());
    let fauto = AutomorphismGen::FactorAuto { side, map: map.clone() };
    let inner = Automorphism::new(vec![
        AutomorphismGen::PartialConjugation { side, elem: a.clone() },
        AutomorphismGen::FactorAuto { side, map: FactorMap::conjugation(fs, &a)? },
    ]);
    let h_word = letter(side.other(), &h)?;
    let a1_word = letter(side, &a1)?;
    let mut steps = vec![
        DerivationStep {
            name: "u".into(),
            value: aut_commutator(&inner, &h_word)?,
            phi: inner,
            argument: h_word.clone(),
        },
        DerivationStep {
            name: "x".into(),
            value: aut_commutator(&Automorphism::single(fauto.clone()), &a1_word)?,
            phi: Automorphism::single(fauto.clone()),
            argument: a1_word.clone(),
        },
    ];
    let third = if isomorphic {
        let conj = Automorphism::new(vec![AutomorphismGen::Swap, fauto.clone(), AutomorphismGen::Swap]);
        let b1 = letter(side.other(), &to_other(&a1))?;
        DerivationStep { name: "y".into(), value: aut_commutator(&conj, &b1)?, phi: conj, argument: b1 }
    } else {
        let phi = Automorphism::single(fauto);
        let arg = h_word.multiply(&a1_word)?.multiply(&h_word.invert())?;
        DerivationStep { name: "y".into(), value: aut_commutator(&phi, &arg)?, phi, argument: arg }
    };
    steps.push(third);

    let xy = steps[1].value.multiply(&steps[2].value)?;
    let mut word = ReducedWord::empty(cfg.clone());
    for &n in n_list {
        let exp = i64::try_from(n).map_err(|_| Error::WordTooLong { limit: MAX_WORD_LEN })?;
        word = word.multiply(&steps[0].value)?.multiply(&xy.power(exp)?)?;
    }
    let z_code: Code = code(&word, side);
    let z = Pattern::new(z_code.entries().to_vec())?;
    if !is_generic(&z) {
        return Err(Error::NonGeneric(format!(
            "{z}; choose larger, pairwise distinct n_i (or another letter a)"
        )));
    }
    let squared = word.power(2)?;
    let doubled: Vec<BigUint> = z.entries().iter().chain(z.entries()).cloned().collect();
    if code(&squared, side).entries() != doubled.as_slice() {
        return Err(Error::Precondition("code of w^2 is not (z, z); choose other letters".into()));
    }
    if isomorphic && code(&word, side.other()) != z_code {
        return Err(Error::Precondition("A-code and B-code of w differ; choose other letters".into()));
    }
    let qm = if isomorphic { QmSpec::symmetric_sum(z.clone()) } else { QmSpec::code(side, z.clone()) };
    Ok(CommutatorWitness { word, qm, z, isomorphic, side, n_list: n_list.to_vec(), steps })
}
