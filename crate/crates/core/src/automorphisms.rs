//! Generators of `Aut(A * B)`: factor automorphisms, partial conjugations,
//! swaps and transvections. Automorphisms are kept symbolically as
//! sequences of generators applied left to right.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, Integer, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factors::{unit_inverse, Element, Factor, GroupConfig};
use crate::words::{Letter, ReducedWord, Reducer, Side, MAX_WORD_LEN};

/// An automorphism of one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorMap {
    /// `x -> x` or `x -> -x` on `Z`; these are its only automorphisms.
    Integer { negate: bool },
    /// `x -> unit * x` on `Z/n`.
    CyclicMul { order: u32, unit: u32 },
    /// Arbitrary automorphism of a table group, by image of each handle.
    Permutation(Vec<u32>),
}

impl FactorMap {
    pub fn identity(factor: &Factor) -> Self {
        match factor {
            Factor::Integer => FactorMap::Integer { negate: false },
            Factor::Cyclic { order } => FactorMap::CyclicMul { order: *order, unit: 1 },
            Factor::Table(t) => FactorMap::Permutation((0..t.order() as u32).collect()),
        }
    }

    /// `x -> g x g^-1`.
    pub fn conjugation(factor: &Factor, g: &Element) -> Result<Self> {
        if !factor.contains(g) {
            return Err(Error::InvalidElement { factor: factor.to_string(), elem: format!("{g:?}") });
        }
        Ok(match factor {
            Factor::Table(t) => FactorMap::Permutation(
                (0..t.order() as u32)
                    .map(|x| match factor.conjugate(g, &Element::Finite(x)) {
                        Element::Finite(y) => y,
                        _ => unreachable!(),
                    })
                    .collect(),
            ),
            _ => FactorMap::identity(factor),
        })
    }

    /// `x -> x^-1`, an automorphism only for abelian factors.
    pub fn inversion(factor: &Factor) -> Result<Self> {
        match factor {
            Factor::Integer => Ok(FactorMap::Integer { negate: true }),
            Factor::Cyclic { order } => Ok(FactorMap::CyclicMul { order: *order, unit: order - 1 }),
            Factor::Table(t) => {
                if !t.is_abelian() {
                    return Err(Error::InvalidAutomorphism("inversion is not an automorphism of a non-abelian group".into()));
                }
                Ok(FactorMap::Permutation((0..t.order() as u32).map(|x| t.inv(x)).collect()))
            }
        }
    }

    /// Parses `id`, `inv` (or `neg`), `mul=k`, `conj=g` or an explicit
    /// image list `x>y,x2>y2,...` (the identity may be omitted).
    pub fn parse(spec: &str, factor: &Factor) -> Result<Self> {
        let spec = spec.trim();
        let map = match spec {
            "id" => FactorMap::identity(factor),
            "inv" | "neg" => FactorMap::inversion(factor)?,
            _ if spec.starts_with("mul=") => {
                let k: BigInt = spec[4..]
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidAutomorphism(format!("bad multiplier in {spec:?}")))?;
                match factor {
                    Factor::Integer => match k.to_i64() {
                        Some(1) => FactorMap::Integer { negate: false },
                        Some(-1) => FactorMap::Integer { negate: true },
                        _ => {
                            return Err(Error::InvalidAutomorphism(
                                "the only automorphisms of Z are x -> x and x -> -x".into(),
                            ))
                        }
                    },
                    Factor::Cyclic { order } => {
                        let unit = k.mod_floor(&BigInt::from(*order)).to_u32().unwrap();
                        if unit_inverse(unit, *order).is_none() {
                            return Err(Error::InvalidAutomorphism(format!("{k} is not a unit mod {order}")));
                        }
                        FactorMap::CyclicMul { order: *order, unit }
                    }
                    Factor::Table(_) => {
                        return Err(Error::InvalidAutomorphism("mul=k applies to Z and Z/n only".into()))
                    }
                }
            }
            _ if spec.starts_with("conj=") => FactorMap::conjugation(factor, &factor.parse_element(&spec[5..])?)?,
            _ => FactorMap::from_pairs(spec, factor)?,
        };
        map.validate(factor)?;
        Ok(map)
    }

    fn from_pairs(spec: &str, factor: &Factor) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in spec.split(',').filter(|s| !s.trim().is_empty()) {
            let (x, y) = item
                .split_once('>')
                .ok_or_else(|| Error::InvalidAutomorphism(format!("bad map entry {item:?}; expected x>y")))?;
            pairs.push((factor.parse_element(x)?, factor.parse_element(y)?));
        }
        match factor {
            Factor::Integer => {
                let image = pairs.iter().find(|(x, _)| *x == Element::int(1)).map(|(_, y)| y.clone());
                let negate = match image.and_then(|y| y.as_integer().and_then(|n| n.to_i64())) {
                    Some(1) => false,
                    Some(-1) => true,
                    _ => return Err(Error::InvalidAutomorphism("the image of 1 in Z must be 1 or -1".into())),
                };
                let map = FactorMap::Integer { negate };
                check_pairs(&map, &pairs, factor)?;
                Ok(map)
            }
            Factor::Cyclic { order } => {
                let unit = match pairs.iter().find(|(x, _)| *x == Element::Finite(1)) {
                    Some((_, Element::Finite(u))) => *u,
                    _ => return Err(Error::InvalidAutomorphism("give the image of 1".into())),
                };
                let map = FactorMap::CyclicMul { order: *order, unit };
                check_pairs(&map, &pairs, factor)?;
                Ok(map)
            }
            Factor::Table(t) => {
                let mut images = vec![u32::MAX; t.order()];
                images[t.identity() as usize] = t.identity();
                for (x, y) in &pairs {
                    if let (Element::Finite(x), Element::Finite(y)) = (x, y) {
                        images[*x as usize] = *y;
                    }
                }
                if let Some(missing) = images.iter().position(|&y| y == u32::MAX) {
                    return Err(Error::InvalidAutomorphism(format!("no image given for {}", t.names()[missing])));
                }
                Ok(FactorMap::Permutation(images))
            }
        }
    }

    /// Checks that the map is a bijective homomorphism of `factor`.
    pub fn validate(&self, factor: &Factor) -> Result<()> {
        match (self, factor) {
            (FactorMap::Integer { .. }, Factor::Integer) => Ok(()),
            (FactorMap::CyclicMul { order, unit }, Factor::Cyclic { order: n }) if order == n => {
                if unit_inverse(*unit, *order).is_some() {
                    Ok(())
                } else {
                    Err(Error::InvalidAutomorphism(format!("{unit} is not a unit mod {order}")))
                }
            }
            (FactorMap::Permutation(images), Factor::Table(t)) if images.len() == t.order() => {
                let mut seen = vec![false; images.len()];
                for &y in images {
                    if y as usize >= images.len() || std::mem::replace(&mut seen[y as usize], true) {
                        return Err(Error::InvalidAutomorphism("map is not a bijection".into()));
                    }
                }
                let n = t.order() as u32;
                for x in 0..n {
                    for y in 0..n {
                        if images[t.mul(x, y) as usize] != t.mul(images[x as usize], images[y as usize]) {
                            return Err(Error::InvalidAutomorphism(format!(
                                "map does not preserve {}*{}",
                                t.names()[x as usize],
                                t.names()[y as usize]
                            )));
                        }
                    }
                }
                Ok(())
            }
            _ => Err(Error::InvalidAutomorphism(format!("map does not fit factor {factor}"))),
        }
    }

    pub fn apply(&self, x: &Element) -> Element {
        match (self, x) {
            (FactorMap::Integer { negate }, Element::Integer(n)) => {
                Element::Integer(if *negate { -n } else { n.clone() })
            }
            (FactorMap::CyclicMul { order, unit }, Element::Finite(r)) => {
                Element::Finite(((*r as u64 * *unit as u64) % *order as u64) as u32)
            }
            (FactorMap::Permutation(images), Element::Finite(i)) => Element::Finite(images[*i as usize]),
            _ => panic!("factor map applied to a foreign element"),
        }
    }

    pub fn inverse(&self) -> FactorMap {
        match self {
            FactorMap::Integer { negate } => FactorMap::Integer { negate: *negate },
            FactorMap::CyclicMul { order, unit } => FactorMap::CyclicMul {
                order: *order,
                unit: unit_inverse(*unit, *order).expect("validated unit"),
            },
            FactorMap::Permutation(images) => {
                let mut inv = vec![0u32; images.len()];
                for (x, &y) in images.iter().enumerate() {
                    inv[y as usize] = x as u32;
                }
                FactorMap::Permutation(inv)
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            FactorMap::Integer { negate } => !negate,
            FactorMap::CyclicMul { unit, .. } => *unit == 1,
            FactorMap::Permutation(images) => images.iter().enumerate().all(|(x, &y)| x as u32 == y),
        }
    }

    pub fn format(&self, factor: &Factor) -> String {
        if self.is_identity() {
            return "id".into();
        }
        match self {
            FactorMap::Integer { .. } => "neg".into(),
            FactorMap::CyclicMul { unit, .. } => format!("mul={unit}"),
            FactorMap::Permutation(images) => images
                .iter()
                .enumerate()
                .filter(|(x, _)| !factor.is_identity(&Element::Finite(*x as u32)))
                .map(|(x, &y)| {
                    format!(
                        "{}>{}",
                        factor.format_element(&Element::Finite(x as u32)),
                        factor.format_element(&Element::Finite(y))
                    )
                })
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

fn check_pairs(map: &FactorMap, pairs: &[(Element, Element)], factor: &Factor) -> Result<()> {
    map.validate(factor)?;
    for (x, y) in pairs {
        if map.apply(x) != *y {
            return Err(Error::InvalidAutomorphism(format!(
                "images are inconsistent at {}",
                factor.format_element(x)
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `s -> a s`
    Left,
    /// `s -> s a`
    Right,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "left" => Ok(Direction::Left),
            "right" => Ok(Direction::Right),
            other => Err(Error::InvalidAutomorphism(format!("direction must be left or right, got {other:?}"))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Left => "left",
            Direction::Right => "right",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    FactorAuto,
    PartialConjugation,
    Swap,
    Transvection,
}

impl GenKind {
    pub const ALL: [GenKind; 4] =
        [GenKind::FactorAuto, GenKind::PartialConjugation, GenKind::Swap, GenKind::Transvection];

    /// Kinds that have at least one generator over `cfg`.
    pub fn available(cfg: &GroupConfig) -> Vec<GenKind> {
        GenKind::ALL.into_iter().filter(|k| k.is_available(cfg)).collect()
    }

    pub fn is_available(self, cfg: &GroupConfig) -> bool {
        match self {
            GenKind::FactorAuto | GenKind::PartialConjugation => true,
            GenKind::Swap => cfg.swap().is_some(),
            GenKind::Transvection => cfg.integer_side().is_some(),
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenKind::FactorAuto => "factor_auto",
            GenKind::PartialConjugation => "partial_conjugation",
            GenKind::Swap => "swap",
            GenKind::Transvection => "transvection",
        })
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "factor_auto" | "fauto" => Ok(GenKind::FactorAuto),
            "partial_conjugation" | "pconj" => Ok(GenKind::PartialConjugation),
            "swap" => Ok(GenKind::Swap),
            "transvection" | "transv" => Ok(GenKind::Transvection),
            other => Err(Error::InvalidArgument(format!("unknown generator kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomorphismGen {
    FactorAuto { side: Side, map: FactorMap },
    /// Conjugates every letter of the other factor by `elem`.
    PartialConjugation { side: Side, elem: Element },
    Swap,
    /// Sends the generator `s` of the integer factor on `side` to `elem s`
    /// (left) or `s elem` (right), with `elem` in the other factor.
    Transvection { side: Side, direction: Direction, elem: Element },
}

impl AutomorphismGen {
    pub fn kind(&self) -> GenKind {
        match self {
            AutomorphismGen::FactorAuto { .. } => GenKind::FactorAuto,
            AutomorphismGen::PartialConjugation { .. } => GenKind::PartialConjugation,
            AutomorphismGen::Swap => GenKind::Swap,
            AutomorphismGen::Transvection { .. } => GenKind::Transvection,
        }
    }

    pub fn validate(&self, cfg: &GroupConfig) -> Result<()> {
        match self {
            AutomorphismGen::FactorAuto { side, map } => map.validate(cfg.factor(*side)),
            AutomorphismGen::PartialConjugation { side, elem } => {
                let f = cfg.factor(*side);
                if f.contains(elem) {
                    Ok(())
                } else {
                    Err(Error::InvalidElement { factor: f.to_string(), elem: format!("{elem:?}") })
                }
            }
            AutomorphismGen::Swap => cfg.swap().map(|_| ()).ok_or(Error::SwapUnavailable),
            AutomorphismGen::Transvection { side, elem, .. } => {
                if !cfg.factor(*side).is_integer() {
                    return Err(Error::NotIntegerFactor(*side));
                }
                let other = cfg.factor(side.other());
                if !other.contains(elem) {
                    return Err(Error::InvalidElement { factor: other.to_string(), elem: format!("{elem:?}") });
                }
                if other.is_identity(elem) {
                    return Err(Error::InvalidAutomorphism("transvection element must be non-trivial".into()));
                }
                Ok(())
            }
        }
    }

    /// Explicit inverse generator.
    pub fn inverse(&self, cfg: &GroupConfig) -> AutomorphismGen {
        match self {
            AutomorphismGen::FactorAuto { side, map } => {
                AutomorphismGen::FactorAuto { side: *side, map: map.inverse() }
            }
            AutomorphismGen::PartialConjugation { side, elem } => AutomorphismGen::PartialConjugation {
                side: *side,
                elem: cfg.factor(*side).inv(elem),
            },
            AutomorphismGen::Swap => AutomorphismGen::Swap,
            AutomorphismGen::Transvection { side, direction, elem } => AutomorphismGen::Transvection {
                side: *side,
                direction: *direction,
                elem: cfg.factor(side.other()).inv(elem),
            },
        }
    }

    /// Textual form: `fauto:A:map`, `pconj:A:elem`, `swap`, `transv:A:left:elem`.
    pub fn parse(text: &str, cfg: &GroupConfig) -> Result<Self> {
        let text = text.trim();
        let parts: Vec<&str> = text.splitn(4, ':').collect();
        let bad = || Error::InvalidAutomorphism(format!("cannot parse generator {text:?}"));
        let gen = match parts.as_slice() {
            ["swap"] => AutomorphismGen::Swap,
            ["fauto", side, map] => {
                let side: Side = side.parse()?;
                AutomorphismGen::FactorAuto { side, map: FactorMap::parse(map, cfg.factor(side))? }
            }
            ["pconj", side, elem] => {
                let side: Side = side.parse()?;
                AutomorphismGen::PartialConjugation { side, elem: cfg.factor(side).parse_element(elem)? }
            }
            ["transv", side, dir, elem] => {
                let side: Side = side.parse()?;
                AutomorphismGen::Transvection {
                    side,
                    direction: dir.parse()?,
                    elem: cfg.factor(side.other()).parse_element(elem)?,
                }
            }
            _ => return Err(bad()),
        };
        gen.validate(cfg)?;
        Ok(gen)
    }

    pub fn format(&self, cfg: &GroupConfig) -> String {
        match self {
            AutomorphismGen::FactorAuto { side, map } => format!("fauto:{side}:{}", map.format(cfg.factor(*side))),
            AutomorphismGen::PartialConjugation { side, elem } => {
                format!("pconj:{side}:{}", cfg.factor(*side).format_element(elem))
            }
            AutomorphismGen::Swap => "swap".into(),
            AutomorphismGen::Transvection { side, direction, elem } => format!(
                "transv:{side}:{direction}:{}",
                cfg.factor(side.other()).format_element(elem)
            ),
        }
    }

    /// Pushes the image of one letter into `out`.
    fn push_image(&self, cfg: &GroupConfig, letter: &Letter, out: &mut Reducer<'_>) -> Result<()> {
        match self {
            AutomorphismGen::FactorAuto { side, map } if letter.side == *side => {
                out.push(Letter::new(letter.side, map.apply(&letter.elem)));
            }
            AutomorphismGen::PartialConjugation { side, elem } if letter.side != *side => {
                let f = cfg.factor(*side);
                out.push(Letter::new(*side, elem.clone()));
                out.push(letter.clone());
                out.push(Letter::new(*side, f.inv(elem)));
            }
            AutomorphismGen::Swap => {
                let iso = cfg.swap().ok_or(Error::SwapUnavailable)?;
                let image = match letter.side {
                    Side::A => Letter::new(Side::B, iso.to_b(&letter.elem)),
                    Side::B => Letter::new(Side::A, iso.to_a(&letter.elem)),
                };
                out.push(image);
            }
            AutomorphismGen::Transvection { side, direction, elem } if letter.side == *side => {
                let k = letter.elem.as_integer().expect("integer factor");
                if k.is_zero() {
                    return Ok(());
                }
                let reps = k
                    .abs()
                    .to_usize()
                    .filter(|r| r.saturating_mul(2).saturating_add(out.len()) <= MAX_WORD_LEN)
                    .ok_or(Error::WordTooLong { limit: MAX_WORD_LEN })?;
                let other = cfg.factor(side.other());
                let (s, a) = if k.is_positive() {
                    (Element::int(1), elem.clone())
                } else {
                    (Element::int(-1), other.inv(elem))
                };
                // (s a)^k, (a s)^k and their inverses
                let forward_first = matches!(
                    (direction, k.is_positive()),
                    (Direction::Right, true) | (Direction::Left, false)
                );
                for _ in 0..reps {
                    if forward_first {
                        out.push(Letter::new(*side, s.clone()));
                        out.push(Letter::new(side.other(), a.clone()));
                    } else {
                        out.push(Letter::new(side.other(), a.clone()));
                        out.push(Letter::new(*side, s.clone()));
                    }
                }
            }
            _ => out.push(letter.clone()),
        }
        Ok(())
    }
}

/// Image of a reduced word under one generator.
pub fn apply_gen(gen: &AutomorphismGen, w: &ReducedWord) -> Result<ReducedWord> {
    let cfg = w.group();
    gen.validate(cfg)?;
    let mut out = Reducer::with_capacity(cfg, w.len());
    for l in w.letters() {
        gen.push_image(cfg, l, &mut out)?;
    }
    Ok(out.finish(cfg.clone()))
}

/// A finite sequence of generators, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Automorphism {
    pub gens: Vec<AutomorphismGen>,
}

impl Automorphism {
    pub fn identity() -> Self {
        Automorphism::default()
    }

    pub fn new(gens: Vec<AutomorphismGen>) -> Self {
        Automorphism { gens }
    }

    pub fn single(gen: AutomorphismGen) -> Self {
        Automorphism { gens: vec![gen] }
    }

    /// Parses generators separated by `;`. `id` is the identity.
    pub fn parse(text: &str, cfg: &GroupConfig) -> Result<Self> {
        let gens = text
            .split(';')
            .filter(|s| !s.trim().is_empty() && s.trim() != "id")
            .map(|s| AutomorphismGen::parse(s, cfg))
            .collect::<Result<Vec<_>>>()?;
        Ok(Automorphism { gens })
    }

    pub fn format(&self, cfg: &GroupConfig) -> String {
        if self.gens.is_empty() {
            return "id".into();
        }
        self.gens.iter().map(|g| g.format(cfg)).collect::<Vec<_>>().join("; ")
    }

    pub fn validate(&self, cfg: &GroupConfig) -> Result<()> {
        self.gens.iter().try_for_each(|g| g.validate(cfg))
    }

    pub fn inverse(&self, cfg: &GroupConfig) -> Automorphism {
        Automorphism { gens: self.gens.iter().rev().map(|g| g.inverse(cfg)).collect() }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Automorphism) -> Automorphism {
        Automorphism { gens: self.gens.iter().chain(&next.gens).cloned().collect() }
    }

    pub fn kinds(&self) -> impl Iterator<Item = GenKind> + '_ {
        self.gens.iter().map(AutomorphismGen::kind)
    }
}

/// Applies every generator in order.
pub fn apply(phi: &Automorphism, w: &ReducedWord) -> Result<ReducedWord> {
    phi.validate(w.group())?;
    let mut cur = w.clone();
    for g in &phi.gens {
        cur = apply_gen(g, &cur)?;
    }
    Ok(cur)
}

/// `[phi, w] = phi(w) w^-1`.
pub fn aut_commutator(phi: &Automorphism, w: &ReducedWord) -> Result<ReducedWord> {
    apply(phi, w)?.multiply(&w.invert())
}

fn random_gen<R: Rng + ?Sized>(cfg: &GroupConfig, kind: GenKind, rng: &mut R, radius: u32) -> AutomorphismGen {
    let side = if rng.random_bool(0.5) { Side::A } else { Side::B };
    match kind {
        GenKind::FactorAuto => {
            let factor = cfg.factor(side);
            let map = match factor {
                Factor::Integer => FactorMap::Integer { negate: rng.random_bool(0.5) },
                Factor::Cyclic { order } => loop {
                    let unit = rng.random_range(1..*order);
                    if unit_inverse(unit, *order).is_some() {
                        break FactorMap::CyclicMul { order: *order, unit };
                    }
                },
                Factor::Table(t) => {
                    if t.is_abelian() && rng.random_bool(0.5) {
                        FactorMap::inversion(factor).expect("abelian")
                    } else {
                        let g = Element::Finite(rng.random_range(0..t.order() as u32));
                        FactorMap::conjugation(factor, &g).expect("element of factor")
                    }
                }
            };
            AutomorphismGen::FactorAuto { side, map }
        }
        GenKind::PartialConjugation => {
            AutomorphismGen::PartialConjugation { side, elem: cfg.factor(side).sample_nontrivial(rng, radius) }
        }
        GenKind::Swap => AutomorphismGen::Swap,
        GenKind::Transvection => {
            let side = match (cfg.factor(Side::A).is_integer(), cfg.factor(Side::B).is_integer()) {
                (true, true) => side,
                (true, false) => Side::A,
                (false, true) => Side::B,
                (false, false) => panic!("no integer factor for a transvection"),
            };
            let direction = if rng.random_bool(0.5) { Direction::Left } else { Direction::Right };
            AutomorphismGen::Transvection {
                side,
                direction,
                elem: cfg.factor(side.other()).sample_nontrivial(rng, radius),
            }
        }
    }
}

/// Random generator word over the requested kinds, drawing each kind
/// uniformly. Integer elements are drawn with magnitude at most `radius`.
pub fn random_automorphism_with<R: Rng + ?Sized>(
    cfg: &GroupConfig,
    kinds: &[GenKind],
    length: usize,
    radius: u32,
    rng: &mut R,
) -> Result<Automorphism> {
    if kinds.is_empty() {
        return Err(Error::InvalidArgument("no generator kinds requested".into()));
    }
    for k in kinds {
        if !k.is_available(cfg) {
            return Err(match k {
                GenKind::Swap => Error::SwapUnavailable,
                _ => Error::InvalidArgument(format!("{k} generators need an integer factor")),
            });
        }
    }
    let gens = (0..length)
        .map(|_| {
            let kind = kinds[rng.random_range(0..kinds.len())];
            random_gen(cfg, kind, rng, radius)
        })
        .collect();
    Ok(Automorphism { gens })
}

/// Reproducible random automorphism mixing every kind available for `cfg`.
pub fn random_automorphism(cfg: &GroupConfig, length: usize, seed: u64) -> Automorphism {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_automorphism_with(cfg, &GenKind::available(cfg), length, 9, &mut rng)
        .expect("available kinds are valid")
}
