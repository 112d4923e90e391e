//! Arithmetic inside a single free factor.
//!
//! A factor is one of the integers, a finite cyclic group `Z/n`, or a finite
//! group given by its Cayley table. Elements are small opaque handles whose
//! meaning depends on the factor they belong to: an arbitrary-precision
//! integer for `Z`, a reduced residue for `Z/n` and a row index for tables.
//!
//! Free indecomposability of a table group is not checked; it is the caller's
//! obligation.

use std::fmt;

use num::{BigInt, Integer, One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result, TableViolation};
use crate::words::Side;

/// Default limit on the order of a Cayley-table factor.
pub const DEFAULT_MAX_TABLE_ORDER: usize = 256;

/// Characters that may not appear in table element names, because the word
/// and automorphism grammars use them as delimiters.
const RESERVED: &[char] = &[
    '[', ']', '(', ')', ':', ';', ',', '>', '^', '=', '*', '/', '+', '{', '}', '"', '#',
];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Integer(BigInt),
    Finite(u32),
}

impl Element {
    pub fn int(value: i64) -> Self {
        Element::Integer(BigInt::from(value))
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Element::Integer(n) => Some(n),
            Element::Finite(_) => None,
        }
    }
}

/// Cayley-table description as it appears in a config file, before checking.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawTable {
    pub elements: Vec<String>,
    pub identity: Option<String>,
    pub table: Vec<Vec<String>>,
}

/// A validated finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    names: Vec<String>,
    identity: u32,
    products: Vec<u32>,
    inverses: Vec<u32>,
    abelian: bool,
}

impl CayleyTable {
    /// Checks every group axiom exhaustively and reports each failed axiom
    /// together with a witness.
    pub fn validate(raw: &RawTable, max_order: usize) -> std::result::Result<Self, Vec<TableViolation>> {
        let n = raw.elements.len();
        if n == 0 {
            return Err(vec![TableViolation::Empty]);
        }
        if n > max_order {
            return Err(vec![TableViolation::TooLarge { order: n, limit: max_order }]);
        }

        let mut violations = Vec::new();
        let mut index = std::collections::HashMap::with_capacity(n);
        for (i, name) in raw.elements.iter().enumerate() {
            if !valid_name(name) {
                violations.push(TableViolation::BadName { name: name.clone() });
            }
            if index.insert(name.as_str(), i as u32).is_some() {
                violations.push(TableViolation::DuplicateName { name: name.clone() });
            }
        }
        if raw.table.len() != n {
            violations.push(TableViolation::NotSquare { rows: raw.table.len(), expected: n });
        }
        if let Some(row) = raw.table.iter().find(|row| row.len() != n) {
            violations.push(TableViolation::NotSquare { rows: row.len(), expected: n });
        }
        if !violations.is_empty() {
            return Err(violations);
        }

        let mut products = vec![0u32; n * n];
        let mut closed = true;
        for (x, row) in raw.table.iter().enumerate() {
            for (y, entry) in row.iter().enumerate() {
                match index.get(entry.as_str()) {
                    Some(&k) => products[x * n + y] = k,
                    None => {
                        if closed {
                            violations.push(TableViolation::NotClosed {
                                row: raw.elements[x].clone(),
                                column: raw.elements[y].clone(),
                                entry: entry.clone(),
                            });
                        }
                        closed = false;
                    }
                }
            }
        }
        if !closed {
            return Err(violations);
        }
        let mul = |x: usize, y: usize| products[x * n + y] as usize;

        'assoc: for x in 0..n {
            for y in 0..n {
                let xy = mul(x, y);
                for z in 0..n {
                    if mul(xy, z) != mul(x, mul(y, z)) {
                        violations.push(TableViolation::NotAssociative {
                            x: raw.elements[x].clone(),
                            y: raw.elements[y].clone(),
                            z: raw.elements[z].clone(),
                        });
                        break 'assoc;
                    }
                }
            }
        }

        let is_identity = |e: usize| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x);
        let identity = match &raw.identity {
            Some(name) => index.get(name.as_str()).map(|&e| e as usize).filter(|&e| is_identity(e)),
            None => (0..n).find(|&e| is_identity(e)),
        };
        let Some(identity) = identity else {
            violations.push(TableViolation::NoIdentity);
            return Err(violations);
        };

        let mut inverses = vec![0u32; n];
        for x in 0..n {
            match (0..n).find(|&y| mul(x, y) == identity && mul(y, x) == identity) {
                Some(y) => inverses[x] = y as u32,
                None => {
                    violations.push(TableViolation::MissingInverse {
                        element: raw.elements[x].clone(),
                    });
                    break;
                }
            }
        }
        if n == 1 && violations.is_empty() {
            violations.push(TableViolation::Trivial);
        }
        if !violations.is_empty() {
            return Err(violations);
        }

        let abelian = (0..n).all(|x| (0..x).all(|y| mul(x, y) == mul(y, x)));
        Ok(CayleyTable {
            names: raw.elements.clone(),
            identity: identity as u32,
            products,
            inverses,
            abelian,
        })
    }

    /// The table of `Z/n` with elements named `"0"`, ..., `"n-1"`.
    pub fn cyclic(order: u32) -> Self {
        let n = order as usize;
        let raw = RawTable {
            elements: (0..n).map(|i| i.to_string()).collect(),
            identity: Some("0".into()),
            table: (0..n)
                .map(|x| (0..n).map(|y| ((x + y) % n).to_string()).collect())
                .collect(),
        };
        Self::validate(&raw, usize::MAX).expect("cyclic tables are groups")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.products[x as usize * self.order() + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        self.inverses[x as usize]
    }

    fn to_raw(&self) -> RawTable {
        let n = self.order() as u32;
        RawTable {
            elements: self.names.clone(),
            identity: Some(self.names[self.identity as usize].clone()),
            table: (0..n)
                .map(|x| (0..n).map(|y| self.names[self.mul(x, y) as usize].clone()).collect())
                .collect(),
        }
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Integer,
    Cyclic { order: u32 },
    Table(CayleyTable),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Integer => write!(f, "Z"),
            Factor::Cyclic { order } => write!(f, "Z/{order}"),
            Factor::Table(t) => write!(f, "table group of order {}", t.order()),
        }
    }
}

impl Factor {
    pub fn cyclic(order: u32) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidConfig(format!("cyclic order must be at least 2, got {order}")));
        }
        Ok(Factor::Cyclic { order })
    }

    pub fn table(raw: &RawTable, max_order: usize) -> Result<Self> {
        CayleyTable::validate(raw, max_order)
            .map(Factor::Table)
            .map_err(Error::InvalidTable)
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Factor::Integer)
    }

    /// Number of elements, or `None` for the integers.
    pub fn order(&self) -> Option<usize> {
        match self {
            Factor::Integer => None,
            Factor::Cyclic { order } => Some(*order as usize),
            Factor::Table(t) => Some(t.order()),
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            Factor::Table(t) => t.is_abelian(),
            _ => true,
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            Factor::Integer => Element::Integer(BigInt::zero()),
            Factor::Cyclic { .. } => Element::Finite(0),
            Factor::Table(t) => Element::Finite(t.identity()),
        }
    }

    pub fn is_identity(&self, x: &Element) -> bool {
        match (self, x) {
            (Factor::Integer, Element::Integer(n)) => n.is_zero(),
            (Factor::Cyclic { .. }, Element::Finite(r)) => *r == 0,
            (Factor::Table(t), Element::Finite(i)) => *i == t.identity(),
            _ => false,
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (Factor::Integer, Element::Integer(_)) => true,
            (Factor::Cyclic { order }, Element::Finite(r)) => r < order,
            (Factor::Table(t), Element::Finite(i)) => (*i as usize) < t.order(),
            _ => false,
        }
    }

    fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(self.invalid(format!("{x:?}")))
        }
    }

    fn invalid(&self, elem: String) -> Error {
        Error::InvalidElement { factor: self.to_string(), elem }
    }

    /// Group product `x * y`; fails if either operand is not an element.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub fn inverse(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(self.inv(x))
    }

    /// Product of elements already known to belong to this factor.
    pub(crate) fn mul(&self, x: &Element, y: &Element) -> Element {
        match (self, x, y) {
            (Factor::Integer, Element::Integer(a), Element::Integer(b)) => Element::Integer(a + b),
            (Factor::Cyclic { order }, Element::Finite(a), Element::Finite(b)) => {
                Element::Finite(((*a as u64 + *b as u64) % *order as u64) as u32)
            }
            (Factor::Table(t), Element::Finite(a), Element::Finite(b)) => Element::Finite(t.mul(*a, *b)),
            _ => panic!("element does not belong to factor {self}"),
        }
    }

    pub(crate) fn inv(&self, x: &Element) -> Element {
        match (self, x) {
            (Factor::Integer, Element::Integer(a)) => Element::Integer(-a),
            (Factor::Cyclic { order }, Element::Finite(a)) => Element::Finite((order - a) % order),
            (Factor::Table(t), Element::Finite(a)) => Element::Finite(t.inv(*a)),
            _ => panic!("element does not belong to factor {self}"),
        }
    }

    /// `x^e` for any integer exponent.
    pub fn power(&self, x: &Element, e: &BigInt) -> Result<Element> {
        self.check(x)?;
        Ok(match (self, x) {
            (Factor::Integer, Element::Integer(a)) => Element::Integer(a * e),
            (Factor::Cyclic { order }, Element::Finite(a)) => {
                let n = BigInt::from(*order);
                let r = (BigInt::from(*a) * e).mod_floor(&n);
                Element::Finite(r.to_u32().expect("residue fits"))
            }
            (Factor::Table(t), Element::Finite(a)) => {
                let mut ord = 1u32;
                let mut acc = *a;
                while acc != t.identity() {
                    acc = t.mul(acc, *a);
                    ord += 1;
                }
                let k = e.mod_floor(&BigInt::from(ord)).to_u32().expect("reduced exponent fits");
                let mut out = t.identity();
                for _ in 0..k {
                    out = t.mul(out, *a);
                }
                Element::Finite(out)
            }
            _ => unreachable!(),
        })
    }

    /// The element written as a bare `a` or `b`, if the factor has one.
    pub fn generator(&self) -> Option<Element> {
        match self {
            Factor::Integer => Some(Element::int(1)),
            Factor::Cyclic { .. } => Some(Element::Finite(1)),
            Factor::Table(_) => None,
        }
    }

    /// All elements of a finite factor in handle order.
    pub fn elements(&self) -> Option<Vec<Element>> {
        self.order().map(|n| (0..n as u32).map(Element::Finite).collect())
    }

    /// Parses an element name: a decimal integer for `Z` and `Z/n`
    /// (reduced mod `n`), or a declared name for table factors.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let text = text.trim();
        match self {
            Factor::Integer => text
                .parse::<BigInt>()
                .map(Element::Integer)
                .map_err(|_| self.invalid(text.to_string())),
            Factor::Cyclic { order } => {
                let n: BigInt = text.parse().map_err(|_| self.invalid(text.to_string()))?;
                let r = n.mod_floor(&BigInt::from(*order));
                Ok(Element::Finite(r.to_u32().expect("residue fits")))
            }
            Factor::Table(t) => t
                .index_of(text)
                .map(Element::Finite)
                .ok_or_else(|| self.invalid(text.to_string())),
        }
    }

    pub fn format_element(&self, x: &Element) -> String {
        match (self, x) {
            (Factor::Integer, Element::Integer(n)) => n.to_string(),
            (Factor::Cyclic { .. }, Element::Finite(r)) => r.to_string(),
            (Factor::Table(t), Element::Finite(i)) => t.names()[*i as usize].clone(),
            _ => format!("{x:?}"),
        }
    }

    /// Uniform non-trivial element; integers are drawn from
    /// `[-radius, radius] \ {0}`.
    pub fn sample_nontrivial<R: Rng + ?Sized>(&self, rng: &mut R, radius: u32) -> Element {
        match self {
            Factor::Integer => {
                let r = radius.max(1) as i64;
                let mut k = rng.random_range(1..=r);
                if rng.random_bool(0.5) {
                    k = -k;
                }
                Element::int(k)
            }
            Factor::Cyclic { order } => Element::Finite(rng.random_range(1..*order)),
            Factor::Table(t) => {
                let k = rng.random_range(0..t.order() as u32 - 1);
                Element::Finite(if k >= t.identity() { k + 1 } else { k })
            }
        }
    }

    /// Conjugate `g x g^-1`.
    pub(crate) fn conjugate(&self, g: &Element, x: &Element) -> Element {
        self.mul(&self.mul(g, x), &self.inv(g))
    }
}

/// A fixed isomorphism from factor A onto factor B, used by swap automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwapIso {
    /// `Z -> Z`, `x -> x` or `x -> -x`.
    Integer { negate: bool },
    /// `Z/n -> Z/n`, `x -> unit * x`.
    Cyclic { order: u32, unit: u32, inverse_unit: u32 },
    /// Table isomorphism given by its action on handles.
    Finite { forward: Vec<u32>, backward: Vec<u32> },
}

impl SwapIso {
    /// Builds and checks an isomorphism from an element-name map. Pairs not
    /// listed map the identity to the identity; every other element must be
    /// listed for table factors, while for `Z` and `Z/n` the image of `1`
    /// determines the map and remaining pairs are checked against it.
    pub fn from_name_map(a: &Factor, b: &Factor, pairs: &[(String, String)]) -> Result<Self> {
        let mut map = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            let ex = a.parse_element(x).map_err(|_| Error::InvalidSwap(format!("{x} is not in A")))?;
            let ey = b.parse_element(y).map_err(|_| Error::InvalidSwap(format!("{y} is not in B")))?;
            map.push((ex, ey));
        }
        let iso = match (a, b) {
            (Factor::Integer, Factor::Integer) => {
                let image = map
                    .iter()
                    .find(|(x, _)| *x == Element::int(1))
                    .map(|(_, y)| y.clone())
                    .unwrap_or(Element::int(1));
                let negate = match image.as_integer().and_then(|n| n.to_i64()) {
                    Some(1) => false,
                    Some(-1) => true,
                    _ => return Err(Error::InvalidSwap("1 must map to 1 or -1".into())),
                };
                SwapIso::Integer { negate }
            }
            (Factor::Cyclic { order: n }, Factor::Cyclic { order: m }) => {
                if n != m {
                    return Err(Error::InvalidSwap(format!("Z/{n} and Z/{m} are not isomorphic")));
                }
                let unit = map
                    .iter()
                    .find(|(x, _)| *x == Element::Finite(1))
                    .map(|(_, y)| match y {
                        Element::Finite(u) => *u,
                        _ => unreachable!(),
                    })
                    .unwrap_or(1);
                let inverse_unit = unit_inverse(unit, *n).ok_or_else(|| {
                    Error::InvalidSwap(format!("1 -> {unit} is not invertible mod {n}"))
                })?;
                SwapIso::Cyclic { order: *n, unit, inverse_unit }
            }
            (Factor::Table(ta), Factor::Table(tb)) => {
                if ta.order() != tb.order() {
                    return Err(Error::InvalidSwap("factors have different orders".into()));
                }
                let n = ta.order();
                let mut forward = vec![u32::MAX; n];
                forward[ta.identity() as usize] = tb.identity();
                for (x, y) in &map {
                    if let (Element::Finite(x), Element::Finite(y)) = (x, y) {
                        forward[*x as usize] = *y;
                    }
                }
                if let Some(x) = forward.iter().position(|&y| y == u32::MAX) {
                    return Err(Error::InvalidSwap(format!("no image given for {}", ta.names()[x])));
                }
                let mut backward = vec![u32::MAX; n];
                for (x, &y) in forward.iter().enumerate() {
                    if backward[y as usize] != u32::MAX {
                        return Err(Error::InvalidSwap(format!(
                            "{} is the image of two elements",
                            tb.names()[y as usize]
                        )));
                    }
                    backward[y as usize] = x as u32;
                }
                SwapIso::Finite { forward, backward }
            }
            _ => return Err(Error::InvalidSwap(format!("{a} and {b} are not isomorphic"))),
        };
        iso.check_homomorphism(a, b)?;
        for (x, y) in &map {
            if iso.to_b(x) != *y {
                return Err(Error::InvalidSwap(format!(
                    "map is not determined consistently at {}",
                    a.format_element(x)
                )));
            }
        }
        Ok(iso)
    }

    /// Identity name-map when both factors are the same group.
    pub fn identity_for(a: &Factor, b: &Factor) -> Option<Self> {
        match (a, b) {
            (Factor::Integer, Factor::Integer) => Some(SwapIso::Integer { negate: false }),
            (Factor::Cyclic { order: n }, Factor::Cyclic { order: m }) if n == m => {
                Some(SwapIso::Cyclic { order: *n, unit: 1, inverse_unit: 1 })
            }
            (Factor::Table(ta), Factor::Table(tb)) if ta == tb => {
                let ids: Vec<u32> = (0..ta.order() as u32).collect();
                Some(SwapIso::Finite { forward: ids.clone(), backward: ids })
            }
            _ => None,
        }
    }

    fn check_homomorphism(&self, a: &Factor, b: &Factor) -> Result<()> {
        if let (SwapIso::Finite { .. }, Some(elems)) = (self, a.elements()) {
            for x in &elems {
                for y in &elems {
                    let lhs = self.to_b(&a.mul(x, y));
                    let rhs = b.mul(&self.to_b(x), &self.to_b(y));
                    if lhs != rhs {
                        return Err(Error::InvalidSwap(format!(
                            "image of {}*{} is not the product of the images",
                            a.format_element(x),
                            a.format_element(y)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_b(&self, x: &Element) -> Element {
        self.map(x, true)
    }

    pub fn to_a(&self, x: &Element) -> Element {
        self.map(x, false)
    }

    fn map(&self, x: &Element, forward_dir: bool) -> Element {
        match (self, x) {
            (SwapIso::Integer { negate }, Element::Integer(n)) => {
                Element::Integer(if *negate { -n } else { n.clone() })
            }
            (SwapIso::Cyclic { order, unit, inverse_unit }, Element::Finite(r)) => {
                let u = if forward_dir { *unit } else { *inverse_unit };
                Element::Finite(((*r as u64 * u as u64) % *order as u64) as u32)
            }
            (SwapIso::Finite { forward, backward }, Element::Finite(i)) => {
                Element::Finite(if forward_dir { forward[*i as usize] } else { backward[*i as usize] })
            }
            _ => panic!("element does not belong to the swap domain"),
        }
    }

    /// `(A element name, B element name)` pairs describing the map on the
    /// elements that determine it.
    pub fn name_pairs(&self, a: &Factor, b: &Factor) -> Vec<(String, String)> {
        let domain = match self {
            SwapIso::Integer { .. } => vec![Element::int(1)],
            SwapIso::Cyclic { .. } => vec![Element::Finite(1)],
            SwapIso::Finite { forward, .. } => (0..forward.len() as u32).map(Element::Finite).collect(),
        };
        domain
            .iter()
            .map(|x| (a.format_element(x), b.format_element(&self.to_b(x))))
            .collect()
    }
}

/// Multiplicative inverse of `unit` modulo `n`.
pub(crate) fn unit_inverse(unit: u32, n: u32) -> Option<u32> {
    let e = BigInt::from(unit).extended_gcd(&BigInt::from(n));
    if !e.gcd.is_one() {
        return None;
    }
    e.x.mod_floor(&BigInt::from(n)).to_u32()
}

/// The free product `A * B` together with an optional swap isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupConfig {
    a: Factor,
    b: Factor,
    swap: Option<SwapIso>,
}

impl fmt::Display for GroupConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", self.a, self.b)
    }
}

impl GroupConfig {
    pub fn new(a: Factor, b: Factor, swap: Option<SwapIso>) -> Self {
        GroupConfig { a, b, swap }
    }

    /// Config whose swap is the identity name-map when the factors coincide.
    pub fn with_default_swap(a: Factor, b: Factor) -> Self {
        let swap = SwapIso::identity_for(&a, &b);
        GroupConfig { a, b, swap }
    }

    pub fn factor(&self, side: Side) -> &Factor {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    pub fn swap(&self) -> Option<&SwapIso> {
        self.swap.as_ref()
    }

    /// Shared handle that words over this config carry.
    pub fn into_shared(self) -> std::sync::Arc<Self> {
        std::sync::Arc::new(self)
    }

    /// Side of the unique integer factor, or `A` when both are integers.
    pub fn integer_side(&self) -> Option<Side> {
        if self.a.is_integer() {
            Some(Side::A)
        } else if self.b.is_integer() {
            Some(Side::B)
        } else {
            None
        }
    }

    pub(crate) fn raw_table(&self, side: Side) -> Option<RawTable> {
        match self.factor(side) {
            Factor::Table(t) => Some(t.to_raw()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_named() -> Factor {
        let raw = RawTable {
            elements: vec!["e".into(), "s".into()],
            identity: Some("e".into()),
            table: vec![vec!["e".into(), "s".into()], vec!["s".into(), "e".into()]],
        };
        Factor::table(&raw, DEFAULT_MAX_TABLE_ORDER).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let z5 = Factor::cyclic(5).unwrap();
        assert_eq!(z5.multiply(&Element::Finite(3), &Element::Finite(4)).unwrap(), Element::Finite(2));
        assert_eq!(Factor::Integer.multiply(&Element::int(7), &Element::int(-2)).unwrap(), Element::int(5));
        let t = z2_named();
        let s = t.parse_element("s").unwrap();
        assert_eq!(t.format_element(&t.multiply(&s, &s).unwrap()), "e");
    }

    #[test]
    fn inverse_examples() {
        let z5 = Factor::cyclic(5).unwrap();
        assert_eq!(z5.inverse(&Element::Finite(2)).unwrap(), Element::Finite(3));
        assert_eq!(Factor::Integer.inverse(&Element::int(-4)).unwrap(), Element::int(4));
        let t = z2_named();
        let s = t.parse_element("s").unwrap();
        assert_eq!(t.inverse(&s).unwrap(), s);
    }

    #[test]
    fn invalid_elements_are_rejected() {
        let z5 = Factor::cyclic(5).unwrap();
        assert!(z5.multiply(&Element::Finite(5), &Element::Finite(1)).is_err());
        assert!(z5.inverse(&Element::int(1)).is_err());
        assert!(Factor::Integer.multiply(&Element::Finite(0), &Element::int(1)).is_err());
        assert!(z2_named().inverse(&Element::Finite(2)).is_err());
        assert!(Factor::cyclic(1).is_err());
    }

    #[test]
    fn valid_z3_table_accepted() {
        let raw = CayleyTable::cyclic(3).to_raw();
        assert!(CayleyTable::validate(&raw, 256).is_ok());
    }

    #[test]
    fn missing_identity_reported() {
        // every row is a permutation but no element acts as identity
        let raw = RawTable {
            elements: vec!["x".into(), "y".into()],
            identity: None,
            table: vec![vec!["y".into(), "x".into()], vec!["y".into(), "x".into()]],
        };
        let errs = CayleyTable::validate(&raw, 256).unwrap_err();
        assert!(errs.contains(&TableViolation::NoIdentity), "{errs:?}");
        assert!(TableViolation::NoIdentity.to_string().contains("no identity"));
    }

    #[test]
    fn non_closure_reported() {
        let raw = RawTable {
            elements: vec!["e".into(), "s".into()],
            identity: Some("e".into()),
            table: vec![vec!["e".into(), "s".into()], vec!["s".into(), "t".into()]],
        };
        let errs = CayleyTable::validate(&raw, 256).unwrap_err();
        assert!(matches!(errs[0], TableViolation::NotClosed { ref entry, .. } if entry == "t"));
    }

    #[test]
    fn broken_row_yields_associativity_witness() {
        // Z/3 with row 1 permuted incorrectly
        let mut raw = CayleyTable::cyclic(3).to_raw();
        raw.table[1] = vec!["1".into(), "0".into(), "2".into()];
        let errs = CayleyTable::validate(&raw, 256).unwrap_err();
        let witness = errs
            .iter()
            .find_map(|v| match v {
                TableViolation::NotAssociative { x, y, z } => Some((x.clone(), y.clone(), z.clone())),
                _ => None,
            })
            .expect("associativity violation");
        // exhaustive re-check of the reported triple
        let t_idx = |s: &str| raw.elements.iter().position(|e| e == s).unwrap();
        let mul = |p: usize, q: usize| t_idx(&raw.table[p][q]);
        let (x, y, z) = (t_idx(&witness.0), t_idx(&witness.1), t_idx(&witness.2));
        assert_ne!(mul(mul(x, y), z), mul(x, mul(y, z)));
    }

    #[test]
    fn order_limit_enforced() {
        let raw = CayleyTable::cyclic(5).to_raw();
        let errs = CayleyTable::validate(&raw, 4).unwrap_err();
        assert_eq!(errs, vec![TableViolation::TooLarge { order: 5, limit: 4 }]);
    }

    #[test]
    fn cyclic_matches_table_realization() {
        for n in 2..=9u32 {
            let cyc = Factor::cyclic(n).unwrap();
            let tab = Factor::Table(CayleyTable::cyclic(n));
            for x in 0..n {
                for y in 0..n {
                    let c = cyc.mul(&Element::Finite(x), &Element::Finite(y));
                    let t = tab.mul(&Element::Finite(x), &Element::Finite(y));
                    assert_eq!(c, t);
                }
            }
        }
    }

    #[test]
    fn table_power_uses_element_order() {
        let t = Factor::Table(CayleyTable::cyclic(6));
        let two = Element::Finite(2);
        assert_eq!(t.power(&two, &BigInt::from(4)).unwrap(), Element::Finite(2));
        assert_eq!(t.power(&two, &BigInt::from(-1)).unwrap(), Element::Finite(4));
    }

    #[test]
    fn swap_from_name_map() {
        let z5 = Factor::cyclic(5).unwrap();
        let iso = SwapIso::from_name_map(&z5, &z5, &[("1".into(), "2".into())]).unwrap();
        assert_eq!(iso.to_b(&Element::Finite(3)), Element::Finite(1));
        assert_eq!(iso.to_a(&Element::Finite(1)), Element::Finite(3));
        assert!(SwapIso::from_name_map(&z5, &Factor::cyclic(7).unwrap(), &[]).is_err());
        assert!(SwapIso::from_name_map(&z5, &z5, &[("1".into(), "0".into())]).is_err());
        assert!(SwapIso::from_name_map(&z5, &z5, &[("1".into(), "2".into()), ("2".into(), "3".into())]).is_err());
    }

    #[test]
    fn table_swap_must_preserve_products() {
        let t = Factor::Table(CayleyTable::cyclic(4));
        // transposes 1 and 2: not a homomorphism
        let pairs: Vec<(String, String)> = [("1", "2"), ("2", "1"), ("3", "3")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        assert!(matches!(SwapIso::from_name_map(&t, &t, &pairs), Err(Error::InvalidSwap(_))));
    }
}
