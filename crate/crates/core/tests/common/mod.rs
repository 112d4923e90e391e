//! Independent reference implementations used as test oracles.

#![allow(dead_code)]

use std::sync::Arc;

use num::{BigInt, Signed, Zero};
use proptest::prelude::*;
use qmcode::factors::{CayleyTable, Element, Factor, GroupConfig};
use qmcode::words::{Letter, ReducedWord, Side, Word};

pub fn cfg(a: Factor, b: Factor) -> Arc<GroupConfig> {
    GroupConfig::with_default_swap(a, b).into_shared()
}

pub fn z5_z2() -> Arc<GroupConfig> {
    cfg(Factor::cyclic(5).unwrap(), Factor::cyclic(2).unwrap())
}

pub fn z3_z3() -> Arc<GroupConfig> {
    cfg(Factor::cyclic(3).unwrap(), Factor::cyclic(3).unwrap())
}

pub fn z_z3() -> Arc<GroupConfig> {
    cfg(Factor::Integer, Factor::cyclic(3).unwrap())
}

pub fn z5_z7() -> Arc<GroupConfig> {
    cfg(Factor::cyclic(5).unwrap(), Factor::cyclic(7).unwrap())
}

pub fn d_inf() -> Arc<GroupConfig> {
    cfg(Factor::cyclic(2).unwrap(), Factor::cyclic(2).unwrap())
}

pub fn s3_z2() -> Arc<GroupConfig> {
    // S3 built from permutations of {0,1,2}
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let names: Vec<String> = (0..6).map(|i| format!("p{i}")).collect();
    let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let r = compose(p, q);
                    names[perms.iter().position(|x| *x == r).unwrap()].clone()
                })
                .collect()
        })
        .collect();
    let raw = qmcode::factors::RawTable { elements: names.clone(), identity: Some(names[0].clone()), table };
    cfg(Factor::table(&raw, 256).unwrap(), Factor::cyclic(2).unwrap())
}

pub fn z_z() -> Arc<GroupConfig> {
    cfg(Factor::Integer, Factor::Integer)
}

pub fn z4_table_z4() -> Arc<GroupConfig> {
    cfg(Factor::Table(CayleyTable::cyclic(4)), Factor::cyclic(4).unwrap())
}

/// Rewrites to a fixpoint, one local rule at a time: delete an identity
/// letter, or multiply the first adjacent pair from the same factor.
pub fn naive_reduce(group: &GroupConfig, letters: &[Letter]) -> Vec<Letter> {
    let mut cur: Vec<Letter> = letters.to_vec();
    loop {
        if let Some(i) = cur.iter().position(|l| group.factor(l.side).is_identity(&l.elem)) {
            cur.remove(i);
            continue;
        }
        if let Some(i) = (1..cur.len()).find(|&i| cur[i - 1].side == cur[i].side) {
            let f = group.factor(cur[i].side);
            let merged = f.multiply(&cur[i - 1].elem, &cur[i].elem).unwrap();
            cur[i - 1] = Letter::new(cur[i].side, merged);
            cur.remove(i);
            continue;
        }
        return cur;
    }
}

/// Maximum number of disjoint occurrences by trying every choice.
pub fn max_disjoint_exhaustive(c: &[u64], z: &[u64]) -> usize {
    fn go(c: &[u64], z: &[u64], from: usize) -> usize {
        let mut best = 0;
        for i in from..c.len() {
            if i + z.len() <= c.len() && &c[i..i + z.len()] == z {
                best = best.max(1 + go(c, z, i + z.len()));
            }
        }
        best
    }
    go(c, z, 0)
}

/// Reversal appears among the windows of `z z`.
pub fn generic_direct(z: &[u64]) -> bool {
    let k = z.len();
    let zz: Vec<u64> = z.iter().chain(z).copied().collect();
    let rev: Vec<u64> = z.iter().rev().copied().collect();
    !(0..=zz.len() - k).any(|i| zz[i..i + k] == rev[..])
}

/// Run lengths of the side tuple, grouped by equality.
pub fn code_definitional(w: &ReducedWord, side: Side) -> Vec<u64> {
    let tuple: Vec<&Element> = w.letters().iter().filter(|l| l.side == side).map(|l| &l.elem).collect();
    tuple.chunk_by(|x, y| x == y).map(|run| run.len() as u64).collect()
}

/// Sums of maximal same-sign runs of the integer tuple, in absolute value.
pub fn weighted_definitional(w: &ReducedWord, side: Side) -> Vec<BigInt> {
    let tuple: Vec<BigInt> = w
        .letters()
        .iter()
        .filter(|l| l.side == side)
        .map(|l| l.elem.as_integer().unwrap().clone())
        .collect();
    tuple
        .chunk_by(|x, y| x.is_positive() == y.is_positive())
        .map(|run| run.iter().fold(BigInt::zero(), |acc, x| acc + x).abs())
        .collect()
}

pub fn to_u64s(entries: &[num::BigUint]) -> Vec<u64> {
    entries.iter().map(|e| u64::try_from(e).unwrap()).collect()
}

/// Arbitrary (possibly unreduced) letter sequences over `group`.
pub fn raw_letters(group: Arc<GroupConfig>, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    let g = group.clone();
    prop::collection::vec((any::<bool>(), -6i64..=6), 0..=max_len).prop_map(move |items| {
        items
            .into_iter()
            .map(|(is_a, v)| {
                let side = if is_a { Side::A } else { Side::B };
                Letter::new(side, element_from(g.factor(side), v))
            })
            .collect()
    })
}

pub fn element_from(f: &Factor, v: i64) -> Element {
    match f {
        Factor::Integer => Element::int(v),
        Factor::Cyclic { order } => Element::Finite(v.rem_euclid(*order as i64) as u32),
        Factor::Table(t) => Element::Finite(v.rem_euclid(t.order() as i64) as u32),
    }
}

pub fn reduced_words(group: Arc<GroupConfig>, max_len: usize) -> impl Strategy<Value = ReducedWord> {
    let g = group.clone();
    raw_letters(group, max_len).prop_map(move |ls| Word::new(g.clone(), ls).unwrap().reduce())
}

/// Every reduced word of length at most `max_len` over two finite factors.
pub fn all_reduced_words(group: &Arc<GroupConfig>, max_len: usize) -> Vec<ReducedWord> {
    let nontrivial = |side: Side| -> Vec<Element> {
        let f = group.factor(side);
        f.elements().unwrap().into_iter().filter(|x| !f.is_identity(x)).collect()
    };
    let letters = [nontrivial(Side::A), nontrivial(Side::B)];
    let mut out = vec![ReducedWord::empty(group.clone())];
    let mut frontier: Vec<Vec<Letter>> = Vec::new();
    for side in [Side::A, Side::B] {
        for x in &letters[side as usize] {
            frontier.push(vec![Letter::new(side, x.clone())]);
        }
    }
    for _ in 0..max_len {
        let mut next = Vec::new();
        for ls in &frontier {
            out.push(ReducedWord::from_reduced_letters(group.clone(), ls.clone()).unwrap());
            let side = ls.last().unwrap().side.other();
            for x in &letters[side as usize] {
                let mut l2 = ls.clone();
                l2.push(Letter::new(side, x.clone()));
                next.push(l2);
            }
        }
        frontier = next;
    }
    out
}
