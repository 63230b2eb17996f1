//! Commuting pairs up to simultaneous conjugation, the right SL2(Z) action
//! `(g,h).M = (g^a h^c, g^b h^d)`, the braid-group action on pairs and
//! triples, and explicit orbit enumeration.
//!
//! Elements are handled as indices into a [`FiniteGroup`]'s element list;
//! all traversals are breadth-first in index order, so orbit numbering is
//! deterministic.

use std::collections::HashMap;

use crate::permgrp::FiniteGroup;

/// Default cap on |G| for commuting-pair enumeration.
pub const DEFAULT_PAIR_CAP: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("group of order {order} exceeds the pair-enumeration cap {cap}")]
    PairCapExceeded { order: usize, cap: usize },
    #[error("tuple space of size {space} exceeds the enumeration cap {cap}")]
    TupleCapExceeded { space: u128, cap: u128 },
    #[error("matrix ({a} {b}; {c} {d}) has determinant {det}, not 1")]
    NotUnimodular { a: i64, b: i64, c: i64, d: i64, det: i64 },
    #[error("parse error at offset {offset}: expected {expected}")]
    Parse { offset: usize, expected: &'static str },
}

/// An element of SL2(Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SL2Matrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl SL2Matrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<SL2Matrix, BraidError> {
        let det = a * d - b * c;
        if det != 1 {
            return Err(BraidError::NotUnimodular { a, b, c, d, det });
        }
        Ok(SL2Matrix { a, b, c, d })
    }

    pub fn identity() -> SL2Matrix {
        SL2Matrix { a: 1, b: 0, c: 0, d: 1 }
    }

    /// The generator (1 1; 0 1), matching the braid letter sigma_1.
    pub fn upper() -> SL2Matrix {
        SL2Matrix { a: 1, b: 1, c: 0, d: 1 }
    }

    /// The generator (1 0; -1 1), matching the braid letter sigma_2.
    pub fn lower() -> SL2Matrix {
        SL2Matrix { a: 1, b: 0, c: -1, d: 1 }
    }

    pub fn mul(&self, rhs: &SL2Matrix) -> SL2Matrix {
        SL2Matrix {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

/// Right action `(g,h).M = (g^a h^c, g^b h^d)`; a genuine right action on
/// commuting pairs, evaluated for arbitrary pairs.
pub fn sl2_act(group: &FiniteGroup, m: &SL2Matrix, pair: (usize, usize)) -> (usize, usize) {
    let (g, h) = pair;
    let first = group.mul(group.pow(g, m.a), group.pow(h, m.c));
    let second = group.mul(group.pow(g, m.b), group.pow(h, m.d));
    (first, second)
}

/// Letters of the braid group B_3 on two generators and their inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidLetter {
    S1,
    S1Inv,
    S2,
    S2Inv,
}

pub type BraidWord = Vec<BraidLetter>;

/// Parses a whitespace/comma separated word over `s1`, `s2`, `s1'`, `s2'`
/// (apostrophe marks the inverse).
pub fn parse_braid_word(s: &str) -> Result<BraidWord, BraidError> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut word = Vec::new();
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() || bytes[pos] == b',' {
            pos += 1;
            continue;
        }
        if bytes[pos] != b's' {
            return Err(BraidError::Parse { offset: pos, expected: "'s1', 's2', 's1'' or 's2''" });
        }
        let digit = bytes.get(pos + 1).copied();
        let letter = match digit {
            Some(b'1') => BraidLetter::S1,
            Some(b'2') => BraidLetter::S2,
            _ => return Err(BraidError::Parse { offset: pos + 1, expected: "'1' or '2'" }),
        };
        pos += 2;
        if bytes.get(pos) == Some(&b'\'') {
            pos += 1;
            word.push(match letter {
                BraidLetter::S1 => BraidLetter::S1Inv,
                BraidLetter::S2 => BraidLetter::S2Inv,
                _ => unreachable!(),
            });
        } else {
            word.push(letter);
        }
    }
    Ok(word)
}

/// The word z^2 = ((s1 s2)^3)^2 generating the square of the centre of B_3.
pub fn center_squared_word() -> BraidWord {
    let mut w = Vec::with_capacity(12);
    for _ in 0..6 {
        w.push(BraidLetter::S1);
        w.push(BraidLetter::S2);
    }
    w
}

fn letter_act_pair(group: &FiniteGroup, letter: BraidLetter, pair: (usize, usize)) -> (usize, usize) {
    let (g, h) = pair;
    match letter {
        BraidLetter::S1 => (g, group.mul(g, h)),
        BraidLetter::S1Inv => (g, group.mul(group.inv(g), h)),
        BraidLetter::S2 => (group.mul(g, group.inv(h)), h),
        BraidLetter::S2Inv => (group.mul(g, h), h),
    }
}

/// Applies the word left to right: sigma_1: (g,h) -> (g, gh),
/// sigma_2: (g,h) -> (g h^-1, h).
pub fn braid_act_pair(
    group: &FiniteGroup,
    word: &[BraidLetter],
    pair: (usize, usize),
) -> (usize, usize) {
    word.iter().fold(pair, |p, &l| letter_act_pair(group, l, p))
}

fn letter_act_triple(
    group: &FiniteGroup,
    letter: BraidLetter,
    t: (usize, usize, usize),
) -> (usize, usize, usize) {
    let (x, y, z) = t;
    match letter {
        // sigma_1: (x, y, z) -> (x y x^-1, x, z)
        BraidLetter::S1 => (group.mul(group.mul(x, y), group.inv(x)), x, z),
        // sigma_1^-1: (x, y, z) -> (y, y^-1 x y, z)
        BraidLetter::S1Inv => (y, group.mul(group.mul(group.inv(y), x), y), z),
        // sigma_2: (x, y, z) -> (x, y z y^-1, y)
        BraidLetter::S2 => (x, group.mul(group.mul(y, z), group.inv(y)), y),
        // sigma_2^-1: (x, y, z) -> (x, z, z^-1 y z)
        BraidLetter::S2Inv => (x, z, group.mul(group.mul(group.inv(z), y), z)),
    }
}

/// Applies the word left to right through the free-group automorphism
/// formulas evaluated in G.
pub fn braid_act_triple(
    group: &FiniteGroup,
    word: &[BraidLetter],
    triple: (usize, usize, usize),
) -> (usize, usize, usize) {
    word.iter().fold(triple, |t, &l| letter_act_triple(group, l, t))
}

/// Collapses a triple to the pair `(g1 g2^-1, g2 g3^-1)`.
pub fn collapse(group: &FiniteGroup, triple: (usize, usize, usize)) -> (usize, usize) {
    let (g1, g2, g3) = triple;
    (group.mul(g1, group.inv(g2)), group.mul(g2, group.inv(g3)))
}

/// One equivalence class of commuting pairs under simultaneous conjugation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    /// Lexicographically least member under element indices.
    pub rep: (usize, usize),
    pub members: Vec<(usize, usize)>,
}

/// All commuting pairs of a group partitioned by simultaneous conjugation.
#[derive(Debug, Clone)]
pub struct PairClassSet {
    classes: Vec<PairClass>,
    class_of: HashMap<(usize, usize), usize>,
}

impl PairClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[PairClass] {
        &self.classes
    }

    /// Class index of a commuting pair; `None` for non-commuting pairs.
    pub fn class_of(&self, pair: (usize, usize)) -> Option<usize> {
        self.class_of.get(&pair).copied()
    }
}

/// Enumerates the commuting pairs `{(g,h) : gh = hg}` and partitions them
/// by `(g,h) ~ (k^-1 g k, k^-1 h k)`. Classes are ordered by their
/// lexicographically least representative.
pub fn pair_classes(group: &FiniteGroup, cap: usize) -> Result<PairClassSet, BraidError> {
    let n = group.order();
    if n > cap {
        return Err(BraidError::PairCapExceeded { order: n, cap });
    }
    let mut class_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut classes: Vec<PairClass> = Vec::new();
    for g in 0..n {
        for h in 0..n {
            if group.mul(g, h) != group.mul(h, g) || class_of.contains_key(&(g, h)) {
                continue;
            }
            let mut members: Vec<(usize, usize)> = (0..n)
                .map(|k| (group.conjugate(g, k), group.conjugate(h, k)))
                .collect();
            members.sort_unstable();
            members.dedup();
            let id = classes.len();
            for &m in &members {
                class_of.insert(m, id);
            }
            classes.push(PairClass { rep: (g, h), members });
        }
    }
    Ok(PairClassSet { classes, class_of })
}

/// Independent count of pair classes: sum over conjugacy class
/// representatives g of the number of conjugacy classes of the
/// centralizer of g. Uses only permgrp machinery.
pub fn pair_class_count_oracle(group: &FiniteGroup) -> usize {
    group
        .conjugacy_classes()
        .classes()
        .iter()
        .map(|c| {
            let rep = group.element(c.rep).clone();
            group
                .centralizer(&rep)
                .expect("representative is a member")
                .conjugacy_classes()
                .len()
        })
        .sum()
}

/// Orbit partition of pair classes under the SL2(Z) generators
/// (1 1; 0 1) and (1 0; -1 1), breadth-first from the lowest class index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Orbit id per class index.
    pub orbit_of: Vec<usize>,
    /// Classes in each orbit, in discovery order.
    pub orbits: Vec<Vec<usize>>,
}

pub fn sl2_orbits(group: &FiniteGroup, pairs: &PairClassSet) -> OrbitPartition {
    let gens = [SL2Matrix::upper(), SL2Matrix::lower()];
    let count = pairs.len();
    let mut orbit_of = vec![usize::MAX; count];
    let mut orbits = Vec::new();
    for start in 0..count {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![start];
        orbit_of[start] = id;
        let mut head = 0;
        while head < orbit.len() {
            let class = orbit[head];
            for m in &gens {
                let image = sl2_act(group, m, pairs.classes()[class].rep);
                let target = pairs
                    .class_of(image)
                    .expect("SL2 image of a commuting pair is a commuting pair");
                if orbit_of[target] == usize::MAX {
                    orbit_of[target] = id;
                    orbit.push(target);
                }
            }
            head += 1;
        }
        orbits.push(orbit);
    }
    OrbitPartition { orbit_of, orbits }
}

/// Checks that z^2 (the square of the centre of B_3) fixes every class of
/// commuting pairs.
pub fn center_acts_trivially(group: &FiniteGroup, pairs: &PairClassSet) -> bool {
    let word = center_squared_word();
    pairs.classes().iter().all(|class| {
        let image = braid_act_pair(group, &word, class.rep);
        pairs.class_of(image) == pairs.class_of(class.rep)
    })
}

/// Number of n-tuples of group elements up to simultaneous conjugation
/// combined with coordinate permutation, by explicit orbit closure.
pub fn tuple_classes(group: &FiniteGroup, n: usize, cap: u128) -> Result<usize, BraidError> {
    let order = group.order() as u128;
    let space = order.pow(n as u32);
    if space > cap {
        return Err(BraidError::TupleCapExceeded { space, cap });
    }
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut count = 0;
    let mut stack: Vec<Vec<usize>> = Vec::new();
    let mut tuple = vec![0usize; n];
    loop {
        if !seen.contains_key(&tuple) {
            // close the orbit under conjugation by generators of G and
            // adjacent coordinate swaps
            stack.push(tuple.clone());
            seen.insert(tuple.clone(), count);
            while let Some(t) = stack.pop() {
                for k in 0..group.order() {
                    let conj: Vec<usize> = t.iter().map(|&g| group.conjugate(g, k)).collect();
                    if !seen.contains_key(&conj) {
                        seen.insert(conj.clone(), count);
                        stack.push(conj);
                    }
                }
                for i in 0..n.saturating_sub(1) {
                    let mut swapped = t.clone();
                    swapped.swap(i, i + 1);
                    if !seen.contains_key(&swapped) {
                        seen.insert(swapped.clone(), count);
                        stack.push(swapped);
                    }
                }
            }
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            tuple[i] += 1;
            if tuple[i] < group.order() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if n == 0 {
            return Ok(1);
        }
    }
}

/// Orbit report lines in the stable external format.
pub fn orbit_report(group: &FiniteGroup, pairs: &PairClassSet) -> Vec<String> {
    let partition = sl2_orbits(group, pairs);
    let mut lines: Vec<String> = pairs
        .classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            format!(
                "class {i}: rep=({},{}) size={} orbit={}",
                group.element(class.rep.0),
                group.element(class.rep.1),
                class.members.len(),
                partition.orbit_of[i]
            )
        })
        .collect();
    lines.push(format!("classes={} orbits={}", pairs.len(), partition.orbits.len()));
    lines
}
