//! Finite permutation groups: generation by closure, conjugacy classes,
//! centralizers, element orders and power maps on classes.
//!
//! Element ordering is deterministic everywhere (breadth-first from the
//! identity with generators applied in their given order), so identical
//! inputs reproduce identical element and class orderings byte for byte.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

/// Default cap on the number of elements produced by closure.
pub const DEFAULT_ELEMENT_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("permutation images are not a bijection on 0..{degree}")]
    NotABijection { degree: usize },
    #[error("permutation degree {got} does not match group degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("group generation exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("unknown builtin group '{name}'")]
    UnknownBuiltin { name: String },
    #[error("builtin parameter {k} out of supported range for family {family}")]
    BuiltinOutOfRange { family: char, k: u64 },
    #[error("degree must be positive")]
    InvalidDegree,
    #[error("parse error at offset {offset}: expected {expected}")]
    Parse { offset: usize, expected: &'static str },
}

/// A permutation of `{0, ..., d-1}` in image form: `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation, GroupError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(GroupError::NotABijection { degree: d });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Permutation {
        Permutation { images: (0..degree).collect() }
    }

    /// Builds a permutation from 0-based cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Permutation, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cyc in cycles {
            for (i, &p) in cyc.iter().enumerate() {
                if p >= degree || seen[p] {
                    return Err(GroupError::NotABijection { degree });
                }
                seen[p] = true;
                images[p] = cyc[(i + 1) % cyc.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Product `self` then `rhs`: `(p * q)(x) = q(p(x))`.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        let images = self.images.iter().map(|&i| rhs.images[i]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Minimal k >= 1 with p^k = identity (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut ord: u64 = 1;
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let ord = self.order() as i64;
        let mut k = e.rem_euclid(ord) as u64;
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// Disjoint cycles on 0-based points, each starting at its smallest
    /// point, ordered by that point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p);
                p = self.images[p];
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; the identity renders as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cyc in cycles {
            f.write_str("(")?;
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated cycles `(a b c)` with 1-based points into a
/// permutation of the stated degree; `()` denotes the identity.
pub fn parse_permutation(s: &str, degree: usize) -> Result<Permutation, GroupError> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(GroupError::Parse { offset: pos, expected: "'('" });
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(GroupError::Parse { offset: pos, expected: "'('" });
        }
        pos += 1;
        let mut cyc: Vec<usize> = Vec::new();
        loop {
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(b) if b.is_ascii_digit() => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let point: usize = s[start..pos]
                        .parse()
                        .map_err(|_| GroupError::Parse { offset: start, expected: "point" })?;
                    if point == 0 || point > degree {
                        return Err(GroupError::Parse {
                            offset: start,
                            expected: "point within the stated degree",
                        });
                    }
                    if cyc.contains(&(point - 1)) {
                        return Err(GroupError::Parse {
                            offset: start,
                            expected: "point not already used in this cycle",
                        });
                    }
                    cyc.push(point - 1);
                }
                _ => return Err(GroupError::Parse { offset: pos, expected: "point or ')'" }),
            }
        }
        if !cyc.is_empty() {
            cycles.push(cyc);
        }
        skip_ws(&mut pos);
    }
    let mut seen = vec![false; degree];
    for cyc in &cycles {
        for &p in cyc {
            if seen[p] {
                return Err(GroupError::Parse {
                    offset: 0,
                    expected: "disjoint cycles (point repeated)",
                });
            }
            seen[p] = true;
        }
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(degree, &refs)
}

/// A finite permutation group with its complete, deterministically ordered
/// element list. Index 0 is always the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl FiniteGroup {
    /// Closes the generators under composition, breadth-first from the
    /// identity. Fails if more than `cap` elements appear.
    pub fn generate(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, got: g.degree() });
            }
        }
        let ident = Permutation::identity(degree);
        let mut elements = vec![ident.clone()];
        let mut index = HashMap::new();
        index.insert(ident, 0);
        let mut head = 0;
        while head < elements.len() {
            for g in &generators {
                let f = elements[head].compose(g);
                if !index.contains_key(&f) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(f.clone(), elements.len());
                    elements.push(f);
                }
            }
            head += 1;
        }
        Ok(FiniteGroup { degree, generators, elements, index })
    }

    /// Wraps an explicit closed element list, preserving its order. The
    /// caller is responsible for closure; used for subgroups cut out of an
    /// existing group.
    fn from_closed_elements(degree: usize, elements: Vec<Permutation>) -> FiniteGroup {
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        FiniteGroup { degree, generators: elements.clone(), elements, index }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Product by element indices; panics if the group is not closed.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].compose(&self.elements[j]);
        *self.index.get(&p).expect("group closed under composition")
    }

    pub fn inv(&self, i: usize) -> usize {
        let p = self.elements[i].inverse();
        *self.index.get(&p).expect("group closed under inversion")
    }

    /// `k^-1 g k` by element indices.
    pub fn conjugate(&self, g: usize, k: usize) -> usize {
        self.mul(self.mul(self.inv(k), g), k)
    }

    pub fn pow(&self, g: usize, e: i64) -> usize {
        let p = self.elements[g].pow(e);
        *self.index.get(&p).expect("group closed under powers")
    }

    pub fn element_order(&self, g: usize) -> u64 {
        self.elements[g].order()
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1u64, |acc, p| acc.lcm(&p.order()))
    }

    /// Conjugacy classes with deterministic ordering: classes sorted by
    /// (order of representative, class size, representative index); the
    /// representative is the member with the smallest element index.
    pub fn conjugacy_classes(&self) -> ConjugacyClassSet {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut raw: Vec<(usize, Vec<usize>)> = Vec::new();
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|k| self.conjugate(g, k)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                assigned[m] = true;
            }
            raw.push((g, members));
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&c| (self.element_order(raw[c].0), raw[c].1.len(), raw[c].0));
        let classes: Vec<ConjugacyClass> = order
            .iter()
            .map(|&c| ConjugacyClass { rep: raw[c].0, members: raw[c].1.clone() })
            .collect();
        let mut class_of = vec![usize::MAX; n];
        for (i, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = i;
            }
        }
        ConjugacyClassSet { classes, class_of }
    }

    /// Subgroup of all elements commuting with `g`, with inherited ordering.
    pub fn centralizer(&self, g: &Permutation) -> Result<FiniteGroup, GroupError> {
        let gi = self.index_of(g).ok_or(GroupError::NotAMember)?;
        let members: Vec<Permutation> = (0..self.order())
            .filter(|&k| self.mul(k, gi) == self.mul(gi, k))
            .map(|k| self.elements[k].clone())
            .collect();
        Ok(FiniteGroup::from_closed_elements(self.degree, members))
    }
}

/// One conjugacy class: representative element index and sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub rep: usize,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClassSet {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl ConjugacyClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }
}

/// Class index map induced by g -> g^ell; a bijection whenever
/// gcd(ell, exponent) = 1, and well defined on classes for any ell since
/// `(k^-1 g k)^ell = k^-1 g^ell k`.
pub fn power_map_on_classes(
    group: &FiniteGroup,
    classes: &ConjugacyClassSet,
    ell: i64,
) -> Vec<usize> {
    classes
        .classes()
        .iter()
        .map(|c| classes.class_of(group.pow(c.rep, ell)))
        .collect()
}

/// Canonical permutation realizations of the builtin families
/// S*k*, A*k*, Z*k*, D*k* and Q8.
pub fn builtin(name: &str) -> Result<FiniteGroup, GroupError> {
    builtin_with_cap(name, DEFAULT_ELEMENT_CAP)
}

/// [`builtin`] with an explicit element cap.
pub fn builtin_with_cap(name: &str, cap: usize) -> Result<FiniteGroup, GroupError> {
    let unknown = || GroupError::UnknownBuiltin { name: name.to_string() };
    if name == "Q8" {
        // Regular action on the eight unit quaternions ordered
        // 1, -1, i, -i, j, -j, k, -k; generators are left multiplication
        // by i and by j.
        let gi = Permutation::new(vec![2, 3, 1, 0, 6, 7, 5, 4]).expect("valid");
        let gj = Permutation::new(vec![4, 5, 7, 6, 1, 0, 2, 3]).expect("valid");
        return FiniteGroup::generate(8, vec![gi, gj], cap);
    }
    if name.len() < 2 {
        return Err(unknown());
    }
    let family = name.chars().next().expect("nonempty");
    let rest = &name[1..];
    if !"SAZD".contains(family) || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown());
    }
    let k: u64 = rest.parse().map_err(|_| unknown())?;
    let out_of_range = || GroupError::BuiltinOutOfRange { family, k };
    let kc = k as usize;
    match family {
        'S' => {
            if !(1..=7).contains(&k) {
                return Err(out_of_range());
            }
            let mut gens = Vec::new();
            if k >= 2 {
                gens.push(Permutation::from_cycles(kc, &[&[0, 1]]).expect("valid"));
            }
            if k >= 3 {
                let cyc: Vec<usize> = (0..kc).collect();
                gens.push(Permutation::from_cycles(kc, &[&cyc]).expect("valid"));
            }
            FiniteGroup::generate(kc, gens, cap)
        }
        'A' => {
            if !(1..=7).contains(&k) {
                return Err(out_of_range());
            }
            let mut gens = Vec::new();
            if k >= 3 {
                gens.push(Permutation::from_cycles(kc, &[&[0, 1, 2]]).expect("valid"));
            }
            if k >= 4 {
                if k % 2 == 1 {
                    let cyc: Vec<usize> = (0..kc).collect();
                    gens.push(Permutation::from_cycles(kc, &[&cyc]).expect("valid"));
                } else {
                    let cyc: Vec<usize> = (1..kc).collect();
                    gens.push(Permutation::from_cycles(kc, &[&cyc]).expect("valid"));
                }
            }
            FiniteGroup::generate(kc, gens, cap)
        }
        'Z' => {
            if !(1..=500).contains(&k) {
                return Err(out_of_range());
            }
            let mut gens = Vec::new();
            if k >= 2 {
                let cyc: Vec<usize> = (0..kc).collect();
                gens.push(Permutation::from_cycles(kc, &[&cyc]).expect("valid"));
            }
            FiniteGroup::generate(kc, gens, cap)
        }
        'D' => {
            // Dihedral of order 2k. k >= 3 acts on the k-gon; D1 and D2 use
            // their smallest faithful degrees (2 and 4 points).
            if !(1..=250).contains(&k) {
                return Err(out_of_range());
            }
            match k {
                1 => FiniteGroup::generate(
                    2,
                    vec![Permutation::from_cycles(2, &[&[0, 1]]).expect("valid")],
                    cap,
                ),
                2 => FiniteGroup::generate(
                    4,
                    vec![
                        Permutation::from_cycles(4, &[&[0, 1]]).expect("valid"),
                        Permutation::from_cycles(4, &[&[2, 3]]).expect("valid"),
                    ],
                    cap,
                ),
                _ => {
                    let rot: Vec<usize> = (0..kc).collect();
                    let rot = Permutation::from_cycles(kc, &[&rot]).expect("valid");
                    let refl =
                        Permutation::new((0..kc).map(|i| (kc - i) % kc).collect()).expect("valid");
                    FiniteGroup::generate(kc, vec![rot, refl], cap)
                }
            }
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn s3() -> FiniteGroup {
        builtin("S3").unwrap()
    }

    fn a5() -> FiniteGroup {
        builtin("A5").unwrap()
    }

    #[test]
    fn generate_s3_from_standard_generators() {
        let g = FiniteGroup::generate(
            3,
            vec![
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity_index(), 0);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn generate_a5_from_five_cycle_and_three_cycle() {
        let g = FiniteGroup::generate(
            5,
            vec![
                Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
                Permutation::from_cycles(5, &[&[2, 3, 4]]).unwrap(),
            ],
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::generate(1, vec![], DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().len(), 1);
        assert_eq!(g.exponent(), 1);
        // empty generator list at any stated degree
        let g4 = FiniteGroup::generate(4, vec![], DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g4.order(), 1);
        assert_eq!(g4.degree(), 4);
    }

    #[test]
    fn cap_exceeded_is_an_error() {
        let err = FiniteGroup::generate(
            5,
            vec![
                Permutation::from_cycles(5, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
            ],
            50,
        )
        .unwrap_err();
        assert_eq!(err, GroupError::CapExceeded { cap: 50 });
    }

    #[test]
    fn invalid_permutation_rejected() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        let g = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let err = FiniteGroup::generate(3, vec![g], DEFAULT_ELEMENT_CAP).unwrap_err();
        assert_eq!(err, GroupError::DegreeMismatch { expected: 3, got: 4 });
    }

    #[test]
    fn s3_classes() {
        let cls = s3().conjugacy_classes();
        assert_eq!(cls.sizes(), vec![1, 3, 2]);
        assert_eq!(cls.classes()[0].rep, 0);
    }

    #[test]
    fn a5_classes() {
        let cls = a5().conjugacy_classes();
        assert_eq!(cls.sizes(), vec![1, 15, 20, 12, 12]);
    }

    #[test]
    fn centralizer_of_identity_is_whole_group() {
        let g = s3();
        let c = g.centralizer(&Permutation::identity(3)).unwrap();
        assert_eq!(c.order(), 6);
    }

    #[test]
    fn centralizers_in_a5() {
        let g = a5();
        let double = Permutation::from_cycles(5, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(g.centralizer(&double).unwrap().order(), 4);
        let five = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(g.centralizer(&five).unwrap().order(), 5);
        let not_member = Permutation::from_cycles(5, &[&[0, 1]]).unwrap();
        assert_eq!(g.centralizer(&not_member).unwrap_err(), GroupError::NotAMember);
    }

    #[test]
    fn element_orders_and_exponents() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(s3().exponent(), 6);
        assert_eq!(a5().exponent(), 30);
    }

    #[test]
    fn power_map_s3_fifth_power_fixes_classes() {
        let g = s3();
        let cls = g.conjugacy_classes();
        assert_eq!(power_map_on_classes(&g, &cls, 5), vec![0, 1, 2]);
    }

    #[test]
    fn power_map_a5_swaps_five_cycle_classes() {
        let g = a5();
        let cls = g.conjugacy_classes();
        // classes ordered: e, double transpositions, 3-cycles, two 5-cycle classes.
        // Raw squaring collapses the involution class onto the identity class and
        // swaps the 5-cycle classes; the coprime exponent 7 (= 2 mod 5) is a
        // bijection swapping only the 5-cycle classes.
        assert_eq!(power_map_on_classes(&g, &cls, 2), vec![0, 0, 2, 4, 3]);
        assert_eq!(power_map_on_classes(&g, &cls, 7), vec![0, 1, 2, 4, 3]);
    }

    #[test]
    fn power_map_identity_exponent() {
        for name in ["S4", "D5", "Q8"] {
            let g = builtin(name).unwrap();
            let cls = g.conjugacy_classes();
            let ident: Vec<usize> = (0..cls.len()).collect();
            assert_eq!(power_map_on_classes(&g, &cls, 1), ident);
        }
    }

    #[test]
    fn builtin_families() {
        let d3 = builtin("D3").unwrap();
        assert_eq!(d3.order(), 6);
        assert_eq!(d3.conjugacy_classes().sizes(), s3().conjugacy_classes().sizes());

        let q8 = builtin("Q8").unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.conjugacy_classes().len(), 5);

        let z12 = builtin("Z12").unwrap();
        assert_eq!(z12.order(), 12);
        assert_eq!(z12.conjugacy_classes().len(), 12);

        assert_eq!(builtin("D1").unwrap().order(), 2);
        assert_eq!(builtin("D2").unwrap().order(), 4);
        assert_eq!(builtin("A2").unwrap().order(), 1);
        assert_eq!(builtin("A4").unwrap().order(), 12);
        assert_eq!(builtin("A6").unwrap().order(), 360);
        assert_eq!(builtin("S5").unwrap().order(), 120);

        assert!(matches!(builtin("X3"), Err(GroupError::UnknownBuiltin { .. })));
        assert!(matches!(builtin("S99"), Err(GroupError::BuiltinOutOfRange { .. })));
        assert!(matches!(builtin("Q9"), Err(GroupError::UnknownBuiltin { .. })));
    }

    #[test]
    fn closure_properties_random() {
        let mut rng = StdRng::seed_from_u64(11);
        for name in ["S4", "A5", "D6", "Q8"] {
            let g = builtin(name).unwrap();
            for _ in 0..200 {
                let i = rng.random_range(0..g.order());
                let j = rng.random_range(0..g.order());
                let _ = g.mul(i, j); // panics if not closed
                let _ = g.inv(i);
            }
        }
    }

    #[test]
    fn class_equation() {
        for name in ["S3", "S4", "A4", "A5", "D7", "Q8", "Z9"] {
            let g = builtin(name).unwrap();
            let cls = g.conjugacy_classes();
            let total: usize = cls.sizes().iter().sum();
            assert_eq!(total, g.order());
            for s in cls.sizes() {
                assert_eq!(g.order() % s, 0, "class size {s} does not divide |{name}|");
            }
        }
    }

    #[test]
    fn power_map_conjugation_invariance() {
        let mut rng = StdRng::seed_from_u64(5);
        let g = builtin("S4").unwrap();
        let cls = g.conjugacy_classes();
        for _ in 0..200 {
            let x = rng.random_range(0..g.order());
            let k = rng.random_range(0..g.order());
            let ell = rng.random_range(-6i64..12);
            let lhs = cls.class_of(g.pow(g.conjugate(x, k), ell));
            let rhs = cls.class_of(g.pow(x, ell));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn centralizer_orbit_duality() {
        for name in ["S3", "S4", "A5", "D6", "Q8"] {
            let g = builtin(name).unwrap();
            let cls = g.conjugacy_classes();
            for c in cls.classes() {
                let rep = g.element(c.rep).clone();
                let cent = g.centralizer(&rep).unwrap();
                assert_eq!(c.members.len() * cent.order(), g.order());
            }
        }
    }

    #[test]
    fn deterministic_generation() {
        let make = || {
            let g = builtin("S4").unwrap();
            let cls = g.conjugacy_classes();
            (g.elements().to_vec(), cls.classes().to_vec())
        };
        assert_eq!(make(), make());
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        let q = parse_permutation("(1 2) (3 4 5)", 5).unwrap();
        assert_eq!(p, q);
        assert_eq!(parse_permutation("()", 4).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn cycle_parse_errors() {
        let err = parse_permutation("(1 2", 4).unwrap_err();
        assert_eq!(err, GroupError::Parse { offset: 4, expected: "point or ')'" });
        let err = parse_permutation("(1 9)", 4).unwrap_err();
        assert_eq!(
            err,
            GroupError::Parse { offset: 3, expected: "point within the stated degree" }
        );
        let err = parse_permutation("(1 1)", 4).unwrap_err();
        assert_eq!(
            err,
            GroupError::Parse { offset: 3, expected: "point not already used in this cycle" }
        );
        let err = parse_permutation("1 2)", 4).unwrap_err();
        assert_eq!(err, GroupError::Parse { offset: 0, expected: "'('" });
    }
}
