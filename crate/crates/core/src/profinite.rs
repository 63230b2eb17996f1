//! Truncated profinite integers, their action on finite groups through
//! power maps, and two explicit covering-space models: the cyclic cover
//! x1^n x2 = 1 of the punctured plane and the dihedral covers
//! f(x) = (2 - x^n - x^(-n))/4 of the twice-punctured plane.
//!
//! Profinite objects are represented only by a residue at a caller-chosen
//! modulus: every action in scope factors through a finite quotient. The
//! Galois conjugation of deck transformations is always computed from
//! first principles on the fiber (coordinatewise Galois maps) and then
//! identified against the closed form; the closed form is never trusted
//! without the check.

use num_integer::Integer;

use crate::cyclo::{CycNumber, GaloisAut};
use crate::permgrp::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProfiniteError {
    #[error("modulus must be positive")]
    InvalidModulus,
    #[error("{residue} is not a unit mod {modulus}")]
    NotAUnit { residue: u64, modulus: u64 },
    #[error("group exponent {exponent} does not divide the truncation modulus {modulus}")]
    ModulusMismatch { exponent: u64, modulus: u64 },
    #[error("{ell} is not coprime to {order}")]
    NotCoprime { ell: u64, order: u64 },
    #[error(
        "the subgroup generated by the tuple is not cyclic, so its Galois action \
         is not determined by power maps; only cyclic subgroups are supported"
    )]
    NotCyclic,
    #[error("element index {index} out of range for a group of order {order}")]
    NoSuchElement { index: usize, order: usize },
}

/// A coset of a profinite integer mod N.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedProfinite {
    modulus: u64,
    residue: u64,
}

impl TruncatedProfinite {
    pub fn new(modulus: u64, residue: i64) -> Result<TruncatedProfinite, ProfiniteError> {
        if modulus == 0 {
            return Err(ProfiniteError::InvalidModulus);
        }
        Ok(TruncatedProfinite { modulus, residue: residue.rem_euclid(modulus as i64) as u64 })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }
}

/// A unit of Z/N, a truncation of an element of the profinite unit group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfiniteUnit {
    modulus: u64,
    residue: u64,
}

impl ProfiniteUnit {
    pub fn new(modulus: u64, residue: i64) -> Result<ProfiniteUnit, ProfiniteError> {
        if modulus == 0 {
            return Err(ProfiniteError::InvalidModulus);
        }
        let r = residue.rem_euclid(modulus as i64) as u64;
        // gcd(0, 1) = 1, so the zero residue is accepted exactly at modulus 1
        if r.gcd(&modulus) != 1 {
            return Err(ProfiniteError::NotAUnit { residue: r, modulus });
        }
        Ok(ProfiniteUnit { modulus, residue: r })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }
}

/// The action of a profinite unit on Hom(Zhat, G) = G: it sends g to
/// g^residue. Requires exponent(G) to divide the truncation modulus.
pub fn profinite_act_on_group(
    unit: &ProfiniteUnit,
    group: &FiniteGroup,
    g: usize,
) -> Result<usize, ProfiniteError> {
    if g >= group.order() {
        return Err(ProfiniteError::NoSuchElement { index: g, order: group.order() });
    }
    let exponent = group.exponent();
    if !unit.modulus.is_multiple_of(exponent) {
        return Err(ProfiniteError::ModulusMismatch { exponent, modulus: unit.modulus });
    }
    Ok(group.pow(g, unit.residue as i64))
}

/// Count of continuous homomorphisms Zhat -> G together with the witness
/// bijection: hom i is determined by sending the canonical generator to
/// element i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCount {
    pub count: usize,
    pub generator_images: Vec<usize>,
}

pub fn hom_count(group: &FiniteGroup) -> HomCount {
    HomCount { count: group.order(), generator_images: (0..group.order()).collect() }
}

/// A deck transformation of one of the two covering models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeckTransformation {
    Cyclic { n: u64, k: u64 },
    Dihedral { n: u64, eps: i8, k: u64 },
}

fn mod_inverse(ell: u64, n: u64) -> Result<u64, ProfiniteError> {
    if n == 1 {
        return Ok(0);
    }
    let e = num_integer::Integer::extended_gcd(&(ell as i64), &(n as i64));
    if e.gcd != 1 {
        return Err(ProfiniteError::NotCoprime { ell: ell % n, order: n });
    }
    Ok(e.x.rem_euclid(n as i64) as u64)
}

fn cyc_pow(x: &CycNumber, e: u64) -> CycNumber {
    let mut acc = CycNumber::one(x.order()).expect("valid order");
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// The spiral-staircase cover Y_n: x1^n x2 = 1 over the punctured plane,
/// modelled by its fiber over (1, 1) and its deck group.
///
/// The fiber is `{z_n^j : j in Z_n}` as exact cyclotomic numbers; deck map
/// k acts by index shift j -> j + k. Construction verifies the defining
/// equation on the fiber, that every deck map preserves it, and that the
/// deck group is cyclic of order n acting freely and transitively.
#[derive(Debug, Clone)]
pub struct CyclicCover {
    n: u64,
    fiber: Vec<CycNumber>,
}

impl CyclicCover {
    pub fn new(n: u64) -> Result<CyclicCover, ProfiniteError> {
        if n == 0 {
            return Err(ProfiniteError::InvalidModulus);
        }
        let fiber: Vec<CycNumber> = (0..n)
            .map(|j| CycNumber::root_of_unity(n, j as i64).expect("valid order"))
            .collect();
        let cover = CyclicCover { n, fiber };
        cover.verify();
        Ok(cover)
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn fiber(&self) -> &[CycNumber] {
        &self.fiber
    }

    /// Deck transformation gamma_k as a fiber permutation.
    pub fn deck_perm(&self, k: u64) -> Vec<usize> {
        let n = self.n as usize;
        (0..n).map(|j| (j + k as usize) % n).collect()
    }

    pub fn fiber_index(&self, point: &CycNumber) -> Option<usize> {
        self.fiber.iter().position(|p| p == point)
    }

    fn verify(&self) {
        let one = CycNumber::one(self.n).expect("valid order");
        for (j, point) in self.fiber.iter().enumerate() {
            // defining equation x1^n x2 = 1 with x2 = 1 on the fiber
            assert!(cyc_pow(point, self.n) == one, "fiber point {j} violates x^n = 1");
        }
        // deck maps preserve the fiber and the equation, and compose additively
        for k in 0..self.n {
            let perm = self.deck_perm(k);
            let mut seen = vec![false; perm.len()];
            for (j, &t) in perm.iter().enumerate() {
                assert!(!seen[t], "deck map {k} is not a bijection");
                seen[t] = true;
                assert!(
                    cyc_pow(&self.fiber[t], self.n) == one,
                    "deck image of point {j} violates the equation"
                );
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                let composed: Vec<usize> = {
                    let pa = self.deck_perm(a);
                    let pb = self.deck_perm(b);
                    (0..pa.len()).map(|j| pa[pb[j]]).collect()
                };
                assert_eq!(composed, self.deck_perm((a + b) % self.n), "deck group not Z_n");
            }
        }
        // free and transitive: gamma_k moves point 0 to point k, and only
        // gamma_0 has a fixed point
        for k in 1..self.n {
            assert!(self.deck_perm(k).iter().enumerate().all(|(j, &t)| j != t));
        }
    }

    /// Conjugates gamma_k by sigma_ell from first principles (galois maps of
    /// fiber coordinates) and identifies the result as gamma_(ell k).
    pub fn galois_on_deck(&self, ell: i64, k: u64) -> Result<DeckTransformation, ProfiniteError> {
        let n = self.n;
        let ell_res = ell.rem_euclid(n.max(2) as i64) as u64;
        let sigma = GaloisAut::new(n, ell)
            .map_err(|_| ProfiniteError::NotCoprime { ell: ell_res, order: n })?;
        let sigma_inv = GaloisAut::new(n, mod_inverse(sigma.ell(), n)? as i64)
            .unwrap_or_else(|_| GaloisAut::identity(n).expect("valid order"));
        let deck = self.deck_perm(k % n);
        let mut conjugated = Vec::with_capacity(self.fiber.len());
        for point in &self.fiber {
            let pulled = sigma_inv.apply(point).expect("fiber points share the order");
            let j = self.fiber_index(&pulled).expect("galois permutes the fiber");
            let moved = &self.fiber[deck[j]];
            let pushed = sigma.apply(moved).expect("fiber points share the order");
            conjugated.push(self.fiber_index(&pushed).expect("galois permutes the fiber"));
        }
        let expected_k = sigma.ell() * (k % n) % n;
        assert_eq!(
            conjugated,
            self.deck_perm(expected_k),
            "first-principles conjugation disagrees with the closed form"
        );
        Ok(DeckTransformation::Cyclic { n, k: expected_k })
    }
}

/// The dihedral cover of the twice-punctured plane with
/// f(x) = (2 - x^n - x^(-n))/4, modelled by the fiber f^(-1)(1/2) =
/// {z_4n^j : j odd, -2n < j <= 2n} and deck maps
/// (eps, k): z^j -> z^(eps j + 4k).
#[derive(Debug, Clone)]
pub struct DihedralCover {
    n: u64,
    exponents: Vec<i64>,
    fiber: Vec<CycNumber>,
}

impl DihedralCover {
    pub fn new(n: u64) -> Result<DihedralCover, ProfiniteError> {
        if n == 0 {
            return Err(ProfiniteError::InvalidModulus);
        }
        let exponents: Vec<i64> = (-(2 * n as i64 - 1)..=(2 * n as i64 - 1))
            .filter(|j| j.rem_euclid(2) == 1)
            .collect();
        let fiber: Vec<CycNumber> = exponents
            .iter()
            .map(|&j| CycNumber::root_of_unity(4 * n, j).expect("valid order"))
            .collect();
        let cover = DihedralCover { n, exponents, fiber };
        cover.verify();
        Ok(cover)
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Field order of the fiber coordinates.
    pub fn field_order(&self) -> u64 {
        4 * self.n
    }

    pub fn fiber(&self) -> &[CycNumber] {
        &self.fiber
    }

    /// Normalized odd exponents in (-2n, 2n], ascending.
    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// All deck parameters in deterministic order: (+1, 0..n), (-1, 0..n).
    pub fn deck_elements(&self) -> Vec<(i8, u64)> {
        let mut out = Vec::with_capacity(2 * self.n as usize);
        for eps in [1i8, -1] {
            for k in 0..self.n {
                out.push((eps, k));
            }
        }
        out
    }

    /// Exact value of f(x) = (2 - x^n - x^(-n))/4.
    pub fn f_value(&self, x: &CycNumber) -> CycNumber {
        let xn = cyc_pow(x, self.n);
        let xmn = cyc_pow(&x.inverse().expect("fiber points are nonzero"), self.n);
        let two = CycNumber::from_integer(x.order(), 2).expect("valid order");
        let quarter = num_rational::BigRational::new(1.into(), 4.into());
        (&(&two - &xn) - &xmn).scale(&quarter)
    }

    fn index_of_exponent(&self, j: i64) -> usize {
        let m = 4 * self.n as i64;
        let mut jj = j.rem_euclid(m);
        if jj > 2 * self.n as i64 {
            jj -= m;
        }
        self.exponents
            .iter()
            .position(|&e| e == jj)
            .expect("odd exponents are closed under the deck maps")
    }

    /// Deck transformation (eps, k) as a fiber permutation.
    pub fn deck_perm(&self, eps: i8, k: u64) -> Vec<usize> {
        self.exponents
            .iter()
            .map(|&j| self.index_of_exponent(eps as i64 * j + 4 * (k as i64)))
            .collect()
    }

    /// Identifies a fiber permutation as a deck parameter, if it is one.
    pub fn identify_deck(&self, perm: &[usize]) -> Option<(i8, u64)> {
        self.deck_elements()
            .into_iter()
            .find(|&(eps, k)| self.deck_perm(eps, k) == perm)
    }

    fn verify(&self) {
        let half = CycNumber::from_rational(
            4 * self.n,
            num_rational::BigRational::new(1.into(), 2.into()),
        )
        .expect("valid order");
        assert_eq!(self.fiber.len(), 2 * self.n as usize);
        for (i, point) in self.fiber.iter().enumerate() {
            assert!(self.f_value(point) == half, "fiber point {i} has f(x) != 1/2");
        }
        // each deck map permutes the fiber and preserves f
        for (eps, k) in self.deck_elements() {
            let perm = self.deck_perm(eps, k);
            let mut seen = vec![false; perm.len()];
            for &t in &perm {
                assert!(!seen[t], "deck map ({eps},{k}) is not a bijection");
                seen[t] = true;
                assert!(self.f_value(&self.fiber[t]) == half, "deck image leaves the fiber");
            }
        }
        // multiplication table matches (eps, k)(eps', k') = (eps eps', eps k' + k)
        let n = self.n as i64;
        for (e1, k1) in self.deck_elements() {
            for (e2, k2) in self.deck_elements() {
                let p1 = self.deck_perm(e1, k1);
                let p2 = self.deck_perm(e2, k2);
                // function composition: apply (e2,k2) first
                let composed: Vec<usize> = (0..p1.len()).map(|j| p1[p2[j]]).collect();
                let expected_eps = e1 * e2;
                let expected_k = (e1 as i64 * k2 as i64 + k1 as i64).rem_euclid(n) as u64;
                assert_eq!(
                    self.identify_deck(&composed),
                    Some((expected_eps, expected_k)),
                    "deck multiplication table mismatch"
                );
            }
        }
        // dihedral presentation: r = (1,1) has order n, s = (-1,0) has
        // order 2, and s r s = r^-1; free and transitive on the fiber
        let all = self.deck_elements();
        assert_eq!(all.len(), 2 * self.n as usize);
        let mut images_of_first = std::collections::HashSet::new();
        for (eps, k) in all {
            let perm = self.deck_perm(eps, k);
            images_of_first.insert(perm[0]);
            let fixes_something = perm.iter().enumerate().any(|(j, &t)| j == t);
            let is_identity = eps == 1 && k == 0;
            assert_eq!(fixes_something, is_identity, "deck action is not free");
        }
        assert_eq!(images_of_first.len(), 2 * self.n as usize, "deck action is not transitive");
    }

    /// Conjugates the deck map (eps, k) by sigma_ell on Q[z_4n] from first
    /// principles and identifies it as (eps, ell k mod n).
    pub fn galois_on_deck(
        &self,
        ell: i64,
        eps: i8,
        k: u64,
    ) -> Result<DeckTransformation, ProfiniteError> {
        let m = 4 * self.n;
        let ell_res = ell.rem_euclid(m as i64) as u64;
        let sigma = GaloisAut::new(m, ell)
            .map_err(|_| ProfiniteError::NotCoprime { ell: ell_res, order: m })?;
        let sigma_inv = GaloisAut::new(m, mod_inverse(sigma.ell(), m)? as i64)
            .expect("inverse of a unit is a unit");
        let deck = self.deck_perm(eps, k % self.n);
        let mut conjugated = Vec::with_capacity(self.fiber.len());
        for point in &self.fiber {
            let pulled = sigma_inv.apply(point).expect("fiber points share the order");
            let j = self
                .fiber
                .iter()
                .position(|p| *p == pulled)
                .expect("galois permutes the fiber");
            let moved = &self.fiber[deck[j]];
            let pushed = sigma.apply(moved).expect("fiber points share the order");
            conjugated.push(
                self.fiber
                    .iter()
                    .position(|p| *p == pushed)
                    .expect("galois permutes the fiber"),
            );
        }
        let expected = (eps, sigma.ell() % self.n * (k % self.n) % self.n);
        assert_eq!(
            self.identify_deck(&conjugated),
            Some(expected),
            "first-principles conjugation disagrees with the closed form"
        );
        Ok(DeckTransformation::Dihedral { n: self.n, eps: expected.0, k: expected.1 })
    }

    /// Order of (eps, k) in the deck group.
    fn deck_order(&self, eps: i8, k: u64) -> u64 {
        let ident = self.deck_perm(1, 0);
        let base = self.deck_perm(eps, k);
        let mut acc = base.clone();
        let mut ord = 1;
        while acc != ident {
            acc = (0..acc.len()).map(|j| base[acc[j]]).collect();
            ord += 1;
        }
        ord
    }

    /// Power of a deck element inside the deck group, identified back to
    /// its (eps, k) parameters.
    pub fn deck_power(&self, eps: i8, k: u64, e: u64) -> (i8, u64) {
        let base = self.deck_perm(eps, k);
        let mut acc = self.deck_perm(1, 0);
        for _ in 0..e % self.deck_order(eps, k) {
            acc = (0..acc.len()).map(|j| base[acc[j]]).collect();
        }
        self.identify_deck(&acc).expect("deck group is closed under powers")
    }
}

/// Tabulates, for every deck element, the covering-induced Galois action
/// (eps, k) -> (eps, ell k) against the plain power map gamma -> gamma^ell
/// computed in the deck group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionComparisonRow {
    pub deck: (i8, u64),
    pub covering_image: (i8, u64),
    pub power_image: (i8, u64),
    pub differs: bool,
}

pub fn compare_actions_on_dihedral(
    cover: &DihedralCover,
    ell: i64,
) -> Result<Vec<ActionComparisonRow>, ProfiniteError> {
    let rows: Result<Vec<_>, _> = cover
        .deck_elements()
        .into_iter()
        .map(|(eps, k)| {
            let covering = match cover.galois_on_deck(ell, eps, k)? {
                DeckTransformation::Dihedral { eps, k, .. } => (eps, k),
                DeckTransformation::Cyclic { .. } => unreachable!("dihedral cover"),
            };
            let reduced = ell.rem_euclid(4 * cover.order() as i64) as u64;
            let power = cover.deck_power(eps, k, reduced);
            Ok(ActionComparisonRow {
                deck: (eps, k),
                covering_image: covering,
                power_image: power,
                differs: covering != power,
            })
        })
        .collect();
    rows
}

/// The Galois action of a unit on a tuple generating a cyclic subgroup:
/// coordinatewise power maps. Non-cyclic generated subgroups are a
/// documented scope boundary and rejected.
pub fn tuple_galois_action(
    unit: &ProfiniteUnit,
    group: &FiniteGroup,
    tuple: &[usize],
) -> Result<Vec<usize>, ProfiniteError> {
    for &g in tuple {
        if g >= group.order() {
            return Err(ProfiniteError::NoSuchElement { index: g, order: group.order() });
        }
    }
    // closure of the generated subgroup
    let mut members = vec![group.identity_index()];
    let mut seen = std::collections::HashSet::from([group.identity_index()]);
    let mut head = 0;
    while head < members.len() {
        for &g in tuple {
            let f = group.mul(members[head], g);
            if seen.insert(f) {
                members.push(f);
            }
        }
        head += 1;
    }
    let order = members.len() as u64;
    let cyclic = members.iter().any(|&m| group.element_order(m) == order);
    if !cyclic {
        return Err(ProfiniteError::NotCyclic);
    }
    // |H| equals the exponent of the cyclic subgroup H
    if !unit.modulus.is_multiple_of(order) {
        return Err(ProfiniteError::ModulusMismatch { exponent: order, modulus: unit.modulus });
    }
    Ok(tuple.iter().map(|&g| group.pow(g, unit.residue as i64)).collect())
}
