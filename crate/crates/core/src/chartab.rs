//! Exact character tables of finite permutation groups.
//!
//! The solver is the classical finite-field method: diagonalise the class
//! multiplication matrices over a prime field F_p with p = 1 (mod exponent),
//! p > 2*sqrt(|G|), then lift the mod-p eigencharacter values to exact
//! cyclotomic integers in Q[z_n] with the discrete Fourier sum over each
//! element's power classes. Everything after the prime field is exact
//! rational arithmetic; row orthonormality is verified before a table is
//! returned.

mod modlin;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::{CycNumber, NumberClass};
use crate::permgrp::{ConjugacyClassSet, FiniteGroup};
use modlin::{addm, invm, matvec, mulm, nullspace, powm, rref, subm};

/// Largest group order accepted by the solver.
pub const MAX_GROUP_ORDER: usize = 5_000;
const PRIME_SEARCH_LIMIT: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChartabError {
    #[error("group of order {order} exceeds the character solver cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("no prime p = 1 (mod {modulus}) with p > {lower_bound} found within the search bound")]
    PrimeSearchFailed { modulus: u64, lower_bound: u64 },
    #[error("class matrices failed to split a common eigenspace (corrupt input?)")]
    EigenSplitFailed,
    #[error("computed rows failed orthogonality verification")]
    OrthogonalityFailed,
    #[error("table is corrupted: {detail}")]
    CorruptTable { detail: String },
}

/// A complete character table: one row per irreducible character, one
/// column per conjugacy class, entries exact cyclotomic integers in
/// Q[z_n] with n the group exponent.
///
/// Canonical ordering: column 0 is the identity class (classes ordered as
/// in [`FiniteGroup::conjugacy_classes`]); row 0 is the trivial character
/// and the remaining rows sort by (degree, lexicographic rendered entries).
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: FiniteGroup,
    classes: ConjugacyClassSet,
    field_order: u64,
    rows: Vec<Vec<CycNumber>>,
    degrees: Vec<u64>,
    row_labels: Vec<String>,
}

impl CharacterTable {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClassSet {
        &self.classes
    }

    /// n = exponent(G); every entry lives in Q[z_n].
    pub fn field_order(&self) -> u64 {
        self.field_order
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn rows(&self) -> &[Vec<CycNumber>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, class: usize) -> &CycNumber {
        &self.rows[row][class]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Row labels `ch<d>`, `ch<d>'`, ... disambiguated per repeated degree.
    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    /// Column labels `(rep cycle notation)|size`.
    pub fn class_labels(&self) -> Vec<String> {
        self.classes
            .classes()
            .iter()
            .map(|c| format!("{}|{}", self.group.element(c.rep), c.members.len()))
            .collect()
    }

    /// Copy with one entry replaced by `entry + delta`; a fault-injection
    /// helper for exercising the verification paths.
    pub fn perturbed(&self, row: usize, class: usize, delta: &CycNumber) -> CharacterTable {
        let mut out = self.clone();
        out.rows[row][class] = &out.rows[row][class] + delta;
        out
    }

    /// Exact Hermitian row inner product
    /// `(1/|G|) sum_k |K_k| chi(k) conj(psi(k))`.
    pub fn row_inner_product(&self, i: usize, j: usize) -> CycNumber {
        let n = self.field_order;
        let mut acc = CycNumber::zero(n).expect("valid field order");
        for (k, class) in self.classes.classes().iter().enumerate() {
            let size = BigRational::from_integer(BigInt::from(class.members.len()));
            let term = &self.rows[i][k] * &self.rows[j][k].conjugate();
            acc = &acc + &term.scale(&size);
        }
        let inv_order = BigRational::new(BigInt::from(1), BigInt::from(self.group.order()));
        acc.scale(&inv_order)
    }
}

/// Smallest prime p = 1 (mod n) with p > 2*sqrt(order), scanning upward.
fn find_prime(n: u64, order: usize) -> Result<u64, ChartabError> {
    let lower = (2.0 * (order as f64).sqrt()).floor() as u64;
    let is_prime = |x: u64| {
        if x < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= x {
            if x.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    };
    let mut p = n + 1;
    while p < PRIME_SEARCH_LIMIT {
        if p * p > 4 * order as u64 && is_prime(p) {
            return Ok(p);
        }
        p += n;
    }
    Err(ChartabError::PrimeSearchFailed { modulus: n, lower_bound: lower })
}

/// Smallest residue of multiplicative order exactly n mod p.
fn root_of_order(n: u64, p: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    'outer: for z in 2..p {
        let mut x = z;
        for _ in 1..n {
            if x == 1 {
                continue 'outer;
            }
            x = mulm(x, z, p);
        }
        if x == 1 {
            return z;
        }
    }
    unreachable!("n divides p-1, so an element of order n exists")
}

struct ClassMatrixBuilder<'a> {
    group: &'a FiniteGroup,
    classes: &'a ConjugacyClassSet,
    p: u64,
}

impl ClassMatrixBuilder<'_> {
    /// Class matrix M_i with `M_i[j][k] = a_ijk`, the number of ways to
    /// write the fixed representative of class k as x*y with x in K_i,
    /// y in K_j. Satisfies `M_i omega = omega_i omega` for every
    /// eigencharacter vector omega.
    fn build(&self, i: usize) -> Vec<Vec<u64>> {
        let c = self.classes.len();
        let sizes = self.classes.sizes();
        let mut m = vec![vec![0u64; c]; c];
        for (j, row) in m.iter_mut().enumerate() {
            let mut counts = vec![0u64; c];
            for &x in &self.classes.classes()[i].members {
                for &y in &self.classes.classes()[j].members {
                    counts[self.classes.class_of(self.group.mul(x, y))] += 1;
                }
            }
            for (k, cell) in row.iter_mut().enumerate() {
                debug_assert_eq!(counts[k] % sizes[k] as u64, 0);
                *cell = counts[k] / sizes[k] as u64 % self.p;
            }
        }
        m
    }
}

/// Splits the standard basis of F_p^c into the common one-dimensional
/// eigenspaces of the class matrices, deterministically.
fn common_eigenvectors(
    builder: &ClassMatrixBuilder,
    c: usize,
    p: u64,
) -> Result<Vec<Vec<u64>>, ChartabError> {
    let ident: Vec<Vec<u64>> = (0..c)
        .map(|i| (0..c).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![ident];
    for i in 1..c {
        if subspaces.iter().all(|w| w.len() == 1) {
            break;
        }
        let m = builder.build(i);
        let mut next = Vec::with_capacity(subspaces.len());
        for w in subspaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            let mut basis = w;
            let pivots = rref(&mut basis, p);
            let s = basis.len();
            // restriction of M to the subspace: M b_i = sum_j T[j][i] b_j
            let mut t = vec![vec![0u64; s]; s];
            for (i2, b) in basis.iter().enumerate() {
                let u = matvec(&m, b, p);
                let mut resid = u.clone();
                for (j2, &pc) in pivots.iter().enumerate() {
                    t[j2][i2] = u[pc];
                    let f = u[pc];
                    for (r, bb) in resid.iter_mut().zip(&basis[j2]) {
                        *r = subm(*r, mulm(f, *bb, p), p);
                    }
                }
                debug_assert!(resid.iter().all(|&x| x == 0), "class matrix left the subspace");
            }
            let mut found = 0;
            for lam in 0..p {
                let shifted: Vec<Vec<u64>> = (0..s)
                    .map(|r| {
                        (0..s)
                            .map(|cc| if r == cc { subm(t[r][cc], lam, p) } else { t[r][cc] })
                            .collect()
                    })
                    .collect();
                let ns = nullspace(&shifted, p);
                if ns.is_empty() {
                    continue;
                }
                found += ns.len();
                let mut lifted: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; c];
                        for (j2, &x) in coords.iter().enumerate() {
                            for (vc, &bc) in v.iter_mut().zip(&basis[j2]) {
                                *vc = addm(*vc, mulm(x, bc, p), p);
                            }
                        }
                        v
                    })
                    .collect();
                rref(&mut lifted, p);
                next.push(lifted);
                if found == s {
                    break;
                }
            }
            if found != s {
                return Err(ChartabError::EigenSplitFailed);
            }
        }
        subspaces = next;
    }
    if subspaces.iter().any(|w| w.len() != 1) {
        return Err(ChartabError::EigenSplitFailed);
    }
    Ok(subspaces.into_iter().map(|mut w| w.pop().expect("dim 1")).collect())
}

/// Computes the full character table of `group`.
pub fn compute_character_table(group: &FiniteGroup) -> Result<CharacterTable, ChartabError> {
    let order = group.order();
    if order > MAX_GROUP_ORDER {
        return Err(ChartabError::GroupTooLarge { order, cap: MAX_GROUP_ORDER });
    }
    let classes = group.conjugacy_classes();
    let c = classes.len();
    let n = group.exponent();
    let p = find_prime(n, order)?;
    let sizes = classes.sizes();

    let builder = ClassMatrixBuilder { group, classes: &classes, p };
    let eigvecs = common_eigenvectors(&builder, c, p)?;

    // normalise so the identity-class coordinate is 1 (it is chi(1)/chi(1))
    let omegas: Vec<Vec<u64>> = eigvecs
        .into_iter()
        .map(|v| {
            debug_assert!(v[0] % p != 0, "eigencharacter vanishes at the identity class");
            let s = invm(v[0], p);
            v.iter().map(|&x| mulm(x, s, p)).collect()
        })
        .collect();

    let inverse_class: Vec<usize> = (0..c)
        .map(|k| classes.class_of(group.inv(classes.classes()[k].rep)))
        .collect();

    // degree from the weighted norm: d^2 = |G| / sum_k w_k w_k* / |K_k|
    let mut chars: Vec<(u64, Vec<u64>)> = Vec::with_capacity(c);
    for om in &omegas {
        let mut norm = 0u64;
        for k in 0..c {
            let term = mulm(mulm(om[k], om[inverse_class[k]], p), invm(sizes[k] as u64, p), p);
            norm = addm(norm, term, p);
        }
        let d2 = mulm(order as u64 % p, invm(norm, p), p);
        let d = (1..=p / 2)
            .find(|&d| mulm(d, d, p) == d2)
            .expect("p > 2 sqrt(|G|) pins the degree");
        let theta: Vec<u64> = (0..c)
            .map(|k| mulm(mulm(d, om[k], p), invm(sizes[k] as u64, p), p))
            .collect();
        chars.push((d, theta));
    }

    let z = root_of_order(n, p);

    // power classes of each representative, used by the Fourier lift
    let power_classes: Vec<Vec<usize>> = (0..c)
        .map(|k| {
            let rep = classes.classes()[k].rep;
            let m = group.element_order(rep);
            let mut g = group.identity_index();
            (0..m)
                .map(|_| {
                    let cls = classes.class_of(g);
                    g = group.mul(g, rep);
                    cls
                })
                .collect()
        })
        .collect();

    let mut rows: Vec<(u64, Vec<CycNumber>)> = Vec::with_capacity(c);
    for (d, theta) in &chars {
        let mut row = Vec::with_capacity(c);
        for (k, powers) in power_classes.iter().enumerate() {
            let m = group.element_order(classes.classes()[k].rep);
            let zm_inv = invm(powm(z, n / m, p), p);
            let m_inv = invm(m % p, p);
            let mut value = CycNumber::zero(n).expect("valid order");
            let mut mu_sum = 0u64;
            for t in 0..m {
                let mut mu = 0u64;
                for (l, &cls) in powers.iter().enumerate() {
                    mu = addm(mu, mulm(theta[cls], powm(zm_inv, t * l as u64, p), p), p);
                }
                mu = mulm(mu, m_inv, p);
                // mu is an eigenvalue multiplicity, a true integer below p
                debug_assert!(mu <= *d);
                mu_sum += mu;
                if mu != 0 {
                    let root = CycNumber::root_of_unity(n, (t * (n / m)) as i64)
                        .expect("valid order");
                    value = &value + &root.scale(&BigRational::from_integer(BigInt::from(mu)));
                }
            }
            debug_assert_eq!(mu_sum, *d, "eigenvalue multiplicities must sum to the degree");
            row.push(value);
        }
        rows.push((*d, row));
    }

    // canonical row order: trivial character first, then (degree, rendering)
    let one = CycNumber::one(n).expect("valid order");
    rows.sort_by(|a, b| {
        let key = |r: &(u64, Vec<CycNumber>)| {
            (r.0, r.1.iter().map(|e| e.terms_string()).collect::<Vec<_>>())
        };
        key(a).cmp(&key(b))
    });
    if let Some(pos) = rows.iter().position(|(_, r)| r.iter().all(|e| *e == one)) {
        let trivial = rows.remove(pos);
        rows.insert(0, trivial);
    }

    let degrees: Vec<u64> = rows.iter().map(|(d, _)| *d).collect();
    let mut row_labels = Vec::with_capacity(c);
    for (i, d) in degrees.iter().enumerate() {
        let repeats = degrees[..i].iter().filter(|&&e| e == *d).count();
        row_labels.push(format!("ch{}{}", d, "'".repeat(repeats)));
    }

    let table = CharacterTable {
        group: group.clone(),
        classes,
        field_order: n,
        rows: rows.into_iter().map(|(_, r)| r).collect(),
        degrees,
        row_labels,
    };

    // orthogonality gate: never hand out an unverified table
    for i in 0..c {
        for j in i..c {
            let ip = table.row_inner_product(i, j);
            let expected = if i == j { table.field_order } else { 0 };
            let ok = if expected != 0 { ip.is_one() } else { ip.is_zero() };
            if !ok {
                return Err(ChartabError::OrthogonalityFailed);
            }
        }
    }
    Ok(table)
}

/// One verification check with an optional first counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCheck {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Structured verification report over all classical table invariants.
#[derive(Debug, Clone)]
pub struct TableReport {
    pub checks: Vec<TableCheck>,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&TableCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Checks the table invariants: squareness, cyclotomic integrality, degree
/// identities, row orthonormality and column orthogonality against
/// independently computed centralizer orders.
pub fn verify_table(table: &CharacterTable) -> TableReport {
    let mut checks = Vec::new();
    let c = table.class_count();
    let order = table.group().order();

    let square = table.rows.len() == c && table.rows.iter().all(|r| r.len() == c);
    checks.push(TableCheck {
        name: "square",
        pass: square,
        witness: (!square).then(|| format!("{} rows, {} classes", table.rows.len(), c)),
    });

    let mut integral = TableCheck { name: "cyclotomic_integer_entries", pass: true, witness: None };
    'outer: for (i, row) in table.rows.iter().enumerate() {
        for (k, e) in row.iter().enumerate() {
            let class = e.classify();
            if class != NumberClass::CyclotomicInteger && class != NumberClass::RationalInteger {
                integral.pass = false;
                integral.witness = Some(format!("entry ({i},{k}) = {e} classifies as {class}"));
                break 'outer;
            }
        }
    }
    checks.push(integral);

    let sum_sq: u64 = table.degrees.iter().map(|d| d * d).sum();
    checks.push(TableCheck {
        name: "degree_squares_sum_to_order",
        pass: sum_sq == order as u64,
        witness: (sum_sq != order as u64).then(|| format!("sum of squares = {sum_sq}")),
    });

    let bad_degree = table.degrees.iter().find(|&&d| !(order as u64).is_multiple_of(d));
    checks.push(TableCheck {
        name: "degrees_divide_order",
        pass: bad_degree.is_none(),
        witness: bad_degree.map(|d| format!("degree {d} does not divide {order}")),
    });

    let mut row_orth = TableCheck { name: "row_orthonormality", pass: true, witness: None };
    'rows: for i in 0..table.rows.len() {
        for j in i..table.rows.len() {
            let ip = table.row_inner_product(i, j);
            let ok = if i == j { ip.is_one() } else { ip.is_zero() };
            if !ok {
                row_orth.pass = false;
                row_orth.witness = Some(format!("<row {i}, row {j}> = {ip}"));
                break 'rows;
            }
        }
    }
    checks.push(row_orth);

    // second orthogonality: column inner products equal centralizer orders
    // obtained independently by explicit commutation scans
    let mut col_orth = TableCheck { name: "column_orthogonality", pass: true, witness: None };
    'cols: for a in 0..c {
        let rep = table.group.element(table.classes.classes()[a].rep).clone();
        let cent_order = table
            .group
            .centralizer(&rep)
            .expect("class representative is a member")
            .order();
        for b in 0..c {
            let mut acc = CycNumber::zero(table.field_order).expect("valid order");
            for row in &table.rows {
                acc = &acc + &(&row[a] * &row[b].conjugate());
            }
            let expected = if a == b {
                CycNumber::from_integer(table.field_order, cent_order as i64).expect("valid")
            } else {
                CycNumber::zero(table.field_order).expect("valid")
            };
            if acc != expected {
                col_orth.pass = false;
                col_orth.witness =
                    Some(format!("columns ({a},{b}): got {acc}, expected {expected}"));
                break 'cols;
            }
        }
    }
    checks.push(col_orth);

    TableReport { checks }
}

/// A row symmetry: multiplying every row entrywise by the degree-1 row
/// `row` permutes the rows by `perm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSymmetry {
    pub row: usize,
    pub perm: Vec<usize>,
}

/// A column symmetry: multiplying by the central class `class` permutes
/// the columns by `perm`, with scalar factors chi(z)/deg on each row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSymmetry {
    pub class: usize,
    pub perm: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSymmetries {
    pub row_symmetries: Vec<RowSymmetry>,
    pub column_symmetries: Vec<ColumnSymmetry>,
}

/// Row symmetries from the degree-1 characters and column symmetries from
/// the central (size-1) classes, each verified to map the table to itself.
pub fn table_symmetries(table: &CharacterTable) -> Result<TableSymmetries, ChartabError> {
    let c = table.class_count();
    let mut row_symmetries = Vec::new();
    for (li, _) in table.degrees.iter().enumerate().filter(|(_, &d)| d == 1) {
        let lambda = &table.rows[li];
        let mut perm = Vec::with_capacity(c);
        for (i, row) in table.rows.iter().enumerate() {
            let product: Vec<CycNumber> =
                row.iter().zip(lambda).map(|(a, b)| a * b).collect();
            let target = table.rows.iter().position(|r| *r == product).ok_or_else(|| {
                ChartabError::CorruptTable {
                    detail: format!("linear row {li} times row {i} is not a table row"),
                }
            })?;
            perm.push(target);
        }
        row_symmetries.push(RowSymmetry { row: li, perm });
    }

    let mut column_symmetries = Vec::new();
    for (zc, class) in table.classes.classes().iter().enumerate() {
        if class.members.len() != 1 {
            continue;
        }
        let z = class.rep;
        let perm: Vec<usize> = table
            .classes
            .classes()
            .iter()
            .map(|c2| table.classes.class_of(table.group.mul(z, c2.rep)))
            .collect();
        // verify chi(z g) = (chi(z)/deg) chi(g) entrywise
        for (i, row) in table.rows.iter().enumerate() {
            let scalar = row[zc].scale(&BigRational::new(
                BigInt::from(1),
                BigInt::from(table.degrees[i]),
            ));
            for (c2, &target) in perm.iter().enumerate() {
                if row[target] != &scalar * &row[c2] {
                    return Err(ChartabError::CorruptTable {
                        detail: format!(
                            "central class {zc} does not permute columns consistently at row {i}"
                        ),
                    });
                }
            }
        }
        column_symmetries.push(ColumnSymmetry { class: zc, perm });
    }

    Ok(TableSymmetries { row_symmetries, column_symmetries })
}

/// Confirms the rows are linearly independent over Q[z_n] (hence span the
/// class functions) by Gaussian elimination over the field.
pub fn class_function_space_check(table: &CharacterTable) -> bool {
    let c = table.class_count();
    if table.rows.len() != c {
        return false;
    }
    let mut m: Vec<Vec<CycNumber>> = table.rows.clone();
    let mut rank = 0;
    for col in 0..c {
        let Some(pr) = (rank..c).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].inverse().expect("pivot is nonzero");
        for x in m[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                    let s = &f * pv;
                    *x = &*x - &s;
                }
            }
        }
        rank += 1;
        if rank == c {
            break;
        }
    }
    rank == c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::builtin;

    fn table_for(name: &str) -> CharacterTable {
        compute_character_table(&builtin(name).unwrap()).unwrap()
    }

    fn int_rows(t: &CharacterTable) -> Vec<Vec<i64>> {
        t.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        assert!(matches!(
                            e.classify(),
                            NumberClass::RationalInteger
                        ));
                        let r = &e.coeffs()[0];
                        let v: i64 = r.numer().try_into().unwrap();
                        v
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn s3_table_is_golden() {
        let t = table_for("S3");
        assert_eq!(t.field_order(), 6);
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(int_rows(&t), vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]]);
        assert_eq!(t.row_labels(), &["ch1", "ch1'", "ch2"]);
    }

    #[test]
    fn z2_table() {
        let t = table_for("Z2");
        assert_eq!(int_rows(&t), vec![vec![1, 1], vec![1, -1]]);
    }

    #[test]
    fn a5_table_degrees_and_golden_ratio_values() {
        let t = table_for("A5");
        assert_eq!(t.field_order(), 30);
        assert_eq!(t.degrees(), &[1, 3, 3, 4, 5]);
        // the two degree-3 rows carry (1 +- sqrt 5)/2 on the 5-cycle classes
        let plus = &(&CycNumber::one(5).unwrap()
            + &CycNumber::root_of_unity(5, 1).unwrap())
            + &CycNumber::root_of_unity(5, 4).unwrap();
        let minus = &(&CycNumber::one(5).unwrap()
            + &CycNumber::root_of_unity(5, 2).unwrap())
            + &CycNumber::root_of_unity(5, 3).unwrap();
        let plus = plus.embed(30).unwrap();
        let minus = minus.embed(30).unwrap();
        let row3 = &t.rows()[1];
        let row3p = &t.rows()[2];
        assert!(
            (row3[3] == plus && row3[4] == minus && row3p[3] == minus && row3p[4] == plus)
                || (row3[3] == minus && row3[4] == plus && row3p[3] == plus && row3p[4] == minus)
        );
        let x = row3[3].to_complex();
        assert!(
            (x.re - 1.618_033_988_7).abs() < 1e-8 || (x.re + 0.618_033_988_7).abs() < 1e-8
        );
        assert!(x.im.abs() < 1e-10);
    }

    #[test]
    fn q8_and_z4_tables() {
        let t = table_for("Q8");
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        let t = table_for("Z4");
        assert_eq!(t.degrees(), &[1, 1, 1, 1]);
        let i = CycNumber::root_of_unity(4, 1).unwrap();
        assert!(t.rows().iter().any(|row| row.contains(&i)));
    }

    #[test]
    fn symmetric_groups_are_integral() {
        for name in ["S3", "S4", "S5"] {
            let t = table_for(name);
            for row in t.rows() {
                for e in row {
                    assert_eq!(
                        e.classify(),
                        NumberClass::RationalInteger,
                        "non-integer entry {e} in {name}"
                    );
                }
            }
        }
    }

    #[test]
    fn verify_table_passes_for_builtins() {
        for name in ["S3", "Z4", "A4", "D6", "Q8"] {
            let report = verify_table(&table_for(name));
            assert!(report.all_pass(), "{name}: {:?}", report.first_failure());
        }
    }

    #[test]
    fn perturbed_table_fails_verification_with_witness() {
        let t = table_for("A5");
        let one = CycNumber::one(30).unwrap();
        let bad = t.perturbed(2, 3, &one);
        let report = verify_table(&bad);
        assert!(!report.all_pass());
        let failure = report.first_failure().unwrap();
        assert!(failure.witness.is_some());
        assert!(report.checks.iter().any(|c| c.name == "row_orthonormality" && !c.pass));
    }

    #[test]
    fn s3_symmetries() {
        let t = table_for("S3");
        let syms = table_symmetries(&t).unwrap();
        assert_eq!(syms.row_symmetries.len(), 2);
        // trivial character induces the identity
        assert_eq!(syms.row_symmetries[0].perm, vec![0, 1, 2]);
        // the sign character swaps the two linear rows and fixes the 2-dim row
        assert_eq!(syms.row_symmetries[1].perm, vec![1, 0, 2]);
        assert_eq!(syms.column_symmetries.len(), 1);
        assert_eq!(syms.column_symmetries[0].perm, vec![0, 1, 2]);
    }

    #[test]
    fn a5_symmetries_are_trivial() {
        let t = table_for("A5");
        let syms = table_symmetries(&t).unwrap();
        assert_eq!(syms.row_symmetries.len(), 1);
        assert_eq!(syms.row_symmetries[0].perm, vec![0, 1, 2, 3, 4]);
        assert_eq!(syms.column_symmetries.len(), 1);
    }

    #[test]
    fn z4_symmetries_everywhere() {
        let t = table_for("Z4");
        let syms = table_symmetries(&t).unwrap();
        assert_eq!(syms.row_symmetries.len(), 4);
        assert_eq!(syms.column_symmetries.len(), 4);
    }

    #[test]
    fn class_function_space_spans() {
        for name in ["S3", "A5", "Z1"] {
            assert!(class_function_space_check(&table_for(name)), "{name}");
        }
        // a duplicated row must be caught as dependent
        let mut bad = table_for("S3");
        bad.rows[1] = bad.rows[0].clone();
        assert!(!class_function_space_check(&bad));
    }

    #[test]
    fn deterministic_rendering() {
        let render = |t: &CharacterTable| {
            let mut s = String::new();
            for row in t.rows() {
                for e in row {
                    s.push_str(&e.to_string());
                    s.push(';');
                }
                s.push('\n');
            }
            s
        };
        assert_eq!(render(&table_for("S4")), render(&table_for("S4")));
    }

    #[test]
    fn trivial_group_table() {
        let t = table_for("Z1");
        assert_eq!(t.class_count(), 1);
        assert_eq!(t.degrees(), &[1]);
        assert!(t.rows()[0][0].is_one());
    }

    #[test]
    fn oversize_group_rejected() {
        let s7 = builtin("S7").unwrap();
        assert_eq!(
            compute_character_table(&s7).unwrap_err(),
            ChartabError::GroupTooLarge { order: 5040, cap: MAX_GROUP_ORDER }
        );
    }
}
