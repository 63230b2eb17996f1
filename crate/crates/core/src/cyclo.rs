//! Exact arithmetic in cyclotomic fields Q[z_n], z_n = exp(2*pi*i/n).
//!
//! Elements are stored canonically: a vector of `phi(n)` rationals giving the
//! coordinates in the power basis `{1, z, ..., z^(phi(n)-1)}` after reduction
//! modulo the n-th cyclotomic polynomial. Two [`CycNumber`]s of the same
//! order are mathematically equal iff their coefficient vectors are equal,
//! so `==` is exact semantic equality within an order. Values of different
//! orders must be aligned explicitly with [`CycNumber::embed`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("cyclotomic order must be positive")]
    InvalidOrder,
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },
    #[error("{m} is not a multiple of the current order {n}")]
    NotAMultiple { n: u64, m: u64 },
    #[error("{ell} is not coprime to {order}")]
    NotCoprime { ell: u64, order: u64 },
    #[error("parse error at offset {offset}: expected {expected}")]
    Parse { offset: usize, expected: &'static str },
}

/// Tightest arithmetic class of a cyclotomic number, detected on the
/// canonical coefficients (the power basis is an integral basis of Z[z_n]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberClass {
    RationalInteger,
    Rational,
    CyclotomicInteger,
    General,
}

impl fmt::Display for NumberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NumberClass::RationalInteger => "rational_integer",
            NumberClass::Rational => "rational",
            NumberClass::CyclotomicInteger => "cyclotomic_integer",
            NumberClass::General => "general",
        };
        f.write_str(s)
    }
}

/// Euler's totient by trial-division factorisation.
pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    phi
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn x_pow_minus_one(n: u64) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    coeffs[0] = -BigInt::one();
    coeffs[n as usize] = BigInt::one();
    coeffs
}

/// Long division by a monic divisor; panics if the remainder is nonzero.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for i in 0..=dn {
                rem[k + i] -= &c * &den[i];
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Coefficients of the n-th cyclotomic polynomial, ascending, monic.
pub fn cyclotomic_polynomial(n: u64) -> Result<Vec<BigInt>, CycloError> {
    if n == 0 {
        return Err(CycloError::InvalidOrder);
    }
    let mut memo: HashMap<u64, Vec<BigInt>> = HashMap::new();
    for d in divisors(n) {
        let mut poly = x_pow_minus_one(d);
        for &e in divisors(d).iter().filter(|&&e| e < d) {
            poly = poly_div_exact(&poly, &memo[&e]);
        }
        memo.insert(d, poly);
    }
    Ok(memo.remove(&n).expect("divisor table always contains n"))
}

/// Per-order reduction table: `rows[k]` holds the canonical coordinates of
/// z^k for k in 0..n. Entries are integers (Phi_n is monic over Z), stored
/// as rationals for the arithmetic hot paths.
struct ReductionTable {
    phi: usize,
    rows: Vec<Vec<BigRational>>,
}

impl ReductionTable {
    fn build(n: u64) -> Result<ReductionTable, CycloError> {
        let min_poly = cyclotomic_polynomial(n)?;
        let phi = min_poly.len() - 1;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
        for k in 0..n as usize {
            let mut row = vec![BigInt::zero(); phi];
            if k < phi {
                row[k] = BigInt::one();
            } else {
                let prev = &rows[k - 1];
                row[1..phi].clone_from_slice(&prev[..phi - 1]);
                let lead = prev[phi - 1].clone();
                if !lead.is_zero() {
                    // z^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1})
                    for i in 0..phi {
                        row[i] -= &lead * &min_poly[i];
                    }
                }
            }
            rows.push(row);
        }
        let rows = rows
            .into_iter()
            .map(|row| row.into_iter().map(BigRational::from_integer).collect())
            .collect();
        Ok(ReductionTable { phi, rows })
    }
}

// Write-once map from order to its reduction table.
static TABLES: OnceLock<Mutex<HashMap<u64, Arc<ReductionTable>>>> = OnceLock::new();

fn table(n: u64) -> Result<Arc<ReductionTable>, CycloError> {
    if n == 0 {
        return Err(CycloError::InvalidOrder);
    }
    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("reduction table cache poisoned");
    if let Some(t) = guard.get(&n) {
        return Ok(Arc::clone(t));
    }
    let t = Arc::new(ReductionTable::build(n)?);
    guard.insert(n, Arc::clone(&t));
    Ok(t)
}

/// An exact element of the cyclotomic field Q[z_n] in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycNumber {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    /// The zero element of Q[z_n].
    pub fn zero(n: u64) -> Result<CycNumber, CycloError> {
        let t = table(n)?;
        Ok(CycNumber { order: n, coeffs: vec![BigRational::zero(); t.phi] })
    }

    /// The multiplicative identity of Q[z_n].
    pub fn one(n: u64) -> Result<CycNumber, CycloError> {
        CycNumber::from_rational(n, BigRational::one())
    }

    pub fn from_rational(n: u64, r: BigRational) -> Result<CycNumber, CycloError> {
        let mut out = CycNumber::zero(n)?;
        out.coeffs[0] = r;
        Ok(out)
    }

    pub fn from_integer(n: u64, k: i64) -> Result<CycNumber, CycloError> {
        CycNumber::from_rational(n, BigRational::from_integer(BigInt::from(k)))
    }

    /// The root of unity z_n^k, with k taken mod n; k = 0 gives the identity.
    pub fn root_of_unity(n: u64, k: i64) -> Result<CycNumber, CycloError> {
        CycNumber::from_terms(n, &[(k, BigRational::one())])
    }

    /// Builds `sum c * z_n^e` from (exponent, coefficient) terms; exponents
    /// are reduced mod n and the result is reduced to canonical form.
    pub fn from_terms(n: u64, terms: &[(i64, BigRational)]) -> Result<CycNumber, CycloError> {
        let t = table(n)?;
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let k = e.rem_euclid(n as i64) as usize;
            for (i, r) in t.rows[k].iter().enumerate() {
                if !r.is_zero() {
                    coeffs[i] += c * r;
                }
            }
        }
        Ok(CycNumber { order: n, coeffs })
    }

    fn from_power_vec(n: u64, vec: &[BigRational]) -> Result<CycNumber, CycloError> {
        let t = table(n)?;
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (e, c) in vec.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, r) in t.rows[e % n as usize].iter().enumerate() {
                if !r.is_zero() {
                    coeffs[i] += c * r;
                }
            }
        }
        Ok(CycNumber { order: n, coeffs })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Canonical coordinates in the power basis `{1, z, ..., z^(phi(n)-1)}`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn check_order(&self, rhs: &CycNumber) -> Result<(), CycloError> {
        if self.order != rhs.order {
            return Err(CycloError::OrderMismatch { left: self.order, right: rhs.order });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &CycNumber) -> Result<CycNumber, CycloError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNumber { order: self.order, coeffs })
    }

    pub fn checked_sub(&self, rhs: &CycNumber) -> Result<CycNumber, CycloError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNumber { order: self.order, coeffs })
    }

    pub fn checked_mul(&self, rhs: &CycNumber) -> Result<CycNumber, CycloError> {
        self.check_order(rhs)?;
        let phi = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * phi.max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycNumber::from_power_vec(self.order, &prod)
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &BigRational) -> CycNumber {
        let coeffs = self.coeffs.iter().map(|c| c * r).collect();
        CycNumber { order: self.order, coeffs }
    }

    /// Image under the inclusion Q[z_n] into Q[z_m] (z_n maps to z_m^(m/n)).
    pub fn embed(&self, m: u64) -> Result<CycNumber, CycloError> {
        if m == 0 {
            return Err(CycloError::InvalidOrder);
        }
        if !m.is_multiple_of(self.order) {
            return Err(CycloError::NotAMultiple { n: self.order, m });
        }
        let factor = (m / self.order) as i64;
        let terms: Vec<(i64, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (k as i64 * factor, c.clone()))
            .collect();
        CycNumber::from_terms(m, &terms)
    }

    /// Complex conjugate, computed exactly as the Galois map z -> z^(n-1).
    pub fn conjugate(&self) -> CycNumber {
        let aut = GaloisAut::new(self.order, self.order as i64 - 1)
            .expect("n-1 is always coprime to n");
        aut.apply(self).expect("orders match by construction")
    }

    /// Multiplicative inverse, or `None` for zero. Solves the phi(n) x phi(n)
    /// rational linear system given by multiplication-by-self.
    pub fn inverse(&self) -> Option<CycNumber> {
        if self.is_zero() {
            return None;
        }
        let phi = self.coeffs.len();
        // Column j = canonical coordinates of self * z^j.
        let mut cols: Vec<CycNumber> = Vec::with_capacity(phi);
        let mut shifted = self.clone();
        let z = CycNumber::root_of_unity(self.order, 1).expect("valid order");
        for _ in 0..phi {
            cols.push(shifted.clone());
            shifted = shifted.checked_mul(&z).expect("same order");
        }
        // Augmented system [M | e0], Gaussian elimination over Q.
        let mut m: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<BigRational> =
                    (0..phi).map(|j| cols[j].coeffs[i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        let mut rank = 0;
        for col in 0..phi {
            let Some(piv) = (rank..phi).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = m[rank][col].recip();
            for x in m[rank].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                        let sub = &f * pv;
                        *x -= sub;
                    }
                }
            }
            rank += 1;
        }
        if rank < phi {
            return None;
        }
        let coeffs = (0..phi).map(|i| m[i][phi].clone()).collect();
        Some(CycNumber { order: self.order, coeffs })
    }

    /// Tightest arithmetic class of this number.
    pub fn classify(&self) -> NumberClass {
        let rational = self.coeffs[1..].iter().all(|c| c.is_zero());
        let integral = self.coeffs.iter().all(|c| c.is_integer());
        match (rational, integral) {
            (true, true) => NumberClass::RationalInteger,
            (true, false) => NumberClass::Rational,
            (false, true) => NumberClass::CyclotomicInteger,
            (false, false) => NumberClass::General,
        }
    }

    /// Double-precision evaluation; a test oracle, never used in exact code.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.numer().to_f64().unwrap_or(f64::NAN)
                / c.denom().to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / n;
            acc += Complex64::new(ang.cos(), ang.sin()) * x;
        }
        acc
    }
}

impl std::ops::Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.checked_add(rhs).expect("cyclotomic order mismatch in +")
    }
}

impl std::ops::Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self.checked_sub(rhs).expect("cyclotomic order mismatch in -")
    }
}

impl std::ops::Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        self.checked_mul(rhs).expect("cyclotomic order mismatch in *")
    }
}

impl std::ops::Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        CycNumber { order: self.order, coeffs }
    }
}

/// A Galois automorphism sigma_ell of Q[z_n], z -> z^ell, gcd(ell, n) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisAut {
    order: u64,
    ell: u64,
}

impl GaloisAut {
    /// `ell` is reduced into the range `[1, n]`; non-coprime values are rejected.
    pub fn new(order: u64, ell: i64) -> Result<GaloisAut, CycloError> {
        if order == 0 {
            return Err(CycloError::InvalidOrder);
        }
        let mut r = ell.rem_euclid(order as i64) as u64;
        if r == 0 {
            r = order;
        }
        if r.gcd(&order) != 1 {
            return Err(CycloError::NotCoprime { ell: r, order });
        }
        Ok(GaloisAut { order, ell: r })
    }

    pub fn identity(order: u64) -> Result<GaloisAut, CycloError> {
        GaloisAut::new(order, 1)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// sigma_ell(sum a_k z^k) = sum a_k z^(ell k), reduced to canonical form.
    pub fn apply(&self, a: &CycNumber) -> Result<CycNumber, CycloError> {
        if a.order != self.order {
            return Err(CycloError::OrderMismatch { left: self.order, right: a.order });
        }
        let terms: Vec<(i64, BigRational)> = a
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| ((k as u64 * self.ell % self.order) as i64, c.clone()))
            .collect();
        CycNumber::from_terms(self.order, &terms)
    }

    /// Group law: sigma_ell . sigma_m = sigma_(ell m mod n).
    pub fn compose(&self, rhs: &GaloisAut) -> Result<GaloisAut, CycloError> {
        if self.order != rhs.order {
            return Err(CycloError::OrderMismatch { left: self.order, right: rhs.order });
        }
        GaloisAut::new(self.order, (self.ell * rhs.ell % self.order) as i64)
    }
}

/// All residues in `[1, n]` coprime to n, ascending.
pub fn coprime_residues(n: u64) -> Vec<u64> {
    (1..=n).filter(|l| l.gcd(&n) == 1).collect()
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl CycNumber {
    /// The term part of the textual grammar, without the `@n` order suffix;
    /// used where the order is clear from context (e.g. table cells).
    pub fn terms_string(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = fmt_rational(&c.abs());
            let term = if k == 0 { mag } else { format!("{mag}*z^{k}") };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
                out.push_str(&term);
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for CycNumber {
    /// Renders the grammar `a/b*z^k` terms joined by `+`/`-`, order suffix
    /// `@n`, e.g. `1 - 1*z^2 @5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @{}", self.terms_string(), self.order)
    }
}

struct TextCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> TextCursor<'a> {
    fn new(s: &'a str) -> Self {
        TextCursor { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8, expected: &'static str) -> Result<(), CycloError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(CycloError::Parse { offset: self.pos, expected })
        }
    }

    fn parse_uint(&mut self, expected: &'static str) -> Result<u64, CycloError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(CycloError::Parse { offset: self.pos, expected });
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(CycloError::Parse { offset: start, expected })
    }
}

impl FromStr for CycNumber {
    type Err = CycloError;

    /// Parses the same grammar that `Display` renders.
    fn from_str(s: &str) -> Result<CycNumber, CycloError> {
        let mut cur = TextCursor::new(s);
        let mut terms: Vec<(i64, BigRational)> = Vec::new();
        let mut zero = false;

        cur.skip_ws();
        let mut negative = if cur.peek() == Some(b'-') {
            cur.pos += 1;
            true
        } else {
            false
        };
        loop {
            cur.skip_ws();
            if !negative && cur.peek() == Some(b'0') {
                // allow the bare "0" rendering of zero
                let save = cur.pos;
                cur.pos += 1;
                let next = cur.peek();
                if next.map(|b| !b.is_ascii_digit() && b != b'/' && b != b'*').unwrap_or(true) {
                    zero = true;
                } else {
                    cur.pos = save;
                }
            }
            if !zero {
                let numer = cur.parse_uint("coefficient")? as i64;
                let denom = if cur.peek() == Some(b'/') {
                    cur.pos += 1;
                    cur.parse_uint("denominator")?
                } else {
                    1
                };
                if denom == 0 {
                    return Err(CycloError::Parse { offset: cur.pos, expected: "nonzero denominator" });
                }
                let mut coeff =
                    BigRational::new(BigInt::from(numer), BigInt::from(denom as i64));
                if negative {
                    coeff = -coeff;
                }
                let exp = if cur.peek() == Some(b'*') {
                    cur.pos += 1;
                    cur.eat(b'z', "'z'")?;
                    cur.eat(b'^', "'^'")?;
                    cur.parse_uint("exponent")? as i64
                } else {
                    0
                };
                terms.push((exp, coeff));
            }
            cur.skip_ws();
            match cur.peek() {
                Some(b'+') => {
                    cur.pos += 1;
                    negative = false;
                    zero = false;
                }
                Some(b'-') => {
                    cur.pos += 1;
                    negative = true;
                    zero = false;
                }
                Some(b'@') => break,
                _ => {
                    return Err(CycloError::Parse {
                        offset: cur.pos,
                        expected: "'+', '-' or '@'",
                    })
                }
            }
        }
        cur.eat(b'@', "'@'")?;
        cur.skip_ws();
        let order = cur.parse_uint("order")?;
        cur.skip_ws();
        if cur.pos != cur.bytes.len() {
            return Err(CycloError::Parse { offset: cur.pos, expected: "end of input" });
        }
        CycNumber::from_terms(order, &terms)
    }
}
