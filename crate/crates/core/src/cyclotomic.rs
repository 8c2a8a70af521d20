//! Exact arithmetic with roots of unity and in cyclotomic fields `Q(zeta_N)`.
//!
//! [`RootOfUnity`] is the workhorse for braiding scalars: a normalized pair
//! `(order, exponent)` representing `e^{2 pi i k / n}`, multiplied exactly.
//! [`Cyclotomic`] carries the small linear algebra of the transversal
//! technique, where sums of roots of unity appear; coefficients are
//! arbitrary-precision rationals over the power basis of `Q(zeta_N)` reduced
//! modulo the N-th cyclotomic polynomial. No floating point anywhere.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("order of a root of unity must be positive")]
    ZeroOrder,
    #[error("{0} is not a root of unity of conductor {1}")]
    NotARoot(String, u64),
    #[error("value does not lie in Q(zeta_{0})")]
    WrongField(u64),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("cannot parse root of unity from '{0}'")]
    Parse(String),
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `e^{2 pi i k / n}` stored with `gcd(k, n)` reduced away, so equality is
/// structural: `w(n)^k = w(n')^{k'}` iff `k/n = k'/n'` as reduced fractions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    order: u64,
    exp: u64,
}

impl RootOfUnity {
    /// `root(n, k) = e^{2 pi i k / n}`, normalized.
    pub fn new(order: u64, exp: i64) -> Result<Self, CycloError> {
        if order == 0 {
            return Err(CycloError::ZeroOrder);
        }
        let k = exp.rem_euclid(order as i64) as u64;
        if k == 0 {
            return Ok(RootOfUnity { order: 1, exp: 0 });
        }
        let g = gcd(k, order);
        Ok(RootOfUnity {
            order: order / g,
            exp: k / g,
        })
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, exp: 0 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { order: 2, exp: 1 }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exp(&self) -> u64 {
        self.exp
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn is_minus_one(&self) -> bool {
        self.order == 2
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let n = lcm(self.order, other.order);
        let k = (self.exp as i64) * (n / self.order) as i64
            + (other.exp as i64) * (n / other.order) as i64;
        RootOfUnity::new(n, k).expect("n > 0")
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(self.order, -(self.exp as i64)).expect("order > 0")
    }

    pub fn pow(&self, e: i64) -> RootOfUnity {
        RootOfUnity::new(self.order, (self.exp as i64).wrapping_mul(e)).expect("order > 0")
    }

    /// Parses `1`, `-1`, `w(n)^k`, or `-w(n)^k`.
    pub fn parse(s: &str) -> Result<Self, CycloError> {
        let s = s.trim();
        match s {
            "1" => return Ok(RootOfUnity::one()),
            "-1" => return Ok(RootOfUnity::minus_one()),
            _ => {}
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let parse_body = |body: &str| -> Option<(u64, i64)> {
            let rest = body.strip_prefix("w(")?;
            let (n_str, tail) = rest.split_once(')')?;
            let n: u64 = n_str.parse().ok()?;
            let k: i64 = match tail.strip_prefix('^') {
                Some(k_str) => k_str.parse().ok()?,
                None if tail.is_empty() => 1,
                _ => return None,
            };
            Some((n, k))
        };
        let (n, k) = parse_body(body).ok_or_else(|| CycloError::Parse(s.to_string()))?;
        let r = RootOfUnity::new(n, k)?;
        Ok(if neg { r.mul(&RootOfUnity::minus_one()) } else { r })
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            1 => write!(f, "1"),
            2 => write!(f, "-1"),
            _ => write!(f, "w({})^{}", self.order, self.exp),
        }
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of the N-th cyclotomic polynomial, low degree first.
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact monic division.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

/// Divides `num` by the monic polynomial `den`, panicking on a remainder.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut q = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        q[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    q
}

/// An element of `Q(zeta_N)`: rational coefficients over the power basis
/// `1, zeta, ..., zeta^{phi(N)-1}` after reduction mod `Phi_N`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        Cyclotomic {
            conductor,
            coeffs: vec![BigRational::zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn one(conductor: u64) -> Self {
        let mut z = Cyclotomic::zero(conductor);
        z.coeffs[0] = BigRational::one();
        z
    }

    pub fn from_rational(conductor: u64, q: BigRational) -> Self {
        let mut z = Cyclotomic::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(conductor: u64, k: i64) -> Self {
        Cyclotomic::from_rational(conductor, BigRational::from_integer(BigInt::from(k)))
    }

    /// `zeta_N^e`, reduced.
    pub fn zeta_pow(conductor: u64, e: i64) -> Self {
        let e = e.rem_euclid(conductor as i64) as usize;
        let mut raw = vec![BigRational::zero(); conductor as usize];
        raw[e] = BigRational::one();
        Cyclotomic::reduce(conductor, raw)
    }

    /// Embeds a root of unity; its order must divide the conductor.
    pub fn from_root(conductor: u64, r: &RootOfUnity) -> Result<Self, CycloError> {
        if !conductor.is_multiple_of(r.order()) {
            return Err(CycloError::WrongField(conductor));
        }
        Ok(Cyclotomic::zeta_pow(
            conductor,
            (r.exp() * (conductor / r.order())) as i64,
        ))
    }

    fn reduce(conductor: u64, mut raw: Vec<BigRational>) -> Self {
        // Fold exponents >= N via zeta^N = 1, then divide by Phi_N.
        let n = conductor as usize;
        if raw.len() > n {
            let tail = raw.split_off(n);
            for (i, c) in tail.into_iter().enumerate() {
                raw[i % n] += c;
            }
        }
        let phi: Vec<BigRational> = cyclotomic_poly(conductor)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let deg = phi.len() - 1;
        while raw.len() > deg {
            let c = raw.pop().unwrap();
            if !c.is_zero() {
                let k = raw.len() - deg;
                for i in 0..deg {
                    let delta = &c * &phi[i];
                    raw[k + i] -= delta;
                }
            }
        }
        raw.resize(deg, BigRational::zero());
        Cyclotomic {
            conductor,
            coeffs: raw,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self == &Cyclotomic::one(self.conductor)
    }

    pub fn is_minus_one(&self) -> bool {
        self == &Cyclotomic::from_integer(self.conductor, -1)
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, other.conductor);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic {
            conductor: self.conductor,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, other.conductor);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic {
            conductor: self.conductor,
            coeffs,
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, other.conductor);
        let mut raw = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Cyclotomic::reduce(self.conductor, raw)
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x] / Phi_N`.
    pub fn inv(&self) -> Result<Cyclotomic, CycloError> {
        if self.is_zero() {
            return Err(CycloError::Singular);
        }
        let phi: Vec<BigRational> = cyclotomic_poly(self.conductor)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        // Bezout: find u with u * self == 1 (mod Phi).
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut u0, mut u1) = (
            vec![],
            vec![BigRational::one()],
        );
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let u = poly_sub(&u0, &poly_mul(&q, &u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = trim(u);
        }
        // r0 = gcd, a nonzero constant since Phi_N is irreducible over Q.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let inv_coeffs: Vec<BigRational> = u0.iter().map(|x| x * &c).collect();
        Ok(Cyclotomic::reduce(self.conductor, inv_coeffs))
    }

    /// Recognizes the value as a root of unity in `Q(zeta_N)` if it is one:
    /// scans `zeta^e` and, for odd `N`, `-zeta^e`.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let n = self.conductor;
        for e in 0..n {
            if *self == Cyclotomic::zeta_pow(n, e as i64) {
                return Some(RootOfUnity::new(n, e as i64).unwrap());
            }
        }
        if !n.is_multiple_of(2) {
            for e in 0..n {
                if *self == Cyclotomic::zeta_pow(n, e as i64).neg() {
                    return Some(
                        RootOfUnity::new(2 * n, (n + 2 * e) as i64).unwrap(),
                    );
                }
            }
        }
        None
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty());
    let mut rem = trim(a.to_vec());
    let mut q = vec![BigRational::zero(); rem.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let k = rem.len() - b.len();
        let c = rem.last().unwrap() / b.last().unwrap();
        q[k] = c.clone();
        for (i, d) in b.iter().enumerate() {
            let delta = &c * d;
            rem[k + i] -= delta;
        }
        rem = trim(rem);
    }
    (trim(q), rem)
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_root_of_unity() {
            return write!(f, "{r}");
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z^{e}")?;
            } else {
                write!(f, "{c}*z^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Q(zeta_{})", self.conductor)
    }
}

/// A square matrix over one cyclotomic field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycMatrix {
    pub n: usize,
    pub conductor: u64,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn zero(n: usize, conductor: u64) -> Self {
        CycMatrix {
            n,
            conductor,
            entries: vec![Cyclotomic::zero(conductor); n * n],
        }
    }

    pub fn identity(n: usize, conductor: u64) -> Self {
        let mut m = CycMatrix::zero(n, conductor);
        for i in 0..n {
            *m.at_mut(i, i) = Cyclotomic::one(conductor);
        }
        m
    }

    pub fn from_fn(n: usize, conductor: u64, f: impl Fn(usize, usize) -> Cyclotomic) -> Self {
        let mut m = CycMatrix::zero(n, conductor);
        for i in 0..n {
            for j in 0..n {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Cyclotomic {
        &mut self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &CycMatrix) -> Result<CycMatrix, CycloError> {
        if self.n != other.n {
            return Err(CycloError::Dimension(self.n, other.n));
        }
        let mut out = CycMatrix::zero(self.n, self.conductor);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = Cyclotomic::zero(self.conductor);
                for k in 0..self.n {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan inverse; errors on a singular matrix.
    pub fn inverse(&self) -> Result<CycMatrix, CycloError> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = CycMatrix::identity(n, self.conductor);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .ok_or(CycloError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.at(pivot, j).clone();
                    *a.at_mut(pivot, j) = a.at(col, j).clone();
                    *a.at_mut(col, j) = tmp;
                    let tmp = inv.at(pivot, j).clone();
                    *inv.at_mut(pivot, j) = inv.at(col, j).clone();
                    *inv.at_mut(col, j) = tmp;
                }
            }
            let p = a.at(col, col).inv()?;
            for j in 0..n {
                *a.at_mut(col, j) = a.at(col, j).mul(&p);
                *inv.at_mut(col, j) = inv.at(col, j).mul(&p);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let da = a.at(col, j).mul(&factor);
                    *a.at_mut(r, j) = a.at(r, j).sub(&da);
                    let di = inv.at(col, j).mul(&factor);
                    *inv.at_mut(r, j) = inv.at(r, j).sub(&di);
                }
            }
        }
        Ok(inv)
    }
}

/// `combos^{-1} * op * combos`, exactly.
pub fn change_of_basis(op: &CycMatrix, combos: &CycMatrix) -> Result<CycMatrix, CycloError> {
    combos.inverse()?.mul(op)?.mul(combos)
}

/// Exact positive-definiteness of a symmetric rational matrix via leading
/// principal minors (Sylvester).
pub fn is_positive_definite(sym: &[Vec<BigRational>]) -> bool {
    let n = sym.len();
    // Fraction-free-ish Gaussian elimination on a copy, tracking minors.
    let mut a = sym.to_vec();
    for k in 0..n {
        // Leading minor of size k+1 is the product of pivots so far times a[k][k].
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let factor = &a[i][k] / &a[k][k];
            for j in k..n {
                let delta = &factor * &a[k][j];
                a[i][j] -= delta;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn root_examples() {
        assert!(RootOfUnity::new(4, 2).unwrap().is_minus_one());
        let r = RootOfUnity::new(8, 4).unwrap();
        assert!(r.mul(&r).is_one());
        assert!(RootOfUnity::new(0, 1).is_err());
    }

    #[test]
    fn lemma_trigger_predicate_on_roots() {
        // root(j, 4t) == 1 iff j | 4t.
        for j in 1..=12i64 {
            for t in 0..j {
                let r = RootOfUnity::new(j as u64, 4 * t).unwrap();
                assert_eq!(r.is_one(), (4 * t) % j == 0, "j={j}, t={t}");
            }
        }
    }

    #[test]
    fn lambda_is_a_sign_for_k_three_to_six() {
        // For t in {0, 2^{k-2}, 2^{k-1}, 3*2^{k-2}} and k >= 3, i^t is +-1.
        for k in 3..=6u32 {
            let q = 1i64 << (k - 2);
            for t in [0, q, 2 * q, 3 * q] {
                let lambda = RootOfUnity::new(4, t).unwrap();
                assert!(lambda.is_one() || lambda.is_minus_one(), "k={k}, t={t}");
            }
        }
    }

    #[test]
    fn root_strings_round_trip() {
        for n in 1..=12u64 {
            for k in 0..n {
                let r = RootOfUnity::new(n, k as i64).unwrap();
                assert_eq!(RootOfUnity::parse(&r.to_string()).unwrap(), r);
            }
        }
    }

    #[test]
    fn cyclotomic_identities_up_to_24() {
        for n in 1..=24u64 {
            // zeta^n = 1
            assert!(Cyclotomic::zeta_pow(n, n as i64).is_one(), "n={n}");
            // Phi_n(zeta) = 0
            let phi = cyclotomic_poly(n);
            let mut acc = Cyclotomic::zero(n);
            for (e, c) in phi.iter().enumerate() {
                let term = Cyclotomic::zeta_pow(n, e as i64)
                    .scale(&BigRational::from_integer(c.clone()));
                acc = acc.add(&term);
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta_{n}) != 0");
        }
    }

    #[test]
    fn root_to_cyclotomic_round_trip() {
        for n in [4u64, 6, 8, 12, 15, 20, 24] {
            for k in 0..n {
                let r = RootOfUnity::new(n, k as i64).unwrap();
                let z = Cyclotomic::from_root(n, &r).unwrap();
                assert_eq!(z.as_root_of_unity(), Some(r));
            }
        }
        // Odd conductor: -zeta is a root of unity of doubled order.
        let z = Cyclotomic::zeta_pow(5, 1).neg();
        assert_eq!(z.as_root_of_unity(), Some(RootOfUnity::new(10, 7).unwrap()));
    }

    #[test]
    fn inverse_and_field_ops() {
        let z = Cyclotomic::zeta_pow(12, 5).add(&Cyclotomic::from_integer(12, 3));
        let zi = z.inv().unwrap();
        assert!(z.mul(&zi).is_one());
        assert!(Cyclotomic::zero(12).inv().is_err());
    }

    #[test]
    fn change_of_basis_on_identity_and_permutation() {
        let n = 4;
        let cond = 4;
        let id = CycMatrix::identity(n, cond);
        let combos = CycMatrix::from_fn(n, cond, |i, j| {
            // a permutation matrix: e_j -> e_{(j+1) mod n}
            if i == (j + 1) % n {
                Cyclotomic::one(cond)
            } else {
                Cyclotomic::zero(cond)
            }
        });
        assert_eq!(change_of_basis(&id, &combos).unwrap(), id);

        let diag = CycMatrix::from_fn(n, cond, |i, j| {
            if i == j {
                Cyclotomic::zeta_pow(cond, i as i64)
            } else {
                Cyclotomic::zero(cond)
            }
        });
        let conj = change_of_basis(&diag, &combos).unwrap();
        // Conjugating a diagonal by a permutation permutes the diagonal.
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    assert!(conj.at(i, j).is_zero());
                }
            }
        }
        let perm_diag: Vec<Cyclotomic> = (0..n).map(|i| conj.at(i, i).clone()).collect();
        let mut orig: Vec<Cyclotomic> = (0..n).map(|i| diag.at(i, i).clone()).collect();
        let mut got = perm_diag.clone();
        orig.sort_by_key(|z| format!("{z}"));
        got.sort_by_key(|z| format!("{z}"));
        assert_eq!(orig, got);
    }

    #[test]
    fn positive_definite_examples() {
        let two = || BigRational::from_integer(2.into());
        let mone = || BigRational::from_integer((-1).into());
        // A_2 Cartan symmetrization
        let a2 = vec![vec![two(), mone()], vec![mone(), two()]];
        assert!(is_positive_definite(&a2));
        // Affine A_1: determinant 0
        let mtwo = || BigRational::from_integer((-2).into());
        let aff = vec![vec![two(), mtwo()], vec![mtwo(), two()]];
        assert!(!is_positive_definite(&aff));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn root_products_normalize(n1 in 1u64..24, k1 in 0i64..24, n2 in 1u64..24, k2 in 0i64..24) {
            let a = RootOfUnity::new(n1, k1).unwrap();
            let b = RootOfUnity::new(n2, k2).unwrap();
            let ab = a.mul(&b);
            // check against fraction arithmetic
            let num = k1.rem_euclid(n1 as i64) as u64 * n2 + k2.rem_euclid(n2 as i64) as u64 * n1;
            let den = n1 * n2;
            let expected = RootOfUnity::new(den, num as i64).unwrap();
            prop_assert_eq!(ab, expected);
        }

        #[test]
        fn field_axioms_on_samples(a in 0i64..12, b in 0i64..12, c in 0i64..12) {
            let n = 12u64;
            let x = Cyclotomic::zeta_pow(n, a).add(&Cyclotomic::from_integer(n, b));
            let y = Cyclotomic::zeta_pow(n, b).sub(&Cyclotomic::from_integer(n, c));
            let z = Cyclotomic::zeta_pow(n, c);
            // associativity and distributivity
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            // inverses of nonzero
            if !x.is_zero() {
                prop_assert!(x.mul(&x.inv().unwrap()).is_one());
            }
        }
    }
}
