//! Exact coefficients: the field Q(ζ_n) of rationals extended by a primitive
//! n-th root of unity.
//!
//! A [`Scalar`] is stored as a rational-coefficient polynomial in ζ of degree
//! below φ(n), kept reduced modulo the n-th cyclotomic polynomial, so equality
//! of values is equality of representations.  The default order n = 1 gives
//! plain rationals.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

// ---- dense univariate helpers over Q ----
//
// Internal scratch arithmetic for reduction modulo the cyclotomic minimal
// polynomial.  Vectors hold coefficients by ascending degree and are kept
// trimmed of trailing zeros.

fn qp_trim(v: &mut Vec<Q>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn qp_is_zero(v: &[Q]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn qp_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if qp_is_zero(a) || qp_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    qp_trim(&mut out);
    out
}

fn qp_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    qp_trim(&mut out);
    out
}

/// Quotient and remainder of `a` by nonzero `b` over the rationals.
fn qp_div_rem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut rem: Vec<Q> = a.to_vec();
    qp_trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    let mut quo = vec![Q::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / lead;
        for (k, bc) in b.iter().enumerate() {
            let idx = dr - db + k;
            let t = &c * bc;
            rem[idx] -= t;
        }
        quo[dr - db] = c;
        qp_trim(&mut rem);
    }
    (quo, rem)
}

// ---- cyclotomic context ----

struct Cyclo {
    phi: usize,
    /// Monic minimal polynomial of ζ_order, ascending coefficients.
    minpoly: Vec<Q>,
}

fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
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

/// The n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
/// the cyclotomic polynomials of the proper divisors of n.
fn cyclotomic_poly(n: u32) -> Vec<Q> {
    let mut table: HashMap<u32, Vec<Q>> = HashMap::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        // x^d - 1
        let mut num = vec![Q::zero(); d as usize + 1];
        num[0] = -Q::one();
        num[d as usize] = Q::one();
        let mut poly = num;
        for e in 1..d {
            if d % e == 0 {
                let (quo, rem) = qp_div_rem(&poly, &table[&e]);
                debug_assert!(qp_is_zero(&rem));
                poly = quo;
            }
        }
        table.insert(d, poly);
    }
    table.remove(&n).expect("divisor table always contains n")
}

fn context(order: u32) -> Arc<Cyclo> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Cyclo>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    guard
        .entry(order)
        .or_insert_with(|| {
            let minpoly = cyclotomic_poly(order);
            Arc::new(Cyclo {
                phi: euler_phi(order) as usize,
                minpoly,
            })
        })
        .clone()
}

// ---- Scalar ----

/// An element of Q(ζ_n), reduced modulo the n-th cyclotomic polynomial.
///
/// The coefficient vector always has exactly φ(n) entries (ascending powers
/// of ζ), so two scalars of the same order are equal iff their vectors are.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    order: u32,
    coeffs: Vec<Q>,
}

impl Scalar {
    fn reduced(order: u32, raw: Vec<Q>) -> Self {
        let ctx = context(order);
        let mut v = raw;
        qp_trim(&mut v);
        if v.len() > ctx.phi {
            let (_, rem) = qp_div_rem(&v, &ctx.minpoly);
            v = rem;
        }
        v.resize(ctx.phi, Q::zero());
        Scalar { order, coeffs: v }
    }

    /// The zero of Q(ζ_n).
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be at least 1");
        let ctx = context(order);
        Scalar {
            order,
            coeffs: vec![Q::zero(); ctx.phi],
        }
    }

    /// The one of Q(ζ_n).
    pub fn one(order: u32) -> Self {
        Scalar::from_rational(Q::one(), order)
    }

    pub fn from_rational(q: Q, order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be at least 1");
        Scalar::reduced(order, vec![q])
    }

    pub fn from_integer(k: i64, order: u32) -> Self {
        Scalar::from_rational(Q::from_integer(BigInt::from(k)), order)
    }

    /// ζ_n^k.  For n = 1 this is 1; for n = 2 it is (-1)^k.
    pub fn zeta_pow(order: u32, k: u64) -> Self {
        assert!(order >= 1, "cyclotomic order must be at least 1");
        let k = (k % order as u64) as usize;
        let mut v = vec![Q::zero(); k + 1];
        v[k] = Q::one();
        Scalar::reduced(order, v)
    }

    /// The generator ζ_n itself.
    pub fn zeta(order: u32) -> Self {
        Scalar::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of the reduced representation, ascending powers of ζ.
    pub fn zeta_coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |q| q.is_one())
    }

    /// Some(q) when the value lies in Q, i.e. all ζ-coefficients above the
    /// constant one vanish.
    pub fn as_rational(&self) -> Option<Q> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Multiplicative inverse; None for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let ctx = context(self.order);
        // Extended Euclid against the minimal polynomial: find u with
        // u * self ≡ g (mod Φ_n) for a nonzero constant g.
        let mut r0 = ctx.minpoly.clone();
        let mut r1 = self.coeffs.clone();
        qp_trim(&mut r1);
        let mut u0: Vec<Q> = Vec::new();
        let mut u1: Vec<Q> = vec![Q::one()];
        while !qp_is_zero(&r1) {
            let (q, r2) = qp_div_rem(&r0, &r1);
            let u2 = qp_sub(&u0, &qp_mul(&q, &u1));
            r0 = r1;
            r1 = r2;
            u0 = u1;
            u1 = u2;
        }
        debug_assert_eq!(r0.len(), 1, "cyclotomic polynomial is irreducible");
        let g = r0[0].clone();
        let inv: Vec<Q> = u0.into_iter().map(|c| c / &g).collect();
        Some(Scalar::reduced(self.order, inv))
    }

    /// Nonnegative integer power.
    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    // ---- roots of unity ----

    /// Order of the group of roots of unity inside Q(ζ_n): n when n is even,
    /// 2n when n is odd (because -1 is always present).
    pub fn unity_group_order(order: u32) -> u64 {
        if order % 2 == 0 {
            order as u64
        } else {
            2 * order as u64
        }
    }

    /// The canonical generator of the roots of unity in Q(ζ_n): ζ_n for even
    /// n, and -ζ_n^((n+1)/2) (a primitive 2n-th root) for odd n.
    pub fn unity_generator(order: u32) -> Scalar {
        if order % 2 == 0 {
            Scalar::zeta(order)
        } else {
            -&Scalar::zeta_pow(order, (order as u64 + 1) / 2)
        }
    }

    /// g^k for the canonical unity generator g of this field.
    pub fn unity_pow(order: u32, k: u64) -> Scalar {
        let n = Scalar::unity_group_order(order);
        Scalar::unity_generator(order).pow(k % n)
    }

    /// Writes the value as q · g^k with q a positive rational and g the
    /// canonical unity generator, when such a factorization exists.
    pub fn as_rational_times_unity(&self) -> Option<(Q, u64)> {
        if self.is_zero() {
            return None;
        }
        let n = Scalar::unity_group_order(self.order);
        for k in 0..n {
            let u_inv = Scalar::unity_pow(self.order, (n - k) % n);
            let t = self * &u_inv;
            if let Some(q) = t.as_rational() {
                if q.is_positive() {
                    return Some((q, k));
                }
            }
        }
        None
    }

    /// Exact m-th root, recognized only for values of the shape
    /// (rational m-th power) · (root of unity in the field).  Anything that
    /// would need a larger field yields None.
    pub fn mth_root(&self, m: u64) -> Option<Scalar> {
        assert!(m >= 1, "root index must be positive");
        if m == 1 || self.is_zero() {
            return Some(self.clone());
        }
        let (q, k) = self.as_rational_times_unity()?;
        let root_num = exact_root(q.numer(), m)?;
        let root_den = exact_root(q.denom(), m)?;
        let rho = Q::new(root_num, root_den);
        let n = Scalar::unity_group_order(self.order);
        let j = solve_mod(m % n, k % n, n)?;
        let root = &Scalar::from_rational(rho, self.order) * &Scalar::unity_pow(self.order, j);
        debug_assert_eq!(root.pow(m), *self);
        Some(root)
    }
}

/// Exact m-th root of a nonnegative integer, if one exists.
fn exact_root(a: &BigInt, m: u64) -> Option<BigInt> {
    debug_assert!(!a.is_negative());
    let r = a.nth_root(m as u32);
    if num_traits::pow(r.clone(), m as usize) == *a {
        Some(r)
    } else {
        None
    }
}

/// Least j with m·j ≡ k (mod n), when solvable.
fn solve_mod(m: u64, k: u64, n: u64) -> Option<u64> {
    let g = m.gcd(&n);
    if k % g != 0 {
        return None;
    }
    let n1 = n / g;
    let inv = mod_inverse(m / g % n1, n1)?;
    Some((k / g % n1) * inv % n1)
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (n as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

// ---- arithmetic ----

fn check_orders(a: &Scalar, b: &Scalar) {
    assert_eq!(
        a.order, b.order,
        "scalars from different cyclotomic fields cannot be combined"
    );
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_orders(self, rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Scalar {
            order: self.order,
            coeffs,
        }
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        check_orders(self, rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Scalar {
            order: self.order,
            coeffs,
        }
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_orders(self, rhs);
        Scalar::reduced(self.order, qp_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// ---- formatting ----

/// Canonical text for a rational: reduced fraction with positive denominator,
/// printed as `p/q`, or just `p` when the denominator is one.
pub fn rational_string(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Scalar {
    /// Canonical text: a plain reduced fraction for rational values, or a
    /// parenthesized polynomial in `z` with ascending powers otherwise.
    pub fn canonical_string(&self) -> String {
        if let Some(q) = self.as_rational() {
            return rational_string(&q);
        }
        let mut out = String::from("(");
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let power = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if power.is_empty() {
                out.push_str(&rational_string(&mag));
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&rational_string(&mag));
                out.push('*');
                out.push_str(&power);
            }
        }
        out.push(')');
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar[n={}]({})", self.order, self.canonical_string())
    }
}
