//! Exact arithmetic over the three supported coefficient fields:
//! the rationals, cyclotomic extensions `Q(zeta_n)`, and prime fields `F_p`.
//!
//! Every scalar is kept in a canonical form, so equality is syntactic:
//! fractions are reduced with positive denominator, residues lie in `[0, p)`,
//! and cyclotomic values are polynomials of degree `< phi(n)` in the class
//! of `z` modulo the n-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which exact field coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldDescriptor {
    Rationals,
    /// `Q(zeta_n)` for `n >= 3`.
    CyclotomicRationals(u64),
    /// `F_p` for a prime `p`.
    PrimeField(u64),
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor::Rationals
    }

    pub fn cyclotomic(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::CyclotomicIndexTooSmall(n));
        }
        Ok(FieldDescriptor::CyclotomicRationals(n))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldDescriptor::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Degree of the field over `Q` (`phi(n)` for cyclotomics) or 1.
    pub fn degree(&self) -> usize {
        match self {
            FieldDescriptor::CyclotomicRationals(n) => euler_phi(*n) as usize,
            _ => 1,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::CyclotomicRationals(n) => write!(f, "Q(zeta_{n})"),
            FieldDescriptor::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn euler_phi(n: u64) -> u64 {
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

/// Coefficients of the n-th cyclotomic polynomial, low degree first.
/// Computed by dividing `x^n - 1` by the cyclotomic polynomials of the
/// proper divisors of `n`; results are cached process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // x^n - 1
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let divisor = cyclotomic_polynomial(d);
            poly = int_poly_exact_div(&poly, &divisor);
        }
    }
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials (the divisor is monic).
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let t = &c * dc;
            rem[i - dd + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    /// Coefficients of 1, z, ..., z^(phi(n)-1).
    Cyc(Vec<BigRational>),
    Mod(u64),
}

/// An exact field element tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldDescriptor,
    repr: Repr,
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        Scalar::from_integer(0, field)
    }

    pub fn one(field: FieldDescriptor) -> Self {
        Scalar::from_integer(1, field)
    }

    pub fn from_integer(k: i64, field: FieldDescriptor) -> Self {
        Scalar::from_bigint(BigInt::from(k), field)
    }

    pub fn from_bigint(k: BigInt, field: FieldDescriptor) -> Self {
        let repr = match field {
            FieldDescriptor::Rationals => Repr::Rat(BigRational::from_integer(k)),
            FieldDescriptor::CyclotomicRationals(n) => {
                let deg = euler_phi(n) as usize;
                let mut v = vec![BigRational::zero(); deg];
                v[0] = BigRational::from_integer(k);
                Repr::Cyc(v)
            }
            FieldDescriptor::PrimeField(p) => {
                let m = k.mod_floor(&BigInt::from(p));
                let (_, digits) = m.to_u64_digits();
                Repr::Mod(*digits.first().unwrap_or(&0))
            }
        };
        Scalar { field, repr }
    }

    pub fn from_rational(num: BigInt, den: BigInt, field: FieldDescriptor) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        match field {
            FieldDescriptor::Rationals => Ok(Scalar {
                field,
                repr: Repr::Rat(BigRational::new(num, den)),
            }),
            FieldDescriptor::CyclotomicRationals(n) => {
                let deg = euler_phi(n) as usize;
                let mut v = vec![BigRational::zero(); deg];
                v[0] = BigRational::new(num, den);
                Ok(Scalar { field, repr: Repr::Cyc(v) })
            }
            FieldDescriptor::PrimeField(_) => {
                let a = Scalar::from_bigint(num, field);
                let b = Scalar::from_bigint(den, field);
                if b.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(a.mul(&b.inverse()?))
            }
        }
    }

    /// The class of `z = zeta_n` itself.
    pub fn zeta(field: FieldDescriptor) -> Result<Self> {
        match field {
            FieldDescriptor::CyclotomicRationals(n) => {
                let deg = euler_phi(n) as usize;
                let mut v = vec![BigRational::zero(); deg.max(1)];
                if deg >= 2 {
                    v[1] = BigRational::one();
                    Ok(Scalar { field, repr: Repr::Cyc(v) })
                } else {
                    // phi(n) = 1 cannot occur for n >= 3
                    Err(Error::CyclotomicIndexTooSmall(n))
                }
            }
            _ => Err(Error::WrongField("z".into())),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Cyc(v) => v.iter().all(|c| c.is_zero()),
            Repr::Mod(m) => *m == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.field)
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert_eq!(self.field, other.field, "scalar field mismatch");
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                Repr::Cyc(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Repr::Mod(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            _ => unreachable!(),
        };
        Scalar { field: self.field, repr }
    }

    pub fn neg(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Cyc(a) => Repr::Cyc(a.iter().map(|x| -x).collect()),
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Repr::Mod(if *a == 0 { 0 } else { p - *a })
            }
        };
        Scalar { field: self.field, repr }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                let n = match self.field {
                    FieldDescriptor::CyclotomicRationals(n) => n,
                    _ => unreachable!(),
                };
                Repr::Cyc(cyc_mul(a, b, n))
            }
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Repr::Mod(mul_mod(*a, *b, p))
            }
            _ => unreachable!(),
        };
        Scalar { field: self.field, repr }
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(a.recip()),
            Repr::Cyc(a) => {
                let n = match self.field {
                    FieldDescriptor::CyclotomicRationals(n) => n,
                    _ => unreachable!(),
                };
                Repr::Cyc(cyc_inverse(a, n)?)
            }
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Repr::Mod(pow_mod(*a, p - 2, p))
            }
        };
        Ok(Scalar { field: self.field, repr })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, exp: u64) -> Scalar {
        let mut acc = Scalar::one(self.field);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_signed(&self, exp: i64) -> Result<Scalar> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inverse()?.pow((-exp) as u64))
        }
    }

    /// Least `m <= bound` with `self^m = 1`, if any.
    pub fn multiplicative_order(&self, bound: u64) -> Result<OrderResult> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let one = Scalar::one(self.field);
        let mut power = self.clone();
        for m in 1..=bound {
            if power == one {
                return Ok(OrderResult::Finite(m));
            }
            power = power.mul(self);
        }
        Ok(OrderResult::ExceedsBound)
    }

    /// Exact decision whether this scalar is a root of unity, with its order.
    ///
    /// In `Q` the torsion units are `{1, -1}`; in `Q(zeta_n)` they are
    /// `+/- zeta_n^k`, so it suffices to test `s^lcm(2, n) = 1`; in `F_p`
    /// every nonzero scalar has order dividing `p - 1`.
    pub fn root_of_unity_order(&self) -> Result<RootOfUnity> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        match self.field {
            FieldDescriptor::Rationals => {
                if self.is_one() {
                    Ok(RootOfUnity::Finite(1))
                } else if *self == Scalar::one(self.field).neg() {
                    Ok(RootOfUnity::Finite(2))
                } else {
                    Ok(RootOfUnity::No)
                }
            }
            FieldDescriptor::CyclotomicRationals(n) => {
                let l = lcm_u64(2, n);
                if self.pow(l).is_one() {
                    Ok(RootOfUnity::Finite(self.min_order_dividing(l)))
                } else {
                    Ok(RootOfUnity::No)
                }
            }
            FieldDescriptor::PrimeField(p) => {
                Ok(RootOfUnity::Finite(self.min_order_dividing(p - 1)))
            }
        }
    }

    /// Minimal divisor `d` of `l` with `self^d = 1`; caller guarantees
    /// `self^l = 1`.
    fn min_order_dividing(&self, l: u64) -> u64 {
        let mut divisors: Vec<u64> = (1..=l).filter(|d| l % d == 0).collect();
        divisors.sort_unstable();
        for d in divisors {
            if self.pow(d).is_one() {
                return d;
            }
        }
        unreachable!("order must divide l")
    }

    /// Parse per the scalar grammar of the field.
    pub fn parse(text: &str, field: FieldDescriptor) -> Result<Scalar> {
        parse_scalar(text, field)
    }

    /// Sign of a rational scalar; `None` for the unordered fields.
    pub fn rational_sign(&self) -> Option<i8> {
        match &self.repr {
            Repr::Rat(r) => Some(if r.is_zero() {
                0
            } else if r.is_negative() {
                -1
            } else {
                1
            }),
            _ => None,
        }
    }

    /// The underlying rational value, when the field is `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderResult {
    Finite(u64),
    ExceedsBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootOfUnity {
    Finite(u64),
    No,
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

fn cyc_mul(a: &[BigRational], b: &[BigRational], n: u64) -> Vec<BigRational> {
    let deg = a.len();
    let mut prod = vec![BigRational::zero(); 2 * deg - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            prod[i + j] += x * y;
        }
    }
    cyc_reduce(prod, n)
}

/// Reduce a rational polynomial modulo the n-th cyclotomic polynomial and
/// pad to degree phi(n).
fn cyc_reduce(mut poly: Vec<BigRational>, n: u64) -> Vec<BigRational> {
    let modulus: Vec<BigRational> = cyclotomic_polynomial(n)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();
    let deg = modulus.len() - 1;
    while poly.len() > deg {
        let top = poly.len() - 1;
        let c = poly[top].clone();
        if !c.is_zero() {
            for (j, m) in modulus.iter().enumerate() {
                let idx = top - deg + j;
                let t = &c * m;
                poly[idx] -= t;
            }
        }
        poly.pop();
    }
    poly.resize(deg, BigRational::zero());
    poly
}

/// Inverse modulo the cyclotomic polynomial by the extended Euclidean
/// algorithm over `Q[x]`.
fn cyc_inverse(a: &[BigRational], n: u64) -> Result<Vec<BigRational>> {
    let modulus: Vec<BigRational> = cyclotomic_polynomial(n)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();
    // (r0, s0) and (r1, s1) with invariant r = s * a  (mod Phi_n)
    let mut r0 = modulus.clone();
    let mut s0: Vec<BigRational> = vec![];
    let mut r1: Vec<BigRational> = trim(a.to_vec());
    let mut s1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_poly_divmod(&r0, &r1);
        let s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
        r0 = r1;
        s0 = s1;
        r1 = r;
        s1 = s;
    }
    // r0 is the gcd; Phi_n is irreducible so the gcd is a nonzero constant.
    if r0.len() != 1 {
        return Err(Error::DivisionByZero);
    }
    let c = r0[0].recip();
    let mut inv: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
    inv = cyc_reduce(std::mem::take(&mut inv), n);
    Ok(inv)
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn rat_poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if rem.len() <= dd {
        return (vec![], trim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = &rem[i] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let t = &c * dc;
            rem[i - dd + j] -= t;
        }
    }
    (trim(quot), trim(rem))
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
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

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

// ---------------------------------------------------------------------------
// parsing and printing
// ---------------------------------------------------------------------------

/// Grammar: integer `-?[0-9]+`; fraction `int "/" posint`; cyclotomic
/// scalars are sums of terms `coeff "*" z ["^" exp]` (coefficient and `*`
/// optional), with `z` the class of `zeta_n`. Prime-field scalars are
/// integers or fractions reduced mod p.
fn parse_scalar(text: &str, field: FieldDescriptor) -> Result<Scalar> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::MalformedScalar(text.into()));
    }
    if s.contains('z') {
        if !matches!(field, FieldDescriptor::CyclotomicRationals(_)) {
            return Err(Error::WrongField(text.into()));
        }
        return parse_cyclotomic(&s, field, text);
    }
    parse_rational_like(&s, field, text)
}

fn parse_rational_like(s: &str, field: FieldDescriptor, orig: &str) -> Result<Scalar> {
    // Allow a leading sum of plain rational terms such as "1 + 2" never
    // occurs; a single int or int/posint only.
    if let Some(idx) = s.find('/') {
        let (nums, dens) = s.split_at(idx);
        let dens = &dens[1..];
        let num: BigInt = nums
            .parse()
            .map_err(|_| Error::MalformedScalar(orig.into()))?;
        if dens.starts_with('-') || dens.starts_with('+') {
            return Err(Error::MalformedScalar(orig.into()));
        }
        let den: BigInt = dens
            .parse()
            .map_err(|_| Error::MalformedScalar(orig.into()))?;
        Scalar::from_rational(num, den, field)
    } else {
        let k: BigInt = s.parse().map_err(|_| Error::MalformedScalar(orig.into()))?;
        Ok(Scalar::from_bigint(k, field))
    }
}

fn parse_cyclotomic(s: &str, field: FieldDescriptor, orig: &str) -> Result<Scalar> {
    let n = match field {
        FieldDescriptor::CyclotomicRationals(n) => n,
        _ => unreachable!(),
    };
    let deg = euler_phi(n) as usize;
    // Split into signed terms.
    let mut terms: Vec<(bool, String)> = vec![];
    let mut cur = String::new();
    let mut neg = false;
    let mut chars = s.chars().peekable();
    // optional leading sign
    if let Some(&c) = chars.peek() {
        if c == '-' {
            neg = true;
            chars.next();
        } else if c == '+' {
            chars.next();
        }
    }
    for c in chars {
        if c == '+' || c == '-' {
            if cur.is_empty() {
                return Err(Error::MalformedScalar(orig.into()));
            }
            terms.push((neg, std::mem::take(&mut cur)));
            neg = c == '-';
        } else {
            cur.push(c);
        }
    }
    if cur.is_empty() {
        return Err(Error::MalformedScalar(orig.into()));
    }
    terms.push((neg, cur));

    let mut raw = vec![BigRational::zero(); n as usize];
    for (negative, term) in terms {
        let (coeff, exp) = parse_cyc_term(&term, orig)?;
        let coeff = if negative { -coeff } else { coeff };
        let e = (exp % n) as usize;
        raw[e] += coeff;
    }
    let reduced = cyc_reduce(raw, n);
    debug_assert_eq!(reduced.len(), deg);
    Ok(Scalar {
        field,
        repr: Repr::Cyc(reduced),
    })
}

/// One cyclotomic term: `coeff`, `coeff*z`, `coeff*z^e`, `z`, `z^e`.
fn parse_cyc_term(term: &str, orig: &str) -> Result<(BigRational, u64)> {
    let (coeff_str, z_part) = match term.find('z') {
        None => (term, None),
        Some(zi) => {
            let (c, z) = term.split_at(zi);
            let c = c.strip_suffix('*').unwrap_or(c);
            (c, Some(&z[1..]))
        }
    };
    let coeff = if coeff_str.is_empty() {
        BigRational::one()
    } else if let Some(idx) = coeff_str.find('/') {
        let num: BigInt = coeff_str[..idx]
            .parse()
            .map_err(|_| Error::MalformedScalar(orig.into()))?;
        let den: BigInt = coeff_str[idx + 1..]
            .parse()
            .map_err(|_| Error::MalformedScalar(orig.into()))?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if den.is_negative() {
            return Err(Error::MalformedScalar(orig.into()));
        }
        BigRational::new(num, den)
    } else {
        let k: BigInt = coeff_str
            .parse()
            .map_err(|_| Error::MalformedScalar(orig.into()))?;
        BigRational::from_integer(k)
    };
    let exp = match z_part {
        None => 0,
        Some("") => 1,
        Some(e) => {
            let e = e
                .strip_prefix('^')
                .ok_or_else(|| Error::MalformedScalar(orig.into()))?;
            e.parse::<u64>()
                .map_err(|_| Error::MalformedScalar(orig.into()))?
        }
    };
    Ok((coeff, exp))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(r) => write!(f, "{}", r),
            Repr::Mod(m) => write!(f, "{}", m),
            Repr::Cyc(v) => {
                if v.iter().all(|c| c.is_zero()) {
                    return write!(f, "0");
                }
                let mut first = true;
                for (e, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let neg = c.is_negative();
                    let mag = c.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else if neg {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    if e == 0 {
                        write!(f, "{}", mag)?;
                    } else {
                        if !mag.is_one() {
                            write!(f, "{}*", mag)?;
                        }
                        if e == 1 {
                            write!(f, "z")?;
                        } else {
                            write!(f, "z^{}", e)?;
                        }
                    }
                }
                Ok(())
            }
        }
    }
}
