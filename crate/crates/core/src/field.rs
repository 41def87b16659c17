//! Finite fields `F_q` with a fixed primitive element.
//!
//! Prime fields use plain modular arithmetic with `u64` intermediates.
//! Extension fields `F_{p^k}` (at most 2^16 elements) are built from an
//! explicit monic irreducible modulus and multiply through exp/log tables.
//!
//! Elements are stored as a canonical index in `[0, q)`: the residue itself
//! for prime fields, and the base-`p` packing `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! of the coefficient vector for extension fields.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::number_theory::{factorize, is_prime};

/// Largest characteristic accepted for prime fields.
pub const MAX_PRIME: u64 = 1 << 31;
/// Largest order accepted for extension fields.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 16;
/// Below this order discrete logs are found by scanning powers of alpha.
const BRUTE_FORCE_LOG_LIMIT: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} is outside the supported range")]
    Unsupported(u64),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: u32, got: Vec<u64> },
    #[error("modulus {0:?} is reducible over the prime field")]
    Reducible(Vec<u64>),
    #[error("{0} is not a primitive element")]
    NotPrimitive(u64),
    #[error("{0} is not an element of the field")]
    InvalidElement(u64),
    #[error("zero has no discrete logarithm")]
    ZeroHasNoLog,
    #[error("zero has no inverse")]
    ZeroInverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone)]
enum Arith {
    Prime,
    Extension { exp: Vec<u32>, log: Vec<u32> },
}

#[derive(Debug)]
struct BabySteps {
    table: HashMap<u32, u32>,
    step: u64,
}

/// An immutable description of `F_q` together with a primitive element.
#[derive(Debug)]
pub struct FieldCtx {
    p: u64,
    degree: u32,
    q: u64,
    modulus: Vec<u64>,
    alpha: FieldElement,
    one: FieldElement,
    arith: Arith,
    baby_steps: OnceLock<BabySteps>,
}

impl Clone for FieldCtx {
    fn clone(&self) -> Self {
        Self {
            p: self.p,
            degree: self.degree,
            q: self.q,
            modulus: self.modulus.clone(),
            alpha: self.alpha,
            one: self.one,
            arith: self.arith.clone(),
            baby_steps: OnceLock::new(),
        }
    }
}

impl FieldCtx {
    /// `F_p` with the smallest generator of `F_p^*` as alpha.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= MAX_PRIME {
            return Err(FieldError::Unsupported(p));
        }
        let mut ctx = Self {
            p,
            degree: 1,
            q: p,
            modulus: vec![0, 1],
            alpha: FieldElement(1),
            one: FieldElement(1),
            arith: Arith::Prime,
            baby_steps: OnceLock::new(),
        };
        ctx.alpha = ctx.find_primitive_element();
        Ok(ctx)
    }

    /// `F_{p^k}` with the given monic modulus (coefficients low to high, length
    /// `k + 1`), or the smallest monic irreducible when `modulus` is `None`.
    pub fn extension(p: u64, k: u32, modulus: Option<Vec<u64>>) -> Result<Self, FieldError> {
        if k == 1 && modulus.is_none() {
            return Self::prime(p);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if k == 0 || q > MAX_EXTENSION_ORDER as u128 {
            return Err(FieldError::Unsupported(q.min(u64::MAX as u128) as u64));
        }
        let q = q as u64;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(FieldError::BadModulus {
                        expected: k,
                        got: m,
                    });
                }
                if !poly_is_irreducible(p, &m) {
                    return Err(FieldError::Reducible(m));
                }
                m
            }
            None => smallest_irreducible(p, k),
        };
        let mut ctx = Self {
            p,
            degree: k,
            q,
            modulus,
            alpha: FieldElement(1),
            one: FieldElement(1),
            arith: Arith::Prime,
            baby_steps: OnceLock::new(),
        };
        if k == 1 {
            // Degree-one modulus x + c: F_p itself, arithmetic stays modular.
            ctx.alpha = ctx.find_primitive_element();
            return Ok(ctx);
        }
        let alpha = (1..q)
            .map(|i| FieldElement(i as u32))
            .find(|&b| ctx.slow_is_primitive(b))
            .expect("every finite field has a primitive element");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut acc = ctx.one;
        for e in 0..q - 1 {
            exp.push(acc.0);
            log[acc.0 as usize] = e as u32;
            acc = ctx.slow_mul(acc, alpha);
        }
        ctx.alpha = alpha;
        ctx.arith = Arith::Extension { exp, log };
        Ok(ctx)
    }

    /// The same field with a different primitive element.
    pub fn with_generator(&self, alpha: FieldElement) -> Result<Self, FieldError> {
        self.check(alpha)?;
        if !self.is_primitive(alpha) {
            return Err(FieldError::NotPrimitive(alpha.0 as u64));
        }
        let mut ctx = self.clone();
        if let Arith::Extension { exp, log } = &mut ctx.arith {
            // Re-base the tables on the new generator.
            let shift = log[alpha.0 as usize] as u64;
            let order = self.q - 1;
            let old_exp = exp.clone();
            for e in 0..order {
                let v = old_exp[((e * shift) % order) as usize];
                exp[e as usize] = v;
                log[v as usize] = e as u32;
            }
        }
        ctx.alpha = alpha;
        Ok(ctx)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Monic modulus, coefficients low to high. `x` for prime fields.
    pub fn modulus_poly(&self) -> &[u64] {
        &self.modulus
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        self.one
    }

    /// Order of the multiplicative group.
    pub fn group_order(&self) -> u64 {
        self.q - 1
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q as u32).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q as u32).map(FieldElement)
    }

    /// The element with canonical index `i`.
    pub fn element(&self, i: u64) -> Result<FieldElement, FieldError> {
        if i >= self.q {
            return Err(FieldError::InvalidElement(i));
        }
        Ok(FieldElement(i as u32))
    }

    fn check(&self, b: FieldElement) -> Result<(), FieldError> {
        self.element(b.0 as u64).map(|_| ())
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    /// Coefficient vector over `F_p`, length `k`.
    pub fn coeffs(&self, b: FieldElement) -> Vec<u64> {
        let mut v = b.0 as u64;
        (0..self.degree)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    fn pack(&self, coeffs: &[u64]) -> FieldElement {
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            v = v * self.p + c;
        }
        FieldElement(v as u32)
    }

    fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.is_prime_field() {
            return FieldElement(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let sum: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.pack(&sum)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.is_prime_field() {
            return FieldElement(((self.p - a.0 as u64) % self.p) as u32);
        }
        let x: Vec<u64> = self
            .coeffs(a)
            .iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        self.pack(&x)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.arith {
            Arith::Prime => FieldElement(((a.0 as u64 * b.0 as u64) % self.p) as u32),
            Arith::Extension { exp, log } => {
                if a.is_zero() || b.is_zero() {
                    return FieldElement::ZERO;
                }
                let e = (log[a.0 as usize] as u64 + log[b.0 as usize] as u64) % (self.q - 1);
                FieldElement(exp[e as usize])
            }
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow_u64(a, self.q - 2))
    }

    /// `b^e` for a non-negative exponent; the exponent is reduced modulo
    /// `q - 1` for nonzero `b`. `0^0 = 1`.
    pub fn pow_u64(&self, b: FieldElement, e: u64) -> FieldElement {
        if b.is_zero() {
            return if e == 0 { self.one } else { FieldElement::ZERO };
        }
        let e = e % (self.q - 1);
        match &self.arith {
            Arith::Prime => FieldElement(mod_pow(b.0 as u64, e, self.p) as u32),
            Arith::Extension { exp, log } => {
                let l = (log[b.0 as usize] as u128 * e as u128) % (self.q as u128 - 1);
                FieldElement(exp[l as usize])
            }
        }
    }

    /// `b^e` for a signed exponent.
    pub fn pow(&self, b: FieldElement, e: i64) -> Result<FieldElement, FieldError> {
        if e >= 0 {
            return Ok(self.pow_u64(b, e as u64));
        }
        if b.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let r = (e as i128).rem_euclid(self.q as i128 - 1) as u64;
        Ok(self.pow_u64(b, r))
    }

    /// `b^e` for an arbitrary-precision exponent.
    pub fn pow_big(&self, b: FieldElement, e: &BigUint) -> FieldElement {
        if b.is_zero() {
            return if e == &BigUint::from(0u32) {
                self.one
            } else {
                FieldElement::ZERO
            };
        }
        let r = (e % BigUint::from(self.q - 1))
            .to_u64()
            .expect("reduced below q");
        self.pow_u64(b, r)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, b: FieldElement) -> Result<u64, FieldError> {
        if b.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let mut ord = self.q - 1;
        for (r, _) in factorize(self.q - 1) {
            while ord.is_multiple_of(r) && self.pow_u64(b, ord / r) == self.one {
                ord /= r;
            }
        }
        Ok(ord)
    }

    pub fn is_primitive(&self, b: FieldElement) -> bool {
        !b.is_zero() && self.order(b) == Ok(self.q - 1)
    }

    /// Smallest canonical representative generating `F_q^*`.
    pub fn find_primitive_element(&self) -> FieldElement {
        self.nonzero_elements()
            .find(|&b| self.is_primitive(b))
            .expect("every finite field has a primitive element")
    }

    /// The unique `e` in `[0, q-1)` with `alpha^e = b`.
    pub fn discrete_log(&self, b: FieldElement) -> Result<u64, FieldError> {
        if b.is_zero() {
            return Err(FieldError::ZeroHasNoLog);
        }
        self.check(b)?;
        if let Arith::Extension { log, .. } = &self.arith {
            return Ok(log[b.0 as usize] as u64);
        }
        let order = self.q - 1;
        if self.q < BRUTE_FORCE_LOG_LIMIT {
            let mut acc = self.one;
            for e in 0..order {
                if acc == b {
                    return Ok(e);
                }
                acc = self.mul(acc, self.alpha);
            }
            unreachable!("alpha generates the multiplicative group");
        }
        // Baby-step giant-step: alpha^(i*step + j) = b.
        let bs = self.baby_steps.get_or_init(|| {
            let step = (order as f64).sqrt().ceil() as u64;
            let mut table = HashMap::with_capacity(step as usize);
            let mut acc = self.one;
            for j in 0..step {
                table.entry(acc.0).or_insert(j as u32);
                acc = self.mul(acc, self.alpha);
            }
            BabySteps { table, step }
        });
        let giant = self.pow_u64(self.alpha, order - bs.step % order);
        let mut gamma = b;
        for i in 0..=bs.step {
            if let Some(&j) = bs.table.get(&gamma.0) {
                return Ok((i * bs.step + j as u64) % order);
            }
            gamma = self.mul(gamma, giant);
        }
        unreachable!("alpha generates the multiplicative group");
    }

    // Schoolbook product modulo the defining polynomial; only used while the
    // exp/log tables are being built.
    fn slow_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let k = self.degree as usize;
        let mut prod = vec![0u64; 2 * k];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        for i in (k..2 * k).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..=k {
                let sub = c * self.modulus[j] % self.p;
                prod[i - k + j] = (prod[i - k + j] + self.p - sub) % self.p;
            }
        }
        self.pack(&prod[..k])
    }

    fn slow_is_primitive(&self, b: FieldElement) -> bool {
        if b.is_zero() {
            return false;
        }
        let order = self.q - 1;
        let slow_pow = |mut e: u64| {
            let mut base = b;
            let mut acc = self.one;
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.slow_mul(acc, base);
                }
                base = self.slow_mul(base, base);
                e >>= 1;
            }
            acc
        };
        factorize(order)
            .into_iter()
            .all(|(r, _)| slow_pow(order / r) != self.one)
    }
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

// Remainder of `a` modulo the monic `m` over F_p; coefficients low to high.
fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - c * mj % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn poly_is_irreducible(p: u64, m: &[u64]) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for packed in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut v = packed;
            for _ in 0..d {
                divisor.push(v % p);
                v /= p;
            }
            divisor.push(1);
            if poly_rem(p, m, &divisor).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let count = p.pow(k);
    for packed in 0..count {
        let mut m = Vec::with_capacity(k as usize + 1);
        let mut v = packed;
        for _ in 0..k {
            m.push(v % p);
            v /= p;
        }
        m.push(1);
        if poly_is_irreducible(p, &m) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_generators() {
        assert_eq!(FieldCtx::prime(181).unwrap().alpha(), FieldElement(2));
        assert_eq!(FieldCtx::prime(2).unwrap().alpha(), FieldElement(1));
        assert_eq!(FieldCtx::prime(13).unwrap().alpha(), FieldElement(2));
        assert_eq!(FieldCtx::prime(4).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(FieldCtx::prime(1).unwrap_err(), FieldError::NotPrime(1));
    }

    #[test]
    fn pow_examples() {
        let f = FieldCtx::prime(181).unwrap();
        let two = f.from_int(2);
        assert_eq!(f.pow_u64(two, 180), f.one());
        assert_eq!(f.pow_u64(two, 108), f.from_int(125));
        let f13 = FieldCtx::prime(13).unwrap();
        assert_eq!(f13.pow_u64(f13.from_int(2), 6), f13.from_int(12));
        assert_eq!(f13.pow_u64(f13.zero(), 0), f13.one());
        assert_eq!(f13.pow_u64(f13.zero(), 5), f13.zero());
        assert_eq!(f13.pow(f13.zero(), -1), Err(FieldError::ZeroInverse));
        assert_eq!(f13.pow(f13.from_int(2), -1), Ok(f13.from_int(7)));
    }

    #[test]
    fn discrete_log_examples() {
        let f = FieldCtx::prime(181).unwrap();
        assert_eq!(f.discrete_log(f.one()), Ok(0));
        assert_eq!(f.discrete_log(f.from_int(2)), Ok(1));
        assert_eq!(f.discrete_log(f.from_int(125)), Ok(108));
        assert_eq!(f.discrete_log(f.zero()), Err(FieldError::ZeroHasNoLog));
    }

    #[test]
    fn bsgs_round_trip() {
        for p in [1009u64, 7919, 65537] {
            let f = FieldCtx::prime(p).unwrap();
            for b in f.nonzero_elements().step_by(7) {
                let e = f.discrete_log(b).unwrap();
                assert!(e < p - 1);
                assert_eq!(f.pow_u64(f.alpha(), e), b);
            }
        }
    }

    #[test]
    fn extension_field_basics() {
        let f = FieldCtx::extension(3, 2, None).unwrap();
        assert_eq!(f.q(), 9);
        assert_eq!(f.modulus_poly(), &[1, 0, 1]);
        assert!(f.is_primitive(f.alpha()));
        for b in f.nonzero_elements() {
            assert_eq!(f.pow_u64(f.alpha(), f.discrete_log(b).unwrap()), b);
            assert_eq!(f.mul(b, f.inv(b).unwrap()), f.one());
            for c in f.elements() {
                assert_eq!(f.mul(b, c), f.slow_mul(b, c));
            }
        }
        assert_eq!(
            FieldCtx::extension(2, 2, Some(vec![1, 0, 1])).unwrap_err(),
            FieldError::Reducible(vec![1, 0, 1])
        );
        assert!(FieldCtx::extension(2, 20, None).is_err());
    }

    #[test]
    fn regenerated_context_keeps_arithmetic() {
        let f = FieldCtx::extension(2, 4, None).unwrap();
        let other = f
            .nonzero_elements()
            .filter(|&b| f.is_primitive(b))
            .nth(2)
            .unwrap();
        let g = f.with_generator(other).unwrap();
        assert_eq!(g.alpha(), other);
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), g.mul(a, b));
            }
        }
        assert_eq!(g.discrete_log(other), Ok(1));
        assert!(matches!(
            f.with_generator(f.one()),
            Err(FieldError::NotPrimitive(1))
        ));
    }
}
