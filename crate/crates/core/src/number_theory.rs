//! Integer helpers: divisors, Möbius function, multiplicative order,
//! iterated gcd series and the coprime split of an integer relative to `n`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberTheoryError {
    #[error("{b} is not a unit modulo {d}")]
    NotCoprime { b: String, d: String },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("multiplicative order exceeds the search cap of {0} steps")]
    OrderCapExceeded(u64),
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut u: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= u {
        if u.is_multiple_of(p) {
            let mut e = 0;
            while u.is_multiple_of(p) {
                u /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if u > 1 {
        out.push((u, 1));
    }
    out
}

pub fn is_prime(u: u64) -> bool {
    if u < 2 {
        return false;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= u {
        if u.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// All positive divisors of `u`, ascending. `divisors(0)` is empty.
pub fn divisors(u: u64) -> Vec<u64> {
    if u == 0 {
        return Vec::new();
    }
    let mut divs = vec![1u64];
    for (p, e) in factorize(u) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// The Möbius function.
pub fn mobius(d: u64) -> i64 {
    assert!(d >= 1, "mobius is defined on positive integers");
    let mut sign = 1;
    for (_, e) in factorize(d) {
        if e > 1 {
            return 0;
        }
        sign = -sign;
    }
    sign
}

/// Least `t >= 1` with `b^t = 1 (mod d)`.
pub fn mult_order(b: u64, d: u64) -> Result<u64, NumberTheoryError> {
    mult_order_big(&BigUint::from(b), &BigUint::from(d), d.max(1))
}

/// Multiplicative order for arbitrary-precision operands. Successive
/// multiplication, at most `cap` steps.
pub fn mult_order_big(b: &BigUint, d: &BigUint, cap: u64) -> Result<u64, NumberTheoryError> {
    if d.is_zero() {
        return Err(NumberTheoryError::ZeroModulus);
    }
    if d.is_one() {
        return Ok(1);
    }
    let base = b % d;
    if !base.gcd(d).is_one() {
        return Err(NumberTheoryError::NotCoprime {
            b: b.to_string(),
            d: d.to_string(),
        });
    }
    let mut acc = base.clone();
    let mut t = 1u64;
    while !acc.is_one() {
        if t >= cap {
            return Err(NumberTheoryError::OrderCapExceeded(cap));
        }
        acc = (acc * &base) % d;
        t += 1;
    }
    Ok(t)
}

/// Split `total = omega * nu` where `omega` is the largest divisor of `total`
/// coprime to `n` and every prime of `nu` divides `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimeSplit {
    pub omega: u64,
    pub nu: u64,
}

pub fn coprime_split(total: u64, n: u64) -> CoprimeSplit {
    assert!(total >= 1);
    let mut omega = total;
    let mut nu = 1;
    loop {
        let g = omega.gcd(&n);
        if g == 1 {
            break;
        }
        omega /= g;
        nu *= g;
    }
    CoprimeSplit { omega, nu }
}

/// A non-increasing sequence of positive integers `(v_1, ..., v_D)`, as used
/// to index elementary trees. Entries past the end repeat `v_D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GcdSeries {
    entries: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("sequence must be non-empty")]
    Empty,
    #[error("entries must be positive")]
    NonPositive,
    #[error("sequence {0:?} is not non-increasing")]
    NotNonIncreasing(Vec<u64>),
}

impl GcdSeries {
    pub fn new(entries: Vec<u64>) -> Result<Self, SeriesError> {
        if entries.is_empty() {
            return Err(SeriesError::Empty);
        }
        if entries.contains(&0) {
            return Err(SeriesError::NonPositive);
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(SeriesError::NotNonIncreasing(entries));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `v_i` for `i >= 1`, extended by `v_i = v_D` past the end.
    pub fn get(&self, i: usize) -> u64 {
        assert!(i >= 1, "series is 1-indexed");
        self.entries
            .get(i - 1)
            .copied()
            .unwrap_or(*self.entries.last().expect("non-empty"))
    }

    /// `v_1 * ... * v_k`, with the empty product for `k = 0`.
    pub fn prefix_product(&self, k: usize) -> u128 {
        (1..=k).map(|i| self.get(i) as u128).product()
    }
}

/// The iterated gcd `gcd_n(v) = (v_1, ..., v_s)` with
/// `v_i = gcd(n^i, v) / gcd(n^(i-1), v)`, stopping at the first `v_s = 1`.
pub fn iterated_gcd(n: u64, v: u64) -> GcdSeries {
    assert!(n >= 1 && v >= 1);
    let mut entries = Vec::new();
    let mut prev = 1u128;
    loop {
        // gcd(n^i, v) = gcd(n * gcd(n^(i-1), v), v)
        let cur = (prev * n as u128).gcd(&(v as u128));
        let vi = (cur / prev) as u64;
        entries.push(vi);
        if vi == 1 {
            break;
        }
        prev = cur;
    }
    GcdSeries { entries }
}

/// `gcd(v, n^j)` without forming `n^j`.
pub fn gcd_with_power(v: u64, n: u64, j: u32) -> u64 {
    let mut g = 1u128;
    for _ in 0..j {
        let next = (g * n as u128).gcd(&(v as u128));
        if next == g {
            break;
        }
        g = next;
    }
    g as u64
}

pub fn big_pow(base: u64, exp: u64) -> BigUint {
    let exp = u32::try_from(exp).expect("exponent fits in u32");
    BigUint::from(base).pow(exp)
}
