//! Primality, prime enumeration and prime search in arithmetic progressions.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

// Deterministic for every n < 2^64.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
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

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Deterministic primality: Miller-Rabin with a fixed base set below 2^64,
/// trial division above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let limit = n.sqrt();
    let mut d = BigUint::from(3u32);
    while d <= limit {
        if (n % &d).is_zero() {
            return false;
        }
        d += 2u32;
    }
    true
}

/// Least prime factor of `n >= 2`.
pub fn smallest_prime_factor(n: &BigUint) -> Option<BigUint> {
    if n <= &BigUint::one() {
        return None;
    }
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let limit = n.sqrt();
    let mut d = BigUint::from(3u32);
    while d <= limit {
        if (n % &d).is_zero() {
            return Some(d);
        }
        d += 2u32;
    }
    Some(n.clone())
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_support(n: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut n = n.clone();
    while let Some(p) = smallest_prime_factor(&n) {
        while (&n % &p).is_zero() {
            n /= &p;
        }
        out.push(p);
    }
    out
}

fn prime_cache() -> &'static Mutex<Vec<u64>> {
    static CACHE: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn sieve(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// The `n`-th prime, 1-indexed: `nth_prime(1) == 2`.
pub fn nth_prime(n: usize) -> u64 {
    assert!(n >= 1, "primes are 1-indexed");
    let mut cache = prime_cache().lock().expect("prime cache poisoned");
    if cache.len() < n {
        let mut limit = (cache.last().copied().unwrap_or(64) as usize).max(64);
        while cache.len() < n {
            limit *= 2;
            *cache = sieve(limit);
        }
    }
    cache[n - 1]
}

/// The `n`-th odd prime, 1-indexed: `nth_odd_prime(1) == 3`.
pub fn nth_odd_prime(n: usize) -> u64 {
    nth_prime(n + 1)
}

/// 1-based position of `p` in the sequence of primes, if `p` is prime.
pub fn prime_index(p: u64) -> Option<usize> {
    if !is_prime_u64(p) {
        return None;
    }
    let mut lo = 1;
    loop {
        if nth_prime(lo * 2) >= p {
            break;
        }
        lo *= 2;
    }
    let (mut lo, mut hi) = (1usize, lo * 2);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if nth_prime(mid) < p {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// Least `k` in `1..=max_steps` with `first + k*step` prime and greater than `floor`.
pub(crate) fn prime_in_progression_above(
    first: &BigUint,
    step: &BigUint,
    max_steps: u64,
    floor: &BigUint,
) -> Result<(u64, BigUint)> {
    let g = first.gcd(step);
    if !g.is_one() {
        return Err(Error::BadProgression { first: first.to_string(), step: step.to_string(), gcd: g.to_string() });
    }
    let mut term = first.clone();
    for k in 1..=max_steps {
        term += step;
        if &term > floor && is_prime(&term) {
            return Ok((k, term));
        }
    }
    Err(Error::NotFoundWithinLimit { what: format!("prime of the form {first} + k*{step}"), limit: max_steps })
}

/// Least `k` in `1..=max_steps` with `first + k*step` prime, and that prime.
pub fn prime_in_progression(first: &BigUint, step: &BigUint, max_steps: u64) -> Result<(u64, BigUint)> {
    if first.is_zero() || step.is_zero() {
        return Err(Error::NonPositive("progression terms must be positive".into()));
    }
    if max_steps == 0 {
        return Err(Error::NonPositive("max_steps".into()));
    }
    prime_in_progression_above(first, step, max_steps, &BigUint::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_primality_matches_trial_division() {
        for n in 0..5000u64 {
            assert_eq!(is_prime_u64(n), trial(n), "n = {n}");
        }
        assert!(is_prime_u64(97));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(403));
    }

    #[test]
    fn large_primality() {
        assert!(is_prime_u64(18446744073709551557)); // largest prime below 2^64
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to bases 2,3,5,7
        let m61 = (BigUint::one() << 61usize) - 1u32;
        assert!(is_prime(&m61));
        let big = BigUint::from(18446744073709551557u64) * 3u32;
        assert!(!is_prime(&big));
        assert!(!is_prime(&(BigUint::one() << 64usize)));
    }

    #[test]
    fn enumeration() {
        assert_eq!(nth_prime(1), 2);
        assert_eq!(nth_prime(3), 5);
        assert_eq!(nth_prime(100), 541);
        assert_eq!(nth_odd_prime(1), 3);
        assert_eq!(prime_index(541), Some(100));
        assert_eq!(prime_index(2), Some(1));
        assert_eq!(prime_index(9), None);
    }

    #[test]
    fn progression_examples() {
        let b = |x: u64| BigUint::from(x);
        assert_eq!(prime_in_progression(&b(3), &b(5), 100).unwrap(), (2, b(13)));
        assert_eq!(prime_in_progression(&b(5), &b(13), 100).unwrap(), (2, b(31)));
        assert!(matches!(prime_in_progression(&b(2), &b(4), 100), Err(Error::BadProgression { .. })));
        assert!(matches!(prime_in_progression(&b(3), &b(5), 1), Err(Error::NotFoundWithinLimit { .. })));
    }

    #[test]
    fn support() {
        let s = prime_support(&BigUint::from(360u32));
        assert_eq!(s, vec![BigUint::from(2u32), BigUint::from(3u32), BigUint::from(5u32)]);
        assert!(prime_support(&BigUint::one()).is_empty());
    }
}
