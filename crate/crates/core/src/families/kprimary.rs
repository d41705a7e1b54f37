//! Witnesses for the k-primary families: the prime-progression decomposition
//! that leaves no atoms, and exhaustive atom checks for the sum family.

use num_bigint::BigUint;
use serde::Serialize;

use super::spec::{colex_subset, FamilySpec};
use crate::error::{Error, Result};
use crate::fg::FgMonoid;
use crate::identity::{Identity, Term};
use crate::primes::{is_prime_u64, nth_odd_prime, nth_prime, prime_in_progression_above};
use crate::rational::PositiveRational;

/// `p'q' = m q q' + n p p' + p q` with `p' = p + m q` and `q' = q + n p'` prime,
/// which splits `1/(p q R)` into three strictly smaller generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntimatterWitness {
    pub p: u64,
    pub q: u64,
    pub m: u64,
    #[serde(serialize_with = "crate::factorization::serialize_uint")]
    pub p_prime: BigUint,
    pub n: u64,
    #[serde(serialize_with = "crate::factorization::serialize_uint")]
    pub q_prime: BigUint,
    /// product of the remaining primes `R`
    #[serde(serialize_with = "crate::factorization::serialize_uint")]
    pub rest: BigUint,
    pub integer_identity: Identity,
    pub decomposition: Identity,
}

/// Searches `p' = p + m q` for `m <= limit`, then `q' = q + n p'` for `n <= limit`,
/// with `p = min`, `q` the second smallest, `p' > max` and `q' > p'`.
pub fn kprimary_antimatter_witness(primes: &[u64], limit: u64) -> Result<AntimatterWitness> {
    if primes.len() < 2 {
        return Err(Error::Precondition(format!("need at least two primes, got {}", primes.len())));
    }
    for &p in primes {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition(format!("primes {primes:?} are not distinct")));
    }
    let (p, q) = (sorted[0], sorted[1]);
    let rest: BigUint = sorted[2..].iter().map(|&r| BigUint::from(r)).product();
    let max = BigUint::from(*sorted.last().expect("at least two primes"));
    let (bp, bq) = (BigUint::from(p), BigUint::from(q));
    let (m, p_prime) = prime_in_progression_above(&bp, &bq, limit, &max)?;
    let (n, q_prime) = prime_in_progression_above(&bq, &p_prime, limit, &p_prime)?;

    let big = |x: BigUint| PositiveRational::from_biguints(x, BigUint::from(1u32)).expect("positive");
    let integer_identity = Identity::new(
        vec![Term::single(big(&p_prime * &q_prime))],
        vec![Term::new(m, big(&bq * &q_prime)), Term::new(n, big(&bp * &p_prime)), Term::single(big(&bp * &bq))],
    )
    .verified()?;
    let unit = |d: BigUint| PositiveRational::unit_fraction(d * &rest);
    let decomposition = Identity::new(
        vec![Term::single(unit(&bp * &bq))],
        vec![
            Term::new(m, unit(&bp * &p_prime)),
            Term::new(n, unit(&bq * &q_prime)),
            Term::single(unit(&p_prime * &q_prime)),
        ],
    )
    .verified()?;
    Ok(AntimatterWitness { p, q, m, p_prime, n, q_prime, rest, integer_identity, decomposition })
}

/// `1/2^n = p_n * (1/(2^n p_n))`, `p_n` the `n`-th odd prime: the power-of-two
/// elements lie in the monoid without being atoms of it.
pub fn two_adic_identity(n: u32) -> Result<Identity> {
    let pn = nth_odd_prime(n as usize);
    let two_n = BigUint::from(1u32) << n;
    Identity::new(
        vec![Term::single(PositiveRational::unit_fraction(two_n.clone()))],
        vec![Term::new(pn, PositiveRational::unit_fraction(two_n * pn))],
    )
    .verified()
}

/// `sum_{s in S} 1/p_s`.
fn sum_generator(subset: &[u64]) -> PositiveRational {
    let mut total = PositiveRational::unit_fraction(nth_prime(subset[0] as usize));
    for &s in &subset[1..] {
        total = &total + &PositiveRational::unit_fraction(nth_prime(s as usize));
    }
    total
}

/// Whether `a_S` lies outside the monoid generated by every other `a_T`,
/// `T` a k-subset of `{1..=n}`; only generators `a_T <= a_S` can contribute.
pub fn sum_kprimary_atom_check(k: u32, subset: &[u64], n: u64) -> Result<bool> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if k == 0 || s.len() != k as usize || s.len() != subset.len() {
        return Err(Error::Precondition(format!("{subset:?} is not a {k}-subset")));
    }
    if s[0] == 0 || *s.last().expect("nonempty") > n {
        return Err(Error::Precondition(format!("{subset:?} is not within 1..={n}")));
    }
    let a_s = sum_generator(&s);
    let spec = FamilySpec::SumKPrimary { k };
    let mut others = Vec::new();
    let mut rank = 0u128;
    loop {
        let t = colex_subset(k, rank);
        if *t.last().expect("nonempty") > n {
            break;
        }
        if t != s {
            let a_t = spec.generator_at(rank as u64 + 1)?;
            debug_assert_eq!(a_t, sum_generator(&t));
            if a_t <= a_s {
                others.push(a_t);
            }
        }
        rank += 1;
    }
    Ok(!FgMonoid::from_list(others).contains(&a_s.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::spec::colex_rank;

    #[test]
    fn antimatter_examples() {
        let w = kprimary_antimatter_witness(&[3, 5], 10_000).unwrap();
        assert_eq!((w.m, w.n), (2, 2));
        assert_eq!((w.p_prime.clone(), w.q_prime.clone()), (13u32.into(), 31u32.into()));
        assert_eq!(w.integer_identity.to_string(), "403/1 = 2*(155/1) + 2*(39/1) + 15/1");
        assert_eq!(w.decomposition.to_string(), "1/15 = 2*(1/39) + 2*(1/155) + 1/403");

        let w = kprimary_antimatter_witness(&[7, 3, 5], 10_000).unwrap();
        assert_eq!((w.m, w.n), (2, 2));
        assert_eq!(w.decomposition.to_string(), "1/105 = 2*(1/273) + 2*(1/1085) + 1/2821");

        assert!(matches!(kprimary_antimatter_witness(&[3], 10_000), Err(Error::Precondition(_))));
        assert!(matches!(kprimary_antimatter_witness(&[3, 3], 10_000), Err(Error::Precondition(_))));
        assert!(matches!(kprimary_antimatter_witness(&[3, 9], 10_000), Err(Error::NotPrime(_))));
        assert!(matches!(kprimary_antimatter_witness(&[3, 5], 1), Err(Error::NotFoundWithinLimit { .. })));
    }

    #[test]
    fn every_truncation_generator_decomposes() {
        for k in 2..=3u32 {
            let spec = FamilySpec::ElementaryKPrimary { k };
            for rank in 0..20u128 {
                let primes: Vec<u64> = colex_subset(k, rank).iter().map(|&i| nth_prime(i as usize)).collect();
                let w = kprimary_antimatter_witness(&primes, 10_000).unwrap();
                assert_eq!(w.decomposition.lhs_value(), spec.generator_at(rank as u64 + 1).unwrap());
                assert!(w.q_prime > w.p_prime && w.p_prime > BigUint::from(*primes.iter().max().unwrap()));
            }
        }
    }

    #[test]
    fn two_adic() {
        assert_eq!(two_adic_identity(1).unwrap().to_string(), "1/2 = 3*(1/6)");
        assert_eq!(two_adic_identity(3).unwrap().to_string(), "1/8 = 7*(1/56)");
    }

    #[test]
    fn sum_atom_examples() {
        assert!(sum_kprimary_atom_check(2, &[1, 2], 4).unwrap());
        assert!(sum_kprimary_atom_check(1, &[1], 3).unwrap());
        assert!(sum_kprimary_atom_check(2, &[1, 2], 2).unwrap());
        assert!(matches!(sum_kprimary_atom_check(2, &[1, 5], 4), Err(Error::Precondition(_))));
        assert!(matches!(sum_kprimary_atom_check(2, &[1], 4), Err(Error::Precondition(_))));
        for rank in 0..10u128 {
            let s = colex_subset(2, rank);
            assert_eq!(colex_rank(&s), rank);
            assert!(sum_kprimary_atom_check(2, &s, 5).unwrap());
        }
    }
}
