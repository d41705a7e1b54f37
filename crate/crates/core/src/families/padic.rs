//! p-adic families: monotonicity from the closed form, atom extraction for
//! prime-power numerators, and the identities of the paired antimatter example.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;

use super::spec::{FamilySpec, IntSeq};
use crate::error::{Error, Result};
use crate::identity::{Identity, Term};
use crate::primes::is_prime_u64;
use crate::rational::PositiveRational;

/// Long-run behaviour of a p-adic generating sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Trend {
    /// `r_{n+1} < r_n` for every `n`.
    pub decreasing: Option<bool>,
    /// `r_n -> 0`, i.e. 0 is a limit point of the generators.
    pub tends_to_zero: Option<bool>,
}

const UNKNOWN: Trend = Trend { decreasing: None, tends_to_zero: None };

fn parts(spec: &FamilySpec) -> Option<(u64, &IntSeq, &IntSeq)> {
    match spec {
        FamilySpec::PAdic { p, numerators, exponents } => Some((*p, numerators, exponents)),
        _ => None,
    }
}

fn strictly_decreasing_over(spec: &FamilySpec, from: u64, to: u64) -> Result<bool> {
    let mut prev = spec.generator_at(from)?;
    for n in from + 1..=to {
        let next = spec.generator_at(n)?;
        if next >= prev {
            return Ok(false);
        }
        prev = next;
    }
    Ok(true)
}

/// Steps scanned past the explicit prefix before giving up.
const TAIL_SCAN: u64 = 64;

/// Decided exactly on the explicit prefix, then on the closed form. There the
/// numerator ratio never increases and the exponent gap never shrinks, so one
/// step with `r_{n+1} < r_n` forces geometric decay from then on.
pub fn trend(spec: &FamilySpec) -> Trend {
    let Some((p, num, exp)) = parts(spec) else {
        return UNKNOWN;
    };
    if spec.validate().is_err() {
        return UNKNOWN;
    }
    if let Some(len) = spec.len() {
        let decreasing = strictly_decreasing_over(spec, 1, len.max(1)).ok();
        return Trend { decreasing, tends_to_zero: Some(false) };
    }
    let (Some(a), Some(b)) = (num.closed_form_from(), exp.closed_form_from()) else {
        return UNKNOWN;
    };
    let k = a.max(b);
    let steady = num.ratio_is_constant() && exp.difference_is_constant();
    let decays_at = |j: u64| -> Result<bool> {
        let gap = exp.eval(j + 1)? - exp.eval(j)?;
        let gap = u32::try_from(gap).map_err(|_| Error::TooLarge("exponent gap".into()))?;
        let scale: BigUint = Pow::pow(BigUint::from(p), gap);
        Ok(num.eval(j + 1)? < num.eval(j)? * scale)
    };
    for j in k..k + TAIL_SCAN {
        match decays_at(j) {
            Ok(true) => {
                let decreasing = strictly_decreasing_over(spec, 1, j + 1).ok();
                return Trend { decreasing, tends_to_zero: Some(true) };
            }
            // a constant ratio at least the constant scale: r_{n+1} >= r_n forever
            Ok(false) if steady => return Trend { decreasing: Some(false), tends_to_zero: Some(false) },
            Ok(false) => {}
            Err(_) => return UNKNOWN,
        }
    }
    let decreasing = match strictly_decreasing_over(spec, 1, k + TAIL_SCAN) {
        Ok(false) => Some(false),
        _ => None,
    };
    Trend { decreasing, tends_to_zero: None }
}

/// An excluded generator rewritten over a kept one: `r_index = coeff * r_via`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Excluded {
    pub index: u64,
    pub via: u64,
    /// `p^(alpha_via - alpha_index)`
    pub p_power: u64,
    /// `q^(beta_index - beta_via)`
    pub q_power: u64,
    pub identity: Identity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PadicAtoms {
    pub p: u64,
    pub q: u64,
    /// Indices `i <= N` whose numerator is below every later numerator.
    pub kept: Vec<u64>,
    pub excluded: Vec<Excluded>,
    /// Whether the generators decrease; atomicity of the full monoid needs `Some(true)`.
    pub decreasing: Option<bool>,
}

fn log_base(x: &BigUint, q: u64) -> u64 {
    let mut x = x.clone();
    let mut e = 0;
    while x > BigUint::one() {
        x /= q;
        e += 1;
    }
    e
}

/// Kept and excluded generator indices up to `n` for a p-adic family whose
/// numerators are powers of a prime `q != p` tending to infinity.
pub fn padic_candidate_atoms(spec: &FamilySpec, n: u64) -> Result<PadicAtoms> {
    let (p, num, exp) = parts(spec).ok_or_else(|| Error::HypothesisViolated("family is not p-adic".into()))?;
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if !exp.is_strictly_increasing() {
        return Err(Error::HypothesisViolated(format!("exponents {exp} are not strictly increasing")));
    }
    let q = match num.prime_power_base() {
        Some(q) if q != p => q,
        _ => {
            return Err(Error::HypothesisViolated(format!(
                "numerators {num} are not powers of a single prime other than {p}"
            )))
        }
    };
    if num.tends_to_infinity() != Some(true) {
        return Err(Error::HypothesisViolated(format!("numerators {num} are bounded")));
    }
    spec.validate()?;
    // beyond `from` the numerators never decrease
    let from = num.closed_form_from().expect("unbounded numerators have a closed form");
    let mut kept = Vec::new();
    let mut excluded = Vec::new();
    for i in 1..=n {
        let ni = num.eval(i)?;
        let horizon = from.max(i + 1);
        let mut is_kept = true;
        for j in i + 1..=horizon {
            if num.eval(j)? <= ni {
                is_kept = false;
                break;
            }
        }
        if is_kept {
            kept.push(i);
            continue;
        }
        // the last index whose numerator does not exceed n_i
        let mut m = i;
        let mut j = i + 1;
        loop {
            if num.eval(j)? <= ni {
                m = j;
            } else if j >= from {
                break;
            }
            j += 1;
        }
        let p_power = (exp.eval(m)? - exp.eval(i)?).try_into().map_err(|_| Error::TooLarge("exponent".into()))?;
        let q_power = log_base(&ni, q) - log_base(&num.eval(m)?, q);
        let coeff: BigUint = Pow::pow(BigUint::from(p), p_power as u32) * Pow::pow(BigUint::from(q), q_power as u32);
        let identity =
            Identity::new(vec![Term::single(spec.generator_at(i)?)], vec![Term::new(coeff, spec.generator_at(m)?)])
                .verified()?;
        excluded.push(Excluded { index: i, via: m, p_power, q_power, identity });
    }
    Ok(PadicAtoms { p, q, kept, excluded, decreasing: trend(spec).decreasing })
}

/// For the paired example at `n`: the pair sums to `2/p^(2^n)`, and each member
/// is `(p^(2^n) -+ 1)/2` copies of `2/p^(2^(n+1))`.
pub fn paired_padic_identities(p: u64, n: u32) -> Result<[Identity; 3]> {
    let spec = FamilySpec::PairedPAdic { p };
    let minus = spec.generator_at(2 * n as u64 - 1)?;
    let plus = spec.generator_at(2 * n as u64)?;
    let half: BigUint = Pow::pow(BigUint::from(p), 1u32 << n);
    let two = BigUint::from(2u32);
    let outer = PositiveRational::from_biguints(two.clone(), half.clone())?;
    let inner = PositiveRational::from_biguints(two, &half * &half)?;
    let sum = Identity::new(vec![Term::single(outer)], vec![Term::single(minus.clone()), Term::single(plus.clone())]);
    let lo = Identity::new(vec![Term::single(minus)], vec![Term::new((&half - 1u32) / 2u32, inner.clone())]);
    let hi = Identity::new(vec![Term::single(plus)], vec![Term::new((&half + 1u32) / 2u32, inner)]);
    Ok([sum.verified()?, lo.verified()?, hi.verified()?])
}
