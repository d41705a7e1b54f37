//! Finitely generated submonoids of the nonnegative integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::knapsack::Knapsack;

/// Upper bound on the membership table used by the Frobenius scan.
const FROBENIUS_SCAN_LIMIT: u128 = 500_000_000;

/// A submonoid of (N_0, +) given by a finite set of positive generators.
///
/// Generators are kept sorted and deduplicated. The monoid need not be
/// cofinite; only [`NumericalSemigroup::frobenius`] requires gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gens: Vec<BigUint>,
}

impl NumericalSemigroup {
    pub fn new<I, T>(gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let mut gens: Vec<BigUint> = gens.into_iter().map(Into::into).collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.iter().any(Zero::is_zero) {
            return Err(Error::NonPositive("generator 0".into()));
        }
        gens.sort();
        gens.dedup();
        Ok(Self { gens })
    }

    pub fn generators(&self) -> &[BigUint] {
        &self.gens
    }

    pub fn gcd(&self) -> BigUint {
        self.gens.iter().fold(BigUint::zero(), |g, x| g.gcd(x))
    }

    pub fn is_cofinite(&self) -> bool {
        self.gcd().is_one()
    }

    pub(crate) fn knapsack(&self) -> Knapsack {
        Knapsack::new(&self.gens)
    }

    /// The unique minimal generating set: a generator is dropped when it is a
    /// sum of smaller kept generators.
    pub fn minimal_generators(&self) -> Vec<BigUint> {
        let mut kept: Vec<BigUint> = Vec::new();
        for g in &self.gens {
            let redundant = !kept.is_empty() && Knapsack::new(&kept).contains(g);
            if !redundant {
                kept.push(g.clone());
            }
        }
        kept
    }

    pub fn contains(&self, x: &BigUint) -> bool {
        x.is_zero() || self.knapsack().contains(x)
    }

    /// One coefficient vector evaluating to `x`, ordered like `generators()`.
    pub fn witness(&self, x: &BigUint) -> Option<Vec<BigUint>> {
        self.knapsack().find_one(x)
    }

    /// All coefficient vectors `c` with `sum c_i g_i = x`, ordered like
    /// `generators()`. Sorted lexicographically with the coefficient of the
    /// largest generator most significant.
    pub fn representations(&self, x: &BigUint) -> Vec<Vec<BigUint>> {
        let mut reps = self.knapsack().all(x);
        reps.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        reps
    }

    /// Largest integer outside the monoid (−1 when the monoid is all of N_0).
    ///
    /// Two minimal generators use `ab − a − b`; otherwise the membership scan
    /// of [`NumericalSemigroup::frobenius_by_scan`].
    pub fn frobenius(&self) -> Result<BigInt> {
        self.require_cofinite()?;
        let mins = self.minimal_generators();
        match mins.as_slice() {
            [one] if one.is_one() => Ok(BigInt::from(-1)),
            [a, b] => Ok(BigInt::from(a * b) - BigInt::from(a.clone()) - BigInt::from(b.clone())),
            _ => self.frobenius_by_scan(),
        }
    }

    /// Frobenius number by a membership DP over 0, 1, 2, ..., stopping once
    /// `min(generators)` consecutive members have been seen.
    pub fn frobenius_by_scan(&self) -> Result<BigInt> {
        self.require_cofinite()?;
        let small: Vec<usize> = self
            .gens
            .iter()
            .map(|g| g.to_usize().ok_or_else(|| Error::TooLarge(format!("generator {g}"))))
            .collect::<Result<_>>()?;
        let least = small[0];
        let largest = *small.last().unwrap();
        // Schur's bound keeps the scan below least * largest.
        if (least as u128) * (largest as u128) > FROBENIUS_SCAN_LIMIT {
            return Err(Error::TooLarge(format!("Frobenius scan for {self}")));
        }
        let mut member: Vec<bool> = Vec::with_capacity(least * largest.max(2));
        let mut run = 0usize;
        let mut last_gap: i64 = -1;
        let mut n = 0usize;
        while run < least {
            let is_member = n == 0 || small.iter().any(|&g| g <= n && member[n - g]);
            member.push(is_member);
            if is_member {
                run += 1;
            } else {
                run = 0;
                last_gap = n as i64;
            }
            n += 1;
        }
        Ok(BigInt::from(last_gap))
    }

    fn require_cofinite(&self) -> Result<()> {
        let g = self.gcd();
        if g.is_one() {
            Ok(())
        } else {
            Err(Error::NotCofinite(g.to_string()))
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Comma-separated positive integers, e.g. `4,9`.
    fn from_str(s: &str) -> Result<Self> {
        let gens = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad generator {t:?}")));
                }
                t.parse::<BigUint>().map_err(|e| Error::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }
}
