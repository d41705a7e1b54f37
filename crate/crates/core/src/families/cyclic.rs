//! Multiplicatively cyclic monoids `<r, r^2, r^3, ...>` and their
//! generalizations over several bases.
//!
//! With `a = n(r)` and `b = d(r)`, every element is `(sum c_t a^t b^(T-t)) / b^T`,
//! so its denominator is supported on the primes of `b` and, when `a >= 2`, its
//! numerator is a multiple of `a`. Trades `a * r^t = b * r^(t+1)` connect factorizations.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::fg::FgMonoid;
use crate::identity::{Identity, Term};
use crate::primes::smallest_prime_factor;
use crate::rational::{NonNegRational, PositiveRational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum CyclicMembership {
    Member {
        factorization: Factorization,
    },
    NonMember {
        certificate: String,
    },
    /// no representation with exponents up to `cap`, and no certificate applies
    UnknownUpTo {
        cap: u32,
    },
}

fn powers(r: &PositiveRational, upto: u32) -> Vec<PositiveRational> {
    (1..=upto).map(|t| r.pow(t)).collect()
}

/// Largest `t` with `r^t <= x`, for `r > 1`.
fn intrinsic_bound(r: &PositiveRational, x: &NonNegRational) -> u32 {
    let mut t = 0;
    let mut power = r.clone();
    while *x >= power {
        t += 1;
        power = &power * r;
    }
    t
}

/// A certificate that `x` is not in `<r^n>`, from denominators or numerators.
fn certificate(r: &PositiveRational, x: &NonNegRational) -> Option<String> {
    let (a, b) = (r.numerator(), r.denominator());
    // strip from d(x) every prime shared with b
    let mut d = x.denominator().clone();
    loop {
        let g = d.gcd(b);
        if g.is_one() {
            break;
        }
        d /= g;
    }
    if !d.is_one() {
        return Some(format!(
            "denominator {} of {x} has a prime factor of {d} not dividing d(r) = {b}",
            x.denominator()
        ));
    }
    if *a >= BigUint::from(2u32) && !x.is_zero() && !(x.numerator() % a).is_zero() {
        return Some(format!("n(r) = {a} does not divide n(x) = {}", x.numerator()));
    }
    None
}

/// Members get the witness whose largest exponent is least. For `r > 1` exponents
/// are bounded by `r^t <= x` and the answer is always definitive.
pub fn cyclic_contains(r: &PositiveRational, x: &NonNegRational, cap: u32) -> Result<CyclicMembership> {
    if cap == 0 {
        return Err(Error::Precondition("exponent cap must be positive".into()));
    }
    if x.is_zero() {
        return Ok(CyclicMembership::Member { factorization: Factorization::new() });
    }
    if let Some(certificate) = certificate(r, x) {
        return Ok(CyclicMembership::NonMember { certificate });
    }
    let (a, b) = (r.numerator(), r.denominator());
    if a.is_one() {
        // x = c / b^T with T >= 1: c copies of r^T
        let mut t = 1u32;
        while !(&b.pow(t) % x.denominator()).is_zero() {
            t += 1;
        }
        let c = x.numerator() * (b.pow(t) / x.denominator());
        return Ok(CyclicMembership::Member { factorization: Factorization::from_terms([(r.pow(t), c)]) });
    }
    if b.is_one() {
        let c = x.numerator() / a;
        return Ok(CyclicMembership::Member { factorization: Factorization::from_terms([(r.clone(), c)]) });
    }
    let upto = if a > b { intrinsic_bound(r, x) } else { cap };
    for t in 1..=upto {
        let monoid = FgMonoid::new(powers(r, t))?;
        if let Some(factorization) = monoid.membership_witness(x) {
            return Ok(CyclicMembership::Member { factorization });
        }
    }
    if a > b {
        Ok(CyclicMembership::NonMember { certificate: format!("exhaustive over exponents t with r^t <= {x}") })
    } else {
        Ok(CyclicMembership::UnknownUpTo { cap })
    }
}

/// Coefficient of `r^t` in `z`.
fn coeff(z: &Factorization, r: &PositiveRational, t: u32) -> BigUint {
    z.multiplicity(&r.pow(t))
}

/// Compares coefficient vectors with the highest exponent most significant.
fn cyclic_cmp(r: &PositiveRational, top: u32, x: &Factorization, y: &Factorization) -> Ordering {
    (1..=top).rev().map(|t| coeff(x, r, t).cmp(&coeff(y, r, t))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

/// All factorizations of `x` into atoms `r^t`, `t <= cap`, ascending with the
/// highest exponent most significant. For `r > 1` and `cap` past the intrinsic
/// bound this is the whole factorization set.
pub fn cyclic_factorizations(r: &PositiveRational, x: &NonNegRational, cap: u32) -> Result<Vec<Factorization>> {
    if cap == 0 {
        return Err(Error::Precondition("exponent cap must be positive".into()));
    }
    let (a, b) = (r.numerator(), r.denominator());
    if b.is_one() {
        // atoms {r}
        if x.denominator().is_one() && (x.numerator() % a).is_zero() {
            let z = Factorization::from_terms([(r.clone(), x.numerator() / a)]);
            return Ok(vec![z]);
        }
        return Ok(Vec::new());
    }
    if a.is_one() {
        return Err(Error::NotAtomic(r.to_string()));
    }
    if x.is_zero() {
        return Ok(vec![Factorization::new()]);
    }
    let top = if a > b { cap.min(intrinsic_bound(r, x)) } else { cap };
    if top == 0 {
        return Ok(Vec::new());
    }
    let mut all = FgMonoid::new(powers(r, top))?.factorizations(x);
    all.sort_by(|y, z| cyclic_cmp(r, top, y, z));
    Ok(all)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TradeDirection {
    /// `a` copies of `r^t` become `b` copies of `r^(t+1)`
    Up,
    /// `b` copies of `r^(t+1)` become `a` copies of `r^t`
    Down,
}

impl std::str::FromStr for TradeDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "up" => Ok(TradeDirection::Up),
            "down" => Ok(TradeDirection::Down),
            _ => Err(Error::Parse(format!("trade direction must be up or down, got {s:?}"))),
        }
    }
}

/// Applies `n(r) * r^t = d(r) * r^(t+1)` in the given direction.
pub fn cyclic_trade(r: &PositiveRational, z: &Factorization, t: u32, dir: TradeDirection) -> Result<Factorization> {
    if t == 0 {
        return Err(Error::Precondition("trade exponent must be positive".into()));
    }
    let (a, b) = (r.numerator(), r.denominator());
    let (from, give, to, get) = match dir {
        TradeDirection::Up => (r.pow(t), a, r.pow(t + 1), b),
        TradeDirection::Down => (r.pow(t + 1), b, r.pow(t), a),
    };
    let mut out = z.clone();
    if !out.remove(&from, give) {
        return Err(Error::InsufficientMultiplicity {
            atom: from.to_string(),
            have: z.multiplicity(&from).to_string(),
            need: give.to_string(),
        });
    }
    out.add(to, get);
    debug_assert_eq!(out.evaluate(), z.evaluate());
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// smallest prime dividing every numerator
    pub p: u64,
    /// `p / (d(r_1) ... d(r_k))`
    pub base: PositiveRational,
    #[serde(serialize_with = "crate::factorization::serialize_uint")]
    pub coefficient: BigUint,
    /// `r_i^m = coefficient * base^m`
    pub identity: Identity,
}

/// `r_i^m = C (p/D)^m` with `C = (n(r_i)/p)^m prod_{j != i} d(r_j)^m`, placing each
/// generator inside the cyclic monoid of `p/D`; `i` is 1-based.
pub fn generalized_cyclic_embed(rs: &[PositiveRational], i: usize, m: u32) -> Result<Embedding> {
    if rs.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if i == 0 || i > rs.len() {
        return Err(Error::BadIndex { index: i as u64, len: rs.len() as u64 });
    }
    if m == 0 {
        return Err(Error::Precondition("power m must be positive".into()));
    }
    let g = rs.iter().fold(BigUint::zero(), |g, r| g.gcd(r.numerator()));
    if g.is_one() {
        return Err(Error::GcdOne);
    }
    let p = smallest_prime_factor(&g).expect("gcd above one has a prime factor");
    let d: BigUint = rs.iter().map(|r| r.denominator().clone()).product();
    let base = PositiveRational::from_biguints(p.clone(), d)?;
    let q_i = rs[i - 1].numerator() / &p;
    let others: BigUint =
        rs.iter().enumerate().filter(|&(j, _)| j != i - 1).map(|(_, r)| r.denominator().clone()).product();
    let coefficient: BigUint = Pow::pow(q_i * others, m);
    let identity =
        Identity::new(vec![Term::single(rs[i - 1].pow(m))], vec![Term::new(coefficient.clone(), base.pow(m))])
            .verified()?;
    let p = p.to_u64().ok_or_else(|| Error::TooLarge(format!("prime {p}")))?;
    Ok(Embedding { p, base, coefficient, identity })
}
