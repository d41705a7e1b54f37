//! Closed-form descriptors of infinite generating sequences.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fg::FgMonoid;
use crate::primes::{is_prime_u64, nth_odd_prime, nth_prime, prime_support};
use crate::rational::PositiveRational;

/// Largest exponent any closed form may produce.
const MAX_EXPONENT: u64 = 1 << 24;

fn exponent(e: u64) -> Result<u32> {
    if e > MAX_EXPONENT {
        return Err(Error::TooLarge(format!("exponent {e}")));
    }
    Ok(e as u32)
}

fn big_pow(base: u64, e: u64) -> Result<BigUint> {
    Ok(Pow::pow(BigUint::from(base), exponent(e)?))
}

/// A nonnegative integer sequence indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IntSeq {
    /// `c`
    Constant { c: u64 },
    /// `c * q^n`
    Geometric { c: u64, q: u64 },
    /// `q^n`
    Power { q: u64 },
    /// `q^(a*n + b)`
    AffineExponent { q: u64, a: u64, b: i64 },
    /// `a*n + b`
    Affine { a: u64, b: i64 },
    /// `values[n-1]` for `n <= values.len()`, then `tail(n)`; without a tail
    /// the sequence is finite.
    Explicit {
        values: Vec<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tail: Option<Box<IntSeq>>,
    },
}

/// Whether every term is a power of one prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Base {
    /// every term so far is 1
    Any,
    Prime(u64),
}

fn prime_power_base(x: u64) -> Option<Base> {
    if x == 0 {
        return None;
    }
    if x == 1 {
        return Some(Base::Any);
    }
    let support = prime_support(&BigUint::from(x));
    match support.as_slice() {
        [q] => Some(Base::Prime(q.to_u64().unwrap())),
        _ => None,
    }
}

fn merge(a: Option<Base>, b: Option<Base>) -> Option<Base> {
    match (a?, b?) {
        (Base::Any, x) | (x, Base::Any) => Some(x),
        (Base::Prime(p), Base::Prime(q)) => (p == q).then_some(Base::Prime(p)),
    }
}

impl IntSeq {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Precondition(format!("sequence {self}: {m}")));
        match self {
            IntSeq::Geometric { q, .. } | IntSeq::Power { q } | IntSeq::AffineExponent { q, .. } if *q == 0 => {
                bad("base must be positive")
            }
            IntSeq::AffineExponent { a, b, .. } | IntSeq::Affine { a, b } if (*a as i128) + (*b as i128) < 0 => {
                bad("first term is negative")
            }
            IntSeq::Explicit { tail: Some(t), .. } => t.validate(),
            _ => Ok(()),
        }
    }

    /// The `n`-th term, `n >= 1`.
    pub fn eval(&self, n: u64) -> Result<BigUint> {
        if n == 0 {
            return Err(Error::Precondition("sequences are indexed from 1".into()));
        }
        let affine = |a: u64, b: i64| -> Result<u64> {
            let v = a as i128 * n as i128 + b as i128;
            u64::try_from(v).map_err(|_| Error::Precondition(format!("term {n} of {self} is negative")))
        };
        match self {
            IntSeq::Constant { c } => Ok(BigUint::from(*c)),
            IntSeq::Geometric { c, q } => Ok(big_pow(*q, n)? * *c),
            IntSeq::Power { q } => big_pow(*q, n),
            IntSeq::AffineExponent { q, a, b } => big_pow(*q, affine(*a, *b)?),
            IntSeq::Affine { a, b } => Ok(BigUint::from(affine(*a, *b)?)),
            IntSeq::Explicit { values, tail } => match values.get(n as usize - 1) {
                Some(v) => Ok(BigUint::from(*v)),
                None => match tail {
                    Some(t) => t.eval(n),
                    None => Err(Error::BadIndex { index: n, len: values.len() as u64 }),
                },
            },
        }
    }

    /// Number of terms, `None` when infinite.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<u64> {
        match self {
            IntSeq::Explicit { values, tail: None } => Some(values.len() as u64),
            _ => None,
        }
    }

    /// First index from which the sequence follows a pure closed form
    /// (`None` for finite sequences).
    pub fn closed_form_from(&self) -> Option<u64> {
        match self {
            IntSeq::Explicit { values, tail } => {
                let t = tail.as_ref()?;
                Some((values.len() as u64 + 1).max(t.closed_form_from()?))
            }
            _ => Some(1),
        }
    }

    /// Whether the infinite sequence is bounded; `None` for finite sequences.
    pub fn is_bounded(&self) -> Option<bool> {
        Some(match self {
            IntSeq::Constant { .. } => true,
            IntSeq::Geometric { c, q } => *c == 0 || *q <= 1,
            IntSeq::Power { q } => *q <= 1,
            IntSeq::AffineExponent { q, a, .. } => *q <= 1 || *a == 0,
            IntSeq::Affine { a, .. } => *a == 0,
            IntSeq::Explicit { tail, .. } => return tail.as_ref()?.is_bounded(),
        })
    }

    /// Whether the terms tend to infinity; `None` for finite sequences.
    /// Every closed form is eventually monotone, so this is `!is_bounded`.
    pub fn tends_to_infinity(&self) -> Option<bool> {
        self.is_bounded().map(|b| !b)
    }

    fn base(&self) -> Option<Base> {
        match self {
            IntSeq::Constant { c } => prime_power_base(*c),
            IntSeq::Geometric { c, q } => merge(prime_power_base(*c), prime_power_base(*q)),
            IntSeq::Power { q } | IntSeq::AffineExponent { q, .. } => prime_power_base(*q),
            IntSeq::Affine { a: 0, b } => prime_power_base(u64::try_from(*b).ok()?),
            IntSeq::Affine { .. } => None,
            IntSeq::Explicit { values, tail } => {
                let prefix = values.iter().try_fold(Base::Any, |acc, v| merge(Some(acc), prime_power_base(*v)));
                match tail {
                    Some(t) => merge(prefix, t.base()),
                    None => prefix,
                }
            }
        }
    }

    /// The prime `q` such that every term is a power of `q`.
    pub fn prime_power_base(&self) -> Option<u64> {
        match self.base()? {
            Base::Prime(q) => Some(q),
            Base::Any => None,
        }
    }

    /// Strict monotonicity over the whole sequence, decided from the closed form.
    pub fn is_strictly_increasing(&self) -> bool {
        match self {
            IntSeq::Constant { .. } => false,
            IntSeq::Geometric { c, q } => *c > 0 && *q >= 2,
            IntSeq::Power { q } => *q >= 2,
            IntSeq::AffineExponent { q, a, .. } => *q >= 2 && *a > 0,
            IntSeq::Affine { a, .. } => *a > 0,
            IntSeq::Explicit { values, tail } => {
                let prefix = values.windows(2).all(|w| w[0] < w[1]);
                match tail {
                    None => prefix,
                    Some(t) => {
                        let join = match values.last() {
                            Some(&last) => t.eval(values.len() as u64 + 1).is_ok_and(|v| v > BigUint::from(last)),
                            None => true,
                        };
                        prefix && join && t.is_strictly_increasing()
                    }
                }
            }
        }
    }

    /// Whether `s(n+1)/s(n)` is the same for every `n` in the closed-form part.
    /// For every closed form the ratio is non-increasing in `n`.
    pub(crate) fn ratio_is_constant(&self) -> bool {
        match self {
            IntSeq::Affine { a, .. } => *a == 0,
            IntSeq::Explicit { tail: Some(t), .. } => t.ratio_is_constant(),
            IntSeq::Explicit { tail: None, .. } => false,
            _ => true,
        }
    }

    /// Whether `s(n+1) - s(n)` is the same for every `n` in the closed-form part.
    /// For every closed form the difference is non-decreasing in `n`.
    pub(crate) fn difference_is_constant(&self) -> bool {
        match self {
            IntSeq::Constant { .. } | IntSeq::Affine { .. } => true,
            IntSeq::Geometric { c, q } => *c == 0 || *q == 1,
            IntSeq::Power { q } => *q == 1,
            IntSeq::AffineExponent { q, a, .. } => *q == 1 || *a == 0,
            IntSeq::Explicit { tail: Some(t), .. } => t.difference_is_constant(),
            IntSeq::Explicit { tail: None, .. } => false,
        }
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntSeq::Constant { c } => write!(f, "{c}"),
            IntSeq::Geometric { c, q } => write!(f, "{c}*{q}^n"),
            IntSeq::Power { q } => write!(f, "{q}^n"),
            IntSeq::AffineExponent { q, a, b } => write!(f, "{q}^({a}n{b:+})"),
            IntSeq::Affine { a, b } => write!(f, "{a}n{b:+}"),
            IntSeq::Explicit { values, tail } => {
                let vs: Vec<String> = values.iter().map(ToString::to_string).collect();
                write!(f, "({}", vs.join(", "))?;
                match tail {
                    Some(t) => write!(f, ", then {t})"),
                    None => write!(f, ")"),
                }
            }
        }
    }
}

/// An infinite set of primes with an explicit increasing enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PrimeSet {
    All,
    /// primes `p` with `p = residue (mod modulus)`; requires `gcd(residue, modulus) = 1`
    Congruent {
        modulus: u64,
        residue: u64,
    },
    /// class `j >= 1` of the partition sending the prime with index
    /// `2^(j-1) * (2t - 1)` to class `j` as its `t`-th member
    PartitionClass {
        class: u32,
    },
}

/// Largest prime index the congruence scan will inspect.
const CONGRUENT_SCAN_LIMIT: usize = 5_000_000;

impl PrimeSet {
    pub fn validate(&self) -> Result<()> {
        match self {
            PrimeSet::All => Ok(()),
            PrimeSet::Congruent { modulus, residue } => {
                if *modulus == 0 {
                    return Err(Error::NonPositive("modulus 0".into()));
                }
                if residue.gcd(modulus) != 1 {
                    return Err(Error::Precondition(format!(
                        "residue {residue} mod {modulus} contains at most one prime"
                    )));
                }
                Ok(())
            }
            PrimeSet::PartitionClass { class } => {
                if *class == 0 || *class > 40 {
                    return Err(Error::Precondition(format!("partition class {class} outside 1..=40")));
                }
                Ok(())
            }
        }
    }

    pub fn contains(&self, p: u64) -> bool {
        if !is_prime_u64(p) {
            return false;
        }
        match self {
            PrimeSet::All => true,
            PrimeSet::Congruent { modulus, residue } => p % modulus == residue % modulus,
            PrimeSet::PartitionClass { class } => {
                let idx = crate::primes::prime_index(p).unwrap();
                idx.trailing_zeros() + 1 == *class
            }
        }
    }

    /// The `t`-th member, 1-indexed.
    pub fn nth(&self, t: u64) -> Result<u64> {
        self.validate()?;
        if t == 0 {
            return Err(Error::Precondition("prime sets are indexed from 1".into()));
        }
        match self {
            PrimeSet::All => Ok(nth_prime(t as usize)),
            PrimeSet::PartitionClass { class } => {
                let idx = (1u64 << (class - 1))
                    .checked_mul(2 * t - 1)
                    .filter(|&i| i as usize <= CONGRUENT_SCAN_LIMIT)
                    .ok_or_else(|| Error::TooLarge(format!("member {t} of partition class {class}")))?;
                Ok(nth_prime(idx as usize))
            }
            PrimeSet::Congruent { .. } => {
                let mut seen = 0;
                for i in 1..=CONGRUENT_SCAN_LIMIT {
                    let p = nth_prime(i);
                    if self.contains(p) {
                        seen += 1;
                        if seen == t {
                            return Ok(p);
                        }
                    }
                }
                Err(Error::NotFoundWithinLimit {
                    what: format!("member {t} of {self}"),
                    limit: CONGRUENT_SCAN_LIMIT as u64,
                })
            }
        }
    }

    /// Disjointness when it follows from the descriptions alone.
    pub fn disjoint(&self, other: &PrimeSet) -> Option<bool> {
        use PrimeSet::*;
        match (self, other) {
            (All, _) | (_, All) => Some(false),
            (PartitionClass { class: a }, PartitionClass { class: b }) => Some(a != b),
            (Congruent { modulus: m1, residue: r1 }, Congruent { modulus: m2, residue: r2 }) => {
                // the classes meet iff r1 = r2 mod gcd(m1, m2), and then by
                // Dirichlet they share infinitely many primes
                let g = m1.gcd(m2);
                Some(r1 % g != r2 % g)
            }
            _ => None,
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSet::All => write!(f, "all primes"),
            PrimeSet::Congruent { modulus, residue } => write!(f, "primes = {residue} mod {modulus}"),
            PrimeSet::PartitionClass { class } => write!(f, "prime partition class {class}"),
        }
    }
}

/// One closed-form generating sequence `r_1, r_2, ...` per family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `1/q^n`
    PowerDenominator { q: u64 },
    /// `floor(p/2)/p` over all primes in increasing order
    HalfPrime,
    /// `1/(2^n p_n)`, `p_n` the `n`-th odd prime
    TwoAdicOddPrime,
    /// `1/p` over `p` in the prime set
    ElementaryPrimary { primes: PrimeSet },
    /// `1/(p_{s_1} ... p_{s_k})` over k-subsets of prime indices in colex order
    ElementaryKPrimary { k: u32 },
    /// `prod_{i=1..k} 1/p_{(n-1)k+i}`
    PartitionedKPrimary { k: u32 },
    /// `sum_{s in S} 1/p_s` over k-subsets `S` of prime indices in colex order
    SumKPrimary { k: u32 },
    /// `numerators(n) / p^exponents(n)`
    PAdic { p: u64, numerators: IntSeq, exponents: IntSeq },
    /// index `2m-1`: `(p^(2^m) - 1)/p^(2^(m+1))`; index `2m`: `(p^(2^m) + 1)/p^(2^(m+1))`
    PairedPAdic { p: u64 },
    /// `r^n`
    Cyclic { r: PositiveRational },
    /// index `(m-1)k + i`: `r_i^m`
    GeneralizedCyclic { rs: Vec<PositiveRational> },
    /// index `2m-1`: `floor(p/2)/p`; index `2m`: `(p - floor(p/2))/p`, `p` the `m`-th odd prime
    BfNotFf,
    /// the generators of a finitely generated monoid, ascending
    ExplicitList { gens: FgMonoid },
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.to_string()))
    }
}

fn require_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::NonPositive("k".into()))
    } else {
        Ok(())
    }
}

fn binom(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// The `rank`-th (0-based) k-subset of `{1, 2, ...}` in colexicographic order, ascending.
pub fn colex_subset(k: u32, rank: u128) -> Vec<u64> {
    let mut rem = rank;
    let mut out = Vec::with_capacity(k as usize);
    for i in (1..=k as u64).rev() {
        let mut c = i - 1;
        while binom(c + 1, i).is_some_and(|b| b <= rem) {
            c += 1;
        }
        rem -= binom(c, i).unwrap();
        out.push(c + 1);
    }
    out.reverse();
    out
}

/// Inverse of [`colex_subset`]: the rank of an ascending subset of `{1, 2, ...}`.
pub fn colex_rank(subset: &[u64]) -> u128 {
    subset.iter().enumerate().map(|(i, &s)| binom(s - 1, i as u64 + 1).expect("rank overflow")).sum()
}

fn half_prime_pair(p: u64) -> (PositiveRational, PositiveRational) {
    let lo = p / 2;
    (PositiveRational::new(lo, p).expect("p >= 2"), PositiveRational::new(p - lo, p).expect("p >= 2"))
}

fn subset_primes(k: u32, index: u64) -> Vec<u64> {
    colex_subset(k, index as u128 - 1).into_iter().map(|s| nth_prime(s as usize)).collect()
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::PowerDenominator { q } => require_prime(*q),
            FamilySpec::ElementaryPrimary { primes } => primes.validate(),
            FamilySpec::ElementaryKPrimary { k }
            | FamilySpec::PartitionedKPrimary { k }
            | FamilySpec::SumKPrimary { k } => require_k(*k),
            FamilySpec::PAdic { p, numerators, exponents } => {
                require_prime(*p)?;
                numerators.validate()?;
                exponents.validate()?;
                if !exponents.is_strictly_increasing() {
                    return Err(Error::Precondition(format!("exponents {exponents} are not strictly increasing")));
                }
                Ok(())
            }
            FamilySpec::PairedPAdic { p } => {
                require_prime(*p)?;
                if *p == 2 {
                    return Err(Error::Precondition("the prime must be odd".into()));
                }
                Ok(())
            }
            FamilySpec::GeneralizedCyclic { rs } if rs.is_empty() => Err(Error::EmptyGenerators),
            _ => Ok(()),
        }
    }

    /// Number of generators, `None` when infinite.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<u64> {
        match self {
            FamilySpec::ExplicitList { gens } => Some(gens.generators().len() as u64),
            FamilySpec::PAdic { numerators, exponents, .. } => match (numerators.len(), exponents.len()) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
            _ => None,
        }
    }

    /// The `n`-th generator, `n >= 1`.
    pub fn generator_at(&self, n: u64) -> Result<PositiveRational> {
        self.validate()?;
        if n == 0 {
            return Err(Error::Precondition("generators are indexed from 1".into()));
        }
        let unit = |d: BigUint| PositiveRational::from_biguints(BigUint::one(), d);
        match self {
            FamilySpec::PowerDenominator { q } => unit(big_pow(*q, n)?),
            FamilySpec::HalfPrime => Ok(half_prime_pair(nth_prime(n as usize)).0),
            FamilySpec::TwoAdicOddPrime => unit(big_pow(2, n)? * nth_odd_prime(n as usize)),
            FamilySpec::ElementaryPrimary { primes } => unit(BigUint::from(primes.nth(n)?)),
            FamilySpec::ElementaryKPrimary { k } => unit(subset_primes(*k, n).into_iter().map(BigUint::from).product()),
            FamilySpec::PartitionedKPrimary { k } => {
                let k = *k as u64;
                let first = (n - 1) * k;
                unit((1..=k).map(|i| BigUint::from(nth_prime((first + i) as usize))).product())
            }
            FamilySpec::SumKPrimary { k } => {
                let terms = subset_primes(*k, n).into_iter().map(PositiveRational::unit_fraction);
                Ok(terms.reduce(|a, b| a + b).expect("k >= 1"))
            }
            FamilySpec::PAdic { p, numerators, exponents } => {
                let num = numerators.eval(n)?;
                let e = exponents.eval(n)?.to_u64().ok_or_else(|| Error::TooLarge("exponent".into()))?;
                PositiveRational::from_biguints(num, big_pow(*p, e)?)
            }
            FamilySpec::PairedPAdic { p } => {
                let m = n.div_ceil(2);
                let e = 1u64.checked_shl(m as u32).filter(|&e| e <= MAX_EXPONENT / 2);
                let e = e.ok_or_else(|| Error::TooLarge(format!("generator {n}")))?;
                let half = big_pow(*p, e)?;
                let num = if n % 2 == 1 { &half - 1u32 } else { &half + 1u32 };
                PositiveRational::from_biguints(num, &half * &half)
            }
            FamilySpec::Cyclic { r } => Ok(r.pow(exponent(n)?)),
            FamilySpec::GeneralizedCyclic { rs } => {
                let k = rs.len() as u64;
                let (m, i) = ((n - 1) / k + 1, (n - 1) % k);
                Ok(rs[i as usize].pow(exponent(m)?))
            }
            FamilySpec::BfNotFf => {
                let (lo, hi) = half_prime_pair(nth_odd_prime(n.div_ceil(2) as usize));
                Ok(if n % 2 == 1 { lo } else { hi })
            }
            FamilySpec::ExplicitList { gens } => {
                let g = gens.generators();
                g.get(n as usize - 1).cloned().ok_or(Error::BadIndex { index: n, len: g.len() as u64 })
            }
        }
    }

    /// The first `n` generators.
    pub fn generators(&self, n: u64) -> Result<Vec<PositiveRational>> {
        (1..=n).map(|i| self.generator_at(i)).collect()
    }

    /// `<r_1, ..., r_n>`; `n = 0` gives the trivial monoid.
    pub fn truncate(&self, n: u64) -> Result<FgMonoid> {
        Ok(FgMonoid::from_list(self.generators(n)?))
    }

    /// Primes dividing some generator's denominator, when every generator's
    /// denominator is a power of a single prime and the set is described in closed form.
    pub(crate) fn single_prime_denominators(&self) -> Option<DenominatorSupport> {
        match self {
            FamilySpec::PowerDenominator { q } => Some(DenominatorSupport::Single(*q)),
            FamilySpec::PairedPAdic { p } => Some(DenominatorSupport::Single(*p)),
            FamilySpec::PAdic { p, numerators, .. } => {
                // d(r_n) must be unbounded: numerators carrying no factor of p guarantee it
                let coprime = match numerators.prime_power_base() {
                    Some(q) => q != *p,
                    None => {
                        numerators.is_bounded() == Some(true)
                            && numerators.closed_form_from() == Some(1)
                            && numerators.eval(1).is_ok_and(|v| !(v % *p).is_zero())
                    }
                };
                (coprime && self.len().is_none()).then_some(DenominatorSupport::Single(*p))
            }
            FamilySpec::ElementaryPrimary { primes } => Some(DenominatorSupport::Set(primes.clone())),
            _ => None,
        }
    }
}

/// The denominator prime support of a family whose generators have prime-power denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum DenominatorSupport {
    /// one prime, with unbounded exponents
    Single(u64),
    /// an infinite set, one generator per prime
    Set(PrimeSet),
}

impl fmt::Display for DenominatorSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DenominatorSupport::Single(p) => write!(f, "{{{p}}}"),
            DenominatorSupport::Set(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::PowerDenominator { q } => write!(f, "<1/{q}^n>"),
            FamilySpec::HalfPrime => write!(f, "<floor(p/2)/p : p prime>"),
            FamilySpec::TwoAdicOddPrime => write!(f, "<1/(2^n p_n) : p_n odd prime>"),
            FamilySpec::ElementaryPrimary { primes } => write!(f, "<1/p : p in {primes}>"),
            FamilySpec::ElementaryKPrimary { k } => write!(f, "elementary {k}-primary"),
            FamilySpec::PartitionedKPrimary { k } => write!(f, "partitioned {k}-primary"),
            FamilySpec::SumKPrimary { k } => write!(f, "sum {k}-primary"),
            FamilySpec::PAdic { p, numerators, exponents } => write!(f, "<({numerators})/{p}^({exponents})>"),
            FamilySpec::PairedPAdic { p } => write!(f, "<({p}^(2^n) -+ 1)/{p}^(2^(n+1))>"),
            FamilySpec::Cyclic { r } => write!(f, "<({r})^n>"),
            FamilySpec::GeneralizedCyclic { rs } => {
                let parts: Vec<String> = rs.iter().map(|r| format!("({r})^n")).collect();
                write!(f, "<{}>", parts.join(", "))
            }
            FamilySpec::BfNotFf => write!(f, "<floor(p/2)/p, (p - floor(p/2))/p : p odd prime>"),
            FamilySpec::ExplicitList { gens } => write!(f, "{gens}"),
        }
    }
}
