//! Density: constructive approximation inside dense families, monoids whose
//! atoms approximate a prescribed target sequence, and non-isomorphism from
//! disjoint denominator supports.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::classify::{classify, Tri};
use super::spec::{DenominatorSupport, FamilySpec};
use crate::error::{Error, Result};
use crate::fg::FgMonoid;
use crate::primes::nth_prime;
use crate::rational::{NonNegRational, PositiveRational};

/// Generators inspected when looking for one below the tolerance.
pub const APPROXIMATION_SEARCH: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Approximation {
    /// `multiplier * generator`, in the monoid and within `eps` below the target
    pub value: PositiveRational,
    pub index: u64,
    pub generator: PositiveRational,
    #[serde(serialize_with = "crate::factorization::serialize_uint")]
    pub multiplier: BigUint,
    /// `target - value`, strictly between 0 and `eps`
    pub gap: PositiveRational,
}

/// The largest multiple of the first generator below `min(target, eps)` that
/// stays strictly under `target`.
pub fn approximate(spec: &FamilySpec, target: &PositiveRational, eps: &PositiveRational) -> Result<Approximation> {
    if classify(spec).dense.value != Tri::Yes {
        return Err(Error::NotDense(spec.to_string()));
    }
    let bound = target.min(eps);
    let limit = spec.len().map_or(APPROXIMATION_SEARCH, |l| l.min(APPROXIMATION_SEARCH));
    for index in 1..=limit {
        let generator = spec.generator_at(index)?;
        if &generator >= bound {
            continue;
        }
        let multiplier = (target / &generator).ceil() - 1u32;
        let value = generator
            .scale_int(&multiplier)
            .as_positive()
            .expect("generator below target has a positive multiple below it");
        let gap = target.checked_sub(&value).and_then(|g| g.as_positive()).expect("multiplier is maximal below target");
        return Ok(Approximation { value, index, generator, multiplier, gap });
    }
    Err(Error::NotFoundWithinLimit { what: format!("generator below {bound}"), limit })
}

/// `fusc(n) / fusc(n + 1)`: the `n`-th positive rational in Calkin-Wilf order.
pub fn calkin_wilf(n: u64) -> PositiveRational {
    assert!(n >= 1, "Calkin-Wilf order is 1-indexed");
    // invariant: fusc(m) = a*fusc(n') + b*fusc(n'+1) over the remaining bits
    let fusc = |mut m: u64| -> u64 {
        let (mut a, mut b) = (1u64, 0u64);
        while m > 0 {
            if m & 1 == 1 {
                b += a;
            } else {
                a += b;
            }
            m >>= 1;
        }
        b
    };
    PositiveRational::new(fusc(n), fusc(n + 1)).expect("fusc is positive on positive arguments")
}

/// A target sequence `t_1, t_2, ...` for the dense-atom construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TargetSeq {
    /// every positive rational, in Calkin-Wilf order
    CalkinWilf,
    Explicit {
        values: Vec<NonNegRational>,
    },
}

impl TargetSeq {
    pub fn at(&self, k: u64) -> Result<PositiveRational> {
        match self {
            TargetSeq::CalkinWilf => Ok(calkin_wilf(k)),
            TargetSeq::Explicit { values } => {
                let t = values.get(k as usize - 1).ok_or(Error::BadIndex { index: k, len: values.len() as u64 })?;
                t.as_positive().ok_or_else(|| Error::Precondition(format!("target {k} is {t}, not positive")))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenseAtom {
    pub k: u64,
    pub target: PositiveRational,
    pub prime: u64,
    pub exponent: u32,
    #[serde(serialize_with = "crate::factorization::serialize_uint")]
    pub numerator: BigUint,
    pub atom: PositiveRational,
    /// `|target - atom|`, below `1/k`
    pub error: NonNegRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenseAtoms {
    pub class: u32,
    pub atoms: Vec<DenseAtom>,
    pub monoid: FgMonoid,
}

fn abs_diff(a: &NonNegRational, b: &NonNegRational) -> NonNegRational {
    a.checked_sub(b).or_else(|| b.checked_sub(a)).expect("one order subtracts")
}

/// `m_k / p^(n_k)` for `k = 1..=n`, with `p` the `k`-th prime of partition class
/// `class`, `p^(n_k) > 2k` minimal and `m_k` the nearest integer to
/// `t_k p^(n_k)`, nudged off multiples of `p`.
pub fn dense_atom_monoid(targets: &TargetSeq, class: u32, n: u64) -> Result<DenseAtoms> {
    if class == 0 || class > 63 {
        return Err(Error::Precondition(format!("partition class {class} outside 1..=63")));
    }
    let mut atoms = Vec::with_capacity(n as usize);
    for k in 1..=n {
        let target = targets.at(k)?;
        let index = (1u128 << (class - 1)) * (2 * k as u128 - 1);
        let index = usize::try_from(index).map_err(|_| Error::TooLarge(format!("prime index {index}")))?;
        let prime = nth_prime(index);
        let p = BigUint::from(prime);
        let mut exponent = 1u32;
        let mut pn = p.clone();
        while pn <= BigUint::from(2 * k) {
            pn *= &p;
            exponent += 1;
        }
        // nearest integer, ties upward
        let scaled = target.numerator() * &pn * 2u32 + target.denominator();
        let mut m = scaled / (target.denominator() * 2u32);
        if (&m % &p).is_zero() {
            m = if m.is_zero() { BigUint::one() } else { m - 1u32 };
        }
        let atom = PositiveRational::from_biguints(m.clone(), pn)?;
        let error = abs_diff(&target.clone().into(), &atom.clone().into());
        debug_assert!(error < PositiveRational::unit_fraction(k));
        atoms.push(DenseAtom { k, target, prime, exponent, numerator: m, atom, error });
    }
    let monoid = FgMonoid::from_list(atoms.iter().map(|a| a.atom.clone()).collect());
    Ok(DenseAtoms { class, atoms, monoid })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum NonIsomorphism {
    /// Disjoint denominator supports, each infinite or carrying unbounded
    /// exponents, so no rational scaling maps one monoid onto the other.
    Certificate {
        support_a: String,
        support_b: String,
    },
    Inapplicable {
        reason: String,
    },
}

pub fn disjoint_prime_noniso(a: &FamilySpec, b: &FamilySpec) -> NonIsomorphism {
    let (Some(sa), Some(sb)) = (a.single_prime_denominators(), b.single_prime_denominators()) else {
        return NonIsomorphism::Inapplicable {
            reason: "a denominator prime support is not established for both families".into(),
        };
    };
    let disjoint = match (&sa, &sb) {
        (DenominatorSupport::Single(p), DenominatorSupport::Single(q)) => Some(p != q),
        (DenominatorSupport::Single(p), DenominatorSupport::Set(s))
        | (DenominatorSupport::Set(s), DenominatorSupport::Single(p)) => Some(!s.contains(*p)),
        (DenominatorSupport::Set(s), DenominatorSupport::Set(t)) => s.disjoint(t),
    };
    match disjoint {
        Some(true) => NonIsomorphism::Certificate { support_a: sa.to_string(), support_b: sb.to_string() },
        Some(false) => NonIsomorphism::Inapplicable { reason: format!("supports {sa} and {sb} intersect") },
        None => NonIsomorphism::Inapplicable { reason: format!("disjointness of {sa} and {sb} is not decided") },
    }
}

/// Whether `x` is within `1/k` of `t`; used by callers checking the error contract.
pub fn within_reciprocal(t: &PositiveRational, x: &PositiveRational, k: u64) -> bool {
    abs_diff(&t.clone().into(), &x.clone().into()) < PositiveRational::unit_fraction(k)
}
