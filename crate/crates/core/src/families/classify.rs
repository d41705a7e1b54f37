//! Property verdicts for each family, each backed by a named result or a
//! computation from the closed form.

use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::padic;
#[cfg(test)]
use super::spec::PrimeSet;
use super::spec::{FamilySpec, IntSeq};
use crate::rational::PositiveRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: Tri,
    /// Tag of the result or computation backing the value; `None` for unknown.
    pub citation: Option<String>,
    /// The value rests on a cited result this crate does not re-derive.
    pub asserted: bool,
}

impl Verdict {
    pub fn unknown() -> Self {
        Verdict { value: Tri::Unknown, citation: None, asserted: false }
    }

    fn derived(value: bool, tag: &str) -> Self {
        let value = if value { Tri::Yes } else { Tri::No };
        Verdict { value, citation: Some(tag.to_string()), asserted: false }
    }

    fn asserted(value: bool, tag: &str) -> Self {
        Verdict { asserted: true, ..Self::derived(value, tag) }
    }

    fn from_option(value: Option<bool>, tag: &str) -> Self {
        value.map_or_else(Self::unknown, |v| Self::derived(v, tag))
    }

    pub fn is_yes(&self) -> bool {
        self.value == Tri::Yes
    }

    pub fn is_no(&self) -> bool {
        self.value == Tri::No
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub dense: Verdict,
    pub atomic: Verdict,
    pub antimatter: Verdict,
    pub strongly_bounded: Verdict,
    pub finite_puiseux: Verdict,
    pub hereditarily_atomic: Verdict,
    /// Every citation tag used above, in field order, without repeats.
    pub justification: Vec<String>,
}

/// Citation tags.
pub mod tags {
    pub const DENSE_INFIMUM: &str = "dense-iff-generator-infimum-zero";
    pub const NUMERATORS: &str = "generator-numerators-bounded";
    pub const ATOM_NUMERATORS: &str = "atom-numerators-unbounded";
    pub const DENOMINATOR_PRIMES: &str = "denominator-prime-support";
    pub const NOT_DENSE_ATOMIC: &str = "not-dense-implies-hereditarily-atomic";
    pub const ANTIMATTER_NOT_ATOMIC: &str = "antimatter-nontrivial-not-atomic";
    pub const NOT_ATOMIC_NOT_HEREDITARY: &str = "hereditarily-atomic-implies-atomic";
    pub const FG_ATOMIC: &str = "finitely-generated-is-atomic";
    pub const POWER_DENOMINATOR: &str = "power-denominator-finite-strongly-bounded-antimatter";
    pub const HALF_PRIME: &str = "half-prime-atomic-not-finite-not-strongly-bounded";
    pub const TWO_ADIC: &str = "two-adic-odd-prime-atomic-not-hereditarily-atomic";
    pub const PRIMARY: &str = "primary-monoids-hereditarily-atomic";
    pub const K_PRIMARY: &str = "elementary-k-primary-antimatter";
    pub const DISTINCT_PRIMES: &str = "distinct-prime-denominators-all-atoms";
    pub const SUM_K_PRIMARY: &str = "sum-k-primary-all-atoms";
    pub const PADIC_BOUNDED: &str = "strongly-bounded-p-adic-finitely-many-atoms";
    pub const PADIC_CONSTANT: &str = "p-adic-constant-numerator-antimatter";
    pub const PADIC_DECREASING: &str = "p-adic-prime-power-numerators-decreasing-atomic";
    pub const PAIRED: &str = "p-adic-paired-example-antimatter";
    pub const PAIRED_GENERATORS: &str = "p-adic-paired-example-regenerated-by-2/p^(2^n)";
    pub const CYCLIC: &str = "multiplicatively-cyclic-atomicity";
    pub const CYCLIC_INTEGRAL: &str = "multiplicatively-cyclic-integral-base";
    pub const CYCLIC_HEREDITARY: &str = "atomic-multiplicatively-cyclic-hereditarily-atomic";
    pub const GENERALIZED_CYCLIC: &str = "generalized-cyclic-gcd-hereditarily-atomic";
    pub const BF_NOT_FF: &str = "bf-not-ff-atoms";
}

use tags::*;

struct Draft {
    dense: Verdict,
    atomic: Verdict,
    antimatter: Verdict,
    strongly_bounded: Verdict,
    finite_puiseux: Verdict,
    hereditarily_atomic: Verdict,
}

impl Draft {
    fn new() -> Self {
        Draft {
            dense: Verdict::unknown(),
            atomic: Verdict::unknown(),
            antimatter: Verdict::unknown(),
            strongly_bounded: Verdict::unknown(),
            finite_puiseux: Verdict::unknown(),
            hereditarily_atomic: Verdict::unknown(),
        }
    }

    /// Fills unknown fields that follow from known ones. Every family here is nontrivial.
    fn close(mut self) -> ClassificationReport {
        if self.dense.is_no() {
            if self.atomic.value == Tri::Unknown {
                self.atomic = Verdict::derived(true, NOT_DENSE_ATOMIC);
            }
            if self.hereditarily_atomic.value == Tri::Unknown {
                self.hereditarily_atomic = Verdict::derived(true, NOT_DENSE_ATOMIC);
            }
        }
        if self.antimatter.is_yes() && self.atomic.value == Tri::Unknown {
            self.atomic = Verdict::derived(false, ANTIMATTER_NOT_ATOMIC);
        }
        if self.atomic.is_yes() && self.antimatter.value == Tri::Unknown {
            self.antimatter = Verdict { value: Tri::No, ..self.atomic.clone() };
        }
        if self.atomic.is_no() && self.hereditarily_atomic.value == Tri::Unknown {
            self.hereditarily_atomic = Verdict::derived(false, NOT_ATOMIC_NOT_HEREDITARY);
        }
        if self.hereditarily_atomic.is_yes() && self.atomic.value == Tri::Unknown {
            self.atomic = Verdict { value: Tri::Yes, ..self.hereditarily_atomic.clone() };
        }
        let fields = [
            &self.dense,
            &self.atomic,
            &self.antimatter,
            &self.strongly_bounded,
            &self.finite_puiseux,
            &self.hereditarily_atomic,
        ];
        let mut justification: Vec<String> = Vec::new();
        for c in fields.iter().filter_map(|v| v.citation.clone()) {
            if !justification.contains(&c) {
                justification.push(c);
            }
        }
        ClassificationReport {
            dense: self.dense,
            atomic: self.atomic,
            antimatter: self.antimatter,
            strongly_bounded: self.strongly_bounded,
            finite_puiseux: self.finite_puiseux,
            hereditarily_atomic: self.hereditarily_atomic,
            justification,
        }
    }
}

fn cyclic(r: &PositiveRational) -> Draft {
    let mut d = Draft::new();
    let one = PositiveRational::one();
    // r^n has denominator d(r)^n, so the support is that of d(r)
    d.finite_puiseux = Verdict::derived(true, DENOMINATOR_PRIMES);
    d.dense = Verdict::derived(r < &one, DENSE_INFIMUM);
    if r.is_integer() {
        // every r^n is a multiple of r
        d.atomic = Verdict::derived(true, CYCLIC_INTEGRAL);
        d.antimatter = Verdict::derived(false, CYCLIC_INTEGRAL);
        d.strongly_bounded = Verdict::derived(true, CYCLIC_INTEGRAL);
    } else if r.numerator().is_one() {
        d.antimatter = Verdict::derived(true, CYCLIC);
        d.strongly_bounded = Verdict::derived(true, NUMERATORS);
    } else {
        d.atomic = Verdict::derived(true, CYCLIC);
        d.antimatter = Verdict::derived(false, CYCLIC);
        d.strongly_bounded = Verdict::derived(false, ATOM_NUMERATORS);
        if r < &one {
            d.hereditarily_atomic = Verdict::asserted(true, CYCLIC_HEREDITARY);
        }
    }
    d
}

fn padic(p: u64, spec: &FamilySpec, numerators: &IntSeq) -> Draft {
    let mut d = Draft::new();
    d.finite_puiseux = Verdict::derived(true, DENOMINATOR_PRIMES);
    let trend = padic::trend(spec);
    d.dense = Verdict::from_option(trend.tends_to_zero, DENSE_INFIMUM);
    match numerators.is_bounded() {
        Some(true) => {
            d.strongly_bounded = Verdict::derived(true, NUMERATORS);
            // unbounded exponents with bounded numerators leave infinitely many
            // distinct denominators, so the monoid is not finitely generated
            // and its finitely many atoms cannot generate it
            d.atomic = Verdict::derived(false, PADIC_BOUNDED);
            // bounded with constant differences means constant
            if numerators.closed_form_from() == Some(1) && numerators.difference_is_constant() {
                d.antimatter = Verdict::derived(true, PADIC_CONSTANT);
            }
        }
        Some(false) => {
            let q_power = numerators.prime_power_base().is_some_and(|q| q != p);
            if q_power && trend.decreasing == Some(true) {
                d.atomic = Verdict::derived(true, PADIC_DECREASING);
            }
        }
        None => {}
    }
    d
}

/// Verdicts for `spec`; fields no cited result or closed-form computation settles are unknown.
pub fn classify(spec: &FamilySpec) -> ClassificationReport {
    let mut d = Draft::new();
    match spec {
        FamilySpec::PowerDenominator { .. } => {
            d.dense = Verdict::derived(true, DENSE_INFIMUM);
            d.antimatter = Verdict::derived(true, POWER_DENOMINATOR);
            d.strongly_bounded = Verdict::derived(true, POWER_DENOMINATOR);
            d.finite_puiseux = Verdict::derived(true, POWER_DENOMINATOR);
        }
        FamilySpec::HalfPrime => {
            // floor(p/2)/p >= 1/3 for every prime p
            d.dense = Verdict::derived(false, DENSE_INFIMUM);
            d.atomic = Verdict::derived(true, HALF_PRIME);
            d.strongly_bounded = Verdict::derived(false, HALF_PRIME);
            d.finite_puiseux = Verdict::derived(false, DENOMINATOR_PRIMES);
        }
        FamilySpec::TwoAdicOddPrime => {
            d.dense = Verdict::derived(true, DENSE_INFIMUM);
            d.atomic = Verdict::derived(true, TWO_ADIC);
            d.hereditarily_atomic = Verdict::derived(false, TWO_ADIC);
            d.strongly_bounded = Verdict::derived(true, NUMERATORS);
            d.finite_puiseux = Verdict::derived(false, DENOMINATOR_PRIMES);
        }
        FamilySpec::ElementaryPrimary { .. } => d = primary(),
        FamilySpec::ElementaryKPrimary { k: 1 } => d = primary(),
        FamilySpec::ElementaryKPrimary { .. } => {
            d.dense = Verdict::derived(true, DENSE_INFIMUM);
            d.antimatter = Verdict::derived(true, K_PRIMARY);
            d.strongly_bounded = Verdict::derived(true, NUMERATORS);
            d.finite_puiseux = Verdict::derived(false, DENOMINATOR_PRIMES);
        }
        FamilySpec::PartitionedKPrimary { k } => {
            d.dense = Verdict::derived(true, DENSE_INFIMUM);
            d.atomic = Verdict::derived(true, DISTINCT_PRIMES);
            d.strongly_bounded = Verdict::derived(true, NUMERATORS);
            d.finite_puiseux = Verdict::derived(false, DENOMINATOR_PRIMES);
            if *k == 1 {
                d.hereditarily_atomic = Verdict::asserted(true, PRIMARY);
            }
        }
        FamilySpec::SumKPrimary { k } => {
            d.dense = Verdict::derived(true, DENSE_INFIMUM);
            d.atomic = Verdict::derived(true, SUM_K_PRIMARY);
            d.finite_puiseux = Verdict::derived(false, DENOMINATOR_PRIMES);
            if *k == 1 {
                d.strongly_bounded = Verdict::derived(true, NUMERATORS);
                d.hereditarily_atomic = Verdict::asserted(true, PRIMARY);
            } else {
                d.strongly_bounded = Verdict::derived(false, ATOM_NUMERATORS);
            }
        }
        FamilySpec::PAdic { p, numerators, .. } => d = padic(*p, spec, numerators),
        FamilySpec::PairedPAdic { .. } => {
            d.dense = Verdict::derived(true, DENSE_INFIMUM);
            d.antimatter = Verdict::derived(true, PAIRED);
            d.strongly_bounded = Verdict::derived(true, PAIRED_GENERATORS);
            d.finite_puiseux = Verdict::derived(true, DENOMINATOR_PRIMES);
        }
        FamilySpec::Cyclic { r } => d = cyclic(r),
        FamilySpec::GeneralizedCyclic { rs } if rs.len() == 1 => d = cyclic(&rs[0]),
        FamilySpec::GeneralizedCyclic { rs } => {
            let one = PositiveRational::one();
            d.finite_puiseux = Verdict::derived(true, DENOMINATOR_PRIMES);
            d.dense = Verdict::derived(rs.iter().any(|r| r < &one), DENSE_INFIMUM);
            let g = rs.iter().fold(num_bigint::BigUint::from(0u32), |g, r| g.gcd(r.numerator()));
            if !g.is_one() {
                d.hereditarily_atomic = Verdict::asserted(true, GENERALIZED_CYCLIC);
            }
            if rs.iter().all(PositiveRational::is_integer) {
                d.strongly_bounded = Verdict::derived(true, CYCLIC_INTEGRAL);
            }
        }
        FamilySpec::BfNotFf => {
            d.dense = Verdict::derived(false, DENSE_INFIMUM);
            d.atomic = Verdict::derived(true, BF_NOT_FF);
            d.strongly_bounded = Verdict::derived(false, ATOM_NUMERATORS);
            d.finite_puiseux = Verdict::derived(false, DENOMINATOR_PRIMES);
        }
        FamilySpec::ExplicitList { .. } => {
            d.dense = Verdict::derived(false, FG_ATOMIC);
            d.atomic = Verdict::derived(true, FG_ATOMIC);
            d.strongly_bounded = Verdict::derived(true, FG_ATOMIC);
            d.finite_puiseux = Verdict::derived(true, FG_ATOMIC);
        }
    }
    d.close()
}

fn primary() -> Draft {
    let mut d = Draft::new();
    d.dense = Verdict::derived(true, DENSE_INFIMUM);
    d.hereditarily_atomic = Verdict::asserted(true, PRIMARY);
    d.strongly_bounded = Verdict::derived(true, NUMERATORS);
    d.finite_puiseux = Verdict::derived(false, DENOMINATOR_PRIMES);
    d
}
