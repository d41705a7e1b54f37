//! Finitely generated Puiseux monoids.
//!
//! Every question is answered on the integer side: clearing denominators
//! turns `<r_1, ..., r_n>` into `q * <g_1, ..., g_n>` with integer `g_i` of
//! gcd 1, and membership, factorizations and atoms are decided there.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::knapsack::Knapsack;
use crate::rational::{NonNegRational, PositiveRational};
use crate::semigroup::NumericalSemigroup;

/// `<generators>` for a finite, sorted, deduplicated list of positive rationals.
/// The empty list is the trivial monoid `{0}`, built only through [`FgMonoid::trivial`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<PositiveRational>", into = "Vec<PositiveRational>")]
pub struct FgMonoid {
    gens: Vec<PositiveRational>,
}

/// `M = factor * semigroup`, with `gcd(semigroup) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledMonoid {
    pub factor: PositiveRational,
    pub semigroup: NumericalSemigroup,
}

/// Denominator-cleared view of a generating list, aligned with it index by index.
pub(crate) struct Cleared {
    lcm: BigUint,
    gcd: BigUint,
    ints: Vec<BigUint>,
    knapsack: Knapsack,
}

impl Cleared {
    pub(crate) fn new(gens: &[PositiveRational]) -> Self {
        let lcm = gens.iter().fold(BigUint::one(), |l, g| l.lcm(g.denominator()));
        let raw: Vec<BigUint> = gens.iter().map(|g| g.numerator() * (&lcm / g.denominator())).collect();
        let gcd = raw.iter().fold(BigUint::zero(), |a, b| a.gcd(b));
        let ints: Vec<BigUint> = raw.into_iter().map(|x| x / &gcd).collect();
        // Large denominators first: once they are fixed, the remaining
        // generators share their prime powers and the gcd prune bites.
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.sort_by(|&a, &b| gens[b].denominator().cmp(gens[a].denominator()).then_with(|| gens[b].cmp(&gens[a])));
        let knapsack = Knapsack::with_order(&ints, order);
        Cleared { lcm, gcd, ints, knapsack }
    }

    /// `x` on the integer side, if it lands on an integer.
    pub(crate) fn target(&self, x: &NonNegRational) -> Option<BigUint> {
        let num = x.numerator() * &self.lcm;
        let den = x.denominator() * &self.gcd;
        let (q, r) = num.div_rem(&den);
        r.is_zero().then_some(q)
    }

    pub(crate) fn contains(&self, x: &NonNegRational) -> bool {
        if x.is_zero() {
            return true;
        }
        self.target(x).is_some_and(|t| self.knapsack.contains(&t))
    }

    pub(crate) fn find_one(&self, x: &NonNegRational) -> Option<Vec<BigUint>> {
        self.knapsack.find_one(&self.target(x)?)
    }

    pub(crate) fn all(&self, x: &NonNegRational) -> Vec<Vec<BigUint>> {
        match self.target(x) {
            Some(t) => self.knapsack.all(&t),
            None => Vec::new(),
        }
    }
}

fn combination(gens: &[PositiveRational], coeffs: &[BigUint]) -> Factorization {
    Factorization::from_terms(gens.iter().cloned().zip(coeffs.iter().cloned()))
}

impl FgMonoid {
    pub fn new(gens: Vec<PositiveRational>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        Ok(Self::from_list(gens))
    }

    pub fn trivial() -> Self {
        Self { gens: Vec::new() }
    }

    /// Like [`FgMonoid::new`] but maps an empty list to the trivial monoid.
    pub fn from_list(mut gens: Vec<PositiveRational>) -> Self {
        gens.sort();
        gens.dedup();
        Self { gens }
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[PositiveRational] {
        &self.gens
    }

    /// `q * M`.
    pub fn scale(&self, q: &PositiveRational) -> Self {
        Self { gens: self.gens.iter().map(|g| g * q).collect() }
    }

    pub(crate) fn cleared(&self) -> Option<Cleared> {
        (!self.is_trivial()).then(|| Cleared::new(&self.gens))
    }

    /// The isomorphism onto a numerical semigroup by rational scaling:
    /// `q = g / L` where `L` is the lcm of the denominators and `g` the gcd
    /// of the `L`-scaled numerators.
    pub fn to_scaled_integer(&self) -> Result<ScaledMonoid> {
        if self.is_trivial() {
            return Err(Error::TrivialMonoid);
        }
        let c = Cleared::new(&self.gens);
        let factor = PositiveRational::from_biguints(c.gcd.clone(), c.lcm.clone())?;
        let semigroup = NumericalSemigroup::new(c.ints)?;
        Ok(ScaledMonoid { factor, semigroup })
    }

    /// A(M): generators that are not sums of the other generators.
    pub fn atoms(&self) -> Vec<PositiveRational> {
        let mut atoms: Vec<PositiveRational> = Vec::new();
        // lcm of the kept denominators; members have denominators dividing it
        let mut den_lcm = BigUint::one();
        for g in &self.gens {
            // only smaller generators can contribute to g
            let redundant =
                !atoms.is_empty() && (&den_lcm % g.denominator()).is_zero() && Cleared::new(&atoms).contains(&g.into());
            if !redundant {
                den_lcm = den_lcm.lcm(g.denominator());
                atoms.push(g.clone());
            }
        }
        atoms
    }

    /// `<A(M)>`, the same monoid presented by its atoms.
    pub fn atom_monoid(&self) -> FgMonoid {
        Self { gens: self.atoms() }
    }

    pub fn contains(&self, x: &NonNegRational) -> bool {
        if x.is_zero() {
            return true;
        }
        self.cleared().is_some_and(|c| c.contains(x))
    }

    /// One way of writing `x` over the generating list (not necessarily atoms).
    pub fn membership_witness(&self, x: &NonNegRational) -> Option<Factorization> {
        if x.is_zero() {
            return Some(Factorization::new());
        }
        let coeffs = self.cleared()?.find_one(x)?;
        Some(combination(&self.gens, &coeffs))
    }

    /// Z(x) over A(M), in canonical order (largest atom's multiplicity most
    /// significant). Z(0) is the empty factorization; non-members have none.
    pub fn factorizations(&self, x: &NonNegRational) -> Vec<Factorization> {
        if x.is_zero() {
            return vec![Factorization::new()];
        }
        let atoms = self.atoms();
        if atoms.is_empty() {
            return Vec::new();
        }
        let mut out: Vec<Factorization> = Cleared::new(&atoms).all(x).iter().map(|c| combination(&atoms, c)).collect();
        out.sort_by(Factorization::canonical_cmp);
        out
    }

    /// L(x).
    pub fn lengths(&self, x: &NonNegRational) -> BTreeSet<BigUint> {
        self.factorizations(x).iter().map(Factorization::length).collect()
    }

    /// A_M(x): the atoms dividing `x` in M.
    pub fn atom_support(&self, x: &NonNegRational) -> Vec<PositiveRational> {
        let Some(c) = self.cleared() else {
            return Vec::new();
        };
        self.atoms().into_iter().filter(|a| x.checked_sub(&a.into()).is_some_and(|rest| c.contains(&rest))).collect()
    }

    /// The rational `r` with `r * self = other`, if the monoids are isomorphic.
    pub fn isomorphism_witness(&self, other: &FgMonoid) -> Option<PositiveRational> {
        let (a, b) = (self.atoms(), other.atoms());
        if a.is_empty() || b.is_empty() {
            return (a.is_empty() && b.is_empty()).then(PositiveRational::one);
        }
        if a.len() != b.len() {
            return None;
        }
        let r = &b[0] / &a[0];
        a.iter().zip(&b).all(|(x, y)| &(x * &r) == y).then_some(r)
    }
}

impl TryFrom<Vec<PositiveRational>> for FgMonoid {
    type Error = Error;
    fn try_from(gens: Vec<PositiveRational>) -> Result<Self> {
        Self::new(gens)
    }
}

impl From<FgMonoid> for Vec<PositiveRational> {
    fn from(m: FgMonoid) -> Self {
        m.gens
    }
}

impl fmt::Display for FgMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl FromStr for FgMonoid {
    type Err = Error;

    /// Comma-separated `n/d` or integer tokens.
    fn from_str(s: &str) -> Result<Self> {
        let gens = s.split(',').map(|t| t.parse::<PositiveRational>()).collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> FgMonoid {
        s.parse().unwrap()
    }

    fn q(s: &str) -> NonNegRational {
        s.parse().unwrap()
    }

    fn strs<T: ToString>(v: &[T]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn scaled_integer_examples() {
        let s = m("1/2,2/3").to_scaled_integer().unwrap();
        assert_eq!(s.factor.to_string(), "1/6");
        assert_eq!(s.semigroup, NumericalSemigroup::new([3u32, 4]).unwrap());
        let s = m("2/3").to_scaled_integer().unwrap();
        assert_eq!(s.factor.to_string(), "2/3");
        assert_eq!(s.semigroup, NumericalSemigroup::new([1u32]).unwrap());
        let s = m("2/3,2/5").to_scaled_integer().unwrap();
        assert_eq!(s.factor.to_string(), "2/15");
        assert_eq!(s.semigroup, NumericalSemigroup::new([3u32, 5]).unwrap());
        assert_eq!(FgMonoid::trivial().to_scaled_integer(), Err(Error::TrivialMonoid));
    }

    #[test]
    fn atom_examples() {
        assert_eq!(strs(&m("1/2,2/3,7/6").atoms()), ["1/2", "2/3"]);
        assert_eq!(strs(&m("2,3").atoms()), ["2/1", "3/1"]);
        assert_eq!(strs(&m("1/2").atoms()), ["1/2"]);
        assert!(FgMonoid::trivial().atoms().is_empty());
    }

    #[test]
    fn membership_examples() {
        assert!(m("2/77,3/77").contains(&q("1/7")));
        let w = m("2/77,3/77").membership_witness(&q("1/7")).unwrap();
        assert_eq!(w.evaluate(), q("1/7"));
        assert!(!m("1/2,2/3").contains(&q("1/6")));
        assert!(m("1/2,2/3").contains(&q("0")));
        assert!(FgMonoid::trivial().contains(&q("0")));
        assert!(!FgMonoid::trivial().contains(&q("1")));
    }

    #[test]
    fn factorization_examples() {
        let zs = m("2,3").factorizations(&q("11"));
        assert_eq!(strs(&zs), ["4*(2/1) + 1*(3/1)", "1*(2/1) + 3*(3/1)"]);
        let zs = m("1/2,2/3").factorizations(&q("7/6"));
        assert_eq!(strs(&zs), ["1*(1/2) + 1*(2/3)"]);
        let zs = m("1/2,2/3").factorizations(&q("0"));
        assert_eq!(zs.len(), 1);
        assert!(zs[0].is_empty());
        // non-atom generators never appear
        let zs = m("1/2,2/3,7/6").factorizations(&q("7/6"));
        assert_eq!(strs(&zs), ["1*(1/2) + 1*(2/3)"]);
    }

    #[test]
    fn length_examples() {
        let l: Vec<u32> = m("2,3").lengths(&q("11")).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(l, [4, 5]);
        let l: Vec<u32> = m("1/2,2/3").lengths(&q("7/6")).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(l, [2]);
        let l: Vec<u32> = m("1/2,2/3").lengths(&q("0")).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(l, [0]);
    }

    #[test]
    fn support_examples() {
        assert_eq!(strs(&m("2,3").atom_support(&q("11"))), ["2/1", "3/1"]);
        assert_eq!(strs(&m("1/2,2/3").atom_support(&q("1/2"))), ["1/2"]);
        assert!(m("1/2,2/3").atom_support(&q("0")).is_empty());
    }

    #[test]
    fn isomorphism_examples() {
        assert_eq!(m("1/2").isomorphism_witness(&m("1/3")).unwrap().to_string(), "2/3");
        assert_eq!(m("2,3").isomorphism_witness(&m("4,6")).unwrap().to_string(), "2/1");
        assert_eq!(m("2,3").isomorphism_witness(&m("2,5")), None);
        // presentation with a redundant generator is the same monoid
        assert_eq!(m("2,3,5").isomorphism_witness(&m("2,3")).unwrap().to_string(), "1/1");
    }

    #[test]
    fn serde_round_trip() {
        let mon = m("1/2,2/3");
        let s = serde_json::to_string(&mon).unwrap();
        assert_eq!(s, r#"["1/2","2/3"]"#);
        assert_eq!(serde_json::from_str::<FgMonoid>(&s).unwrap(), mon);
        assert!(serde_json::from_str::<FgMonoid>("[]").is_err());
    }
}
