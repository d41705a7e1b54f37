use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::rational::{NonNegRational, PositiveRational};

/// A finite multiset of atoms: atom -> multiplicity (always >= 1).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    terms: BTreeMap<PositiveRational, BigUint>,
}

impl Factorization {
    pub fn new() -> Self {
        Self::default()
    }

    /// Merges repeated atoms and drops zero multiplicities.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (PositiveRational, BigUint)>,
    {
        let mut z = Self::new();
        for (atom, k) in terms {
            z.add(atom, &k);
        }
        z
    }

    pub fn add(&mut self, atom: PositiveRational, k: &BigUint) {
        if k.is_zero() {
            return;
        }
        *self.terms.entry(atom).or_default() += k;
    }

    /// Removes `k` copies of `atom`; returns false (leaving `self` unchanged) if there are fewer.
    pub fn remove(&mut self, atom: &PositiveRational, k: &BigUint) -> bool {
        let Some(have) = self.terms.get_mut(atom) else {
            return k.is_zero();
        };
        if &*have < k {
            return false;
        }
        *have -= k;
        if have.is_zero() {
            self.terms.remove(atom);
        }
        true
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PositiveRational, &BigUint)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, atom: &PositiveRational) -> BigUint {
        self.terms.get(atom).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// |z|, the sum of the multiplicities.
    pub fn length(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// The factorization homomorphism: sum of multiplicity * atom.
    pub fn evaluate(&self) -> NonNegRational {
        self.terms.iter().fold(NonNegRational::zero(), |acc, (a, k)| &acc + &a.scale_int(k))
    }

    pub fn scale(&self, q: &PositiveRational) -> Self {
        Self { terms: self.terms.iter().map(|(a, k)| (a * q, k.clone())).collect() }
    }

    /// Multiplicity vectors compared with the largest atom most significant.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let mut atoms: Vec<&PositiveRational> = self.terms.keys().chain(other.terms.keys()).collect();
        atoms.sort();
        atoms.dedup();
        for a in atoms.into_iter().rev() {
            match self.multiplicity(a).cmp(&other.multiplicity(a)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(a, k)| format!("{k}*({a})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A big integer as a JSON number when it fits in u64, else as a decimal string.
pub(crate) fn json_uint(x: &BigUint) -> serde_json::Value {
    match x.to_u64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

/// `serialize_with` adapter for [`json_uint`].
pub(crate) fn serialize_uint<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    json_uint(x).serialize(s)
}

struct Term<'a>(&'a PositiveRational, &'a BigUint);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("atom", self.0)?;
        m.serialize_entry("mult", &json_uint(self.1))?;
        m.end()
    }
}

struct Terms<'a>(&'a BTreeMap<PositiveRational, BigUint>);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (a, k) in self.0 {
            seq.serialize_element(&Term(a, k))?;
        }
        seq.end()
    }
}

/// `{"terms": [{"atom": "n/d", "mult": k}, ...], "length": L}`
impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("terms", &Terms(&self.terms))?;
        m.serialize_entry("length", &json_uint(&self.length()))?;
        m.end()
    }
}
