//! Exact linear identities between rationals, the common currency of witnesses.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::rational::NonNegRational;

/// `coeff * value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigUint,
    pub value: NonNegRational,
}

impl Term {
    pub fn new(coeff: impl Into<BigUint>, value: impl Into<NonNegRational>) -> Self {
        Term { coeff: coeff.into(), value: value.into() }
    }

    pub fn single(value: impl Into<NonNegRational>) -> Self {
        Term::new(1u32, value)
    }

    fn eval(&self) -> NonNegRational {
        self.value.scale_int(&self.coeff)
    }
}

/// `lhs_1 + ... = rhs_1 + ...`, both sides sums of integer multiples of rationals.
/// An empty side is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

fn sum(side: &[Term]) -> NonNegRational {
    side.iter().fold(NonNegRational::zero(), |acc, t| &acc + &t.eval())
}

impl Identity {
    pub fn new(lhs: Vec<Term>, rhs: Vec<Term>) -> Self {
        Identity { lhs, rhs }
    }

    /// `x = z` for a factorization `z`.
    pub fn factorization(x: impl Into<NonNegRational>, z: &Factorization) -> Self {
        let rhs = z.terms().map(|(a, k)| Term::new(k.clone(), a)).collect();
        Identity { lhs: vec![Term::single(x)], rhs }
    }

    pub fn lhs_value(&self) -> NonNegRational {
        sum(&self.lhs)
    }

    pub fn rhs_value(&self) -> NonNegRational {
        sum(&self.rhs)
    }

    pub fn holds(&self) -> bool {
        self.lhs_value() == self.rhs_value()
    }

    /// Returns `self` if it holds exactly, else a verification error naming it.
    pub fn verified(self) -> Result<Self> {
        if self.holds() {
            Ok(self)
        } else {
            Err(Error::Verification(self.to_string()))
        }
    }
}

fn fmt_side(side: &[Term], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if side.is_empty() {
        return write!(f, "0");
    }
    for (i, t) in side.iter().enumerate() {
        if i > 0 {
            write!(f, " + ")?;
        }
        if t.coeff.is_one() {
            write!(f, "{}", t.value)?;
        } else {
            write!(f, "{}*({})", t.coeff, t.value)?;
        }
    }
    Ok(())
}

/// `1/15 = 2*(1/39) + 2*(1/155) + 1/403`
impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_side(&self.lhs, f)?;
        write!(f, " = ")?;
        fmt_side(&self.rhs, f)
    }
}

fn parse_term(s: &str) -> Result<Term> {
    let s = s.trim();
    match s.split_once('*') {
        Some((c, v)) => {
            let v = v.trim();
            let v = v
                .strip_prefix('(')
                .and_then(|v| v.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("expected c*(value), got {s:?}")))?;
            let c = c.trim();
            if c.is_empty() || !c.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad coefficient {c:?}")));
            }
            let coeff = c.parse::<BigUint>().map_err(|e| Error::Parse(e.to_string()))?;
            Ok(Term { coeff, value: v.parse()? })
        }
        None => Ok(Term::single(s.parse::<NonNegRational>()?)),
    }
}

fn parse_side(s: &str) -> Result<Vec<Term>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    s.split(" + ").map(parse_term).collect()
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, r) = s.split_once(" = ").ok_or_else(|| Error::Parse(format!("identity without ' = ': {s:?}")))?;
        Ok(Identity { lhs: parse_side(l)?, rhs: parse_side(r)? })
    }
}

impl Serialize for Identity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
