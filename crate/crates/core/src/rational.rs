//! Exact nonnegative rationals and p-adic valuations.
//!
//! [`PositiveRational`] is always stored in lowest terms, so `numerator()` and
//! `denominator()` are the n(r) and d(r) of the reduced fraction. Zero is not a
//! positive rational; monoid elements that may be zero use [`NonNegRational`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::primes;

/// A reduced fraction `num/den` with `num, den >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PositiveRational {
    num: BigUint,
    den: BigUint,
}

/// A reduced nonnegative fraction. Zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NonNegRational {
    num: BigUint,
    den: BigUint,
}

fn reduce(num: BigUint, den: BigUint) -> (BigUint, BigUint) {
    let g = num.gcd(&den);
    if g.is_one() {
        (num, den)
    } else {
        (num / &g, den / g)
    }
}

impl PositiveRational {
    /// Builds the reduced fraction `n/d`. Fails with `NonPositive` unless both are at least 1.
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(n: N, d: D) -> Result<Self> {
        let (n, d) = (n.into(), d.into());
        if n.sign() != Sign::Plus {
            return Err(Error::NonPositive(format!("numerator {n}")));
        }
        if d.sign() != Sign::Plus {
            return Err(Error::NonPositive(format!("denominator {d}")));
        }
        Self::from_biguints(n.magnitude().clone(), d.magnitude().clone())
    }

    pub fn from_biguints(num: BigUint, den: BigUint) -> Result<Self> {
        if num.is_zero() {
            return Err(Error::NonPositive("numerator 0".into()));
        }
        if den.is_zero() {
            return Err(Error::NonPositive("denominator 0".into()));
        }
        let (num, den) = reduce(num, den);
        Ok(Self { num, den })
    }

    pub fn integer<N: Into<BigUint>>(n: N) -> Result<Self> {
        Self::from_biguints(n.into(), BigUint::one())
    }

    pub fn one() -> Self {
        Self { num: BigUint::one(), den: BigUint::one() }
    }

    /// `1/n`; panics if `n` is zero.
    pub fn unit_fraction<N: Into<BigUint>>(n: N) -> Self {
        Self::from_biguints(BigUint::one(), n.into()).expect("unit fraction of zero")
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn denominator(&self) -> &BigUint {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Self {
        Self { num: self.den.clone(), den: self.num.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        Self { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn scale_int(&self, k: &BigUint) -> NonNegRational {
        NonNegRational::from_biguints(&self.num * k, self.den.clone())
    }

    /// `self - other` when the result is nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<NonNegRational> {
        NonNegRational::from(self.clone()).checked_sub(&NonNegRational::from(other.clone()))
    }

    /// Largest integer `m` with `m <= self`.
    pub fn floor(&self) -> BigUint {
        &self.num / &self.den
    }

    /// Smallest integer `m` with `m >= self`.
    pub fn ceil(&self) -> BigUint {
        self.num.div_ceil(&self.den)
    }
}

impl NonNegRational {
    pub fn zero() -> Self {
        Self { num: BigUint::zero(), den: BigUint::one() }
    }

    /// Panics if `den` is zero.
    pub fn from_biguints(num: BigUint, den: BigUint) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = reduce(num, den);
        Self { num, den }
    }

    pub fn integer<N: Into<BigUint>>(n: N) -> Self {
        Self::from_biguints(n.into(), BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn denominator(&self) -> &BigUint {
        &self.den
    }

    pub fn as_positive(&self) -> Option<PositiveRational> {
        if self.is_zero() {
            None
        } else {
            Some(PositiveRational { num: self.num.clone(), den: self.den.clone() })
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let lhs = &self.num * &other.den;
        let rhs = &other.num * &self.den;
        if lhs < rhs {
            None
        } else {
            Some(Self::from_biguints(lhs - rhs, &self.den * &other.den))
        }
    }

    pub fn scale_int(&self, k: &BigUint) -> Self {
        Self::from_biguints(&self.num * k, self.den.clone())
    }
}

impl From<PositiveRational> for NonNegRational {
    fn from(r: PositiveRational) -> Self {
        Self { num: r.num, den: r.den }
    }
}

impl From<&PositiveRational> for NonNegRational {
    fn from(r: &PositiveRational) -> Self {
        Self { num: r.num.clone(), den: r.den.clone() }
    }
}

impl Ord for PositiveRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for PositiveRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NonNegRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for NonNegRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<PositiveRational> for NonNegRational {
    fn eq(&self, other: &PositiveRational) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl PartialOrd<PositiveRational> for NonNegRational {
    fn partial_cmp(&self, other: &PositiveRational) -> Option<Ordering> {
        Some((&self.num * &other.den).cmp(&(&other.num * &self.den)))
    }
}

macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident, $imp:expr) => {
        impl<'a> $trait<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                $imp(self, rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $imp(&self, &rhs)
            }
        }
    };
}

fn pos_add(a: &PositiveRational, b: &PositiveRational) -> PositiveRational {
    let (num, den) = reduce(&a.num * &b.den + &b.num * &a.den, &a.den * &b.den);
    PositiveRational { num, den }
}

fn pos_mul(a: &PositiveRational, b: &PositiveRational) -> PositiveRational {
    let (num, den) = reduce(&a.num * &b.num, &a.den * &b.den);
    PositiveRational { num, den }
}

fn pos_div(a: &PositiveRational, b: &PositiveRational) -> PositiveRational {
    let (num, den) = reduce(&a.num * &b.den, &a.den * &b.num);
    PositiveRational { num, den }
}

fn nn_add(a: &NonNegRational, b: &NonNegRational) -> NonNegRational {
    NonNegRational::from_biguints(&a.num * &b.den + &b.num * &a.den, &a.den * &b.den)
}

fn nn_mul(a: &NonNegRational, b: &NonNegRational) -> NonNegRational {
    NonNegRational::from_biguints(&a.num * &b.num, &a.den * &b.den)
}

forward_binop!(PositiveRational, Add, add, pos_add);
forward_binop!(PositiveRational, Mul, mul, pos_mul);
forward_binop!(PositiveRational, Div, div, pos_div);
forward_binop!(NonNegRational, Add, add, nn_add);
forward_binop!(NonNegRational, Mul, mul, nn_mul);

impl<'a> Div<&'a PositiveRational> for &'a NonNegRational {
    type Output = NonNegRational;
    fn div(self, rhs: &'a PositiveRational) -> NonNegRational {
        NonNegRational::from_biguints(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<'a> Mul<&'a PositiveRational> for &'a NonNegRational {
    type Output = NonNegRational;
    fn mul(self, rhs: &'a PositiveRational) -> NonNegRational {
        NonNegRational::from_biguints(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for NonNegRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for NonNegRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_uint(s: &str) -> Result<BigUint> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected a nonnegative integer, got {s:?}")));
    }
    s.parse::<BigUint>().map_err(|e| Error::Parse(e.to_string()))
}

impl FromStr for NonNegRational {
    type Err = Error;

    /// Accepts `n/d` (not necessarily reduced) or a bare integer `n`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let (n, d) = (parse_uint(n)?, parse_uint(d)?);
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Self::from_biguints(n, d))
            }
            None => Ok(Self::integer(parse_uint(s)?)),
        }
    }
}

impl FromStr for PositiveRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<NonNegRational>()?.as_positive().ok_or_else(|| Error::NonPositive(s.trim().to_string()))
    }
}

impl Serialize for PositiveRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PositiveRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for NonNegRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NonNegRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An integer or `+∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedInt {
    Finite(i64),
    Infinity,
}

impl Add<i64> for ExtendedInt {
    type Output = ExtendedInt;
    fn add(self, k: i64) -> ExtendedInt {
        match self {
            ExtendedInt::Finite(v) => ExtendedInt::Finite(v + k),
            ExtendedInt::Infinity => ExtendedInt::Infinity,
        }
    }
}

impl Add for ExtendedInt {
    type Output = ExtendedInt;
    fn add(self, rhs: ExtendedInt) -> ExtendedInt {
        match rhs {
            ExtendedInt::Finite(k) => self + k,
            ExtendedInt::Infinity => ExtendedInt::Infinity,
        }
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedInt::Finite(v) => write!(f, "{v}"),
            ExtendedInt::Infinity => write!(f, "inf"),
        }
    }
}

/// Exponent of the largest power of `p` dividing `n`; `n` must be nonzero and `p >= 2`.
pub fn int_valuation(p: &BigUint, n: &BigUint) -> u64 {
    debug_assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// v_p(r) = v_p(n(r)) - v_p(d(r)), with v_p(0) = +∞.
pub fn p_adic_valuation(p: &BigUint, r: &NonNegRational) -> Result<ExtendedInt> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if r.is_zero() {
        return Ok(ExtendedInt::Infinity);
    }
    let up = int_valuation(p, r.numerator()) as i64;
    let down = int_valuation(p, r.denominator()) as i64;
    Ok(ExtendedInt::Finite(up - down))
}
