//! Exact computation with Puiseux monoids (additive submonoids of the
//! nonnegative rationals) and numerical semigroups.

pub mod error;
pub mod factorization;
pub mod families;
pub mod fg;
pub mod identity;
mod knapsack;
pub mod primes;
pub mod rational;
pub mod semigroup;
pub mod verifier;

pub use error::{Error, Result};
pub use factorization::Factorization;
pub use fg::{FgMonoid, ScaledMonoid};
pub use identity::{Identity, Term};
pub use rational::{p_adic_valuation, ExtendedInt, NonNegRational, PositiveRational};
pub use semigroup::NumericalSemigroup;
pub use verifier::{run_claims, ClaimOutcome, Status, VerifierParams};
