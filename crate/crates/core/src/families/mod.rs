//! Infinite Puiseux monoid families given by closed-form generating sequences,
//! their classification, and constructive witnesses for the individual families.

pub mod classify;
pub mod cyclic;
pub mod density;
pub mod kprimary;
pub mod padic;
pub mod spec;

pub use classify::{classify, ClassificationReport, Tri, Verdict};
pub use cyclic::{
    cyclic_contains, cyclic_factorizations, cyclic_trade, generalized_cyclic_embed, CyclicMembership, Embedding,
    TradeDirection,
};
pub use density::{
    approximate, calkin_wilf, dense_atom_monoid, disjoint_prime_noniso, within_reciprocal, Approximation, DenseAtom,
    DenseAtoms, NonIsomorphism, TargetSeq,
};
pub use kprimary::{kprimary_antimatter_witness, sum_kprimary_atom_check, two_adic_identity, AntimatterWitness};
pub use padic::{padic_candidate_atoms, paired_padic_identities, trend, Excluded, PadicAtoms, Trend};
pub use spec::{colex_rank, colex_subset, FamilySpec, IntSeq, PrimeSet};
