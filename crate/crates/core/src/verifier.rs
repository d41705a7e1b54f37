//! Claim registry: each claim replays a construction at desk scale and
//! reports exact witnesses.
//!
//! A claim is confirmed when every check passes and refuted when some check
//! fails; the failing checks are its witnesses. A library error makes the claim
//! inconclusive. C11 only collects data.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::families::{
    approximate, classify, colex_subset, cyclic_factorizations, dense_atom_monoid, disjoint_prime_noniso,
    generalized_cyclic_embed, kprimary_antimatter_witness, padic_candidate_atoms, paired_padic_identities,
    sum_kprimary_atom_check, two_adic_identity, FamilySpec, IntSeq, NonIsomorphism, PrimeSet, TargetSeq, Tri,
};
use crate::fg::FgMonoid;
use crate::identity::{Identity, Term};
use crate::primes::nth_prime;
use crate::rational::{NonNegRational, PositiveRational};
use crate::semigroup::NumericalSemigroup;

pub const CLAIM_IDS: [&str; 15] =
    ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14", "C15"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifierParams {
    /// upper bound on truncation sizes; claims with costlier checks use less
    pub truncation: u64,
    pub exponent_cap: u32,
    pub search_limit: u64,
}

impl Default for VerifierParams {
    fn default() -> Self {
        VerifierParams { truncation: 50, exponent_cap: 8, search_limit: 100_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Confirmed,
    Refuted,
    DataOnly,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimOutcome {
    pub claim_id: String,
    pub status: Status,
    /// exact identities for confirmed claims, failed checks for refuted ones
    pub witnesses: Vec<String>,
    pub parameters: Map<String, Value>,
    pub citation: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

/// Accumulates checks for one claim.
#[derive(Default)]
struct Run {
    witnesses: Vec<String>,
    failures: Vec<String>,
    parameters: Map<String, Value>,
    notes: Vec<String>,
    data: Option<Value>,
}

impl Run {
    fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.parameters.insert(key.to_string(), value.into());
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn identity(&mut self, id: &Identity) {
        self.check(id.holds(), || format!("identity fails: {id}"));
        self.witnesses.push(id.to_string());
    }
}

fn q(n: u64, d: u64) -> PositiveRational {
    PositiveRational::new(n, d).expect("positive literal")
}

fn big(n: &BigUint) -> PositiveRational {
    PositiveRational::integer(n.clone()).expect("positive integer")
}

fn sorted(mut v: Vec<PositiveRational>) -> Vec<PositiveRational> {
    v.sort();
    v
}

fn gens_are_atoms(m: &FgMonoid) -> bool {
    sorted(m.atoms()) == m.generators()
}

fn c1(_: &VerifierParams, run: &mut Run) -> Result<()> {
    let specs = [
        FamilySpec::PowerDenominator { q: 2 },
        FamilySpec::PowerDenominator { q: 3 },
        FamilySpec::Cyclic { r: q(2, 3) },
        FamilySpec::PairedPAdic { p: 3 },
        FamilySpec::TwoAdicOddPrime,
        FamilySpec::ElementaryPrimary { primes: PrimeSet::All },
        FamilySpec::PAdic { p: 5, numerators: IntSeq::Constant { c: 2 }, exponents: IntSeq::Affine { a: 1, b: 0 } },
    ];
    let targets = [q(5, 3), q(1, 8), q(7, 2), q(22, 7)];
    let eps = [q(1, 10), q(1, 1000)];
    run.param("targets", targets.iter().map(ToString::to_string).collect::<Vec<_>>());
    run.param("eps", eps.iter().map(ToString::to_string).collect::<Vec<_>>());
    for spec in &specs {
        for t in &targets {
            for e in &eps {
                let a = approximate(spec, t, e)?;
                run.check(a.gap < *e, || format!("{spec}: gap {} not below {e}", a.gap));
                run.check(spec.generator_at(a.index)? == a.generator, || format!("{spec}: wrong generator"));
                run.check(a.generator.scale_int(&a.multiplier) == a.value, || format!("{spec}: value mismatch"));
                run.identity(&Identity::new(
                    vec![Term::single(t.clone())],
                    vec![Term::new(a.multiplier.clone(), a.generator.clone()), Term::single(a.gap.clone())],
                ));
            }
        }
    }
    Ok(())
}

fn c2(_: &VerifierParams, run: &mut Run) -> Result<()> {
    let bases = [
        FamilySpec::HalfPrime.truncate(4)?,
        FamilySpec::Cyclic { r: q(2, 3) }.truncate(3)?,
        FamilySpec::BfNotFf.truncate(4)?,
        "1/2, 2/3".parse()?,
    ];
    let factors = [q(3, 7), q(5, 2), q(1, 6)];
    for a in &bases {
        let atoms_a = a.atoms();
        // a sample element with several factorizations
        let x: NonNegRational =
            atoms_a.iter().take(3).fold(NonNegRational::zero(), |s, g| &s + &g.scale_int(&2u32.into()));
        for f in &factors {
            let b = a.scale(f);
            let w = a.isomorphism_witness(&b);
            run.check(w.as_ref() == Some(f), || format!("{a} -> {b}: witness {w:?}, expected {f}"));
            let image: Vec<_> = atoms_a.iter().map(|g| g * f).collect();
            run.check(sorted(image) == sorted(b.atoms()), || format!("{a} -> {b}: atoms do not correspond"));
            let fx = &x * f;
            let (za, zb) = (a.factorizations(&x).len(), b.factorizations(&fx).len());
            run.check(za == zb, || format!("{a} -> {b}: {za} factorizations of {x}, {zb} of {fx}"));
            let (a0, b0) = (&atoms_a[0], &b.atoms()[0]);
            run.identity(&Identity::new(
                vec![Term::new(f.denominator().clone(), b0.clone())],
                vec![Term::new(f.numerator().clone(), a0.clone())],
            ));
        }
    }
    let (u, v) = (FamilySpec::Cyclic { r: q(2, 3) }.truncate(3)?, FamilySpec::Cyclic { r: q(3, 4) }.truncate(3)?);
    run.check(u.isomorphism_witness(&v).is_none(), || format!("{u} and {v} reported isomorphic"));
    Ok(())
}

fn c3(_: &VerifierParams, run: &mut Run) -> Result<()> {
    let primary = |primes| FamilySpec::ElementaryPrimary { primes };
    let pairs = [
        (
            primary(PrimeSet::Congruent { modulus: 4, residue: 1 }),
            primary(PrimeSet::Congruent { modulus: 4, residue: 3 }),
        ),
        (FamilySpec::PowerDenominator { q: 2 }, FamilySpec::PowerDenominator { q: 3 }),
        (primary(PrimeSet::PartitionClass { class: 1 }), primary(PrimeSet::PartitionClass { class: 2 })),
        (FamilySpec::PowerDenominator { q: 3 }, primary(PrimeSet::Congruent { modulus: 4, residue: 1 })),
    ];
    let n = 6;
    run.param("truncation", n);
    for (a, b) in &pairs {
        match disjoint_prime_noniso(a, b) {
            NonIsomorphism::Certificate { support_a, support_b } => {
                // truncations over a single prime are cyclic, so only prime sets give evidence here
                if matches!((a, b), (FamilySpec::ElementaryPrimary { .. }, FamilySpec::ElementaryPrimary { .. })) {
                    let (ta, tb) = (a.truncate(n)?, b.truncate(n)?);
                    run.check(ta.isomorphism_witness(&tb).is_none(), || format!("truncations of {a}, {b} isomorphic"));
                }
                run.witnesses
                    .push(format!("supports {support_a} and {support_b} are disjoint: {a} and {b} are not isomorphic"));
            }
            NonIsomorphism::Inapplicable { reason } => run.failures.push(format!("{a} vs {b}: {reason}")),
        }
    }
    Ok(())
}

fn c4(p: &VerifierParams, run: &mut Run) -> Result<()> {
    let n = p.truncation.min(50);
    run.param("truncation", n);
    run.param("classes", vec![1, 2]);
    let mut primes = BTreeSet::new();
    for class in 1..=2 {
        let out = dense_atom_monoid(&TargetSeq::CalkinWilf, class, n)?;
        run.check(gens_are_atoms(&out.monoid), || format!("class {class}: some generator is not an atom"));
        for a in &out.atoms {
            run.check(a.error < PositiveRational::unit_fraction(a.k), || {
                format!("class {class}, k = {}: error {} not below 1/{}", a.k, a.error, a.k)
            });
            run.check(primes.insert(a.prime), || format!("prime {} reused", a.prime));
            run.check(!(&a.numerator % a.prime).is_zero(), || format!("{} divides {}", a.prime, a.numerator));
            let (t, x): (NonNegRational, NonNegRational) = (a.target.clone().into(), a.atom.clone().into());
            let id = if x <= t {
                Identity::new(vec![Term::single(t)], vec![Term::single(x), Term::single(a.error.clone())])
            } else {
                Identity::new(vec![Term::single(x)], vec![Term::single(t), Term::single(a.error.clone())])
            };
            run.identity(&id);
        }
    }
    Ok(())
}

fn c5(_: &VerifierParams, run: &mut Run) -> Result<()> {
    for n in 1..=10 {
        run.identity(&two_adic_identity(n)?);
    }
    // the submonoid of powers of 1/2 has no atoms
    for n in 1..=5u32 {
        let (a, b) = (BigUint::one() << n, BigUint::one() << (n + 1));
        run.identity(&Identity::new(
            vec![Term::single(PositiveRational::unit_fraction(a))],
            vec![Term::new(2u32, PositiveRational::unit_fraction(b))],
        ));
    }
    let trunc = FamilySpec::TwoAdicOddPrime.truncate(8)?;
    run.check(gens_are_atoms(&trunc), || "a generator of the 8-term truncation is not an atom".into());
    let report = classify(&FamilySpec::TwoAdicOddPrime);
    run.check(report.atomic.value == Tri::Yes && report.hereditarily_atomic.value == Tri::No, || {
        "classification disagrees".into()
    });
    Ok(())
}

fn c6(p: &VerifierParams, run: &mut Run) -> Result<()> {
    let n = p.truncation.min(50);
    run.param("generators_per_k", n);
    run.param("search_limit", p.search_limit);
    for k in 2..=3u32 {
        let spec = FamilySpec::ElementaryKPrimary { k };
        for rank in 0..n as u128 {
            let primes: Vec<u64> = colex_subset(k, rank).iter().map(|&i| nth_prime(i as usize)).collect();
            let w = kprimary_antimatter_witness(&primes, p.search_limit)?;
            run.check(w.decomposition.lhs_value() == spec.generator_at(rank as u64 + 1)?, || {
                format!("{primes:?}: decomposition is not of the generator")
            });
            let fresh = |x: &BigUint| primes.iter().all(|&p| BigUint::from(p) != *x);
            run.check(w.q_prime > w.p_prime && fresh(&w.p_prime) && fresh(&w.q_prime), || {
                format!("{primes:?}: primes {} and {} are not new", w.p_prime, w.q_prime)
            });
            run.identity(&w.integer_identity);
            run.identity(&w.decomposition);
        }
    }
    Ok(())
}

fn c7(p: &VerifierParams, run: &mut Run) -> Result<()> {
    let n = p.truncation.min(20);
    let primes = p.truncation.min(10);
    run.param("partitioned_truncation", n);
    run.param("sum_prime_bound", primes);
    for k in 2..=3u32 {
        let trunc = FamilySpec::PartitionedKPrimary { k }.truncate(n)?;
        run.check(gens_are_atoms(&trunc), || format!("partitioned {k}-primary: a generator is not an atom"));
        run.witnesses.push(format!("all {n} generators of the partitioned {k}-primary truncation are atoms"));
    }
    let spec = FamilySpec::SumKPrimary { k: 2 };
    let mut rank = 0u128;
    loop {
        let s = colex_subset(2, rank);
        if s[1] > primes {
            break;
        }
        let atom = sum_kprimary_atom_check(2, &s, primes)?;
        let a_s = spec.generator_at(rank as u64 + 1)?;
        run.check(atom, || format!("a_{s:?} = {a_s} is not an atom"));
        let (p1, p2) = (nth_prime(s[0] as usize), nth_prime(s[1] as usize));
        run.witnesses.push(format!(
            "{a_s} = 1/{p1} + 1/{p2} is outside the monoid of the other sums over the first {primes} primes"
        ));
        rank += 1;
    }
    Ok(())
}

/// Bounded numerators: the atoms of every truncation past the prefix are the
/// same finite set plus the newest generator.
fn c8(p: &VerifierParams, run: &mut Run) -> Result<()> {
    let spec = FamilySpec::PAdic {
        p: 2,
        numerators: IntSeq::Explicit { values: vec![1, 3], tail: Some(Box::new(IntSeq::Constant { c: 5 })) },
        exponents: IntSeq::Affine { a: 1, b: 0 },
    };
    let top = p.truncation.min(16);
    run.param("family", spec.to_string());
    run.param("truncations", json!([3, top]));
    let mut stable: Option<Vec<PositiveRational>> = None;
    for m in 3..=top {
        let newest = spec.generator_at(m)?;
        let mut atoms = spec.truncate(m)?.atoms();
        run.check(atoms.contains(&newest), || format!("newest generator {newest} is not an atom at {m}"));
        atoms.retain(|a| *a != newest);
        let atoms = sorted(atoms);
        match &stable {
            None => stable = Some(atoms),
            Some(s) => run.check(*s == atoms, || format!("atoms change at truncation {m}")),
        }
    }
    let stable = stable.unwrap_or_default();
    let full = spec.truncate(top)?;
    for g in full.generators() {
        if stable.contains(g) || *g == spec.generator_at(top)? {
            continue;
        }
        let others = FgMonoid::from_list(full.generators().iter().filter(|h| *h != g).cloned().collect());
        match others.membership_witness(&g.into()) {
            Some(z) => run.identity(&Identity::factorization(g.clone(), &z)),
            None => run.failures.push(format!("{g} has no decomposition")),
        }
    }
    let list: Vec<String> = stable.iter().map(ToString::to_string).collect();
    run.witnesses.push(format!("persistent atoms: {}", list.join(", ")));
    run.check(classify(&spec).atomic.value == Tri::No, || "classification does not report non-atomic".into());
    Ok(())
}

fn c9(_: &VerifierParams, run: &mut Run) -> Result<()> {
    for p in [3, 5] {
        for n in 1..=3 {
            for id in paired_padic_identities(p, n)? {
                run.identity(&id);
            }
        }
        let r = classify(&FamilySpec::PairedPAdic { p });
        run.check(r.antimatter.value == Tri::Yes && r.dense.value == Tri::Yes, || format!("p = {p}: classification"));
    }
    Ok(())
}

pub(crate) fn padic_examples() -> [FamilySpec; 3] {
    let exp = |a| IntSeq::Affine { a, b: 0 };
    [
        FamilySpec::PAdic { p: 2, numerators: IntSeq::Power { q: 3 }, exponents: exp(2) },
        FamilySpec::PAdic {
            p: 2,
            numerators: IntSeq::Explicit { values: vec![9, 3], tail: Some(Box::new(IntSeq::Power { q: 3 })) },
            exponents: exp(1),
        },
        FamilySpec::PAdic { p: 2, numerators: IntSeq::Constant { c: 3 }, exponents: exp(1) },
    ]
}

fn c10(_: &VerifierParams, run: &mut Run) -> Result<()> {
    let n = 6;
    run.param("truncation", n);
    let [a, b, bounded] = padic_examples();
    for spec in [a, b] {
        let out = padic_candidate_atoms(&spec, n)?;
        let gens = spec.generators(n)?;
        for &i in &out.kept {
            let g = &gens[i as usize - 1];
            let others = FgMonoid::from_list(gens.iter().filter(|h| *h != g).cloned().collect());
            run.check(!others.contains(&g.into()), || format!("{spec}: kept r_{i} = {g} is representable"));
            run.witnesses.push(format!("{spec}: r_{i} = {g} is not a sum of the other generators"));
        }
        for e in &out.excluded {
            run.identity(&e.identity);
        }
    }
    match padic_candidate_atoms(&bounded, 3) {
        Err(Error::HypothesisViolated(why)) => run.witnesses.push(format!("{bounded}: rejected, {why}")),
        other => run.failures.push(format!("{bounded}: expected a hypothesis violation, got {other:?}")),
    }
    let r = classify(&padic_examples()[0]);
    run.check(r.atomic.value == Tri::Yes, || "decreasing prime-power family not classified atomic".into());
    Ok(())
}

/// Factorizations of `4/3` over `(2/3)^t`, `t <= cap`: solutions of
/// `sum c_t 2^t 3^(cap-t) = 4 * 3^(cap-1)`, counted by plain recursion.
pub fn c11_oracle(cap: u32) -> u64 {
    fn count(t: u32, cap: u32, rest: u128) -> u64 {
        if t == 0 {
            return u64::from(rest == 0);
        }
        let w = 2u128.pow(t) * 3u128.pow(cap - t);
        (0..=rest / w).map(|c| count(t - 1, cap, rest - c * w)).sum()
    }
    count(cap, cap, 4 * 3u128.pow(cap - 1))
}

fn c11(p: &VerifierParams, run: &mut Run) -> Result<()> {
    let (r, x) = (q(2, 3), NonNegRational::from(q(4, 3)));
    let caps = 1..=p.exponent_cap.min(40);
    run.param("r", r.to_string());
    run.param("x", x.to_string());
    run.param("exponent_cap", p.exponent_cap);
    let mut counts = Vec::new();
    let mut oracle = Vec::new();
    for cap in caps {
        let zs = cyclic_factorizations(&r, &x, cap)?;
        if cap == 3 {
            for z in &zs {
                run.witnesses.push(Identity::factorization(x.clone(), z).to_string());
            }
        }
        counts.push(json!({"cap": cap, "count": zs.len()}));
        oracle.push(json!({"cap": cap, "count": c11_oracle(cap)}));
    }
    let agrees = counts == oracle;
    run.check(agrees, || "enumeration and oracle disagree".into());
    run.data = Some(json!({"counts": counts, "oracle": oracle, "oracle_agrees": agrees}));
    run.notes.push("finiteness of factorization sets for r < 1 is not decided by bounded enumeration".into());
    Ok(())
}

fn c12(p: &VerifierParams, run: &mut Run) -> Result<()> {
    let spec = FamilySpec::BfNotFf;
    let sizes: Vec<u64> = [2u64, 4, 8, 16].into_iter().filter(|&m| 2 * m <= p.truncation.max(4)).collect();
    run.param("odd_primes", sizes.clone());
    let one: NonNegRational = NonNegRational::integer(1u32);
    let third = q(1, 3);
    run.notes.push("2/3 = 2*(1/3) is not an atom; every other generator is".into());
    let mut last = 0;
    for &m in &sizes {
        let trunc = spec.truncate(2 * m)?;
        // 2/3 = 1/3 + 1/3 is the only generator that is not an atom
        let two_thirds = q(2, 3);
        let expected: Vec<_> = trunc.generators().iter().filter(|g| **g != two_thirds).cloned().collect();
        let atoms = sorted(trunc.atoms());
        run.check(atoms == expected, || format!("{m} primes: atoms are not the generators other than 2/3"));
        run.check(atoms.iter().all(|a| *a >= third), || "an atom is below 1/3".into());
        let mut pairs = 0;
        for (i, a) in atoms.iter().enumerate() {
            for b in &atoms[i..] {
                if a + b == PositiveRational::one() {
                    pairs += 1;
                    if m == *sizes.last().expect("nonempty") {
                        run.identity(&Identity::new(
                            vec![Term::single(one.clone())],
                            vec![Term::single(a.clone()), Term::single(b.clone())],
                        ));
                    }
                }
            }
        }
        run.check(pairs > last, || format!("{m} primes: {pairs} pairs summing to 1, not more than {last}"));
        last = pairs;
        if m <= 8 {
            for x in [1u32, 2] {
                let xr = NonNegRational::integer(x);
                let zs = trunc.factorizations(&xr);
                let bound = BigUint::from(3 * x);
                run.check(zs.iter().all(|z| z.length() <= bound), || {
                    format!("a factorization of {x} is longer than {bound}")
                });
                run.witnesses.push(format!("{m} primes: {} factorizations of {x}, all of length <= {bound}", zs.len()));
            }
        }
        run.witnesses.push(format!("{m} primes: {pairs} atom pairs sum to 1"));
    }
    Ok(())
}

fn c13(_: &VerifierParams, run: &mut Run) -> Result<()> {
    let lists = [vec![q(2, 5), q(4, 7)], vec![q(6, 5), q(9, 7), q(3, 11)]];
    for rs in &lists {
        for i in 1..=rs.len() {
            for m in 1..=3 {
                run.identity(&generalized_cyclic_embed(rs, i, m)?.identity);
            }
        }
        let r = classify(&FamilySpec::GeneralizedCyclic { rs: rs.clone() });
        run.check(r.hereditarily_atomic.value == Tri::Yes, || {
            "gcd above one not classified hereditarily atomic".into()
        });
    }
    let coprime = [q(2, 77), q(3, 77)];
    run.check(generalized_cyclic_embed(&coprime, 1, 1) == Err(Error::GcdOne), || "gcd one not rejected".into());
    Ok(())
}

fn c14(_: &VerifierParams, run: &mut Run) -> Result<()> {
    for k in 1..=4u32 {
        let (a, b, c): (BigUint, BigUint, BigUint) =
            (Pow::pow(BigUint::from(2u32), k), Pow::pow(BigUint::from(3u32), k), Pow::pow(BigUint::from(11u32), k));
        let s = NumericalSemigroup::new([a.clone(), b.clone()])?;
        let f = s.frobenius()?;
        let bound = (&a - 1u32) * (&b - 1u32);
        run.check(f < bound.clone().into() && bound < c, || format!("k = {k}: Frobenius bound"));
        let reps = s.representations(&c);
        let Some(rep) = reps.first() else {
            run.failures.push(format!("k = {k}: 11^{k} has no representation"));
            continue;
        };
        // representations follow the generator order
        let (alpha, beta) = (rep[0].clone(), rep[1].clone());
        run.identity(&Identity::new(
            vec![Term::single(big(&c))],
            vec![Term::new(alpha.clone(), big(&a)), Term::new(beta.clone(), big(&b))],
        ));
        let (ra, rb) = (q(2, 77).pow(k), q(3, 77).pow(k));
        let target = PositiveRational::unit_fraction(Pow::pow(BigUint::from(7u32), k));
        run.identity(&Identity::new(
            vec![Term::single(target.clone())],
            vec![Term::new(alpha, ra.clone()), Term::new(beta, rb.clone())],
        ));
        let m = FgMonoid::new(vec![ra, rb])?;
        run.check(m.contains(&target.into()), || format!("k = {k}: 1/7^{k} not found in the monoid"));
    }
    Ok(())
}

fn c15(_: &VerifierParams, run: &mut Run) -> Result<()> {
    let monoids: Vec<FgMonoid> = vec![
        "1/2, 2/3".parse()?,
        "3/4, 5/6, 7/8".parse()?,
        FamilySpec::Cyclic { r: q(2, 3) }.truncate(3)?,
        FamilySpec::HalfPrime.truncate(4)?,
        FamilySpec::PowerDenominator { q: 2 }.truncate(3)?,
        FamilySpec::BfNotFf.truncate(4)?,
    ];
    for m in &monoids {
        let scaled = m.to_scaled_integer()?;
        let (factor, s) = (&scaled.factor, &scaled.semigroup);
        run.check(s.gcd().is_one(), || format!("{m}: scaled generators have gcd {}", s.gcd()));
        let back: Vec<PositiveRational> =
            s.generators().iter().map(|g| factor.scale_int(g).as_positive().expect("positive")).collect();
        run.check(sorted(back) == m.generators(), || format!("{m}: generators do not round-trip"));
        let atoms: Vec<PositiveRational> =
            s.minimal_generators().iter().map(|g| factor.scale_int(g).as_positive().expect("positive")).collect();
        run.check(sorted(atoms) == sorted(m.atoms()), || format!("{m}: minimal generators are not the atoms"));
        for g in s.minimal_generators() {
            let atom = factor.scale_int(&g);
            run.identity(&Identity::new(vec![Term::single(atom)], vec![Term::new(g, factor.clone())]));
        }
        let frob = s.frobenius()?;
        let smallest = s.minimal_generators()[0].to_u64().unwrap_or(u64::MAX).min(64);
        let top = frob.to_u64().map_or(0, |f| f + smallest);
        for k in 0..=top.min(400) {
            let x = factor.scale_int(&k.into());
            let (in_m, in_s) = (m.contains(&x), s.contains(&k.into()));
            run.check(in_m == in_s, || format!("{m}: membership of {x} disagrees"));
        }
        run.witnesses.push(format!("{m} = ({factor}) * <{}>, Frobenius {frob}", join(s.minimal_generators())));
    }
    Ok(())
}

fn join(v: Vec<BigUint>) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

type ClaimFn = fn(&VerifierParams, &mut Run) -> Result<()>;

fn lookup(id: &str) -> Option<(ClaimFn, &'static str)> {
    Some(match id {
        "C1" => (c1 as ClaimFn, "dense-monoid-constructive-approximation"),
        "C2" => (c2, "isomorphisms-are-rational-scalings"),
        "C3" => (c3, "disjoint-denominator-supports-not-isomorphic"),
        "C4" => (c4, "dense-atom-sets-by-distinct-prime-powers"),
        "C5" => (c5, "two-adic-odd-prime-not-hereditarily-atomic"),
        "C6" => (c6, "elementary-k-primary-antimatter"),
        "C7" => (c7, "partitioned-and-sum-k-primary-atoms"),
        "C8" => (c8, "strongly-bounded-p-adic-finitely-many-atoms"),
        "C9" => (c9, "p-adic-paired-example-antimatter"),
        "C10" => (c10, "p-adic-prime-power-numerators-decreasing-atomic"),
        "C11" => (c11, "atomic-multiplicatively-cyclic-factorization-counts"),
        "C12" => (c12, "bf-not-ff-atoms"),
        "C13" => (c13, "generalized-cyclic-gcd-embedding"),
        "C14" => (c14, "generalized-cyclic-coprime-numerators-membership"),
        "C15" => (c15, "finitely-generated-isomorphic-to-numerical-semigroup"),
        _ => return None,
    })
}

fn run_one(id: &str, params: &VerifierParams) -> ClaimOutcome {
    let (f, citation) = lookup(id).expect("ids are validated before running");
    let mut run = Run::default();
    let result = f(params, &mut run);
    let status = match (&result, id) {
        (Err(_), _) => Status::Inconclusive,
        (Ok(()), "C11") => Status::DataOnly,
        (Ok(()), _) if run.failures.is_empty() => Status::Confirmed,
        (Ok(()), _) => Status::Refuted,
    };
    if let Err(e) = result {
        run.notes.push(format!("stopped by error: {e}"));
    }
    let witnesses = match status {
        Status::Refuted => run.failures,
        _ => {
            run.notes.extend(run.failures);
            run.witnesses
        }
    };
    ClaimOutcome {
        claim_id: id.to_string(),
        status,
        witnesses,
        parameters: run.parameters,
        citation: citation.to_string(),
        notes: run.notes,
        data: run.data,
    }
}

fn claim_number(id: &str) -> u32 {
    id[1..].parse().expect("registered ids are C<number>")
}

/// Runs the named claims (or `"all"`) in parallel; outcomes come back in id order.
pub fn run_claims(ids: &[&str], params: &VerifierParams) -> Result<Vec<ClaimOutcome>> {
    let mut selected = BTreeSet::new();
    for &id in ids {
        if id.eq_ignore_ascii_case("all") {
            selected.extend(CLAIM_IDS);
        } else {
            let id = CLAIM_IDS
                .iter()
                .find(|c| c.eq_ignore_ascii_case(id))
                .ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
            selected.insert(*id);
        }
    }
    let mut ordered: Vec<&str> = selected.into_iter().collect();
    ordered.sort_by_key(|id| claim_number(id));
    Ok(std::thread::scope(|s| {
        let handles: Vec<_> = ordered.iter().map(|id| s.spawn(move || run_one(id, params))).collect();
        handles.into_iter().map(|h| h.join().expect("claim thread panicked")).collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_claim() {
        assert_eq!(run_claims(&["C99"], &VerifierParams::default()), Err(Error::UnknownClaim("C99".into())));
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(c11_oracle(1), 1);
        assert_eq!(c11_oracle(3), 3);
    }

    #[test]
    fn single_claims() {
        let out = run_claims(&["C14", "C11"], &VerifierParams::default()).unwrap();
        assert_eq!(out[0].claim_id, "C11");
        assert_eq!(out[0].status, Status::DataOnly);
        assert_eq!(out[1].status, Status::Confirmed, "{:?}", out[1]);
        assert!(out[1].witnesses.iter().any(|w| w == "11/1 = 4*(2/1) + 3/1"));
        for w in &out[1].witnesses {
            assert!(w.parse::<Identity>().unwrap().holds());
        }
    }
}
