//! Acceptance criteria 1-9. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line with its runtime and limit.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use puiseux::families::{
    approximate, colex_subset, cyclic_factorizations, cyclic_trade, dense_atom_monoid, kprimary_antimatter_witness,
    padic_candidate_atoms, paired_padic_identities, two_adic_identity, FamilySpec, IntSeq, PrimeSet, TargetSeq,
    TradeDirection,
};
use puiseux::primes::nth_prime;
use puiseux::{
    run_claims, Error, Factorization, FgMonoid, NonNegRational, NumericalSemigroup, PositiveRational, Status,
    VerifierParams,
};

type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn q(n: u64, d: u64) -> PositiveRational {
    PositiveRational::new(n, d).unwrap()
}

fn nn(r: &PositiveRational) -> NonNegRational {
    r.clone().into()
}

/// Largest integer that is not `alpha a + beta b`, by trying every candidate below `a b`.
fn frobenius_brute(a: u64, b: u64) -> i64 {
    let representable = |n: u64| (0..=n / b).any(|beta| (n - beta * b).is_multiple_of(a));
    (0..a * b).rev().find(|&n| !representable(n)).map_or(-1, |n| n as i64)
}

fn criterion_1() -> Check {
    for k in 1..=4u32 {
        let (a, b, c) = (2u64.pow(k), 3u64.pow(k), 11u64.pow(k));
        let s = NumericalSemigroup::new([a, b]).unwrap();
        let dp = s.frobenius_by_scan().unwrap();
        let oracle = BigInt::from(frobenius_brute(a, b));
        ensure(dp == oracle, || format!("k = {k}: scan {dp} vs brute force {oracle}"))?;
        ensure(s.frobenius().unwrap() == oracle, || format!("k = {k}: closed form disagrees"))?;
        let bound = (a - 1) * (b - 1);
        ensure(oracle < BigInt::from(bound) && bound < c, || format!("k = {k}: bound chain fails"))?;
        let reps = s.representations(&BigUint::from(c));
        ensure(!reps.is_empty(), || format!("k = {k}: 11^{k} has no representation"))?;
        for rep in &reps {
            let total = &rep[0] * a + &rep[1] * b;
            ensure(total == BigUint::from(c), || format!("k = {k}: representation {rep:?} sums to {total}"))?;
        }
        let m = FgMonoid::new(vec![q(2, 77).pow(k), q(3, 77).pow(k)]).unwrap();
        let target: NonNegRational = PositiveRational::unit_fraction(7u64.pow(k)).into();
        let z = m.membership_witness(&target).ok_or_else(|| format!("k = {k}: 1/7^{k} not a member"))?;
        ensure(z.evaluate() == target, || format!("k = {k}: witness does not evaluate to 1/7^{k}"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    for k in 2..=3u32 {
        let spec = FamilySpec::ElementaryKPrimary { k };
        let mut rank = 0u128;
        loop {
            let subset = colex_subset(k, rank);
            if *subset.last().unwrap() > 5 {
                break;
            }
            let primes: Vec<u64> = subset.iter().map(|&i| nth_prime(i as usize)).collect();
            let w = kprimary_antimatter_witness(&primes, 100_000).map_err(|e| format!("{primes:?}: {e}"))?;
            let (p, q_, pp, qq) = (BigUint::from(w.p), BigUint::from(w.q), &w.p_prime, &w.q_prime);
            let lhs = pp * qq;
            let rhs = BigUint::from(w.m) * &q_ * qq + BigUint::from(w.n) * &p * pp + &p * &q_;
            ensure(lhs == rhs, || format!("{primes:?}: integer identity fails"))?;
            ensure(w.integer_identity.holds() && w.decomposition.holds(), || format!("{primes:?}: identity fails"))?;
            let generator = spec.generator_at(rank as u64 + 1).unwrap();
            ensure(w.decomposition.lhs_value() == generator, || format!("{primes:?}: wrong generator"))?;
            // replay the decomposition from scratch
            let rest: BigUint = w.rest.clone();
            let unit = |d: BigUint| NonNegRational::from(PositiveRational::unit_fraction(d * &rest));
            let sum =
                &(&unit(&p * pp).scale_int(&w.m.into()) + &unit(&q_ * qq).scale_int(&w.n.into())) + &unit(pp * qq);
            ensure(sum == nn(&generator), || format!("{primes:?}: replayed decomposition fails"))?;
            rank += 1;
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    let out = dense_atom_monoid(&TargetSeq::CalkinWilf, 1, 100).map_err(|e| e.to_string())?;
    ensure(out.atoms.len() == 100, || "expected 100 generators".into())?;
    let mut primes = BTreeSet::new();
    for a in &out.atoms {
        let bound = NonNegRational::from(PositiveRational::unit_fraction(a.k));
        let diff = nn(&a.target).checked_sub(&nn(&a.atom)).or_else(|| nn(&a.atom).checked_sub(&nn(&a.target))).unwrap();
        ensure(diff < bound, || format!("k = {}: error {diff}", a.k))?;
        ensure(*a.atom.denominator() == Pow::pow(BigUint::from(a.prime), a.exponent), || {
            format!("k = {}: denominator", a.k)
        })?;
        ensure(primes.insert(a.prime), || format!("prime {} repeated", a.prime))?;
    }
    for n in 1..=100 {
        let gens: Vec<PositiveRational> = out.atoms[..n].iter().map(|a| a.atom.clone()).collect();
        let m = FgMonoid::new(gens).unwrap();
        let mut atoms = m.atoms();
        atoms.sort();
        ensure(atoms == m.generators(), || format!("truncation {n}: some generator is not an atom"))?;
    }
    Ok(())
}

/// Coefficient vectors `(c_1, ..., c_cap)` with `sum c_t r^t = x`, by direct
/// recursion on `sum c_t a^t b^(cap-t) = x b^cap`. Ordered with `c_cap` most significant.
fn cyclic_oracle(r: &PositiveRational, x: &NonNegRational, cap: u32) -> Vec<Vec<u64>> {
    let (a, b) = (r.numerator().to_u128().unwrap(), r.denominator().to_u128().unwrap());
    let scaled = x.scale_int(&BigUint::from(b).pow(cap));
    if !scaled.denominator().is_one() {
        return Vec::new();
    }
    let target = scaled.numerator().to_u128().unwrap();
    let weight = |t: u32| a.pow(t) * b.pow(cap - t);
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; cap as usize];
    fn rec(t: u32, rest: u128, w: &dyn Fn(u32) -> u128, coeffs: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if t == 0 {
            if rest == 0 {
                out.push(coeffs.clone());
            }
            return;
        }
        let wt = w(t);
        for c in 0..=rest / wt {
            coeffs[t as usize - 1] = c as u64;
            rec(t - 1, rest - c * wt, w, coeffs, out);
        }
        coeffs[t as usize - 1] = 0;
    }
    rec(cap, target, &weight, &mut coeffs, &mut out);
    out.sort_by(|u, v| u.iter().rev().cmp(v.iter().rev()));
    out
}

fn coefficient_vector(r: &PositiveRational, z: &Factorization, cap: u32) -> Vec<u64> {
    (1..=cap).map(|t| z.multiplicity(&r.pow(t)).to_u64().unwrap()).collect()
}

fn check_trades(r: &PositiveRational, zs: &[Factorization], cap: u32) -> Check {
    let shift = BigInt::from(r.numerator().clone()) - BigInt::from(r.denominator().clone());
    let set: BTreeSet<Vec<u64>> = zs.iter().map(|z| coefficient_vector(r, z, cap)).collect();
    for z in zs {
        for t in 1..cap {
            for dir in [TradeDirection::Up, TradeDirection::Down] {
                let Ok(w) = cyclic_trade(r, z, t, dir) else { continue };
                ensure(w.evaluate() == z.evaluate(), || format!("trade at {t} changes the element"))?;
                let dl = BigInt::from(w.length()) - BigInt::from(z.length());
                ensure(dl == shift || dl == -&shift, || format!("trade at {t} shifts length by {dl}"))?;
                ensure(set.contains(&coefficient_vector(r, &w, cap)), || format!("trade at {t} leaves the set"))?;
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    let cap = 8;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for r in [q(2, 3), q(3, 2), q(2, 5), q(5, 2)] {
        for _ in 0..20 {
            let mut x = NonNegRational::zero();
            for _ in 0..rng.gen_range(1..=3) {
                // at most four trades from the edge of the window, so |Z(x)| stays in the hundreds
                let t = if r > q(1, 1) { rng.gen_range(1..=5) } else { rng.gen_range(cap - 4..=cap) };
                let c: u32 = rng.gen_range(1..=2);
                x = &x + &r.pow(t).scale_int(&c.into());
            }
            let zs = cyclic_factorizations(&r, &x, cap).map_err(|e| e.to_string())?;
            let got: Vec<Vec<u64>> = zs.iter().map(|z| coefficient_vector(&r, z, cap)).collect();
            let want = cyclic_oracle(&r, &x, cap);
            ensure(got == want, || format!("r = {r}, x = {x}: {} factorizations vs oracle {}", got.len(), want.len()))?;
            check_trades(&r, &zs, cap)?;
        }
    }
    let r = q(3, 2);
    let zs = cyclic_factorizations(&r, &nn(&q(9, 2)), cap).unwrap();
    let got: Vec<_> = zs.iter().map(|z| coefficient_vector(&r, z, 2)).collect();
    ensure(got == [vec![3, 0], vec![0, 2]], || format!("r = 3/2, x = 9/2: {got:?}"))?;
    let lengths: BTreeSet<u64> = zs.iter().map(|z| z.length().to_u64().unwrap()).collect();
    ensure(lengths == BTreeSet::from([2, 3]), || format!("lengths {lengths:?}"))?;

    let r = q(2, 3);
    let x = nn(&q(4, 3));
    let zs = cyclic_factorizations(&r, &x, 3).unwrap();
    let got: Vec<_> = zs.iter().map(|z| coefficient_vector(&r, z, 3)).collect();
    ensure(got == [vec![2, 0, 0], vec![0, 3, 0], vec![0, 1, 3]], || format!("r = 2/3, x = 4/3: {got:?}"))?;
    ensure(got == cyclic_oracle(&r, &x, 3), || "oracle disagrees at 4/3".into())?;
    let lengths: Vec<u64> = zs.iter().map(|z| z.length().to_u64().unwrap()).collect();
    ensure(lengths == [2, 3, 4], || format!("lengths {lengths:?}"))?;
    check_trades(&r, &zs, 3)
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let specs = [
        FamilySpec::PowerDenominator { q: 2 },
        FamilySpec::PowerDenominator { q: 7 },
        FamilySpec::Cyclic { r: q(2, 3) },
        FamilySpec::Cyclic { r: q(5, 7) },
        FamilySpec::PairedPAdic { p: 5 },
        FamilySpec::TwoAdicOddPrime,
        FamilySpec::ElementaryPrimary { primes: PrimeSet::Congruent { modulus: 4, residue: 3 } },
        FamilySpec::PAdic { p: 3, numerators: IntSeq::Constant { c: 2 }, exponents: IntSeq::Affine { a: 1, b: 0 } },
        FamilySpec::ElementaryKPrimary { k: 2 },
    ];
    for _ in 0..200 {
        let spec = &specs[rng.gen_range(0..specs.len())];
        let target = q(rng.gen_range(1..=100), rng.gen_range(1..=100));
        let eps = q(1, rng.gen_range(1..=1000));
        let a = approximate(spec, &target, &eps).map_err(|e| format!("{spec}: {e}"))?;
        let gap = nn(&target).checked_sub(&nn(&a.value)).ok_or("result exceeds target")?;
        ensure(!gap.is_zero() && gap < nn(&eps), || format!("{spec}, {target}, {eps}: gap {gap}"))?;
        ensure(spec.generator_at(a.index).unwrap() == a.generator, || format!("{spec}: generator index"))?;
        let z = FgMonoid::new(vec![a.generator.clone()])
            .unwrap()
            .membership_witness(&nn(&a.value))
            .ok_or_else(|| format!("{spec}: no membership witness"))?;
        ensure(z.evaluate() == nn(&a.value), || format!("{spec}: witness value"))?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    for p in [3u64, 5] {
        for n in 1..=3u32 {
            let ids = paired_padic_identities(p, n).map_err(|e| e.to_string())?;
            ensure(ids.iter().all(|i| i.holds()), || format!("p = {p}, n = {n}"))?;
            // independent replay
            let big = Pow::pow(BigUint::from(p), 1u32 << n);
            let sq = &big * &big;
            let lo = NonNegRational::from_biguints(&big - 1u32, sq.clone());
            let hi = NonNegRational::from_biguints(&big + 1u32, sq.clone());
            let two = NonNegRational::from_biguints(BigUint::from(2u32), big.clone());
            ensure(&lo + &hi == two, || format!("p = {p}, n = {n}: pair sum"))?;
            let inner = NonNegRational::from_biguints(BigUint::from(2u32), sq);
            ensure(inner.scale_int(&((&big - 1u32) / 2u32)) == lo, || format!("p = {p}, n = {n}: lower"))?;
            ensure(inner.scale_int(&((&big + 1u32) / 2u32)) == hi, || format!("p = {p}, n = {n}: upper"))?;
        }
    }
    for n in 1..=10u32 {
        let id = two_adic_identity(n).map_err(|e| e.to_string())?;
        ensure(id.holds(), || format!("n = {n}"))?;
        let pn = nth_prime(n as usize + 1);
        let two_n = BigUint::one() << n;
        let rhs = NonNegRational::from(PositiveRational::unit_fraction(&two_n * pn)).scale_int(&pn.into());
        ensure(rhs == PositiveRational::unit_fraction(two_n), || format!("n = {n}: replay"))?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    let exp = |a| IntSeq::Affine { a, b: 0 };
    let examples = [
        FamilySpec::PAdic { p: 2, numerators: IntSeq::Power { q: 3 }, exponents: exp(2) },
        FamilySpec::PAdic {
            p: 2,
            numerators: IntSeq::Explicit { values: vec![9, 3], tail: Some(Box::new(IntSeq::Power { q: 3 })) },
            exponents: exp(1),
        },
    ];
    let n = 6;
    for spec in &examples {
        let out = padic_candidate_atoms(spec, n).map_err(|e| e.to_string())?;
        let gens = spec.generators(n).unwrap();
        for &i in &out.kept {
            let g = &gens[i as usize - 1];
            let others = FgMonoid::from_list(gens.iter().filter(|h| *h != g).cloned().collect());
            ensure(!others.contains(&nn(g)), || format!("{spec}: kept r_{i} is representable"))?;
        }
        for e in &out.excluded {
            let (ri, rm) = (&gens[e.index as usize - 1], &gens[e.via as usize - 1]);
            let coeff = Pow::pow(BigUint::from(out.p), e.p_power) * Pow::pow(BigUint::from(out.q), e.q_power);
            ensure(rm.scale_int(&coeff) == nn(ri), || format!("{spec}: r_{} != {coeff} r_{}", e.index, e.via))?;
            ensure(out.kept.contains(&e.via), || format!("{spec}: r_{} is not kept", e.via))?;
        }
        let covered: BTreeSet<u64> = out.kept.iter().copied().chain(out.excluded.iter().map(|e| e.index)).collect();
        ensure(covered == (1..=n).collect(), || format!("{spec}: indices not partitioned"))?;
    }
    ensure(out_kept(&examples[0], n)? == [1, 2, 3, 4, 5, 6], || "first example keeps every index".into())?;
    ensure(out_kept(&examples[1], 4)? == [2, 3, 4], || "second example keeps 2, 3, 4".into())?;
    let bounded = FamilySpec::PAdic { p: 2, numerators: IntSeq::Constant { c: 3 }, exponents: exp(1) };
    match padic_candidate_atoms(&bounded, 3) {
        Err(Error::HypothesisViolated(why)) if why.contains("bounded") => Ok(()),
        other => Err(format!("bounded numerators: {other:?}")),
    }
}

fn out_kept(spec: &FamilySpec, n: u64) -> Result<Vec<u64>, String> {
    padic_candidate_atoms(spec, n).map(|o| o.kept).map_err(|e| e.to_string())
}

fn random_monoid(rng: &mut ChaCha8Rng) -> FgMonoid {
    let k = rng.gen_range(1..=4);
    let gens = (0..k).map(|_| q(rng.gen_range(1..=30), rng.gen_range(1..=30))).collect();
    FgMonoid::new(gens).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng, m: &FgMonoid) -> NonNegRational {
    if rng.gen_bool(0.3) {
        return nn(&q(rng.gen_range(1..=60), rng.gen_range(1..=30)));
    }
    m.generators().iter().fold(NonNegRational::zero(), |s, g| &s + &g.scale_int(&rng.gen_range(0u32..=3).into()))
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let m = random_monoid(&mut rng);
        let factor = q(rng.gen_range(1..=12), rng.gen_range(1..=12));
        let scaled = m.scale(&factor);
        for _ in 0..3 {
            let x = random_element(&mut rng, &m);
            let zs = m.factorizations(&x);
            ensure(zs.is_empty() != m.contains(&x), || format!("{m}, {x}: factorizations vs contains"))?;
            for z in &zs {
                ensure(z.evaluate() == x, || format!("{m}, {x}: factorization {z} evaluates wrongly"))?;
            }
            let image: BTreeSet<String> = zs.iter().map(|z| z.scale(&factor).to_string()).collect();
            let direct: BTreeSet<String> =
                scaled.factorizations(&(&x * &factor)).iter().map(ToString::to_string).collect();
            ensure(image.len() == zs.len() && image == direct, || {
                format!("{m} scaled by {factor}: no bijection at {x}")
            })?;
            let support: BTreeSet<PositiveRational> =
                zs.iter().flat_map(|z| z.terms().map(|(a, _)| a.clone()).collect::<Vec<_>>()).collect();
            let reported: BTreeSet<PositiveRational> = m.atom_support(&x).into_iter().collect();
            ensure(support == reported, || format!("{m}, {x}: atom support"))?;
        }
        let w = m.isomorphism_witness(&scaled);
        let back = scaled.isomorphism_witness(&m);
        ensure(w == Some(factor.clone()) && back == Some(factor.recip()), || format!("{m} and its scaling"))?;
        let other = random_monoid(&mut rng);
        let (f, b) = (m.isomorphism_witness(&other), other.isomorphism_witness(&m));
        ensure(f.as_ref().map(PositiveRational::recip) == b, || format!("{m} vs {other}: witnesses not inverse"))?;
    }
    Ok(())
}

fn criterion_9() -> Check {
    let out = run_claims(&["all"], &VerifierParams::default()).map_err(|e| e.to_string())?;
    ensure(out.len() == 15, || format!("{} outcomes", out.len()))?;
    for o in &out {
        let want = if o.claim_id == "C11" { Status::DataOnly } else { Status::Confirmed };
        ensure(o.status == want, || format!("{}: {:?} {:?} {:?}", o.claim_id, o.status, o.witnesses, o.notes))?;
        ensure(!o.witnesses.is_empty() || o.status == Status::DataOnly, || format!("{}: no witnesses", o.claim_id))?;
    }
    let c11 = out.iter().find(|o| o.claim_id == "C11").unwrap();
    let counts = c11.data.as_ref().and_then(|d| d["counts"].as_array()).ok_or("C11 has no counts")?;
    ensure(counts.len() == 8, || format!("C11 reports {} caps", counts.len()))?;
    let (r, x) = (q(2, 3), nn(&q(4, 3)));
    for entry in counts {
        let cap = entry["cap"].as_u64().unwrap() as u32;
        let want = cyclic_oracle(&r, &x, cap).len() as u64;
        ensure(entry["count"].as_u64() == Some(want), || format!("C11 cap {cap}: {entry} vs oracle {want}"))?;
    }
    ensure(counts[2]["count"].as_u64() == Some(3), || "C11 cap 3 count".into())
}

type Criterion = (&'static str, fn() -> Check, u64);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("frobenius chain and 1/7^k membership", criterion_1, 5),
        ("k-primary antimatter witnesses", criterion_2, 10),
        ("dense-atom construction", criterion_3, 30),
        ("cyclic enumeration vs oracle", criterion_4, 30),
        ("constructive approximation", criterion_5, 5),
        ("paired p-adic and two-adic identities", criterion_6, 1),
        ("p-adic atom extraction", criterion_7, 10),
        ("finitely generated engine properties", criterion_8, 60),
        ("claim verifier", criterion_9, 120),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result
            .and_then(|()| ensure(elapsed < Duration::from_secs(*limit), || format!("exceeded the {limit} s limit")));
        match result {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?} < {limit} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}, limit {limit} s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
