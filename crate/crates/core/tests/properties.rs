//! Randomized invariants checked against independently coded oracles.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use puiseux::families::{
    approximate, cyclic_contains, cyclic_factorizations, cyclic_trade, dense_atom_monoid, paired_padic_identities,
    within_reciprocal, CyclicMembership, FamilySpec, TargetSeq, TradeDirection,
};
use puiseux::primes::{is_prime_u64, prime_in_progression};
use puiseux::{p_adic_valuation, ExtendedInt, FgMonoid, NonNegRational, NumericalSemigroup, PositiveRational};

fn q(n: u64, d: u64) -> PositiveRational {
    PositiveRational::new(n, d).unwrap()
}

fn nn(r: &PositiveRational) -> NonNegRational {
    r.into()
}

fn pos() -> impl Strategy<Value = PositiveRational> {
    (1u64..=5000, 1u64..=5000).prop_map(|(n, d)| q(n, d))
}

fn small_prime() -> impl Strategy<Value = BigUint> {
    prop::sample::select(vec![2u32, 3, 5, 7, 11]).prop_map(BigUint::from)
}

/// Every x in 0..=limit reachable as a nonnegative combination of `gens`.
fn reachable(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut ok = vec![false; limit as usize + 1];
    ok[0] = true;
    for x in 1..=limit {
        ok[x as usize] = gens.iter().any(|&g| g <= x && ok[(x - g) as usize]);
    }
    ok
}

/// Exhaustive rational-combination search, independent of denominator clearing.
fn rational_member(gens: &[PositiveRational], x: &NonNegRational) -> bool {
    if x.is_zero() {
        return true;
    }
    let Some((g, rest)) = gens.split_first() else {
        return false;
    };
    let mut left = x.clone();
    loop {
        if rational_member(rest, &left) {
            return true;
        }
        match left.checked_sub(&nn(g)) {
            Some(l) => left = l,
            None => return false,
        }
    }
}

fn fg_gens() -> impl Strategy<Value = Vec<PositiveRational>> {
    prop::collection::vec((1u64..=30, 1u64..=30).prop_map(|(n, d)| q(n, d)), 1..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_are_reduced(n in 1u64..=1_000_000, d in 1u64..=1_000_000) {
        let r = q(n, d);
        prop_assert!(r.numerator().gcd(r.denominator()).is_one());
        prop_assert_eq!(r.numerator() * BigUint::from(d), r.denominator() * BigUint::from(n));
    }

    #[test]
    fn valuation_is_multiplicative(p in small_prime(), x in pos(), y in pos()) {
        let vx = p_adic_valuation(&p, &nn(&x)).unwrap();
        let vy = p_adic_valuation(&p, &nn(&y)).unwrap();
        prop_assert_eq!(p_adic_valuation(&p, &nn(&(&x * &y))).unwrap(), vx + vy);
    }

    #[test]
    fn valuation_of_sum_is_at_least_the_minimum(p in small_prime(), rs in prop::collection::vec(pos(), 1..=6)) {
        let total = rs.iter().fold(NonNegRational::zero(), |acc, r| &acc + &nn(r));
        let min = rs.iter().map(|r| p_adic_valuation(&p, &nn(r)).unwrap()).min().unwrap();
        prop_assert!(p_adic_valuation(&p, &total).unwrap() >= min);
        prop_assert!(p_adic_valuation(&p, &NonNegRational::zero()).unwrap() == ExtendedInt::Infinity);
    }

    #[test]
    fn progression_prime_is_the_first(first in 1u64..=500, step in 1u64..=500, max in 1u64..=50) {
        match prime_in_progression(&first.into(), &step.into(), max) {
            Ok((k, p)) => {
                prop_assert!(k >= 1 && k <= max);
                prop_assert_eq!(p.to_u64().unwrap(), first + k * step);
                prop_assert!(is_prime_u64(first + k * step));
                prop_assert!((1..k).all(|j| !is_prime_u64(first + j * step)));
            }
            Err(_) => prop_assert!((1..=max).all(|j| !is_prime_u64(first + j * step))),
        }
    }

    #[test]
    fn two_generator_frobenius(a in 2u64..=50, b in 2u64..=50) {
        prop_assume!(a.gcd(&b) == 1);
        let ns = NumericalSemigroup::new([a, b]).unwrap();
        let f = ns.frobenius().unwrap().to_i64().unwrap();
        let ok = reachable(&[a, b], a * b);
        let scanned = (0..=a * b).rev().find(|&x| !ok[x as usize]).unwrap() as i64;
        prop_assert_eq!(f, scanned);
        prop_assert_eq!(f, (a * b - a - b) as i64);
        prop_assert_eq!(ns.frobenius_by_scan().unwrap().to_i64().unwrap(), f);
    }

    #[test]
    fn semigroup_membership_and_representations(gens in prop::collection::vec(1u64..=40, 1..=4), x in 0u64..=300) {
        let ns = NumericalSemigroup::new(gens.clone()).unwrap();
        let ok = reachable(&gens, 300);
        prop_assert_eq!(ns.contains(&x.into()), ok[x as usize]);
        let reps = ns.representations(&x.into());
        prop_assert_eq!(!reps.is_empty(), ok[x as usize]);
        for rep in &reps {
            let total: BigUint = rep.iter().zip(ns.generators()).map(|(c, g)| c * g).sum();
            prop_assert_eq!(total, BigUint::from(x));
        }
        if ns.gcd().is_one() {
            let f = ns.frobenius().unwrap();
            let max = ns.generators().last().unwrap().to_u64().unwrap();
            let start = (f + 1i32).to_u64().unwrap();
            for y in start..start + max {
                prop_assert!(ns.contains(&y.into()));
            }
        }
    }

    #[test]
    fn minimal_generators_are_minimal(gens in prop::collection::vec(1u64..=40, 1..=5)) {
        let ns = NumericalSemigroup::new(gens.clone()).unwrap();
        let min = ns.minimal_generators();
        let reduced = NumericalSemigroup::new(min.clone()).unwrap();
        for g in &gens {
            prop_assert!(reduced.contains(&(*g).into()));
        }
        for (i, g) in min.iter().enumerate() {
            let others: Vec<BigUint> = min.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
            if !others.is_empty() {
                prop_assert!(!NumericalSemigroup::new(others).unwrap().contains(g));
            }
        }
    }

    #[test]
    fn fg_factorizations_round_trip(gens in fg_gens(), coeffs in prop::collection::vec(0u64..=3, 4), xn in 1u64..=60, xd in 1u64..=30) {
        let m = FgMonoid::new(gens.clone()).unwrap();
        let member = gens.iter().zip(&coeffs).fold(NonNegRational::zero(), |acc, (g, &c)| &acc + &nn(g).scale_int(&c.into()));
        for x in [member, nn(&q(xn, xd))] {
            let zs = m.factorizations(&x);
            prop_assert_eq!(!zs.is_empty(), m.contains(&x));
            prop_assert_eq!(m.contains(&x), rational_member(&gens, &x));
            let atoms: BTreeSet<_> = m.atoms().into_iter().collect();
            for z in &zs {
                prop_assert_eq!(z.evaluate(), x.clone());
                prop_assert!(z.terms().all(|(a, _)| atoms.contains(a)));
            }
            let support: BTreeSet<_> = m.atom_support(&x).into_iter().collect();
            let used: BTreeSet<_> = zs.iter().flat_map(|z| z.terms().map(|(a, _)| a.clone())).collect();
            prop_assert_eq!(support, used);
        }
    }

    #[test]
    fn fg_scaling_is_equivariant(gens in fg_gens(), s in (1u64..=12, 1u64..=12), xn in 1u64..=40, xd in 1u64..=12) {
        let s = q(s.0, s.1);
        let m = FgMonoid::new(gens).unwrap();
        let sm = m.scale(&s);
        let scaled: Vec<_> = m.atoms().iter().map(|a| a * &s).collect();
        prop_assert_eq!(sm.atoms(), scaled);
        let x = nn(&q(xn, xd));
        let zs: Vec<_> = m.factorizations(&x).iter().map(|z| z.scale(&s)).collect();
        prop_assert_eq!(&sm.factorizations(&(&x * &s)), &zs);
        prop_assert_eq!(m.isomorphism_witness(&sm), Some(s.clone()));
        prop_assert_eq!(sm.isomorphism_witness(&m), Some(s.recip()));
    }

    #[test]
    fn fg_isomorphism_is_symmetric(a in fg_gens(), b in fg_gens()) {
        let (ma, mb) = (FgMonoid::new(a).unwrap(), FgMonoid::new(b).unwrap());
        match ma.isomorphism_witness(&mb) {
            Some(r) => prop_assert_eq!(mb.isomorphism_witness(&ma), Some(r.recip())),
            None => prop_assert_eq!(mb.isomorphism_witness(&ma), None),
        }
    }

    #[test]
    fn cyclic_output_is_closed_under_trades(
        r in prop::sample::select(vec![(2u64, 3u64), (3, 2), (3, 5), (5, 3), (2, 7), (4, 3)]),
        terms in prop::collection::vec((1u32..=4, 1u64..=2), 1..=3),
    ) {
        let (cap, r) = (4, q(r.0, r.1));
        let x = terms.iter().fold(NonNegRational::zero(), |acc, &(t, c)| &acc + &nn(&r.pow(t)).scale_int(&c.into()));
        let zs = cyclic_factorizations(&r, &x, cap).unwrap();
        prop_assert!(!zs.is_empty());
        let shift = r.numerator().max(r.denominator()) - r.numerator().min(r.denominator());
        let set: BTreeSet<String> = zs.iter().map(|z| format!("{z:?}")).collect();
        for z in &zs {
            for t in 1..cap {
                for dir in [TradeDirection::Up, TradeDirection::Down] {
                    let Ok(w) = cyclic_trade(&r, z, t, dir) else { continue };
                    prop_assert_eq!(w.evaluate(), z.evaluate());
                    let delta = if w.length() > z.length() { w.length() - z.length() } else { z.length() - w.length() };
                    prop_assert_eq!(&delta, &shift);
                    let key = format!("{w:?}");
                    prop_assert!(set.contains(&key));
                }
            }
        }
    }

    #[test]
    fn cyclic_certificates_never_misfire(
        r in prop::sample::select(vec![(2u64, 3u64), (3, 2), (4, 9), (9, 4), (6, 35), (1, 2), (5, 1)]),
        coeffs in prop::collection::vec(0u64..=3, 5),
    ) {
        let r = q(r.0, r.1);
        let x = coeffs.iter().enumerate().fold(NonNegRational::zero(), |acc, (i, &c)| {
            &acc + &nn(&r.pow(i as u32 + 1)).scale_int(&c.into())
        });
        match cyclic_contains(&r, &x, 5).unwrap() {
            CyclicMembership::Member { factorization } => prop_assert_eq!(factorization.evaluate(), x),
            other => prop_assert!(false, "{r}, {x}: {other:?}"),
        }
    }

    #[test]
    fn approximation_contract(
        spec in prop::sample::select(vec![
            FamilySpec::PowerDenominator { q: 3 },
            FamilySpec::Cyclic { r: q(3, 4) },
            FamilySpec::TwoAdicOddPrime,
            FamilySpec::PairedPAdic { p: 3 },
        ]),
        target in (1u64..=50, 1u64..=50),
        eps in 1u64..=500,
    ) {
        let (target, eps) = (q(target.0, target.1), q(1, eps));
        let a = approximate(&spec, &target, &eps).unwrap();
        let gap = nn(&target).checked_sub(&nn(&a.value)).unwrap();
        prop_assert!(!gap.is_zero() && gap < nn(&eps));
        prop_assert_eq!(spec.generator_at(a.index).unwrap(), a.generator.clone());
        prop_assert_eq!(nn(&a.generator).scale_int(&a.multiplier), nn(&a.value));
    }

    #[test]
    fn dense_atom_contract(targets in prop::collection::vec((0u64..=40, 1u64..=40), 1..=12), class in 1u32..=3) {
        let values: Vec<NonNegRational> = targets.iter().map(|&(n, d)| NonNegRational::from_biguints(n.into(), d.into())).collect();
        prop_assume!(values.iter().all(|v| !v.is_zero()));
        let out = dense_atom_monoid(&TargetSeq::Explicit { values }, class, targets.len() as u64).unwrap();
        let mut primes = BTreeSet::new();
        for a in &out.atoms {
            prop_assert!(within_reciprocal(&a.target, &a.atom, a.k));
            prop_assert_eq!(a.atom.denominator(), &num_traits::pow(BigUint::from(a.prime), a.exponent as usize));
            prop_assert!(primes.insert(a.prime));
        }
        let mut atoms = out.monoid.atoms();
        atoms.sort();
        let mut gens: Vec<_> = out.atoms.iter().map(|a| a.atom.clone()).collect();
        gens.sort();
        prop_assert_eq!(atoms, gens);
    }

    #[test]
    fn paired_padic_identities_hold(p in prop::sample::select(vec![3u64, 5, 7, 11, 13]), n in 1u32..=3) {
        for id in paired_padic_identities(p, n).unwrap() {
            prop_assert!(id.holds());
        }
    }
}

#[test]
fn rational_oracle_sanity() {
    assert!(rational_member(&[q(2, 3), q(1, 2)], &nn(&q(7, 6))));
    assert!(!rational_member(&[q(2, 3), q(1, 2)], &nn(&q(1, 6))));
    assert_eq!(reachable(&[3, 5], 8), [true, false, false, true, false, true, true, false, true]);
}
