//! Exhaustive enumeration of nonnegative solutions of `sum c_i * g_i = x`.
//!
//! Depth-first over the generators in a caller-chosen processing order, with
//! three prunes on each remainder: divisibility by the gcd of the generators
//! still to be processed, a residue table (smallest element of each residue
//! class modulo the last generator) when the last generator is small, and the
//! two-generator Frobenius bound. Coefficients step through the single
//! residue class compatible with the later generators' gcd, and remainders
//! proven dead are memoized.

use std::collections::HashSet;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TABLE_MODULUS_LIMIT: u64 = 1 << 20;
const TABLE_ENTRY_BUDGET: usize = 1 << 22;
const DEAD_MEMO_LIMIT: usize = 1 << 20;
const INF: u128 = u128::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Feasible {
    Yes,
    No,
    Maybe,
}

pub(crate) struct Knapsack {
    /// processing position -> caller index
    order: Vec<usize>,
    ordered: Vec<BigUint>,
    suffix_gcd: Vec<BigUint>,
    modulus: u64,
    tables: Vec<Option<Vec<u128>>>,
}

fn add_generator(w: &mut [u128], a: u128) {
    let m = w.len() as u128;
    let d = a.gcd(&m);
    for class in 0..d {
        let mut best = INF;
        let mut r = class;
        while r < m {
            best = best.min(w[r as usize]);
            r += d;
        }
        if best == INF {
            continue;
        }
        let mut n = best;
        for _ in 1..(m / d) {
            n += a;
            let slot = (n % m) as usize;
            n = n.min(w[slot]);
            w[slot] = n;
        }
    }
}

impl Knapsack {
    /// Processing order: largest generators first, the smallest last.
    pub(crate) fn new(gens: &[BigUint]) -> Self {
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.sort_by(|&a, &b| gens[b].cmp(&gens[a]));
        Self::with_order(gens, order)
    }

    /// Uses `order` (a permutation of indices) except that the smallest
    /// generator is always moved to the end, where it serves as the modulus.
    pub(crate) fn with_order(gens: &[BigUint], mut order: Vec<usize>) -> Self {
        assert!(!gens.is_empty(), "knapsack over an empty generating set");
        assert!(gens.iter().all(|g| !g.is_zero()), "zero generator");
        let smallest = (0..gens.len()).min_by(|&a, &b| gens[a].cmp(&gens[b])).unwrap();
        order.retain(|&i| i != smallest);
        order.push(smallest);

        let ordered: Vec<BigUint> = order.iter().map(|&i| gens[i].clone()).collect();
        let n = ordered.len();
        let mut suffix_gcd = vec![BigUint::zero(); n + 1];
        for i in (0..n).rev() {
            suffix_gcd[i] = suffix_gcd[i + 1].gcd(&ordered[i]);
        }

        let mut tables = vec![None; n];
        let mut modulus = 0;
        let fits = ordered.iter().all(|g| g.bits() <= 96);
        if let Some(m) = ordered[n - 1].to_u64().filter(|&m| m <= TABLE_MODULUS_LIMIT && fits) {
            modulus = m;
            let mut w = vec![INF; m as usize];
            w[0] = 0;
            let mut budget = TABLE_ENTRY_BUDGET;
            let mut kept: Vec<(usize, Vec<u128>)> = Vec::new();
            for i in (0..n).rev() {
                if i < n - 1 {
                    add_generator(&mut w, ordered[i].to_u128().unwrap());
                }
                if i == 0 || budget >= w.len() {
                    budget = budget.saturating_sub(w.len());
                    kept.push((i, w.clone()));
                }
            }
            for (i, t) in kept {
                tables[i] = Some(t);
            }
        }
        Knapsack { order, ordered, suffix_gcd, modulus, tables }
    }

    fn feasible(&self, i: usize, rem: &BigUint) -> Feasible {
        let n = self.ordered.len();
        if rem.is_zero() {
            return Feasible::Yes;
        }
        if i == n {
            return Feasible::No;
        }
        if !(rem % &self.suffix_gcd[i]).is_zero() {
            return Feasible::No;
        }
        if let Some(table) = &self.tables[i] {
            let slot = (rem % self.modulus).to_usize().unwrap();
            let w = table[slot];
            let ok = w != INF && rem.to_u128().is_none_or(|r| w <= r);
            return if ok { Feasible::Yes } else { Feasible::No };
        }
        if i == n - 1 {
            return Feasible::Yes;
        }
        if i == n - 2 {
            let g = &self.suffix_gcd[i];
            let a = &self.ordered[i] / g;
            let b = &self.ordered[n - 1] / g;
            if a.is_one() || b.is_one() {
                return Feasible::Yes;
            }
            // everything above ab - a - b is representable
            let r = rem / g;
            if &r + &a + &b > &a * &b {
                return Feasible::Yes;
            }
        }
        Feasible::Maybe
    }

    /// Whether `x` is a nonnegative combination; answers from the prunes alone when they decide.
    pub(crate) fn contains(&self, x: &BigUint) -> bool {
        match self.feasible(0, x) {
            Feasible::Yes => true,
            Feasible::No => false,
            Feasible::Maybe => self.find_one(x).is_some(),
        }
    }

    /// One solution, in caller index order.
    pub(crate) fn find_one(&self, x: &BigUint) -> Option<Vec<BigUint>> {
        let mut found = None;
        self.for_each(x, |c| {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    /// Every solution, in caller index order; the enumeration order is unspecified.
    pub(crate) fn all(&self, x: &BigUint) -> Vec<Vec<BigUint>> {
        let mut out = Vec::new();
        self.for_each(x, |c| {
            out.push(c.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    pub(crate) fn for_each<F>(&self, x: &BigUint, mut visit: F)
    where
        F: FnMut(&[BigUint]) -> ControlFlow<()>,
    {
        if self.feasible(0, x) == Feasible::No {
            return;
        }
        let n = self.ordered.len();
        let mut search = Search {
            ks: self,
            coeffs: vec![BigUint::zero(); n],
            out: vec![BigUint::zero(); n],
            dead: HashSet::new(),
            visit: &mut visit,
        };
        let _ = search.descend(0, x.clone());
    }
}

struct Search<'a, F> {
    ks: &'a Knapsack,
    coeffs: Vec<BigUint>,
    out: Vec<BigUint>,
    dead: HashSet<(usize, BigUint)>,
    visit: &'a mut F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&[BigUint]) -> ControlFlow<()>,
{
    /// Returns whether at least one solution was found below this node.
    fn descend(&mut self, i: usize, rem: BigUint) -> ControlFlow<(), bool> {
        let n = self.ks.ordered.len();
        let g = &self.ks.ordered[i];
        if i == n - 1 {
            let (q, r) = rem.div_rem(g);
            if !r.is_zero() {
                return ControlFlow::Continue(false);
            }
            self.coeffs[i] = q;
            for (pos, &idx) in self.ks.order.iter().enumerate() {
                self.out[idx] = self.coeffs[pos].clone();
            }
            (self.visit)(&self.out)?;
            return ControlFlow::Continue(true);
        }
        if self.dead.contains(&(i, rem.clone())) {
            return ControlFlow::Continue(false);
        }
        // Only coefficients with c*g = rem (mod gcd of the later generators)
        // can succeed; they form one residue class with period h/gcd(g, h).
        let h = &self.ks.suffix_gcd[i + 1];
        let d = g.gcd(h);
        let period = h / &d;
        let mut c = if period.is_one() {
            BigUint::zero()
        } else {
            let inv = (g / &d).modinv(&period).expect("coprime after dividing by the gcd");
            (&rem / &d % &period) * inv % &period
        };
        let stride = g * &period;
        let first = &c * g;
        if first > rem {
            self.mark_dead(i, rem);
            return ControlFlow::Continue(false);
        }
        let mut left = &rem - first;
        let mut any = false;
        loop {
            if self.ks.feasible(i + 1, &left) != Feasible::No {
                self.coeffs[i] = c.clone();
                if self.descend(i + 1, left.clone())? {
                    any = true;
                }
            }
            if left < stride {
                break;
            }
            left -= &stride;
            c += &period;
        }
        if !any {
            self.mark_dead(i, rem);
        }
        ControlFlow::Continue(any)
    }

    fn mark_dead(&mut self, i: usize, rem: BigUint) {
        if self.dead.len() < DEAD_MEMO_LIMIT {
            self.dead.insert((i, rem));
        }
    }
}
