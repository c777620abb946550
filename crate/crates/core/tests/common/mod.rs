//! Brute-force reference implementations used to cross-check the library.
//!
//! Everything here is deliberately naive: plain membership sieves,
//! pairwise Minkowski sums, window scans and subset filters. No Apéry
//! sets, no bitmasks, no canonical forms — independent code paths that
//! would not plausibly share a bug with the crate under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use usplit_core::{NumericalSemigroup, RelativeIdeal};

/// A semigroup `B` containing `over`, viewed as a relative ideal over
/// `over`: its elements below conductor + multiplicity generate it as a
/// module (anything larger is multiplicity + a smaller element).
pub fn as_module(over: &NumericalSemigroup, b: &NumericalSemigroup) -> RelativeIdeal {
    let gens: Vec<i64> = b
        .elements_below(b.conductor_number() + over.multiplicity())
        .collect();
    RelativeIdeal::from_generators(over, &gens).expect("semigroup elements")
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Membership table for the monoid generated by `gens`, up to and
/// including `bound`: `table[z]` says whether `z` is a sum of generators.
pub fn naive_membership(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut table = vec![false; (bound + 1).max(1) as usize];
    table[0] = true;
    for z in 1..=bound {
        table[z as usize] = gens.iter().any(|&g| g <= z && table[(z - g) as usize]);
    }
    table
}

/// Gaps computed from the sieve. The bound `2 * max(gens)^2` exceeds every
/// Frobenius number: classically F < multiplicity * max(gens) <= max^2.
pub fn naive_gaps(gens: &[i64]) -> Vec<i64> {
    let bound = 2 * gens.iter().max().unwrap().pow(2);
    let table = naive_membership(gens, bound);
    (0..=bound).filter(|&z| !table[z as usize]).collect()
}

/// Smallest `c` with everything from `c` upward in the monoid.
pub fn naive_conductor(gens: &[i64]) -> i64 {
    naive_gaps(gens).last().map_or(0, |f| f + 1)
}

/// Minimal generators: positive elements that are not sums of two
/// positive elements.
pub fn naive_minimal_generators(gens: &[i64]) -> Vec<i64> {
    let bound = 2 * gens.iter().max().unwrap().pow(2);
    let table = naive_membership(gens, bound);
    let positives: Vec<i64> = (1..=bound).filter(|&z| table[z as usize]).collect();
    // Nothing past the conductor plus multiplicity can be minimal.
    let limit = naive_conductor(gens) + positives[0];
    positives
        .iter()
        .copied()
        .take_while(|&z| z <= limit)
        .filter(|&z| {
            !positives
                .iter()
                .take_while(|&&x| x < z)
                .any(|&x| table[(z - x) as usize])
        })
        .collect()
}

/// A cofinite set of integers in naive form: the members up to `bound`,
/// plus the guarantee that everything above `bound` belongs to the set.
#[derive(Debug, Clone)]
pub struct NaiveSet {
    pub elements: BTreeSet<i64>,
    pub bound: i64,
}

impl NaiveSet {
    pub fn contains(&self, z: i64) -> bool {
        z > self.bound || self.elements.contains(&z)
    }

    pub fn min(&self) -> i64 {
        *self.elements.first().expect("cofinite sets are non-empty")
    }

    /// Full agreement with a library ideal: pointwise on a window that
    /// covers both tails, hence everywhere.
    pub fn matches(&self, lib: &RelativeIdeal) -> bool {
        let hi = self.bound.max(lib.tail_start());
        let lo = self.min().min(lib.min()) - 2;
        (lo..=hi).all(|z| lib.contains(z) == self.contains(z))
    }

    fn same_as(&self, other: &NaiveSet) -> bool {
        let hi = self.bound.max(other.bound);
        let lo = self.min().min(other.min()) - 1;
        (lo..=hi).all(|z| self.contains(z) == other.contains(z))
    }

    fn shift(&self, d: i64) -> NaiveSet {
        NaiveSet {
            elements: self.elements.iter().map(|&z| z + d).collect(),
            bound: self.bound + d,
        }
    }
}

/// The relative ideal generated by `ideal_gens` over the monoid generated
/// by `s_gens`, i.e. the union of the translates `g + S`.
pub fn naive_ideal(s_gens: &[i64], ideal_gens: &[i64]) -> NaiveSet {
    let c = naive_conductor(s_gens);
    let max_g = *ideal_gens.iter().max().unwrap();
    let min_g = *ideal_gens.iter().min().unwrap();
    // Above max(gens) + c every integer is gen + (something past the
    // conductor of S).
    let bound = max_g + c;
    let table = naive_membership(s_gens, bound - min_g);
    let mut elements = BTreeSet::new();
    for &g in ideal_gens {
        for s in 0..=(bound - g) {
            if table[s as usize] {
                elements.insert(g + s);
            }
        }
    }
    NaiveSet { elements, bound }
}

/// Product of two generated ideals: pairwise sums of the generator sets
/// generate the product.
pub fn naive_product(s_gens: &[i64], e_gens: &[i64], f_gens: &[i64]) -> NaiveSet {
    let mut sums = Vec::new();
    for &e in e_gens {
        for &f in f_gens {
            sums.push(e + f);
        }
    }
    naive_ideal(s_gens, &sums)
}

/// Colon `(E : F)` for generated ideals: `z` qualifies iff `z + g` lands
/// in `E` for every generator `g` of `F` (module closure makes the
/// generators enough).
pub fn naive_colon(s_gens: &[i64], e_gens: &[i64], f_gens: &[i64]) -> NaiveSet {
    let e = naive_ideal(s_gens, e_gens);
    let max_f = *f_gens.iter().max().unwrap();
    let min_f = *f_gens.iter().min().unwrap();
    // z above this is in the colon: z + g > max(E gens) + conductor for
    // every generator g of F.
    let bound = e.bound - min_f;
    let lo = e.min() - max_f;
    let elements = (lo..=bound)
        .filter(|&z| f_gens.iter().all(|&g| e.contains(z + g)))
        .collect();
    NaiveSet { elements, bound }
}

pub fn naive_dual(s_gens: &[i64], e_gens: &[i64]) -> NaiveSet {
    naive_colon(s_gens, &[0], e_gens)
}

/// Set-level product of two naive cofinite sets, used where one factor is
/// not presented by generators (e.g. the dual inside a trace).
pub fn naive_set_product(d: &NaiveSet, e: &NaiveSet) -> NaiveSet {
    // Everything above min(one side) + bound(other side) is a sum.
    let bound = (d.min() + e.bound).min(e.min() + d.bound);
    let mut elements = BTreeSet::new();
    for x in d.min()..=(bound - e.min()) {
        if !d.contains(x) {
            continue;
        }
        for y in e.min()..=(bound - x) {
            if e.contains(y) {
                elements.insert(x + y);
            }
        }
    }
    NaiveSet { elements, bound }
}

/// Trace of a generated ideal: `(S : E) * E`.
pub fn naive_trace(s_gens: &[i64], e_gens: &[i64]) -> NaiveSet {
    let dual = naive_dual(s_gens, e_gens);
    let e = naive_ideal(s_gens, e_gens);
    naive_set_product(&dual, &e)
}

/// Gap list of the blow-up monoid of a regular ideal. The chain
/// `(I^n : I^n)` is constant once the power chain stabilizes, i.e. once
/// `I^(n+1)` is `min(I) + I^n` as a set — consecutive *endomorphism*
/// sets being equal is not a sound stopping rule (the chain can plateau
/// and then jump), so the power chain is what gets watched.
pub fn naive_blowup_gaps(s_gens: &[i64], i_gens: &[i64]) -> Vec<i64> {
    assert!(i_gens.iter().all(|&g| g >= 1), "blow-up oracle needs a regular ideal");
    let m0 = *i_gens.iter().min().unwrap();
    let mut power_gens: Vec<i64> = i_gens.to_vec();
    let mut power = naive_ideal(s_gens, &power_gens);
    for _ in 0..96 {
        let mut next_gens = Vec::new();
        for &a in &power_gens {
            for &b in i_gens {
                next_gens.push(a + b);
            }
        }
        next_gens.sort_unstable();
        next_gens.dedup();
        let next = naive_ideal(s_gens, &next_gens);
        if next.same_as(&power.shift(m0)) {
            let limit = naive_colon(s_gens, &power_gens, &power_gens);
            return (0..=limit.bound).filter(|&z| !limit.contains(z)).collect();
        }
        power_gens = next_gens;
        power = next;
    }
    panic!("power chain failed to stabilize");
}

/// Count numerical semigroups of a given genus by filtering every
/// candidate gap set inside `[1, 2g - 1]` (every gap is at most `2g - 1`).
/// Completely independent of the library's tree enumeration.
pub fn count_semigroups_by_gap_sets(genus: usize) -> usize {
    if genus == 0 {
        return 1;
    }
    let top = 2 * genus - 1;
    let mut count = 0;
    let mut chosen = Vec::with_capacity(genus);
    fn recurse(
        start: usize,
        remaining: usize,
        top: usize,
        chosen: &mut Vec<usize>,
        count: &mut usize,
    ) {
        if remaining == 0 {
            if gap_set_is_closed(chosen, top) {
                *count += 1;
            }
            return;
        }
        for g in start..=(top - remaining + 1) {
            chosen.push(g);
            recurse(g + 1, remaining - 1, top, chosen, count);
            chosen.pop();
        }
    }
    recurse(1, genus, top, &mut chosen, &mut count);
    count
}

/// Validity of a gap set: the complement must be closed under addition.
/// Only sums landing at or below `top` can violate this.
fn gap_set_is_closed(gaps: &[usize], top: usize) -> bool {
    let is_gap = |z: usize| gaps.binary_search(&z).is_ok();
    for x in 1..=top {
        if is_gap(x) {
            continue;
        }
        for y in x..=(top.saturating_sub(x)) {
            if !is_gap(y) && is_gap(x + y) {
                return false;
            }
        }
    }
    true
}

/// Forward-continuant evaluation of a Hirzebruch-Jung expansion:
/// `p_i = t_i * p_{i-1} - p_{i-2}`, independent of the library's
/// right-to-left fold.
pub fn continuant_value(terms: &[u64]) -> (u64, u64) {
    let (mut p_prev, mut p) = (1i128, terms[0] as i128);
    let (mut q_prev, mut q) = (0i128, 1i128);
    for &t in &terms[1..] {
        (p_prev, p) = (p, t as i128 * p - p_prev);
        (q_prev, q) = (q, t as i128 * q - q_prev);
    }
    assert!(p > 0 && q > 0);
    (p as u64, q as u64)
}
