//! Numerical semigroups: cofinite additive submonoids of the natural numbers.
//!
//! A numerical semigroup `S` is stored in canonical form: its minimal
//! generators, its gaps (the finitely many naturals missing from `S`), the
//! Frobenius number (largest gap, `-1` when there is none) and a bitmask for
//! constant-time membership below the conductor. Two values compare equal
//! exactly when they describe the same set of integers.
//!
//! `S` models the exponent monoid of a monomial curve ring
//! `k[[t^a1, ..., t^an]]`; the full monoid (gap-free case) models the regular
//! ring `k[[t]]`.

use crate::error::{Error, Result};
use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;

/// Largest accepted generator. Keeps the Apéry-set table small.
const MAX_GENERATOR: i64 = 1_000_000;
/// Largest accepted conductor. Keeps gap lists and bitmasks small.
const MAX_CONDUCTOR: i64 = 4_000_000;
/// Largest genus the tree enumerator will walk (resource guard).
pub const MAX_ENUMERATION_GENUS: u32 = 25;

/// A numerical semigroup in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    /// Minimal generators, sorted ascending. Never empty; `[1]` for the
    /// full monoid.
    generators: Vec<i64>,
    /// Gaps (naturals not in the semigroup), sorted ascending.
    gaps: Vec<i64>,
    /// Largest gap, or `-1` when the semigroup is the full monoid.
    frobenius: i64,
    /// Membership bits for `0..conductor_number()`, 64 per block.
    mask: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`.
    ///
    /// The input may contain duplicates and redundant generators; the result
    /// stores the unique minimal generating set. The generators must be
    /// positive and coprime as a set (otherwise the complement in the
    /// naturals would be infinite).
    pub fn from_generators(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut gens: Vec<i64> = generators.to_vec();
        for &g in &gens {
            if g <= 0 {
                return Err(Error::NonPositiveGenerator(g));
            }
            if g > MAX_GENERATOR {
                return Err(Error::InputTooLarge(format!(
                    "generator {g} exceeds the supported maximum {MAX_GENERATOR}"
                )));
            }
        }
        let gcd = gens.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NonCoprimeGenerators(gcd));
        }
        gens.sort_unstable();
        gens.dedup();

        let gaps = gaps_from_apery(&gens)?;
        Ok(Self::from_gap_set(gaps))
    }

    /// The full monoid `{0, 1, 2, ...}`, i.e. the gap-free semigroup
    /// modelling a regular ring.
    pub fn full_monoid() -> Self {
        Self::from_gap_set(Vec::new())
    }

    /// Builds the semigroup whose gap set is exactly `gaps`.
    ///
    /// The caller must supply a valid gap set: sorted, duplicate-free, and
    /// with a complement closed under addition. This is checked in debug
    /// builds only.
    pub(crate) fn from_gap_set(gaps: Vec<i64>) -> Self {
        let frobenius = gaps.last().copied().unwrap_or(-1);
        let conductor = frobenius + 1;
        let mut mask = vec![u64::MAX; (conductor as usize).div_ceil(64)];
        for &g in &gaps {
            mask[(g / 64) as usize] &= !(1u64 << (g % 64));
        }
        let mut s = NumericalSemigroup {
            generators: Vec::new(),
            gaps,
            frobenius,
            mask,
        };
        s.generators = s.compute_minimal_generators();
        debug_assert!(s.gap_set_is_valid(), "complement of gap set is not closed");
        s
    }

    /// Minimal generators, sorted ascending.
    pub fn minimal_generators(&self) -> &[i64] {
        &self.generators
    }

    /// Gaps (naturals outside the semigroup), sorted ascending.
    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Largest gap; `-1` for the full monoid.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `frobenius + 1`: the least `c` with `[c, oo) ⊆ S`.
    pub fn conductor_number(&self) -> i64 {
        self.frobenius + 1
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// True when the semigroup has no gaps (models a regular ring).
    pub fn is_full_monoid(&self) -> bool {
        self.gaps.is_empty()
    }

    /// Membership test, constant time below the conductor and trivially
    /// true above it.
    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        if z >= self.conductor_number() {
            return true;
        }
        self.mask[(z / 64) as usize] & (1u64 << (z % 64)) != 0
    }

    /// Elements of the semigroup in `[0, bound)`, ascending.
    pub fn elements_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..bound).filter(move |&z| self.contains(z))
    }

    /// Apéry set of `S` with respect to a nonzero element `w`: for each
    /// residue class `r` modulo `w`, the smallest element of `S` congruent
    /// to `r`, indexed by `r = 0, ..., w-1`.
    pub fn apery_set(&self, w: i64) -> Result<Vec<i64>> {
        if w <= 0 || !self.contains(w) {
            return Err(Error::NotAnElement(w));
        }
        let mut apery = Vec::with_capacity(w as usize);
        for r in 0..w {
            let mut z = r;
            while !self.contains(z) {
                z += w;
            }
            apery.push(z);
        }
        Ok(apery)
    }

    /// Reduction number of the maximal ideal: the smallest `r >= 1` with
    /// `(r+1)·M = a1 + r·M` as Minkowski sums, where `M = S \ {0}` and `a1`
    /// is the multiplicity. Returns `0` for the full monoid, where `M` is
    /// already principal.
    pub fn reduction_number(&self) -> Result<u32> {
        if self.is_full_monoid() {
            return Ok(0);
        }
        let a = self.multiplicity();
        let m = self.maximal_ideal_set();
        // The chain stabilizes long before this cap; exceeding it is a bug.
        let cap = (self.conductor_number() + a) as u32;
        let mut current = m.clone(); // r·M for r = 1
        for r in 1..=cap {
            let next = current.minkowski(&m);
            if next == current.shift(a) {
                return Ok(r);
            }
            current = next;
        }
        Err(Error::NoStabilization { cap })
    }

    /// True when the multiplicity equals the embedding dimension.
    ///
    /// Computed both combinatorially (counting minimal generators) and as
    /// the set identity `M + M = a1 + M`; the two formulations are asserted
    /// to agree.
    pub fn is_minimal_multiplicity(&self) -> bool {
        let via_counts = self.embedding_dimension() as i64 == self.multiplicity();
        let m = self.maximal_ideal_set();
        let via_sets = m.minkowski(&m) == m.shift(self.multiplicity());
        assert_eq!(
            via_counts, via_sets,
            "minimal multiplicity formulations disagree on {self}"
        );
        via_counts
    }

    /// `M = S \ {0}` as a finitely described cofinite set.
    fn maximal_ideal_set(&self) -> CofiniteSet {
        let tail = self.conductor_number().max(1);
        let below = (1..tail).filter(|&z| self.contains(z)).collect();
        CofiniteSet::new(below, tail)
    }

    /// Scans for the minimal generators: nonzero elements that are not a
    /// sum of two nonzero elements. Every minimal generator lies below
    /// `max(conductor, 1) + multiplicity`.
    fn compute_minimal_generators(&self) -> Vec<i64> {
        let tail = self.conductor_number().max(1);
        let multiplicity = (1..=tail).find(|&z| self.contains(z)).expect("tail element");
        let hi = tail + multiplicity;
        let members: Vec<i64> = (multiplicity..hi).filter(|&z| self.contains(z)).collect();
        members
            .iter()
            .copied()
            .filter(|&s| {
                !members
                    .iter()
                    .take_while(|&&x| 2 * x <= s)
                    .any(|&x| self.contains(s - x) && s - x > 0)
            })
            .collect()
    }

    fn gap_set_is_valid(&self) -> bool {
        let sorted = self.gaps.windows(2).all(|w| w[0] < w[1]);
        let positive = self.gaps.first().is_none_or(|&g| g > 0);
        // Closure: a gap cannot be the sum of two members.
        let closed = self.gaps.iter().all(|&g| {
            !(1..=g / 2).any(|x| self.contains(x) && self.contains(g - x))
        });
        sorted && positive && closed
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\u{27e8}")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "\u{27e9}")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Computes the gap list of the semigroup generated by `gens` from its
/// Apéry set with respect to the multiplicity `a = gens[0]`: an element
/// `z >= 0` lies in the semigroup iff `z >= ap[z mod a]`, where `ap[r]` is
/// the length of a shortest generator path reaching residue `r`. Dijkstra
/// over the residue graph makes this exact with no sieve bound to guess.
fn gaps_from_apery(gens: &[i64]) -> Result<Vec<i64>> {
    let a = gens[0];
    let mut dist = vec![i64::MAX; a as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nd = d + g;
            let nr = ((r as i64 + g) % a) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    let frobenius = dist.iter().max().copied().unwrap() - a;
    if frobenius + 1 > MAX_CONDUCTOR {
        return Err(Error::InputTooLarge(format!(
            "conductor {} exceeds the supported maximum {MAX_CONDUCTOR}",
            frobenius + 1
        )));
    }
    let mut gaps = Vec::new();
    for r in 0..a {
        let mut z = r;
        while z < dist[r as usize] {
            gaps.push(z);
            z += a;
        }
    }
    gaps.sort_unstable();
    Ok(gaps)
}

/// A set of integers containing `[tail, oo)`, described by its finitely
/// many elements below `tail`. The tail bound need not be minimal; equality
/// and Minkowski sums stay exact regardless.
#[derive(Clone, Debug)]
struct CofiniteSet {
    /// Sorted, duplicate-free elements strictly below `tail`.
    below: Vec<i64>,
    tail: i64,
}

impl CofiniteSet {
    fn new(mut below: Vec<i64>, tail: i64) -> Self {
        below.sort_unstable();
        below.dedup();
        below.retain(|&z| z < tail);
        CofiniteSet { below, tail }
    }

    fn min(&self) -> i64 {
        self.below.first().copied().unwrap_or(self.tail)
    }

    fn elements_below(&self, bound: i64) -> Vec<i64> {
        let mut out: Vec<i64> = self.below.iter().copied().filter(|&z| z < bound).collect();
        out.extend(self.tail..bound);
        out
    }

    fn shift(&self, d: i64) -> Self {
        CofiniteSet {
            below: self.below.iter().map(|&z| z + d).collect(),
            tail: self.tail + d,
        }
    }

    /// Minkowski sum `{x + y}`. The result provably contains
    /// `[min(self.tail + other.min, other.tail + self.min), oo)`.
    fn minkowski(&self, other: &CofiniteSet) -> Self {
        let tail = (self.tail + other.min()).min(other.tail + self.min());
        let mut below = Vec::new();
        for x in self.elements_below(tail - other.min()) {
            for y in other.elements_below(tail - x) {
                below.push(x + y);
            }
        }
        CofiniteSet::new(below, tail)
    }
}

impl PartialEq for CofiniteSet {
    /// Set equality: both sides contain everything from `max(tails)` on, so
    /// comparing elements below that bound decides it.
    fn eq(&self, other: &Self) -> bool {
        let bound = self.tail.max(other.tail);
        self.elements_below(bound) == other.elements_below(bound)
    }
}

/// Depth-first enumeration of all numerical semigroups of genus at most
/// `genus_max`, each exactly once.
///
/// The walk follows the genus tree: the root is the full monoid, and the
/// children of `S` are the semigroups `S \ {g}` for each minimal generator
/// `g` larger than the Frobenius number of `S` (removing such a generator
/// keeps the set closed under addition and adds exactly one gap). Children
/// are visited in ascending order of the removed generator.
pub fn enumerate_semigroups(genus_max: u32) -> Result<SemigroupEnumerator> {
    if genus_max > MAX_ENUMERATION_GENUS {
        return Err(Error::GenusTooLarge {
            requested: genus_max,
            max: MAX_ENUMERATION_GENUS,
        });
    }
    Ok(SemigroupEnumerator {
        genus_max,
        stack: vec![NumericalSemigroup::full_monoid()],
    })
}

/// Iterator produced by [`enumerate_semigroups`].
pub struct SemigroupEnumerator {
    genus_max: u32,
    stack: Vec<NumericalSemigroup>,
}

impl Iterator for SemigroupEnumerator {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        let s = self.stack.pop()?;
        if (s.genus() as u32) < self.genus_max {
            // Push in descending order so the smallest removed generator
            // is visited first.
            for &g in s.minimal_generators().iter().rev() {
                if g > s.frobenius() {
                    let mut gaps = s.gaps().to_vec();
                    gaps.push(g);
                    self.stack.push(NumericalSemigroup::from_gap_set(gaps));
                }
            }
        }
        Some(s)
    }
}

#[derive(Serialize, Deserialize)]
struct SemigroupWire {
    generators: Vec<i64>,
    gaps: Vec<i64>,
    frobenius: i64,
    multiplicity: i64,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupWire {
            generators: self.generators.clone(),
            gaps: self.gaps.clone(),
            frobenius: self.frobenius,
            multiplicity: self.multiplicity(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SemigroupWire::deserialize(deserializer)?;
        let s = NumericalSemigroup::from_generators(&wire.generators)
            .map_err(|e| D::Error::custom(format!("invalid generators: {e}")))?;
        if s.gaps() != wire.gaps
            || s.frobenius() != wire.frobenius
            || s.multiplicity() != wire.multiplicity
        {
            return Err(D::Error::custom(
                "semigroup fields are inconsistent with the generators",
            ));
        }
        Ok(s)
    }
}
