//! Fractional monomial ideals over a numerical semigroup.
//!
//! A relative ideal of a semigroup `S` is a set `E` of integers with
//! `E + S ⊆ E`, bounded below and containing a full tail `[t, oo)`. These
//! are the exponent sets of fractional monomial ideals (equivalently, of
//! rank-one torsion-free monomial modules) over the curve ring modelled by
//! `S`. Translation `E + d` corresponds to module isomorphism, and is the
//! only isomorphism there is.
//!
//! Values are canonical: the sporadic elements below the tail are sorted and
//! the tail start is minimal, so structural equality is set equality.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Magnitude guard for ideal generators, matching the semigroup guard.
const MAX_IDEAL_GENERATOR: i64 = 1_000_000;

/// A fractional monomial ideal over a fixed ambient numerical semigroup,
/// stored canonically as its sporadic elements plus a minimal tail.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    ambient: NumericalSemigroup,
    /// Elements below `tail_start`, sorted ascending.
    sporadic: Vec<i64>,
    /// Least `t` with `[t, oo)` contained in the ideal; `t - 1` is not.
    tail_start: i64,
}

impl RelativeIdeal {
    /// Canonical form from a complete list of the elements below
    /// `tail_hint`, given the guarantee that `[tail_hint, oo)` is contained
    /// in the set. Lowers the tail to its minimal start.
    fn canonicalize(
        ambient: NumericalSemigroup,
        mut elements: Vec<i64>,
        tail_hint: i64,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        elements.retain(|&z| z < tail_hint);
        let mut tail_start = tail_hint;
        while elements.last() == Some(&(tail_start - 1)) {
            elements.pop();
            tail_start -= 1;
        }
        let ideal = RelativeIdeal {
            ambient,
            sporadic: elements,
            tail_start,
        };
        debug_assert!(ideal.is_closed_under_ambient(), "not an ideal: {ideal}");
        ideal
    }

    /// Checks `E + S ⊆ E` on the sporadic part (the tail is closed for
    /// free).
    fn is_closed_under_ambient(&self) -> bool {
        self.sporadic.iter().all(|&z| {
            self.ambient
                .minimal_generators()
                .iter()
                .all(|&g| self.contains(z + g))
        })
    }

    /// The ideal generated over `S` by the given exponents, i.e. the union
    /// of the translates `g + S`. Generators may be negative (fractional
    /// ideals); the zero ideal is not representable, so the list must be
    /// non-empty.
    pub fn from_generators(ambient: &NumericalSemigroup, generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &g in generators {
            if g.abs() > MAX_IDEAL_GENERATOR {
                return Err(Error::InputTooLarge(format!(
                    "ideal generator {g} exceeds the supported magnitude {MAX_IDEAL_GENERATOR}"
                )));
            }
        }
        let min = *generators.iter().min().unwrap();
        let tail_hint = min + ambient.conductor_number();
        let mut elements = Vec::new();
        for &g in generators {
            for s in ambient.elements_below(tail_hint - g) {
                elements.push(g + s);
            }
        }
        Ok(Self::canonicalize(ambient.clone(), elements, tail_hint))
    }

    /// `S` itself, viewed as an ideal (the unit ideal).
    pub fn unit(ambient: &NumericalSemigroup) -> Self {
        let c = ambient.conductor_number();
        let elements = ambient.elements_below(c).collect();
        Self::canonicalize(ambient.clone(), elements, c)
    }

    /// The maximal ideal `m = S \ {0}`.
    pub fn maximal(ambient: &NumericalSemigroup) -> Self {
        let tail = ambient.conductor_number().max(1);
        let elements = (1..tail).filter(|&z| ambient.contains(z)).collect();
        Self::canonicalize(ambient.clone(), elements, tail)
    }

    /// The full monoid `{0, 1, 2, ...}` as an ideal over `S`: the exponent
    /// set of the normalization (the integral closure in its quotient
    /// field).
    pub fn normalization(ambient: &NumericalSemigroup) -> Self {
        Self::canonicalize(ambient.clone(), Vec::new(), 0)
    }

    /// The conductor ideal `C = [c, oo)`, the largest common ideal of `S`
    /// and its normalization. Certified on every call against the colon
    /// formula `C = (S : normalization)`.
    pub fn conductor(ambient: &NumericalSemigroup) -> Self {
        let direct = Self::canonicalize(
            ambient.clone(),
            Vec::new(),
            ambient.conductor_number(),
        );
        let via_colon = Self::unit(ambient).colon_with(&Self::normalization(ambient));
        assert_eq!(
            direct, via_colon,
            "conductor of {ambient} disagrees with the colon formula"
        );
        direct
    }

    /// The canonical ideal `K = {z : F - z not in S}`, where `F` is the
    /// Frobenius number. Dualizing against `K` (see [`Self::dagger`]) is a
    /// perfect duality on relative ideals.
    pub fn canonical(ambient: &NumericalSemigroup) -> Self {
        let f = ambient.frobenius();
        let elements = (0..f).filter(|&z| !ambient.contains(f - z)).collect();
        Self::canonicalize(ambient.clone(), elements, f + 1)
    }

    /// The ambient semigroup.
    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    /// Elements below the tail, sorted ascending.
    pub fn sporadic(&self) -> &[i64] {
        &self.sporadic
    }

    /// Least `t` with `[t, oo)` contained in the ideal.
    pub fn tail_start(&self) -> i64 {
        self.tail_start
    }

    /// Smallest element.
    pub fn min(&self) -> i64 {
        self.sporadic.first().copied().unwrap_or(self.tail_start)
    }

    /// Membership test.
    pub fn contains(&self, z: i64) -> bool {
        z >= self.tail_start || self.sporadic.binary_search(&z).is_ok()
    }

    /// Elements in `(-oo, bound)`, ascending.
    pub fn elements_below(&self, bound: i64) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .sporadic
            .iter()
            .copied()
            .filter(|&z| z < bound)
            .collect();
        if bound > self.tail_start {
            out.extend(self.tail_start..bound);
        }
        out
    }

    /// True when every element lies in `other` (same ambient assumed).
    pub fn is_subset_of(&self, other: &RelativeIdeal) -> bool {
        self.tail_start >= other.tail_start
            && self.sporadic.iter().all(|&z| other.contains(z))
    }

    /// True when the ideal is an honest regular ideal of the ring: all
    /// elements positive and inside the ambient semigroup.
    pub fn is_regular_integral(&self) -> bool {
        self.min() >= 1
            && self.tail_start >= self.ambient.conductor_number()
            && self.sporadic.iter().all(|&z| self.ambient.contains(z))
    }

    /// The translate `E + d`. Translation is module isomorphism.
    pub fn translate(&self, d: i64) -> Self {
        RelativeIdeal {
            ambient: self.ambient.clone(),
            sporadic: self.sporadic.iter().map(|&z| z + d).collect(),
            tail_start: self.tail_start + d,
        }
    }

    /// If `self = other + d` for some integer `d`, returns `d`. Since
    /// translation is the only isomorphism of rank-one monomial modules,
    /// `Some` means isomorphic.
    pub fn is_translate_of(&self, other: &RelativeIdeal) -> Result<Option<i64>> {
        self.ensure_same_ambient(other)?;
        let d = self.min() - other.min();
        if &other.translate(d) == self {
            Ok(Some(d))
        } else {
            Ok(None)
        }
    }

    fn ensure_same_ambient(&self, other: &RelativeIdeal) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Ideal sum `E + F` (set union).
    pub fn sum(&self, other: &RelativeIdeal) -> Result<Self> {
        self.ensure_same_ambient(other)?;
        let tail_hint = self.tail_start.min(other.tail_start);
        let mut elements = self.elements_below(tail_hint);
        elements.extend(other.elements_below(tail_hint));
        Ok(Self::canonicalize(
            self.ambient.clone(),
            elements,
            tail_hint,
        ))
    }

    /// Ideal product `E·F` (Minkowski sum of exponent sets).
    pub fn product(&self, other: &RelativeIdeal) -> Result<Self> {
        self.ensure_same_ambient(other)?;
        Ok(self.product_with(other))
    }

    /// Product without the ambient check, for internal chains.
    /// The result contains `[min(min(E) + t_F, t_E + min(F)), oo)`.
    fn product_with(&self, other: &RelativeIdeal) -> Self {
        let tail_hint =
            (self.min() + other.tail_start).min(self.tail_start + other.min());
        let mut elements = Vec::new();
        for x in self.elements_below(tail_hint - other.min()) {
            for y in other.elements_below(tail_hint - x) {
                elements.push(x + y);
            }
        }
        Self::canonicalize(self.ambient.clone(), elements, tail_hint)
    }

    /// `E^n`, with `E^0` the unit ideal.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(&self.ambient);
        for _ in 0..n {
            acc = acc.product_with(self);
        }
        acc
    }

    /// Colon ideal `(E : F) = {z : z + F ⊆ E}`.
    ///
    /// Every `z >= t_E - min(F)` qualifies and nothing below
    /// `min(E) - min(F)` can, so only the finite window in between needs
    /// scanning.
    pub fn colon(&self, other: &RelativeIdeal) -> Result<Self> {
        self.ensure_same_ambient(other)?;
        Ok(self.colon_with(other))
    }

    fn colon_with(&self, other: &RelativeIdeal) -> Self {
        let tail_hint = self.tail_start - other.min();
        let lo = self.min() - other.min();
        let elements = (lo..tail_hint)
            .filter(|&z| {
                other
                    .elements_below(self.tail_start - z)
                    .into_iter()
                    .all(|f| self.contains(z + f))
            })
            .collect();
        Self::canonicalize(self.ambient.clone(), elements, tail_hint)
    }

    /// The dual `E^* = (S - E)`, i.e. `Hom(E, R)` at the exponent level.
    pub fn dual(&self) -> Self {
        Self::unit(&self.ambient).colon_with(self)
    }

    /// The endomorphism set `(E : E)`, certified to be a numerical
    /// semigroup: it contains `0` and is closed under addition.
    pub fn endo(&self) -> Self {
        let endo = self.colon_with(self);
        assert_eq!(endo.min(), 0, "(E : E) must start at 0");
        for (i, &x) in endo.sporadic.iter().enumerate() {
            for &y in &endo.sporadic[i..] {
                assert!(
                    endo.contains(x + y),
                    "(E : E) for E = {self} is not closed under addition"
                );
            }
        }
        endo
    }

    /// [`Self::endo`] converted into a [`NumericalSemigroup`].
    pub fn endo_semigroup(&self) -> NumericalSemigroup {
        self.endo().into_semigroup()
    }

    /// Reinterprets an ideal with minimum `0` that is closed under addition
    /// as a numerical semigroup on the same underlying set.
    fn into_semigroup(self) -> NumericalSemigroup {
        assert_eq!(self.min(), 0);
        let gaps: Vec<i64> = (0..self.tail_start)
            .filter(|&z| !self.contains(z))
            .collect();
        let s = NumericalSemigroup::from_gap_set(gaps);
        debug_assert!(
            (0..self.tail_start + 1).all(|z| s.contains(z) == self.contains(z)),
            "set changed while converting {self} to a semigroup"
        );
        s
    }

    /// The trace ideal `tr(E) = E·(S - E)`: the sums of elements of `E`
    /// and of its dual. Always an ideal contained in `S`.
    pub fn trace(&self) -> Self {
        let trace = self.dual().product_with(self);
        debug_assert!(trace.is_subset_of(&Self::unit(&self.ambient)));
        trace
    }

    /// The canonical dual `E^† = (K - E)` with `K` the canonical ideal.
    /// Applying it twice returns `E`.
    pub fn dagger(&self) -> Self {
        Self::canonical(&self.ambient).colon_with(self)
    }

    /// True when `E` is divisorial: `(S - (S - E)) = E`.
    pub fn is_reflexive(&self) -> bool {
        &self.dual().dual() == self
    }

    /// Minimal number of generators `mu(E) = |E \ (m + E)|` (graded
    /// Nakayama: the elements that survive modulo the maximal ideal).
    pub fn mu(&self) -> usize {
        let shifted = Self::maximal(&self.ambient).product_with(self);
        self.elements_below(shifted.tail_start)
            .into_iter()
            .filter(|&z| !shifted.contains(z))
            .count()
    }

    /// Smallest `n` with `E^{n+1} = min(E) + E^n`, together with the powers
    /// `E^0, ..., E^{n+1}` computed along the way (callers reuse them
    /// instead of recomputing powers). From `n` on, multiplying by `E` only
    /// translates, so this is where the power chain stabilizes.
    pub(crate) fn stabilization(&self) -> Result<(u32, Vec<RelativeIdeal>)> {
        let a = self.min();
        let span = self.tail_start - a;
        let ambient_budget =
            self.ambient.conductor_number() + self.ambient.multiplicity();
        // Each strict step fills at least one hole of the shifted chain, so
        // the number of steps is bounded by the hole count; this cap is a
        // comfortable overestimate and exceeding it signals a bug.
        let cap = (ambient_budget + span + 2) as u32;
        let mut powers = vec![Self::unit(&self.ambient), self.clone()];
        for n in 0..=cap {
            if powers[(n + 1) as usize] == powers[n as usize].translate(a) {
                return Ok((n, powers));
            }
            let next = powers[(n + 1) as usize].product_with(self);
            powers.push(next);
        }
        Err(Error::NoStabilization { cap })
    }

    /// The stabilization exponent of the power chain. For the maximal
    /// ideal this is the reduction number of the ring.
    pub fn reduction_exponent(&self) -> Result<u32> {
        Ok(self.stabilization()?.0)
    }

    /// The blow-up semigroup `B(I) = union of (I^n : I^n)`, computed as
    /// `I^r - r·min(I)` at the stabilization exponent `r` and certified
    /// against the endomorphism sets of `I^r` and `I^{r+1}`.
    ///
    /// Accepts regular ideals (`min >= 1`) and the unit ideal.
    pub fn blowup(&self) -> Result<NumericalSemigroup> {
        if self.min() < 1 && self != &Self::unit(&self.ambient) {
            return Err(Error::NotRegularIdeal);
        }
        let (r, powers) = self.stabilization()?;
        let shifted = powers[r as usize].translate(-(r as i64) * self.min());
        assert_eq!(
            shifted,
            powers[r as usize].endo(),
            "blow-up of {self} disagrees with (I^r : I^r)"
        );
        assert_eq!(
            shifted,
            powers[(r + 1) as usize].endo(),
            "blow-up of {self} disagrees with (I^(r+1) : I^(r+1))"
        );
        Ok(shifted.into_semigroup())
    }

    /// A semigroup `B` containing the ambient one, viewed as a relative
    /// ideal over the ambient (its exponent set is closed under adding
    /// ambient elements).
    pub(crate) fn from_over_semigroup(
        ambient: &NumericalSemigroup,
        b: &NumericalSemigroup,
    ) -> Self {
        let c = b.conductor_number();
        let elements = b.elements_below(c).collect();
        Self::canonicalize(ambient.clone(), elements, c.max(0))
    }

    /// Decides whether this module is Ulrich with respect to the regular
    /// ideal `ideal`, via three independent routes that are asserted to
    /// agree:
    ///
    /// * translation: `I·E` is a translate of `E`;
    /// * blow-up action: `B(I) + E = E`, i.e. `E` is a module over the
    ///   blow-up;
    /// * for `I = m` only: `mu(E)` equals the multiplicity.
    pub fn is_ulrich(&self, ideal: &RelativeIdeal) -> Result<UlrichVerdict> {
        self.ensure_same_ambient(ideal)?;
        if !ideal.is_regular_integral() {
            return Err(Error::NotRegularIdeal);
        }
        let product = ideal.product_with(self);
        let via_translation = product.is_translate_of(self)?.is_some();

        let blowup = ideal.blowup()?;
        let b_ideal = Self::from_over_semigroup(&self.ambient, &blowup);
        let via_blowup_module = b_ideal.product_with(self) == *self;

        let via_mu_equals_e = if ideal == &Self::maximal(&self.ambient) {
            Some(self.mu() as i64 == self.ambient.multiplicity())
        } else {
            None
        };

        let agree = via_translation == via_blowup_module
            && via_mu_equals_e.is_none_or(|v| v == via_translation);
        Ok(UlrichVerdict {
            via_translation,
            via_blowup_module,
            via_mu_equals_e,
            agree,
        })
    }
}

/// Outcome of an Ulrich test, one flag per route. `agree` records that
/// every populated route returned the same answer; a `false` here is a bug
/// detector, not a mathematical possibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UlrichVerdict {
    pub via_translation: bool,
    pub via_blowup_module: bool,
    /// Only populated when the test ideal is the maximal ideal.
    pub via_mu_equals_e: Option<bool>,
    pub agree: bool,
}

impl UlrichVerdict {
    /// The common answer of the routes.
    pub fn holds(&self) -> bool {
        self.via_translation
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.sporadic.is_empty() {
            write!(f, "{{")?;
            for (i, z) in self.sporadic.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{z}")?;
            }
            write!(f, "}} \u{222a} ")?;
        }
        write!(f, "[{},\u{221e})", self.tail_start)
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.ambient)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealWire {
    ambient: NumericalSemigroup,
    sporadic: Vec<i64>,
    tail_start: i64,
}

impl Serialize for RelativeIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealWire {
            ambient: self.ambient.clone(),
            sporadic: self.sporadic.clone(),
            tail_start: self.tail_start,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RelativeIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = IdealWire::deserialize(deserializer)?;
        let candidate = RelativeIdeal::canonicalize(
            wire.ambient,
            wire.sporadic.clone(),
            wire.tail_start,
        );
        if candidate.sporadic != wire.sporadic || candidate.tail_start != wire.tail_start {
            return Err(D::Error::custom("ideal fields are not in canonical form"));
        }
        if !candidate.is_closed_under_ambient() {
            return Err(D::Error::custom(
                "set is not closed under the ambient semigroup",
            ));
        }
        Ok(candidate)
    }
}
