//! Exact arithmetic for one-dimensional monomial curve rings and cyclic
//! quotient surface singularities, centred on the Ulrich-split property:
//! does every Ulrich module with respect to an ideal decompose into rank-one
//! pieces isomorphic to the conductor?
//!
//! Everything is computed at the exponent level. A ring `k[[t^a1, ..., t^an]]`
//! becomes a [`NumericalSemigroup`]; its fractional monomial ideals become
//! [`RelativeIdeal`]s; products, colons, traces, duals and blow-ups become
//! exact integer-set operations. The analyzer evaluates several provably
//! equivalent characterisations of the Ulrich-split property independently
//! and insists that they agree, so every answer doubles as a consistency
//! check of the underlying theory.

mod analyzer;
mod error;
mod hypersurface;
mod ideal;
mod quotient;
mod semigroup;

pub use analyzer::{
    annihilator_exponent_check, bowtie_us, fiber_us, min_mult_report, sample_regular_ideals,
    self_duality_check, us_report, AnnihilatorCertificate, MinMultReport, SelfDuality, UsReport,
    UsWitnesses, DEFAULT_SAMPLE_SEED,
};
pub use error::{Error, PredicateDump, Result};
pub use hypersurface::{AdeKind, AdeSingularity};
pub use ideal::{RelativeIdeal, UlrichVerdict};
pub use quotient::{class_sum, ClassGroupElement, CyclicQuotient, HjFraction, UlrichCount};
pub use semigroup::{
    enumerate_semigroups, NumericalSemigroup, SemigroupEnumerator, MAX_ENUMERATION_GENUS,
};
