//! Error type shared by every module of the crate.

use serde::Serialize;
use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the semigroup, ideal, analyzer,
/// quotient and hypersurface modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A semigroup needs at least one generator.
    #[error("generator list is empty")]
    EmptyGenerators,

    /// Generators must be positive integers.
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),

    /// The generators of a numerical semigroup must be coprime as a set.
    #[error("generators have gcd {0}, expected 1")]
    NonCoprimeGenerators(i64),

    /// A requested element does not belong to the semigroup.
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(i64),

    /// A power chain failed to stabilize within its iteration cap.
    /// This cannot happen for valid inputs and signals an internal bug.
    #[error("power chain did not stabilize within {cap} steps (internal error)")]
    NoStabilization { cap: u32 },

    /// Genus bound for enumeration exceeds the supported maximum.
    #[error("genus bound {requested} exceeds the supported maximum {max}")]
    GenusTooLarge { requested: u32, max: u32 },

    /// Two operands live over different ambient semigroups.
    #[error("operands live over different ambient semigroups")]
    AmbientMismatch,

    /// The ideal argument must be a regular ideal contained in the maximal
    /// ideal (all elements positive and inside the ambient semigroup).
    #[error("ideal is not a regular ideal inside the maximal ideal")]
    NotRegularIdeal,

    /// Predicates that are provably equivalent evaluated differently.
    /// Carries every predicate value so the disagreement can be inspected.
    #[error("provably equivalent predicates disagree: {0}")]
    AgreementViolation(Box<PredicateDump>),

    /// The check only makes sense for a singular ring.
    #[error("the semigroup is the full monoid; this check needs a singular ring")]
    RegularRing,

    /// The check requires the Ulrich-split property to hold.
    #[error("the Ulrich-split property does not hold for this input")]
    UlrichSplitRequired,

    /// The given module is not Ulrich with respect to the given ideal.
    #[error("the module is not Ulrich with respect to the given ideal")]
    NotUlrich,

    /// Class-group elements can only be combined over the same order.
    #[error("class-group elements have different moduli ({0} vs {1})")]
    ModulusMismatch(u64, u64),

    /// Invalid parameters for a cyclic quotient singularity.
    #[error("invalid quotient parameters 1/{n}({one},{a}): need n >= 2, 1 <= a <= n-1, gcd(a,n) = 1", one = 1)]
    InvalidQuotient { n: u64, a: u64 },

    /// The square-comparison test in the class group degenerates for a = 1.
    #[error("the doubling test needs weight a >= 2; for a = 1 both classes coincide")]
    WeightOne,

    /// Invalid parameters for an ADE singularity.
    #[error("invalid ADE parameters: {0}")]
    InvalidAde(String),

    /// ADE-to-quotient translation only applies to type A.
    #[error("only type A hypersurfaces are cyclic quotient singularities")]
    NotTypeA,

    /// A guard against pathological input sizes.
    #[error("input exceeds supported size: {0}")]
    InputTooLarge(String),
}

/// Snapshot of every predicate evaluated during an equivalence check,
/// attached to [`Error::AgreementViolation`] as the full report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateDump {
    /// Human-readable description of the check that failed.
    pub context: String,
    /// Ordered (name, value) pairs for every predicate that was evaluated.
    pub predicates: Vec<(String, bool)>,
}

impl fmt::Display for PredicateDump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.context)?;
        for (i, (name, value)) in self.predicates.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name}={value}")?;
        }
        write!(f, "]")
    }
}
