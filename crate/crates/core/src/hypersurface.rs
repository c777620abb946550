//! ADE hypersurface singularities in arbitrary dimension.
//!
//! A hypersurface of type ADE in dimension `d` is cut out by the usual
//! simple-singularity normal form plus a sum of squares in the remaining
//! variables. Adding one more square (a quadratic suspension, i.e. the
//! double branched cover) bumps the dimension and preserves the
//! Ulrich-split property in both directions, so the classification is a
//! pure function of the Dynkin kind: only `A1` and `A2` qualify.
//!
//! Type `A(k)` surfaces are the cyclic quotients `1/(k+1)(1, k)`, which
//! ties this module to [`crate::quotient`]: the divisibility criterion
//! there singles out exactly `A1` and `A2` as well.

use crate::error::{Error, Result};
use crate::quotient::CyclicQuotient;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Dynkin type of a simple hypersurface singularity.
///
/// Valid parameters: `A(k)` for `k >= 1`, `D(k)` for `k >= 4`, and the
/// three exceptional kinds. Construct through [`AdeSingularity::new`] or
/// [`str::parse`] to get the ranges checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdeKind {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

impl AdeKind {
    fn validate(&self) -> Result<()> {
        match *self {
            AdeKind::A(k) if k < 1 => Err(Error::InvalidAde(format!(
                "type A needs index >= 1, got A{k}"
            ))),
            AdeKind::D(k) if k < 4 => Err(Error::InvalidAde(format!(
                "type D needs index >= 4, got D{k}"
            ))),
            _ => Ok(()),
        }
    }

    /// The cyclic quotient surface with the same analytic type:
    /// `A(k)` is `1/(k+1)(1, k)`. Types D and E are quotients by
    /// non-cyclic groups and are rejected.
    pub fn cyclic_quotient(&self) -> Result<CyclicQuotient> {
        self.validate()?;
        match *self {
            AdeKind::A(k) => CyclicQuotient::new(u64::from(k) + 1, u64::from(k)),
            _ => Err(Error::NotTypeA),
        }
    }
}

impl fmt::Display for AdeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AdeKind::A(k) => write!(f, "A{k}"),
            AdeKind::D(k) => write!(f, "D{k}"),
            AdeKind::E6 => write!(f, "E6"),
            AdeKind::E7 => write!(f, "E7"),
            AdeKind::E8 => write!(f, "E8"),
        }
    }
}

impl Serialize for AdeKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for AdeKind {
    type Err = Error;

    /// Parses labels like `A3`, `D4`, `E8` (letter case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidAde(format!("unrecognized ADE label {s:?}"));
        let (letter, index) = s.split_at_checked(1).ok_or_else(invalid)?;
        let index: u32 = index.parse().map_err(|_| invalid())?;
        let kind = match letter {
            "A" | "a" => AdeKind::A(index),
            "D" | "d" => AdeKind::D(index),
            "E" | "e" => match index {
                6 => AdeKind::E6,
                7 => AdeKind::E7,
                8 => AdeKind::E8,
                _ => return Err(invalid()),
            },
            _ => return Err(invalid()),
        };
        kind.validate()?;
        Ok(kind)
    }
}

/// An ADE hypersurface singularity of a given dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AdeSingularity {
    kind: AdeKind,
    dim: u32,
}

impl AdeSingularity {
    /// Requires a valid kind parameter and `dim >= 1`.
    pub fn new(kind: AdeKind, dim: u32) -> Result<Self> {
        kind.validate()?;
        if dim < 1 {
            return Err(Error::InvalidAde(format!(
                "dimension must be >= 1, got {dim}"
            )));
        }
        Ok(AdeSingularity { kind, dim })
    }

    pub fn kind(&self) -> AdeKind {
        self.kind
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Quadratic suspension: adjoin one square, raising the dimension by
    /// one. The Ulrich-split property is invariant under this in both
    /// directions, which is what makes [`Self::is_us`] dimension-free.
    pub fn suspension(&self) -> AdeSingularity {
        AdeSingularity {
            kind: self.kind,
            dim: self.dim + 1,
        }
    }

    /// The Ulrich-split property holds exactly for types `A1` and `A2`,
    /// in every dimension.
    pub fn is_us(&self) -> bool {
        matches!(self.kind, AdeKind::A(1) | AdeKind::A(2))
    }

    /// See [`AdeKind::cyclic_quotient`].
    pub fn cyclic_quotient(&self) -> Result<CyclicQuotient> {
        self.kind.cyclic_quotient()
    }
}

impl fmt::Display for AdeSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.kind, self.dim)
    }
}
