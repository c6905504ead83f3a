use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Elem, ValidationReport};

/// Everything that can go wrong in this crate.
///
/// `Internal` is reserved for a failed self-check: a theorem or derived
/// lemma that must hold given the (already verified) preconditions did not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Input tables have the wrong shape or contain out-of-range indices.
    Malformed(String),
    /// Tables are well formed but violate the residuated lattice axioms.
    Invalid(ValidationReport),
    /// A residual `x\z` (or `z/x`) does not exist: `{y : xy <= z}` has no maximum.
    NotResiduated {
        side: Side,
        x: Elem,
        z: Elem,
    },
    MissingUnit,
    MissingInvolution,
    MissingBottom,
    /// A stated precondition of an operation does not hold.
    Precondition {
        what: &'static str,
        witness: Vec<Elem>,
    },
    /// A size guard was hit.
    BoundExceeded {
        size: usize,
        bound: usize,
    },
    Internal {
        check: &'static str,
        witness: Vec<Elem>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Error {
    pub(crate) fn pre(what: &'static str, witness: impl Into<Vec<Elem>>) -> Self {
        Error::Precondition {
            what,
            witness: witness.into(),
        }
    }

    pub(crate) fn internal(check: &'static str, witness: impl Into<Vec<Elem>>) -> Self {
        Error::Internal {
            check,
            witness: witness.into(),
        }
    }

    /// True for failures of the library's own consistency checks.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed(msg) => write!(f, "malformed table: {msg}"),
            Error::Invalid(report) => write!(f, "not a residuated structure:\n{report}"),
            Error::NotResiduated { side, x, z } => match side {
                Side::Left => write!(f, "product not residuated: {x}\\{z} has no maximum"),
                Side::Right => write!(f, "product not residuated: {z}/{x} has no maximum"),
            },
            Error::MissingUnit => f.write_str("algebra has no designated unit"),
            Error::MissingInvolution => f.write_str("algebra has no involution"),
            Error::MissingBottom => f.write_str("algebra has no designated bottom"),
            Error::Precondition { what, witness } => {
                write!(f, "precondition failed: {what} (witness {witness:?})")
            }
            Error::BoundExceeded { size, bound } => {
                write!(f, "size {size} exceeds the configured bound {bound}")
            }
            Error::Internal { check, witness } => {
                write!(
                    f,
                    "internal consistency check failed: {check} (witness {witness:?})"
                )
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
