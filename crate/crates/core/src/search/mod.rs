//! Enumeration of small residuated lattices up to isomorphism, canonical
//! forms, homomorphism search and subalgebra listing.

mod canonical;
mod enumerate;
mod homs;
mod subalgebras;

use bitflags::bitflags;

pub use canonical::{canonical_form, canonical_key, canonical_labeling};
pub use enumerate::{enumerate_lattices, enumerate_residuated_lattices, Enumeration, Lattice};
pub use homs::{find_homomorphisms, find_isomorphism, MorphismKind};
pub use subalgebras::{closure, subalgebras, subalgebras_bounded, SUBALGEBRA_BOUND};

/// Largest size `enumerate_residuated_lattices` accepts unless raised.
pub const DEFAULT_BOUND: usize = 6;

bitflags! {
    /// Restrictions on enumerated algebras. `INVOLUTIVE` and `ODD` make the
    /// output carry an involution, `BOUNDED` a bottom constant.
    #[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
    pub struct Constraints: u8 {
        const COMMUTATIVE = 1;
        const INTEGRAL = 1 << 1;
        const INVOLUTIVE = 1 << 2;
        const DISTRIBUTIVE = 1 << 3;
        const BOUNDED = 1 << 4;
        const IDEMPOTENT = 1 << 5;
        /// Involutive with `∼e = e`.
        const ODD = 1 << 6;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub size: usize,
    pub constraints: Constraints,
    pub limit: Option<usize>,
    /// Emit one algebra per isomorphism class rather than every labeled
    /// product over each lattice representative.
    pub canonical_only: bool,
    pub bound: usize,
}

impl SearchSpec {
    pub fn new(size: usize) -> Self {
        SearchSpec {
            size,
            constraints: Constraints::empty(),
            limit: None,
            canonical_only: true,
            bound: DEFAULT_BOUND,
        }
    }

    pub fn with(mut self, c: Constraints) -> Self {
        self.constraints |= c;
        self
    }

    pub fn bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn canonical_only(mut self, yes: bool) -> Self {
        self.canonical_only = yes;
        self
    }
}
