//! Exact computation with finite residuated lattices.
//!
//! Algebras are validated operation tables over the indices `0..n`. On top of
//! them the crate builds twist structures and conucleus images, decides
//! membership in the Kalman, Nelson, paraconsistent Nelson and Nelson-type
//! varieties, runs the representation theorems for Nelson conucleus algebras
//! as checkable maps, and enumerates small residuated lattices up to
//! isomorphism.
//!
//! ```
//! use twistlab_core::{fixtures, twist};
//!
//! let l3 = fixtures::lukasiewicz3();
//! let tw = twist::twist(&l3, 0).unwrap();
//! assert_eq!(tw.algebra.size(), 6);
//! assert!(tw.algebra.involution().is_some());
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod conuclei;
pub mod error;
pub mod fixtures;
pub mod morphism;
pub mod representation;
pub mod search;
pub mod subset;
pub mod twist;
pub mod varieties;
pub mod verdict;

pub use algebra::{
    validate, Algebra, Elem, Embedded, Profile, RawAlgebra, Table, ValidationReport,
};
pub use conuclei::{NcaPair, UnaryMap};
pub use error::{Error, Result};
pub use morphism::{Morphism, Signature};
pub use subset::Subset;
pub use twist::Twist;
pub use verdict::{Verdict, Witness};
