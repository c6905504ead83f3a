use alloc::vec;
use alloc::vec::Vec;

use bitflags::bitflags;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// A binary operation of an algebra, as a method pointer.
pub type BinaryOp = fn(&Algebra, Elem, Elem) -> Elem;

bitflags! {
    /// Operations and constants a map is required to preserve.
    #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
    pub struct Signature: u16 {
        const JOIN = 1;
        const MEET = 1 << 1;
        const PROD = 1 << 2;
        const LDIV = 1 << 3;
        const RDIV = 1 << 4;
        const INVOL = 1 << 5;
        const UNIT = 1 << 6;
        const BOTTOM = 1 << 7;

        const LATTICE = Self::JOIN.bits() | Self::MEET.bits();
        const SEMIGROUP = Self::LATTICE.bits() | Self::PROD.bits() | Self::LDIV.bits() | Self::RDIV.bits();
        const RESIDUATED = Self::SEMIGROUP.bits() | Self::UNIT.bits();
        const INVOLUTIVE = Self::RESIDUATED.bits() | Self::INVOL.bits();
        /// `∨, ∧, →, 1` on algebras whose product is meet.
        const BROUWERIAN = Self::LATTICE.bits() | Self::LDIV.bits() | Self::UNIT.bits();
    }
}

impl Signature {
    /// Everything the algebra actually carries.
    pub fn of(a: &Algebra) -> Signature {
        let mut s = Signature::SEMIGROUP;
        s.set(Signature::UNIT, a.unit().is_some());
        s.set(Signature::INVOL, a.involution().is_some());
        s.set(Signature::BOTTOM, a.bottom().is_some());
        s
    }

    pub fn binary_ops(self) -> impl Iterator<Item = (Signature, BinaryOp)> {
        let all: [(Signature, BinaryOp); 5] = [
            (Signature::JOIN, Algebra::join),
            (Signature::MEET, Algebra::meet),
            (Signature::PROD, Algebra::mul),
            (Signature::LDIV, Algebra::ldiv),
            (Signature::RDIV, Algebra::rdiv),
        ];
        all.into_iter().filter(move |(s, _)| self.contains(*s))
    }

    pub fn op_name(self) -> &'static str {
        match self {
            Signature::JOIN => "join",
            Signature::MEET => "meet",
            Signature::PROD => "prod",
            Signature::LDIV => "ldiv",
            Signature::RDIV => "rdiv",
            Signature::INVOL => "invol",
            Signature::UNIT => "unit",
            Signature::BOTTOM => "bottom",
            _ => "signature",
        }
    }
}

/// An index map between two algebras together with what it must preserve.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    pub table: Vec<Elem>,
    pub signature: Signature,
}

impl Morphism {
    pub fn new(table: Vec<Elem>, signature: Signature) -> Self {
        Morphism { table, signature }
    }

    pub fn identity(n: usize, signature: Signature) -> Self {
        Morphism::new((0..n).collect(), signature)
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = Vec::new();
        for &y in &self.table {
            if seen.contains(&y) {
                return false;
            }
            seen.push(y);
        }
        true
    }

    pub fn is_surjective_onto(&self, target_size: usize) -> bool {
        (0..target_size).all(|y| self.table.contains(&y))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        Morphism::new(
            self.table.iter().map(|&x| other.table[x]).collect(),
            self.signature & other.signature,
        )
    }

    /// The inverse of a bijection.
    pub fn inverse(&self) -> Option<Morphism> {
        let n = self.table.len();
        let mut inv = vec![usize::MAX; n];
        for (x, &y) in self.table.iter().enumerate() {
            if y >= n || inv[y] != usize::MAX {
                return None;
            }
            inv[y] = x;
        }
        Some(Morphism::new(inv, self.signature))
    }

    /// Checks the map is well formed and preserves its signature.
    pub fn verify(&self, source: &Algebra, target: &Algebra) -> Result<Verdict> {
        preserves(source, target, &self.table, self.signature)
    }
}

/// Checks that `table` preserves every operation and constant in `sig`.
/// Constants required by the signature but absent from either algebra are errors.
pub fn preserves(
    source: &Algebra,
    target: &Algebra,
    table: &[Elem],
    sig: Signature,
) -> Result<Verdict> {
    if table.len() != source.size() || table.iter().any(|&y| y >= target.size()) {
        return Err(Error::Malformed(
            "morphism table does not fit its algebras".into(),
        ));
    }
    let mut v = Verdict::new("morphism");
    let f = |x: Elem| table[x];
    for (op, eval) in sig.binary_ops() {
        for x in source.elements() {
            for y in source.elements() {
                if f(eval(source, x, y)) != eval(target, f(x), f(y)) {
                    v.fail(op.op_name(), &[x, y]);
                }
            }
        }
    }
    if sig.contains(Signature::INVOL) {
        let (si, ti) = (source.require_invol()?, target.require_invol()?);
        for x in source.elements() {
            if f(si[x]) != ti[f(x)] {
                v.fail("invol", &[x]);
            }
        }
    }
    if sig.contains(Signature::UNIT) {
        let (se, te) = (source.require_unit()?, target.require_unit()?);
        if f(se) != te {
            v.fail("unit", &[se]);
        }
    }
    if sig.contains(Signature::BOTTOM) {
        let (sb, tb) = (source.require_bottom()?, target.require_bottom()?);
        if f(sb) != tb {
            v.fail("bottom", &[sb]);
        }
    }
    Ok(v)
}
