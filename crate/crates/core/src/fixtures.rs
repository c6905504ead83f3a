//! The small residuated lattices used throughout: the two-element Boolean
//! algebra, the three-element Łukasiewicz and Gödel chains, and the
//! three-element Sugihara monoid.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem};

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn chain(n: usize, prod: impl FnMut(Elem, Elem) -> Elem, unit: Elem) -> Algebra {
    Algebra::from_ops(n, |x, y| x.max(y), |x, y| x.min(y), prod, Some(unit))
        .expect("fixture tables are residuated")
}

/// The Boolean algebra `0 < 1` with `∼ = ¬` and bottom `0`.
pub fn two() -> Algebra {
    chain(2, |x, y| x.min(y), 1)
        .with_involution(vec![1, 0])
        .and_then(|a| a.with_bottom(0))
        .expect("fixture is involutive")
        .with_names(names(&["0", "1"]))
}

/// Łukasiewicz chain `0 < a < 1` (indices 0, 1, 2): `xy = max(0, x+y-2)`, `∼x = 2-x`, bottom `0`.
pub fn lukasiewicz3() -> Algebra {
    chain(3, |x, y| (x + y).saturating_sub(2), 2)
        .with_involution(vec![2, 1, 0])
        .and_then(|a| a.with_bottom(0))
        .expect("fixture is involutive")
        .with_names(names(&["0", "a", "1"]))
}

/// Gödel chain `0 < a < 1`: product is meet, bottom `0`, no involution.
pub fn goedel3() -> Algebra {
    chain(3, |x, y| x.min(y), 2)
        .with_bottom(0)
        .expect("fixture has a least element")
        .with_names(names(&["0", "a", "1"]))
}

/// Sugihara monoid on `⊥ < e < ⊤`: `e` neutral, `⊥⊥ = ⊥⊤ = ⊥`, `⊤⊤ = ⊤`,
/// `∼` swapping `⊥` and `⊤`. No bottom constant is designated.
pub fn sugihara3() -> Algebra {
    let prod = |x: Elem, y: Elem| match (x, y) {
        (1, y) => y,
        (x, 1) => x,
        (2, 2) => 2,
        _ => 0,
    };
    chain(3, prod, 1)
        .with_involution(vec![2, 1, 0])
        .expect("fixture is involutive")
        .with_names(names(&["⊥", "e", "⊤"]))
}

/// The named base algebras, in a fixed order.
pub fn bases() -> Vec<(&'static str, Algebra)> {
    vec![
        ("2", two()),
        ("L3", lukasiewicz3()),
        ("G3", goedel3()),
        ("S3", sugihara3()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_certify() {
        for (name, a) in bases() {
            assert!(
                crate::validate(&a.to_raw()).unwrap().is_certified(),
                "{name}"
            );
        }
    }

    #[test]
    fn lukasiewicz_implication() {
        let l3 = lukasiewicz3();
        for x in 0..3 {
            for z in 0..3 {
                assert_eq!(l3.ldiv(x, z), (2 - x + z).min(2));
            }
        }
    }

    #[test]
    fn profiles() {
        let g = goedel3().profile();
        assert!(g.commutative && g.integral && g.distributive && g.bounded && g.brouwerian);
        let s = sugihara3().profile();
        assert!(s.commutative && s.distributive && s.odd);
        assert!(!s.integral && !s.bounded && !s.brouwerian);
        let l = lukasiewicz3().profile();
        assert!(l.commutative && l.integral && l.distributive && l.bounded);
        assert!(!l.brouwerian && !l.odd);
    }
}
