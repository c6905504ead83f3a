use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem};
use crate::error::Result;
use crate::morphism::{preserves, Morphism, Signature};

/// Which maps to collect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    Hom,
    Embed,
    Iso,
}

const UNSET: Elem = usize::MAX;

struct Search<'a> {
    src: &'a Algebra,
    tgt: &'a Algebra,
    sig: Signature,
    injective: bool,
    ordered: bool,
    found: Vec<Vec<Elem>>,
    stop_at_first: bool,
}

impl Search<'_> {
    /// Assigns `x ↦ y` and closes under the signature. `false` on conflict.
    fn assign(&self, map: &mut [Elem], used: &mut [bool], x: Elem, y: Elem) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if map[x] != UNSET {
                if map[x] != y {
                    return false;
                }
                continue;
            }
            if self.injective && used[y] {
                return false;
            }
            if self.ordered {
                for z in self.src.elements().filter(|&z| map[z] != UNSET) {
                    if self.src.leq(z, x) && !self.tgt.leq(map[z], y)
                        || self.src.leq(x, z) && !self.tgt.leq(y, map[z])
                    {
                        return false;
                    }
                }
            }
            map[x] = y;
            used[y] = true;
            if self.sig.contains(Signature::INVOL) {
                queue.push((self.src.neg(x), self.tgt.neg(y)));
            }
            for z in self.src.elements().filter(|&z| map[z] != UNSET) {
                let fz = map[z];
                for (_, op) in self.sig.binary_ops() {
                    queue.push((op(self.src, x, z), op(self.tgt, y, fz)));
                    queue.push((op(self.src, z, x), op(self.tgt, fz, y)));
                }
            }
        }
        true
    }

    fn run(&mut self, map: Vec<Elem>, used: Vec<bool>) {
        if self.stop_at_first && !self.found.is_empty() {
            return;
        }
        let Some(x) = map.iter().position(|&v| v == UNSET) else {
            let ok = preserves(self.src, self.tgt, &map, self.sig)
                .map(|v| v.holds)
                .unwrap_or(false);
            if ok {
                self.found.push(map);
            }
            return;
        };
        for y in self.tgt.elements() {
            let (mut m, mut u) = (map.clone(), used.clone());
            if self.assign(&mut m, &mut u, x, y) {
                self.run(m, u);
            }
        }
    }
}

fn search(
    a: &Algebra,
    b: &Algebra,
    sig: Signature,
    kind: MorphismKind,
    stop_at_first: bool,
) -> Result<Vec<Morphism>> {
    // Surfaces missing constants or involutions as errors up front.
    preserves(a, a, &Morphism::identity(a.size(), sig).table, sig)?;
    preserves(b, b, &Morphism::identity(b.size(), sig).table, sig)?;
    if kind == MorphismKind::Iso && a.size() != b.size()
        || kind != MorphismKind::Hom && a.size() > b.size()
    {
        return Ok(Vec::new());
    }
    let mut s = Search {
        src: a,
        tgt: b,
        sig,
        injective: kind != MorphismKind::Hom,
        ordered: sig.intersects(Signature::LATTICE),
        found: Vec::new(),
        stop_at_first,
    };
    let mut map = vec![UNSET; a.size()];
    let mut used = vec![false; b.size()];
    let seeds = [
        (Signature::UNIT, a.unit(), b.unit()),
        (Signature::BOTTOM, a.bottom(), b.bottom()),
    ];
    for (flag, x, y) in seeds {
        if let (true, Some(x), Some(y)) = (sig.contains(flag), x, y) {
            if !s.assign(&mut map, &mut used, x, y) {
                return Ok(Vec::new());
            }
        }
    }
    s.run(map, used);
    let mut out: Vec<Morphism> = s.found.into_iter().map(|t| Morphism::new(t, sig)).collect();
    out.sort();
    Ok(out)
}

/// Every map `a → b` preserving `sig`, in lexicographic order of tables.
/// Errors only when `sig` names a constant or involution one side lacks.
pub fn find_homomorphisms(
    a: &Algebra,
    b: &Algebra,
    sig: Signature,
    kind: MorphismKind,
) -> Result<Vec<Morphism>> {
    search(a, b, sig, kind, false)
}

/// An isomorphism preserving everything both algebras carry; `None` when the
/// algebras carry different constants.
pub fn find_isomorphism(a: &Algebra, b: &Algebra) -> Option<Morphism> {
    let sig = Signature::of(a);
    if sig != Signature::of(b) {
        return None;
    }
    search(a, b, sig, MorphismKind::Iso, true)
        .expect("both algebras carry the signature")
        .into_iter()
        .next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn only_identity_on_two() {
        let two = fixtures::two();
        let homs = find_homomorphisms(&two, &two, Signature::of(&two), MorphismKind::Hom).unwrap();
        assert_eq!(homs, vec![Morphism::identity(2, Signature::of(&two))]);
    }

    #[test]
    fn brouwerian_collapses_of_goedel_chain() {
        let g3 = fixtures::goedel3();
        let two = fixtures::two().without_involution();
        let homs = find_homomorphisms(&g3, &two, Signature::BROUWERIAN, MorphismKind::Hom).unwrap();
        let tables: Vec<_> = homs.iter().map(|m| m.table.clone()).collect();
        assert_eq!(tables, vec![vec![0, 1, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn chains_of_three_are_not_isomorphic() {
        let l3 = fixtures::lukasiewicz3().without_involution();
        assert!(find_isomorphism(&l3, &fixtures::goedel3()).is_none());
        let p = l3.permuted(&[2, 0, 1]).unwrap();
        let iso = find_isomorphism(&l3, &p).unwrap();
        assert_eq!(iso.table, vec![2, 0, 1]);
    }
}
