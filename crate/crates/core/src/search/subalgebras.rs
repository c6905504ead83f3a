use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::morphism::Signature;
use crate::subset::Subset;

/// Largest algebra `subalgebras` accepts by default.
pub const SUBALGEBRA_BOUND: usize = 24;

/// The least subset containing `seed` and the constants of `sig`, closed
/// under the operations of `sig`.
pub fn closure(a: &Algebra, sig: Signature, seed: impl IntoIterator<Item = Elem>) -> Subset {
    let mut set = Subset::from_members(a.size(), seed);
    let consts = [(Signature::UNIT, a.unit()), (Signature::BOTTOM, a.bottom())];
    for (flag, c) in consts {
        if let (true, Some(c)) = (sig.contains(flag), c) {
            set.insert(c);
        }
    }
    let invol = if sig.contains(Signature::INVOL) {
        a.involution()
    } else {
        None
    };
    let mut frontier: Vec<Elem> = set.to_vec();
    while let Some(x) = frontier.pop() {
        let add = |v: Elem, frontier: &mut Vec<Elem>, set: &mut Subset| {
            if set.insert(v) {
                frontier.push(v);
            }
        };
        if let Some(inv) = invol {
            add(inv[x], &mut frontier, &mut set);
        }
        let members = set.to_vec();
        for y in members {
            for (_, op) in sig.binary_ops() {
                add(op(a, x, y), &mut frontier, &mut set);
                add(op(a, y, x), &mut frontier, &mut set);
            }
        }
    }
    set
}

/// All nonempty subuniverses for `sig`, ordered by size then members.
pub fn subalgebras(a: &Algebra, sig: Signature) -> Result<Vec<Subset>> {
    subalgebras_bounded(a, sig, SUBALGEBRA_BOUND)
}

pub fn subalgebras_bounded(a: &Algebra, sig: Signature, bound: usize) -> Result<Vec<Subset>> {
    if a.size() > bound {
        return Err(Error::BoundExceeded {
            size: a.size(),
            bound,
        });
    }
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut queue = Vec::new();
    let base = closure(a, sig, []);
    let starts: Vec<Subset> = if base.is_empty() {
        a.elements().map(|x| closure(a, sig, [x])).collect()
    } else {
        Vec::from([base])
    };
    for s in starts {
        if seen.insert(s.mask().to_vec()) {
            queue.push(s);
        }
    }
    let mut out = Vec::new();
    while let Some(s) = queue.pop() {
        for x in a.elements().filter(|&x| !s.contains(x)) {
            let t = closure(a, sig, s.iter().chain([x]));
            if seen.insert(t.mask().to_vec()) {
                queue.push(t);
            }
        }
        out.push(s);
    }
    out.sort_by_key(|s| (s.len(), s.to_vec()));
    Ok(out)
}
