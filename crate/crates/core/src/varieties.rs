//! Pointwise membership checks for the Kalman, Nelson, paraconsistent Nelson
//! and Nelson-type varieties, plus dense elements and filters of Brouwerian
//! algebras.

use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::search::{self, Constraints, SearchSpec};
use crate::subset::Subset;
use crate::verdict::Verdict;

fn require_commutative(a: &Algebra) -> Result<()> {
    match a.n_pairs().find(|&(x, y)| a.mul(x, y) != a.mul(y, x)) {
        Some((x, y)) => Err(Error::pre("algebra is commutative", [x, y])),
        None => Ok(()),
    }
}

fn sq(a: &Algebra, x: Elem) -> Elem {
    a.mul(x, x)
}

/// K1–K5 with `x → y = x\y` and `∼x = x → e`. Both phrasings of K3 are
/// checked; when K1 holds everywhere they must agree.
pub fn is_kalman(a: &Algebra) -> Result<Verdict> {
    require_commutative(a)?;
    let e = a.require_unit()?;
    let imp = |x, y| a.ldiv(x, y);
    let neg = |x| imp(x, e);
    let mut v = Verdict::new("Kalman");
    let mut k1_everywhere = true;
    for x in a.elements() {
        if neg(neg(x)) != x {
            v.fail("K1", &[x]);
            k1_everywhere = false;
        }
    }
    let mut k3_mismatch = None;
    for (x, y) in a.n_pairs() {
        if a.meet(a.mul(x, y), e) != a.mul(a.meet(x, e), a.meet(y, e)) {
            v.fail("K2", &[x, y]);
        }
        let lhs = a.meet(imp(a.meet(x, e), y), imp(x, a.join(y, e)));
        let alt = a.meet(imp(a.meet(x, e), y), imp(a.meet(neg(y), e), neg(x)));
        let rhs = imp(x, y);
        if lhs != rhs {
            v.fail("K3", &[x, y]);
        }
        if (lhs == rhs) != (alt == rhs) {
            k3_mismatch.get_or_insert([x, y]);
        }
        if a.meet(e, a.join(x, y)) != a.join(a.meet(e, x), a.meet(e, y)) {
            v.fail("K4", &[x, y]);
        }
        let k5 = |x, y| a.meet(x, a.join(y, e)) == a.join(a.meet(x, y), a.meet(x, e));
        if !k5(x, y) {
            v.fail("K5", &[x, y]);
        }
    }
    if k1_everywhere {
        if let Some(w) = k3_mismatch {
            return Err(Error::internal("both forms of K3 agree under K1", w));
        }
    }
    Ok(v)
}

/// NRL1 and NRL2 with `¬x = x → ⊥`, on bounded integral commutative algebras.
pub fn is_nelson_rl(a: &Algebra) -> Result<Verdict> {
    require_commutative(a)?;
    let b = a.require_bottom()?;
    let e = a.require_unit()?;
    if e != a.greatest() {
        return Err(Error::pre("algebra is integral", [e]));
    }
    let imp = |x, y| a.ldiv(x, y);
    let not = |x| imp(x, b);
    let mut v = Verdict::new("Nelson residuated lattice");
    for x in a.elements() {
        if not(not(x)) != x {
            v.fail("NRL1", &[x]);
        }
    }
    for (x, y) in a.n_pairs() {
        let lhs = a.meet(imp(sq(a, x), y), imp(sq(a, not(y)), not(x)));
        if lhs != imp(x, y) {
            v.fail("NRL2", &[x, y]);
        }
    }
    Ok(v)
}

/// NPc1–NPc4 with `∼x = x → e`, together with oddness and distributivity.
///
/// A designated involution with `∼e ≠ e` is reported under "odd" with
/// witness `(e, ∼e)`; otherwise it coincides with `x → e`.
pub fn is_npc(a: &Algebra) -> Result<Verdict> {
    require_commutative(a)?;
    let e = a.require_unit()?;
    let imp = |x, y| a.ldiv(x, y);
    let neg = |x| imp(x, e);
    let mut v = Verdict::new("Nelson paraconsistent");
    if let Some(inv) = a.involution() {
        if inv[e] != e {
            v.fail("odd", &[e, inv[e]]);
        }
    }
    check_distributive(a, &mut v);
    for x in a.elements() {
        if neg(neg(x)) != x {
            v.fail("NPc1", &[x]);
        }
        let m = a.meet(x, e);
        if sq(a, m) != m {
            v.fail("NPc3", &[x]);
        }
    }
    let k1 = !v.fails("NPc1");
    let mut mismatch = None;
    for (x, y) in a.n_pairs() {
        if a.meet(a.mul(x, y), e) != a.mul(a.meet(x, e), a.meet(y, e)) {
            v.fail("NPc2", &[x, y]);
        }
        let rhs = imp(x, y);
        let lhs = a.meet(imp(a.meet(x, e), y), imp(x, a.join(y, e)));
        let alt = a.meet(imp(a.meet(x, e), y), imp(a.meet(neg(y), e), neg(x)));
        if lhs != rhs {
            v.fail("NPc4", &[x, y]);
        }
        if (lhs == rhs) != (alt == rhs) {
            mismatch.get_or_insert([x, y]);
        }
    }
    if k1 {
        if let Some(w) = mismatch {
            return Err(Error::internal("both forms of NPc4 agree under NPc1", w));
        }
    }
    Ok(v)
}

fn check_distributive(a: &Algebra, v: &mut Verdict) {
    for (x, y, z) in a.n_triples() {
        if a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)) {
            v.fail("distributive", &[x, y, z]);
            return;
        }
    }
}

fn nt_common(a: &Algebra, name: &str) -> Result<Verdict> {
    require_commutative(a)?;
    let e = a.require_unit()?;
    a.require_invol()?;
    let t = |x| {
        let m = a.meet(x, e);
        a.mul(m, m)
    };
    let mut v = Verdict::new(name);
    check_distributive(a, &mut v);
    for (x, y) in a.n_pairs() {
        if a.mul(x, y) != a.join(a.mul(t(x), y), a.mul(x, t(y))) {
            v.fail("N1", &[x, y]);
        }
        if t(a.mul(x, y)) != a.mul(t(x), t(y)) {
            v.fail("N2", &[x, y]);
        }
    }
    Ok(v)
}

/// N1–N2 on commutative involutive algebras, with distributivity.
pub fn is_nt(a: &Algebra) -> Result<Verdict> {
    nt_common(a, "Nelson-type")
}

/// NT plus N3: `e <= ∼e ∨ (∼e → x)`.
pub fn is_nt0(a: &Algebra) -> Result<Verdict> {
    let mut v = nt_common(a, "Nelson-type, N3")?;
    let e = a.unit().expect("checked by nt_common");
    let f = a.neg(e);
    for x in a.elements() {
        if !a.leq(e, a.join(f, a.ldiv(f, x))) {
            v.fail("N3", &[x]);
        }
    }
    Ok(v)
}

/// Brouwerian: the product is meet (which makes the unit the top).
pub fn is_brouwerian(a: &Algebra) -> Result<Verdict> {
    a.require_unit()?;
    let mut v = Verdict::new("Brouwerian");
    for (x, y) in a.n_pairs() {
        if a.mul(x, y) != a.meet(x, y) {
            v.fail("product is meet", &[x, y]);
        }
    }
    Ok(v)
}

fn require_brouwerian(h: &Algebra) -> Result<()> {
    if h.is_brouwerian() {
        Ok(())
    } else {
        Err(Error::pre("algebra is Brouwerian", Vec::new()))
    }
}

/// All values `x ∨ (x → y)`.
pub fn dense_elements(h: &Algebra) -> Result<Subset> {
    require_brouwerian(h)?;
    Ok(Subset::from_members(
        h.size(),
        h.n_pairs().map(|(x, y)| h.join(x, h.ldiv(x, y))),
    ))
}

/// Nonempty, upward closed and closed under meets.
pub fn is_lattice_filter(a: &Algebra, f: &Subset) -> bool {
    if f.universe_size() != a.size() || f.is_empty() {
        return false;
    }
    f.iter().all(|x| {
        a.elements().all(|y| !a.leq(x, y) || f.contains(y))
            && f.iter().all(|y| f.contains(a.meet(x, y)))
    })
}

/// A lattice filter containing every dense element.
pub fn is_boolean_filter(h: &Algebra, f: &Subset) -> Result<bool> {
    let dense = dense_elements(h)?;
    Ok(is_lattice_filter(h, f) && dense.is_subset_of(f))
}

/// Every lattice filter; in a finite lattice these are the principal upsets.
pub fn lattice_filters(a: &Algebra) -> Vec<Subset> {
    let mut out: Vec<Subset> = a
        .elements()
        .map(|x| Subset::from_members(a.size(), a.elements().filter(|&y| a.leq(x, y))))
        .collect();
    out.sort_by_key(|s| (s.len(), s.to_vec()));
    out
}

pub fn boolean_filters(h: &Algebra) -> Result<Vec<Subset>> {
    let dense = dense_elements(h)?;
    Ok(lattice_filters(h)
        .into_iter()
        .filter(|f| dense.is_subset_of(f))
        .collect())
}

/// Outcome of searching small commutative residuated lattices for K1–K4 without K5.
#[derive(Clone, Debug)]
pub struct K5Report {
    pub size_bound: usize,
    /// Commutative residuated lattices examined, per size `1..=size_bound`.
    pub examined: Vec<usize>,
    /// Of those, the ones satisfying K1–K4.
    pub satisfying_k1_to_k4: Vec<usize>,
    pub counterexamples: Vec<Algebra>,
}

/// Enumerates every commutative residuated lattice up to `size_bound`
/// elements (one per isomorphism class) and looks for K5 failures among
/// those satisfying K1–K4.
pub fn check_k5_redundancy(size_bound: usize) -> Result<K5Report> {
    let mut report = K5Report {
        size_bound,
        examined: Vec::new(),
        satisfying_k1_to_k4: Vec::new(),
        counterexamples: Vec::new(),
    };
    for n in 1..=size_bound {
        let spec = SearchSpec::new(n)
            .with(Constraints::COMMUTATIVE)
            .bound(size_bound.max(search::DEFAULT_BOUND));
        let (mut examined, mut kept) = (0, 0);
        for a in search::enumerate_residuated_lattices(&spec)? {
            examined += 1;
            let v = is_kalman(&a)?;
            if v.failed_axioms().iter().all(|&ax| ax == "K5") {
                kept += 1;
                if !v.holds {
                    report.counterexamples.push(a);
                }
            }
        }
        report.examined.push(examined);
        report.satisfying_k1_to_k4.push(kept);
    }
    Ok(report)
}
