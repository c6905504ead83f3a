//! Twist structures over a residuated lattice `L`.
//!
//! Pairs `(a, b)` are ordered as in `L × L∂` and carry
//!
//! ```text
//! ∼(a,b)            = (b, a)
//! (a,b)·(a',b')     = (aa', b'/a ∧ a'\b)
//! (a,b)\(a',b')     = (a\a' ∧ b/b', b'a)
//! (a',b')/(a,b)     = (a'/a ∧ b'\b, ab')
//! ```
//!
//! Elements are numbered by the lexicographic order of their pairs, so output
//! is reproducible.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem, RawAlgebra, Table};
use crate::conuclei::{self, UnaryMap};
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::varieties;
use crate::verdict::Verdict;

/// A twist algebra together with the pair behind each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub algebra: Algebra,
    pub base: Algebra,
    /// `None` for the full twist.
    pub iota: Option<Elem>,
    pub pairs: Vec<(Elem, Elem)>,
}

impl Twist {
    pub fn pair(&self, x: Elem) -> (Elem, Elem) {
        self.pairs[x]
    }

    pub fn index_of(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.pairs.binary_search(&(a, b)).ok()
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Whether `sub` contains every `τ_Tw` value, i.e. every `(a, ι/a ∧ a\ι)`.
    pub fn contains_tau_image(&self, sub: &Twist) -> Result<bool> {
        let iota = self
            .iota
            .ok_or(Error::pre("twist has a designated ι", Vec::new()))?;
        let l = &self.base;
        Ok(l.elements().all(|a| {
            let b = l.meet(l.rdiv(iota, a), l.ldiv(a, iota));
            sub.index_of(a, b).is_some()
        }))
    }
}

type PairOp = fn(&Algebra, (Elem, Elem), (Elem, Elem)) -> (Elem, Elem);

fn mul(l: &Algebra, (a, b): (Elem, Elem), (c, d): (Elem, Elem)) -> (Elem, Elem) {
    (l.mul(a, c), l.meet(l.rdiv(d, a), l.ldiv(c, b)))
}

fn ldiv(l: &Algebra, (a, b): (Elem, Elem), (c, d): (Elem, Elem)) -> (Elem, Elem) {
    (l.meet(l.ldiv(a, c), l.rdiv(b, d)), l.mul(d, a))
}

/// `(c,d)/(a,b)`.
fn rdiv(l: &Algebra, (c, d): (Elem, Elem), (a, b): (Elem, Elem)) -> (Elem, Elem) {
    (l.meet(l.rdiv(c, a), l.ldiv(d, b)), l.mul(a, d))
}

fn meet(l: &Algebra, (a, b): (Elem, Elem), (c, d): (Elem, Elem)) -> (Elem, Elem) {
    (l.meet(a, c), l.join(b, d))
}

fn join(l: &Algebra, (a, b): (Elem, Elem), (c, d): (Elem, Elem)) -> (Elem, Elem) {
    (l.join(a, c), l.meet(b, d))
}

/// Builds the algebra on `pairs` (sorted) with the twist operations.
/// An operation leaving the set is an internal error: callers only pass sets
/// the theory guarantees to be closed.
fn build(
    l: &Algebra,
    pairs: Vec<(Elem, Elem)>,
    unit: Option<(Elem, Elem)>,
    iota: Option<Elem>,
) -> Result<Twist> {
    let m = pairs.len();
    let index = |p: (Elem, Elem)| pairs.binary_search(&p).ok();
    let mut escaped: Option<Vec<Elem>> = None;
    let mut table = |op: PairOp| {
        Table::from_fn(m, |i, j| {
            let r = op(l, pairs[i], pairs[j]);
            index(r).unwrap_or_else(|| {
                escaped.get_or_insert_with(|| vec![pairs[i].0, pairs[i].1, pairs[j].0, pairs[j].1]);
                0
            })
        })
        .rows()
    };
    let raw_join = table(join);
    let raw_meet = table(meet);
    let raw_prod = table(mul);
    let raw_ldiv = table(ldiv);
    let raw_rdiv = table(rdiv);
    if let Some(w) = escaped {
        return Err(Error::internal(
            "twist universe closed under the operations",
            w,
        ));
    }
    let mut invol = Vec::with_capacity(m);
    for &(a, b) in &pairs {
        invol.push(
            index((b, a))
                .ok_or_else(|| Error::internal("twist universe closed under ∼", [a, b]))?,
        );
    }
    let unit = match unit {
        Some(u) => {
            Some(index(u).ok_or_else(|| Error::internal("twist contains its unit", [u.0, u.1]))?)
        }
        None => None,
    };
    let bottom = match l.bottom() {
        Some(b) => index((b, l.greatest())),
        None => None,
    };
    let names = pairs
        .iter()
        .map(|&(a, b)| format!("({},{})", l.name(a), l.name(b)))
        .collect();
    let algebra = Algebra::new(RawAlgebra {
        size: m,
        join: raw_join,
        meet: raw_meet,
        prod: raw_prod,
        ldiv: Some(raw_ldiv),
        rdiv: Some(raw_rdiv),
        unit,
        invol: Some(invol),
        bottom,
        names: Some(names),
    })
    .map_err(|err| match err {
        Error::Invalid(_) => {
            Error::internal("twist is an involutive residuated structure", Vec::new())
        }
        other => other,
    })?;
    Ok(Twist {
        algebra,
        base: l.clone(),
        iota,
        pairs,
    })
}

fn all_pairs(l: &Algebra) -> Vec<(Elem, Elem)> {
    l.elements()
        .flat_map(|a| l.elements().map(move |b| (a, b)))
        .collect()
}

/// The full twist `L × L` as an involutive residuated lattice-ordered semigroup, without unit.
pub fn full_twist_semigroup(l: &Algebra) -> Result<Twist> {
    build(l, all_pairs(l), None, None)
}

/// The full twist with unit `(e, ⊤)`; a finite lattice always has a top.
pub fn full_twist(l: &Algebra) -> Result<Twist> {
    let e = l.require_unit()?;
    build(l, all_pairs(l), Some((e, l.greatest())), None)
}

/// `Tw(L, ι) = {(a,b) : ab ∨ ba <= ι}` with unit `(e, ι)`, and bottom `(⊥, ⊤)`
/// when `L` is bounded.
///
/// Cross-checked against the double-division image of the full twist at `(e, ι)`.
pub fn twist(l: &Algebra, iota: Elem) -> Result<Twist> {
    let e = l.require_unit()?;
    if iota >= l.size() {
        return Err(Error::Malformed(format!("ι = {iota} is out of range")));
    }
    let pairs: Vec<(Elem, Elem)> = all_pairs(l)
        .into_iter()
        .filter(|&(a, b)| l.leq(l.join(l.mul(a, b), l.mul(b, a)), iota))
        .collect();
    let tw = build(l, pairs, Some((e, iota)), Some(iota))?;

    let full = full_twist_semigroup(l)?;
    let p = full.index_of(e, iota).expect("full twist has every pair");
    let image = conuclei::double_division_image(&full.algebra, p)?;
    let image_pairs: Vec<(Elem, Elem)> = image.embedding.iter().map(|&x| full.pair(x)).collect();
    if image_pairs != tw.pairs {
        let stray = image_pairs
            .iter()
            .chain(tw.pairs.iter())
            .find(|q| !(image_pairs.contains(q) && tw.pairs.contains(q)))
            .copied()
            .unwrap_or((0, 0));
        return Err(Error::internal(
            "twist equals the double-division image",
            [stray.0, stray.1],
        ));
    }
    let (x, y) = (tw.algebra.to_raw(), image.algebra.to_raw());
    if x.join != y.join
        || x.meet != y.meet
        || x.prod != y.prod
        || x.ldiv != y.ldiv
        || x.rdiv != y.rdiv
        || x.invol != y.invol
        || x.unit != y.unit
    {
        return Err(Error::internal(
            "twist operations agree with the double-division image",
            Vec::new(),
        ));
    }
    Ok(tw)
}

/// `M_ι = {(a,b) : a = ι/b ∧ b\ι, b = ι/a ∧ a\ι}` as a subset of `Tw(L, ι)`.
pub fn maximal_set(tw: &Twist) -> Result<Subset> {
    let iota = tw
        .iota
        .ok_or(Error::pre("twist has a designated ι", Vec::new()))?;
    let l = &tw.base;
    let dual = |x: Elem| l.meet(l.rdiv(iota, x), l.ldiv(x, iota));
    Ok(Subset::from_members(
        tw.size(),
        (0..tw.size()).filter(|&i| {
            let (a, b) = tw.pair(i);
            a == dual(b) && b == dual(a)
        }),
    ))
}

/// `Tw(L, ι)` is a downset of `L × L`, `M_ι` consists of maximal elements,
/// and for cyclic `ι` the twist is the downset generated by `M_ι`.
pub fn check_downset(tw: &Twist) -> Result<Verdict> {
    let iota = tw
        .iota
        .ok_or(Error::pre("twist has a designated ι", Vec::new()))?;
    let l = &tw.base;
    let below = |(a, b): (Elem, Elem), (c, d): (Elem, Elem)| l.leq(a, c) && l.leq(b, d);
    let mut v = Verdict::new("downset");
    for &p in &tw.pairs {
        for q in all_pairs(l) {
            if below(q, p) && tw.index_of(q.0, q.1).is_none() {
                v.fail("downset of L×L", &[q.0, q.1, p.0, p.1]);
            }
        }
    }
    let max = maximal_set(tw)?;
    for m in max.iter() {
        let p = tw.pair(m);
        for &q in &tw.pairs {
            if q != p && below(p, q) {
                v.fail("maximal elements", &[p.0, p.1, q.0, q.1]);
            }
        }
    }
    if l.is_cyclic_element(iota) {
        for &p in &tw.pairs {
            if !max.iter().any(|m| below(p, tw.pair(m))) {
                v.fail("generated by maximal set", &[p.0, p.1]);
            }
        }
    }
    Ok(v)
}

/// `τ_Tw(a,b) = (a, ι/a ∧ a\ι)` on `Tw(L, ι)`, refused unless `ι` is cyclic.
///
/// Verifies that the map is multiplicative and join preserving, that
/// `τ(x)y ∨ xτ(y) = xy`, and that it is a Nelson conucleus.
pub fn tau_tw(tw: &Twist) -> Result<UnaryMap> {
    let iota = tw
        .iota
        .ok_or(Error::pre("twist has a designated ι", Vec::new()))?;
    let l = &tw.base;
    if !l.is_cyclic_element(iota) {
        let x = l
            .elements()
            .find(|&x| l.ldiv(x, iota) != l.rdiv(iota, x))
            .unwrap_or(0);
        return Err(Error::pre("ι is cyclic", [iota, x]));
    }
    let mut table = Vec::with_capacity(tw.size());
    for &(a, _) in &tw.pairs {
        let b = l.meet(l.rdiv(iota, a), l.ldiv(a, iota));
        table.push(
            tw.index_of(a, b)
                .ok_or_else(|| Error::internal("τ_Tw stays in the twist", [a, b]))?,
        );
    }
    let t = UnaryMap::new(table);
    let a = &tw.algebra;
    for (x, y) in a.n_pairs() {
        if t.apply(a.mul(x, y)) != a.mul(t.apply(x), t.apply(y)) {
            return Err(Error::internal("τ_Tw is multiplicative", [x, y]));
        }
        if t.apply(a.join(x, y)) != a.join(t.apply(x), t.apply(y)) {
            return Err(Error::internal("τ_Tw preserves joins", [x, y]));
        }
        if a.join(a.mul(t.apply(x), y), a.mul(x, t.apply(y))) != a.mul(x, y) {
            return Err(Error::internal("τ_Tw(x)y ∨ xτ_Tw(y) = xy", [x, y]));
        }
    }
    if !conuclei::is_nelson_conucleus(a, &t)?.holds {
        return Err(Error::internal("τ_Tw is a Nelson conucleus", Vec::new()));
    }
    Ok(t)
}

/// Restricts `tw` to the pairs accepted by `keep`, requiring closure and the `τ_Tw` image.
fn sub_twist(tw: &Twist, keep: impl Fn(Elem, Elem) -> bool) -> Result<Twist> {
    let pairs: Vec<(Elem, Elem)> = tw
        .pairs
        .iter()
        .copied()
        .filter(|&(a, b)| keep(a, b))
        .collect();
    let e = tw.base.require_unit()?;
    let iota = tw.iota.expect("sub-twists are taken of Tw(L, ι)");
    let sub = build(&tw.base, pairs, Some((e, iota)), Some(iota))?;
    if !tw.contains_tau_image(&sub)? {
        return Err(Error::internal(
            "sub-twist contains the τ_Tw image",
            Vec::new(),
        ));
    }
    Ok(sub)
}

/// `Tw(H, ι, F) = {(a,b) : a∧b <= ι, a∨b ∈ F}` for a Brouwerian `H` and Boolean filter `F`.
pub fn sendlewski_twist(h: &Algebra, iota: Elem, f: &Subset) -> Result<Twist> {
    if !h.is_brouwerian() {
        return Err(Error::pre("base is Brouwerian", Vec::new()));
    }
    if !varieties::is_boolean_filter(h, f)? {
        return Err(Error::pre("F is a Boolean filter", f.to_vec()));
    }
    let tw = twist(h, iota)?;
    sub_twist(&tw, |a, b| {
        h.leq(h.meet(a, b), iota) && f.contains(h.join(a, b))
    })
}

/// `Tw(L, ι, F) = {(a,b) : ab <= ι, a⊕b ∈ F}` for a commutative involutive `L`
/// and a lattice filter `F` containing `e⊕ι`.
pub fn inca_twist(l: &Algebra, iota: Elem, f: &Subset) -> Result<Twist> {
    let e = l.require_unit()?;
    l.require_invol()?;
    if let Some((x, y)) = l.n_pairs().find(|&(x, y)| l.mul(x, y) != l.mul(y, x)) {
        return Err(Error::pre("base is commutative", [x, y]));
    }
    if !varieties::is_lattice_filter(l, f) {
        return Err(Error::pre("F is a lattice filter", f.to_vec()));
    }
    let eo = l.oplus(e, iota)?;
    if !f.contains(eo) {
        return Err(Error::pre("F contains e⊕ι", [eo]));
    }
    let tw = twist(l, iota)?;
    sub_twist(&tw, |a, b| {
        l.leq(l.mul(a, b), iota) && f.contains(l.oplus(a, b).expect("involution checked above"))
    })
}

/// A twist-product over `(L, ι)`: a subalgebra of `Tw(L, ι)` containing the `τ_Tw` image.
pub fn is_twist_product(tw: &Twist, sub: &Subset) -> Result<bool> {
    if tw.algebra.restrict(sub).is_err() {
        return Ok(false);
    }
    let members: Vec<(Elem, Elem)> = sub.iter().map(|x| tw.pair(x)).collect();
    let iota = tw
        .iota
        .ok_or(Error::pre("twist has a designated ι", Vec::new()))?;
    let l = &tw.base;
    Ok(l.elements()
        .all(|a| members.contains(&(a, l.meet(l.rdiv(iota, a), l.ldiv(a, iota))))))
}

/// The members of `sub` as a subset of `tw`, matched by pair.
pub fn as_subset(tw: &Twist, sub: &Twist) -> Result<Subset> {
    let mut s = Subset::empty(tw.size());
    for &(a, b) in &sub.pairs {
        let i = tw
            .index_of(a, b)
            .ok_or_else(|| Error::pre("pairs lie in the ambient twist", [a, b]))?;
        s.insert(i);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn twist_of_two() {
        let two = fixtures::two();
        let t0 = twist(&two, 0).unwrap();
        assert_eq!(t0.pairs, vec![(0, 0), (0, 1), (1, 0)]);
        assert_eq!(t0.algebra.unit(), t0.index_of(1, 0));
        let t1 = twist(&two, 1).unwrap();
        assert_eq!(t1.size(), 4);
        assert_eq!(t1.algebra.unit(), t1.index_of(1, 1));
    }

    #[test]
    fn full_twist_sizes() {
        let two = fixtures::two();
        let f = full_twist(&two).unwrap();
        assert_eq!(f.size(), 4);
        assert_eq!(f.algebra.unit(), f.index_of(1, 1));
        let l3 = fixtures::lukasiewicz3();
        let f = full_twist(&l3).unwrap();
        assert_eq!(f.size(), 9);
        assert_eq!(f.algebra.unit(), f.index_of(2, 2));
    }

    #[test]
    fn maximal_set_of_lukasiewicz_twist() {
        let l3 = fixtures::lukasiewicz3();
        let tw = twist(&l3, 0).unwrap();
        let m: Vec<_> = maximal_set(&tw)
            .unwrap()
            .iter()
            .map(|x| tw.pair(x))
            .collect();
        assert_eq!(m, vec![(0, 2), (1, 1), (2, 0)]);
        assert!(check_downset(&tw).unwrap().holds);
    }

    #[test]
    fn tau_tw_on_lukasiewicz_twist() {
        let l3 = fixtures::lukasiewicz3();
        let tw = twist(&l3, 0).unwrap();
        let t = tau_tw(&tw).unwrap();
        let a0 = tw.index_of(1, 0).unwrap();
        assert_eq!(tw.pair(t.apply(a0)), (1, 1));
    }
}
