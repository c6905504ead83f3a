//! Interior-type unary maps: weak conuclei, conuclei and Nelson conuclei,
//! their images, the double-division conucleus and the term conuclei
//! `(x∧e)²` and `x∧e`.

use core::cell::Cell;

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem, Embedded, RawAlgebra, Table};
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::verdict::Verdict;

/// A unary map on the universe of some algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryMap {
    pub table: Vec<Elem>,
}

impl UnaryMap {
    pub fn new(table: Vec<Elem>) -> Self {
        UnaryMap { table }
    }

    pub fn identity(n: usize) -> Self {
        UnaryMap::new((0..n).collect())
    }

    pub fn from_fn(n: usize, f: impl FnMut(Elem) -> Elem) -> Self {
        UnaryMap::new((0..n).map(f).collect())
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x]
    }

    /// Fixed points, which for an idempotent map is its image.
    pub fn fixed_points(&self) -> Subset {
        Subset::from_members(
            self.table.len(),
            (0..self.table.len()).filter(|&x| self.table[x] == x),
        )
    }

    pub fn image(&self) -> Subset {
        Subset::from_members(self.table.len(), self.table.iter().copied())
    }

    fn check_fits(&self, a: &Algebra) -> Result<()> {
        if self.table.len() != a.size() || self.table.iter().any(|&y| y >= a.size()) {
            return Err(Error::Malformed(
                "unary map does not fit the algebra".into(),
            ));
        }
        Ok(())
    }
}

/// Checks C1–C4. When they hold, the derived identities
/// `δ(x∧y) = δ(δx∧δy)`, `δ(δx\y) = δ(δx\δy)` and `δ(y/δx) = δ(δy/δx)` are
/// verified as well; a failure there is an internal error.
pub fn is_weak_conucleus(a: &Algebra, d: &UnaryMap) -> Result<Verdict> {
    d.check_fits(a)?;
    let f = |x| d.apply(x);
    let mut v = Verdict::new("weak conucleus");
    for x in a.elements() {
        if !a.leq(f(x), x) {
            v.fail("C1 decreasing", &[x]);
        }
        if f(f(x)) != f(x) {
            v.fail("C2 idempotent", &[x]);
        }
    }
    for (x, y) in a.n_pairs() {
        if a.leq(x, y) && !a.leq(f(x), f(y)) {
            v.fail("C3 monotone", &[x, y]);
        }
        if !a.leq(a.mul(f(x), f(y)), f(a.mul(x, y))) {
            v.fail("C4 submultiplicative", &[x, y]);
        }
    }
    if v.holds {
        for (x, y) in a.n_pairs() {
            if f(a.meet(x, y)) != f(a.meet(f(x), f(y))) {
                return Err(Error::internal(
                    "weak conucleus preserves meets up to δ",
                    [x, y],
                ));
            }
            if f(a.ldiv(f(x), y)) != f(a.ldiv(f(x), f(y))) {
                return Err(Error::internal(
                    "weak conucleus absorbs δ under left division",
                    [x, y],
                ));
            }
            if f(a.rdiv(y, f(x))) != f(a.rdiv(f(y), f(x))) {
                return Err(Error::internal(
                    "weak conucleus absorbs δ under right division",
                    [x, y],
                ));
            }
        }
    }
    Ok(v)
}

/// C1–C5.
pub fn is_conucleus(a: &Algebra, d: &UnaryMap) -> Result<Verdict> {
    let e = a.require_unit()?;
    let mut v = is_weak_conucleus(a, d)?;
    v.name = "conucleus".into();
    let de = d.apply(e);
    for x in a.elements() {
        let dx = d.apply(x);
        if a.mul(de, dx) != dx || a.mul(dx, de) != dx {
            v.fail("C5 unit on image", &[x]);
        }
    }
    Ok(v)
}

/// Conucleus plus T1–T3.
///
/// Self-checks on the way: given a conucleus with T1 and T2, T3 must agree
/// pointwise with its equational form `xy = τ(x)y ∨ xτ(y)`; a Nelson
/// conucleus fixes `e`; and on involutive algebras the four division
/// identities hold exactly when T3 does, and `τ(∼e)` is cyclic in the image.
pub fn is_nelson_conucleus(a: &Algebra, t: &UnaryMap) -> Result<Verdict> {
    let e = a.require_unit()?;
    let mut v = is_conucleus(a, t)?;
    v.name = "Nelson conucleus".into();
    let f = |x| t.apply(x);
    let mut t3_holds = true;
    let mut t4_holds = true;
    let mut t12_holds = true;
    for (x, y) in a.n_pairs() {
        if f(a.join(x, y)) != a.join(f(x), f(y)) {
            v.fail("T1 join preserving", &[x, y]);
            t12_holds = false;
        }
        if f(a.mul(x, y)) != a.mul(f(x), f(y)) {
            v.fail("T2 multiplicative", &[x, y]);
            t12_holds = false;
        }
        let xy = a.mul(x, y);
        let rhs = a.join(a.mul(f(x), y), a.mul(x, f(y)));
        if !a.leq(xy, rhs) {
            v.fail("T3 product covered", &[x, y]);
            t3_holds = false;
        }
        if xy != rhs {
            t4_holds = false;
        }
    }
    let base_ok = !v.witnesses.iter().any(|w| w.axiom.starts_with('C'));
    if base_ok && t12_holds && t3_holds != t4_holds {
        return Err(Error::internal(
            "T3 agrees with its equational form",
            Vec::new(),
        ));
    }
    if !v.holds {
        if base_ok && t12_holds {
            if let Some(inv) = a.involution() {
                if division_identities(a, inv, t) {
                    return Err(Error::internal("division identities imply T3", Vec::new()));
                }
            }
        }
        return Ok(v);
    }
    if f(e) != e {
        return Err(Error::internal("Nelson conucleus fixes the unit", [e]));
    }
    if let Some(inv) = a.involution() {
        if !division_identities(a, inv, t) {
            return Err(Error::internal(
                "Nelson conucleus satisfies the division identities",
                Vec::new(),
            ));
        }
        let iota = f(inv[e]);
        for x in a.elements() {
            let tx = f(x);
            if f(a.ldiv(tx, iota)) != f(a.rdiv(iota, tx)) {
                return Err(Error::internal("τ(∼e) is cyclic in the image", [x]));
            }
        }
    }
    Ok(v)
}

/// The four identities expressing each division through `τ` and `∼`.
fn division_identities(a: &Algebra, inv: &[Elem], t: &UnaryMap) -> bool {
    let f = |x| t.apply(x);
    a.n_pairs().all(|(x, y)| {
        let l = a.ldiv(x, y);
        let r = a.rdiv(y, x);
        l == a.meet(a.ldiv(f(x), y), a.rdiv(inv[x], f(inv[y])))
            && l == a.meet(a.ldiv(f(x), y), a.ldiv(x, inv[f(inv[y])]))
            && r == a.meet(a.rdiv(y, f(x)), a.ldiv(f(inv[y]), inv[x]))
            && r == a.meet(a.rdiv(y, f(x)), a.rdiv(inv[f(inv[y])], x))
    })
}

/// Builds the image algebra `δ[A]` with `∨, ·` inherited and
/// `∧, \, /` followed by `δ`. The unit is `δ(e)` and the bottom `δ(⊥)` when present.
pub fn conucleus_image(a: &Algebra, d: &UnaryMap) -> Result<Embedded> {
    let v = is_weak_conucleus(a, d)?;
    if !v.holds {
        let w = v.witnesses[0].tuple.clone();
        return Err(Error::pre("map is a weak conucleus", w));
    }
    if a.unit().is_some() {
        let c = is_conucleus(a, d)?;
        if !c.holds {
            return Err(Error::pre(
                "map is a conucleus",
                c.witnesses[0].tuple.clone(),
            ));
        }
    }
    image_algebra(a, d, a.unit().map(|e| d.apply(e)), false)
}

fn image_algebra(
    a: &Algebra,
    d: &UnaryMap,
    unit: Option<Elem>,
    keep_invol: bool,
) -> Result<Embedded> {
    let members: Vec<Elem> = d.fixed_points().iter().collect();
    let m = members.len();
    let mut index = vec![usize::MAX; a.size()];
    for (i, &x) in members.iter().enumerate() {
        index[x] = i;
    }
    let escaped: Cell<Option<[Elem; 2]>> = Cell::new(None);
    let table = |op: &dyn Fn(Elem, Elem) -> Elem| {
        Table::from_fn(m, |i, j| {
            let (x, y) = (members[i], members[j]);
            let z = index[op(x, y)];
            if z == usize::MAX {
                if escaped.get().is_none() {
                    escaped.set(Some([x, y]));
                }
                0
            } else {
                z
            }
        })
        .rows()
    };
    let f = |x| d.apply(x);
    let join = table(&|x, y| a.join(x, y));
    let prod = table(&|x, y| a.mul(x, y));
    if let Some(w) = escaped.get() {
        return Err(Error::internal(
            "conucleus image closed under join and product",
            w,
        ));
    }
    let meet = table(&|x, y| f(a.meet(x, y)));
    let ldiv = table(&|x, y| f(a.ldiv(x, y)));
    let rdiv = table(&|x, y| f(a.rdiv(x, y)));
    let invol = if keep_invol {
        match a.involution() {
            Some(inv) => {
                let mut out = Vec::with_capacity(m);
                for &x in &members {
                    if index[inv[x]] == usize::MAX {
                        return Err(Error::internal("image closed under the involution", [x]));
                    }
                    out.push(index[inv[x]]);
                }
                Some(out)
            }
            None => None,
        }
    } else {
        None
    };
    let raw = RawAlgebra {
        size: m,
        join,
        meet,
        prod,
        ldiv: Some(ldiv),
        rdiv: Some(rdiv),
        unit: unit.map(|u| index[u]),
        invol,
        bottom: a.bottom().map(|b| index[f(b)]),
        names: Some(members.iter().map(|&x| a.name(x).into()).collect()),
    };
    let algebra = Algebra::new(raw).map_err(|err| match err {
        Error::Invalid(_) => Error::internal("conucleus image is residuated", Vec::new()),
        other => other,
    })?;
    Ok(Embedded {
        algebra,
        embedding: members,
    })
}

/// True when `p = p²` and `p\x, x/p <= x <= px, xp` for every `x`.
pub fn is_positive_idempotent(a: &Algebra, p: Elem) -> bool {
    a.mul(p, p) == p
        && a.elements().all(|x| {
            a.leq(a.ldiv(p, x), x)
                && a.leq(a.rdiv(x, p), x)
                && a.leq(x, a.mul(p, x))
                && a.leq(x, a.mul(x, p))
        })
}

/// `x ↦ p\x/p` for a positive idempotent `p`.
///
/// Verifies that the image is `{a : ap = a = pa}` and that `p` acts as a unit on it.
pub fn double_division_map(a: &Algebra, p: Elem) -> Result<UnaryMap> {
    if p >= a.size() || !is_positive_idempotent(a, p) {
        return Err(Error::pre("p is a positive idempotent", [p]));
    }
    let d = UnaryMap::from_fn(a.size(), |x| a.ldiv(p, a.rdiv(x, p)));
    let image = d.image();
    for x in a.elements() {
        let fixed = a.mul(x, p) == x && a.mul(p, x) == x;
        if fixed != image.contains(x) {
            return Err(Error::internal(
                "double-division image is {a : ap = a = pa}",
                [x],
            ));
        }
    }
    if !image.contains(p) {
        return Err(Error::internal("p lies in its double-division image", [p]));
    }
    if !is_weak_conucleus(a, &d)?.holds {
        return Err(Error::internal(
            "double-division map is a weak conucleus",
            [p],
        ));
    }
    Ok(d)
}

/// The residuated lattice `p\A/p` with unit `p`, carrying the involution when `A` has one.
pub fn double_division_image(a: &Algebra, p: Elem) -> Result<Embedded> {
    let d = double_division_map(a, p)?;
    image_algebra(a, &d, Some(p), true)
}

/// `x ↦ (x∧e)²`.
pub fn nelson_term_tau(a: &Algebra) -> Result<UnaryMap> {
    let e = a.require_unit()?;
    Ok(UnaryMap::from_fn(a.size(), |x| {
        let m = a.meet(x, e);
        a.mul(m, m)
    }))
}

/// `x ↦ x∧e`.
pub fn kalman_term_tau(a: &Algebra) -> Result<UnaryMap> {
    let e = a.require_unit()?;
    Ok(UnaryMap::from_fn(a.size(), |x| a.meet(x, e)))
}

/// Default size guard for [`enumerate_nelson_conuclei`].
pub const NELSON_SEARCH_BOUND: usize = 12;

/// All Nelson conuclei on `a`, sorted by table.
///
/// Backtracks over decreasing idempotent assignments in a linear extension
/// of the order, with `τ(e) = e` fixed up front and T1/T2 propagated after
/// every choice. Each survivor is certified by [`is_nelson_conucleus`].
pub fn enumerate_nelson_conuclei(a: &Algebra, bound: usize) -> Result<Vec<UnaryMap>> {
    let e = a.require_unit()?;
    let n = a.size();
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let mut order: Vec<Elem> = a.elements().collect();
    order.sort_by_key(|&x| (a.elements().filter(|&y| a.leq(y, x)).count(), x));
    let mut tau = vec![None; n];
    let mut out = Vec::new();
    if assign(a, &mut tau, e, e) {
        search(a, &order, &mut tau, &mut out)?;
    }
    out.sort();
    Ok(out)
}

fn search(
    a: &Algebra,
    order: &[Elem],
    tau: &mut Vec<Option<Elem>>,
    out: &mut Vec<UnaryMap>,
) -> Result<()> {
    let Some(&x) = order.iter().find(|&&x| tau[x].is_none()) else {
        let map = UnaryMap::new(tau.iter().map(|v| v.unwrap()).collect());
        if is_nelson_conucleus(a, &map)?.holds {
            out.push(map);
        }
        return Ok(());
    };
    for y in a.elements() {
        if !a.leq(y, x) {
            continue;
        }
        if y != x && tau[y].is_some_and(|ty| ty != y) {
            continue;
        }
        let saved = tau.clone();
        if assign(a, tau, x, y) && (y == x || assign(a, tau, y, y)) {
            search(a, order, tau, out)?;
        }
        *tau = saved;
    }
    Ok(())
}

/// Sets `τ(x) = y` and propagates the forced consequences; false on conflict.
fn assign(a: &Algebra, tau: &mut [Option<Elem>], x: Elem, y: Elem) -> bool {
    let mut queue = vec![(x, y)];
    while let Some((x, y)) = queue.pop() {
        match tau[x] {
            Some(v) if v == y => continue,
            Some(_) => return false,
            None => {}
        }
        if !a.leq(y, x) {
            return false;
        }
        tau[x] = Some(y);
        if let Some(ty) = tau[y] {
            if ty != y {
                return false;
            }
        } else {
            queue.push((y, y));
        }
        for z in a.elements() {
            let Some(tz) = tau[z] else { continue };
            if a.leq(x, z) && !a.leq(y, tz) || a.leq(z, x) && !a.leq(tz, y) {
                return false;
            }
            queue.push((a.join(x, z), a.join(y, tz)));
            queue.push((a.mul(x, z), a.mul(y, tz)));
            queue.push((a.mul(z, x), a.mul(tz, y)));
        }
    }
    true
}

/// A Nelson conucleus algebra: an involutive residuated lattice with a
/// verified Nelson conucleus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcaPair {
    algebra: Algebra,
    tau: UnaryMap,
}

impl NcaPair {
    /// Verifies the pair, including that `τ(x) = τ(y)` and `τ(∼x) = τ(∼y)` force `x = y`.
    pub fn new(algebra: Algebra, tau: UnaryMap) -> Result<Self> {
        let inv = algebra.require_invol()?.to_vec();
        let v = is_nelson_conucleus(&algebra, &tau)?;
        if !v.holds {
            return Err(Error::pre(
                "τ is a Nelson conucleus",
                v.witnesses[0].tuple.clone(),
            ));
        }
        for (x, y) in algebra.n_pairs() {
            if x != y && tau.apply(x) == tau.apply(y) && tau.apply(inv[x]) == tau.apply(inv[y]) {
                return Err(Error::internal("τ and τ∼ jointly separate points", [x, y]));
            }
        }
        Ok(NcaPair { algebra, tau })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn tau(&self) -> &UnaryMap {
        &self.tau
    }

    #[inline]
    pub fn t(&self, x: Elem) -> Elem {
        self.tau.apply(x)
    }

    /// `x ⊃ y = τ(x)\y`.
    pub fn supset(&self, x: Elem, y: Elem) -> Elem {
        self.algebra.ldiv(self.t(x), y)
    }

    /// `y ⊂ x = y/τ(x)`.
    pub fn subset(&self, y: Elem, x: Elem) -> Elem {
        self.algebra.rdiv(y, self.t(x))
    }

    /// `τ(∼e)`, the cyclic element of the image.
    pub fn iota(&self) -> Elem {
        let e = self.algebra.unit().expect("verified pairs have a unit");
        self.t(self.algebra.neg(e))
    }

    pub fn image(&self) -> Result<Embedded> {
        conucleus_image(&self.algebra, &self.tau)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_is_nelson() {
        for (_, a) in fixtures::bases() {
            let id = UnaryMap::identity(a.size());
            assert!(is_nelson_conucleus(&a, &id).unwrap().holds);
        }
    }

    #[test]
    fn constant_bottom_is_weak_conucleus() {
        let l3 = fixtures::lukasiewicz3();
        let d = UnaryMap::new(vec![0, 0, 0]);
        assert!(is_weak_conucleus(&l3, &d).unwrap().holds);
        assert!(is_conucleus(&l3, &d).unwrap().holds);
    }

    #[test]
    fn middle_of_lukasiewicz_chain_is_no_unit_on_its_image() {
        let l3 = fixtures::lukasiewicz3();
        let d = UnaryMap::new(vec![0, 1, 1]);
        assert!(is_weak_conucleus(&l3, &d).unwrap().holds);
        assert_eq!(
            is_conucleus(&l3, &d)
                .unwrap()
                .first_witness("C5 unit on image"),
            Some(&[1][..])
        );
    }

    #[test]
    fn two_has_only_the_identity() {
        let two = fixtures::two();
        let all = enumerate_nelson_conuclei(&two, NELSON_SEARCH_BOUND).unwrap();
        assert_eq!(all, vec![UnaryMap::identity(2)]);
    }

    #[test]
    fn unit_is_trivial_double_division() {
        let l3 = fixtures::lukasiewicz3();
        let d = double_division_map(&l3, 2).unwrap();
        assert_eq!(d, UnaryMap::identity(3));
    }

    #[test]
    fn middle_of_goedel_chain_is_not_positive() {
        let g3 = fixtures::goedel3();
        assert!(double_division_map(&g3, 1).is_err());
    }

    #[test]
    fn image_of_identity_is_the_algebra() {
        let g3 = fixtures::goedel3();
        let img = conucleus_image(&g3, &UnaryMap::identity(3)).unwrap();
        assert_eq!(img.algebra.to_raw().prod, g3.to_raw().prod);
        assert_eq!(img.embedding, vec![0, 1, 2]);
    }
}
