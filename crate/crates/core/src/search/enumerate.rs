use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::canonical::{canonical_key, Structure};
use super::{Constraints, SearchSpec};
use crate::algebra::{Algebra, Elem, RawAlgebra, Table};
use crate::error::{Error, Result};

/// A lattice on `0..n` with `0` the bottom, `n-1` the top and `x <= y`
/// implying `x <= y` as integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub join: Table,
    pub meet: Table,
}

impl Lattice {
    pub fn size(&self) -> usize {
        self.join.size()
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.meet.get(x, y) == x
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.meet.get(x, self.join.get(y, z))
                        == self.join.get(self.meet.get(x, y), self.meet.get(x, z))
                })
            })
        })
    }
}

fn lattice_from_order(n: usize, below: &[Vec<bool>]) -> Option<Lattice> {
    let bound = |x: Elem, y: Elem, upper: bool| -> Option<Elem> {
        let cands: Vec<Elem> = (0..n)
            .filter(|&z| {
                if upper {
                    below[x][z] && below[y][z]
                } else {
                    below[z][x] && below[z][y]
                }
            })
            .collect();
        cands.iter().copied().find(|&z| {
            cands
                .iter()
                .all(|&w| if upper { below[z][w] } else { below[w][z] })
        })
    };
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            join[x * n + y] = bound(x, y, true)?;
            meet[x * n + y] = bound(x, y, false)?;
        }
    }
    Some(Lattice {
        join: Table::from_fn(n, |x, y| join[x * n + y]),
        meet: Table::from_fn(n, |x, y| meet[x * n + y]),
    })
}

/// One naturally labeled representative of every lattice on `n` elements.
///
/// Built one element at a time: every prefix `0..=k` of a natural labeling
/// is a down-set, hence a meet-semilattice with `0`, and isomorphic prefixes
/// extend to the same lattices, so each level keeps one prefix per class.
pub fn enumerate_lattices(n: usize) -> Vec<Lattice> {
    if n == 0 {
        return Vec::new();
    }
    // below[x][y]: x <= y.
    let mut level: Vec<Vec<Vec<bool>>> = vec![vec![vec![true]]];
    for k in 1..n {
        let top = k == n - 1;
        let mut next = Vec::new();
        let mut seen = BTreeSet::new();
        for below in &level {
            for mask in 0u32..(1 << k) {
                // The strict downset of k: contains 0, is down-closed, and is everything for the top.
                if mask & 1 == 0 || top && mask != (1 << k) - 1 {
                    continue;
                }
                let down_closed = (0..k)
                    .filter(|&y| mask >> y & 1 == 1)
                    .all(|y| (0..k).all(|z| !below[z][y] || mask >> z & 1 == 1));
                if !down_closed {
                    continue;
                }
                let mut grown: Vec<Vec<bool>> = below
                    .iter()
                    .map(|row| {
                        let mut r = row.clone();
                        r.push(false);
                        r
                    })
                    .collect();
                grown.push(vec![false; k + 1]);
                for (y, row) in grown.iter_mut().enumerate() {
                    row[k] = y == k || mask >> y & 1 == 1;
                }
                let Some(meet) = meets(k + 1, &grown) else {
                    continue;
                };
                let key = Structure {
                    n: k + 1,
                    binary: vec![&meet],
                    unary: Vec::new(),
                    constants: Vec::new(),
                }
                .canonical()
                .1;
                if seen.insert(key) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .iter()
        .map(|below| {
            lattice_from_order(n, below).expect("a meet-semilattice with a top is a lattice")
        })
        .collect()
}

/// The meet table of the order, if every pair has a greatest lower bound.
fn meets(n: usize, below: &[Vec<bool>]) -> Option<Table> {
    let mut meet = vec![0; n * n];
    for x in 0..n {
        for y in x..n {
            let lower: Vec<Elem> = (0..n).filter(|&z| below[z][x] && below[z][y]).collect();
            let m = lower
                .iter()
                .copied()
                .find(|&z| lower.iter().all(|&w| below[w][z]))?;
            meet[x * n + y] = m;
            meet[y * n + x] = m;
        }
    }
    Some(Table::from_fn(n, |x, y| meet[x * n + y]))
}

const UNSET: Elem = usize::MAX;

struct Completion<'a> {
    lat: &'a Lattice,
    n: usize,
    e: Elem,
    commutative: bool,
    integral: bool,
    idempotent: bool,
    /// The intended involution; `xy <= ∼e` must then agree with `y <= ∼x`.
    neg: Option<&'a [Elem]>,
    /// Pairs `(a, b)`, both strictly below `x`, with `a ∨ b = x`.
    splits: Vec<Vec<(Elem, Elem)>>,
    covers: Vec<Vec<Elem>>,
    prod: Vec<Elem>,
    results: Vec<Vec<Elem>>,
}

impl Completion<'_> {
    fn get(&self, x: Elem, y: Elem) -> Elem {
        self.prod[x * self.n + y]
    }

    /// Values the cell is forced to by absorption, the unit, symmetry,
    /// idempotence or join preservation; `Err` on disagreement.
    fn forced(&self, x: Elem, y: Elem) -> core::result::Result<Option<Elem>, ()> {
        let mut v: Option<Elem> = None;
        let mut force = |w: Elem| -> core::result::Result<(), ()> {
            match v {
                Some(u) if u != w => Err(()),
                _ => {
                    v = Some(w);
                    Ok(())
                }
            }
        };
        if x == 0 || y == 0 {
            force(0)?;
        }
        if x == self.e {
            force(y)?;
        }
        if y == self.e {
            force(x)?;
        }
        if self.commutative && y < x {
            force(self.get(y, x))?;
        }
        if self.idempotent && x == y {
            force(x)?;
        }
        for &(a, b) in &self.splits[x] {
            force(self.lat.join.get(self.get(a, y), self.get(b, y)))?;
        }
        for &(a, b) in &self.splits[y] {
            force(self.lat.join.get(self.get(x, a), self.get(x, b)))?;
        }
        Ok(v)
    }

    fn admissible(&self, x: Elem, y: Elem, v: Elem) -> bool {
        let lat = self.lat;
        if self.integral && !lat.leq(v, lat.meet.get(x, y)) {
            return false;
        }
        if let Some(neg) = self.neg {
            let below_f = lat.leq(v, neg[self.e]);
            if below_f != lat.leq(y, neg[x]) || below_f != lat.leq(x, neg[y]) {
                return false;
            }
        }
        self.covers[x].iter().all(|&c| lat.leq(self.get(c, y), v))
            && self.covers[y].iter().all(|&c| lat.leq(self.get(x, c), v))
    }

    fn assoc(&self, a: Elem, b: Elem, c: Elem) -> bool {
        let (ab, bc) = (self.get(a, b), self.get(b, c));
        if ab == UNSET || bc == UNSET {
            return true;
        }
        let (l, r) = (self.get(ab, c), self.get(a, bc));
        l == UNSET || r == UNSET || l == r
    }

    /// Associativity on every known triple that uses the cell `(x, y)`.
    fn associative_at(&self, x: Elem, y: Elem) -> bool {
        let n = self.n;
        for z in 0..n {
            if !self.assoc(x, y, z) || !self.assoc(z, x, y) {
                return false;
            }
            for w in 0..n {
                if self.get(z, w) == x && !self.assoc(z, w, y)
                    || self.get(z, w) == y && !self.assoc(x, z, w)
                {
                    return false;
                }
            }
        }
        true
    }

    /// `w(xy) <= ∼e` iff `(wx)y <= ∼e`, read off as `xy <= ∼w` iff `wx <= ∼y`.
    fn rotation_at(&self, x: Elem, y: Elem) -> bool {
        let Some(neg) = self.neg else {
            return true;
        };
        let (lat, v) = (self.lat, self.get(x, y));
        (0..self.n).all(|w| {
            let (u, t) = (self.get(w, x), self.get(y, w));
            (u == UNSET || lat.leq(v, neg[w]) == lat.leq(u, neg[y]))
                && (t == UNSET || lat.leq(t, neg[x]) == lat.leq(v, neg[w]))
        })
    }

    fn fill(&mut self, cell: usize) {
        let n = self.n;
        if cell == n * n {
            self.results.push(self.prod.clone());
            return;
        }
        let (x, y) = (cell / n, cell % n);
        let candidates: Vec<Elem> = match self.forced(x, y) {
            Err(()) => return,
            Ok(Some(v)) => vec![v],
            Ok(None) => (0..n).collect(),
        };
        for v in candidates {
            if !self.admissible(x, y, v) {
                continue;
            }
            self.prod[cell] = v;
            if self.associative_at(x, y) && self.rotation_at(x, y) {
                self.fill(cell + 1);
            }
        }
        self.prod[cell] = UNSET;
    }
}

/// Every associative, join-preserving product with unit `e` on the lattice
/// (with `⊥` absorbing), as flat row-major tables.
fn complete_products(
    lat: &Lattice,
    e: Elem,
    c: Constraints,
    neg: Option<&[Elem]>,
) -> Vec<Vec<Elem>> {
    let n = lat.size();
    let splits = (0..n)
        .map(|x| {
            let mut v = Vec::new();
            for a in 0..x {
                for b in a..x {
                    if lat.join.get(a, b) == x {
                        v.push((a, b));
                    }
                }
            }
            v
        })
        .collect();
    let covers = (0..n)
        .map(|x| {
            (0..x)
                .filter(|&y| lat.leq(y, x) && !(y + 1..x).any(|z| lat.leq(y, z) && lat.leq(z, x)))
                .collect()
        })
        .collect();
    let mut comp = Completion {
        lat,
        n,
        e,
        commutative: c.contains(Constraints::COMMUTATIVE),
        integral: c.contains(Constraints::INTEGRAL),
        idempotent: c.contains(Constraints::IDEMPOTENT),
        neg,
        splits,
        covers,
        prod: vec![UNSET; n * n],
        results: Vec::new(),
    };
    comp.fill(0);
    comp.results
}

/// The certified algebra on one product table, with `neg` as involution when
/// it is `x ↦ x\∼e = ∼e/x`.
fn decorate(
    lat: &Lattice,
    e: Elem,
    prod: &[Elem],
    c: Constraints,
    neg: Option<&[Elem]>,
) -> Option<Algebra> {
    let n = lat.size();
    let raw = RawAlgebra {
        size: n,
        join: lat.join.rows(),
        meet: lat.meet.rows(),
        prod: Table::from_fn(n, |x, y| prod[x * n + y]).rows(),
        unit: Some(e),
        ..RawAlgebra::default()
    };
    let mut base = Algebra::new(raw).ok()?;
    if c.contains(Constraints::BOUNDED) {
        base = base.with_bottom(0).expect("0 is the least element");
    }
    let Some(neg) = neg else {
        return Some(base);
    };
    let f = neg[e];
    if (0..n).any(|x| base.ldiv(x, f) != neg[x] || base.rdiv(f, x) != neg[x]) {
        return None;
    }
    base.with_involution(neg.to_vec()).ok()
}

/// Order-reversing involutions of the lattice.
fn dual_involutions(lat: &Lattice) -> Vec<Vec<Elem>> {
    fn step(lat: &Lattice, x: Elem, sigma: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        let n = lat.size();
        if x == n {
            out.push(sigma.clone());
            return;
        }
        if sigma[x] != UNSET {
            return step(lat, x + 1, sigma, out);
        }
        for y in x..n {
            if sigma[y] != UNSET {
                continue;
            }
            sigma[x] = y;
            sigma[y] = x;
            let ok = [x, y].iter().all(|&w| {
                (0..n)
                    .filter(|&z| sigma[z] != UNSET)
                    .all(|z| lat.leq(w, z) == lat.leq(sigma[z], sigma[w]))
            });
            if ok {
                step(lat, x + 1, sigma, out);
            }
            sigma[x] = UNSET;
            sigma[y] = UNSET;
        }
    }
    let mut out = Vec::new();
    step(lat, 0, &mut vec![UNSET; lat.size()], &mut out);
    out
}

/// All algebras on one lattice, one per isomorphism class when `canonical_only`.
fn algebras_on(lat: &Lattice, spec: &SearchSpec) -> Vec<Algebra> {
    let n = lat.size();
    let c = spec.constraints;
    let units: Vec<Elem> = if c.contains(Constraints::INTEGRAL) {
        vec![n - 1]
    } else {
        (0..n).collect()
    };
    let negs: Vec<Option<Vec<Elem>>> = if c.intersects(Constraints::INVOLUTIVE | Constraints::ODD) {
        dual_involutions(lat).into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    // Lattice automorphisms carry (e, ∼) to isomorphic algebras, so one
    // representative per orbit suffices.
    let autos = if spec.canonical_only {
        automorphisms(lat)
    } else {
        Vec::new()
    };
    let least_in_orbit = |e: Elem, neg: Option<&[Elem]>| {
        autos.iter().all(|g| {
            let mut inv = vec![0; n];
            for x in 0..n {
                inv[g[x]] = x;
            }
            let conj = neg.map(|s| (0..n).map(|x| g[s[inv[x]]]).collect::<Vec<_>>());
            (e, neg.map(<[Elem]>::to_vec)) <= (g[e], conj)
        })
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in units {
        for neg in &negs {
            let neg = neg.as_deref();
            if c.contains(Constraints::ODD) && neg.is_some_and(|s| s[e] != e)
                || !least_in_orbit(e, neg)
            {
                continue;
            }
            for prod in complete_products(lat, e, c, neg) {
                if let Some(a) = decorate(lat, e, &prod, c, neg) {
                    if !spec.canonical_only || seen.insert(canonical_key(&a)) {
                        out.push(a);
                    }
                }
            }
        }
    }
    out
}

/// Order-preserving permutations of the lattice.
fn automorphisms(lat: &Lattice) -> Vec<Vec<Elem>> {
    fn step(
        lat: &Lattice,
        x: Elem,
        g: &mut Vec<Elem>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        let n = lat.size();
        if x == n {
            out.push(g.clone());
            return;
        }
        for y in 0..n {
            if used[y]
                || (0..x)
                    .any(|z| lat.leq(z, x) != lat.leq(g[z], y) || lat.leq(x, z) != lat.leq(y, g[z]))
            {
                continue;
            }
            g[x] = y;
            used[y] = true;
            step(lat, x + 1, g, used, out);
            used[y] = false;
        }
    }
    let mut out = Vec::new();
    let n = lat.size();
    step(lat, 0, &mut vec![0; n], &mut vec![false; n], &mut out);
    out
}

/// Lazily produced algebras, lattice by lattice.
pub struct Enumeration {
    spec: SearchSpec,
    lattices: alloc::vec::IntoIter<Lattice>,
    pending: alloc::vec::IntoIter<Algebra>,
    emitted: usize,
}

impl Iterator for Enumeration {
    type Item = Algebra;

    fn next(&mut self) -> Option<Algebra> {
        if self.spec.limit.is_some_and(|l| self.emitted >= l) {
            return None;
        }
        loop {
            if let Some(a) = self.pending.next() {
                self.emitted += 1;
                return Some(a);
            }
            let lat = self.lattices.next()?;
            self.pending = algebras_on(&lat, &self.spec).into_iter();
        }
    }
}

/// Residuated lattices of size `spec.size` meeting the constraints. Lattices
/// come first; products are completed cell by cell over each, pruning by
/// monotonicity, join preservation and associativity; every emitted algebra
/// is certified.
pub fn enumerate_residuated_lattices(spec: &SearchSpec) -> Result<Enumeration> {
    if spec.size == 0 {
        return Err(Error::Malformed(
            "algebras have at least one element".into(),
        ));
    }
    if spec.size > spec.bound {
        return Err(Error::BoundExceeded {
            size: spec.size,
            bound: spec.bound,
        });
    }
    let mut lattices = enumerate_lattices(spec.size);
    if spec.constraints.contains(Constraints::DISTRIBUTIVE) {
        lattices.retain(Lattice::is_distributive);
    }
    Ok(Enumeration {
        spec: spec.clone(),
        lattices: lattices.into_iter(),
        pending: Vec::new().into_iter(),
        emitted: 0,
    })
}
