//! The representation maps for Nelson conucleus algebras, run as checked
//! constructions on finite algebras.
//!
//! * `ψ(a) = (a, a\ι)` identifies `(L, ι)` with the `τ_Tw` image of `Tw(L, ι)`.
//! * `φ(x) = (τx, τ∼x)` embeds `(A, τ)` into `Tw(A_τ, τ(∼e))`.
//! * The Rasiowa presentation with `x ⊃ y = τ(x)\y`, `y ⊂ x = y/τ(x)` and its inverse.
//! * Filtered twists for Nelson-type algebras and for algebras whose image is involutive.
//!
//! Every construction verifies its result. A failed verification on inputs
//! meeting the preconditions is an [`Error::Internal`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem, Embedded, RawAlgebra, Table};
use crate::conuclei::{self, NcaPair, UnaryMap};
use crate::error::{Error, Result};
use crate::morphism::{preserves, Morphism, Signature};
use crate::subset::Subset;
use crate::twist::{self, Twist};
use crate::varieties;
use crate::verdict::Verdict;

fn parent_to_image(image: &Embedded, n: usize) -> Vec<Option<Elem>> {
    let mut index = vec![None; n];
    for (i, &x) in image.embedding.iter().enumerate() {
        index[x] = Some(i);
    }
    index
}

fn internal_unless(v: &Verdict, check: &'static str) -> Result<()> {
    match v.witnesses.first() {
        Some(w) => Err(Error::internal(check, w.tuple.clone())),
        None => Ok(()),
    }
}

fn shared_bottom(a: &Algebra, b: &Algebra) -> Signature {
    if a.bottom().is_some() && b.bottom().is_some() {
        Signature::BOTTOM
    } else {
        Signature::empty()
    }
}

/// `ψ` for one `(L, ι)`.
#[derive(Clone, Debug)]
pub struct Psi {
    pub twist: Twist,
    pub tau: UnaryMap,
    /// The `τ_Tw` image of the twist, embedded by twist index.
    pub image: Embedded,
    /// `L → image.algebra`.
    pub morphism: Morphism,
}

impl Psi {
    /// `ψ⁻¹` as a map on image indices.
    pub fn inverse(&self) -> Morphism {
        self.morphism.inverse().expect("ψ is verified bijective")
    }
}

/// `a ↦ (a, a\ι)` onto the `τ_Tw` image of `Tw(L, ι)`, verified to be a
/// bijective homomorphism sending `ι` to `τ_Tw(∼(e, ι)) = (ι, ι\ι)`.
pub fn psi(l: &Algebra, iota: Elem) -> Result<Psi> {
    let tw = twist::twist(l, iota)?;
    let tau = twist::tau_tw(&tw)?;
    let image = conuclei::conucleus_image(&tw.algebra, &tau)?;
    let index = parent_to_image(&image, tw.size());
    let mut table = Vec::with_capacity(l.size());
    for a in l.elements() {
        let b = l.ldiv(a, iota);
        let t = tw
            .index_of(a, b)
            .ok_or_else(|| Error::internal("(a, a\\ι) lies in the twist", [a, b]))?;
        table.push(index[t].ok_or_else(|| Error::internal("(a, a\\ι) is τ_Tw-fixed", [a, b]))?);
    }
    let sig = Signature::RESIDUATED | shared_bottom(l, &image.algebra);
    let morphism = Morphism::new(table, sig);
    internal_unless(&morphism.verify(l, &image.algebra)?, "ψ is a homomorphism")?;
    if !morphism.is_injective() || !morphism.is_surjective_onto(image.algebra.size()) {
        return Err(Error::internal("ψ is bijective", morphism.table.clone()));
    }
    let e = l.require_unit()?;
    let cyc = tau.apply(
        tw.algebra
            .neg(tw.index_of(e, iota).expect("unit pair is present")),
    );
    if index[cyc] != Some(morphism.apply(iota)) || tw.pair(cyc) != (iota, l.ldiv(iota, iota)) {
        return Err(Error::internal("ψ(ι) = τ_Tw(∼(e, ι))", [iota]));
    }
    Ok(Psi {
        twist: tw,
        tau,
        image,
        morphism,
    })
}

/// `φ` for one Nelson conucleus algebra.
#[derive(Clone, Debug)]
pub struct Phi {
    /// `A_τ` with its embedding into `A`.
    pub image: Embedded,
    /// `τ(∼e)` as an index of `image.algebra`.
    pub iota: Elem,
    pub twist: Twist,
    /// `A → twist.algebra`.
    pub morphism: Morphism,
    pub surjective: bool,
}

fn phi_table(p: &NcaPair, image: &Embedded, target: &Twist) -> Result<Vec<Elem>> {
    let a = p.algebra();
    let index = parent_to_image(image, a.size());
    let mut table = Vec::with_capacity(a.size());
    for x in a.elements() {
        let (u, v) = (p.t(x), p.t(a.neg(x)));
        let (Some(iu), Some(iv)) = (index[u], index[v]) else {
            return Err(Error::internal("τ values lie in the image", [x]));
        };
        table.push(
            target
                .index_of(iu, iv)
                .ok_or_else(|| Error::internal("φ(x) lies in the twist", [x]))?,
        );
    }
    Ok(table)
}

/// `x ↦ (τx, τ∼x)` into `Tw(A_τ, τ(∼e))`, verified injective, a homomorphism
/// and intertwining `τ` with `τ_Tw`.
pub fn phi(p: &NcaPair) -> Result<Phi> {
    let a = p.algebra();
    let image = p.image()?;
    let index = parent_to_image(&image, a.size());
    let iota =
        index[p.iota()].ok_or_else(|| Error::internal("τ(∼e) lies in the image", [p.iota()]))?;
    let tw = twist::twist(&image.algebra, iota)?;
    let table = phi_table(p, &image, &tw)?;
    let sig = Signature::INVOLUTIVE | shared_bottom(a, &tw.algebra);
    let morphism = Morphism::new(table, sig);
    internal_unless(&morphism.verify(a, &tw.algebra)?, "φ is a homomorphism")?;
    if !morphism.is_injective() {
        return Err(Error::internal("φ is injective", morphism.table.clone()));
    }
    let tau_tw =
        twist::tau_tw(&tw).map_err(|_| Error::internal("τ(∼e) is cyclic in the image", [iota]))?;
    for x in a.elements() {
        if morphism.apply(p.t(x)) != tau_tw.apply(morphism.apply(x)) {
            return Err(Error::internal("φ∘τ = τ_Tw∘φ", [x]));
        }
    }
    let surjective = morphism.is_surjective_onto(tw.size());
    Ok(Phi {
        image,
        iota,
        twist: tw,
        morphism,
        surjective,
    })
}

/// `ψ⁻¹ ∘ φ` is the identity on `A_τ`.
pub fn adjunction_on_pair(p: &NcaPair) -> Result<Verdict> {
    let ph = phi(p)?;
    let ps = psi(&ph.image.algebra, ph.iota)?;
    let inv = ps.inverse();
    let index = parent_to_image(&ps.image, ps.twist.size());
    let mut v = Verdict::new("ψ⁻¹∘φ on the image");
    for (i, &x) in ph.image.embedding.iter().enumerate() {
        let (a, b) = ph.twist.pair(ph.morphism.apply(x));
        let back = ps
            .twist
            .index_of(a, b)
            .and_then(|t| index[t])
            .map(|k| inv.apply(k));
        if back != Some(i) {
            v.fail("identity", &[x]);
        }
    }
    Ok(v)
}

/// `T(ψ⁻¹) ∘ φ` is the identity on `Tw(L, ι)`.
pub fn adjunction_on_base(l: &Algebra, iota: Elem) -> Result<Verdict> {
    let ps = psi(l, iota)?;
    let inv = ps.inverse();
    let pair = NcaPair::new(ps.twist.algebra.clone(), ps.tau.clone())?;
    let ph = phi(&pair)?;
    if ph.image.embedding != ps.image.embedding {
        return Err(Error::internal(
            "both routes build the same τ_Tw image",
            Vec::new(),
        ));
    }
    let mut v = Verdict::new("T(ψ⁻¹)∘φ on the twist");
    for x in 0..ps.twist.size() {
        let (u, w) = ph.twist.pair(ph.morphism.apply(x));
        if (inv.apply(u), inv.apply(w)) != ps.twist.pair(x) {
            v.fail("identity", &[x]);
        }
    }
    Ok(v)
}

/// `(A, ∨, ∧, ·, ⊃, ⊂, ∼, e)` given by tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RasiowaStructure {
    pub join: Table,
    pub meet: Table,
    pub prod: Table,
    /// `[x][y] = x ⊃ y`.
    pub supset: Table,
    /// `[y][x] = y ⊂ x`.
    pub subset: Table,
    pub invol: Vec<Elem>,
    pub unit: Elem,
    pub names: Vec<String>,
}

/// A quotient by `θ`, each class listed in increasing order and classes
/// ordered by their least member.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    pub classes: Vec<Vec<Elem>>,
    pub class_of: Vec<Elem>,
}

impl RasiowaStructure {
    pub fn size(&self) -> usize {
        self.invol.len()
    }

    fn leq(&self, x: Elem, y: Elem) -> bool {
        self.meet.get(x, y) == x
    }

    fn sup(&self, x: Elem, y: Elem) -> Elem {
        self.supset.get(x, y)
    }

    fn sub(&self, y: Elem, x: Elem) -> Elem {
        self.subset.get(y, x)
    }

    /// `x ≼ y` iff `(x⊃y)⊃(x⊃y) <= x⊃y`.
    pub fn preceq(&self, x: Elem, y: Elem) -> bool {
        let s = self.sup(x, y);
        self.leq(self.sup(s, s), s)
    }

    fn preceq_by_subset(&self, x: Elem, y: Elem) -> bool {
        let s = self.sub(y, x);
        self.leq(self.sub(s, s), s)
    }

    pub fn theta(&self, x: Elem, y: Elem) -> bool {
        self.preceq(x, y) && self.preceq(y, x)
    }

    fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> {
        let n = self.size();
        (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
    }

    fn binary_ops(&self) -> [(&'static str, &Table); 5] {
        [
            ("join", &self.join),
            ("meet", &self.meet),
            ("prod", &self.prod),
            ("supset", &self.supset),
            ("subset", &self.subset),
        ]
    }

    /// The θ-classes and the quotient, with `[x⊃y]` and `[y⊂x]` as divisions.
    /// `None` when θ is not a congruence or the quotient is not residuated.
    pub fn quotient(&self) -> Option<Quotient> {
        let n = self.size();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let members: Vec<Elem> = (x..n).filter(|&y| self.theta(x, y)).collect();
            for &y in &members {
                class_of[y] = classes.len();
            }
            classes.push(members);
        }
        let m = classes.len();
        let rep = |c: usize| classes[c][0];
        let lift = |t: &Table| Table::from_fn(m, |i, j| class_of[t.get(rep(i), rep(j))]).rows();
        let raw = RawAlgebra {
            size: m,
            join: lift(&self.join),
            meet: lift(&self.meet),
            prod: lift(&self.prod),
            ldiv: Some(lift(&self.supset)),
            rdiv: Some(lift(&self.subset)),
            unit: Some(class_of[self.unit]),
            ..RawAlgebra::default()
        };
        let algebra = Algebra::new(raw).ok()?;
        Some(Quotient {
            algebra,
            classes,
            class_of,
        })
    }

    /// R1–R6.
    pub fn check(&self) -> Verdict {
        let n = self.size();
        let neg = |x: Elem| self.invol[x];
        let mut v = Verdict::new("Rasiowa-type");
        for x in 0..n {
            if neg(neg(x)) != x {
                v.fail("R1", &[x]);
            }
            let f = neg(self.unit);
            if self.sup(x, f) != self.sub(f, x) {
                v.fail("R6", &[x]);
            }
        }
        for (x, y) in self.pairs() {
            if neg(self.join.get(x, y)) != self.meet.get(neg(x), neg(y)) {
                v.fail("R1", &[x, y]);
            }
            if self.preceq(x, y) != self.preceq_by_subset(x, y) {
                v.fail("R2", &[x, y]);
            }
            let by_order = self.preceq(x, y) && self.preceq(neg(y), neg(x));
            if self.leq(x, y) != by_order {
                v.fail("R5", &[x, y]);
            }
            if !self.theta(neg(self.sup(x, y)), self.prod.get(neg(y), x)) {
                v.fail("R4", &[x, y, 0]);
            }
            if !self.theta(neg(self.sub(y, x)), self.prod.get(x, neg(y))) {
                v.fail("R4", &[x, y, 1]);
            }
            let rhs = self.meet.get(self.sup(y, neg(x)), self.sub(neg(y), x));
            if !self.theta(neg(self.prod.get(x, y)), rhs) {
                v.fail("R4", &[x, y, 2]);
            }
        }
        for x in 0..n {
            if !self.preceq(x, x) {
                v.fail("R2", &[x, x]);
            }
        }
        for (x, y) in self.pairs() {
            if !self.preceq(x, y) {
                continue;
            }
            for z in 0..n {
                if self.preceq(y, z) && !self.preceq(x, z) {
                    v.fail("R2", &[x, y, z]);
                }
            }
        }
        if v.fails("R2") {
            return v;
        }
        for (x, x2) in self.pairs().filter(|&(x, x2)| x < x2 && self.theta(x, x2)) {
            for y in 0..n {
                for (_, t) in self.binary_ops() {
                    if !self.theta(t.get(x, y), t.get(x2, y))
                        || !self.theta(t.get(y, x), t.get(y, x2))
                    {
                        v.fail("R3", &[x, x2, y]);
                    }
                }
            }
        }
        if !v.fails("R3") && self.quotient().is_none() {
            v.fail("R3", &[]);
        }
        v
    }
}

/// The Rasiowa presentation of a Nelson conucleus algebra.
#[derive(Clone, Debug)]
pub struct Rasiowa {
    pub structure: RasiowaStructure,
    pub quotient: Quotient,
    /// `[x] ↦ τ(x)`, from the quotient onto `A_τ`.
    pub to_image: Morphism,
    pub image: Embedded,
}

/// Builds `⊃` and `⊂`, verifies R1–R6 and that the θ-quotient is
/// isomorphic to `A_τ` through `[x] ↦ τ(x)`.
pub fn rasiowa_structure(p: &NcaPair) -> Result<Rasiowa> {
    let a = p.algebra();
    let n = a.size();
    let structure = RasiowaStructure {
        join: a.join_table().clone(),
        meet: a.meet_table().clone(),
        prod: a.prod_table().clone(),
        supset: Table::from_fn(n, |x, y| p.supset(x, y)),
        subset: Table::from_fn(n, |y, x| p.subset(y, x)),
        invol: a.require_invol()?.to_vec(),
        unit: a.require_unit()?,
        names: a.names().to_vec(),
    };
    internal_unless(&structure.check(), "Rasiowa axioms hold for ⊃ and ⊂")?;
    let quotient = structure
        .quotient()
        .ok_or_else(|| Error::internal("θ-quotient is residuated", Vec::new()))?;
    for (x, y) in a.n_pairs() {
        if structure.theta(x, y) != (p.t(x) == p.t(y)) {
            return Err(Error::internal("θ is the kernel of τ", [x, y]));
        }
    }
    let image = p.image()?;
    let index = parent_to_image(&image, n);
    let table: Vec<Elem> = quotient
        .classes
        .iter()
        .map(|c| index[p.t(c[0])].expect("τ values lie in the image"))
        .collect();
    let to_image = Morphism::new(table, Signature::RESIDUATED);
    internal_unless(
        &to_image.verify(&quotient.algebra, &image.algebra)?,
        "[x] ↦ τ(x) is a homomorphism",
    )?;
    if !to_image.is_injective() || !to_image.is_surjective_onto(image.algebra.size()) {
        return Err(Error::internal(
            "[x] ↦ τ(x) is bijective",
            to_image.table.clone(),
        ));
    }
    Ok(Rasiowa {
        structure,
        quotient,
        to_image,
        image,
    })
}

/// The algebra rebuilt from a Rasiowa-type structure.
#[derive(Clone, Debug)]
pub struct FromRasiowa {
    pub pair: NcaPair,
    pub quotient: Quotient,
    pub twist: Twist,
    /// `x ↦ ([x], [∼x])`.
    pub h: Morphism,
}

/// `x\y = ∼(∼y·x)`, `y/x = ∼(x·∼y)` and `τ(x) = ∼(x⊃∼e)`; verifies the pair
/// and that `x ↦ ([x], [∼x])` embeds it into `Tw(Ā/θ, [∼e])`.
pub fn rasiowa_to_nca(r: &RasiowaStructure) -> Result<FromRasiowa> {
    let v = r.check();
    if let Some(w) = v.witnesses.first() {
        return Err(Error::Precondition {
            what: "Rasiowa axioms hold",
            witness: w.tuple.clone(),
        });
    }
    let n = r.size();
    let neg = |x: Elem| r.invol[x];
    let raw = RawAlgebra {
        size: n,
        join: r.join.rows(),
        meet: r.meet.rows(),
        prod: r.prod.rows(),
        ldiv: Some(Table::from_fn(n, |x, y| neg(r.prod.get(neg(y), x))).rows()),
        rdiv: Some(Table::from_fn(n, |y, x| neg(r.prod.get(x, neg(y)))).rows()),
        unit: Some(r.unit),
        invol: Some(r.invol.clone()),
        bottom: None,
        names: Some(r.names.clone()),
    };
    let algebra = Algebra::new(raw).map_err(|err| match err {
        Error::Invalid(_) => {
            Error::internal("rebuilt algebra is involutive residuated", Vec::new())
        }
        other => other,
    })?;
    let f = neg(r.unit);
    let tau = UnaryMap::from_fn(n, |x| neg(r.sup(x, f)));
    let pair = NcaPair::new(algebra, tau).map_err(|err| match err {
        Error::Precondition { witness, .. } => {
            Error::internal("rebuilt τ is a Nelson conucleus", witness)
        }
        other => other,
    })?;
    let quotient = r.quotient().expect("R3 was verified");
    let tw = twist::twist(&quotient.algebra, quotient.class_of[f])?;
    let mut table = Vec::with_capacity(n);
    for x in 0..n {
        let (c, d) = (quotient.class_of[x], quotient.class_of[neg(x)]);
        table.push(
            tw.index_of(c, d)
                .ok_or_else(|| Error::internal("([x], [∼x]) lies in the twist", [x]))?,
        );
    }
    let h = Morphism::new(table, Signature::INVOLUTIVE);
    internal_unless(
        &h.verify(pair.algebra(), &tw.algebra)?,
        "h is a homomorphism",
    )?;
    if !h.is_injective() {
        return Err(Error::internal("h is injective", h.table.clone()));
    }
    let tau_tw = twist::tau_tw(&tw).map_err(|_| Error::internal("[∼e] is cyclic", [f]))?;
    for x in 0..n {
        if h.apply(pair.t(x)) != tau_tw.apply(h.apply(x)) {
            return Err(Error::internal("h∘τ = τ_Tw∘h", [x]));
        }
    }
    Ok(FromRasiowa {
        pair,
        quotient,
        twist: tw,
        h,
    })
}

/// Passing to the Rasiowa presentation and back returns the same tables and conucleus.
pub fn rasiowa_round_trip(p: &NcaPair) -> Result<Verdict> {
    let r = rasiowa_structure(p)?;
    let back = rasiowa_to_nca(&r.structure)?;
    let (x, y) = (p.algebra().to_raw(), back.pair.algebra().to_raw());
    let mut v = Verdict::new("Rasiowa round trip");
    let checks = [
        ("join", x.join == y.join),
        ("meet", x.meet == y.meet),
        ("prod", x.prod == y.prod),
        ("ldiv", x.ldiv == y.ldiv),
        ("rdiv", x.rdiv == y.rdiv),
        ("invol", x.invol == y.invol),
        ("unit", x.unit == y.unit),
        ("tau", p.tau() == back.pair.tau()),
    ];
    for (name, ok) in checks {
        if !ok {
            v.fail(name, &[]);
        }
    }
    Ok(v)
}

/// `H_A`, `ι` and the Boolean filter `F_A` of a Nelson-type algebra.
#[derive(Clone, Debug)]
pub struct SendlewskiFilter {
    pub pair: NcaPair,
    /// `H_A` (the image of `(x∧e)²`) embedded in `A`.
    pub h: Embedded,
    /// `τ(∼e)` as an index of `h.algebra`.
    pub iota: Elem,
    /// `F_A` over `h.algebra`.
    pub filter: Subset,
}

/// `F_A` computed as `{τ(x∨∼x)}`, `{τ(w) : ∼w <= w}` and
/// `{τ(z) : τ(∼z) <= τ(z)}`, checked equal and a Boolean filter of `H_A`.
pub fn sendlewski_filter(a: &Algebra) -> Result<SendlewskiFilter> {
    let v = varieties::is_nt(a)?;
    if let Some(w) = v.witnesses.first() {
        return Err(Error::Precondition {
            what: "algebra is Nelson-type",
            witness: w.tuple.clone(),
        });
    }
    let tau = conuclei::nelson_term_tau(a)?;
    let pair = NcaPair::new(a.clone(), tau)?;
    let h = pair.image()?;
    let index = parent_to_image(&h, a.size());
    let to_h = |x: Elem| index[x].expect("τ values lie in the image");
    let t = |x: Elem| pair.t(x);
    let m = h.algebra.size();
    let first = Subset::from_members(m, a.elements().map(|x| to_h(t(a.join(x, a.neg(x))))));
    let second = Subset::from_members(
        m,
        a.elements()
            .filter(|&w| a.leq(a.neg(w), w))
            .map(|w| to_h(t(w))),
    );
    let third = Subset::from_members(
        m,
        a.elements()
            .filter(|&z| a.leq(t(a.neg(z)), t(z)))
            .map(|z| to_h(t(z))),
    );
    if first != second || first != third {
        return Err(Error::internal(
            "the three descriptions of F_A agree",
            first.to_vec(),
        ));
    }
    if !h.algebra.is_brouwerian() {
        return Err(Error::internal("H_A is Brouwerian", Vec::new()));
    }
    if !varieties::is_boolean_filter(&h.algebra, &first)? {
        return Err(Error::internal("F_A is a Boolean filter", first.to_vec()));
    }
    let iota = to_h(pair.iota());
    Ok(SendlewskiFilter {
        pair,
        h,
        iota,
        filter: first,
    })
}

/// A Nelson-type algebra identified with `Tw(H_A, ι, F_A)`.
#[derive(Clone, Debug)]
pub struct Sendlewski {
    pub data: SendlewskiFilter,
    pub twist: Twist,
    /// `A → twist.algebra`, a verified isomorphism.
    pub phi: Morphism,
    /// For each twist element `(τx, τy)`, the element `z` built from `x`, `y`
    /// and a `w` with `τx ∨ τy = τ(w∨∼w)`.
    pub preimages: Vec<Elem>,
}

pub fn sendlewski_isomorphism(a: &Algebra) -> Result<Sendlewski> {
    let data = sendlewski_filter(a)?;
    let tw = twist::sendlewski_twist(&data.h.algebra, data.iota, &data.filter)?;
    let p = &data.pair;
    let t = |x: Elem| p.t(x);
    let neg = |x: Elem| a.neg(x);
    let imp = |x: Elem, y: Elem| a.ldiv(t(x), y);
    let mut preimages = Vec::with_capacity(tw.size());
    for &(ha, hb) in &tw.pairs {
        let (x, y) = (data.h.embedding[ha], data.h.embedding[hb]);
        let target = a.join(t(x), t(y));
        let w = a
            .elements()
            .find(|&w| t(a.join(w, neg(w))) == target)
            .ok_or_else(|| Error::internal("τx ∨ τy has the form τ(w∨∼w)", [x, y]))?;
        let inner = a.join(
            a.join(a.meet(w, neg(w)), neg(imp(x, t(y)))),
            neg(imp(y, t(x))),
        );
        let z = a.meet(inner, imp(y, t(x)));
        if t(z) != x || t(neg(z)) != y {
            return Err(Error::internal(
                "the witness z has τz = τx and τ∼z = τy",
                [x, y, w, z],
            ));
        }
        preimages.push(z);
    }
    let table = phi_table(p, &data.h, &tw)?;
    let phi = Morphism::new(table, Signature::INVOLUTIVE | shared_bottom(a, &tw.algebra));
    internal_unless(
        &phi.verify(a, &tw.algebra)?,
        "φ into the filtered twist is a homomorphism",
    )?;
    if !phi.is_injective() || !phi.is_surjective_onto(tw.size()) {
        return Err(Error::internal(
            "φ onto the filtered twist is bijective",
            phi.table.clone(),
        ));
    }
    for (i, &z) in preimages.iter().enumerate() {
        if phi.apply(z) != i {
            return Err(Error::internal("φ(z) is the requested pair", [z, i]));
        }
    }
    Ok(Sendlewski {
        data,
        twist: tw,
        phi,
        preimages,
    })
}

fn require_commutative(a: &Algebra) -> Result<()> {
    match a.n_pairs().find(|&(x, y)| a.mul(x, y) != a.mul(y, x)) {
        Some((x, y)) => Err(Error::pre("algebra is commutative", [x, y])),
        None => Ok(()),
    }
}

/// `τ(τ(τ(x)→⊥)→⊥) = τ(x)` on a commutative pair with a bottom.
pub fn inca_check(p: &NcaPair) -> Result<Verdict> {
    let a = p.algebra();
    require_commutative(a)?;
    let b = a.require_bottom()?;
    let not = |x: Elem| p.t(a.ldiv(p.t(x), b));
    let mut v = Verdict::new("IT1");
    for x in a.elements() {
        if not(not(x)) != p.t(x) {
            v.fail("IT1", &[x]);
        }
    }
    Ok(v)
}

/// An algebra satisfying IT1 identified with `Tw(L_A, ι, F_A)`.
#[derive(Clone, Debug)]
pub struct Inca {
    /// `L_A`: the image with involution `a ↦ τ(τ(a)→⊥)` and bottom `τ(⊥)`.
    pub l: Algebra,
    /// `embedding[i]` is the element of `A` behind element `i` of `l`.
    pub embedding: Vec<Elem>,
    pub iota: Elem,
    /// `F_A = {τx ⊕ τ∼x}` over `l`.
    pub filter: Subset,
    pub twist: Twist,
    pub phi: Morphism,
    pub preimages: Vec<Elem>,
}

/// Builds `L_A` and `F_A`, cross-checks `F_A = {τ(∼z) : τ(z) = τ(⊥)}`, and
/// verifies `φ` is an isomorphism onto `Tw(L_A, ι, F_A)`.
pub fn inca_isomorphism(p: &NcaPair) -> Result<Inca> {
    let v = inca_check(p)?;
    if let Some(w) = v.witnesses.first() {
        return Err(Error::Precondition {
            what: "IT1 holds",
            witness: w.tuple.clone(),
        });
    }
    let a = p.algebra();
    let bot = a.require_bottom()?;
    let t = |x: Elem| p.t(x);
    let image = p.image()?;
    let index = parent_to_image(&image, a.size());
    let to_l = |x: Elem| index[x].expect("τ values lie in the image");
    let not_a = |x: Elem| t(a.ldiv(t(x), bot));
    let invol: Vec<Elem> = image.embedding.iter().map(|&x| to_l(not_a(x))).collect();
    let l = image
        .algebra
        .with_involution(invol)
        .map_err(|_| Error::internal("τ(τ(a)→⊥) is an involution of the image", Vec::new()))?;
    let zero = to_l(t(bot));
    if l.bottom() != Some(zero) {
        return Err(Error::internal("the image bottom is τ(⊥)", [bot]));
    }
    let m = l.size();
    let oplus = |u: Elem, w: Elem| l.oplus(u, w).expect("L_A carries an involution");
    let filter = Subset::from_members(
        m,
        a.elements().map(|x| oplus(to_l(t(x)), to_l(t(a.neg(x))))),
    );
    let filterform = Subset::from_members(
        m,
        a.elements()
            .filter(|&z| t(z) == t(bot))
            .map(|z| to_l(t(a.neg(z)))),
    );
    if filter != filterform {
        return Err(Error::internal("F_A = {τ(∼z) : τ(z) = 0}", filter.to_vec()));
    }
    if !varieties::is_lattice_filter(&l, &filter) {
        return Err(Error::internal("F_A is a lattice filter", filter.to_vec()));
    }
    let iota = to_l(p.iota());
    let one = l.require_unit()?;
    if !filter.contains(oplus(one, iota)) {
        return Err(Error::internal("1 ⊕ ι lies in F_A", [oplus(one, iota)]));
    }
    let tw = twist::inca_twist(&l, iota, &filter)?;
    let mut preimages = Vec::with_capacity(tw.size());
    for &(la, lb) in &tw.pairs {
        let (x, y) = (image.embedding[la], image.embedding[lb]);
        let sum = oplus(la, lb);
        let w = a
            .elements()
            .find(|&w| t(w) == t(bot) && to_l(t(a.neg(w))) == sum)
            .ok_or_else(|| Error::internal("τx ⊕ τy = τ(∼w) for some w with τw = 0", [x, y]))?;
        let z = a.meet(a.ldiv(not_a(x), w), a.neg(t(y)));
        if t(z) != x || t(a.neg(z)) != y {
            return Err(Error::internal(
                "the witness z has τz = τx and τ∼z = τy",
                [x, y, w, z],
            ));
        }
        preimages.push(z);
    }
    let l_image = Embedded {
        algebra: l.clone(),
        embedding: image.embedding.clone(),
    };
    let table = phi_table(p, &l_image, &tw)?;
    let phi = Morphism::new(table, Signature::INVOLUTIVE | shared_bottom(a, &tw.algebra));
    internal_unless(
        &phi.verify(a, &tw.algebra)?,
        "φ into the filtered twist is a homomorphism",
    )?;
    if !phi.is_injective() || !phi.is_surjective_onto(tw.size()) {
        return Err(Error::internal(
            "φ onto the filtered twist is bijective",
            phi.table.clone(),
        ));
    }
    for (i, &z) in preimages.iter().enumerate() {
        if phi.apply(z) != i {
            return Err(Error::internal("φ(z) is the requested pair", [z, i]));
        }
    }
    Ok(Inca {
        l,
        embedding: image.embedding,
        iota,
        filter,
        twist: tw,
        phi,
        preimages,
    })
}

/// A Brouwerian base with a cyclic element and a Boolean filter.
#[derive(Clone, Debug)]
pub struct FilteredBase<'a> {
    pub h: &'a Algebra,
    pub iota: Elem,
    pub filter: &'a Subset,
}

/// `(a, b) ↦ (f(a), f(b))` between filtered twists, for a Brouwerian
/// homomorphism `f` with `f(ι₁) = ι₂` and `f(F₁) ⊆ F₂`.
pub fn transport_morphism(
    f: &Morphism,
    src: &FilteredBase,
    tgt: &FilteredBase,
) -> Result<Morphism> {
    let v = preserves(src.h, tgt.h, &f.table, Signature::BROUWERIAN)?;
    if let Some(w) = v.witnesses.first() {
        return Err(Error::Precondition {
            what: "f is a Brouwerian homomorphism",
            witness: w.tuple.clone(),
        });
    }
    if f.apply(src.iota) != tgt.iota {
        return Err(Error::pre("f(ι₁) = ι₂", [src.iota]));
    }
    if let Some(x) = src
        .filter
        .iter()
        .find(|&x| !tgt.filter.contains(f.apply(x)))
    {
        return Err(Error::pre("f(F₁) ⊆ F₂", [x]));
    }
    let t1 = twist::sendlewski_twist(src.h, src.iota, src.filter)?;
    let t2 = twist::sendlewski_twist(tgt.h, tgt.iota, tgt.filter)?;
    let mut table = Vec::with_capacity(t1.size());
    for &(a, b) in &t1.pairs {
        let (fa, fb) = (f.apply(a), f.apply(b));
        table.push(
            t2.index_of(fa, fb)
                .ok_or_else(|| Error::internal("lifted pair lies in the target twist", [a, b]))?,
        );
    }
    let lifted = Morphism::new(table, Signature::INVOLUTIVE);
    internal_unless(
        &lifted.verify(&t1.algebra, &t2.algebra)?,
        "lifted map is a homomorphism",
    )?;
    Ok(lifted)
}

/// The restriction of a homomorphism of Nelson-type algebras to the images
/// `H_A`, as a map of `h` indices.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub source: SendlewskiFilter,
    pub target: SendlewskiFilter,
    pub map: Morphism,
}

/// Restricts `phi: A₁ → A₂` to `H_{A₁} → H_{A₂}` and verifies it is
/// Brouwerian, sends `(∼e∧e)²` to `(∼e∧e)²` and maps `F_{A₁}` into `F_{A₂}`.
pub fn restrict_morphism(phi: &Morphism, a1: &Algebra, a2: &Algebra) -> Result<Restriction> {
    let v = preserves(a1, a2, &phi.table, Signature::INVOLUTIVE)?;
    if let Some(w) = v.witnesses.first() {
        return Err(Error::Precondition {
            what: "map is a homomorphism",
            witness: w.tuple.clone(),
        });
    }
    let source = sendlewski_filter(a1)?;
    let target = sendlewski_filter(a2)?;
    let index = parent_to_image(&target.h, a2.size());
    let mut table = Vec::with_capacity(source.h.embedding.len());
    for &x in &source.h.embedding {
        let y = phi.apply(x);
        table.push(index[y].ok_or_else(|| Error::internal("φ maps H_A₁ into H_A₂", [x]))?);
    }
    let map = Morphism::new(table, Signature::BROUWERIAN);
    internal_unless(
        &map.verify(&source.h.algebra, &target.h.algebra)?,
        "restriction is Brouwerian",
    )?;
    let cyc = |a: &Algebra| {
        let e = a.unit().expect("Nelson-type algebras have a unit");
        let m = a.meet(a.neg(e), e);
        a.mul(m, m)
    };
    if phi.apply(cyc(a1)) != cyc(a2) {
        return Err(Error::internal("restriction preserves (∼e∧e)²", [cyc(a1)]));
    }
    if let Some(x) = source
        .filter
        .iter()
        .find(|&x| !target.filter.contains(map.apply(x)))
    {
        return Err(Error::internal("restriction maps F_A₁ into F_A₂", [x]));
    }
    Ok(Restriction {
        source,
        target,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn psi_on_lukasiewicz_chain() {
        let l3 = fixtures::lukasiewicz3();
        let ps = psi(&l3, 0).unwrap();
        let pairs: Vec<_> = l3
            .elements()
            .map(|a| ps.twist.pair(ps.image.embedding[ps.morphism.apply(a)]))
            .collect();
        assert_eq!(pairs, vec![(0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn phi_on_identity_conucleus() {
        let l3 = fixtures::lukasiewicz3();
        let p = NcaPair::new(l3.clone(), UnaryMap::identity(3)).unwrap();
        let ph = phi(&p).unwrap();
        let pairs: Vec<_> = l3
            .elements()
            .map(|x| ph.twist.pair(ph.morphism.apply(x)))
            .collect();
        assert_eq!(pairs, vec![(0, 2), (1, 1), (2, 0)]);
        assert!(!ph.surjective);
    }

    #[test]
    fn triangles_on_two() {
        let two = fixtures::two();
        assert!(adjunction_on_base(&two, 1).unwrap().holds);
        let tw = twist::twist(&two, 1).unwrap();
        let tau = twist::tau_tw(&tw).unwrap();
        let p = NcaPair::new(tw.algebra, tau).unwrap();
        assert!(adjunction_on_pair(&p).unwrap().holds);
    }

    #[test]
    fn goedel_twist_fails_it1_in_the_middle() {
        let tw = twist::twist(&fixtures::goedel3(), 0).unwrap();
        let tau = twist::tau_tw(&tw).unwrap();
        let p = NcaPair::new(tw.algebra.clone(), tau).unwrap();
        let v = inca_check(&p).unwrap();
        let w = v.first_witness("IT1").unwrap();
        assert_eq!(tw.pair(w[0]).0, 1);
    }
}
