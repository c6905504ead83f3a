//! Finite residuated lattices (and lattice-ordered semigroups) as validated
//! operation tables.
//!
//! Elements are the indices `0..n`. The order is read off the meet table
//! (`x <= y` iff `x ∧ y = x`); the join table is checked against it rather
//! than trusted. Divisions follow the usual conventions: `ldiv(x, y)` is
//! `x\y` and `rdiv(y, x)` is `y/x`, so that
//!
//! ```text
//! x·y <= z  iff  y <= ldiv(x, z)  iff  x <= rdiv(z, y)
//! ```
//!
//! An [`Algebra`] can only be obtained through validation, and is immutable
//! afterwards.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result, Side};
use crate::subset::Subset;

/// An element of a finite algebra.
pub type Elem = usize;

/// An `n × n` operation table; cell `(x, y)` holds `op(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Table {
    n: usize,
    cells: Vec<Elem>,
}

impl Table {
    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(x, y));
            }
        }
        Table { n, cells }
    }

    /// Builds a table from rows, checking shape and range.
    pub fn from_rows(name: &str, n: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::Malformed(format!(
                "{name}: expected {n} rows, found {}",
                rows.len()
            )));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "{name}: row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::Malformed(format!(
                        "{name}[{x}][{y}] = {v} is out of range 0..{n}"
                    )));
                }
                cells.push(v);
            }
        }
        Ok(Table { n, cells })
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.cells[x * self.n + y]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.cells
            .chunks(self.n.max(1))
            .map(|r| r.to_vec())
            .collect()
    }
}

/// Unvalidated input, mirroring the JSON interchange schema.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawAlgebra {
    pub size: usize,
    pub join: Vec<Vec<Elem>>,
    pub meet: Vec<Vec<Elem>>,
    pub prod: Vec<Vec<Elem>>,
    pub ldiv: Option<Vec<Vec<Elem>>>,
    pub rdiv: Option<Vec<Vec<Elem>>>,
    /// Absent for residuated lattice-ordered semigroups.
    pub unit: Option<Elem>,
    pub invol: Option<Vec<Elem>>,
    pub bottom: Option<Elem>,
    pub names: Option<Vec<String>>,
}

/// Axioms checked by [`validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    MeetIdempotent,
    MeetCommutative,
    MeetAssociative,
    JoinIdempotent,
    JoinCommutative,
    JoinAssociative,
    Absorption,
    ProductAssociative,
    Unit,
    /// `{y : xy <= z}` (or its mirror) has no maximum, so divisions cannot be derived.
    ResidualExistence,
    Residuation,
    DoubleNegation,
    Contraposition,
    Bottom,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::MeetIdempotent => "meet idempotent",
            Axiom::MeetCommutative => "meet commutative",
            Axiom::MeetAssociative => "meet associative",
            Axiom::JoinIdempotent => "join idempotent",
            Axiom::JoinCommutative => "join commutative",
            Axiom::JoinAssociative => "join associative",
            Axiom::Absorption => "absorption",
            Axiom::ProductAssociative => "product associative",
            Axiom::Unit => "unit",
            Axiom::ResidualExistence => "residual existence",
            Axiom::Residuation => "residuation",
            Axiom::DoubleNegation => "double negation",
            Axiom::Contraposition => "contraposition",
            Axiom::Bottom => "bottom",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

/// Every violated axiom with a witness tuple. Empty means certified.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_certified(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn witnesses(&self, axiom: Axiom) -> impl Iterator<Item = &[Elem]> {
        self.violations
            .iter()
            .filter(move |v| v.axiom == axiom)
            .map(|v| v.witness.as_slice())
    }

    fn push(&mut self, axiom: Axiom, witness: &[Elem]) {
        self.violations.push(Violation {
            axiom,
            witness: witness.to_vec(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("certified");
        }
        for v in &self.violations {
            writeln!(f, "  {}: {:?}", v.axiom.name(), v.witness)?;
        }
        Ok(())
    }
}

/// A validated finite residuated lattice, or residuated lattice-ordered
/// semigroup when `unit` is absent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    n: usize,
    join: Table,
    meet: Table,
    prod: Table,
    ldiv: Table,
    rdiv: Table,
    unit: Option<Elem>,
    invol: Option<Vec<Elem>>,
    bottom: Option<Elem>,
    names: Vec<String>,
}

/// Structural flags of a certified algebra.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Profile {
    pub commutative: bool,
    pub integral: bool,
    pub distributive: bool,
    /// A bottom constant is part of the signature.
    pub bounded: bool,
    /// A top element is term-definable: `∼⊥` with an involution, else `⊥\⊥`.
    pub topped: bool,
    pub brouwerian: bool,
    pub involutive: bool,
    pub odd: bool,
    pub three_potent: bool,
}

fn leq_by_meet(meet: &Table, x: Elem, y: Elem) -> bool {
    meet.get(x, y) == x
}

/// Computes `(ldiv, rdiv)` as the maxima of `{y : xy <= z}` and
/// `{y : yx <= z}`, failing at the first `(x, z)` where no maximum exists.
pub fn residuals_from_product(meet: &Table, prod: &Table) -> Result<(Table, Table)> {
    let n = meet.size();
    let max_of = |pred: &dyn Fn(Elem) -> bool| -> Option<Elem> {
        let set: Vec<Elem> = (0..n).filter(|&y| pred(y)).collect();
        set.iter()
            .copied()
            .find(|&m| set.iter().all(|&y| leq_by_meet(meet, y, m)))
    };
    let mut ldiv = vec![0; n * n];
    let mut rdiv = vec![0; n * n];
    for x in 0..n {
        for z in 0..n {
            ldiv[x * n + z] =
                max_of(&|y| leq_by_meet(meet, prod.get(x, y), z)).ok_or(Error::NotResiduated {
                    side: Side::Left,
                    x,
                    z,
                })?;
            // rdiv is indexed (z, x) for z/x
            rdiv[z * n + x] =
                max_of(&|y| leq_by_meet(meet, prod.get(y, x), z)).ok_or(Error::NotResiduated {
                    side: Side::Right,
                    x,
                    z,
                })?;
        }
    }
    Ok((Table { n, cells: ldiv }, Table { n, cells: rdiv }))
}

struct Checked {
    join: Table,
    meet: Table,
    prod: Table,
    divs: Option<(Table, Table)>,
    report: ValidationReport,
}

fn check(raw: &RawAlgebra) -> Result<Checked> {
    let n = raw.size;
    if n == 0 {
        return Err(Error::Malformed("size must be positive".into()));
    }
    let join = Table::from_rows("join", n, &raw.join)?;
    let meet = Table::from_rows("meet", n, &raw.meet)?;
    let prod = Table::from_rows("prod", n, &raw.prod)?;
    let ldiv = raw
        .ldiv
        .as_ref()
        .map(|r| Table::from_rows("ldiv", n, r))
        .transpose()?;
    let rdiv = raw
        .rdiv
        .as_ref()
        .map(|r| Table::from_rows("rdiv", n, r))
        .transpose()?;
    let in_range = |what: &str, v: Elem| {
        if v < n {
            Ok(())
        } else {
            Err(Error::Malformed(format!(
                "{what} = {v} is out of range 0..{n}"
            )))
        }
    };
    if let Some(e) = raw.unit {
        in_range("unit", e)?;
    }
    if let Some(b) = raw.bottom {
        in_range("bottom", b)?;
    }
    if let Some(inv) = &raw.invol {
        if inv.len() != n {
            return Err(Error::Malformed(format!(
                "invol has {} entries, expected {n}",
                inv.len()
            )));
        }
        for &v in inv {
            in_range("invol entry", v)?;
        }
    }
    if let Some(names) = &raw.names {
        if names.len() != n {
            return Err(Error::Malformed(format!(
                "names has {} entries, expected {n}",
                names.len()
            )));
        }
    }

    let mut report = ValidationReport::default();
    let le = |x, y| leq_by_meet(&meet, x, y);

    for x in 0..n {
        if meet.get(x, x) != x {
            report.push(Axiom::MeetIdempotent, &[x]);
        }
        if join.get(x, x) != x {
            report.push(Axiom::JoinIdempotent, &[x]);
        }
        for y in 0..n {
            if meet.get(x, y) != meet.get(y, x) {
                report.push(Axiom::MeetCommutative, &[x, y]);
            }
            if join.get(x, y) != join.get(y, x) {
                report.push(Axiom::JoinCommutative, &[x, y]);
            }
            if meet.get(x, join.get(x, y)) != x || join.get(x, meet.get(x, y)) != x {
                report.push(Axiom::Absorption, &[x, y]);
            }
            for z in 0..n {
                if meet.get(meet.get(x, y), z) != meet.get(x, meet.get(y, z)) {
                    report.push(Axiom::MeetAssociative, &[x, y, z]);
                }
                if join.get(join.get(x, y), z) != join.get(x, join.get(y, z)) {
                    report.push(Axiom::JoinAssociative, &[x, y, z]);
                }
                if prod.get(prod.get(x, y), z) != prod.get(x, prod.get(y, z)) {
                    report.push(Axiom::ProductAssociative, &[x, y, z]);
                }
            }
        }
    }

    if let Some(e) = raw.unit {
        for x in 0..n {
            if prod.get(e, x) != x || prod.get(x, e) != x {
                report.push(Axiom::Unit, &[x]);
            }
        }
    }

    let divs = match (ldiv, rdiv) {
        (Some(l), Some(r)) => Some((l, r)),
        (l, r) => match residuals_from_product(&meet, &prod) {
            Ok((cl, cr)) => Some((l.unwrap_or(cl), r.unwrap_or(cr))),
            Err(Error::NotResiduated { side, x, z }) => {
                let w = match side {
                    Side::Left => [x, z, 0],
                    Side::Right => [z, x, 1],
                };
                report.push(Axiom::ResidualExistence, &w);
                None
            }
            Err(other) => return Err(other),
        },
    };

    if let Some((l, r)) = &divs {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let a = le(prod.get(x, y), z);
                    let b = le(y, l.get(x, z));
                    let c = le(x, r.get(z, y));
                    if a != b || b != c {
                        report.push(Axiom::Residuation, &[x, y, z]);
                    }
                }
            }
        }
        if let Some(inv) = &raw.invol {
            for x in 0..n {
                if inv[inv[x]] != x {
                    report.push(Axiom::DoubleNegation, &[x]);
                }
                for y in 0..n {
                    if l.get(x, inv[y]) != r.get(inv[x], y) {
                        report.push(Axiom::Contraposition, &[x, y]);
                    }
                }
            }
        }
    }

    if let Some(b) = raw.bottom {
        for x in 0..n {
            if !le(b, x) {
                report.push(Axiom::Bottom, &[x]);
            }
        }
    }

    Ok(Checked {
        join,
        meet,
        prod,
        divs,
        report,
    })
}

/// Checks every axiom and lists all violations with witnesses.
///
/// Only shape and range problems are errors; axiom failures are reported.
pub fn validate(raw: &RawAlgebra) -> Result<ValidationReport> {
    check(raw).map(|c| c.report)
}

impl Algebra {
    /// Validates and certifies. Missing divisions are derived from the product.
    pub fn new(raw: RawAlgebra) -> Result<Self> {
        let checked = check(&raw)?;
        if !checked.report.is_certified() {
            return Err(Error::Invalid(checked.report));
        }
        let (ldiv, rdiv) = checked.divs.expect("certified algebras have divisions");
        let names = raw
            .names
            .unwrap_or_else(|| (0..raw.size).map(|i| i.to_string()).collect());
        Ok(Algebra {
            n: raw.size,
            join: checked.join,
            meet: checked.meet,
            prod: checked.prod,
            ldiv,
            rdiv,
            unit: raw.unit,
            invol: raw.invol,
            bottom: raw.bottom,
            names,
        })
    }

    /// Builds an algebra from lattice and product functions, deriving divisions.
    pub fn from_ops(
        n: usize,
        join: impl FnMut(Elem, Elem) -> Elem,
        meet: impl FnMut(Elem, Elem) -> Elem,
        prod: impl FnMut(Elem, Elem) -> Elem,
        unit: Option<Elem>,
    ) -> Result<Self> {
        Algebra::new(RawAlgebra {
            size: n,
            join: Table::from_fn(n, join).rows(),
            meet: Table::from_fn(n, meet).rows(),
            prod: Table::from_fn(n, prod).rows(),
            unit,
            ..RawAlgebra::default()
        })
    }

    pub fn to_raw(&self) -> RawAlgebra {
        RawAlgebra {
            size: self.n,
            join: self.join.rows(),
            meet: self.meet.rows(),
            prod: self.prod.rows(),
            ldiv: Some(self.ldiv.rows()),
            rdiv: Some(self.rdiv.rows()),
            unit: self.unit,
            invol: self.invol.clone(),
            bottom: self.bottom,
            names: Some(self.names.clone()),
        }
    }

    fn rebuilt(&self, edit: impl FnOnce(&mut RawAlgebra)) -> Result<Self> {
        let mut raw = self.to_raw();
        edit(&mut raw);
        Algebra::new(raw)
    }

    /// The same algebra with the given involution added (revalidated).
    pub fn with_involution(&self, invol: Vec<Elem>) -> Result<Self> {
        self.rebuilt(|r| r.invol = Some(invol))
    }

    pub fn without_involution(&self) -> Self {
        let mut a = self.clone();
        a.invol = None;
        a
    }

    pub fn with_bottom(&self, bottom: Elem) -> Result<Self> {
        self.rebuilt(|r| r.bottom = Some(bottom))
    }

    pub fn without_bottom(&self) -> Self {
        let mut a = self.clone();
        a.bottom = None;
        a
    }

    /// The residuated lattice-ordered semigroup reduct.
    pub fn without_unit(&self) -> Self {
        let mut a = self.clone();
        a.unit = None;
        a
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n, "one name per element");
        self.names = names;
        self
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> core::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join.get(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.prod.get(x, y)
    }

    /// `x\y`.
    #[inline]
    pub fn ldiv(&self, x: Elem, y: Elem) -> Elem {
        self.ldiv.get(x, y)
    }

    /// `y/x`, arguments in written order.
    #[inline]
    pub fn rdiv(&self, y: Elem, x: Elem) -> Elem {
        self.rdiv.get(y, x)
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        leq_by_meet(&self.meet, x, y)
    }

    pub fn unit(&self) -> Option<Elem> {
        self.unit
    }

    pub fn bottom(&self) -> Option<Elem> {
        self.bottom
    }

    pub fn involution(&self) -> Option<&[Elem]> {
        self.invol.as_deref()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn prod_table(&self) -> &Table {
        &self.prod
    }

    pub fn ldiv_table(&self) -> &Table {
        &self.ldiv
    }

    pub fn rdiv_table(&self) -> &Table {
        &self.rdiv
    }

    pub(crate) fn require_unit(&self) -> Result<Elem> {
        self.unit.ok_or(Error::MissingUnit)
    }

    pub(crate) fn require_invol(&self) -> Result<&[Elem]> {
        self.invol.as_deref().ok_or(Error::MissingInvolution)
    }

    pub(crate) fn require_bottom(&self) -> Result<Elem> {
        self.bottom.ok_or(Error::MissingBottom)
    }

    /// `∼x`. Panics if there is no involution; use [`Algebra::involution`] to test.
    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.invol.as_ref().expect("algebra has no involution")[x]
    }

    /// The lattice maximum.
    pub fn greatest(&self) -> Elem {
        (0..self.n).fold(0, |acc, x| self.join(acc, x))
    }

    /// The lattice minimum (whether or not it is designated).
    pub fn least(&self) -> Elem {
        (0..self.n).fold(0, |acc, x| self.meet(acc, x))
    }

    /// Term-definable top: `∼⊥` with an involution, `⊥\⊥` otherwise.
    pub fn top(&self) -> Option<Elem> {
        let b = self.bottom?;
        Some(match &self.invol {
            Some(inv) => inv[b],
            None => self.ldiv(b, b),
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.n_pairs()
            .all(|(x, y)| self.mul(x, y) == self.mul(y, x))
    }

    pub fn is_distributive(&self) -> bool {
        self.n_triples().all(|(x, y, z)| {
            self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
        })
    }

    pub fn is_integral(&self) -> bool {
        match self.unit {
            Some(e) => e == self.greatest(),
            None => false,
        }
    }

    pub fn is_brouwerian(&self) -> bool {
        self.unit.is_some()
            && self
                .n_pairs()
                .all(|(x, y)| self.mul(x, y) == self.meet(x, y))
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|x| self.mul(x, x) == x)
    }

    pub fn profile(&self) -> Profile {
        let odd = match (&self.invol, self.unit) {
            (Some(inv), Some(e)) => inv[e] == e,
            _ => false,
        };
        Profile {
            commutative: self.is_commutative(),
            integral: self.is_integral(),
            distributive: self.is_distributive(),
            bounded: self.bottom.is_some(),
            topped: self.top().is_some(),
            brouwerian: self.is_brouwerian(),
            involutive: self.invol.is_some(),
            odd,
            three_potent: (0..self.n).all(|x| {
                let x2 = self.mul(x, x);
                self.mul(x2, x) == x2
            }),
        }
    }

    /// `x\ι = ι/x` for every `x`.
    pub fn is_cyclic_element(&self, iota: Elem) -> bool {
        (0..self.n).all(|x| self.ldiv(x, iota) == self.rdiv(iota, x))
    }

    /// `a ⊕ b = ∼((∼b)·(∼a))`.
    pub fn oplus(&self, a: Elem, b: Elem) -> Result<Elem> {
        let inv = self.require_invol()?;
        Ok(inv[self.mul(inv[b], inv[a])])
    }

    /// Restricts the algebra to a subuniverse, checking closure under every
    /// operation in the signature (divisions and involution included).
    pub fn restrict(&self, sub: &Subset) -> Result<Embedded> {
        let members: Vec<Elem> = sub.iter().collect();
        if members.is_empty() {
            return Err(Error::pre("subuniverse is nonempty", Vec::new()));
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in members.iter().enumerate() {
            index[x] = i;
        }
        let m = members.len();
        let mut missing: Option<Vec<Elem>> = None;
        let mut table = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
            Table::from_fn(m, |i, j| {
                let v = op(members[i], members[j]);
                if index[v] == usize::MAX {
                    missing.get_or_insert_with(|| vec![members[i], members[j], v]);
                    0
                } else {
                    index[v]
                }
            })
            .rows()
        };
        let join = table(&|x, y| self.join(x, y));
        let meet = table(&|x, y| self.meet(x, y));
        let prod = table(&|x, y| self.mul(x, y));
        let ldiv = table(&|x, y| self.ldiv(x, y));
        let rdiv = table(&|x, y| self.rdiv(x, y));
        if let Some(w) = missing {
            return Err(Error::pre("subset closed under the operations", w));
        }
        let map_const = |c: Option<Elem>| -> Result<Option<Elem>> {
            match c {
                None => Ok(None),
                Some(c) if index[c] != usize::MAX => Ok(Some(index[c])),
                Some(c) => Err(Error::pre("subset contains the constants", vec![c])),
            }
        };
        let unit = map_const(self.unit)?;
        let bottom = map_const(self.bottom)?;
        let invol = match &self.invol {
            None => None,
            Some(inv) => {
                let mut out = Vec::with_capacity(m);
                for &x in &members {
                    let v = inv[x];
                    if index[v] == usize::MAX {
                        return Err(Error::pre("subset closed under the involution", vec![x, v]));
                    }
                    out.push(index[v]);
                }
                Some(out)
            }
        };
        let algebra = Algebra::new(RawAlgebra {
            size: m,
            join,
            meet,
            prod,
            ldiv: Some(ldiv),
            rdiv: Some(rdiv),
            unit,
            invol,
            bottom,
            names: Some(members.iter().map(|&x| self.names[x].clone()).collect()),
        })?;
        Ok(Embedded {
            algebra,
            embedding: members,
        })
    }

    /// Relabels elements: element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[Elem]) -> Result<Self> {
        let n = self.n;
        if perm.len() != n {
            return Err(Error::Malformed("permutation has the wrong length".into()));
        }
        let mut inv = vec![usize::MAX; n];
        for (x, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::Malformed("not a permutation".into()));
            }
            inv[p] = x;
        }
        let tab = |t: &Table| Table::from_fn(n, |i, j| perm[t.get(inv[i], inv[j])]).rows();
        Algebra::new(RawAlgebra {
            size: n,
            join: tab(&self.join),
            meet: tab(&self.meet),
            prod: tab(&self.prod),
            ldiv: Some(tab(&self.ldiv)),
            rdiv: Some(tab(&self.rdiv)),
            unit: self.unit.map(|e| perm[e]),
            invol: self
                .invol
                .as_ref()
                .map(|v| (0..n).map(|i| perm[v[inv[i]]]).collect()),
            bottom: self.bottom.map(|b| perm[b]),
            names: Some((0..n).map(|i| self.names[inv[i]].clone()).collect()),
        })
    }

    /// Elements covered by `x` in the lattice order.
    pub fn lower_covers(&self, x: Elem) -> Vec<Elem> {
        (0..self.n)
            .filter(|&y| y != x && self.leq(y, x))
            .filter(|&y| !(0..self.n).any(|z| z != x && z != y && self.leq(y, z) && self.leq(z, x)))
            .collect()
    }

    pub(crate) fn n_pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        (0..self.n).flat_map(move |x| (0..self.n).map(move |y| (x, y)))
    }

    pub(crate) fn n_triples(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        self.n_pairs()
            .flat_map(move |(x, y)| (0..self.n).map(move |z| (x, y, z)))
    }
}

/// A re-indexed subalgebra (or conucleus image) with its embedding into the
/// parent: `embedding[i]` is the parent element of new element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedded {
    pub algebra: Algebra,
    pub embedding: Vec<Elem>,
}

impl Embedded {
    /// The new index of a parent element, if it lies in the image.
    pub fn index_of(&self, parent: Elem) -> Option<Elem> {
        self.embedding.iter().position(|&x| x == parent)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size {}", self.n)?;
        let w = self
            .names
            .iter()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let row = |f: &mut fmt::Formatter<'_>, label: &str, t: &Table| -> fmt::Result {
            writeln!(f, "{label}")?;
            for x in 0..self.n {
                let cells: Vec<String> = (0..self.n)
                    .map(|y| format!("{:>w$}", self.names[t.get(x, y)], w = w))
                    .collect();
                writeln!(f, "  {:>w$} | {}", self.names[x], cells.join(" "), w = w)?;
            }
            Ok(())
        };
        row(f, "meet", &self.meet)?;
        row(f, "join", &self.join)?;
        row(f, "prod", &self.prod)?;
        if let Some(e) = self.unit {
            writeln!(f, "unit {}", self.names[e])?;
        }
        if let Some(inv) = &self.invol {
            let parts: Vec<String> = (0..self.n)
                .map(|x| format!("{}->{}", self.names[x], self.names[inv[x]]))
                .collect();
            writeln!(f, "invol {}", parts.join(" "))?;
        }
        if let Some(b) = self.bottom {
            writeln!(f, "bottom {}", self.names[b])?;
        }
        Ok(())
    }
}
