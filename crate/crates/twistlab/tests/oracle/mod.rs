//! Brute-force reference checks that read only operation tables.
#![allow(dead_code)]

use std::collections::HashMap;

use twistlab_core::{Algebra, Elem, UnaryMap};

/// A plain copy of every table, so checks never go through library helpers.
pub struct Ops {
    pub n: usize,
    pub join: Vec<Vec<Elem>>,
    pub meet: Vec<Vec<Elem>>,
    pub prod: Vec<Vec<Elem>>,
    pub ldiv: Vec<Vec<Elem>>,
    pub rdiv: Vec<Vec<Elem>>,
    pub unit: Option<Elem>,
    pub invol: Option<Vec<Elem>>,
    pub bottom: Option<Elem>,
}

impl Ops {
    pub fn of(a: &Algebra) -> Ops {
        let r = a.to_raw();
        Ops {
            n: r.size,
            join: r.join,
            meet: r.meet,
            prod: r.prod,
            ldiv: r.ldiv.expect("certified algebras carry divisions"),
            rdiv: r.rdiv.expect("certified algebras carry divisions"),
            unit: r.unit,
            invol: r.invol,
            bottom: r.bottom,
        }
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.meet[x][y] == x
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.prod[x][y]
    }

    pub fn neg(&self, x: Elem) -> Elem {
        self.invol.as_ref().expect("involution")[x]
    }
}

fn all3(n: usize) -> impl Iterator<Item = (Elem, Elem, Elem)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

/// Every failed residuated-lattice law, as a short description.
pub fn rl_failures(o: &Ops) -> Vec<String> {
    let n = o.n;
    let mut bad = Vec::new();
    let mut fail = |what: &str, t: &[Elem]| {
        if bad.len() < 8 {
            bad.push(format!("{what} at {t:?}"));
        }
    };
    for x in 0..n {
        if o.join[x][x] != x || o.meet[x][x] != x {
            fail("idempotence", &[x]);
        }
        for y in 0..n {
            if o.join[x][y] != o.join[y][x] || o.meet[x][y] != o.meet[y][x] {
                fail("lattice commutativity", &[x, y]);
            }
            if o.join[x][o.meet[x][y]] != x || o.meet[x][o.join[x][y]] != x {
                fail("absorption", &[x, y]);
            }
        }
    }
    for (x, y, z) in all3(n) {
        if o.join[o.join[x][y]][z] != o.join[x][o.join[y][z]]
            || o.meet[o.meet[x][y]][z] != o.meet[x][o.meet[y][z]]
        {
            fail("lattice associativity", &[x, y, z]);
        }
        if o.prod[o.prod[x][y]][z] != o.prod[x][o.prod[y][z]] {
            fail("associativity", &[x, y, z]);
        }
        let xy_le_z = o.leq(o.prod[x][y], z);
        if xy_le_z != o.leq(y, o.ldiv[x][z]) || xy_le_z != o.leq(x, o.rdiv[z][y]) {
            fail("residuation", &[x, y, z]);
        }
    }
    if let Some(e) = o.unit {
        for x in 0..n {
            if o.prod[e][x] != x || o.prod[x][e] != x {
                fail("unit", &[x]);
            }
        }
    }
    if let Some(b) = o.bottom {
        if (0..n).any(|x| !o.leq(b, x)) {
            fail("bottom", &[b]);
        }
    }
    if let Some(neg) = &o.invol {
        for x in 0..n {
            if neg[neg[x]] != x {
                fail("double negation", &[x]);
            }
            for y in 0..n {
                if o.ldiv[x][neg[y]] != o.rdiv[neg[x]][y] {
                    fail("x\\∼y = ∼x/y", &[x, y]);
                }
            }
            if let Some(e) = o.unit {
                let f = neg[e];
                if neg[x] != o.ldiv[x][f] || neg[x] != o.rdiv[f][x] {
                    fail("∼x = x\\∼e = ∼e/x", &[x]);
                }
            }
        }
    }
    bad
}

/// C1–C5 and T1–T3 on the tables.
pub fn nelson_conucleus_failures(o: &Ops, t: &[Elem]) -> Vec<String> {
    let n = o.n;
    let e = o.unit.expect("unit");
    let mut bad = Vec::new();
    for x in 0..n {
        if !o.leq(t[x], x) {
            bad.push(format!("C1 at {x}"));
        }
        if t[t[x]] != t[x] {
            bad.push(format!("C2 at {x}"));
        }
        if o.mul(t[e], t[x]) != t[x] || o.mul(t[x], t[e]) != t[x] {
            bad.push(format!("C5 at {x}"));
        }
        for y in 0..n {
            if o.leq(x, y) && !o.leq(t[x], t[y]) {
                bad.push(format!("C3 at {x},{y}"));
            }
            if !o.leq(o.mul(t[x], t[y]), t[o.mul(x, y)]) {
                bad.push(format!("C4 at {x},{y}"));
            }
            if t[o.join[x][y]] != o.join[t[x]][t[y]] {
                bad.push(format!("T1 at {x},{y}"));
            }
            if t[o.mul(x, y)] != o.mul(t[x], t[y]) {
                bad.push(format!("T2 at {x},{y}"));
            }
            if !o.leq(o.mul(x, y), o.join[o.mul(t[x], y)][o.mul(x, t[y])]) {
                bad.push(format!("T3 at {x},{y}"));
            }
        }
    }
    bad.truncate(8);
    bad
}

/// Whether `f` preserves every operation both algebras carry.
pub fn is_homomorphism(a: &Ops, b: &Ops, f: &[Elem]) -> bool {
    let binary = [
        (&a.join, &b.join),
        (&a.meet, &b.meet),
        (&a.prod, &b.prod),
        (&a.ldiv, &b.ldiv),
        (&a.rdiv, &b.rdiv),
    ];
    for (s, t) in binary {
        for x in 0..a.n {
            for y in 0..a.n {
                if f[s[x][y]] != t[f[x]][f[y]] {
                    return false;
                }
            }
        }
    }
    if let (Some(u), Some(v)) = (a.unit, b.unit) {
        if f[u] != v {
            return false;
        }
    }
    if let (Some(s), Some(t)) = (&a.invol, &b.invol) {
        if (0..a.n).any(|x| f[s[x]] != t[f[x]]) {
            return false;
        }
    }
    true
}

pub fn is_injective(f: &[Elem]) -> bool {
    let mut seen = f.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == f.len()
}

pub fn is_bijection(f: &[Elem], target: usize) -> bool {
    f.len() == target && is_injective(f)
}

/// Operations of a twist over `l`, written out pair by pair.
pub struct TwistFormulas<'a> {
    pub l: &'a Ops,
}

type Pair = (Elem, Elem);

impl TwistFormulas<'_> {
    pub fn join(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        (self.l.join[a][c], self.l.meet[b][d])
    }

    pub fn meet(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        (self.l.meet[a][c], self.l.join[b][d])
    }

    /// `(a,b)(a',b') = (aa', b'/a ∧ a'\b)`.
    pub fn prod(&self, (a, b): Pair, (a2, b2): Pair) -> Pair {
        let l = self.l;
        (l.prod[a][a2], l.meet[l.rdiv[b2][a]][l.ldiv[a2][b]])
    }

    /// `(a,b)\(a',b') = (a\a' ∧ b/b', b'a)`.
    pub fn ldiv(&self, (a, b): Pair, (a2, b2): Pair) -> Pair {
        let l = self.l;
        (l.meet[l.ldiv[a][a2]][l.rdiv[b][b2]], l.prod[b2][a])
    }

    /// `(a',b')/(a,b) = (a'/a ∧ b'\b, ab')`.
    pub fn rdiv(&self, (a2, b2): Pair, (a, b): Pair) -> Pair {
        let l = self.l;
        (l.meet[l.rdiv[a2][a]][l.ldiv[b2][b]], l.prod[a][b2])
    }

    pub fn neg(&self, (a, b): Pair) -> Pair {
        (b, a)
    }

    /// `ab ∨ ba <= ι`.
    pub fn member(&self, (a, b): Pair, iota: Elem) -> bool {
        let l = self.l;
        l.leq(l.join[l.prod[a][b]][l.prod[b][a]], iota)
    }

    /// `τ_Tw(a,b) = (a, ι/a ∧ a\ι)`.
    pub fn tau(&self, (a, _): Pair, iota: Elem) -> Pair {
        let l = self.l;
        (a, l.meet[l.rdiv[iota][a]][l.ldiv[a][iota]])
    }
}

/// Checks that `pairs[x]` labels the twist algebra `tw` consistently with
/// the pair formulas.
pub fn twist_matches_formulas(l: &Algebra, iota: Option<Elem>, tw: &Algebra, pairs: &[Pair]) -> Result<(), String> {
    let lo = Ops::of(l);
    let f = TwistFormulas { l: &lo };
    let t = Ops::of(tw);
    let lookup: HashMap<Pair, Elem> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let index = |p: Pair| lookup.get(&p).copied();
    for x in 0..t.n {
        let px = pairs[x];
        if let Some(neg) = &t.invol {
            if pairs[neg[x]] != f.neg(px) {
                return Err(format!("∼ at {px:?}"));
            }
        }
        for y in 0..t.n {
            let py = pairs[y];
            let ops: [(&str, &Vec<Vec<Elem>>, Pair); 5] = [
                ("∨", &t.join, f.join(px, py)),
                ("∧", &t.meet, f.meet(px, py)),
                ("·", &t.prod, f.prod(px, py)),
                ("\\", &t.ldiv, f.ldiv(px, py)),
                ("/", &t.rdiv, f.rdiv(px, py)),
            ];
            for (name, table, want) in ops {
                if Some(table[x][y]) != index(want) {
                    return Err(format!("{px:?} {name} {py:?} should be {want:?}"));
                }
            }
        }
    }
    if let Some(iota) = iota {
        let e = lo.unit.expect("base has a unit");
        if t.unit.map(|u| pairs[u]) != Some((e, iota)) {
            return Err("unit is not (e, ι)".into());
        }
    }
    Ok(())
}

/// `τ` as a plain table.
pub fn table(t: &UnaryMap) -> Vec<Elem> {
    (0..t.table.len()).map(|x| t.apply(x)).collect()
}

/// K1–K5 with `x→y = x\y`; returns the failed axiom names.
pub fn kalman_failures(o: &Ops) -> Vec<&'static str> {
    let n = o.n;
    let e = o.unit.expect("unit");
    let imp = |x: Elem, y: Elem| o.ldiv[x][y];
    let (j, m) = (&o.join, &o.meet);
    let mut bad = Vec::new();
    if (0..n).any(|x| imp(imp(x, e), e) != x) {
        bad.push("K1");
    }
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    if pairs().any(|(x, y)| m[o.mul(x, y)][e] != o.mul(m[x][e], m[y][e])) {
        bad.push("K2");
    }
    if pairs().any(|(x, y)| m[imp(m[x][e], y)][imp(x, j[y][e])] != imp(x, y)) {
        bad.push("K3");
    }
    if pairs().any(|(x, y)| m[e][j[x][y]] != j[m[e][x]][m[e][y]]) {
        bad.push("K4");
    }
    if pairs().any(|(x, y)| m[x][j[y][e]] != j[m[x][y]][m[x][e]]) {
        bad.push("K5");
    }
    bad
}

/// Constraint bits, in the order commutative, integral, involutive,
/// distributive, bounded, idempotent, odd.
pub const COMBINATIONS: usize = 128;

fn permutations(n: usize) -> Vec<Vec<Elem>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every labeled lattice order on `0..n`, as `leq[x][y]`.
fn labeled_lattices(n: usize) -> Vec<Vec<Vec<bool>>> {
    let mut out = Vec::new();
    for bits in 0u64..1 << (n * n) {
        let leq: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| bits >> (x * n + y) & 1 == 1).collect()).collect();
        let partial = (0..n).all(|x| leq[x][x])
            && (0..n).all(|x| (0..n).all(|y| x == y || !(leq[x][y] && leq[y][x])))
            && all3(n).all(|(x, y, z)| !(leq[x][y] && leq[y][z]) || leq[x][z]);
        if partial && lattice_ops(&leq).is_some() {
            out.push(leq);
        }
    }
    out
}

type Tables = (Vec<Vec<Elem>>, Vec<Vec<Elem>>);

fn lattice_ops(leq: &[Vec<bool>]) -> Option<Tables> {
    let n = leq.len();
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let ubs: Vec<Elem> = (0..n).filter(|&u| leq[x][u] && leq[y][u]).collect();
            let lbs: Vec<Elem> = (0..n).filter(|&u| leq[u][x] && leq[u][y]).collect();
            join[x][y] = *ubs.iter().find(|&&u| ubs.iter().all(|&v| leq[u][v]))?;
            meet[x][y] = *lbs.iter().find(|&&u| lbs.iter().all(|&v| leq[v][u]))?;
        }
    }
    Some((join, meet))
}

/// Residual `max{y : xy <= z}` (or `max{y : yx <= z}` when `left` is false),
/// if the set is a principal downset.
fn residual(leq: &[Vec<bool>], prod: &[Vec<Elem>], x: Elem, z: Elem, left: bool) -> Option<Elem> {
    let n = leq.len();
    let ok = |y: Elem| leq[if left { prod[x][y] } else { prod[y][x] }][z];
    let set: Vec<Elem> = (0..n).filter(|&y| ok(y)).collect();
    let top = *set.iter().find(|&&m| set.iter().all(|&y| leq[y][m]))?;
    (0..n).all(|y| ok(y) == leq[y][top]).then_some(top)
}

struct Found {
    flags: u8,
    plain: Vec<Elem>,
    /// One key per admissible `∼e`, flagged when `∼e = e`.
    involutive: Vec<(Vec<Elem>, bool)>,
}

fn key(perms: &[Vec<Elem>], meet: &[Vec<Elem>], prod: &[Vec<Elem>], f: Option<Elem>) -> Vec<Elem> {
    let n = meet.len();
    perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (x, &px) in p.iter().enumerate() {
                inv[px] = x;
            }
            let mut k = Vec::with_capacity(2 * n * n + 1);
            for i in 0..n {
                for j in 0..n {
                    k.push(p[meet[inv[i]][inv[j]]]);
                }
            }
            for i in 0..n {
                for j in 0..n {
                    k.push(p[prod[inv[i]][inv[j]]]);
                }
            }
            k.push(f.map_or(usize::MAX, |f| p[f]));
            k
        })
        .min()
        .expect("at least one permutation")
}

/// Isomorphism-class counts of residuated lattices on `n` elements for each
/// of the 128 constraint combinations, by trying every product table on
/// every labeled lattice.
pub fn brute_force_counts(n: usize) -> Vec<usize> {
    let perms = permutations(n);
    let mut found = Vec::new();
    for leq in labeled_lattices(n) {
        let (join, meet) = lattice_ops(&leq).expect("filtered to lattices");
        let distributive = all3(n).all(|(x, y, z)| meet[x][join[y][z]] == join[meet[x][y]][meet[x][z]]);
        let top = (0..n).find(|&t| (0..n).all(|x| leq[x][t])).expect("finite lattice");
        let mut prod = vec![vec![0; n]; n];
        'tables: loop {
            let assoc = all3(n).all(|(x, y, z)| prod[prod[x][y]][z] == prod[x][prod[y][z]]);
            let unit = (0..n).find(|&e| (0..n).all(|x| prod[e][x] == x && prod[x][e] == x));
            if let (true, Some(e)) = (assoc, unit) {
                let mut ldiv = vec![vec![0; n]; n];
                let mut rdiv = vec![vec![0; n]; n];
                let mut residuated = true;
                'res: for x in 0..n {
                    for z in 0..n {
                        match (residual(&leq, &prod, x, z, true), residual(&leq, &prod, x, z, false)) {
                            (Some(l), Some(r)) => {
                                ldiv[x][z] = l;
                                rdiv[z][x] = r;
                            }
                            _ => {
                                residuated = false;
                                break 'res;
                            }
                        }
                    }
                }
                if residuated {
                    let commutative = (0..n).all(|x| (0..n).all(|y| prod[x][y] == prod[y][x]));
                    let idempotent = (0..n).all(|x| prod[x][x] == x);
                    let mut flags = 0u8;
                    for (on, bit) in [(commutative, 1), (e == top, 2), (distributive, 8), (idempotent, 32)] {
                        if on {
                            flags |= bit;
                        }
                    }
                    let involutive = (0..n)
                        .filter(|&f| {
                            (0..n).all(|x| ldiv[x][f] == rdiv[f][x] && ldiv[ldiv[x][f]][f] == x)
                        })
                        .map(|f| (key(&perms, &meet, &prod, Some(f)), f == e))
                        .collect();
                    found.push(Found {
                        flags,
                        plain: key(&perms, &meet, &prod, None),
                        involutive,
                    });
                }
            }
            for i in 0..n * n {
                let (x, y) = (i / n, i % n);
                prod[x][y] += 1;
                if prod[x][y] < n {
                    continue 'tables;
                }
                prod[x][y] = 0;
            }
            break;
        }
    }
    (0..COMBINATIONS)
        .map(|c| {
            let c = c as u8;
            let required = c & (1 | 2 | 8 | 32);
            let mut keys: Vec<&Vec<Elem>> = Vec::new();
            for a in found.iter().filter(|a| a.flags & required == required) {
                if c & (4 | 64) != 0 {
                    keys.extend(a.involutive.iter().filter(|(_, odd)| c & 64 == 0 || *odd).map(|(k, _)| k));
                } else {
                    keys.push(&a.plain);
                }
            }
            keys.sort();
            keys.dedup();
            keys.len()
        })
        .collect()
}
