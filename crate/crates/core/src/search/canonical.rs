use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem, Table};

/// A finite structure seen only through its tables: binary operations,
/// unary maps and (possibly absent) constants.
pub(crate) struct Structure<'a> {
    pub n: usize,
    pub binary: Vec<&'a Table>,
    pub unary: Vec<&'a [Elem]>,
    pub constants: Vec<Option<Elem>>,
}

impl<'a> Structure<'a> {
    /// Join and divisions are determined by meet and product, so they are left out.
    pub fn of_algebra(a: &'a Algebra) -> Self {
        Structure {
            n: a.size(),
            binary: vec![a.meet_table(), a.prod_table()],
            unary: a.involution().into_iter().collect(),
            constants: vec![a.unit(), a.bottom()],
        }
    }

    fn initial_colors(&self) -> Vec<usize> {
        let keys: Vec<Vec<usize>> = (0..self.n)
            .map(|x| {
                let mut k = Vec::new();
                k.extend(self.constants.iter().map(|c| usize::from(*c == Some(x))));
                k.extend(self.unary.iter().map(|u| usize::from(u[x] == x)));
                k.extend(self.binary.iter().map(|t| usize::from(t.get(x, x) == x)));
                k
            })
            .collect();
        renumber(&keys)
    }

    fn refine(&self, colors: &mut Vec<usize>) {
        let mut classes = count_classes(colors);
        loop {
            let keys: Vec<Vec<usize>> = (0..self.n)
                .map(|x| {
                    let mut k = vec![colors[x]];
                    k.extend(self.unary.iter().map(|u| colors[u[x]]));
                    let mut rows: Vec<Vec<usize>> = (0..self.n)
                        .map(|y| {
                            let mut r = vec![colors[y]];
                            for t in &self.binary {
                                for v in [t.get(x, y), t.get(y, x)] {
                                    r.extend([colors[v], usize::from(v == x), usize::from(v == y)]);
                                }
                            }
                            r
                        })
                        .collect();
                    rows.sort_unstable();
                    k.extend(rows.into_iter().flatten());
                    k
                })
                .collect();
            *colors = renumber(&keys);
            let now = count_classes(colors);
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    /// The structure relabeled by `perm` (`x ↦ perm[x]`), flattened.
    fn encode(&self, perm: &[Elem]) -> Vec<usize> {
        let n = self.n;
        let mut inv = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let mut out = vec![n, self.binary.len(), self.unary.len()];
        out.extend(self.constants.iter().map(|c| c.map_or(0, |c| perm[c] + 1)));
        for u in &self.unary {
            out.extend((0..n).map(|i| perm[u[inv[i]]]));
        }
        for t in &self.binary {
            for i in 0..n {
                out.extend((0..n).map(|j| perm[t.get(inv[i], inv[j])]));
            }
        }
        out
    }

    /// The labeling with the least encoding among all leaves of the
    /// individualization-refinement tree, and that encoding. Automorphisms
    /// found at equal leaves prune sibling subtrees in the same orbit.
    pub fn canonical(&self) -> (Vec<Elem>, Vec<usize>) {
        let mut colors = self.initial_colors();
        self.refine(&mut colors);
        let mut best: Option<(Vec<Elem>, Vec<usize>)> = None;
        let mut autos = Vec::new();
        self.search(colors, &mut Vec::new(), &mut best, &mut autos);
        best.expect("the search tree has at least one leaf")
    }

    fn search(
        &self,
        colors: Vec<usize>,
        path: &mut Vec<Elem>,
        best: &mut Option<(Vec<Elem>, Vec<usize>)>,
        autos: &mut Vec<Vec<Elem>>,
    ) {
        let n = self.n;
        let mut sizes = vec![0; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            let code = self.encode(&colors);
            match best {
                Some((perm, b)) if code == *b => {
                    let mut inv = vec![0; n];
                    for (x, &p) in perm.iter().enumerate() {
                        inv[p] = x;
                    }
                    autos.push(colors.iter().map(|&c| inv[c]).collect());
                }
                Some((_, b)) if code > *b => {}
                _ => *best = Some((colors, code)),
            }
            return;
        };
        let mut explored: Vec<Elem> = Vec::new();
        for v in (0..n).filter(|&x| colors[x] == target) {
            let orbit = orbits(n, autos.iter().filter(|g| path.iter().all(|&p| g[p] == p)));
            if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                continue;
            }
            let keys: Vec<Vec<usize>> = (0..n)
                .map(|x| vec![colors[x], usize::from(x != v)])
                .collect();
            let mut next = renumber(&keys);
            self.refine(&mut next);
            path.push(v);
            self.search(next, path, best, autos);
            path.pop();
            explored.push(v);
        }
    }
}

/// Orbit representatives under the group generated by `gens`.
fn orbits<'g>(n: usize, gens: impl Iterator<Item = &'g Vec<Elem>>) -> Vec<Elem> {
    fn find(parent: &mut [Elem], x: Elem) -> Elem {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut parent: Vec<Elem> = (0..n).collect();
    for g in gens {
        for (x, &gx) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
            parent[a.max(b)] = a.min(b);
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

/// Dense colors ordered by key.
fn renumber(keys: &[Vec<usize>]) -> Vec<usize> {
    let mut distinct: Vec<&Vec<usize>> = keys.iter().collect();
    distinct.sort_unstable();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(&k).expect("key is present"))
        .collect()
}

/// The relabeling `x ↦ perm[x]` taking `a` to its canonical form.
pub fn canonical_labeling(a: &Algebra) -> Vec<Elem> {
    Structure::of_algebra(a).canonical().0
}

/// A complete isomorphism invariant: equal keys iff isomorphic algebras
/// (same constants and involution present).
pub fn canonical_key(a: &Algebra) -> Vec<usize> {
    Structure::of_algebra(a).canonical().1
}

/// The canonical relabeling of `a`, with element names reset to indices.
pub fn canonical_form(a: &Algebra) -> Algebra {
    let perm = canonical_labeling(a);
    a.permuted(&perm)
        .expect("a relabeling of a certified algebra is certified")
        .with_names((0..a.size()).map(|i| i.to_string()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn canonical_form_is_idempotent() {
        for (_, a) in fixtures::bases() {
            let c = canonical_form(&a);
            assert_eq!(canonical_form(&c), c);
        }
    }

    #[test]
    fn relabelings_share_a_key() {
        let l3 = fixtures::lukasiewicz3();
        let p = l3.permuted(&[1, 2, 0]).unwrap();
        assert_eq!(canonical_key(&l3), canonical_key(&p));
        assert_eq!(canonical_form(&l3), canonical_form(&p));
    }

    #[test]
    fn distinct_chains_have_distinct_keys() {
        let l3 = fixtures::lukasiewicz3()
            .without_involution()
            .without_bottom();
        let g3 = fixtures::goedel3().without_bottom();
        assert_ne!(canonical_key(&l3), canonical_key(&g3));
    }
}
