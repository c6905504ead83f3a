use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;
use twistlab_core::search::{
    canonical_form, canonical_key, enumerate_residuated_lattices, find_isomorphism, Constraints,
    SearchSpec,
};
use twistlab_core::{representation, twist, Algebra};

fn pool() -> &'static [Algebra] {
    static POOL: OnceLock<Vec<Algebra>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut all = Vec::new();
        for n in 1..=4 {
            all.extend(enumerate_residuated_lattices(&SearchSpec::new(n)).unwrap());
        }
        all.extend(
            enumerate_residuated_lattices(&SearchSpec::new(5).with(Constraints::COMMUTATIVE)).unwrap(),
        );
        all
    })
}

fn involutive_pool() -> &'static [Algebra] {
    static POOL: OnceLock<Vec<Algebra>> = OnceLock::new();
    POOL.get_or_init(|| {
        (1..=6)
            .flat_map(|n| {
                enumerate_residuated_lattices(&SearchSpec::new(n).with(Constraints::INVOLUTIVE)).unwrap()
            })
            .collect()
    })
}

fn pick(pool: &[Algebra], i: Index) -> &Algebra {
    &pool[i.index(pool.len())]
}

fn elems(a: &Algebra, ix: &[Index]) -> Vec<usize> {
    ix.iter().map(|i| i.index(a.size())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_distributes_over_join(k in any::<Index>(), ix in prop::array::uniform3(any::<Index>())) {
        let a = pick(pool(), k);
        let [x, y, z] = elems(a, &ix)[..] else { unreachable!() };
        prop_assert_eq!(a.mul(x, a.join(y, z)), a.join(a.mul(x, y), a.mul(x, z)));
        prop_assert_eq!(a.mul(a.join(y, z), x), a.join(a.mul(y, x), a.mul(z, x)));
    }

    #[test]
    fn residuation_law(k in any::<Index>(), ix in prop::array::uniform3(any::<Index>())) {
        let a = pick(pool(), k);
        let [x, y, z] = elems(a, &ix)[..] else { unreachable!() };
        let xy = a.leq(a.mul(x, y), z);
        prop_assert_eq!(xy, a.leq(y, a.ldiv(x, z)));
        prop_assert_eq!(xy, a.leq(x, a.rdiv(z, y)));
    }

    #[test]
    fn order_from_meet_agrees_with_join(k in any::<Index>(), ix in prop::array::uniform2(any::<Index>())) {
        let a = pick(pool(), k);
        let [x, y] = elems(a, &ix)[..] else { unreachable!() };
        prop_assert_eq!(a.meet(x, y) == x, a.join(x, y) == y);
        prop_assert_eq!(a.leq(x, y), a.join(x, y) == y);
    }

    #[test]
    fn involution_identities(k in any::<Index>(), ix in prop::array::uniform2(any::<Index>())) {
        let a = pick(involutive_pool(), k);
        let [x, y] = elems(a, &ix)[..] else { unreachable!() };
        prop_assert_eq!(a.neg(a.neg(x)), x);
        prop_assert_eq!(a.neg(a.join(x, y)), a.meet(a.neg(x), a.neg(y)));
        prop_assert_eq!(a.ldiv(x, y), a.neg(a.mul(a.neg(y), x)));
        prop_assert_eq!(a.rdiv(y, x), a.neg(a.mul(x, a.neg(y))));
    }

    #[test]
    fn canonical_form_ignores_labels(k in any::<Index>(), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let a = pick(pool(), k);
        let perm: Vec<usize> = perm.into_iter().filter(|&p| p < a.size()).collect();
        let b = a.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_key(a), canonical_key(&b));
        let (ca, cb) = (canonical_form(a), canonical_form(&b));
        prop_assert_eq!(ca.prod_table(), cb.prod_table());
        let iso = find_isomorphism(a, &b).unwrap();
        prop_assert!(iso.verify(a, &b).unwrap().holds);
    }

    #[test]
    fn twist_tau_and_psi(k in any::<Index>(), i in any::<Index>()) {
        let l = pick(pool(), k);
        let iota = i.index(l.size());
        prop_assume!(l.is_cyclic_element(iota));
        let tw = twist::twist(l, iota).unwrap();
        let tau = twist::tau_tw(&tw).unwrap();
        let t = &tw.algebra;
        for x in t.elements() {
            prop_assert_eq!(t.neg(t.neg(x)), x);
            prop_assert_eq!(tau.apply(tau.apply(x)), tau.apply(x));
            prop_assert!(t.leq(tau.apply(x), x));
        }
        let ps = representation::psi(l, iota).unwrap();
        prop_assert_eq!(ps.image.algebra.size(), l.size());
        prop_assert!(representation::adjunction_on_base(l, iota).unwrap().holds);
    }
}
