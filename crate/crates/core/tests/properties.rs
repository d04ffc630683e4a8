//! Algebraic invariants as property tests over the corpus and every
//! enumerated algebra with at most five elements.

use std::sync::OnceLock;

use proptest::prelude::*;
use reslat::corpus::{builtin, builtin_algebra, parse_spec, render_spec, KEYS};
use reslat::enumerate::enumerate_residuated;
use reslat::filters::{self, all_filters, generated_filter, is_filter};
use reslat::morphism::is_isomorphic;
use reslat::quotient::{dense_quotient, quotient};
use reslat::{direct_product, validate, ElemSet, ResiduatedLattice};

fn population() -> &'static [ResiduatedLattice] {
    static POP: OnceLock<Vec<ResiduatedLattice>> = OnceLock::new();
    POP.get_or_init(|| {
        let mut all: Vec<ResiduatedLattice> = KEYS.iter().map(|k| builtin_algebra(k).unwrap()).collect();
        for n in 1..=5 {
            all.extend(enumerate_residuated(n).unwrap());
        }
        all
    })
}

/// An algebra with three elements and a subset drawn from it.
fn algebra_and_elements() -> impl Strategy<Value = (&'static ResiduatedLattice, usize, usize, usize, ElemSet)> {
    (0..population().len(), any::<[usize; 3]>(), any::<u64>()).prop_map(|(i, [a, b, c], bits)| {
        let l = &population()[i];
        let n = l.n();
        (l, a % n, b % n, c % n, ElemSet::from_bits(bits & l.full().bits()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn residuation_identities((l, a, b, c, _) in algebra_and_elements()) {
        prop_assert!(l.leq(l.prod(a, l.imp(a, b)), b));
        prop_assert_eq!(l.imp(a, l.imp(b, c)), l.imp(l.prod(a, b), c));
        prop_assert_eq!(l.imp(l.join(a, b), c), l.meet(l.imp(a, c), l.imp(b, c)));
        prop_assert_eq!(l.prod(a, l.join(b, c)), l.join(l.prod(a, b), l.prod(a, c)));
        prop_assert!(l.leq(a, l.neg(l.neg(a))));
        prop_assert_eq!(l.neg(l.neg(l.neg(a))), l.neg(a));
        prop_assert_eq!(l.leq(a, b), l.imp(a, b) == l.top());
    }

    #[test]
    fn generated_filter_is_least((l, _a, _b, _c, x) in algebra_and_elements()) {
        let g = generated_filter(l, x).members;
        prop_assert!(is_filter(l, g));
        prop_assert!(x.is_subset(g));
        for f in all_filters(l).unwrap() {
            if x.is_subset(f.members) {
                prop_assert!(g.is_subset(f.members));
            }
        }
    }

    #[test]
    fn projection_preserves_order_and_operations((l, a, b, _c, x) in algebra_and_elements()) {
        let f = generated_filter(l, x).members;
        let q = quotient(l, f).unwrap();
        let p = |e| q.projection.apply(e);
        if l.leq(a, b) {
            prop_assert!(q.algebra.leq(p(a), p(b)));
        }
        prop_assert_eq!(p(l.prod(a, b)), q.algebra.prod(p(a), p(b)));
        prop_assert_eq!(p(l.imp(a, b)), q.algebra.imp(p(a), p(b)));
        prop_assert_eq!(p(a) == p(b), f.contains(l.biimp(a, b)));
        prop_assert_eq!(q.preimage(ElemSet::singleton(p(l.top()))), f);
    }

    #[test]
    fn stone_opens_are_additive((l, _a, _b, _c, x) in algebra_and_elements()) {
        let spec = filters::spectrum(l).unwrap();
        let y = l.full().difference(x);
        prop_assert_eq!(spec.open_of(l.full()), spec.open_of(x).union(spec.open_of(y)));
        let by_points: ElemSet = spec.points.iter().enumerate()
            .filter(|(_, p)| !x.is_subset(p.members))
            .map(|(i, _)| i)
            .collect();
        prop_assert_eq!(spec.open_of(x), by_points);
    }

    #[test]
    fn center_and_regular_elements((l, a, b, _c, _x) in algebra_and_elements()) {
        let center = l.boolean_center();
        let reg = l.regular_elements();
        prop_assert!(reg.contains(l.neg(a)));
        prop_assert!(center.is_subset(reg));
        if center.contains(a) && center.contains(b) {
            for r in [l.join(a, b), l.meet(a, b), l.prod(a, b), l.imp(a, b)] {
                prop_assert!(center.contains(r));
            }
            prop_assert_eq!(l.prod(a, b), l.meet(a, b));
        }
    }

    #[test]
    fn dense_within_radical_and_both_radicals_agree(i in 0..population().len()) {
        let l = &population()[i];
        let rad = filters::radical(l).unwrap().members;
        prop_assert!(l.dense_set().is_subset(rad));
        prop_assert_eq!(filters::radical_by_intersection(l).unwrap(), filters::radical_by_formula(l));
        let p = dense_quotient(l).unwrap();
        prop_assert_eq!(p.algebra.dense_set().len(), 1);
    }

    #[test]
    fn products_validate_and_multiply_centers(i in 0..population().len(), j in 0..population().len()) {
        let (a, b) = (&population()[i], &population()[j]);
        prop_assume!(a.n() * b.n() <= 20);
        let p = direct_product(a, b).unwrap();
        prop_assert_eq!(p.boolean_center().len(), a.boolean_center().len() * b.boolean_center().len());
        prop_assert_eq!(p.dense_set().len(), a.dense_set().len() * b.dense_set().len());
        let again = validate(&p.to_spec()).unwrap();
        prop_assert!(is_isomorphic(&again, &p));
    }

    #[test]
    fn file_format_round_trips_under_whitespace(k in 0..KEYS.len(), pad in "[ \t\n]{0,3}") {
        let spec = builtin(KEYS[k]).unwrap().spec;
        let text = render_spec(&spec);
        let spaced = text.replace(",", &format!(",{pad}")).replace("[", &format!("[{pad}"));
        let back = parse_spec(&spaced).unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(render_spec(&back), text);
    }
}
