use std::sync::Arc;

use aura_topology::symbolic::{
    sym_aura_closure, sym_complement, sym_derived_set, sym_intersect, sym_union, SymbolicSet,
    SymbolicSpace,
};
use aura_topology::{AuraSpace, FiniteTopSpace, PointSet, ScopeFunction, Universe};
use proptest::prelude::*;

/// A random space on `n ≤ 6` points: τ generated by a random subbasis, each
/// aura the minimal open set of its point joined with a few others.
fn space() -> impl Strategy<Value = AuraSpace> {
    (1usize..=6).prop_flat_map(|n| {
        let full = (1u64 << n) - 1;
        (
            prop::collection::vec(0..=full, 0..6),
            prop::collection::vec(0..=full, n),
        )
            .prop_map(move |(subbasis, extra)| {
                let u = Arc::new(Universe::numbered(n).unwrap());
                let space =
                    FiniteTopSpace::generate(u, subbasis.into_iter().map(PointSet::from_bits))
                        .unwrap();
                let aura = (0..n)
                    .map(|x| {
                        PointSet::from_bits(extra[x])
                            .iter()
                            .fold(space.minimal_open(x), |acc, y| acc | space.minimal_open(y))
                    })
                    .collect();
                AuraSpace::new(Arc::new(space), ScopeFunction::new(aura)).unwrap()
            })
    })
}

fn triple() -> impl Strategy<Value = (AuraSpace, PointSet, PointSet)> {
    space().prop_flat_map(|s| {
        let full = s.full().bits();
        (Just(s), 0..=full, 0..=full)
            .prop_map(|(s, a, b)| (s, PointSet::from_bits(a), PointSet::from_bits(b)))
    })
}

fn closure_by_definition(s: &AuraSpace, a: PointSet) -> PointSet {
    (0..s.len()).filter(|&x| s.aura(x).intersects(a)).collect()
}

fn derived_by_definition(s: &AuraSpace, a: PointSet) -> PointSet {
    (0..s.len())
        .filter(|&x| s.aura(x).intersects(a.without(x)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn cech_duality_and_derived_laws((s, a, b) in triple()) {
        let n = s.len();
        let (ca, cb) = (s.closure(a), s.closure(b));
        prop_assert_eq!(ca, closure_by_definition(&s, a));
        prop_assert!(s.closure(PointSet::EMPTY).is_empty());
        prop_assert!(a.is_subset(ca));
        prop_assert_eq!(s.closure(a | b), ca | cb);
        prop_assert!(!a.is_subset(b) || ca.is_subset(cb));
        prop_assert_eq!(s.interior(a), s.closure(a.complement(n)).complement(n));
        let (da, db) = (s.derived_set(a), s.derived_set(b));
        prop_assert_eq!(da, derived_by_definition(&s, a));
        prop_assert_eq!(ca, a | da);
        prop_assert_eq!(s.derived_set(a | b), da | db);
        prop_assert!(!a.is_subset(b) || da.is_subset(db));
        prop_assert_eq!(s.is_a_closed(a), da.is_subset(a));
        if s.is_transitive() {
            prop_assert_eq!(s.closure(ca), ca);
        }
    }
}

const WINDOW: u64 = 40;

fn symbolic_set() -> impl Strategy<Value = SymbolicSet> {
    (
        prop::collection::btree_set(1u64..25, 0..8),
        prop::option::of(1u64..30),
    )
        .prop_map(|(finite, tail)| SymbolicSet::new(finite, tail).unwrap())
}

fn window(a: &SymbolicSet) -> Vec<bool> {
    (1..=WINDOW).map(|n| a.contains(n)).collect()
}

fn model() -> impl Strategy<Value = SymbolicSpace> {
    prop_oneof![
        Just(SymbolicSpace::NatSuccessor),
        Just(SymbolicSpace::NatDiscreteAura),
        Just(SymbolicSpace::CofiniteTrivial),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn symbolic_boolean_algebra(a in symbolic_set(), b in symbolic_set(), c in symbolic_set()) {
        let (wa, wb) = (window(&a), window(&b));
        let u = sym_union(&a, &b);
        let i = sym_intersect(&a, &b);
        for k in 0..WINDOW as usize {
            prop_assert_eq!(window(&u)[k], wa[k] || wb[k]);
            prop_assert_eq!(window(&i)[k], wa[k] && wb[k]);
            prop_assert_eq!(window(&sym_complement(&a))[k], !wa[k]);
        }
        prop_assert_eq!(sym_union(&a, &b), sym_union(&b, &a));
        prop_assert_eq!(sym_intersect(&a, &b), sym_intersect(&b, &a));
        prop_assert_eq!(sym_union(&sym_union(&a, &b), &c), sym_union(&a, &sym_union(&b, &c)));
        prop_assert_eq!(
            sym_intersect(&a, &sym_union(&b, &c)),
            sym_union(&sym_intersect(&a, &b), &sym_intersect(&a, &c))
        );
        prop_assert_eq!(sym_complement(&sym_union(&a, &b)), sym_intersect(&sym_complement(&a), &sym_complement(&b)));
        prop_assert_eq!(sym_complement(&sym_complement(&a)), a.clone());
        prop_assert!(sym_union(&a, &sym_complement(&a)).is_all());
        prop_assert!(sym_intersect(&a, &sym_complement(&a)).is_empty());
        prop_assert_eq!(a.is_subset(&b), sym_union(&a, &b) == b);
    }

    #[test]
    fn symbolic_cech_axioms(m in model(), a in symbolic_set(), b in symbolic_set()) {
        prop_assert!(sym_aura_closure(&m, &SymbolicSet::empty()).is_empty());
        let ca = sym_aura_closure(&m, &a);
        prop_assert!(a.is_subset(&ca));
        prop_assert_eq!(sym_aura_closure(&m, &sym_union(&a, &b)), sym_union(&ca, &sym_aura_closure(&m, &b)));
        prop_assert_eq!(ca.clone(), sym_union(&a, &sym_derived_set(&m, &a)));
        // pointwise against the auras on a window
        for n in 1..=WINDOW {
            let aura = m.aura(n).unwrap();
            prop_assert_eq!(ca.contains(n), !sym_intersect(&aura, &a).is_empty());
        }
    }
}
