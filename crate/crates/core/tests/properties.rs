use std::sync::Arc;

use proptest::prelude::*;

use pftopo::construction::generate_from_subbase;
use pftopo::expr::{evaluate, parse, ExprAst};
use pftopo::topology::check_axioms;
use pftopo::{
    balanced, load_family, rank_of, rho_equivalent, save_family, Family, Grade, InclusionMode, MembershipTriple,
    PictureFuzzySet, Universe,
};

const MODES: [InclusionMode; 2] = [InclusionMode::PaperLiteral, InclusionMode::NeutralReversed];

/// Admissible triples on the 0.05 grid.
fn triple() -> impl Strategy<Value = MembershipTriple> {
    (0u16..=20)
        .prop_flat_map(|m| (Just(m), 0..=20 - m))
        .prop_flat_map(|(m, r)| (Just(m), Just(r), 0..=20 - m - r))
        .prop_map(|(m, r, s)| MembershipTriple::from_raw(m * 500, r * 500, s * 500).unwrap())
}

fn universe(n: usize) -> Arc<Universe> {
    Universe::indexed(n).unwrap()
}

fn set_on(n: usize) -> impl Strategy<Value = PictureFuzzySet> {
    prop::collection::vec(triple(), n).prop_map(move |t| PictureFuzzySet::new(&universe(n), t).unwrap())
}

fn sets<const K: usize>() -> impl Strategy<Value = [PictureFuzzySet; K]> {
    (1usize..=3).prop_flat_map(|n| prop::array::uniform::<_, K>(set_on(n)))
}

fn inner_set_on(n: usize) -> impl Strategy<Value = PictureFuzzySet> {
    set_on(n).prop_filter("not I or O", |s| !s.is_boundary())
}

fn subbase() -> impl Strategy<Value = Family> {
    (1usize..=3)
        .prop_flat_map(|n| prop::collection::vec(inner_set_on(n), 1..=4).prop_map(move |v| (n, v)))
        .prop_map(|(n, v)| {
            let mut f = Family::new(&universe(n));
            for (i, s) in v.into_iter().enumerate() {
                f.insert(format!("K{}", i + 1), s).unwrap();
            }
            f
        })
}

fn ast() -> impl Strategy<Value = ExprAst> {
    let leaf = prop_oneof![
        Just(ExprAst::Full),
        Just(ExprAst::Null),
        "[A-HJ-NP-Z_][a-z0-9_]{0,3}".prop_map(ExprAst::Name),
    ];
    leaf.prop_recursive(4, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| ExprAst::union(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| ExprAst::intersection(l, r)),
            inner.prop_map(ExprAst::complement),
        ]
    })
}

fn u(a: &PictureFuzzySet, b: &PictureFuzzySet) -> PictureFuzzySet {
    a.union(b).unwrap()
}

fn n(a: &PictureFuzzySet, b: &PictureFuzzySet) -> PictureFuzzySet {
    a.intersection(b).unwrap()
}

proptest! {
    #[test]
    fn grade_text_round_trips(raw in 0u16..=10_000) {
        let g = Grade::from_raw(raw).unwrap();
        prop_assert_eq!(g.to_string().parse::<Grade>().unwrap(), g);
    }

    #[test]
    fn lattice_identities([a, b, c] in sets::<3>()) {
        prop_assert_eq!(u(&a, &b), u(&b, &a));
        prop_assert_eq!(n(&a, &b), n(&b, &a));
        prop_assert_eq!(u(&u(&a, &b), &c), u(&a, &u(&b, &c)));
        prop_assert_eq!(n(&n(&a, &b), &c), n(&a, &n(&b, &c)));
        prop_assert_eq!(u(&a, &n(&b, &c)), n(&u(&a, &b), &u(&a, &c)));
        prop_assert_eq!(n(&a, &u(&b, &c)), u(&n(&a, &b), &n(&a, &c)));
        prop_assert_eq!(u(&a, &a), a.clone());
        prop_assert_eq!(n(&a, &a), a.clone());
    }

    #[test]
    fn complement_laws([a, b] in sets::<2>()) {
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(u(&a, &b).complement(), n(&a.complement(), &b.complement()));
        prop_assert_eq!(n(&a, &b).complement(), u(&a.complement(), &b.complement()));
    }

    #[test]
    fn operations_stay_admissible([a, b] in sets::<2>()) {
        prop_assert!(u(&a, &b).is_admissible());
        prop_assert!(n(&a, &b).is_admissible());
        prop_assert!(a.complement().is_admissible());
    }

    #[test]
    fn inclusion_is_a_partial_order([a, b, c] in sets::<3>()) {
        for mode in MODES {
            prop_assert!(a.includes(&a, mode).unwrap());
            if a.includes(&b, mode).unwrap() && b.includes(&a, mode).unwrap() {
                prop_assert_eq!(&a, &b);
            }
            if a.includes(&b, mode).unwrap() && b.includes(&c, mode).unwrap() {
                prop_assert!(a.includes(&c, mode).unwrap());
            }
        }
    }

    #[test]
    fn literal_inclusion_is_meet_absorption([a, b] in sets::<2>()) {
        let lit = InclusionMode::PaperLiteral;
        prop_assert_eq!(a.includes(&b, lit).unwrap(), n(&a, &b) == a);
        prop_assert!(n(&a, &b).includes(&a, lit).unwrap());
    }

    #[test]
    fn equality_is_parallel_and_balanced([a, b] in sets::<2>()) {
        let both = rho_equivalent(&a, &b).unwrap() && balanced(&a, &b).unwrap();
        prop_assert_eq!(a == b, both);
    }

    #[test]
    fn balanced_means_union_and_meet_absorb([a, b] in sets::<2>()) {
        let absorbs = u(&a, &b) == a && n(&b, &a) == a;
        prop_assert_eq!(absorbs, balanced(&a, &b).unwrap());
    }

    #[test]
    fn printed_expressions_reparse(e in ast()) {
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn syntax_errors_point_inside_the_input(text in "[a-c|&~() ]{0,12}") {
        if let Err(e) = parse(&text) {
            prop_assert!(e.offset <= text.len());
            prop_assert!(!e.expected.is_empty());
        }
    }

    #[test]
    fn de_morgan_through_the_evaluator(s in subbase()) {
        let lhs = parse("~(K1 | K1 & ~K1)").unwrap();
        let rhs = parse("~K1 & (~K1 | K1)").unwrap();
        prop_assert_eq!(evaluate(&lhs, &s).unwrap(), evaluate(&rhs, &s).unwrap());
    }

    #[test]
    fn documents_round_trip(s in subbase()) {
        let text = save_family(&s);
        let back = load_family(text.as_bytes()).unwrap();
        prop_assert!(back.same_values(&s));
        prop_assert_eq!(back.len(), s.len());
        for m in &s {
            prop_assert_eq!(&back.get(&m.name).unwrap().set, &m.set);
        }
        prop_assert_eq!(save_family(&back), text);
    }

    #[test]
    fn generated_families_are_topologies(s in subbase()) {
        let t = generate_from_subbase(&s, false).unwrap();
        let report = check_axioms(&t.topology).unwrap();
        prop_assert!(report.is_topology, "{:?}", report.violations.first());
        prop_assert!(s.value_subset_of(&t.topology));
        for m in &t.topology {
            prop_assert_eq!(&evaluate(&t.provenance[&m.name], &s).unwrap(), &m.set);
        }
    }

    #[test]
    fn generation_is_monotone_and_idempotent(s in subbase()) {
        let t = generate_from_subbase(&s, false).unwrap().topology;
        let first = s.select(&[s.members()[0].name.clone()]).unwrap();
        let smaller = generate_from_subbase(&first, false).unwrap().topology;
        prop_assert!(smaller.value_subset_of(&t));

        let mut inner = Family::new(t.universe());
        for m in t.iter().filter(|m| !m.set.is_boundary()) {
            inner.insert(m.name.clone(), m.set.clone()).unwrap();
        }
        if !inner.is_empty() {
            let again = generate_from_subbase(&inner, false).unwrap().topology;
            prop_assert!(again.same_values(&t));
        }
    }

    #[test]
    fn rank_ignores_names_and_order(s in subbase()) {
        let t = generate_from_subbase(&s, false).unwrap().topology;
        let mut renamed = Family::new(t.universe());
        for (i, m) in t.members().iter().rev().enumerate() {
            renamed.insert(format!("Z{i}"), m.set.clone()).unwrap();
        }
        prop_assert_eq!(rank_of(&renamed).unwrap(), rank_of(&t).unwrap());
    }
}
