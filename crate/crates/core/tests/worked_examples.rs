//! Printed values from small hand-worked examples over `{a, b, c}`.

mod common;

use common::{family, set, Rows, FULL, NULL};
use pftopo::construction::{chain_topology, generate_from_subbase, intersection_closure};
use pftopo::topology::{check_axioms, check_base, check_subbase_minimality, verify_base_for, AxiomViolation};
use pftopo::{evaluate, parse, partition_by_rho, rank_of, Family, InclusionMode};

const LIT: InclusionMode = InclusionMode::PaperLiteral;

fn assert_same(actual: &Family, expected: &Family) {
    assert_eq!(actual.len(), expected.len(), "member count\nactual: {actual:#?}");
    assert!(actual.same_values(expected), "values differ\nactual: {actual:#?}");
}

mod union_pair {
    use super::*;

    const N1: Rows = [("0.50", "0.20", "0.25"), ("0.40", "0.10", "0.50"), ("0.20", "0.30", "0.45")];
    const N2: Rows = [("0.40", "0.30", "0.10"), ("0.20", "0.60", "0.10"), ("0.30", "0.20", "0.15")];
    const JOIN: Rows = [("0.50", "0.20", "0.10"), ("0.40", "0.10", "0.10"), ("0.30", "0.20", "0.15")];

    #[test]
    fn union_matches_and_neither_is_included() {
        let (a, b) = (set(N1), set(N2));
        let j = a.union(&b).unwrap();
        assert_eq!(j, set(JOIN));
        assert!(!a.includes(&j, LIT).unwrap());
        assert!(!b.includes(&j, LIT).unwrap());
        // The rho component is what fails: at c for the first, at a for the second.
        assert!(a.triple_at("c").unwrap().rho() > j.triple_at("c").unwrap().rho());
        assert!(b.triple_at("a").unwrap().rho() > j.triple_at("a").unwrap().rho());
    }

    #[test]
    fn union_need_not_return_the_larger_operand() {
        let a = set([("0.30", "0.20", "0.25"), ("0.10", "0.30", "0.50"), ("0.20", "0.20", "0.45")]);
        let b = set(N2);
        let j = a.union(&b).unwrap();
        assert_eq!(
            j,
            set([("0.40", "0.20", "0.10"), ("0.20", "0.30", "0.10"), ("0.30", "0.20", "0.15")])
        );
        assert_ne!(j, b);
    }

    #[test]
    fn union_equal_to_an_operand_without_inclusion() {
        let a = set([("0.30", "0.20", "0.25"), ("0.10", "0.30", "0.50"), ("0.20", "0.20", "0.45")]);
        let b = set([("0.40", "0.15", "0.10"), ("0.20", "0.25", "0.10"), ("0.30", "0.20", "0.15")]);
        assert_eq!(a.union(&b).unwrap(), b);
        assert!(!a.includes(&b, LIT).unwrap());
        assert!(a.includes(&b, InclusionMode::NeutralReversed).unwrap());
    }
}

mod incomparable_pair {
    use super::*;

    const K1: Rows = [("0.25", "0.20", "0.30"), ("0.35", "0.10", "0.45"), ("0.30", "0.35", "0.10")];
    const K2: Rows = [("0.45", "0.20", "0.35"), ("0.25", "0.10", "0.40"), ("0.50", "0.35", "0.05")];
    const K3: Rows = [("0.25", "0.20", "0.35"), ("0.25", "0.10", "0.45"), ("0.30", "0.35", "0.10")];
    const K4: Rows = [("0.45", "0.20", "0.30"), ("0.35", "0.10", "0.40"), ("0.50", "0.35", "0.05")];
    const K5: Rows = [("0.25", "0.00", "0.30"), ("0.35", "0.00", "0.45"), ("0.30", "0.00", "0.10")];
    const K6: Rows = [("0.45", "0.00", "0.35"), ("0.25", "0.00", "0.40"), ("0.50", "0.00", "0.05")];
    const K7: Rows = [("0.25", "0.00", "0.35"), ("0.25", "0.00", "0.45"), ("0.30", "0.00", "0.10")];
    const K8: Rows = [("0.45", "0.00", "0.30"), ("0.35", "0.00", "0.40"), ("0.50", "0.00", "0.05")];

    fn subbase() -> Family {
        family(&[("K1", K1), ("K2", K2)])
    }

    #[test]
    fn base() {
        let b = intersection_closure(&subbase()).unwrap();
        assert_same(&b, &family(&[("K1", K1), ("K2", K2), ("K3", K3)]));
        assert!(check_base(&b).unwrap().is_base);
    }

    #[test]
    fn topology_and_rank() {
        let t = generate_from_subbase(&subbase(), false).unwrap();
        let printed = family(&[
            ("I", FULL),
            ("O", NULL),
            ("K1", K1),
            ("K2", K2),
            ("K3", K3),
            ("K4", K4),
            ("K5", K5),
            ("K6", K6),
            ("K7", K7),
            ("K8", K8),
        ]);
        assert_same(&t.topology, &printed);
        assert!(check_axioms(&printed).unwrap().is_topology);
        assert_eq!(rank_of(&t.topology).unwrap().get(), 2);
        assert!(verify_base_for(&t.topology, &t.base).unwrap().is_base_for);
        assert!(!verify_base_for(&t.topology, &family(&[("K1", K1)])).unwrap().is_base_for);
    }

    #[test]
    fn provenance_evaluates_to_members() {
        let s = subbase();
        let t = generate_from_subbase(&s, false).unwrap();
        for m in &t.topology {
            let e = &t.provenance[&m.name];
            assert_eq!(evaluate(e, &s).unwrap(), m.set, "{}", m.name);
        }
    }

    #[test]
    fn expression_evaluation() {
        let s = subbase();
        assert_eq!(evaluate(&parse("K1 & K2").unwrap(), &s).unwrap(), set(K3));
        assert_eq!(evaluate(&parse("K1 | K2").unwrap(), &s).unwrap(), set(K4));
        assert_eq!(evaluate(&parse("O | (K1 & K2)").unwrap(), &s).unwrap(), set(K7));
        assert_eq!(
            evaluate(&parse("~(K1 | K2)").unwrap(), &s).unwrap(),
            evaluate(&parse("~K1 & ~K2").unwrap(), &s).unwrap()
        );
    }
}

mod nested_pair {
    use super::*;

    // The second set's grades at a sum to 1.10, so these rows are parsed
    // without the sum check.
    const K1: Rows = [("0.30", "0.20", "0.45"), ("0.20", "0.25", "0.40"), ("0.30", "0.35", "0.10")];
    const K2: Rows = [("0.45", "0.30", "0.35"), ("0.25", "0.30", "0.30"), ("0.50", "0.40", "0.05")];
    const K3: Rows = [("0.45", "0.20", "0.35"), ("0.25", "0.25", "0.30"), ("0.50", "0.35", "0.05")];
    const K4: Rows = [("0.30", "0.00", "0.45"), ("0.20", "0.00", "0.40"), ("0.30", "0.00", "0.10")];
    const K5: Rows = [("0.45", "0.00", "0.35"), ("0.25", "0.00", "0.30"), ("0.50", "0.00", "0.05")];

    #[test]
    fn printed_rows_break_the_sum_bound() {
        assert!(!set(K2).is_admissible());
        assert!(set(K1).is_admissible());
        assert!(pftopo::PictureFuzzySet::from_decimals(&common::abc(), &K2).is_err());
    }

    #[test]
    fn base_is_the_subbase_and_topology_matches() {
        let s = family(&[("K1", K1), ("K2", K2)]);
        assert!(set(K1).includes(&set(K2), LIT).unwrap());
        assert_same(&intersection_closure(&s).unwrap(), &s);
        let t = generate_from_subbase(&s, false).unwrap();
        let printed = family(&[
            ("I", FULL),
            ("O", NULL),
            ("K1", K1),
            ("K2", K2),
            ("K3", K3),
            ("K4", K4),
            ("K5", K5),
        ]);
        assert_same(&t.topology, &printed);
        assert_eq!(rank_of(&t.topology).unwrap().get(), 3);
    }
}

mod balanced_pair {
    use super::*;

    const N1: Rows = [("0.35", "0.20", "0.25"), ("0.20", "0.15", "0.30"), ("0.20", "0.35", "0.15")];
    const N2: Rows = [("0.35", "0.30", "0.25"), ("0.20", "0.25", "0.30"), ("0.20", "0.40", "0.15")];
    const N3: Rows = [("0.35", "0.00", "0.25"), ("0.20", "0.00", "0.30"), ("0.20", "0.00", "0.15")];

    #[test]
    fn topology_and_rank() {
        let s = family(&[("K1", N1), ("K2", N2)]);
        assert!(pftopo::balanced(&set(N1), &set(N2)).unwrap());
        let printed = family(&[("I", FULL), ("O", NULL), ("K1", N1), ("K2", N2), ("K3", N3)]);
        let t = generate_from_subbase(&s, false).unwrap();
        assert_same(&t.topology, &printed);
        assert_eq!(rank_of(&t.topology).unwrap().get(), 3);
        assert_same(&chain_topology(&s).unwrap().topology, &printed);
    }

    #[test]
    fn literal_chain_family_is_not_a_topology() {
        let literal = family(&[("O", NULL), ("K1", N1), ("K2", N2), ("I", FULL)]);
        let report = check_axioms(&literal).unwrap();
        assert!(!report.is_topology);
        assert!(report.violations.iter().all(|v| v.replays_against(&literal)));
    }
}

mod crossing_pair {
    use super::*;

    // The second set's grades at a sum to 1.10, as do the printed K6, and
    // K4 sums to 1.05.
    const N1: Rows = [("0.10", "0.35", "0.30"), ("0.20", "0.25", "0.40"), ("0.50", "0.40", "0.05")];
    const N2: Rows = [("0.45", "0.30", "0.35"), ("0.25", "0.30", "0.30"), ("0.30", "0.35", "0.10")];
    const N3: Rows = [("0.10", "0.30", "0.35"), ("0.20", "0.25", "0.40"), ("0.30", "0.35", "0.10")];
    const N4: Rows = [("0.45", "0.30", "0.30"), ("0.25", "0.25", "0.30"), ("0.50", "0.35", "0.05")];
    const N5: Rows = [("0.10", "0.30", "0.30"), ("0.20", "0.25", "0.40"), ("0.50", "0.35", "0.05")];
    const N6: Rows = [("0.45", "0.30", "0.35"), ("0.25", "0.25", "0.30"), ("0.30", "0.35", "0.10")];
    const N7: Rows = [("0.10", "0.00", "0.30"), ("0.20", "0.00", "0.40"), ("0.50", "0.00", "0.05")];
    const N8: Rows = [("0.45", "0.00", "0.35"), ("0.25", "0.00", "0.30"), ("0.30", "0.00", "0.10")];
    const N9: Rows = [("0.10", "0.00", "0.35"), ("0.20", "0.00", "0.40"), ("0.30", "0.00", "0.10")];
    const N10: Rows = [("0.45", "0.00", "0.30"), ("0.25", "0.00", "0.30"), ("0.50", "0.00", "0.05")];

    fn printed() -> Family {
        family(&[
            ("I", FULL),
            ("O", NULL),
            ("K1", N1),
            ("K2", N2),
            ("K3", N3),
            ("K4", N4),
            ("K5", N5),
            ("K6", N6),
            ("K7", N7),
            ("K8", N8),
            ("K9", N9),
            ("K10", N10),
        ])
    }

    #[test]
    fn base_and_topology() {
        let s = family(&[("K1", N1), ("K2", N2)]);
        assert_same(
            &intersection_closure(&s).unwrap(),
            &family(&[("K1", N1), ("K2", N2), ("K3", N3)]),
        );
        let t = generate_from_subbase(&s, false).unwrap();
        assert_same(&t.topology, &printed());
    }

    #[test]
    fn rank_is_four() {
        let p = printed();
        let partition = partition_by_rho(&p).unwrap();
        assert_eq!(partition.rank().get(), 4);
        let class = |n: &str| partition.class_of(n).unwrap();
        assert_ne!(class("K1"), class("K2"));
        for n in ["K4", "K5", "K6"] {
            assert_eq!(class(n), class("K3"));
        }
        for n in ["I", "O", "K7", "K8", "K9", "K10"] {
            assert_eq!(class(n), class("O"));
        }
        let distinct = [class("K1"), class("K2"), class("K3"), class("O")];
        assert_eq!(distinct.iter().collect::<std::collections::HashSet<_>>().len(), 4);
    }
}

mod balanced_quadruple {
    use super::*;

    const N1: Rows = [("0.10", "0.15", "0.40"), ("0.20", "0.10", "0.35"), ("0.20", "0.15", "0.20")];
    const N2: Rows = [("0.30", "0.15", "0.35"), ("0.25", "0.10", "0.30"), ("0.30", "0.15", "0.10")];
    const N3: Rows = [("0.10", "0.10", "0.40"), ("0.20", "0.05", "0.35"), ("0.20", "0.15", "0.20")];
    const N4: Rows = [("0.30", "0.10", "0.35"), ("0.25", "0.05", "0.30"), ("0.30", "0.15", "0.10")];
    const J1: Rows = [("0.10", "0.00", "0.40"), ("0.20", "0.00", "0.35"), ("0.20", "0.00", "0.20")];
    const J2: Rows = [("0.30", "0.00", "0.35"), ("0.25", "0.00", "0.30"), ("0.30", "0.00", "0.10")];

    fn subbase() -> Family {
        family(&[("K1", N1), ("K2", N2), ("K3", N3), ("K4", N4)])
    }

    fn printed() -> Family {
        family(&[("I", FULL), ("O", NULL), ("K1", N1), ("K2", N2), ("K3", N3), ("K4", N4)])
    }

    #[test]
    fn base_is_the_subbase() {
        assert_same(&intersection_closure(&subbase()).unwrap(), &subbase());
    }

    #[test]
    fn generation_adds_two_zero_rho_joins() {
        let t = generate_from_subbase(&subbase(), false).unwrap();
        let mut expected = printed();
        expected.insert("J1", set(J1)).unwrap();
        expected.insert("J2", set(J2)).unwrap();
        assert_same(&t.topology, &expected);
        assert!(check_axioms(&t.topology).unwrap().is_topology);
    }

    #[test]
    fn printed_family_is_not_a_topology() {
        let p = printed();
        let report = check_axioms(&p).unwrap();
        assert!(!report.is_topology);
        match &report.violations[0] {
            AxiomViolation::UnionEscape { left, right, result } => {
                assert_eq!((left.name.as_str(), right.name.as_str()), ("O", "K1"));
                assert_eq!(*result, set(J1));
            }
            other => panic!("unexpected first violation {other}"),
        }
        assert!(report.violations.iter().any(|v| matches!(
            v,
            AxiomViolation::IntersectionEscape { left, right, .. } if left.name == "I" && right.name == "K1"
        )));
        assert!(report.violations.iter().all(|v| v.replays_against(&p)));
    }

    #[test]
    fn subbase_is_not_minimal() {
        let report = check_subbase_minimality(&subbase(), LIT).unwrap();
        assert!(!report.is_minimal);
        let w = report.witness.unwrap();
        assert_eq!((w.left.name.as_str(), w.right.name.as_str()), ("K1", "K4"));
        assert_eq!(w.intersection, set(N3));
        assert!(generate_from_subbase(&subbase(), true).is_err());
    }
}
