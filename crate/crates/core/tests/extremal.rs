use augecc::enumerate::{free_trees, pm_trees};
use augecc::extremal::{scan, verify_claims, ClaimId, GraphClass};
use augecc::families::{make_family, FamilyKind};
use augecc::index::IndexKind;
use augecc::iso::IsoCode;

fn code(kind: FamilyKind, n: usize) -> IsoCode {
    IsoCode::of(&make_family(kind, n).unwrap()).unwrap()
}

#[test]
fn maximal_tree_switches_from_star_to_balanced_at_sixteen() {
    let rows = verify_claims(15, 16, &[GraphClass::AllTrees]).unwrap();
    let max = |n| {
        rows.iter()
            .find(|r| r.claim == ClaimId::TmMaxTrees && r.n == n)
            .unwrap()
    };
    assert!(max(15).pass);
    assert_eq!(max(15).attainers, vec![code(FamilyKind::Star, 15)]);
    assert!(max(16).pass);
    assert_eq!(max(16).attainers, vec![code(FamilyKind::DegreeBalanced(5), 16)]);
    assert_eq!(free_trees(15).unwrap().count(), 7741);
    assert_eq!(free_trees(16).unwrap().count(), 19320);
    let cross = rows.iter().filter(|r| r.claim == ClaimId::CrossoverLemma).count();
    assert_eq!(cross, 2);
}

#[test]
fn pm_maximum_at_twelve() {
    let rows = verify_claims(12, 12, &[GraphClass::PmTrees]).unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.pass && r.claim == ClaimId::CorMaxMatch));
    assert_eq!(rows[0].attainers, vec![code(FamilyKind::DegreeBalanced(6), 12)]);
    assert_eq!(rows[1].attainers, vec![code(FamilyKind::Path, 12)]);
}

#[test]
fn report_attainers_recompute_to_the_extremes() {
    for (class, n) in [
        (GraphClass::AllTrees, 11),
        (GraphClass::PmTrees, 10),
        (GraphClass::ConnectedGraphs, 5),
    ] {
        for kind in IndexKind::ALL {
            let r = scan(class, n, kind).unwrap();
            assert!(!r.min_attainers.is_empty() && !r.max_attainers.is_empty());
            for c in &r.min_attainers {
                assert_eq!(augecc::index::index_value(&c.to_graph(), kind).unwrap(), r.min);
            }
            for c in &r.max_attainers {
                assert_eq!(augecc::index::index_value(&c.to_graph(), kind).unwrap(), r.max);
            }
        }
    }
}

#[test]
fn pm_trees_are_the_matched_subset() {
    for n in (2..=12).step_by(2) {
        let all = free_trees(n)
            .unwrap()
            .filter(|t| augecc::tree::tree_perfect_matching(t).unwrap().is_some())
            .count();
        assert_eq!(pm_trees(n).unwrap().count(), all);
    }
    assert_eq!(pm_trees(8).unwrap().count(), 5);
    assert_eq!(pm_trees(10).unwrap().count(), 15);
}
