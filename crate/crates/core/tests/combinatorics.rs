mod common;

use geode::geode::{grade_sum, series_g, verify_lemma_g, verify_theorem_g};
use geode::series::{types_of_weight, BigCount, TypeVector};
use geode::subdigons::{count_marked_subdigons, enumerate_subdigons, subdigon_to_tree, tree_to_subdigon};
use geode::trees::{count_marked_trees, enumerate_trees};
use proptest::prelude::*;

#[test]
fn drawn_subdigon_and_tree_are_matched() {
    let (sub, _) = common::example_subdigon();
    let (tree, _) = common::example_tree();
    assert_eq!(subdigon_to_tree(&sub), tree);
    assert_eq!(tree_to_subdigon(&tree), sub);
    assert_eq!(sub.to_string(), tree.to_string());
}

#[test]
fn drawn_subdigon_central_face_is_a_pentagon() {
    let (sub, shapes) = common::example_subdigon();
    assert_eq!(shapes[&Vec::new()].sides, 5);
    assert_eq!(sub.faces().len(), 8);
    assert_eq!(sub.external_edges_ccw().len(), TypeVector::new(vec![2, 3, 2, 1]).leaf_count());
}

#[test]
fn triangulations_of_small_polygons_from_arcs() {
    // Fan triangulation of the hexagon from vertex 0.
    let (s, _) = common::subdigon_from_arcs(6, &[(0, 2), (0, 3), (0, 4)]);
    assert_eq!(s.subdigon_type(), TypeVector::new(vec![0, 4]));
    // A single arc parallel to the roof makes a bigon.
    let (s, _) = common::subdigon_from_arcs(3, &[(0, 1)]);
    assert_eq!(s.subdigon_type(), TypeVector::new(vec![1, 1]));
    assert_eq!(s.to_string(), "((()()))");
}

#[test]
fn grade_sums_of_counts_match_geode() {
    let g = series_g(9).unwrap();
    for w in 0..=9 {
        let l: BigCount = types_of_weight(w).iter().map(count_marked_trees).sum();
        assert_eq!(l, grade_sum(&g, w), "weight {w}");
    }
}

#[test]
fn theorem_and_lemma_reports() {
    assert!(verify_theorem_g(10).unwrap().passed());
    assert!(verify_lemma_g(8).unwrap().passed());
}

#[test]
fn subdigon_counts_are_direct() {
    for w in 0..=8 {
        for m in types_of_weight(w) {
            assert_eq!(enumerate_subdigons(&m).len(), enumerate_trees(&m).len());
            assert_eq!(count_marked_subdigons(&m), count_marked_trees(&m));
        }
    }
}

proptest! {
    #[test]
    fn decomposition_preserves_type_bookkeeping(entries in proptest::collection::vec(0usize..3, 1..4)) {
        let m = TypeVector::new(entries);
        prop_assume!(!m.is_zero() && m.edge_weight() <= 9);
        let c = geode::hyper_catalan(&m);
        let rhs: BigCount = m.support().map(|(n, _)| count_marked_trees(&m.bumped(n, -1).unwrap())).sum();
        prop_assert_eq!(c, rhs);
    }
}
