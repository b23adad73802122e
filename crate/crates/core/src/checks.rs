//! Exhaustive checks of the tree/subdigon bijections and both decompositions.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::hypercatalan::hyper_catalan;
use crate::report::{Report, Section};
use crate::series::{enumerate_types, ordered_splits, BigCount, TypeVector};
use crate::subdigons::{
    compose_subdigon, decompose_subdigon, enumerate_marked_subdigons, enumerate_subdigons, subdigon_to_tree,
    tree_to_subdigon, MarkedSubdigon,
};
use crate::trees::{
    compose_tree, decompose_tree, enumerate_marked_trees, enumerate_trees, root_decompose, root_join,
    MarkedTree, OrderedTree,
};

const LABELS: [&str; 6] = [
    "subdigon<->tree roundtrip",
    "external faces/edges vs clawed nodes/leaves",
    "tree decompose<->compose",
    "subdigon decompose<->compose",
    "decomposition square commutes",
    "root decomposition",
];

/// Runs every bijection check for all types of weight `<= bound`.
pub fn verify_bijections(bound: usize) -> Report {
    let per_type: Vec<Vec<Section>> = enumerate_types(bound).par_iter().map(check_type).collect();
    let mut merged: Vec<Section> = LABELS.iter().map(|l| Section::new(*l)).collect();
    for sections in per_type {
        for (acc, s) in merged.iter_mut().zip(sections) {
            acc.compared += s.compared;
            acc.mismatches.extend(s.mismatches);
        }
    }
    let mut report = Report::new("bijections", bound);
    for s in merged {
        report.push(s);
    }
    report
}

fn check_type(m: &TypeVector) -> Vec<Section> {
    let mut sections: Vec<Section> = LABELS.iter().map(|l| Section::new(*l)).collect();
    let trees = enumerate_trees(m);
    let subs = enumerate_subdigons(m);
    let [roundtrip, correspond, tree_dec, sub_dec, square, root] = &mut sections[..] else { unreachable!() };

    // Subdigons <-> trees.
    let c = hyper_catalan(m);
    roundtrip.compare(format!("|T_{m}|"), &BigCount::from(trees.len()), &c);
    roundtrip.compare(format!("|S_{m}|"), &BigCount::from(subs.len()), &c);
    let tree_set: BTreeSet<&OrderedTree> = trees.iter().collect();
    roundtrip.compare(format!("distinct T_{m}"), &tree_set.len(), &trees.len());
    let images: BTreeSet<OrderedTree> = subs.iter().map(subdigon_to_tree).collect();
    roundtrip.expect(format!("image of S_{m}"), images.len() == subs.len(), "subdigon_to_tree not injective");
    roundtrip.expect(
        format!("image of S_{m}"),
        images.iter().eq(tree_set.iter().copied()),
        "subdigon_to_tree image differs from T_m",
    );
    for s in &subs {
        let t = subdigon_to_tree(s);
        roundtrip.compare(s, &t.tree_type(), m);
        roundtrip.compare(s, &tree_to_subdigon(&t), s);
    }
    for t in &trees {
        let s = tree_to_subdigon(t);
        roundtrip.compare(t, &s.subdigon_type(), m);
        roundtrip.compare(t, &subdigon_to_tree(&s), t);
    }

    // Correspondences along the bijection.
    for s in &subs {
        let t = subdigon_to_tree(s);
        let faces: Vec<Vec<usize>> = s.external_faces().iter().map(|f| f.path().to_vec()).collect();
        let clawed: Vec<Vec<usize>> = t.clawed_nodes().iter().map(|n| n.path().to_vec()).collect();
        correspond.compare(s, &faces, &clawed);
        let edges: Vec<Vec<usize>> = s.external_edges_ccw().iter().map(|e| e.path().to_vec()).collect();
        let leaves: Vec<Vec<usize>> = t.post_order_leaves().iter().map(|n| n.path().to_vec()).collect();
        correspond.compare(s, &edges, &leaves);
        let first_face = s.first_external_face().map(|f| f.path().to_vec());
        let first_claw = t.clawed_nodes().first().map(|n| n.path().to_vec());
        correspond.compare(s, &first_face, &first_claw);
        correspond.compare(s, &s.markable_edge_count(), &t.count_initial_leaves());
    }

    if m.is_zero() {
        return sections;
    }

    // T_m -> ⋃_n {n} × T̄_{m-e_n}.
    let mut expected_pairs: BTreeSet<(usize, MarkedTree)> = BTreeSet::new();
    for (n, _) in m.support() {
        let smaller = m.bumped(n, -1).expect("m_n >= 1");
        for marked in enumerate_marked_trees(&smaller) {
            match compose_tree(n, &marked) {
                Ok(t) => tree_dec.compare(&marked, &decompose_tree(&t).ok(), &Some((n, marked.clone()))),
                Err(e) => tree_dec.expect(&marked, false, e),
            }
            expected_pairs.insert((n, marked));
        }
    }
    let mut seen_pairs: BTreeSet<(usize, MarkedTree)> = BTreeSet::new();
    for t in &trees {
        match decompose_tree(t) {
            Ok((n, marked)) => {
                tree_dec.compare(t, &Some(marked.tree_type()), &m.bumped(n, -1));
                tree_dec.compare(t, &compose_tree(n, &marked).ok(), &Some(t.clone()));
                tree_dec.expect(t, seen_pairs.insert((n, marked)), "decompose_tree not injective");
            }
            Err(e) => tree_dec.expect(t, false, e),
        }
    }
    tree_dec.compare(format!("|T_{m}| vs Σ L"), &trees.len(), &expected_pairs.len());
    tree_dec.expect(format!("image over {m}"), seen_pairs == expected_pairs, "decomposition image differs");

    // Same for subdigons.
    let mut expected_pairs: BTreeSet<(usize, MarkedSubdigon)> = BTreeSet::new();
    for (n, _) in m.support() {
        let smaller = m.bumped(n, -1).expect("m_n >= 1");
        for marked in enumerate_marked_subdigons(&smaller) {
            match compose_subdigon(n, &marked) {
                Ok(s) => sub_dec.compare(&marked, &decompose_subdigon(&s).ok(), &Some((n, marked.clone()))),
                Err(e) => sub_dec.expect(&marked, false, e),
            }
            expected_pairs.insert((n, marked));
        }
    }
    let mut seen_pairs: BTreeSet<(usize, MarkedSubdigon)> = BTreeSet::new();
    for s in &subs {
        match decompose_subdigon(s) {
            Ok((n, marked)) => {
                sub_dec.compare(s, &Some(marked.subdigon().subdigon_type()), &m.bumped(n, -1));
                sub_dec.compare(s, &compose_subdigon(n, &marked).ok(), &Some(s.clone()));

                // Square: tree side of the subdigon decomposition.
                let via_tree = decompose_tree(&subdigon_to_tree(s)).ok();
                let mapped = MarkedTree::new(subdigon_to_tree(marked.subdigon()), marked.mark())
                    .ok()
                    .map(|mt| (n, mt));
                square.compare(s, &via_tree, &mapped);

                sub_dec.expect(s, seen_pairs.insert((n, marked)), "decompose_subdigon not injective");
            }
            Err(e) => sub_dec.expect(s, false, e),
        }
    }
    sub_dec.compare(format!("|S_{m}| vs Σ |S̄|"), &subs.len(), &expected_pairs.len());
    sub_dec.expect(format!("image over {m}"), seen_pairs == expected_pairs, "decomposition image differs");

    // T_m -> ⋃_n ⋃_{e_n + m_1 + ... + m_n = m} T_{m_1} × ... × T_{m_n}.
    let mut expected_tuples: BTreeSet<Vec<OrderedTree>> = BTreeSet::new();
    let mut coefficient = BigCount::default();
    for (n, _) in m.support() {
        let rest = m.bumped(n, -1).expect("m_n >= 1");
        for split in ordered_splits(&rest, n) {
            coefficient += split.iter().map(hyper_catalan).product::<BigCount>();
            let mut tuples: Vec<Vec<OrderedTree>> = vec![Vec::new()];
            for part in &split {
                let options = enumerate_trees(part);
                tuples = tuples
                    .into_iter()
                    .flat_map(|prefix| {
                        options.iter().map(move |o| {
                            let mut p = prefix.clone();
                            p.push(o.clone());
                            p
                        })
                    })
                    .collect();
            }
            expected_tuples.extend(tuples);
        }
    }
    root.compare(format!("[t^{m}] 1 + Σ t_n S^n"), &coefficient, &c);
    let mut seen_tuples: BTreeSet<Vec<OrderedTree>> = BTreeSet::new();
    for t in &trees {
        match root_decompose(t) {
            Ok(kids) => {
                let n = kids.len();
                let sum = kids.iter().fold(TypeVector::unit(n), |acc, k| acc.add(&k.tree_type()));
                root.compare(t, &sum, m);
                root.compare(t, &root_join(kids.clone()).ok(), &Some(t.clone()));
                root.expect(t, seen_tuples.insert(kids), "root_decompose not injective");
            }
            Err(e) => root.expect(t, false, e),
        }
    }
    root.expect(
        format!("image over {m}"),
        seen_tuples == expected_tuples,
        "root decomposition image differs",
    );

    sections
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijections_hold_through_weight_6() {
        let r = verify_bijections(6);
        assert!(r.passed(), "{r}");
        assert_eq!(r.sections.len(), LABELS.len());
        assert!(r.sections.iter().all(|s| s.compared > 0));
    }
}
