//! Ancestor-order properties of rooted trees.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treemetric::tree::{from_partial_order, AncestorRelation, RootedTree};
use treemetric_testutil::enumerate_ordered_trees;

fn is_weak_ancestor(tree: &RootedTree, a: usize, b: usize) -> bool {
    matches!(
        tree.compare(a, b).unwrap(),
        AncestorRelation::Ancestor | AncestorRelation::Equal
    )
}

fn assert_ancestor_sets_are_chains(tree: &RootedTree) {
    let n = tree.len();
    for b in 0..n {
        let down: Vec<usize> = (0..n).filter(|&a| is_weak_ancestor(tree, a, b)).collect();
        for (i, &x) in down.iter().enumerate() {
            for &y in &down[i + 1..] {
                assert!(
                    is_weak_ancestor(tree, x, y) || is_weak_ancestor(tree, y, x),
                    "down-set of {b} not a chain at {x},{y}"
                );
            }
        }
    }
}

#[test]
fn ancestor_sets_are_chains() {
    for edges in 0..=7 {
        for tree in enumerate_ordered_trees(edges) {
            assert_ancestor_sets_are_chains(&tree);
        }
    }
    // and on random trees up to twelve vertices
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        use rand::Rng;
        let n = rng.random_range(1..=12);
        assert_ancestor_sets_are_chains(&treemetric_testutil::random_tree(&mut rng, n));
    }
}

#[test]
fn compare_agrees_with_root_paths() {
    for tree in enumerate_ordered_trees(5) {
        let n = tree.len();
        for a in 0..n {
            // explicit root path of a
            let mut path = vec![a];
            let mut v = a;
            while v != tree.root() {
                v = tree.parent(v);
                path.push(v);
            }
            for b in 0..n {
                let expected = if a == b {
                    AncestorRelation::Equal
                } else if path.contains(&b) {
                    AncestorRelation::Descendant
                } else {
                    // is a on b's root path?
                    let mut w = b;
                    let mut found = false;
                    while w != tree.root() {
                        w = tree.parent(w);
                        if w == a {
                            found = true;
                            break;
                        }
                    }
                    if found {
                        AncestorRelation::Ancestor
                    } else {
                        AncestorRelation::Incomparable
                    }
                };
                assert_eq!(tree.compare(a, b).unwrap(), expected);
            }
        }
    }
}

#[test]
fn partial_order_round_trip_reconstructs_parents() {
    for edges in 0..=7 {
        for tree in enumerate_ordered_trees(edges) {
            let back = from_partial_order(tree.len(), |a, b| is_weak_ancestor(&tree, a, b))
                .expect("tree orders satisfy the preconditions");
            assert_eq!(back.root(), tree.root());
            for v in 0..tree.len() {
                assert_eq!(back.parent(v), tree.parent(v), "parent of {v}");
            }
        }
    }
}

fn tree_strategy(max_n: usize) -> impl Strategy<Value = RootedTree> {
    (1..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        parents.prop_map(move |ps| {
            let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (i, p) in ps.into_iter().enumerate() {
                children[p].push(i + 1);
            }
            RootedTree::from_child_lists(0, children).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_newick_ignores_sibling_order(tree in tree_strategy(60), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut shuffled: Vec<Vec<usize>> =
            (0..tree.len()).map(|v| tree.children(v).to_vec()).collect();
        for list in &mut shuffled {
            list.shuffle(&mut rng);
        }
        let permuted = RootedTree::from_child_lists(tree.root(), shuffled).unwrap();
        prop_assert_eq!(permuted.canonical_newick(), tree.canonical_newick());

        let labels: Vec<String> = (0..tree.len()).map(|v| format!("n{v}")).collect();
        let a = tree.clone().with_labels(labels.clone()).unwrap();
        let b = permuted.with_labels(labels).unwrap();
        prop_assert_eq!(a.canonical_newick(), b.canonical_newick());
    }

    #[test]
    fn partial_order_round_trip_random(tree in tree_strategy(40)) {
        let back = from_partial_order(tree.len(), |a, b| is_weak_ancestor(&tree, a, b)).unwrap();
        for v in 0..tree.len() {
            prop_assert_eq!(back.parent(v), tree.parent(v));
        }
    }
}
