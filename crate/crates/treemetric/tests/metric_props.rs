//! Index queries against brute force, and the four-point condition on tree
//! metrics.

#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;

use treemetric::excursion::{decode_with_visits, random_excursion};
use treemetric::metric::{four_point_check, TreeMetricIndex};
use treemetric::tree::{AncestorRelation, RootedTree};
use treemetric_testutil::{all_pairs_bfs, enumerate_ordered_trees, walk_distance};

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

#[test]
fn lca_is_the_maximum_common_ancestor() {
    // every ordered tree with up to ten vertices
    for edges in 0..=9 {
        for tree in enumerate_ordered_trees(edges) {
            let index = TreeMetricIndex::build(&tree);
            let n = tree.len();
            let weak: Vec<Vec<bool>> = (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| {
                            matches!(
                                tree.compare(x, y).unwrap(),
                                AncestorRelation::Ancestor | AncestorRelation::Equal
                            )
                        })
                        .collect()
                })
                .collect();
            for a in 0..n {
                for b in 0..n {
                    let l = index.lca(a, b).unwrap();
                    assert!(weak[l][a] && weak[l][b], "lca not a common ancestor");
                    for c in 0..n {
                        if weak[c][a] && weak[c][b] {
                            assert!(weak[c][l], "common ancestor {c} above lca {l}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn deep_chain_does_not_overflow() {
    let n = 20_000;
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 1..n {
        children[v - 1].push(v);
    }
    let tree = RootedTree::from_child_lists(0, children).unwrap();
    let index = TreeMetricIndex::build(&tree);
    assert_eq!(index.dist(0, n - 1).unwrap(), n - 1);
    assert_eq!(index.lca(n - 1, n / 2).unwrap(), n / 2);
}

#[test]
fn four_point_passes_every_small_tree_metric() {
    // all ordered trees with up to 8 edges, i.e. up to 9 points
    for edges in 1..=8 {
        for tree in enumerate_ordered_trees(edges) {
            let index = TreeMetricIndex::build(&tree);
            let n = tree.len();
            let matrix: Vec<Vec<f64>> = (0..n)
                .map(|a| (0..n).map(|b| index.dist(a, b).unwrap() as f64).collect())
                .collect();
            let report = four_point_check(&matrix).unwrap();
            assert!(report.is_zero_hyperbolic);
            assert_eq!(report.worst_violation, 0.0);
        }
    }
}

#[test]
fn excursion_times_agree_with_index_distances() {
    for seed in 0..10 {
        let exc = random_excursion(40, seed);
        let (tree, visits) = decode_with_visits(&exc);
        let index = TreeMetricIndex::build(&tree);
        for m in 0..exc.len() {
            for n in 0..exc.len() {
                assert_eq!(
                    exc.distance(m, n).unwrap(),
                    index.dist(visits[m], visits[n]).unwrap()
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn dist_equals_bfs(tree in tree_strategy(200)) {
        let index = TreeMetricIndex::build(&tree);
        let bfs = all_pairs_bfs(&tree);
        for (a, row) in bfs.iter().enumerate() {
            for (b, &expected) in row.iter().enumerate() {
                prop_assert_eq!(index.dist(a, b).unwrap(), expected);
            }
        }
    }

    #[test]
    fn dist_equals_parent_walks(tree in tree_strategy(300), picks in proptest::collection::vec((any::<usize>(), any::<usize>()), 50)) {
        let index = TreeMetricIndex::build(&tree);
        for (x, y) in picks {
            let a = x % tree.len();
            let b = y % tree.len();
            prop_assert_eq!(index.dist(a, b).unwrap(), walk_distance(&tree, a, b));
        }
    }
}
