//! The sweep against its two oracles, plus the quotient-tree guarantees.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treemetric::contour::{build_merge, ContourError, ScalarField};
use treemetric::metric::four_point_check;
use treemetric_testutil::{maximin_matrix, random_field, threshold_lambda};

fn fields(count: usize, max_n: usize, seed: u64) -> Vec<ScalarField> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            use rand::Rng;
            let n = rng.random_range(1..=max_n);
            let extra = rng.random_range(0..=n);
            random_field(&mut rng, n, extra, 20)
        })
        .collect()
}

#[test]
fn lambda_agrees_with_both_oracles() {
    for field in fields(60, 30, 11) {
        let merge = build_merge(&field);
        let maximin = maximin_matrix(&field);
        for (y, row) in maximin.iter().enumerate() {
            for (z, &expected) in row.iter().enumerate() {
                let l = merge.lambda(y, z).unwrap();
                assert_eq!(l, expected, "maximin mismatch at ({y},{z})");
                assert_eq!(
                    l,
                    threshold_lambda(&field, y, z),
                    "threshold scan mismatch at ({y},{z})"
                );
            }
        }
    }
}

#[test]
fn min_inequality_holds_on_all_triples() {
    for field in fields(25, 25, 23) {
        let merge = build_merge(&field);
        let n = field.len();
        let lambda: Vec<Vec<f64>> = (0..n)
            .map(|y| (0..n).map(|z| merge.lambda(y, z).unwrap()).collect())
            .collect();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assert!(
                        lambda[x][z].min(lambda[y][z]) <= lambda[x][y],
                        "min-inequality fails at ({x},{y},{z})"
                    );
                }
            }
        }
    }
}

#[test]
fn components_nest_and_partition() {
    for field in fields(20, 18, 37) {
        let mut levels: Vec<f64> = field.values().to_vec();
        levels.sort_by(f64::total_cmp);
        levels.dedup();
        // same level: equal or disjoint
        for &level in &levels {
            let comps: Vec<Vec<usize>> = (0..field.len())
                .filter(|&x| field.value(x) >= level)
                .map(|x| field.component_at(x, level).unwrap())
                .collect();
            for a in &comps {
                for b in &comps {
                    let same = a == b;
                    let disjoint = a.iter().all(|v| !b.contains(v));
                    assert!(same || disjoint);
                }
            }
        }
        // lower level contains higher level whenever they overlap
        for pair in levels.windows(2) {
            let (lo, hi) = (pair[0], pair[1]);
            for x in 0..field.len() {
                if field.value(x) >= hi {
                    let small = field.component_at(x, hi).unwrap();
                    let big = field.component_at(x, lo).unwrap();
                    assert!(small.iter().all(|v| big.binary_search(v).is_ok()));
                }
            }
        }
    }
}

#[test]
fn contour_distance_is_a_pseudo_metric() {
    for field in fields(25, 25, 53) {
        let merge = build_merge(&field);
        let n = field.len();
        let d: Vec<Vec<f64>> = (0..n)
            .map(|x| (0..n).map(|y| merge.distance(x, y).unwrap()).collect())
            .collect();
        for x in 0..n {
            assert_eq!(d[x][x], 0.0);
            for y in 0..n {
                assert_eq!(d[x][y], d[y][x]);
                assert!(d[x][y] >= (field.value(x) - field.value(y)).abs());
                for z in 0..n {
                    assert!(d[x][y] <= d[x][z] + d[z][y], "triangle at ({x},{y},{z})");
                }
            }
        }
    }
}

#[test]
fn quotient_reproduces_the_distance_and_is_tree_metric() {
    for field in fields(40, 25, 71) {
        let merge = build_merge(&field);
        let q = merge.quotient_tree();
        // weighted path metric equals the contour distance
        for x in 0..field.len() {
            for y in 0..field.len() {
                assert_eq!(
                    q.class_distance(q.class_of[x], q.class_of[y]),
                    merge.distance(x, y).unwrap()
                );
            }
        }
        // positive edge lengths, root at the minimum level
        let root = q.tree.root();
        assert_eq!(q.heights[root], field.min_value());
        for c in 0..q.heights.len() {
            if c != root {
                assert!(q.edge_lengths[c] > 0.0);
            }
        }
        for &m in field.minima() {
            assert_eq!(q.class_of[m], root);
        }
        // the class metric itself satisfies the four-point condition
        let k = q.heights.len();
        let matrix: Vec<Vec<f64>> = (0..k)
            .map(|a| (0..k).map(|b| q.class_distance(a, b)).collect())
            .collect();
        if k <= 40 {
            let report = four_point_check(&matrix).unwrap();
            assert!(report.is_zero_hyperbolic);
            assert_eq!(report.worst_violation, 0.0);
        }
    }
}

#[test]
fn zero_distance_matches_class_identity() {
    // the discrete form of the equivalence criterion: d(x, y) = 0 exactly
    // when x and y share a class
    for field in fields(40, 25, 89) {
        let merge = build_merge(&field);
        for x in 0..field.len() {
            for y in 0..field.len() {
                let same_class = merge.class_of(x).unwrap() == merge.class_of(y).unwrap();
                let zero = merge.distance(x, y).unwrap() == 0.0;
                assert_eq!(same_class, zero, "criteria disagree at ({x},{y})");
            }
        }
    }
}

#[test]
fn class_members_match_component_at_their_level() {
    for field in fields(30, 20, 97) {
        let merge = build_merge(&field);
        for x in 0..field.len() {
            let class = merge.class_of(x).unwrap();
            let level = merge.class_height(class);
            assert_eq!(level, field.value(x));
            let component = field.component_at(x, level).unwrap();
            let members: Vec<usize> = component
                .iter()
                .copied()
                .filter(|&y| field.value(y) == level)
                .collect();
            assert_eq!(merge.class_members(class), members.as_slice());
        }
    }
}

#[test]
fn level_representative_walks_exact_levels() {
    for field in fields(30, 20, 113) {
        let merge = build_merge(&field);
        for x in 0..field.len() {
            // every realized ancestor level answers, and with the right class
            let mut class = merge.class_of(x).unwrap();
            loop {
                let level = merge.class_height(class);
                assert_eq!(merge.level_representative(x, level).unwrap(), class);
                if class == merge.root_class() {
                    break;
                }
                class = merge.class_parent(class);
            }
            assert_eq!(
                merge.level_representative(x, field.min_value()).unwrap(),
                merge.root_class()
            );
            // levels above h(x) are rejected
            assert!(matches!(
                merge.level_representative(x, field.value(x) + 1.0),
                Err(ContourError::LevelAboveX { .. })
            ));
            // an unrealized level brackets correctly
            let own = merge.class_of(x).unwrap();
            if own != merge.root_class() {
                let parent = merge.class_parent(own);
                let mid = (merge.class_height(own) + merge.class_height(parent)) / 2.0;
                if mid != merge.class_height(own) && mid != merge.class_height(parent) {
                    match merge.level_representative(x, mid) {
                        Err(ContourError::LevelNotRealized { below, above, .. }) => {
                            assert_eq!(below, Some((parent, merge.class_height(parent))));
                            assert_eq!(above, Some((own, merge.class_height(own))));
                        }
                        other => panic!("expected LevelNotRealized, got {other:?}"),
                    }
                }
            }
        }
    }
}
