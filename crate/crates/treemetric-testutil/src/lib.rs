//! Brute-force reference implementations and random generators used by the
//! test suites. Everything here is deliberately naive and independent of the
//! production code paths it is used to check.

use rand::Rng;

use treemetric::contour::ScalarField;
use treemetric::tree::RootedTree;

/// BFS distances from `src` over the tree's undirected edge set.
pub fn bfs_distances(tree: &RootedTree, src: usize) -> Vec<usize> {
    let n = tree.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        if v != tree.root() {
            adj[v].push(tree.parent(v));
            adj[tree.parent(v)].push(v);
        }
    }
    let mut dist = vec![usize::MAX; n];
    dist[src] = 0;
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs BFS distance matrix.
pub fn all_pairs_bfs(tree: &RootedTree) -> Vec<Vec<usize>> {
    (0..tree.len()).map(|v| bfs_distances(tree, v)).collect()
}

/// Every excursion height sequence with exactly `edges` up-steps, by direct
/// backtracking over the step choices.
pub fn enumerate_dyck(edges: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = vec![0i64];
    fn go(current: &mut Vec<i64>, remaining_steps: usize, out: &mut Vec<Vec<i64>>) {
        if remaining_steps == 0 {
            if *current.last().unwrap() == 0 {
                out.push(current.clone());
            }
            return;
        }
        let h = *current.last().unwrap();
        // never go so high that the path cannot return to zero
        if h < remaining_steps as i64 - 1 {
            current.push(h + 1);
            go(current, remaining_steps - 1, out);
            current.pop();
        }
        if h > 0 {
            current.push(h - 1);
            go(current, remaining_steps - 1, out);
            current.pop();
        }
    }
    go(&mut current, 2 * edges, &mut out);
    out
}

/// Every ordered rooted tree with exactly `edges` edges, with vertices
/// numbered in preorder. Built by composing root subtrees recursively, not
/// via the excursion codec.
pub fn enumerate_ordered_trees(edges: usize) -> Vec<RootedTree> {
    enumerate_forests(edges)
        .into_iter()
        .map(|forest| {
            let mut children: Vec<Vec<usize>> = vec![Vec::new()];
            attach(&mut children, 0, &forest);
            RootedTree::from_child_lists(0, children).expect("enumerated forests are trees")
        })
        .collect()
}

/// An ordered forest: the list of root subtrees, each a nested structure.
#[derive(Clone, Debug)]
pub struct ForestNode(pub Vec<ForestNode>);

fn enumerate_forests(edges: usize) -> Vec<Vec<ForestNode>> {
    if edges == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // first subtree takes k edges (k - 1 internal + 1 connecting), rest recurse
    for k in 1..=edges {
        for first in enumerate_forests(k - 1) {
            for rest in enumerate_forests(edges - k) {
                let mut forest = vec![ForestNode(first.clone())];
                forest.extend(rest);
                out.push(forest);
            }
        }
    }
    out
}

fn attach(children: &mut Vec<Vec<usize>>, parent: usize, forest: &[ForestNode]) {
    for node in forest {
        let id = children.len();
        children.push(Vec::new());
        children[parent].push(id);
        attach(children, id, &node.0);
    }
}

/// Ordered isomorphism: same shape with sibling order preserved, labels and
/// vertex numbering ignored.
pub fn ordered_isomorphic(a: &RootedTree, b: &RootedTree) -> bool {
    fn walk(a: &RootedTree, va: usize, b: &RootedTree, vb: usize) -> bool {
        let ca = a.children(va);
        let cb = b.children(vb);
        ca.len() == cb.len() && ca.iter().zip(cb.iter()).all(|(&x, &y)| walk(a, x, b, y))
    }
    a.len() == b.len() && walk(a, a.root(), b, b.root())
}

/// Tree distance by explicitly walking parent links, no index involved.
pub fn walk_distance(tree: &RootedTree, a: usize, b: usize) -> usize {
    let mut x = a;
    let mut y = b;
    let mut steps = 0;
    while tree.depth(x) > tree.depth(y) {
        x = tree.parent(x);
        steps += 1;
    }
    while tree.depth(y) > tree.depth(x) {
        y = tree.parent(y);
        steps += 1;
    }
    while x != y {
        x = tree.parent(x);
        y = tree.parent(y);
        steps += 2;
    }
    steps
}

/// Maximin path values between all vertex pairs: `W[y][z]` is the maximum
/// over `y`-to-`z` paths of the minimum field value along the path, with
/// `W[v][v] = h(v)`. Floyd-Warshall over the (max, min) semiring.
pub fn maximin_matrix(field: &ScalarField) -> Vec<Vec<f64>> {
    let n = field.len();
    let mut w = vec![vec![f64::NEG_INFINITY; n]; n];
    for (v, row) in w.iter_mut().enumerate() {
        row[v] = field.value(v);
    }
    for &(u, v) in field.edges() {
        let through = field.value(u).min(field.value(v));
        if through > w[u][v] {
            w[u][v] = through;
            w[v][u] = through;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = w[i][k].min(w[k][j]);
                if via > w[i][j] {
                    w[i][j] = via;
                }
            }
        }
    }
    w
}

/// The merge level by direct definition: scan the distinct levels downward
/// and return the first at which `component_at(y, level)` contains `z`.
pub fn threshold_lambda(field: &ScalarField, y: usize, z: usize) -> f64 {
    let mut levels: Vec<f64> = field.values().to_vec();
    levels.sort_by(|a, b| b.total_cmp(a));
    levels.dedup();
    let cap = field.value(y).min(field.value(z));
    for &level in &levels {
        if level > cap {
            continue;
        }
        if field
            .component_at(y, level)
            .expect("level <= h(y)")
            .binary_search(&z)
            .is_ok()
        {
            return level;
        }
    }
    unreachable!("a connected field joins every pair at the minimum level")
}

/// Random tree on `n` vertices rooted at 0: each vertex attaches to a
/// uniform earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> RootedTree {
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 1..n {
        let p = rng.random_range(0..v);
        children[p].push(v);
    }
    RootedTree::from_child_lists(0, children).expect("random attachment is a tree")
}

/// Random connected graph with integer values in `0..=max_value`: a random
/// spanning tree plus `extra` random chords.
pub fn random_field<R: Rng>(rng: &mut R, n: usize, extra: usize, max_value: u32) -> ScalarField {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for _ in 0..extra {
        if n < 2 {
            break;
        }
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    let values = (0..n)
        .map(|_| rng.random_range(0..=max_value) as f64)
        .collect();
    ScalarField::new(values, &edges).expect("spanning tree keeps the graph connected")
}
