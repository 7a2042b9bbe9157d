//! Contour (merge) trees of scalar fields on finite connected graphs.
//!
//! For a field `h` on a connected graph, the contour through `x` at level
//! `lambda <= h(x)` is the connected component of `x` in the subgraph
//! induced by `{y : h(y) >= lambda}`. Components at a fixed level are equal
//! or disjoint, and they nest as the level drops, so one descending sweep
//! with a union-find builds them all: [`build_merge`] activates vertices
//! level by level, unions across edges into the already-active region, and
//! records one equivalence class per (level, component) pair. The class of
//! `x` collects exactly the vertices `y` with `h(y) = h(x)` lying in `x`'s
//! component at level `h(x)`.
//!
//! The merge level `lambda(y, z)` — the highest level at which `y` and `z`
//! share a component — is then the height of the lowest common ancestor of
//! their classes, and `d(x, y) = h(x) + h(y) - 2 lambda(x, y)` is a
//! pseudo-metric whose quotient is the contour tree: a rooted tree over the
//! classes with edge lengths equal to level differences, whose weighted path
//! metric reproduces `d` exactly.

use thiserror::Error;

use crate::metric::TreeMetricIndex;
use crate::tree::RootedTree;

/// Errors from field construction and contour queries.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ContourError {
    /// Vertex id outside `0..n`.
    #[error("vertex {vertex} out of range for {n} vertices")]
    BadVertex { vertex: usize, n: usize },
    /// The graph is not connected.
    #[error("graph is disconnected: vertex {vertex} unreachable from vertex 0")]
    DisconnectedGraph { vertex: usize },
    /// A field needs at least one vertex.
    #[error("field has no vertices")]
    EmptyField,
    /// Field values must be finite.
    #[error("value at vertex {vertex} is not finite")]
    NotFinite { vertex: usize },
    /// Field values must be nonnegative.
    #[error("value {value} at vertex {vertex} is negative")]
    NegativeValue { vertex: usize, value: f64 },
    /// Self loops carry no contour information and are rejected.
    #[error("self loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    /// Query level lies above the vertex's own value.
    #[error("level {level} is above h(x) = {height}")]
    LevelAboveX { level: f64, height: f64 },
    /// No ancestor class sits exactly at the requested level; the nearest
    /// realized levels on the root path are reported.
    #[error("level {level} not realized on the root path (below: {below:?}, above: {above:?})")]
    LevelNotRealized {
        level: f64,
        /// Nearest ancestor class strictly below the level, with its height.
        below: Option<(usize, f64)>,
        /// Nearest ancestor class strictly above the level, with its height.
        above: Option<(usize, f64)>,
    },
}

/// A nonnegative scalar value per vertex of a finite connected graph.
#[derive(Debug, Clone)]
pub struct ScalarField {
    adj: Vec<Vec<usize>>,
    values: Vec<f64>,
    edges: Vec<(usize, usize)>,
    minima: Vec<usize>,
    min_value: f64,
}

impl ScalarField {
    /// Validates values and edges: finite nonnegative values, ids in range,
    /// no self loops, connected graph. Duplicate edges are collapsed.
    pub fn new(values: Vec<f64>, edges: &[(usize, usize)]) -> Result<Self, ContourError> {
        let n = values.len();
        if n == 0 {
            return Err(ContourError::EmptyField);
        }
        for (vertex, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(ContourError::NotFinite { vertex });
            }
            if v < 0.0 {
                return Err(ContourError::NegativeValue { vertex, value: v });
            }
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(ContourError::BadVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(ContourError::SelfLoop { vertex: u });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }

        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if let Some(vertex) = (0..n).find(|&v| !seen[v]) {
            return Err(ContourError::DisconnectedGraph { vertex });
        }

        let min_value = values.iter().copied().fold(f64::INFINITY, f64::min);
        let minima = (0..n).filter(|&v| values[v] == min_value).collect();
        Ok(ScalarField {
            adj,
            values,
            edges: normalized,
            minima,
            min_value,
        })
    }

    /// Vertex count.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, v: usize) -> f64 {
        self.values[v]
    }

    /// Normalized undirected edges, `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Vertices attaining the minimum value.
    pub fn minima(&self) -> &[usize] {
        &self.minima
    }

    pub fn min_value(&self) -> f64 {
        self.min_value
    }

    fn check_vertex(&self, v: usize) -> Result<(), ContourError> {
        if v < self.len() {
            Ok(())
        } else {
            Err(ContourError::BadVertex {
                vertex: v,
                n: self.len(),
            })
        }
    }

    /// The contour of `x` at `level`: the connected component of `x` in the
    /// subgraph induced by `{y : h(y) >= level}`, as a sorted vertex list.
    ///
    /// Plain flood fill; this is the reference the sweep is tested against.
    pub fn component_at(&self, x: usize, level: f64) -> Result<Vec<usize>, ContourError> {
        self.check_vertex(x)?;
        if level > self.values[x] {
            return Err(ContourError::LevelAboveX {
                level,
                height: self.values[x],
            });
        }
        let mut seen = vec![false; self.len()];
        seen[x] = true;
        let mut stack = vec![x];
        let mut out = vec![x];
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] && self.values[v] >= level {
                    seen[v] = true;
                    stack.push(v);
                    out.push(v);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// The merge hierarchy of a field's super-level components.
///
/// Classes are numbered in creation order: levels descending, and within a
/// level by smallest member id. The last class is the root (the whole graph
/// at the minimum level). Immutable after [`build_merge`].
#[derive(Debug, Clone)]
pub struct MergeStructure {
    values: Vec<f64>,
    levels: Vec<f64>,
    class_of: Vec<usize>,
    class_height: Vec<f64>,
    class_members: Vec<Vec<usize>>,
    class_parent: Vec<usize>,
    class_children: Vec<Vec<usize>>,
    root_class: usize,
    index: TreeMetricIndex,
}

/// Builds all super-level components in one descending union-find sweep.
///
/// At each distinct level the vertices attaining it are activated and
/// unioned with active neighbors; each resulting component contributes one
/// new class whose children are the top classes of the components it
/// absorbed. Runs in O((n + m) alpha) after the sort.
pub fn build_merge(field: &ScalarField) -> MergeStructure {
    let n = field.len();
    let values = field.values().to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));

    let mut dsu = DisjointSet::new(n);
    let mut active = vec![false; n];
    // current top class of each active component, indexed by DSU root
    let mut comp_class: Vec<usize> = vec![usize::MAX; n];

    let mut levels = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    let mut class_height: Vec<f64> = Vec::new();
    let mut class_members: Vec<Vec<usize>> = Vec::new();
    let mut class_parent: Vec<usize> = Vec::new();
    let mut class_children: Vec<Vec<usize>> = Vec::new();

    let mut i = 0;
    while i < n {
        let level = values[order[i]];
        let start = i;
        while i < n && values[order[i]] == level {
            i += 1;
        }
        let batch = &order[start..i];
        levels.push(level);

        // Old components adjacent to the batch, resolved before any union
        // at this level so the roots are still valid.
        let mut absorbed: Vec<(usize, usize, usize)> = Vec::new(); // (v, old root, old class)
        for &v in batch {
            for &u in field.neighbors(v) {
                if active[u] {
                    let root = dsu.find(u);
                    absorbed.push((v, root, comp_class[root]));
                }
            }
        }
        for &v in batch {
            active[v] = true;
        }
        for &(v, old_root, _) in &absorbed {
            dsu.union(v, old_root);
        }
        for &v in batch {
            for &u in field.neighbors(v) {
                if u < v && values[u] == level {
                    dsu.union(u, v);
                }
            }
        }

        // one class per component formed at this level
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        for &v in batch {
            let r = dsu.find(v);
            match groups.iter_mut().find(|(root, _)| *root == r) {
                Some((_, members)) => members.push(v),
                None => groups.push((r, vec![v])),
            }
        }
        for (root, members) in groups {
            let class = class_height.len();
            for &v in &members {
                class_of[v] = class;
            }
            let mut kids: Vec<usize> = absorbed
                .iter()
                .filter(|&&(v, _, _)| dsu.find(v) == root)
                .map(|&(_, _, c)| c)
                .collect();
            kids.sort_unstable();
            kids.dedup();
            for &c in &kids {
                class_parent[c] = class;
            }
            class_height.push(level);
            class_members.push(members);
            class_parent.push(class);
            class_children.push(kids);
            comp_class[root] = class;
        }
    }

    let root_class = comp_class[dsu.find(0)];
    let class_tree = RootedTree::from_child_lists(root_class, class_children.clone())
        .expect("a connected field always yields a class tree");
    let index = TreeMetricIndex::build(&class_tree);

    MergeStructure {
        values,
        levels,
        class_of,
        class_height,
        class_members,
        class_parent,
        class_children,
        root_class,
        index,
    }
}

impl MergeStructure {
    /// Original vertex count.
    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    /// Distinct field values in descending sweep order.
    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn class_count(&self) -> usize {
        self.class_height.len()
    }

    /// Class of the minimum level containing every vertex's branch.
    pub fn root_class(&self) -> usize {
        self.root_class
    }

    pub fn class_of(&self, v: usize) -> Result<usize, ContourError> {
        self.check_vertex(v)?;
        Ok(self.class_of[v])
    }

    pub fn class_height(&self, class: usize) -> f64 {
        self.class_height[class]
    }

    /// Vertices of a class, in activation order (ascending id within the
    /// class's level).
    pub fn class_members(&self, class: usize) -> &[usize] {
        &self.class_members[class]
    }

    /// Parent class; the root class maps to itself.
    pub fn class_parent(&self, class: usize) -> usize {
        self.class_parent[class]
    }

    fn check_vertex(&self, v: usize) -> Result<(), ContourError> {
        if v < self.len() {
            Ok(())
        } else {
            Err(ContourError::BadVertex {
                vertex: v,
                n: self.len(),
            })
        }
    }

    /// The merge level `lambda(y, z)`: the highest level at which `y` and
    /// `z` lie in one super-level component. Equals the height of the lowest
    /// common ancestor of their classes; `lambda(x, x) = h(x)`.
    pub fn lambda(&self, y: usize, z: usize) -> Result<f64, ContourError> {
        self.check_vertex(y)?;
        self.check_vertex(z)?;
        let ancestor = self
            .index
            .lca(self.class_of[y], self.class_of[z])
            .expect("class ids are always in range");
        Ok(self.class_height[ancestor])
    }

    /// The contour pseudo-metric `h(x) + h(y) - 2 lambda(x, y)`.
    pub fn distance(&self, x: usize, y: usize) -> Result<f64, ContourError> {
        let merge_level = self.lambda(x, y)?;
        Ok(self.values[x] + self.values[y] - 2.0 * merge_level)
    }

    /// The unique ancestor class of `x` at exactly `level`.
    ///
    /// Only levels realized by a class on the root path exist in the
    /// discrete quotient; other levels report the bracketing classes.
    pub fn level_representative(&self, x: usize, level: f64) -> Result<usize, ContourError> {
        self.check_vertex(x)?;
        if level > self.values[x] {
            return Err(ContourError::LevelAboveX {
                level,
                height: self.values[x],
            });
        }
        let mut class = self.class_of[x];
        let mut above: Option<(usize, f64)> = None;
        loop {
            let height = self.class_height[class];
            if height == level {
                return Ok(class);
            }
            if height < level {
                return Err(ContourError::LevelNotRealized {
                    level,
                    below: Some((class, height)),
                    above,
                });
            }
            above = Some((class, height));
            if class == self.root_class {
                return Err(ContourError::LevelNotRealized {
                    level,
                    below: None,
                    above,
                });
            }
            class = self.class_parent[class];
        }
    }

    /// The contour tree: classes as vertices, rooted at the minimum level,
    /// edge lengths equal to level differences.
    pub fn quotient_tree(&self) -> QuotientTree {
        let tree = RootedTree::from_child_lists(self.root_class, self.class_children.clone())
            .expect("class lists form a tree by construction");
        let edge_lengths = (0..self.class_count())
            .map(|c| {
                if c == self.root_class {
                    0.0
                } else {
                    self.class_height[c] - self.class_height[self.class_parent[c]]
                }
            })
            .collect();
        QuotientTree {
            tree,
            class_of: self.class_of.clone(),
            heights: self.class_height.clone(),
            edge_lengths,
        }
    }
}

/// The quotient metric space of a field: one vertex per contour class.
#[derive(Debug, Clone)]
pub struct QuotientTree {
    /// Classes as a rooted tree (root = class of the minima).
    pub tree: RootedTree,
    /// Original vertex -> class.
    pub class_of: Vec<usize>,
    /// Class -> its level.
    pub heights: Vec<f64>,
    /// Class -> length of the edge to its parent (0 at the root).
    pub edge_lengths: Vec<f64>,
}

impl QuotientTree {
    /// Weighted path distance between two classes: the sum of edge lengths
    /// along the unique path.
    pub fn class_distance(&self, a: usize, b: usize) -> f64 {
        let mut x = a;
        let mut y = b;
        let mut total = 0.0;
        while self.tree.depth(x) > self.tree.depth(y) {
            total += self.edge_lengths[x];
            x = self.tree.parent(x);
        }
        while self.tree.depth(y) > self.tree.depth(x) {
            total += self.edge_lengths[y];
            y = self.tree.parent(y);
        }
        while x != y {
            total += self.edge_lengths[x] + self.edge_lengths[y];
            x = self.tree.parent(x);
            y = self.tree.parent(y);
        }
        total
    }

    /// Canonical Newick with heights as labels and level differences as
    /// branch lengths.
    pub fn to_newick(&self) -> String {
        let mut out = self.newick_subtree(self.tree.root());
        out.push(';');
        out
    }

    fn newick_subtree(&self, class: usize) -> String {
        let mut name = crate::io::format_number(self.heights[class]);
        if class != self.tree.root() {
            name.push(':');
            name.push_str(&crate::io::format_number(self.edge_lengths[class]));
        }
        if self.tree.children(class).is_empty() {
            return name;
        }
        let mut parts: Vec<String> = self
            .tree
            .children(class)
            .iter()
            .map(|&c| self.newick_subtree(c))
            .collect();
        parts.sort();
        format!("({}){}", parts.join(","), name)
    }

    /// Deterministic DOT rendering: vertices by id, edges sorted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph contour_tree {\n");
        for c in 0..self.heights.len() {
            out.push_str(&format!(
                "  c{} [label=\"h={}\"];\n",
                c,
                crate::io::format_number(self.heights[c])
            ));
        }
        let mut edges: Vec<(usize, usize)> = (0..self.heights.len())
            .filter(|&c| c != self.tree.root())
            .map(|c| (self.tree.parent(c), c))
            .collect();
        edges.sort_unstable();
        for (p, c) in edges {
            out.push_str(&format!(
                "  c{} -- c{} [label=\"{}\"];\n",
                p,
                c,
                crate::io::format_number(self.edge_lengths[c])
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_field() -> ScalarField {
        // path 0 - 1 - 2 with h = (5, 2, 7)
        ScalarField::new(vec![5.0, 2.0, 7.0], &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn field_validation() {
        assert!(matches!(
            ScalarField::new(vec![], &[]),
            Err(ContourError::EmptyField)
        ));
        assert!(matches!(
            ScalarField::new(vec![1.0, 1.0], &[]),
            Err(ContourError::DisconnectedGraph { vertex: 1 })
        ));
        assert!(matches!(
            ScalarField::new(vec![1.0, -2.0], &[(0, 1)]),
            Err(ContourError::NegativeValue { vertex: 1, .. })
        ));
        assert!(matches!(
            ScalarField::new(vec![f64::NAN], &[]),
            Err(ContourError::NotFinite { vertex: 0 })
        ));
        assert!(matches!(
            ScalarField::new(vec![1.0, 1.0], &[(0, 1), (0, 0)]),
            Err(ContourError::SelfLoop { vertex: 0 })
        ));
        assert!(matches!(
            ScalarField::new(vec![1.0, 1.0], &[(0, 5)]),
            Err(ContourError::BadVertex { vertex: 5, .. })
        ));
    }

    #[test]
    fn component_at_examples() {
        let f = path_field();
        assert_eq!(f.component_at(0, f.min_value()).unwrap(), vec![0, 1, 2]);
        assert_eq!(f.component_at(0, 3.0).unwrap(), vec![0]);
        assert_eq!(f.component_at(2, 7.0).unwrap(), vec![2]);
        assert!(matches!(
            f.component_at(1, 3.0),
            Err(ContourError::LevelAboveX { .. })
        ));
        assert!(matches!(
            f.component_at(9, 0.0),
            Err(ContourError::BadVertex { vertex: 9, .. })
        ));
    }

    #[test]
    fn sweep_on_the_path_example() {
        let merge = build_merge(&path_field());
        assert_eq!(merge.levels(), &[7.0, 5.0, 2.0]);
        assert_eq!(merge.class_count(), 3);
        assert_eq!(merge.class_members(0), &[2]);
        assert_eq!(merge.class_members(1), &[0]);
        assert_eq!(merge.class_members(2), &[1]);
        assert_eq!(merge.root_class(), 2);
        assert_eq!(merge.class_parent(0), 2);
        assert_eq!(merge.class_parent(1), 2);
    }

    #[test]
    fn constant_field_collapses() {
        let f = ScalarField::new(vec![3.0; 4], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let merge = build_merge(&f);
        assert_eq!(merge.levels(), &[3.0]);
        assert_eq!(merge.class_count(), 1);
        let q = merge.quotient_tree();
        assert_eq!(q.tree.len(), 1);
        for y in 0..4 {
            for z in 0..4 {
                assert_eq!(merge.lambda(y, z).unwrap(), 3.0);
                assert_eq!(merge.distance(y, z).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn star_leaves_merge_simultaneously() {
        // center 0 at value 0, three leaves at value 1
        let f = ScalarField::new(vec![0.0, 1.0, 1.0, 1.0], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let merge = build_merge(&f);
        assert_eq!(merge.levels(), &[1.0, 0.0]);
        assert_eq!(merge.class_count(), 4);
        for class in 0..3 {
            assert_eq!(merge.class_members(class).len(), 1);
            assert_eq!(merge.class_parent(class), 3);
        }
        assert_eq!(merge.class_members(3), &[0]);
    }

    #[test]
    fn lambda_examples() {
        let merge = build_merge(&path_field());
        for v in 0..3 {
            assert_eq!(merge.lambda(v, v).unwrap(), [5.0, 2.0, 7.0][v]);
        }
        assert_eq!(merge.lambda(0, 2).unwrap(), 2.0);
        assert_eq!(merge.distance(0, 2).unwrap(), 8.0);
        assert_eq!(merge.distance(1, 1).unwrap(), 0.0);
        assert!(matches!(
            merge.lambda(0, 9),
            Err(ContourError::BadVertex { vertex: 9, .. })
        ));
        assert!(matches!(
            merge.distance(9, 0),
            Err(ContourError::BadVertex { vertex: 9, .. })
        ));
    }

    #[test]
    fn quotient_of_the_path_example() {
        let merge = build_merge(&path_field());
        let q = merge.quotient_tree();
        assert_eq!(q.tree.len(), 3);
        assert_eq!(q.tree.root(), 2);
        assert_eq!(q.heights, vec![7.0, 5.0, 2.0]);
        assert_eq!(q.edge_lengths[0], 5.0);
        assert_eq!(q.edge_lengths[1], 3.0);
        assert_eq!(q.class_distance(0, 1), 8.0);
        assert_eq!(q.to_newick(), "(5:3,7:5)2;");
    }

    #[test]
    fn two_minima_share_the_root_class() {
        let f = ScalarField::new(vec![0.0, 5.0, 0.0], &[(0, 1), (1, 2)]).unwrap();
        let merge = build_merge(&f);
        assert_eq!(merge.class_of(0).unwrap(), merge.class_of(2).unwrap());
        assert_eq!(merge.distance(0, 2).unwrap(), 0.0);
        let q = merge.quotient_tree();
        assert_eq!(q.tree.len(), 2);
    }

    #[test]
    fn level_representative_walks_the_root_path() {
        let merge = build_merge(&path_field());
        // x = 2 (h = 7): its own class at its own level
        assert_eq!(merge.level_representative(2, 7.0).unwrap(), 0);
        // down to the root class at the minimum
        assert_eq!(merge.level_representative(2, 2.0).unwrap(), 2);
        match merge.level_representative(2, 4.0).unwrap_err() {
            ContourError::LevelNotRealized { below, above, .. } => {
                assert_eq!(below, Some((2, 2.0)));
                assert_eq!(above, Some((0, 7.0)));
            }
            other => panic!("unexpected error {other:?}"),
        }
        match merge.level_representative(2, 1.0).unwrap_err() {
            ContourError::LevelNotRealized { below, above, .. } => {
                assert_eq!(below, None);
                assert_eq!(above, Some((2, 2.0)));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(
            merge.level_representative(1, 3.0),
            Err(ContourError::LevelAboveX { .. })
        ));
    }

    #[test]
    fn bound_chain_holds() {
        let f = ScalarField::new(
            vec![3.0, 1.0, 4.0, 1.0, 5.0],
            &[(0, 1), (1, 2), (2, 3), (3, 4)],
        )
        .unwrap();
        let merge = build_merge(&f);
        for y in 0..5 {
            for z in 0..5 {
                let l = merge.lambda(y, z).unwrap();
                assert!(f.min_value() <= l);
                assert!(l <= f.value(y).min(f.value(z)));
            }
        }
    }

    #[test]
    fn dot_output_is_stable() {
        let merge = build_merge(&path_field());
        let dot = merge.quotient_tree().to_dot();
        let expected = "graph contour_tree {\n  c0 [label=\"h=7\"];\n  c1 [label=\"h=5\"];\n  c2 [label=\"h=2\"];\n  c2 -- c0 [label=\"5\"];\n  c2 -- c1 [label=\"3\"];\n}\n";
        assert_eq!(dot, expected);
    }
}
