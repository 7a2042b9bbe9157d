//! Rooted trees with dense integer vertex ids.
//!
//! A tree is stored as a parent array plus ordered child lists. The root is
//! its own parent. Child order is significant: the excursion codec walks
//! children in list order, so two trees with the same edges but different
//! sibling order are different objects here. [`RootedTree::canonical_newick`]
//! provides the order-insensitive serialization.

use thiserror::Error;

/// Errors from tree construction and queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    /// The edge set contains a cycle (including parallel edges and self loops).
    #[error("edge set contains a cycle")]
    CycleDetected,
    /// Some vertex cannot be reached from the root.
    #[error("vertex {vertex} is not reachable from the root")]
    Disconnected { vertex: usize },
    /// Root id outside `0..n`.
    #[error("root {root} out of range for {n} vertices")]
    BadRoot { root: usize, n: usize },
    /// Vertex id outside `0..n`.
    #[error("vertex {vertex} out of range for {n} vertices")]
    BadVertex { vertex: usize, n: usize },
    /// The comparison oracle has no least element.
    #[error("partial order has no least element")]
    NoLeastElement,
    /// Some down-set `{a <= top}` is not totally ordered; `a` and `b` are the
    /// incomparable witnesses.
    #[error("down-set of {top} is not a chain: {a} and {b} are incomparable")]
    DownSetNotChain { a: usize, b: usize, top: usize },
    /// Label vector length does not match the vertex count.
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// Result of comparing two vertices in the ancestor order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AncestorRelation {
    /// First vertex lies on the root path of the second (and differs from it).
    Ancestor,
    /// Second vertex lies on the root path of the first.
    Descendant,
    /// Same vertex.
    Equal,
    /// Neither is an ancestor of the other.
    Incomparable,
}

/// How sibling order is chosen when building a tree from an edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChildOrder {
    /// Children sorted by ascending vertex id.
    #[default]
    AscendingId,
    /// Children in the order their edges appear in the input.
    InputOrder,
}

/// A finite rooted tree over vertices `0..n`.
///
/// Immutable after construction; all queries take `&self`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: usize,
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl RootedTree {
    /// Builds a tree from an undirected edge list over vertices `0..n`,
    /// oriented away from `root`.
    pub fn from_edges(
        n: usize,
        root: usize,
        edges: &[(usize, usize)],
        order: ChildOrder,
    ) -> Result<Self, TreeError> {
        if n == 0 || root >= n {
            return Err(TreeError::BadRoot { root, n });
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(TreeError::BadVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(TreeError::CycleDetected);
            }
            adj[u].push(v);
            adj[v].push(u);
        }

        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        parent[root] = root;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if v == parent[u] {
                    // the tree edge back up; a parallel copy of it is caught
                    // from the parent's side
                    continue;
                }
                if parent[v] != usize::MAX {
                    return Err(TreeError::CycleDetected);
                }
                parent[v] = u;
                depth[v] = depth[u] + 1;
                children[u].push(v);
                queue.push_back(v);
            }
        }
        if let Some(vertex) = (0..n).find(|&v| parent[v] == usize::MAX) {
            return Err(TreeError::Disconnected { vertex });
        }
        if order == ChildOrder::AscendingId {
            for list in &mut children {
                list.sort_unstable();
            }
        }
        Ok(RootedTree {
            root,
            parent,
            children,
            depth,
            labels: None,
        })
    }

    /// Builds a tree directly from per-vertex ordered child lists.
    ///
    /// `children.len()` is the vertex count; every non-root vertex must appear
    /// exactly once as a child.
    pub fn from_child_lists(root: usize, children: Vec<Vec<usize>>) -> Result<Self, TreeError> {
        let n = children.len();
        if n == 0 || root >= n {
            return Err(TreeError::BadRoot { root, n });
        }
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        parent[root] = root;
        let mut stack = vec![root];
        let mut visited = 1usize;
        while let Some(u) = stack.pop() {
            for &v in &children[u] {
                if v >= n {
                    return Err(TreeError::BadVertex { vertex: v, n });
                }
                if parent[v] != usize::MAX {
                    return Err(TreeError::CycleDetected);
                }
                parent[v] = u;
                depth[v] = depth[u] + 1;
                visited += 1;
                stack.push(v);
            }
        }
        if visited != n {
            let vertex = (0..n).find(|&v| parent[v] == usize::MAX).unwrap();
            return Err(TreeError::Disconnected { vertex });
        }
        Ok(RootedTree {
            root,
            parent,
            children,
            depth,
            labels: None,
        })
    }

    /// Attaches one label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, TreeError> {
        if labels.len() != self.len() {
            return Err(TreeError::LabelCount {
                expected: self.len(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    /// True only for the degenerate zero-vertex case, which cannot be built.
    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of edges (`n - 1`).
    pub fn edge_count(&self) -> usize {
        self.len() - 1
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Parent of `v`; the root maps to itself.
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    /// Ordered children of `v`.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Edge distance from the root.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    fn check_vertex(&self, v: usize) -> Result<(), TreeError> {
        if v < self.len() {
            Ok(())
        } else {
            Err(TreeError::BadVertex {
                vertex: v,
                n: self.len(),
            })
        }
    }

    /// Compares two vertices in the ancestor partial order: `Ancestor` means
    /// `a` lies on the path from the root to `b`.
    pub fn compare(&self, a: usize, b: usize) -> Result<AncestorRelation, TreeError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Ok(AncestorRelation::Equal);
        }
        if self.depth[a] < self.depth[b] {
            Ok(if self.climbs_to(b, a) {
                AncestorRelation::Ancestor
            } else {
                AncestorRelation::Incomparable
            })
        } else if self.depth[b] < self.depth[a] {
            Ok(if self.climbs_to(a, b) {
                AncestorRelation::Descendant
            } else {
                AncestorRelation::Incomparable
            })
        } else {
            Ok(AncestorRelation::Incomparable)
        }
    }

    /// Walks parent links from `from` up to the depth of `to`.
    fn climbs_to(&self, from: usize, to: usize) -> bool {
        let mut v = from;
        while self.depth[v] > self.depth[to] {
            v = self.parent[v];
        }
        v == to
    }

    /// Canonical Newick string.
    ///
    /// Children are serialized in ascending order of their serialized subtree
    /// string, so sibling input order does not affect the output. Labeled
    /// trees print their labels; unlabeled trees print pure shape, making the
    /// output invariant under vertex renumbering.
    pub fn canonical_newick(&self) -> String {
        let mut out = self.newick_subtree(self.root, self.labels.is_some());
        out.push(';');
        out
    }

    /// Canonical Newick of the unlabeled shape, ignoring any labels.
    pub fn canonical_newick_shape(&self) -> String {
        let mut out = self.newick_subtree(self.root, false);
        out.push(';');
        out
    }

    fn newick_subtree(&self, v: usize, labeled: bool) -> String {
        let name = if labeled {
            self.label(v).unwrap_or("").to_string()
        } else {
            String::new()
        };
        if self.children[v].is_empty() {
            return name;
        }
        let mut parts: Vec<String> = self.children[v]
            .iter()
            .map(|&c| self.newick_subtree(c, labeled))
            .collect();
        parts.sort();
        format!("({}){}", parts.join(","), name)
    }
}

/// Builds a validated tree from an undirected edge list rooted at `root`.
pub fn build_tree(
    n: usize,
    root: usize,
    edges: &[(usize, usize)],
    order: ChildOrder,
) -> Result<RootedTree, TreeError> {
    RootedTree::from_edges(n, root, edges, order)
}

/// Reconstructs the unique rooted tree whose ancestor order is `leq`.
///
/// Elements are `0..n`; `leq(a, b)` answers whether `a` precedes `b`. The
/// oracle must be a partial order with a least element in which every
/// down-set `{a : a <= b}` is a chain; the parent of `b` is the maximum of
/// its proper down-set.
pub fn from_partial_order(
    n: usize,
    leq: impl Fn(usize, usize) -> bool,
) -> Result<RootedTree, TreeError> {
    let root = (0..n)
        .find(|&r| (0..n).all(|x| x == r || leq(r, x)))
        .ok_or(TreeError::NoLeastElement)?;
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for b in 0..n {
        let down: Vec<usize> = (0..n).filter(|&a| a != b && leq(a, b)).collect();
        for (i, &x) in down.iter().enumerate() {
            for &y in &down[i + 1..] {
                if !leq(x, y) && !leq(y, x) {
                    return Err(TreeError::DownSetNotChain { a: x, b: y, top: b });
                }
            }
        }
        if b == root {
            continue;
        }
        // Maximum of a chain: the element below no other member.
        let parent = down
            .iter()
            .copied()
            .find(|&p| down.iter().all(|&a| a == p || leq(a, p)))
            .ok_or(TreeError::NoLeastElement)?;
        children[parent].push(b);
    }
    for list in &mut children {
        list.sort_unstable();
    }
    RootedTree::from_child_lists(root, children)
}
