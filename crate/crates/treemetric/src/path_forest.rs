//! Families of token paths from a common origin, with the separation metric.
//!
//! Paths are finite token sequences stored in a trie, so every prefix of a
//! stored path is present. The separation of two paths is the length of
//! their longest common prefix, and
//! `d(p, q) = len(p) + len(q) - 2 separation(p, q)` makes the family a tree
//! metric: [`PathForest::to_tree`] exposes the trie itself as the realizing
//! rooted tree.

use thiserror::Error;

use crate::tree::RootedTree;

/// Errors from path queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    /// Path id was never returned by an insert.
    #[error("path id {id} out of range for {count} paths")]
    BadPathId { id: usize, count: usize },
}

/// A trie over opaque string tokens; inserted paths get dense ids.
#[derive(Debug, Clone, Default)]
pub struct PathForest {
    tokens: Vec<String>,
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    path_of_node: Vec<Option<usize>>,
    node_of_path: Vec<usize>,
}

impl PathForest {
    /// An empty forest: just the origin.
    pub fn new() -> Self {
        PathForest {
            tokens: vec![String::new()],
            parent: vec![0],
            children: vec![Vec::new()],
            depth: vec![0],
            path_of_node: vec![None],
            node_of_path: Vec::new(),
        }
    }

    /// Number of registered paths.
    pub fn path_count(&self) -> usize {
        self.node_of_path.len()
    }

    /// Number of trie vertices (origin included).
    pub fn node_count(&self) -> usize {
        self.tokens.len()
    }

    /// Token count of a path.
    pub fn path_len(&self, p: usize) -> Result<usize, PathError> {
        self.check(p)?;
        Ok(self.depth[self.node_of_path[p]])
    }

    /// Token sequence of a path, origin to tip.
    pub fn path_tokens(&self, p: usize) -> Result<Vec<&str>, PathError> {
        self.check(p)?;
        let mut node = self.node_of_path[p];
        let mut tokens = Vec::with_capacity(self.depth[node]);
        while node != 0 {
            tokens.push(self.tokens[node].as_str());
            node = self.parent[node];
        }
        tokens.reverse();
        Ok(tokens)
    }

    fn check(&self, p: usize) -> Result<(), PathError> {
        if p < self.path_count() {
            Ok(())
        } else {
            Err(PathError::BadPathId {
                id: p,
                count: self.path_count(),
            })
        }
    }

    /// Inserts a token sequence, extending the trie as needed. The empty
    /// sequence is the origin itself. Idempotent: a duplicate sequence gets
    /// its existing id back.
    pub fn insert_path<S: AsRef<str>>(&mut self, tokens: &[S]) -> usize {
        let mut node = 0usize;
        for token in tokens {
            let token = token.as_ref();
            node = match self.children[node]
                .iter()
                .copied()
                .find(|&c| self.tokens[c] == token)
            {
                Some(c) => c,
                None => {
                    let c = self.tokens.len();
                    self.tokens.push(token.to_string());
                    self.parent.push(node);
                    self.children.push(Vec::new());
                    self.depth.push(self.depth[node] + 1);
                    self.path_of_node.push(None);
                    self.children[node].push(c);
                    c
                }
            };
        }
        match self.path_of_node[node] {
            Some(id) => id,
            None => {
                let id = self.node_of_path.len();
                self.path_of_node[node] = Some(id);
                self.node_of_path.push(node);
                id
            }
        }
    }

    /// Longest common prefix length of two paths; equals the depth of the
    /// lowest common ancestor of their trie nodes.
    pub fn separation(&self, p: usize, q: usize) -> Result<usize, PathError> {
        self.check(p)?;
        self.check(q)?;
        let mut a = self.node_of_path[p];
        let mut b = self.node_of_path[q];
        while self.depth[a] > self.depth[b] {
            a = self.parent[a];
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b];
        }
        while a != b {
            a = self.parent[a];
            b = self.parent[b];
        }
        Ok(self.depth[a])
    }

    /// The separation metric `len(p) + len(q) - 2 separation(p, q)`.
    pub fn distance(&self, p: usize, q: usize) -> Result<usize, PathError> {
        let sep = self.separation(p, q)?;
        let np = self.depth[self.node_of_path[p]];
        let nq = self.depth[self.node_of_path[q]];
        Ok(np + nq - 2 * sep)
    }

    /// The trie as a rooted tree with unit edges and token labels, plus the
    /// map from path id to tree vertex. Tree distance between mapped
    /// vertices equals [`PathForest::distance`].
    pub fn to_tree(&self) -> (RootedTree, Vec<usize>) {
        let tree = RootedTree::from_child_lists(0, self.children.clone())
            .expect("trie links always form a tree")
            .with_labels(self.tokens.clone())
            .expect("one token per node");
        (tree, self.node_of_path.clone())
    }
}
