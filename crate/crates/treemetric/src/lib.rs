//! Tree coding and tree metrics.
//!
//! This crate works with four closely related pictures of a tree:
//!
//! * [`tree::RootedTree`] — the combinatorial object: dense vertex ids,
//!   parent/child links, an induced ancestor partial order, and a canonical
//!   Newick serialization.
//! * [`excursion::Excursion`] — a nonnegative unit-step lattice path that
//!   codes a rooted tree via its depth-first contour walk. Encoding and
//!   decoding are exact inverses, and the excursion carries the tree metric
//!   through `h(m) + h(n) - 2 min h[m..=n]`.
//! * [`contour::ScalarField`] — a scalar value per vertex of a finite
//!   connected graph. A descending union-find sweep over the super-level
//!   sets yields the merge hierarchy, the merge level `lambda(y, z)`, the
//!   pseudo-metric `h(x) + h(y) - 2 lambda(x, y)`, and the quotient
//!   (contour) tree with weighted edges.
//! * [`path_forest::PathForest`] — a family of token paths from a common
//!   origin with the separation metric, stored as a trie; isometric to its
//!   own trie viewed as a rooted tree.
//!
//! [`metric::TreeMetricIndex`] answers LCA and distance queries in constant
//! time after linearithmic preprocessing, and [`metric::four_point_check`]
//! tests finite metrics for Gromov's four-point condition with delta = 0,
//! which characterizes tree metrics.
//!
//! [`io`] holds the plain-text formats shared with the `treemetric` CLI.

pub mod contour;
pub mod excursion;
pub mod io;
pub mod metric;
pub mod path_forest;
pub mod tree;

pub use tree::{AncestorRelation, RootedTree, TreeError};
