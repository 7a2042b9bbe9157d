//! Excursion coding of rooted trees.
//!
//! The contour walk of a rooted tree starts at the root, repeatedly descends
//! to the first unvisited child, and climbs back to the parent once a
//! vertex's children are exhausted, stopping when the root's children are
//! done. Every edge is traversed exactly twice, so recording the distance
//! from the root after each step yields a lattice path of length `2|E| + 1`
//! that starts and ends at zero, moves by one unit per step, and never goes
//! negative. That path determines the tree completely: [`decode`] rebuilds
//! it by identifying time indices at excursion distance zero, and
//! [`encode`] is its exact inverse.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::tree::RootedTree;

/// Errors from excursion validation and queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExcursionError {
    /// First or last height is not zero (or the sequence is empty).
    #[error("height at index {index} must be 0, found {value}")]
    BadEndpoint { index: usize, value: i64 },
    /// Step from `index` to `index + 1` is not a unit step.
    #[error("step at index {index} is not +1/-1")]
    BadStep { index: usize },
    /// A height went below zero.
    #[error("negative height at index {index}")]
    NegativeHeight { index: usize },
    /// Time index outside `0..len`.
    #[error("time index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
}

/// A nonnegative unit-step lattice path `h(0) = h(2m) = 0` coding a rooted
/// tree with `m` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Excursion {
    heights: Vec<usize>,
}

impl Excursion {
    /// Validates a raw integer sequence as an excursion.
    pub fn validate(seq: &[i64]) -> Result<Self, ExcursionError> {
        let first = *seq.first().ok_or(ExcursionError::BadEndpoint {
            index: 0,
            value: -1,
        })?;
        if first != 0 {
            return Err(ExcursionError::BadEndpoint {
                index: 0,
                value: first,
            });
        }
        for k in 0..seq.len() - 1 {
            if (seq[k + 1] - seq[k]).abs() != 1 {
                return Err(ExcursionError::BadStep { index: k });
            }
            if seq[k + 1] < 0 {
                return Err(ExcursionError::NegativeHeight { index: k + 1 });
            }
        }
        let last = *seq.last().unwrap();
        if last != 0 {
            return Err(ExcursionError::BadEndpoint {
                index: seq.len() - 1,
                value: last,
            });
        }
        Ok(Excursion {
            heights: seq.iter().map(|&h| h as usize).collect(),
        })
    }

    /// Heights `h(0..=2m)`.
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Number of time indices, `2m + 1`.
    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid excursion has at least the single height 0
    }

    /// Number of edges of the coded tree.
    pub fn edge_count(&self) -> usize {
        (self.heights.len() - 1) / 2
    }

    /// The excursion pseudo-metric between two time indices:
    /// `h(m) + h(n) - 2 min h[m..=n]`, order-insensitive.
    pub fn distance(&self, m: usize, n: usize) -> Result<usize, ExcursionError> {
        for idx in [m, n] {
            if idx >= self.len() {
                return Err(ExcursionError::IndexOutOfRange {
                    index: idx,
                    len: self.len(),
                });
            }
        }
        let (lo, hi) = if m <= n { (m, n) } else { (n, m) };
        let min = self.heights[lo..=hi].iter().copied().min().unwrap();
        Ok(self.heights[m] + self.heights[n] - 2 * min)
    }

    /// Number of returns to zero after time 0; equals the degree of the
    /// decoded root.
    pub fn root_degree(&self) -> usize {
        self.heights[1..].iter().filter(|&&h| h == 0).count()
    }
}

/// Runs the contour walk of `tree` and records the height after each step.
pub fn encode(tree: &RootedTree) -> Excursion {
    Excursion {
        heights: contour_walk(tree)
            .into_iter()
            .map(|v| tree.depth(v))
            .collect(),
    }
}

/// The vertex visited at each step of the contour walk, length `2|E| + 1`.
pub fn contour_walk(tree: &RootedTree) -> Vec<usize> {
    let mut walk = Vec::with_capacity(2 * tree.len() - 1);
    walk.push(tree.root());
    // (vertex, index of next child to visit)
    let mut stack: Vec<(usize, usize)> = vec![(tree.root(), 0)];
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if *next < tree.children(v).len() {
            let c = tree.children(v)[*next];
            *next += 1;
            stack.push((c, 0));
            walk.push(c);
        } else {
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                walk.push(p);
            }
        }
    }
    walk
}

/// Rebuilds the rooted tree coded by an excursion.
///
/// Vertices are the equivalence classes of time indices at excursion
/// distance zero, numbered in first-visit (preorder) order; sibling order is
/// first-visit order, which makes `encode(decode(e)) == e` exact.
pub fn decode(exc: &Excursion) -> RootedTree {
    decode_with_visits(exc).0
}

/// [`decode`] plus the vertex visited at each time index.
pub fn decode_with_visits(exc: &Excursion) -> (RootedTree, Vec<usize>) {
    let h = exc.heights();
    let n = (h.len() - 1) / 2 + 1;
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visits = Vec::with_capacity(h.len());
    let mut stack = vec![0usize];
    let mut next_id = 1usize;
    visits.push(0);
    for k in 1..h.len() {
        if h[k] > h[k - 1] {
            let parent = *stack.last().unwrap();
            children[parent].push(next_id);
            stack.push(next_id);
            next_id += 1;
        } else {
            stack.pop();
        }
        visits.push(*stack.last().unwrap());
    }
    let tree = RootedTree::from_child_lists(0, children)
        .expect("a valid excursion always decodes to a tree");
    (tree, visits)
}

/// Samples an excursion uniformly over all Dyck paths with `edge_count`
/// up-steps, deterministically in `seed`.
///
/// A balanced batch of `m` up-steps and `m + 1` down-steps is shuffled and
/// then rotated at its prefix-sum minimum; by the cycle lemma exactly one
/// rotation of each arrangement is an excursion followed by a final
/// down-step, and all arrangements in a rotation class collapse to the same
/// path, so dropping the last step samples uniformly.
pub fn random_excursion(edge_count: usize, seed: u64) -> Excursion {
    if edge_count == 0 {
        return Excursion { heights: vec![0] };
    }
    let m = edge_count;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps: Vec<i64> = vec![1; m];
    steps.extend(std::iter::repeat_n(-1, m + 1));
    steps.shuffle(&mut rng);

    // first position of the minimal prefix sum
    let mut sum = 0i64;
    let mut min_sum = i64::MAX;
    let mut min_at = 0usize;
    for (i, &s) in steps.iter().enumerate() {
        sum += s;
        if sum < min_sum {
            min_sum = sum;
            min_at = i;
        }
    }
    let len = steps.len();
    steps.rotate_left((min_at + 1) % len);

    let mut heights = Vec::with_capacity(2 * m + 1);
    let mut h = 0i64;
    heights.push(0usize);
    for &s in &steps[..2 * m] {
        h += s;
        heights.push(h as usize);
    }
    Excursion { heights }
}
