//! Exact minimum cograph editing via the decomposition into prime
//! quotients.
//!
//! An optimal edit never has to break the modules of the input: it can be
//! assembled from optimal edits of the prime quotients, where flipping a
//! quotient pair stands for flipping all vertex pairs between the two
//! corresponding blocks and therefore costs the product of the block
//! sizes. Each quotient is solved by branch and bound over its induced
//! four-vertex paths.

use crate::edit::mask::MaskGraph;
use crate::edit::EditSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::md::MdTree;

/// Largest prime quotient the search will accept.
pub const EXACT_QUOTIENT_CAP: usize = 12;

/// Computes a minimum-size edit set turning `g` into a cograph.
///
/// Every prime node of the decomposition tree is solved independently on
/// its quotient with pair weights `|B_i| * |B_j|`, and the chosen quotient
/// flips are expanded to all vertex pairs between the blocks. Inputs whose
/// prime quotients exceed [`EXACT_QUOTIENT_CAP`] vertices are rejected
/// with a capacity error. The result is deterministic.
pub fn exact_edit(g: &Graph) -> Result<EditSet> {
    let tree = MdTree::build(g);
    let mut edits = EditSet::new();
    let mut expected = 0usize;
    for node in tree.prime_nodes() {
        let quotient = node.quotient().expect("prime nodes store their quotient");
        if quotient.n() > EXACT_QUOTIENT_CAP {
            return Err(Error::Capacity {
                operation: "exact_edit",
                limit: EXACT_QUOTIENT_CAP,
                actual: quotient.n(),
            });
        }
        let blocks = node.child_sets();
        let weights: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        let flips = min_weight_quotient_edit(quotient, &weights);
        for (i, j) in flips.iter() {
            expected += blocks[i].len() * blocks[j].len();
            for &u in &blocks[i] {
                for &v in &blocks[j] {
                    edits.insert(u, v);
                }
            }
        }
    }
    // Different prime nodes expand to disjoint pair sets, so nothing may
    // collide.
    debug_assert_eq!(edits.len(), expected);
    Ok(edits)
}

/// Minimum-weight set of pair flips making `q` a cograph, where flipping
/// `(i, j)` costs `weights[i] * weights[j]`. Deterministic: ties keep the
/// first solution found by the fixed branching order.
fn min_weight_quotient_edit(q: &Graph, weights: &[usize]) -> EditSet {
    debug_assert_eq!(q.n(), weights.len());
    debug_assert!(q.n() <= EXACT_QUOTIENT_CAP);
    let (seed_cost, seed_pairs) = trivial_incumbent(q, weights);
    let mut searcher = Searcher {
        n: q.n(),
        weights,
        best_cost: seed_cost,
        best: seed_pairs,
        path: Vec::new(),
    };
    let mut mask = MaskGraph::from_graph(q);
    searcher.dfs(&mut mask, 0, 0);
    searcher.best.into_iter().collect()
}

/// Cheapest of the two always-available solutions: delete every edge or
/// complete the graph. Seeds the branch-and-bound incumbent.
fn trivial_incumbent(q: &Graph, weights: &[usize]) -> (usize, Vec<(usize, usize)>) {
    let mut empty = (0usize, Vec::new());
    let mut complete = (0usize, Vec::new());
    for u in 0..q.n() {
        for v in (u + 1)..q.n() {
            let w = weights[u] * weights[v];
            if q.has_edge(u, v) {
                empty.0 += w;
                empty.1.push((u, v));
            } else {
                complete.0 += w;
                complete.1.push((u, v));
            }
        }
    }
    if complete.0 < empty.0 {
        complete
    } else {
        empty
    }
}

struct Searcher<'a> {
    n: usize,
    weights: &'a [usize],
    best_cost: usize,
    best: Vec<(usize, usize)>,
    path: Vec<(usize, usize)>,
}

impl Searcher<'_> {
    /// Branches on the six pair flips of the first induced path. Branch
    /// `t` commits to not flipping the pairs of branches before `t`
    /// (tracked in `forbidden` as triangular pair indices), which makes
    /// the enumeration exhaustive without revisiting any flip set.
    fn dfs(&mut self, mask: &mut MaskGraph, cost: usize, forbidden: u128) {
        if cost >= self.best_cost {
            return;
        }
        let Some((a, b, c, d)) = mask.first_p4() else {
            self.best_cost = cost;
            self.best = self.path.clone();
            return;
        };
        let mut quad = [a, b, c, d];
        quad.sort_unstable();
        let mut blocked = forbidden;
        for i in 0..4 {
            for j in (i + 1)..4 {
                let (u, v) = (quad[i], quad[j]);
                let bit = 1u128 << pair_index(u, v, self.n);
                if blocked & bit != 0 {
                    continue;
                }
                let w = self.weights[u] * self.weights[v];
                if cost + w < self.best_cost {
                    mask.toggle(u, v);
                    self.path.push((u, v));
                    self.dfs(mask, cost + w, blocked | bit);
                    self.path.pop();
                    mask.toggle(u, v);
                }
                blocked |= bit;
            }
        }
    }
}

/// Triangular index of the pair `(u, v)` with `u < v` among all pairs of
/// an `n`-vertex graph; fits in a `u128` bit position for `n <= 16`.
fn pair_index(u: usize, v: usize, n: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Certified minimum by iterative deepening on the weight budget, without
/// any incumbent pruning. Exponential in the optimum; kept as an
/// independent check of the branch-and-bound for small quotients.
#[cfg(test)]
pub(crate) fn exhaustive_quotient_edit(q: &Graph, weights: &[usize]) -> EditSet {
    assert!(q.n() <= 10, "exhaustive search is for small quotients only");
    let (ceiling, _) = trivial_incumbent(q, weights);
    let mut mask = MaskGraph::from_graph(q);
    for budget in 0..=ceiling {
        let mut path = Vec::new();
        if bounded_search(&mut mask, q.n(), weights, budget, 0, &mut path) {
            return path.into_iter().collect();
        }
    }
    unreachable!("the trivial solution fits the final budget");
}

#[cfg(test)]
fn bounded_search(
    mask: &mut MaskGraph,
    n: usize,
    weights: &[usize],
    budget: usize,
    forbidden: u128,
    path: &mut Vec<(usize, usize)>,
) -> bool {
    let Some((a, b, c, d)) = mask.first_p4() else {
        return true;
    };
    let mut quad = [a, b, c, d];
    quad.sort_unstable();
    let mut blocked = forbidden;
    for i in 0..4 {
        for j in (i + 1)..4 {
            let (u, v) = (quad[i], quad[j]);
            let bit = 1u128 << pair_index(u, v, n);
            if blocked & bit != 0 {
                continue;
            }
            let w = weights[u] * weights[v];
            if w <= budget {
                mask.toggle(u, v);
                path.push((u, v));
                if bounded_search(mask, n, weights, budget - w, blocked | bit, path) {
                    return true;
                }
                path.pop();
                mask.toggle(u, v);
            }
            blocked |= bit;
        }
    }
    false
}
