//! Edit sets and cograph editing.
//!
//! An edit set is a set of vertex pairs to toggle: applying it flips each
//! pair's edge/non-edge status (symmetric difference), and applying the
//! same set twice restores the original graph. The submodules provide a
//! brute-force minimum editor for tiny graphs, an exact decomposition-based
//! editor, the module-merge calculus, merge-trace replay, and a greedy
//! heuristic editor.

mod exact;
mod heuristic;
mod mask;
mod merge;
mod oracle;
mod trace;

pub use exact::{exact_edit, EXACT_QUOTIENT_CAP};
pub use heuristic::heuristic_edit;
pub use merge::{merge_many, merge_pair, select_merge_pair, MergeSelection};
pub use oracle::{oracle_exact_edit, ORACLE_MAX_K, ORACLE_MAX_N};
pub use trace::{decompose_into_merge_trace, MergeRecord, MergeTrace};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A set of unordered vertex pairs, stored normalized with `u < v`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EditSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl EditSet {
    pub fn new() -> Self {
        EditSet {
            pairs: BTreeSet::new(),
        }
    }

    /// Builds an edit set from pairs, normalizing order. Self-pairs and
    /// repeated pairs are rejected rather than silently collapsed.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = EditSet::new();
        for (u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if !set.insert(u, v) {
                let (u, v) = normalize(u, v);
                return Err(Error::DuplicateEdge { u, v });
            }
        }
        Ok(set)
    }

    /// Inserts a pair; returns false if it was already present.
    /// Panics on `u == v` — callers validate pairs first.
    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "edit pairs join two distinct vertices");
        self.pairs.insert(normalize(u, v))
    }

    /// Flips membership of the pair: absent pairs are inserted, present
    /// ones removed. Accumulating plans this way keeps the set equal to
    /// the symmetric difference of everything applied so far.
    pub fn toggle(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "edit pairs join two distinct vertices");
        let pair = normalize(u, v);
        if !self.pairs.remove(&pair) {
            self.pairs.insert(pair);
        }
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&normalize(u, v))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn union(&self, other: &EditSet) -> EditSet {
        EditSet {
            pairs: self.pairs.union(&other.pairs).copied().collect(),
        }
    }

    pub fn difference(&self, other: &EditSet) -> EditSet {
        EditSet {
            pairs: self.pairs.difference(&other.pairs).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &EditSet) -> EditSet {
        EditSet {
            pairs: self.pairs.intersection(&other.pairs).copied().collect(),
        }
    }

    /// The pairs with exactly one endpoint inside `set`.
    pub fn crossing(&self, set: &[usize]) -> EditSet {
        let members: BTreeSet<usize> = set.iter().copied().collect();
        EditSet {
            pairs: self
                .pairs
                .iter()
                .copied()
                .filter(|&(u, v)| members.contains(&u) != members.contains(&v))
                .collect(),
        }
    }

    /// Checks that all endpoints fit a graph on `n` vertices.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        for &(u, v) in &self.pairs {
            if v >= n {
                let vertex = if u >= n { u } else { v };
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        Ok(())
    }
}

impl FromIterator<(usize, usize)> for EditSet {
    /// Collects pairs with set semantics (duplicates collapse). Use
    /// [`EditSet::from_pairs`] to reject duplicates instead.
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut set = EditSet::new();
        for (u, v) in iter {
            set.insert(u, v);
        }
        set
    }
}

fn normalize(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Toggles every pair of `f` in `g`: the result has edge `uv` exactly when
/// `g` has it and the pair is absent from `f`, or `g` lacks it and the
/// pair is present.
pub fn apply(g: &Graph, f: &EditSet) -> Result<Graph> {
    f.validate_for(g.n())?;
    let mut out = g.clone();
    for (u, v) in f.iter() {
        out.toggle_edge(u, v)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn pairs_are_normalized_and_sorted() {
        let f = EditSet::from_pairs([(3, 1), (0, 2)]).unwrap();
        let pairs: Vec<(usize, usize)> = f.iter().collect();
        assert_eq!(pairs, vec![(0, 2), (1, 3)]);
        assert!(f.contains(1, 3));
        assert!(f.contains(3, 1));
    }

    #[test]
    fn duplicate_and_self_pairs_are_rejected() {
        assert!(matches!(
            EditSet::from_pairs([(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            EditSet::from_pairs([(2, 2)]),
            Err(Error::SelfLoop { v: 2 })
        ));
    }

    #[test]
    fn apply_empty_set_is_identity() {
        let g = p4();
        assert_eq!(apply(&g, &EditSet::new()).unwrap(), g);
    }

    #[test]
    fn apply_twice_restores_the_graph() {
        let g = p4();
        let f = EditSet::from_pairs([(0, 3), (1, 2)]).unwrap();
        let once = apply(&g, &f).unwrap();
        assert_ne!(once, g);
        assert_eq!(apply(&once, &f).unwrap(), g);
    }

    #[test]
    fn deleting_the_middle_edge_of_a_path_leaves_two_edges() {
        let g = p4();
        let f = EditSet::from_pairs([(1, 2)]).unwrap();
        let out = apply(&g, &f).unwrap();
        let edges: Vec<(usize, usize)> = out.edges().collect();
        assert_eq!(edges, vec![(0, 1), (2, 3)]);
        assert!(out.is_cograph());
    }

    #[test]
    fn out_of_range_pairs_are_rejected() {
        let g = p4();
        let f = EditSet::from_pairs([(0, 9)]).unwrap();
        assert!(matches!(
            apply(&g, &f),
            Err(Error::VertexOutOfRange { vertex: 9, n: 4 })
        ));
    }

    #[test]
    fn crossing_keeps_only_boundary_pairs() {
        let f = EditSet::from_pairs([(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let crossing = f.crossing(&[0, 1]);
        let pairs: Vec<(usize, usize)> = crossing.iter().collect();
        assert_eq!(pairs, vec![(0, 3), (1, 2)]);
    }
}
