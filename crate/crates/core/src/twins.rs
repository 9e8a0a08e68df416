//! Twin vertices and the twin partition.
//!
//! Two vertices are true twins when they share the same closed
//! neighborhood (they are adjacent and see the same other vertices), and
//! false twins when they share the same open neighborhood (non-adjacent,
//! same neighbors). Both relations are equivalences, and a vertex with a
//! true twin never also has a false twin, so the maximal classes of the
//! two relations fit together into a single partition.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// How the vertices of a class relate to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    /// Pairwise adjacent, identical closed neighborhoods.
    TrueTwins,
    /// Pairwise non-adjacent, identical open neighborhoods.
    FalseTwins,
    /// A vertex with no twin of either kind.
    Singleton,
}

/// A maximal class of mutually twin vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    kind: TwinKind,
    vertices: Vec<usize>,
}

impl TwinClass {
    pub fn kind(&self) -> TwinKind {
        self.kind
    }

    /// Sorted members of the class.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// The partition of a graph's vertices into maximal twin classes, ordered
/// by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<TwinClass>,
}

impl TwinPartition {
    pub fn classes(&self) -> &[TwinClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The class containing `v`.
    pub fn class_of(&self, v: usize) -> Option<&TwinClass> {
        self.classes.iter().find(|c| c.vertices.binary_search(&v).is_ok())
    }

    /// Classes with at least two members.
    pub fn nontrivial(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.len() >= 2)
    }
}

/// Groups the vertices of `g` into maximal twin classes.
///
/// Vertices are grouped once by closed neighborhood and once by open
/// neighborhood. A group of two or more in the first grouping is a true
/// twin class, in the second a false twin class; these never share a
/// vertex. Everything left over is a singleton.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.n();
    let mut by_closed: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut by_open: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let open: Vec<usize> = g.neighbors(v).iter().copied().collect();
        let mut closed = open.clone();
        closed.push(v);
        closed.sort_unstable();
        by_open.entry(open).or_default().push(v);
        by_closed.entry(closed).or_default().push(v);
    }
    let mut assigned = vec![false; n];
    let mut classes: Vec<TwinClass> = Vec::new();
    for (kind, groups) in [
        (TwinKind::TrueTwins, &by_closed),
        (TwinKind::FalseTwins, &by_open),
    ] {
        for members in groups.values() {
            if members.len() >= 2 {
                debug_assert!(members.iter().all(|&v| !assigned[v]));
                for &v in members {
                    assigned[v] = true;
                }
                classes.push(TwinClass {
                    kind,
                    vertices: members.clone(),
                });
            }
        }
    }
    for v in 0..n {
        if !assigned[v] {
            classes.push(TwinClass {
                kind: TwinKind::Singleton,
                vertices: vec![v],
            });
        }
    }
    classes.sort_by_key(|c| c.vertices[0]);
    TwinPartition { classes }
}

/// Whether `g` has any twin class with two or more members.
pub fn has_nontrivial_twins(g: &Graph) -> bool {
    twin_partition(g).nontrivial().next().is_some()
}
