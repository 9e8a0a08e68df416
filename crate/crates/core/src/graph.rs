//! Undirected simple graphs on dense vertex ids `0..n`.
//!
//! The representation is a sorted adjacency set per vertex, which keeps
//! every iteration order deterministic. All higher layers (modular
//! decomposition, editing, generation) build on this type.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An induced path on four vertices `a-b-c-d`: edges `ab`, `bc`, `cd` are
/// present, the other three pairs are not.
///
/// Witnesses are kept in canonical orientation, `a < d`, so each induced
/// path is reported exactly once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct P4Witness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl P4Witness {
    /// Builds a witness, flipping the orientation if needed so that the
    /// smaller endpoint comes first.
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        if a <= d {
            P4Witness { a, b, c, d }
        } else {
            P4Witness { a: d, b: c, c: b, d: a }
        }
    }

    /// The four vertices in path order.
    pub fn vertices(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

impl fmt::Display for P4Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}-{}", self.a, self.b, self.c, self.d)
    }
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an explicit edge list. Self-loops, duplicate
    /// edges and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Whether the edge `uv` is present. Out-of-range ids are simply absent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n() && self.adj[u].contains(&v)
    }

    /// Inserts the edge `uv` (idempotent).
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { v });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Removes the edge `uv` (idempotent).
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        Ok(())
    }

    /// Flips the pair `uv`: present becomes absent and vice versa.
    pub fn toggle_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if self.has_edge(u, v) {
            self.remove_edge(u, v)
        } else {
            self.add_edge(u, v)
        }
    }

    /// The sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges as `(u, v)` pairs with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// The complement graph: same vertices, flipped adjacency.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    /// The subgraph induced by `vertices`, together with the mapping from
    /// new ids to the original ones (`mapping[new] == old`). The vertex set
    /// is deduplicated and sorted, so the mapping is increasing.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut mapping: Vec<usize> = vertices.to_vec();
        mapping.sort_unstable();
        mapping.dedup();
        for &v in &mapping {
            self.check_vertex(v)?;
        }
        let mut g = Graph::new(mapping.len());
        for (i, &u) in mapping.iter().enumerate() {
            for (j, &v) in mapping.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok((g, mapping))
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.n()).collect();
        self.components_within(&all)
    }

    /// Connected components of the subgraph induced by `sub` (original ids).
    pub(crate) fn components_within(&self, sub: &[usize]) -> Vec<Vec<usize>> {
        let mut in_sub = vec![false; self.n()];
        for &v in sub {
            in_sub[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for &start in sub {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if in_sub[w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// Components of the complement restricted to `sub`, without
    /// materializing the complement.
    pub(crate) fn co_components_within(&self, sub: &[usize]) -> Vec<Vec<usize>> {
        let mut in_sub = vec![false; self.n()];
        for &v in sub {
            in_sub[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for &start in sub {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in sub {
                    if !seen[w] && w != v && !self.adj[v].contains(&w) {
                        debug_assert!(in_sub[w]);
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// Runs `visit` on every induced four-vertex path, in a fixed scan
    /// order. `visit` returns `false` to stop early.
    ///
    /// The scan walks ordered middle edges `(b, c)` and extends them by an
    /// endpoint on each side; the canonical-orientation filter `a < d`
    /// guarantees each path is visited exactly once.
    fn scan_p4s(&self, mut visit: impl FnMut(P4Witness) -> bool) {
        let n = self.n();
        for b in 0..n {
            for &c in &self.adj[b] {
                for &a in &self.adj[b] {
                    if a == c || self.has_edge(a, c) {
                        continue;
                    }
                    for &d in &self.adj[c] {
                        if d <= a || d == b || self.has_edge(d, b) || self.has_edge(d, a) {
                            continue;
                        }
                        if !visit(P4Witness { a, b, c, d }) {
                            return;
                        }
                    }
                }
            }
        }
    }

    /// All induced four-vertex paths, sorted, each in canonical
    /// orientation. With `limit`, the scan stops after collecting that many
    /// witnesses (still deterministically) and the collected prefix is
    /// returned sorted.
    pub fn enumerate_p4s(&self, limit: Option<usize>) -> Vec<P4Witness> {
        let mut found = Vec::new();
        self.scan_p4s(|w| {
            found.push(w);
            match limit {
                Some(k) => found.len() < k,
                None => true,
            }
        });
        found.sort_unstable();
        found
    }

    /// Number of induced four-vertex paths.
    pub fn count_p4s(&self) -> usize {
        let mut count = 0usize;
        self.scan_p4s(|_| {
            count += 1;
            true
        });
        count
    }

    /// The first induced four-vertex path found by the deterministic scan,
    /// if any.
    pub fn find_p4(&self) -> Option<P4Witness> {
        let mut found = None;
        self.scan_p4s(|w| {
            found = Some(w);
            false
        });
        found
    }

    /// Whether the graph is a cograph, i.e. has no induced four-vertex path.
    pub fn is_cograph(&self) -> bool {
        self.find_p4().is_none()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Independent check: enumerate every 4-subset and try all vertex
    /// orderings of it as a candidate induced path.
    fn p4s_by_subsets(g: &Graph) -> Vec<P4Witness> {
        let n = g.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        let quad = [a, b, c, d];
                        for i in 0..4 {
                            for j in 0..4 {
                                if j == i {
                                    continue;
                                }
                                for k in 0..4 {
                                    if k == i || k == j {
                                        continue;
                                    }
                                    let l = 6 - i - j - k;
                                    let [w, x, y, z] =
                                        [quad[i], quad[j], quad[k], quad[l]];
                                    if g.has_edge(w, x)
                                        && g.has_edge(x, y)
                                        && g.has_edge(y, z)
                                        && !g.has_edge(w, y)
                                        && !g.has_edge(w, z)
                                        && !g.has_edge(x, z)
                                    {
                                        out.push(P4Witness::new(w, x, y, z));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    #[test]
    fn empty_graph_is_cograph() {
        let g = Graph::new(0);
        assert!(g.is_cograph());
        assert_eq!(g.enumerate_p4s(None), vec![]);
    }

    #[test]
    fn single_vertex_is_cograph() {
        assert!(Graph::new(1).is_cograph());
    }

    #[test]
    fn path_four_is_not_a_cograph() {
        let g = path(4);
        assert!(!g.is_cograph());
        let w = g.find_p4().unwrap();
        assert_eq!(w.vertices(), [0, 1, 2, 3]);
    }

    #[test]
    fn path_three_is_a_cograph() {
        assert!(path(3).is_cograph());
    }

    #[test]
    fn complement_of_path_four_is_a_path() {
        // Complementing 0-1-2-3 yields the path 1-3-0-2.
        let g = path(4).complement();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 3), (1, 3)]
        );
        assert!(!g.is_cograph());
        assert_eq!(g.find_p4().unwrap().vertices(), [1, 3, 0, 2]);
    }

    #[test]
    fn cycle_five_has_five_induced_paths() {
        let g = cycle(5);
        let p4s = g.enumerate_p4s(None);
        assert_eq!(p4s.len(), 5);
        assert_eq!(p4s, p4s_by_subsets(&g));
    }

    #[test]
    fn enumeration_matches_subset_check_on_small_graphs() {
        // Exhaustive over all graphs on 5 vertices via edge masks.
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            assert_eq!(g.enumerate_p4s(None), p4s_by_subsets(&g), "mask {mask}");
            assert_eq!(g.count_p4s(), p4s_by_subsets(&g).len());
        }
    }

    #[test]
    fn enumerate_with_limit_truncates() {
        let g = cycle(5);
        assert_eq!(g.enumerate_p4s(Some(2)).len(), 2);
        assert_eq!(g.enumerate_p4s(Some(99)).len(), 5);
    }

    #[test]
    fn induced_subgraph_of_cycle_is_path() {
        let (sub, mapping) = cycle(5).induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(mapping, vec![0, 1, 2, 3]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        assert!(matches!(
            path(3).induced_subgraph(&[0, 7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
    }

    #[test]
    fn from_edges_rejects_duplicates_and_loops() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(2, 2)]),
            Err(Error::SelfLoop { v: 2 })
        ));
    }

    #[test]
    fn components_are_sorted_by_smallest_member() {
        let g = Graph::from_edges(6, &[(3, 5), (0, 4)]).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![vec![0, 4], vec![1], vec![2], vec![3, 5]]
        );
    }

    #[test]
    fn co_components_match_complement_components() {
        let g = path(5);
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(
            g.co_components_within(&all),
            g.complement().connected_components()
        );
    }

    #[test]
    fn complement_is_an_involution() {
        let g = cycle(6);
        assert_eq!(g.complement().complement(), g);
    }
}
