//! Bitmask adjacency for exhaustive search on small graphs.
//!
//! The brute-force oracle and the quotient branch-and-bound test millions
//! of candidate graphs; adjacency rows packed into `u32` words keep each
//! induced-path check to a handful of bit operations.

use crate::graph::Graph;

pub(crate) const MASK_MAX_N: usize = 32;

#[derive(Debug, Clone)]
pub(crate) struct MaskGraph {
    n: usize,
    rows: Vec<u32>,
}

impl MaskGraph {
    pub(crate) fn from_graph(g: &Graph) -> MaskGraph {
        assert!(g.n() <= MASK_MAX_N, "mask graphs hold at most 32 vertices");
        let rows = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        MaskGraph { n: g.n(), rows }
    }

    #[cfg(test)]
    pub(crate) fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.rows[u] ^= 1 << v;
        self.rows[v] ^= 1 << u;
    }

    /// The lowest-index induced path on four vertices, scanned by ordered
    /// middle edge `(b, c)`, as `(a, b, c, d)` with `a-b-c-d` the path.
    pub(crate) fn first_p4(&self) -> Option<(usize, usize, usize, usize)> {
        for b in 0..self.n {
            let row_b = self.rows[b];
            let mut mids = row_b;
            while mids != 0 {
                let c = mids.trailing_zeros() as usize;
                mids &= mids - 1;
                // Ends adjacent to exactly one side of the middle edge.
                let ends_a = row_b & !self.rows[c] & !(1 << c);
                if ends_a == 0 {
                    continue;
                }
                let ends_d = self.rows[c] & !row_b & !(1 << b);
                if ends_d == 0 {
                    continue;
                }
                let mut firsts = ends_a;
                while firsts != 0 {
                    let a = firsts.trailing_zeros() as usize;
                    firsts &= firsts - 1;
                    let lasts = ends_d & !self.rows[a] & !(1 << a);
                    if lasts != 0 {
                        let d = lasts.trailing_zeros() as usize;
                        return Some((a, b, c, d));
                    }
                }
            }
        }
        None
    }

    pub(crate) fn is_p4_free(&self) -> bool {
        self.first_p4().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn detects_paths_that_the_set_representation_detects() {
        let cases = [
            graph(4, &[(0, 1), (1, 2), (2, 3)]),
            graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
            graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            graph(6, &[(0, 2), (2, 4), (4, 1), (1, 3)]),
            graph(3, &[(0, 1)]),
            Graph::new(0),
        ];
        for g in &cases {
            assert_eq!(MaskGraph::from_graph(g).is_p4_free(), g.is_cograph());
        }
    }

    #[test]
    fn toggling_tracks_edits() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let mut m = MaskGraph::from_graph(&g);
        assert!(!m.is_p4_free());
        m.toggle(1, 2);
        assert!(m.is_p4_free());
        assert!(!m.has_edge(1, 2));
        m.toggle(1, 2);
        assert!(m.has_edge(1, 2));
        assert!(!m.is_p4_free());
    }

    #[test]
    fn first_p4_reports_an_induced_path() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let m = MaskGraph::from_graph(&g);
        let (a, b, c, d) = m.first_p4().unwrap();
        assert!(m.has_edge(a, b) && m.has_edge(b, c) && m.has_edge(c, d));
        assert!(!m.has_edge(a, c) && !m.has_edge(a, d) && !m.has_edge(b, d));
    }

    #[test]
    fn exhaustive_agreement_on_all_five_vertex_graphs() {
        for bits in 0u32..1 << 10 {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..5 {
                for v in (u + 1)..5 {
                    if bits >> idx & 1 == 1 {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            let g = graph(5, &edges);
            assert_eq!(MaskGraph::from_graph(&g).is_p4_free(), g.is_cograph());
        }
    }
}
