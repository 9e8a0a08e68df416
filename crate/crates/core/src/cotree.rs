//! Cotrees: the canonical tree form of cographs.
//!
//! A cograph decomposes recursively into disjoint unions (parallel nodes)
//! and joins (series nodes) of smaller cographs, down to single vertices.
//! Two vertices are adjacent exactly when their lowest common ancestor is
//! a series node, so the tree determines the graph and vice versa.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Label of an inner cotree node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CotreeLabel {
    /// Children are joined: every cross-child pair is an edge.
    Series,
    /// Children are a disjoint union: no cross-child edges.
    Parallel,
}

impl CotreeLabel {
    /// The complementary label.
    pub fn other(self) -> CotreeLabel {
        match self {
            CotreeLabel::Series => CotreeLabel::Parallel,
            CotreeLabel::Parallel => CotreeLabel::Series,
        }
    }
}

/// A cotree in canonical form: inner nodes have at least two children,
/// labels strictly alternate along every root-leaf path, and children are
/// ordered by their smallest leaf. `Empty` only ever appears as the tree of
/// the graph on zero vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Empty,
    Leaf(usize),
    Inner {
        label: CotreeLabel,
        children: Vec<Cotree>,
    },
}

impl Cotree {
    /// Builds the canonical cotree of `g`, or reports an induced
    /// four-vertex path if `g` is not a cograph.
    pub fn from_graph(g: &Graph) -> Result<Cotree> {
        if g.n() == 0 {
            return Ok(Cotree::Empty);
        }
        let all: Vec<usize> = (0..g.n()).collect();
        build(g, &all)
    }

    /// Reconstructs the graph a cotree describes. The tree is validated
    /// first: distinct leaves forming a dense id range, at least two
    /// children per inner node, and strictly alternating labels.
    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            Cotree::Empty => Ok(Graph::new(0)),
            _ => {
                let leaves = self.validate()?;
                let n = leaves.len();
                let mut g = Graph::new(n);
                add_edges(self, &mut g)?;
                Ok(g)
            }
        }
    }

    /// All leaf vertices below this node, sorted.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        collect_leaves(self, &mut out);
        out.sort_unstable();
        out
    }

    /// Checks structural invariants and returns the sorted leaf list.
    fn validate(&self) -> Result<Vec<usize>> {
        fn walk(t: &Cotree, parent: Option<CotreeLabel>, out: &mut Vec<usize>) -> Result<()> {
            match t {
                Cotree::Empty => Err(Error::MalformedTree {
                    reason: "empty node below the root".into(),
                }),
                Cotree::Leaf(v) => {
                    out.push(*v);
                    Ok(())
                }
                Cotree::Inner { label, children } => {
                    if children.len() < 2 {
                        return Err(Error::MalformedTree {
                            reason: "inner node with fewer than two children".into(),
                        });
                    }
                    if parent == Some(*label) {
                        return Err(Error::MalformedTree {
                            reason: "consecutive nodes with the same label".into(),
                        });
                    }
                    for c in children {
                        walk(c, Some(*label), out)?;
                    }
                    Ok(())
                }
            }
        }
        let mut leaves = Vec::new();
        walk(self, None, &mut leaves)?;
        let mut sorted = leaves.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != leaves.len() {
            return Err(Error::MalformedTree {
                reason: "duplicate leaf vertex".into(),
            });
        }
        if sorted.first() != Some(&0) || *sorted.last().unwrap() != sorted.len() - 1 {
            return Err(Error::MalformedTree {
                reason: "leaf vertices are not the dense range 0..n".into(),
            });
        }
        Ok(sorted)
    }
}

fn collect_leaves(t: &Cotree, out: &mut Vec<usize>) {
    match t {
        Cotree::Empty => {}
        Cotree::Leaf(v) => out.push(*v),
        Cotree::Inner { children, .. } => {
            for c in children {
                collect_leaves(c, out);
            }
        }
    }
}

/// Recursive construction over a vertex subset of the original graph.
fn build(g: &Graph, sub: &[usize]) -> Result<Cotree> {
    if sub.len() == 1 {
        return Ok(Cotree::Leaf(sub[0]));
    }
    let comps = g.components_within(sub);
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| build(g, c))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Cotree::Inner {
            label: CotreeLabel::Parallel,
            children,
        });
    }
    let cocomps = g.co_components_within(sub);
    if cocomps.len() > 1 {
        let children = cocomps
            .iter()
            .map(|c| build(g, c))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Cotree::Inner {
            label: CotreeLabel::Series,
            children,
        });
    }
    // Connected with connected complement: there must be an induced path
    // on four vertices inside this subset.
    let (sub_graph, mapping) = g.induced_subgraph(sub)?;
    let w = sub_graph.find_p4().ok_or_else(|| Error::InternalInvariant {
        reason: "connected, co-connected subgraph without an induced path".into(),
    })?;
    Err(Error::NotACograph {
        witness: crate::graph::P4Witness::new(
            mapping[w.a],
            mapping[w.b],
            mapping[w.c],
            mapping[w.d],
        ),
    })
}

fn add_edges(t: &Cotree, g: &mut Graph) -> Result<()> {
    if let Cotree::Inner { label, children } = t {
        for c in children {
            add_edges(c, g)?;
        }
        if *label == CotreeLabel::Series {
            let leaf_sets: Vec<Vec<usize>> = children.iter().map(|c| c.leaves()).collect();
            for (i, a) in leaf_sets.iter().enumerate() {
                for b in leaf_sets.iter().skip(i + 1) {
                    for &u in a {
                        for &v in b {
                            g.add_edge(u, v)?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Reorders children recursively so each child list is sorted by smallest
/// leaf. `from_graph` already produces this form; the helper exists for
/// trees built by hand or read from files.
pub fn canonicalize(t: &mut Cotree) {
    if let Cotree::Inner { children, .. } = t {
        for c in children.iter_mut() {
            canonicalize(c);
        }
        children.sort_by_key(|c| c.leaves().first().copied().unwrap_or(usize::MAX));
    }
}
