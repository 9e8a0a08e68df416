//! Spiders: split-like graphs made of a body clique, matched legs, and an
//! optional head.
//!
//! A thin spider partitions its vertices into a clique `K`, an
//! independent set `S` of the same size `k >= 2`, and a head `R`. Each
//! leg in `S` is matched to one body vertex and adjacent only to it,
//! while the head is completely joined to the body and sees no legs. A
//! thick spider is the complement of a thin one: the same partition, but
//! each leg is adjacent to every body vertex except its match. The
//! four-vertex path is the smallest spider and is both kinds at once;
//! recognition reports it as thin.

use crate::edit::EditSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::md::MdTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpiderKind {
    /// Legs are adjacent exactly to their matched body vertex.
    Thin,
    /// Legs are adjacent to every body vertex except their match.
    Thick,
}

/// A certified spider partition of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiderDecomposition {
    kind: SpiderKind,
    body: Vec<usize>,
    legs: Vec<usize>,
    head: Vec<usize>,
    matching: Vec<(usize, usize)>,
}

impl SpiderDecomposition {
    pub(crate) fn new(
        kind: SpiderKind,
        body: Vec<usize>,
        legs: Vec<usize>,
        head: Vec<usize>,
        matching: Vec<(usize, usize)>,
    ) -> Self {
        SpiderDecomposition { kind, body, legs, head, matching }
    }

    pub fn kind(&self) -> SpiderKind {
        self.kind
    }

    /// The clique, sorted.
    pub fn body(&self) -> &[usize] {
        &self.body
    }

    /// The independent set, in matching order alongside [`Self::body`].
    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// The remaining vertices, completely joined to the body.
    pub fn head(&self) -> &[usize] {
        &self.head
    }

    /// `(body, leg)` pairs, sorted by body vertex.
    pub fn matching(&self) -> &[(usize, usize)] {
        &self.matching
    }
}

/// Recognizes `g` as a spider, trying the thin orientation first so that
/// the four-vertex path comes out thin.
pub fn recognize_spider(g: &Graph) -> Option<SpiderDecomposition> {
    if let Some((body, legs, head, matching)) = recognize_thin(g) {
        return Some(SpiderDecomposition::new(SpiderKind::Thin, body, legs, head, matching));
    }
    if let Some((_, _, head, matching)) = recognize_thin(&g.complement()) {
        // Complementing swaps the roles of clique and independent set.
        let mut swapped: Vec<(usize, usize)> = matching.iter().map(|&(b, l)| (l, b)).collect();
        swapped.sort_unstable();
        let body: Vec<usize> = swapped.iter().map(|&(b, _)| b).collect();
        let legs: Vec<usize> = swapped.iter().map(|&(_, l)| l).collect();
        return Some(SpiderDecomposition::new(SpiderKind::Thick, body, legs, head, swapped));
    }
    None
}

/// Thin recognition. In a thin spider the legs are exactly the degree-one
/// vertices: body vertices see the rest of the clique plus their leg, and
/// head vertices see the whole body, so both have degree at least two.
#[allow(clippy::type_complexity)]
fn recognize_thin(
    g: &Graph,
) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>, Vec<(usize, usize)>)> {
    let n = g.n();
    let legs: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if legs.len() < 2 {
        return None;
    }
    let mut is_leg = vec![false; n];
    for &s in &legs {
        is_leg[s] = true;
    }
    let mut matching: Vec<(usize, usize)> = Vec::with_capacity(legs.len());
    let mut is_body = vec![false; n];
    for &s in &legs {
        let b = *g.neighbors(s).iter().next().expect("degree-one vertex has a neighbor");
        if is_leg[b] || is_body[b] {
            return None;
        }
        is_body[b] = true;
        matching.push((b, s));
    }
    matching.sort_unstable();
    let body: Vec<usize> = matching.iter().map(|&(b, _)| b).collect();
    let legs: Vec<usize> = matching.iter().map(|&(_, s)| s).collect();
    let head: Vec<usize> = (0..n).filter(|&v| !is_leg[v] && !is_body[v]).collect();
    for (i, &u) in body.iter().enumerate() {
        for &v in &body[(i + 1)..] {
            if !g.has_edge(u, v) {
                return None;
            }
        }
    }
    for &r in &head {
        for &b in &body {
            if !g.has_edge(r, b) {
                return None;
            }
        }
    }
    Some((body, legs, head, matching))
}

/// Whether every five-vertex set induces at most one four-vertex path,
/// tested structurally: each prime quotient of the decomposition tree
/// must be a spider whose body and leg positions all stand for single
/// vertices. Only the head may hide a larger module — a blown-up leg or
/// body vertex already packs two paths into five vertices. Cographs
/// qualify vacuously.
pub fn is_p4_sparse(g: &Graph) -> bool {
    MdTree::build(g).prime_nodes().iter().all(|node| {
        let q = node.quotient().expect("prime nodes store their quotient");
        let Some(d) = recognize_spider(q) else {
            return false;
        };
        let blocks = node.child_sets();
        d.body()
            .iter()
            .chain(d.legs())
            .all(|&v| blocks[v].len() == 1)
    })
}

/// The optimal edit set collapsing a spider into a cograph, provided the
/// head induces a cograph: toggle every matched pair except the one
/// containing the smallest matched vertex id. For a thin spider these are
/// deletions, for a thick one additions; either way `|K| - 1` pairs.
pub fn edit_spider(g: &Graph, d: &SpiderDecomposition) -> Result<EditSet> {
    validate_decomposition(g, d)?;
    let (head_graph, mapping) = g.induced_subgraph(&d.head)?;
    if let Some(w) = head_graph.find_p4() {
        let [a, b, c, dd] = w.vertices();
        return Err(Error::SpiderHeadNotCograph {
            witness: crate::graph::P4Witness::new(mapping[a], mapping[b], mapping[c], mapping[dd]),
        });
    }
    let smallest = d
        .matching
        .iter()
        .flat_map(|&(b, s)| [b, s])
        .min()
        .expect("a spider has at least two matched pairs");
    let mut edits = EditSet::new();
    for &(b, s) in &d.matching {
        if b != smallest && s != smallest {
            edits.insert(b, s);
        }
    }
    debug_assert_eq!(edits.len(), d.body.len() - 1);
    Ok(edits)
}

/// Checks that `d` really describes `g`: the three parts partition the
/// vertices, the matching pairs body with legs one to one, and every
/// adjacency follows the claimed kind. The head interior is free.
fn validate_decomposition(g: &Graph, d: &SpiderDecomposition) -> Result<()> {
    let n = g.n();
    let fail = |reason: String| Err(Error::InvalidConfig { reason });
    if d.body.len() != d.legs.len() || d.body.len() != d.matching.len() || d.body.len() < 2 {
        return fail(format!(
            "spider parts are inconsistent: {} body, {} legs, {} matched pairs",
            d.body.len(),
            d.legs.len(),
            d.matching.len()
        ));
    }
    let mut role = vec![0u8; n];
    for (part, tag) in [(&d.body, 1u8), (&d.legs, 2), (&d.head, 3)] {
        for &v in part.iter() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if role[v] != 0 {
                return fail(format!("vertex {v} appears in two spider parts"));
            }
            role[v] = tag;
        }
    }
    if role.iter().any(|&r| r == 0) {
        return fail("spider parts do not cover the graph".into());
    }
    let mut matched = vec![usize::MAX; n];
    for &(b, s) in &d.matching {
        if b >= n || s >= n || role[b] != 1 || role[s] != 2 {
            return fail(format!("matched pair ({b}, {s}) does not pair body with leg"));
        }
        if matched[b] != usize::MAX || matched[s] != usize::MAX {
            return fail(format!("matched pair ({b}, {s}) reuses a vertex"));
        }
        matched[b] = s;
        matched[s] = b;
    }
    for (i, &u) in d.body.iter().enumerate() {
        for &v in &d.body[(i + 1)..] {
            if !g.has_edge(u, v) {
                return fail(format!("body vertices {u} and {v} are not adjacent"));
            }
        }
    }
    for (i, &u) in d.legs.iter().enumerate() {
        for &v in &d.legs[(i + 1)..] {
            if g.has_edge(u, v) {
                return fail(format!("leg vertices {u} and {v} are adjacent"));
            }
        }
    }
    for &s in &d.legs {
        for &b in &d.body {
            let expect = match d.kind {
                SpiderKind::Thin => matched[s] == b,
                SpiderKind::Thick => matched[s] != b,
            };
            if g.has_edge(s, b) != expect {
                return fail(format!("leg {s} and body {b} break the {:?} pattern", d.kind));
            }
        }
    }
    for &r in &d.head {
        for &b in &d.body {
            if !g.has_edge(r, b) {
                return fail(format!("head vertex {r} misses body vertex {b}"));
            }
        }
        for &s in &d.legs {
            if g.has_edge(r, s) {
                return fail(format!("head vertex {r} touches leg {s}"));
            }
        }
    }
    Ok(())
}
