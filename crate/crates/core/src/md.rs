//! Modular decomposition.
//!
//! A module is a vertex set whose members all look the same from the
//! outside: any vertex not in the set is adjacent to all of it or none of
//! it. Strong modules (those overlapping no other module) form a tree, the
//! modular decomposition tree. Each inner node is labeled by what the
//! subgraph looks like after collapsing its children: `Parallel` when it is
//! disconnected, `Series` when its complement is, and `Prime` otherwise, in
//! which case the collapsed quotient has only trivial modules.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by [`enumerate_all_modules`].
pub const MODULE_ORACLE_BOUND: usize = 12;

/// Tests whether `set` is a module of `g`: every vertex outside `set` is
/// adjacent to all of it or none of it. The empty set, singletons and the
/// full vertex set are modules by convention.
pub fn is_module(g: &Graph, set: &[usize]) -> Result<bool> {
    let mut members: Vec<usize> = set.to_vec();
    members.sort_unstable();
    members.dedup();
    for &v in &members {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if members.len() <= 1 {
        return Ok(true);
    }
    let mut inside = vec![false; g.n()];
    for &v in &members {
        inside[v] = true;
    }
    let outside: BTreeSet<usize> = g.neighbors(members[0])
        .iter()
        .copied()
        .filter(|&w| !inside[w])
        .collect();
    for &v in &members[1..] {
        let out_v: BTreeSet<usize> = g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !inside[w])
            .collect();
        if out_v != outside {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive module enumeration: every non-empty module of `g`, sorted by
/// size then lexicographically. Exponential in `n`, so inputs larger than
/// [`MODULE_ORACLE_BOUND`] are refused.
pub fn enumerate_all_modules(g: &Graph) -> Result<Vec<Vec<usize>>> {
    enumerate_all_modules_bounded(g, MODULE_ORACLE_BOUND)
}

/// Like [`enumerate_all_modules`] with an explicit bound (at most 16).
pub fn enumerate_all_modules_bounded(g: &Graph, bound: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let limit = bound.min(16);
    if n > limit {
        return Err(Error::Capacity {
            operation: "enumerate_all_modules",
            limit,
            actual: n,
        });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let first = mask.trailing_zeros() as usize;
        let outside = rows[first] & !mask;
        let mut rest = mask & (mask - 1);
        let mut ok = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if rows[v] & !mask != outside {
                ok = false;
                break;
            }
            rest &= rest - 1;
        }
        if ok {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// A partition of a graph's vertex set into modules, with blocks kept
/// sorted by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularPartition {
    blocks: Vec<Vec<usize>>,
}

impl ModularPartition {
    /// Validates that `blocks` partitions the vertex set of `g` and that
    /// every block is a module.
    pub fn new(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; g.n()];
        let mut covered = 0usize;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::NotAPartition {
                    reason: "empty block".into(),
                });
            }
            for &v in block {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
                }
                if seen[v] {
                    return Err(Error::NotAPartition {
                        reason: format!("vertex {v} appears in two blocks"),
                    });
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != g.n() {
            return Err(Error::NotAPartition {
                reason: format!("blocks cover {covered} of {} vertices", g.n()),
            });
        }
        for block in &blocks {
            if !is_module(g, block)? {
                return Err(Error::NotAModule(block.clone()));
            }
        }
        Ok(Self::new_unchecked(blocks))
    }

    pub(crate) fn new_unchecked(blocks: Vec<Vec<usize>>) -> Self {
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b.first().copied().unwrap_or(usize::MAX));
        ModularPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// The partition of `g`'s vertices into its maximal proper strong modules:
/// connected components if `g` is disconnected, co-components if the
/// complement is disconnected, and otherwise the maximal modules other
/// than the whole vertex set, which are pairwise disjoint in that case.
/// For `n <= 1` the partition is the list of singletons.
pub fn maximal_modular_partition(g: &Graph) -> ModularPartition {
    let n = g.n();
    if n == 0 {
        return ModularPartition { blocks: vec![] };
    }
    if n == 1 {
        return ModularPartition { blocks: vec![vec![0]] };
    }
    let all: Vec<usize> = (0..n).collect();
    let (_, blocks) = split_subset(g, &all);
    ModularPartition::new_unchecked(blocks)
}

/// Collapses each block of `p` to a single vertex. Block `i` of the sorted
/// partition becomes vertex `i`; two quotient vertices are adjacent exactly
/// when their blocks are fully adjacent in `g`. Every block must be a
/// module of `g`.
pub fn quotient(g: &Graph, p: &ModularPartition) -> Result<Graph> {
    // Re-validate against this graph: the partition may have been built
    // for a different host.
    let validated = ModularPartition::new(g, p.blocks.clone())?;
    let blocks = validated.blocks();
    let mut q = Graph::new(blocks.len());
    for i in 0..blocks.len() {
        for j in (i + 1)..blocks.len() {
            // Blocks are modules, so one representative pair decides.
            if g.has_edge(blocks[i][0], blocks[j][0]) {
                q.add_edge(i, j)?;
            }
        }
    }
    Ok(q)
}

/// Inner-node label of the decomposition tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    /// The subgraph is disconnected; children are its components.
    Parallel,
    /// The complement is disconnected; children are the co-components.
    Series,
    /// Both are connected; the quotient by the children has only trivial
    /// modules.
    Prime,
}

/// A node of the modular decomposition tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MdNode {
    Leaf(usize),
    Inner {
        kind: ModuleKind,
        /// Sorted vertex set of the strong module this node represents.
        vertices: Vec<usize>,
        /// Children ordered by smallest vertex.
        children: Vec<MdNode>,
        /// For prime nodes, the quotient graph on child indices.
        quotient: Option<Graph>,
    },
}

impl MdNode {
    /// The sorted vertex set below this node.
    pub fn vertex_set(&self) -> Vec<usize> {
        match self {
            MdNode::Leaf(v) => vec![*v],
            MdNode::Inner { vertices, .. } => vertices.clone(),
        }
    }

    /// Inner-node label; `None` for leaves.
    pub fn kind(&self) -> Option<ModuleKind> {
        match self {
            MdNode::Leaf(_) => None,
            MdNode::Inner { kind, .. } => Some(*kind),
        }
    }

    pub fn children(&self) -> &[MdNode] {
        match self {
            MdNode::Leaf(_) => &[],
            MdNode::Inner { children, .. } => children,
        }
    }

    /// Vertex sets of the children, in child order.
    pub fn child_sets(&self) -> Vec<Vec<usize>> {
        self.children().iter().map(|c| c.vertex_set()).collect()
    }

    /// For prime nodes, the quotient graph where vertex `i` stands for
    /// child `i`.
    pub fn quotient(&self) -> Option<&Graph> {
        match self {
            MdNode::Leaf(_) => None,
            MdNode::Inner { quotient, .. } => quotient.as_ref(),
        }
    }
}

/// The modular decomposition tree of a graph. Empty for the graph on zero
/// vertices, a single leaf for one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdTree {
    root: Option<MdNode>,
    n: usize,
}

impl MdTree {
    /// Builds the tree by recursive partitioning, splitting on components,
    /// co-components, or maximal proper modules found by closure.
    pub fn build(g: &Graph) -> MdTree {
        let n = g.n();
        let root = match n {
            0 => None,
            _ => {
                let all: Vec<usize> = (0..n).collect();
                Some(build_node(g, &all))
            }
        };
        MdTree { root, n }
    }

    pub fn root(&self) -> Option<&MdNode> {
        self.root.as_ref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertex sets of all tree nodes (the strong modules), sorted by size
    /// then lexicographically.
    pub fn node_sets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        fn walk(node: &MdNode, out: &mut Vec<Vec<usize>>) {
            out.push(node.vertex_set());
            for c in node.children() {
                walk(c, out);
            }
        }
        if let Some(r) = &self.root {
            walk(r, &mut out);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Whether any node is prime. Cographs have none.
    pub fn has_prime(&self) -> bool {
        fn walk(node: &MdNode) -> bool {
            node.kind() == Some(ModuleKind::Prime) || node.children().iter().any(walk)
        }
        self.root.as_ref().is_some_and(walk)
    }

    /// All prime nodes, in depth-first order.
    pub fn prime_nodes(&self) -> Vec<&MdNode> {
        let mut out = Vec::new();
        fn walk<'a>(node: &'a MdNode, out: &mut Vec<&'a MdNode>) {
            if node.kind() == Some(ModuleKind::Prime) {
                out.push(node);
            }
            for c in node.children() {
                walk(c, out);
            }
        }
        if let Some(r) = &self.root {
            walk(r, &mut out);
        }
        out
    }

    /// The prime node with no prime node below it whose vertex set has the
    /// smallest minimum id; `None` when the graph is a cograph.
    pub fn lowest_prime(&self) -> Option<&MdNode> {
        let mut lowest: Vec<&MdNode> = Vec::new();
        fn walk<'a>(node: &'a MdNode, lowest: &mut Vec<&'a MdNode>) -> bool {
            let mut prime_below = false;
            for c in node.children() {
                prime_below |= walk(c, lowest);
            }
            let is_prime = node.kind() == Some(ModuleKind::Prime);
            if is_prime && !prime_below {
                lowest.push(node);
            }
            prime_below || is_prime
        }
        if let Some(r) = &self.root {
            walk(r, &mut lowest);
        }
        lowest
            .into_iter()
            .min_by_key(|node| node.vertex_set()[0])
    }
}

/// The strong modules of `g`: exactly the node vertex sets of its
/// decomposition tree, sorted by size then lexicographically.
pub fn strong_modules(g: &Graph) -> Vec<Vec<usize>> {
    MdTree::build(g).node_sets()
}

/// The vertex set of the lowest prime node of `t`, if any.
pub fn lowest_prime_module(t: &MdTree) -> Option<Vec<usize>> {
    t.lowest_prime().map(|n| n.vertex_set())
}

fn build_node(g: &Graph, sub: &[usize]) -> MdNode {
    if sub.len() == 1 {
        return MdNode::Leaf(sub[0]);
    }
    let (kind, blocks) = split_subset(g, sub);
    let children: Vec<MdNode> = blocks.iter().map(|b| build_node(g, b)).collect();
    let quotient = (kind == ModuleKind::Prime).then(|| {
        let mut q = Graph::new(blocks.len());
        for i in 0..blocks.len() {
            for j in (i + 1)..blocks.len() {
                if g.has_edge(blocks[i][0], blocks[j][0]) {
                    q.add_edge(i, j).expect("indices in range");
                }
            }
        }
        q
    });
    MdNode::Inner {
        kind,
        vertices: sub.to_vec(),
        children,
        quotient,
    }
}

/// Splits a vertex subset (with at least two vertices) into the blocks of
/// its maximal modular partition, classifying the node kind.
fn split_subset(g: &Graph, sub: &[usize]) -> (ModuleKind, Vec<Vec<usize>>) {
    let comps = g.components_within(sub);
    if comps.len() > 1 {
        return (ModuleKind::Parallel, comps);
    }
    let cocomps = g.co_components_within(sub);
    if cocomps.len() > 1 {
        return (ModuleKind::Series, cocomps);
    }
    (ModuleKind::Prime, prime_blocks(g, sub))
}

/// Maximal proper modules of a connected, co-connected induced subgraph.
///
/// Two vertices land in one block exactly when the smallest module
/// containing both is proper. That module is computed by closure: starting
/// from the pair, any outside vertex adjacent to part but not all of the
/// current set must be absorbed.
fn prime_blocks(g: &Graph, sub: &[usize]) -> Vec<Vec<usize>> {
    let mut dsu = Dsu::new(sub.len());
    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in sub.iter().enumerate() {
        position[v] = i;
    }
    for i in 0..sub.len() {
        for j in (i + 1)..sub.len() {
            if dsu.find(i) == dsu.find(j) {
                continue;
            }
            let closure = minimal_module_within(g, sub, sub[i], sub[j]);
            if closure.len() < sub.len() {
                for &v in &closure {
                    dsu.union(i, position[v]);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); sub.len()];
    for (i, &v) in sub.iter().enumerate() {
        groups[dsu.find(i)].push(v);
    }
    let mut blocks: Vec<Vec<usize>> = groups.into_iter().filter(|b| !b.is_empty()).collect();
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// The smallest module of `g[sub]` containing `u` and `v`.
fn minimal_module_within(g: &Graph, sub: &[usize], u: usize, v: usize) -> Vec<usize> {
    let mut in_set = vec![false; g.n()];
    in_set[u] = true;
    in_set[v] = true;
    let mut members = vec![u, v];
    // neighbor_count[z] tracks |N(z) ∩ members| for candidates z.
    let mut neighbor_count = vec![0usize; g.n()];
    for &z in sub {
        if !in_set[z] {
            neighbor_count[z] =
                usize::from(g.has_edge(z, u)) + usize::from(g.has_edge(z, v));
        }
    }
    loop {
        let mut grew = false;
        for &z in sub {
            if in_set[z] {
                continue;
            }
            // z splits the set when it sees both a neighbor and a
            // non-neighbor inside; any module containing the set must
            // then absorb z.
            if neighbor_count[z] > 0 && neighbor_count[z] < members.len() {
                in_set[z] = true;
                members.push(z);
                for &w in g.neighbors(z) {
                    if in_subset(sub, w) && !in_set[w] {
                        neighbor_count[w] += 1;
                    }
                }
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    members.sort_unstable();
    members
}

/// Membership test on a sorted vertex subset.
fn in_subset(sub: &[usize], w: usize) -> bool {
    sub.binary_search(&w).is_ok()
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // Deterministic: smaller root wins.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
