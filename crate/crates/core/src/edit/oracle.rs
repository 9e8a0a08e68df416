//! Brute-force minimum cograph editing for tiny graphs.
//!
//! Certifies optima for the test suites by trying every edit set in
//! increasing cardinality. Exponential, so capped hard at 8 vertices and 5
//! edits; within those bounds a run is a few milliseconds.

use crate::edit::mask::MaskGraph;
use crate::edit::EditSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the oracle accepts.
pub const ORACLE_MAX_N: usize = 8;
/// Largest edit budget the oracle accepts.
pub const ORACLE_MAX_K: usize = 5;

/// The smallest edit set turning `g` into a cograph, or `None` when no set
/// of at most `max_k` pairs suffices. Deterministic: candidate sets are
/// tried in increasing cardinality and lexicographic order, so the first
/// success is the lexicographically smallest minimum solution.
pub fn oracle_exact_edit(g: &Graph, max_k: usize) -> Result<Option<EditSet>> {
    if g.n() > ORACLE_MAX_N {
        return Err(Error::Capacity {
            operation: "oracle_exact_edit",
            limit: ORACLE_MAX_N,
            actual: g.n(),
        });
    }
    if max_k > ORACLE_MAX_K {
        return Err(Error::Capacity {
            operation: "oracle_exact_edit edit budget",
            limit: ORACLE_MAX_K,
            actual: max_k,
        });
    }
    let n = g.n();
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    let mut mask = MaskGraph::from_graph(g);
    let mut chosen = Vec::new();
    for k in 0..=max_k.min(pairs.len()) {
        if search(&mut mask, &pairs, 0, k, &mut chosen) {
            return Ok(Some(
                EditSet::from_pairs(chosen).expect("combinations yield distinct pairs"),
            ));
        }
    }
    Ok(None)
}

/// Tries every `remaining`-subset of `pairs[start..]` on top of the edits
/// already toggled into `mask`, in lexicographic order.
fn search(
    mask: &mut MaskGraph,
    pairs: &[(usize, usize)],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<(usize, usize)>,
) -> bool {
    if remaining == 0 {
        return mask.is_p4_free();
    }
    if pairs.len() - start < remaining {
        return false;
    }
    for i in start..=(pairs.len() - remaining) {
        let (u, v) = pairs[i];
        mask.toggle(u, v);
        chosen.push((u, v));
        if search(mask, pairs, i + 1, remaining - 1, chosen) {
            return true;
        }
        chosen.pop();
        mask.toggle(u, v);
    }
    false
}
