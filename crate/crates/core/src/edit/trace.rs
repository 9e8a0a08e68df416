//! Decomposing an edit set into a sequence of module merges.
//!
//! A module-preserving edit set that turns a graph into a cograph can be
//! replayed as merges: repeatedly take a lowest prime module, look at the
//! edited quotient over its maximal proper modules, and group the blocks
//! by the twin classes they form there. Each class of two or more blocks
//! yields one merge record, and the edits attached to a record are the
//! pairs of the full edit set with exactly one endpoint in the merged
//! module. The union of all record edit sets recovers the edit set
//! exactly; inputs that do not decompose this way are rejected.

use crate::edit::{apply, EditSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::md::{is_module, quotient, strong_modules, MdTree, ModularPartition};
use crate::twins::twin_partition;

/// One merge step recovered from (or performed by) an editing process:
/// inside the prime module `prime`, the modules `sources` were merged
/// into `merged` by the pairs in `edits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeRecord {
    prime: Vec<usize>,
    sources: Vec<Vec<usize>>,
    merged: Vec<usize>,
    edits: EditSet,
}

impl MergeRecord {
    pub(crate) fn new(
        prime: Vec<usize>,
        sources: Vec<Vec<usize>>,
        merged: Vec<usize>,
        edits: EditSet,
    ) -> Self {
        MergeRecord { prime, sources, merged, edits }
    }

    /// The prime module inside which this merge happened.
    pub fn prime(&self) -> &[usize] {
        &self.prime
    }

    /// The disjoint modules that were merged.
    pub fn sources(&self) -> &[Vec<usize>] {
        &self.sources
    }

    /// The union of the sources.
    pub fn merged(&self) -> &[usize] {
        &self.merged
    }

    /// The edit pairs attributed to this merge: exactly the pairs of the
    /// overall edit set with one endpoint inside the merged module.
    pub fn edits(&self) -> &EditSet {
        &self.edits
    }
}

/// A sequence of merge records whose edit sets jointly cover an edit set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MergeTrace {
    records: Vec<MergeRecord>,
}

impl MergeTrace {
    pub(crate) fn new(records: Vec<MergeRecord>) -> Self {
        MergeTrace { records }
    }

    pub fn records(&self) -> &[MergeRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Union of the edit sets of all records.
    pub fn edit_union(&self) -> EditSet {
        let mut union = EditSet::new();
        for r in &self.records {
            union = union.union(&r.edits);
        }
        union
    }
}

/// Twin classes of the quotient that `edited` induces over the partition
/// `kids` of the module `m`, reported as lists of block indices.
///
/// Every block must still be a module of the edited graph restricted to
/// `m`; a block that is not gets reported as a module-preservation
/// failure in original vertex ids.
pub(crate) fn quotient_twin_classes(
    edited: &Graph,
    m: &[usize],
    kids: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>> {
    let (hm, mapping) = edited.induced_subgraph(m)?;
    debug_assert_eq!(mapping, m);
    let mut local_blocks: Vec<Vec<usize>> = Vec::with_capacity(kids.len());
    for kid in kids {
        let block: Vec<usize> = kid
            .iter()
            .map(|v| m.binary_search(v).expect("partition blocks lie inside the module"))
            .collect();
        local_blocks.push(block);
    }
    for (block, kid) in local_blocks.iter().zip(kids) {
        if !is_module(&hm, block)? {
            return Err(Error::NotModulePreserving(kid.clone()));
        }
    }
    let partition = ModularPartition::new_unchecked(local_blocks);
    debug_assert!(partition
        .blocks()
        .iter()
        .zip(kids)
        .all(|(b, k)| m[b[0]] == k[0]));
    let q = quotient(&hm, &partition)?;
    Ok(twin_partition(&q)
        .classes()
        .iter()
        .map(|c| c.vertices().to_vec())
        .collect())
}

/// Replays `f` as a sequence of module merges on `g`.
///
/// Requires that applying `f` yields a cograph and that `f` preserves the
/// strong modules of `g`. Each round takes a lowest prime module of the
/// current graph, finds the twin classes that the final graph induces on
/// its quotient, and emits one record per class of two or more blocks;
/// the round then applies the block-crossing pairs that `f` fully edits.
/// Edit sets that leave a block pair half-edited, keep editing after all
/// prime modules are gone, or fail to cover themselves by record edits
/// are rejected as not decomposable.
pub fn decompose_into_merge_trace(g: &Graph, f: &EditSet) -> Result<MergeTrace> {
    f.validate_for(g.n())?;
    let target = apply(g, f)?;
    if let Some(witness) = target.find_p4() {
        return Err(Error::NotACograph { witness });
    }
    for module in strong_modules(g) {
        if !is_module(&target, &module)? {
            return Err(Error::NotModulePreserving(module));
        }
    }

    let mut current = g.clone();
    let mut remaining = f.clone();
    let mut records: Vec<MergeRecord> = Vec::new();
    let round_cap = f.len() + 1;
    let mut rounds = 0;
    while !remaining.is_empty() {
        rounds += 1;
        if rounds > round_cap {
            return Err(Error::InternalInvariant {
                reason: "merge replay failed to consume the edit set".into(),
            });
        }
        let tree = MdTree::build(&current);
        let Some(node) = tree.lowest_prime() else {
            return Err(Error::TraceDecomposition {
                reason: "edits remain but the graph has no prime module".into(),
            });
        };
        let m = node.vertex_set();
        let kids = node.child_sets();
        let classes = quotient_twin_classes(&target, &m, &kids)?;

        // Which block pairs does the remaining edit set fully toggle?
        let mut class_of_block = vec![usize::MAX; kids.len()];
        for (ci, class) in classes.iter().enumerate() {
            for &b in class {
                class_of_block[b] = ci;
            }
        }
        let big: Vec<&Vec<usize>> = classes.iter().filter(|c| c.len() >= 2).collect();
        if big.is_empty() {
            return Err(Error::TraceDecomposition {
                reason: "the edited quotient of a prime module has no twins".into(),
            });
        }

        let mut progress = EditSet::new();
        for i in 0..kids.len() {
            for j in (i + 1)..kids.len() {
                let full = kids[i].len() * kids[j].len();
                let mut touched = 0usize;
                for &u in &kids[i] {
                    for &v in &kids[j] {
                        if remaining.contains(u, v) {
                            touched += 1;
                        }
                    }
                }
                if touched == 0 || touched == full {
                    let same_class = class_of_block[i] == class_of_block[j];
                    let in_big = classes[class_of_block[i]].len() >= 2
                        || classes[class_of_block[j]].len() >= 2;
                    if touched == full && !same_class && in_big {
                        for &u in &kids[i] {
                            for &v in &kids[j] {
                                progress.insert(u, v);
                            }
                        }
                    }
                } else {
                    return Err(Error::TraceDecomposition {
                        reason: format!(
                            "blocks starting at {} and {} are only partially edited",
                            kids[i][0], kids[j][0]
                        ),
                    });
                }
            }
        }
        if progress.is_empty() {
            return Err(Error::TraceDecomposition {
                reason: "no fully edited block pair crosses a twin class".into(),
            });
        }

        for class in &big {
            let sources: Vec<Vec<usize>> = class.iter().map(|&b| kids[b].clone()).collect();
            let mut merged: Vec<usize> = sources.iter().flatten().copied().collect();
            merged.sort_unstable();
            debug_assert!({
                let local: Vec<usize> = merged
                    .iter()
                    .map(|v| m.binary_search(v).unwrap())
                    .collect();
                let (hm, _) = target.induced_subgraph(&m).unwrap();
                is_module(&hm, &local).unwrap()
            });
            let edits = f.crossing(&merged);
            records.push(MergeRecord::new(m.clone(), sources, merged, edits));
        }

        current = apply(&current, &progress)?;
        remaining = remaining.difference(&progress);
    }

    let trace = MergeTrace::new(records);
    if trace.edit_union() != *f {
        return Err(Error::TraceDecomposition {
            reason: "the union of record edits does not recover the edit set".into(),
        });
    }
    Ok(trace)
}
