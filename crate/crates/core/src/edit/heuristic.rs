//! The greedy editing loop: resolve one prime module at a time.
//!
//! While the current graph has a prime module, take a lowest one. If its
//! induced subgraph is a spider, collapse it optimally by dropping all
//! but one matched pair; otherwise pick the cheapest pair of its child
//! modules to merge and apply that plan. Each round strictly shrinks the
//! prime structure, and the loop ends on a cograph.

use crate::edit::merge::select_merge_pair;
use crate::edit::trace::{quotient_twin_classes, MergeRecord, MergeTrace};
use crate::edit::{apply, EditSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::md::MdTree;
use crate::spider::{edit_spider, recognize_spider};

/// Edits `g` into a cograph greedily, returning the edit set, a trace of
/// the merges performed, and the resulting cograph.
///
/// The edit set is the symmetric difference of all round plans — exactly
/// the pairs on which input and output disagree. A later round may undo a
/// pair an earlier round flipped (merging a group can rewire it towards a
/// vertex it was cut from before), so the trace, which logs every round's
/// plan as executed, can mention pairs the net edit set no longer
/// contains. A spider round records one merge per twin class that the
/// round's edit creates in the prime module's quotient; a merge round
/// records the selected pair. Rounds are capped at `n^2` as a guard
/// against a non-shrinking loop.
pub fn heuristic_edit(g: &Graph) -> Result<(EditSet, MergeTrace, Graph)> {
    let mut current = g.clone();
    let mut total = EditSet::new();
    let mut records: Vec<MergeRecord> = Vec::new();
    let round_cap = g.n() * g.n() + 1;
    let mut rounds = 0usize;
    loop {
        let tree = MdTree::build(&current);
        let Some(node) = tree.lowest_prime() else {
            break;
        };
        rounds += 1;
        if rounds > round_cap {
            return Err(Error::InternalInvariant {
                reason: "editing rounds exceeded the quadratic cap".into(),
            });
        }
        let m = node.vertex_set();
        let kids = node.child_sets();
        let (gm, mapping) = current.induced_subgraph(&m)?;

        let step: EditSet;
        if let Some(d) = recognize_spider(&gm) {
            let local = edit_spider(&gm, &d)?;
            step = local.iter().map(|(u, v)| (mapping[u], mapping[v])).collect();
            let stepped = apply(&current, &step)?;
            let classes = quotient_twin_classes(&stepped, &m, &kids)?;
            let mut covered = EditSet::new();
            for class in classes.iter().filter(|c| c.len() >= 2) {
                let sources: Vec<Vec<usize>> = class.iter().map(|&b| kids[b].clone()).collect();
                let mut merged: Vec<usize> = sources.iter().flatten().copied().collect();
                merged.sort_unstable();
                let edits = step.crossing(&merged);
                covered = covered.union(&edits);
                records.push(MergeRecord::new(m.clone(), sources, merged, edits));
            }
            // At a lowest prime module the spider's head sits inside a
            // single child, so the matched pairs always straddle the twin
            // classes created by the edit.
            debug_assert_eq!(covered, step);
            current = stepped;
        } else {
            let selection = select_merge_pair(&current, &kids)?;
            step = selection.plan.clone();
            let mut merged: Vec<usize> = selection
                .mi
                .iter()
                .chain(selection.mj.iter())
                .copied()
                .collect();
            merged.sort_unstable();
            // Every planned pair has exactly one endpoint in the merged
            // module, so the record carries the whole step.
            debug_assert_eq!(step.crossing(&merged), step);
            records.push(MergeRecord::new(
                m.clone(),
                vec![selection.mi.clone(), selection.mj.clone()],
                merged,
                step.clone(),
            ));
            current = apply(&current, &step)?;
        }

        for (u, v) in step.iter() {
            total.toggle(u, v);
        }
    }
    debug_assert!(current.is_cograph());
    Ok((total, MergeTrace::new(records), current))
}
