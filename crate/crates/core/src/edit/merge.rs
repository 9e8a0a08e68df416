//! Merging modules by editing their surroundings.
//!
//! Merging disjoint modules means editing the graph so their union becomes
//! a module: every outside vertex that sees part of the union must be made
//! to see all of it or none of it. Flipping such a vertex against a source
//! module costs one pair per member, so each splitter independently picks
//! its cheaper side. The choice is made jointly against all sources, which
//! keeps the result independent of any merge order.

use std::collections::BTreeSet;

use crate::edit::{apply, EditSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, P4Witness};
use crate::md::is_module;

/// Edits `g` so that `mi ∪ mj` becomes a module, touching only pairs with
/// exactly one endpoint in the union. Both inputs must be disjoint modules
/// of `g`, and their union must not already be a module.
///
/// Each splitter vertex is fully adjacent to exactly one of the two
/// modules; it is flipped against the cheaper side (fewer vertices), and
/// on a tie against the side it is adjacent to, so ties prefer deletions.
pub fn merge_pair(
    g: &Graph,
    mi: &[usize],
    mj: &[usize],
) -> Result<(EditSet, Graph)> {
    merge_many(g, &[mi.to_vec(), mj.to_vec()])
}

/// Merges any number of disjoint modules into one. The flip direction for
/// each splitter weighs all sources at once — adjacent sources against
/// non-adjacent ones — so the outcome does not depend on the order in
/// which the sources are listed.
pub fn merge_many(g: &Graph, sources: &[Vec<usize>]) -> Result<(EditSet, Graph)> {
    let cleaned = validate_sources(g, sources)?;
    let refs: Vec<&[usize]> = cleaned.iter().map(|s| s.as_slice()).collect();
    let edits = plan_union(g, &refs);
    let merged = apply(g, &edits)?;
    debug_assert!({
        let union: Vec<usize> = refs.iter().flat_map(|s| s.iter().copied()).collect();
        is_module(&merged, &union).unwrap()
    });
    Ok((edits, merged))
}

/// The pair choice made for one round of merging, with its planned edits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeSelection {
    pub mi: Vec<usize>,
    pub mj: Vec<usize>,
    /// The edits [`merge_pair`] would perform for this pair.
    pub plan: EditSet,
    /// Total flip cost (one per planned pair).
    pub cost: usize,
    /// Induced four-vertex paths of the candidate region that the plan
    /// removes.
    pub p4s_destroyed: usize,
}

/// Chooses which two of the given modules to merge.
///
/// The objective is lexicographic: smallest flip cost first; among the
/// cheapest pairs, the one whose plan destroys the most induced
/// four-vertex paths of the subgraph induced by all the modules together;
/// remaining ties go to the pair with the smallest minimum vertex ids.
pub fn select_merge_pair(g: &Graph, children: &[Vec<usize>]) -> Result<MergeSelection> {
    let cleaned = validate_sources_weak(g, children)?;
    if cleaned.len() < 2 {
        return Err(Error::MergePrecondition {
            reason: format!("pair selection needs at least two modules, got {}", cleaned.len()),
        });
    }
    let region: Vec<usize> = {
        let mut all: Vec<usize> = cleaned.iter().flat_map(|c| c.iter().copied()).collect();
        all.sort_unstable();
        all
    };
    let (region_graph, region_vertices) = g.induced_subgraph(&region)?;
    let mut local_index = vec![usize::MAX; g.n()];
    for (local, &orig) in region_vertices.iter().enumerate() {
        local_index[orig] = local;
    }
    let base_p4s: BTreeSet<P4Witness> = region_graph.enumerate_p4s(None).into_iter().collect();

    let mut plans: Vec<(usize, usize, EditSet)> = Vec::new();
    let mut best_cost = usize::MAX;
    for i in 0..cleaned.len() {
        for j in (i + 1)..cleaned.len() {
            let plan = plan_union(g, &[&cleaned[i], &cleaned[j]]);
            if plan.is_empty() {
                // The union is already a module; merging it would be a
                // no-op, so the pair is not a candidate.
                continue;
            }
            best_cost = best_cost.min(plan.len());
            plans.push((i, j, plan));
        }
    }
    if plans.is_empty() {
        return Err(Error::MergePrecondition {
            reason: "every pair of the given modules already forms a module".into(),
        });
    }

    let mut best: Option<(usize, (usize, usize), usize, usize, EditSet)> = None;
    for (i, j, plan) in plans {
        if plan.len() > best_cost {
            continue;
        }
        let destroyed = destroyed_p4s(&local_index, &base_p4s, &plan);
        let tie = (cleaned[i][0], cleaned[j][0]);
        let better = match &best {
            None => true,
            Some((_, best_tie, _, best_destroyed, _)) => {
                destroyed > *best_destroyed || (destroyed == *best_destroyed && tie < *best_tie)
            }
        };
        if better {
            best = Some((i, tie, j, destroyed, plan));
        }
    }
    let (i, _, j, p4s_destroyed, plan) = best.expect("at least one candidate pair");
    let cost = plan.len();
    Ok(MergeSelection {
        mi: cleaned[i].clone(),
        mj: cleaned[j].clone(),
        plan,
        cost,
        p4s_destroyed,
    })
}

/// How many of the region's induced paths disappear under `plan`. A path
/// witness survives the plan exactly when no planned pair has both
/// endpoints among its four vertices — any toggle inside the quadruple
/// changes its induced subgraph — so counting is a membership test rather
/// than a re-enumeration. The plan's pairs all lie inside the region
/// whenever the modules cover a module of `g`, which is the calling
/// convention.
fn destroyed_p4s(
    local_index: &[usize],
    base_p4s: &BTreeSet<P4Witness>,
    plan: &EditSet,
) -> usize {
    let local_pairs: Vec<(usize, usize)> = plan
        .iter()
        .map(|(u, v)| (local_index[u], local_index[v]))
        .collect();
    debug_assert!(local_pairs.iter().all(|&(u, v)| u != usize::MAX && v != usize::MAX));
    base_p4s
        .iter()
        .filter(|w| {
            let vs = w.vertices();
            local_pairs
                .iter()
                .any(|&(u, v)| vs.contains(&u) && vs.contains(&v))
        })
        .count()
}

/// Shared source validation: in-range, non-empty, disjoint modules.
fn validate_sources_weak(g: &Graph, sources: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let mut cleaned: Vec<Vec<usize>> = Vec::with_capacity(sources.len());
    let mut seen = vec![false; g.n()];
    for src in sources {
        if src.is_empty() {
            return Err(Error::MergePrecondition {
                reason: "empty module in merge sources".into(),
            });
        }
        let mut s = src.clone();
        s.sort_unstable();
        s.dedup();
        for &v in &s {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if seen[v] {
                return Err(Error::MergePrecondition {
                    reason: format!("merge sources overlap at vertex {v}"),
                });
            }
            seen[v] = true;
        }
        if !is_module(g, &s)? {
            return Err(Error::NotAModule(s));
        }
        cleaned.push(s);
    }
    Ok(cleaned)
}

/// Full merge validation: at least two sources, and a union that is not
/// yet a module (otherwise there is nothing to merge).
fn validate_sources(g: &Graph, sources: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    if sources.len() < 2 {
        return Err(Error::MergePrecondition {
            reason: format!("merging needs at least two modules, got {}", sources.len()),
        });
    }
    let cleaned = validate_sources_weak(g, sources)?;
    let union: Vec<usize> = cleaned.iter().flat_map(|s| s.iter().copied()).collect();
    if is_module(g, &union)? {
        return Err(Error::MergePrecondition {
            reason: "the union of the sources is already a module".into(),
        });
    }
    Ok(cleaned)
}

/// The union-rule edit plan: for every vertex outside the sources that
/// sees some sources fully and others not at all, flip it against the
/// lighter group; ties flip against the adjacent group (deletion).
///
/// Assumes each source is a module of `g` and the sources are disjoint.
fn plan_union(g: &Graph, sources: &[&[usize]]) -> EditSet {
    let mut in_union = vec![false; g.n()];
    for src in sources {
        for &v in src.iter() {
            in_union[v] = true;
        }
    }
    let mut edits = EditSet::new();
    for y in 0..g.n() {
        if in_union[y] {
            continue;
        }
        let mut adjacent_weight = 0usize;
        let mut nonadjacent_weight = 0usize;
        for src in sources {
            // Sources are modules, so one representative decides.
            if g.has_edge(y, src[0]) {
                adjacent_weight += src.len();
            } else {
                nonadjacent_weight += src.len();
            }
        }
        if adjacent_weight == 0 || nonadjacent_weight == 0 {
            continue;
        }
        if nonadjacent_weight < adjacent_weight {
            // Completing the adjacency is cheaper.
            for src in sources {
                if !g.has_edge(y, src[0]) {
                    for &v in src.iter() {
                        edits.insert(y, v);
                    }
                }
            }
        } else {
            for src in sources {
                if g.has_edge(y, src[0]) {
                    for &v in src.iter() {
                        edits.insert(y, v);
                    }
                }
            }
        }
    }
    edits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn p4() -> Graph {
        graph(4, &[(0, 1), (1, 2), (2, 3)])
    }

    fn c5() -> Graph {
        graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    fn singletons(vs: &[usize]) -> Vec<Vec<usize>> {
        vs.iter().map(|&v| vec![v]).collect()
    }

    #[test]
    fn merging_path_endpoints_deletes_the_far_edge() {
        let (edits, merged) = merge_pair(&p4(), &[0], &[2]).unwrap();
        let pairs: Vec<(usize, usize)> = edits.iter().collect();
        assert_eq!(pairs, vec![(2, 3)]);
        assert!(merged.is_cograph());
        assert!(is_module(&merged, &[0, 2]).unwrap());
    }

    #[test]
    fn merging_cycle_vertices_costs_two() {
        let (edits, merged) = merge_pair(&c5(), &[0], &[2]).unwrap();
        let pairs: Vec<(usize, usize)> = edits.iter().collect();
        assert_eq!(pairs, vec![(0, 4), (2, 3)]);
        assert!(merged.is_cograph());
        assert!(is_module(&merged, &[0, 2]).unwrap());
    }

    #[test]
    fn merging_an_existing_module_is_an_error() {
        let g = graph(4, &[(2, 3)]);
        assert!(matches!(
            merge_pair(&g, &[0], &[1]),
            Err(Error::MergePrecondition { .. })
        ));
    }

    #[test]
    fn non_module_sources_are_rejected() {
        assert!(matches!(
            merge_pair(&p4(), &[0, 1], &[2]),
            Err(Error::NotAModule(_))
        ));
    }

    #[test]
    fn overlapping_sources_are_rejected() {
        assert!(matches!(
            merge_pair(&p4(), &[0], &[0]),
            Err(Error::MergePrecondition { .. })
        ));
    }

    #[test]
    fn merge_many_matches_merge_pair_on_two_sources() {
        let a = merge_pair(&c5(), &[1], &[3]).unwrap();
        let b = merge_many(&c5(), &[vec![1], vec![3]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn merge_many_is_order_independent() {
        let sources = [vec![0], vec![1], vec![3]];
        let (base_edits, base_graph) = merge_many(&p4(), &sources).unwrap();
        let orders: [[usize; 3]; 5] = [
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for order in orders {
            let permuted: Vec<Vec<usize>> = order.iter().map(|&i| sources[i].clone()).collect();
            let (edits, merged) = merge_many(&p4(), &permuted).unwrap();
            assert_eq!(edits, base_edits);
            assert_eq!(merged, base_graph);
        }
    }

    #[test]
    fn joint_flip_choice_beats_pairwise_folding() {
        // Merging {0}, {1}, {3} in a path 0-1-2-3: vertex 2 is adjacent
        // to weight 2 ({1} and {3}) and non-adjacent to weight 1 ({0}),
        // so the cheap plan adds 0-2 rather than deleting two edges.
        let (edits, merged) = merge_many(&p4(), &[vec![0], vec![1], vec![3]]).unwrap();
        let pairs: Vec<(usize, usize)> = edits.iter().collect();
        assert_eq!(pairs, vec![(0, 2)]);
        assert!(is_module(&merged, &[0, 1, 3]).unwrap());
        assert!(merged.is_cograph());
    }

    #[test]
    fn merge_edits_only_cross_the_union_boundary() {
        let cases: [(&Graph, Vec<Vec<usize>>); 2] = [
            (&c5(), singletons(&[0, 2])),
            (&p4(), singletons(&[0, 1, 3])),
        ];
        for (g, sources) in cases {
            let (edits, _) = merge_many(g, &sources).unwrap();
            let union: Vec<usize> = sources.iter().flatten().copied().collect();
            assert_eq!(edits.crossing(&union), edits);
        }
    }

    #[test]
    fn selection_on_the_path_prefers_the_lowest_cheap_pair() {
        // Four pairs of path singletons have flip cost 1 and each destroys
        // the single induced path; the id tie-break picks ({0},{1}).
        let sel = select_merge_pair(&p4(), &singletons(&[0, 1, 2, 3])).unwrap();
        assert_eq!(sel.mi, vec![0]);
        assert_eq!(sel.mj, vec![1]);
        assert_eq!(sel.cost, 1);
        assert_eq!(sel.p4s_destroyed, 1);
        let pairs: Vec<(usize, usize)> = sel.plan.iter().collect();
        assert_eq!(pairs, vec![(1, 2)]);
    }

    #[test]
    fn selection_on_the_cycle_destroys_all_paths() {
        let sel = select_merge_pair(&c5(), &singletons(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(sel.cost, 2);
        assert_eq!(sel.p4s_destroyed, 5);
        assert_eq!((sel.mi, sel.mj), (vec![0], vec![1]));
        let pairs: Vec<(usize, usize)> = sel.plan.iter().collect();
        assert_eq!(pairs, vec![(0, 4), (1, 2)]);
    }

    #[test]
    fn selection_respects_cost_before_path_score() {
        let sel = select_merge_pair(&p4(), &singletons(&[0, 1, 2, 3])).unwrap();
        // The adjacent middle pair ({1},{2}) would destroy the path too
        // but costs 2; it must lose to a cost-1 pair.
        assert_eq!(sel.cost, 1);
    }

    #[test]
    fn destroyed_count_matches_reenumeration() {
        // The membership shortcut must agree with actually applying the
        // plan and re-enumerating the induced paths.
        let cases: [(Graph, Vec<(usize, usize)>); 3] = [
            (p4(), vec![(1, 2)]),
            (c5(), vec![(0, 4), (1, 2)]),
            (
                graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 3)]),
                vec![(0, 3), (2, 3), (4, 5)],
            ),
        ];
        for (g, pairs) in cases {
            let plan: EditSet = pairs.iter().copied().collect();
            let base: BTreeSet<P4Witness> = g.enumerate_p4s(None).into_iter().collect();
            let identity: Vec<usize> = (0..g.n()).collect();
            let fast = destroyed_p4s(&identity, &base, &plan);
            let edited = apply(&g, &plan).unwrap();
            let after: BTreeSet<P4Witness> = edited.enumerate_p4s(None).into_iter().collect();
            assert_eq!(fast, base.difference(&after).count());
        }
    }

    #[test]
    fn selection_with_non_singleton_modules_weighs_flips() {
        // Blown-up path: each vertex of 0-1-2-3 becomes a two-vertex
        // independent module {2i, 2i+1}.
        let mut edges = Vec::new();
        for (a, b) in [(0usize, 1usize), (1, 2), (2, 3)] {
            for x in [2 * a, 2 * a + 1] {
                for y in [2 * b, 2 * b + 1] {
                    edges.push((x, y));
                }
            }
        }
        let g = graph(8, &edges);
        let children = vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]];
        let sel = select_merge_pair(&g, &children).unwrap();
        assert_eq!(sel.cost, 4);
        assert_eq!((sel.mi.clone(), sel.mj.clone()), (vec![0, 1], vec![2, 3]));
        let merged = apply(&g, &sel.plan).unwrap();
        assert!(merged.is_cograph());
    }
}
