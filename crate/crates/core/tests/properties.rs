//! Property tests tying the public API together: structural axioms of the
//! decomposition, soundness of both editors, and cross-checks of the fast
//! paths against definitional oracles.

use std::collections::BTreeSet;

use proptest::prelude::*;

use cograph::md::{maximal_modular_partition, quotient};
use cograph::{
    apply, exact_edit, heuristic_edit, is_module, is_p4_sparse, merge_many, perturb,
    random_cograph, strong_modules, twin_partition, Cotree, GeneratorConfig, Graph, MdTree,
    ModularPartition, ModuleKind,
};

/// Arbitrary graph on 1..=max_n vertices with an independent coin per pair.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_cograph() -> impl Strategy<Value = Graph> {
    (1usize..=20, any::<u64>(), 2usize..=5).prop_map(|(n, seed, width)| {
        random_cograph(&GeneratorConfig::new(n, seed, width, 0).unwrap())
    })
}

/// Definitional sparseness: every five vertices induce at most one path on
/// four. Vacuously true below five vertices.
fn sparse_by_definition(g: &Graph) -> bool {
    let n = g.n();
    if n < 5 {
        return true;
    }
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != 5 {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let (sub, _) = g.induced_subgraph(&verts).unwrap();
        if sub.count_p4s() > 1 {
            return false;
        }
    }
    true
}

fn pairs_inside(edits: &cograph::EditSet, m: &[usize]) -> usize {
    let set: BTreeSet<usize> = m.iter().copied().collect();
    edits
        .iter()
        .filter(|(u, v)| set.contains(u) && set.contains(v))
        .count()
}

proptest! {
    #[test]
    fn cotree_round_trips_recover_the_cograph(g in arb_cograph()) {
        let tree = Cotree::from_graph(&g).unwrap();
        prop_assert_eq!(tree.to_graph().unwrap(), g);
    }

    #[test]
    fn strong_modules_form_a_laminar_family(g in arb_graph(8)) {
        let mods = strong_modules(&g);
        let as_sets: Vec<BTreeSet<usize>> =
            mods.iter().map(|m| m.iter().copied().collect()).collect();
        let full: BTreeSet<usize> = (0..g.n()).collect();
        prop_assert!(as_sets.contains(&full));
        for v in 0..g.n() {
            prop_assert!(as_sets.contains(&BTreeSet::from([v])));
        }
        for m in &mods {
            prop_assert!(is_module(&g, m).unwrap());
        }
        for a in &as_sets {
            for b in &as_sets {
                let nested = a.is_subset(b) || b.is_subset(a);
                let disjoint = a.is_disjoint(b);
                prop_assert!(nested || disjoint);
            }
        }
    }

    #[test]
    fn twin_classes_partition_the_graph_into_modules(g in arb_graph(8)) {
        let twins = twin_partition(&g);
        let mut seen = BTreeSet::new();
        for class in twins.classes() {
            prop_assert!(is_module(&g, class.vertices()).unwrap());
            for &v in class.vertices() {
                prop_assert!(seen.insert(v));
            }
        }
        prop_assert_eq!(seen.len(), g.n());
    }

    #[test]
    fn perturbation_is_an_involution(n in 2usize..=12, seed: u64, q_raw: usize) {
        let g = random_cograph(&GeneratorConfig::new(n, seed, 3, 0).unwrap());
        let q = q_raw % (n * (n - 1) / 2 + 1);
        let (flipped, set) = perturb(&g, q, seed).unwrap();
        prop_assert_eq!(set.len(), q);
        prop_assert_eq!(apply(&flipped, &set).unwrap(), g);
    }

    #[test]
    fn sparseness_matches_the_definition(g in arb_graph(6)) {
        prop_assert_eq!(is_p4_sparse(&g), sparse_by_definition(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_editing_yields_a_cograph_preserving_strong_modules(g in arb_graph(8)) {
        let edits = exact_edit(&g).unwrap();
        let edited = apply(&g, &edits).unwrap();
        prop_assert!(edited.is_cograph());
        for m in strong_modules(&g) {
            prop_assert!(is_module(&edited, &m).unwrap());
        }
    }

    #[test]
    fn exact_edits_are_optimal_inside_every_strong_module(g in arb_graph(7)) {
        let edits = exact_edit(&g).unwrap();
        for m in strong_modules(&g) {
            if m.len() < 2 {
                continue;
            }
            let (sub, _) = g.induced_subgraph(&m).unwrap();
            let sub_optimum = exact_edit(&sub).unwrap().len();
            prop_assert_eq!(pairs_inside(&edits, &m), sub_optimum);
        }
    }

    #[test]
    fn quotients_of_the_edited_graph_stay_cographs(g in arb_graph(8)) {
        let pmax = maximal_modular_partition(&g);
        let edited = apply(&g, &exact_edit(&g).unwrap()).unwrap();
        let carried = ModularPartition::new(&edited, pmax.blocks().to_vec()).unwrap();
        prop_assert!(quotient(&edited, &carried).unwrap().is_cograph());
    }

    #[test]
    fn editing_a_prime_graph_never_makes_all_vertices_twins(g in arb_graph(8)) {
        let tree = MdTree::build(&g);
        let root_kind = tree.root().and_then(|r| r.kind());
        prop_assume!(root_kind == Some(ModuleKind::Prime));
        let edited = apply(&g, &exact_edit(&g).unwrap()).unwrap();
        prop_assert!(twin_partition(&edited).len() >= 2);
    }

    #[test]
    fn the_heuristic_is_sound_and_never_beats_the_optimum(g in arb_graph(8)) {
        let optimum = exact_edit(&g).unwrap();
        let (edits, trace, result) = heuristic_edit(&g).unwrap();
        prop_assert!(result.is_cograph());
        prop_assert_eq!(&apply(&g, &edits).unwrap(), &result);
        // Every net edit is logged in some round; the log may also hold
        // pairs that later rounds flipped back.
        prop_assert!(edits.difference(&trace.edit_union()).is_empty());
        prop_assert!(edits.len() >= optimum.len());
    }

    #[test]
    fn merging_singletons_is_order_independent(
        g in arb_graph(8),
        picks in proptest::collection::vec(any::<usize>(), 3),
    ) {
        prop_assume!(g.n() >= 3);
        let a = picks[0] % g.n();
        let b = picks[1] % g.n();
        let c = picks[2] % g.n();
        prop_assume!(a != b && b != c && a != c);
        let sources = [vec![a], vec![b], vec![c]];
        let baseline = merge_many(&g, &sources);
        prop_assume!(baseline.is_ok());
        let (base_edits, base_graph) = baseline.unwrap();
        for order in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let shuffled: Vec<Vec<usize>> =
                order.iter().map(|&i| sources[i].clone()).collect();
            let (edits, graph) = merge_many(&g, &shuffled).unwrap();
            prop_assert_eq!(&edits, &base_edits);
            prop_assert_eq!(&graph, &base_graph);
        }
    }
}
