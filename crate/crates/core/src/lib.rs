//! Cograph recognition, modular decomposition, and minimum cograph editing.
//!
//! A cograph is a graph with no induced path on four vertices. This crate
//! recognizes cographs and produces their cotrees, builds modular
//! decomposition trees for arbitrary graphs, partitions vertices into twin
//! classes, recognizes and edits spiders, and computes cograph edit sets
//! two ways: an exact branch-and-bound over the prime quotients of the
//! decomposition tree, and a module-merging heuristic whose trace explains
//! every edit it makes. A seeded generator and a small benchmark runner
//! round things out.

pub mod cotree;
pub mod edit;
pub mod error;
pub mod gen;
pub mod graph;
pub mod md;
pub mod spider;
pub mod twins;

pub use cotree::{Cotree, CotreeLabel};
pub use edit::{
    apply, decompose_into_merge_trace, exact_edit, heuristic_edit, merge_many, merge_pair,
    oracle_exact_edit, select_merge_pair, EditSet, MergeRecord, MergeSelection, MergeTrace,
    EXACT_QUOTIENT_CAP, ORACLE_MAX_K, ORACLE_MAX_N,
};
pub use error::{Error, Result};
pub use gen::{
    perturb, random_cograph, run_bench, AggregateRow, BenchReport, BenchRow, EditMethod,
    GeneratorConfig, RNG_ALGORITHM,
};
pub use graph::{Graph, P4Witness};
pub use md::{is_module, strong_modules, MdNode, MdTree, ModularPartition, ModuleKind};
pub use spider::{edit_spider, is_p4_sparse, recognize_spider, SpiderDecomposition, SpiderKind};
pub use twins::{has_nontrivial_twins, twin_partition, TwinClass, TwinKind, TwinPartition};
