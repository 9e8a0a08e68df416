//! Seeded cograph generation, perturbation, and the benchmark runner.
//!
//! Everything here is deterministic given the seeds: the generator builds
//! a random cotree by recursively splitting a shuffled leaf sequence, the
//! perturber flips a uniform sample of vertex pairs, and the benchmark
//! runner assembles rows in a stable order so that repeated runs produce
//! identical reports (wall-clock columns aside).

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cotree::{Cotree, CotreeLabel};
use crate::edit::{
    apply, exact_edit, heuristic_edit, oracle_exact_edit, EditSet, ORACLE_MAX_K, ORACLE_MAX_N,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Identifier of the pseudo-random generator backing all seeded
/// operations, recorded in benchmark reports.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Stream separation constant so that perturbation draws are independent
/// of generator draws under the same seed.
const PERTURB_STREAM: u64 = 0x9E37_79B9_7F4A_7C15;

/// Parameters for one generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    n: usize,
    seed: u64,
    max_children: usize,
    flips: usize,
}

impl GeneratorConfig {
    /// Validates and builds a configuration: at least one vertex, a
    /// branching cap of at least two, and no more flips than there are
    /// vertex pairs.
    pub fn new(n: usize, seed: u64, max_children: usize, flips: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig {
                reason: "generated graphs need at least one vertex".into(),
            });
        }
        if max_children < 2 {
            return Err(Error::InvalidConfig {
                reason: format!("max_children must be at least 2, got {max_children}"),
            });
        }
        let pairs = n * (n - 1) / 2;
        if flips > pairs {
            return Err(Error::InvalidConfig {
                reason: format!("{flips} flips exceed the {pairs} pairs of a {n}-vertex graph"),
            });
        }
        Ok(GeneratorConfig { n, seed, max_children, flips })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn max_children(&self) -> usize {
        self.max_children
    }

    pub fn flips(&self) -> usize {
        self.flips
    }
}

/// Builds a seeded random cograph by sampling a cotree: the leaf ids are
/// shuffled, recursively split into between two and `max_children`
/// consecutive parts, and labeled with alternating series/parallel levels
/// starting from a random root label.
pub fn random_cograph(cfg: &GeneratorConfig) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut ids: Vec<usize> = (0..cfg.n).collect();
    ids.shuffle(&mut rng);
    let root_label = if rng.gen_bool(0.5) {
        CotreeLabel::Series
    } else {
        CotreeLabel::Parallel
    };
    let tree = build_subtree(&mut rng, &ids, cfg.max_children, root_label);
    tree.to_graph().expect("generated cotrees are canonical by construction")
}

fn build_subtree(
    rng: &mut ChaCha8Rng,
    ids: &[usize],
    max_children: usize,
    label: CotreeLabel,
) -> Cotree {
    if ids.len() == 1 {
        return Cotree::Leaf(ids[0]);
    }
    let parts = rng.gen_range(2..=max_children.min(ids.len()));
    let mut boundaries = rand::seq::index::sample(rng, ids.len() - 1, parts - 1).into_vec();
    boundaries.sort_unstable();
    let mut children = Vec::with_capacity(parts);
    let mut start = 0;
    for b in boundaries {
        children.push(build_subtree(rng, &ids[start..=b], max_children, label.other()));
        start = b + 1;
    }
    children.push(build_subtree(rng, &ids[start..], max_children, label.other()));
    Cotree::Inner { label, children }
}

/// Flips `q` distinct uniformly chosen vertex pairs of `g`, returning the
/// perturbed graph and the flip set. Re-applying the returned set undoes
/// the perturbation.
pub fn perturb(g: &Graph, q: usize, seed: u64) -> Result<(Graph, EditSet)> {
    let n = g.n();
    let pairs = n * (n - 1) / 2;
    if q > pairs {
        return Err(Error::InvalidConfig {
            reason: format!("{q} flips exceed the {pairs} pairs of a {n}-vertex graph"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(PERTURB_STREAM));
    let mut flips = EditSet::new();
    for index in rand::seq::index::sample(&mut rng, pairs, q) {
        let (u, v) = pair_from_index(index, n);
        flips.insert(u, v);
    }
    let flipped = apply(g, &flips)?;
    Ok((flipped, flips))
}

/// The `index`-th pair of an `n`-vertex graph in lexicographic order.
fn pair_from_index(mut index: usize, n: usize) -> (usize, usize) {
    for u in 0..n {
        let row = n - 1 - u;
        if index < row {
            return (u, u + 1 + index);
        }
        index -= row;
    }
    unreachable!("pair index out of range");
}

/// The editing algorithms the benchmark can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EditMethod {
    Heuristic,
    Exact,
    Oracle,
}

impl EditMethod {
    pub const ALL: [EditMethod; 3] = [EditMethod::Heuristic, EditMethod::Exact, EditMethod::Oracle];

    pub fn as_str(&self) -> &'static str {
        match self {
            EditMethod::Heuristic => "heuristic",
            EditMethod::Exact => "exact",
            EditMethod::Oracle => "oracle",
        }
    }
}

impl fmt::Display for EditMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EditMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "heuristic" => Ok(EditMethod::Heuristic),
            "exact" => Ok(EditMethod::Exact),
            "oracle" => Ok(EditMethod::Oracle),
            other => Err(Error::InvalidConfig {
                reason: format!("unknown edit method {other:?}"),
            }),
        }
    }
}

/// One benchmark measurement. `edit_size` and `cograph` are `None` when
/// the method was skipped on this instance (capacity or budget);
/// `optimum` carries the oracle's answer when it is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub seed: u64,
    pub n: usize,
    pub flips: usize,
    pub method: EditMethod,
    pub edit_size: Option<usize>,
    pub cograph: Option<bool>,
    pub optimum: Option<usize>,
    pub wall_ms: u128,
}

/// Aggregated statistics for one `(n, flips, method)` group.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub n: usize,
    pub flips: usize,
    pub method: EditMethod,
    pub mean_edit_size: Option<f64>,
    /// For heuristic groups: the fraction of instances with a known
    /// optimum that the heuristic matched exactly.
    pub frac_heuristic_eq_oracle: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub aggregates: Vec<AggregateRow>,
}

impl BenchReport {
    /// Renders the report: a generator comment, the row block, a blank
    /// line, and the aggregate block. Identical inputs give identical
    /// bytes except for the wall-clock column.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# rng: {RNG_ALGORITHM}\n"));
        out.push_str("seed,n,flips,method,edit_size,cograph,optimum,wall_ms\n");
        for r in &self.rows {
            let edit_size = match r.edit_size {
                Some(k) => k.to_string(),
                None => "skipped".into(),
            };
            let cograph = match r.cograph {
                Some(b) => b.to_string(),
                None => String::new(),
            };
            let optimum = match r.optimum {
                Some(k) => k.to_string(),
                None => String::new(),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.seed, r.n, r.flips, r.method, edit_size, cograph, optimum, r.wall_ms
            ));
        }
        out.push('\n');
        out.push_str("n,flips,method,mean_edit_size,frac_heuristic_eq_oracle\n");
        for a in &self.aggregates {
            let mean = a
                .mean_edit_size
                .map(|m| format!("{m:.4}"))
                .unwrap_or_default();
            let frac = a
                .frac_heuristic_eq_oracle
                .map(|f| format!("{f:.4}"))
                .unwrap_or_default();
            out.push_str(&format!("{},{},{},{},{}\n", a.n, a.flips, a.method, mean, frac));
        }
        out
    }
}

/// Runs every requested method on every configured instance.
///
/// Each instance is a seeded random cograph perturbed by the configured
/// number of flips. Capacity or oracle-budget limits mark the row as
/// skipped rather than failing the run. When the oracle is among the
/// methods, its answer is attached as the `optimum` of all rows of that
/// instance. Rows are sorted by seed, then instance shape, then method.
pub fn run_bench(configs: &[GeneratorConfig], methods: &[EditMethod]) -> Result<BenchReport> {
    let mut chosen: Vec<EditMethod> = methods.to_vec();
    chosen.sort_unstable();
    chosen.dedup();

    let mut rows: Vec<BenchRow> = Vec::new();
    for cfg in configs {
        let base = random_cograph(cfg);
        let (instance, _) = perturb(&base, cfg.flips, cfg.seed)?;
        let mut instance_rows: Vec<BenchRow> = Vec::new();
        let mut optimum: Option<usize> = None;
        for &method in &chosen {
            let started = Instant::now();
            let measured: Option<usize> = match method {
                EditMethod::Heuristic => {
                    let (edits, _, result) = heuristic_edit(&instance)?;
                    debug_assert!(result.is_cograph());
                    Some(edits.len())
                }
                EditMethod::Exact => match exact_edit(&instance) {
                    Ok(edits) => {
                        debug_assert!(apply(&instance, &edits)?.is_cograph());
                        Some(edits.len())
                    }
                    Err(Error::Capacity { .. }) => None,
                    Err(other) => return Err(other),
                },
                EditMethod::Oracle => {
                    if instance.n() > ORACLE_MAX_N {
                        None
                    } else {
                        match oracle_exact_edit(&instance, ORACLE_MAX_K) {
                            Ok(found) => found.map(|e| e.len()),
                            Err(Error::Capacity { .. }) => None,
                            Err(other) => return Err(other),
                        }
                    }
                }
            };
            let wall_ms = started.elapsed().as_millis();
            if method == EditMethod::Oracle {
                optimum = measured;
            }
            instance_rows.push(BenchRow {
                seed: cfg.seed,
                n: cfg.n,
                flips: cfg.flips,
                method,
                edit_size: measured,
                cograph: measured.map(|_| true),
                optimum: None,
                wall_ms,
            });
        }
        for row in &mut instance_rows {
            row.optimum = optimum;
        }
        rows.extend(instance_rows);
    }
    rows.sort_by_key(|r| (r.seed, r.n, r.flips, r.method));

    let mut aggregates: Vec<AggregateRow> = Vec::new();
    let mut groups: Vec<(usize, usize, EditMethod)> =
        rows.iter().map(|r| (r.n, r.flips, r.method)).collect();
    groups.sort_unstable();
    groups.dedup();
    for (n, flips, method) in groups {
        let group: Vec<&BenchRow> = rows
            .iter()
            .filter(|r| r.n == n && r.flips == flips && r.method == method)
            .collect();
        let sizes: Vec<usize> = group.iter().filter_map(|r| r.edit_size).collect();
        let mean_edit_size = if sizes.is_empty() {
            None
        } else {
            Some(sizes.iter().sum::<usize>() as f64 / sizes.len() as f64)
        };
        let frac_heuristic_eq_oracle = if method == EditMethod::Heuristic {
            let comparable: Vec<&&BenchRow> = group
                .iter()
                .filter(|r| r.edit_size.is_some() && r.optimum.is_some())
                .collect();
            if comparable.is_empty() {
                None
            } else {
                let hits = comparable
                    .iter()
                    .filter(|r| r.edit_size == r.optimum)
                    .count();
                Some(hits as f64 / comparable.len() as f64)
            }
        } else {
            None
        };
        aggregates.push(AggregateRow { n, flips, method, mean_edit_size, frac_heuristic_eq_oracle });
    }
    Ok(BenchReport { rows, aggregates })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, seed: u64, flips: usize) -> GeneratorConfig {
        GeneratorConfig::new(n, seed, 4, flips).unwrap()
    }

    #[test]
    fn a_single_vertex_generates_k1() {
        let g = random_cograph(&cfg(1, 9, 0));
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn generated_graphs_are_cographs() {
        for seed in 0..8 {
            let g = random_cograph(&cfg(50, seed, 0));
            assert!(g.is_cograph(), "seed {seed}");
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = random_cograph(&cfg(30, 1234, 0));
        let b = random_cograph(&cfg(30, 1234, 0));
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_configurations_are_rejected() {
        assert!(GeneratorConfig::new(0, 1, 4, 0).is_err());
        assert!(GeneratorConfig::new(5, 1, 1, 0).is_err());
        assert!(GeneratorConfig::new(5, 1, 4, 11).is_err());
        assert!(GeneratorConfig::new(5, 1, 4, 10).is_ok());
    }

    #[test]
    fn perturbation_flips_exactly_q_distinct_pairs() {
        let g = random_cograph(&cfg(12, 5, 0));
        let (flipped, set) = perturb(&g, 6, 5).unwrap();
        assert_eq!(set.len(), 6);
        let (restored, _) = (apply(&flipped, &set).unwrap(), ());
        assert_eq!(restored, g);
    }

    #[test]
    fn zero_flips_is_the_identity() {
        let g = random_cograph(&cfg(10, 2, 0));
        let (same, set) = perturb(&g, 0, 2).unwrap();
        assert_eq!(same, g);
        assert!(set.is_empty());
    }

    #[test]
    fn too_many_flips_are_rejected() {
        let g = Graph::new(4);
        assert!(matches!(perturb(&g, 7, 0), Err(Error::InvalidConfig { .. })));
    }

    #[test]
    fn single_flip_instances_need_at_most_one_edit() {
        for seed in 0..10 {
            let g = random_cograph(&cfg(9, seed, 0));
            let (flipped, _) = perturb(&g, 1, seed).unwrap();
            let (edits, _, _) = heuristic_edit(&flipped).unwrap();
            assert!(edits.len() <= 1, "seed {seed}");
            if edits.is_empty() {
                assert!(flipped.is_cograph());
            }
        }
    }

    #[test]
    fn pair_indexing_is_a_bijection() {
        let n = 9;
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..n * (n - 1) / 2 {
            let (u, v) = pair_from_index(i, n);
            assert!(u < v && v < n);
            assert!(seen.insert((u, v)));
        }
    }

    #[test]
    fn bench_rows_compare_methods_on_each_instance() {
        let configs: Vec<GeneratorConfig> = (0..10).map(|s| cfg(8, s, 2)).collect();
        let report = run_bench(&configs, &EditMethod::ALL).unwrap();
        assert_eq!(report.rows.len(), 30);
        for chunk in report.rows.chunks(3) {
            let (h, e, o) = (&chunk[0], &chunk[1], &chunk[2]);
            assert_eq!(h.method, EditMethod::Heuristic);
            assert_eq!(e.method, EditMethod::Exact);
            assert_eq!(o.method, EditMethod::Oracle);
            assert_eq!(h.seed, e.seed);
            assert_eq!(e.seed, o.seed);
            let (hs, es, os) = (
                h.edit_size.unwrap(),
                e.edit_size.unwrap(),
                o.edit_size.unwrap(),
            );
            assert!(hs >= os);
            assert_eq!(es, os);
            assert_eq!(h.optimum, Some(os));
            assert_eq!(h.cograph, Some(true));
        }
    }

    #[test]
    fn zero_flip_instances_cost_nothing() {
        let configs = [cfg(8, 3, 0)];
        let report = run_bench(&configs, &EditMethod::ALL).unwrap();
        for row in &report.rows {
            assert_eq!(row.edit_size, Some(0));
        }
    }

    #[test]
    fn oversized_oracle_rows_are_skipped() {
        let configs = [cfg(20, 4, 0)];
        let report = run_bench(&configs, &EditMethod::ALL).unwrap();
        let oracle = report
            .rows
            .iter()
            .find(|r| r.method == EditMethod::Oracle)
            .unwrap();
        assert_eq!(oracle.edit_size, None);
        assert_eq!(oracle.cograph, None);
        let csv = report.to_csv();
        assert!(csv.contains(",oracle,skipped,,,"));
    }

    #[test]
    fn reports_are_deterministic_apart_from_timing() {
        let configs: Vec<GeneratorConfig> = (0..5).map(|s| cfg(8, s, 2)).collect();
        let a = run_bench(&configs, &EditMethod::ALL).unwrap();
        let b = run_bench(&configs, &EditMethod::ALL).unwrap();
        let strip = |csv: String| -> String {
            csv.lines()
                .map(|line| match line.rsplit_once(',') {
                    Some((rest, _)) => rest.to_string(),
                    None => line.to_string(),
                })
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(strip(a.to_csv()), strip(b.to_csv()));
    }

    #[test]
    fn csv_layout_matches_the_report() {
        let configs = [cfg(8, 7, 2)];
        let report = run_bench(&configs, &EditMethod::ALL).unwrap();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("# rng: chacha8"));
        assert_eq!(
            lines.next(),
            Some("seed,n,flips,method,edit_size,cograph,optimum,wall_ms")
        );
        let blank = csv.lines().position(|l| l.is_empty()).unwrap();
        assert_eq!(blank, 2 + report.rows.len());
        assert_eq!(
            csv.lines().nth(blank + 1),
            Some("n,flips,method,mean_edit_size,frac_heuristic_eq_oracle")
        );
        let aggregate_count = csv.lines().skip(blank + 2).filter(|l| !l.is_empty()).count();
        assert_eq!(aggregate_count, report.aggregates.len());
    }
}
