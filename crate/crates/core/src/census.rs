//! Exhaustive and corpus-driven runs of every characterization checker,
//! with exact-versus-float cross-validation.
//!
//! Enumeration is over *labeled* graphs, so isomorphic graphs are counted
//! once per labeling. Feed a corpus of non-isomorphic graphs through
//! [`CensusSource::Graphs`] to get unlabeled counts.
//!
//! Work is split into contiguous mask ranges (or input chunks) that run in
//! parallel; results are merged back in order, so the record stream is the
//! same for any number of workers.

use std::collections::BTreeMap;
use std::ops::Range;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characterization::{check_graph, CharacterizationError, CheckOptions, GraphMatrix};
use crate::graph::{
    all_nonidentity_involutions, diameter, enumerate_mask_range, is_connected, labeled_graph_count,
    write_graph6, Graph, GraphError, AUTOMORPHISM_MAX_N, ENUMERATION_MAX_N,
};

/// Version of the record schema, written into the JSON envelope.
pub const SCHEMA_VERSION: u32 = 1;

/// Column order of the CSV output.
pub const CSV_HEADER: [&str; 12] = [
    "graph6", "n", "m", "kind", "k", "distinct", "diam", "diam_ok", "invol_ok", "res_i", "res_ii",
    "gap",
];

const SHARD_MASKS: u64 = 1 << 12;
const SHARD_GRAPHS: usize = 256;

/// One graph under one matrix kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub kind: GraphMatrix,
    /// Exact number of distinct eigenvalues.
    pub k: usize,
    pub distinct: bool,
    pub diam: usize,
    /// `diam ≤ k - 1`.
    pub diam_ok: bool,
    /// Every nonidentity automorphism is an involution. Only computed for
    /// distinct spectra with `n ≤ AUTOMORPHISM_MAX_N`.
    pub invol_ok: Option<bool>,
    /// Largest condition-(i) residual.
    pub res_i: f64,
    /// Condition-(ii) residual.
    pub res_ii: f64,
    /// Smallest gap between distinct eigenvalues.
    pub gap: f64,
    #[serde(skip)]
    pub identities_ok: bool,
    #[serde(skip)]
    pub pipelines_agree: bool,
}

impl CensusRecord {
    /// `distinct ⇒ diam_ok` and `distinct ⇒ invol_ok`.
    pub fn invariants_hold(&self) -> bool {
        !self.distinct || (self.diam_ok && self.invol_ok != Some(false))
    }
}

/// Totals for one vertex count and one matrix kind.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KindSummary {
    pub n: usize,
    pub kind: GraphMatrix,
    /// Graphs seen, connected or not.
    pub examined: u64,
    /// Graphs actually checked.
    pub connected: u64,
    pub distinct: u64,
    /// Smallest eigenvalue gap over the distinct-spectrum graphs.
    pub min_gap: Option<f64>,
    /// Graphs where float clustering and the exact count differ.
    pub disagreements: u64,
    /// Graphs where some identity failed for the exact k.
    pub check_failures: u64,
    /// Records violating the record-level invariants.
    pub invariant_violations: u64,
}

impl KindSummary {
    fn new(n: usize, kind: GraphMatrix) -> Self {
        Self {
            n,
            kind,
            examined: 0,
            connected: 0,
            distinct: 0,
            min_gap: None,
            disagreements: 0,
            check_failures: 0,
            invariant_violations: 0,
        }
    }

    fn absorb(&mut self, r: &CensusRecord) {
        self.connected += 1;
        if r.distinct {
            self.distinct += 1;
            self.min_gap = Some(self.min_gap.map_or(r.gap, |g| g.min(r.gap)));
        }
        self.disagreements += u64::from(!r.pipelines_agree);
        self.check_failures += u64::from(!r.identities_ok);
        self.invariant_violations += u64::from(!r.invariants_hold());
    }

    fn merge(&mut self, other: &KindSummary) {
        self.examined += other.examined;
        self.connected += other.connected;
        self.distinct += other.distinct;
        self.min_gap = match (self.min_gap, other.min_gap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.disagreements += other.disagreements;
        self.check_failures += other.check_failures;
        self.invariant_violations += other.invariant_violations;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusSummary {
    /// Ordered by n, then kind.
    pub rows: Vec<KindSummary>,
    pub wall_time_secs: f64,
}

impl CensusSummary {
    pub fn disagreements(&self) -> u64 {
        self.rows.iter().map(|r| r.disagreements).sum()
    }

    pub fn check_failures(&self) -> u64 {
        self.rows.iter().map(|r| r.check_failures).sum()
    }

    pub fn invariant_violations(&self) -> u64 {
        self.rows.iter().map(|r| r.invariant_violations).sum()
    }

    /// No disagreement, failed identity or violated invariant.
    pub fn is_clean(&self) -> bool {
        self.disagreements() == 0 && self.check_failures() == 0 && self.invariant_violations() == 0
    }

    pub fn row(&self, n: usize, kind: GraphMatrix) -> Option<&KindSummary> {
        self.rows.iter().find(|r| r.n == n && r.kind == kind)
    }
}

#[derive(Debug, Clone)]
pub enum CensusSource {
    /// Every labeled graph on `n` vertices. `n = 8` needs `allow_large`.
    Enumerate { n: usize, allow_large: bool },
    /// Given graphs, in order. Disconnected ones are counted but not checked.
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub source: CensusSource,
    pub kinds: Vec<GraphMatrix>,
    pub opts: CheckOptions,
    /// Worker threads; 0 picks the number of CPUs.
    pub jobs: usize,
}

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("check failed on {graph6}: {source}")]
    Check {
        graph6: String,
        source: CharacterizationError,
    },
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error("record sink failed: {0}")]
    Sink(String),
}

/// Largest `n` accepted by [`CensusSource::Enumerate`] with `allow_large`.
pub const CENSUS_OPT_IN_MAX_N: usize = ENUMERATION_MAX_N + 1;

/// Runs the census, handing each record to `sink` in deterministic order.
pub fn run_census<E: std::fmt::Display>(
    config: &CensusConfig,
    mut sink: impl FnMut(&CensusRecord) -> Result<(), E>,
) -> Result<CensusSummary, CensusError> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CensusError::Pool(e.to_string()))?;
    let batch = pool.current_num_threads().max(1) * 4;

    let mut totals: BTreeMap<(usize, GraphMatrix), KindSummary> = BTreeMap::new();
    let mut emit = |shard: ShardOutput| -> Result<(), CensusError> {
        for s in &shard.summaries {
            totals
                .entry((s.n, s.kind))
                .or_insert_with(|| KindSummary::new(s.n, s.kind))
                .merge(s);
        }
        for r in &shard.records {
            sink(r).map_err(|e| CensusError::Sink(e.to_string()))?;
        }
        Ok(())
    };

    match &config.source {
        CensusSource::Enumerate { n, allow_large } => {
            let max = if *allow_large {
                CENSUS_OPT_IN_MAX_N
            } else {
                ENUMERATION_MAX_N
            };
            if *n == 0 {
                return Err(GraphError::TooSmall { n: 0, min: 1 }.into());
            }
            if *n > max {
                return Err(GraphError::TooLarge { n: *n, max }.into());
            }
            let total = labeled_graph_count(*n);
            let shards: Vec<Range<u64>> = (0..total)
                .step_by(SHARD_MASKS as usize)
                .map(|s| s..(s + SHARD_MASKS).min(total))
                .collect();
            for chunk in shards.chunks(batch) {
                let outputs: Vec<Result<ShardOutput, CensusError>> = pool.install(|| {
                    chunk
                        .par_iter()
                        .map(|r| mask_shard(*n, r.clone(), config))
                        .collect()
                });
                for out in outputs {
                    emit(out?)?;
                }
            }
        }
        CensusSource::Graphs(graphs) => {
            let shards: Vec<&[Graph]> = graphs.chunks(SHARD_GRAPHS).collect();
            for chunk in shards.chunks(batch) {
                let outputs: Vec<Result<ShardOutput, CensusError>> =
                    pool.install(|| chunk.par_iter().map(|gs| graph_shard(gs, config)).collect());
                for out in outputs {
                    emit(out?)?;
                }
            }
        }
    }

    Ok(CensusSummary {
        rows: totals.into_values().collect(),
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

/// Collects every record in memory. Convenient for small runs.
pub fn run_census_collect(
    config: &CensusConfig,
) -> Result<(Vec<CensusRecord>, CensusSummary), CensusError> {
    let mut records = Vec::new();
    let summary = run_census(config, |r| {
        records.push(r.clone());
        Ok::<(), std::convert::Infallible>(())
    })?;
    Ok((records, summary))
}

struct ShardOutput {
    records: Vec<CensusRecord>,
    summaries: Vec<KindSummary>,
}

impl ShardOutput {
    fn new() -> Self {
        Self {
            records: Vec::new(),
            summaries: Vec::new(),
        }
    }

    fn summary(&mut self, n: usize, kind: GraphMatrix) -> &mut KindSummary {
        let idx = match self
            .summaries
            .iter()
            .position(|s| s.n == n && s.kind == kind)
        {
            Some(i) => i,
            None => {
                self.summaries.push(KindSummary::new(n, kind));
                self.summaries.len() - 1
            }
        };
        &mut self.summaries[idx]
    }

    fn examine(&mut self, g: &Graph, config: &CensusConfig) -> Result<(), CensusError> {
        for &kind in &config.kinds {
            self.summary(g.n(), kind).examined += 1;
        }
        if g.n() < 2 || !is_connected(g) {
            return Ok(());
        }
        for r in graph_records(g, config)? {
            self.summary(r.n, r.kind).absorb(&r);
            self.records.push(r);
        }
        Ok(())
    }
}

fn mask_shard(
    n: usize,
    masks: Range<u64>,
    config: &CensusConfig,
) -> Result<ShardOutput, CensusError> {
    let mut out = ShardOutput::new();
    let examined = masks.end - masks.start;
    for &kind in &config.kinds {
        out.summary(n, kind).examined += examined;
    }
    for (_, g) in enumerate_mask_range(n, masks, true)? {
        if n < 2 {
            continue;
        }
        for r in graph_records(&g, config)? {
            out.summary(n, r.kind).absorb(&r);
            out.records.push(r);
        }
    }
    Ok(out)
}

fn graph_shard(graphs: &[Graph], config: &CensusConfig) -> Result<ShardOutput, CensusError> {
    let mut out = ShardOutput::new();
    for g in graphs {
        out.examine(g, config)?;
    }
    Ok(out)
}

/// Records for one connected graph, one per requested kind.
pub fn graph_records(g: &Graph, config: &CensusConfig) -> Result<Vec<CensusRecord>, CensusError> {
    let graph6 = write_graph6(g).map_err(|e| CensusError::Sink(e.to_string()))?;
    let diam = diameter(g)?;
    let mut involutions: Option<Option<bool>> = None;
    let mut records = Vec::with_capacity(config.kinds.len());
    for &kind in &config.kinds {
        let r = check_graph(g, kind, &config.opts).map_err(|source| CensusError::Check {
            graph6: graph6.clone(),
            source,
        })?;
        let k = r.k_exact.unwrap_or(r.k);
        let distinct = k == g.n();
        let invol_ok = if distinct {
            *involutions.get_or_insert_with(|| {
                (g.n() <= AUTOMORPHISM_MAX_N)
                    .then(|| all_nonidentity_involutions(g).expect("size checked"))
            })
        } else {
            None
        };
        records.push(CensusRecord {
            graph6: graph6.clone(),
            n: g.n(),
            m: g.m(),
            kind,
            k,
            distinct,
            diam,
            diam_ok: diam < k,
            invol_ok,
            res_i: r.max_condition_i_residual(),
            res_ii: r.condition_ii_residual,
            gap: r.min_gap().unwrap_or(f64::INFINITY),
            identities_ok: r.identities_hold(),
            pipelines_agree: r.pipelines_agree(),
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    fn config(source: CensusSource, kinds: &[GraphMatrix], jobs: usize) -> CensusConfig {
        CensusConfig {
            source,
            kinds: kinds.to_vec(),
            opts: CheckOptions::default(),
            jobs,
        }
    }

    #[test]
    fn n3_adjacency() {
        let cfg = config(
            CensusSource::Enumerate {
                n: 3,
                allow_large: false,
            },
            &[GraphMatrix::Adjacency],
            1,
        );
        let (records, summary) = run_census_collect(&cfg).unwrap();
        assert_eq!(records.len(), 4);
        let row = summary.row(3, GraphMatrix::Adjacency).unwrap();
        assert_eq!(row.examined, 8);
        assert_eq!(row.connected, 4);
        assert_eq!(row.distinct, 3);
        assert!(summary.is_clean());
        let k3 = records.iter().find(|r| r.m == 3).unwrap();
        assert_eq!(k3.graph6, "Bw");
        assert!(!k3.distinct && k3.invol_ok.is_none());
    }

    #[test]
    fn n4_laplacian() {
        let cfg = config(
            CensusSource::Enumerate {
                n: 4,
                allow_large: false,
            },
            &[GraphMatrix::Laplacian],
            2,
        );
        let (records, summary) = run_census_collect(&cfg).unwrap();
        assert_eq!(records.len(), 38);
        assert_eq!(summary.disagreements(), 0);
    }

    #[test]
    fn order_does_not_depend_on_jobs() {
        let kinds = GraphMatrix::ALL;
        let one = run_census_collect(&config(
            CensusSource::Enumerate {
                n: 5,
                allow_large: false,
            },
            &kinds,
            1,
        ))
        .unwrap();
        let three = run_census_collect(&config(
            CensusSource::Enumerate {
                n: 5,
                allow_large: false,
            },
            &kinds,
            3,
        ))
        .unwrap();
        assert_eq!(one.0, three.0);
        assert_eq!(one.1.rows, three.1.rows);
    }

    #[test]
    fn input_graphs_keep_their_order() {
        let graphs: Vec<Graph> = ["Bw", "D?{", "A_", "A?", "DQc"]
            .iter()
            .map(|s| parse_graph6(s).unwrap())
            .collect();
        let cfg = config(CensusSource::Graphs(graphs), &[GraphMatrix::Adjacency], 2);
        let (records, summary) = run_census_collect(&cfg).unwrap();
        let names: Vec<&str> = records.iter().map(|r| r.graph6.as_str()).collect();
        assert_eq!(names, vec!["Bw", "D?{", "A_", "DQc"]);
        let n2 = summary.row(2, GraphMatrix::Adjacency).unwrap();
        assert_eq!((n2.examined, n2.connected), (2, 1));
    }

    #[test]
    fn empty_input() {
        let cfg = config(CensusSource::Graphs(vec![]), &GraphMatrix::ALL, 1);
        let (records, summary) = run_census_collect(&cfg).unwrap();
        assert!(records.is_empty());
        assert!(summary.rows.is_empty());
        assert!(summary.is_clean());
    }

    #[test]
    fn size_limits() {
        let big = config(
            CensusSource::Enumerate {
                n: 8,
                allow_large: false,
            },
            &[GraphMatrix::Adjacency],
            1,
        );
        assert!(matches!(
            run_census_collect(&big),
            Err(CensusError::Graph(GraphError::TooLarge { n: 8, max: 7 }))
        ));
        let huge = config(
            CensusSource::Enumerate {
                n: 9,
                allow_large: true,
            },
            &[GraphMatrix::Adjacency],
            1,
        );
        assert!(matches!(
            run_census_collect(&huge),
            Err(CensusError::Graph(GraphError::TooLarge { n: 9, max: 8 }))
        ));
    }

    #[test]
    fn sink_errors_stop_the_run() {
        let cfg = config(
            CensusSource::Enumerate {
                n: 3,
                allow_large: false,
            },
            &[GraphMatrix::Adjacency],
            1,
        );
        let err = run_census(&cfg, |_| Err("disk full")).unwrap_err();
        assert!(matches!(err, CensusError::Sink(msg) if msg == "disk full"));
    }
}
