//! Sweep specifications and a deterministic parallel driver.
//!
//! A sweep is cut into fixed work units (edge-mask ranges, slices of the
//! tree list, sample-index ranges) whose boundaries do not depend on the
//! worker count. Units run on a rayon pool, and their partial results are
//! merged in unit order, so output is identical for any number of workers.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::distance::{all_pairs_distances, DistanceData};
use crate::error::{spec_err, Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;

use super::connected::{edge_mask_count, mask_rows, pair_order, rows_connected, rows_diameter2};
use super::connected::MAX_EXHAUSTIVE_ORDER;
use super::sample::{RandomGraphs, SampleTarget, MAX_SAMPLE_ORDER};
use super::trees::{free_tree_sequences, tree_from_level_sequence, MAX_TREE_ORDER, MIN_TREE_ORDER};

const MASKS_PER_UNIT: u64 = 1 << 14;
const TREES_PER_UNIT: usize = 512;
const SAMPLES_PER_UNIT: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    ConnectedGraphs,
    Trees,
    Diameter2Graphs,
}

impl Target {
    fn keyword(self) -> &'static str {
        match self {
            Target::ConnectedGraphs => "connected",
            Target::Trees => "trees",
            Target::Diameter2Graphs => "diam2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Random { count: u64, seed: u64 },
}

/// Predicates that restrict which generated graphs reach the visitor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    SelfCentered,
    NonSelfCentered,
    MinDegree2,
    Diameter2,
}

impl Filter {
    pub fn name(self) -> &'static str {
        match self {
            Filter::SelfCentered => "self_centered",
            Filter::NonSelfCentered => "non_self_centered",
            Filter::MinDegree2 => "min_degree_2",
            Filter::Diameter2 => "diam2",
        }
    }

    pub fn matches(self, g: &Graph, d: &DistanceData) -> bool {
        match self {
            Filter::SelfCentered => d.is_self_centered(),
            Filter::NonSelfCentered => !d.is_self_centered(),
            Filter::MinDegree2 => g.min_degree() >= 2,
            Filter::Diameter2 => d.diameter() == 2,
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Filter::SelfCentered,
            Filter::NonSelfCentered,
            Filter::MinDegree2,
            Filter::Diameter2,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| spec_err(s, "unknown filter"))
    }
}

/// What to sweep: a graph class, an order range (inclusive), exhaustive or
/// seeded random mode, and an optional filter.
///
/// Textual form: `TARGET:RANGE[,count=C[,seed=S]][,filter=F]` where TARGET is
/// `connected`, `trees` or `diam2`, and RANGE is `a..b`, `a` or `n=a..b`.
/// Supplying `count` selects random mode.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SweepSpec {
    pub target: Target,
    pub n_min: usize,
    pub n_max: usize,
    pub mode: Mode,
    pub filter: Option<Filter>,
}

impl SweepSpec {
    pub fn exhaustive(target: Target, n_min: usize, n_max: usize) -> Result<Self> {
        let spec = SweepSpec {
            target,
            n_min,
            n_max,
            mode: Mode::Exhaustive,
            filter: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn random(target: Target, n_min: usize, n_max: usize, count: u64, seed: u64) -> Result<Self> {
        let spec = SweepSpec {
            target,
            n_min,
            n_max,
            mode: Mode::Random { count, seed },
            filter: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filter = Some(filter);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let text = self.to_string();
        let fail = |msg: String| Err(spec_err(&text, msg));
        if self.n_min > self.n_max {
            return fail(format!("empty order range {}..{}", self.n_min, self.n_max));
        }
        match (self.mode, self.target) {
            (Mode::Exhaustive, Target::Trees) => {
                if self.n_min < MIN_TREE_ORDER || self.n_max > MAX_TREE_ORDER {
                    return fail(format!(
                        "exhaustive trees need {MIN_TREE_ORDER} <= n <= {MAX_TREE_ORDER}"
                    ));
                }
            }
            (Mode::Exhaustive, target) => {
                let lo = if target == Target::Diameter2Graphs { 3 } else { 1 };
                if self.n_max > MAX_EXHAUSTIVE_ORDER {
                    return Err(Error::ExhaustiveBound {
                        n: self.n_max,
                        max: MAX_EXHAUSTIVE_ORDER,
                    });
                }
                if self.n_min < lo {
                    return fail(format!("n must be at least {lo}"));
                }
            }
            (Mode::Random { count, .. }, target) => {
                if count == 0 {
                    return fail("count must be at least 1".into());
                }
                let lo = match target {
                    Target::Trees => return fail("random mode is not available for trees".into()),
                    Target::ConnectedGraphs => 1,
                    Target::Diameter2Graphs => 3,
                };
                if self.n_min < lo || self.n_max > MAX_SAMPLE_ORDER {
                    return fail(format!("random mode needs {lo} <= n <= {MAX_SAMPLE_ORDER}"));
                }
            }
        }
        Ok(())
    }

    /// Parses the textual form; random specs without `seed=` use `default_seed`.
    pub fn parse_with_default_seed(text: &str, default_seed: u64) -> Result<Self> {
        let err = |msg: &str| spec_err(text, msg);
        let (head, body) = text.trim().split_once(':').ok_or_else(|| err("expected TARGET:RANGE"))?;
        let target = match head.trim() {
            "connected" | "connected_graphs" => Target::ConnectedGraphs,
            "trees" => Target::Trees,
            "diam2" | "diameter2_graphs" => Target::Diameter2Graphs,
            _ => return Err(err("unknown target")),
        };

        let mut range = None;
        let mut count = None;
        let mut seed = None;
        let mut filter = None;
        for (i, item) in body.split(',').map(str::trim).enumerate() {
            if i == 0 && !item.starts_with("n=") {
                range = Some(parse_range(item).ok_or_else(|| err("bad order range"))?);
                continue;
            }
            match item.split_once('=') {
                None => return Err(err(&format!("unexpected item '{item}'"))),
                Some((key, value)) => {
                    let value = value.trim();
                    match key.trim() {
                        "n" if range.is_none() => {
                            range = Some(parse_range(value).ok_or_else(|| err("bad order range"))?)
                        }
                        "count" if count.is_none() => {
                            count = Some(parse_u64(value).ok_or_else(|| err("bad count"))?)
                        }
                        "seed" if seed.is_none() => {
                            seed = Some(parse_u64(value).ok_or_else(|| err("bad seed"))?)
                        }
                        "filter" if filter.is_none() => filter = Some(value.parse()?),
                        _ => return Err(err(&format!("unexpected or repeated key '{key}'"))),
                    }
                }
            }
        }
        let (n_min, n_max) = range.ok_or_else(|| err("missing order range"))?;
        let mode = match (count, seed) {
            (Some(count), seed) => Mode::Random {
                count,
                seed: seed.unwrap_or(default_seed),
            },
            (None, Some(_)) => return Err(err("seed given without count")),
            (None, None) => Mode::Exhaustive,
        };
        let spec = SweepSpec {
            target,
            n_min,
            n_max,
            mode,
            filter,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn units(&self) -> Result<Vec<Unit>> {
        self.validate()?;
        let mut units = Vec::new();
        for n in self.n_min..=self.n_max {
            match (self.mode, self.target) {
                (Mode::Exhaustive, Target::Trees) => {
                    let seqs: Arc<Vec<Vec<usize>>> = Arc::new(free_tree_sequences(n)?.collect());
                    for start in (0..seqs.len()).step_by(TREES_PER_UNIT) {
                        let end = (start + TREES_PER_UNIT).min(seqs.len());
                        units.push(Unit::Trees {
                            seqs: Arc::clone(&seqs),
                            start,
                            end,
                        });
                    }
                }
                (Mode::Exhaustive, target) => {
                    let total = edge_mask_count(n)?;
                    let diameter2 = target == Target::Diameter2Graphs;
                    let mut start = 0;
                    while start < total {
                        let end = (start + MASKS_PER_UNIT).min(total);
                        units.push(Unit::Masks {
                            n,
                            start,
                            end,
                            diameter2,
                        });
                        start = end;
                    }
                }
                (Mode::Random { count, seed }, target) => {
                    let target = match target {
                        Target::Diameter2Graphs => SampleTarget::Diameter2,
                        _ => SampleTarget::Connected,
                    };
                    let sampler = Arc::new(RandomGraphs::new(target, n, seed)?);
                    let mut start = 0;
                    while start < count {
                        let end = (start + SAMPLES_PER_UNIT).min(count);
                        units.push(Unit::Random {
                            sampler: Arc::clone(&sampler),
                            start,
                            end,
                        });
                        start = end;
                    }
                }
            }
        }
        Ok(units)
    }
}

fn parse_u64(s: &str) -> Option<u64> {
    s.replace('_', "").parse().ok()
}

fn parse_range(s: &str) -> Option<(usize, usize)> {
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
        }
        None => {
            let n = s.trim().parse().ok()?;
            Some((n, n))
        }
    }
}

impl FromStr for SweepSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepSpec::parse_with_default_seed(s, 0)
    }
}

impl fmt::Display for SweepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.target.keyword())?;
        if self.n_min == self.n_max {
            write!(f, "{}", self.n_min)?;
        } else {
            write!(f, "{}..{}", self.n_min, self.n_max)?;
        }
        if let Mode::Random { count, seed } = self.mode {
            write!(f, ",count={count},seed={seed}")?;
        }
        if let Some(filter) = self.filter {
            write!(f, ",filter={}", filter.name())?;
        }
        Ok(())
    }
}

/// A generated graph together with its distance data.
#[derive(Debug, Clone)]
pub struct Sample {
    pub graph: Graph,
    pub dist: DistanceData,
}

/// Counts from one sweep. `visited` graphs reached the visitor; `filtered`
/// graphs were generated but rejected by the filter.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepSummary {
    pub visited: u64,
    pub filtered: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepSummary {
    /// Equality ignoring wall-clock time.
    pub fn same_counts(&self, other: &SweepSummary) -> bool {
        (self.visited, self.filtered) == (other.visited, other.filtered)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError<E: std::error::Error + 'static> {
    #[error(transparent)]
    Generate(#[from] Error),
    #[error("visitor failed on {graph6}: {source}")]
    Visitor {
        graph6: String,
        #[source]
        source: E,
    },
    #[error("worker pool: {0}")]
    Pool(String),
}

enum Unit {
    Masks {
        n: usize,
        start: u64,
        end: u64,
        diameter2: bool,
    },
    Trees {
        seqs: Arc<Vec<Vec<usize>>>,
        start: usize,
        end: usize,
    },
    Random {
        sampler: Arc<RandomGraphs>,
        start: u64,
        end: u64,
    },
}

impl Unit {
    /// Generates the unit's graphs in order and hands each to `f`.
    fn for_each_graph<E, F>(&self, mut f: F) -> std::result::Result<(), UnitStop<E>>
    where
        F: FnMut(Graph) -> std::result::Result<(), UnitStop<E>>,
    {
        match self {
            Unit::Masks {
                n,
                start,
                end,
                diameter2,
            } => {
                let pairs = pair_order(*n);
                let mut rows = vec![0u64; *n];
                for mask in *start..*end {
                    mask_rows(&pairs, mask, &mut rows);
                    let keep = if *diameter2 {
                        rows_diameter2(&rows)
                    } else {
                        rows_connected(&rows)
                    };
                    if keep {
                        f(Graph::from_bitmasks(&rows))?;
                    }
                }
            }
            Unit::Trees { seqs, start, end } => {
                for seq in &seqs[*start..*end] {
                    f(tree_from_level_sequence(seq))?;
                }
            }
            Unit::Random {
                sampler,
                start,
                end,
            } => {
                for g in sampler.samples(*start, *end) {
                    f(g.map_err(UnitStop::Generate)?)?;
                }
            }
        }
        Ok(())
    }
}

enum UnitStop<E> {
    Generate(Error),
    Visitor(String, E),
}

/// Folds every graph of the sweep into an accumulator.
///
/// Each work unit starts from `init()`, feeds its graphs (that pass the
/// filter) to `step` in generation order, and the per-unit accumulators are
/// combined left to right with `merge`. The first error in unit order wins.
pub fn fold_sweep<A, E, I, S, M>(
    spec: &SweepSpec,
    workers: usize,
    init: I,
    step: S,
    merge: M,
) -> std::result::Result<(A, SweepSummary), SweepError<E>>
where
    A: Send,
    E: std::error::Error + Send + 'static,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, &Sample) -> std::result::Result<(), E> + Sync,
    M: Fn(&mut A, A),
{
    let started = Instant::now();
    let units = spec.units()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    let filter = spec.filter;

    let partials: Vec<std::result::Result<(A, u64, u64), UnitStop<E>>> = pool.install(|| {
        units
            .par_iter()
            .map(|unit| {
                let mut acc = init();
                let (mut visited, mut filtered) = (0u64, 0u64);
                unit.for_each_graph(|graph| {
                    let dist = all_pairs_distances(&graph).map_err(UnitStop::Generate)?;
                    if filter.is_some_and(|f| !f.matches(&graph, &dist)) {
                        filtered += 1;
                        return Ok(());
                    }
                    visited += 1;
                    let sample = Sample { graph, dist };
                    step(&mut acc, &sample)
                        .map_err(|e| UnitStop::Visitor(emit_graph6(&sample.graph), e))
                })?;
                Ok((acc, visited, filtered))
            })
            .collect()
    });

    let mut total = init();
    let mut summary = SweepSummary {
        visited: 0,
        filtered: 0,
        elapsed: Duration::ZERO,
    };
    for partial in partials {
        match partial {
            Ok((acc, visited, filtered)) => {
                merge(&mut total, acc);
                summary.visited += visited;
                summary.filtered += filtered;
            }
            Err(UnitStop::Generate(e)) => return Err(SweepError::Generate(e)),
            Err(UnitStop::Visitor(graph6, source)) => {
                return Err(SweepError::Visitor { graph6, source })
            }
        }
    }
    summary.elapsed = started.elapsed();
    Ok((total, summary))
}

/// Applies `visitor` to every graph of the sweep.
pub fn run_sweep<E, V>(
    spec: &SweepSpec,
    workers: usize,
    visitor: V,
) -> std::result::Result<SweepSummary, SweepError<E>>
where
    E: std::error::Error + Send + 'static,
    V: Fn(&Sample) -> std::result::Result<(), E> + Sync,
{
    fold_sweep(spec, workers, || (), |_, s| visitor(s), |_, _| ()).map(|(_, summary)| summary)
}

/// graph6 strings of every graph in the sweep, in sweep order.
pub fn collect_graph6(spec: &SweepSpec, workers: usize) -> Result<(Vec<String>, SweepSummary)> {
    fold_sweep::<_, std::convert::Infallible, _, _, _>(
        spec,
        workers,
        Vec::new,
        |acc, s| {
            acc.push(emit_graph6(&s.graph));
            Ok(())
        },
        |acc, part| acc.extend(part),
    )
    .map_err(|e| match e {
        SweepError::Generate(e) => e,
        other => Error::Internal(other.to_string()),
    })
}
