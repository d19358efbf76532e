//! Streaming verification of the check catalog over graph corpora.
//!
//! A source (exhaustive enumeration or a graph6 stream) is partitioned by
//! index stripes across worker threads. Each worker keeps exact verdict
//! counts and the earliest equality witnesses for its stripe; merging is by
//! stream index, so the aggregate is identical for every worker count.

use crate::checks::{check_graph, CheckId, Verdict};
use crate::enumerate::{enumerate_connected, enumerate_trees};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// Maximum equality witnesses retained per check.
pub const WITNESS_CAP: usize = 100;

/// What to feed through the check catalog.
#[derive(Debug, Clone)]
pub enum VerifySource {
    /// All connected labelled graphs of the given order.
    Connected(usize),
    /// All labelled trees of the given order.
    Trees(usize),
    /// graph6 lines from a named input; empty lines are skipped.
    Graph6Lines(String, Vec<String>),
}

impl VerifySource {
    fn name(&self) -> String {
        match self {
            VerifySource::Connected(n) => format!("connected({n})"),
            VerifySource::Trees(n) => format!("trees({n})"),
            VerifySource::Graph6Lines(name, _) => name.clone(),
        }
    }

    /// Validates parameters once, before any worker starts.
    fn validate(&self) -> Result<()> {
        match self {
            VerifySource::Connected(n) => enumerate_connected(*n).map(|_| ()),
            VerifySource::Trees(n) => enumerate_trees(*n).map(|_| ()),
            VerifySource::Graph6Lines(_, _) => Ok(()),
        }
    }

    fn iter(&self) -> Box<dyn Iterator<Item = Result<Graph>> + '_> {
        match self {
            VerifySource::Connected(n) => {
                Box::new(enumerate_connected(*n).expect("validated").map(Ok))
            }
            VerifySource::Trees(n) => Box::new(enumerate_trees(*n).expect("validated").map(Ok)),
            VerifySource::Graph6Lines(_, lines) => Box::new(
                lines
                    .iter()
                    .filter(|l| !l.trim().is_empty())
                    .map(|l| parse_graph6(l.trim())),
            ),
        }
    }
}

/// Per-check verdict tallies with capped equality witnesses in stream order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckAggregate {
    pub id: CheckId,
    pub holds: u64,
    pub equality: u64,
    pub violations: u64,
    pub witnesses: Vec<String>,
}

/// Deterministic aggregate over a whole source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateReport {
    pub source: String,
    pub total: u64,
    pub per_check: Vec<CheckAggregate>,
}

impl AggregateReport {
    pub fn check(&self, id: CheckId) -> &CheckAggregate {
        self.per_check
            .iter()
            .find(|c| c.id == id)
            .expect("catalog is complete")
    }

    pub fn has_violations(&self) -> bool {
        self.per_check.iter().any(|c| c.violations > 0)
    }
}

struct WorkerSlot {
    holds: u64,
    equality: u64,
    violations: u64,
    witnesses: Vec<(u64, String)>,
}

struct WorkerState {
    total: u64,
    slots: Vec<WorkerSlot>,
    error: Option<(u64, Error)>,
}

fn run_worker(
    iter: Box<dyn Iterator<Item = Result<Graph>> + '_>,
    worker: usize,
    workers: usize,
) -> WorkerState {
    let mut state = WorkerState {
        total: 0,
        slots: CheckId::ALL
            .iter()
            .map(|_| WorkerSlot {
                holds: 0,
                equality: 0,
                violations: 0,
                witnesses: Vec::new(),
            })
            .collect(),
        error: None,
    };
    for (index, item) in iter.enumerate() {
        if index % workers != worker {
            continue;
        }
        let index = index as u64;
        let report = match item.and_then(|g| check_graph(&g)) {
            Ok(r) => r,
            Err(e) => {
                // abandon the stripe; the merge keeps the earliest error
                state.error = Some((index, e));
                break;
            }
        };
        state.total += 1;
        debug_assert_eq!(report.outcomes.len(), state.slots.len());
        for (slot, outcome) in state.slots.iter_mut().zip(&report.outcomes) {
            match outcome.verdict {
                Verdict::Holds => slot.holds += 1,
                Verdict::Equality => {
                    slot.equality += 1;
                    if slot.witnesses.len() < WITNESS_CAP {
                        slot.witnesses.push((index, report.graph.clone()));
                    }
                }
                Verdict::Violates => slot.violations += 1,
            }
        }
    }
    state
}

/// Runs the whole check catalog over a source with the given worker count.
///
/// Returns the aggregate, or the error at the smallest stream index if any
/// item fails to parse or to verify operationally.
pub fn verify_stream(source: &VerifySource, workers: usize) -> Result<AggregateReport> {
    source.validate()?;
    let workers = workers.max(1);

    let states: Vec<WorkerState> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| scope.spawn(move || run_worker(source.iter(), w, workers)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    if let Some((index, error)) = states
        .iter()
        .filter_map(|s| s.error.clone())
        .min_by_key(|(i, _)| *i)
    {
        return Err(error.at_stream_index(index));
    }

    let total = states.iter().map(|s| s.total).sum();
    let per_check = CheckId::ALL
        .iter()
        .enumerate()
        .map(|(ci, &id)| {
            let mut witnesses: Vec<(u64, String)> = states
                .iter()
                .flat_map(|s| s.slots[ci].witnesses.iter().cloned())
                .collect();
            witnesses.sort();
            witnesses.truncate(WITNESS_CAP);
            CheckAggregate {
                id,
                holds: states.iter().map(|s| s.slots[ci].holds).sum(),
                equality: states.iter().map(|s| s.slots[ci].equality).sum(),
                violations: states.iter().map(|s| s.slots[ci].violations).sum(),
                witnesses: witnesses.into_iter().map(|(_, g)| g).collect(),
            }
        })
        .collect();

    Ok(AggregateReport {
        source: source.name(),
        total,
        per_check,
    })
}
