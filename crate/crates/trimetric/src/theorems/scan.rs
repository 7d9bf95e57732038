//! Exhaustive sweeps: run a set of statements over every labeled
//! connected graph (or every labeled tree) of the requested orders.
//!
//! The enumeration index space is split into one contiguous chunk per
//! worker; violation lists are sorted afterwards, so the output is
//! byte-identical regardless of worker count.

use std::collections::BTreeSet;
use std::ops::Range;
use std::time::Instant;

use crate::enumerate::{connected_graphs_in, labeled_trees_in, mask_space, tree_count};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;

use super::context::CheckContext;
use super::{registry, Status, TheoremId, TheoremReport, ALL_THEOREMS};

/// Per-statement tallies over one sweep. The four counts always sum to
/// the number of graphs scanned.
#[derive(Debug, Clone, PartialEq)]
pub struct IdSummary {
    pub id: TheoremId,
    pub holds: u64,
    pub violated: u64,
    pub inapplicable: u64,
    pub inapplicable_cap: u64,
    /// Full reports for every violation, sorted by graph6 string.
    pub witnesses: Vec<TheoremReport>,
}

/// Result of one sweep.
#[derive(Debug, Clone)]
pub struct ScanSummary {
    pub orders: Vec<usize>,
    pub ids: Vec<TheoremId>,
    pub graphs_scanned: u64,
    pub results: Vec<IdSummary>,
    pub elapsed_ms: u64,
}

impl ScanSummary {
    /// Total violations across all statements.
    pub fn total_violations(&self) -> u64 {
        self.results.iter().map(|r| r.violated).sum()
    }

    /// Everything except the elapsed time, for determinism comparisons.
    pub fn deterministic_eq(&self, other: &ScanSummary) -> bool {
        self.orders == other.orders
            && self.ids == other.ids
            && self.graphs_scanned == other.graphs_scanned
            && self.results == other.results
    }
}

/// Sweeps every labeled connected graph of each order in `orders`
/// (3 to 7) with the given statements, split over `workers` threads.
pub fn exhaustive_scan(
    orders: &[usize],
    ids: &[TheoremId],
    workers: usize,
) -> Result<ScanSummary> {
    scan_stream(orders, ids, workers, mask_space, |n, range| {
        connected_graphs_in(n, range).map(|it| Box::new(it) as Box<dyn Iterator<Item = Graph> + Send>)
    })
}

/// Sweeps every labeled tree of each order in `orders` (3 to 9).
pub fn tree_scan(orders: &[usize], ids: &[TheoremId], workers: usize) -> Result<ScanSummary> {
    scan_stream(orders, ids, workers, tree_count, |n, range| {
        labeled_trees_in(n, range).map(|it| Box::new(it) as Box<dyn Iterator<Item = Graph> + Send>)
    })
}

struct Part {
    scanned: u64,
    counts: Vec<[u64; 4]>,
    violations: Vec<TheoremReport>,
}

fn scan_stream(
    orders: &[usize],
    ids: &[TheoremId],
    workers: usize,
    space: fn(usize) -> Result<u64>,
    make: impl Fn(usize, Range<u64>) -> Result<Box<dyn Iterator<Item = Graph> + Send>>,
) -> Result<ScanSummary> {
    let started = Instant::now();
    if workers == 0 {
        return Err(Error::InvalidInput("worker count must be at least 1".into()));
    }
    if orders.is_empty() {
        return Err(Error::InvalidInput("no orders to scan".into()));
    }
    if ids.is_empty() {
        return Err(Error::InvalidInput("no theorem ids to scan".into()));
    }
    let orders: Vec<usize> = orders.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if let Some(&small) = orders.iter().find(|&&n| n < 3) {
        return Err(Error::InvalidInput(format!(
            "scans need orders >= 3, got {small}"
        )));
    }
    let requested: BTreeSet<TheoremId> = ids.iter().copied().collect();
    let ids: Vec<TheoremId> = ALL_THEOREMS
        .into_iter()
        .filter(|id| requested.contains(id))
        .collect();

    let mut parts: Vec<Part> = Vec::new();
    for &order in &orders {
        let total = space(order)?;
        std::thread::scope(|scope| -> Result<()> {
            let mut handles = Vec::new();
            for w in 0..workers as u64 {
                let lo = total * w / workers as u64;
                let hi = total * (w + 1) / workers as u64;
                let stream = make(order, lo..hi)?;
                let ids = &ids;
                handles.push(scope.spawn(move || scan_chunk(stream, ids)));
            }
            for handle in handles {
                parts.push(handle.join().expect("scan worker panicked")?);
            }
            Ok(())
        })?;
    }

    // Merge: counts are additive, violations get a canonical order.
    let mut counts = vec![[0u64; 4]; ids.len()];
    let mut violations: Vec<TheoremReport> = Vec::new();
    let mut scanned = 0;
    for part in parts {
        scanned += part.scanned;
        for (acc, add) in counts.iter_mut().zip(&part.counts) {
            for s in 0..4 {
                acc[s] += add[s];
            }
        }
        violations.extend(part.violations);
    }
    violations.sort_by(|a, b| (a.id, &a.graph6).cmp(&(b.id, &b.graph6)));

    let results = ids
        .iter()
        .enumerate()
        .map(|(i, &id)| IdSummary {
            id,
            holds: counts[i][0],
            violated: counts[i][1],
            inapplicable: counts[i][2],
            inapplicable_cap: counts[i][3],
            witnesses: violations.iter().filter(|v| v.id == id).cloned().collect(),
        })
        .collect();
    Ok(ScanSummary {
        orders,
        ids,
        graphs_scanned: scanned,
        results,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn scan_chunk(
    stream: Box<dyn Iterator<Item = Graph> + Send>,
    ids: &[TheoremId],
) -> Result<Part> {
    let mut part = Part {
        scanned: 0,
        counts: vec![[0u64; 4]; ids.len()],
        violations: Vec::new(),
    };
    for g in stream {
        part.scanned += 1;
        let mut ctx = CheckContext::new(&g);
        for (i, &id) in ids.iter().enumerate() {
            let (status, values) = registry::evaluate(id, &mut ctx);
            let slot = match status {
                Status::Holds => 0,
                Status::Violated => 1,
                Status::Inapplicable => 2,
                Status::InapplicableCap => 3,
            };
            part.counts[i][slot] += 1;
            if status == Status::Violated {
                part.violations.push(TheoremReport {
                    id,
                    status,
                    graph6: to_graph6(&g)?,
                    values: values.into_iter().collect(),
                });
            }
        }
    }
    Ok(part)
}
