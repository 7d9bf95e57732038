//! Complement-pair sweeps: for every connected graph whose complement
//! is also connected, track the sum and product of the two triameters,
//! and list the exceptional-family members excluded from the
//! multiplicative bound.

use std::time::Instant;

use serde::Serialize;

use crate::enumerate::{connected_graphs_in, mask_space};
use crate::error::{Error, Result};
use crate::graph6::to_graph6;
use crate::metrics::DistanceMatrix;
use crate::triameter::triameter;

use super::registry::exception_family_member;

/// One exceptional-family member.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NgRecord {
    pub graph6: String,
    pub tr: u32,
    pub tr_complement: u32,
    pub diam: u32,
    pub diam_complement: u32,
    pub sum: u32,
    pub product: u32,
    /// Whether the product exceeds the generic bound 12*(n - 1).
    pub exceeds_multiplicative: bool,
}

/// Extremal sum/product pairs over all both-connected graphs of the
/// order; ties resolve to the smallest graph6 string.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NgExtremes {
    pub min_sum: u32,
    pub min_sum_graph6: String,
    pub max_sum: u32,
    pub max_sum_graph6: String,
    pub min_product: u32,
    pub min_product_graph6: String,
    pub max_product: u32,
    pub max_product_graph6: String,
}

/// Result of [`ng_scan`].
#[derive(Debug, Clone, Serialize)]
pub struct NgScanSummary {
    pub n: usize,
    /// Connected graphs whose complement is also connected.
    pub both_connected: u64,
    /// Exceptional-family members, sorted by graph6 string.
    pub members: Vec<NgRecord>,
    pub extremes: NgExtremes,
    pub elapsed_ms: u64,
}

impl NgScanSummary {
    /// Everything except the elapsed time, for determinism comparisons.
    pub fn deterministic_eq(&self, other: &NgScanSummary) -> bool {
        self.n == other.n
            && self.both_connected == other.both_connected
            && self.members == other.members
            && self.extremes == other.extremes
    }
}

#[derive(Default)]
struct Extremes {
    min_sum: Option<(u32, String)>,
    max_sum: Option<(u32, String)>,
    min_product: Option<(u32, String)>,
    max_product: Option<(u32, String)>,
}

fn better_min(slot: &mut Option<(u32, String)>, value: u32, graph6: &str) {
    let replace = match slot {
        None => true,
        Some((best, g)) => value < *best || (value == *best && graph6 < g.as_str()),
    };
    if replace {
        *slot = Some((value, graph6.to_string()));
    }
}

fn better_max(slot: &mut Option<(u32, String)>, value: u32, graph6: &str) {
    let replace = match slot {
        None => true,
        Some((best, g)) => value > *best || (value == *best && graph6 < g.as_str()),
    };
    if replace {
        *slot = Some((value, graph6.to_string()));
    }
}

/// Sweeps every labeled connected graph of order `n` in {5, 6, 7} whose
/// complement is also connected.
pub fn ng_scan(n: usize, workers: usize) -> Result<NgScanSummary> {
    let started = Instant::now();
    if !(5..=7).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "complement-pair scans cover orders 5 to 7, got {n}"
        )));
    }
    if workers == 0 {
        return Err(Error::InvalidInput("worker count must be at least 1".into()));
    }
    let total = mask_space(n)?;
    let mut parts = Vec::new();
    std::thread::scope(|scope| -> Result<()> {
        let mut handles = Vec::new();
        for w in 0..workers as u64 {
            let lo = total * w / workers as u64;
            let hi = total * (w + 1) / workers as u64;
            let stream = connected_graphs_in(n, lo..hi)?;
            handles.push(scope.spawn(move || scan_chunk(n, stream)));
        }
        for handle in handles {
            parts.push(handle.join().expect("ng worker panicked")?);
        }
        Ok(())
    })?;

    let mut both_connected = 0;
    let mut members: Vec<NgRecord> = Vec::new();
    let mut merged = Extremes::default();
    for (count, mut part_members, part) in parts {
        both_connected += count;
        members.append(&mut part_members);
        if let Some((v, g)) = part.min_sum {
            better_min(&mut merged.min_sum, v, &g);
        }
        if let Some((v, g)) = part.max_sum {
            better_max(&mut merged.max_sum, v, &g);
        }
        if let Some((v, g)) = part.min_product {
            better_min(&mut merged.min_product, v, &g);
        }
        if let Some((v, g)) = part.max_product {
            better_max(&mut merged.max_product, v, &g);
        }
    }
    members.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let take = |slot: Option<(u32, String)>| {
        slot.expect("orders 5 to 7 always have both-connected graphs")
    };
    let (min_sum, min_sum_graph6) = take(merged.min_sum);
    let (max_sum, max_sum_graph6) = take(merged.max_sum);
    let (min_product, min_product_graph6) = take(merged.min_product);
    let (max_product, max_product_graph6) = take(merged.max_product);
    Ok(NgScanSummary {
        n,
        both_connected,
        members,
        extremes: NgExtremes {
            min_sum,
            min_sum_graph6,
            max_sum,
            max_sum_graph6,
            min_product,
            min_product_graph6,
            max_product,
            max_product_graph6,
        },
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

type ChunkResult = (u64, Vec<NgRecord>, Extremes);

fn scan_chunk(n: usize, stream: crate::enumerate::ConnectedGraphs) -> Result<ChunkResult> {
    let mut count = 0;
    let mut members = Vec::new();
    let mut ex = Extremes::default();
    for g in stream {
        let c = g.complement();
        if !c.is_connected() {
            continue;
        }
        count += 1;
        let tr = triameter(&g)?.value;
        let tr_c = triameter(&c)?.value;
        let diam = *DistanceMatrix::compute(&g)
            .eccentricities()
            .iter()
            .max()
            .expect("n >= 1") as u32;
        let diam_c = *DistanceMatrix::compute(&c)
            .eccentricities()
            .iter()
            .max()
            .expect("n >= 1") as u32;
        let sum = tr + tr_c;
        let product = tr * tr_c;
        let graph6 = to_graph6(&g)?;
        better_min(&mut ex.min_sum, sum, &graph6);
        better_max(&mut ex.max_sum, sum, &graph6);
        better_min(&mut ex.min_product, product, &graph6);
        better_max(&mut ex.max_product, product, &graph6);
        if exception_family_member(n as i64, diam as i64, diam_c as i64, tr as i64, tr_c as i64) {
            members.push(NgRecord {
                graph6,
                tr,
                tr_complement: tr_c,
                diam,
                diam_complement: diam_c,
                sum,
                product,
                exceeds_multiplicative: product > 12 * (n as u32 - 1),
            });
        }
    }
    Ok((count, members, ex))
}
