//! Rendering of analysis results as text, JSON, or CSV.
//!
//! JSON objects are emitted with sorted keys and CSV columns are fixed,
//! so any given result renders byte-identically run to run.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::domination::{domination_numbers, DominationNumbers};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::metrics::{metrics_summary, MetricsSummary};
use crate::theorems::{FamilyVerification, NgScanSummary, ScanSummary, TheoremReport};
use crate::triameter::{triameter, TriameterResult};

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.trim().to_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::InvalidInput(format!(
                "unknown format {other:?} (expected text, json, or csv)"
            ))),
        }
    }
}

/// Everything the `compute` verb reports about one graph.
#[derive(Debug, Clone, Serialize)]
pub struct ComputeReport {
    /// Where the graph came from (file path, literal, or family spec).
    pub source: String,
    /// `None` when the graph is too large for short-form graph6.
    pub graph6: Option<String>,
    pub metrics: MetricsSummary,
    /// `None` when n < 3, where no triple exists.
    pub triameter: Option<TriameterResult>,
    /// `None` when the graph is over the exact-search cap.
    pub domination: Option<DominationNumbers>,
}

/// Assembles the full [`ComputeReport`] for a connected graph.
pub fn compute_report(g: &Graph, source: &str) -> Result<ComputeReport> {
    let metrics = metrics_summary(g)?;
    let tri = if g.n() >= 3 { Some(triameter(g)?) } else { None };
    let domination = match domination_numbers(g) {
        Ok(d) => Some(d),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ComputeReport {
        source: source.to_string(),
        graph6: match to_graph6(g) {
            Ok(s) => Some(s),
            Err(Error::UnsupportedOrder(_)) => None,
            Err(e) => return Err(e),
        },
        metrics,
        triameter: tri,
        domination,
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory serialization");
    s.push('\n');
    s
}

fn opt<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(|| "none".to_string(), |v| v.to_string())
}

/// `tr=6 witness=0,2,3`
pub fn render_triameter(t: &TriameterResult) -> String {
    format!("tr={} witness={}", t.value, join(t.witness))
}

/// Renders a [`ComputeReport`].
pub fn render_compute(r: &ComputeReport, format: Format) -> String {
    match format {
        Format::Json => pretty(&serde_json::to_value(r).expect("serializable report")),
        Format::Csv => {
            let mut out = String::from("key,value\n");
            let mut push = |k: &str, v: String| {
                let _ = writeln!(out, "{k},{}", v.replace(',', ";"));
            };
            push("source", r.source.clone());
            push("graph6", opt(r.graph6.clone()));
            render_metric_pairs(&r.metrics, &mut push);
            match &r.triameter {
                Some(t) => {
                    push("tr", t.value.to_string());
                    push("tr_witness", join(t.witness));
                }
                None => push("tr", "none".into()),
            }
            render_domination_pairs(r.domination.as_ref(), &mut push);
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "source={}", r.source);
            let _ = writeln!(out, "graph6={}", opt(r.graph6.clone()));
            render_metric_pairs(&r.metrics, &mut |k, v| {
                let _ = writeln!(out, "{k}={v}");
            });
            match &r.triameter {
                Some(t) => {
                    let _ = writeln!(out, "{}", render_triameter(t));
                }
                None => {
                    let _ = writeln!(out, "tr=none");
                }
            }
            render_domination_pairs(r.domination.as_ref(), &mut |k, v| {
                let _ = writeln!(out, "{k}={v}");
            });
            out
        }
    }
}

fn render_metric_pairs(m: &MetricsSummary, push: &mut dyn FnMut(&str, String)) {
    push("n", m.n.to_string());
    push("m", m.m.to_string());
    push("radius", m.radius.to_string());
    push("diameter", m.diameter.to_string());
    push("center", join(m.center.iter()));
    push(
        "girth",
        m.girth.map_or_else(|| "acyclic".to_string(), |g| g.to_string()),
    );
    push("wiener", m.wiener.to_string());
    push("min_degree", m.min_degree.to_string());
    push("max_degree", m.max_degree.to_string());
    push("leaf_count", m.leaf_count.to_string());
    let mut flags = Vec::new();
    for (name, on) in [
        ("tree", m.is_tree),
        ("star", m.is_star),
        ("bistar", m.is_bistar),
        ("bipartite", m.is_bipartite),
        ("cycle", m.is_cycle),
        ("complete", m.is_complete),
        ("has_triangle", m.has_triangle),
    ] {
        if on {
            flags.push(name);
        }
    }
    push("flags", if flags.is_empty() { "-".into() } else { flags.join(";") });
    push("chromatic_number", opt(m.chromatic_number));
    push("vertex_connectivity", opt(m.vertex_connectivity));
    push("hamiltonian", opt(m.is_hamiltonian));
    push("vertex_transitive", opt(m.is_vertex_transitive));
    push(
        "srg",
        m.srg.map_or_else(
            || "none".to_string(),
            |p| format!("({};{};{};{})", p.n, p.k, p.lambda, p.mu),
        ),
    );
}

fn render_domination_pairs(d: Option<&DominationNumbers>, push: &mut dyn FnMut(&str, String)) {
    match d {
        None => push("gamma", "none".into()),
        Some(d) => {
            push("gamma", d.gamma.size.to_string());
            push("gamma_witness", join(d.gamma.witness.iter()));
            push("gamma_c", d.gamma_c.size.to_string());
            push("gamma_c_witness", join(d.gamma_c.witness.iter()));
            match &d.gamma_t {
                Some(t) => {
                    push("gamma_t", t.size.to_string());
                    push("gamma_t_witness", join(t.witness.iter()));
                }
                None => push("gamma_t", "none".into()),
            }
        }
    }
}

fn values_line(r: &TheoremReport) -> String {
    r.values
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders the reports of `check` for one graph.
pub fn render_checks(reports: &[TheoremReport], format: Format) -> String {
    match format {
        Format::Json => pretty(&serde_json::to_value(reports).expect("serializable reports")),
        Format::Csv => {
            let mut out = String::from("theorem,status,graph6,values\n");
            for r in reports {
                let vals = r
                    .values
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(";");
                let _ = writeln!(out, "{},{},{},{}", r.id, r.status, r.graph6, vals);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            if let Some(first) = reports.first() {
                let _ = writeln!(out, "graph6={}", first.graph6);
            }
            for r in reports {
                let _ = writeln!(out, "{} {} {}", r.id, r.status, values_line(r));
            }
            out
        }
    }
}

/// Renders a sweep summary. The JSON shape is stable:
/// `{"scan": {...}, "results": [...], "elapsed_ms": N}`.
pub fn render_scan(s: &ScanSummary, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "scan": {
                "orders": s.orders,
                "ids": s.ids,
                "graphs_scanned": s.graphs_scanned,
            },
            "results": s.results.iter().map(|r| json!({
                "id": r.id,
                "holds": r.holds,
                "violated": r.violated,
                "inapplicable": r.inapplicable,
                "inapplicable_cap": r.inapplicable_cap,
                "witnesses": r.witnesses,
            })).collect::<Vec<_>>(),
            "elapsed_ms": s.elapsed_ms,
        })),
        Format::Csv => {
            let mut out = String::from("theorem,holds,violated,inapplicable,inapplicable_cap\n");
            for r in &s.results {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.id, r.holds, r.violated, r.inapplicable, r.inapplicable_cap
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "orders={}", join(s.orders.iter()));
            let _ = writeln!(out, "graphs_scanned={}", s.graphs_scanned);
            let _ = writeln!(out, "elapsed_ms={}", s.elapsed_ms);
            for r in &s.results {
                let _ = writeln!(
                    out,
                    "{} holds={} violated={} inapplicable={} inapplicable_cap={}",
                    r.id, r.holds, r.violated, r.inapplicable, r.inapplicable_cap
                );
                for w in &r.witnesses {
                    let _ = writeln!(out, "  violation graph6={} {}", w.graph6, values_line(w));
                }
            }
            let _ = writeln!(out, "total_violations={}", s.total_violations());
            out
        }
    }
}

/// Renders a complement-pair sweep.
pub fn render_ng(s: &NgScanSummary, format: Format) -> String {
    match format {
        Format::Json => pretty(&serde_json::to_value(s).expect("serializable summary")),
        Format::Csv => {
            let mut out = String::from(
                "graph6,tr,tr_complement,diam,diam_complement,sum,product,exceeds_multiplicative\n",
            );
            for m in &s.members {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    m.graph6,
                    m.tr,
                    m.tr_complement,
                    m.diam,
                    m.diam_complement,
                    m.sum,
                    m.product,
                    m.exceeds_multiplicative
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n={}", s.n);
            let _ = writeln!(out, "both_connected={}", s.both_connected);
            let _ = writeln!(out, "elapsed_ms={}", s.elapsed_ms);
            let e = &s.extremes;
            let _ = writeln!(out, "min_sum={} graph6={}", e.min_sum, e.min_sum_graph6);
            let _ = writeln!(out, "max_sum={} graph6={}", e.max_sum, e.max_sum_graph6);
            let _ = writeln!(out, "min_product={} graph6={}", e.min_product, e.min_product_graph6);
            let _ = writeln!(out, "max_product={} graph6={}", e.max_product, e.max_product_graph6);
            let _ = writeln!(out, "family_members={}", s.members.len());
            for m in &s.members {
                let _ = writeln!(
                    out,
                    "  member graph6={} tr={} tr_complement={} sum={} product={} exceeds={}",
                    m.graph6, m.tr, m.tr_complement, m.sum, m.product, m.exceeds_multiplicative
                );
            }
            out
        }
    }
}

/// Renders a family-formula verification.
pub fn render_family(v: &FamilyVerification, format: Format) -> String {
    match format {
        Format::Json => pretty(&serde_json::to_value(v).expect("serializable verification")),
        Format::Csv => {
            let mut out = String::from("spec,n,computed,expected,matches\n");
            for row in &v.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    row.spec.replace(',', ";"),
                    row.n,
                    row.computed,
                    row.expected,
                    row.matches
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "kind={}", v.kind);
            for row in &v.rows {
                let _ = writeln!(
                    out,
                    "{} n={} computed={} expected={} {}",
                    row.spec,
                    row.n,
                    row.computed,
                    row.expected,
                    if row.matches { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(out, "mismatches={}", v.mismatches);
            out
        }
    }
}
