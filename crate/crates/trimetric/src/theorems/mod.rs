//! A registry of 27 triameter statements, each checked mechanically on
//! individual graphs or over exhaustive small-graph sweeps.
//!
//! Every check first decides applicability from the statement's exact
//! hypotheses, so a `Holds` is never vacuous: inapplicable graphs are
//! counted separately, as are graphs where a capped auxiliary invariant
//! (coloring, connectivity, domination, ...) could not be computed.

mod context;
mod family_check;
mod ng;
mod registry;
mod scan;

pub use family_check::{verify_family_formula, expected_triameter, FamilyRow, FamilyVerification};
pub use ng::{ng_scan, NgExtremes, NgRecord, NgScanSummary};
pub use scan::{exhaustive_scan, tree_scan, IdSummary, ScanSummary};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;

use context::CheckContext;

/// Identifier of one registered statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum TheoremId {
    T01DiameterBound,
    T02DenseBound,
    T03RadiusBound,
    T04TreeRadiusBound,
    T05OrderEquality,
    T06TreeLeafBound,
    T07FourLeaves,
    T08ConnectedDomination,
    T09Domination,
    T10TotalDomination,
    T11Connectivity,
    T12ChromaticChain,
    T13GirthLower,
    T14GirthEquality,
    T15TreeLeafLower,
    T16Wiener,
    T17CartesianAdditivity,
    T18Grid,
    T19BipartiteParity,
    T20TreeComplement,
    T21Hamiltonian,
    T22VertexTransitive,
    T23StronglyRegular,
    T24NgLemmaOne,
    T25NgLemmaTwo,
    T26NgAdditive,
    T27NgMultiplicative,
}

use TheoremId::*;

/// All ids in registry order.
pub const ALL_THEOREMS: [TheoremId; 27] = [
    T01DiameterBound,
    T02DenseBound,
    T03RadiusBound,
    T04TreeRadiusBound,
    T05OrderEquality,
    T06TreeLeafBound,
    T07FourLeaves,
    T08ConnectedDomination,
    T09Domination,
    T10TotalDomination,
    T11Connectivity,
    T12ChromaticChain,
    T13GirthLower,
    T14GirthEquality,
    T15TreeLeafLower,
    T16Wiener,
    T17CartesianAdditivity,
    T18Grid,
    T19BipartiteParity,
    T20TreeComplement,
    T21Hamiltonian,
    T22VertexTransitive,
    T23StronglyRegular,
    T24NgLemmaOne,
    T25NgLemmaTwo,
    T26NgAdditive,
    T27NgMultiplicative,
];

impl TheoremId {
    /// Stable string id, e.g. `T05_ORDER_EQUALITY`.
    pub fn as_str(self) -> &'static str {
        match self {
            T01DiameterBound => "T01_DIAMETER_BOUND",
            T02DenseBound => "T02_DENSE_BOUND",
            T03RadiusBound => "T03_RADIUS_BOUND",
            T04TreeRadiusBound => "T04_TREE_RADIUS_BOUND",
            T05OrderEquality => "T05_ORDER_EQUALITY",
            T06TreeLeafBound => "T06_TREE_LEAF_BOUND",
            T07FourLeaves => "T07_FOUR_LEAVES",
            T08ConnectedDomination => "T08_CONNECTED_DOMINATION",
            T09Domination => "T09_DOMINATION",
            T10TotalDomination => "T10_TOTAL_DOMINATION",
            T11Connectivity => "T11_CONNECTIVITY",
            T12ChromaticChain => "T12_CHROMATIC_CHAIN",
            T13GirthLower => "T13_GIRTH_LOWER",
            T14GirthEquality => "T14_GIRTH_EQUALITY",
            T15TreeLeafLower => "T15_TREE_LEAF_LOWER",
            T16Wiener => "T16_WIENER",
            T17CartesianAdditivity => "T17_CARTESIAN_ADDITIVITY",
            T18Grid => "T18_GRID",
            T19BipartiteParity => "T19_BIPARTITE_PARITY",
            T20TreeComplement => "T20_TREE_COMPLEMENT",
            T21Hamiltonian => "T21_HAMILTONIAN",
            T22VertexTransitive => "T22_VERTEX_TRANSITIVE",
            T23StronglyRegular => "T23_STRONGLY_REGULAR",
            T24NgLemmaOne => "T24_NG_LEMMA_ONE",
            T25NgLemmaTwo => "T25_NG_LEMMA_TWO",
            T26NgAdditive => "T26_NG_ADDITIVE",
            T27NgMultiplicative => "T27_NG_MULTIPLICATIVE",
        }
    }

    /// Short numeric code, e.g. `T05`.
    pub fn code(self) -> String {
        self.as_str()[..3].to_string()
    }

    /// Human-readable statement being checked.
    pub fn statement(self) -> &'static str {
        match self {
            T01DiameterBound => "2*diam <= tr <= 3*diam",
            T02DenseBound => "if every degree is at least n/2 then tr <= 6",
            T03RadiusBound => "2*rad <= tr <= 6*rad",
            T04TreeRadiusBound => "for trees, 4*rad - 2 <= tr <= 6*rad",
            T05OrderEquality => {
                "tr <= 2n - 2, with equality exactly for trees with 2 or 3 leaves"
            }
            T06TreeLeafBound => "for trees with l >= 4 leaves, tr <= 2n - 2l + 4",
            T07FourLeaves => "a tree with tr = 2n - 4 has exactly 4 leaves",
            T08ConnectedDomination => "tr <= 2*gamma_c + 4",
            T09Domination => "tr <= 6*gamma",
            T10TotalDomination => "tr <= 4*gamma_t",
            T11Connectivity => "kappa*(tr - 3) <= 3*(n - 2)",
            T12ChromaticChain => {
                "for odd cycles and complete graphs, max_degree < chi and tr + chi <= 2n; \
                 otherwise chi <= max_degree and tr + max_degree <= 2n + 1, with equality \
                 only for trees with exactly 3 leaves"
            }
            T13GirthLower => "for graphs with a cycle, girth <= tr",
            T14GirthEquality => {
                "for graphs with a cycle, girth = tr exactly for complete graphs and cycles"
            }
            T15TreeLeafLower => "for trees with l >= 3 leaves, tr*(l - 1) >= 4*(n - 1)",
            T16Wiener => "n*(n - 1)*tr >= 6*W, W the sum of all pairwise distances",
            T17CartesianAdditivity => {
                "tr(G x H) = tr(G) + tr(H) for the Cartesian product; checked with \
                 H = P_3 and H = C_4"
            }
            T18Grid => "for grids, tr(P_m x P_k) = 2*(m + k - 2)",
            T19BipartiteParity => "bipartite graphs have even tr",
            T20TreeComplement => {
                "for non-star trees on n >= 4 vertices, the complement is connected \
                 with tr = 6 for bistars and tr = 5 otherwise"
            }
            T21Hamiltonian => "hamiltonian graphs satisfy tr <= n",
            T22VertexTransitive => "vertex-transitive graphs satisfy 2*rad <= tr <= 3*rad",
            T23StronglyRegular => {
                "primitive strongly regular graphs (mu < k) have tr = 5 when the \
                 complement is triangle-free and tr = 6 otherwise"
            }
            T24NgLemmaOne => {
                "if the complement is connected and tr >= 7, the complement's tr is at most 12"
            }
            T25NgLemmaTwo => {
                "if the complement is connected and tr > 9, the complement's tr is at most 6"
            }
            T26NgAdditive => {
                "for n >= 4 with connected complement, 10 <= tr + tr(complement) <= 2n + 4"
            }
            T27NgMultiplicative => {
                "for n >= 4 with connected complement, away from the exceptional \
                 family, 25 <= tr * tr(complement) <= 12*(n - 1)"
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts the full id or the short code, case-insensitively.
    fn from_str(s: &str) -> Result<TheoremId> {
        let upper = s.trim().to_uppercase();
        for id in ALL_THEOREMS {
            if upper == id.as_str() || upper == id.code() {
                return Ok(id);
            }
        }
        Err(Error::UnknownTheorem(s.trim().to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

/// Outcome of one statement on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Hypotheses hold and the assertion checked out.
    Holds,
    /// Hypotheses hold but the assertion failed.
    Violated,
    /// The graph does not satisfy the statement's hypotheses.
    Inapplicable,
    /// An auxiliary invariant was over its exact-search cap, so the
    /// statement could not be decided.
    InapplicableCap,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::Inapplicable => "inapplicable",
            Status::InapplicableCap => "inapplicable_cap",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Status {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

/// Values recorded while evaluating a statement, keyed by invariant name.
pub type Values = Vec<(&'static str, i64)>;

/// Full record of one check: the statement, its outcome, the graph in
/// graph6 form, and the invariant values that went into the decision.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub status: Status,
    pub graph6: String,
    pub values: BTreeMap<&'static str, i64>,
}

fn admissible(g: &Graph) -> Result<()> {
    if g.n() < 3 {
        return Err(Error::InvalidInput(format!(
            "theorem checks need n >= 3 (the triameter needs three vertices), got n = {}",
            g.n()
        )));
    }
    if !g.is_connected() {
        return Err(Error::InvalidInput(
            "theorem checks need a connected graph".into(),
        ));
    }
    Ok(())
}

/// Checks one statement on one connected graph with `n >= 3`.
pub fn check(g: &Graph, id: TheoremId) -> Result<TheoremReport> {
    let reports = check_all(g, &[id])?;
    Ok(reports.into_iter().next().expect("one id in, one report out"))
}

/// Checks several statements on one graph, sharing all intermediate
/// invariants across them.
pub fn check_all(g: &Graph, ids: &[TheoremId]) -> Result<Vec<TheoremReport>> {
    admissible(g)?;
    if ids.is_empty() {
        return Err(Error::InvalidInput("no theorem ids given".into()));
    }
    let graph6 = to_graph6(g)?;
    let mut ctx = CheckContext::new(g);
    Ok(ids
        .iter()
        .map(|&id| {
            let (status, values) = registry::evaluate(id, &mut ctx);
            TheoremReport {
                id,
                status,
                graph6: graph6.clone(),
                values: values.into_iter().collect(),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse_both_ways() {
        assert_eq!("T05_ORDER_EQUALITY".parse::<TheoremId>().unwrap(), T05OrderEquality);
        assert_eq!("t05".parse::<TheoremId>().unwrap(), T05OrderEquality);
        assert_eq!("T27".parse::<TheoremId>().unwrap(), T27NgMultiplicative);
        assert!("T28".parse::<TheoremId>().is_err());
        assert!("".parse::<TheoremId>().is_err());
        for id in ALL_THEOREMS {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
            assert_eq!(id.code().parse::<TheoremId>().unwrap(), id);
        }
    }

    #[test]
    fn codes_are_unique_and_ordered() {
        for (i, id) in ALL_THEOREMS.iter().enumerate() {
            assert_eq!(id.code(), format!("T{:02}", i + 1));
        }
    }
}
