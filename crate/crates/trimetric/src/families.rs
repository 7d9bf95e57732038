//! Parametric graph families with fixed, documented labelings, plus the
//! `kind:p1[,p2[,p3]]` mini-grammar used on the command line.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family member. Labelings are part of the contract:
/// paths/cycles are labeled consecutively, stars put the center at 0,
/// bistars put the two roots at 0 and 1, spiders put the root at 0 with
/// legs labeled consecutively, grids are row-major, and the Petersen
/// graph has the outer cycle on 0..5, spokes i ~ i + 5, and the inner
/// pentagram (i + 5) ~ ((i + 2) mod 5) + 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// P_n, n >= 1.
    Path { n: usize },
    /// C_n, n >= 3.
    Cycle { n: usize },
    /// K_n, n >= 1.
    Complete { n: usize },
    /// Star K_{1,k}, k >= 1 leaves.
    Star { leaves: usize },
    /// Two adjacent roots carrying n1 and n2 leaves, n1, n2 >= 1.
    Bistar { n1: usize, n2: usize },
    /// Three paths of lengths k1, k2, k3 >= 1 glued at a common root.
    Spider { k1: usize, k2: usize, k3: usize },
    /// The rows x cols grid P_rows x P_cols, both >= 1.
    Grid { rows: usize, cols: usize },
    /// The Petersen graph.
    Petersen,
}

impl FamilySpec {
    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => n,
            FamilySpec::Star { leaves } => leaves + 1,
            FamilySpec::Bistar { n1, n2 } => n1 + n2 + 2,
            FamilySpec::Spider { k1, k2, k3 } => k1 + k2 + k3 + 1,
            FamilySpec::Grid { rows, cols } => rows * cols,
            FamilySpec::Petersen => 10,
        }
    }

    /// Builds the member, validating parameter ranges first.
    pub fn generate(&self) -> Result<Graph> {
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        match *self {
            FamilySpec::Path { n } => {
                if n < 1 {
                    return bad("path needs n >= 1".into());
                }
                let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                Graph::from_edge_list(n, &edges)
            }
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return bad(format!("cycle needs n >= 3, got {n}"));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edge_list(n, &edges)
            }
            FamilySpec::Complete { n } => {
                if n < 1 {
                    return bad("complete graph needs n >= 1".into());
                }
                let mut edges = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        edges.push((i, j));
                    }
                }
                Graph::from_edge_list(n, &edges)
            }
            FamilySpec::Star { leaves } => {
                if leaves < 1 {
                    return bad("star needs at least one leaf".into());
                }
                let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
                Graph::from_edge_list(leaves + 1, &edges)
            }
            FamilySpec::Bistar { n1, n2 } => {
                if n1 < 1 || n2 < 1 {
                    return bad(format!("bistar needs n1, n2 >= 1, got {n1}, {n2}"));
                }
                let mut edges = vec![(0, 1)];
                edges.extend((2..2 + n1).map(|v| (0, v)));
                edges.extend((2 + n1..2 + n1 + n2).map(|v| (1, v)));
                Graph::from_edge_list(n1 + n2 + 2, &edges)
            }
            FamilySpec::Spider { k1, k2, k3 } => {
                if k1 < 1 || k2 < 1 || k3 < 1 {
                    return bad(format!("spider needs leg lengths >= 1, got {k1}, {k2}, {k3}"));
                }
                let mut edges = Vec::new();
                let mut next = 1;
                for len in [k1, k2, k3] {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                Graph::from_edge_list(next, &edges)
            }
            FamilySpec::Grid { rows, cols } => {
                if rows < 1 || cols < 1 {
                    return bad(format!("grid needs rows, cols >= 1, got {rows}, {cols}"));
                }
                let mut edges = Vec::new();
                for r in 0..rows {
                    for c in 0..cols {
                        let v = r * cols + c;
                        if c + 1 < cols {
                            edges.push((v, v + 1));
                        }
                        if r + 1 < rows {
                            edges.push((v, v + cols));
                        }
                    }
                }
                Graph::from_edge_list(rows * cols, &edges)
            }
            FamilySpec::Petersen => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((i + 5, (i + 2) % 5 + 5));
                }
                Graph::from_edge_list(10, &edges)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Star { leaves } => write!(f, "star:{leaves}"),
            FamilySpec::Bistar { n1, n2 } => write!(f, "bistar:{n1},{n2}"),
            FamilySpec::Spider { k1, k2, k3 } => write!(f, "spider:{k1},{k2},{k3}"),
            FamilySpec::Grid { rows, cols } => write!(f, "grid:{rows},{cols}"),
            FamilySpec::Petersen => write!(f, "petersen"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `kind:p1[,p2[,p3]]`; `petersen` takes no parameters.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k, p),
            None => (s, ""),
        };
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim().parse().map_err(|_| {
                        Error::InvalidInput(format!("family parameter is not a number: {p:?}"))
                    })
                })
                .collect::<Result<_>>()?
        };
        let arity = |want: usize| -> Result<()> {
            if nums.len() == want {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!(
                    "family kind {kind:?} takes {want} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let spec = match kind {
            "path" => {
                arity(1)?;
                FamilySpec::Path { n: nums[0] }
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: nums[0] }
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete { n: nums[0] }
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star { leaves: nums[0] }
            }
            "bistar" => {
                arity(2)?;
                FamilySpec::Bistar {
                    n1: nums[0],
                    n2: nums[1],
                }
            }
            "spider" => {
                arity(3)?;
                FamilySpec::Spider {
                    k1: nums[0],
                    k2: nums[1],
                    k3: nums[2],
                }
            }
            "grid" => {
                arity(2)?;
                FamilySpec::Grid {
                    rows: nums[0],
                    cols: nums[1],
                }
            }
            "petersen" => {
                arity(0)?;
                FamilySpec::Petersen
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown family kind {other:?} (expected path, cycle, complete, star, \
                     bistar, spider, grid, or petersen)"
                )))
            }
        };
        // Validate ranges eagerly so parse errors surface immediately.
        spec.generate()?;
        Ok(spec)
    }
}
