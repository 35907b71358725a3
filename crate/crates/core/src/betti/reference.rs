//! Published invariants of `S/J_G` for cycles and complete bipartite graphs.

use serde::{Deserialize, Serialize};

use super::formulas::binomial;
use crate::error::ComputeError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Cycle { n: usize },
    CompleteBipartite { m: usize, n: usize },
}

impl Family {
    pub fn graph(self) -> Result<Graph, ComputeError> {
        Ok(match self {
            Family::Cycle { n } => Graph::cycle(n)?,
            Family::CompleteBipartite { m, n } => Graph::complete_bipartite(m, n)?,
        })
    }

    pub fn label(self) -> String {
        match self {
            Family::Cycle { n } => format!("C_{n}"),
            Family::CompleteBipartite { m, n } => format!("K_{{{m},{n}}}"),
        }
    }
}

/// Expected projective dimension, regularity and unique extremal Betti number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceRecord {
    pub family: Family,
    pub projdim: usize,
    pub reg: usize,
    pub corner: (usize, usize),
    pub value: u64,
    /// Set when the quoted value conflicts with an independent computation.
    pub disputed: bool,
}

/// The published values for `S/J_G`.
///
/// `K_{m,m}` with `m > 1` is returned with `disputed = true`: the quoted
/// corner `n - 1` disagrees with `K_{2,2} ≅ C_4`, whose corner is 2.
pub fn paper_reference_values(family: Family) -> Result<ReferenceRecord, ComputeError> {
    match family {
        Family::Cycle { n } => {
            if n < 4 {
                return Err(ComputeError::Unsupported(format!(
                    "cycle reference values need n >= 4, got {n}"
                )));
            }
            Ok(ReferenceRecord {
                family,
                projdim: n,
                reg: n - 2,
                corner: (n, 2 * n - 2),
                value: binomial(n - 1, 2) - 1,
                disputed: false,
            })
        }
        Family::CompleteBipartite { m, n } => {
            if n < 1 || m < n {
                return Err(ComputeError::InvalidParameters(format!(
                    "need m >= n >= 1, got ({m}, {n})"
                )));
            }
            if m == 1 {
                return Err(ComputeError::Unsupported("K_{1,1} has no degree-3 corner".into()));
            }
            let (p, value) = if n == 1 {
                (m, (m - 1) as u64)
            } else {
                (2 * m + n - 2, (n - 1) as u64)
            };
            Ok(ReferenceRecord {
                family,
                projdim: p,
                reg: 2,
                corner: (p, p + 2),
                value,
                disputed: n > 1 && m == n,
            })
        }
    }
}
