use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ComputeError;

/// How much of a table is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Completeness {
    /// Every nonzero entry is present.
    Total,
    /// Only entries with `i <= i_max` and `j <= j_max` were computed.
    Bounded { i_max: usize, j_max: usize },
}

/// One `(i, j) -> value` entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

/// Graded Betti numbers `β_{i,j}` of a quotient `S/I`.
///
/// Entries are always stored at the level of the quotient; the ideal's own
/// numbers are `β_{i,j}(I) = β_{i+1,j}(S/I)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub subject: String,
    entries: BTreeMap<(usize, usize), u64>,
    pub completeness: Completeness,
}

pub type ExtremalSet = Vec<BettiEntry>;

impl BettiTable {
    pub fn new(subject: impl Into<String>, completeness: Completeness) -> Self {
        BettiTable {
            subject: subject.into(),
            entries: BTreeMap::new(),
            completeness,
        }
    }

    pub fn total(subject: impl Into<String>) -> Self {
        BettiTable::new(subject, Completeness::Total)
    }

    /// Builds the quotient table from ideal-level numbers, adding `β_{0,0} = 1`.
    pub fn from_ideal_level(subject: impl Into<String>, ideal: &BTreeMap<(usize, usize), u64>) -> Self {
        let mut t = BettiTable::total(subject);
        t.set(0, 0, 1);
        for (&(i, j), &v) in ideal {
            t.add(i + 1, j, v);
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_{i,j}(I)` read off the quotient table.
    pub fn ideal_level(&self, i: usize, j: usize) -> u64 {
        self.get(i + 1, j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        if value == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        let v = self.get(i, j) + value;
        self.set(i, j, v);
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(i, j), &value)| BettiEntry { i, j, value })
            .collect()
    }

    pub fn is_total(&self) -> bool {
        self.completeness == Completeness::Total
    }

    /// True when `(i, j)` lies in the computed region.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        match self.completeness {
            Completeness::Total => true,
            Completeness::Bounded { i_max, j_max } => i <= i_max && j <= j_max,
        }
    }

    fn require_total(&self, what: &'static str) -> Result<(), ComputeError> {
        match self.completeness {
            Completeness::Total => Ok(()),
            Completeness::Bounded { i_max, j_max } => Err(ComputeError::Bounded { i_max, j_max, what }),
        }
    }

    pub fn proj_dim(&self) -> Result<usize, ComputeError> {
        self.require_total("projective dimension")?;
        Ok(self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0))
    }

    pub fn regularity(&self) -> Result<usize, ComputeError> {
        self.require_total("regularity")?;
        Ok(self
            .entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0))
    }

    /// Nonzero `β_{i,j}` with no other nonzero `β_{k,l}` where `k >= i` and `l - k >= j - i`.
    pub fn extremal(&self) -> Result<ExtremalSet, ComputeError> {
        self.require_total("extremal Betti numbers")?;
        Ok(self.extremal_of_computed())
    }

    pub(crate) fn extremal_of_computed(&self) -> ExtremalSet {
        let row = |i: usize, j: usize| j as i64 - i as i64;
        self.entries()
            .into_iter()
            .filter(|e| {
                !self
                    .entries
                    .keys()
                    .any(|&(k, l)| (k, l) != (e.i, e.j) && k >= e.i && row(k, l) >= row(e.i, e.j))
            })
            .collect()
    }

    /// Entrywise `self <= other` over the positions both tables cover.
    pub fn dominated_by(&self, other: &BettiTable) -> Result<(), (usize, usize, u64, u64)> {
        for e in self.entries() {
            if other.covers(e.i, e.j) && e.value > other.get(e.i, e.j) {
                return Err((e.i, e.j, e.value, other.get(e.i, e.j)));
            }
        }
        Ok(())
    }

    /// Entrywise equality over the region both tables cover.
    pub fn agrees_on_overlap(&self, other: &BettiTable) -> bool {
        let keys = self.entries.keys().chain(other.entries.keys());
        keys.filter(|&&(i, j)| self.covers(i, j) && other.covers(i, j))
            .all(|&(i, j)| self.get(i, j) == other.get(i, j))
    }

    /// Same entries, ignoring subject and completeness.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    /// The sum of all entries.
    pub fn total_rank(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Largest `i` and largest row `j - i` to draw.
    fn extent(&self) -> (usize, usize) {
        let i_top = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let r_top = self
            .entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0);
        (i_top, r_top)
    }

    /// Diagram with columns `i` and rows `j - i`; zero shown as `.`.
    pub fn render_diagram(&self) -> String {
        let (i_top, r_top) = self.extent();
        let cell = |i: usize, r: usize| match self.get(i, i + r) {
            0 => ".".to_string(),
            v => v.to_string(),
        };
        let width = (0..=i_top)
            .flat_map(|i| (0..=r_top).map(move |r| (i, r)))
            .map(|(i, r)| cell(i, r).len())
            .chain((0..=i_top).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label_width = r_top.to_string().len().max(1);
        let mut out = String::new();
        out.push_str(&format!("{:>label_width$} |", ""));
        for i in 0..=i_top {
            out.push_str(&format!(" {:>width$}", i));
        }
        out.push('\n');
        out.push_str(&"-".repeat(label_width + 2 + (width + 1) * (i_top + 1)));
        out.push('\n');
        for r in 0..=r_top {
            out.push_str(&format!("{:>label_width$} |", r));
            for i in 0..=i_top {
                out.push_str(&format!(" {:>width$}", cell(i, r)));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_diagram())
    }
}
