//! Text, JSON and CSV renderings of Betti tables and reports.

use edgebetti::betti::{BettiEntry, BettiTable, Completeness};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub i_max: usize,
    pub j_max: usize,
}

/// The JSON form of a table. Invariants are `null` for bounded tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub subject: String,
    pub bounded: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<Region>,
    pub entries: Vec<BettiEntry>,
    pub projdim: Option<usize>,
    pub reg: Option<usize>,
    pub extremal: Option<Vec<BettiEntry>>,
}

impl From<&BettiTable> for TableJson {
    fn from(t: &BettiTable) -> Self {
        let region = match t.completeness {
            Completeness::Total => None,
            Completeness::Bounded { i_max, j_max } => Some(Region { i_max, j_max }),
        };
        TableJson {
            subject: t.subject.clone(),
            bounded: region.is_some(),
            region,
            entries: t.entries(),
            projdim: t.proj_dim().ok(),
            reg: t.regularity().ok(),
            extremal: t.extremal().ok(),
        }
    }
}

impl TableJson {
    pub fn to_table(&self) -> BettiTable {
        let completeness = match self.region {
            Some(Region { i_max, j_max }) => Completeness::Bounded { i_max, j_max },
            None => Completeness::Total,
        };
        let mut t = BettiTable::new(self.subject.clone(), completeness);
        for e in &self.entries {
            t.set(e.i, e.j, e.value);
        }
        t
    }
}

pub fn parse_table_json(text: &str) -> Result<BettiTable, serde_json::Error> {
    serde_json::from_str::<TableJson>(text).map(|j| j.to_table())
}

pub fn entry_list(entries: &[BettiEntry]) -> String {
    if entries.is_empty() {
        return "none".into();
    }
    entries
        .iter()
        .map(|e| format!("beta({},{}) = {}", e.i, e.j, e.value))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn table_text(t: &BettiTable) -> String {
    let mut out = format!("{}\n", t.subject);
    match t.completeness {
        Completeness::Total => out.push_str("total\n"),
        Completeness::Bounded { i_max, j_max } => {
            out.push_str(&format!("bounded: computed for i <= {i_max}, j <= {j_max}\n"))
        }
    }
    out.push_str(&t.render_diagram());
    match (t.proj_dim(), t.regularity(), t.extremal()) {
        (Ok(p), Ok(r), Ok(ex)) => {
            out.push_str(&format!("projdim: {p}\nreg: {r}\nextremal: {}\n", entry_list(&ex)));
        }
        _ => out.push_str("projdim, reg, extremal: not certified outside the computed region\n"),
    }
    out
}

pub fn tables_json(tables: &[BettiTable]) -> String {
    let rendered: Vec<TableJson> = tables.iter().map(TableJson::from).collect();
    let text = match rendered.as_slice() {
        [single] => serde_json::to_string_pretty(single),
        many => serde_json::to_string_pretty(many),
    };
    text.expect("tables serialize") + "\n"
}

pub fn tables_csv(tables: &[BettiTable]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["subject", "i", "j", "value"]).expect("in-memory write");
    for t in tables {
        for e in t.entries() {
            w.serialize((&t.subject, e.i, e.j, e.value)).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}
