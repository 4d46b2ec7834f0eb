use serde::Serialize;
use serde_json::Value;
use skewbetti_core::betti::{last_column_concentrated, unique_extremal_corner, BettiTable};
use skewbetti_core::homology::Field;

/// One computed table. `betti` holds `[i, j, value]` sorted by `i`, then `j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableReport {
    pub method: &'static str,
    /// `None` for the combinatorial engines, which do not depend on a field.
    pub field: Option<&'static str>,
    pub betti: Vec<[u64; 3]>,
    pub pd: Option<usize>,
    pub reg: Option<usize>,
    pub concentrated: bool,
    pub extremal: Extremal,
    #[serde(skip)]
    pub table: BettiTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremal {
    /// `[pd, pd + reg, value]`.
    pub corner: Option<[u64; 3]>,
    /// Whether the corner is the only extremal entry.
    pub unique: bool,
    pub entries: Vec<[u64; 3]>,
}

fn triple((i, j, v): (usize, usize, u64)) -> [u64; 3] {
    [i as u64, j as u64, v]
}

impl TableReport {
    pub fn new(method: &'static str, field: Option<Field>, table: BettiTable) -> Self {
        TableReport {
            method,
            field: field.map(field_name),
            betti: table.entries().map(triple).collect(),
            pd: table.pd(),
            reg: table.reg(),
            concentrated: last_column_concentrated(&table),
            extremal: Extremal {
                corner: table.corner().map(triple),
                unique: unique_extremal_corner(&table).is_some(),
                entries: table.extremal_entries().into_iter().map(triple).collect(),
            },
            table,
        }
    }

    pub fn label(&self) -> String {
        match self.field {
            Some(f) => format!("{} over {f}", self.method),
            None => String::from(self.method),
        }
    }
}

pub fn field_name(f: Field) -> &'static str {
    match f {
        Field::Gf2 => "gf2",
        Field::Rational => "rational",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

/// Everything a command produced. Serialized as the single JSON document
/// of a run; timing is kept out of it so output is reproducible.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input: Value,
    pub tables: Vec<TableReport>,
    /// Whether every table agrees; absent when fewer than two were computed.
    pub agreement: Option<bool>,
    pub checks: Vec<Check>,
    pub details: Value,
    pub notes: Vec<String>,
}

impl RunReport {
    pub fn new(command: &'static str, input: Value) -> Self {
        RunReport {
            command,
            input,
            tables: Vec::new(),
            agreement: None,
            checks: Vec::new(),
            details: Value::Null,
            notes: Vec::new(),
        }
    }

    pub fn set_agreement(&mut self) {
        self.agreement = (self.tables.len() > 1).then(|| self.tables.windows(2).all(|w| w[0].table == w[1].table));
    }

    pub fn passed(&self) -> bool {
        self.agreement != Some(false) && self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
