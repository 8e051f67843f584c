//! Machine-readable report envelope shared by every pipeline output.

use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// Wraps a result with the schema version and the effective configuration
/// for provenance. Executional knobs (worker count, output paths) are not
/// echoed: report bytes are independent of them by contract.
#[derive(Clone, Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema_version: u32,
    pub command: String,
    pub config: BTreeMap<String, String>,
    pub result: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, config: BTreeMap<String, String>, result: T) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            config,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Writes rows as CSV with a header line; floats use the shortest
/// round-trip representation, so files are byte-stable across runs.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
