//! Output records, rendered either as aligned text or as JSON.
//!
//! JSON shape: `{"command": .., "parameters": {..}, "result": {..}}`. Numbers are decimal
//! strings and partitions are arrays of integers. Tabular results appear under
//! `result.rows` as a list of objects keyed by column name.

use std::fmt::{Display, Write};

use serde_json::{Map, Value};

pub fn num(v: impl Display) -> Value {
    Value::String(v.to_string())
}

pub struct Record {
    command: &'static str,
    params: Vec<(&'static str, Value)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
    fields: Vec<(&'static str, Value)>,
    text: Vec<String>,
}

impl Record {
    pub fn new(command: &'static str, params: Vec<(&'static str, Value)>) -> Self {
        Record {
            command,
            params,
            columns: Vec::new(),
            rows: Vec::new(),
            fields: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn table(&mut self, columns: &[&'static str], rows: Vec<Vec<Value>>) {
        self.columns = columns.to_vec();
        self.rows = rows;
    }

    pub fn field(&mut self, key: &'static str, value: Value) {
        self.fields.push((key, value));
    }

    /// Extra line for the text rendering only.
    pub fn text_line(&mut self, line: String) {
        self.text.push(line);
    }

    pub fn to_json(&self) -> String {
        let mut result = Map::new();
        if !self.columns.is_empty() {
            let rows = self
                .rows
                .iter()
                .map(|r| Value::Object(self.columns.iter().map(|c| c.to_string()).zip(r.iter().cloned()).collect()))
                .collect();
            result.insert("rows".into(), Value::Array(rows));
        }
        for (k, v) in &self.fields {
            result.insert((*k).into(), v.clone());
        }
        let params: Map<String, Value> = self.params.iter().map(|(k, v)| ((*k).into(), v.clone())).collect();
        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.into()));
        top.insert("parameters".into(), Value::Object(params));
        top.insert("result".into(), Value::Object(result));
        serde_json::to_string_pretty(&Value::Object(top)).expect("JSON values always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        writeln!(out, "{} {}", self.command, params.join(" ")).unwrap();
        if !self.columns.is_empty() {
            let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(plain).collect()).collect();
            let widths: Vec<usize> = (0..self.columns.len())
                .map(|i| cells.iter().map(|r| r[i].len()).chain([self.columns[i].len()]).max().unwrap_or(0))
                .collect();
            let line = |row: Vec<&str>| {
                row.iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(self.columns.clone())).unwrap();
            for r in &cells {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).unwrap();
            }
        }
        for t in &self.text {
            writeln!(out, "{t}").unwrap();
        }
        for (k, v) in &self.fields {
            writeln!(out, "{k}: {}", plain(v)).unwrap();
        }
        out
    }
}

/// Compact rendering for tables: strings unquoted, partitions as `3,1,1`.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(Value::is_number) => {
            if items.is_empty() {
                "-".into()
            } else {
                items.iter().map(Value::to_string).collect::<Vec<_>>().join(",")
            }
        }
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
