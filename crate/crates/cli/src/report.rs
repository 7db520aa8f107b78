use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct Input {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Default)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows.push(row.into_iter().map(|s| s.to_string()).collect());
    }
}

/// What a subcommand produced: tables for text and CSV, a JSON value that
/// mirrors them, and whether every mathematical check passed.
#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Input>,
    pub parameters: Vec<(String, Value)>,
    pub tables: Vec<Table>,
    pub notes: Vec<(String, String)>,
    pub result: Value,
    pub passed: bool,
    /// The input itself was rejected; exit 2 even though a report is printed.
    pub invalid_input: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            parameters: Vec::new(),
            tables: Vec::new(),
            notes: Vec::new(),
            result: Value::Null,
            passed: true,
            invalid_input: false,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters.push((key.into(), json!(value)));
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.notes.push((key.into(), value.to_string()));
    }

    fn header_lines(&self) -> Vec<String> {
        let mut out = vec![format!("opcohom {} {}", env!("CARGO_PKG_VERSION"), self.command)];
        for i in &self.inputs {
            out.push(format!("{} {} sha256:{}", i.role, i.path, i.sha256));
        }
        for (k, v) in &self.parameters {
            out.push(format!("{k} = {v}"));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let params: serde_json::Map<String, Value> = self.parameters.iter().cloned().collect();
                let doc = json!({
                    "tool": "opcohom",
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": self.command,
                    "inputs": self.inputs,
                    "parameters": params,
                    "passed": self.passed,
                    "result": self.result,
                });
                serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
            }
            Format::Csv => {
                let mut s = String::new();
                for h in self.header_lines() {
                    let _ = writeln!(s, "# {h}");
                }
                for (k, v) in &self.notes {
                    let _ = writeln!(s, "# {k}: {v}");
                }
                for t in &self.tables {
                    if self.tables.len() > 1 {
                        let _ = writeln!(s, "# table {}", t.name);
                    }
                    let _ = writeln!(s, "{}", t.columns.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
                    for r in &t.rows {
                        let _ = writeln!(s, "{}", r.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
                    }
                }
                s
            }
            Format::Text => {
                let mut s = String::new();
                for h in self.header_lines() {
                    let _ = writeln!(s, "# {h}");
                }
                for t in &self.tables {
                    let _ = writeln!(s, "\n{}", t.name);
                    s.push_str(&aligned(t));
                }
                if !self.notes.is_empty() {
                    s.push('\n');
                }
                for (k, v) in &self.notes {
                    let _ = writeln!(s, "{k}: {v}");
                }
                s
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn aligned(t: &Table) -> String {
    let width = |s: &str| s.chars().count();
    let mut w: Vec<usize> = t.columns.iter().map(|c| width(c)).collect();
    for r in &t.rows {
        for (i, c) in r.iter().enumerate() {
            w[i] = w[i].max(width(c));
        }
    }
    let line = |cells: &[String]| -> String {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}{}", " ".repeat(w[i] - width(c)), c))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(&t.columns);
    for r in &t.rows {
        s.push_str(&line(r));
    }
    s
}
