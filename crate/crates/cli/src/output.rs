//! Rendering: text, JSON with a config header and stable key order, and CSV
//! with the config echoed as a leading comment line.

use anyhow::Result;
use serde::Serialize;
use serde_json::{json, Value};
use sumset_core::verify::CheckReport;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub struct Renderer {
    format: Format,
    config: Vec<(String, String)>,
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn value_to_plain(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Renderer {
    pub fn new(format: Format, config: &[(String, String)]) -> Self {
        Renderer {
            format,
            config: config.to_vec(),
        }
    }

    fn config_comment(&self) -> String {
        let parts: Vec<String> = self
            .config
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("# {}", parts.join(" "))
    }

    fn config_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        for (k, v) in &self.config {
            map.insert(k.clone(), json!(v));
        }
        Value::Object(map)
    }

    /// Render one result record. `fields` pins the column order for text and
    /// CSV output.
    pub fn emit<T: Serialize>(&self, value: &T, fields: &[&str]) -> Result<()> {
        let v = serde_json::to_value(value)?;
        match self.format {
            Format::Json => {
                let out = json!({ "config": self.config_json(), "result": v });
                println!("{}", serde_json::to_string_pretty(&out)?);
            }
            Format::Text => {
                println!("{}", self.config_comment());
                for f in fields {
                    match v.get(*f) {
                        None | Some(Value::Null) => {}
                        Some(Value::Array(items)) => {
                            println!("{f}:");
                            for item in items {
                                println!("  - {}", serde_json::to_string(item)?);
                            }
                        }
                        Some(val) => println!("{f}: {}", value_to_plain(val)),
                    }
                }
            }
            Format::Csv => {
                println!("{}", self.config_comment());
                println!("{}", fields.join(","));
                let row: Vec<String> = fields
                    .iter()
                    .map(|f| match v.get(*f) {
                        None | Some(Value::Null) => String::new(),
                        Some(Value::Array(items)) => {
                            csv_quote(&serde_json::to_string(items).unwrap_or_default())
                        }
                        Some(val) => csv_quote(&value_to_plain(val)),
                    })
                    .collect();
                println!("{}", row.join(","));
            }
        }
        Ok(())
    }

    pub fn emit_reports(&self, reports: &[CheckReport]) -> Result<()> {
        match self.format {
            Format::Json => {
                let out = json!({
                    "config": self.config_json(),
                    "reports": serde_json::to_value(reports)?,
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            }
            Format::Text => {
                println!("{}", self.config_comment());
                for r in reports {
                    println!(
                        "{} {:<20} cells={} failures={} elapsed_ms={}",
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.id,
                        r.cells_checked,
                        r.failures.len(),
                        r.elapsed.as_millis()
                    );
                    for f in &r.failures {
                        println!(
                            "  counterexample: {} | witness: {} | expected: {} | actual: {}",
                            f.params, f.witness, f.expected, f.actual
                        );
                    }
                }
                let failed = reports.iter().filter(|r| !r.passed()).count();
                println!(
                    "summary: {} checks, {} failed",
                    reports.len(),
                    failed
                );
            }
            Format::Csv => {
                println!("{}", self.config_comment());
                println!("id,passed,cells,failures,elapsed_ms");
                for r in reports {
                    println!(
                        "{},{},{},{},{}",
                        csv_quote(&r.id),
                        r.passed(),
                        r.cells_checked,
                        r.failures.len(),
                        r.elapsed.as_millis()
                    );
                }
            }
        }
        Ok(())
    }

    pub fn emit_table(&self, table: &Table) -> Result<()> {
        match self.format {
            Format::Json => {
                let rows: Vec<Value> = table
                    .rows
                    .iter()
                    .map(|row| {
                        let mut map = serde_json::Map::new();
                        for (c, v) in table.columns.iter().zip(row) {
                            map.insert(c.clone(), json!(v));
                        }
                        Value::Object(map)
                    })
                    .collect();
                let out = json!({ "config": self.config_json(), "rows": rows });
                println!("{}", serde_json::to_string_pretty(&out)?);
            }
            Format::Text => {
                println!("{}", self.config_comment());
                for row in &table.rows {
                    let parts: Vec<String> = table
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| format!("{c}={v}"))
                        .collect();
                    println!("{}", parts.join("  "));
                }
            }
            Format::Csv => {
                println!("{}", self.config_comment());
                println!(
                    "{}",
                    table
                        .columns
                        .iter()
                        .map(|c| csv_quote(c))
                        .collect::<Vec<_>>()
                        .join(",")
                );
                for row in &table.rows {
                    println!(
                        "{}",
                        row.iter().map(|v| csv_quote(v)).collect::<Vec<_>>().join(",")
                    );
                }
            }
        }
        Ok(())
    }
}
