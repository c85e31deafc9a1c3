//! Output records and their three renderings: human text, JSON, and (for
//! tables) CSV. All three carry the same numeric content.

use serde::Serialize;

/// One term of a homogeneous expansion, in display order.
#[derive(Debug, Clone, Serialize)]
pub struct Term {
    pub partition: String,
    pub coefficient: i64,
}

/// One homogeneous component.
#[derive(Debug, Clone, Serialize)]
pub struct Component {
    pub degree: u32,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Extra {
    pub name: String,
    pub value: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub n: i64,
    pub cells: Vec<Option<i64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableData {
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
    pub stable: Vec<i64>,
    pub onset: Vec<i64>,
    pub bound: Vec<i64>,
    pub component_onset: i64,
    pub component_bound: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckFailure {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FileReport {
    pub file: String,
    pub checks: usize,
    pub failures: Vec<CheckFailure>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Expansion {
        components: Vec<Component>,
    },
    Value {
        label: String,
        value: i64,
        extras: Vec<Extra>,
    },
    Table(TableData),
    Verify {
        files: Vec<FileReport>,
        passed: bool,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    #[serde(flatten)]
    pub payload: Payload,
    pub elapsed_ms: u128,
}

fn quote_csv(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

impl OutputRecord {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# heis {}\n", self.command));
        match &self.payload {
            Payload::Expansion { components } => {
                for c in components {
                    let terms: Vec<String> = c
                        .terms
                        .iter()
                        .map(|t| format!("{}={}", t.partition, t.coefficient))
                        .collect();
                    out.push_str(&format!("degree {}: {}\n", c.degree, terms.join("  ")));
                }
                if components.is_empty() {
                    out.push_str("degree -: empty\n");
                }
            }
            Payload::Value {
                label,
                value,
                extras,
            } => {
                out.push_str(&format!("{label} = {value}\n"));
                for e in extras {
                    out.push_str(&format!("# {} = {}\n", e.name, e.value));
                }
            }
            Payload::Table(t) => {
                out.push_str(&render_table_text(t));
            }
            Payload::Verify { files, passed } => {
                for f in files {
                    if f.failures.is_empty() {
                        out.push_str(&format!("PASS {} ({} checks)\n", f.file, f.checks));
                    } else {
                        out.push_str(&format!(
                            "FAIL {} ({} of {} checks failed)\n",
                            f.file,
                            f.failures.len(),
                            f.checks
                        ));
                        for failure in &f.failures {
                            out.push_str(&format!(
                                "  line {}: {}\n",
                                failure.line, failure.message
                            ));
                        }
                    }
                }
                out.push_str(if *passed {
                    "verify: all fixtures pass\n"
                } else {
                    "verify: FAILURES\n"
                });
            }
        }
        out.push_str(&format!("# elapsed_ms: {}\n", self.elapsed_ms));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable record")
    }

    pub fn render_csv(&self) -> Option<String> {
        let Payload::Table(t) = &self.payload else {
            return None;
        };
        let mut out = String::new();
        let header: Vec<String> = std::iter::once("n".to_string())
            .chain(t.columns.iter().map(|c| quote_csv(c)))
            .collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &t.rows {
            let mut fields = vec![row.n.to_string()];
            fields.extend(
                row.cells
                    .iter()
                    .map(|c| c.map(|v| v.to_string()).unwrap_or_default()),
            );
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        for (name, values) in [
            ("stable", &t.stable),
            ("onset", &t.onset),
            ("bound", &t.bound),
        ] {
            let mut fields = vec![name.to_string()];
            fields.extend(values.iter().map(|v| v.to_string()));
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        Some(out)
    }
}

fn render_table_text(t: &TableData) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# component onset = {}, component bound = {}\n",
        t.component_onset, t.component_bound
    ));
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["n".to_string()];
    header.extend(t.columns.iter().cloned());
    grid.push(header);
    for row in &t.rows {
        let mut fields = vec![row.n.to_string()];
        fields.extend(
            row.cells
                .iter()
                .map(|c| c.map(|v| v.to_string()).unwrap_or_else(|| ".".to_string())),
        );
        grid.push(fields);
    }
    for (name, values) in [
        ("stable", &t.stable),
        ("onset", &t.onset),
        ("bound", &t.bound),
    ] {
        let mut fields = vec![name.to_string()];
        fields.extend(values.iter().map(|v| v.to_string()));
        grid.push(fields);
    }
    let width = |col: usize| -> usize { grid.iter().map(|row| row[col].len()).max().unwrap_or(1) };
    let widths: Vec<usize> = (0..grid[0].len()).map(width).collect();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, f)| format!("{:>w$}", f, w = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
