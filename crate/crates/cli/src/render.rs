//! Rendering of command output. Tables are derived from the JSON records, so every
//! format carries the same data.

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Markdown => "md",
            Format::Csv => "csv",
        }
    }
}

/// A command result: JSON records plus an optional markdown heading.
pub struct Output {
    pub title: String,
    pub records: Value,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| x.is_number() || x.is_string()) => xs
            .iter()
            .map(|x| x.as_str().map(str::to_owned).unwrap_or_else(|| x.to_string()))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn rows(records: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let items: Vec<&Value> = match records {
        Value::Array(xs) => xs.iter().collect(),
        other => vec![other],
    };
    let mut columns: Vec<String> = Vec::new();
    for item in &items {
        if let Value::Object(m) = item {
            for k in m.keys() {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
    }
    let rows = items
        .iter()
        .map(|item| columns.iter().map(|c| item.get(c).map(cell).unwrap_or_default()).collect())
        .collect();
    (columns, rows)
}

pub fn markdown(out: &Output) -> String {
    let (columns, rows) = rows(&out.records);
    let mut s = format!("## {}\n\n", out.title);
    s.push_str(&format!("| {} |\n", columns.join(" | ")));
    s.push_str(&format!("|{}\n", "---|".repeat(columns.len())));
    for r in rows {
        let r: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
        s.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    s
}

pub fn csv(out: &Output) -> String {
    let (columns, rows) = rows(&out.records);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&columns).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn json(out: &Output) -> String {
    serde_json::to_string_pretty(&out.records).expect("records serialise") + "\n"
}

pub fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => json(out),
        Format::Markdown => markdown(out),
        Format::Csv => csv(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tables_follow_records() {
        let out = Output {
            title: "t".into(),
            records: json!([{ "a": 1, "b": [1, 2] }, { "a": 2, "b": "x,y" }]),
        };
        assert_eq!(csv(&out), "a,b\n1,1 2\n2,\"x,y\"\n");
        assert!(markdown(&out).contains("| 1 | 1 2 |"));
    }
}
