use std::fmt::Write;
use std::str::FromStr;

use super::json::encode_kostka;
use crate::error::{Error, Result};
use crate::multisym::KostkaTable;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" => Ok(Format::Latex),
            "text" => Ok(Format::Text),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
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

/// Renders a table; identical input gives identical bytes.
pub fn emit_kostka(t: &KostkaTable, format: Format) -> String {
    match format {
        Format::Json => {
            // header fields one per line, then one compact entry per line
            let doc = encode_kostka(t);
            let mut s = String::from("{\n");
            for key in ["n", "r", "sign", "order", "conjugate"] {
                let _ = writeln!(s, "  \"{key}\": {},", doc[key]);
            }
            s.push_str("  \"entries\": [");
            let entries = doc["entries"].as_array().expect("array");
            for (k, e) in entries.iter().enumerate() {
                s.push_str(if k == 0 { "\n    " } else { ",\n    " });
                s.push_str(&e.to_string());
            }
            s.push_str(if entries.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
            s
        }
        Format::Csv => {
            let mut s = String::from("lambda,mu,value\n");
            for (l, m, v) in t.nonzero() {
                let _ = writeln!(s, "{},{},{}", csv_field(&l.to_string()), csv_field(&m.to_string()), csv_field(&v.to_string()));
            }
            s
        }
        Format::Latex => latex(t),
        Format::Text => {
            let rows: Vec<[String; 3]> = t.nonzero().map(|(l, m, v)| [l.to_string(), m.to_string(), v.to_string()]).collect();
            let w0 = rows.iter().map(|r| r[0].len()).max().unwrap_or(0).max(6);
            let w1 = rows.iter().map(|r| r[1].len()).max().unwrap_or(0).max(2);
            let mut s = format!(
                "K^{} n={} r={} order={} conjugate={}\n",
                t.sign,
                t.n,
                t.r,
                t.config().order,
                t.config().conjugate
            );
            let _ = writeln!(s, "{:w0$}  {:w1$}  value", "lambda", "mu");
            for [a, b, c] in rows {
                let _ = writeln!(s, "{a:w0$}  {b:w1$}  {c}");
            }
            s
        }
    }
}

fn latex_label(l: &crate::partitions::MultiPartition) -> String {
    let parts: Vec<String> = l
        .components()
        .iter()
        .map(|p| if p.is_empty() { "-".to_string() } else { p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join("") })
        .collect();
    format!("({})", parts.join(";"))
}

fn latex(t: &KostkaTable) -> String {
    let labels = t.labels();
    let mut s = String::new();
    let _ = writeln!(s, "% K^{} for n={}, r={}, order {}", t.sign, t.n, t.r, t.config().order);
    let _ = writeln!(s, "\\begin{{tabular}}{{l|{}}}", "c".repeat(labels.len()));
    let head: Vec<String> = labels.iter().map(|l| format!("${}$", latex_label(l))).collect();
    let _ = writeln!(s, " & {} \\\\", head.join(" & "));
    s.push_str("\\hline\n");
    for (l, row) in labels.iter().zip(t.matrix()) {
        let cells: Vec<String> = row.iter().map(|v| format!("${}$", v.fmt_with("t", true))).collect();
        let _ = writeln!(s, "${}$ & {} \\\\", latex_label(l), cells.join(" & "));
    }
    s.push_str("\\end{tabular}\n");
    s
}
