use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kostka_core::error::Error;
use kostka_core::io::{emit_kostka, encode_multi_tableau, encode_tableau, parse_multipartition, parse_weight, Format};
use kostka_core::multisym::{kostka_table, ConjugateSlot, EngineConfig, Sign};
use kostka_core::partitions::{Partition, TotalOrder};
use kostka_core::tableaux::{enumerate_sst_multi, multi_to_skew, theta, word};
use kostka_core::verify::{self, Suite};
use serde_json::json;

#[derive(Parser)]
#[command(name = "kostka", version, about = "Kostka functions for r-tuples of partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format: json, csv, latex or text
    #[arg(long, default_value = "json")]
    format: String,
    /// Write to FILE instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct Table {
    #[arg(long, default_value_t = 2)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Total order used for the elimination: lex-c or lex-c-reversed
    #[arg(long, default_value = "lex-c")]
    order: String,
    /// Conjugate-linear argument of the form: first or second
    #[arg(long, default_value = "first")]
    conjugate: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the table K^± for one (n, r)
    Kostka {
        #[command(flatten)]
        table: Table,
        /// - or +
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        sign: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check one identity for all sizes up to n
    Verify {
        suite: String,
        #[command(flatten)]
        table: Table,
        #[command(flatten)]
        common: Common,
    },
    /// List the semistandard tableaux of a shape and weight
    Tableaux {
        /// r-tuple of partitions, e.g. [[2,1],[],[1]]
        #[arg(long)]
        shape: String,
        /// Letter multiplicities, e.g. [2,1]
        #[arg(long)]
        weight: String,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(String),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidPartition(_)
            | Error::UnsupportedOrder(_)
            | Error::SizeMismatch(..)
            | Error::LevelMismatch(..)
            | Error::OracleScale(_)
            | Error::Precondition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Assertion(e.to_string()),
        }
    }
}

fn config(t: &Table) -> Result<EngineConfig, Failure> {
    let order: TotalOrder = t.order.parse()?;
    let conjugate: ConjugateSlot = t.conjugate.parse()?;
    if t.r == 0 {
        return Err(Failure::Usage("--r must be at least 1".into()));
    }
    Ok(EngineConfig { order, conjugate })
}

fn setup(common: &Common) -> Result<Format, Failure> {
    if let Some(j) = common.jobs {
        if j == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Failure::Assertion(e.to_string()))?;
    }
    Ok(common.format.parse()?)
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Failure::Assertion(e.to_string()))
        }
    }
}

fn pretty_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn cmd_kostka(table: &Table, sign: &str, common: &Common) -> Result<bool, Failure> {
    let format = setup(common)?;
    let sign: Sign = sign.parse()?;
    let cfg = config(table)?;
    let t = kostka_table(table.n, table.r, sign, cfg)?;
    emit(common, &emit_kostka(&t, format))?;
    Ok(true)
}

fn cmd_verify(suite: &str, table: &Table, common: &Common) -> Result<bool, Failure> {
    let format = setup(common)?;
    let suite: Suite = suite.parse()?;
    let cfg = config(table)?;
    let report = verify::run(suite, table.n, table.r, cfg)?;
    let text = match format {
        Format::Json => pretty_json(&serde_json::to_value(&report).expect("plain data")),
        Format::Text => {
            let mut s = format!(
                "{} n<={} r={} order={} conjugate={}: {:?}, {} checked, {} failed\n",
                report.identity, report.n, report.r, report.order, report.conjugate, report.status, report.checked, report.failed
            );
            if let Some(w) = &report.witness {
                let _ = writeln!(s, "witness: {w}");
            }
            for note in &report.notes {
                let _ = writeln!(s, "note: {note}");
            }
            s
        }
        Format::Csv => format!(
            "identity,n,r,order,conjugate,status,checked,failed\n{},{},{},{},{},{},{},{}\n",
            report.identity,
            report.n,
            report.r,
            report.order,
            report.conjugate,
            serde_json::to_value(report.status).expect("plain").as_str().unwrap_or(""),
            report.checked,
            report.failed
        ),
        Format::Latex => return Err(Failure::Usage("latex output is only available for kostka tables".into())),
    };
    emit(common, &text)?;
    Ok(report.passed())
}

fn cmd_tableaux(shape: &str, weight: &str, common: &Common) -> Result<bool, Failure> {
    let format = setup(common)?;
    let shape = parse_multipartition(shape)?;
    let weight = parse_weight(weight)?;
    let is_partition = weight.windows(2).all(|w| w[0] >= w[1]);
    let mut rows = Vec::new();
    for t in enumerate_sst_multi(&shape, &weight) {
        let skew = multi_to_skew(&t);
        let th = if is_partition || weight.iter().all(|&w| w <= 1) { Some(theta(&t)) } else { None };
        let (rect, charge) = match th {
            Some(Ok(th)) => (Some(th.rectified), Some(th.charge)),
            _ => (Some(kostka_core::tableaux::rectify(&skew)), None),
        };
        rows.push((t, word(&skew), kostka_core::tableaux::is_lattice(&word(&skew)), rect.expect("rectified"), charge));
    }
    let text = match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(t, w, lattice, rect, charge)| {
                    json!({
                        "tableau": encode_multi_tableau(t),
                        "word": w,
                        "lattice": lattice,
                        "rectified": encode_tableau(rect),
                        "charge": charge,
                    })
                })
                .collect();
            pretty_json(&json!({"shape": shape, "weight": weight, "tableaux": items}))
        }
        Format::Text => {
            let mut s = format!("shape {shape} weight {weight:?}: {} tableaux\n", rows.len());
            for (k, (t, w, lattice, rect, charge)) in rows.iter().enumerate() {
                let charge = charge.map_or("-".to_string(), |c| c.to_string());
                let words: Vec<String> = w.iter().map(u32::to_string).collect();
                let _ = writeln!(
                    s,
                    "\n#{} word {} lattice {} rectified {} charge {charge}",
                    k + 1,
                    words.join(" "),
                    if *lattice { "yes" } else { "no" },
                    rect.shape()
                );
                for (i, c) in t.components().iter().enumerate() {
                    let grid = c.pretty();
                    let _ = writeln!(s, "({})", i + 1);
                    s.push_str(if grid.is_empty() { "  empty\n" } else { &grid });
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("index,word,lattice,rectified,charge\n");
            for (k, (_, w, lattice, rect, charge)) in rows.iter().enumerate() {
                let words: Vec<String> = w.iter().map(u32::to_string).collect();
                let charge = charge.map_or(String::new(), |c| c.to_string());
                let nu: &Partition = rect.shape().outer();
                let _ = writeln!(s, "{},{},{},\"{}\",{charge}", k + 1, words.join(" "), lattice, nu);
            }
            s
        }
        Format::Latex => return Err(Failure::Usage("latex output is only available for kostka tables".into())),
    };
    emit(common, &text)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Kostka { table, sign, common } => cmd_kostka(table, sign, common),
        Command::Verify { suite, table, common } => cmd_verify(suite, table, common),
        Command::Tableaux { shape, weight, common } => cmd_tableaux(shape, weight, common),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Assertion(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
