//! `eccidx`: eccentricity- and distance-based graph invariants from the
//! command line.
//!
//! Exit codes: 0 on success, 1 when a claim has a counterexample or a
//! bookkeeping identity fails, 2 on usage, parse or input errors.

mod input;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ecc_core::enumerate::{collect_graph6, SweepError, SweepSpec};
use ecc_core::families::FamilySpec;
use ecc_core::theorems::{hunt_with_verdicts, parse_theorem_list, CheckReport, HuntOutcome};
use ecc_core::ud::{ud_certificate, UdCertificate};
use ecc_core::{all_pairs_distances, emit_graph6, Error, InvariantReport};

use input::{parse_records, read_source, Record};

#[derive(Parser)]
#[command(name = "eccidx", version, about = "Eccentricity-based topological indices of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; json writes one object per line.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    /// Worker threads for sweeps (default: available cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,

    /// Seed for random sweeps that do not name one.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Write results here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<String>,

    /// Sweep counts and equality cases on stderr; every decided verdict in
    /// json output of `verify`.
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report for every graph in the inputs (graph6 lines or
    /// `n m` edge-list blocks; stdin when no file is given).
    Invariants { files: Vec<String> },
    /// Build one graph, e.g. `ak:2`, `cartesian(path:3,cycle:5)`, `thm29:n=10,np=6`.
    Family { spec: String },
    /// List a sweep as graph6, e.g. `trees:2..10`, `diam2:n=9,count=100,seed=7`.
    Enumerate { sweep: String },
    /// Run claims over a sweep and report counterexamples.
    Verify {
        #[arg(long)]
        sweep: String,
        /// Comma-separated ids, `all-unary`, or `C2.8` for both parts.
        #[arg(long)]
        theorems: String,
    },
    /// Universally diametrical certificate for every graph in the inputs.
    Ud { files: Vec<String> },
}

const OK: u8 = 0;
const COUNTEREXAMPLE: u8 = 1;
const BAD_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("eccidx: cannot create {path}: {e}");
                return ExitCode::from(BAD_INPUT);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(out);
    let code = match run(&cli, &mut out).and_then(|code| out.flush().map(|_| code)) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => OK,
        Err(e) => {
            eprintln!("eccidx: {e}");
            BAD_INPUT
        }
    };
    ExitCode::from(code)
}

fn run(cli: &Cli, out: &mut dyn Write) -> io::Result<u8> {
    let workers = cli.workers.map_or_else(
        || std::thread::available_parallelism().map_or(1, |n| n.get()),
        |w| w as usize,
    );
    match &cli.command {
        Command::Invariants { files } => per_graph(cli, files, out, invariants_row),
        Command::Ud { files } => per_graph(cli, files, out, ud_row),
        Command::Family { spec } => family(cli, spec, out),
        Command::Enumerate { sweep } => enumerate(cli, sweep, workers, out),
        Command::Verify { sweep, theorems } => verify(cli, sweep, theorems, workers, out),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> io::Result<u8> {
    eprintln!("eccidx: {msg}");
    Ok(BAD_INPUT)
}

/// A per-graph output row: CSV header and fields, or a JSON object.
struct Row {
    header: Vec<&'static str>,
    fields: Vec<String>,
    json: serde_json::Value,
}

fn per_graph(
    cli: &Cli,
    files: &[String],
    out: &mut dyn Write,
    row: fn(&Record, &ecc_core::Graph) -> Result<Row, Error>,
) -> io::Result<u8> {
    let sources: Vec<&str> = if files.is_empty() {
        vec!["-"]
    } else {
        files.iter().map(String::as_str).collect()
    };
    let mut rows = Vec::new();
    let mut code = OK;
    for source in sources {
        let text = match read_source(source) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("eccidx: {source}: {e}");
                code = BAD_INPUT;
                continue;
            }
        };
        for rec in parse_records(source, &text) {
            let result = rec.graph.as_ref().map_err(Clone::clone).and_then(|g| row(&rec, g));
            let r = match result {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("eccidx: {}: {e}", rec.location);
                    code = BAD_INPUT;
                    continue;
                }
            };
            rows.push(r);
        }
    }
    match cli.format {
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(out);
            if let Some(first) = rows.first() {
                csv.write_record(&first.header)?;
            }
            for r in &rows {
                csv.write_record(&r.fields)?;
            }
            csv.flush()?;
        }
        Format::Json => {
            for r in &rows {
                writeln!(out, "{}", r.json)?;
            }
        }
    }
    Ok(code)
}

fn scalar(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Prefixes `location` and `graph6` to a serialized object.
fn located<T: Serialize>(rec: &Record, g6: &str, body: &T) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    obj.insert("location".into(), rec.location.clone().into());
    obj.insert("graph6".into(), g6.into());
    if let serde_json::Value::Object(fields) = serde_json::to_value(body).expect("serializable") {
        obj.extend(fields);
    }
    obj.into()
}

fn invariants_row(rec: &Record, g: &ecc_core::Graph) -> Result<Row, Error> {
    let d = all_pairs_distances(g)?;
    let report = InvariantReport::from_distances(g, &d);
    let g6 = emit_graph6(g);
    let json = located(rec, &g6, &report);
    let mut header = vec!["location", "graph6"];
    header.extend(InvariantReport::CSV_HEADER);
    let fields = header.iter().map(|k| scalar(&json[*k])).collect();
    Ok(Row { header, fields, json })
}

fn ud_row(rec: &Record, g: &ecc_core::Graph) -> Result<Row, Error> {
    let d = all_pairs_distances(g)?;
    let cert: UdCertificate = ud_certificate(&d);
    let g6 = emit_graph6(g);
    let (u, v) = cert
        .pair
        .map_or((String::new(), String::new()), |(u, v)| (u.to_string(), v.to_string()));
    Ok(Row {
        header: vec!["location", "graph6", "is_ud", "u", "v", "diam", "failed_pairs"],
        fields: vec![
            rec.location.clone(),
            g6.clone(),
            cert.is_ud.to_string(),
            u,
            v,
            cert.diam.to_string(),
            cert.failures.len().to_string(),
        ],
        json: located(rec, &g6, &cert),
    })
}

fn family(cli: &Cli, spec: &str, out: &mut dyn Write) -> io::Result<u8> {
    let built = spec.parse::<FamilySpec>().and_then(|s| Ok((s.build()?, s)));
    let (g, parsed) = match built {
        Ok(x) => x,
        Err(e) => return usage_error(e),
    };
    let g6 = emit_graph6(&g);
    match cli.format {
        Format::Csv => writeln!(out, "{g6}")?,
        Format::Json => {
            let obj = serde_json::json!({
                "spec": parsed.to_string(),
                "graph6": g6,
                "n": g.order(),
                "m": g.size(),
            });
            writeln!(out, "{obj}")?;
        }
    }
    Ok(OK)
}

fn enumerate(cli: &Cli, sweep: &str, workers: usize, out: &mut dyn Write) -> io::Result<u8> {
    let spec = match SweepSpec::parse_with_default_seed(sweep, cli.seed) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let (graphs, summary) = match collect_graph6(&spec, workers) {
        Ok(x) => x,
        Err(e) => return usage_error(e),
    };
    for g6 in &graphs {
        match cli.format {
            Format::Csv => writeln!(out, "{g6}")?,
            Format::Json => writeln!(out, "{}", serde_json::json!({ "graph6": g6 }))?,
        }
    }
    if cli.verbose {
        eprintln!(
            "eccidx: {spec}: {} graphs, {} filtered out, {:.2?}",
            summary.visited, summary.filtered, summary.elapsed
        );
    }
    Ok(OK)
}

fn verify(
    cli: &Cli,
    sweep: &str,
    theorems: &str,
    workers: usize,
    out: &mut dyn Write,
) -> io::Result<u8> {
    let spec = match SweepSpec::parse_with_default_seed(sweep, cli.seed) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let theorems = match parse_theorem_list(theorems) {
        Ok(t) => t,
        Err(e) => return usage_error(e),
    };
    let keep_verdicts = cli.verbose && cli.format == Format::Json;
    let outcome: HuntOutcome = match hunt_with_verdicts(&spec, &theorems, workers, keep_verdicts) {
        Ok(o) => o,
        Err(SweepError::Visitor { graph6, source }) => {
            eprintln!("eccidx: on {graph6}: {source}");
            return Ok(COUNTEREXAMPLE);
        }
        Err(e) => return usage_error(e),
    };

    match cli.format {
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *out);
            csv.write_record(CheckReport::CSV_HEADER)?;
            for r in &outcome.reports {
                csv.write_record(r.csv_record())?;
            }
            csv.flush()?;
            // the table has counts only; counterexamples go to stderr in full
            for r in &outcome.reports {
                for v in &r.counterexamples {
                    eprintln!("counterexample {} {} {}", v.theorem_id, v.graph_id, v.detail);
                }
            }
        }
        Format::Json => {
            for v in &outcome.verdicts {
                writeln!(out, "{}", serde_json::json!({ "verdict": v }))?;
            }
            for r in &outcome.reports {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
    }
    if cli.verbose {
        eprintln!(
            "eccidx: {spec}: {} graphs, {} filtered out, {:.2?}",
            outcome.summary.visited, outcome.summary.filtered, outcome.summary.elapsed
        );
        for r in &outcome.reports {
            if !r.equality_cases.is_empty() {
                let cases: Vec<&str> = r.equality_cases.iter().map(String::as_str).collect();
                eprintln!("eccidx: {} equality cases: {}", r.theorem_id, cases.join(" "));
            }
        }
    }
    Ok(if outcome.counterexample_count() == 0 {
        OK
    } else {
        COUNTEREXAMPLE
    })
}
