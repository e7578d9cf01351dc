//! Command-line front end: argument parsing, reports, and the reference
//! table of nontrivial class counts.
//!
//! Every command writes to caller-supplied streams and returns its exit code,
//! so the binary is a one-line wrapper and tests can drive the same paths.
//!
//! Exit codes: 0 success or match, 1 table mismatch, 2 usage or input error,
//! 3 refused by a resource guard (length ceiling, class cap, unfinished run).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::class::{enumerate_class, palindromic_split, EquicorrClassReport};
use crate::compose::{compose, stacked_triviality, nontrivially_equicorrelational};
use crate::error::Error;
use crate::literal::{format_literal, parse_literal};
use crate::poly::factor;
use crate::search::{
    checkpoint, search, SearchOptions, SearchOutcome, VolumeDistribution, DEFAULT_CEILING,
};
use crate::seq::IntLaurentSeq;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

/// Lengths verified when `verify-table` is given no range.
pub const DEFAULT_VERIFY_RANGE: RangeInclusive<usize> = 1..=21;

/// Rows above this length are labelled "extended" in verification output.
pub const DESK_SCALE_MAX: usize = 25;

const TABLE_ROWS: [(usize, &str); 44] = [
    (1, ""),
    (2, ""),
    (3, ""),
    (4, ""),
    (5, ""),
    (6, ""),
    (7, ""),
    (8, ""),
    (9, "1 [2]"),
    (10, ""),
    (11, ""),
    (12, "8 [2]"),
    (13, ""),
    (14, ""),
    (15, "14 [2]"),
    (16, "12 [2]"),
    (17, "1 [2]"),
    (18, "42 [2]"),
    (19, ""),
    (20, "44 [2]"),
    (21, "67 [2]"),
    (22, ""),
    (23, ""),
    (24, "422 [2]"),
    (25, "36 [2]"),
    (26, ""),
    (27, "348 [2] + 1 [4]"),
    (28, "180 [2]"),
    (29, ""),
    (30, "1214 [2]"),
    (31, "26 [2]"),
    (32, "1136 [2]"),
    (33, "1105 [2]"),
    (34, "30 [2]"),
    (35, "349 [2]"),
    (36, "8230 [2] + 16 [4]"),
    (37, ""),
    (38, ""),
    (39, "4102 [2]"),
    (40, "6288 [2]"),
    (41, "4[2]"),
    (42, "17574 [2]"),
    (43, "22 [2]"),
    (44, "3104 [2]"),
];

/// Published frequencies of nontrivial binary classes by volume, lengths
/// 1 to 44. Rows are kept as printed; comparisons go through
/// [`VolumeDistribution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownTable {
    rows: BTreeMap<usize, String>,
}

impl KnownTable {
    pub fn published() -> Self {
        Self {
            rows: TABLE_ROWS.iter().map(|(n, s)| (*n, s.to_string())).collect(),
        }
    }

    pub fn row(&self, n: usize) -> Option<&str> {
        self.rows.get(&n).map(String::as_str)
    }

    pub fn expected(&self, n: usize) -> Option<VolumeDistribution> {
        self.row(n)
            .map(|text| VolumeDistribution::parse_notation(n, text).expect("table rows parse"))
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Replaces one row; used to build negative controls.
    pub fn with_row(mut self, n: usize, text: &str) -> Self {
        self.rows.insert(n, text.to_string());
        self
    }
}

impl Default for KnownTable {
    fn default() -> Self {
        Self::published()
    }
}

#[derive(Parser, Debug)]
#[command(name = "equicorr", version, about = "Equicorrelationality of binary and integer sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Find the nontrivial binary classes of one length.
    Search(SearchArgs),
    /// Report the full equicorrelationality class of a sequence.
    Classify(ClassifyArgs),
    /// Build a(z^len b) b(z); with a second pair, decide triviality.
    Compose(ComposeArgs),
    /// Recompute a range of lengths and compare with the published table.
    VerifyTable(VerifyArgs),
    /// Continue a checkpointed search.
    Resume(ResumeArgs),
}

#[derive(Args, Debug, Clone)]
pub struct EngineArgs {
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Longest length searched without --force.
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    pub ceiling: usize,
    /// Search above the ceiling.
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    pub length: usize,
    #[command(flatten)]
    pub engine: EngineArgs,
    /// Compare with the published table.
    #[arg(long)]
    pub verify: bool,
    /// Print the members of every nontrivial class.
    #[arg(long)]
    pub members: bool,
    #[arg(long)]
    pub json: bool,
    /// Record completed shards here so an interrupted run can be resumed.
    #[arg(long)]
    pub checkpoint_dir: Option<PathBuf>,
    /// Write the distribution as CSV (length,volume,count).
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
    /// Stop after this many new shards.
    #[arg(long, hide = true)]
    pub stop_after: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// `+`/`-` string or comma-separated integers, optional `@offset`.
    pub sequence: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ComposeArgs {
    pub a: String,
    pub b: String,
    /// Second pair `c d` to compare against `a b`.
    pub c: Option<String>,
    pub d: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `lo..hi` (inclusive) or a single length.
    pub range: Option<String>,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[arg(long)]
    pub json: bool,
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ResumeArgs {
    #[arg(long)]
    pub checkpoint_dir: PathBuf,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub members: bool,
    #[arg(long)]
    pub json: bool,
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
    #[arg(long, hide = true)]
    pub stop_after: Option<usize>,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let table = KnownTable::published();
    let result = match &cli.command {
        Command::Search(a) => cmd_search(a, &table, out),
        Command::Classify(a) => cmd_classify(a, out),
        Command::Compose(a) => cmd_compose(a, out),
        Command::VerifyTable(a) => cmd_verify_table(a, &table, out),
        Command::Resume(a) => cmd_resume(a, &table, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::AboveCeiling { .. } | Error::TooLong(_) | Error::ClassTooLarge { .. } => EXIT_REFUSED,
        _ => EXIT_USAGE,
    }
}

type CmdResult = crate::error::Result<i32>;

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn emit_json(out: &mut dyn Write, doc: &Value) -> crate::error::Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out).map_err(io)
}

#[derive(Serialize)]
struct CsvRow {
    length: usize,
    volume: usize,
    count: usize,
}

/// Writes distributions as CSV with columns `length,volume,count`; lengths
/// without nontrivial classes contribute no rows.
pub fn write_csv(path: &Path, dists: &[VolumeDistribution]) -> crate::error::Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::Io(e.to_string()))?;
    if dists.iter().all(|d| d.entries.is_empty()) {
        w.write_record(["length", "volume", "count"]).map_err(|e| Error::Io(e.to_string()))?;
    }
    for d in dists {
        for &(volume, count) in &d.entries {
            w.serialize(CsvRow { length: d.length, volume, count })
                .map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    w.flush().map_err(io)
}

fn search_document(out: &SearchOutcome, members: bool, verify: Option<&VolumeDistribution>) -> Value {
    let dist = out.distribution();
    let mut doc = json!({
        "schema": "equicorr.search/1",
        "length": out.n,
        "distribution": dist.notation(),
        "entries": dist.entries.iter().map(|(v, c)| json!({"volume": v, "count": c})).collect::<Vec<_>>(),
        "equivocal": dist.equivocal,
        "canonical": out.canonical,
        "shards": out.shards,
        "shards_done": out.shards_done,
        "complete": out.is_complete(),
    });
    if members {
        doc["classes"] = out
            .classes
            .iter()
            .map(|c| json!(c.members.iter().map(|m| m.to_literal()).collect::<Vec<_>>()))
            .collect();
    }
    if let Some(expected) = verify {
        doc["verify"] = json!({
            "expected": expected.notation(),
            "matches": *expected == dist,
        });
    }
    doc
}

fn report_search(
    outcome: &SearchOutcome,
    table: &KnownTable,
    verify: bool,
    members: bool,
    json_out: bool,
    csv: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let n = outcome.n;
    let expected = if verify { table.expected(n) } else { None };
    if verify && expected.is_none() {
        return Err(Error::Precondition(format!("no published row for length {n}")));
    }
    let dist = outcome.distribution();
    let complete = outcome.is_complete();
    if let Some(path) = csv {
        if complete {
            write_csv(path, std::slice::from_ref(&dist))?;
        }
    }
    if json_out {
        emit_json(out, &search_document(outcome, members, expected.as_ref().filter(|_| complete)))?;
    } else {
        if complete {
            writeln!(out, "{n}: {dist}").map_err(io)?;
        } else {
            writeln!(
                out,
                "{n}: incomplete, {}/{} shards done; continue with `resume`",
                outcome.shards_done, outcome.shards
            )
            .map_err(io)?;
        }
        if members {
            for class in &outcome.classes {
                let lits: Vec<String> = class.members.iter().map(|m| m.to_literal()).collect();
                writeln!(out, "  [{}] {}", class.volume(), lits.join(" ")).map_err(io)?;
            }
        }
        if let (Some(exp), true) = (&expected, complete) {
            let status = if *exp == dist { "match" } else { "MISMATCH" };
            writeln!(out, "published: {exp} ({status})").map_err(io)?;
        }
    }
    Ok(match expected {
        Some(_) if !complete => EXIT_REFUSED,
        Some(exp) if exp != dist => EXIT_MISMATCH,
        _ => EXIT_OK,
    })
}

pub fn cmd_search(args: &SearchArgs, table: &KnownTable, out: &mut dyn Write) -> CmdResult {
    let opts = SearchOptions {
        threads: args.engine.threads,
        ceiling: args.engine.ceiling,
        force: args.engine.force,
        checkpoint_dir: args.checkpoint_dir.clone(),
        max_new_shards: args.stop_after,
    };
    let outcome = search(args.length, &opts)?;
    report_search(&outcome, table, args.verify, args.members, args.json, args.csv.as_deref(), out)
}

pub fn cmd_resume(args: &ResumeArgs, table: &KnownTable, out: &mut dyn Write) -> CmdResult {
    let header = checkpoint::read_manifest(&args.checkpoint_dir)?;
    // The length was admitted when the run started.
    let opts = SearchOptions {
        threads: args.threads,
        ceiling: header.n,
        force: true,
        checkpoint_dir: Some(args.checkpoint_dir.clone()),
        max_new_shards: args.stop_after,
    };
    let outcome = search(header.n, &opts)?;
    report_search(&outcome, table, args.verify, args.members, args.json, args.csv.as_deref(), out)
}

fn parse_range(text: &str) -> crate::error::Result<RangeInclusive<usize>> {
    let bad = || Error::Parse {
        literal: text.to_string(),
        reason: "expected `lo..hi` or a single length".into(),
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

pub fn cmd_verify_table(args: &VerifyArgs, table: &KnownTable, out: &mut dyn Write) -> CmdResult {
    let range = match &args.range {
        Some(r) => parse_range(r)?,
        None => DEFAULT_VERIFY_RANGE,
    };
    let opts = SearchOptions {
        threads: args.engine.threads,
        ceiling: args.engine.ceiling,
        force: args.engine.force,
        ..Default::default()
    };
    // Refuse before doing any work.
    for n in range.clone() {
        if table.row(n).is_none() {
            return Err(Error::Precondition(format!("no published row for length {n}")));
        }
        if n > opts.ceiling && !opts.force {
            return Err(Error::AboveCeiling { n, ceiling: opts.ceiling });
        }
    }
    let mut rows = Vec::new();
    let mut dists = Vec::new();
    let mut mismatches = 0;
    if !args.json {
        writeln!(out, "{:>6}  {:<20}  {:<20}  status", "length", "published", "computed").map_err(io)?;
    }
    for n in range {
        let expected = table.expected(n).expect("checked above");
        let computed = search(n, &opts)?.distribution();
        let matches = expected == computed;
        if !matches {
            mismatches += 1;
        }
        let extended = n > DESK_SCALE_MAX;
        if !args.json {
            let mut status = if matches { "match" } else { "MISMATCH" }.to_string();
            if extended {
                status.push_str(" (extended)");
            }
            writeln!(out, "{n:>6}  {:<20}  {:<20}  {status}", expected.to_string(), computed.to_string())
                .map_err(io)?;
        }
        rows.push(json!({
            "length": n,
            "published": expected.notation(),
            "computed": computed.notation(),
            "matches": matches,
            "extended": extended,
        }));
        dists.push(computed);
    }
    if let Some(path) = &args.csv {
        write_csv(path, &dists)?;
    }
    if args.json {
        emit_json(
            out,
            &json!({
                "schema": "equicorr.verify-table/1",
                "rows": rows,
                "mismatches": mismatches,
            }),
        )?;
    } else {
        writeln!(out, "{} lengths, {} mismatched", rows.len(), mismatches).map_err(io)?;
    }
    Ok(if mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

fn seq_text(f: &IntLaurentSeq) -> String {
    format_literal(f)
}

pub fn cmd_classify(args: &ClassifyArgs, out: &mut dyn Write) -> CmdResult {
    let f = parse_literal(&args.sequence)?;
    if f.is_zero() {
        let report = EquicorrClassReport::zero();
        if args.json {
            emit_json(
                out,
                &json!({
                    "schema": "equicorr.classify/1",
                    "input": "0",
                    "zero": true,
                    "count": report.count.to_string(),
                    "nontrivial": false,
                    "equivocal": false,
                }),
            )?;
        } else {
            writeln!(out, "input: 0\nthe zero sequence is equicorrelational only to itself").map_err(io)?;
        }
        return Ok(EXIT_OK);
    }
    let fact = factor(&f)?;
    let split = palindromic_split(&fact);
    let report = enumerate_class(&split)?;
    let trivial: Vec<String> = report.trivial_reps.iter().map(seq_text).collect();
    let binary: Vec<String> = report.binary_members.iter().map(seq_text).collect();
    let own = f.canonical_trivial();
    let partners: Vec<String> = report
        .binary_members
        .iter()
        .filter(|m| **m != own)
        .map(seq_text)
        .collect();
    if args.json {
        let factors: Vec<Value> = fact
            .factors
            .iter()
            .map(|(g, e)| json!({"factor": seq_text(g), "exponent": e}))
            .collect();
        let pal: Vec<Value> = split
            .palindromic
            .iter()
            .map(|p| json!({"factor": seq_text(&p.factor), "kind": format!("{:?}", p.kind), "exponent": p.exponent}))
            .collect();
        let pairs: Vec<Value> = split
            .pairs
            .iter()
            .map(|p| json!({"g": seq_text(&p.g), "conj_g": seq_text(&p.conj_g), "b": p.b, "c": p.c}))
            .collect();
        emit_json(
            out,
            &json!({
                "schema": "equicorr.classify/1",
                "input": seq_text(&f),
                "zero": false,
                "unit": split.unit,
                "factors": factors,
                "palindromic": pal,
                "pairs": pairs,
                "count": report.count.to_string(),
                "nontrivial": report.nontrivial,
                "trivial_reps": trivial,
                "binary_members": binary,
                "equivocal": f.is_binary() && !partners.is_empty(),
            }),
        )?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "input: {}", seq_text(&f)).map_err(io)?;
    writeln!(
        out,
        "unit: sign {:+}, shift {}, content {}",
        split.unit.sign, split.unit.shift, split.unit.content
    )
    .map_err(io)?;
    writeln!(out, "factors:").map_err(io)?;
    for (g, e) in &fact.factors {
        writeln!(out, "  ({})^{e}", g.render_poly()).map_err(io)?;
    }
    for p in &split.palindromic {
        writeln!(out, "palindromic: ({})^{} {:?}", p.factor.render_poly(), p.exponent, p.kind).map_err(io)?;
    }
    for p in &split.pairs {
        writeln!(
            out,
            "pair: ({})^{} ({})^{}",
            p.g.render_poly(),
            p.b,
            p.conj_g.render_poly(),
            p.c
        )
        .map_err(io)?;
    }
    writeln!(out, "N = {}", report.count).map_err(io)?;
    writeln!(out, "trivial classes: {}", trivial.len()).map_err(io)?;
    for t in &trivial {
        writeln!(out, "  {t}").map_err(io)?;
    }
    writeln!(out, "binary members: {}", binary.len()).map_err(io)?;
    for b in &binary {
        writeln!(out, "  {b}").map_err(io)?;
    }
    let verdict = if !report.nontrivial {
        "unequivocal"
    } else if f.is_binary() && !partners.is_empty() {
        "equivocal"
    } else {
        "nontrivial class, no binary partner"
    };
    writeln!(out, "{verdict}").map_err(io)?;
    Ok(EXIT_OK)
}

pub fn cmd_compose(args: &ComposeArgs, out: &mut dyn Write) -> CmdResult {
    let a = parse_literal(&args.a)?;
    let b = parse_literal(&args.b)?;
    if !a.is_binary() || !b.is_binary() {
        return Err(Error::Precondition("compose expects binary sequences".into()));
    }
    let f = compose(&a, &b, b.len())?;
    let second = match (&args.c, &args.d) {
        (Some(c), Some(d)) => Some((parse_literal(c)?, parse_literal(d)?)),
        (None, None) => None,
        _ => return Err(Error::Precondition("the second pair needs both c and d".into())),
    };
    let Some((c, d)) = second else {
        if args.json {
            emit_json(out, &json!({"schema": "equicorr.compose/1", "composite": seq_text(&f)}))?;
        } else {
            writeln!(out, "{}", seq_text(&f)).map_err(io)?;
        }
        return Ok(EXIT_OK);
    };
    let trivial = stacked_triviality(&a, &b, &c, &d, b.len())?;
    let g = compose(&c, &d, d.len())?;
    debug_assert_eq!(trivial, !nontrivially_equicorrelational(&f, &g));
    let verdict = if trivial { "trivial" } else { "nontrivial" };
    if args.json {
        emit_json(
            out,
            &json!({
                "schema": "equicorr.compose/1",
                "composite": seq_text(&f),
                "other": seq_text(&g),
                "verdict": verdict,
            }),
        )?;
    } else {
        writeln!(out, "{}\n{}\n{verdict}", seq_text(&f), seq_text(&g)).map_err(io)?;
    }
    Ok(EXIT_OK)
}
