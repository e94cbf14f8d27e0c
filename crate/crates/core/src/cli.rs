//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code: 0 on success, 1 when a
//! formula disagrees with the oracle or a suite fails, 2 on bad input.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic::{CodeSpace, CyclicCode};
use crate::error::Error;
use crate::oracle::{generator_matrix, Oracle};
use crate::poly::Poly;
use crate::trace::TraceRepr;
use crate::verify::{self, SuiteReport};

/// Largest alphabet accepted on the command line.
pub const MAX_Q: u64 = 1 << 12;
/// Largest extension field for the trace suites.
pub const MAX_TRACE_FIELD: u64 = 1 << 16;
/// Exhaustive pair checks run only up to this many codes.
const EXHAUSTIVE_PAIR_CODES: u64 = 256;

#[derive(Parser, Debug)]
#[command(
    name = "cyclic-hull",
    version,
    about = "Hulls, LCD and LCP tests for cyclic codes over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (defaults to table for listings, json for reports).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for enumeration and suites (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Length {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct Pair {
    #[command(flatten)]
    length: Length,
    /// Generator of C, comma-separated coefficient codes, lowest degree first.
    #[arg(long)]
    gen_c: String,
    /// Generator of D.
    #[arg(long)]
    gen_d: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^n - 1 into minimal polynomials.
    Factor(Length),
    /// List the q-cyclotomic cosets modulo n.
    Cosets(Length),
    /// Classify every cyclic code of length n.
    Classify {
        #[command(flatten)]
        length: Length,
        /// Keep only codes with this hull dimension.
        #[arg(long)]
        hull_dim: Option<usize>,
        /// Keep only LCD codes.
        #[arg(long)]
        lcd_only: bool,
    },
    /// Hull dimension of one code, checked against the oracle.
    Hull {
        #[command(flatten)]
        length: Length,
        #[arg(long)]
        gen: String,
    },
    /// Decide whether (C, D) is a linear complementary pair.
    Lcp(Pair),
    /// Dimension of the intersection of two codes.
    Intersect(Pair),
    /// Run the trace-representation suites for n = q^m - 1.
    TraceCheck {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        /// Random multi-term specs for the vanishing suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run verification suites for a length n or a tower (q, m).
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long, conflicts_with = "m", required_unless_present = "m")]
        n: Option<usize>,
        #[arg(long)]
        m: Option<u32>,
        /// Random pairs or specs per sampled suite.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// One row of `classify` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationRecord {
    pub generator: Vec<u32>,
    pub dim: usize,
    pub bz_dual: Vec<usize>,
    pub hull_dim: usize,
    pub lcd: bool,
    pub one_dim_hull: bool,
}

impl ClassificationRecord {
    pub fn of(code: &CyclicCode) -> Self {
        let hull_dim = code.hull_dimension();
        ClassificationRecord {
            generator: code.generator().codes(),
            dim: code.dim(),
            bz_dual: code.basic_dual_zero().to_vec(),
            hull_dim,
            lcd: code.is_lcd(),
            one_dim_hull: code.one_dim_hull().is_some(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyOutput {
    pub q: u64,
    pub n: usize,
    pub records: Vec<ClassificationRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorRow {
    pub leader: usize,
    pub coset: Vec<usize>,
    pub size: usize,
    pub factor: Vec<u32>,
    pub polynomial: String,
    pub self_reciprocal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorOutput {
    pub q: u64,
    pub n: usize,
    pub factors: Vec<FactorRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosetRow {
    pub leader: usize,
    pub elements: Vec<usize>,
    pub size: usize,
    pub neg_pair: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosetOutput {
    pub q: u64,
    pub n: usize,
    pub cosets: Vec<CosetRow>,
}

/// Report for `hull`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeReport {
    pub q: u64,
    pub n: usize,
    pub generator: Vec<u32>,
    pub dim: usize,
    pub bz_dual: Vec<usize>,
    pub hull_dim: usize,
    pub lcd: bool,
    pub oracle_dim: usize,
    pub oracle_hull_dim: usize,
    pub agree: bool,
}

/// Per-code part of the pair reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSummary {
    pub generator: Vec<u32>,
    pub dim: usize,
    pub bz_dual: Vec<usize>,
    pub hull_dim: usize,
    pub lcd: bool,
}

impl CodeSummary {
    fn of(code: &CyclicCode) -> Self {
        CodeSummary {
            generator: code.generator().codes(),
            dim: code.dim(),
            bz_dual: code.basic_dual_zero().to_vec(),
            hull_dim: code.hull_dimension(),
            lcd: code.is_lcd(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LcpReport {
    pub q: u64,
    pub n: usize,
    pub c: CodeSummary,
    pub d: CodeSummary,
    pub lcp: bool,
    pub generators_complementary: bool,
    pub oracle_lcp: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectReport {
    pub q: u64,
    pub n: usize,
    pub c: CodeSummary,
    pub d: CodeSummary,
    pub intersection_dim: usize,
    pub intersection_generator: Vec<u32>,
    pub oracle_intersection_dim: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteOutput {
    pub q: u64,
    pub n: usize,
    pub m: Option<u32>,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

enum Failure {
    Usage(String),
    Disagree,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` (or `--out`) and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut buf = Vec::new();
    let outcome = execute(&cli, &mut buf);
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&buf)),
        None => out.write_all(&buf),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 2;
    }
    match outcome {
        Ok(()) => 0,
        Err(Failure::Disagree) => {
            let _ = writeln!(err, "verification failed: formula and oracle disagree");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| Failure::Usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Factor(len) => factor(len, cli.format.unwrap_or(Format::Table), out),
        Command::Cosets(len) => cosets(len, cli.format.unwrap_or(Format::Table), out),
        Command::Classify {
            length,
            hull_dim,
            lcd_only,
        } => classify(
            length,
            *hull_dim,
            *lcd_only,
            cli.format.unwrap_or(Format::Table),
            out,
        ),
        Command::Hull { length, gen } => hull(length, gen, cli.format.unwrap_or(Format::Json), out),
        Command::Lcp(pair) => lcp(pair, cli.format.unwrap_or(Format::Json), out),
        Command::Intersect(pair) => intersect(pair, cli.format.unwrap_or(Format::Json), out),
        Command::TraceCheck {
            q,
            m,
            samples,
            seed,
        } => {
            let trace = trace_repr(*q, *m)?;
            let suites = verify::trace_suites(&trace, *samples, *seed)?;
            suite_output(
                *q,
                trace.space().n(),
                Some(*m),
                suites,
                cli.format.unwrap_or(Format::Json),
                out,
            )
        }
        Command::Verify {
            q,
            n,
            m,
            samples,
            seed,
        } => verify_cmd(
            *q,
            *n,
            *m,
            *samples,
            *seed,
            cli.format.unwrap_or(Format::Json),
            out,
        ),
    })
}

fn space(len: &Length) -> Result<Arc<CodeSpace>, Failure> {
    check_q(len.q)?;
    Ok(CodeSpace::new(len.q, len.n)?)
}

fn check_q(q: u64) -> Outcome {
    if q > MAX_Q {
        return Err(Failure::Usage(format!(
            "q = {q} exceeds the supported bound {MAX_Q}"
        )));
    }
    Ok(())
}

fn trace_repr(q: u64, m: u32) -> Result<TraceRepr, Failure> {
    check_q(q)?;
    if m == 0 {
        return Err(Error::ZeroDegree.into());
    }
    match q.checked_pow(m) {
        Some(size) if size <= MAX_TRACE_FIELD => Ok(TraceRepr::for_qm(q, m)?),
        _ => Err(Failure::Usage(format!(
            "q^m must not exceed {MAX_TRACE_FIELD} for the trace suites"
        ))),
    }
}

fn code(space: &Arc<CodeSpace>, text: &str) -> Result<CyclicCode, Failure> {
    let gen = Poly::parse(text, space.field())?;
    Ok(space.code_from_generator(&gen)?)
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn write_table(out: &mut Vec<u8>, headers: &[&str], rows: &[Vec<String>]) -> Outcome {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(headers.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn write_csv(out: &mut Vec<u8>, headers: &[&str], rows: &[Vec<String>]) -> Outcome {
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Failure::Usage(format!("csv error: {e}"));
    w.write_record(headers).map_err(csv_err)?;
    for row in rows {
        w.write_record(row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(out: &mut Vec<u8>, value: &T) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn emit<T: Serialize>(
    out: &mut Vec<u8>,
    format: Format,
    value: &T,
    headers: &[&str],
    rows: &[Vec<String>],
) -> Outcome {
    match format {
        Format::Json => write_json(out, value),
        Format::Table => write_table(out, headers, rows),
        Format::Csv => write_csv(out, headers, rows),
    }
}

/// Single-object reports: a key/value table, or a one-row CSV.
fn emit_report<T: Serialize>(out: &mut Vec<u8>, format: Format, value: &T) -> Outcome {
    let json = serde_json::to_value(value).map_err(|e| Failure::Usage(e.to_string()))?;
    let fields: Vec<(String, String)> = match json.as_object() {
        Some(map) => map.iter().map(|(k, v)| (k.clone(), flat(v))).collect(),
        None => vec![("value".into(), flat(&json))],
    };
    match format {
        Format::Json => write_json(out, value),
        Format::Table => {
            let rows: Vec<Vec<String>> = fields.into_iter().map(|(k, v)| vec![k, v]).collect();
            write_table(out, &["field", "value"], &rows)
        }
        Format::Csv => {
            let headers: Vec<&str> = fields.iter().map(|(k, _)| k.as_str()).collect();
            let row: Vec<String> = fields.iter().map(|(_, v)| v.clone()).collect();
            write_csv(out, &headers, &[row])
        }
    }
}

fn flat(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(items) if items.iter().all(|x| x.is_number()) => items
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        other => other.to_string(),
    }
}

fn factor(len: &Length, format: Format, out: &mut Vec<u8>) -> Outcome {
    let space = space(len)?;
    let ring = space.ring();
    let table = space.table();
    let mut factors = Vec::new();
    for c in table.cosets() {
        let f = space.minpoly(c.leader())?;
        factors.push(FactorRow {
            leader: c.leader(),
            coset: c.elements().to_vec(),
            size: c.size(),
            factor: f.codes(),
            polynomial: f.to_string(),
            self_reciprocal: ring.is_self_reciprocal(f)?,
        });
    }
    let rows: Vec<Vec<String>> = factors
        .iter()
        .map(|r| {
            vec![
                r.leader.to_string(),
                r.size.to_string(),
                r.self_reciprocal.to_string(),
                r.polynomial.clone(),
                join(&r.factor),
                join(&r.coset),
            ]
        })
        .collect();
    let output = FactorOutput {
        q: len.q,
        n: len.n,
        factors,
    };
    emit(
        out,
        format,
        &output,
        &[
            "leader",
            "size",
            "self_reciprocal",
            "polynomial",
            "factor",
            "coset",
        ],
        &rows,
    )
}

fn cosets(len: &Length, format: Format, out: &mut Vec<u8>) -> Outcome {
    let space = space(len)?;
    let table = space.table();
    let mut cosets = Vec::new();
    for c in table.cosets() {
        cosets.push(CosetRow {
            leader: c.leader(),
            elements: c.elements().to_vec(),
            size: c.size(),
            neg_pair: table.neg_pair(c.leader())?,
        });
    }
    let rows: Vec<Vec<String>> = cosets
        .iter()
        .map(|r| {
            vec![
                r.leader.to_string(),
                r.size.to_string(),
                r.neg_pair.to_string(),
                join(&r.elements),
            ]
        })
        .collect();
    let output = CosetOutput {
        q: len.q,
        n: len.n,
        cosets,
    };
    emit(
        out,
        format,
        &output,
        &["leader", "size", "neg_pair", "elements"],
        &rows,
    )
}

/// All `2^t` classification records in canonical order.
pub fn classify_records(space: &Arc<CodeSpace>) -> crate::Result<Vec<ClassificationRecord>> {
    let count = space.code_count()?;
    Ok((0..count)
        .into_par_iter()
        .map(|mask| ClassificationRecord::of(&space.code_from_factor_mask(mask)))
        .collect())
}

fn classify(
    len: &Length,
    hull_dim: Option<usize>,
    lcd_only: bool,
    format: Format,
    out: &mut Vec<u8>,
) -> Outcome {
    let space = space(len)?;
    let records = classify_records(&space).map_err(|e| match e {
        Error::TooManyLeaders(t) => Failure::Usage(format!(
            "x^{}-1 has {t} irreducible factors over F_{}; classify enumerates all 2^t codes and \
             supports at most 24 factors, so pick a length with fewer cyclotomic cosets",
            len.n, len.q
        )),
        other => other.into(),
    })?;
    let records: Vec<ClassificationRecord> = records
        .into_iter()
        .filter(|r| hull_dim.is_none_or(|k| r.hull_dim == k) && (!lcd_only || r.lcd))
        .collect();
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                join(&r.generator),
                r.dim.to_string(),
                join(&r.bz_dual),
                r.hull_dim.to_string(),
                r.lcd.to_string(),
                r.one_dim_hull.to_string(),
            ]
        })
        .collect();
    let output = ClassifyOutput {
        q: len.q,
        n: len.n,
        records,
    };
    emit(
        out,
        format,
        &output,
        &[
            "generator",
            "dim",
            "bz_dual",
            "hull_dim",
            "lcd",
            "one_dim_hull",
        ],
        &rows,
    )
}

fn hull(len: &Length, gen: &str, format: Format, out: &mut Vec<u8>) -> Outcome {
    let space = space(len)?;
    let c = code(&space, gen)?;
    let oracle = Oracle::new(space.field());
    let g = generator_matrix(&c);
    let oracle_dim = oracle.dim(&g);
    let oracle_hull_dim = oracle.hull_dim(&g);
    let hull_dim = c.hull_dimension();
    let report = CodeReport {
        q: len.q,
        n: len.n,
        generator: c.generator().codes(),
        dim: c.dim(),
        bz_dual: c.basic_dual_zero().to_vec(),
        hull_dim,
        lcd: c.is_lcd(),
        oracle_dim,
        oracle_hull_dim,
        agree: hull_dim == oracle_hull_dim
            && c.dim() == oracle_dim
            && c.is_lcd() == (oracle_hull_dim == 0),
    };
    emit_report(out, format, &report)?;
    if report.agree {
        Ok(())
    } else {
        Err(Failure::Disagree)
    }
}

fn pair(p: &Pair) -> Result<(Arc<CodeSpace>, CyclicCode, CyclicCode), Failure> {
    let space = space(&p.length)?;
    let c = code(&space, &p.gen_c)?;
    let d = code(&space, &p.gen_d)?;
    Ok((space, c, d))
}

fn lcp(p: &Pair, format: Format, out: &mut Vec<u8>) -> Outcome {
    let (space, c, d) = pair(p)?;
    let oracle = Oracle::new(space.field());
    let lcp = c.is_lcp(&d)?;
    let generators_complementary = c.generators_complementary(&d)?;
    let oracle_lcp = oracle.is_complementary_pair(&generator_matrix(&c), &generator_matrix(&d))?;
    let report = LcpReport {
        q: p.length.q,
        n: p.length.n,
        c: CodeSummary::of(&c),
        d: CodeSummary::of(&d),
        lcp,
        generators_complementary,
        oracle_lcp,
        agree: lcp == oracle_lcp && lcp == generators_complementary,
    };
    emit_report(out, format, &report)?;
    if report.agree {
        Ok(())
    } else {
        Err(Failure::Disagree)
    }
}

fn intersect(p: &Pair, format: Format, out: &mut Vec<u8>) -> Outcome {
    let (space, c, d) = pair(p)?;
    let oracle = Oracle::new(space.field());
    let dim = c.intersection_dimension(&d)?;
    let meet = c.intersection_code(&d)?;
    let oracle_dim = oracle.intersect_dim(&generator_matrix(&c), &generator_matrix(&d))?;
    let report = IntersectReport {
        q: p.length.q,
        n: p.length.n,
        c: CodeSummary::of(&c),
        d: CodeSummary::of(&d),
        intersection_dim: dim,
        intersection_generator: meet.generator().codes(),
        oracle_intersection_dim: oracle_dim,
        agree: dim == oracle_dim && meet.dim() == oracle_dim,
    };
    emit_report(out, format, &report)?;
    if report.agree {
        Ok(())
    } else {
        Err(Failure::Disagree)
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    q: u64,
    n: Option<usize>,
    m: Option<u32>,
    samples: usize,
    seed: u64,
    format: Format,
    out: &mut Vec<u8>,
) -> Outcome {
    match (n, m) {
        (_, Some(m)) => {
            let trace = trace_repr(q, m)?;
            let mut suites = verify::trace_suites(&trace, samples.max(1000), seed)?;
            suites.push(verify::one_dim_hull_census(trace.space())?);
            suite_output(q, trace.space().n(), Some(m), suites, format, out)
        }
        (Some(n), None) => {
            let space = space(&Length { q, n })?;
            let mut suites = verify::length_suites(&space, samples, seed)?;
            if space.code_count()? <= EXHAUSTIVE_PAIR_CODES {
                suites.push(verify::lcp_exhaustive(&space)?);
            }
            suite_output(q, n, None, suites, format, out)
        }
        (None, None) => Err(Failure::Usage("verify needs --n or --m".into())),
    }
}

fn suite_output(
    q: u64,
    n: usize,
    m: Option<u32>,
    suites: Vec<SuiteReport>,
    format: Format,
    out: &mut Vec<u8>,
) -> Outcome {
    let passed = suites.iter().all(SuiteReport::passed);
    let rows: Vec<Vec<String>> = suites
        .iter()
        .map(|s| {
            vec![
                s.name.clone(),
                s.checked.to_string(),
                s.failures.to_string(),
                s.counts
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" "),
                s.counterexample.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let output = SuiteOutput {
        q,
        n,
        m,
        passed,
        suites,
    };
    emit(
        out,
        format,
        &output,
        &["suite", "checked", "failures", "counts", "counterexample"],
        &rows,
    )?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Disagree)
    }
}
