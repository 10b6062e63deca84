//! Command-line front end. [`run`] takes explicit streams so it can be driven from tests.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;
use serde_json::json;

use crate::enumerate::{connected_graphs, enumerate_connected};
use crate::error::Error;
use crate::families;
use crate::fracmatch::{
    canonical_stats, canonicalize_traced, extract_half_integral, frac_deficiency_witness,
};
use crate::graph::Graph;
use crate::graph6::{encode_graph6, parse_graph6};
use crate::matching::{brute_force_witness, Flavor, DEFAULT_CAP, MAX_CAP};
use crate::verifier::{evaluate, verify_corpus, CorpusMode, GapRatioRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "matchgap",
    version,
    about = "Matching and fractional matching numbers of small graphs"
)]
struct Cli {
    /// graph6 input file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Limit on n for the 2^n subset searches.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Matching number, fractional matching number, gap and extremal class per graph.
    Stats,
    /// Odd-component and isolated-vertex deficiency witnesses per graph.
    Witness,
    /// Canonical half-integral optimal fractional matching and its statistics per graph.
    Canonical,
    /// Check the bounds and equality characterizations over a corpus.
    Verify {
        /// Use the internal enumerator for connected graphs on N vertices (N <= 8).
        #[arg(long)]
        enumerate: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Connected)]
        mode: Mode,
    },
    /// Print graph6 lines for an extremal family.
    Gen {
        /// triangle-star, c5, k2k3, triangles or connected.
        family_arg: Option<String>,
        k_arg: Option<usize>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Connected,
    Union,
}

impl From<Mode> for CorpusMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Connected => CorpusMode::ConnectedTheorems,
            Mode::Union => CorpusMode::UnionCorollaries,
        }
    }
}

/// Validated options for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub input: String,
    pub format: Format,
    pub jobs: usize,
    pub cap: usize,
}

impl RunConfig {
    fn from_cli(cli: Cli) -> Result<Self, String> {
        let jobs = cli
            .jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        if jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        if cli.cap > MAX_CAP {
            return Err(format!("--cap must be at most {MAX_CAP}"));
        }
        Ok(RunConfig {
            command: cli.command,
            input: cli.input,
            format: cli.format,
            jobs,
            cap: cli.cap,
        })
    }
}

/// Parses `args` (including the program name) and runs the subcommand. Returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    match execute(&config, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(
    config: &RunConfig,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| io::Error::other(e.to_string()))?;
    match &config.command {
        Command::Stats => cmd_stats(config, &pool, stdin, out, err),
        Command::Witness => cmd_witness(config, &pool, stdin, out, err),
        Command::Canonical => cmd_canonical(config, &pool, stdin, out, err),
        Command::Verify { enumerate, mode } => {
            cmd_verify(config, &pool, *enumerate, *mode, stdin, out, err)
        }
        Command::Gen {
            family_arg,
            k_arg,
            family,
            k,
        } => {
            let family = family.clone().or_else(|| family_arg.clone());
            cmd_gen(family.as_deref(), k.or(*k_arg), out, err)
        }
    }
}

/// Graphs read from the configured input, with 1-based line numbers.
struct Input {
    graphs: Vec<(usize, Graph)>,
    failures: usize,
}

fn read_input(config: &RunConfig, stdin: &mut dyn Read, err: &mut dyn Write) -> io::Result<Input> {
    let reader: Box<dyn BufRead + '_> = if config.input == "-" {
        Box::new(BufReader::new(stdin))
    } else {
        Box::new(BufReader::new(File::open(&config.input)?))
    };
    let mut graphs = Vec::new();
    let mut failures = 0;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim_end_matches('\r');
        if text.trim().is_empty() {
            continue;
        }
        match parse_graph6(text) {
            Ok(g) => graphs.push((idx + 1, g)),
            Err(e) => {
                failures += 1;
                writeln!(err, "line {}: {e}", idx + 1)?;
            }
        }
    }
    Ok(Input { graphs, failures })
}

fn input_status(input: &Input) -> i32 {
    if input.failures > 0 {
        EXIT_INPUT
    } else {
        EXIT_OK
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

#[derive(Serialize)]
struct NumberedRecord<'a> {
    line: usize,
    #[serde(flatten)]
    record: &'a GapRatioRecord,
}

const RECORD_COLUMNS: &str =
    "line\tgraph6\tn\talpha\talpha_f_halves\tgap_sixths\tregime\tgap_ok\tratio_ok\tequality_gap\tequality_ratio\tclass";

fn record_tsv(line: usize, r: &GapRatioRecord) -> String {
    let regime = serde_json::to_value(r.regime)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default();
    format!(
        "{line}\t{}\t{}\t{}\t{}\t{}\t{regime}\t{}\t{}\t{}\t{}\t{}",
        r.graph6,
        r.n,
        r.alpha,
        r.alpha_f_halves,
        r.gap_sixths,
        r.gap_ok,
        r.ratio_ok,
        r.equality_gap,
        r.equality_ratio,
        r.class
    )
}

fn halves_text(h: usize) -> String {
    if h % 2 == 0 {
        (h / 2).to_string()
    } else {
        format!("{h}/2")
    }
}

fn sixths_text(s: i64) -> String {
    let g = gcd(s.unsigned_abs(), 6) as i64;
    match 6 / g {
        1 => (s / g).to_string(),
        d => format!("{}/{d}", s / g),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn cmd_stats(
    config: &RunConfig,
    pool: &ThreadPool,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let input = read_input(config, stdin, err)?;
    let records: Vec<GapRatioRecord> =
        pool.install(|| input.graphs.par_iter().map(|(_, g)| evaluate(g)).collect());
    if config.format == Format::Tsv {
        writeln!(out, "{RECORD_COLUMNS}")?;
    }
    for ((line, _), r) in input.graphs.iter().zip(&records) {
        match config.format {
            Format::Json => write_json(
                out,
                &NumberedRecord {
                    line: *line,
                    record: r,
                },
            )?,
            Format::Tsv => writeln!(out, "{}", record_tsv(*line, r))?,
            Format::Human => writeln!(
                out,
                "line {line}: {}  n={}  alpha={}  alpha_f={}  gap={}  class={}",
                r.graph6,
                r.n,
                r.alpha,
                halves_text(r.alpha_f_halves),
                sixths_text(r.gap_sixths),
                r.class
            )?,
        }
    }
    Ok(input_status(&input))
}

pub fn cmd_witness(
    config: &RunConfig,
    pool: &ThreadPool,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let input = read_input(config, stdin, err)?;
    let cap = config.cap;
    let results: Vec<_> = pool.install(|| {
        input
            .graphs
            .par_iter()
            .map(|(_, g)| {
                let odd = brute_force_witness(g, Flavor::OddComponent, cap)?;
                let iso = if cap == DEFAULT_CAP {
                    frac_deficiency_witness(g)?
                } else {
                    brute_force_witness(g, Flavor::IsolatedVertex, cap)?
                };
                Ok::<_, Error>((odd, iso))
            })
            .collect()
    });
    if config.format == Format::Tsv {
        writeln!(
            out,
            "line\tgraph6\todd_set\todd_value\tisolated_set\tisolated_value\terror"
        )?;
    }
    let mut failed = 0;
    for ((line, g), result) in input.graphs.iter().zip(results) {
        let graph6 = encode_graph6(g).unwrap_or_default();
        match result {
            Ok((odd, iso)) => match config.format {
                Format::Json => write_json(
                    out,
                    &json!({"line": line, "graph6": graph6, "odd_component": odd, "isolated_vertex": iso}),
                )?,
                Format::Tsv => writeln!(
                    out,
                    "{line}\t{graph6}\t{}\t{}\t{}\t{}\t",
                    join(odd.set.as_slice()),
                    odd.value,
                    join(iso.set.as_slice()),
                    iso.value
                )?,
                Format::Human => writeln!(
                    out,
                    "line {line}: {graph6}  def(S)={} at S={:?}  def_f(S)={} at S={:?}",
                    odd.value,
                    odd.set.as_slice(),
                    iso.value,
                    iso.set.as_slice()
                )?,
            },
            Err(e) => {
                failed += 1;
                match config.format {
                    Format::Json => write_json(
                        out,
                        &json!({"line": line, "graph6": graph6, "error": e.to_string()}),
                    )?,
                    Format::Tsv => writeln!(out, "{line}\t{graph6}\t\t\t\t\t{e}")?,
                    Format::Human => writeln!(out, "line {line}: {graph6}  error: {e}")?,
                }
            }
        }
    }
    if failed > 0 && failed == input.graphs.len() {
        return Ok(EXIT_INPUT);
    }
    Ok(input_status(&input))
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn cmd_canonical(
    config: &RunConfig,
    pool: &ThreadPool,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let input = read_input(config, stdin, err)?;
    let results: Vec<_> = pool.install(|| {
        input
            .graphs
            .par_iter()
            .map(|(_, g)| {
                let (f, log) = canonicalize_traced(g, &extract_half_integral(g))?;
                let stats = canonical_stats(g, &f)?;
                Ok::<_, Error>((f, stats, log.len()))
            })
            .collect()
    });
    if config.format == Format::Tsv {
        writeln!(out, "line\tgraph6\tw0\tw1\tc\tmatching\trewrites")?;
    }
    let mut status = input_status(&input);
    for ((line, g), result) in input.graphs.iter().zip(results) {
        let graph6 = encode_graph6(g).unwrap_or_default();
        let (f, stats, rewrites) = match result {
            Ok(r) => r,
            Err(e) => {
                // Only reachable through an internal defect: the extracted matching is optimal.
                writeln!(err, "line {line}: {e}")?;
                status = EXIT_VIOLATION;
                continue;
            }
        };
        match config.format {
            Format::Json => write_json(
                out,
                &json!({"line": line, "graph6": graph6, "matching": f, "stats": stats, "rewrites": rewrites}),
            )?,
            Format::Tsv => {
                let c = stats
                    .cycles
                    .iter()
                    .map(|(i, k)| format!("{i}:{k}"))
                    .collect::<Vec<_>>()
                    .join(",");
                let m = f
                    .triples()
                    .iter()
                    .map(|(u, v, w)| format!("{u}-{v}:{w}"))
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(
                    out,
                    "{line}\t{graph6}\t{}\t{}\t{c}\t{m}\t{rewrites}",
                    stats.w0, stats.w1
                )?
            }
            Format::Human => {
                writeln!(
                    out,
                    "line {line}: {graph6}  w0={} w1={} cycles={:?}",
                    stats.w0, stats.w1, stats.cycles
                )?;
                for (u, v, w) in f.triples() {
                    writeln!(out, "  {u}-{v}: {}", if w == 2 { "1" } else { "1/2" })?;
                }
            }
        }
    }
    Ok(status)
}

pub fn cmd_verify(
    config: &RunConfig,
    pool: &ThreadPool,
    enumerate: Option<usize>,
    mode: Mode,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let (numbered, parse_status) = match enumerate {
        Some(n) => match enumerate_connected(n) {
            Ok(graphs) => (
                graphs
                    .into_iter()
                    .enumerate()
                    .map(|(i, g)| (i + 1, g))
                    .collect::<Vec<_>>(),
                EXIT_OK,
            ),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_INPUT);
            }
        },
        None => {
            let input = read_input(config, stdin, err)?;
            let status = input_status(&input);
            (input.graphs, status)
        }
    };
    let graphs: Vec<Graph> = numbered.iter().map(|(_, g)| g.clone()).collect();
    let report = pool.install(|| verify_corpus(&graphs, mode.into()));

    match config.format {
        Format::Json => {
            for ((line, _), r) in numbered.iter().zip(&report.records) {
                write_json(
                    out,
                    &NumberedRecord {
                        line: *line,
                        record: r,
                    },
                )?;
            }
            write_json(out, &json!({ "summary": &report }))?;
        }
        Format::Tsv => {
            writeln!(out, "{RECORD_COLUMNS}")?;
            for ((line, _), r) in numbered.iter().zip(&report.records) {
                writeln!(out, "{}", record_tsv(*line, r))?;
            }
            writeln!(out, "# summary\t{}", serde_json::to_string(&report)?)?;
        }
        Format::Human => {
            writeln!(out, "graphs checked: {}", report.total)?;
            writeln!(out, "bound violations: {}", report.violations.len())?;
            writeln!(
                out,
                "characterization mismatches: {}",
                report.mismatches.len()
            )?;
            for (class, count) in &report.class_counts {
                writeln!(out, "  {class}: {count}")?;
            }
            writeln!(
                out,
                "gap equality graphs: {}",
                report.equality_gap.join(" ")
            )?;
            writeln!(
                out,
                "ratio equality graphs: {}",
                report.equality_ratio.join(" ")
            )?;
            for bad in report.violations.iter().chain(&report.mismatches) {
                writeln!(out, "OFFENDING {bad}")?;
            }
        }
    }
    for e in &report.input_errors {
        writeln!(err, "input {e}")?;
    }
    let code = report.exit_code();
    Ok(if code == EXIT_OK { parse_status } else { code })
}

pub fn cmd_gen(
    family: Option<&str>,
    k: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let need_k = |name: &str| -> Result<usize, String> {
        match k {
            Some(k) if k >= 1 => Ok(k),
            _ => Err(format!("family {name} needs a positive --k")),
        }
    };
    let graphs: Result<Vec<Graph>, String> = match family {
        Some("triangle-star") => need_k("triangle-star").map(|k| vec![families::triangle_star(k)]),
        Some("triangles") => need_k("triangles").map(|k| vec![families::disjoint_triangles(k)]),
        Some("c5") => Ok(vec![families::cycle(5)]),
        Some("k2k3") => Ok(vec![families::k2_k3_bridged()]),
        Some("connected") => need_k("connected").and_then(|n| {
            if n > 10 {
                Err("connected generation is limited to n <= 10".into())
            } else {
                Ok(connected_graphs(n))
            }
        }),
        Some(other) => Err(format!(
            "unknown family {other:?} (expected triangle-star, c5, k2k3, triangles, connected)"
        )),
        None => Err("missing family".into()),
    };
    match graphs {
        Ok(graphs) => {
            for g in graphs {
                match encode_graph6(&g) {
                    Ok(line) => writeln!(out, "{line}")?,
                    Err(e) => {
                        writeln!(err, "error: {e}")?;
                        return Ok(EXIT_INPUT);
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Err(msg) => {
            writeln!(err, "error: {msg}")?;
            Ok(EXIT_INPUT)
        }
    }
}
