//! Command-line interface: quandle construction and inspection, coloring
//! counts, lifting and cocycle invariants, and the batch matrix pipeline.

mod spec;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use quandle_lab::bounds::bound_report;
use quandle_lab::cocycle::{cocycle_invariant, find_connected_extensions, abelian_extension};
use quandle_lab::coloring::{count_colorings_with, CountOptions, DEFAULT_ENUM_CAP};
use quandle_lab::hom::{enumerate_homs, find_isomorphism};
use quandle_lab::io;
use quandle_lab::knot::{load_knot_table, IntRange, KnownInvariants};
use quandle_lab::lift::col_f_with;
use quandle_lab::matrix::{
    build_matrix, check_distinguishing, check_prop35, minimize_set, similarity_partition,
    BuildOptions, Goal,
};
use quandle_lab::quandle::DEFAULT_PRODUCT_CAP;
use quandle_lab::{Error as LibError, QuandleHom, QuandleTable};

pub const SCHEMA: &str = "quandle-lab/1";

/// Error carrying the process exit code: 1 domain failure, 2 usage or I/O.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }

    pub fn from_lib(err: LibError) -> Self {
        let code = match err {
            LibError::Io(_) | LibError::Parse { .. } => 2,
            _ => 1,
        };
        CliError { code, message: err.to_string() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser)]
#[command(name = "quandle-lab", version, about = "Finite quandles and knot colorings")]
struct Cli {
    /// Output format; csv falls back to text where no tabular form exists.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: QUANDLE_LAB_WORKERS or the available
    /// parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Seed for randomized fixture helpers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Per-matrix-cell timeout in seconds.
    #[arg(long, global = true)]
    cell_timeout: Option<u64>,
    /// Cap on full-enumeration tuple counts (colf, cocycle).
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct, validate and inspect quandles.
    Quandle {
        #[command(subcommand)]
        sub: QuandleCmd,
    },
    /// Count colorings of a braid closure.
    Color(ColorArgs),
    /// Compute the lifting invariant of a homomorphism.
    Colf(ColfArgs),
    /// Compute the 2-cocycle invariant.
    Cocycle(CocycleArgs),
    /// Batch pipeline over a knot table and a quandle list.
    Batch {
        #[command(subcommand)]
        sub: BatchCmd,
    },
}

#[derive(Subcommand)]
enum QuandleCmd {
    /// Validate a table against the quandle axioms.
    Validate {
        source: String,
        /// Transpose the table on ingestion (left-distributive sources).
        #[arg(long)]
        transpose: bool,
    },
    /// Report structural properties.
    Props {
        source: String,
        #[arg(long)]
        transpose: bool,
    },
    /// Emit a quandle table in the matrix file format.
    Table {
        source: String,
        #[arg(long)]
        transpose: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit the dual quandle table.
    Dual {
        source: String,
        #[arg(long)]
        transpose: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit the product quandle table.
    Product {
        first: String,
        second: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for an isomorphism between two quandles.
    Iso { first: String, second: String },
    /// Inner automorphism group size.
    Inn { source: String },
    /// Search connected abelian extensions by Z_m.
    Extensions {
        source: String,
        #[arg(long)]
        modulus: u32,
        /// Directory for extension tables and cocycle files.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    quandle: String,
    #[arg(long)]
    braid: String,
    #[arg(long)]
    strands: usize,
    /// Scan all |Q|^b tuples even for connected quandles.
    #[arg(long)]
    full_enum: bool,
    #[arg(long)]
    transpose: bool,
}

#[derive(Args)]
struct ColfArgs {
    #[arg(long)]
    q1: String,
    #[arg(long)]
    q0: String,
    /// Homomorphism file (1-based images) or `auto`/`auto:K` for the K-th
    /// epimorphism found by search.
    #[arg(long)]
    hom: String,
    #[arg(long)]
    braid: String,
    #[arg(long)]
    strands: usize,
}

#[derive(Args)]
struct CocycleArgs {
    #[arg(long)]
    quandle: String,
    /// Cocycle value file: modulus, then |X|^2 values.
    #[arg(long)]
    values: PathBuf,
    #[arg(long)]
    braid: String,
    #[arg(long)]
    strands: usize,
}

#[derive(Subcommand)]
enum BatchCmd {
    /// Build the nontrivial-coloring matrix and write CSV + sidecar.
    Matrix {
        /// Knot table CSV.
        #[arg(long)]
        knots: PathBuf,
        /// Quandle sources: files, directories of .qdl files, or
        /// constructor specs. Repeatable.
        #[arg(long, required = true)]
        quandles: Vec<String>,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        transpose: bool,
    },
    /// Check the pairwise distinguishing conditions on a matrix.
    Distinguish {
        matrix: PathBuf,
        /// Also check the knot-vs-own-mirror condition.
        #[arg(long)]
        prop35: bool,
    },
    /// Partition the quandle list by identical matrix rows.
    Similar { matrix: PathBuf },
    /// Per-knot bound reports from the matrix and known invariants.
    Bounds {
        matrix: PathBuf,
        /// CSV `name,bridge,unknotting,nakanishi` with ingested values.
        #[arg(long)]
        known: Option<PathBuf>,
        /// Comma-separated names of the simple-Alexander quandles in the
        /// list.
        #[arg(long, default_value = "")]
        simple_alex: String,
    },
    /// Greedy minimization of the quandle list for a goal condition.
    Minimize {
        matrix: PathBuf,
        #[arg(long, value_enum)]
        goal: GoalArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GoalArg {
    Cond1,
    Cond2,
    Cond3,
    CondD,
    All,
}

impl From<GoalArg> for Goal {
    fn from(g: GoalArg) -> Goal {
        match g {
            GoalArg::Cond1 => Goal::Condition1,
            GoalArg::Cond2 => Goal::Condition2,
            GoalArg::Cond3 => Goal::Condition3,
            GoalArg::CondD => Goal::ConditionD,
            GoalArg::All => Goal::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            match format {
                Format::Json => eprintln!(
                    "{}",
                    json!({ "schema": SCHEMA, "error": e.message })
                ),
                _ => eprintln!("error: {}", e.message),
            }
            ExitCode::from(e.code)
        }
    }
}

fn resolve_workers(cli: &Cli) -> usize {
    cli.workers
        .or_else(|| {
            std::env::var("QUANDLE_LAB_WORKERS").ok().and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        })
        .max(1)
}

fn parse_braid(word: &str, strands: usize) -> Result<quandle_lab::BraidWord, CliError> {
    quandle_lab::BraidWord::parse(word, strands).map_err(CliError::from_lib)
}

fn emit_table(q: &QuandleTable, output: &Option<PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => io::write_quandle(path, q).map_err(CliError::from_lib),
        None => {
            print!("{}", io::render_quandle(q));
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let workers = resolve_workers(&cli);
    let format = cli.format;
    match cli.command {
        Command::Quandle { sub } => run_quandle(sub, format),
        Command::Color(args) => run_color(args, format, workers),
        Command::Colf(args) => run_colf(args, format, cli.enum_cap, workers),
        Command::Cocycle(args) => run_cocycle(args, format, cli.enum_cap),
        Command::Batch { sub } => run_batch(sub, format, workers, cli.cell_timeout),
    }
}

fn run_quandle(cmd: QuandleCmd, format: Format) -> Result<ExitCode, CliError> {
    match cmd {
        QuandleCmd::Validate { source, transpose } => {
            // Resolve by hand so axiom violations reach the report.
            let path = Path::new(&source);
            let outcome = if path.is_file() {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(e.to_string()))?;
                io::parse_quandle(&text, transpose)
            } else {
                return match spec::resolve_quandle(&source, transpose) {
                    Ok((_, q)) => {
                        report_valid(format, q.order());
                        Ok(ExitCode::SUCCESS)
                    }
                    Err(e) => Err(e),
                };
            };
            match outcome {
                Ok(q) => {
                    report_valid(format, q.order());
                    Ok(ExitCode::SUCCESS)
                }
                Err(LibError::Axioms(violations)) => {
                    let strings: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                    match format {
                        Format::Json => eprintln!(
                            "{}",
                            json!({ "schema": SCHEMA, "valid": false, "violations": strings })
                        ),
                        _ => {
                            eprintln!("invalid: {} axiom violation(s)", strings.len());
                            for s in &strings {
                                eprintln!("  {s}");
                            }
                        }
                    }
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(CliError::from_lib(e)),
            }
        }
        QuandleCmd::Props { source, transpose } => {
            let (name, q) = spec::resolve_quandle(&source, transpose)?;
            let props = q.properties();
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "name": name,
                        "order": q.order(),
                        "connected": props.connected,
                        "latin": props.latin,
                        "kei": props.kei,
                        "faithful": props.faithful,
                        "self_dual": props.self_dual,
                    })
                ),
                _ => {
                    println!("name: {name}");
                    println!("order: {}", q.order());
                    println!("connected: {}", props.connected);
                    println!("latin: {}", props.latin);
                    println!("kei: {}", props.kei);
                    println!("faithful: {}", props.faithful);
                    println!("self_dual: {}", props.self_dual);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        QuandleCmd::Table { source, transpose, output } => {
            let (_, q) = spec::resolve_quandle(&source, transpose)?;
            emit_table(&q, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        QuandleCmd::Dual { source, transpose, output } => {
            let (_, q) = spec::resolve_quandle(&source, transpose)?;
            emit_table(&q.dual(), &output)?;
            Ok(ExitCode::SUCCESS)
        }
        QuandleCmd::Product { first, second, output } => {
            let (_, q1) = spec::resolve_quandle(&first, false)?;
            let (_, q2) = spec::resolve_quandle(&second, false)?;
            let p = QuandleTable::product(&q1, &q2, DEFAULT_PRODUCT_CAP)
                .map_err(CliError::from_lib)?;
            emit_table(&p, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        QuandleCmd::Iso { first, second } => {
            let (_, q1) = spec::resolve_quandle(&first, false)?;
            let (_, q2) = spec::resolve_quandle(&second, false)?;
            match find_isomorphism(&q1, &q2) {
                Some(hom) => {
                    let witness: Vec<usize> = hom.map().iter().map(|&v| v + 1).collect();
                    match format {
                        Format::Json => println!(
                            "{}",
                            json!({ "schema": SCHEMA, "isomorphic": true, "witness": witness })
                        ),
                        _ => println!(
                            "isomorphic; witness: {}",
                            witness.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                        ),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    match format {
                        Format::Json => {
                            println!("{}", json!({ "schema": SCHEMA, "isomorphic": false }))
                        }
                        _ => println!("not isomorphic"),
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        QuandleCmd::Inn { source } => {
            let (name, q) = spec::resolve_quandle(&source, false)?;
            let group = q
                .inner_group(quandle_lab::quandle::DEFAULT_INNER_GROUP_CAP)
                .map_err(CliError::from_lib)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "name": name,
                        "degree": group.degree(),
                        "inner_group_order": group.size(),
                        "transitive": group.is_transitive(),
                    })
                ),
                _ => println!(
                    "Inn({name}): order {} on {} points, transitive: {}",
                    group.size(),
                    group.degree(),
                    group.is_transitive()
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        QuandleCmd::Extensions { source, modulus, output } => {
            let (name, q) = spec::resolve_quandle(&source, false)?;
            let found = find_connected_extensions(&q, modulus).map_err(CliError::from_lib)?;
            let mut summaries = Vec::new();
            for (idx, phi) in found.iter().enumerate() {
                let ext = abelian_extension(phi);
                let props = ext.properties();
                if let Some(dir) = &output {
                    std::fs::create_dir_all(dir).map_err(|e| CliError::usage(e.to_string()))?;
                    io::write_quandle(dir.join(format!("{name}_ext{idx}.qdl")), &ext)
                        .map_err(CliError::from_lib)?;
                    std::fs::write(
                        dir.join(format!("{name}_ext{idx}.cocycle")),
                        io::render_cocycle(phi),
                    )
                    .map_err(|e| CliError::usage(e.to_string()))?;
                }
                summaries.push(json!({
                    "index": idx,
                    "order": ext.order(),
                    "connected": props.connected,
                    "kei": props.kei,
                    "latin": props.latin,
                }));
            }
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "base": name,
                        "modulus": modulus,
                        "classes": found.len(),
                        "extensions": summaries,
                    })
                ),
                _ => println!("{} connected extension class(es) of {name} by Z_{modulus}", found.len()),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn report_valid(format: Format, order: usize) {
    match format {
        Format::Json => println!("{}", json!({ "schema": SCHEMA, "valid": true, "order": order })),
        _ => println!("valid, order {order}"),
    }
}

fn run_color(args: ColorArgs, format: Format, workers: usize) -> Result<ExitCode, CliError> {
    let (name, q) = spec::resolve_quandle(&args.quandle, args.transpose)?;
    let w = parse_braid(&args.braid, args.strands)?;
    let started = Instant::now();
    let count = count_colorings_with(
        &q,
        &w,
        &CountOptions { workers, force_full: args.full_enum, deadline: None },
    )
    .map_err(CliError::from_lib)?;
    let wall_ms = started.elapsed().as_millis() as u64;
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "quandle": name,
                "quandle_order": count.quandle_order,
                "braid": w.render(),
                "strands": args.strands,
                "total": count.total,
                "nontrivial": count.nontrivial,
                "fixed_strand": count.fixed_strand,
                "evaluations": count.evaluations,
                "wall_ms": wall_ms,
            })
        ),
        Format::Csv => {
            println!("quandle,total,nontrivial,fixed_strand,evaluations,wall_ms");
            println!(
                "{name},{},{},{},{},{wall_ms}",
                count.total, count.nontrivial, count.fixed_strand, count.evaluations
            );
        }
        Format::Text => {
            println!("quandle {name} (order {})", count.quandle_order);
            println!("total: {}", count.total);
            println!("nontrivial: {}", count.nontrivial);
            println!("fixed_strand: {}", count.fixed_strand);
            println!("evaluations: {}", count.evaluations);
            println!("wall_ms: {wall_ms}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_colf(args: ColfArgs, format: Format, enum_cap: u64, workers: usize) -> Result<ExitCode, CliError> {
    let (_, q1) = spec::resolve_quandle(&args.q1, false)?;
    let (_, q0) = spec::resolve_quandle(&args.q0, false)?;
    let w = parse_braid(&args.braid, args.strands)?;
    let hom = resolve_hom(&args.hom, &q1, &q0)?;
    let lift = col_f_with(&hom, &w, enum_cap, workers).map_err(CliError::from_lib)?;
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "pairs": lift.pairs(),
                "q0_total": lift.codomain_total(),
                "q1_total": lift.domain_total(),
            })
        ),
        _ => println!("{lift}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn resolve_hom(source: &str, q1: &QuandleTable, q0: &QuandleTable) -> Result<QuandleHom, CliError> {
    if let Some(rest) = source.strip_prefix("auto") {
        let index: usize = match rest.strip_prefix(':') {
            Some(k) => k.parse().map_err(|_| CliError::usage("bad auto:K index"))?,
            None if rest.is_empty() => 0,
            _ => return Err(CliError::usage("expected auto or auto:K")),
        };
        let epis = enumerate_homs(q1, q0, true).map_err(CliError::from_lib)?;
        if epis.is_empty() {
            return Err(CliError::domain("no epimorphism exists between the quandles"));
        }
        epis.into_iter().nth(index).ok_or_else(|| {
            CliError::domain(format!("epimorphism index {index} out of range"))
        })
    } else {
        let text = std::fs::read_to_string(source).map_err(|e| CliError::usage(e.to_string()))?;
        let map =
            io::parse_hom_map(&text, q1.order(), q0.order()).map_err(CliError::from_lib)?;
        QuandleHom::new(q1.clone(), q0.clone(), map).map_err(CliError::from_lib)
    }
}

fn run_cocycle(args: CocycleArgs, format: Format, enum_cap: u64) -> Result<ExitCode, CliError> {
    let (_, q) = spec::resolve_quandle(&args.quandle, false)?;
    let text = std::fs::read_to_string(&args.values).map_err(|e| CliError::usage(e.to_string()))?;
    let phi = io::parse_cocycle(&text, &q).map_err(CliError::from_lib)?;
    let w = parse_braid(&args.braid, args.strands)?;
    let inv = cocycle_invariant(&phi, &w, enum_cap).map_err(CliError::from_lib)?;
    match format {
        Format::Json => {
            let multiset: BTreeMap<String, u64> =
                inv.multiset.iter().map(|(k, v)| (k.to_string(), *v)).collect();
            println!(
                "{}",
                json!({ "schema": SCHEMA, "modulus": inv.modulus, "multiset": multiset })
            );
        }
        _ => {
            let body: Vec<String> =
                inv.multiset.iter().map(|(value, mult)| format!("[{value},{mult}]")).collect();
            println!("{{{}}}", body.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Expands a --quandles argument into named tables.
fn collect_quandles(
    sources: &[String],
    transpose: bool,
) -> Result<Vec<(String, QuandleTable)>, CliError> {
    let mut out = Vec::new();
    for source in sources {
        let path = Path::new(source);
        if path.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(path)
                .map_err(|e| CliError::usage(e.to_string()))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.extension().map(|e| e == "qdl").unwrap_or(false))
                .collect();
            files.sort();
            if files.is_empty() {
                return Err(CliError::usage(format!("no .qdl files in {}", path.display())));
            }
            for file in files {
                let q = io::read_quandle(&file, transpose).map_err(CliError::from_lib)?;
                let name = file
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                out.push((name, q));
            }
        } else {
            out.push(spec::resolve_quandle(source, transpose)?);
        }
    }
    Ok(out)
}

fn load_known_csv(path: &Path) -> Result<BTreeMap<String, KnownInvariants>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(e.to_string()))?;
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| CliError::usage("empty known-invariants file"))?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    let col = |name: &str| columns.iter().position(|&c| c == name);
    let Some(name_col) = col("name") else {
        return Err(CliError::usage("known-invariants header needs a name column"));
    };
    let bridge_col = col("bridge");
    let unknotting_col = col("unknotting");
    let nakanishi_col = col("nakanishi");
    let mut out = BTreeMap::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let at = |c: usize| fields.get(c).copied().unwrap_or("");
        let parse_opt = |c: Option<usize>| -> Result<Option<IntRange>, CliError> {
            match c {
                Some(c) if !at(c).is_empty() => IntRange::parse(at(c))
                    .map(Some)
                    .map_err(CliError::from_lib),
                _ => Ok(None),
            }
        };
        out.insert(
            at(name_col).to_string(),
            KnownInvariants {
                bridge: parse_opt(bridge_col)?,
                unknotting: parse_opt(unknotting_col)?,
                nakanishi: parse_opt(nakanishi_col)?,
            },
        );
    }
    Ok(out)
}

fn run_batch(
    cmd: BatchCmd,
    format: Format,
    workers: usize,
    cell_timeout: Option<u64>,
) -> Result<ExitCode, CliError> {
    match cmd {
        BatchCmd::Matrix { knots, quandles, output, transpose } => {
            let records = load_knot_table(&knots).map_err(CliError::from_lib)?;
            let tables = collect_quandles(&quandles, transpose)?;
            let opts = BuildOptions {
                workers,
                cell_timeout: cell_timeout.map(Duration::from_secs),
            };
            let mx = build_matrix(&tables, &records, &opts).map_err(CliError::from_lib)?;
            io::write_matrix(&output, &mx).map_err(CliError::from_lib)?;
            let missing: Vec<(usize, usize)> =
                mx.missing_cells().iter().map(|&(i, j)| (i + 1, j + 1)).collect();
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "output": output.display().to_string(),
                        "sidecar": io::sidecar_path(&output).display().to_string(),
                        "quandles": mx.quandle_count(),
                        "knots": mx.knot_count(),
                        "missing_cells": missing,
                    })
                ),
                _ => println!(
                    "wrote {} ({} quandles x {} knots, {} missing cells)",
                    output.display(),
                    mx.quandle_count(),
                    mx.knot_count(),
                    missing.len()
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        BatchCmd::Distinguish { matrix, prop35 } => {
            let mx = io::read_matrix(&matrix).map_err(CliError::from_lib)?;
            if prop35 {
                let report = check_prop35(&mx, true).map_err(CliError::from_lib)?;
                let ok = report.a.holds && report.b.holds && report.c.holds;
                match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string(&json!({
                            "schema": SCHEMA,
                            "report": report,
                        }))
                        .expect("report serializes")
                    ),
                    _ => {
                        println!("A (direct): {}", verdict(report.a.holds, &report.a.failing));
                        println!("B (against mirror): {}", verdict(report.b.holds, &report.b.failing));
                        println!("C (mirror-mirror): {}", verdict(report.c.holds, &report.c.failing));
                        if let Some(d) = &report.d {
                            println!(
                                "D (own mirror): {} ({} knots checked, {} failing)",
                                if d.holds { "holds" } else { "fails" },
                                d.knots_checked.len(),
                                d.failing.len()
                            );
                        }
                        println!("conclusion: {:?}", report.conclusion);
                    }
                }
                Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
            } else {
                let report = check_distinguishing(&mx).map_err(CliError::from_lib)?;
                let ok = report.all_hold();
                match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string(&json!({
                            "schema": SCHEMA,
                            "report": report,
                        }))
                        .expect("report serializes")
                    ),
                    _ => {
                        println!("condition 1: {}", verdict(report.direct.holds, &report.direct.failing));
                        println!(
                            "condition 2: {}",
                            verdict(report.against_mirror.holds, &report.against_mirror.failing)
                        );
                        println!(
                            "condition 3: {}",
                            verdict(report.mirror_mirror.holds, &report.mirror_mirror.failing)
                        );
                    }
                }
                Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
            }
        }
        BatchCmd::Similar { matrix } => {
            let mx = io::read_matrix(&matrix).map_err(CliError::from_lib)?;
            let partition = similarity_partition(&mx).map_err(CliError::from_lib)?;
            let blocks: Vec<Vec<&String>> = partition
                .blocks
                .iter()
                .map(|b| b.iter().map(|&i| &mx.quandle_names[i]).collect())
                .collect();
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "note": "classes are relative to the supplied knot corpus",
                        "blocks": blocks,
                    })
                ),
                _ => {
                    for block in blocks {
                        println!(
                            "{}",
                            block.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" ")
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        BatchCmd::Bounds { matrix, known, simple_alex } => {
            let mx = io::read_matrix(&matrix).map_err(CliError::from_lib)?;
            let known_by_name = match known {
                Some(path) => load_known_csv(&path)?,
                None => BTreeMap::new(),
            };
            for name in known_by_name.keys() {
                if !mx.knot_names.contains(name) {
                    return Err(CliError::usage(format!("unknown knot '{name}' in known file")));
                }
            }
            let known_rows: Vec<KnownInvariants> = mx
                .knot_names
                .iter()
                .map(|n| known_by_name.get(n).copied().unwrap_or_default())
                .collect();
            let simple: Vec<usize> = simple_alex
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|name| {
                    mx.quandle_names
                        .iter()
                        .position(|q| q == name)
                        .ok_or_else(|| CliError::usage(format!("unknown quandle '{name}'")))
                })
                .collect::<Result<_, _>>()?;
            let reports = bound_report(&mx, &known_rows, &simple).map_err(CliError::from_lib)?;
            let has_data_errors = reports.iter().any(|r| !r.data_errors.is_empty());
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "schema": SCHEMA,
                        "quandle_list": mx.quandle_names,
                        "reports": reports,
                    }))
                    .expect("reports serialize")
                ),
                Format::Csv => {
                    println!("knot,mlq,mlq_f,bridge_lower,nakanishi_lower,tunnel,u_case,ni,unknotting");
                    for r in &reports {
                        println!(
                            "{},{},{},{},{},{},{},{},{}",
                            r.knot,
                            r.mlq,
                            r.mlq_f,
                            r.bridge_lower,
                            r.nakanishi_lower,
                            r.tunnel.as_ref().map(|t| t.tunnel_number.to_string()).unwrap_or_default(),
                            r.unknotting_case.map(|c| format!("{c:?}")).unwrap_or_default(),
                            r.nakanishi_conclusion.map(|i| i.render()).unwrap_or_default(),
                            r.unknotting_conclusion.map(|i| i.render()).unwrap_or_default(),
                        );
                    }
                }
                Format::Text => {
                    for r in &reports {
                        let mut line = format!(
                            "{}: mlq={} mlq_f={} bridge>={} nakanishi>={}",
                            r.knot, r.mlq, r.mlq_f, r.bridge_lower, r.nakanishi_lower
                        );
                        if let Some(t) = &r.tunnel {
                            line.push_str(&format!(" tunnel={} (via {})", t.tunnel_number, t.via_quandle));
                        }
                        if let Some(c) = r.unknotting_case {
                            line.push_str(&format!(" case={c:?}"));
                        }
                        if let Some(ni) = r.nakanishi_conclusion {
                            line.push_str(&format!(" NI={}", ni.render()));
                        }
                        if let Some(u) = r.unknotting_conclusion {
                            line.push_str(&format!(" u={}", u.render()));
                        }
                        for err in &r.data_errors {
                            line.push_str(&format!(" DATA-ERROR: {err}"));
                        }
                        println!("{line}");
                    }
                }
            }
            Ok(if has_data_errors { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        BatchCmd::Minimize { matrix, goal } => {
            let mx = io::read_matrix(&matrix).map_err(CliError::from_lib)?;
            let selected = minimize_set(&mx, goal.into()).map_err(CliError::from_lib)?;
            let names: Vec<&String> = selected.iter().map(|&i| &mx.quandle_names[i]).collect();
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "goal": format!("{:?}", Goal::from(goal)),
                        "selected": names,
                        "selected_indices": selected.iter().map(|&i| i + 1).collect::<Vec<_>>(),
                    })
                ),
                _ => println!(
                    "{}",
                    names.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" ")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verdict(holds: bool, failing: &[(usize, usize)]) -> String {
    if holds {
        "holds".to_string()
    } else {
        format!("fails ({} pair(s))", failing.len())
    }
}
