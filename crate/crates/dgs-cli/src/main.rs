//! dgs: exact certification of graphs determined by their generalized
//! spectrum.
//!
//! Four subcommands cover the pipeline: `analyze` emits the full
//! spectral profile of a graph, `certify` runs the square-free
//! criteria and exits by the outcome, `rooted` grows certified
//! families by iterated rooted products, and `oracle` cross-validates
//! everything against exhaustive enumeration on small orders.
//!
//! Exit codes: 0 certified/clean, 1 not certified (or refused
//! preconditions), 2 inconclusive under the factoring cutoff, 64 bad
//! input or usage, 65 a size cap was exceeded, 70 internal
//! inconsistency (a falsified invariant — always a bug or a refuted
//! claim, never user error).

mod input;
mod json;

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dgs_core::certify::{DgsCertificate, Verdict};
use dgs_core::error::Error;
use dgs_core::graphs::{Graph, RootedGraph};
use dgs_core::intalg::{self, IntPoly};
use dgs_core::modalg::Modulus;
use dgs_core::oracle::{self, CospectralClass};
use dgs_core::rooted;
use dgs_core::spectral::{self, SpectralProfile};
use num_bigint::BigInt;

use crate::json::{
    CertificateJson, ClassRecord, FamilyMemberJson, FamilySummaryJson, OracleReportJson,
    ProfileJson,
};

/// A terminal failure: message plus the exit code it maps to.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: &str) -> Failure {
        Failure {
            code: 64,
            message: message.into(),
        }
    }

    fn cap(limit: usize, requested: usize) -> Failure {
        Failure {
            code: 65,
            message: format!("size cap exceeded: {requested} > {limit}"),
        }
    }

    fn internal(message: &str) -> Failure {
        Failure {
            code: 70,
            message: message.into(),
        }
    }

    fn run(message: &str) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    pub fn from_core(err: Error) -> Failure {
        match err {
            Error::Parse(msg) => Failure::usage(&msg),
            Error::CapExceeded { limit, requested } => Failure::cap(limit, requested),
            Error::Internal(msg) => Failure::internal(&msg),
            other => Failure::run(&other.to_string()),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    /// One graph6 string per line.
    Graph6,
    /// A single graph as "n m" followed by m edge lines.
    Edgelist,
}

#[derive(Parser)]
#[command(
    name = "dgs",
    version,
    about = "Certify graphs as determined by their generalized spectrum, with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the full spectral profile of each input graph
    Analyze(AnalyzeArgs),
    /// Run the certification criteria; exit code reports the outcome
    Certify(CertifyArgs),
    /// Grow a certified DGS family by iterated rooted products
    Rooted(RootedArgs),
    /// Exhaustively enumerate an order and validate every claim on it
    Oracle(OracleArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Input path; "-" reads stdin
    input: Option<String>,

    /// Input format
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,

    /// Use a built-in graph instead of a file (available: paper-g8)
    #[arg(long, conflicts_with = "input")]
    fixture: Option<String>,

    /// Refuse input graphs larger than this
    #[arg(long, default_value_t = 96)]
    max_vertices: usize,

    /// Trial-division bound for integer factoring (at least 10^6)
    #[arg(long, default_value_t = intalg::DEFAULT_FACTOR_CUTOFF)]
    cutoff: u64,

    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl IoArgs {
    fn validate(&self) -> Result<(), Failure> {
        if self.max_vertices == 0 {
            return Err(Failure::usage("--max-vertices must be positive"));
        }
        if self.cutoff < intalg::DEFAULT_FACTOR_CUTOFF {
            return Err(Failure::usage(&format!(
                "--cutoff must be at least {}",
                intalg::DEFAULT_FACTOR_CUTOFF
            )));
        }
        Ok(())
    }

    fn graphs(&self) -> Result<Vec<Graph>, Failure> {
        self.validate()?;
        input::read_graphs(
            self.input.as_deref(),
            self.fixture.as_deref(),
            self.format,
            self.max_vertices,
        )
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    io: IoArgs,

    /// Profile these primes instead of the certification primes
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct RootedArgs {
    #[command(flatten)]
    io: IoArgs,

    /// Path to the rooted companion graph (same --format)
    #[arg(long)]
    rooted: String,

    /// Root vertex of the companion
    #[arg(long)]
    root: usize,

    /// Number of product iterations
    #[arg(long, default_value_t = 1)]
    depth: usize,
}

#[derive(Args)]
struct OracleArgs {
    /// Order to enumerate exhaustively (at most 7)
    #[arg(long)]
    order: usize,

    /// Primes for the inequality validation
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5, 7])]
    primes: Vec<u64>,

    /// Append-only JSONL class store; records found there are reused
    #[arg(long)]
    store: Option<PathBuf>,

    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version exit cleanly; real usage errors get
            // 64, since clap's default of 2 is taken by "inconclusive".
            let code = if err.use_stderr() { 64 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Certify(args) => run_certify(args),
        Command::Rooted(args) => run_rooted(args),
        Command::Oracle(args) => run_oracle(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("dgs: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn to_json(value: &impl serde::Serialize) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|err| Failure::internal(&err.to_string()))
}

/// One JSON object per line, to stdout or the chosen file.
fn emit_lines(lines: &[String], out: Option<&Path>) -> Result<(), Failure> {
    let body = format!("{}\n", lines.join("\n"));
    match out {
        Some(path) => fs::write(path, body)
            .map_err(|err| Failure::run(&format!("cannot write {}: {err}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run_analyze(args: AnalyzeArgs) -> Result<u8, Failure> {
    if let Some(primes) = &args.primes {
        for &p in primes {
            Modulus::new(p).map_err(|err| Failure::usage(&err.to_string()))?;
        }
    }
    let mut lines = Vec::new();
    for g in args.io.graphs()? {
        let primes = match &args.primes {
            Some(ps) => ps.clone(),
            None => spectral::certification_primes_with_cutoff(&g, args.io.cutoff)
                .map_err(Failure::from_core)?,
        };
        let profile = SpectralProfile::compute(&g, &primes).map_err(Failure::from_core)?;
        let snf = if profile.det_walk != BigInt::from(0) {
            let snf = intalg::smith_normal_form(&g.walk_matrix()).map_err(Failure::from_core)?;
            Some(snf.invariant_factors().to_vec())
        } else {
            None
        };
        lines.push(to_json(&ProfileJson::new(&profile, snf.as_deref()))?);
    }
    emit_lines(&lines, args.io.out.as_deref())?;
    Ok(0)
}

/// DGS confirmation against the memoized exhaustive inventory.
fn oracle_confirms(
    cache: &mut HashMap<usize, Vec<CospectralClass>>,
    g: &Graph,
) -> Result<bool, Failure> {
    let n = g.order();
    if !cache.contains_key(&n) {
        cache.insert(n, oracle::enumerate_classes(n).map_err(Failure::from_core)?);
    }
    let chi = g
        .adjacency_matrix()
        .char_poly()
        .map_err(Failure::from_core)?;
    let chi_c = g
        .complement()
        .adjacency_matrix()
        .char_poly()
        .map_err(Failure::from_core)?;
    cache[&n]
        .iter()
        .find(|class| class.chi == chi && class.chi_complement == chi_c)
        .map(CospectralClass::is_singleton)
        .ok_or_else(|| Failure::internal("graph missing from its exhaustive enumeration"))
}

fn run_certify(args: CertifyArgs) -> Result<u8, Failure> {
    let mut classes_by_order = HashMap::new();
    let mut lines = Vec::new();
    let mut severity = 0u8;
    for g in args.io.graphs()? {
        let mut cert =
            DgsCertificate::compute_with_cutoff(&g, args.io.cutoff).map_err(Failure::from_core)?;
        if g.order() <= oracle::ENUMERATION_CAP {
            let confirmed = oracle_confirms(&mut classes_by_order, &g)?;
            if cert.dgs_established() && !confirmed {
                return Err(Failure::internal(&format!(
                    "criterion passed but exhaustive search found a mate for {}",
                    cert.graph6
                )));
            }
            cert.oracle_confirmed = Some(confirmed);
        }
        let code = if cert.dgs_established() {
            0
        } else if [cert.wt, cert.wt2, cert.main0, cert.main].contains(&Verdict::Inconclusive) {
            2
        } else {
            1
        };
        severity = severity.max(code);
        lines.push(to_json(&CertificateJson::from(&cert))?);
    }
    emit_lines(&lines, args.io.out.as_deref())?;
    Ok(severity)
}

fn run_rooted(args: RootedArgs) -> Result<u8, Failure> {
    args.io.validate()?;
    let out_dir = args
        .io
        .out
        .as_deref()
        .ok_or_else(|| Failure::usage("--out DIRECTORY is required for rooted"))?;
    let seeds = args.io.graphs()?;
    let [seed] = &seeds[..] else {
        return Err(Failure::usage("rooted takes exactly one seed graph"));
    };
    let companions = input::read_graphs(
        Some(args.rooted.as_str()),
        None,
        args.io.format,
        args.io.max_vertices,
    )?;
    let [companion] = &companions[..] else {
        return Err(Failure::usage("--rooted must hold exactly one graph"));
    };
    let rooted_graph = RootedGraph::new(companion.clone(), args.root)
        .map_err(|err| Failure::usage(&err.to_string()))?;

    let family = rooted::build_dgs_family_with_cap(
        seed,
        &rooted_graph,
        args.depth,
        args.io.max_vertices,
    )
    .map_err(Failure::from_core)?;

    fs::create_dir_all(out_dir)
        .map_err(|err| Failure::run(&format!("cannot create {}: {err}", out_dir.display())))?;
    let mut members = Vec::new();
    for (i, (g, cert)) in family.iter().enumerate() {
        let g6_path = out_dir.join(format!("member_{i:02}.g6"));
        let cert_path = out_dir.join(format!("member_{i:02}.cert.json"));
        let pretty = serde_json::to_string_pretty(&CertificateJson::from(cert))
            .map_err(|err| Failure::internal(&err.to_string()))?;
        fs::write(&g6_path, format!("{}\n", g.to_graph6()))
            .and_then(|()| fs::write(&cert_path, format!("{pretty}\n")))
            .map_err(|err| Failure::run(&format!("cannot write family files: {err}")))?;
        members.push(FamilyMemberJson {
            certificate_path: cert_path.display().to_string(),
            dgs_established: cert.dgs_established(),
            family_g: cert.family_g,
            graph6_path: g6_path.display().to_string(),
            main: json::verdict(cert.main),
            order: cert.order,
        });
    }
    let summary = FamilySummaryJson {
        depth: args.depth,
        members,
        root: args.root,
        rooted_graph6: companion.to_graph6(),
        seed_graph6: seed.to_graph6(),
    };
    emit_lines(&[to_json(&summary)?], None)?;
    Ok(0)
}

/// Loads the classes of one order from the JSONL store, enumerating
/// and appending them when the store has none.
fn load_or_enumerate(
    store: &Path,
    order: usize,
) -> Result<Vec<CospectralClass>, Failure> {
    let content = match fs::read_to_string(store) {
        Ok(content) => content,
        Err(err) if err.kind() == std::io::ErrorKind::NotFound => String::new(),
        Err(err) => {
            return Err(Failure::run(&format!(
                "cannot read {}: {err}",
                store.display()
            )))
        }
    };
    let mut stored = Vec::new();
    for line in content.lines().filter(|l| !l.trim().is_empty()) {
        let record: ClassRecord = serde_json::from_str(line)
            .map_err(|err| Failure::usage(&format!("corrupt store line: {err}")))?;
        if record.n == order {
            stored.push(record);
        }
    }
    if !stored.is_empty() {
        return stored.into_iter().map(class_from_record).collect();
    }
    let classes = oracle::enumerate_classes(order).map_err(Failure::from_core)?;
    let mut body = String::new();
    for class in &classes {
        body.push_str(&to_json(&ClassRecord::new(order, class))?);
        body.push('\n');
    }
    let mut existing = content;
    existing.push_str(&body);
    fs::write(store, existing)
        .map_err(|err| Failure::run(&format!("cannot write {}: {err}", store.display())))?;
    Ok(classes)
}

fn class_from_record(record: ClassRecord) -> Result<CospectralClass, Failure> {
    let parse_poly = |coeffs: &[String]| -> Result<IntPoly, Failure> {
        coeffs
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|err| Failure::usage(&format!("corrupt store coefficient: {err}")))
            })
            .collect::<Result<Vec<BigInt>, Failure>>()
            .map(IntPoly::new)
    };
    Ok(CospectralClass {
        chi: parse_poly(&record.chi)?,
        chi_complement: parse_poly(&record.chi_complement)?,
        members: record
            .members
            .iter()
            .map(|g6| Graph::from_graph6(g6).map_err(Failure::from_core))
            .collect::<Result<Vec<Graph>, Failure>>()?,
    })
}

fn run_oracle(args: OracleArgs) -> Result<u8, Failure> {
    for &p in &args.primes {
        Modulus::new(p).map_err(|err| Failure::usage(&err.to_string()))?;
    }
    let classes = match &args.store {
        Some(path) => load_or_enumerate(path, args.order)?,
        None => oracle::enumerate_classes(args.order).map_err(Failure::from_core)?,
    };
    let report = oracle::validate_classes(args.order, &classes, &args.primes)
        .map_err(Failure::from_core)?;
    let clean = report.is_clean();
    let line = to_json(&OracleReportJson::new(&report, &classes))?;
    emit_lines(&[line], args.out.as_deref())?;
    Ok(if clean { 0 } else { 70 })
}
