//! Command-line front end: polynomial computation, strip decompositions,
//! identity verification sweeps, and reproduction of the bundled
//! worked-example tables.
//!
//! Exit codes: 0 all checks pass, 1 any check fails (or the reference
//! tables disagree), 2 invalid job description, 3 resource guard tripped.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use superschur::alphabets::{make_alphabet, MarkedAlphabet};
use superschur::identities::{
    self, AlphabetJson, PhiJson, ShapeJson, VerificationReport,
};
use superschur::polyring::Polynomial;
use superschur::reference;
use superschur::shapes::{skew_shape, Partition, SkewShape};
use superschur::strips::{cut, cutting_strip, enumerate_cutting_strips, CuttingStrip};
use superschur::tableaux;
use superschur::Error;

const DEFAULT_MAX_TABLEAUX: u128 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "superschur",
    version,
    about = "Exact skew Schur functions over marked alphabets: tableau sums, \
             outside decompositions, and determinant identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schur polynomial of a shape for the chosen variation.
    Schur(InstanceArgs),
    /// Print the strip decomposition and hash/shift tables of a shape.
    Decompose(InstanceArgs),
    /// Check an identity and emit one report per instance.
    Verify {
        #[command(subcommand)]
        claim: Claim,
    },
    /// Recompute the bundled worked-example tables and diff them against
    /// the frozen golden data.
    PaperTables(OutputArgs),
}

#[derive(Subcommand)]
enum Claim {
    /// Determinant of the hash-product matrix equals the tableau sum.
    Hg(InstanceArgs),
    /// The factorial variation is supersymmetric.
    Susy(InstanceArgs),
    /// The factorial variation matches the double-Schur form after an
    /// index shift.
    Molev(InstanceArgs),
    /// The two-parameter substitution matches the ordered-tableau sum.
    Bachmann(InstanceArgs),
    /// Tableaux biject with non-intersecting path tuples, weights and all.
    Bijection(InstanceArgs),
}

impl Claim {
    fn split(self) -> (&'static str, InstanceArgs) {
        match self {
            Claim::Hg(a) => ("hg", a),
            Claim::Susy(a) => ("susy", a),
            Claim::Molev(a) => ("molev", a),
            Claim::Bachmann(a) => ("bachmann", a),
            Claim::Bijection(a) => ("bijection", a),
        }
    }
}

#[derive(Args, Clone, Default)]
struct InstanceArgs {
    /// Outer partition as a comma list, e.g. 3,2,1 (empty shape if omitted).
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<usize>>,
    /// Inner partition as a comma list.
    #[arg(long, value_delimiter = ',')]
    mu: Option<Vec<usize>>,
    /// Alphabet size; letters are 1..=SIZE.
    #[arg(long)]
    alphabet: Option<usize>,
    /// Primed letters as a comma list, e.g. 2 or 1,3 (with --alphabet).
    #[arg(long, value_delimiter = ',')]
    primed: Option<Vec<usize>>,
    /// Weight family: first, sixth, ninth (default), or bachmann.
    #[arg(long, value_enum)]
    variation: Option<Variation>,
    /// Cutting strip: "rows" (default), "columns", "all", or a comma list
    /// of below-step contents, e.g. -3,-2,0,4.
    #[arg(long, allow_hyphen_values = true)]
    phi: Option<String>,
    /// Number of unprimed letters (susy, molev).
    #[arg(long)]
    m: Option<usize>,
    /// Number of primed letters (susy, molev, bachmann).
    #[arg(long)]
    n: Option<usize>,
    /// JSON job file; explicit flags override its fields.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Clone, Default)]
struct OutputArgs {
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Refuse jobs whose raw filling count exceeds this bound
    /// (default 10^7; env SUPERSCHUR_MAX_TABLEAUX).
    #[arg(long)]
    max_tableaux: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Variation {
    First,
    Sixth,
    Ninth,
    Bachmann,
}

impl Variation {
    fn name(self) -> &'static str {
        match self {
            Variation::First => "first",
            Variation::Sixth => "sixth",
            Variation::Ninth => "ninth",
            Variation::Bachmann => "bachmann",
        }
    }
}

/// On-disk job description; every field is optional and explicit flags win.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    lambda: Option<Vec<usize>>,
    mu: Option<Vec<usize>>,
    alphabet: Option<AlphabetJson>,
    phi: Option<String>,
    variation: Option<String>,
    m: Option<usize>,
    n: Option<usize>,
}

/// A terminal failure: what to print on stderr and which code to exit with.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::TooLarge { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: format!("{}: {err}", error_name(&err)),
        }
    }
}

fn error_name(err: &Error) -> &'static str {
    match err {
        Error::ContainmentViolation(_) => "ContainmentViolation",
        Error::EmptyShape => "EmptyShape",
        Error::OutOfRangeLetter { .. } => "OutOfRangeLetter",
        Error::NonSquare => "NonSquare",
        Error::UnassignedVariable(_) => "UnassignedVariable",
        Error::ForeignFamily(_) => "ForeignFamily",
        Error::SamePrimedness { .. } => "SamePrimedness",
        Error::TooLarge { .. } => "TooLarge",
        Error::DisconnectedShape => "DisconnectedShape",
        Error::ContentMismatch { .. } => "ContentMismatch",
        Error::NotProper => "NotProper",
        Error::MalformedPath(_) => "MalformedPath",
        Error::InvalidPartition(_) => "InvalidPartition",
        Error::InvalidCuttingStrip(_) => "InvalidCuttingStrip",
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// A fully validated job: everything needed to run without further errors
/// of the "bad input" kind.
struct Job {
    shape: SkewShape,
    alphabet: Option<MarkedAlphabet>,
    variation: Variation,
    phi_selector: PhiSelector,
    m: Option<usize>,
    n: Option<usize>,
    json: bool,
    jobs: Option<usize>,
    max_tableaux: u128,
}

enum PhiSelector {
    Rows,
    Columns,
    All,
    Below(Vec<i64>),
}

impl Job {
    fn require_alphabet(&self) -> Result<&MarkedAlphabet, Failure> {
        self.alphabet
            .as_ref()
            .ok_or_else(|| invalid("this command needs --alphabet (and optionally --primed)"))
    }

    fn require_mn(&self) -> Result<(usize, usize), Failure> {
        match (self.m, self.n) {
            (Some(m), Some(n)) => Ok((m, n)),
            _ => Err(invalid("this claim needs both --m and --n")),
        }
    }

    fn require_n(&self) -> Result<usize, Failure> {
        self.n.ok_or_else(|| invalid("this claim needs --n"))
    }

    /// The cutting strips selected for this job.  An empty shape has no
    /// content range; a one-box stand-in keeps reports well formed.
    fn phis(&self) -> Result<Vec<CuttingStrip>, Failure> {
        if self.shape.is_empty() {
            return Ok(vec![cutting_strip((0, 0), [])?]);
        }
        let range = self.shape.content_range()?;
        Ok(match &self.phi_selector {
            PhiSelector::Rows => vec![CuttingStrip::rows(range)],
            PhiSelector::Columns => vec![CuttingStrip::columns(range)],
            PhiSelector::All => enumerate_cutting_strips(&self.shape)?,
            PhiSelector::Below(below) => vec![cutting_strip(range, below.iter().copied())?],
        })
    }
}

/// Rejects a job that would enumerate more than `limit` raw fillings.
fn fill_guard(shape: &SkewShape, base: usize, limit: u128) -> Result<(), Failure> {
    let estimate = (base as u128).checked_pow(shape.len() as u32);
    match estimate {
        Some(e) if e <= limit => Ok(()),
        maybe => Err(Failure::from(Error::TooLarge {
            estimate: maybe.unwrap_or(u128::MAX),
            limit,
        })),
    }
}

fn parse_below_list(text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<i64>()
                .map_err(|_| invalid(format!("bad --phi entry {piece:?}: want an integer")))
        })
        .collect()
}

fn resolve(args: InstanceArgs) -> Result<Job, Failure> {
    let file: SpecFile = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| invalid(format!("invalid job file {}: {e}", path.display())))?
        }
        None => SpecFile::default(),
    };

    let lambda = args.lambda.or(file.lambda).unwrap_or_default();
    let mu = args.mu.or(file.mu).unwrap_or_default();
    let shape = skew_shape(&Partition::new(lambda)?, &Partition::new(mu)?)?;

    // --alphabet/--primed come as a pair; if either flag is present the
    // flags define the whole alphabet, otherwise the job file does.
    let alphabet = if args.alphabet.is_some() || args.primed.is_some() {
        let size = args
            .alphabet
            .ok_or_else(|| invalid("--primed requires --alphabet"))?;
        Some(make_alphabet(size, args.primed.unwrap_or_default())?)
    } else {
        match file.alphabet {
            Some(a) => Some(a.to_alphabet()?),
            None => None,
        }
    };

    let variation = match (args.variation, file.variation) {
        (Some(v), _) => v,
        (None, Some(s)) => match s.as_str() {
            "first" => Variation::First,
            "sixth" => Variation::Sixth,
            "ninth" => Variation::Ninth,
            "bachmann" => Variation::Bachmann,
            other => return Err(invalid(format!("unknown variation {other:?}"))),
        },
        (None, None) => Variation::Ninth,
    };

    let phi_selector = match args.phi.or(file.phi).as_deref() {
        None | Some("rows") => PhiSelector::Rows,
        Some("columns") => PhiSelector::Columns,
        Some("all") => PhiSelector::All,
        Some(list) => PhiSelector::Below(parse_below_list(list)?),
    };

    let max_tableaux = match args.output.max_tableaux {
        Some(v) => v as u128,
        None => match std::env::var("SUPERSCHUR_MAX_TABLEAUX") {
            Ok(s) => s
                .trim()
                .parse::<u128>()
                .map_err(|_| invalid(format!("bad SUPERSCHUR_MAX_TABLEAUX value {s:?}")))?,
            Err(_) => DEFAULT_MAX_TABLEAUX,
        },
    };

    Ok(Job {
        shape,
        alphabet,
        variation,
        phi_selector,
        m: args.m.or(file.m),
        n: args.n.or(file.n),
        json: args.output.json,
        jobs: args.output.jobs,
        max_tableaux,
    })
}

/// Runs `work` on a dedicated pool when --jobs is given, otherwise inline.
fn with_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(work()),
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| invalid(format!("cannot build worker pool: {e}")))?;
            Ok(pool.install(work))
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Schur(args) => cmd_schur(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Verify { claim } => cmd_verify(claim),
        Command::PaperTables(out) => cmd_paper_tables(out),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SchurOutput {
    command: String,
    shape: ShapeJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    alphabet: Option<AlphabetJson>,
    variation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    polynomial: String,
}

fn cmd_schur(args: InstanceArgs) -> Result<i32, Failure> {
    let job = resolve(args)?;
    let polynomial: Polynomial = match job.variation {
        Variation::Bachmann => {
            let n = job.require_n()?;
            fill_guard(&job.shape, n, job.max_tableaux)?;
            identities::bachmann_schur(&job.shape, n)
        }
        _ => {
            let alphabet = job.require_alphabet()?;
            fill_guard(&job.shape, alphabet.size(), job.max_tableaux)?;
            match job.variation {
                Variation::Ninth => tableaux::schur9(&job.shape, alphabet),
                Variation::Sixth => tableaux::schur6(&job.shape, alphabet),
                Variation::First => tableaux::schur1(&job.shape, alphabet.m(), alphabet.n()),
                Variation::Bachmann => unreachable!(),
            }
        }
    };
    if job.json {
        let out = SchurOutput {
            command: "schur".to_string(),
            shape: ShapeJson::of(&job.shape),
            alphabet: job.alphabet.as_ref().map(AlphabetJson::of),
            variation: job.variation.name().to_string(),
            n: match job.variation {
                Variation::Bachmann => job.n,
                _ => None,
            },
            polynomial: polynomial.to_string(),
        };
        println!("{}", serde_json::to_string(&out).expect("output serializes"));
    } else {
        println!("{polynomial}");
    }
    Ok(0)
}

#[derive(Serialize, Deserialize)]
struct DecomposeOutput {
    shape: ShapeJson,
    phi: PhiJson,
    strips: Vec<(i64, i64)>,
    hash: Vec<Vec<reference::HashCell>>,
}

fn cmd_decompose(args: InstanceArgs) -> Result<i32, Failure> {
    let job = resolve(args)?;
    if job.shape.is_empty() {
        return Err(Failure::from(Error::EmptyShape));
    }
    let phis = job.phis()?;
    // Build every block before printing anything, so invalid jobs produce
    // no partial output.
    let mut blocks = Vec::with_capacity(phis.len());
    for phi in &phis {
        let decomp = cut(&job.shape, phi)?;
        let strips = decomp.strips().iter().map(|s| s.range()).collect();
        let hash = reference::hash_table(&decomp);
        blocks.push(DecomposeOutput {
            shape: ShapeJson::of(&job.shape),
            phi: PhiJson::of(phi),
            strips,
            hash,
        });
    }
    for (phi, block) in phis.iter().zip(&blocks) {
        if job.json {
            println!("{}", serde_json::to_string(block).expect("output serializes"));
        } else {
            println!("shape {} cut by {}:", job.shape, phi);
            for (i, (a, b)) in block.strips.iter().enumerate() {
                println!("  theta{} ~ phi[{a},{b}]", i + 1);
            }
            for (p, row) in block.hash.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                println!("  hash[p={}]: {}", p + 1, cells.join(" | "));
            }
        }
    }
    Ok(0)
}

fn cmd_verify(claim: Claim) -> Result<i32, Failure> {
    let (name, args) = claim.split();
    let job = resolve(args)?;
    let mut reports: Vec<VerificationReport> = match name {
        "hg" | "bijection" => {
            let alphabet = job.require_alphabet()?;
            fill_guard(&job.shape, alphabet.size(), job.max_tableaux)?;
            let phis = job.phis()?;
            let shape = &job.shape;
            let collected: Result<Vec<_>, Error> = with_pool(job.jobs, || {
                phis.par_iter()
                    .map(|phi| {
                        if name == "hg" {
                            identities::verify_hg(shape, phi, alphabet)
                        } else {
                            identities::verify_bijection(shape, phi, alphabet)
                        }
                    })
                    .collect()
            })?;
            collected?
        }
        "susy" => {
            let (m, n) = job.require_mn()?;
            fill_guard(&job.shape, m + n, job.max_tableaux)?;
            vec![identities::verify_supersymmetry(&job.shape, m, n)]
        }
        "molev" => {
            let (m, n) = job.require_mn()?;
            fill_guard(&job.shape, m + n, job.max_tableaux)?;
            vec![identities::verify_molev(&job.shape, m, n)]
        }
        "bachmann" => {
            let n = job.require_n()?;
            fill_guard(&job.shape, 2 * n, job.max_tableaux)?;
            vec![identities::verify_bachmann(&job.shape, n)]
        }
        _ => unreachable!(),
    };
    reports.sort_by_key(VerificationReport::instance_key);
    for r in &reports {
        if job.json {
            println!("{}", serde_json::to_string(r).expect("reports serialize"));
        } else {
            println!("{}", report_line(r));
        }
    }
    Ok(if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        1
    })
}

fn report_line(r: &VerificationReport) -> String {
    let mut line = if r.passed() {
        "PASS".to_string()
    } else {
        "FAIL".to_string()
    };
    line.push_str(&format!(" {}", r.claim));
    if let Ok(shape) = r.shape.to_shape() {
        line.push_str(&format!(" {shape}"));
    }
    if let Some(Ok(phi)) = r.phi.as_ref().map(PhiJson::to_phi) {
        line.push_str(&format!(" {phi}"));
    }
    if let Some(Ok(alphabet)) = r.alphabet.as_ref().map(AlphabetJson::to_alphabet) {
        line.push_str(&format!(" {alphabet}"));
    }
    line.push_str(&format!(" ({} ms)", r.elapsed_ms));
    if let Some(witness) = &r.witness {
        line.push_str(&format!("\n  witness: {witness}"));
    }
    line
}

#[derive(Serialize, Deserialize)]
struct PaperTablesOutput {
    tables: reference::ReferenceTables,
    diffs: Vec<String>,
}

fn cmd_paper_tables(out: OutputArgs) -> Result<i32, Failure> {
    let computed = reference::recompute();
    let diffs = reference::diff(&reference::golden(), &computed);
    if out.json {
        let dump = PaperTablesOutput {
            tables: computed,
            diffs: diffs.clone(),
        };
        println!("{}", serde_json::to_string(&dump).expect("output serializes"));
    } else {
        let sigma: Vec<String> = computed.sigma.iter().map(i64::to_string).collect();
        println!("sigma: {}", sigma.join(" "));
        for (i, (a, b)) in computed.strip_ranges.iter().enumerate() {
            println!("theta{} ~ phi[{a},{b}]", i + 1);
        }
        for (p, row) in computed.hash.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            println!("hash[p={}]: {}", p + 1, cells.join(" | "));
        }
        println!("weight: {}", computed.ninth_monomial);
        println!("factors: {}", computed.factorial_factors.join(" | "));
        if diffs.is_empty() {
            println!("ok: tables match the frozen golden data");
        } else {
            for d in &diffs {
                println!("DIFF {d}");
            }
        }
    }
    Ok(if diffs.is_empty() { 0 } else { 1 })
}
