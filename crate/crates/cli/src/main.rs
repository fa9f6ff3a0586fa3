//! `pcgroup`: commutator-set and central-series reports for finite p-groups
//! given by power-commutator presentations.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use pcgroup::analysis::{conjecture_probe, normal_closure, Analysis, ConjectureMode, FiniteGroup};
use pcgroup::catalog;
use pcgroup::fp_arith::BinaryQuadraticForm;
use pcgroup::verifier::{verify, AnalysisReport, Outcome, Prediction};
use pcgroup::{Error, PcGroup, PcPresentation, QuotientGroup};

/// Brute force is on by default up to this order.
const BRUTE_FORCE_DEFAULT_LIMIT: usize = 78_125;

const EXIT_MISMATCH: u8 = 2;
const EXIT_OUT_OF_SCOPE: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(
    name = "pcgroup",
    version,
    about = "Commutator sets and central series of finite p-groups"
)]
struct Cli {
    /// Worker threads for the analysis. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a presentation and check its consistency.
    Validate(Input),
    /// Series, exponents, K(G) and the central H search.
    Analyze(AnalyzeArgs),
    /// Size of K(G) against γ2(G), with non-commutators of γ2(G).
    Kset(AnalyzeArgs),
    /// Compare the clause-based prediction for K(G) = γ2(G) with enumeration.
    Verify(AnalyzeArgs),
    /// Analyze a quotient G/N.
    Quotient(QuotientArgs),
    /// List or build the built-in groups.
    Catalog(CatalogArgs),
    /// Zeros and values of a binary quadratic form over F_p.
    Quadform(QuadformArgs),
    /// Test Z(G/N) ∩ γ2(G/N) ⊆ K(G/N) over central or all normal N.
    Conjecture(ConjectureArgs),
}

/// Where the presentation comes from: a file, stdin, or the catalog.
#[derive(Args)]
#[command(group(ArgGroup::new("source").args(["file", "catalog"])))]
struct Input {
    /// Presentation file; `-` or omitted reads stdin.
    file: Option<PathBuf>,
    /// Catalog id instead of a file.
    #[arg(long, requires = "prime")]
    catalog: Option<String>,
    /// Prime for `--catalog`.
    #[arg(long, requires = "catalog")]
    prime: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: Input,
    /// Enumerate K(G) even above 5^7 elements.
    #[arg(long, conflicts_with = "no_brute_force")]
    brute_force: bool,
    /// Skip the enumeration of K(G).
    #[arg(long)]
    no_brute_force: bool,
    /// Report at most this many non-commutators.
    #[arg(long, default_value_t = 10)]
    witness_limit: usize,
}

impl AnalyzeArgs {
    fn brute_force(&self, order: usize) -> bool {
        self.brute_force || (!self.no_brute_force && order <= BRUTE_FORCE_DEFAULT_LIMIT)
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("kernel").required(true).args(["gamma", "zeta", "normal_closure"])))]
struct QuotientArgs {
    #[command(flatten)]
    analyze: AnalyzeArgs,
    /// Quotient by γ_I(G).
    #[arg(long, value_name = "I")]
    gamma: Option<usize>,
    /// Quotient by Z_I(G).
    #[arg(long, value_name = "I")]
    zeta: Option<usize>,
    /// Quotient by the normal closure of elements given as exponent
    /// vectors, e.g. `0,0,1,0;0,0,0,1`.
    #[arg(long, value_name = "ELEMENTS")]
    normal_closure: Option<String>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("action").required(true).args(["list", "build"])))]
struct CatalogArgs {
    /// Table of ids, prime constraints and stated invariants.
    #[arg(long)]
    list: bool,
    /// Emit the presentation of this entry.
    #[arg(long, value_name = "ID", requires = "prime")]
    build: Option<String>,
    #[arg(long)]
    prime: Option<u32>,
    /// Write the presentation here instead of stdout.
    #[arg(short, long, value_name = "FILE", requires = "build")]
    output: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct QuadformArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
    #[arg(long, allow_hyphen_values = true)]
    c: i64,
    #[arg(long)]
    p: i64,
    /// Look for (λ, μ) with f(λ, μ) = R instead of a nontrivial zero.
    #[arg(long, value_name = "R", allow_hyphen_values = true)]
    represents: Option<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConjectureArgs {
    #[command(flatten)]
    input: Input,
    /// Every normal subgroup instead of the central ones.
    #[arg(long)]
    all_normal: bool,
}

/// A failed run: exit code plus a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownCatalogId(_) | Error::InadmissiblePrime { .. } => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        Failure::new(code, e.to_string())
    }
}

type Run = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads as usize)
        .build_global()
    {
        eprintln!("pcgroup: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    let mut out = String::new();
    let result = match &cli.command {
        Command::Validate(input) => validate(input, &mut out),
        Command::Analyze(args) => analyze(args, &mut out),
        Command::Kset(args) => kset(args, &mut out),
        Command::Verify(args) => verify_cmd(args, &mut out),
        Command::Quotient(args) => quotient(args, &mut out),
        Command::Catalog(args) => catalog_cmd(args, &mut out),
        Command::Quadform(args) => quadform(args, &mut out),
        Command::Conjecture(args) => conjecture(args, &mut out),
    };
    if let Err(e) = io::stdout().lock().write_all(out.as_bytes()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("pcgroup: {e}");
            return ExitCode::from(EXIT_IO);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("pcgroup: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_presentation(input: &Input) -> Result<PcPresentation, Failure> {
    if let Some(id) = &input.catalog {
        let p = input.prime.expect("clap requires --prime with --catalog");
        return Ok(catalog::build(id, p)?);
    }
    let text = match input.file.as_deref() {
        None => read_stdin()?,
        Some(path) if path.as_os_str() == "-" => read_stdin()?,
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_NO_INPUT, format!("{}: {e}", path.display())))?,
    };
    Ok(PcPresentation::parse(&text)?)
}

fn read_stdin() -> Result<String, Failure> {
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::new(EXIT_NO_INPUT, format!("stdin: {e}")))?;
    Ok(text)
}

fn load_group(input: &Input) -> Result<PcGroup, Failure> {
    Ok(PcGroup::new(read_presentation(input)?)?)
}

fn to_json<T: serde::Serialize>(value: &T, out: &mut String) {
    out.push_str(&serde_json::to_string_pretty(value).expect("reports serialize"));
    out.push('\n');
}

fn validate(input: &Input, out: &mut String) -> Run {
    let pres = read_presentation(input)?;
    let report = pres.consistency_check();
    if input.json {
        to_json(&render::ValidateJson::new(&pres, &report), out);
    } else {
        render::validate(&pres, &report, out);
    }
    if report.is_consistent() {
        Ok(0)
    } else {
        Err(Failure::new(
            EXIT_DATA,
            format!(
                "inconsistent presentation: {} failing overlap(s)",
                report.failures.len()
            ),
        ))
    }
}

fn analyze(args: &AnalyzeArgs, out: &mut String) -> Run {
    let g = load_group(&args.input)?;
    let a = Analysis::new(&g);
    let report = AnalysisReport::new(&a, args.brute_force(g.order()), args.witness_limit);
    if args.input.json {
        to_json(&report, out);
    } else {
        render::analysis(&report, out);
    }
    Ok(0)
}

fn kset(args: &AnalyzeArgs, out: &mut String) -> Run {
    let g = load_group(&args.input)?;
    let a = Analysis::new(&g);
    let report = render::KsetJson::new(&a, args.witness_limit);
    if args.input.json {
        to_json(&report, out);
    } else {
        render::kset(&report, out);
    }
    Ok(0)
}

fn verify_cmd(args: &AnalyzeArgs, out: &mut String) -> Run {
    let g = load_group(&args.input)?;
    let verdict = verify(&g, args.brute_force(g.order()), args.witness_limit)?;
    if args.input.json {
        to_json(&verdict, out);
    } else {
        render::verdict(&verdict, out);
    }
    Ok(match (&verdict.prediction, &verdict.outcome) {
        (Prediction::OutOfScope(_), _) => EXIT_OUT_OF_SCOPE,
        (_, Outcome::Mismatch(_)) => EXIT_MISMATCH,
        _ => 0,
    })
}

fn quotient(args: &QuotientArgs, out: &mut String) -> Run {
    let g = load_group(&args.analyze.input)?;
    let a = Analysis::new(&g);
    let kernel = if let Some(i) = args.gamma {
        if i == 0 {
            return Err(Failure::new(EXIT_USAGE, "--gamma index starts at 1"));
        }
        a.gamma(i)
    } else if let Some(i) = args.zeta {
        a.zeta(i)
    } else {
        let spec = args
            .normal_closure
            .as_deref()
            .expect("clap requires a kernel");
        normal_closure(&g, &parse_elements(&g, spec)?)
    };
    let q = QuotientGroup::new(&g, kernel)?;
    let qa = Analysis::new(&q);
    let report = AnalysisReport::new(
        &qa,
        args.analyze.brute_force(q.order()),
        args.analyze.witness_limit,
    );
    if args.analyze.input.json {
        to_json(&report, out);
    } else {
        render::analysis(&report, out);
    }
    Ok(0)
}

fn parse_elements(g: &PcGroup, spec: &str) -> Result<Vec<u32>, Failure> {
    spec.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let exps = s
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::new(EXIT_USAGE, format!("element `{s}`: {e}")))?;
            let p = g.prime();
            if let Some(&e) = exps.iter().find(|&&e| e >= p) {
                return Err(Failure::new(
                    EXIT_USAGE,
                    format!("element `{s}`: exponent {e} ≥ p"),
                ));
            }
            Ok(g.id(&pcgroup::Element::from_exponents(exps))?)
        })
        .collect()
}

fn catalog_cmd(args: &CatalogArgs, out: &mut String) -> Run {
    if args.list {
        if args.json {
            to_json(&catalog::list(), out);
        } else {
            render::catalog(catalog::list(), out);
        }
        return Ok(0);
    }
    let id = args
        .build
        .as_deref()
        .expect("clap requires --list or --build");
    let p = args.prime.expect("clap requires --prime with --build");
    let text = catalog::build(id, p)?.serialize();
    match &args.output {
        Some(path) => fs::write(path, &text)
            .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?,
        None => out.push_str(&text),
    }
    Ok(0)
}

fn quadform(args: &QuadformArgs, out: &mut String) -> Run {
    let form = BinaryQuadraticForm::new(args.a, args.b, args.c, args.p)?;
    let report = render::QuadformJson::new(&form, args.represents);
    if args.json {
        to_json(&report, out);
    } else {
        render::quadform(&report, out);
    }
    Ok(0)
}

fn conjecture(args: &ConjectureArgs, out: &mut String) -> Run {
    let g = load_group(&args.input)?;
    let mode = if args.all_normal {
        ConjectureMode::AllNormal
    } else {
        ConjectureMode::CentralOnly
    };
    let report = conjecture_probe(&g, mode);
    if args.input.json {
        to_json(&report, out);
    } else {
        render::conjecture(&report, g.prime(), out);
    }
    Ok(0)
}
