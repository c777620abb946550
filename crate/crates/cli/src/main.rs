//! `usplit` — command-line front end for the Ulrich-split analyzer.
//!
//! Every subcommand has a human-readable text mode and a `--json` mode
//! reporting the same verdicts. Scanning subcommands (`enumerate`,
//! `quot scan`) stream one row per line; with `--json` each row is a
//! self-contained JSON object (JSON Lines).
//!
//! Exit codes: `0` success, `2` invalid input or usage, `3` internal
//! consistency failure (provably equivalent predicates disagreed — this
//! would indicate a bug, and the full predicate dump is printed).

use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use usplit_core::{
    fiber_us, sample_regular_ideals, us_report, AdeKind, AdeSingularity, CyclicQuotient, Error,
    NumericalSemigroup, RelativeIdeal, UsReport, DEFAULT_SAMPLE_SEED,
};

#[derive(Parser)]
#[command(
    name = "usplit",
    version,
    about = "Decide the Ulrich-split property for monomial curve rings and quotient surface singularities"
)]
struct Cli {
    /// Emit machine-readable JSON (scans emit one JSON object per line)
    #[arg(long, global = true)]
    json: bool,

    /// Seed for sampled ideal families
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLE_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ulrich-split verdict for a semigroup ring and an ideal
    Us(UsArgs),
    /// Numerical semigroup toolbox
    #[command(subcommand)]
    Sgp(SgpCommand),
    /// Ulrich-split verdict for a fiber product of two semigroup rings
    Fiber(FiberArgs),
    /// Stream every numerical semigroup up to a genus bound
    Enumerate(EnumerateArgs),
    /// Cyclic quotient surface singularities 1/n(1,a)
    #[command(subcommand)]
    Quot(QuotCommand),
    /// ADE hypersurface singularities
    #[command(subcommand)]
    Hyp(HypCommand),
}

#[derive(Args)]
struct UsArgs {
    /// Semigroup generators, comma-separated (e.g. 3,5,7)
    #[arg(long, required = true, value_delimiter = ',')]
    gens: Vec<i64>,

    /// Ideal generators, comma-separated; defaults to the maximal ideal
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    ideal: Option<Vec<i64>>,

    /// Additionally analyze N seeded random regular ideals
    #[arg(long, value_name = "N")]
    sample: Option<usize>,
}

#[derive(Subcommand)]
enum SgpCommand {
    /// Invariants of a numerical semigroup
    Analyze(SgpAnalyzeArgs),
    /// Apply ideal operations over a semigroup
    Ideal(SgpIdealArgs),
}

#[derive(Args)]
struct SgpAnalyzeArgs {
    /// Semigroup generators, comma-separated
    #[arg(long, required = true, value_delimiter = ',')]
    gens: Vec<i64>,
}

#[derive(Args)]
struct SgpIdealArgs {
    /// Semigroup generators, comma-separated
    #[arg(long, required = true, value_delimiter = ',')]
    gens: Vec<i64>,

    /// Ideal generators, comma-separated (negative values allowed)
    #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
    ideal: Vec<i64>,

    /// Operations to apply: trace, dual, dagger, endo, mu, reflexive,
    /// blowup, power=N, ulrich
    #[arg(long, value_delimiter = ',', value_parser = parse_op)]
    ops: Option<Vec<IdealOp>>,
}

#[derive(Args)]
struct FiberArgs {
    /// Generators of the left semigroup
    #[arg(long, required = true, value_delimiter = ',')]
    left: Vec<i64>,

    /// Generators of the right semigroup
    #[arg(long, required = true, value_delimiter = ',')]
    right: Vec<i64>,

    /// Ideal over the left semigroup; defaults to its maximal ideal
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    left_ideal: Option<Vec<i64>>,

    /// Ideal over the right semigroup; defaults to its maximal ideal
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    right_ideal: Option<Vec<i64>>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest genus to enumerate
    #[arg(long, required = true)]
    genus_max: u32,
}

#[derive(Subcommand)]
enum QuotCommand {
    /// Analyze a single quotient singularity
    Analyze(QuotAnalyzeArgs),
    /// Scan all quotient singularities with 2 <= n <= n-max
    Scan(QuotScanArgs),
}

#[derive(Args)]
struct QuotAnalyzeArgs {
    /// Group order n
    #[arg(long)]
    n: u64,

    /// Weight a (coprime to n, 1 <= a <= n-1)
    #[arg(long)]
    a: u64,
}

#[derive(Args)]
struct QuotScanArgs {
    /// Largest group order to scan
    #[arg(long)]
    n_max: u64,

    /// Only print rows with the Ulrich-split property
    #[arg(long)]
    only_us: bool,
}

#[derive(Subcommand)]
enum HypCommand {
    /// Classify an ADE hypersurface singularity
    Classify(HypClassifyArgs),
}

#[derive(Args)]
struct HypClassifyArgs {
    /// Dynkin label, e.g. A3, D4, E8
    #[arg(long = "type", value_name = "KIND", value_parser = parse_ade)]
    kind: AdeKind,

    /// Dimension of the hypersurface
    #[arg(long, default_value_t = 2)]
    dim: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum IdealOp {
    Trace,
    Dual,
    Dagger,
    Endo,
    Mu,
    Reflexive,
    Blowup,
    Power(u32),
    Ulrich,
}

const DEFAULT_OPS: [IdealOp; 6] = [
    IdealOp::Trace,
    IdealOp::Dual,
    IdealOp::Dagger,
    IdealOp::Endo,
    IdealOp::Mu,
    IdealOp::Reflexive,
];

impl IdealOp {
    fn name(&self) -> String {
        match self {
            IdealOp::Trace => "trace".into(),
            IdealOp::Dual => "dual".into(),
            IdealOp::Dagger => "dagger".into(),
            IdealOp::Endo => "endo".into(),
            IdealOp::Mu => "mu".into(),
            IdealOp::Reflexive => "reflexive".into(),
            IdealOp::Blowup => "blowup".into(),
            IdealOp::Power(n) => format!("power={n}"),
            IdealOp::Ulrich => "ulrich".into(),
        }
    }
}

fn parse_op(s: &str) -> Result<IdealOp, String> {
    if let Some(exp) = s.strip_prefix("power=") {
        let n: u32 = exp
            .parse()
            .map_err(|_| format!("invalid exponent in {s:?}"))?;
        return Ok(IdealOp::Power(n));
    }
    match s {
        "trace" => Ok(IdealOp::Trace),
        "dual" => Ok(IdealOp::Dual),
        "dagger" => Ok(IdealOp::Dagger),
        "endo" => Ok(IdealOp::Endo),
        "mu" => Ok(IdealOp::Mu),
        "reflexive" => Ok(IdealOp::Reflexive),
        "blowup" => Ok(IdealOp::Blowup),
        "ulrich" => Ok(IdealOp::Ulrich),
        _ => Err(format!(
            "unknown operation {s:?} (expected trace, dual, dagger, endo, mu, reflexive, blowup, power=N or ulrich)"
        )),
    }
}

fn parse_ade(s: &str) -> Result<AdeKind, String> {
    s.parse::<AdeKind>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", error_code(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> usplit_core::Result<()> {
    match &cli.command {
        Command::Us(args) => run_us(args, cli.json, cli.seed),
        Command::Sgp(SgpCommand::Analyze(args)) => run_sgp_analyze(args, cli.json),
        Command::Sgp(SgpCommand::Ideal(args)) => run_sgp_ideal(args, cli.json),
        Command::Fiber(args) => run_fiber(args, cli.json),
        Command::Enumerate(args) => run_enumerate(args, cli.json),
        Command::Quot(QuotCommand::Analyze(args)) => run_quot_analyze(args, cli.json),
        Command::Quot(QuotCommand::Scan(args)) => run_quot_scan(args, cli.json),
        Command::Hyp(HypCommand::Classify(args)) => run_hyp_classify(args, cli.json),
    }
}

/// Stable machine-readable code for each error, printed on stderr.
fn error_code(e: &Error) -> &'static str {
    match e {
        Error::EmptyGenerators => "empty-generators",
        Error::NonPositiveGenerator(_) => "non-positive-generator",
        Error::NonCoprimeGenerators(_) => "non-coprime-generators",
        Error::NotAnElement(_) => "not-an-element",
        Error::NoStabilization { .. } => "no-stabilization",
        Error::GenusTooLarge { .. } => "genus-too-large",
        Error::AmbientMismatch => "ambient-mismatch",
        Error::NotRegularIdeal => "not-regular-ideal",
        Error::AgreementViolation(_) => "agreement-violation",
        Error::RegularRing => "regular-ring",
        Error::UlrichSplitRequired => "ulrich-split-required",
        Error::NotUlrich => "not-ulrich",
        Error::ModulusMismatch(..) => "modulus-mismatch",
        Error::InvalidQuotient { .. } => "invalid-quotient",
        Error::WeightOne => "weight-one",
        Error::InvalidAde(_) => "invalid-ade",
        Error::NotTypeA => "not-type-a",
        Error::InputTooLarge(_) => "input-too-large",
    }
}

/// Consistency failures get their own exit code: the CLI doubles as a
/// verifier of the predicate equivalences over arbitrary user inputs.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::AgreementViolation(_) => 3,
        _ => 2,
    }
}

#[derive(Serialize)]
struct SampledRow {
    ideal: String,
    us: bool,
}

fn run_us(args: &UsArgs, json: bool, seed: u64) -> usplit_core::Result<()> {
    let s = NumericalSemigroup::from_generators(&args.gens)?;
    let ideal = args
        .ideal
        .as_deref()
        .map(|g| RelativeIdeal::from_generators(&s, g))
        .transpose()?;
    let report = us_report(&s, ideal.as_ref())?;

    let sampled = match args.sample {
        Some(n) => sample_regular_ideals(&s, seed, n)
            .iter()
            .map(|i| {
                us_report(&s, Some(i)).map(|r| SampledRow {
                    ideal: i.to_string(),
                    us: r.us,
                })
            })
            .collect::<usplit_core::Result<Vec<_>>>()?,
        None => Vec::new(),
    };

    if json {
        #[derive(Serialize)]
        struct UsOut<'a> {
            #[serde(flatten)]
            report: &'a UsReport,
            #[serde(skip_serializing_if = "Vec::is_empty")]
            sampled: Vec<SampledRow>,
        }
        println!(
            "{}",
            serde_json::to_string(&UsOut {
                report: &report,
                sampled
            })
            .expect("report serializes")
        );
        return Ok(());
    }

    print_us_text(&report);
    for row in &sampled {
        println!("sampled {}: us={}", row.ideal, row.us);
    }
    Ok(())
}

fn print_us_text(report: &UsReport) {
    let s = &report.semigroup;
    println!(
        "semigroup {s}: genus {}, frobenius {}, multiplicity {}, embedding dimension {}",
        s.genus(),
        s.frobenius(),
        s.multiplicity(),
        s.embedding_dimension()
    );
    println!("ideal {}", report.ideal);
    if report.regular {
        println!("regular=true, us={}", report.us);
        return;
    }
    println!(
        "us={}, blowup={}, conductor={}, rn={}",
        report.us,
        report.witnesses.blowup,
        s.conductor_number(),
        report.witnesses.reduction_number
    );
    let gens = match report.pred_gens {
        Some(v) => v.to_string(),
        None => "n/a".into(),
    };
    println!(
        "predicates: gens={gens}, blowup-regular={}, closure-iso={}, conductor-iso={}, trace-reflexive={}, ind-conductor={}",
        report.pred_blowup_regular,
        report.pred_closure_iso,
        report.pred_conductor_iso,
        report.pred_trace_reflexive,
        report.pred_ind_conductor
    );
}

fn run_sgp_analyze(args: &SgpAnalyzeArgs, json: bool) -> usplit_core::Result<()> {
    let s = NumericalSemigroup::from_generators(&args.gens)?;
    let apery = if s.is_full_monoid() {
        vec![0]
    } else {
        s.apery_set(s.multiplicity())?
    };
    let reduction_number = s.reduction_number()?;

    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            semigroup: &'a NumericalSemigroup,
            genus: usize,
            conductor: i64,
            embedding_dimension: usize,
            minimal_multiplicity: bool,
            reduction_number: u32,
            apery: &'a [i64],
        }
        println!(
            "{}",
            serde_json::to_string(&Out {
                semigroup: &s,
                genus: s.genus(),
                conductor: s.conductor_number(),
                embedding_dimension: s.embedding_dimension(),
                minimal_multiplicity: s.is_minimal_multiplicity(),
                reduction_number,
                apery: &apery,
            })
            .expect("semigroup serializes")
        );
        return Ok(());
    }

    println!("{s}");
    println!(
        "  minimal generators: {}",
        join(s.minimal_generators(), ", ")
    );
    println!("  gaps: {} (genus {})", join(s.gaps(), ", "), s.genus());
    println!(
        "  frobenius: {}, conductor: {}",
        s.frobenius(),
        s.conductor_number()
    );
    println!(
        "  multiplicity: {}, embedding dimension: {}",
        s.multiplicity(),
        s.embedding_dimension()
    );
    println!("  minimal multiplicity: {}", s.is_minimal_multiplicity());
    println!("  reduction number: {reduction_number}");
    println!(
        "  apery set (mod {}): {}",
        s.multiplicity(),
        join(&apery, ", ")
    );
    Ok(())
}

/// Ideal without its ambient semigroup, for compact JSON rows.
#[derive(Serialize)]
struct IdealJson {
    sporadic: Vec<i64>,
    tail_start: i64,
}

impl From<&RelativeIdeal> for IdealJson {
    fn from(i: &RelativeIdeal) -> Self {
        IdealJson {
            sporadic: i.sporadic().to_vec(),
            tail_start: i.tail_start(),
        }
    }
}

fn run_sgp_ideal(args: &SgpIdealArgs, json: bool) -> usplit_core::Result<()> {
    let s = NumericalSemigroup::from_generators(&args.gens)?;
    let ideal = RelativeIdeal::from_generators(&s, &args.ideal)?;
    let maximal = RelativeIdeal::maximal(&s);
    let ops = args.ops.clone().unwrap_or_else(|| DEFAULT_OPS.to_vec());

    #[derive(Serialize)]
    #[serde(untagged)]
    enum OpValue {
        Ideal(IdealJson),
        Semigroup { generators: Vec<i64> },
        Number(usize),
        Bool(bool),
        Verdict(usplit_core::UlrichVerdict),
    }

    let mut rows: Vec<(String, OpValue, String)> = Vec::new();
    for op in &ops {
        let (value, text) = match op {
            IdealOp::Trace => {
                let t = ideal.trace();
                (OpValue::Ideal(IdealJson::from(&t)), t.to_string())
            }
            IdealOp::Dual => {
                let d = ideal.dual();
                (OpValue::Ideal(IdealJson::from(&d)), d.to_string())
            }
            IdealOp::Dagger => {
                let d = ideal.dagger();
                (OpValue::Ideal(IdealJson::from(&d)), d.to_string())
            }
            IdealOp::Endo => {
                let e = ideal.endo_semigroup();
                let text = e.to_string();
                (
                    OpValue::Semigroup {
                        generators: e.minimal_generators().to_vec(),
                    },
                    text,
                )
            }
            IdealOp::Mu => (OpValue::Number(ideal.mu()), ideal.mu().to_string()),
            IdealOp::Reflexive => (
                OpValue::Bool(ideal.is_reflexive()),
                ideal.is_reflexive().to_string(),
            ),
            IdealOp::Blowup => {
                let b = ideal.blowup()?;
                let text = b.to_string();
                (
                    OpValue::Semigroup {
                        generators: b.minimal_generators().to_vec(),
                    },
                    text,
                )
            }
            IdealOp::Power(n) => {
                let p = ideal.power(*n);
                (OpValue::Ideal(IdealJson::from(&p)), p.to_string())
            }
            IdealOp::Ulrich => {
                let v = ideal.is_ulrich(&maximal)?;
                let text = format!(
                    "translation={}, blowup-module={}, agree={}",
                    v.via_translation, v.via_blowup_module, v.agree
                );
                (OpValue::Verdict(v), text)
            }
        };
        rows.push((op.name(), value, text));
    }

    if json {
        #[derive(Serialize)]
        struct Row<'a> {
            op: &'a str,
            value: &'a OpValue,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            semigroup: String,
            ideal: IdealJson,
            results: Vec<Row<'a>>,
        }
        let out = Out {
            semigroup: s.to_string(),
            ideal: IdealJson::from(&ideal),
            results: rows
                .iter()
                .map(|(op, value, _)| Row { op, value })
                .collect(),
        };
        println!("{}", serde_json::to_string(&out).expect("rows serialize"));
        return Ok(());
    }

    println!("semigroup {s}");
    println!("ideal {ideal}");
    for (op, _, text) in &rows {
        println!("{op}: {text}");
    }
    Ok(())
}

fn run_fiber(args: &FiberArgs, json: bool) -> usplit_core::Result<()> {
    let left = NumericalSemigroup::from_generators(&args.left)?;
    let right = NumericalSemigroup::from_generators(&args.right)?;
    let left_ideal = match args.left_ideal.as_deref() {
        Some(g) => RelativeIdeal::from_generators(&left, g)?,
        None => RelativeIdeal::maximal(&left),
    };
    let right_ideal = match args.right_ideal.as_deref() {
        Some(g) => RelativeIdeal::from_generators(&right, g)?,
        None => RelativeIdeal::maximal(&right),
    };
    let left_us = us_report(&left, Some(&left_ideal))?.us;
    let right_us = us_report(&right, Some(&right_ideal))?.us;
    let us = fiber_us(&left_ideal, &right_ideal)?;

    if json {
        #[derive(Serialize)]
        struct Out {
            left_us: bool,
            right_us: bool,
            us: bool,
        }
        println!(
            "{}",
            serde_json::to_string(&Out {
                left_us,
                right_us,
                us
            })
            .expect("fiber verdict serializes")
        );
        return Ok(());
    }

    println!("left: {left}, ideal {left_ideal}, us={left_us}");
    println!("right: {right}, ideal {right_ideal}, us={right_us}");
    println!("fiber: us={us}");
    Ok(())
}

fn run_enumerate(args: &EnumerateArgs, json: bool) -> usplit_core::Result<()> {
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut counts = vec![0usize; args.genus_max as usize + 1];

    for s in usplit_core::enumerate_semigroups(args.genus_max)? {
        let report = us_report(&s, None)?;
        counts[s.genus()] += 1;
        if json {
            #[derive(Serialize)]
            struct Row<'a> {
                generators: &'a [i64],
                genus: usize,
                us: bool,
            }
            let row = Row {
                generators: s.minimal_generators(),
                genus: s.genus(),
                us: report.us,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&row).expect("row serializes")
            )
            .expect("stdout");
        } else {
            writeln!(out, "{s} genus={} us={}", s.genus(), report.us).expect("stdout");
        }
    }

    if !json {
        writeln!(out, "counts per genus: {}", join(&counts, ",")).expect("stdout");
        writeln!(out, "total={}", counts.iter().sum::<usize>()).expect("stdout");
    }
    out.flush().expect("stdout");
    Ok(())
}

/// The analyze report and each scan row share this shape; field order is
/// part of the documented JSON schema.
#[derive(Serialize)]
struct QuotReport {
    hj: Vec<u64>,
    r: usize,
    ulrich_count: usplit_core::UlrichCount,
    us: bool,
    test_ideal_maximal: bool,
}

impl QuotReport {
    fn new(q: &CyclicQuotient) -> Self {
        let hj = q.hj_fraction();
        QuotReport {
            r: hj.len(),
            hj: hj.terms().to_vec(),
            ulrich_count: q.ulrich_count(),
            us: q.is_us(),
            test_ideal_maximal: q.test_ideal_is_maximal(),
        }
    }

    fn text_fields(&self) -> String {
        format!(
            "hj=[{}], r={}, ulrich_count={}, us={}, test_ideal_maximal={}",
            join(&self.hj, ","),
            self.r,
            self.ulrich_count,
            self.us,
            self.test_ideal_maximal
        )
    }
}

fn run_quot_analyze(args: &QuotAnalyzeArgs, json: bool) -> usplit_core::Result<()> {
    let q = CyclicQuotient::new(args.n, args.a)?;
    let report = QuotReport::new(&q);
    if json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    } else {
        println!("{q}: {}", report.text_fields());
    }
    Ok(())
}

fn run_quot_scan(args: &QuotScanArgs, json: bool) -> usplit_core::Result<()> {
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());

    for n in 2..=args.n_max {
        for a in 1..n {
            let q = match CyclicQuotient::new(n, a) {
                Ok(q) => q,
                Err(Error::InvalidQuotient { .. }) => continue,
                Err(e) => return Err(e),
            };
            let report = QuotReport::new(&q);
            if args.only_us && !report.us {
                continue;
            }
            if json {
                #[derive(Serialize)]
                struct Row {
                    n: u64,
                    a: u64,
                    #[serde(flatten)]
                    report: QuotReport,
                }
                let row = Row { n, a, report };
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&row).expect("row serializes")
                )
                .expect("stdout");
            } else {
                writeln!(out, "{q}: {}", report.text_fields()).expect("stdout");
            }
        }
    }
    out.flush().expect("stdout");
    Ok(())
}

fn run_hyp_classify(args: &HypClassifyArgs, json: bool) -> usplit_core::Result<()> {
    let s = AdeSingularity::new(args.kind, args.dim)?;
    let quotient = match s.cyclic_quotient() {
        Ok(q) => Some(q),
        Err(Error::NotTypeA) => None,
        Err(e) => return Err(e),
    };

    if json {
        #[derive(Serialize)]
        struct QuotJson {
            n: u64,
            a: u64,
        }
        #[derive(Serialize)]
        struct Out {
            kind: AdeKind,
            dim: u32,
            us: bool,
            suspension_dim: u32,
            quotient: Option<QuotJson>,
        }
        println!(
            "{}",
            serde_json::to_string(&Out {
                kind: s.kind(),
                dim: s.dim(),
                us: s.is_us(),
                suspension_dim: s.suspension().dim(),
                quotient: quotient.map(|q| QuotJson { n: q.n(), a: q.a() }),
            })
            .expect("classification serializes")
        );
        return Ok(());
    }

    let quotient = match quotient {
        Some(q) => q.to_string(),
        None => "none".into(),
    };
    println!(
        "{s}: us={}, suspension={}, quotient={quotient}",
        s.is_us(),
        s.suspension()
    );
    Ok(())
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operation_parsing() {
        assert_eq!(parse_op("trace"), Ok(IdealOp::Trace));
        assert_eq!(parse_op("power=3"), Ok(IdealOp::Power(3)));
        assert!(parse_op("power=x").is_err());
        assert!(parse_op("frobnicate").is_err());
        assert_eq!(parse_op("power=3").unwrap().name(), "power=3");
    }

    #[test]
    fn consistency_failures_use_their_own_exit_code() {
        let dump = usplit_core::PredicateDump {
            context: "test".into(),
            predicates: vec![("a".into(), true), ("b".into(), false)],
        };
        let violation = Error::AgreementViolation(Box::new(dump));
        assert_eq!(exit_code(&violation), 3);
        assert_eq!(error_code(&violation), "agreement-violation");
        assert_eq!(exit_code(&Error::EmptyGenerators), 2);
        assert_eq!(error_code(&Error::NotTypeA), "not-type-a");
    }

    #[test]
    fn cli_declaration_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
