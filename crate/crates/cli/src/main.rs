//! Command-line front end: fixture registry, plan construction from flags
//! and family files, parallel sweep driving, and report emission.
//!
//! Exit codes: 0 success, 1 usage or runtime error, 2 when the run completed
//! but a bound/certification/TV check failed (the report carries the
//! machine-readable detail either way).

mod output;
mod parse;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use cyclotype_core::experiment::{
    prepare, CertVerdict, ExperimentPlan, ExperimentReport, FamilySource, PlanOp,
    ReferenceRequest, SweepAccum, SweepMode, Tolerances, WreathRefMode,
};
use cyclotype_core::family::DEFAULT_DEGREE_CAP;
use cyclotype_core::group::{wreath_distribution, WreathMode, WreathSpec};
use cyclotype_core::poly;
use cyclotype_core::Error;

#[derive(Parser)]
#[command(
    name = "cyclotype",
    version,
    about = "Factorization statistics of parametric polynomial families over finite fields",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a single polynomial over F_q.
    Factor(FactorArgs),
    /// Count irreducible specializations and check the density bound.
    CountIrr(SweepArgs),
    /// Factorization-type histogram with reference comparisons.
    Hist(HistArgs),
    /// Histogram of k-th iterates against the wreath-power reference.
    IterateHist(IterateArgs),
    /// Joint factorization types at two values of one coefficient.
    Independence(IndependenceArgs),
    /// Type histogram plus symmetric-group certification.
    Certify(HistArgs),
    /// Exact or sampled cycle-type distribution of the wreath power [S_d]^k.
    WreathDist(WreathArgs),
    /// Fraction of specializations whose critical values are nondegenerate
    /// and distinct.
    MorseSweep(SweepArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Output destination; `-` writes to stdout.
    #[arg(long, default_value = "-")]
    out: String,
    /// Output format.
    #[arg(long, value_parser = ["json", "csv", "table"], default_value = "json")]
    format: String,
}

#[derive(Args)]
struct FactorArgs {
    /// Field cardinality q = p^nu (prime power).
    #[arg(long)]
    q: u64,
    /// Comma-separated coefficients, low to high. Extension-field
    /// coefficients are bracketed coordinate vectors, e.g. "[1,0],[0,1]".
    #[arg(long)]
    poly: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FamilyArgs {
    /// Fixture key (chowla-n3, compose-demo, quad-generic, cubic-generic,
    /// serre-psl32).
    #[arg(long, conflicts_with = "family_file")]
    fixture: Option<String>,
    /// Family-spec JSON file.
    #[arg(long)]
    family_file: Option<String>,
    /// Field cardinality q = p^nu; required with --fixture, overrides the
    /// file's field otherwise.
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Sample this many tuples instead of sweeping exhaustively.
    #[arg(long, conflicts_with = "exhaustive")]
    samples: Option<u64>,
    /// Force an exhaustive sweep (error if the tuple space exceeds the cap).
    #[arg(long)]
    exhaustive: bool,
    /// Run seed; recorded in the report.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: CYCLOTYPE_JOBS or 1). Output does not
    /// depend on it.
    #[arg(long)]
    jobs: Option<usize>,
    /// Override the constant C in the density bound |N − T/den| ≤ C·T/√q.
    #[arg(long)]
    bound_constant: Option<u64>,
    /// Include measured wall time in the report (breaks byte-for-byte
    /// reproducibility of the output).
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct HistArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    /// Reference distribution(s): sn, wreath, psl32 (repeatable).
    #[arg(long = "ref")]
    references: Vec<String>,
    /// Fail (exit 2) when the first TV distance exceeds this.
    #[arg(long)]
    tv_max: Option<f64>,
}

#[derive(Args)]
struct IterateArgs {
    #[command(flatten)]
    hist: HistArgs,
    /// Iterate depth (k ≥ 2).
    #[arg(long)]
    k: u32,
    /// Draws for a sampled wreath reference table.
    #[arg(long, conflicts_with = "wreath_exhaustive")]
    wreath_samples: Option<u64>,
    /// Force exhaustive wreath reference enumeration.
    #[arg(long)]
    wreath_exhaustive: bool,
}

#[derive(Args)]
struct IndependenceArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    /// Exponent index of the pinned coefficient (must be in the support).
    #[arg(long)]
    index: u32,
    /// First value of the pinned coefficient.
    #[arg(long)]
    c: String,
    /// Second value of the pinned coefficient.
    #[arg(long)]
    cprime: String,
    /// Fail (exit 2) when TV(joint, product of marginals) exceeds this.
    #[arg(long)]
    tv_max: Option<f64>,
}

#[derive(Args)]
struct WreathArgs {
    /// Base degree d ≥ 2.
    #[arg(long)]
    d: u32,
    /// Tower height k ≥ 1.
    #[arg(long)]
    k: u32,
    /// Enumerate every element exactly.
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// Aggregate this many sampled draws instead.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{}", first_line(&e.to_string()));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or(s)
}

fn run(cli: Cli) -> Result<u8, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Factor(args) => {
            let field = parse::field_from_q(args.q)?;
            let poly = parse::poly_from_arg(&field, &args.poly)?;
            let factorization = poly::factor(&poly)?;
            let rendered = output::render_factorization(&field, &poly, &factorization, &args.output.format)?;
            write_out(&args.output.out, &rendered)?;
            Ok(0)
        }
        Command::CountIrr(args) => {
            let plan = build_plan(&args, PlanOp::CountIrreducible, vec![], None)?;
            let report = run_plan_with_jobs(&plan, jobs_of(&args), args.timing)?;
            emit(&args.output, &report)?;
            Ok(bound_exit(&report))
        }
        Command::MorseSweep(args) => {
            let plan = build_plan(&args, PlanOp::MorseSweep, vec![], None)?;
            let report = run_plan_with_jobs(&plan, jobs_of(&args), args.timing)?;
            emit(&args.output, &report)?;
            Ok(0)
        }
        Command::Hist(args) => {
            let refs = parse_references(&args.references)?;
            let plan = build_plan(&args.sweep, PlanOp::TypeHistogram, refs, args.tv_max)?;
            let report = run_plan_with_jobs(&plan, jobs_of(&args.sweep), args.sweep.timing)?;
            emit(&args.sweep.output, &report)?;
            Ok(tv_exit(&report, args.tv_max))
        }
        Command::Certify(args) => {
            let refs = parse_references(&args.references)?;
            let plan = build_plan(&args.sweep, PlanOp::Certify, refs, args.tv_max)?;
            let report = run_plan_with_jobs(&plan, jobs_of(&args.sweep), args.sweep.timing)?;
            emit(&args.sweep.output, &report)?;
            let certified = matches!(
                report.certification.as_ref().map(|c| c.verdict),
                Some(CertVerdict::CertifiedSymmetric)
            );
            if !certified {
                return Ok(2);
            }
            Ok(tv_exit(&report, args.tv_max))
        }
        Command::IterateHist(args) => {
            if args.k < 2 {
                return Err(Box::new(Error::InvalidInput(
                    "iterate-hist needs --k >= 2".into(),
                )));
            }
            let mut refs = parse_references(&args.hist.references)?;
            if refs.is_empty() {
                let mode = if args.wreath_exhaustive {
                    WreathRefMode::Exhaustive
                } else if let Some(n) = args.wreath_samples {
                    WreathRefMode::Sampled { n_samples: n }
                } else {
                    WreathRefMode::Auto
                };
                refs.push(ReferenceRequest::Wreath(mode));
            }
            let mut plan = build_plan(
                &args.hist.sweep,
                PlanOp::IterateHistogram,
                refs,
                args.hist.tv_max,
            )?;
            plan.iterate_k = args.k;
            let report = run_plan_with_jobs(&plan, jobs_of(&args.hist.sweep), args.hist.sweep.timing)?;
            emit(&args.hist.sweep.output, &report)?;
            Ok(tv_exit(&report, args.hist.tv_max))
        }
        Command::Independence(args) => {
            let family = resolve_family(&args.sweep.family)?;
            let field = match &family {
                FamilySource::Fixture { field, .. } => field.clone(),
                FamilySource::Inline(spec) => spec.field().clone(),
            };
            let c = parse::elem_from_arg(&field, &args.c)?;
            let c_prime = parse::elem_from_arg(&field, &args.cprime)?;
            let op = PlanOp::Independence {
                index: args.index,
                c,
                c_prime,
            };
            let plan = plan_from_sweep(&args.sweep, family, op, vec![], args.tv_max)?;
            let report = run_plan_with_jobs(&plan, jobs_of(&args.sweep), args.sweep.timing)?;
            emit(&args.sweep.output, &report)?;
            let tv = report
                .independence
                .as_ref()
                .map(|i| i.tv_joint_vs_product)
                .unwrap_or(0.0);
            if args.tv_max.is_some_and(|max| tv > max) {
                return Ok(2);
            }
            Ok(0)
        }
        Command::WreathDist(args) => {
            let spec = WreathSpec::new(args.d, args.k)?;
            let mode = if let Some(n) = args.samples {
                WreathMode::Sampled {
                    n_samples: n,
                    seed: args.seed,
                }
            } else {
                WreathMode::Exhaustive
            };
            let table = wreath_distribution(spec, mode)?;
            let rendered = output::render_dist_table(&table, &args.output.format)?;
            write_out(&args.output.out, &rendered)?;
            Ok(0)
        }
    }
}

fn jobs_of(args: &SweepArgs) -> usize {
    args.jobs
        .or_else(|| {
            std::env::var("CYCLOTYPE_JOBS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1)
        .max(1)
}

fn resolve_family(args: &FamilyArgs) -> Result<FamilySource, Box<dyn std::error::Error>> {
    if let Some(key) = &args.fixture {
        let q = args.q.ok_or_else(|| {
            Box::new(Error::InvalidInput("--fixture requires --q".into()))
                as Box<dyn std::error::Error>
        })?;
        let field = parse::field_from_q(q)?;
        return Ok(FamilySource::Fixture {
            key: key.clone(),
            field,
        });
    }
    if let Some(path) = &args.family_file {
        let text = std::fs::read_to_string(path)?;
        return Ok(parse::family_from_json(&text, args.q)?);
    }
    Err(Box::new(Error::InvalidInput(
        "need --fixture or --family-file".into(),
    )))
}

fn build_plan(
    args: &SweepArgs,
    op: PlanOp,
    comparisons: Vec<ReferenceRequest>,
    tv_max: Option<f64>,
) -> Result<ExperimentPlan, Box<dyn std::error::Error>> {
    let family = resolve_family(&args.family)?;
    plan_from_sweep(args, family, op, comparisons, tv_max)
}

fn plan_from_sweep(
    args: &SweepArgs,
    family: FamilySource,
    op: PlanOp,
    comparisons: Vec<ReferenceRequest>,
    tv_max: Option<f64>,
) -> Result<ExperimentPlan, Box<dyn std::error::Error>> {
    let mode = if let Some(n) = args.samples {
        SweepMode::Sampled { n_samples: n }
    } else if args.exhaustive {
        SweepMode::Exhaustive
    } else {
        SweepMode::Auto
    };
    Ok(ExperimentPlan {
        family,
        iterate_k: 1,
        mode,
        seed: args.seed,
        op,
        comparisons,
        tolerances: Tolerances {
            bound_constant: args.bound_constant,
            tv_max,
        },
        sweep_cap: cyclotype_core::experiment::DEFAULT_SWEEP_CAP,
        degree_cap: DEFAULT_DEGREE_CAP,
    })
}

fn parse_references(
    names: &[String],
) -> Result<Vec<ReferenceRequest>, Box<dyn std::error::Error>> {
    names
        .iter()
        .map(|name| match name.as_str() {
            "sn" => Ok(ReferenceRequest::SymmetricGroup),
            "wreath" => Ok(ReferenceRequest::Wreath(WreathRefMode::Auto)),
            "psl32" => Ok(ReferenceRequest::Psl32),
            other => Err(Box::new(Error::InvalidInput(format!(
                "unknown reference {other:?}; expected sn, wreath, or psl32"
            ))) as Box<dyn std::error::Error>),
        })
        .collect()
}

/// Runs a plan, splitting the index space across `jobs` workers. Partial
/// accumulators merge commutatively, so the report bytes do not depend on
/// the worker count.
fn run_plan_with_jobs(
    plan: &ExperimentPlan,
    jobs: usize,
    timing: bool,
) -> Result<ExperimentReport, Error> {
    let prepared = prepare(plan)?;
    let total = prepared.total_points();
    let start = Instant::now();
    let accum = if jobs <= 1 || total < jobs as u64 {
        prepared.sweep_range(0, total)?
    } else {
        let chunk = total.div_ceil(jobs as u64);
        let partials: Vec<Result<SweepAccum, Error>> = std::thread::scope(|scope| {
            let prepared = &prepared;
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let lo = j as u64 * chunk;
                    let hi = (lo + chunk).min(total);
                    scope.spawn(move || prepared.sweep_range(lo, hi))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        });
        let mut acc = SweepAccum::default();
        for partial in partials {
            acc = acc.merge(partial?);
        }
        acc
    };
    let elapsed = timing.then(|| start.elapsed().as_millis() as u64);
    prepared.assemble(accum, elapsed)
}

fn emit(out: &OutputArgs, report: &ExperimentReport) -> Result<(), Box<dyn std::error::Error>> {
    let rendered = output::render_report(report, &out.format)?;
    write_out(&out.out, &rendered)
}

fn write_out(dest: &str, content: &str) -> Result<(), Box<dyn std::error::Error>> {
    if dest == "-" {
        std::io::stdout().write_all(content.as_bytes())?;
    } else {
        std::fs::write(dest, content)?;
    }
    Ok(())
}

fn bound_exit(report: &ExperimentReport) -> u8 {
    match &report.bound {
        Some(b) if !b.pass => 2,
        _ => 0,
    }
}

fn tv_exit(report: &ExperimentReport, tv_max: Option<f64>) -> u8 {
    if let Some(max) = tv_max {
        if report.tv.first().is_some_and(|t| t.tv > max) {
            return 2;
        }
    }
    0
}
