//! `fuzzyrel` — evaluate fuzzy-set expressions and brute-force-verify
//! inclusion relations between them.
//!
//! Four subcommands:
//!
//! * `eval` applies a set expression to named sets loaded from a JSON file;
//! * `check` verifies a relation statement over a uniform degree grid
//!   (optionally also at seeded random samples);
//! * `theorems` lists and checks the built-in catalog of relations;
//! * `hunt` searches for counterexamples, or for equality points lying
//!   outside a claimed equality condition.
//!
//! Exit codes: 0 when every check holds (or on plain success), 1 for input
//! or evaluation errors, 2 for usage errors, 3 when a violation was
//! verified. Output carries no timing and all maps are sorted, so two runs
//! with identical flags and inputs produce byte-identical output; the
//! `FUZZYREL_WORKERS` environment variable overrides `--workers` without
//! affecting results.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use fuzzyrel::dsl::{
    eval_set, format_expr, parse_constraint_list, parse_expr, parse_statement,
};
use fuzzyrel::file::parse_sets_file;
use fuzzyrel::registry::{self, ParamSpec, Record, TheoremEntry};
use fuzzyrel::verify::{
    check_entry, check_scalar_lemma, grid_check, probe_equality, random_check, run_full_suite,
    CheckReport, CheckSettings, GridSpec, RandomSpec, Verdict, VerifyError,
};
use fuzzyrel::{QuotientMode, RelationStatement, Tolerance};

const EXIT_OK: i32 = 0;
const EXIT_INPUT: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_VIOLATION: i32 = 3;

/// How many violation / finding lines the text format prints per report
/// outside of `hunt`, which shows everything the report kept.
const DETAIL_SUMMARY: usize = 5;

#[derive(Parser)]
#[command(
    name = "fuzzyrel",
    version,
    about = "Evaluate fuzzy-set expressions and verify inclusion relations",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a set expression against named sets from a JSON file
    Eval(EvalArgs),
    /// Verify a relation statement over a uniform degree grid
    Check(CheckArgs),
    /// List or check the built-in catalog of relations
    Theorems(TheoremsArgs),
    /// Search for counterexamples or for equality outside a claimed condition
    Hunt(HuntArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// JSON file: {"universe": [...], "sets": {"A": {...}, ...}}
    #[arg(long, value_name = "PATH")]
    sets: PathBuf,
    /// Set expression, e.g. "A [+] B" or "0.5 * (A | B)"
    #[arg(long, value_name = "EXPR")]
    expr: String,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Args)]
struct CheckArgs {
    /// Relation statement, e.g. "A .* B <= A & B"
    #[arg(value_name = "STATEMENT", conflicts_with = "statement")]
    positional: Option<String>,
    /// The statement, as an alternative to the positional argument
    #[arg(long, value_name = "STATEMENT")]
    statement: Option<String>,
    /// Extra hypotheses (repeatable; commas separate constraints)
    #[arg(long, value_name = "CONSTRAINTS")]
    given: Vec<String>,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Args)]
struct TheoremsArgs {
    #[command(subcommand)]
    action: TheoremsAction,
}

#[derive(Subcommand)]
enum TheoremsAction {
    /// List every catalog entry
    List {
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Check one catalog entry, sweeping its parameter unless pinned
    Check {
        /// Catalog id, e.g. T7, P1 or S3
        id: String,
        /// Pin a natural parameter (entries whose parameter is named m)
        #[arg(long, value_name = "N")]
        m: Option<u32>,
        /// Pin a real parameter (entries whose parameter is named p)
        #[arg(long, value_name = "X", allow_hyphen_values = true)]
        p: Option<f64>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Check the whole catalog at its default resolutions
    CheckAll {
        #[command(flatten)]
        config: ConfigArgs,
    },
}

#[derive(Args)]
struct HuntArgs {
    /// Catalog id, or a relation statement
    target: String,
    /// What to hunt for
    #[arg(long, value_enum)]
    mode: HuntMode,
    /// Keep at most this many findings in the report
    #[arg(long, default_value_t = 50, value_name = "N")]
    limit: usize,
    /// Pin a natural parameter (catalog ids whose parameter is named m)
    #[arg(long, value_name = "N")]
    m: Option<u32>,
    /// Pin a real parameter (catalog ids whose parameter is named p)
    #[arg(long, value_name = "X", allow_hyphen_values = true)]
    p: Option<f64>,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HuntMode {
    /// Grid (or, with --samples, random) counterexample search
    Violation,
    /// Equality points at which the claimed equality condition is false
    EqualityNecessity,
}

#[derive(Args)]
struct ConfigArgs {
    /// Comparison tolerance (0 < tolerance < 0.001)
    #[arg(long, default_value_t = 1e-9, value_name = "EPS")]
    tolerance: f64,
    /// Grid step, the reciprocal of a whole number (default 0.05, or 0.1
    /// from four variables up)
    #[arg(long, value_name = "STEP")]
    resolution: Option<f64>,
    /// Zero-divisor policy for the bounded quotient
    #[arg(long, value_enum, default_value_t = QuotientArg::Limit)]
    quotient_mode: QuotientArg,
    /// Also check this many seeded random samples (check), or sample
    /// instead of enumerating (hunt --mode violation)
    #[arg(long, value_name = "N")]
    samples: Option<u64>,
    /// Seed for random sampling
    #[arg(long, default_value_t = 0, value_name = "SEED")]
    seed: u64,
    /// Grid worker threads; FUZZYREL_WORKERS overrides this
    #[arg(long, value_name = "N")]
    workers: Option<usize>,
    /// Report format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QuotientArg {
    /// Error on any zero divisor degree
    Strict,
    /// Zero divisors take the one-sided limit value
    Limit,
}

impl From<QuotientArg> for QuotientMode {
    fn from(arg: QuotientArg) -> Self {
        match arg {
            QuotientArg::Strict => QuotientMode::Strict,
            QuotientArg::Limit => QuotientMode::Limit,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// A failure with its exit class; usage errors exit 2, input errors 1.
enum Failure {
    Input(String),
    Usage(String),
}

type CliResult<T> = Result<T, Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

/// Maps verification errors onto exit classes: bad flag values and catalog
/// misuse are usage errors, everything else is an input error.
fn verify_failure(e: VerifyError) -> Failure {
    match e {
        VerifyError::BadResolution(_) | VerifyError::Registry(_) => Failure::Usage(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.exit_code() == 0 { EXIT_OK } else { EXIT_USAGE };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Check(args) => cmd_check(args),
        Command::Theorems(args) => cmd_theorems(args),
        Command::Hunt(args) => cmd_hunt(args),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            EXIT_USAGE
        }
    }
}

// ---------------------------------------------------------------- helpers

fn settings_from(config: &ConfigArgs) -> CliResult<CheckSettings> {
    let tolerance = Tolerance::new(config.tolerance).map_err(usage)?;
    let workers = resolve_workers(config.workers)?;
    Ok(CheckSettings {
        tolerance,
        quotient_mode: config.quotient_mode.into(),
        workers,
        ..CheckSettings::default()
    })
}

fn resolve_workers(flag: Option<usize>) -> CliResult<Option<usize>> {
    let chosen = match std::env::var("FUZZYREL_WORKERS") {
        Ok(raw) => Some(raw.trim().parse::<usize>().map_err(|_| {
            Failure::Usage(format!(
                "FUZZYREL_WORKERS must be a positive integer, got {raw:?}"
            ))
        })?),
        Err(std::env::VarError::NotPresent) => flag,
        Err(e) => return Err(Failure::Usage(format!("FUZZYREL_WORKERS: {e}"))),
    };
    if chosen == Some(0) {
        return Err(Failure::Usage("worker count must be at least 1".into()));
    }
    Ok(chosen)
}

/// The grid requested via `--resolution`, if any.
fn explicit_grid(config: &ConfigArgs) -> CliResult<Option<GridSpec>> {
    config
        .resolution
        .map(|r| GridSpec::from_resolution(r).map_err(verify_failure))
        .transpose()
}

/// The grid to use for an ad-hoc statement of the given arity.
fn grid_for(config: &ConfigArgs, arity: usize) -> CliResult<GridSpec> {
    Ok(match explicit_grid(config)? {
        Some(grid) => grid,
        None => GridSpec::default_for_arity(arity),
    })
}

fn reject(cond: bool, msg: &str) -> CliResult<()> {
    if cond {
        Err(Failure::Usage(msg.into()))
    } else {
        Ok(())
    }
}

/// Resolves `--m`/`--p` against a record's parameter name.
fn pin_value(param_name: Option<&str>, m: Option<u32>, p: Option<f64>) -> CliResult<Option<f64>> {
    if m.is_some() && p.is_some() {
        return Err(Failure::Usage("give at most one of --m and --p".into()));
    }
    match (param_name, m, p) {
        (_, None, None) => Ok(None),
        (Some("m"), Some(v), None) => Ok(Some(f64::from(v))),
        (Some("p"), None, Some(v)) => Ok(Some(v)),
        (Some(name), _, _) => Err(Failure::Usage(format!(
            "this record's parameter is named {name}; pin it with --{name}"
        ))),
        (None, _, _) => Err(Failure::Usage("this record takes no parameter".into())),
    }
}

/// Formats a value with six significant digits, trimming trailing zeros.
fn six_sig(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{v:.5e}")
        .parse()
        .expect("scientific float form reparses");
    rounded.to_string()
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Violated => "violated",
        Verdict::Error => "error",
    }
}

fn assignment_text(map: &BTreeMap<String, f64>) -> String {
    map.iter()
        .map(|(name, value)| format!("{name} = {}", six_sig(*value)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn json_string(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

/// Reports as a JSON value; `serde_json::Value` objects sort their keys.
fn reports_value(reports: &[CheckReport]) -> Value {
    serde_json::to_value(reports).expect("report serialization cannot fail")
}

fn print_report_text(r: &CheckReport, detail: usize) {
    if let Some(id) = &r.id {
        if r.params.is_empty() {
            println!("entry: {id}");
        } else {
            println!("entry: {id} ({})", assignment_text(&r.params));
        }
    }
    println!("statement: {}", r.statement);
    println!("mode: {}", r.mode);
    if let Some(res) = r.resolution {
        println!("resolution: {}", six_sig(res));
    }
    if let Some(samples) = r.samples {
        println!("samples: {samples}");
    }
    if let Some(seed) = r.seed {
        println!("seed: {seed}");
    }
    if let Some(generator) = r.generator {
        println!("generator: {generator}");
    }
    println!("tolerance: {}", r.tolerance);
    println!("examined: {}", r.examined);
    println!("satisfying: {}", r.satisfying);
    if let Some(skipped) = r.skipped {
        println!("skipped: {skipped}");
    }
    if r.violations_found > 0 {
        println!("violations: {}", r.violations_found);
        for v in r.violations.iter().take(detail) {
            let pair = v
                .chain_pair
                .map(|[i, j]| format!(" (chain step {i} vs {j})"))
                .unwrap_or_default();
            println!(
                "  {}: lhs = {}, rhs = {}, gap = {}{pair}",
                assignment_text(&v.assignment),
                six_sig(v.lhs),
                six_sig(v.rhs),
                six_sig(v.gap)
            );
        }
        let shown = r.violations.len().min(detail);
        if (r.violations_found as usize) > shown {
            println!("  ... and {} more", r.violations_found as usize - shown);
        }
    }
    if let Some(eq) = &r.equality_points {
        println!("equality points: {}", eq.count);
    }
    if let Some(found) = r.necessity_found {
        println!("equality outside the claimed condition: {found}");
        if let Some(findings) = &r.necessity_findings {
            for f in findings.iter().take(detail) {
                println!(
                    "  {}: lhs = {}, rhs = {}",
                    assignment_text(&f.assignment),
                    six_sig(f.lhs),
                    six_sig(f.rhs)
                );
            }
            let shown = findings.len().min(detail);
            if (found as usize) > shown {
                println!("  ... and {} more", found as usize - shown);
            }
        }
    }
    if let Some(w) = &r.witness {
        println!(
            "witness: {} (value = {})",
            assignment_text(&w.assignment),
            six_sig(w.value)
        );
    }
    if let Some(e) = &r.error {
        println!("error: {e}");
    }
    println!("verdict: {}", verdict_label(r.verdict));
}

fn print_reports_text(reports: &[CheckReport], detail: usize) {
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            println!();
        }
        print_report_text(r, detail);
    }
    if reports.len() > 1 {
        let holds = reports.iter().filter(|r| r.verdict == Verdict::Holds).count();
        let violated = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Violated)
            .count();
        let errors = reports.iter().filter(|r| r.verdict == Verdict::Error).count();
        println!();
        println!(
            "checks: {} (holds: {holds}, violated: {violated}, errors: {errors})",
            reports.len()
        );
    }
}

fn emit_reports(reports: &[CheckReport], format: FormatArg, detail: usize) {
    match format {
        FormatArg::Text => print_reports_text(reports, detail),
        FormatArg::Json => println!("{}", json_string(&reports_value(reports))),
    }
}

fn exit_for(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Violated) {
        EXIT_VIOLATION
    } else if reports.iter().any(|r| r.verdict == Verdict::Error) {
        EXIT_INPUT
    } else {
        EXIT_OK
    }
}

// ------------------------------------------------------------- subcommands

fn cmd_eval(args: EvalArgs) -> CliResult<i32> {
    let settings = settings_from(&args.config)?;
    let text = std::fs::read_to_string(&args.sets)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", args.sets.display())))?;
    let file = parse_sets_file(&text).map_err(input)?;
    let expr = parse_expr(&args.expr).map_err(input)?;
    let result = eval_set(&expr, &file.universe, &file.sets, settings.quotient_mode)
        .map_err(input)?;
    match args.config.format {
        FormatArg::Text => {
            for (label, degree) in file.universe.labels().iter().zip(result.degrees()) {
                println!("{label}: {}", six_sig(degree.value()));
            }
        }
        FormatArg::Json => {
            let degrees: Vec<f64> = result.degrees().iter().map(|d| d.value()).collect();
            let value = serde_json::json!({
                "expression": format_expr(&expr),
                "universe": file.universe.labels(),
                "degrees": degrees,
            });
            println!("{}", json_string(&value));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check(args: CheckArgs) -> CliResult<i32> {
    let settings = settings_from(&args.config)?;
    let text = args
        .positional
        .as_deref()
        .or(args.statement.as_deref())
        .ok_or_else(|| {
            Failure::Usage("give a statement, either positionally or via --statement".into())
        })?;
    let mut statement = parse_statement(text).map_err(input)?;
    if !args.given.is_empty() {
        let joined = args.given.join(", ");
        let extra = parse_constraint_list(&joined).map_err(input)?;
        statement = statement.with_constraints(extra);
    }
    let grid = grid_for(&args.config, statement.variables.len())?;
    let mut reports = vec![grid_check(&statement, grid, &settings).map_err(verify_failure)?];
    if let Some(samples) = args.config.samples {
        reports.push(random_check(
            &statement,
            RandomSpec {
                samples,
                seed: args.config.seed,
            },
            &settings,
        ));
    }
    emit_reports(&reports, args.config.format, DETAIL_SUMMARY);
    Ok(exit_for(&reports))
}

fn cmd_theorems(args: TheoremsArgs) -> CliResult<i32> {
    match args.action {
        TheoremsAction::List { config } => {
            match config.format {
                FormatArg::Text => print_catalog_text(),
                FormatArg::Json => println!("{}", json_string(&registry::catalog_json())),
            }
            Ok(EXIT_OK)
        }
        TheoremsAction::Check { id, m, p, config } => {
            reject(
                config.samples.is_some(),
                "--samples applies to check and hunt --mode violation",
            )?;
            let settings = settings_from(&config)?;
            let record = registry::find_record(&id)
                .ok_or_else(|| Failure::Usage(format!("unknown catalog id {id:?}")))?;
            let reports = match record {
                Record::Theorem(entry) => {
                    let pin = pin_value(entry.parameter.as_ref().map(ParamSpec::name), m, p)?;
                    check_entry(entry, pin, explicit_grid(&config)?, &settings)
                        .map_err(verify_failure)?
                }
                Record::Scalar(record) => {
                    let pin = pin_value(record.parameter.as_ref().map(ParamSpec::name), m, p)?;
                    let grid = scalar_grid(&config)?;
                    check_scalar_lemma(record, pin, grid, &settings).map_err(verify_failure)?
                }
            };
            emit_reports(&reports, config.format, DETAIL_SUMMARY);
            Ok(exit_for(&reports))
        }
        TheoremsAction::CheckAll { config } => {
            reject(
                config.samples.is_some(),
                "--samples applies to check and hunt --mode violation",
            )?;
            reject(
                config.resolution.is_some(),
                "check-all always uses each record's default resolution",
            )?;
            let settings = settings_from(&config)?;
            let reports = run_full_suite(&settings);
            emit_reports(&reports, config.format, DETAIL_SUMMARY);
            Ok(exit_for(&reports))
        }
    }
}

/// Scalar records grid: steps per unit interval (default twenty).
fn scalar_grid(config: &ConfigArgs) -> CliResult<GridSpec> {
    Ok(match explicit_grid(config)? {
        Some(grid) => grid,
        None => GridSpec::from_steps(20).map_err(verify_failure)?,
    })
}

fn print_catalog_text() {
    println!("set-level entries:");
    for entry in registry::list_theorems() {
        println!("  {:<4} {}{}", entry.id, entry.title, param_note(&entry.parameter));
    }
    println!();
    println!("scalar records:");
    for record in registry::scalar_records() {
        println!(
            "  {:<4} {}{}",
            record.id,
            record.title,
            param_note(&record.parameter)
        );
    }
}

fn param_note(parameter: &Option<ParamSpec>) -> String {
    match parameter {
        Some(spec) => {
            let values: Vec<String> = spec.sweep_values().iter().map(|v| six_sig(*v)).collect();
            format!(" [{} in {{{}}}]", spec.name(), values.join(", "))
        }
        None => String::new(),
    }
}

fn cmd_hunt(args: HuntArgs) -> CliResult<i32> {
    if args.limit == 0 {
        return Err(Failure::Usage("--limit must be at least 1".into()));
    }
    let mut settings = settings_from(&args.config)?;
    settings.violation_cap = args.limit;
    settings.necessity_cap = args.limit;
    match args.mode {
        HuntMode::Violation => hunt_violation(&args, &settings),
        HuntMode::EqualityNecessity => {
            reject(
                args.config.samples.is_some(),
                "--samples applies to check and hunt --mode violation",
            )?;
            hunt_necessity(&args, &settings)
        }
    }
}

fn hunt_violation(args: &HuntArgs, settings: &CheckSettings) -> CliResult<i32> {
    let reports: Vec<CheckReport> = match registry::find_record(&args.target) {
        Some(Record::Theorem(entry)) => {
            let pin = pin_value(entry.parameter.as_ref().map(ParamSpec::name), args.m, args.p)?;
            match args.config.samples {
                Some(samples) => entry_statements(entry, pin)?
                    .into_iter()
                    .map(|(params, statement)| {
                        let spec = RandomSpec {
                            samples,
                            seed: args.config.seed,
                        };
                        tag_report(random_check(&statement, spec, settings), entry.id, params)
                    })
                    .collect(),
                None => {
                    let mut reports = check_entry(entry, pin, explicit_grid(&args.config)?, settings)
                        .map_err(verify_failure)?;
                    reports.retain(|r| r.mode != "equality-probe");
                    reports
                }
            }
        }
        Some(Record::Scalar(record)) => {
            reject(
                args.config.samples.is_some(),
                "--samples does not apply to scalar records",
            )?;
            let pin = pin_value(record.parameter.as_ref().map(ParamSpec::name), args.m, args.p)?;
            let grid = scalar_grid(&args.config)?;
            check_scalar_lemma(record, pin, grid, settings).map_err(verify_failure)?
        }
        None => {
            reject(
                args.m.is_some() || args.p.is_some(),
                "--m and --p only apply to catalog ids",
            )?;
            let statement = parse_statement(&args.target).map_err(input)?;
            match args.config.samples {
                Some(samples) => vec![random_check(
                    &statement,
                    RandomSpec {
                        samples,
                        seed: args.config.seed,
                    },
                    settings,
                )],
                None => {
                    let grid = grid_for(&args.config, statement.variables.len())?;
                    vec![grid_check(&statement, grid, settings).map_err(verify_failure)?]
                }
            }
        }
    };
    render_hunt(&reports, args.config.format, HuntMode::Violation);
    Ok(exit_for(&reports))
}

fn hunt_necessity(args: &HuntArgs, settings: &CheckSettings) -> CliResult<i32> {
    let reports: Vec<CheckReport> = match registry::find_record(&args.target) {
        Some(Record::Theorem(entry)) => {
            let pin = pin_value(entry.parameter.as_ref().map(ParamSpec::name), args.m, args.p)?;
            let mut reports = check_entry(entry, pin, explicit_grid(&args.config)?, settings)
                .map_err(verify_failure)?;
            reports.retain(|r| r.mode == "equality-probe");
            if reports.is_empty() {
                return Err(Failure::Input(format!(
                    "{} records no equality condition to probe",
                    entry.id
                )));
            }
            reports
        }
        Some(Record::Scalar(record)) => {
            return Err(Failure::Input(format!(
                "{} is a scalar record with no equality condition",
                record.id
            )));
        }
        None => {
            reject(
                args.m.is_some() || args.p.is_some(),
                "--m and --p only apply to catalog ids",
            )?;
            let statement = parse_statement(&args.target).map_err(input)?;
            let grid = grid_for(&args.config, statement.variables.len())?;
            vec![probe_equality(&statement, grid, settings).map_err(verify_failure)?]
        }
    };
    render_hunt(&reports, args.config.format, HuntMode::EqualityNecessity);
    Ok(exit_for(&reports))
}

/// Statements a catalog entry expands to (one per swept parameter value).
fn entry_statements(
    entry: &TheoremEntry,
    pin: Option<f64>,
) -> CliResult<Vec<(BTreeMap<String, f64>, RelationStatement)>> {
    match (&entry.parameter, pin) {
        (None, _) => Ok(vec![(BTreeMap::new(), entry.statement().map_err(usage)?)]),
        (Some(spec), pin) => {
            let values = match pin {
                Some(v) => vec![v],
                None => spec.sweep_values(),
            };
            values
                .into_iter()
                .map(|v| {
                    let statement = entry.instantiate(v).map_err(usage)?;
                    let mut params = BTreeMap::new();
                    params.insert(spec.name().to_string(), v);
                    Ok((params, statement))
                })
                .collect()
        }
    }
}

fn tag_report(mut r: CheckReport, id: &str, params: BTreeMap<String, f64>) -> CheckReport {
    r.id = Some(id.to_string());
    r.params = params;
    r
}

fn render_hunt(reports: &[CheckReport], format: FormatArg, mode: HuntMode) {
    match format {
        FormatArg::Json => println!("{}", json_string(&reports_value(reports))),
        FormatArg::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print_report_text(r, usize::MAX);
                let clean = r.error.is_none() && r.violations_found == 0;
                if mode == HuntMode::Violation && clean && r.mode != "witness" {
                    match (r.resolution, r.samples) {
                        (Some(res), _) => println!("none found at resolution {}", six_sig(res)),
                        (None, Some(n)) => println!("none found in {n} samples"),
                        _ => println!("none found"),
                    }
                }
                if mode == HuntMode::EqualityNecessity
                    && r.error.is_none()
                    && r.necessity_found == Some(0)
                {
                    println!("no equality points outside the claimed condition at this resolution");
                }
            }
        }
    }
}
