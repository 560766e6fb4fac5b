//! Exhaustive and randomized verification of relation statements.
//!
//! Every operation in this crate acts coordinate by coordinate, so a
//! relation between compound expressions holds for all fuzzy sets on all
//! finite universes exactly when it holds for every tuple of membership
//! degrees in `[0, 1]^n`, one coordinate per set variable. The checkers
//! here range over those tuples: exhaustively on a uniform grid, or by
//! seeded uniform sampling. Grid scans are parallelized by first
//! coordinate and merged in order, so a report is byte-identical for any
//! worker count.

mod equivalence;
mod report;

pub use equivalence::{set_kernel_equivalence, EquivalenceReport};
pub use report::{CheckReport, EqualityPoints, NecessityFinding, Verdict, Violation, Witness};

use std::collections::BTreeMap;
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::dsl::{
    eval_arith, eval_degree, format_expr, format_statement, parse_arith, parse_constraint_list,
    Arith, Constraint, DegreeBindings, Expr, Relation, RelationStatement,
};
use crate::ops::QuotientMode;
use crate::registry::{self, EntryKind, RegistryError, ScalarRecord, TheoremEntry};
use crate::set::Tolerance;

/// Most set variables a grid check will enumerate.
pub const MAX_GRID_ARITY: usize = 5;
/// Most assignments any single grid check may visit.
pub const GRID_TUPLE_CAP: u128 = 200_000_000;
/// Default grid resolution for statements with up to three variables.
pub const DEFAULT_RESOLUTION: f64 = 0.05;
/// Default grid resolution for statements with four or more variables.
pub const WIDE_RESOLUTION: f64 = 0.1;

/// Errors raised before a check can run.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("resolution {0} is not the reciprocal of a whole number of steps")]
    BadResolution(f64),
    #[error("{arity} set variables exceed the grid limit of {limit}")]
    ArityTooLarge { arity: usize, limit: usize },
    #[error("grid would visit {tuples} assignments; the cap is {cap}")]
    GridTooLarge { tuples: u128, cap: u128 },
    #[error("statement carries no equality condition to probe")]
    NoEqualityClaim,
    #[error(transparent)]
    Registry(#[from] RegistryError),
}

/// A uniform grid over `[0, 1]` with `steps + 1` points; the endpoints are
/// exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    steps: u32,
}

impl GridSpec {
    /// A grid with the given step count (at least 1).
    pub fn from_steps(steps: u32) -> Result<Self, VerifyError> {
        if steps == 0 {
            return Err(VerifyError::BadResolution(f64::INFINITY));
        }
        Ok(GridSpec { steps })
    }

    /// A grid whose step is `resolution`, which must be `1/k` for a whole
    /// number `k >= 1` (within a 1e-6 relative slack).
    pub fn from_resolution(resolution: f64) -> Result<Self, VerifyError> {
        if !resolution.is_finite() || resolution <= 0.0 || resolution > 1.0 {
            return Err(VerifyError::BadResolution(resolution));
        }
        let inverse = 1.0 / resolution;
        let steps = inverse.round();
        if (inverse - steps).abs() > 1e-6 * inverse || !(1.0..=1e6).contains(&steps) {
            return Err(VerifyError::BadResolution(resolution));
        }
        Ok(GridSpec {
            steps: steps as u32,
        })
    }

    /// The default grid for a statement with `arity` set variables: 0.05
    /// up to three variables, 0.1 beyond.
    pub fn default_for_arity(arity: usize) -> Self {
        if arity >= 4 {
            GridSpec { steps: 10 }
        } else {
            GridSpec { steps: 20 }
        }
    }

    pub fn steps(self) -> u32 {
        self.steps
    }

    /// Number of grid points per dimension.
    pub fn points(self) -> u32 {
        self.steps + 1
    }

    pub fn resolution(self) -> f64 {
        1.0 / f64::from(self.steps)
    }

    /// The `idx`-th grid value; `value(0) == 0.0` and
    /// `value(steps) == 1.0` exactly.
    pub fn value(self, idx: u32) -> f64 {
        f64::from(idx) / f64::from(self.steps)
    }
}

/// Sampling plan for random mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpec {
    pub samples: u64,
    pub seed: u64,
}

/// Knobs shared by every checker.
#[derive(Debug, Clone)]
pub struct CheckSettings {
    pub tolerance: Tolerance,
    pub quotient_mode: QuotientMode,
    /// Worker threads for grid scans; `None` uses the process-wide pool.
    pub workers: Option<usize>,
    /// Most violations kept in a report (the total is always counted).
    pub violation_cap: usize,
    /// Most equality assignments kept in a report.
    pub equality_sample_cap: usize,
    /// Most necessity findings kept in a report.
    pub necessity_cap: usize,
}

impl Default for CheckSettings {
    fn default() -> Self {
        CheckSettings {
            tolerance: Tolerance::default(),
            quotient_mode: QuotientMode::default(),
            workers: None,
            violation_cap: 50,
            equality_sample_cap: 12,
            necessity_cap: 50,
        }
    }
}

fn with_pool<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("building a scoped worker pool cannot fail")
            .install(f),
        None => f(),
    }
}

fn validate_grid(arity: usize, grid: GridSpec) -> Result<(), VerifyError> {
    if arity > MAX_GRID_ARITY {
        return Err(VerifyError::ArityTooLarge {
            arity,
            limit: MAX_GRID_ARITY,
        });
    }
    let tuples = u128::from(grid.points()).pow(arity as u32);
    if tuples > GRID_TUPLE_CAP {
        return Err(VerifyError::GridTooLarge {
            tuples,
            cap: GRID_TUPLE_CAP,
        });
    }
    Ok(())
}

/// Everything a grid scan needs, shared read-only across workers.
struct GridTask<'a> {
    names: &'a [String],
    names_lower: Vec<String>,
    constraints: &'a [Constraint],
    lhs: &'a Expr,
    rhs: &'a Expr,
    relation: Relation,
    claim: Option<&'a Constraint>,
    mode: QuotientMode,
    tolerance: Tolerance,
    violation_cap: usize,
    equality_cap: usize,
    necessity_cap: usize,
}

impl<'a> GridTask<'a> {
    fn new(statement: &'a RelationStatement, settings: &CheckSettings) -> Self {
        GridTask {
            names: &statement.variables,
            names_lower: statement
                .variables
                .iter()
                .map(|n| n.to_ascii_lowercase())
                .collect(),
            constraints: &statement.constraints,
            lhs: &statement.lhs,
            rhs: &statement.rhs,
            relation: statement.relation,
            claim: statement.equality_condition.as_ref(),
            mode: settings.quotient_mode,
            tolerance: settings.tolerance,
            violation_cap: settings.violation_cap,
            equality_cap: settings.equality_sample_cap,
            necessity_cap: settings.necessity_cap,
        }
    }

    fn assignment(&self, values: &[f64]) -> BTreeMap<String, f64> {
        self.names_lower
            .iter()
            .cloned()
            .zip(values.iter().copied())
            .collect()
    }

    fn failure(&self, values: &[f64], error: &dyn std::fmt::Display) -> String {
        format!(
            "evaluation failed at {}: {error}",
            render_assignment(&self.names_lower, values)
        )
    }
}

fn render_assignment(names_lower: &[String], values: &[f64]) -> String {
    if names_lower.is_empty() {
        return "the empty assignment".to_string();
    }
    names_lower
        .iter()
        .zip(values)
        .map(|(n, v)| format!("{n} = {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Aggregates from one slice of the grid (or the whole of it, after
/// merging).
#[derive(Default)]
struct ScanOutcome {
    examined: u64,
    satisfying: u64,
    violations_found: u64,
    violations: Vec<Violation>,
    equality_count: u64,
    equality_samples: Vec<BTreeMap<String, f64>>,
    sufficiency_failed: u64,
    sufficiency_samples: Vec<Violation>,
    necessity_found: u64,
    necessity_findings: Vec<NecessityFinding>,
    error: Option<String>,
}

fn visit(task: &GridTask<'_>, values: &[f64], out: &mut ScanOutcome) -> Result<(), String> {
    out.examined += 1;
    let bindings = DegreeBindings::new(task.names, values);
    for constraint in task.constraints {
        match constraint.holds(bindings, task.tolerance) {
            Ok(true) => {}
            Ok(false) => return Ok(()),
            Err(e) => return Err(task.failure(values, &e)),
        }
    }
    out.satisfying += 1;
    let lhs = eval_degree(task.lhs, bindings, task.mode).map_err(|e| task.failure(values, &e))?;
    let rhs = eval_degree(task.rhs, bindings, task.mode).map_err(|e| task.failure(values, &e))?;
    let eps = task.tolerance.epsilon();
    let ok = match task.relation {
        Relation::Subset => lhs <= rhs + eps,
        Relation::Superset => lhs >= rhs - eps,
        Relation::Equal => (lhs - rhs).abs() <= eps,
    };
    if !ok {
        out.violations_found += 1;
        if out.violations.len() < task.violation_cap {
            let gap = match task.relation {
                Relation::Subset => lhs - rhs,
                Relation::Superset => rhs - lhs,
                Relation::Equal => (lhs - rhs).abs(),
            };
            out.violations.push(Violation {
                assignment: task.assignment(values),
                lhs,
                rhs,
                gap,
                chain_pair: None,
            });
        }
    }
    let equal = (lhs - rhs).abs() <= eps;
    if equal {
        out.equality_count += 1;
        if out.equality_samples.len() < task.equality_cap {
            out.equality_samples.push(task.assignment(values));
        }
    }
    if let Some(claim) = task.claim {
        let claim_holds = claim
            .holds(bindings, task.tolerance)
            .map_err(|e| task.failure(values, &e))?;
        if claim_holds && !equal {
            out.sufficiency_failed += 1;
            if out.sufficiency_samples.len() < task.violation_cap {
                out.sufficiency_samples.push(Violation {
                    assignment: task.assignment(values),
                    lhs,
                    rhs,
                    gap: (lhs - rhs).abs(),
                    chain_pair: None,
                });
            }
        } else if equal && !claim_holds {
            out.necessity_found += 1;
            if out.necessity_findings.len() < task.necessity_cap {
                out.necessity_findings.push(NecessityFinding {
                    assignment: task.assignment(values),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(())
}

/// Scans the slice of the grid whose first coordinate is `grid.value
/// (outer)`, in lexicographic order of the remaining coordinates.
fn scan_chunk(task: &GridTask<'_>, grid: GridSpec, outer: u32) -> ScanOutcome {
    let n = task.names.len();
    let points = grid.points();
    let mut out = ScanOutcome::default();
    let mut values = vec![0.0f64; n];
    values[0] = grid.value(outer);
    let mut idx = vec![0u32; n - 1];
    'tuples: loop {
        for (d, &i) in idx.iter().enumerate() {
            values[d + 1] = grid.value(i);
        }
        if let Err(message) = visit(task, &values, &mut out) {
            out.error = Some(message);
            break;
        }
        let mut d = idx.len();
        loop {
            if d == 0 {
                break 'tuples;
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < points {
                break;
            }
            idx[d] = 0;
        }
    }
    out
}

fn extend_capped<T>(dst: &mut Vec<T>, src: Vec<T>, cap: usize) {
    for item in src {
        if dst.len() >= cap {
            break;
        }
        dst.push(item);
    }
}

/// Merges chunk outcomes in first-coordinate order. Aggregation stops
/// after the first chunk that hit an evaluation error, so the merged
/// result is independent of how chunks were scheduled.
fn merge_chunks(chunks: Vec<ScanOutcome>, task: &GridTask<'_>) -> ScanOutcome {
    let mut out = ScanOutcome::default();
    for chunk in chunks {
        out.examined += chunk.examined;
        out.satisfying += chunk.satisfying;
        out.violations_found += chunk.violations_found;
        extend_capped(&mut out.violations, chunk.violations, task.violation_cap);
        out.equality_count += chunk.equality_count;
        extend_capped(
            &mut out.equality_samples,
            chunk.equality_samples,
            task.equality_cap,
        );
        out.sufficiency_failed += chunk.sufficiency_failed;
        extend_capped(
            &mut out.sufficiency_samples,
            chunk.sufficiency_samples,
            task.violation_cap,
        );
        out.necessity_found += chunk.necessity_found;
        extend_capped(
            &mut out.necessity_findings,
            chunk.necessity_findings,
            task.necessity_cap,
        );
        if chunk.error.is_some() {
            out.error = chunk.error;
            break;
        }
    }
    out
}

fn run_grid(task: &GridTask<'_>, grid: GridSpec, workers: Option<usize>) -> ScanOutcome {
    if task.names.is_empty() {
        let mut out = ScanOutcome::default();
        if let Err(message) = visit(task, &[], &mut out) {
            out.error = Some(message);
        }
        return out;
    }
    let chunks = with_pool(workers, || {
        (0..grid.points())
            .into_par_iter()
            .map(|outer| scan_chunk(task, grid, outer))
            .collect::<Vec<_>>()
    });
    merge_chunks(chunks, task)
}

fn grid_report(
    statement: &RelationStatement,
    grid: GridSpec,
    settings: &CheckSettings,
    outcome: &ScanOutcome,
    started: Instant,
) -> CheckReport {
    let mut report = CheckReport::base(
        format_statement(statement),
        "grid",
        settings.tolerance.epsilon(),
    );
    report.resolution = Some(grid.resolution());
    report.examined = outcome.examined;
    report.satisfying = outcome.satisfying;
    report.violations_found = outcome.violations_found;
    report.violations = outcome.violations.clone();
    report.equality_points = Some(EqualityPoints {
        count: outcome.equality_count,
        samples: outcome.equality_samples.clone(),
    });
    report.error = outcome.error.clone();
    report.verdict = if outcome.error.is_some() {
        Verdict::Error
    } else if outcome.violations_found > 0 {
        Verdict::Violated
    } else {
        Verdict::Holds
    };
    report.elapsed_ms = started.elapsed().as_millis();
    report
}

fn probe_report(
    statement: &RelationStatement,
    grid: GridSpec,
    settings: &CheckSettings,
    outcome: &ScanOutcome,
    started: Instant,
) -> CheckReport {
    let mut report = CheckReport::base(
        format_statement(statement),
        "equality-probe",
        settings.tolerance.epsilon(),
    );
    report.resolution = Some(grid.resolution());
    report.examined = outcome.examined;
    report.satisfying = outcome.satisfying;
    report.violations_found = outcome.sufficiency_failed;
    report.violations = outcome.sufficiency_samples.clone();
    report.equality_points = Some(EqualityPoints {
        count: outcome.equality_count,
        samples: outcome.equality_samples.clone(),
    });
    report.necessity_found = Some(outcome.necessity_found);
    report.necessity_findings = Some(outcome.necessity_findings.clone());
    report.error = outcome.error.clone();
    report.verdict = if outcome.error.is_some() {
        Verdict::Error
    } else if outcome.sufficiency_failed > 0 {
        Verdict::Violated
    } else {
        Verdict::Holds
    };
    report.elapsed_ms = started.elapsed().as_millis();
    report
}

/// Exhaustively verifies `statement` over the uniform grid.
///
/// A report with [`Verdict::Error`] is returned when evaluation fails at
/// some admitted assignment (for example a strict quotient by zero); the
/// counts then cover the lexicographic prefix scanned up to that point.
pub fn grid_check(
    statement: &RelationStatement,
    grid: GridSpec,
    settings: &CheckSettings,
) -> Result<CheckReport, VerifyError> {
    let started = Instant::now();
    validate_grid(statement.variables.len(), grid)?;
    let task = GridTask::new(statement, settings);
    let outcome = run_grid(&task, grid, settings.workers);
    Ok(grid_report(statement, grid, settings, &outcome, started))
}

/// Probes the statement's equality condition over the grid.
///
/// Sufficiency is asserted: at every admitted assignment where the
/// condition holds, the two sides must agree within tolerance, else the
/// verdict is [`Verdict::Violated`]. Equality points where the condition
/// fails are only reported, as necessity findings.
pub fn probe_equality(
    statement: &RelationStatement,
    grid: GridSpec,
    settings: &CheckSettings,
) -> Result<CheckReport, VerifyError> {
    if statement.equality_condition.is_none() {
        return Err(VerifyError::NoEqualityClaim);
    }
    let started = Instant::now();
    validate_grid(statement.variables.len(), grid)?;
    let task = GridTask::new(statement, settings);
    let outcome = run_grid(&task, grid, settings.workers);
    Ok(probe_report(statement, grid, settings, &outcome, started))
}

fn unit_double(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

/// Checks `statement` at `spec.samples` uniform random assignments.
///
/// Sampling is sequential and fully determined by the seed. Assignments
/// where evaluation fails are skipped and counted; the verdict degrades to
/// [`Verdict::Error`] only when every admitted sample was skipped.
pub fn random_check(
    statement: &RelationStatement,
    spec: RandomSpec,
    settings: &CheckSettings,
) -> CheckReport {
    let started = Instant::now();
    let task = GridTask::new(statement, settings);
    let n = task.names.len();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = ScanOutcome::default();
    let mut skipped = 0u64;
    let mut first_failure: Option<String> = None;
    let mut values = vec![0.0f64; n];
    for _ in 0..spec.samples {
        for v in values.iter_mut() {
            *v = unit_double(&mut rng);
        }
        let admitted_before = out.satisfying;
        if let Err(message) = visit(&task, &values, &mut out) {
            // Keep `satisfying` to samples that evaluated end to end.
            out.satisfying = admitted_before;
            skipped += 1;
            first_failure.get_or_insert(message);
        }
    }
    let mut report = CheckReport::base(
        format_statement(statement),
        "random",
        settings.tolerance.epsilon(),
    );
    report.samples = Some(spec.samples);
    report.seed = Some(spec.seed);
    report.generator = Some("chacha8");
    report.examined = out.examined;
    report.satisfying = out.satisfying;
    report.skipped = Some(skipped);
    report.violations_found = out.violations_found;
    report.violations = out.violations.clone();
    report.equality_points = Some(EqualityPoints {
        count: out.equality_count,
        samples: out.equality_samples,
    });
    if task.claim.is_some() {
        report.necessity_found = Some(out.necessity_found);
        report.necessity_findings = Some(out.necessity_findings);
    }
    report.verdict = if out.satisfying == 0 && skipped > 0 {
        report.error = first_failure.map(|m| format!("every admitted sample was skipped: {m}"));
        Verdict::Error
    } else if report.violations_found > 0 {
        Verdict::Violated
    } else {
        Verdict::Holds
    };
    report.elapsed_ms = started.elapsed().as_millis();
    report
}

/// Searches the grid, in lexicographic order, for an assignment where
/// `expr` evaluates strictly above the tolerance. The scan stops at the
/// first witness.
pub fn witness_positive(
    expr: &Expr,
    grid: GridSpec,
    settings: &CheckSettings,
) -> Result<CheckReport, VerifyError> {
    let started = Instant::now();
    let names = expr.free_variables();
    validate_grid(names.len(), grid)?;
    let names_lower: Vec<String> = names.iter().map(|n| n.to_ascii_lowercase()).collect();
    let mut report = CheckReport::base(
        format_expr(expr),
        "witness",
        settings.tolerance.epsilon(),
    );
    report.resolution = Some(grid.resolution());
    let points = vec![grid.points(); names.len()];
    let mut values = vec![0.0f64; names.len()];
    let mut witness: Option<Witness> = None;
    let mut error: Option<String> = None;
    let mut examined = 0u64;
    lex_tuples(&points, |idx| {
        for (d, &i) in idx.iter().enumerate() {
            values[d] = grid.value(i);
        }
        examined += 1;
        match eval_degree(expr, DegreeBindings::new(&names, &values), settings.quotient_mode) {
            Ok(v) if v > settings.tolerance.epsilon() => {
                witness = Some(Witness {
                    assignment: names_lower
                        .iter()
                        .cloned()
                        .zip(values.iter().copied())
                        .collect(),
                    value: v,
                });
                false
            }
            Ok(_) => true,
            Err(e) => {
                error = Some(format!(
                    "evaluation failed at {}: {e}",
                    render_assignment(&names_lower, &values)
                ));
                false
            }
        }
    });
    report.examined = examined;
    report.satisfying = examined;
    report.witness = witness;
    report.error = error;
    report.verdict = if report.error.is_some() {
        Verdict::Error
    } else if report.witness.is_some() {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

/// Visits index tuples in lexicographic order (last dimension fastest)
/// until the visitor returns `false`. A zero-dimensional space has exactly
/// one (empty) tuple.
fn lex_tuples(points_per_dim: &[u32], mut f: impl FnMut(&[u32]) -> bool) {
    let n = points_per_dim.len();
    if n == 0 {
        f(&[]);
        return;
    }
    let mut idx = vec![0u32; n];
    loop {
        if !f(&idx) {
            return;
        }
        let mut d = n;
        loop {
            if d == 0 {
                return;
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < points_per_dim[d] {
                break;
            }
            idx[d] = 0;
        }
    }
}

/// Runs one catalog entry: the grid check, plus the equality probe when
/// the entry records an equality condition. Parameterized entries sweep
/// their default values unless `param` pins one.
pub fn check_entry(
    entry: &TheoremEntry,
    param: Option<f64>,
    grid: Option<GridSpec>,
    settings: &CheckSettings,
) -> Result<Vec<CheckReport>, VerifyError> {
    if entry.kind == EntryKind::Existence {
        if param.is_some() {
            return Err(VerifyError::Registry(RegistryError::NoParameter {
                id: entry.id.to_string(),
            }));
        }
        let expr = entry.existence_expr()?;
        let grid = grid.unwrap_or_else(|| GridSpec::default_for_arity(expr.free_variables().len()));
        let report = witness_positive(&expr, grid, settings)?;
        return Ok(vec![report.tagged(entry.id, BTreeMap::new())]);
    }
    let values: Vec<Option<f64>> = match (&entry.parameter, param) {
        (None, None) => vec![None],
        (None, Some(_)) => {
            return Err(VerifyError::Registry(RegistryError::NoParameter {
                id: entry.id.to_string(),
            }))
        }
        (Some(spec), None) => spec.sweep_values().into_iter().map(Some).collect(),
        (Some(_), Some(v)) => vec![Some(v)],
    };
    let mut reports = Vec::new();
    for value in values {
        let statement = match value {
            Some(v) => entry.instantiate(v)?,
            None => entry.statement()?,
        };
        let grid = grid
            .unwrap_or_else(|| GridSpec::default_for_arity(statement.variables.len()));
        let started = Instant::now();
        validate_grid(statement.variables.len(), grid)?;
        let task = GridTask::new(&statement, settings);
        let outcome = run_grid(&task, grid, settings.workers);
        let params: BTreeMap<String, f64> = match (&entry.parameter, value) {
            (Some(spec), Some(v)) => [(spec.name().to_string(), v)].into(),
            _ => BTreeMap::new(),
        };
        reports.push(
            grid_report(&statement, grid, settings, &outcome, started)
                .tagged(entry.id, params.clone()),
        );
        if statement.equality_condition.is_some() {
            reports.push(
                probe_report(&statement, grid, settings, &outcome, started)
                    .tagged(entry.id, params),
            );
        }
    }
    Ok(reports)
}

/// Runs one scalar record on a grid with `grid.steps()` steps per unit
/// length of each variable's interval. Parameterized records sweep their
/// default values unless `param` pins one.
pub fn check_scalar_lemma(
    record: &ScalarRecord,
    param: Option<f64>,
    grid: GridSpec,
    settings: &CheckSettings,
) -> Result<Vec<CheckReport>, VerifyError> {
    let values: Vec<Option<f64>> = match (&record.parameter, param) {
        (None, None) => vec![None],
        (None, Some(_)) => {
            return Err(VerifyError::Registry(RegistryError::NoParameter {
                id: record.id.to_string(),
            }))
        }
        (Some(spec), None) => spec.sweep_values().into_iter().map(Some).collect(),
        (Some(spec), Some(v)) => {
            if !spec.admits(v) {
                return Err(VerifyError::Registry(RegistryError::ParameterOutOfRange {
                    id: record.id.to_string(),
                    value: v,
                }));
            }
            vec![Some(v)]
        }
    };
    let mut reports = Vec::new();
    for value in values {
        reports.push(run_scalar(record, value, grid, settings)?);
    }
    Ok(reports)
}

fn run_scalar(
    record: &ScalarRecord,
    param: Option<f64>,
    grid: GridSpec,
    settings: &CheckSettings,
) -> Result<CheckReport, VerifyError> {
    let started = Instant::now();
    let chain_texts = record.chain_texts(param);
    let constraint_texts = record.constraint_texts(param);
    let mut statement_text = chain_texts.join(" <= ");
    if !constraint_texts.is_empty() {
        statement_text.push_str(" given ");
        statement_text.push_str(&constraint_texts.join(", "));
    }
    let chain: Vec<Arith> = chain_texts
        .iter()
        .map(|t| {
            parse_arith(t).map_err(|e| {
                VerifyError::Registry(RegistryError::BadTemplate {
                    id: record.id.to_string(),
                    source: e,
                })
            })
        })
        .collect::<Result<_, _>>()?;
    let constraints: Vec<Constraint> = if constraint_texts.is_empty() {
        Vec::new()
    } else {
        parse_constraint_list(&constraint_texts.join(", ")).map_err(|e| {
            VerifyError::Registry(RegistryError::BadTemplate {
                id: record.id.to_string(),
                source: e,
            })
        })?
    };

    let names: Vec<String> = record.variables.iter().map(|(n, _, _)| n.to_string()).collect();
    let mut points_per_dim = Vec::with_capacity(names.len());
    let mut spans = Vec::with_capacity(names.len());
    let mut total: u128 = 1;
    for &(_, lo, hi) in record.variables {
        let steps = ((hi - lo) * f64::from(grid.steps())).round().max(1.0) as u32;
        points_per_dim.push(steps + 1);
        spans.push((lo, hi - lo, steps));
        total = total.saturating_mul(u128::from(steps) + 1);
    }
    if total > GRID_TUPLE_CAP {
        return Err(VerifyError::GridTooLarge {
            tuples: total,
            cap: GRID_TUPLE_CAP,
        });
    }

    let eps = settings.tolerance.epsilon();
    let mut values = vec![0.0f64; names.len()];
    let mut sides = vec![0.0f64; chain.len()];
    let mut examined = 0u64;
    let mut satisfying = 0u64;
    let mut violations_found = 0u64;
    let mut violations: Vec<Violation> = Vec::new();
    let mut error: Option<String> = None;
    lex_tuples(&points_per_dim, |idx| {
        for (d, &i) in idx.iter().enumerate() {
            let (lo, span, steps) = spans[d];
            values[d] = lo + f64::from(i) * span / f64::from(steps);
        }
        examined += 1;
        let bindings = DegreeBindings::new(&names, &values);
        for constraint in &constraints {
            match constraint.holds(bindings, settings.tolerance) {
                Ok(true) => {}
                Ok(false) => return true,
                Err(e) => {
                    error = Some(format!(
                        "evaluation failed at {}: {e}",
                        render_assignment(&names, &values)
                    ));
                    return false;
                }
            }
        }
        satisfying += 1;
        for (s, side) in chain.iter().enumerate() {
            match eval_arith(side, bindings) {
                Ok(v) => sides[s] = v,
                Err(e) => {
                    error = Some(format!(
                        "evaluation failed at {}: {e}",
                        render_assignment(&names, &values)
                    ));
                    return false;
                }
            }
        }
        for pair in sides.windows(2).enumerate() {
            let (i, w) = pair;
            if w[0] > w[1] + eps {
                violations_found += 1;
                if violations.len() < settings.violation_cap {
                    violations.push(Violation {
                        assignment: names
                            .iter()
                            .cloned()
                            .zip(values.iter().copied())
                            .collect(),
                        lhs: w[0],
                        rhs: w[1],
                        gap: w[0] - w[1],
                        chain_pair: Some([i, i + 1]),
                    });
                }
            }
        }
        true
    });

    let mut report = CheckReport::base(statement_text, "scalar-grid", eps);
    report.resolution = Some(grid.resolution());
    report.examined = examined;
    report.satisfying = satisfying;
    report.violations_found = violations_found;
    report.violations = violations;
    report.error = error;
    report.verdict = if report.error.is_some() {
        Verdict::Error
    } else if violations_found > 0 {
        Verdict::Violated
    } else {
        Verdict::Holds
    };
    let params: BTreeMap<String, f64> = match (&record.parameter, param) {
        (Some(spec), Some(v)) => [(spec.name().to_string(), v)].into(),
        _ => BTreeMap::new(),
    };
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report.tagged(record.id, params))
}

fn synthetic_error(id: &str, error: &VerifyError, settings: &CheckSettings) -> CheckReport {
    let mut report = CheckReport::base(String::new(), "grid", settings.tolerance.epsilon());
    report.id = Some(id.to_string());
    report.error = Some(error.to_string());
    report.verdict = Verdict::Error;
    report
}

/// Checks the whole catalog — every set-level entry (sweeping parameters)
/// and every scalar record — and returns the reports in catalog order.
/// Individual failures become error reports; the suite itself never
/// aborts.
pub fn run_full_suite(settings: &CheckSettings) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for entry in registry::list_theorems() {
        match check_entry(entry, None, None, settings) {
            Ok(mut batch) => reports.append(&mut batch),
            Err(e) => reports.push(synthetic_error(entry.id, &e, settings)),
        }
    }
    for record in registry::scalar_records() {
        match check_scalar_lemma(record, None, GridSpec { steps: 20 }, settings) {
            Ok(mut batch) => reports.append(&mut batch),
            Err(e) => reports.push(synthetic_error(record.id, &e, settings)),
        }
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_statement;

    fn settings() -> CheckSettings {
        CheckSettings::default()
    }

    #[test]
    fn grid_values_hit_endpoints_exactly() {
        let g = GridSpec::from_resolution(0.05).unwrap();
        assert_eq!(g.steps(), 20);
        assert_eq!(g.value(0).to_bits(), 0.0f64.to_bits());
        assert_eq!(g.value(20).to_bits(), 1.0f64.to_bits());
        assert_eq!(g.value(10), 0.5);
    }

    #[test]
    fn bad_resolutions_are_rejected() {
        for r in [0.0, -0.5, 0.3, 1.5, f64::NAN] {
            assert!(matches!(
                GridSpec::from_resolution(r),
                Err(VerifyError::BadResolution(_))
            ));
        }
        assert!(GridSpec::from_resolution(1.0).is_ok());
        assert!(GridSpec::from_resolution(0.01).is_ok());
    }

    #[test]
    fn oversized_grids_are_rejected() {
        let s = parse_statement("A | B | C | D | E | F <= X").unwrap();
        let err = grid_check(&s, GridSpec::default_for_arity(6), &settings()).unwrap_err();
        assert!(matches!(err, VerifyError::ArityTooLarge { arity: 6, .. }));

        let s = parse_statement("A | B | C | D | E <= X").unwrap();
        let err = grid_check(&s, GridSpec::from_resolution(0.01).unwrap(), &settings());
        assert!(matches!(err, Err(VerifyError::GridTooLarge { .. })));
    }

    #[test]
    fn self_intersection_is_not_reflexive_under_algebraic_product() {
        // a <= a*a fails everywhere strictly between 0 and 1.
        let s = parse_statement("A <= A .* A").unwrap();
        let report = grid_check(&s, GridSpec::from_resolution(0.05).unwrap(), &settings()).unwrap();
        assert_eq!(report.verdict, Verdict::Violated);
        assert_eq!(report.examined, 21);
        assert_eq!(report.violations_found, 19);
        let first = &report.violations[0];
        assert!((first.assignment["a"] - 0.05).abs() < 1e-12);
        assert!(report
            .violations
            .iter()
            .any(|v| (v.assignment["a"] - 0.5).abs() < 1e-12));
        // 0 and 1 are fixed points of squaring.
        assert_eq!(report.equality_points.as_ref().unwrap().count, 2);
    }

    #[test]
    fn mean_comparison_entry_holds_with_equality_on_diagonal() {
        let entry = registry::get_theorem("T7").unwrap();
        let reports = check_entry(entry, None, None, &settings()).unwrap();
        assert_eq!(reports.len(), 2);
        let grid = &reports[0];
        assert_eq!(grid.mode, "grid");
        assert_eq!(grid.verdict, Verdict::Holds);
        assert_eq!(grid.examined, 441);
        assert!(grid.satisfying < grid.examined);
        let probe = &reports[1];
        assert_eq!(probe.mode, "equality-probe");
        assert_eq!(probe.verdict, Verdict::Holds);
        // The diagonal a = b (with a*b <= 0.25) gives equality points.
        assert!(probe.equality_points.as_ref().unwrap().count >= 11);
    }

    #[test]
    fn distributivity_probe_reports_necessity_failures() {
        let entry = registry::get_theorem("T2a").unwrap();
        let reports = check_entry(entry, None, None, &settings()).unwrap();
        let probe = reports
            .iter()
            .find(|r| r.mode == "equality-probe")
            .unwrap();
        assert_eq!(probe.verdict, Verdict::Holds, "sufficiency must hold");
        let found = probe.necessity_found.unwrap();
        assert!(found > 0, "b + c <= 1 forces equality without a = 1");
        let findings = probe.necessity_findings.as_ref().unwrap();
        assert!(!findings.is_empty());
        assert!(findings
            .iter()
            .all(|f| (f.assignment["a"] - 1.0).abs() > 1e-6));
    }

    #[test]
    fn four_variable_inequality_holds_on_random_samples() {
        let s = registry::get_theorem("T9").unwrap().statement().unwrap();
        let report = random_check(
            &s,
            RandomSpec {
                samples: 100_000,
                seed: 42,
            },
            &settings(),
        );
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(report.examined, 100_000);
        assert!(report.satisfying > 0);
        assert_eq!(report.skipped, Some(0));
    }

    #[test]
    fn random_mode_skips_unevaluable_samples() {
        let s = parse_statement("2 * A <= X").unwrap();
        let report = random_check(
            &s,
            RandomSpec {
                samples: 200,
                seed: 1,
            },
            &settings(),
        );
        assert_eq!(report.verdict, Verdict::Holds);
        let skipped = report.skipped.unwrap();
        assert!(skipped > 0, "samples with 2a > 1 cannot evaluate");
        assert!(skipped < 200);
        assert_eq!(report.satisfying + skipped, 200);
    }

    #[test]
    fn grid_mode_stops_at_first_evaluation_error() {
        let s = parse_statement("3 * A <= X").unwrap();
        let report = grid_check(&s, GridSpec::from_resolution(0.05).unwrap(), &settings()).unwrap();
        assert_eq!(report.verdict, Verdict::Error);
        let message = report.error.unwrap();
        assert!(message.contains("a = 0.35"), "unexpected message: {message}");
        // 0.00 through 0.35 were examined before the failure surfaced.
        assert_eq!(report.examined, 8);
    }

    #[test]
    fn strict_quotient_on_grid_reports_error() {
        let s = parse_statement("A [/] B <= X").unwrap();
        let mut st = settings();
        st.quotient_mode = crate::ops::QuotientMode::Strict;
        let report = grid_check(&s, GridSpec::from_resolution(0.5).unwrap(), &st).unwrap();
        assert_eq!(report.verdict, Verdict::Error);
        assert!(report.error.unwrap().contains("b = 0"));
    }

    #[test]
    fn probe_requires_an_equality_condition() {
        let s = parse_statement("A <= A | B").unwrap();
        let err = probe_equality(&s, GridSpec::default_for_arity(2), &settings()).unwrap_err();
        assert_eq!(err, VerifyError::NoEqualityClaim);
    }

    #[test]
    fn report_json_is_identical_for_any_worker_count() {
        let entry = registry::get_theorem("T1").unwrap();
        let mut one = settings();
        one.workers = Some(1);
        let mut four = settings();
        four.workers = Some(4);
        let a = check_entry(entry, None, None, &one).unwrap();
        let b = check_entry(entry, None, None, &four).unwrap();
        let render = |reports: &[CheckReport]| {
            reports
                .iter()
                .map(|r| serde_json::to_string(r).unwrap())
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(render(&a), render(&b));
        assert!(!render(&a).contains("elapsed"));
    }

    #[test]
    fn existence_record_finds_first_witness() {
        let entry = registry::get_theorem("P1").unwrap();
        let reports = check_entry(entry, None, None, &settings()).unwrap();
        assert_eq!(reports.len(), 1);
        let report = &reports[0];
        assert_eq!(report.mode, "witness");
        assert_eq!(report.verdict, Verdict::Holds);
        let witness = report.witness.as_ref().unwrap();
        assert_eq!(witness.assignment["a"], 0.0);
        assert!((witness.assignment["b"] - 0.05).abs() < 1e-12);
        assert!((witness.value - 0.05).abs() < 1e-12);
        // (0,0) evaluated to 0 first; the witness is the second tuple.
        assert_eq!(report.examined, 2);
    }

    #[test]
    fn witness_positive_fails_for_identically_zero_expression() {
        let expr = crate::dsl::parse_expr("A [-] A").unwrap();
        let report =
            witness_positive(&expr, GridSpec::from_resolution(0.25).unwrap(), &settings()).unwrap();
        assert_eq!(report.verdict, Verdict::Violated);
        assert!(report.witness.is_none());
        assert_eq!(report.examined, 5);
    }

    #[test]
    fn scalar_records_hold_on_their_grids() {
        for id in ["L1", "S1", "S3", "S4"] {
            let record = registry::get_scalar(id).unwrap();
            let reports =
                check_scalar_lemma(record, None, GridSpec::from_resolution(0.1).unwrap(), &settings())
                    .unwrap();
            for report in &reports {
                assert_eq!(report.verdict, Verdict::Holds, "{id}: {:?}", report.error);
                assert!(report.satisfying > 0, "{id} admitted nothing");
            }
        }
    }

    #[test]
    fn ordered_pair_record_covers_negative_values() {
        let record = registry::get_scalar("S2").unwrap();
        let reports =
            check_scalar_lemma(record, None, GridSpec::from_resolution(0.1).unwrap(), &settings())
                .unwrap();
        let report = &reports[0];
        assert_eq!(report.verdict, Verdict::Holds);
        // 21 points per axis on [-1, 1] at 10 steps per unit.
        assert_eq!(report.examined, 21u64.pow(4));
        assert!(report.satisfying < report.examined);
    }

    #[test]
    fn scalar_parameter_sweep_and_pinning() {
        let record = registry::get_scalar("S5").unwrap();
        let swept =
            check_scalar_lemma(record, None, GridSpec::from_resolution(0.25).unwrap(), &settings())
                .unwrap();
        assert_eq!(swept.len(), 8);
        assert_eq!(swept[2].params["m"], 3.0);
        let pinned =
            check_scalar_lemma(record, Some(4.0), GridSpec::from_resolution(0.25).unwrap(), &settings())
                .unwrap();
        assert_eq!(pinned.len(), 1);
        assert_eq!(pinned[0].verdict, Verdict::Holds);
        assert!(matches!(
            check_scalar_lemma(
                record,
                Some(0.5),
                GridSpec::from_resolution(0.25).unwrap(),
                &settings()
            ),
            Err(VerifyError::Registry(
                RegistryError::ParameterOutOfRange { .. }
            ))
        ));
    }

    #[test]
    fn entry_sweep_produces_one_pair_per_value() {
        let entry = registry::get_theorem("T10").unwrap();
        let reports = check_entry(entry, None, None, &settings()).unwrap();
        // Eight m values, each with a grid report and an equality probe.
        assert_eq!(reports.len(), 16);
        for report in &reports {
            assert_eq!(report.verdict, Verdict::Holds, "{:?}", report.error);
        }
        assert_eq!(reports[0].params["m"], 1.0);
        assert_eq!(reports[15].params["m"], 8.0);
    }

    #[test]
    fn full_suite_has_no_violations_or_errors() {
        let reports = run_full_suite(&settings());
        assert!(reports.len() > 40);
        for report in &reports {
            assert_eq!(
                report.verdict,
                Verdict::Holds,
                "{:?} ({}) failed: {:?} / {:?}",
                report.id,
                report.mode,
                report.error,
                report.violations.first(),
            );
        }
    }
}
