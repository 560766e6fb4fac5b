//! Structured outcomes of verification passes.

use std::collections::BTreeMap;

use serde::Serialize;

/// Final judgement of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The property held at every admitted grid point, or at every sampled
    /// point in random mode.
    Holds,
    /// At least one admitted point broke the property.
    Violated,
    /// The check could not run to completion; see the report's `error`.
    Error,
}

/// One admitted assignment that breaks the checked property.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    /// Degree values keyed by lowercase variable alias.
    pub assignment: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    /// Amount by which the required comparison fails (always above the
    /// tolerance when reported).
    pub gap: f64,
    /// For scalar chains: indices of the adjacent pair that failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_pair: Option<[usize; 2]>,
}

/// Where the two sides agreed within tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct EqualityPoints {
    pub count: u64,
    /// The first few equality assignments in scan order.
    pub samples: Vec<BTreeMap<String, f64>>,
}

/// An equality point at which the recorded equality condition is false,
/// demonstrating that the condition is not necessary.
#[derive(Debug, Clone, Serialize)]
pub struct NecessityFinding {
    pub assignment: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
}

/// A grid point witnessing positivity of an expression.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub assignment: BTreeMap<String, f64>,
    pub value: f64,
}

/// The full outcome of one check.
///
/// Serialization is stable: field order is fixed, maps are sorted, and
/// wall-clock time is excluded, so identical runs produce byte-identical
/// JSON regardless of worker count.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    /// Catalog id, when the check came from the catalog.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    /// Canonical text of what was checked.
    pub statement: String,
    /// One of `grid`, `random`, `equality-probe`, `witness`, `scalar-grid`.
    pub mode: &'static str,
    /// Parameter values the record was instantiated at.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, f64>,
    pub tolerance: f64,
    /// Grid step, for grid modes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolution: Option<f64>,
    /// Sample count, for random mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    /// RNG seed, for random mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Random generator identity, so seeds stay portable across builds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<&'static str>,
    /// Assignments enumerated or drawn.
    pub examined: u64,
    /// Assignments admitted by the hypotheses and evaluated.
    pub satisfying: u64,
    /// Samples dropped because evaluation failed (random mode only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<u64>,
    pub verdict: Verdict,
    /// Total property violations, including those beyond the stored cap.
    pub violations_found: u64,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_points: Option<EqualityPoints>,
    /// Equality points where the recorded condition failed, total.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub necessity_found: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub necessity_findings: Option<Vec<NecessityFinding>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall-clock time; excluded from serialization.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl CheckReport {
    /// A report skeleton with empty counters and no optional sections.
    pub(crate) fn base(statement: String, mode: &'static str, tolerance: f64) -> Self {
        CheckReport {
            id: None,
            statement,
            mode,
            params: BTreeMap::new(),
            tolerance,
            resolution: None,
            samples: None,
            seed: None,
            generator: None,
            examined: 0,
            satisfying: 0,
            skipped: None,
            verdict: Verdict::Holds,
            violations_found: 0,
            violations: Vec::new(),
            equality_points: None,
            necessity_found: None,
            necessity_findings: None,
            witness: None,
            error: None,
            elapsed_ms: 0,
        }
    }

    /// Attaches a catalog id and parameter values.
    pub(crate) fn tagged(
        mut self,
        id: &str,
        params: BTreeMap<String, f64>,
    ) -> Self {
        self.id = Some(id.to_string());
        self.params = params;
        self
    }
}
