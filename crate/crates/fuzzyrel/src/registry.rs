//! Fixed catalog of inclusion relations and scalar inequalities.
//!
//! Every record is stored as DSL text (plus per-record metadata) and parsed
//! on demand, so the statement a checker sees is exactly the statement the
//! catalog prints. Parameterized entries (`{m}`, `{p}`, … placeholders) are
//! instantiated by literal substitution before parsing; the admissible
//! ranges live in [`ParamSpec`].

use serde_json::{json, Value};
use thiserror::Error;

use crate::dsl::{format_statement, parse_statement, Expr, RelationStatement, SyntaxError};

/// Errors from catalog lookup and instantiation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegistryError {
    #[error("unknown catalog id {0:?}")]
    UnknownTheorem(String),
    #[error("parameter {value} is outside the admissible range for {id}")]
    ParameterOutOfRange { id: String, value: f64 },
    #[error("{id} takes no parameter")]
    NoParameter { id: String },
    #[error("{id} requires its parameter {name:?}")]
    MissingParameter { id: String, name: &'static str },
    #[error("{id} is an existence record, not a relation statement")]
    NotAStatement { id: String },
    #[error("catalog text for {id} failed to parse: {source}")]
    BadTemplate {
        id: String,
        #[source]
        source: SyntaxError,
    },
}

/// What sort of check a set-level entry wants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    /// An inclusion (`<=` / `>=`) to verify over degree space.
    Inclusion,
    /// A pointwise identity (`==`).
    Identity,
    /// An existence record: the stored expression must be positive somewhere.
    Existence,
}

/// How the source states the equality condition attached to an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// Claimed as "if and only if". The verifier still only asserts the
    /// sufficiency direction; failures of necessity are reported as findings.
    IffClaimed,
    /// Claimed as sufficient only.
    SufficiencyOnly,
}

impl ClaimKind {
    fn label(self) -> &'static str {
        match self {
            ClaimKind::IffClaimed => "iff-claimed",
            ClaimKind::SufficiencyOnly => "sufficiency-only",
        }
    }
}

/// A parameter slot on a catalog record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamSpec {
    /// A real exponent `p` with an inclusive lower bound, an optional
    /// exclusive upper bound, and the default sweep used by the full suite.
    Real {
        name: &'static str,
        lo: f64,
        hi_exclusive: Option<f64>,
        sweep: &'static [f64],
    },
    /// A natural number swept over `lo..=hi`.
    Natural {
        name: &'static str,
        lo: u32,
        hi: u32,
    },
}

impl ParamSpec {
    /// The parameter's name (`"p"` or `"m"`).
    pub fn name(&self) -> &'static str {
        match self {
            ParamSpec::Real { name, .. } | ParamSpec::Natural { name, .. } => name,
        }
    }

    /// The default sweep values for the full suite.
    pub fn sweep_values(&self) -> Vec<f64> {
        match self {
            ParamSpec::Real { sweep, .. } => sweep.to_vec(),
            ParamSpec::Natural { lo, hi, .. } => (*lo..=*hi).map(f64::from).collect(),
        }
    }

    /// Whether `value` is inside this parameter's admissible range.
    pub fn admits(&self, value: f64) -> bool {
        match self {
            ParamSpec::Real {
                lo, hi_exclusive, ..
            } => value.is_finite() && value >= *lo && hi_exclusive.is_none_or(|hi| value < hi),
            ParamSpec::Natural { lo, hi, .. } => {
                value.is_finite()
                    && value.fract() == 0.0
                    && value >= f64::from(*lo)
                    && value <= f64::from(*hi)
            }
        }
    }
}

/// A set-level catalog entry.
#[derive(Debug, Clone, Copy)]
pub struct TheoremEntry {
    pub id: &'static str,
    /// The mathematical content, named for what it says.
    pub title: &'static str,
    pub kind: EntryKind,
    /// `lhs REL rhs` in DSL text (an expression for existence records);
    /// may contain `{..}` placeholders when `parameter` is set.
    pub relation: &'static str,
    /// Hypotheses, one constraint each.
    pub given: &'static [&'static str],
    /// Equality condition, a single constraint.
    pub equality_claim: Option<&'static str>,
    pub claim_kind: Option<ClaimKind>,
    pub parameter: Option<ParamSpec>,
    /// One-line commentary (verification caveats and the like).
    pub note: &'static str,
}

/// A scalar inequality record: a chain `e1 ≤ e2 ≤ …` of degree-arithmetic
/// expressions over bounded real variables (values may exceed 1).
#[derive(Debug, Clone, Copy)]
pub struct ScalarRecord {
    pub id: &'static str,
    pub title: &'static str,
    /// `(name, lo, hi)` per variable; grids step through `[lo, hi]`.
    pub variables: &'static [(&'static str, f64, f64)],
    /// Hypotheses, one constraint each.
    pub constraints: &'static [&'static str],
    /// At least two sides; each adjacent pair is checked `left ≤ right`.
    pub chain: &'static [&'static str],
    pub parameter: Option<ParamSpec>,
}

const T4_SWEEP: &[f64] = &[0.0, 0.25, 0.5, 0.75, 0.9, 1.0, 2.0];
const T12_SWEEP: &[f64] = &[0.0, 0.25, 0.5, 0.75, 0.99];
const L2_SWEEP: &[f64] = &[0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0];

static THEOREMS: &[TheoremEntry] = &[
    TheoremEntry {
        id: "T1",
        title: "three-way mean-product comparison",
        kind: EntryKind::Inclusion,
        relation: "(A [+] B) / 2 .* (B [+] C) / 2 .* (C [+] A) / 2 >= A .* B .* C",
        given: &["a + b <= 1", "b + c <= 1", "c + a <= 1"],
        equality_claim: Some("(a - b)^2 + (b - c)^2 = 0"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "equality exactly when all three degrees coincide",
    },
    TheoremEntry {
        id: "T2a",
        title: "algebraic product over a bounded sum, left factor",
        kind: EntryKind::Inclusion,
        relation: "A .* (B [+] C) <= (A .* B) [+] (A .* C)",
        given: &[],
        equality_claim: Some("a = 1"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "equality also holds whenever b + c <= 1, so necessity fails on \
               the grid and is reported, never asserted",
    },
    TheoremEntry {
        id: "T2b",
        title: "algebraic product over a bounded sum, right factor",
        kind: EntryKind::Inclusion,
        relation: "(A [+] B) .* C <= (A .* C) [+] (B .* C)",
        given: &[],
        equality_claim: Some("c = 1"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "mirror image of T2a",
    },
    TheoremEntry {
        id: "T3a",
        title: "bounded product/difference exchange under inclusion",
        kind: EntryKind::Inclusion,
        relation: "A [*] (B [-] C) <= C [*] (B [-] A)",
        given: &["a <= c"],
        equality_claim: Some("a = c"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "",
    },
    TheoremEntry {
        id: "T3b",
        title: "bounded sum/difference exchange under inclusion",
        kind: EntryKind::Inclusion,
        relation: "(A [+] B) [-] C <= (B [+] C) [-] A",
        given: &["a <= c"],
        equality_claim: Some("a = c"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "",
    },
    TheoremEntry {
        id: "T3c",
        title: "bounded product/difference exchange, reversed inclusion",
        kind: EntryKind::Inclusion,
        relation: "A [*] (B [-] C) >= C [*] (B [-] A)",
        given: &["a >= c"],
        equality_claim: Some("a = c"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "dual of T3a",
    },
    TheoremEntry {
        id: "T3d",
        title: "bounded sum/difference exchange, reversed inclusion",
        kind: EntryKind::Inclusion,
        relation: "(A [+] B) [-] C >= (B [+] C) [-] A",
        given: &["a >= c"],
        equality_claim: Some("a = c"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "dual of T3b",
    },
    TheoremEntry {
        id: "T4",
        title: "union of powers against their algebraic sum",
        kind: EntryKind::Inclusion,
        relation: "A^{p} | B^{p} <= A^{p} .+ B^{p}",
        given: &[],
        equality_claim: Some("(1 - a) * b = 0"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: Some(ParamSpec::Real {
            name: "p",
            lo: 0.0,
            hi_exclusive: None,
            sweep: T4_SWEEP,
        }),
        note: "at p = 0 both sides are identically X (0^0 = 1), so the probe \
               reports universal equality",
    },
    TheoremEntry {
        id: "T5",
        title: "rearrangement of paired products",
        kind: EntryKind::Inclusion,
        relation: "(A .* B) [+] (C .* D) >= (A .* D) [+] (B .* C)",
        given: &["a >= c", "b >= d"],
        equality_claim: Some("(a - c) * (b - d) = 0"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "",
    },
    TheoremEntry {
        id: "T6",
        title: "triangle-style chain of bounded differences",
        kind: EntryKind::Inclusion,
        relation: "(A [-] B) [+] (B [-] C) >= A [-] C",
        given: &[],
        equality_claim: Some("(a - b) * (b - c) = 0"),
        claim_kind: Some(ClaimKind::SufficiencyOnly),
        parameter: None,
        note: "holds on the whole cube, including the monotone-chain region \
               where both sides vanish (see T6d)",
    },
    TheoremEntry {
        id: "T6d",
        title: "difference chain collapse on a monotone chain",
        kind: EntryKind::Identity,
        relation: "(A [-] B) [+] (B [-] C) == O",
        given: &["a <= b", "b <= c"],
        equality_claim: None,
        claim_kind: None,
        parameter: None,
        note: "degenerate case of T6",
    },
    TheoremEntry {
        id: "T7",
        title: "arithmetic vs geometric mean",
        kind: EntryKind::Inclusion,
        relation: "(A [+] B) / 2 >= (A .* B)^0.5",
        given: &["a * b <= 0.25"],
        equality_claim: Some("a = b"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "",
    },
    TheoremEntry {
        id: "T8",
        title: "geometric vs harmonic-style mean",
        kind: EntryKind::Inclusion,
        relation: "(A .* B)^0.5 / 2 >= (A .* B) [/] (A [+] B)",
        given: &["0 < a + b", "a + b <= 1"],
        equality_claim: Some("a = b"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "equality also holds wherever one degree is 0; reported as \
               necessity findings",
    },
    TheoremEntry {
        id: "T9",
        title: "Cauchy-Schwarz for paired products",
        kind: EntryKind::Inclusion,
        relation: "(A .* C) [+] (B .* D) <= (A^2 [+] B^2)^0.5 .* (C^2 [+] D^2)^0.5",
        given: &["a^2 + b^2 <= 1", "c^2 + d^2 <= 1"],
        equality_claim: Some("(a - c)^2 + (b - d)^2 = 0"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "the claimed proportionality constants are degree-bounded and \
               multiply to 1, forcing componentwise equality; proportional \
               unequal tuples still achieve equality and show up as findings",
    },
    TheoremEntry {
        id: "T9r",
        title: "Cauchy-Schwarz, squared form",
        kind: EntryKind::Inclusion,
        relation: "((A .* C) [+] (B .* D))^2 <= (A^2 [+] B^2) .* (C^2 [+] D^2)",
        given: &["a^2 + b^2 <= 1", "c^2 + d^2 <= 1"],
        equality_claim: None,
        claim_kind: None,
        parameter: None,
        note: "equivalent to T9 on constrained tuples; checked separately",
    },
    TheoremEntry {
        id: "T10",
        title: "Bernoulli-style power expansion",
        kind: EntryKind::Inclusion,
        relation: "(A [+] B)^{m} >= A^{m} [+] {m} * (A^{m1} .* B)",
        given: &["{m} * a^{m1} * b <= 1"],
        equality_claim: Some("a + b = 0"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: Some(ParamSpec::Natural {
            name: "m",
            lo: 1,
            hi: 8,
        }),
        note: "the 1/m hypothesis bound is stored multiplied out so the \
               comparison constant is exactly 1; the hypothesis also keeps \
               the m-fold scaling inside [0, 1]",
    },
    TheoremEntry {
        id: "T11",
        title: "Chebyshev-style ordered-product comparison",
        kind: EntryKind::Inclusion,
        relation: "(A [+] B) .* (C [+] D) / 2 <= (A .* C) [+] (B .* D)",
        given: &["a >= b", "c >= d", "a + b <= 1", "c + d <= 1"],
        equality_claim: None,
        claim_kind: None,
        parameter: None,
        note: "stored non-strict: both sides vanish at the all-zero tuple, \
               which the report's equality points expose",
    },
    TheoremEntry {
        id: "T12",
        title: "power-mean subadditivity for exponents below 1",
        kind: EntryKind::Inclusion,
        relation: "(A [+] B)^{p} / {q} <= A^{p} | B^{p}",
        given: &[],
        equality_claim: Some("(a - b)^2 + {p}^2 = 0"),
        claim_kind: Some(ClaimKind::SufficiencyOnly),
        parameter: Some(ParamSpec::Real {
            name: "p",
            lo: 0.0,
            hi_exclusive: Some(1.0),
            sweep: T12_SWEEP,
        }),
        note: "{q} stands for 2^p; the claim can only hold at p = 0, where \
               both sides are identically X",
    },
    TheoremEntry {
        id: "P1",
        title: "symmetric difference is not identically empty",
        kind: EntryKind::Existence,
        relation: "(A [-] B) [+] (B [-] A)",
        given: &[],
        equality_claim: None,
        claim_kind: None,
        parameter: None,
        note: "witnessed by any pair of distinct degrees; (1, 0) attains 1",
    },
    TheoremEntry {
        id: "C1",
        title: "head of the mean chain, halved",
        kind: EntryKind::Inclusion,
        relation: "(A [+] B) / 4 >= (A .* B)^0.5 / 2",
        given: &["a * b <= 0.25", "0 < a + b", "a + b <= 1"],
        equality_claim: Some("a = b"),
        claim_kind: Some(ClaimKind::IffClaimed),
        parameter: None,
        note: "continues through T8 to a full mean chain",
    },
];

static SCALARS: &[ScalarRecord] = &[
    ScalarRecord {
        id: "L1",
        title: "capped products multiply submultiplicatively",
        variables: &[("alpha", 0.0, 3.0), ("beta", 0.0, 3.0)],
        constraints: &[],
        chain: &["min(alpha, 1) * min(beta, 1)", "min(alpha * beta, 1)"],
        parameter: None,
    },
    ScalarRecord {
        id: "L2",
        title: "power of a sum split through the larger term",
        variables: &[("alpha", 0.0, 2.0), ("beta", 0.0, 2.0)],
        constraints: &[],
        chain: &[
            "(alpha + beta)^{p}",
            "2^{p} * max(alpha^{p}, beta^{p})",
            "2^{p} * (alpha^{p} + beta^{p})",
        ],
        parameter: Some(ParamSpec::Real {
            name: "p",
            lo: 0.0,
            hi_exclusive: None,
            sweep: L2_SWEEP,
        }),
    },
    ScalarRecord {
        id: "S1",
        title: "three-factor product of pair sums",
        variables: &[("alpha", 0.0, 3.0), ("beta", 0.0, 3.0), ("gamma", 0.0, 3.0)],
        constraints: &[],
        chain: &[
            "8 * alpha * beta * gamma",
            "(alpha + beta) * (beta + gamma) * (gamma + alpha)",
        ],
        parameter: None,
    },
    ScalarRecord {
        id: "S2",
        title: "rearrangement of two ordered pairs",
        variables: &[
            ("x1", -1.0, 1.0),
            ("x2", -1.0, 1.0),
            ("y1", -1.0, 1.0),
            ("y2", -1.0, 1.0),
        ],
        constraints: &["x1 >= x2", "y1 >= y2"],
        chain: &["x1 * y2 + x2 * y1", "x1 * y1 + x2 * y2"],
        parameter: None,
    },
    ScalarRecord {
        id: "S3",
        title: "geometric mean below arithmetic mean",
        variables: &[("alpha", 0.0, 3.0), ("beta", 0.0, 3.0)],
        constraints: &[],
        chain: &["(alpha * beta)^0.5", "(alpha + beta) / 2"],
        parameter: None,
    },
    ScalarRecord {
        id: "S4",
        title: "harmonic mean below geometric mean",
        variables: &[("alpha", 0.0, 3.0), ("beta", 0.0, 3.0)],
        constraints: &["alpha + beta > 0"],
        chain: &["2 * alpha * beta / (alpha + beta)", "(alpha * beta)^0.5"],
        parameter: None,
    },
    ScalarRecord {
        id: "S5",
        title: "Bernoulli-style expansion for scalars",
        variables: &[("alpha", 0.0, 2.0), ("beta", 0.0, 2.0)],
        constraints: &[],
        chain: &[
            "alpha^{m} + {m} * alpha^{m1} * beta",
            "(alpha + beta)^{m}",
        ],
        parameter: Some(ParamSpec::Natural {
            name: "m",
            lo: 1,
            hi: 8,
        }),
    },
    ScalarRecord {
        id: "S6",
        title: "Chebyshev pairing of two ordered pairs",
        variables: &[
            ("alpha", -1.0, 1.0),
            ("beta", -1.0, 1.0),
            ("gamma", -1.0, 1.0),
            ("delta", -1.0, 1.0),
        ],
        constraints: &["alpha >= beta", "gamma >= delta"],
        chain: &[
            "(alpha + beta) * (gamma + delta)",
            "2 * (alpha * gamma + beta * delta)",
        ],
        parameter: None,
    },
];

/// All set-level entries in stable catalog order (T1…T12 with their
/// sub-lettered companions, then P1, then C1).
pub fn list_theorems() -> &'static [TheoremEntry] {
    THEOREMS
}

/// All scalar records in stable order (L1, L2, S1…S6).
pub fn scalar_records() -> &'static [ScalarRecord] {
    SCALARS
}

/// Looks up a set-level entry by id.
pub fn get_theorem(id: &str) -> Result<&'static TheoremEntry, RegistryError> {
    THEOREMS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| RegistryError::UnknownTheorem(id.to_string()))
}

/// Looks up a scalar record by id.
pub fn get_scalar(id: &str) -> Option<&'static ScalarRecord> {
    SCALARS.iter().find(|s| s.id == id)
}

/// Any catalog record, either flavor.
#[derive(Debug, Clone, Copy)]
pub enum Record {
    Theorem(&'static TheoremEntry),
    Scalar(&'static ScalarRecord),
}

/// Looks up any record by id.
pub fn find_record(id: &str) -> Option<Record> {
    get_theorem(id)
        .ok()
        .map(Record::Theorem)
        .or_else(|| get_scalar(id).map(Record::Scalar))
}

/// Substitutes parameter placeholders into a template.
fn substitute(template: &str, spec: &ParamSpec, value: f64) -> String {
    match spec {
        ParamSpec::Natural { .. } => {
            let m = value as u64;
            template
                .replace("{m1}", &(m - 1).to_string())
                .replace("{m}", &m.to_string())
        }
        ParamSpec::Real { .. } => {
            let q = 2f64.powf(value);
            template
                .replace("{q}", &q.to_string())
                .replace("{p}", &value.to_string())
        }
    }
}

impl TheoremEntry {
    /// The complete statement text (relation, hypotheses, claim) with
    /// placeholders substituted when a parameter value is supplied.
    fn full_text(&self, param: Option<f64>) -> Result<String, RegistryError> {
        let apply = |text: &str| -> String {
            match (self.parameter.as_ref(), param) {
                (Some(spec), Some(value)) => substitute(text, spec, value),
                _ => text.to_string(),
            }
        };
        let mut text = apply(self.relation);
        if !self.given.is_empty() {
            let given: Vec<String> = self.given.iter().map(|g| apply(g)).collect();
            text.push_str(" given ");
            text.push_str(&given.join(", "));
        }
        if let Some(claim) = self.equality_claim {
            text.push_str(" equality_iff ");
            text.push_str(&apply(claim));
        }
        Ok(text)
    }

    fn parse_full(&self, param: Option<f64>) -> Result<RelationStatement, RegistryError> {
        let text = self.full_text(param)?;
        parse_statement(&text).map_err(|source| RegistryError::BadTemplate {
            id: self.id.to_string(),
            source,
        })
    }

    /// Parses the statement of an entry that takes no parameter.
    pub fn statement(&self) -> Result<RelationStatement, RegistryError> {
        if self.kind == EntryKind::Existence {
            return Err(RegistryError::NotAStatement {
                id: self.id.to_string(),
            });
        }
        if let Some(spec) = &self.parameter {
            return Err(RegistryError::MissingParameter {
                id: self.id.to_string(),
                name: spec.name(),
            });
        }
        self.parse_full(None)
    }

    /// Instantiates a parameterized entry at `value`.
    pub fn instantiate(&self, value: f64) -> Result<RelationStatement, RegistryError> {
        let Some(spec) = &self.parameter else {
            return Err(RegistryError::NoParameter {
                id: self.id.to_string(),
            });
        };
        if !spec.admits(value) {
            return Err(RegistryError::ParameterOutOfRange {
                id: self.id.to_string(),
                value,
            });
        }
        self.parse_full(Some(value))
    }

    /// The expression of an existence record.
    pub fn existence_expr(&self) -> Result<Expr, RegistryError> {
        if self.kind != EntryKind::Existence {
            return Err(RegistryError::NotAStatement {
                id: self.id.to_string(),
            });
        }
        crate::dsl::parse_expr(self.relation).map_err(|source| RegistryError::BadTemplate {
            id: self.id.to_string(),
            source,
        })
    }

    /// JSON description of this entry (canonical DSL text where parseable,
    /// raw template text for parameterized entries).
    pub fn describe(&self) -> Value {
        let dsl = if self.parameter.is_none() && self.kind != EntryKind::Existence {
            // Canonicalize through the parser/printer round trip.
            match self.parse_full(None) {
                Ok(s) => {
                    let mut bare = s.clone();
                    bare.constraints.clear();
                    bare.equality_condition = None;
                    format_statement(&bare)
                }
                Err(_) => self.relation.to_string(),
            }
        } else {
            self.relation.to_string()
        };
        let mut object = json!({
            "id": self.id,
            "title": self.title,
            "dsl": dsl,
            "given": self.given,
            "equality_iff": self.equality_claim,
            "kind": self.claim_kind.map(ClaimKind::label),
            "note": self.note,
        });
        if let Some(spec) = &self.parameter {
            object["parameter"] = match spec {
                ParamSpec::Real {
                    name,
                    lo,
                    hi_exclusive,
                    sweep,
                } => json!({
                    "name": name,
                    "min": lo,
                    "max_exclusive": hi_exclusive,
                    "sweep": sweep,
                }),
                ParamSpec::Natural { name, lo, hi } => json!({
                    "name": name,
                    "min": lo,
                    "max": hi,
                }),
            };
        }
        object
    }
}

impl ScalarRecord {
    /// The chain sides with placeholders substituted.
    pub fn chain_texts(&self, param: Option<f64>) -> Vec<String> {
        self.templates(self.chain, param)
    }

    /// The constraints with placeholders substituted.
    pub fn constraint_texts(&self, param: Option<f64>) -> Vec<String> {
        self.templates(self.constraints, param)
    }

    fn templates(&self, texts: &[&str], param: Option<f64>) -> Vec<String> {
        texts
            .iter()
            .map(|t| match (self.parameter.as_ref(), param) {
                (Some(spec), Some(value)) => substitute(t, spec, value),
                _ => (*t).to_string(),
            })
            .collect()
    }

    /// JSON description of this record.
    pub fn describe(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "variables": self.variables.iter()
                .map(|(n, lo, hi)| json!({"name": n, "min": lo, "max": hi}))
                .collect::<Vec<_>>(),
            "constraints": self.constraints,
            "chain": self.chain,
        })
    }
}

/// JSON export of the whole catalog.
pub fn catalog_json() -> Value {
    json!({
        "theorems": THEOREMS.iter().map(TheoremEntry::describe).collect::<Vec<_>>(),
        "scalars": SCALARS.iter().map(ScalarRecord::describe).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::Relation;

    #[test]
    fn catalog_counts_and_unique_ids() {
        assert_eq!(list_theorems().len(), 20);
        assert_eq!(scalar_records().len(), 8);
        let mut ids: Vec<&str> = list_theorems()
            .iter()
            .map(|t| t.id)
            .chain(scalar_records().iter().map(|s| s.id))
            .collect();
        let total = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), total, "catalog ids must be unique");
    }

    #[test]
    fn every_entry_parses() {
        for entry in list_theorems() {
            match (entry.kind, &entry.parameter) {
                (EntryKind::Existence, _) => {
                    entry.existence_expr().unwrap();
                }
                (_, Some(spec)) => {
                    for value in spec.sweep_values() {
                        let s = entry.instantiate(value).unwrap();
                        assert!(!s.variables.is_empty());
                    }
                }
                (_, None) => {
                    let s = entry.statement().unwrap();
                    assert!(!s.variables.is_empty());
                }
            }
        }
    }

    #[test]
    fn stable_order() {
        let ids: Vec<&str> = list_theorems().iter().map(|t| t.id).collect();
        assert_eq!(
            ids,
            [
                "T1", "T2a", "T2b", "T3a", "T3b", "T3c", "T3d", "T4", "T5", "T6", "T6d",
                "T7", "T8", "T9", "T9r", "T10", "T11", "T12", "P1", "C1",
            ]
        );
        let scalar_ids: Vec<&str> = scalar_records().iter().map(|s| s.id).collect();
        assert_eq!(scalar_ids, ["L1", "L2", "S1", "S2", "S3", "S4", "S5", "S6"]);
    }

    #[test]
    fn instantiate_bernoulli_at_three() {
        let entry = get_theorem("T10").unwrap();
        let s = entry.instantiate(3.0).unwrap();
        let expected = crate::dsl::parse_statement(
            "(A [+] B)^3 >= A^3 [+] 3 * (A^2 .* B) given 3 * a^2 * b <= 1 \
             equality_iff a + b = 0",
        )
        .unwrap();
        assert_eq!(s, expected);
        assert_eq!(s.relation, Relation::Superset);
    }

    #[test]
    fn parameter_ranges_enforced() {
        let t10 = get_theorem("T10").unwrap();
        for bad in [0.0, 9.0, 2.5, -1.0, f64::NAN] {
            assert!(matches!(
                t10.instantiate(bad),
                Err(RegistryError::ParameterOutOfRange { .. })
            ));
        }
        let t12 = get_theorem("T12").unwrap();
        assert!(matches!(
            t12.instantiate(1.0),
            Err(RegistryError::ParameterOutOfRange { .. })
        ));
        assert!(t12.instantiate(0.99).is_ok());
        let t4 = get_theorem("T4").unwrap();
        assert!(t4.instantiate(2.0).is_ok());
        assert!(t4.instantiate(-0.5).is_err());
        let t1 = get_theorem("T1").unwrap();
        assert!(matches!(
            t1.instantiate(1.0),
            Err(RegistryError::NoParameter { .. })
        ));
        assert!(matches!(
            t10.statement(),
            Err(RegistryError::MissingParameter { .. })
        ));
    }

    #[test]
    fn unknown_id() {
        assert_eq!(
            get_theorem("T0").unwrap_err(),
            RegistryError::UnknownTheorem("T0".into())
        );
        assert!(find_record("L1").is_some());
        assert!(find_record("S6").is_some());
        assert!(find_record("Z9").is_none());
    }

    #[test]
    fn describe_t7_shape() {
        let entry = get_theorem("T7").unwrap();
        let d = entry.describe();
        assert_eq!(d["id"], "T7");
        assert_eq!(d["dsl"], "0.5 * (A [+] B) >= (A .* B)^0.5");
        assert_eq!(d["given"], json!(["a * b <= 0.25"]));
        assert_eq!(d["equality_iff"], "a = b");
        assert_eq!(d["kind"], "iff-claimed");
    }

    #[test]
    fn twelve_at_quarter_has_expected_scale() {
        let s = get_theorem("T12").unwrap().instantiate(0.25).unwrap();
        match &s.lhs {
            Expr::Scale(kappa, _) => {
                assert!((kappa - 1.0 / 2f64.powf(0.25)).abs() < 1e-15);
            }
            other => panic!("unexpected lhs {other:?}"),
        }
    }
}
