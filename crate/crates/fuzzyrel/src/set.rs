//! Core fuzzy-set model: membership degrees, finite universes, fuzzy sets,
//! and tolerance-relaxed inclusion/equality.
//!
//! A fuzzy set on a finite universe `{x1, .., xn}` is the vector of its
//! membership degrees, one per element, each in `[0, 1]`. Inclusion and
//! equality are pointwise comparisons relaxed by a small tolerance `ε` so
//! that floating-point noise on computed degrees does not flip verdicts.
//! All types here are immutable once constructed.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Errors from constructing or comparing the core set types.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SetError {
    /// A membership degree was not a finite number in `[0, 1]`.
    #[error("membership degree {0} is not in [0, 1]")]
    InvalidDegree(f64),
    /// A degree at a specific universe position was out of range.
    #[error("degree {value} at position {index} is not in [0, 1]")]
    DegreeOutOfRange { index: usize, value: f64 },
    /// The degree vector does not match the universe size.
    #[error("expected {expected} degrees for this universe, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    /// Two sets live on different universes and cannot be compared.
    #[error("fuzzy sets live on different universes")]
    UniverseMismatch,
    /// A universe label appeared more than once.
    #[error("duplicate universe label {0:?}")]
    DuplicateLabel(String),
    /// A tolerance outside the open interval `(0, 1e-3)`.
    #[error("tolerance {0} is not in (0, 1e-3)")]
    InvalidTolerance(f64),
}

/// A single membership degree: a finite `f64` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MembershipDegree(f64);

impl MembershipDegree {
    /// Full membership.
    pub const ONE: MembershipDegree = MembershipDegree(1.0);
    /// No membership.
    pub const ZERO: MembershipDegree = MembershipDegree(0.0);

    /// Validates that `value` is finite and in `[0, 1]`.
    pub fn new(value: f64) -> Result<Self, SetError> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(MembershipDegree(value))
        } else {
            Err(SetError::InvalidDegree(value))
        }
    }

    /// Clamps a kernel result into `[0, 1]`.
    ///
    /// Operation kernels are closed over `[0, 1]` in exact arithmetic; this
    /// constructor absorbs the one-ulp excursions floating-point rounding can
    /// introduce. Inputs are expected to be finite.
    pub fn clamped(value: f64) -> Self {
        debug_assert!(value.is_finite(), "kernel produced a non-finite degree");
        MembershipDegree(value.clamp(0.0, 1.0))
    }

    /// The raw degree value.
    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for MembershipDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Comparison tolerance `ε` used by inclusion/equality and by the verifier.
///
/// Must lie in the open interval `(0, 1e-3)`; the default is `1e-9`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    /// Validates `0 < epsilon < 1e-3`.
    pub fn new(epsilon: f64) -> Result<Self, SetError> {
        if epsilon.is_finite() && epsilon > 0.0 && epsilon < 1e-3 {
            Ok(Tolerance(epsilon))
        } else {
            Err(SetError::InvalidTolerance(epsilon))
        }
    }

    /// The tolerance value.
    pub fn epsilon(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(1e-9)
    }
}

/// An ordered finite universe of pairwise-distinct element labels.
///
/// Element order is fixed at construction and drives degree-vector layout,
/// iteration order, and all printed output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    /// Builds a universe, rejecting duplicate labels.
    ///
    /// An empty universe is allowed; every set on it is vacuously both empty
    /// and universal.
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>, SetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(SetError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Arc::new(Universe { labels }))
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// True when the universe has no elements.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The labels in universe order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Position of `label`, if present. Universes are small; a linear scan
    /// keeps the type free of auxiliary index structures.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// An immutable fuzzy set: a shared universe plus one degree per element.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet {
    universe: Arc<Universe>,
    degrees: Vec<MembershipDegree>,
}

impl FuzzySet {
    /// Builds a fuzzy set from raw degree values in universe order.
    ///
    /// The vector length must match the universe size and every value must be
    /// a finite number in `[0, 1]`.
    pub fn new(universe: Arc<Universe>, degrees: &[f64]) -> Result<Self, SetError> {
        if degrees.len() != universe.len() {
            return Err(SetError::LengthMismatch {
                expected: universe.len(),
                found: degrees.len(),
            });
        }
        let degrees = degrees
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                MembershipDegree::new(value)
                    .map_err(|_| SetError::DegreeOutOfRange { index, value })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FuzzySet { universe, degrees })
    }

    /// Builds a set from already-validated degrees (used by operation kernels).
    pub(crate) fn from_degrees(universe: Arc<Universe>, degrees: Vec<MembershipDegree>) -> Self {
        debug_assert_eq!(universe.len(), degrees.len());
        FuzzySet { universe, degrees }
    }

    /// The universal set `X`: degree 1 everywhere.
    pub fn universal(universe: Arc<Universe>) -> Self {
        let degrees = vec![MembershipDegree::ONE; universe.len()];
        FuzzySet { universe, degrees }
    }

    /// The empty set `∅`: degree 0 everywhere.
    pub fn empty(universe: Arc<Universe>) -> Self {
        let degrees = vec![MembershipDegree::ZERO; universe.len()];
        FuzzySet { universe, degrees }
    }

    /// The universe this set lives on.
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Degrees in universe order.
    pub fn degrees(&self) -> &[MembershipDegree] {
        &self.degrees
    }

    /// Degree at a universe position.
    pub fn degree_at(&self, index: usize) -> MembershipDegree {
        self.degrees[index]
    }

    /// Degree of a labelled element, if the label exists.
    pub fn degree_of(&self, label: &str) -> Option<MembershipDegree> {
        self.universe.index_of(label).map(|i| self.degrees[i])
    }

    /// True when both sets share one universe (same allocation or equal
    /// label sequences).
    pub fn same_universe(&self, other: &FuzzySet) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe
    }

    /// Tolerance-relaxed inclusion: `self ⊆ other` iff
    /// `μ_self(x) ≤ μ_other(x) + ε` for every element `x`.
    pub fn is_included_in(&self, other: &FuzzySet, tol: Tolerance) -> Result<bool, SetError> {
        if !self.same_universe(other) {
            return Err(SetError::UniverseMismatch);
        }
        Ok(self
            .degrees
            .iter()
            .zip(&other.degrees)
            .all(|(a, b)| a.value() <= b.value() + tol.epsilon()))
    }

    /// Tolerance-relaxed equality: `|μ_self(x) − μ_other(x)| ≤ ε` everywhere.
    pub fn equals(&self, other: &FuzzySet, tol: Tolerance) -> Result<bool, SetError> {
        if !self.same_universe(other) {
            return Err(SetError::UniverseMismatch);
        }
        Ok(self
            .degrees
            .iter()
            .zip(&other.degrees)
            .all(|(a, b)| (a.value() - b.value()).abs() <= tol.epsilon()))
    }
}
