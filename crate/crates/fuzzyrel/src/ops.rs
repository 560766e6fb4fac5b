//! Pointwise fuzzy-set operations and their scalar degree kernels.
//!
//! Every set-level operation is the elementwise map of a scalar kernel
//! `[0,1]^k → [0,1]` over a shared universe; the kernels are exposed in
//! [`kernel`] so degree-space reasoning (as the verifier does) and set-space
//! evaluation share one source of truth. Kernels clamp their final result
//! into `[0, 1]` to absorb floating-point rounding; in exact arithmetic they
//! are closed over the unit interval.

use std::sync::Arc;

use thiserror::Error;

use crate::set::{FuzzySet, MembershipDegree, SetError};

/// Errors from set-level operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OpError {
    /// Operands live on different universes.
    #[error("fuzzy sets live on different universes")]
    UniverseMismatch,
    /// Strict-mode quotient by the empty set (divisor identically zero).
    #[error("quotient divisor is the empty set")]
    EmptyDivisor,
    /// Strict-mode quotient hit a zero divisor degree at one element.
    #[error("quotient divisor degree is zero at element {element:?}")]
    ZeroDegreeDivisor { element: String },
    /// Scalar multiplier outside `[0, 1]`.
    #[error("scalar {0} is not in [0, 1]")]
    ScalarOutOfRange(f64),
    /// Power exponent below zero (or not a number).
    #[error("exponent {0} is negative")]
    NegativeExponent(f64),
}

/// How a quotient treats a zero divisor degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QuotientMode {
    /// Zero divisor degrees are an error (`ZeroDegreeDivisor`), and an
    /// identically-zero divisor set is `EmptyDivisor`.
    Strict,
    /// Zero divisor degrees take the limit of `min{a/b, 1}` as `b → 0⁺`:
    /// 1 when the dividend is positive, 0 when it is zero. This keeps the
    /// quotient total and monotone, and is the default.
    #[default]
    Limit,
}

/// The eight binary operations of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    /// `max{a, b}` — union.
    Union,
    /// `min{a, b}` — intersection.
    Intersection,
    /// `a + b − a·b` — algebraic sum.
    AlgebraicSum,
    /// `a·b` — algebraic product.
    AlgebraicProduct,
    /// `min{a + b, 1}` — bounded sum.
    BoundedSum,
    /// `max{a + b − 1, 0}` — bounded product.
    BoundedProduct,
    /// `max{a − b, 0}` — bounded difference.
    BoundedDifference,
    /// `min{a / b, 1}` — bounded quotient (see [`QuotientMode`]).
    BoundedQuotient,
}

impl BinaryOp {
    /// All eight operations, in a fixed order.
    pub const ALL: [BinaryOp; 8] = [
        BinaryOp::Union,
        BinaryOp::Intersection,
        BinaryOp::AlgebraicSum,
        BinaryOp::AlgebraicProduct,
        BinaryOp::BoundedSum,
        BinaryOp::BoundedProduct,
        BinaryOp::BoundedDifference,
        BinaryOp::BoundedQuotient,
    ];

    /// Applies this operation's degree kernel.
    ///
    /// Only `BoundedQuotient` can fail, and only in [`QuotientMode::Strict`].
    pub fn apply(self, a: f64, b: f64, mode: QuotientMode) -> Result<f64, ZeroDivisor> {
        Ok(match self {
            BinaryOp::Union => kernel::union(a, b),
            BinaryOp::Intersection => kernel::intersection(a, b),
            BinaryOp::AlgebraicSum => kernel::algebraic_sum(a, b),
            BinaryOp::AlgebraicProduct => kernel::algebraic_product(a, b),
            BinaryOp::BoundedSum => kernel::bounded_sum(a, b),
            BinaryOp::BoundedProduct => kernel::bounded_product(a, b),
            BinaryOp::BoundedDifference => kernel::bounded_difference(a, b),
            BinaryOp::BoundedQuotient => return kernel::bounded_quotient(a, b, mode),
        })
    }

    /// True for the operations that are commutative (and associative).
    pub fn is_commutative(self) -> bool {
        !matches!(self, BinaryOp::BoundedDifference | BinaryOp::BoundedQuotient)
    }
}

/// Marker error for a strict-mode zero divisor at the degree level; the
/// set-level operation attaches the offending element label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("quotient divisor degree is zero")]
pub struct ZeroDivisor;

/// Scalar degree kernels. Arguments are membership degrees in `[0, 1]`;
/// results are clamped back into `[0, 1]` after rounding.
pub mod kernel {
    use super::{QuotientMode, ZeroDivisor};

    fn clamp01(v: f64) -> f64 {
        v.clamp(0.0, 1.0)
    }

    /// `max{a, b}`.
    pub fn union(a: f64, b: f64) -> f64 {
        a.max(b)
    }

    /// `min{a, b}`.
    pub fn intersection(a: f64, b: f64) -> f64 {
        a.min(b)
    }

    /// `a + b − a·b`.
    pub fn algebraic_sum(a: f64, b: f64) -> f64 {
        clamp01(a + b - a * b)
    }

    /// `a·b`.
    pub fn algebraic_product(a: f64, b: f64) -> f64 {
        clamp01(a * b)
    }

    /// `min{a + b, 1}`.
    pub fn bounded_sum(a: f64, b: f64) -> f64 {
        (a + b).min(1.0)
    }

    /// `max{a + b − 1, 0}`.
    pub fn bounded_product(a: f64, b: f64) -> f64 {
        (a + b - 1.0).max(0.0)
    }

    /// `max{a − b, 0}`.
    pub fn bounded_difference(a: f64, b: f64) -> f64 {
        (a - b).max(0.0)
    }

    /// `min{a / b, 1}`, with the zero-divisor treatment picked by `mode`.
    pub fn bounded_quotient(a: f64, b: f64, mode: QuotientMode) -> Result<f64, ZeroDivisor> {
        if b == 0.0 {
            return match mode {
                QuotientMode::Strict => Err(ZeroDivisor),
                // lim_{b→0⁺} min{a/b, 1} is 1 for a > 0 and 0 for a = 0.
                QuotientMode::Limit => Ok(if a > 0.0 { 1.0 } else { 0.0 }),
            };
        }
        Ok((a / b).min(1.0))
    }

    /// `κ·a` for `κ ∈ [0, 1]`.
    pub fn scale(kappa: f64, a: f64) -> f64 {
        clamp01(kappa * a)
    }

    /// `a^p` for `p ≥ 0`, with the convention `0^0 = 1` (so `A^0 = X`).
    pub fn power(a: f64, p: f64) -> f64 {
        if p == 0.0 {
            1.0
        } else {
            clamp01(a.powf(p))
        }
    }
}

fn binary_map(
    a: &FuzzySet,
    b: &FuzzySet,
    f: impl Fn(f64, f64) -> f64,
) -> Result<FuzzySet, OpError> {
    if !a.same_universe(b) {
        return Err(OpError::UniverseMismatch);
    }
    let degrees = a
        .degrees()
        .iter()
        .zip(b.degrees())
        .map(|(x, y)| MembershipDegree::clamped(f(x.value(), y.value())))
        .collect();
    Ok(FuzzySet::from_degrees(Arc::clone(a.universe()), degrees))
}

/// Union `A ∪ B`: pointwise `max`.
pub fn union(a: &FuzzySet, b: &FuzzySet) -> Result<FuzzySet, OpError> {
    binary_map(a, b, kernel::union)
}

/// Intersection `A ∩ B`: pointwise `min`.
pub fn intersection(a: &FuzzySet, b: &FuzzySet) -> Result<FuzzySet, OpError> {
    binary_map(a, b, kernel::intersection)
}

/// Algebraic sum `A ∔ B`: pointwise `a + b − a·b`.
pub fn algebraic_sum(a: &FuzzySet, b: &FuzzySet) -> Result<FuzzySet, OpError> {
    binary_map(a, b, kernel::algebraic_sum)
}

/// Algebraic product `A · B`: pointwise `a·b`.
pub fn algebraic_product(a: &FuzzySet, b: &FuzzySet) -> Result<FuzzySet, OpError> {
    binary_map(a, b, kernel::algebraic_product)
}

/// Bounded sum `A ⊕ B`: pointwise `min{a + b, 1}`.
pub fn bounded_sum(a: &FuzzySet, b: &FuzzySet) -> Result<FuzzySet, OpError> {
    binary_map(a, b, kernel::bounded_sum)
}

/// Bounded product `A ⊙ B`: pointwise `max{a + b − 1, 0}`.
pub fn bounded_product(a: &FuzzySet, b: &FuzzySet) -> Result<FuzzySet, OpError> {
    binary_map(a, b, kernel::bounded_product)
}

/// Bounded difference `A ⊖ B`: pointwise `max{a − b, 0}`.
pub fn bounded_difference(a: &FuzzySet, b: &FuzzySet) -> Result<FuzzySet, OpError> {
    binary_map(a, b, kernel::bounded_difference)
}

/// Bounded quotient `A ⊘ B`: pointwise `min{a / b, 1}`.
///
/// In [`QuotientMode::Strict`] an identically-zero divisor is
/// [`OpError::EmptyDivisor`] and any zero divisor degree is
/// [`OpError::ZeroDegreeDivisor`] naming the element; in
/// [`QuotientMode::Limit`] zero divisors take the one-sided limit value.
pub fn bounded_quotient(
    a: &FuzzySet,
    b: &FuzzySet,
    mode: QuotientMode,
) -> Result<FuzzySet, OpError> {
    if !a.same_universe(b) {
        return Err(OpError::UniverseMismatch);
    }
    if mode == QuotientMode::Strict && b.degrees().iter().all(|d| d.value() == 0.0) {
        return Err(OpError::EmptyDivisor);
    }
    let degrees = a
        .degrees()
        .iter()
        .zip(b.degrees())
        .enumerate()
        .map(|(i, (x, y))| {
            kernel::bounded_quotient(x.value(), y.value(), mode)
                .map(MembershipDegree::clamped)
                .map_err(|ZeroDivisor| OpError::ZeroDegreeDivisor {
                    element: a.universe().labels()[i].clone(),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FuzzySet::from_degrees(Arc::clone(a.universe()), degrees))
}

/// Scalar multiple `κ·A` for `κ ∈ [0, 1]`.
///
/// Multipliers above 1 are rejected rather than clamped: the scaled value
/// could leave `[0, 1]`, and silently capping it would mask caller bugs.
pub fn scalar_multiply(kappa: f64, a: &FuzzySet) -> Result<FuzzySet, OpError> {
    if !kappa.is_finite() || !(0.0..=1.0).contains(&kappa) {
        return Err(OpError::ScalarOutOfRange(kappa));
    }
    let degrees = a
        .degrees()
        .iter()
        .map(|d| MembershipDegree::clamped(kernel::scale(kappa, d.value())))
        .collect();
    Ok(FuzzySet::from_degrees(Arc::clone(a.universe()), degrees))
}

/// Real power `A^p` for `p ≥ 0`, with `A^0 = X` (the convention `0^0 = 1`).
pub fn power(a: &FuzzySet, p: f64) -> Result<FuzzySet, OpError> {
    if !p.is_finite() || p < 0.0 {
        return Err(OpError::NegativeExponent(p));
    }
    let degrees = a
        .degrees()
        .iter()
        .map(|d| MembershipDegree::clamped(kernel::power(d.value(), p)))
        .collect();
    Ok(FuzzySet::from_degrees(Arc::clone(a.universe()), degrees))
}

/// Natural power `A^n` built from repeated algebraic products
/// (`A`, `A·A`, `A·A·A`, …). Agrees with [`power`] within tolerance.
pub fn power_nat(a: &FuzzySet, n: u32) -> FuzzySet {
    assert!(n >= 1, "natural power needs n >= 1");
    let mut acc = a.clone();
    for _ in 1..n {
        acc = algebraic_product(&acc, a).expect("same universe by construction");
    }
    acc
}

/// Converts a set-comparison error into the operation error space.
impl From<SetError> for OpError {
    fn from(e: SetError) -> Self {
        debug_assert_eq!(e, SetError::UniverseMismatch);
        OpError::UniverseMismatch
    }
}
