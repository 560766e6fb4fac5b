//! Evaluation of expressions in set space and in degree space.
//!
//! [`eval_set`] builds intermediate [`FuzzySet`] values with the set-level
//! operations; [`eval_degree`] composes the scalar kernels directly on one
//! degree tuple. The two routes are deliberately independent — the verifier
//! uses their exact agreement as a cross-check of both.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use super::ast::{Arith, Comparator, Constraint, Expr};
use crate::ops::{self, kernel, BinaryOp, OpError, QuotientMode};
use crate::set::{FuzzySet, MembershipDegree, Tolerance, Universe};

/// Errors raised while evaluating an expression.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    /// A variable had no binding.
    #[error("variable {0:?} is not bound")]
    UnboundVariable(String),
    /// A scale factor above 1 pushed a degree past 1. Scaling never clamps:
    /// a multiplier above 1 is only valid where a hypothesis bounds the
    /// operand, and exceeding 1 means that hypothesis did not hold.
    #[error("scaling by {kappa} produced degree {value}, outside [0, 1]")]
    ScaleOverflow { kappa: f64, value: f64 },
    /// Strict-mode quotient hit a zero divisor degree (degree space carries
    /// no element labels).
    #[error("quotient divisor degree is zero")]
    DegreeZeroDivisor,
    /// A set-level operation failed.
    #[error(transparent)]
    Op(#[from] OpError),
}

/// Degree values for the variables of one statement, in a fixed order.
///
/// Set-variable lookups are case-sensitive; degree-variable lookups (from
/// constraints) match the set variable whose name lowercases to the query,
/// so binding `A` serves both `A` in expressions and `a` in constraints.
#[derive(Debug, Clone, Copy)]
pub struct DegreeBindings<'a> {
    names: &'a [String],
    values: &'a [f64],
}

impl<'a> DegreeBindings<'a> {
    /// Pairs `names[i]` with `values[i]`; the slices must be equally long.
    pub fn new(names: &'a [String], values: &'a [f64]) -> Self {
        assert_eq!(names.len(), values.len());
        DegreeBindings { names, values }
    }

    fn set_var(&self, name: &str) -> Option<f64> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| self.values[i])
    }

    fn degree_var(&self, name: &str) -> Option<f64> {
        self.names
            .iter()
            .position(|n| n.eq_ignore_ascii_case(name))
            .map(|i| self.values[i])
    }
}

/// Evaluates `e` to a single membership degree under `bindings`.
pub fn eval_degree(
    e: &Expr,
    bindings: DegreeBindings<'_>,
    mode: QuotientMode,
) -> Result<f64, EvalError> {
    match e {
        Expr::Var(name) => bindings
            .set_var(name)
            .ok_or_else(|| EvalError::UnboundVariable(name.clone())),
        Expr::Universal => Ok(1.0),
        Expr::Empty => Ok(0.0),
        Expr::Binary(op, lhs, rhs) => {
            let a = eval_degree(lhs, bindings, mode)?;
            let b = eval_degree(rhs, bindings, mode)?;
            op.apply(a, b, mode).map_err(|_| EvalError::DegreeZeroDivisor)
        }
        Expr::Scale(kappa, inner) => {
            let a = eval_degree(inner, bindings, mode)?;
            scale_degree(*kappa, a)
        }
        Expr::Power(base, p) => {
            let a = eval_degree(base, bindings, mode)?;
            Ok(kernel::power(a, *p))
        }
    }
}

fn scale_degree(kappa: f64, a: f64) -> Result<f64, EvalError> {
    if kappa <= 1.0 {
        return Ok(kernel::scale(kappa, a));
    }
    let value = kappa * a;
    if value > 1.0 {
        Err(EvalError::ScaleOverflow { kappa, value })
    } else {
        Ok(value)
    }
}

/// Evaluates `e` to a fuzzy set on `universe`, with every variable bound to
/// a set on that same universe.
pub fn eval_set(
    e: &Expr,
    universe: &Arc<Universe>,
    env: &BTreeMap<String, FuzzySet>,
    mode: QuotientMode,
) -> Result<FuzzySet, EvalError> {
    match e {
        Expr::Var(name) => {
            let set = env
                .get(name)
                .ok_or_else(|| EvalError::UnboundVariable(name.clone()))?;
            if set.universe().as_ref() != universe.as_ref() {
                return Err(EvalError::Op(OpError::UniverseMismatch));
            }
            Ok(set.clone())
        }
        Expr::Universal => Ok(FuzzySet::universal(Arc::clone(universe))),
        Expr::Empty => Ok(FuzzySet::empty(Arc::clone(universe))),
        Expr::Binary(op, lhs, rhs) => {
            let a = eval_set(lhs, universe, env, mode)?;
            let b = eval_set(rhs, universe, env, mode)?;
            let combined = match op {
                BinaryOp::Union => ops::union(&a, &b),
                BinaryOp::Intersection => ops::intersection(&a, &b),
                BinaryOp::AlgebraicSum => ops::algebraic_sum(&a, &b),
                BinaryOp::AlgebraicProduct => ops::algebraic_product(&a, &b),
                BinaryOp::BoundedSum => ops::bounded_sum(&a, &b),
                BinaryOp::BoundedProduct => ops::bounded_product(&a, &b),
                BinaryOp::BoundedDifference => ops::bounded_difference(&a, &b),
                BinaryOp::BoundedQuotient => ops::bounded_quotient(&a, &b, mode),
            }?;
            Ok(combined)
        }
        Expr::Scale(kappa, inner) => {
            let a = eval_set(inner, universe, env, mode)?;
            if *kappa <= 1.0 {
                Ok(ops::scalar_multiply(*kappa, &a)?)
            } else {
                // Same over-1 policy as the degree route, element by element.
                let degrees = a
                    .degrees()
                    .iter()
                    .map(|d| scale_degree(*kappa, d.value()).map(MembershipDegree::clamped))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(FuzzySet::from_degrees(Arc::clone(universe), degrees))
            }
        }
        Expr::Power(base, p) => {
            let a = eval_set(base, universe, env, mode)?;
            Ok(ops::power(&a, *p)?)
        }
    }
}

/// Evaluates degree arithmetic under `bindings` (variables are matched
/// case-insensitively, see [`DegreeBindings`]).
pub fn eval_arith(a: &Arith, bindings: DegreeBindings<'_>) -> Result<f64, EvalError> {
    Ok(match a {
        Arith::Number(n) => *n,
        Arith::Var(name) => bindings
            .degree_var(name)
            .ok_or_else(|| EvalError::UnboundVariable(name.clone()))?,
        Arith::Add(l, r) => eval_arith(l, bindings)? + eval_arith(r, bindings)?,
        Arith::Sub(l, r) => eval_arith(l, bindings)? - eval_arith(r, bindings)?,
        Arith::Mul(l, r) => eval_arith(l, bindings)? * eval_arith(r, bindings)?,
        Arith::Div(l, r) => eval_arith(l, bindings)? / eval_arith(r, bindings)?,
        Arith::Pow(base, p) => {
            let b = eval_arith(base, bindings)?;
            // Same convention as degree powers: x^0 = 1 including x = 0.
            if *p == 0.0 {
                1.0
            } else {
                b.powf(*p)
            }
        }
        Arith::Min(l, r) => eval_arith(l, bindings)?.min(eval_arith(r, bindings)?),
        Arith::Max(l, r) => eval_arith(l, bindings)?.max(eval_arith(r, bindings)?),
    })
}

impl Constraint {
    /// Whether the constraint holds under `bindings`, with ε slack: the
    /// inclusive comparators forgive an ε excursion past the bound, the
    /// strict ones demand an ε margin beyond it.
    pub fn holds(&self, bindings: DegreeBindings<'_>, tol: Tolerance) -> Result<bool, EvalError> {
        let lhs = eval_arith(&self.lhs, bindings)?;
        let rhs = eval_arith(&self.rhs, bindings)?;
        let eps = tol.epsilon();
        Ok(match self.cmp {
            Comparator::Le => lhs <= rhs + eps,
            Comparator::Lt => lhs < rhs - eps,
            Comparator::Ge => lhs >= rhs - eps,
            Comparator::Gt => lhs > rhs + eps,
            Comparator::Eq => (lhs - rhs).abs() <= eps,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parser::{parse_constraint_list, parse_expr};

    fn universe1() -> Arc<Universe> {
        Universe::new(["x1"]).unwrap()
    }

    fn env1(pairs: &[(&str, f64)]) -> (Arc<Universe>, BTreeMap<String, FuzzySet>) {
        let u = universe1();
        let env = pairs
            .iter()
            .map(|&(name, d)| {
                (
                    name.to_string(),
                    FuzzySet::new(Arc::clone(&u), &[d]).unwrap(),
                )
            })
            .collect();
        (u, env)
    }

    #[test]
    fn set_route_examples() {
        let (u, env) = env1(&[("A", 0.3)]);
        let e = parse_expr("X [-] A").unwrap();
        let s = eval_set(&e, &u, &env, QuotientMode::Limit).unwrap();
        assert!((s.degree_at(0).value() - 0.7).abs() < 1e-12);

        let e = parse_expr("A^0").unwrap();
        let s = eval_set(&e, &u, &env, QuotientMode::Limit).unwrap();
        assert_eq!(s.degree_at(0).value(), 1.0);

        let e = parse_expr("O [/] X").unwrap();
        let s = eval_set(&e, &u, &env, QuotientMode::Strict).unwrap();
        assert_eq!(s.degree_at(0).value(), 0.0);
    }

    #[test]
    fn unbound_variable_is_reported() {
        let (u, env) = env1(&[("A", 0.3)]);
        let e = parse_expr("A [+] C").unwrap();
        assert_eq!(
            eval_set(&e, &u, &env, QuotientMode::Limit).unwrap_err(),
            EvalError::UnboundVariable("C".into())
        );
    }

    #[test]
    fn degree_route_matches_hand_computation() {
        // Product of three half-scaled bounded sums at a = b = c = 0.3:
        // (0.5·0.6)^3 = 0.027.
        let e =
            parse_expr("(A [+] B) / 2 .* (B [+] C) / 2 .* (C [+] A) / 2").unwrap();
        let names: Vec<String> = ["A", "B", "C"].map(String::from).to_vec();
        let values = [0.3, 0.3, 0.3];
        let v = eval_degree(&e, DegreeBindings::new(&names, &values), QuotientMode::Limit)
            .unwrap();
        assert!((v - 0.027).abs() < 1e-9);
    }

    #[test]
    fn scale_above_one_errors_only_past_one() {
        let e = parse_expr("3 * (A^2 .* B)").unwrap();
        let names: Vec<String> = ["A", "B"].map(String::from).to_vec();
        let ok = [1.0, 0.3];
        let v = eval_degree(&e, DegreeBindings::new(&names, &ok), QuotientMode::Limit).unwrap();
        assert!((v - 0.9).abs() < 1e-12);
        let too_big = [1.0, 0.5];
        match eval_degree(&e, DegreeBindings::new(&names, &too_big), QuotientMode::Limit) {
            Err(EvalError::ScaleOverflow { kappa, value }) => {
                assert_eq!(kappa, 3.0);
                assert!((value - 1.5).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn constraints_use_lowercase_aliases_with_slack() {
        let names: Vec<String> = ["A", "B"].map(String::from).to_vec();
        let tol = Tolerance::default();
        let c = parse_constraint_list("a * b <= 0.25").unwrap().remove(0);
        assert!(c.holds(DegreeBindings::new(&names, &[0.5, 0.5]), tol).unwrap());
        assert!(!c.holds(DegreeBindings::new(&names, &[0.6, 0.5]), tol).unwrap());
        // Strict comparison excludes the boundary.
        let c = parse_constraint_list("0 < a + b").unwrap().remove(0);
        assert!(!c.holds(DegreeBindings::new(&names, &[0.0, 0.0]), tol).unwrap());
        assert!(c.holds(DegreeBindings::new(&names, &[0.05, 0.0]), tol).unwrap());
    }

    #[test]
    fn routes_agree_exactly_on_a_compound_expression() {
        let e = parse_expr("(A [+] B)^0.5 / 2 [/] (A .+ B)").unwrap();
        let names: Vec<String> = ["A", "B"].map(String::from).to_vec();
        let u = universe1();
        for a in [0.0, 0.2, 0.85, 1.0] {
            for b in [0.0, 0.4, 1.0] {
                let values = [a, b];
                let by_degree =
                    eval_degree(&e, DegreeBindings::new(&names, &values), QuotientMode::Limit)
                        .unwrap();
                let env: BTreeMap<String, FuzzySet> = names
                    .iter()
                    .zip(values)
                    .map(|(n, d)| (n.clone(), FuzzySet::new(Arc::clone(&u), &[d]).unwrap()))
                    .collect();
                let by_set = eval_set(&e, &u, &env, QuotientMode::Limit).unwrap();
                assert_eq!(by_set.degree_at(0).value().to_bits(), by_degree.to_bits());
            }
        }
    }
}
