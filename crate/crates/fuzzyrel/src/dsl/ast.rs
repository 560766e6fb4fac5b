//! Syntax trees for set expressions, degree arithmetic, and statements.

use crate::ops::BinaryOp;

/// A fuzzy-set expression.
///
/// `Scale` multipliers are finite and nonnegative; multipliers above 1 occur
/// in natural-power expansions (`3 * (A^2 .* B)`) and are only meaningful
/// where a hypothesis keeps the scaled degree inside `[0, 1]` — evaluation
/// reports an error if it ever is not. `Power` exponents are finite and
/// nonnegative, with `e^0` the universal set (`0^0 = 1`).
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// An uppercase set variable.
    Var(String),
    /// The universal set `X`.
    Universal,
    /// The empty set `O`.
    Empty,
    /// One of the eight binary operations.
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
    /// Scalar multiple `κ · e`.
    Scale(f64, Box<Expr>),
    /// Real power `e^p`.
    Power(Box<Expr>, f64),
}

impl Expr {
    /// Free variables in depth-first, left-to-right first-appearance order.
    pub fn free_variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut Vec<String>) {
        match self {
            Expr::Var(name) => {
                if !out.iter().any(|v| v == name) {
                    out.push(name.clone());
                }
            }
            Expr::Universal | Expr::Empty => {}
            Expr::Binary(_, lhs, rhs) => {
                lhs.collect_variables(out);
                rhs.collect_variables(out);
            }
            Expr::Scale(_, inner) => inner.collect_variables(out),
            Expr::Power(inner, _) => inner.collect_variables(out),
        }
    }
}

/// How two set expressions are related in a statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `lhs <= rhs`: lhs is included in rhs.
    Subset,
    /// `lhs >= rhs`: lhs includes rhs.
    Superset,
    /// `lhs == rhs`: pointwise equal.
    Equal,
}

/// Comparison operator in a degree constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparator {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
}

/// Arithmetic over membership degrees (and, for scalar records, over
/// nonnegative reals that may exceed 1).
#[derive(Debug, Clone, PartialEq)]
pub enum Arith {
    Number(f64),
    /// A lowercase degree variable, the alias of the same-named set variable.
    Var(String),
    Add(Box<Arith>, Box<Arith>),
    Sub(Box<Arith>, Box<Arith>),
    Mul(Box<Arith>, Box<Arith>),
    Div(Box<Arith>, Box<Arith>),
    /// `base^p` with a literal exponent; `0^0 = 1` as everywhere else.
    Pow(Box<Arith>, f64),
    Min(Box<Arith>, Box<Arith>),
    Max(Box<Arith>, Box<Arith>),
}

impl Arith {
    /// Degree variables in first-appearance order.
    pub fn free_variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut Vec<String>) {
        match self {
            Arith::Number(_) => {}
            Arith::Var(name) => {
                if !out.iter().any(|v| v == name) {
                    out.push(name.clone());
                }
            }
            Arith::Add(a, b)
            | Arith::Sub(a, b)
            | Arith::Mul(a, b)
            | Arith::Div(a, b)
            | Arith::Min(a, b)
            | Arith::Max(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
            Arith::Pow(a, _) => a.collect_variables(out),
        }
    }
}

/// A single comparison between two degree-arithmetic expressions.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub lhs: Arith,
    pub cmp: Comparator,
    pub rhs: Arith,
}

impl Constraint {
    /// Degree variables of both sides, in first-appearance order.
    pub fn free_variables(&self) -> Vec<String> {
        let mut out = self.lhs.free_variables();
        for v in self.rhs.free_variables() {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }
}

/// A parsed relation statement with its hypotheses and optional equality
/// claim.
///
/// `variables` is the union of the free set variables of `lhs` and `rhs`
/// and the set aliases of every constraint variable, in first-appearance
/// order (lhs, then rhs, then constraints, then the equality condition).
/// A constraint variable `a` aliases the set variable whose name lowercases
/// to `a`; a constraint variable with no matching set variable introduces
/// one (its uppercased name).
#[derive(Debug, Clone, PartialEq)]
pub struct RelationStatement {
    pub lhs: Expr,
    pub rhs: Expr,
    pub relation: Relation,
    pub variables: Vec<String>,
    pub constraints: Vec<Constraint>,
    pub equality_condition: Option<Constraint>,
}

impl RelationStatement {
    /// Recomputes `variables` from the expressions and constraints.
    pub(crate) fn recollect_variables(&mut self) {
        let mut vars = self.lhs.free_variables();
        for v in self.rhs.free_variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        let constraint_vars = self
            .constraints
            .iter()
            .chain(self.equality_condition.iter())
            .flat_map(Constraint::free_variables);
        for cv in constraint_vars {
            let known = vars.iter().any(|v| v.eq_ignore_ascii_case(&cv));
            if !known {
                vars.push(cv.to_uppercase());
            }
        }
        self.variables = vars;
    }

    /// Returns the statement with extra hypotheses appended (used when a
    /// caller supplies constraints separately from the statement text).
    pub fn with_constraints(mut self, extra: Vec<Constraint>) -> Self {
        self.constraints.extend(extra);
        self.recollect_variables();
        self
    }
}
