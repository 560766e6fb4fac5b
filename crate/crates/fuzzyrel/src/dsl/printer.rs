//! Canonical pretty-printing for expressions, constraints, and statements.
//!
//! The printed form round-trips: parsing the output of [`format_expr`] (or
//! [`format_statement`]) yields a structurally identical tree. Numbers use
//! Rust's shortest-round-trip formatting, scaling always prints in prefix
//! form (`0.5 * e`, never `e / 2`), and parentheses are emitted exactly
//! where precedence or left-associativity requires them.

use super::ast::{Arith, Comparator, Constraint, Expr, Relation, RelationStatement};
use crate::ops::BinaryOp;

fn op_symbol(op: BinaryOp) -> &'static str {
    match op {
        BinaryOp::Union => "|",
        BinaryOp::Intersection => "&",
        BinaryOp::AlgebraicSum => ".+",
        BinaryOp::AlgebraicProduct => ".*",
        BinaryOp::BoundedSum => "[+]",
        BinaryOp::BoundedProduct => "[*]",
        BinaryOp::BoundedDifference => "[-]",
        BinaryOp::BoundedQuotient => "[/]",
    }
}

/// Precedence tier of an expression node; higher binds tighter.
fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Binary(op, ..) => {
            if multiplicative(*op) {
                2
            } else {
                1
            }
        }
        Expr::Scale(..) => 3,
        Expr::Var(_) | Expr::Universal | Expr::Empty | Expr::Power(..) => 4,
    }
}

fn multiplicative(op: BinaryOp) -> bool {
    matches!(
        op,
        BinaryOp::Intersection
            | BinaryOp::AlgebraicProduct
            | BinaryOp::BoundedProduct
            | BinaryOp::BoundedQuotient
    )
}

/// Renders an expression in canonical form.
pub fn format_expr(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(e, &mut out);
    out
}

fn write_expr(e: &Expr, out: &mut String) {
    match e {
        Expr::Var(name) => out.push_str(name),
        Expr::Universal => out.push('X'),
        Expr::Empty => out.push('O'),
        Expr::Binary(op, lhs, rhs) => {
            let own = precedence(e);
            // Left operand: parenthesize only a looser-binding tier.
            // Right operand: also parenthesize the same tier, preserving
            // left-associativity on reparse.
            write_child(lhs, precedence(lhs) < own, out);
            out.push(' ');
            out.push_str(op_symbol(*op));
            out.push(' ');
            write_child(rhs, precedence(rhs) <= own, out);
        }
        Expr::Scale(kappa, inner) => {
            out.push_str(&format!("{kappa} * "));
            // The scaled operand sits below the product tiers in the
            // grammar, so any binary operand needs parentheses.
            write_child(inner, matches!(**inner, Expr::Binary(..)), out);
        }
        Expr::Power(base, p) => {
            let atomic = matches!(**base, Expr::Var(_) | Expr::Universal | Expr::Empty);
            write_child(base, !atomic, out);
            out.push_str(&format!("^{p}"));
        }
    }
}

fn write_child(e: &Expr, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        write_expr(e, out);
        out.push(')');
    } else {
        write_expr(e, out);
    }
}

fn arith_precedence(a: &Arith) -> u8 {
    match a {
        Arith::Add(..) | Arith::Sub(..) => 1,
        Arith::Mul(..) | Arith::Div(..) => 2,
        Arith::Number(_) | Arith::Var(_) | Arith::Pow(..) | Arith::Min(..) | Arith::Max(..) => 3,
    }
}

/// Renders degree arithmetic in canonical form.
pub fn format_arith(a: &Arith) -> String {
    let mut out = String::new();
    write_arith(a, &mut out);
    out
}

fn write_arith(a: &Arith, out: &mut String) {
    match a {
        Arith::Number(n) => out.push_str(&format!("{n}")),
        Arith::Var(name) => out.push_str(name),
        Arith::Add(l, r) | Arith::Sub(l, r) | Arith::Mul(l, r) | Arith::Div(l, r) => {
            let own = arith_precedence(a);
            let symbol = match a {
                Arith::Add(..) => " + ",
                Arith::Sub(..) => " - ",
                Arith::Mul(..) => " * ",
                _ => " / ",
            };
            write_arith_child(l, arith_precedence(l) < own, out);
            out.push_str(symbol);
            write_arith_child(r, arith_precedence(r) <= own, out);
        }
        Arith::Pow(base, p) => {
            let atomic = matches!(**base, Arith::Number(_) | Arith::Var(_));
            write_arith_child(base, !atomic, out);
            out.push_str(&format!("^{p}"));
        }
        Arith::Min(l, r) | Arith::Max(l, r) => {
            out.push_str(if matches!(a, Arith::Min(..)) { "min(" } else { "max(" });
            write_arith(l, out);
            out.push_str(", ");
            write_arith(r, out);
            out.push(')');
        }
    }
}

fn write_arith_child(a: &Arith, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        write_arith(a, out);
        out.push(')');
    } else {
        write_arith(a, out);
    }
}

/// Renders a constraint (`lhs cmp rhs`).
pub fn format_constraint(c: &Constraint) -> String {
    let cmp = match c.cmp {
        Comparator::Le => "<=",
        Comparator::Lt => "<",
        Comparator::Ge => ">=",
        Comparator::Gt => ">",
        Comparator::Eq => "=",
    };
    format!("{} {} {}", format_arith(&c.lhs), cmp, format_arith(&c.rhs))
}

/// Renders a full statement, including `given` and `equality_iff` clauses.
pub fn format_statement(s: &RelationStatement) -> String {
    let rel = match s.relation {
        Relation::Subset => "<=",
        Relation::Superset => ">=",
        Relation::Equal => "==",
    };
    let mut out = format!("{} {} {}", format_expr(&s.lhs), rel, format_expr(&s.rhs));
    if !s.constraints.is_empty() {
        let given: Vec<String> = s.constraints.iter().map(format_constraint).collect();
        out.push_str(" given ");
        out.push_str(&given.join(", "));
    }
    if let Some(claim) = &s.equality_condition {
        out.push_str(" equality_iff ");
        out.push_str(&format_constraint(claim));
    }
    out
}
