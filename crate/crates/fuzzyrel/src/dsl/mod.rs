//! Expression DSL for fuzzy-set terms, relation statements, and degree
//! constraints.
//!
//! The surface syntax has two layers sharing one lexer:
//!
//! * **Set expressions** over uppercase variables (`A`, `B2`, …), the
//!   constants `X` (universal) and `O` (empty), the eight binary operators
//!   `|` `&` `.+` `.*` `[+]` `[*]` `[-]` `[/]`, prefix scaling `0.5 * e`,
//!   suffix scaling sugar `e / 2` (divisor ≥ 1), and postfix powers `e^2`.
//!   Two precedence tiers: `&`/`.*`/`[*]`/`[/]` bind tighter than
//!   `|`/`.+`/`[+]`/`[-]`; all binary operators associate to the left;
//!   `^` binds tightest, then scaling.
//! * **Degree arithmetic** over lowercase variables (each the lowercase
//!   alias of a set variable), numeric literals, `+ - * / ^`, parentheses,
//!   and the functions `min(x,y)` / `max(x,y)`, compared with
//!   `<= < >= > =`.
//!
//! A full statement is `EXPR REL EXPR` with `REL` one of `<=` (included),
//! `>=` (includes), `==` (equal), optionally followed by
//! `given CONSTRAINT{, CONSTRAINT}` and `equality_iff CONSTRAINT`.
//!
//! The grammar is LL(1); parsing is a hand-written recursive descent over
//! the token stream, and [`format_expr`]/[`format_statement`] print a
//! canonical form that parses back to the identical tree.

mod ast;
mod eval;
mod parser;
mod printer;
mod token;

pub use ast::{Arith, Comparator, Constraint, Expr, Relation, RelationStatement};
pub use eval::{eval_arith, eval_degree, eval_set, DegreeBindings, EvalError};
pub use parser::{parse_arith, parse_constraint_list, parse_expr, parse_statement, ParseError};
pub use printer::{format_arith, format_constraint, format_expr, format_statement};
pub use token::{tokenize, LexError, Spanned, Token};

use thiserror::Error;

/// Either phase of turning text into a tree can fail.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SyntaxError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
