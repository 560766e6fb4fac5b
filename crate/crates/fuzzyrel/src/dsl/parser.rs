//! Recursive-descent parser for expressions, constraints, and statements.

use thiserror::Error;

use super::ast::{Arith, Comparator, Constraint, Expr, Relation, RelationStatement};
use super::token::{tokenize, Spanned, Token};
use super::SyntaxError;
use crate::ops::BinaryOp;

/// A syntax error at a byte offset, describing what was expected and what
/// was found instead.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("parse error at byte {position}: expected {expected}, found {found}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

struct Parser<'a> {
    tokens: &'a [Spanned<Token>],
    cursor: usize,
    /// Byte length of the source, so end-of-input errors have a position.
    end: usize,
}

impl<'a> Parser<'a> {
    fn new(tokens: &'a [Spanned<Token>], end: usize) -> Self {
        Parser {
            tokens,
            cursor: 0,
            end,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|t| &t.item)
    }

    fn peek2(&self) -> Option<&Token> {
        self.tokens.get(self.cursor + 1).map(|t| &t.item)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map_or(self.end, |t| t.offset)
    }

    fn found(&self) -> String {
        self.peek()
            .map_or_else(|| "end of input".to_string(), |t| format!("{t}"))
    }

    fn error(&self, expected: impl Into<String>) -> ParseError {
        ParseError {
            position: self.position(),
            expected: expected.into(),
            found: self.found(),
        }
    }

    fn expect(&mut self, token: &Token, describe: &str) -> Result<(), ParseError> {
        if self.peek() == Some(token) {
            self.cursor += 1;
            Ok(())
        } else {
            Err(self.error(describe))
        }
    }

    fn expect_number(&mut self, describe: &str) -> Result<f64, ParseError> {
        match self.peek() {
            Some(Token::Number(n)) => {
                let n = *n;
                self.cursor += 1;
                Ok(n)
            }
            _ => Err(self.error(describe)),
        }
    }

    fn at_end(&self) -> bool {
        self.cursor >= self.tokens.len()
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    // ---- set expressions -------------------------------------------------

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.mul_expr()?;
        while let Some(op) = self.peek().and_then(additive_op) {
            self.cursor += 1;
            let rhs = self.mul_expr()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn mul_expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.scaled()?;
        while let Some(op) = self.peek().and_then(multiplicative_op) {
            self.cursor += 1;
            let rhs = self.scaled()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn scaled(&mut self) -> Result<Expr, ParseError> {
        // Prefix scaling: NUMBER '*' scaled.
        if let Some(Token::Number(kappa)) = self.peek() {
            let kappa = *kappa;
            let at = self.position();
            if self.peek2() == Some(&Token::Star) {
                self.cursor += 2;
                if !kappa.is_finite() {
                    return Err(ParseError {
                        position: at,
                        expected: "a finite scale factor".into(),
                        found: format!("{kappa}"),
                    });
                }
                let inner = self.scaled()?;
                return Ok(Expr::Scale(kappa, Box::new(inner)));
            }
            return Err(self.error("'*' after a scale factor"));
        }
        let inner = self.postfix()?;
        // Suffix scaling sugar: e '/' NUMBER, meaning (1/NUMBER) · e.
        if self.peek() == Some(&Token::Slash) {
            self.cursor += 1;
            let at = self.position();
            let divisor = self.expect_number("a numeric divisor")?;
            if !(divisor >= 1.0) {
                return Err(ParseError {
                    position: at,
                    expected: "a divisor >= 1".into(),
                    found: format!("{divisor}"),
                });
            }
            return Ok(Expr::Scale(1.0 / divisor, Box::new(inner)));
        }
        Ok(inner)
    }

    fn postfix(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.cursor += 1;
            let p = self.expect_number("a numeric exponent")?;
            return Ok(Expr::Power(Box::new(base), p));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Token::SetVar(name)) => {
                let expr = match name.as_str() {
                    "X" => Expr::Universal,
                    "O" => Expr::Empty,
                    _ => Expr::Var(name.clone()),
                };
                self.cursor += 1;
                Ok(expr)
            }
            Some(Token::LParen) => {
                self.cursor += 1;
                let inner = self.expr()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error("a set variable, 'X', 'O', or '('")),
        }
    }

    // ---- degree arithmetic and constraints -------------------------------

    fn constraint(&mut self) -> Result<Constraint, ParseError> {
        let lhs = self.arith()?;
        let cmp = match self.peek() {
            Some(Token::Le) => Comparator::Le,
            Some(Token::Lt) => Comparator::Lt,
            Some(Token::Ge) => Comparator::Ge,
            Some(Token::Gt) => Comparator::Gt,
            Some(Token::Eq) => Comparator::Eq,
            _ => return Err(self.error("a comparator (<=, <, >=, >, =)")),
        };
        self.cursor += 1;
        let rhs = self.arith()?;
        Ok(Constraint { lhs, cmp, rhs })
    }

    fn arith(&mut self) -> Result<Arith, ParseError> {
        let mut lhs = self.mul_arith()?;
        loop {
            let make: fn(Box<Arith>, Box<Arith>) -> Arith = match self.peek() {
                Some(Token::Plus) => Arith::add,
                Some(Token::Minus) => Arith::sub,
                _ => break,
            };
            self.cursor += 1;
            let rhs = self.mul_arith()?;
            lhs = make(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn mul_arith(&mut self) -> Result<Arith, ParseError> {
        let mut lhs = self.pow_arith()?;
        loop {
            let make: fn(Box<Arith>, Box<Arith>) -> Arith = match self.peek() {
                Some(Token::Star) => Arith::mul,
                Some(Token::Slash) => Arith::div,
                _ => break,
            };
            self.cursor += 1;
            let rhs = self.pow_arith()?;
            lhs = make(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn pow_arith(&mut self) -> Result<Arith, ParseError> {
        let base = self.arith_atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.cursor += 1;
            let p = self.expect_number("a numeric exponent")?;
            return Ok(Arith::Pow(Box::new(base), p));
        }
        Ok(base)
    }

    fn arith_atom(&mut self) -> Result<Arith, ParseError> {
        match self.peek() {
            Some(Token::Number(n)) => {
                let n = *n;
                self.cursor += 1;
                Ok(Arith::Number(n))
            }
            Some(Token::DegreeVar(name)) if name == "min" || name == "max" => {
                let is_min = name == "min";
                self.cursor += 1;
                self.expect(&Token::LParen, "'(' after min/max")?;
                let a = self.arith()?;
                self.expect(&Token::Comma, "','")?;
                let b = self.arith()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(if is_min {
                    Arith::Min(Box::new(a), Box::new(b))
                } else {
                    Arith::Max(Box::new(a), Box::new(b))
                })
            }
            Some(Token::DegreeVar(name)) => {
                let name = name.clone();
                self.cursor += 1;
                Ok(Arith::Var(name))
            }
            Some(Token::LParen) => {
                self.cursor += 1;
                let inner = self.arith()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error("a degree variable, number, or '('")),
        }
    }

    // ---- statements ------------------------------------------------------

    fn statement(&mut self) -> Result<RelationStatement, ParseError> {
        let lhs = self.expr()?;
        let relation = match self.peek() {
            Some(Token::Le) => Relation::Subset,
            Some(Token::Ge) => Relation::Superset,
            Some(Token::EqEq) => Relation::Equal,
            _ => return Err(self.error("a relation (<=, >=, ==)")),
        };
        self.cursor += 1;
        let rhs = self.expr()?;
        let mut constraints = Vec::new();
        if self.peek() == Some(&Token::Given) {
            self.cursor += 1;
            constraints.push(self.constraint()?);
            while self.peek() == Some(&Token::Comma) {
                self.cursor += 1;
                constraints.push(self.constraint()?);
            }
        }
        let equality_condition = if self.peek() == Some(&Token::EqualityIff) {
            self.cursor += 1;
            Some(self.constraint()?)
        } else {
            None
        };
        let mut statement = RelationStatement {
            lhs,
            rhs,
            relation,
            variables: Vec::new(),
            constraints,
            equality_condition,
        };
        statement.recollect_variables();
        Ok(statement)
    }
}

impl Arith {
    fn add(a: Box<Arith>, b: Box<Arith>) -> Arith {
        Arith::Add(a, b)
    }
    fn sub(a: Box<Arith>, b: Box<Arith>) -> Arith {
        Arith::Sub(a, b)
    }
    fn mul(a: Box<Arith>, b: Box<Arith>) -> Arith {
        Arith::Mul(a, b)
    }
    fn div(a: Box<Arith>, b: Box<Arith>) -> Arith {
        Arith::Div(a, b)
    }
}

fn additive_op(token: &Token) -> Option<BinaryOp> {
    match token {
        Token::Union => Some(BinaryOp::Union),
        Token::AlgSum => Some(BinaryOp::AlgebraicSum),
        Token::BoundedSum => Some(BinaryOp::BoundedSum),
        Token::BoundedDiff => Some(BinaryOp::BoundedDifference),
        _ => None,
    }
}

fn multiplicative_op(token: &Token) -> Option<BinaryOp> {
    match token {
        Token::Intersection => Some(BinaryOp::Intersection),
        Token::AlgProd => Some(BinaryOp::AlgebraicProduct),
        Token::BoundedProd => Some(BinaryOp::BoundedProduct),
        Token::BoundedQuot => Some(BinaryOp::BoundedQuotient),
        _ => None,
    }
}

/// Parses a single set expression.
pub fn parse_expr(input: &str) -> Result<Expr, SyntaxError> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens, input.len());
    let expr = p.expr()?;
    p.expect_end()?;
    Ok(expr)
}

/// Parses a full relation statement.
pub fn parse_statement(input: &str) -> Result<RelationStatement, SyntaxError> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens, input.len());
    let statement = p.statement()?;
    p.expect_end()?;
    Ok(statement)
}

/// Parses a single degree-arithmetic expression.
pub fn parse_arith(input: &str) -> Result<Arith, SyntaxError> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens, input.len());
    let arith = p.arith()?;
    p.expect_end()?;
    Ok(arith)
}

/// Parses a comma-separated list of constraints (as in a `given` clause).
pub fn parse_constraint_list(input: &str) -> Result<Vec<Constraint>, SyntaxError> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens, input.len());
    let mut out = vec![p.constraint()?];
    while p.peek() == Some(&Token::Comma) {
        p.cursor += 1;
        out.push(p.constraint()?);
    }
    p.expect_end()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(name: &str) -> Expr {
        Expr::Var(name.into())
    }

    fn bin(op: BinaryOp, l: Expr, r: Expr) -> Expr {
        Expr::Binary(op, Box::new(l), Box::new(r))
    }

    #[test]
    fn scaling_binds_between_power_and_products() {
        assert_eq!(
            parse_expr("0.5*(A[+]B)").unwrap(),
            Expr::Scale(
                0.5,
                Box::new(bin(BinaryOp::BoundedSum, var("A"), var("B")))
            )
        );
        assert_eq!(
            parse_expr("(A[+]B)^0.5 / 2").unwrap(),
            Expr::Scale(
                0.5,
                Box::new(Expr::Power(
                    Box::new(bin(BinaryOp::BoundedSum, var("A"), var("B"))),
                    0.5
                ))
            )
        );
    }

    #[test]
    fn multiplicative_tier_binds_tighter() {
        assert_eq!(
            parse_expr("A .* C [+] B .* D").unwrap(),
            bin(
                BinaryOp::BoundedSum,
                bin(BinaryOp::AlgebraicProduct, var("A"), var("C")),
                bin(BinaryOp::AlgebraicProduct, var("B"), var("D")),
            )
        );
        assert_eq!(
            parse_expr("A .+ B .* C").unwrap(),
            bin(
                BinaryOp::AlgebraicSum,
                var("A"),
                bin(BinaryOp::AlgebraicProduct, var("B"), var("C")),
            )
        );
    }

    #[test]
    fn additive_tier_associates_left() {
        assert_eq!(
            parse_expr("A [-] B [-] C").unwrap(),
            bin(
                BinaryOp::BoundedDifference,
                bin(BinaryOp::BoundedDifference, var("A"), var("B")),
                var("C"),
            )
        );
    }

    #[test]
    fn constants_and_powers() {
        assert_eq!(parse_expr("X").unwrap(), Expr::Universal);
        assert_eq!(parse_expr("O").unwrap(), Expr::Empty);
        assert_eq!(
            parse_expr("A^0").unwrap(),
            Expr::Power(Box::new(var("A")), 0.0)
        );
    }

    #[test]
    fn suffix_scaling_requires_divisor_at_least_one() {
        let e = parse_expr("A / 0.5").unwrap_err();
        match e {
            SyntaxError::Parse(p) => {
                assert_eq!(p.expected, "a divisor >= 1");
                assert_eq!(p.found, "0.5");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unbalanced_parens_report_position() {
        match parse_expr("((A[+]B)").unwrap_err() {
            SyntaxError::Parse(p) => {
                assert_eq!(p.position, 8);
                assert_eq!(p.expected, "')'");
                assert_eq!(p.found, "end of input");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn statement_with_given_and_claim() {
        let s = parse_statement(
            "0.5*(A[+]B) >= (A.*B)^0.5 given a*b <= 0.25 equality_iff a = b",
        )
        .unwrap();
        assert_eq!(s.relation, Relation::Superset);
        assert_eq!(s.variables, vec!["A", "B"]);
        assert_eq!(s.constraints.len(), 1);
        assert!(s.equality_condition.is_some());
    }

    #[test]
    fn statement_variable_order_is_first_appearance() {
        let s = parse_statement("A .* (B [+] C) <= (A .* B) [+] (A .* C)").unwrap();
        assert_eq!(s.variables, vec!["A", "B", "C"]);
        // A constraint-only variable introduces an uppercase set variable.
        let s = parse_statement("A <= B given c <= 0.5").unwrap();
        assert_eq!(s.variables, vec!["A", "B", "C"]);
    }

    #[test]
    fn truncated_statement_fails() {
        assert!(parse_statement("A >= ").is_err());
        assert!(parse_statement("A").is_err());
        assert!(parse_statement("A <= B extra").is_err());
    }

    #[test]
    fn constraint_lists_split_on_top_level_commas_only() {
        let list = parse_constraint_list("a + b <= 1, min(a, b) > 0").unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!(
            list[1].lhs,
            Arith::Min(
                Box::new(Arith::Var("a".into())),
                Box::new(Arith::Var("b".into()))
            )
        );
    }

    #[test]
    fn arith_precedence() {
        // a^2*b parses as (a^2)·b; products bind tighter than sums.
        let c = parse_constraint_list("3*a^2*b <= 1").unwrap().remove(0);
        assert_eq!(
            c.lhs,
            Arith::Mul(
                Box::new(Arith::Mul(
                    Box::new(Arith::Number(3.0)),
                    Box::new(Arith::Pow(Box::new(Arith::Var("a".into())), 2.0))
                )),
                Box::new(Arith::Var("b".into()))
            )
        );
    }
}
