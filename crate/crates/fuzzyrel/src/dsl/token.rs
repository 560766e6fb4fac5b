//! Lexer for the statement DSL.
//!
//! Longest-match scanning over ASCII input. Every input either tokenizes
//! completely or produces a single [`LexError`] whose position is a byte
//! offset into the input.

use std::fmt;

use thiserror::Error;

/// A lexical error at a byte offset.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("lex error at byte {position}: {message}")]
pub struct LexError {
    pub position: usize,
    pub message: String,
}

/// A token paired with the byte offset where it starts.
#[derive(Debug, Clone, PartialEq)]
pub struct Spanned<T> {
    pub item: T,
    pub offset: usize,
}

/// Tokens of the DSL.
#[derive(Debug, Clone, PartialEq)]
pub enum Token {
    /// Uppercase-initial identifier: a set variable, or the constants
    /// `X` / `O` (the parser decides).
    SetVar(String),
    /// Lowercase identifier: a degree variable or `min`/`max`.
    DegreeVar(String),
    /// Numeric literal `digits[.digits]`.
    Number(f64),
    /// `|`
    Union,
    /// `&`
    Intersection,
    /// `.+`
    AlgSum,
    /// `.*`
    AlgProd,
    /// `[+]`
    BoundedSum,
    /// `[*]`
    BoundedProd,
    /// `[-]`
    BoundedDiff,
    /// `[/]`
    BoundedQuot,
    /// `+`
    Plus,
    /// `-`
    Minus,
    /// `*`
    Star,
    /// `/`
    Slash,
    /// `^`
    Caret,
    /// `(`
    LParen,
    /// `)`
    RParen,
    /// `,`
    Comma,
    /// `<=`
    Le,
    /// `<`
    Lt,
    /// `>=`
    Ge,
    /// `>`
    Gt,
    /// `==`
    EqEq,
    /// `=`
    Eq,
    /// keyword `given`
    Given,
    /// keyword `equality_iff`
    EqualityIff,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::SetVar(name) | Token::DegreeVar(name) => write!(f, "{name}"),
            Token::Number(n) => write!(f, "{n}"),
            Token::Union => write!(f, "|"),
            Token::Intersection => write!(f, "&"),
            Token::AlgSum => write!(f, ".+"),
            Token::AlgProd => write!(f, ".*"),
            Token::BoundedSum => write!(f, "[+]"),
            Token::BoundedProd => write!(f, "[*]"),
            Token::BoundedDiff => write!(f, "[-]"),
            Token::BoundedQuot => write!(f, "[/]"),
            Token::Plus => write!(f, "+"),
            Token::Minus => write!(f, "-"),
            Token::Star => write!(f, "*"),
            Token::Slash => write!(f, "/"),
            Token::Caret => write!(f, "^"),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
            Token::Comma => write!(f, ","),
            Token::Le => write!(f, "<="),
            Token::Lt => write!(f, "<"),
            Token::Ge => write!(f, ">="),
            Token::Gt => write!(f, ">"),
            Token::EqEq => write!(f, "=="),
            Token::Eq => write!(f, "="),
            Token::Given => write!(f, "given"),
            Token::EqualityIff => write!(f, "equality_iff"),
        }
    }
}

fn err(position: usize, message: impl Into<String>) -> LexError {
    LexError {
        position,
        message: message.into(),
    }
}

/// Tokenizes `input`, or reports the first offending byte.
pub fn tokenize(input: &str) -> Result<Vec<Spanned<Token>>, LexError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let b = bytes[i];
        let token = match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'|' => {
                i += 1;
                Token::Union
            }
            b'&' => {
                i += 1;
                Token::Intersection
            }
            b'.' => match bytes.get(i + 1) {
                Some(b'+') => {
                    i += 2;
                    Token::AlgSum
                }
                Some(b'*') => {
                    i += 2;
                    Token::AlgProd
                }
                _ => return Err(err(start, "expected '.+' or '.*'")),
            },
            b'[' => {
                let inner = bytes.get(i + 1).copied();
                let closed = bytes.get(i + 2) == Some(&b']');
                let token = match (inner, closed) {
                    (Some(b'+'), true) => Token::BoundedSum,
                    (Some(b'*'), true) => Token::BoundedProd,
                    (Some(b'-'), true) => Token::BoundedDiff,
                    (Some(b'/'), true) => Token::BoundedQuot,
                    _ => return Err(err(start, "expected '[+]', '[*]', '[-]' or '[/]'")),
                };
                i += 3;
                token
            }
            b'+' => {
                i += 1;
                Token::Plus
            }
            b'-' => {
                i += 1;
                Token::Minus
            }
            b'*' => {
                i += 1;
                Token::Star
            }
            b'/' => {
                i += 1;
                Token::Slash
            }
            b'^' => {
                i += 1;
                Token::Caret
            }
            b'(' => {
                i += 1;
                Token::LParen
            }
            b')' => {
                i += 1;
                Token::RParen
            }
            b',' => {
                i += 1;
                Token::Comma
            }
            b'<' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    i += 2;
                    Token::Le
                } else {
                    i += 1;
                    Token::Lt
                }
            }
            b'>' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    i += 2;
                    Token::Ge
                } else {
                    i += 1;
                    Token::Gt
                }
            }
            b'=' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    i += 2;
                    Token::EqEq
                } else {
                    i += 1;
                    Token::Eq
                }
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                // A fraction part needs a digit right after the dot;
                // otherwise the dot belongs to a following '.+' / '.*'.
                if bytes.get(i) == Some(&b'.')
                    && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)
                {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let text = &input[start..i];
                let value: f64 = text
                    .parse()
                    .map_err(|_| err(start, format!("malformed number {text:?}")))?;
                Token::Number(value)
            }
            b'A'..=b'Z' => {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                if bytes.get(i) == Some(&b'_') {
                    return Err(err(i, "set variables may not contain '_'"));
                }
                Token::SetVar(input[start..i].to_string())
            }
            b'a'..=b'z' => {
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase()
                        || bytes[i].is_ascii_digit()
                        || bytes[i] == b'_')
                {
                    i += 1;
                }
                if bytes.get(i).is_some_and(u8::is_ascii_uppercase) {
                    return Err(err(i, "degree variables are all-lowercase"));
                }
                match &input[start..i] {
                    "given" => Token::Given,
                    "equality_iff" => Token::EqualityIff,
                    name => Token::DegreeVar(name.to_string()),
                }
            }
            _ => {
                return Err(err(
                    start,
                    format!("unexpected character {:?}", input[start..].chars().next().unwrap()),
                ))
            }
        };
        tokens.push(Spanned {
            item: token,
            offset: start,
        });
    }
    Ok(tokens)
}
