//! Problem-file reader.
//!
//! ```text
//! # comment
//! field p 5          # or: field q
//! vars x1 x2
//! x1*x2 - 1
//! query x1 - 1       # optional, used by member and radical-member
//! ```
//!
//! Polynomials use integer literals (and `a/b` rational literals), declared
//! variables, `^` with a positive integer exponent, `*`, `+`, binary and
//! unary `-`, and parentheses.

use std::fmt;

use nullstellensatz::ffield::{is_prime, FiniteField, Rationals};
use nullstellensatz::poly::Polynomial;
use nullstellensatz::ring::Field;
use num::{BigInt, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

/// Generators and optional query over a concrete coefficient field.
#[derive(Debug, Clone, PartialEq)]
pub struct System<F: Field> {
    pub field: F,
    pub vars: Vec<String>,
    pub generators: Vec<Polynomial<F>>,
    pub query: Option<Polynomial<F>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProblemFile {
    Rational(System<Rationals>),
    Prime(System<FiniteField>),
}

impl ProblemFile {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            ProblemFile::Rational(_) => FieldSpec::Rationals,
            ProblemFile::Prime(s) => FieldSpec::Prime(s.field.characteristic()),
        }
    }

    pub fn vars(&self) -> &[String] {
        match self {
            ProblemFile::Rational(s) => &s.vars,
            ProblemFile::Prime(s) => &s.vars,
        }
    }
}

/// Strips a `#` comment and returns the remaining text.
fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// 1-based column of the first non-blank character at or after byte `from`.
fn column_at(line: &str, from: usize) -> usize {
    let skip = line[from..].len() - line[from..].trim_start().len();
    line[..from + skip].chars().count() + 1
}

struct Header {
    field: FieldSpec,
    vars: Vec<String>,
}

pub fn parse_problem(input: &str) -> Result<ProblemFile, ParseError> {
    let mut field: Option<FieldSpec> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut body: Vec<(usize, usize, &str, bool)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = strip_comment(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let start = line.len() - line.trim_start().len();
        let mut words = trimmed.split_whitespace();
        let head = words.next().unwrap();
        match head {
            "field" => {
                if field.is_some() {
                    return err(line_no, start + 1, "duplicate field declaration");
                }
                field = Some(parse_field(line_no, line, start)?);
            }
            "vars" => {
                if field.is_none() {
                    return err(line_no, start + 1, "`vars` must follow the field declaration");
                }
                if vars.is_some() {
                    return err(line_no, start + 1, "duplicate variable declaration");
                }
                vars = Some(parse_vars(line_no, line, start)?);
            }
            _ => {
                if vars.is_none() {
                    return err(line_no, start + 1, "expected `field` and `vars` before polynomials");
                }
                let (offset, is_query) = if head == "query" {
                    (start + "query".len(), true)
                } else {
                    (start, false)
                };
                if is_query && body.iter().any(|b| b.3) {
                    return err(line_no, start + 1, "duplicate query");
                }
                body.push((line_no, offset, line, is_query));
            }
        }
    }
    let Some(field) = field else {
        return err(last_line.max(1), 1, "missing `field` declaration");
    };
    let Some(vars) = vars else {
        return err(last_line.max(1), 1, "missing `vars` declaration");
    };
    let header = Header { field, vars };
    match header.field {
        FieldSpec::Rationals => Ok(ProblemFile::Rational(build(&Rationals, &header, &body)?)),
        FieldSpec::Prime(p) => {
            let f = FiniteField::prime(p).map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })?;
            Ok(ProblemFile::Prime(build(&f, &header, &body)?))
        }
    }
}

fn build<F: Field>(
    field: &F,
    header: &Header,
    body: &[(usize, usize, &str, bool)],
) -> Result<System<F>, ParseError> {
    let mut generators = Vec::new();
    let mut query = None;
    for &(line_no, offset, line, is_query) in body {
        let p = parse_polynomial_at(field, &header.vars, line, offset, line_no)?;
        if is_query {
            query = Some(p);
        } else {
            generators.push(p);
        }
    }
    Ok(System { field: field.clone(), vars: header.vars.clone(), generators, query })
}

fn parse_field(line_no: usize, line: &str, start: usize) -> Result<FieldSpec, ParseError> {
    let rest_at = start + "field".len();
    let words: Vec<&str> = line[rest_at..].split_whitespace().collect();
    let col = column_at(line, rest_at);
    match words.as_slice() {
        ["q"] => Ok(FieldSpec::Rationals),
        ["p", n] => {
            let num_at = line[rest_at..].find(n).map(|i| column_at(line, rest_at + i)).unwrap_or(col);
            let p: u64 = n
                .parse()
                .map_err(|_| ParseError { line: line_no, column: num_at, message: format!("invalid prime `{n}`") })?;
            if !is_prime(p) || p >= 1 << 63 {
                return err(line_no, num_at, format!("{p} is not a supported prime"));
            }
            Ok(FieldSpec::Prime(p))
        }
        _ => err(line_no, col, "expected `field q` or `field p <prime>`"),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_vars(line_no: usize, line: &str, start: usize) -> Result<Vec<String>, ParseError> {
    let rest_at = start + "vars".len();
    let mut vars: Vec<String> = Vec::new();
    let mut pos = rest_at;
    for word in line[rest_at..].split_whitespace() {
        let at = pos + line[pos..].find(word).unwrap();
        pos = at + word.len();
        let col = line[..at].chars().count() + 1;
        if !is_identifier(word) || word == "query" {
            return err(line_no, col, format!("invalid variable name `{word}`"));
        }
        if vars.iter().any(|v| v == word) {
            return err(line_no, col, format!("variable `{word}` declared twice"));
        }
        vars.push(word.to_string());
    }
    if vars.is_empty() {
        return err(line_no, column_at(line, start), "`vars` needs at least one variable");
    }
    Ok(vars)
}

/// Parses a single polynomial over `field` in the variables `vars`.
pub fn parse_polynomial<F: Field>(field: &F, vars: &[String], text: &str) -> Result<Polynomial<F>, ParseError> {
    parse_polynomial_at(field, vars, text, 0, 1)
}

fn parse_polynomial_at<F: Field>(
    field: &F,
    vars: &[String],
    line: &str,
    offset: usize,
    line_no: usize,
) -> Result<Polynomial<F>, ParseError> {
    let tokens = tokenize(line, offset, line_no)?;
    let mut parser = Parser { field, vars, tokens, pos: 0, line_no, end_col: line.chars().count() + 1 };
    if parser.tokens.is_empty() {
        return err(line_no, column_at(line, offset.min(line.len())), "expected a polynomial");
    }
    let p = parser.expr()?;
    if let Some(tok) = parser.tokens.get(parser.pos) {
        return err(line_no, tok.col, format!("unexpected `{}`", tok.kind));
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Int(n) => write!(f, "{n}"),
            Kind::Ident(s) => f.write_str(s),
            Kind::Sym(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    col: usize,
}

fn tokenize(line: &str, offset: usize, line_no: usize) -> Result<Vec<Token>, ParseError> {
    let base_col = line[..offset].chars().count() + 1;
    let chars: Vec<char> = line[offset..].chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = base_col + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token { kind: Kind::Int(s.parse().unwrap()), col });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { kind: Kind::Ident(chars[start..i].iter().collect()), col });
        } else if "+-*^/()".contains(c) {
            out.push(Token { kind: Kind::Sym(c), col });
            i += 1;
        } else {
            return err(line_no, col, format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    field: &'a F,
    vars: &'a [String],
    tokens: Vec<Token>,
    pos: usize,
    line_no: usize,
    end_col: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek_sym(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token { kind: Kind::Sym(c), .. }) => Some(*c),
            _ => None,
        }
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_sym() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.unary()?;
        while self.peek_sym() == Some('*') {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial<F>, ParseError> {
        if self.peek_sym() == Some('-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.primary()?;
        if self.peek_sym() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        match self.tokens.get(self.pos).map(|t| t.kind.clone()) {
            Some(Kind::Int(e)) => {
                self.pos += 1;
                if e.is_zero() {
                    return err(self.line_no, col, "exponent must be a positive integer");
                }
                let e: u32 = e
                    .try_into()
                    .map_err(|_| ParseError { line: self.line_no, column: col, message: "exponent too large".into() })?;
                Ok(base.pow(e))
            }
            Some(Kind::Sym('-')) => err(self.line_no, col, "exponent must be a positive integer"),
            _ => err(self.line_no, col, "expected an exponent"),
        }
    }

    fn primary(&mut self) -> Result<Polynomial<F>, ParseError> {
        let col = self.col();
        let Some(tok) = self.tokens.get(self.pos).cloned() else {
            return err(self.line_no, col, "unexpected end of input");
        };
        self.pos += 1;
        match tok.kind {
            Kind::Int(num) => {
                let mut den = BigInt::from(1);
                if self.peek_sym() == Some('/') {
                    self.pos += 1;
                    let dcol = self.col();
                    match self.tokens.get(self.pos).map(|t| t.kind.clone()) {
                        Some(Kind::Int(d)) => {
                            self.pos += 1;
                            den = d;
                        }
                        _ => return err(self.line_no, dcol, "expected an integer denominator"),
                    }
                }
                let c = self
                    .field
                    .from_ratio(&num, &den)
                    .map_err(|e| ParseError { line: self.line_no, column: col, message: e.to_string() })?;
                Ok(Polynomial::constant(self.field, self.n(), c))
            }
            Kind::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::var(self.field, self.n(), i)),
                None => err(self.line_no, col, format!("undeclared variable `{name}`")),
            },
            Kind::Sym('(') => {
                let inner = self.expr()?;
                if self.peek_sym() != Some(')') {
                    return err(self.line_no, self.col(), "expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            other => err(self.line_no, col, format!("unexpected `{other}`")),
        }
    }
}
