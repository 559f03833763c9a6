//! Text syntax for differential operators.
//!
//! ```text
//! expr     := term (("+"|"-") term)* ;
//! term     := ("-")? factor ("*" factor)* ;
//! factor   := atom ("^" nat)? ;
//! atom     := rational | var | "(" expr ")" ;
//! var      := ("x"|"d") nat ;
//! rational := int ("/" nat)? ;
//! ```
//!
//! Products are evaluated left to right in the noncommutative ring, so
//! `d1*x1` parses to `x1*d1 + 1`. Juxtaposition is rejected.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, ParseError, Result};
use crate::rational::Rational;
use crate::weyl::{DiffOp, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarKind {
    X,
    D,
}

/// Parsed expression tree. Variable indices are 1-based as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(Rational),
    Var(VarKind, usize),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Negate(Box<Expr>),
    Power(Box<Expr>, u32),
    Group(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    Decimal,
    Var(VarKind, usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax(ParseError {
        line,
        column,
        message: message.into(),
    })
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let digits = |start: usize| -> usize {
        let mut j = start;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token {
                tok,
                line: tl,
                column: tc,
            });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let end = digits(i);
            let num: BigInt = chars[i..end]
                .iter()
                .collect::<String>()
                .parse()
                .expect("digits");
            let mut j = end;
            let tok = if j < chars.len() && chars[j] == '/' {
                let dend = digits(j + 1);
                if dend == j + 1 {
                    return Err(syntax(
                        tl,
                        tc + (j - i) + 1,
                        "expected denominator after '/'",
                    ));
                }
                let den: BigInt = chars[j + 1..dend]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .expect("digits");
                if den.is_zero() {
                    return Err(syntax(tl, tc, "zero denominator"));
                }
                j = dend;
                Tok::Ratio(num, den)
            } else if j < chars.len() && chars[j] == '.' {
                j = digits(j + 1);
                Tok::Decimal
            } else {
                Tok::Int(num)
            };
            out.push(Token {
                tok,
                line: tl,
                column: tc,
            });
            col += j - i;
            i = j;
            continue;
        }
        if c == 'x' || c == 'd' {
            let end = digits(i + 1);
            if end == i + 1 {
                return Err(syntax(tl, tc, format!("expected index after '{}'", c)));
            }
            let idx: usize = chars[i + 1..end]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| syntax(tl, tc, "variable index too large"))?;
            let kind = if c == 'x' { VarKind::X } else { VarKind::D };
            out.push(Token {
                tok: Tok::Var(kind, idx),
                line: tl,
                column: tc,
            });
            col += end - i;
            i = end;
            continue;
        }
        return Err(syntax(tl, tc, format!("unexpected character '{}'", c)));
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let negate = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut lhs = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            lhs = Expr::Product(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(if negate {
            Expr::Negate(Box::new(lhs))
        } else {
            lhs
        })
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Int(k) => {
                let k = k
                    .to_u32()
                    .ok_or_else(|| syntax(t.line, t.column, "exponent too large"))?;
                Ok(Expr::Power(Box::new(base), k))
            }
            Tok::Minus | Tok::Ratio(..) | Tok::Decimal => Err(Error::BadExponent {
                line: t.line,
                column: t.column,
            }),
            _ => Err(syntax(t.line, t.column, "expected exponent after '^'")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.bump();
        match t.tok {
            Tok::Int(v) => Ok(Expr::Literal(Rational::from_integer(v))),
            Tok::Ratio(p, q) => Ok(Expr::Literal(Rational::new(p, q))),
            Tok::Decimal => Err(syntax(
                t.line,
                t.column,
                "decimal literals are not allowed; write p/q",
            )),
            Tok::Var(kind, idx) => {
                if idx == 0 || idx > self.n {
                    return Err(Error::IndexOutOfRange {
                        line: t.line,
                        column: t.column,
                        index: idx,
                        n: self.n,
                    });
                }
                Ok(Expr::Var(kind, idx))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(syntax(close.line, close.column, "expected ')'"));
                }
                Ok(Expr::Group(Box::new(inner)))
            }
            Tok::End => Err(syntax(t.line, t.column, "unexpected end of input")),
            _ => Err(syntax(
                t.line,
                t.column,
                "expected a number, variable or '('",
            )),
        }
    }
}

/// Parses `text` into an expression tree over `n` variables.
pub fn parse_expr(text: &str, n: usize) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, n };
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(syntax(
            t.line,
            t.column,
            "expected an operator ('+', '-', '*') or end of input",
        ));
    }
    Ok(e)
}

/// Evaluates an expression tree in the Weyl algebra on `n` variables.
pub fn eval(e: &Expr, n: usize) -> DiffOp {
    match e {
        Expr::Literal(c) => DiffOp::constant(n, c.clone()),
        Expr::Var(VarKind::X, i) => DiffOp::x(n, i - 1),
        Expr::Var(VarKind::D, i) => DiffOp::d(n, i - 1),
        Expr::Sum(a, b) => eval(a, n).add(&eval(b, n)).expect("same n"),
        Expr::Difference(a, b) => eval(a, n).sub(&eval(b, n)).expect("same n"),
        Expr::Product(a, b) => eval(a, n).mul(&eval(b, n)).expect("same n"),
        Expr::Negate(a) => eval(a, n).neg(),
        Expr::Power(a, k) => eval(a, n).pow(*k),
        Expr::Group(a) => eval(a, n),
    }
}

/// Parses and normalizes an operator.
pub fn parse(text: &str, n: usize) -> Result<DiffOp> {
    Ok(eval(&parse_expr(text, n)?, n))
}

/// Parses an expression that must not contain differential factors after
/// normalization.
pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial> {
    parse(text, n)?.as_polynomial().ok_or(Error::NotAPolynomial)
}

/// Canonical rendering; `parse(&print(p), p.n()) == p`.
pub fn print(p: &DiffOp) -> String {
    p.to_string()
}

/// Splits a comma-separated generator list; an all-blank input is the empty list.
pub fn parse_list(text: &str, n: usize) -> Result<Vec<DiffOp>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|part| parse(part, n)).collect()
}
