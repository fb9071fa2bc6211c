//! The expression language used by the command line.
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := unary ('*' unary)*
//! unary   := ('-' | '+') unary | primary
//! primary := INT ('/' INT)? | 'recip' '(' expr ')' | '(' expr ')'
//! ```
//!
//! `/` only appears inside literals; there is no division operator and no
//! binary minus. Literal magnitudes are unsigned, a leading `-` becomes a
//! [`Expr::Neg`] node, and a leading `+` is accepted and dropped.

use std::fmt;

use thiserror::Error;

use crate::int::Int;
use crate::rational::Rational;

const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    /// `n/d` as written; `d` is never zero.
    Rational(Int, Int),
    Integer(Int),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Recip(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at position {position}: expected {}, found {found}", expected.join(" or "))]
    Unexpected {
        position: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("at position {position}: zero denominator")]
    ZeroDenominator { position: usize },
    #[error("at position {position}: expression nested too deeply")]
    TooDeep { position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Unexpected { position, .. }
            | ParseError::ZeroDenominator { position }
            | ParseError::TooDeep { position } => *position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("reciprocal of zero")]
    RecipOfZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Bad(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Bad(c) => format!("character `{c}`"),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(input: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some((pos, ch)) = chars.next() {
        let tok = match ch {
            c if c.is_whitespace() => continue,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                let mut end = pos + c.len_utf8();
                while let Some(&(p, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = p + d.len_utf8();
                    chars.next();
                }
                Tok::Num(input[pos..end].parse().expect("ascii digits"))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = pos + c.len_utf8();
                while let Some(&(p, d)) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    end = p + d.len_utf8();
                    chars.next();
                }
                Tok::Ident(input[pos..end].to_string())
            }
            c => Tok::Bad(c),
        };
        out.push((pos, tok));
    }
    out.push((input.len(), Tok::End));
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        tok
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError::Unexpected {
            position: self.pos(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(vec![name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::TooDeep {
                position: self.pos(),
            });
        }
        let mut lhs = self.term()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Tok::Minus | Tok::Plus => {
                let neg = *self.peek() == Tok::Minus;
                self.depth += 1;
                if self.depth > MAX_DEPTH {
                    return Err(ParseError::TooDeep {
                        position: self.pos(),
                    });
                }
                self.bump();
                let inner = self.unary()?;
                self.depth -= 1;
                Ok(if neg {
                    Expr::Neg(Box::new(inner))
                } else {
                    inner
                })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Integer(n));
                }
                self.bump();
                match self.peek().clone() {
                    Tok::Num(d) if d.is_zero() => Err(ParseError::ZeroDenominator {
                        position: self.pos(),
                    }),
                    Tok::Num(d) => {
                        self.bump();
                        Ok(Expr::Rational(n, d))
                    }
                    _ => Err(self.unexpected(vec!["denominator"])),
                }
            }
            Tok::Ident(name) if name == "recip" => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Recip(Box::new(inner)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.unexpected(vec!["number", "`-`", "`(`", "`recip`"])),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(input),
        at: 0,
        depth: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected(vec!["`+`", "`*`", "end of input"]));
    }
    Ok(e)
}

impl Expr {
    pub fn eval(&self) -> Result<Rational, EvalError> {
        Ok(match self {
            Expr::Rational(n, d) => {
                Rational::new(n.clone(), d.clone()).expect("parser rejects zero denominators")
            }
            Expr::Integer(n) => Rational::from_integer(n.clone()),
            Expr::Add(a, b) => &a.eval()? + &b.eval()?,
            Expr::Mul(a, b) => &a.eval()? * &b.eval()?,
            Expr::Neg(a) => -a.eval()?,
            Expr::Recip(a) => a.eval()?.recip().ok_or(EvalError::RecipOfZero)?,
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) => 0,
            Expr::Mul(..) => 1,
            Expr::Neg(..) => 2,
            Expr::Rational(..) | Expr::Integer(..) | Expr::Recip(..) => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Rational(n, d) => write!(f, "{n}/{d}"),
            Expr::Integer(n) => write!(f, "{n}"),
            Expr::Add(a, b) => {
                a.fmt_at(f, 0)?;
                f.write_str(" + ")?;
                b.fmt_at(f, 1)
            }
            Expr::Mul(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(" * ")?;
                b.fmt_at(f, 2)
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.fmt_at(f, 2)
            }
            Expr::Recip(a) => {
                f.write_str("recip(")?;
                a.fmt_at(f, 0)?;
                f.write_str(")")
            }
        }
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}
