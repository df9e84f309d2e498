//! Shared tokenizer and expression grammar for the text formats.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | IDENT ['^' INT] | '(' expr ')' ['^' UINT] | '(' expr ',' '[' UINT* ']' ')'
//! ```
//!
//! Identifiers are a letter optionally followed by a decimal index (`s`, `X2`,
//! `a10`). Whitespace is insignificant. The AST is turned into concrete values
//! by the `from_expr` routines of each module, which decide which identifiers
//! are legal.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(String),
    Ident(char, Option<usize>),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: usize,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let pos = i;
        let simple = match b {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, pos });
            i += 1;
            continue;
        }
        if b.is_ascii_whitespace() {
            i += 1;
        } else if b.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Int(text[pos..i].to_string()),
                pos,
            });
        } else if b.is_ascii_alphabetic() {
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let index = if i > start {
                Some(
                    text[start..i]
                        .parse::<usize>()
                        .map_err(|_| Error::parse(start, "index too large"))?,
                )
            } else {
                None
            };
            if i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                return Err(Error::parse(i, "identifiers are a single letter and an optional index"));
            }
            out.push(Token {
                tok: Tok::Ident(b as char, index),
                pos,
            });
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(Error::parse(pos, format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub(crate) enum Expr {
    Int(String),
    Var {
        name: char,
        index: Option<usize>,
        exp: i32,
        pos: usize,
    },
    Neg(Box<Expr>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
    Basis {
        mono: Box<Expr>,
        perm: Vec<usize>,
        pos: usize,
    },
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.tok.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == tok => Ok(()),
            _ => Err(Error::parse(pos, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut parts = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            parts.push(if negate { Expr::Neg(Box::new(t)) } else { t });
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => break,
            }
            self.bump();
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Expr::Sum(parts)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn signed_int(&mut self) -> Result<i32> {
        let pos = self.pos();
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let pos_digits = self.pos();
        match self.bump() {
            Some(Tok::Int(d)) => {
                let v: i32 = d.parse().map_err(|_| Error::parse(pos_digits, "exponent too large"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(Error::parse(pos, "expected integer exponent")),
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(d)) => Ok(Expr::Int(d)),
            Some(Tok::Ident(name, index)) => {
                let exp = if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    self.signed_int()?
                } else {
                    1
                };
                Ok(Expr::Var { name, index, exp, pos })
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Comma) => {
                        self.bump();
                        self.expect(Tok::LBracket, "'['")?;
                        let mut perm = Vec::new();
                        loop {
                            let p = self.pos();
                            match self.bump() {
                                Some(Tok::RBracket) => break,
                                Some(Tok::Comma) => continue,
                                Some(Tok::Int(d)) => {
                                    perm.push(d.parse().map_err(|_| Error::parse(p, "permutation entry too large"))?)
                                }
                                _ => return Err(Error::parse(p, "expected permutation entry or ']'")),
                            }
                        }
                        self.expect(Tok::RParen, "')'")?;
                        Ok(Expr::Basis {
                            mono: Box::new(inner),
                            perm,
                            pos,
                        })
                    }
                    _ => {
                        self.expect(Tok::RParen, "')'")?;
                        if self.peek() == Some(&Tok::Caret) {
                            self.bump();
                            let epos = self.pos();
                            let e = self.signed_int()?;
                            let e = u32::try_from(e).map_err(|_| {
                                Error::parse(epos, "negative powers of parenthesized sums are not supported")
                            })?;
                            Ok(Expr::Pow(Box::new(inner), e))
                        } else {
                            Ok(inner)
                        }
                    }
                }
            }
            None => Err(Error::parse(pos, "unexpected end of input")),
            Some(_) => Err(Error::parse(pos, "expected a number, variable or '('")),
        }
    }
}

/// Parses `text` as one expression, requiring all input to be consumed.
pub(crate) fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::parse(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Generic structural evaluator: the caller supplies how leaves become values
/// and the ring operations on them.
pub(crate) trait ExprRing: Sized + Clone {
    type Ctx;
    fn ring_int(ctx: &Self::Ctx, digits: &str) -> Result<Self>;
    fn ring_var(ctx: &Self::Ctx, name: char, index: Option<usize>, exp: i32, pos: usize) -> Result<Self>;
    fn ring_basis(ctx: &Self::Ctx, mono: &Expr, perm: &[usize], pos: usize) -> Result<Self>;
    fn ring_one(ctx: &Self::Ctx) -> Self;
    fn ring_zero(ctx: &Self::Ctx) -> Self;
    fn ring_add(self, other: Self) -> Result<Self>;
    fn ring_neg(self) -> Self;
    fn ring_mul(self, other: Self, pos: usize) -> Result<Self>;
}

pub(crate) fn eval<R: ExprRing>(ctx: &R::Ctx, e: &Expr) -> Result<R> {
    match e {
        Expr::Int(d) => R::ring_int(ctx, d),
        Expr::Var { name, index, exp, pos } => R::ring_var(ctx, *name, *index, *exp, *pos),
        Expr::Neg(inner) => Ok(eval::<R>(ctx, inner)?.ring_neg()),
        Expr::Sum(parts) => parts
            .iter()
            .try_fold(R::ring_zero(ctx), |acc, p| acc.ring_add(eval::<R>(ctx, p)?)),
        Expr::Product(factors) => factors.iter().try_fold(R::ring_one(ctx), |acc, f| {
            acc.ring_mul(eval::<R>(ctx, f)?, first_pos(f))
        }),
        Expr::Pow(base, n) => {
            let b = eval::<R>(ctx, base)?;
            let pos = first_pos(base);
            (0..*n).try_fold(R::ring_one(ctx), |acc, _| acc.ring_mul(b.clone(), pos))
        }
        Expr::Basis { mono, perm, pos } => R::ring_basis(ctx, mono, perm, *pos),
    }
}

fn first_pos(e: &Expr) -> usize {
    match e {
        Expr::Var { pos, .. } | Expr::Basis { pos, .. } => *pos,
        Expr::Neg(inner) | Expr::Pow(inner, _) => first_pos(inner),
        Expr::Sum(v) | Expr::Product(v) => v.first().map_or(0, first_pos),
        Expr::Int(_) => 0,
    }
}

/// Formats one factor `name^exp`, omitting an exponent of 1.
pub(crate) fn power(name: &str, exp: i32) -> String {
    if exp == 1 {
        name.to_string()
    } else {
        format!("{name}^{exp}")
    }
}
