//! Parser for the textual scalar encoding: arithmetic expressions over
//! integers and the formal parameters `q`, `t`.

use super::Scalar;
use crate::{Error, Result};
use num::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Q,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(input: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        message: message.into(),
    }
}

fn tokenize(input: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n = digits
                    .parse::<BigInt>()
                    .map_err(|e| err(input, e.to_string()))?;
                out.push(Tok::Num(n));
            }
            'q' => {
                chars.next();
                out.push(Tok::Q);
            }
            't' => {
                chars.next();
                out.push(Tok::T);
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            other => return Err(err(input, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Star => {
                    self.next();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.next();
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            match self.next() {
                Some(Tok::Num(n)) => {
                    let exp = u32::try_from(&n)
                        .map_err(|_| err(self.input, "exponent out of range"))?;
                    Ok(base.pow(exp))
                }
                _ => Err(err(self.input, "expected integer exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Scalar::from_rat(num::BigRational::from_integer(n))),
            Some(Tok::Q) => Ok(Scalar::q()),
            Some(Tok::T) => Ok(Scalar::t()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(self.input, "missing closing parenthesis")),
                }
            }
            other => Err(err(self.input, format!("unexpected token {other:?}"))),
        }
    }
}

pub(super) fn parse_scalar(input: &str) -> Result<Scalar> {
    let toks = tokenize(input)?;
    if toks.is_empty() {
        return Err(err(input, "empty scalar"));
    }
    let mut p = Parser {
        input,
        toks,
        pos: 0,
    };
    let value = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(input, "trailing input after expression"));
    }
    Ok(value)
}
