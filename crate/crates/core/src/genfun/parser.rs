//! Recursive-descent parser for single-variable generating functions.
//!
//! ```text
//! expr     := term (('+'|'-') term)* ;
//! term     := factor (('*'|'/') factor)* ;
//! factor   := atom ('^' integer)? | '-' factor ;
//! atom     := rational | 'x' | '(' expr ')' | func '(' expr ')' ;
//! func     := 'exp' | 'sin' | 'sinh' | 'ln' ;
//! rational := integer ('/' positive-integer)? ;
//! ```

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::numerics::Rational;

use super::expr::{Expr, Func};
use super::GenFunError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, GenFunError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(src[start..i].parse().expect("ascii digits"))
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                Tok::Ident(src[start..i].to_string())
            }
            _ => {
                i += 1;
                match c {
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'/' => Tok::Slash,
                    b'^' => Tok::Caret,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    _ => {
                        let found = src[start..].chars().next().unwrap_or('?');
                        return Err(GenFunError::Syntax {
                            position: start,
                            expected: vec!["a number, 'x', a function name, an operator or a parenthesis".into()],
                            found: format!("character '{found}'"),
                        });
                    }
                }
            }
        };
        out.push((start, tok));
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn peek2(&self) -> &Tok {
        let i = (self.pos + 1).min(self.toks.len() - 1);
        &self.toks[i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> GenFunError {
        let (position, tok) = &self.toks[self.pos];
        GenFunError::Syntax {
            position: *position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), GenFunError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, GenFunError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, GenFunError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, GenFunError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = match self.peek() {
                Tok::Int(n) => n.to_usize(),
                _ => return Err(self.error(&["a nonnegative integer exponent"])),
            };
            let Some(exp) = exp else {
                return Err(self.error(&["an exponent that fits in a machine word"]));
            };
            self.bump();
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, GenFunError> {
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                // `p/q` with a positive integer q is a single literal, so
                // `2/3^2` means (2/3)^2.
                if *self.peek() == Tok::Slash {
                    if let Tok::Int(den) = self.peek2().clone() {
                        if !den.is_zero() {
                            self.bump();
                            self.bump();
                            return Ok(Expr::Const(Rational::new(num, den).expect("positive denominator")));
                        }
                    }
                }
                Ok(Expr::Const(Rational::from_integer(num)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                if name == "x" {
                    self.bump();
                    return Ok(Expr::Var);
                }
                let Some(func) = Func::from_name(&name) else {
                    return Err(self.error(&["'x'", "exp", "sin", "sinh", "ln"]));
                };
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let arg = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            _ => Err(self.error(&["a number", "'x'", "'('", "a function name", "'-'"])),
        }
    }
}

/// Parses the text into an expression tree. Does not check composition
/// restrictions; see [`Expr::validate`].
pub fn parse_expr(text: &str) -> Result<Expr, GenFunError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "'/'", "end of input"]));
    }
    Ok(e)
}
