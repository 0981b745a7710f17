use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::Ast;
use crate::qobjects::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at line {line}, column {column}: expected {}, found {found}", .expected.join(" or "))]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Word(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "integer {v}"),
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Word(s)
        } else if "+-*/^();,".contains(c) {
            chars.next();
            column += 1;
            Tok::Sym(c)
        } else {
            return Err(SyntaxError {
                line: l0,
                column: c0,
                expected: vec!["an expression character".into()],
                found: format!("`{c}`"),
            });
        };
        out.push(Token {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

const ATOM_START: &[&str] = &["integer", "`q`", "`(`", "`poch`", "`qbin`", "`-`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, SyntaxError> {
        let t = &self.toks[self.pos];
        Err(SyntaxError {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.to_string(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(&[&format!("`{c}`")])
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        if matches!(self.peek(), Tok::Word(x) if x == w) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unsigned(&mut self, what: &str) -> Result<BigInt, SyntaxError> {
        match self.peek() {
            Tok::Int(v) => {
                let v = v.clone();
                self.bump();
                Ok(v)
            }
            _ => self.error(&[what]),
        }
    }

    fn small(&mut self, v: BigInt, at: usize) -> Result<i64, SyntaxError> {
        v.to_i64().ok_or_else(|| {
            let t = &self.toks[at];
            SyntaxError {
                line: t.line,
                column: t.column,
                expected: vec!["an integer that fits in 64 bits".into()],
                found: t.tok.to_string(),
            }
        })
    }

    /// `["-"] digits`
    fn signed(&mut self) -> Result<i64, SyntaxError> {
        let neg = self.eat('-');
        let at = self.pos;
        let v = self.unsigned("integer")?;
        let v = self.small(v, at)?;
        Ok(if neg { -v } else { v })
    }

    fn posint(&mut self) -> Result<i64, SyntaxError> {
        let at = self.pos;
        let v = self.unsigned("positive integer")?;
        let v = self.small(v, at)?;
        if v < 1 {
            self.pos = at;
            return self.error(&["positive integer"]);
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Ast, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast, SyntaxError> {
        if self.eat('-') {
            Ok(Ast::Neg(Box::new(self.unary()?)))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<Ast, SyntaxError> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.signed()?;
            Ok(Ast::Pow(Box::new(base), k))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Ast, SyntaxError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Ast::Int(v))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Word(w) if w == "q" => {
                self.bump();
                Ok(Ast::Q)
            }
            Tok::Word(w) if w == "poch" => {
                self.bump();
                self.expect('(')?;
                let a = self.mono()?;
                self.expect(';')?;
                let step = self.posint()? as u64;
                self.expect(';')?;
                let len = if self.eat_word("inf") {
                    None
                } else {
                    let at = self.pos;
                    match self.peek() {
                        Tok::Int(_) => {
                            let v = self.unsigned("")?;
                            Some(self.small(v, at)? as u64)
                        }
                        _ => return self.error(&["non-negative integer", "`inf`"]),
                    }
                };
                self.expect(')')?;
                Ok(Ast::Poch { a, step, len })
            }
            Tok::Word(w) if w == "qbin" => {
                self.bump();
                self.expect('(')?;
                let a = self.signed()?;
                self.expect(',')?;
                let b = self.signed()?;
                self.expect(')')?;
                Ok(Ast::Qbin(a, b))
            }
            _ => self.error(ATOM_START),
        }
    }

    fn mono(&mut self) -> Result<Monomial, SyntaxError> {
        let sign = if self.eat('-') { -1 } else { 1 };
        let coeff = match self.peek() {
            Tok::Int(_) => {
                let at = self.pos;
                let v = self.unsigned("integer")?;
                let c = self.small(v, at)?;
                if !self.eat('*') {
                    return Ok(Monomial::new(sign * c, 0));
                }
                if !matches!(self.peek(), Tok::Word(w) if w == "q") {
                    return self.error(&["`q`"]);
                }
                c
            }
            Tok::Word(w) if w == "q" => 1,
            _ => return self.error(&["integer", "`q`"]),
        };
        self.bump();
        let exp = if self.eat('^') { self.posint()? } else { 1 };
        Ok(Monomial::new(sign * coeff, exp))
    }
}

/// Parses one expression; trailing input is an error.
pub fn parse(text: &str) -> Result<Ast, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(&["operator", "end of input"]);
    }
    Ok(e)
}
