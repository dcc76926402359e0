//! Recursive-descent parser for the presentation language:
//!
//! ```text
//! algebra GL2;
//! generators s, t, u, v, w;
//! relations [s,t], [s,u], ..., w*(s*t - u*v) - 1;
//! ```
//!
//! Expressions use generator names, integer and `p/q` literals, `+ - *`,
//! parentheses, `^` with a nonnegative integer exponent and the commutator
//! `[a,b] = a*b - b*a`. `#` comments run to the end of the line.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{NCPoly, Presentation};
use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(BigInt),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
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
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let (start_line, start_col) = (line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - s;
            out.push(Token {
                tok: Tok::Ident(chars[s..i].iter().collect()),
                line: start_line,
                column: start_col,
            });
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - s;
            let digits: String = chars[s..i].iter().collect();
            out.push(Token {
                tok: Tok::Number(digits.parse().expect("ascii digits")),
                line: start_line,
                column: start_col,
            });
        } else if ";,+-*^/()[]".contains(c) {
            i += 1;
            col += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                line: start_line,
                column: start_col,
            });
        } else {
            return Err(Error::Syntax {
                line,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    gens: &'a [String],
}

impl Parser<'_> {
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

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = self.peek();
        Err(Error::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        })
    }

    fn describe(t: &Tok) -> String {
        match t {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Number(n) => format!("`{n}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Eof => "end of input".into(),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.peek().tok == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            let found = Self::describe(&self.peek().tok);
            self.error(format!("expected `{c}`, found {found}"))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            other => {
                let found = Self::describe(other);
                self.error(format!("expected `{kw}`, found {found}"))
            }
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize)> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) => {
                self.bump();
                Ok((s, t.line, t.column))
            }
            other => {
                let found = Self::describe(&other);
                self.error(format!("expected a name, found {found}"))
            }
        }
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn ngens(&self) -> usize {
        self.gens.len()
    }

    fn expr(&mut self) -> Result<NCPoly<Rational>> {
        let mut negate = false;
        if self.at_sym('+') {
            self.bump();
        } else if self.at_sym('-') {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.at_sym('+') {
                self.bump();
                acc = &acc + &self.term()?;
            } else if self.at_sym('-') {
                self.bump();
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly<Rational>> {
        let mut acc = self.factor()?;
        while self.at_sym('*') {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NCPoly<Rational>> {
        if self.at_sym('-') {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.at_sym('^') {
            self.bump();
            let t = self.peek().clone();
            let Tok::Number(e) = t.tok else {
                return self.error("expected a nonnegative integer exponent");
            };
            self.bump();
            let Some(e) = e.to_u32() else {
                return Err(Error::Syntax {
                    line: t.line,
                    column: t.column,
                    message: "exponent too large".into(),
                });
            };
            return Ok(base.pow(&NCPoly::one(self.ngens()), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NCPoly<Rational>> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(name) => {
                self.bump();
                match self.gens.iter().position(|g| *g == name) {
                    Some(i) => Ok(NCPoly::var(self.ngens(), i as u32)),
                    None => Err(Error::UndeclaredGenerator {
                        name,
                        line: t.line,
                        column: t.column,
                    }),
                }
            }
            Tok::Number(n) => {
                self.bump();
                let mut value = Rational::from_integer(n);
                if self.at_sym('/') {
                    self.bump();
                    let d = self.peek().clone();
                    let Tok::Number(den) = d.tok else {
                        return self.error("expected a denominator");
                    };
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            line: d.line,
                            column: d.column,
                            message: "zero denominator".into(),
                        });
                    }
                    self.bump();
                    value /= Rational::from_integer(den);
                }
                Ok(NCPoly::constant(self.ngens(), value))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                self.bump();
                let a = self.expr()?;
                self.expect_sym(',')?;
                let b = self.expr()?;
                self.expect_sym(']')?;
                Ok(&(&a * &b) - &(&b * &a))
            }
            other => {
                let found = Self::describe(&other);
                self.error(format!("expected an expression, found {found}"))
            }
        }
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        gens: &[],
    };
    p.expect_keyword("algebra")?;
    let (name, _, _) = p.ident()?;
    p.expect_sym(';')?;

    p.expect_keyword("generators")?;
    let mut gens: Vec<String> = Vec::new();
    if !p.at_sym(';') {
        loop {
            let (g, _, _) = p.ident()?;
            if gens.contains(&g) {
                return Err(Error::DuplicateGenerator(g));
            }
            gens.push(g);
            if p.at_sym(',') {
                p.bump();
            } else {
                break;
            }
        }
    }
    p.expect_sym(';')?;
    p.expect_keyword("relations")?;

    let mut p = Parser {
        toks: p.toks,
        pos: p.pos,
        gens: &gens,
    };
    let mut relations = Vec::new();
    if !p.at_sym(';') {
        loop {
            relations.push(p.expr()?);
            if p.at_sym(',') {
                p.bump();
            } else {
                break;
            }
        }
    }
    p.expect_sym(';')?;
    if p.peek().tok != Tok::Eof {
        let found = Parser::describe(&p.peek().tok);
        return p.error(format!("unexpected {found} after the relations"));
    }
    Presentation::new(name, gens, relations)
}
