//! Polynomial expressions: rational or complex coefficients, variables `z1, z2, ...`,
//! `+ - *`, juxtaposition as product, integer powers and parentheses.

use hypercone::algebra::{CRational, MPoly, Rational};
use hypercone::StructuredPoly;
use num::{BigInt, Zero};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent overflow at {pos}")]
    ExponentOverflow { pos: usize },
    #[error("division at {pos}: only rational literals may be divided")]
    Division { pos: usize },
    #[error("variable z{index} exceeds the declared number of variables {nvars}")]
    TooManyVariables { index: usize, nvars: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Imag,
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < b.len() {
        let c = b[k] as char;
        let start = k;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                k += 1;
                continue;
            }
            '+' => out.push((k, Tok::Plus)),
            '-' => out.push((k, Tok::Minus)),
            '*' => out.push((k, Tok::Star)),
            '/' => out.push((k, Tok::Slash)),
            '^' => out.push((k, Tok::Caret)),
            '(' => out.push((k, Tok::LParen)),
            ')' => out.push((k, Tok::RParen)),
            'i' => out.push((k, Tok::Imag)),
            'z' => {
                k += 1;
                let d0 = k;
                while k < b.len() && b[k].is_ascii_digit() {
                    k += 1;
                }
                let idx: usize = s[d0..k]
                    .parse()
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or(ParseError::Syntax { pos: start, msg: "expected a variable index z1, z2, ...".into() })?;
                out.push((start, Tok::Var(idx)));
                continue;
            }
            '0'..='9' | '.' => {
                while k < b.len() && (b[k].is_ascii_digit() || b[k] == b'.') {
                    k += 1;
                }
                let text = &s[start..k];
                let r = decimal(text).ok_or(ParseError::Syntax { pos: start, msg: format!("bad number {text:?}") })?;
                out.push((start, Tok::Num(r)));
                continue;
            }
            _ => return Err(ParseError::Syntax { pos: k, msg: format!("unexpected character {c:?}") }),
        }
        k += 1;
    }
    Ok(out)
}

fn decimal(t: &str) -> Option<Rational> {
    let (int_part, frac) = match t.split_once('.') {
        Some((a, b)) => (a, b),
        None => (t, ""),
    };
    if frac.contains('.') || (int_part.is_empty() && frac.is_empty()) {
        return None;
    }
    let digits = format!("{int_part}{frac}");
    let num: BigInt = digits.parse().ok()?;
    let den = num::pow(BigInt::from(10), frac.len());
    Some(Rational::new(num, den))
}

#[derive(Debug, Clone)]
enum Ast {
    Const(CRational),
    Var(usize),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Mul(Vec<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                Ast::Neg(Box::new(self.term()?))
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Imag | Tok::Var(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut fs = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    fs.push(self.factor()?);
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.at += 1;
                    let Some(Tok::Num(d)) = self.peek().cloned() else {
                        return Err(ParseError::Division { pos });
                    };
                    // Only a numeric prefix such as `3/2` may be divided.
                    let Some(Ast::Const(c)) = fs.last() else {
                        return Err(ParseError::Division { pos });
                    };
                    if fs.len() != 1 || d.is_zero() {
                        return Err(ParseError::Division { pos });
                    }
                    self.at += 1;
                    let mut q = c.scale(&d.recip());
                    if self.peek() == Some(&Tok::Imag) {
                        self.at += 1;
                        q = &q * &CRational::i();
                    }
                    fs[0] = Ast::Const(q);
                }
                _ if self.starts_factor() => fs.push(self.factor()?),
                _ => break,
            }
        }
        Ok(if fs.len() == 1 { fs.pop().expect("one factor") } else { Ast::Mul(fs) })
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            let pos = self.pos();
            let Some(Tok::Num(e)) = self.peek().cloned() else {
                return self.err("expected a nonnegative integer exponent");
            };
            if !e.is_integer() {
                return self.err("expected a nonnegative integer exponent");
            }
            self.at += 1;
            let e: u32 = e
                .to_integer()
                .try_into()
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or(ParseError::ExponentOverflow { pos })?;
            return Ok(Ast::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Ast, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.at += 1;
                if self.peek() == Some(&Tok::Imag) {
                    self.at += 1;
                    return Ok(Ast::Const(CRational::new(Rational::zero(), r)));
                }
                Ok(Ast::Const(CRational::real(r)))
            }
            Some(Tok::Imag) => {
                self.at += 1;
                Ok(Ast::Const(CRational::i()))
            }
            Some(Tok::Var(k)) => {
                self.at += 1;
                Ok(Ast::Var(k))
            }
            Some(Tok::Minus) => {
                self.at += 1;
                Ok(Ast::Neg(Box::new(self.factor()?)))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.at += 1;
                Ok(e)
            }
            Some(_) => self.err("expected a number, variable or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn max_var(a: &Ast) -> usize {
    match a {
        Ast::Const(_) => 0,
        Ast::Var(k) => *k,
        Ast::Add(x, y) | Ast::Sub(x, y) => max_var(x).max(max_var(y)),
        Ast::Neg(x) | Ast::Pow(x, _) => max_var(x),
        Ast::Mul(v) => v.iter().map(max_var).max().unwrap_or(0),
    }
}

fn eval(a: &Ast, n: usize) -> MPoly {
    let ok = |r: hypercone::Result<MPoly>| r.expect("operands share the ring");
    match a {
        Ast::Const(c) => MPoly::constant(n, c.clone()),
        Ast::Var(k) => MPoly::var(n, k - 1),
        Ast::Add(x, y) => ok(eval(x, n).add(&eval(y, n))),
        Ast::Sub(x, y) => ok(eval(x, n).sub(&eval(y, n))),
        Ast::Neg(x) => eval(x, n).neg(),
        Ast::Mul(v) => v.iter().fold(MPoly::one(n), |acc, f| ok(acc.mul(&eval(f, n)))),
        Ast::Pow(x, e) => eval(x, n).pow(*e),
    }
}

fn parse_ast(text: &str, nvars: Option<usize>) -> Result<(Ast, usize), ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let ast = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    let used = max_var(&ast);
    let n = match nvars {
        Some(n) if used > n => return Err(ParseError::TooManyVariables { index: used, nvars: n }),
        Some(n) => n,
        None => used.max(1),
    };
    Ok((ast, n))
}

/// Parse with the number of variables taken from the highest index mentioned,
/// or from `nvars` when given.
pub fn parse_poly_n(text: &str, nvars: Option<usize>) -> Result<MPoly, ParseError> {
    let (ast, n) = parse_ast(text, nvars)?;
    Ok(eval(&ast, n))
}

pub fn parse_poly(text: &str) -> Result<MPoly, ParseError> {
    parse_poly_n(text, None)
}

/// Parse a constant such as `3`, `-7/2`, `2i` or `1+2i`.
pub fn parse_scalar(text: &str) -> Result<CRational, ParseError> {
    let (ast, _) = parse_ast(text, None)?;
    if max_var(&ast) > 0 {
        return Err(ParseError::Syntax { pos: 0, msg: format!("expected a constant, got {text:?}") });
    }
    Ok(eval(&ast, 1).constant_term())
}

/// Parse and keep a top-level product as separate factors, so that structured
/// routes (union rule, products of linear forms) apply.
pub fn parse_structured(text: &str, nvars: Option<usize>) -> Result<StructuredPoly, ParseError> {
    let (ast, n) = parse_ast(text, nvars)?;
    let Ast::Mul(fs) = &ast else {
        return Ok(StructuredPoly::generic(eval(&ast, n)));
    };
    let mut scalar = CRational::one();
    let mut factors = Vec::new();
    for f in fs {
        let p = eval(f, n);
        if p.is_constant() {
            scalar = &scalar * &p.constant_term();
        } else {
            factors.push(p);
        }
    }
    if factors.len() < 2 || scalar.is_zero() {
        return Ok(StructuredPoly::generic(eval(&ast, n)));
    }
    factors[0] = factors[0].scale(&scalar);
    Ok(StructuredPoly::from_factors(factors).expect("nonempty factors in one ring"))
}

/// Text that [`parse_poly_n`] reads back to the same polynomial.
pub fn serialize(f: &MPoly) -> String {
    f.to_string()
}

/// Products keep their factors, so that [`parse_structured`] recovers them.
pub fn serialize_structured(f: &StructuredPoly) -> String {
    let fs = f.factors();
    let exact = MPoly::product(f.nvars(), &fs).is_ok_and(|p| &p == f.poly());
    if fs.len() < 2 || !exact {
        return serialize(f.poly());
    }
    fs.iter().map(|g| format!("({})", serialize(g))).collect::<Vec<_>>().join("*")
}
