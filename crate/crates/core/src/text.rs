//! Textual polynomial syntax.
//!
//! Input: signed integer or rational coefficients, optional `*` between
//! factors, `^` for powers, e.g. `2*x^2*y - 3*y + 1` or `-1/2*x + y`.
//!
//! Output: monomials descending in the term order, `*` between coefficient
//! and variables, `^` with no spaces, and single spaces around binary `+` and
//! `-`. Unit coefficients are omitted except on the constant term. The zero
//! polynomial prints as `0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::{CoeffRing, RingError};
use crate::poly::{PolyRing, Polynomial, Term, MAX_VARS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("at most {MAX_VARS} variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("exponent too large")]
    ExponentOverflow,
    #[error("{0}")]
    Coefficient(RingError),
}

/// A parse failure at byte offset `position`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.kind)
    }
}

fn err<T>(position: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { position, kind })
}

/// Declared variable names, largest first in the default precedence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variables {
    names: Vec<String>,
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Variables {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, ParseError> {
        if names.len() > MAX_VARS {
            return err(0, ParseErrorKind::TooManyVariables(names.len()));
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref().trim();
            if !is_valid_name(name) {
                return err(i, ParseErrorKind::InvalidVariableName(name.to_string()));
            }
            if out.iter().any(|n| n == name) {
                return err(i, ParseErrorKind::DuplicateVariable(name.to_string()));
            }
            out.push(name.to_string());
        }
        Ok(Self { names: out })
    }

    /// Parses a comma-separated list such as `x,y,z`. An empty string gives
    /// no variables.
    pub fn parse(list: &str) -> Result<Self, ParseError> {
        if list.trim().is_empty() {
            return Ok(Self { names: Vec::new() });
        }
        let names: Vec<&str> = list.split(',').collect();
        Self::new(&names)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return err(start, ParseErrorKind::UnexpectedChar(ch));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

/// A parsed monomial before it is mapped into a coefficient ring.
struct RawMonomial {
    position: usize,
    num: BigInt,
    den: BigInt,
    exponents: Vec<u32>,
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a Variables,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn polynomial(&mut self) -> Result<Vec<RawMonomial>, ParseError> {
        let mut out = Vec::new();
        let mut negative = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                true
            }
            Some(Tok::Plus) => {
                self.at += 1;
                false
            }
            _ => false,
        };
        loop {
            let mut m = self.monomial()?;
            if negative {
                m.num = -m.num;
            }
            out.push(m);
            negative = match self.peek() {
                None => break,
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                Some(_) => return err(self.pos(), ParseErrorKind::Expected("`+` or `-`")),
            };
            self.at += 1;
        }
        Ok(out)
    }

    fn monomial(&mut self) -> Result<RawMonomial, ParseError> {
        let position = self.pos();
        let mut m = RawMonomial {
            position,
            num: BigInt::one(),
            den: BigInt::one(),
            exponents: vec![0; self.vars.len()],
        };
        self.factor(&mut m)?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    self.factor(&mut m)?;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) => self.factor(&mut m)?,
                _ => break,
            }
        }
        Ok(m)
    }

    fn factor(&mut self, m: &mut RawMonomial) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Num(n)) => {
                m.num *= n;
                if self.peek() == Some(&Tok::Slash) {
                    self.at += 1;
                    let dpos = self.pos();
                    match self.next() {
                        Some(Tok::Num(d)) => {
                            if d.is_zero() {
                                return err(dpos, ParseErrorKind::Coefficient(RingError::DivisionByZero));
                            }
                            m.den *= d;
                        }
                        Some(_) => return err(dpos, ParseErrorKind::Expected("a denominator")),
                        None => return err(dpos, ParseErrorKind::UnexpectedEnd),
                    }
                }
                Ok(())
            }
            Some(Tok::Ident(name)) => {
                let v = self
                    .vars
                    .index_of(&name)
                    .ok_or_else(|| ParseError {
                        position: pos,
                        kind: ParseErrorKind::UnknownVariable(name.clone()),
                    })?;
                let mut e: u32 = 1;
                if self.peek() == Some(&Tok::Caret) {
                    self.at += 1;
                    let epos = self.pos();
                    match self.next() {
                        Some(Tok::Num(n)) => {
                            e = u32::try_from(n).or_else(|_| {
                                err(epos, ParseErrorKind::ExponentOverflow)
                            })?;
                        }
                        Some(_) => return err(epos, ParseErrorKind::Expected("an exponent")),
                        None => return err(epos, ParseErrorKind::UnexpectedEnd),
                    }
                }
                m.exponents[v] = m.exponents[v]
                    .checked_add(e)
                    .ok_or(ParseError {
                        position: pos,
                        kind: ParseErrorKind::ExponentOverflow,
                    })?;
                Ok(())
            }
            Some(_) => err(pos, ParseErrorKind::Expected("a number or variable")),
            None => err(pos, ParseErrorKind::UnexpectedEnd),
        }
    }
}

/// Parses `text` into a canonical polynomial of `pr`, whose variable count
/// must match `vars`.
pub fn parse_polynomial<R: CoeffRing>(
    pr: &PolyRing<R>,
    vars: &Variables,
    text: &str,
) -> Result<Polynomial<R::Elem>, ParseError> {
    assert_eq!(pr.nvars(), vars.len(), "variable count mismatch");
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        at: 0,
        end: text.len(),
        vars,
    };
    let raw = parser.polynomial()?;
    let mut monomials = Vec::with_capacity(raw.len());
    for m in raw {
        let c = pr
            .ring()
            .from_ratio(&m.num, &m.den)
            .map_err(|e| ParseError {
                position: m.position,
                kind: ParseErrorKind::Coefficient(e),
            })?;
        monomials.push((c, Term::new(m.exponents)));
    }
    Ok(pr.from_terms(monomials))
}

fn format_term(term: &Term, vars: &Variables) -> String {
    let mut parts = Vec::new();
    for (name, &e) in vars.names().iter().zip(term.exponents()) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

pub fn format_polynomial<R: CoeffRing>(
    pr: &PolyRing<R>,
    vars: &Variables,
    p: &Polynomial<R::Elem>,
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = pr.ring();
    let mut out = String::new();
    for (i, m) in p.monomials().iter().enumerate() {
        let negative = ring.is_negative(&m.coeff);
        let abs = if negative {
            ring.neg(&m.coeff)
        } else {
            m.coeff.clone()
        };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.term.is_one() {
            out.push_str(&abs.to_string());
        } else if ring.is_one(&abs) {
            out.push_str(&format_term(&m.term, vars));
        } else {
            out.push_str(&format!("{abs}*{}", format_term(&m.term, vars)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::TermOrder;
    use crate::{Integers, PrimeField, Rationals};

    fn xy() -> Variables {
        Variables::parse("x,y").unwrap()
    }

    #[test]
    fn parses_examples() {
        let zz = PolyRing::new(Integers::new(), TermOrder::lex(2)).unwrap();
        let p = parse_polynomial(&zz, &xy(), "2*x^2*y - 3*y + 1").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p, zz.from_i64(&[(2, &[2, 1]), (-3, &[0, 1]), (1, &[0, 0])]));
        assert!(parse_polynomial(&zz, &xy(), "x - x").unwrap().is_zero());
        assert_eq!(format_polynomial(&zz, &xy(), &zz.zero()), "0");
        let e = parse_polynomial(&zz, &xy(), "1/2*x").unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::Coefficient(RingError::NonIntegerCoefficient(_))
        ));
    }

    #[test]
    fn optional_star_and_signs() {
        let qq = PolyRing::new(Rationals::new(), TermOrder::lex(2)).unwrap();
        let a = parse_polynomial(&qq, &xy(), "-1/2 x + y").unwrap();
        let b = parse_polynomial(&qq, &xy(), "-1/2*x+y").unwrap();
        assert_eq!(a, b);
        assert_eq!(format_polynomial(&qq, &xy(), &a), "-1/2*x + y");
        let c = parse_polynomial(&qq, &xy(), "+ 2 3 x y x").unwrap();
        assert_eq!(format_polynomial(&qq, &xy(), &c), "6*x^2*y");
    }

    #[test]
    fn error_positions() {
        let qq = PolyRing::new(Rationals::new(), TermOrder::lex(2)).unwrap();
        let vars = xy();
        let e = parse_polynomial(&qq, &vars, "x + z").unwrap_err();
        assert_eq!(e.position, 4);
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("z".into()));
        let e = parse_polynomial(&qq, &vars, "x + 1/0").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Coefficient(RingError::DivisionByZero));
        assert_eq!(e.position, 6);
        let e = parse_polynomial(&qq, &vars, "x +").unwrap_err();
        assert_eq!((e.position, e.kind), (3, ParseErrorKind::UnexpectedEnd));
        let e = parse_polynomial(&qq, &vars, "x $ y").unwrap_err();
        assert_eq!((e.position, e.kind), (2, ParseErrorKind::UnexpectedChar('$')));
        assert!(parse_polynomial(&qq, &vars, "").is_err());
        assert!(parse_polynomial(&qq, &vars, "x^").is_err());
        assert!(parse_polynomial(&qq, &vars, "x^99999999999").is_err());
        assert!(parse_polynomial(&qq, &vars, "x / y").is_err());
    }

    #[test]
    fn prime_field_coefficients() {
        let gf = PolyRing::new(PrimeField::new(5).unwrap(), TermOrder::lex(2)).unwrap();
        let p = parse_polynomial(&gf, &xy(), "x - y^2 + 1/2").unwrap();
        assert_eq!(format_polynomial(&gf, &xy(), &p), "x + 4*y^2 + 3");
        let e = parse_polynomial(&gf, &xy(), "1/5*x").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Coefficient(RingError::DivisionByZero));
    }

    #[test]
    fn variable_lists() {
        assert_eq!(Variables::parse("x, y2,z_1").unwrap().len(), 3);
        assert_eq!(
            Variables::parse("x,x").unwrap_err().kind,
            ParseErrorKind::DuplicateVariable("x".into())
        );
        assert!(Variables::parse("1x").is_err());
        assert!(Variables::parse("x,").is_err());
        assert!(Variables::parse("").unwrap().is_empty());
    }

    #[test]
    fn constants_without_variables() {
        let zz = PolyRing::new(Integers::new(), TermOrder::lex(0)).unwrap();
        let vars = Variables::parse("").unwrap();
        let p = parse_polynomial(&zz, &vars, "-7 + 3").unwrap();
        assert_eq!(format_polynomial(&zz, &vars, &p), "-4");
    }
}
