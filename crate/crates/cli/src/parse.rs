//! Parsers for the two input languages.
//!
//! Diff mode reads ordinary differential polynomials (`2*x1''*x1*x2 -
//! 3*x1^2*x2''`): `'` and `^(k)` give derivative orders, `^n` is a power,
//! `*` is the commutative product and may be omitted. Nov mode reads
//! Novikov expressions (`(5/2)*((x1 o x1) o x2)`): `*` is the Novikov
//! product, `o` the symmetrized product, `[a,b]` the commutator; generators
//! carry no derivative orders.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use novikov_core::coeff::coeff_int;
use novikov_core::novikov::NovExpr;
use novikov_core::{Coeff, DiffMonomial, DiffPoly, DiffVar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.col, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Var(u32),
    Prime,
    Caret,
    Star,
    Slash,
    Plus,
    Minus,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    CircOp,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(s) => write!(f, "number `{}`", s),
            Tok::Var(k) => write!(f, "variable `x{}`", k),
            Tok::Prime => write!(f, "`'`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::CircOp => write!(f, "`o`"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            out.push(Spanned { tok: Tok::Num(digits), line: tline, col: tcol });
            continue;
        }
        if c == 'x' {
            bump(&mut chars);
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            if digits.is_empty() {
                return Err(err(tline, tcol, "variable needs an index, like `x1`"));
            }
            let k: u32 = digits
                .parse()
                .map_err(|_| err(tline, tcol, format!("variable index `{}` is too large", digits)))?;
            if k == 0 {
                return Err(err(tline, tcol, "variable indices start at 1"));
            }
            out.push(Spanned { tok: Tok::Var(k), line: tline, col: tcol });
            continue;
        }
        let tok = match c {
            '\'' => Tok::Prime,
            '^' => Tok::Caret,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            'o' => Tok::CircOp,
            other => {
                return Err(err(tline, tcol, format!("unexpected character `{}`", other)));
            }
        };
        bump(&mut chars);
        out.push(Spanned { tok, line: tline, col: tcol });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn new(toks: Vec<Spanned>) -> Self {
        let (end_line, end_col) = toks
            .last()
            .map(|s| (s.line, s.col + 1))
            .unwrap_or((1, 1));
        Parser { toks, pos: 0, end_line, end_col }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.pos + offset).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|s| &s.tok);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(t) if *t == tok => Ok(()),
            Some(t) => Err(err(line, col, format!("expected {}, found {}", what, t))),
            None => Err(err(line, col, format!("expected {}, found end of input", what))),
        }
    }

    fn unexpected(&self, what: &str) -> ParseError {
        let (line, col) = self.here();
        match self.peek() {
            Some(t) => err(line, col, format!("expected {}, found {}", what, t)),
            None => err(line, col, format!("expected {}, found end of input", what)),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    /// `digits ('/' digits)?` with the leading token already known to be a
    /// number.
    fn rational(&mut self) -> Result<Coeff, ParseError> {
        let (line, col) = self.here();
        let Some(Tok::Num(n)) = self.next() else {
            return Err(err(line, col, "expected a number"));
        };
        let numer: BigInt = n.parse().unwrap();
        if self.eat(&Tok::Slash) {
            let (dline, dcol) = self.here();
            match self.next() {
                Some(Tok::Num(d)) => {
                    let denom: BigInt = d.parse().unwrap();
                    if denom.is_zero() {
                        return Err(err(dline, dcol, "denominator must be nonzero"));
                    }
                    Ok(Coeff::new(numer, denom))
                }
                _ => Err(err(dline, dcol, "expected a denominator after `/`")),
            }
        } else {
            Ok(Coeff::from(numer))
        }
    }

    fn small_number(&mut self, what: &str) -> Result<u32, ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(Tok::Num(n)) => n
                .parse()
                .map_err(|_| err(line, col, format!("{} `{}` is too large", what, n))),
            Some(t) => Err(err(line, col, format!("expected {}, found {}", what, t))),
            None => Err(err(line, col, format!("expected {}, found end of input", what))),
        }
    }

    // diff mode ------------------------------------------------------------

    fn diff_expr(&mut self) -> Result<DiffPoly, ParseError> {
        let mut acc = self.diff_term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.diff_term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.diff_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn diff_term(&mut self) -> Result<DiffPoly, ParseError> {
        let negate = self.eat(&Tok::Minus);
        let coeff = match self.peek() {
            Some(Tok::Num(_)) => Some(self.rational()?),
            _ => None,
        };
        let mut factors: Option<DiffPoly> = None;
        loop {
            let explicit_star = self.peek() == Some(&Tok::Star);
            if explicit_star {
                self.pos += 1;
            }
            match self.peek() {
                Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    let f = self.diff_factor()?;
                    factors = Some(match factors {
                        None => f,
                        Some(acc) => &acc * &f,
                    });
                }
                _ if explicit_star => return Err(self.unexpected("a factor after `*`")),
                _ => break,
            }
        }
        let mut term = match factors {
            Some(p) => match coeff {
                Some(c) => p.scale(&c),
                None => p,
            },
            None => match coeff {
                Some(c) => DiffPoly::constant(c),
                None => return Err(self.unexpected("a term")),
            },
        };
        if negate {
            term = -term;
        }
        Ok(term)
    }

    fn diff_factor(&mut self) -> Result<DiffPoly, ParseError> {
        if self.eat(&Tok::LParen) {
            let e = self.diff_expr()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(e);
        }
        let (line, col) = self.here();
        let Some(Tok::Var(k)) = self.next() else {
            return Err(err(line, col, "expected a variable or `(`"));
        };
        let k = k.to_owned();
        // derivative order: a run of primes, or ^(digits)
        let mut order = 0u32;
        if self.peek() == Some(&Tok::Prime) {
            while self.eat(&Tok::Prime) {
                order += 1;
            }
        } else if self.peek() == Some(&Tok::Caret) && self.peek_at(1) == Some(&Tok::LParen) {
            self.pos += 2;
            order = self.small_number("a derivative order")?;
            self.expect(Tok::RParen, "`)`")?;
        }
        // power: ^digits
        let mut power = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            if self.peek_at(1) == Some(&Tok::LParen) {
                return Err(self.unexpected("a plain exponent (the derivative order is already set)"));
            }
            self.pos += 1;
            power = self.small_number("an exponent")?;
        }
        let v = DiffVar::new(k, order);
        Ok(DiffPoly::monomial(DiffMonomial::from_factors(vec![
            v;
            power as usize
        ])))
    }

    // nov mode -------------------------------------------------------------

    fn nov_expr(&mut self) -> Result<NovExpr, ParseError> {
        let mut terms = vec![self.nov_term()?];
        loop {
            if self.eat(&Tok::Plus) {
                terms.push(self.nov_term()?);
            } else if self.eat(&Tok::Minus) {
                let t = self.nov_term()?;
                terms.push(NovExpr::scale(coeff_int(-1), t));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            NovExpr::Sum(terms)
        })
    }

    /// A parenthesized rational directly followed by `*` is a scalar
    /// coefficient, not a subexpression.
    fn paren_coeff_lookahead(&self) -> bool {
        if self.peek() != Some(&Tok::LParen) {
            return false;
        }
        let num_at = |i: usize| matches!(self.peek_at(i), Some(Tok::Num(_)));
        if !num_at(1) {
            return false;
        }
        if self.peek_at(2) == Some(&Tok::RParen) {
            return self.peek_at(3) == Some(&Tok::Star);
        }
        self.peek_at(2) == Some(&Tok::Slash)
            && num_at(3)
            && self.peek_at(4) == Some(&Tok::RParen)
            && self.peek_at(5) == Some(&Tok::Star)
    }

    fn nov_term(&mut self) -> Result<NovExpr, ParseError> {
        let negate = self.eat(&Tok::Minus);
        let coeff = if matches!(self.peek(), Some(Tok::Num(_))) {
            let c = self.rational()?;
            self.eat(&Tok::Star);
            Some(c)
        } else if self.paren_coeff_lookahead() {
            self.pos += 1;
            let c = self.rational()?;
            self.expect(Tok::RParen, "`)`")?;
            self.expect(Tok::Star, "`*`")?;
            Some(c)
        } else {
            None
        };
        let mut acc = self.nov_atom()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = NovExpr::prod(acc, self.nov_atom()?);
            } else if self.eat(&Tok::CircOp) {
                acc = NovExpr::circ(acc, self.nov_atom()?);
            } else {
                break;
            }
        }
        if let Some(c) = coeff {
            acc = NovExpr::scale(c, acc);
        }
        if negate {
            acc = NovExpr::scale(coeff_int(-1), acc);
        }
        Ok(acc)
    }

    fn nov_atom(&mut self) -> Result<NovExpr, ParseError> {
        if self.eat(&Tok::LBracket) {
            let a = self.nov_expr()?;
            self.expect(Tok::Comma, "`,`")?;
            let b = self.nov_expr()?;
            self.expect(Tok::RBracket, "`]`")?;
            return Ok(NovExpr::lie(a, b));
        }
        if self.eat(&Tok::LParen) {
            let e = self.nov_expr()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(e);
        }
        let (line, col) = self.here();
        match self.next() {
            Some(Tok::Var(k)) => {
                let k = k.to_owned();
                match self.peek() {
                    Some(Tok::Prime) => Err(err(
                        line,
                        col,
                        "derivative orders are not part of Novikov expressions",
                    )),
                    Some(Tok::Caret) => Err(err(
                        line,
                        col,
                        "powers are not part of Novikov expressions",
                    )),
                    _ => Ok(NovExpr::gen(k)),
                }
            }
            Some(t) => Err(err(
                line,
                col,
                format!("expected a generator, `[` or `(`, found {}", t),
            )),
            None => Err(err(
                line,
                col,
                "expected a generator, `[` or `(`, found end of input".to_string(),
            )),
        }
    }
}

/// Parses a differential polynomial in canonical-friendly syntax.
pub fn parse_diff(src: &str) -> Result<DiffPoly, ParseError> {
    let mut p = Parser::new(lex(src)?);
    let poly = p.diff_expr()?;
    p.expect_end()?;
    Ok(poly)
}

/// Parses a Novikov expression.
pub fn parse_nov(src: &str) -> Result<NovExpr, ParseError> {
    let mut p = Parser::new(lex(src)?);
    let e = p.nov_expr()?;
    p.expect_end()?;
    Ok(e)
}
