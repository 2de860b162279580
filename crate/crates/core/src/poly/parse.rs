//! Recursive-descent parser for polynomial expressions in `z1`, `z2`.
//!
//! ```text
//! expr   := term { ("+"|"-") term }
//! term   := factor { ["*"] factor }
//! factor := base [ "^" uint ]
//! base   := number | "i" | "z1" | "z2" | "z" | "(" expr ")" | "-" factor
//! ```
//!
//! `z` is an alias for `z1`. Juxtaposition multiplies (`2z1`, `3i`).

use num_complex::Complex64;
use thiserror::Error;

use super::{Poly2, ONE};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("unexpected {found} at position {pos}, expected {expected}")]
    Unexpected {
        pos: usize,
        found: String,
        expected: &'static str,
    },
    #[error("invalid number '{text}' at position {pos}")]
    BadNumber { pos: usize, text: String },
    #[error("degree {degree} at position {pos} exceeds the maximum {max}")]
    DegreeOverflow { pos: usize, degree: u64, max: usize },
    #[error("non-finite coefficient produced at position {pos}")]
    NonFinite { pos: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParseOptions {
    /// Largest degree allowed in either variable, for exponents and results.
    pub max_degree: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions { max_degree: 200 }
    }
}

pub fn parse_expression(text: &str) -> Result<Poly2, ParseError> {
    parse_expression_with(text, ParseOptions::default())
}

pub fn parse_expression_with(text: &str, opts: ParseOptions) -> Result<Poly2, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        opts,
        end: text.len(),
    };
    let poly = parser.expr()?;
    match parser.peek() {
        None => Ok(poly),
        Some(t) => Err(ParseError::Unexpected {
            pos: t.pos,
            found: t.kind.describe(),
            expected: "operator or end of input",
        }),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Number(f64),
    I,
    Z1,
    Z2,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Kind {
    fn describe(&self) -> String {
        match self {
            Kind::Number(x) => format!("number {x}"),
            Kind::I => "'i'".into(),
            Kind::Z1 => "'z1'".into(),
            Kind::Z2 => "'z2'".into(),
            Kind::Plus => "'+'".into(),
            Kind::Minus => "'-'".into(),
            Kind::Star => "'*'".into(),
            Kind::Caret => "'^'".into(),
            Kind::LParen => "'('".into(),
            Kind::RParen => "')'".into(),
        }
    }

    fn starts_base(&self) -> bool {
        matches!(self, Kind::Number(_) | Kind::I | Kind::Z1 | Kind::Z2 | Kind::LParen)
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    pos: usize,
    text: String,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let single = |kind| Token {
            kind,
            pos: start,
            text: (b as char).to_string(),
        };
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'+' => {
                out.push(single(Kind::Plus));
                i += 1;
            }
            b'-' => {
                out.push(single(Kind::Minus));
                i += 1;
            }
            b'*' => {
                out.push(single(Kind::Star));
                i += 1;
            }
            b'^' => {
                out.push(single(Kind::Caret));
                i += 1;
            }
            b'(' => {
                out.push(single(Kind::LParen));
                i += 1;
            }
            b')' => {
                out.push(single(Kind::RParen));
                i += 1;
            }
            b'i' => {
                out.push(single(Kind::I));
                i += 1;
            }
            b'z' => {
                let (kind, len) = match bytes.get(i + 1) {
                    Some(b'1') => (Kind::Z1, 2),
                    Some(b'2') => (Kind::Z2, 2),
                    _ => (Kind::Z1, 1),
                };
                out.push(Token {
                    kind,
                    pos: start,
                    text: text[start..start + len].to_string(),
                });
                i += len;
            }
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                // Exponent only when a digit follows, so "2e" is not swallowed.
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        while j < bytes.len() && bytes[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let lit = &text[start..i];
                let value: f64 = lit.parse().map_err(|_| ParseError::BadNumber {
                    pos: start,
                    text: lit.to_string(),
                })?;
                if !value.is_finite() {
                    return Err(ParseError::BadNumber {
                        pos: start,
                        text: lit.to_string(),
                    });
                }
                out.push(Token {
                    kind: Kind::Number(value),
                    pos: start,
                    text: lit.to_string(),
                });
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(ParseError::Unexpected {
                    pos: start,
                    found: format!("character '{ch}'"),
                    expected: "number, 'i', 'z1', 'z2', operator or parenthesis",
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    opts: ParseOptions,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn expr(&mut self) -> Result<Poly2, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().map(|t| &t.kind) {
                Some(Kind::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some(Kind::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
            self.check_finite(&acc)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly2, ParseError> {
        let mut acc = self.factor()?;
        loop {
            let pos = self.here();
            match self.peek().map(|t| &t.kind) {
                Some(Kind::Star) => {
                    self.pos += 1;
                }
                Some(k) if k.starts_base() => {}
                _ => break,
            }
            let rhs = self.factor()?;
            let (m1, n1) = acc.bidegree();
            let (m2, n2) = rhs.bidegree();
            self.check_degree(pos, (m1 + m2) as u64, (n1 + n2) as u64)?;
            acc = &acc * &rhs;
            self.check_finite(&acc)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly2, ParseError> {
        let base = self.base()?;
        if matches!(self.peek().map(|t| &t.kind), Some(Kind::Caret)) {
            self.pos += 1;
            let pos = self.here();
            let tok = self.next().ok_or(ParseError::Unexpected {
                pos,
                found: "end of input".into(),
                expected: "unsigned integer exponent",
            })?;
            let exp: u64 = match tok.kind {
                Kind::Number(_) if tok.text.bytes().all(|b| b.is_ascii_digit()) => {
                    tok.text.parse().map_err(|_| ParseError::DegreeOverflow {
                        pos,
                        degree: u64::MAX,
                        max: self.opts.max_degree,
                    })?
                }
                other => {
                    return Err(ParseError::Unexpected {
                        pos,
                        found: other.describe(),
                        expected: "unsigned integer exponent",
                    })
                }
            };
            if exp > self.opts.max_degree as u64 {
                return Err(ParseError::DegreeOverflow {
                    pos,
                    degree: exp,
                    max: self.opts.max_degree,
                });
            }
            let (m, n) = base.bidegree();
            self.check_degree(pos, (m as u64).saturating_mul(exp), (n as u64).saturating_mul(exp))?;
            let out = base.pow(exp as u32);
            self.check_finite(&out)?;
            return Ok(out);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly2, ParseError> {
        let pos = self.here();
        let Some(tok) = self.next() else {
            return Err(ParseError::Unexpected {
                pos,
                found: "end of input".into(),
                expected: "number, 'i', variable or '('",
            });
        };
        match tok.kind {
            Kind::Number(x) => Ok(Poly2::constant(Complex64::new(x, 0.0))),
            Kind::I => Ok(Poly2::constant(Complex64::new(0.0, 1.0))),
            Kind::Z1 => Ok(Poly2::monomial(1, 0, ONE)),
            Kind::Z2 => Ok(Poly2::monomial(0, 1, ONE)),
            Kind::Minus => Ok(-self.factor()?),
            Kind::LParen => {
                let inner = self.expr()?;
                let close = self.here();
                match self.next() {
                    Some(Token { kind: Kind::RParen, .. }) => Ok(inner),
                    other => Err(ParseError::Unexpected {
                        pos: close,
                        found: other.map_or("end of input".into(), |t| t.kind.describe()),
                        expected: "')'",
                    }),
                }
            }
            other => Err(ParseError::Unexpected {
                pos: tok.pos,
                found: other.describe(),
                expected: "number, 'i', variable or '('",
            }),
        }
    }

    fn check_degree(&self, pos: usize, d1: u64, d2: u64) -> Result<(), ParseError> {
        let degree = d1.max(d2);
        if degree > self.opts.max_degree as u64 {
            return Err(ParseError::DegreeOverflow {
                pos,
                degree,
                max: self.opts.max_degree,
            });
        }
        Ok(())
    }

    fn check_finite(&self, p: &Poly2) -> Result<(), ParseError> {
        if p.grid().iter().all(|c| c.is_finite()) {
            Ok(())
        } else {
            Err(ParseError::NonFinite { pos: self.here() })
        }
    }
}
