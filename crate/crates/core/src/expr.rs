//! Text form of polyanalytic polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := '-'? factor ('*' factor)*
//! factor  := primary ('^' uint)?
//! primary := 'z' | 'zbar' | 'conj(z)' | number 'i'? | 'i' | '(' expr ')'
//! ```
//!
//! There is no implicit multiplication and no division. `*` is always the
//! full product; [`lower_mod`] reduces modulo `z̄^q` once, after lowering.

use std::fmt;
use std::ops::Range;

use num_complex::Complex64;

use crate::element::{PolyElement, QuotientElement};
use crate::error::{Error, Result};
use crate::region::Region;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TokenKind {
    Number(f64),
    ImagUnit,
    Z,
    Zbar,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Number(x) => write!(f, "number {x}"),
            TokenKind::ImagUnit => f.write_str("'i'"),
            TokenKind::Z => f.write_str("'z'"),
            TokenKind::Zbar => f.write_str("'zbar'"),
            TokenKind::Plus => f.write_str("'+'"),
            TokenKind::Minus => f.write_str("'-'"),
            TokenKind::Star => f.write_str("'*'"),
            TokenKind::Caret => f.write_str("'^'"),
            TokenKind::LParen => f.write_str("'('"),
            TokenKind::RParen => f.write_str("')'"),
        }
    }
}

/// A token with its span in character offsets.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Range<usize>,
    /// Source text of the token, kept for exponents.
    pub text: String,
}

fn parse_error(message: impl Into<String>, offset: usize) -> Error {
    Error::Parse {
        message: message.into(),
        offset,
    }
}

pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let skip_ws = |mut j: usize| {
        while j < chars.len() && chars[j].is_whitespace() {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = match ch {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            _ => None,
        };
        let kind = if let Some(kind) = single {
            i += 1;
            kind
        } else if ch.is_ascii_digit() || ch == '.' {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let lexeme: String = chars[start..i].iter().collect();
            let value: f64 = lexeme
                .parse()
                .map_err(|_| parse_error(format!("malformed number '{lexeme}'"), start))?;
            if !value.is_finite() {
                return Err(parse_error(format!("number '{lexeme}' overflows"), start));
            }
            TokenKind::Number(value)
        } else if ch.is_alphabetic() || ch == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "z" => TokenKind::Z,
                "zbar" => TokenKind::Zbar,
                "i" => TokenKind::ImagUnit,
                "conj" => {
                    let mut j = skip_ws(i);
                    for want in ['(', 'z', ')'] {
                        if j >= chars.len() || chars[j] != want {
                            return Err(parse_error(
                                "'conj' must be written conj(z)",
                                j.min(chars.len()),
                            ));
                        }
                        j = skip_ws(j + 1);
                    }
                    // Trailing whitespace is not part of the token.
                    while chars[j - 1].is_whitespace() {
                        j -= 1;
                    }
                    i = j;
                    TokenKind::Zbar
                }
                _ => return Err(parse_error(format!("unknown identifier '{word}'"), start)),
            }
        } else {
            return Err(parse_error(format!("unexpected character '{ch}'"), start));
        };
        tokens.push(Token {
            kind,
            span: start..i,
            text: chars[start..i].iter().collect(),
        });
    }
    Ok(tokens)
}

/// Expression tree. Unary minus is `Sub(Literal(0), x)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Ast {
    Literal(Complex64),
    Z,
    Zbar,
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

impl Ast {
    /// Direct pointwise interpretation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            Ast::Literal(c) => *c,
            Ast::Z => z,
            Ast::Zbar => z.conj(),
            Ast::Add(a, b) => a.eval(z) + b.eval(z),
            Ast::Sub(a, b) => a.eval(z) - b.eval(z),
            Ast::Mul(a, b) => a.eval(z) * b.eval(z),
            Ast::Pow(a, n) => a.eval(z).powu(*n),
        }
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    eof: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            Some(t) => parse_error(format!("unexpected token {}", t.kind), t.span.start),
            None => parse_error("unexpected end of input", self.eof),
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        while let Some(k @ (TokenKind::Plus | TokenKind::Minus)) = self.peek_kind() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = match k {
                TokenKind::Plus => Ast::Add(Box::new(lhs), Box::new(rhs)),
                _ => Ast::Sub(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Ast> {
        let negate = self.peek_kind() == Some(TokenKind::Minus);
        if negate {
            self.pos += 1;
        }
        let mut lhs = self.factor()?;
        while self.peek_kind() == Some(TokenKind::Star) {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Ast::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(if negate {
            Ast::Sub(
                Box::new(Ast::Literal(Complex64::new(0.0, 0.0))),
                Box::new(lhs),
            )
        } else {
            lhs
        })
    }

    fn factor(&mut self) -> Result<Ast> {
        let base = self.primary()?;
        if self.peek_kind() != Some(TokenKind::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(t) if matches!(t.kind, TokenKind::Number(_)) => {
                let n: u32 = t.text.parse().map_err(|_| {
                    parse_error(
                        format!("exponent '{}' is not an unsigned integer", t.text),
                        t.span.start,
                    )
                })?;
                self.pos += 1;
                Ok(Ast::Pow(Box::new(base), n))
            }
            _ => Err(self.unexpected()),
        }
    }

    fn primary(&mut self) -> Result<Ast> {
        let Some(kind) = self.peek_kind() else {
            return Err(self.unexpected());
        };
        let ast = match kind {
            TokenKind::Z => Ast::Z,
            TokenKind::Zbar => Ast::Zbar,
            TokenKind::ImagUnit => Ast::Literal(Complex64::new(0.0, 1.0)),
            TokenKind::Number(x) => {
                if self.tokens.get(self.pos + 1).map(|t| t.kind) == Some(TokenKind::ImagUnit) {
                    self.pos += 1;
                    Ast::Literal(Complex64::new(0.0, x))
                } else {
                    Ast::Literal(Complex64::new(x, 0.0))
                }
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_kind() != Some(TokenKind::RParen) {
                    return Err(self.unexpected());
                }
                inner
            }
            _ => return Err(self.unexpected()),
        };
        self.pos += 1;
        Ok(ast)
    }
}

fn parse_with_eof(tokens: &[Token], eof: usize) -> Result<Ast> {
    let mut p = Parser {
        tokens,
        pos: 0,
        eof,
    };
    let ast = p.expr()?;
    if p.pos < tokens.len() {
        return Err(p.unexpected());
    }
    Ok(ast)
}

/// Parses a token stream. An unexpected end is reported at the end of the
/// last token.
pub fn parse(tokens: &[Token]) -> Result<Ast> {
    parse_with_eof(tokens, tokens.last().map_or(0, |t| t.span.end))
}

/// Tokenizes and parses; an unexpected end is reported at the input length.
pub fn parse_expr(text: &str) -> Result<Ast> {
    parse_with_eof(&tokenize(text)?, text.chars().count())
}

/// Lowers to an element of `PA(K)`. Fails only if arithmetic overflows.
///
/// Intermediate results are not trimmed: a small coefficient that is
/// momentarily trailing in a partial sum must survive until the end.
pub fn lower(ast: &Ast) -> Result<PolyElement> {
    let f = lower_rec(ast)?;
    for c in f.components() {
        for &x in c.coeffs() {
            crate::check_finite(x)?;
        }
    }
    Ok(f.into_canonical())
}

fn lower_rec(ast: &Ast) -> Result<PolyElement> {
    Ok(match ast {
        Ast::Literal(c) => PolyElement::constant(*c),
        Ast::Z => PolyElement::z(),
        Ast::Zbar => PolyElement::zbar(),
        Ast::Add(a, b) => lower_rec(a)?.add_raw(&lower_rec(b)?)?,
        Ast::Sub(a, b) => lower_rec(a)?.add_raw(&lower_rec(b)?.neg())?,
        Ast::Mul(a, b) => lower_rec(a)?.full_mul_raw(&lower_rec(b)?)?,
        Ast::Pow(a, n) => {
            let mut base = lower_rec(a)?;
            let mut acc = PolyElement::one();
            let mut n = *n;
            while n > 0 {
                if n & 1 == 1 {
                    acc = acc.full_mul_raw(&base)?;
                }
                n >>= 1;
                if n > 0 {
                    base = base.full_mul_raw(&base)?;
                }
            }
            acc
        }
    })
}

/// Lowers and then reduces modulo `z̄^q`.
pub fn lower_mod(ast: &Ast, q: usize) -> Result<QuotientElement> {
    lower(ast)?.truncate(q)
}

/// Region specification, `disc:cx,cy,r` or `rect:x0,y0,x1,y1`.
pub fn parse_region(text: &str) -> Result<Region> {
    text.parse()
}

/// Parses an expression that must lower to a constant, such as `0.5+0.25i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let f = lower(&parse_expr(text)?)?;
    if f.components().len() > 1 || f.components()[0].coeffs().len() > 1 {
        return Err(parse_error("expected a constant", 0));
    }
    Ok(f.components()[0]
        .coeffs()
        .first()
        .copied()
        .unwrap_or_default())
}

/// Shortest round-trip text, in exponent form outside `[1e-5, 1e16)`.
fn format_real(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// `(negative, magnitude text)` of a coefficient. Genuinely complex values
/// are parenthesized and never reported negative.
fn format_coeff(c: Complex64) -> (bool, String) {
    if c.im == 0.0 {
        (c.re < 0.0, format_real(c.re.abs()))
    } else if c.re == 0.0 {
        (c.im < 0.0, format!("{}i", format_real(c.im.abs())))
    } else {
        let sign = if c.im < 0.0 { '-' } else { '+' };
        (
            false,
            format!("({}{sign}{}i)", format_real(c.re), format_real(c.im.abs())),
        )
    }
}

fn format_term(c: Complex64, k: usize) -> (bool, String) {
    let power = match k {
        0 => String::new(),
        1 => "z".to_string(),
        _ => format!("z^{k}"),
    };
    let (neg, mag) = format_coeff(c);
    let body = if k == 0 {
        mag
    } else if mag == "1" {
        power
    } else {
        format!("{mag}*{power}")
    };
    (neg, body)
}

fn join_terms(terms: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(body);
    }
    out
}

/// Deterministic text `a_0(z) + (a_1(z))*zbar + (a_2(z))*zbar^2 + …` that
/// parses and lowers back to exactly `f`. Zero components are omitted.
pub fn print_canonical(f: &PolyElement) -> Result<String> {
    if f.has_taylor() {
        return Err(Error::InvalidArgument(
            "canonical printing needs polynomial components".into(),
        ));
    }
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (j, comp) in f.components().iter().enumerate() {
        let terms: Vec<(bool, String)> = comp
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Complex64::new(0.0, 0.0))
            .map(|(k, &c)| format_term(c, k))
            .collect();
        if terms.is_empty() {
            continue;
        }
        if j == 0 {
            parts.extend(terms);
        } else {
            let power = if j == 1 {
                "zbar".to_string()
            } else {
                format!("zbar^{j}")
            };
            parts.push((false, format!("({})*{power}", join_terms(&terms))));
        }
    }
    if parts.is_empty() {
        return Ok("0".to_string());
    }
    Ok(join_terms(&parts))
}
