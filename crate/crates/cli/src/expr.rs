//! Parser for scalar and Laurent polynomial literals.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? digits)?
//! atom   := digits | 'p' | 'q' | 't' | '(' expr ')'
//! ```

use homlie_core::{LaurentPoly, Scalar};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: expected {expected}")]
pub struct SyntaxError {
    pub position: usize,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error {0}")]
    Syntax(#[from] SyntaxError),
    #[error("at position {position}: {source}")]
    Eval {
        position: usize,
        #[source]
        source: homlie_core::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::Var(c) => format!("`{c}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(src: &str, allow_t: bool) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let tok = match c {
            ' ' | '\t' | '\n' => continue,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'p' | 'q' => Tok::Var(c),
            't' if allow_t => Tok::Var('t'),
            '0'..='9' => {
                let mut end = i;
                while end < chars.len() && chars[end].1.is_ascii_digit() {
                    end += 1;
                }
                let stop = chars.get(end).map_or(src.len(), |(p, _)| *p);
                let n = src[pos..stop].parse().map_err(|_| SyntaxError {
                    position: pos,
                    expected: "an integer that fits in 64 bits".into(),
                })?;
                i = end;
                Tok::Num(n)
            }
            _ => {
                let vars = if allow_t { "p, q, t" } else { "p, q" };
                return Err(SyntaxError { position: pos, expected: format!("a number, {vars}, an operator or a parenthesis") });
            }
        };
        out.push((pos, tok));
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Tok {
        self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ExprError> {
        Err(SyntaxError { position: self.pos(), expected: format!("{expected}, found {}", describe(self.peek())) }.into())
    }

    fn expr(&mut self) -> Result<LaurentPoly, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ExprError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let rhs = self.unary()?;
                    acc = divide(&acc, &rhs).map_err(|source| ExprError::Eval { position: pos, source })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPoly, ExprError> {
        if self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<LaurentPoly, ExprError> {
        let base = self.atom()?;
        if self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let negative = self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let Tok::Num(n) = self.peek() else {
            return self.fail("an integer exponent");
        };
        self.bump();
        let e = i64::try_from(n).map_err(|_| SyntaxError { position: pos, expected: "a smaller exponent".into() })?;
        power(&base, if negative { -e } else { e }).map_err(|source| ExprError::Eval { position: pos, source })
    }

    fn atom(&mut self) -> Result<LaurentPoly, ExprError> {
        match self.peek() {
            Tok::Num(n) => {
                self.bump();
                Ok(LaurentPoly::constant(Scalar::from_rational(num_rational::BigRational::from_integer(n.into()))))
            }
            Tok::Var('p') => {
                self.bump();
                Ok(LaurentPoly::constant(Scalar::p()))
            }
            Tok::Var('q') => {
                self.bump();
                Ok(LaurentPoly::constant(Scalar::q()))
            }
            Tok::Var(_) => {
                self.bump();
                Ok(LaurentPoly::t_pow(1))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Tok::RParen {
                    return self.fail("`)`");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.fail("a number, a variable or `(`"),
        }
    }
}

fn divide(a: &LaurentPoly, b: &LaurentPoly) -> homlie_core::Result<LaurentPoly> {
    match b.as_scalar() {
        Some(s) => Ok(a.scale(&s.inv()?)),
        None => a.exact_div(b),
    }
}

fn power(base: &LaurentPoly, e: i64) -> homlie_core::Result<LaurentPoly> {
    if let Some(s) = base.as_scalar() {
        return Ok(LaurentPoly::constant(s.pow(e)?));
    }
    if let Some((c, k)) = base.as_monomial() {
        return Ok(LaurentPoly::monomial(c.pow(e)?, k * e));
    }
    if e < 0 {
        return Err(homlie_core::Error::NotInvertible(base.to_string()));
    }
    let mut out = LaurentPoly::one();
    for _ in 0..e {
        out = &out * base;
    }
    Ok(out)
}

fn parse(src: &str, allow_t: bool) -> Result<LaurentPoly, ExprError> {
    let mut parser = Parser { toks: tokenize(src, allow_t)?, at: 0 };
    let value = parser.expr()?;
    if parser.peek() != Tok::End {
        return parser.fail("an operator or end of input");
    }
    Ok(value)
}

/// Parses an element of `Q(p, q)[t, t⁻¹]`.
pub fn parse_laurent(src: &str) -> Result<LaurentPoly, ExprError> {
    parse(src, true)
}

/// Parses an element of `Q(p, q)`; `t` is rejected.
pub fn parse_scalar(src: &str) -> Result<Scalar, ExprError> {
    let value = parse(src, false)?;
    Ok(value.as_scalar().unwrap_or_else(Scalar::zero))
}

/// Parses a rational number such as `3`, `-1/2` or `2/3`.
pub fn parse_rational(src: &str) -> Result<num_rational::BigRational, ExprError> {
    parse_scalar(src)?.as_constant().ok_or_else(|| {
        SyntaxError { position: 0, expected: "a rational number without p or q".into() }.into()
    })
}
