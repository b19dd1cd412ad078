//! Text syntax for operator expressions and scalars.
//!
//! ```text
//! expr   := term (('+' | '-') term)*        (an optional leading '-')
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := generator | scalar | '(' expr ')'
//! scalar := int | int/int | q | v | alpha | eps | c | {k}
//! ```
//!
//! `q` and `v` additionally accept a parenthesized signed exponent, so
//! `q^(-1)`, `q^(3/2)` and `v^(-3)` are valid. Whitespace is insignificant
//! and multiplication is always explicit.

mod lexer;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::ncalg::{AlgebraError, AlgebraSpec, Gen, NCPoly, Word};
use crate::scalars::{qnum, CoeffPoly, Rational};

use lexer::{tokenize, Tok, Token};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown generator '{name}' for {algebra} at byte {offset}")]
    UnknownGenerator { offset: usize, name: String, algebra: String },
    #[error("generator index {index} exceeds p={p} at byte {offset}")]
    IndexExceeds { offset: usize, index: u32, p: u32 },
}

impl ParseError {
    fn syntax(offset: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax { offset, message: message.into() }
    }

    /// 0-based byte offset of the offending input.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownGenerator { offset, .. }
            | ParseError::IndexExceeds { offset, .. } => *offset,
        }
    }
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Terms with a negation flag each.
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    Generator(Gen),
    Scalar(CoeffPoly),
}

impl Expr {
    pub fn eval(&self, alg: AlgebraSpec) -> NCPoly {
        match self {
            Expr::Sum(terms) => terms.iter().fold(NCPoly::zero(alg), |acc, (neg, t)| {
                let v = t.eval(alg);
                if *neg {
                    &acc - &v
                } else {
                    &acc + &v
                }
            }),
            Expr::Product(fs) => fs.iter().fold(NCPoly::one(alg), |acc, f| &acc * &f.eval(alg)),
            Expr::Power(b, k) => b.eval(alg).nc_pow(*k),
            Expr::Generator(g) => NCPoly::generator(alg, *g),
            Expr::Scalar(c) => NCPoly::scalar(alg, c.clone()),
        }
    }

    /// Value of a generator-free expression.
    pub fn eval_scalar(&self) -> Option<CoeffPoly> {
        Some(match self {
            Expr::Sum(terms) => {
                let mut acc = CoeffPoly::zero();
                for (neg, t) in terms {
                    let v = t.eval_scalar()?;
                    acc = if *neg { &acc - &v } else { &acc + &v };
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = CoeffPoly::one();
                for f in fs {
                    acc = &acc * &f.eval_scalar()?;
                }
                acc
            }
            Expr::Power(b, k) => b.eval_scalar()?.pow(*k),
            Expr::Generator(_) => return None,
            Expr::Scalar(c) => c.clone(),
        })
    }
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    end: usize,
    alg: Option<&'a AlgebraSpec>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        let off = self.offset();
        match self.next() {
            Some(t) if t.tok == want => Ok(()),
            _ => Err(ParseError::syntax(off, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut neg = false;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            neg = true;
        }
        loop {
            terms.push((neg, self.term()?));
            match self.peek() {
                Some(Tok::Plus) => neg = false,
                Some(Tok::Minus) => neg = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().expect("one term").1 } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let (base, symbol) = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        if let (Some(sym), Some(Tok::LParen)) = (symbol, self.peek()) {
            return self.signed_exponent(sym).map(Expr::Scalar);
        }
        let off = self.offset();
        match self.next().map(|t| t.tok) {
            Some(Tok::Int(k)) => {
                let k = k.to_u32().ok_or_else(|| ParseError::syntax(off, "exponent too large"))?;
                Ok(Expr::Power(Box::new(base), k))
            }
            _ => Err(ParseError::syntax(off, "expected a non-negative integer exponent")),
        }
    }

    /// `q^(e)` or `v^(e)` with a signed exponent; `q` also takes halves.
    fn signed_exponent(&mut self, sym: char) -> Result<CoeffPoly, ParseError> {
        self.expect(Tok::LParen, "'('")?;
        let mut sign = 1i64;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            sign = -1;
        }
        let off = self.offset();
        let too_large = || ParseError::syntax(off, "exponent too large");
        let v_exp = match (sym, self.next().map(|t| t.tok)) {
            ('q', Some(Tok::Int(k))) => 2 * k.to_i64().ok_or_else(too_large)?,
            ('v', Some(Tok::Int(k))) => k.to_i64().ok_or_else(too_large)?,
            ('q', Some(Tok::Frac(num, den))) if den == BigInt::from(2) => num.to_i64().ok_or_else(too_large)?,
            _ => return Err(ParseError::syntax(off, "expected an integer exponent (or k/2 for q)")),
        };
        self.expect(Tok::RParen, "')'")?;
        let v_exp = i32::try_from(sign * v_exp).map_err(|_| too_large())?;
        Ok(CoeffPoly::v_pow(v_exp))
    }

    fn base(&mut self) -> Result<(Expr, Option<char>), ParseError> {
        let off = self.offset();
        let Some(tok) = self.next() else {
            return Err(ParseError::syntax(off, "unexpected end of input"));
        };
        let scalar = |c: CoeffPoly| Ok((Expr::Scalar(c), None));
        match tok.tok {
            Tok::Int(k) => scalar(CoeffPoly::constant(Rational::from_integer(k))),
            Tok::Frac(n, d) => scalar(CoeffPoly::constant(Rational::new(n, d))),
            Tok::QNum(k) => scalar(qnum(k)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok((e, None))
            }
            Tok::Ident(name) => match name.as_str() {
                "q" => Ok((Expr::Scalar(CoeffPoly::q()), Some('q'))),
                "v" => Ok((Expr::Scalar(CoeffPoly::v_pow(1)), Some('v'))),
                "alpha" => scalar(CoeffPoly::alpha()),
                "eps" => scalar(CoeffPoly::eps()),
                "c" => scalar(CoeffPoly::central()),
                _ => {
                    let Some(alg) = self.alg else {
                        return Err(ParseError::syntax(off, format!("generator '{name}' in a scalar literal")));
                    };
                    match alg.lookup(&name) {
                        Ok(g) => Ok((Expr::Generator(g), None)),
                        Err(AlgebraError::IndexExceeds { index, p }) => {
                            Err(ParseError::IndexExceeds { offset: off, index, p })
                        }
                        Err(_) => Err(ParseError::UnknownGenerator { offset: off, name, algebra: alg.to_string() }),
                    }
                }
            },
            _ => Err(ParseError::syntax(off, "expected a generator, scalar or '('")),
        }
    }
}

fn parse_tree(text: &str, alg: Option<&AlgebraSpec>) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, end: text.len(), alg };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(ParseError::syntax(p.offset(), "unexpected token"));
    }
    Ok(e)
}

/// Parses an expression without evaluating it.
pub fn parse_expr(text: &str, alg: &AlgebraSpec) -> Result<Expr, ParseError> {
    parse_tree(text, Some(alg))
}

/// Parses and normal-orders an expression.
pub fn parse(text: &str, alg: &AlgebraSpec) -> Result<NCPoly, ParseError> {
    Ok(parse_expr(text, alg)?.eval(*alg))
}

pub fn parse_scalar(text: &str) -> Result<CoeffPoly, ParseError> {
    Ok(parse_tree(text, None)?.eval_scalar().expect("generators are rejected while parsing"))
}

fn render_word(alg: &AlgebraSpec, w: &Word) -> String {
    w.runs()
        .iter()
        .map(|&(g, e)| {
            let name = alg.generator_name(g);
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical text of a polynomial, terms in word order.
pub fn print(p: &NCPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let alg = p.algebra();
    if let Some(c) = p.coeff(&Word::empty()).filter(|_| p.len() == 1) {
        return c.to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in p.terms().enumerate() {
        let negative = c.terms().next().is_some_and(|(_, r)| r.is_negative());
        let mag = if negative { -c } else { c.clone() };
        let word = render_word(&alg, w);
        let coeff = if mag.len() > 1 { format!("({mag})") } else { mag.to_string() };
        let body = match (word.is_empty(), mag.as_constant().is_some_and(|r| r.is_one())) {
            (true, _) => coeff,
            (false, true) => word,
            (false, false) => format!("{coeff}*{word}"),
        };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}
