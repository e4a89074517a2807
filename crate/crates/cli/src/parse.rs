//! Expression syntax for stem polynomials and points of H_C.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | base ("^" natural)?
//! base   := rational | unit | var | "(" expr ")"
//! ```
//!
//! Units are `i, j, k` and the commuting unit `E`; variables are `z` or `q`.
//! Pairs for R₃ are written `( <expr> ; <expr> )`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use slicereg_core::algebra::{CQuat, GRat, Quaternion, Rat};
use slicereg_core::{Poly, R3StemPoly, StemPoly};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unit E is not allowed in a stem expression (position {pos})")]
    UnitNotAllowed { pos: usize },
    #[error("variable not allowed in a point (position {pos})")]
    VariableInPoint { pos: usize },
    #[error("z and q cannot be mixed in one expression (position {pos})")]
    MixedVariables { pos: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Stem,
    Point,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unit {
    I,
    J,
    K,
    /// The commuting imaginary unit ι.
    E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Rational(Rat),
    Unit(Unit),
    Var(char),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

impl Ast {
    /// Multiplies out into `Σ z^k c_k` with coefficients on the right. Factor
    /// order is kept; `z` and `E` are central so this form always exists.
    pub fn normalize(&self) -> Poly<CQuat> {
        match self {
            Ast::Rational(r) => Poly::constant(CQuat::scalar(GRat::new(r.clone(), Rat::zero()))),
            Ast::Unit(u) => Poly::constant(match u {
                Unit::I => CQuat::i(),
                Unit::J => CQuat::j(),
                Unit::K => CQuat::k(),
                Unit::E => CQuat::scalar(GRat::new(Rat::zero(), Rat::one())),
            }),
            Ast::Var(_) => Poly::var(),
            Ast::Neg(a) => -a.normalize(),
            Ast::Add(a, b) => &a.normalize() + &b.normalize(),
            Ast::Sub(a, b) => &a.normalize() - &b.normalize(),
            Ast::Mul(a, b) => &a.normalize() * &b.normalize(),
            Ast::Pow(a, e) => a.normalize().pow(*e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Semi,
    Unit(Unit),
    Var(char),
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Slash => "'/'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Semi => "';'".into(),
        Tok::Unit(_) => "unit".into(),
        Tok::Var(c) => format!("variable {c}"),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        pos += 1;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => continue,
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                Tok::Int(text[start..pos].parse().expect("digits"))
            }
            b'/' => Tok::Slash,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b';' => Tok::Semi,
            b'i' => Tok::Unit(Unit::I),
            b'j' => Tok::Unit(Unit::J),
            b'k' => Tok::Unit(Unit::K),
            b'E' => Tok::Unit(Unit::E),
            b'z' | b'q' => Tok::Var(c as char),
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unexpected character '{ch}'"),
                });
            }
        };
        out.push((tok, start));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    mode: Mode,
    var: Option<char>,
}

impl Parser {
    fn new(text: &str, mode: Mode) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            at: 0,
            mode,
            var: None,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            msg: format!("expected {wanted}, found {}", describe(self.peek())),
        }
    }

    fn expect(&mut self, t: Tok, wanted: &str) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => match u32::try_from(&n) {
                Ok(e) if e <= MAX_EXPONENT => Ok(Ast::Pow(Box::new(base), e)),
                _ => Err(ParseError::Syntax {
                    pos,
                    msg: format!("exponent larger than {MAX_EXPONENT}"),
                }),
            },
            t => Err(ParseError::Syntax {
                pos,
                msg: format!("expected natural exponent, found {}", describe(&t)),
            }),
        }
    }

    fn base(&mut self) -> Result<Ast, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Ast::Rational(Rat::from_integer(n)));
                }
                self.bump();
                let dpos = self.pos();
                match self.bump() {
                    Tok::Int(d) if !d.is_zero() => Ok(Ast::Rational(Rat::new(n, d))),
                    Tok::Int(_) => Err(ParseError::Syntax {
                        pos: dpos,
                        msg: "zero denominator".into(),
                    }),
                    t => Err(ParseError::Syntax {
                        pos: dpos,
                        msg: format!("expected denominator, found {}", describe(&t)),
                    }),
                }
            }
            Tok::Unit(u) => {
                if u == Unit::E && self.mode == Mode::Stem {
                    return Err(ParseError::UnitNotAllowed { pos });
                }
                self.bump();
                Ok(Ast::Unit(u))
            }
            Tok::Var(c) => {
                if self.mode == Mode::Point {
                    return Err(ParseError::VariableInPoint { pos });
                }
                match self.var {
                    Some(v) if v != c => return Err(ParseError::MixedVariables { pos }),
                    _ => self.var = Some(c),
                }
                self.bump();
                Ok(Ast::Var(c))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, unit, variable or '('")),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.expect(Tok::End, "end of input")
    }
}

pub fn parse_ast(text: &str, mode: Mode) -> Result<Ast, ParseError> {
    let mut p = Parser::new(text, mode)?;
    let ast = p.expr()?;
    p.finish()?;
    Ok(ast)
}

fn real_stem(p: Poly<CQuat>) -> StemPoly {
    // E is rejected in stem mode, so every coordinate is real
    p.map(|c| Quaternion { c: c.c.clone().map(|x| x.re) })
}

pub fn parse_stem(text: &str) -> Result<StemPoly, ParseError> {
    Ok(real_stem(parse_ast(text, Mode::Stem)?.normalize()))
}

pub fn parse_point(text: &str) -> Result<CQuat, ParseError> {
    Ok(parse_ast(text, Mode::Point)?.normalize().coeff(0))
}

/// Parses `( <expr> ; <expr> )`.
pub fn parse_pair(text: &str) -> Result<R3StemPoly, ParseError> {
    let mut p = Parser::new(text, Mode::Stem)?;
    p.expect(Tok::LParen, "'(' opening a pair")?;
    let first = p.expr()?;
    p.expect(Tok::Semi, "';'")?;
    // each component has its own variable spelling
    p.var = None;
    let second = p.expr()?;
    p.expect(Tok::RParen, "')'")?;
    p.finish()?;
    Ok(R3StemPoly::new(real_stem(first.normalize()), real_stem(second.normalize())))
}

pub fn render_pair(f: &R3StemPoly) -> String {
    format!("({} ; {})", f.first, f.second)
}
