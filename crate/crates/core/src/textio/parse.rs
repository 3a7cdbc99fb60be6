//! Expression grammar:
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*"? factor)*              juxtaposition is the diamond product
//! factor := rational | "lambda" ["^" natural] | letter
//!         | "P" "(" expr ")" | "[" expr "]"    synonyms for the operator P
//!         | "S" "(" expr ")" | "cop" "(" expr ")" | "eps" "(" expr ")"
//!         | "(" expr ")"
//! rational := integer ["/" positive-integer]
//! ```
//!
//! The integer `1` doubles as the unit word.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{diamond, rb_operator, LinComb};
use crate::coalgebra::{coproduct, counit, tensor2_diamond, Tensor2};
use crate::coeffs::{Coeff, WeightMode};
use crate::error::{Error, Result};
use crate::hopf::Antipode;
use crate::textio::print::{print_lincomb, print_tensor2};
use crate::words::{is_identifier, Letter};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "`{n}`"),
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Plus => f.write_str("`+`"),
            Token::Minus => f.write_str("`-`"),
            Token::Star => f.write_str("`*`"),
            Token::Slash => f.write_str("`/`"),
            Token::Caret => f.write_str("`^`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::LBracket => f.write_str("`[`"),
            Token::RBracket => f.write_str("`]`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'/' => Some(Token::Slash),
            b'^' => Some(Token::Caret),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            b'[' => Some(Token::LBracket),
            b']' => Some(Token::RBracket),
            _ => None,
        };
        if let Some(tok) = single {
            tokens.push((tok, start));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            tokens.push((Token::Int(n), start));
        } else if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            tokens.push((Token::Ident(text[start..i].to_owned()), start));
        } else {
            let ch = text[start..].chars().next().expect("non-empty");
            return Err(Error::Syntax {
                offset: start,
                message: format!("unexpected character `{ch}`"),
            });
        }
    }
    Ok(tokens)
}

/// Operators that take a parenthesized argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    /// `P(...)` or `[...]`.
    RotaBaxter,
    Antipode,
    Coproduct,
    Counit,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Rational(BigRational),
    Lambda(u32),
    Letter(Letter),
    Apply(Operator, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    /// Diamond product (written `*` or by juxtaposition).
    Mul(Box<Expr>, Box<Expr>),
}

/// A parsed expression; `offset` is the byte offset where it starts.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub offset: usize,
}

impl Expr {
    fn new(kind: ExprKind, offset: usize) -> Self {
        Self { kind, offset }
    }

    /// Whether any `S`, `cop` or `eps` occurs.
    pub fn uses_operator(&self, op: Operator) -> bool {
        match &self.kind {
            ExprKind::Rational(_) | ExprKind::Lambda(_) | ExprKind::Letter(_) => false,
            ExprKind::Apply(o, e) => *o == op || e.uses_operator(op),
            ExprKind::Neg(e) => e.uses_operator(op),
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) => {
                a.uses_operator(op) || b.uses_operator(op)
            }
        }
    }
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
    alphabet: Option<&'a BTreeSet<Letter>>,
}

/// Parses without restricting letters.
pub fn parse(text: &str) -> Result<Expr> {
    parse_with_alphabet(text, None)
}

/// Parses; when `alphabet` is given, any other letter is an error.
pub fn parse_with_alphabet(text: &str, alphabet: Option<&BTreeSet<Letter>>) -> Result<Expr> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
        end: text.len(),
        alphabet,
    };
    let expr = parser.expr()?;
    if let Some((tok, offset)) = parser.tokens.get(parser.pos) {
        return Err(Error::Syntax {
            offset: *offset,
            message: format!("unexpected {tok} after expression"),
        });
    }
    Ok(expr)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> Option<(Token, usize)> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        tok
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(tok) => format!("found {tok}"),
            None => "found end of input".to_owned(),
        }
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected {want}, {}", self.found()))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let start = self.offset();
        let mut lhs = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            Expr::new(ExprKind::Neg(Box::new(self.term()?)), start)
        } else {
            self.term()?
        };
        loop {
            let kind: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
                Some(Token::Plus) => ExprKind::Add,
                Some(Token::Minus) => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::new(kind(Box::new(lhs), Box::new(rhs)), start);
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Int(_) | Token::Ident(_) | Token::LParen | Token::LBracket)
        )
    }

    fn term(&mut self) -> Result<Expr> {
        let start = self.offset();
        let mut lhs = self.factor()?;
        loop {
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(lhs);
            }
            let rhs = self.factor()?;
            lhs = Expr::new(ExprKind::Mul(Box::new(lhs), Box::new(rhs)), start);
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let start = self.offset();
        let Some((tok, _)) = self.bump() else {
            return self.error("expected expression, found end of input");
        };
        let kind = match tok {
            Token::Int(n) => {
                let mut value = BigRational::from_integer(n);
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.bump() {
                        Some((Token::Int(d), _)) if !d.is_zero() => {
                            value /= BigRational::from_integer(d);
                        }
                        _ => {
                            self.pos -= 1;
                            return self.error("expected a positive denominator after `/`");
                        }
                    }
                }
                ExprKind::Rational(value)
            }
            Token::LParen => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                return Ok(Expr::new(inner.kind, start));
            }
            Token::LBracket => {
                let inner = self.expr()?;
                self.expect(Token::RBracket)?;
                ExprKind::Apply(Operator::RotaBaxter, Box::new(inner))
            }
            Token::Ident(name) => match name.as_str() {
                "lambda" => {
                    let mut exp = 1;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        match self.bump() {
                            Some((Token::Int(n), _)) => match n.to_u32() {
                                Some(e) => exp = e,
                                None => {
                                    self.pos -= 1;
                                    return self.error("exponent too large");
                                }
                            },
                            _ => {
                                self.pos -= 1;
                                return self.error(format!(
                                    "expected an exponent after `^`, {}",
                                    self.found()
                                ));
                            }
                        }
                    }
                    ExprKind::Lambda(exp)
                }
                "P" | "S" | "cop" | "eps" => {
                    let op = match name.as_str() {
                        "P" => Operator::RotaBaxter,
                        "S" => Operator::Antipode,
                        "cop" => Operator::Coproduct,
                        _ => Operator::Counit,
                    };
                    self.expect(Token::LParen)?;
                    let inner = self.expr()?;
                    self.expect(Token::RParen)?;
                    ExprKind::Apply(op, Box::new(inner))
                }
                _ => {
                    debug_assert!(is_identifier(&name));
                    let letter = Letter::new(&name).map_err(|_| Error::Syntax {
                        offset: start,
                        message: format!("invalid letter `{name}`"),
                    })?;
                    if let Some(alphabet) = self.alphabet {
                        if !alphabet.contains(&letter) {
                            return Err(Error::UnknownLetter {
                                name,
                                offset: start,
                            });
                        }
                    }
                    ExprKind::Letter(letter)
                }
            },
            other => {
                self.pos -= 1;
                return self.error(format!("expected expression, found {other}"));
            }
        };
        Ok(Expr::new(kind, start))
    }
}

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Coeff),
    Element(LinComb),
    Tensor(Tensor2),
}

impl Value {
    /// Scalars are read as multiples of the unit word; tensors are refused.
    pub fn into_element(self) -> Option<LinComb> {
        match self {
            Value::Scalar(c) => Some(LinComb::scalar(c)),
            Value::Element(a) => Some(a),
            Value::Tensor(_) => None,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "element",
            Value::Tensor(_) => "tensor",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => f.write_str(&print_lincomb(&LinComb::scalar(c.clone()))),
            Value::Element(a) => f.write_str(&print_lincomb(a)),
            Value::Tensor(t) => f.write_str(&print_tensor2(t)),
        }
    }
}

/// Evaluates expressions under a fixed weight mode.
#[derive(Debug)]
pub struct Evaluator {
    mode: WeightMode,
    antipode: Option<Antipode>,
}

impl Evaluator {
    pub fn new(mode: WeightMode) -> Self {
        let antipode = Antipode::new(&mode).ok();
        Self { mode, antipode }
    }

    pub fn mode(&self) -> &WeightMode {
        &self.mode
    }

    pub fn eval(&self, expr: &Expr) -> Result<Value> {
        let at = expr.offset;
        let type_error = |message: String| {
            Err(Error::Type {
                offset: at,
                message,
            })
        };
        Ok(match &expr.kind {
            ExprKind::Rational(r) => Value::Scalar(Coeff::constant(r.clone())),
            ExprKind::Lambda(e) => {
                let l = self.mode.lambda();
                Value::Scalar((0..*e).fold(Coeff::one(), |acc, _| &acc * &l))
            }
            ExprKind::Letter(l) => Value::Element(LinComb::letter(l.clone())),
            ExprKind::Neg(e) => match self.eval(e)? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Element(a) => Value::Element(-a),
                Value::Tensor(t) => Value::Tensor(-t),
            },
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                let lhs = self.eval(a)?;
                let mut rhs = self.eval(b)?;
                if matches!(expr.kind, ExprKind::Sub(..)) {
                    rhs = match rhs {
                        Value::Scalar(c) => Value::Scalar(-c),
                        Value::Element(x) => Value::Element(-x),
                        Value::Tensor(t) => Value::Tensor(-t),
                    };
                }
                match (lhs, rhs) {
                    (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
                    (Value::Tensor(x), Value::Tensor(y)) => Value::Tensor(x + y),
                    (Value::Tensor(_), other) | (other, Value::Tensor(_)) => {
                        return type_error(format!("cannot add a tensor and a {}", other.kind()));
                    }
                    (x, y) => Value::Element(
                        x.into_element().expect("not a tensor")
                            + y.into_element().expect("not a tensor"),
                    ),
                }
            }
            ExprKind::Mul(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
                (Value::Scalar(c), Value::Element(x)) | (Value::Element(x), Value::Scalar(c)) => {
                    Value::Element(x.scale(&c).specialize(&self.mode))
                }
                (Value::Element(x), Value::Element(y)) => {
                    Value::Element(diamond(&x, &y, &self.mode))
                }
                (Value::Scalar(c), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(c)) => {
                    Value::Tensor(t.scale(&c).specialize(&self.mode))
                }
                (Value::Tensor(s), Value::Tensor(t)) => {
                    Value::Tensor(tensor2_diamond(&s, &t, &self.mode))
                }
                _ => return type_error("cannot multiply an element by a tensor".into()),
            },
            ExprKind::Apply(op, arg) => {
                let value = self.eval(arg)?;
                let Some(x) = value.into_element() else {
                    return type_error(format!("{op:?} expects an element, not a tensor"));
                };
                match op {
                    Operator::RotaBaxter => Value::Element(rb_operator(&x)),
                    Operator::Coproduct => Value::Tensor(coproduct(&x, &self.mode)),
                    Operator::Counit => Value::Scalar(counit(&x.specialize(&self.mode))),
                    Operator::Antipode => match &self.antipode {
                        Some(s) => Value::Element(s.apply(&x)),
                        None => return Err(Error::WeightNotZero(self.mode.clone())),
                    },
                }
            }
        })
    }
}

/// Parses and evaluates in one step.
pub fn evaluate(
    text: &str,
    mode: &WeightMode,
    alphabet: Option<&BTreeSet<Letter>>,
) -> Result<Value> {
    let expr = parse_with_alphabet(text, alphabet)?;
    Evaluator::new(mode.clone()).eval(&expr)
}

/// Parses and evaluates text that must denote an element (not a tensor).
pub fn parse_lincomb(text: &str, mode: &WeightMode) -> Result<LinComb> {
    let expr = parse(text)?;
    Evaluator::new(mode.clone())
        .eval(&expr)?
        .into_element()
        .ok_or(Error::Type {
            offset: 0,
            message: "expected an element, found a tensor".into(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Rbw;

    fn eval(text: &str) -> Value {
        evaluate(text, &WeightMode::Symbolic, None).unwrap()
    }

    fn letter(n: &str) -> Letter {
        Letter::new(n).unwrap()
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(eval("P(1)*P(1)").to_string(), "lambda*P(1) + 2*P(P(1))");
        assert_eq!(eval("[x] y + 2 x").to_string(), "2*x + P(x)*y");
        assert_eq!(eval("[x] y + 2 x"), eval("P(x)*y + 2*x"));
        assert_eq!(
            parse("P("),
            Err(Error::Syntax {
                offset: 2,
                message: "expected expression, found end of input".into()
            })
        );
    }

    #[test]
    fn scalars_and_units() {
        assert_eq!(eval("1"), Value::Scalar(Coeff::one()));
        assert_eq!(eval("-1/3").to_string(), "-1/3");
        assert_eq!(eval("lambda^2 - lambda").to_string(), "-lambda + lambda^2");
        assert_eq!(eval("2 x - 2*x"), Value::Element(LinComb::zero()));
        assert_eq!(eval("(1 + lambda) x").to_string(), "(1 + lambda)*x");
        assert_eq!(eval("eps(3 + x)"), Value::Scalar(Coeff::integer(3)));
    }

    #[test]
    fn weight_specialization() {
        let zero = evaluate("P(1)*P(1)", &WeightMode::zero(), None).unwrap();
        assert_eq!(zero.to_string(), "2*P(P(1))");
        let lam = evaluate("lambda x", &WeightMode::zero(), None).unwrap();
        assert_eq!(lam, Value::Element(LinComb::zero()));
    }

    #[test]
    fn operators() {
        assert_eq!(eval("cop(x)").to_string(), "x (x) 1 + 1 (x) x");
        assert_eq!(eval("cop(1)").to_string(), "1 (x) 1");
        assert_eq!(
            evaluate("S(P(x))", &WeightMode::zero(), None)
                .unwrap()
                .to_string(),
            "-P(x) + x*P(1)"
        );
        assert_eq!(
            evaluate("S(x)", &WeightMode::Symbolic, None),
            Err(Error::WeightNotZero(WeightMode::Symbolic))
        );
        assert!(matches!(
            evaluate("cop(x) + x", &WeightMode::Symbolic, None),
            Err(Error::Type { .. })
        ));
        assert!(matches!(
            evaluate("P(cop(x))", &WeightMode::Symbolic, None),
            Err(Error::Type { .. })
        ));
        assert_eq!(eval("cop(x) cop(y)"), eval("cop(x y)"));
    }

    #[test]
    fn syntax_errors() {
        let offset = |text: &str| match parse(text) {
            Err(Error::Syntax { offset, .. }) => offset,
            other => panic!("{text}: {other:?}"),
        };
        assert_eq!(offset("x +"), 3);
        assert_eq!(offset("(x"), 2);
        assert_eq!(offset("[x)"), 2);
        assert_eq!(offset("x # y"), 2);
        assert_eq!(offset("1/0"), 2);
        assert_eq!(offset("x )"), 2);
        assert_eq!(offset("P x"), 2);
        assert_eq!(offset("lambda^x"), 7);
    }

    #[test]
    fn alphabet_restriction() {
        let alphabet: BTreeSet<_> = [letter("x")].into_iter().collect();
        assert!(parse_with_alphabet("x P(x)", Some(&alphabet)).is_ok());
        assert_eq!(
            parse_with_alphabet("x + y", Some(&alphabet)),
            Err(Error::UnknownLetter {
                name: "y".into(),
                offset: 4
            })
        );
    }

    #[test]
    fn identifiers_are_maximal() {
        let xy = Rbw::letter(letter("xy"));
        assert_eq!(eval("xy"), Value::Element(LinComb::basis(xy)));
        assert_eq!(eval("x y").to_string(), "x*y");
    }
}
