//! Triangle arithmetic: `#` is the pre-sum, `+` the sum, unary `-` the
//! inverse, `half(e)` the half. Operators associate to the left and do not
//! mix without parentheses.

use std::collections::BTreeMap;

use serde_json::Value;
use trigroup::group::{half, presum_coords, presum_geometric, sum, Frame, TriangleElement};
use trigroup::kernel::parse_scalar;

use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Presum,
    Sum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Var(String),
    Neg(Box<Expr>),
    Half(Box<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Op(Op),
    Minus,
    Open,
    Close,
}

fn parse_error(msg: impl Into<String>) -> HarnessError {
    HarnessError::Parse(msg.into())
}

fn tokenize(src: &str) -> Result<Vec<Token>, HarnessError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '#' => out.push(Token::Op(Op::Presum)),
            '+' => out.push(Token::Op(Op::Sum)),
            '-' => out.push(Token::Minus),
            '(' => out.push(Token::Open),
            ')' => out.push(Token::Close),
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = c.to_string();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(name));
            }
            other => return Err(parse_error(format!("unexpected {other:?} at offset {pos}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
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

    fn expect_close(&mut self) -> Result<(), HarnessError> {
        match self.next() {
            Some(Token::Close) => Ok(()),
            _ => Err(parse_error("expected ')'")),
        }
    }

    fn expr(&mut self) -> Result<Expr, HarnessError> {
        let mut lhs = self.unary()?;
        let mut seen: Option<Op> = None;
        while let Some(Token::Op(op)) = self.peek().cloned() {
            if seen.is_some_and(|s| s != op) {
                return Err(parse_error("'#' and '+' cannot be mixed without parentheses"));
            }
            seen = Some(op);
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, HarnessError> {
        match self.next() {
            Some(Token::Minus) => Ok(Expr::Neg(Box::new(self.unary()?))),
            Some(Token::Open) => {
                let e = self.expr()?;
                self.expect_close()?;
                Ok(e)
            }
            Some(Token::Ident(name)) if name == "half" && self.peek() == Some(&Token::Open) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_close()?;
                Ok(Expr::Half(Box::new(e)))
            }
            Some(Token::Ident(name)) => Ok(Expr::Var(name)),
            Some(t) => Err(parse_error(format!("unexpected token {t:?}"))),
            None => Err(parse_error("unexpected end of expression")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, HarnessError> {
    let mut p = Parser { tokens: tokenize(src)?, pos: 0 };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(parse_error(format!("trailing input after token {}", p.pos)));
    }
    Ok(e)
}

/// A named element: either element JSON or a bare `delta` array of
/// rational strings or integers.
pub fn parse_element(v: &Value) -> Result<TriangleElement, HarnessError> {
    match v {
        Value::Array(items) if items.len() == 3 => {
            let mut d = Vec::with_capacity(3);
            for item in items {
                let s = match item {
                    Value::String(s) => s.clone(),
                    Value::Number(n) if n.is_i64() => n.to_string(),
                    other => return Err(parse_error(format!("not an exact rational: {other}"))),
                };
                d.push(parse_scalar(&s)?);
            }
            Ok(TriangleElement::new(d.try_into().expect("three")))
        }
        Value::Object(_) => serde_json::from_value(v.clone()).map_err(|e| parse_error(e.to_string())),
        other => Err(parse_error(format!("not an element: {other}"))),
    }
}

pub fn parse_inputs(v: &Value) -> Result<BTreeMap<String, TriangleElement>, HarnessError> {
    let Value::Object(map) = v else { return Err(parse_error("inputs must be a JSON object")) };
    map.iter().map(|(k, v)| Ok((k.clone(), parse_element(v)?))).collect()
}

/// How `#` is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Coordinates,
    /// Through the geometric construction; fails where no rule exists.
    Geometric,
}

pub fn evaluate(e: &Expr, inputs: &BTreeMap<String, TriangleElement>, mode: Mode) -> Result<TriangleElement, HarnessError> {
    Ok(match e {
        Expr::Var(name) => inputs.get(name).cloned().ok_or_else(|| parse_error(format!("unknown input {name}")))?,
        Expr::Neg(x) => -&evaluate(x, inputs, mode)?,
        Expr::Half(x) => half(&evaluate(x, inputs, mode)?)?,
        Expr::Bin(op, a, b) => {
            let (x, y) = (evaluate(a, inputs, mode)?, evaluate(b, inputs, mode)?);
            match (op, mode) {
                (Op::Sum, _) => sum(&x, &y),
                (Op::Presum, Mode::Coordinates) => presum_coords(&x, &y),
                (Op::Presum, Mode::Geometric) => presum_geometric(&Frame::standard(), &x, &y)?.element,
            }
        }
    })
}

pub fn eval_expression(src: &str, inputs: &Value, mode: Mode) -> Result<TriangleElement, HarnessError> {
    evaluate(&parse(src)?, &parse_inputs(inputs)?, mode)
}
