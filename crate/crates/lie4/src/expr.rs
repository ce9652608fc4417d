//! Tiny symbolic expressions over named rational parameters.
//!
//! Structure-constant tables, automorphism templates, and metric patterns are
//! all stored as these expressions so they can be evaluated exactly, printed,
//! and round-tripped through JSON.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{rint, Rat};
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(Rat),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("division by zero while evaluating")]
    DivByZero,
    #[error("parse error at byte {0}: {1}")]
    Parse(usize, String),
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Const(rint(n))
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn is_zero_literal(&self) -> bool {
        matches!(self, Expr::Const(c) if c.is_zero())
    }

    pub fn eval(&self, env: &BTreeMap<String, Rat>) -> Result<Rat, ExprError> {
        match self {
            Expr::Const(c) => Ok(c.clone()),
            Expr::Var(v) => env
                .get(v)
                .cloned()
                .ok_or_else(|| ExprError::UnknownVar(v.clone())),
            Expr::Add(a, b) => Ok(a.eval(env)? + b.eval(env)?),
            Expr::Sub(a, b) => Ok(a.eval(env)? - b.eval(env)?),
            Expr::Mul(a, b) => Ok(a.eval(env)? * b.eval(env)?),
            Expr::Div(a, b) => {
                let d = b.eval(env)?;
                if d.is_zero() {
                    return Err(ExprError::DivByZero);
                }
                Ok(a.eval(env)? / d)
            }
            Expr::Pow(a, k) => {
                let base = a.eval(env)?;
                let mut acc = Rat::one();
                for _ in 0..*k {
                    acc *= &base;
                }
                Ok(acc)
            }
            Expr::Neg(a) => Ok(-a.eval(env)?),
        }
    }

    /// Variables appearing in the expression, sorted.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(v) => out.push(v.clone()),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Pow(a, _) | Expr::Neg(a) => a.collect_vars(out),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{}", crate::linalg::rat_to_string(c)),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Pow(a, k) => write!(f, "{a}^{k}"),
            Expr::Neg(a) => write!(f, "-{a}"),
        }
    }
}

/// Recursive-descent parser for `+ - * / ^`, parentheses, integers, and
/// identifiers like `alpha` or `a12`.
pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        bytes: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(ExprError::Parse(p.pos, "trailing input".into()));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(ExprError::Parse(self.pos, "expected exponent".into()));
            }
            let k: u32 = std::str::from_utf8(&self.bytes[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| ExprError::Parse(start, "bad exponent".into()))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(ExprError::Parse(self.pos, "expected `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: i64 = std::str::from_utf8(&self.bytes[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| ExprError::Parse(start, "integer overflow".into()))?;
                Ok(Expr::int(n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Expr::Var(
                    std::str::from_utf8(&self.bytes[start..self.pos])
                        .unwrap()
                        .to_string(),
                ))
            }
            _ => Err(ExprError::Parse(self.pos, "expected atom".into())),
        }
    }
}

/// Convenience: parse at catalog-construction time, panicking on typos.
pub fn e(src: &str) -> Expr {
    parse(src).unwrap_or_else(|err| panic!("bad builtin expression `{src}`: {err}"))
}

pub fn env(pairs: &[(&str, Rat)]) -> BTreeMap<String, Rat> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn parse_and_eval() {
        let ex = parse("-a12*a6/beta + 2").unwrap();
        let env = env(&[("a12", rat(3, 1)), ("a6", rat(2, 1)), ("beta", rat(1, 2))]);
        assert_eq!(ex.eval(&env).unwrap(), rat(-10, 1));
        assert_eq!(ex.vars(), vec!["a12", "a6", "beta"]);
    }

    #[test]
    fn parse_pow_and_parens() {
        let ex = parse("(1+beta)^2 * alpha").unwrap();
        let env = env(&[("beta", rat(1, 1)), ("alpha", rat(1, 4))]);
        assert_eq!(ex.eval(&env).unwrap(), rat(1, 1));
    }

    #[test]
    fn div_by_zero_and_unknowns() {
        let ex = parse("1/beta").unwrap();
        assert_eq!(
            ex.eval(&env(&[("beta", rat(0, 1))])),
            Err(ExprError::DivByZero)
        );
        assert_eq!(
            ex.eval(&env(&[])),
            Err(ExprError::UnknownVar("beta".into()))
        );
    }

    #[test]
    fn display_reparses() {
        for src in ["-a12*a6/beta", "(1+beta)^2*alpha", "2*alpha - 1"] {
            let ex = parse(src).unwrap();
            let re = parse(&ex.to_string()).unwrap();
            let env = env(&[
                ("a12", rat(5, 7)),
                ("a6", rat(-2, 3)),
                ("beta", rat(9, 4)),
                ("alpha", rat(1, 3)),
            ]);
            assert_eq!(ex.eval(&env), re.eval(&env));
        }
    }
}
