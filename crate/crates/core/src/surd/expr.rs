//! Radical expression trees: rationals combined with + - * /, square roots
//! and cube roots. This is the syntax Roth's printed solutions are encoded
//! in: `sqrt(...)`, `cbrt(...)`, rational literals `a/b`.

use crate::exact::{Int, Rational};
use crate::surd::interval::{EvalError, RatInterval};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalExpr {
    Num(Rational),
    Add(Box<RadicalExpr>, Box<RadicalExpr>),
    Sub(Box<RadicalExpr>, Box<RadicalExpr>),
    Mul(Box<RadicalExpr>, Box<RadicalExpr>),
    Div(Box<RadicalExpr>, Box<RadicalExpr>),
    Neg(Box<RadicalExpr>),
    Sqrt(Box<RadicalExpr>),
    Cbrt(Box<RadicalExpr>),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {at}: {msg}")]
pub struct ExprParseError {
    pub at: usize,
    pub msg: String,
}

impl RadicalExpr {
    pub fn num_int(n: i64) -> Self {
        RadicalExpr::Num(Rational::from_integer(Int::from(n)))
    }

    pub fn num(q: Rational) -> Self {
        RadicalExpr::Num(q)
    }

    pub fn add(self, rhs: Self) -> Self {
        RadicalExpr::Add(Box::new(self), Box::new(rhs))
    }

    pub fn sub(self, rhs: Self) -> Self {
        RadicalExpr::Sub(Box::new(self), Box::new(rhs))
    }

    pub fn mul(self, rhs: Self) -> Self {
        RadicalExpr::Mul(Box::new(self), Box::new(rhs))
    }

    pub fn div(self, rhs: Self) -> Self {
        RadicalExpr::Div(Box::new(self), Box::new(rhs))
    }

    pub fn sqrt(self) -> Self {
        RadicalExpr::Sqrt(Box::new(self))
    }

    pub fn cbrt(self) -> Self {
        RadicalExpr::Cbrt(Box::new(self))
    }

    pub fn contains_cbrt(&self) -> bool {
        match self {
            RadicalExpr::Num(_) => false,
            RadicalExpr::Cbrt(_) => true,
            RadicalExpr::Neg(e) | RadicalExpr::Sqrt(e) => e.contains_cbrt(),
            RadicalExpr::Add(a, b)
            | RadicalExpr::Sub(a, b)
            | RadicalExpr::Mul(a, b)
            | RadicalExpr::Div(a, b) => a.contains_cbrt() || b.contains_cbrt(),
        }
    }

    /// Certified enclosure of the value at the given working precision.
    pub fn eval_interval(&self, prec: u32) -> Result<RatInterval, EvalError> {
        match self {
            RadicalExpr::Num(q) => Ok(RatInterval::point(q.clone())),
            RadicalExpr::Add(a, b) => Ok(a.eval_interval(prec)?.add(&b.eval_interval(prec)?)),
            RadicalExpr::Sub(a, b) => Ok(a.eval_interval(prec)?.sub(&b.eval_interval(prec)?)),
            RadicalExpr::Mul(a, b) => Ok(a.eval_interval(prec)?.mul(&b.eval_interval(prec)?)),
            RadicalExpr::Div(a, b) => {
                let den = b.eval_interval(prec)?;
                a.eval_interval(prec)?.div(&den, &b.to_string())
            }
            RadicalExpr::Neg(e) => Ok(e.eval_interval(prec)?.neg()),
            RadicalExpr::Sqrt(e) => e.eval_interval(prec)?.sqrt(prec, &e.to_string()),
            RadicalExpr::Cbrt(e) => Ok(e.eval_interval(prec)?.cbrt(prec)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            RadicalExpr::Add(..) | RadicalExpr::Sub(..) => 1,
            RadicalExpr::Mul(..) | RadicalExpr::Div(..) => 2,
            RadicalExpr::Neg(..) => 3,
            RadicalExpr::Num(_) | RadicalExpr::Sqrt(_) | RadicalExpr::Cbrt(_) => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        let parens = prec < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            RadicalExpr::Num(q) => {
                if q.is_negative() && min > 1 && !parens {
                    write!(f, "({q})")?;
                } else if q.is_integer() {
                    write!(f, "{}", q.numer())?;
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())?;
                }
            }
            RadicalExpr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, "+")?;
                b.fmt_prec(f, 2)?;
            }
            RadicalExpr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, "-")?;
                b.fmt_prec(f, 2)?;
            }
            RadicalExpr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)?;
            }
            RadicalExpr::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "/")?;
                b.fmt_prec(f, 3)?;
            }
            RadicalExpr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 3)?;
            }
            RadicalExpr::Sqrt(e) => {
                write!(f, "sqrt(")?;
                e.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
            RadicalExpr::Cbrt(e) => {
                write!(f, "cbrt(")?;
                e.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

struct ExprParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, ExprParseError> {
        Err(ExprParseError {
            at: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ExprParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            self.err(&format!("expected '{}'", b as char))
        }
    }

    fn integer(&mut self) -> Result<Int, ExprParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a digit");
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .unwrap())
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        while end < self.bytes.len() && self.bytes[end].is_ascii_alphabetic() {
            end += 1;
        }
        (end > start).then(|| {
            self.pos = end;
            std::str::from_utf8(&self.bytes[start..end]).unwrap()
        })
    }

    fn atom(&mut self) -> Result<RadicalExpr, ExprParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RadicalExpr::Num(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                let name = self.ident().unwrap();
                let inner = |p: &mut Self| -> Result<RadicalExpr, ExprParseError> {
                    p.expect(b'(')?;
                    let e = p.expr()?;
                    p.expect(b')')?;
                    Ok(e)
                };
                match name {
                    "sqrt" => Ok(inner(self)?.sqrt()),
                    "cbrt" => Ok(inner(self)?.cbrt()),
                    _ => {
                        self.pos = at;
                        self.err(&format!("unknown function `{name}` (expected sqrt or cbrt)"))
                    }
                }
            }
            _ => self.err("expected a number, '(' or sqrt/cbrt"),
        }
    }

    fn unary(&mut self) -> Result<RadicalExpr, ExprParseError> {
        if self.eat(b'-') {
            Ok(RadicalExpr::Neg(Box::new(self.unary()?)))
        } else {
            self.atom()
        }
    }

    fn product(&mut self) -> Result<RadicalExpr, ExprParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.div(self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn expr(&mut self) -> Result<RadicalExpr, ExprParseError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(self.product()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }
}

impl FromStr for RadicalExpr {
    type Err = ExprParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = ExprParser {
            bytes: s.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn e(s: &str) -> RadicalExpr {
        s.parse().unwrap()
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "sqrt(2088+sqrt(2099520))",
            "12*sqrt((29+9*sqrt(5))/2)",
            "(1+sqrt(5))*sqrt(5-sqrt(5))",
            "3-sqrt(1/2)",
            "sqrt(5)-sqrt(13/20)",
            "2+1/2-sqrt(13/16)",
            "cbrt(19-3*sqrt(33))",
            "-sqrt(2)",
        ] {
            let parsed = e(s);
            let printed = parsed.to_string();
            assert_eq!(e(&printed), parsed, "round trip of {s}");
        }
    }

    #[test]
    fn division_binds_like_multiplication() {
        // a/b*c parses as (a/b)*c
        let x = e("1/2*sqrt(2)");
        let v = x.eval_interval(64).unwrap();
        assert!(v.lo > rat(7, 10) && v.hi < rat(71, 100));
    }

    #[test]
    fn eval_exact_points() {
        assert_eq!(
            e("sqrt(4)").eval_interval(32).unwrap(),
            RatInterval::point(rat_int(2))
        );
        assert_eq!(
            e("cbrt(8)").eval_interval(32).unwrap(),
            RatInterval::point(rat_int(2))
        );
        assert!(matches!(
            e("sqrt(1-2)").eval_interval(32),
            Err(EvalError::NegativeSqrt(_))
        ));
        assert!(matches!(
            e("1/(2-2)").eval_interval(32),
            Err(EvalError::DivisionByZero(_))
        ));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = "sqrt(2".parse::<RadicalExpr>().unwrap_err();
        assert_eq!(err.at, 6);
        let err = "log(2)".parse::<RadicalExpr>().unwrap_err();
        assert!(err.msg.contains("unknown function"));
    }
}
