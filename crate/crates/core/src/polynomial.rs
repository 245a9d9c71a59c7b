//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored by ascending power; the zero polynomial is the
//! empty coefficient list and has no degree.

use crate::exact::{Int, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a monic polynomial")]
    NotMonic,
    #[error("scale factor must be >= 1")]
    BadScale,
    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    /// Coefficients by ascending power; last entry nonzero unless empty.
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// x^k
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Polynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(Int::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero when past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `self = d*q + r` with `deg r < deg d`.
    pub fn divide(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot: Vec<Rational> = Vec::new();
        while rem.len() > dd {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / &lead;
            // subtract factor * x^(k-dd) * d
            for (i, c) in d.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] -= &factor * c;
            }
            quot.push(factor);
            // top coefficient is now exactly zero
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                if rem.len() <= dd {
                    break;
                }
                rem.pop();
                quot.push(Rational::zero());
            }
        }
        quot.reverse();
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Returns `q(z) = d^deg(p) * p(z/d)`; requires a monic input.
    ///
    /// This is the Rechenmeister change of variable x = z/d that clears
    /// denominators while keeping the polynomial monic.
    pub fn scale_substitute(&self, d: u32) -> Result<Polynomial, PolyError> {
        if d == 0 {
            return Err(PolyError::BadScale);
        }
        if !self.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let n = self.degree().unwrap();
        let d = Rational::from_integer(Int::from(d));
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut pow = Rational::one();
        // coefficient of z^k is c_k * d^(n-k); build descending then reverse
        let mut desc = Vec::with_capacity(n + 1);
        for k in (0..=n).rev() {
            desc.push(self.coeff(k) * &pow);
            pow *= &d;
        }
        desc.reverse();
        coeffs.extend(desc);
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// Descartes count: sign changes in the nonzero coefficient sequence.
    pub fn sign_variations(&self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut changes = 0;
        let mut last: Option<bool> = None;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let pos = c.is_positive();
            if let Some(prev) = last {
                if prev != pos {
                    changes += 1;
                }
            }
            last = Some(pos);
        }
        Ok(changes)
    }

    /// Divides out x^k, returning (k, cofactor); k is the multiplicity of the
    /// root 0.
    pub fn strip_zero_roots(&self) -> (usize, Polynomial) {
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0);
        (k, Polynomial::from_coeffs(self.coeffs[k..].to_vec()))
    }

    pub fn display<'a>(&'a self, var: char) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    var: char,
}

fn fmt_coeff_abs(c: &Rational) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.numer().to_string()
    } else {
        let whole = c.numer() / c.denom();
        if whole.is_zero() {
            format!("{}/{}", c.numer(), c.denom())
        } else {
            let frac = c.numer() - &whole * c.denom();
            format!("({}+{}/{})", whole, frac, c.denom())
        }
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let n = self.poly.degree().unwrap();
        let mut first = true;
        for k in (0..=n).rev() {
            let c = self.poly.coeff(k);
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = fmt_coeff_abs(&c);
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != "1" {
                    write!(f, "{mag}")?;
                }
                write!(f, "{}", self.var)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display('x').fmt(f)
    }
}

// Plain-text polynomial syntax: signed integer or fraction coefficients with
// `x^k` powers, e.g. `x^5 - 12x^4 + 10x^3 + 248x^2 - 423x - 924`; mixed
// numbers appear parenthesized as `(49+1/2)`.
struct PolyParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    var: Option<u8>,
}

impl<'a> PolyParser<'a> {
    fn new(text: &'a str) -> Self {
        PolyParser {
            bytes: text.as_bytes(),
            pos: 0,
            var: None,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Parse {
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

    fn integer(&mut self) -> Result<Int, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a digit");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse::<Int>().unwrap())
    }

    // int [ '/' int ]
    fn rational(&mut self) -> Result<Rational, PolyError> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.integer()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    // '(' rational (('+'|'-') rational)* ')'
    fn paren_number(&mut self) -> Result<Rational, PolyError> {
        self.pos += 1; // consume '('
        let mut acc = self.rational()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.rational()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.rational()?;
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(acc);
                }
                _ => return self.err("expected '+', '-' or ')' in parenthesized coefficient"),
            }
        }
    }

    fn variable(&mut self) -> Result<bool, PolyError> {
        match self.peek() {
            Some(c) if c == b'x' || c == b'z' => {
                match self.var {
                    Some(v) if v != c => return self.err("mixed variable names"),
                    None => self.var = Some(c),
                    _ => {}
                }
                self.pos += 1;
                Ok(true)
            }
            _ => Ok(false),
        }
    }

    fn term(&mut self) -> Result<(Rational, usize), PolyError> {
        let coeff = match self.peek() {
            Some(b'(') => self.paren_number()?,
            Some(c) if c.is_ascii_digit() => self.rational()?,
            Some(c) if c == b'x' || c == b'z' => Rational::one(),
            _ => return self.err("expected a coefficient or variable"),
        };
        if !self.variable()? {
            return Ok((coeff, 0));
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            match e.to_string().parse::<usize>() {
                Ok(e) if e <= 64 => e,
                _ => return self.err("exponent out of range"),
            }
        } else {
            1
        };
        Ok((coeff, exp))
    }

    fn parse(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc: Vec<Rational> = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (c, k) = self.term()?;
            if acc.len() <= k {
                acc.resize(k + 1, Rational::zero());
            }
            if negative {
                acc[k] -= c;
            } else {
                acc[k] += c;
            }
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                None => break,
                _ => return self.err("expected '+', '-' or end of input"),
            }
        }
        Ok(Polynomial::from_coeffs(acc))
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = PolyParser::new(s);
        p.skip_ws();
        if p.pos == p.bytes.len() {
            return Err(PolyError::Parse {
                at: 0,
                msg: "empty input".into(),
            });
        }
        // bare "0" is the zero polynomial
        p.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let quintic = p("x^5 - 12x^4 + 10x^3 + 248x^2 - 423x - 924");
        assert_eq!(
            quintic,
            Polynomial::from_i64(&[-924, -423, 248, 10, -12, 1])
        );
        assert_eq!(
            quintic.display('x').to_string(),
            "x^5 - 12x^4 + 10x^3 + 248x^2 - 423x - 924"
        );
        let mixed = p("x^5-2x^4-(49+1/2)x^3+(156+1/2)x^2-(509+11/16)x+(1522+1/2)");
        assert_eq!(mixed.coeff(3), rat(-99, 2));
        assert_eq!(mixed.coeff(1), rat(-8155, 16));
        assert_eq!(
            mixed.display('x').to_string(),
            "x^5 - 2x^4 - (49+1/2)x^3 + (156+1/2)x^2 - (509+11/16)x + (1522+1/2)"
        );
        assert_eq!(p("0"), Polynomial::zero());
        assert!("x + ".parse::<Polynomial>().is_err());
        assert!("y^2".parse::<Polynomial>().is_err());
    }

    #[test]
    fn evaluate_examples() {
        let p_i = p("x^5 - 12x^4 + 10x^3 + 248x^2 - 423x - 924");
        assert_eq!(p_i.evaluate(&rat_int(-4)), rat_int(0));
        assert_eq!(Polynomial::zero().evaluate(&rat(22, 7)), rat_int(0));
        // frozen from the trial-division/Horner oracle
        let p_xxiii = p("x^5 - 8x^4 - 20x^3 + 416x^2 - 2700x + 7072");
        assert_eq!(p_xxiii.evaluate(&rat_int(8)), rat_int(1856));
    }

    #[test]
    fn divide_examples() {
        let p_i = p("x^5 - 12x^4 + 10x^3 + 248x^2 - 423x - 924");
        let (q, r) = p_i.divide(&p("x^2 - 12x + 33")).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&p("x^2 - 12x + 33")), p_i);

        let p_xxiii = p("x^5 - 8x^4 - 20x^3 + 416x^2 - 2700x + 7072");
        let (_, r) = p_xxiii.divide(&p("x^2 - 12x + 34")).unwrap();
        assert!(r.is_zero());

        let (q, r) = p_xxiii.divide(&Polynomial::one()).unwrap();
        assert_eq!(q, p_xxiii);
        assert!(r.is_zero());

        assert_eq!(
            p_xxiii.divide(&Polynomial::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn scale_substitute_examples() {
        let p26 = p("x^5-4x^4-(29+1/2)x^3+(95+1/2)x^2-(334+11/16)x+(1141+7/8)");
        assert_eq!(
            p26.scale_substitute(2).unwrap(),
            p("z^5 - 8z^4 - 118z^3 + 764z^2 - 5355z + 36540")
        );
        let p27 = p("x^5-2x^4-(49+1/2)x^3+(156+1/2)x^2-(509+11/16)x+(1522+1/2)");
        assert_eq!(
            p27.scale_substitute(2).unwrap(),
            p("z^5 - 4z^4 - 198z^3 + 1252z^2 - 8155z + 48720")
        );
        let monic = p("x^3 - 2x + 5");
        assert_eq!(monic.scale_substitute(1).unwrap(), monic);
        assert_eq!(
            p("2x^2 + 1").scale_substitute(2),
            Err(PolyError::NotMonic)
        );
    }

    #[test]
    fn sign_variation_examples() {
        let sextic = p("x^6 + 22x^5 - 13x^4 - 106x^3 - 1583x^2 - 5185x");
        assert_eq!(sextic.sign_variations().unwrap(), 1);
        assert_eq!(p("x^2 + x + 9").sign_variations().unwrap(), 0);
        assert_eq!(p("x^2 - 12x + 34").sign_variations().unwrap(), 2);
        assert!(Polynomial::zero().sign_variations().is_err());
    }

    #[test]
    fn strip_zero_roots_works() {
        let (k, q) = p("x^6 + 22x^5 - 13x^4").strip_zero_roots();
        assert_eq!(k, 4);
        assert_eq!(q, p("x^2 + 22x - 13"));
        let (k, q) = p("x^2 + 1").strip_zero_roots();
        assert_eq!(k, 0);
        assert_eq!(q, p("x^2 + 1"));
    }
}
