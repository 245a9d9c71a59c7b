//! Interval arithmetic with exact rational endpoints and directed-rounding
//! square/cube roots. Decimal output refines precision until the printed
//! digits are certified.

use crate::exact::{Int, Rational};
use num_integer::Roots;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum EvalError {
    #[error("square root of a negative value in `{0}`")]
    NegativeSqrt(String),
    #[error("division by zero in `{0}`")]
    DivisionByZero(String),
    #[error("cannot certify the result at maximum working precision")]
    PrecisionExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn point(q: Rational) -> Self {
        RatInterval { lo: q.clone(), hi: q }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn neg(&self) -> Self {
        RatInterval::new(-&self.hi, -&self.lo)
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn recip(&self, context: &str) -> Result<Self, EvalError> {
        if self.contains_zero() {
            return Err(EvalError::DivisionByZero(context.to_string()));
        }
        Ok(RatInterval::new(self.hi.recip(), self.lo.recip()))
    }

    pub fn div(&self, other: &Self, context: &str) -> Result<Self, EvalError> {
        Ok(self.mul(&other.recip(context)?))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_negative() {
            RatInterval::new(&self.hi * q, &self.lo * q)
        } else {
            RatInterval::new(&self.lo * q, &self.hi * q)
        }
    }

    /// Directed-rounding square root at 2^-prec resolution. An operand
    /// interval that dips below zero is clamped at zero; a certainly
    /// negative operand is a domain error.
    pub fn sqrt(&self, prec: u32, context: &str) -> Result<Self, EvalError> {
        if self.strictly_negative() {
            return Err(EvalError::NegativeSqrt(context.to_string()));
        }
        let lo = if self.lo.is_negative() {
            Rational::zero()
        } else {
            sqrt_lower(&self.lo, prec)
        };
        let hi = sqrt_upper(&self.hi, prec);
        Ok(RatInterval::new(lo, hi))
    }

    /// Directed-rounding cube root (defined for all reals).
    pub fn cbrt(&self, prec: u32) -> Self {
        RatInterval::new(cbrt_lower(&self.lo, prec), cbrt_upper(&self.hi, prec))
    }

    /// True when the two intervals share no point.
    pub fn disjoint(&self, other: &Self) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }
}

fn shifted(q: &Rational, bits: u32) -> Rational {
    q * Rational::from_integer(Int::one() << bits)
}

/// Largest s/2^prec <= sqrt(q); assumes q >= 0.
fn sqrt_lower(q: &Rational, prec: u32) -> Rational {
    let scaled = shifted(q, 2 * prec);
    let floor = scaled.floor().to_integer();
    let s = floor.sqrt();
    Rational::new(s, Int::one() << prec)
}

/// Smallest s/2^prec >= sqrt(q); assumes q >= 0.
fn sqrt_upper(q: &Rational, prec: u32) -> Rational {
    let scaled = shifted(q, 2 * prec);
    let ceil = scaled.ceil().to_integer();
    let s = ceil.sqrt();
    let s = if &s * &s == ceil { s } else { s + 1 };
    Rational::new(s, Int::one() << prec)
}

fn cbrt_lower(q: &Rational, prec: u32) -> Rational {
    if q.is_negative() {
        return -cbrt_upper(&-q, prec);
    }
    let scaled = shifted(q, 3 * prec);
    let floor = scaled.floor().to_integer();
    Rational::new(floor.cbrt(), Int::one() << prec)
}

fn cbrt_upper(q: &Rational, prec: u32) -> Rational {
    if q.is_negative() {
        return -cbrt_lower(&-q, prec);
    }
    let scaled = shifted(q, 3 * prec);
    let ceil = scaled.ceil().to_integer();
    let s = ceil.cbrt();
    let s = if &s * &s * &s == ceil { s } else { s + 1 };
    Rational::new(s, Int::one() << prec)
}

/// Round half away from zero to the nearest integer.
pub fn round_half_away(q: &Rational) -> Int {
    let half = Rational::new(Int::one(), Int::from(2));
    if q.is_negative() {
        -((-q + half).floor().to_integer())
    } else {
        (q + half).floor().to_integer()
    }
}

/// Formats `r / 10^digits` with exactly `digits` places after the point.
pub fn format_scaled(r: &Int, digits: u32) -> String {
    let negative = r.is_negative();
    let mag = r.abs().to_string();
    let digits = digits as usize;
    let padded = if mag.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - mag.len()), mag)
    } else {
        mag
    };
    let split = padded.len() - digits;
    let (int_part, frac_part) = padded.split_at(split);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(int_part);
    if digits > 0 {
        out.push('.');
        out.push_str(frac_part);
    }
    out
}

/// Certified decimal rounding of an interval: succeeds when both endpoints
/// round to the same scaled integer.
pub fn round_decimal(interval: &RatInterval, digits: u32) -> Option<String> {
    let scale = Rational::from_integer(Int::from(10).pow(digits));
    let lo = round_half_away(&(&interval.lo * &scale));
    let hi = round_half_away(&(&interval.hi * &scale));
    (lo == hi).then(|| format_scaled(&lo, digits))
}

/// Working precisions for refinement loops, in bits.
pub const PRECISION_LADDER: [u32; 8] = [64, 128, 256, 512, 1024, 2048, 4096, 8192];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    #[test]
    fn sqrt_brackets_value() {
        let two = RatInterval::point(rat_int(2));
        let s = two.sqrt(64, "sqrt(2)").unwrap();
        assert!(s.lo < s.hi);
        assert!(&s.lo * &s.lo < rat_int(2));
        assert!(&s.hi * &s.hi > rat_int(2));
        assert!(s.width() < rat(1, 1_000_000_000));
    }

    #[test]
    fn sqrt_of_perfect_square_is_exact() {
        let four = RatInterval::point(rat_int(4));
        let s = four.sqrt(32, "sqrt(4)").unwrap();
        assert_eq!(s, RatInterval::point(rat_int(2)));
    }

    #[test]
    fn cbrt_handles_negatives() {
        let v = RatInterval::point(rat_int(-27));
        let c = v.cbrt(32);
        assert_eq!(c, RatInterval::point(rat_int(-3)));
        let v = RatInterval::point(rat_int(2));
        let c = v.cbrt(64);
        assert!(&c.lo * &c.lo * &c.lo < rat_int(2));
        assert!(&c.hi * &c.hi * &c.hi > rat_int(2));
    }

    #[test]
    fn negative_sqrt_rejected() {
        let v = RatInterval::point(rat_int(-1));
        assert!(matches!(v.sqrt(32, "x"), Err(EvalError::NegativeSqrt(_))));
    }

    #[test]
    fn rounding() {
        assert_eq!(round_half_away(&rat(5, 2)), rat_int(3).to_integer());
        assert_eq!(round_half_away(&rat(-5, 2)), rat_int(-3).to_integer());
        assert_eq!(round_half_away(&rat(249, 100)), rat_int(2).to_integer());
        assert_eq!(format_scaled(&rat_int(463522).to_integer(), 4), "46.3522");
        assert_eq!(format_scaled(&rat_int(-5).to_integer(), 2), "-0.05");
        assert_eq!(format_scaled(&rat_int(7).to_integer(), 0), "7");
    }

    #[test]
    fn interval_division_guards_zero() {
        let a = RatInterval::point(rat_int(1));
        let b = RatInterval::new(rat_int(-1), rat_int(1));
        assert!(a.div(&b, "1/x").is_err());
        let c = RatInterval::new(rat_int(2), rat_int(4));
        let d = a.div(&c, "1/x").unwrap();
        assert_eq!(d, RatInterval::new(rat(1, 4), rat(1, 2)));
    }
}
