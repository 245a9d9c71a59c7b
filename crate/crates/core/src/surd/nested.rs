//! Nested radicals c * sqrt(a + b*sqrt(m)) and the classic denesting rules.

use crate::exact::{rational_sqrt, square_part, Int, Rational};
use crate::surd::multi::MultiSurd;
use crate::surd::quadratic::QuadraticSurd;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NestedError {
    #[error("square root of a negative surd: {0}")]
    NegativeOperand(String),
}

/// Canonical value outer * sqrt(inner) with outer a positive rational and
/// inner a nonnegative surd carrying no extractable rational square factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedRadical {
    outer: Rational,
    inner: QuadraticSurd,
}

impl NestedRadical {
    /// Canonicalizes outer * sqrt(inner): writes the radicand over a common
    /// denominator as an integer surd and pulls the largest square factor of
    /// the integer content into the outer scale.
    pub fn new(outer: Rational, inner: QuadraticSurd) -> Result<Self, NestedError> {
        assert!(outer.is_positive(), "outer scale must be positive");
        if inner.sign() == Ordering::Less {
            return Err(NestedError::NegativeOperand(inner.to_string()));
        }
        if inner.is_zero() {
            return Ok(NestedRadical {
                outer,
                inner: QuadraticSurd::from_rational(Rational::zero()),
            });
        }
        // inner = (A + B sqrt(m)) / D; multiply through by D^2:
        // sqrt(inner) = sqrt(A D + B D sqrt(m)) / D
        let a = inner.rational_part();
        let b = inner.surd_coeff();
        let d = a.denom().lcm(b.denom());
        let d2 = Rational::from_integer(&d * &d);
        let ad = (a * &d2).to_integer();
        let bd = (b * &d2).to_integer();
        let content = crate::exact::gcd(&ad, &bd);
        let (sq, _) = square_part(&content).expect("content within factorization range");
        let sq2 = &sq * &sq;
        let reduced = QuadraticSurd::new(
            Rational::from_integer(&ad / &sq2),
            Rational::from_integer(&bd / &sq2),
            inner.radicand().cloned().unwrap_or_else(Int::one),
        );
        Ok(NestedRadical {
            outer: outer * Rational::new(sq, d),
            inner: reduced,
        })
    }

    pub fn outer(&self) -> &Rational {
        &self.outer
    }

    pub fn inner(&self) -> &QuadraticSurd {
        &self.inner
    }

    /// The exact square of the value: outer^2 * inner.
    pub fn square(&self) -> QuadraticSurd {
        self.inner.scale(&(&self.outer * &self.outer))
    }

    /// Plain rational value when the radicand is a perfect rational square.
    pub fn as_rational(&self) -> Option<Rational> {
        let q = self.inner.as_rational()?;
        Some(rational_sqrt(&q)? * &self.outer)
    }
}

impl fmt::Display for NestedRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            if q.is_integer() {
                return write!(f, "{}", q.numer());
            }
            return write!(f, "{}/{}", q.numer(), q.denom());
        }
        if !self.outer.is_one() {
            if self.outer.is_integer() {
                write!(f, "{}*", self.outer.numer())?;
            } else {
                write!(f, "{}/{}*", self.outer.numer(), self.outer.denom())?;
            }
        }
        write!(f, "sqrt({})", self.inner)
    }
}

/// sqrt of a nonnegative surd as a canonical nested radical.
pub fn sqrt_of_surd(s: &QuadraticSurd) -> Result<NestedRadical, NestedError> {
    NestedRadical::new(Rational::one(), s.clone())
}

/// Rewrites sqrt(p + q sqrt(m)) as u + v sqrt(m) when possible: the
/// discriminant p^2 - q^2 m must be a rational square c^2 and one of
/// (p +/- c)/2 must itself be a rational square. Returns the denested value
/// scaled by the outer factor.
pub fn denest(r: &NestedRadical) -> Option<QuadraticSurd> {
    if let Some(q) = r.as_rational() {
        return Some(QuadraticSurd::from_rational(q));
    }
    let inner = r.inner();
    let m = inner.radicand()?.clone();
    let p = inner.rational_part();
    let q = inner.surd_coeff();
    let disc = p * p - q * q * Rational::from_integer(m.clone());
    let c = rational_sqrt(&disc)?;
    let two = Rational::from_integer(Int::from(2));
    let t1 = (p + &c) / &two;
    let t2 = (p - &c) / &two;
    let surd = if let Some(u) = rational_sqrt(&t1) {
        // sqrt(inner) = u + (q / 2u) sqrt(m)
        let v = q / (&two * &u);
        QuadraticSurd::new(u, v, m)
    } else if let Some(w) = rational_sqrt(&t2) {
        // sqrt(inner) = sign(q) w + |q/(2w)| sqrt(m)
        let v = (q / (&two * &w)).abs();
        let u = if q.is_negative() { -w } else { w };
        QuadraticSurd::new(u, v, m)
    } else {
        return None;
    };
    debug_assert_eq!(surd.square(), *inner);
    debug_assert_ne!(surd.sign(), Ordering::Less);
    Some(surd.scale(r.outer()))
}

/// Full two-term denesting into the multi-quadratic class:
/// sqrt(p + q sqrt(m)) = sqrt(t1) + sign(q) sqrt(t2) whenever the
/// discriminant is a rational square (t1, t2 need not be squares).
/// The value must be nonnegative.
pub fn denest_to_multi(inner: &QuadraticSurd) -> Option<MultiSurd> {
    let m = inner.radicand()?.clone();
    let p = inner.rational_part();
    let q = inner.surd_coeff();
    let disc = p * p - q * q * Rational::from_integer(m);
    let c = rational_sqrt(&disc)?;
    let two = Rational::from_integer(Int::from(2));
    let t1 = (p + &c) / &two;
    let t2 = (p - &c) / &two;
    debug_assert!(!t1.is_negative() && !t2.is_negative());
    let a = sqrt_rational_multi(&t1)?;
    let b = sqrt_rational_multi(&t2)?;
    Some(if q.is_negative() { a.sub(&b) } else { a.add(&b) })
}

/// sqrt of a nonnegative rational as a multi-surd term, when the radicand
/// is small enough to factor.
pub fn sqrt_rational_multi(q: &Rational) -> Option<MultiSurd> {
    if q.is_zero() {
        return Some(MultiSurd::zero());
    }
    debug_assert!(q.is_positive());
    // sqrt(n/d) = sqrt(n d) / d
    let nd = q.numer() * q.denom();
    let (s, core) = square_part_bounded(&nd)?;
    let coeff = Rational::new(s, q.denom().clone());
    Some(if core.is_one() {
        MultiSurd::from_rational(coeff)
    } else {
        MultiSurd::from_term(coeff, core)
    })
}

/// Square-part extraction with a trial-division budget. Returns None when
/// the unfactored cofactor cannot be certified squarefree.
pub fn square_part_bounded(n: &Int) -> Option<(Int, Int)> {
    const LIMIT: u64 = 1_000_000;
    let mut m = num_traits::ToPrimitive::to_u128(n)?;
    if m == 0 {
        return None;
    }
    let mut s: u128 = 1;
    let mut core: u128 = 1;
    let mut p: u128 = 2;
    while p <= LIMIT as u128 && p * p <= m {
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            for _ in 0..(e / 2) {
                s = s.checked_mul(p)?;
            }
            if e % 2 == 1 {
                core = core.checked_mul(p)?;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        // leftover cofactor: prime if below the budget squared, else it may
        // still be a perfect square
        if m <= (LIMIT as u128) * (LIMIT as u128) {
            core = core.checked_mul(m)?;
        } else {
            let r = m.isqrt();
            if r * r == m {
                s = s.checked_mul(r)?;
            } else {
                return None;
            }
        }
    }
    Some((Int::from(s), Int::from(core)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, rat_int};

    fn surd(a: i64, b: i64, m: i64) -> QuadraticSurd {
        QuadraticSurd::new(rat_int(a), rat_int(b), int(m))
    }

    #[test]
    fn canonical_square_extraction() {
        // sqrt(405 + 162 sqrt(2)) = 9 sqrt(5 + 2 sqrt(2))
        let n = sqrt_of_surd(&surd(405, 162, 2)).unwrap();
        assert_eq!(n.outer(), &rat_int(9));
        assert_eq!(n.inner(), &surd(5, 2, 2));
        assert_eq!(n.to_string(), "9*sqrt(5+2*sqrt(2))");
        // rational perfect square
        let n = sqrt_of_surd(&surd(4, 0, 1)).unwrap();
        assert_eq!(n.as_rational(), Some(rat_int(2)));
        assert_eq!(n.to_string(), "2");
        // no square factor to extract
        let n = sqrt_of_surd(&surd(18, 6, 5)).unwrap();
        assert_eq!(n.outer(), &rat_int(1));
        assert_eq!(n.inner(), &surd(18, 6, 5));
    }

    #[test]
    fn canonical_with_denominators() {
        // sqrt((700 - 400 sqrt(2)) / 17) = (10/17) sqrt(119 - 68 sqrt(2))
        let inner = QuadraticSurd::new(rat(700, 17), rat(-400, 17), int(2));
        let n = sqrt_of_surd(&inner).unwrap();
        assert_eq!(n.outer(), &rat(10, 17));
        assert_eq!(n.inner(), &surd(119, -68, 2));
        // squares agree exactly
        assert_eq!(n.square(), inner);
    }

    #[test]
    fn negative_operand_rejected() {
        assert!(sqrt_of_surd(&surd(2, -1, 5)).is_err()); // 2 - sqrt(5) < 0
    }

    #[test]
    fn denest_examples() {
        // sqrt(3 + 2 sqrt(2)) = 1 + sqrt(2), by the squaring oracle
        let d = denest(&sqrt_of_surd(&surd(3, 2, 2)).unwrap()).unwrap();
        assert_eq!(d, surd(1, 1, 2));
        assert_eq!(d.square(), surd(3, 2, 2));
        // sqrt(5 + 2 sqrt(2)): 25 - 8 = 17 is not a square
        assert_eq!(denest(&sqrt_of_surd(&surd(5, 2, 2)).unwrap()), None);
        // sqrt(6 + 2 sqrt(5)) = 1 + sqrt(5)
        let d = denest(&sqrt_of_surd(&surd(6, 2, 5)).unwrap()).unwrap();
        assert_eq!(d, surd(1, 1, 5));
        assert_eq!(d.square(), surd(6, 2, 5));
        // sqrt(18 + 6 sqrt(5)) has square discriminant but does not denest
        // inside Q(sqrt(5))
        assert_eq!(denest(&sqrt_of_surd(&surd(18, 6, 5)).unwrap()), None);
        // subtraction case: sqrt(3 - 2 sqrt(2)) = sqrt(2) - 1
        let d = denest(&sqrt_of_surd(&surd(3, -2, 2)).unwrap()).unwrap();
        assert_eq!(d, surd(-1, 1, 2));
    }

    #[test]
    fn two_term_denesting() {
        // sqrt(18 + 6 sqrt(5)) = sqrt(3) + sqrt(15)
        let m = denest_to_multi(&surd(18, 6, 5)).unwrap();
        let expected = MultiSurd::from_term(rat_int(1), int(3))
            .add(&MultiSurd::from_term(rat_int(1), int(15)));
        assert_eq!(m, expected);
        assert_eq!(m.square(), MultiSurd::from_surd(&surd(18, 6, 5)));
        // sqrt(113/20 - sqrt(13)) = sqrt(5) - sqrt(13/20)
        let inner = QuadraticSurd::new(rat(113, 20), rat_int(-1), int(13));
        let m = denest_to_multi(&inner).unwrap();
        assert_eq!(m.square(), MultiSurd::from_surd(&inner));
        assert_eq!(m.sign(), std::cmp::Ordering::Greater);
    }

    #[test]
    fn bounded_square_part() {
        assert_eq!(square_part_bounded(&int(819200000000)), Some((int(640000), int(2))));
        assert_eq!(square_part_bounded(&int(12)), Some((int(2), int(3))));
        assert_eq!(square_part_bounded(&int(1)), Some((int(1), int(1))));
    }
}
