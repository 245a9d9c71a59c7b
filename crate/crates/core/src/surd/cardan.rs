//! Cardan's formula for the real root of a cubic with negative discriminant.

use crate::exact::{rational_cbrt, rational_sqrt, Int, Rational};
use crate::surd::expr::RadicalExpr;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CardanError {
    #[error("three distinct real roots (casus irreducibilis) are unsupported")]
    ThreeRealRoots,
}

/// The real root of z^3 + c2 z^2 + c1 z + c0, kept with its source
/// coefficients and its closed radical expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardanRoot {
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
    pub expr: RadicalExpr,
}

impl CardanRoot {
    /// Residual z^3 + c2 z^2 + c1 z + c0 as an expression, for certified
    /// numeric checks of the root.
    pub fn residual_expr(&self) -> RadicalExpr {
        let z = self.expr.clone();
        let z2 = z.clone().mul(z.clone());
        let z3 = z2.clone().mul(z.clone());
        z3.add(RadicalExpr::num(self.c2.clone()).mul(z2))
            .add(RadicalExpr::num(self.c1.clone()).mul(z))
            .add(RadicalExpr::num(self.c0.clone()))
    }
}

/// Closed-form real root of z^3 + c2 z^2 + c1 z + c0 when the cubic has
/// exactly one real root (or a rational collapse). The depressed form
/// w^3 + p w + q gives
///   z = (-c2 + cbrt(s + sqrt(t)) + cbrt(s - sqrt(t))) / 3
/// with s = -27 q / 2 and t = 729 (q^2/4 + p^3/27).
pub fn cardan_real_root(
    c2: &Rational,
    c1: &Rational,
    c0: &Rational,
) -> Result<CardanRoot, CardanError> {
    let three = Rational::from_integer(Int::from(3));
    let r27 = Rational::from_integer(Int::from(27));
    let p = c1 - c2 * c2 / &three;
    let q = Rational::from_integer(Int::from(2)) * c2 * c2 * c2 / &r27 - c2 * c1 / &three + c0;
    let disc = &q * &q / Rational::from_integer(Int::from(4)) + &p * &p * &p / &r27;
    if disc.is_negative() {
        return Err(CardanError::ThreeRealRoots);
    }
    let s = -&q * Rational::new(Int::from(27), Int::from(2));
    let t = Rational::from_integer(Int::from(729)) * &disc;

    // rational collapse: sqrt(t) and both cube roots rational
    let expr = if let Some(rt) = rational_sqrt(&t) {
        let a = &s + &rt;
        let b = &s - &rt;
        match (rational_cbrt(&a), rational_cbrt(&b)) {
            (Some(ca), Some(cb)) => {
                let root = (-c2 + ca + cb) / &three;
                RadicalExpr::num(root)
            }
            _ => cardan_expr(c2, &s, &t),
        }
    } else {
        cardan_expr(c2, &s, &t)
    };
    Ok(CardanRoot {
        c2: c2.clone(),
        c1: c1.clone(),
        c0: c0.clone(),
        expr,
    })
}

fn cardan_expr(c2: &Rational, s: &Rational, t: &Rational) -> RadicalExpr {
    let root_t = sqrt_of_rational_expr(t);
    let first = RadicalExpr::num(s.clone()).add(root_t.clone()).cbrt();
    let second = RadicalExpr::num(s.clone()).sub(root_t).cbrt();
    let sum = if c2.is_zero() {
        first.add(second)
    } else {
        RadicalExpr::num(-c2).add(first).add(second)
    };
    sum.div(RadicalExpr::num_int(3))
}

/// sqrt of a nonnegative rational as an expression, with the square part
/// pulled out (sqrt(297) prints as 3*sqrt(33)).
pub fn sqrt_of_rational_expr(q: &Rational) -> RadicalExpr {
    debug_assert!(!q.is_negative());
    if q.is_zero() {
        return RadicalExpr::num_int(0);
    }
    if let Some(r) = rational_sqrt(q) {
        return RadicalExpr::num(r);
    }
    if let Some(m) = crate::surd::nested::sqrt_rational_multi(q) {
        if let Some(s) = m.as_quadratic_surd() {
            if s.rational_part().is_zero() {
                let coeff = s.surd_coeff().clone();
                let root = RadicalExpr::num(Rational::from_integer(
                    s.radicand().unwrap().clone(),
                ))
                .sqrt();
                return if coeff == Rational::from_integer(Int::from(1)) {
                    root
                } else {
                    RadicalExpr::num(coeff).mul(root)
                };
            }
        }
    }
    RadicalExpr::num(q.clone()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, Rational};
    use crate::surd::normal::to_decimal;

    #[test]
    fn tribonacci_constant() {
        // z^3 - z^2 - z - 1
        let root = cardan_real_root(&rat_int(-1), &rat_int(-1), &rat_int(-1)).unwrap();
        assert_eq!(
            root.expr.to_string(),
            "(1+cbrt(19+3*sqrt(33))+cbrt(19-3*sqrt(33)))/3"
        );
        assert_eq!(to_decimal(&root.expr, 12).unwrap(), "1.839286755214");
        // residual vanishes to high precision
        let res = root.residual_expr();
        let iv = res.eval_interval(256).unwrap();
        let bound = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(30));
        assert!(iv.lo.abs() < bound && iv.hi.abs() < bound);
    }

    #[test]
    fn rational_collapse() {
        let root = cardan_real_root(&rat_int(0), &rat_int(0), &rat_int(-8)).unwrap();
        assert_eq!(root.expr, RadicalExpr::num(rat_int(2)));
    }

    #[test]
    fn casus_irreducibilis_rejected() {
        // z^3 - 3z has roots 0, +/- sqrt(3)
        assert_eq!(
            cardan_real_root(&rat_int(0), &rat_int(-3), &rat_int(0)),
            Err(CardanError::ThreeRealRoots)
        );
    }
}
