//! Quadratic surds a + b*sqrt(m) with m squarefree, the exact value class of
//! every root the factor search produces.

use crate::exact::{square_part, Int, Rational};
use crate::surd::interval::{RatInterval, PRECISION_LADDER};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Exact value a + b*sqrt(m). Representation is unique: m is squarefree and
/// >= 2 whenever b != 0, and m = 1 marks a plain rational (b = 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: Rational,
    b: Rational,
    m: Int,
}

impl QuadraticSurd {
    /// Builds a + b*sqrt(n) for any n >= 0, extracting square factors so the
    /// stored radicand is squarefree. Panics if the radicand is too large to
    /// factor; every caller in this crate stays far below that.
    pub fn new(a: Rational, b: Rational, n: Int) -> Self {
        assert!(!n.is_negative(), "radicand must be nonnegative");
        if b.is_zero() || n.is_zero() {
            return QuadraticSurd {
                a,
                b: Rational::zero(),
                m: Int::one(),
            };
        }
        let (s, core) = square_part(&n).expect("radicand within factorization range");
        if core.is_one() {
            return QuadraticSurd {
                a: a + b * Rational::from_integer(s),
                b: Rational::zero(),
                m: Int::one(),
            };
        }
        QuadraticSurd {
            a,
            b: b * Rational::from_integer(s),
            m: core,
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadraticSurd {
            a,
            b: Rational::zero(),
            m: Int::one(),
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_coeff(&self) -> &Rational {
        &self.b
    }

    /// The squarefree radicand, absent for plain rationals.
    pub fn radicand(&self) -> Option<&Int> {
        (!self.b.is_zero()).then_some(&self.m)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd {
            a: -&self.a,
            b: -&self.b,
            m: self.m.clone(),
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadraticSurd {
            a: self.a.clone(),
            b: -&self.b,
            m: self.m.clone(),
        }
    }

    fn compatible(&self, other: &Self) -> Option<Int> {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, true) => Some(Int::one()),
            (true, false) => Some(other.m.clone()),
            (false, true) => Some(self.m.clone()),
            (false, false) => (self.m == other.m).then(|| self.m.clone()),
        }
    }

    /// Sum when both values live in the same quadratic field.
    pub fn try_add(&self, other: &Self) -> Option<Self> {
        let m = self.compatible(other)?;
        Some(QuadraticSurd::new(
            &self.a + &other.a,
            &self.b + &other.b,
            m,
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Option<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Option<Self> {
        let m = self.compatible(other)?;
        let mr = Rational::from_integer(m.clone());
        Some(QuadraticSurd::new(
            &self.a * &other.a + &self.b * &other.b * mr,
            &self.a * &other.b + &self.b * &other.a,
            m,
        ))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        QuadraticSurd::new(&self.a * q, &self.b * q, self.m.clone())
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        QuadraticSurd::new(&self.a + q, self.b.clone(), self.m.clone())
    }

    /// Field norm a^2 - b^2 m (rational).
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.m.clone())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        // norm is zero only for the zero surd (sqrt(m) irrational)
        Some(self.conjugate().scale(&n.recip()))
    }

    pub fn try_div(&self, other: &Self) -> Option<Self> {
        self.try_mul(&other.recip()?)
    }

    pub fn square(&self) -> Self {
        self.try_mul(self).unwrap()
    }

    /// Exact sign by rational comparison of a^2 and b^2 m.
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.cmp(&Rational::zero());
        }
        if self.a.is_zero() {
            return self.b.cmp(&Rational::zero());
        }
        let a_pos = self.a.is_positive();
        if a_pos == self.b.is_positive() {
            return if a_pos { Ordering::Greater } else { Ordering::Less };
        }
        // opposite signs: the larger magnitude wins; a^2 = b^2 m is
        // impossible since m is squarefree >= 2
        let a2 = &self.a * &self.a;
        let b2m = &self.b * &self.b * Rational::from_integer(self.m.clone());
        if a2 > b2m {
            self.a.cmp(&Rational::zero())
        } else {
            self.b.cmp(&Rational::zero())
        }
    }

    /// Total order on the real values, including mixed radicands (decided by
    /// interval refinement; distinct squarefree radicands can never collide).
    pub fn cmp_surd(&self, other: &Self) -> Ordering {
        if let Some(_) = self.compatible(other) {
            return self.try_sub(other).unwrap().sign();
        }
        if self == other {
            return Ordering::Equal;
        }
        for prec in PRECISION_LADDER {
            let a = self.eval_interval(prec);
            let b = other.eval_interval(prec);
            if a.disjoint(&b) {
                return a.lo.cmp(&b.lo);
            }
        }
        // unreachable in exact arithmetic: values in distinct quadratic
        // fields separate at finite precision
        unreachable!("mixed-radicand surds failed to separate")
    }

    pub fn eval_interval(&self, prec: u32) -> RatInterval {
        let root = RatInterval::point(Rational::from_integer(self.m.clone()))
            .sqrt(prec, "sqrt(m)")
            .expect("nonnegative radicand");
        root.scale(&self.b).add(&RatInterval::point(self.a.clone()))
    }

    /// Both real roots of x^2 + p x + q, ascending, when the discriminant is
    /// nonnegative; empty otherwise. Rational roots come back with b = 0.
    pub fn quadratic_roots(p: &Rational, q: &Rational) -> Vec<QuadraticSurd> {
        let four = Rational::from_integer(Int::from(4));
        let two = Rational::from_integer(Int::from(2));
        let disc = p * p - four * q;
        if disc.is_negative() {
            return Vec::new();
        }
        // sqrt(disc) = (s/d) sqrt(core) with disc = n/den
        let n = disc.numer() * disc.denom();
        let den = disc.denom().clone();
        let (s, core) = square_part(&n).expect("discriminant within factorization range");
        let half_b = Rational::new(s, den * Int::from(1)) / &two;
        let a = -p / &two;
        let lo = QuadraticSurd::new(a.clone(), -&half_b, core.clone());
        let hi = QuadraticSurd::new(a, half_b, core);
        vec![lo, hi]
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rational_str(q: &Rational) -> String {
            if q.is_integer() {
                q.numer().to_string()
            } else {
                format!("{}/{}", q.numer(), q.denom())
            }
        }
        if self.b.is_zero() {
            return write!(f, "{}", rational_str(&self.a));
        }
        let mut first = true;
        if !self.a.is_zero() {
            write!(f, "{}", rational_str(&self.a))?;
            first = false;
        }
        if self.b.is_negative() {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        let mag = self.b.abs();
        if !mag.is_one() {
            write!(f, "{}*", rational_str(&mag))?;
        }
        write!(f, "sqrt({})", self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, rat_int};

    fn surd(a: i64, b: i64, m: i64) -> QuadraticSurd {
        QuadraticSurd::new(rat_int(a), rat_int(b), int(m))
    }

    #[test]
    fn construction_canonicalizes() {
        // 405 + 162*sqrt(2) from sqrt(52488) = 162 sqrt(2)
        let s = QuadraticSurd::new(rat_int(405), rat_int(1), int(52488));
        assert_eq!(s, surd(405, 162, 2));
        // perfect square radicand collapses to a rational
        let r = QuadraticSurd::new(rat_int(1), rat_int(3), int(49));
        assert_eq!(r.as_rational(), Some(&rat_int(22)));
    }

    #[test]
    fn roots_of_corpus_quadratics() {
        let r = QuadraticSurd::quadratic_roots(&rat_int(-12), &rat_int(34));
        assert_eq!(r[0], surd(6, -1, 2));
        assert_eq!(r[1], surd(6, 1, 2));
        let r = QuadraticSurd::quadratic_roots(&rat_int(4), &rat_int(-6));
        assert_eq!(r[0], surd(-2, -1, 10));
        assert_eq!(r[1], surd(-2, 1, 10));
        assert_eq!(r[1].sign(), Ordering::Greater);
        assert!(QuadraticSurd::quadratic_roots(&rat_int(1), &rat_int(3)).is_empty());
        // rational double root
        let r = QuadraticSurd::quadratic_roots(&rat_int(-4), &rat_int(4));
        assert_eq!(r[0].as_rational(), Some(&rat_int(2)));
        assert_eq!(r[1].as_rational(), Some(&rat_int(2)));
    }

    #[test]
    fn sum_and_product_match_the_factor() {
        // for every corpus quadratic z^2 - yz + c: root sum = y, product = c
        for (p, q) in [(-12i64, 34i64), (-4, 26), (-20, 87), (-20, 79), (-9, 15), (-9, 17), (-10, 22), (4, -6), (-4, -7), (-12, 33), (2, 12), (1, 3), (1, 9)] {
            let roots = QuadraticSurd::quadratic_roots(&rat_int(p), &rat_int(q));
            if roots.is_empty() {
                continue;
            }
            let sum = roots[0].try_add(&roots[1]).unwrap();
            let prod = roots[0].try_mul(&roots[1]).unwrap();
            assert_eq!(sum.as_rational(), Some(&rat_int(-p)));
            assert_eq!(prod.as_rational(), Some(&rat_int(q)));
        }
    }

    #[test]
    fn sign_decisions() {
        assert_eq!(surd(-2, 1, 10).sign(), Ordering::Greater); // sqrt(10) - 2
        assert_eq!(surd(0, 0, 1).sign(), Ordering::Equal);
        assert_eq!(surd(6, -1, 2).sign(), Ordering::Greater); // 36 > 2
        assert_eq!(surd(2, -1, 5).sign(), Ordering::Less); // 4 < 5
        assert_eq!(surd(-7, 2, 13).sign(), Ordering::Greater); // 49 < 52
    }

    #[test]
    fn mixed_radicand_ordering() {
        // 2 + sqrt(11) ~ 5.317 sits between 6 - sqrt(3) ~ 4.268 and 6 + sqrt(3)
        let lo = surd(6, -1, 3);
        let mid = surd(2, 1, 11);
        let hi = surd(6, 1, 3);
        assert_eq!(lo.cmp_surd(&mid), Ordering::Less);
        assert_eq!(mid.cmp_surd(&hi), Ordering::Less);
        assert_eq!(mid.cmp_surd(&mid.clone()), Ordering::Equal);
    }

    #[test]
    fn arithmetic_matches_numerics() {
        let x = surd(3, 2, 7);
        let y = surd(-1, 5, 7);
        let prod = x.try_mul(&y).unwrap();
        let xi = x.eval_interval(128);
        let yi = y.eval_interval(128);
        let pi = prod.eval_interval(128);
        let direct = xi.mul(&yi);
        // the exact product interval and the numeric product overlap tightly
        assert!(!pi.disjoint(&direct));
        assert!(pi.width() < rat(1, 1_000_000));
        let q = x.try_div(&y).unwrap();
        assert_eq!(q.try_mul(&y).unwrap(), x);
    }

    #[test]
    fn display_forms() {
        assert_eq!(surd(6, -1, 2).to_string(), "6-sqrt(2)");
        assert_eq!(surd(0, 1, 10).to_string(), "sqrt(10)");
        assert_eq!(
            QuadraticSurd::new(rat(9, 2), rat(1, 2), int(21)).to_string(),
            "9/2+1/2*sqrt(21)"
        );
        assert_eq!(surd(-3, 0, 1).to_string(), "-3");
    }
}
