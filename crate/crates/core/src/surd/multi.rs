//! Exact arithmetic in multi-quadratic extensions of the rationals.
//!
//! A value is a finite sum `sum_r q_r * sqrt(r)` over distinct squarefree
//! radicands r >= 1 (r = 1 is the rational part). Products of square roots
//! of squarefree integers stay in the class without any factoring:
//! sqrt(r) * sqrt(r') = g * sqrt(r r' / g^2) with g = gcd(r, r'), and
//! r r' / g^2 is automatically squarefree.

use crate::exact::{gcd, Int, Rational};
use crate::surd::interval::{RatInterval, PRECISION_LADDER};
use crate::surd::quadratic::QuadraticSurd;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSurd {
    /// squarefree radicand -> nonzero coefficient
    terms: BTreeMap<Int, Rational>,
}

impl MultiSurd {
    pub fn zero() -> Self {
        MultiSurd {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MultiSurd::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Int::one(), q);
        }
        MultiSurd { terms }
    }

    /// coeff * sqrt(radicand); the radicand must already be squarefree.
    pub fn from_term(coeff: Rational, radicand: Int) -> Self {
        debug_assert!(radicand.is_positive());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(radicand, coeff);
        }
        MultiSurd { terms }
    }

    pub fn from_surd(s: &QuadraticSurd) -> Self {
        let mut out = MultiSurd::from_rational(s.rational_part().clone());
        if let Some(m) = s.radicand() {
            out.insert(m.clone(), s.surd_coeff().clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Int, &Rational)> {
        self.terms.iter()
    }

    fn insert(&mut self, radicand: Int, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(radicand) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Int::one()))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_rational() {
            return self.terms.get(&Int::one()).cloned();
        }
        None
    }

    /// Some(a + b sqrt(m)) when the value fits in a single quadratic field.
    pub fn as_quadratic_surd(&self) -> Option<QuadraticSurd> {
        let mut a = Rational::zero();
        let mut bm: Option<(Rational, Int)> = None;
        for (r, c) in &self.terms {
            if r.is_one() {
                a = c.clone();
            } else if bm.is_none() {
                bm = Some((c.clone(), r.clone()));
            } else {
                return None;
            }
        }
        Some(match bm {
            None => QuadraticSurd::from_rational(a),
            Some((b, m)) => QuadraticSurd::new(a, b, m),
        })
    }

    pub fn neg(&self) -> Self {
        MultiSurd {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.insert(r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiSurd::zero();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &other.terms {
                let g = gcd(r1, r2);
                let radicand = (r1 / &g) * (r2 / &g);
                let coeff = c1 * c2 * Rational::from_integer(g);
                out.insert(radicand, coeff);
            }
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return MultiSurd::zero();
        }
        MultiSurd {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), c * q)).collect(),
        }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Multiplicative inverse by iterated conjugation: conjugating over one
    /// prime at a time strips that prime from every radicand.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(MultiSurd::from_rational(q.recip()));
        }
        // smallest prime dividing any radicand > 1
        let p = self
            .terms
            .keys()
            .filter(|r| !r.is_one())
            .map(smallest_prime_factor)
            .min()
            .unwrap();
        let mut with_p = MultiSurd::zero();
        let mut without_p = MultiSurd::zero();
        for (r, c) in &self.terms {
            if (r % &p).is_zero() {
                with_p.insert(r.clone(), c.clone());
            } else {
                without_p.insert(r.clone(), c.clone());
            }
        }
        let conj = without_p.sub(&with_p);
        let norm = self.mul(&conj); // free of p
        let norm_inv = norm.inv()?;
        Some(conj.mul(&norm_inv))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }

    pub fn eval_interval(&self, prec: u32) -> RatInterval {
        let mut acc = RatInterval::point(Rational::zero());
        for (r, c) in &self.terms {
            let root = if r.is_one() {
                RatInterval::point(Rational::one())
            } else {
                RatInterval::point(Rational::from_integer(r.clone()))
                    .sqrt(prec, "sqrt(r)")
                    .expect("positive radicand")
            };
            acc = acc.add(&root.scale(c));
        }
        acc
    }

    /// Exact sign: zero is structural, nonzero values separate from zero at
    /// finite interval precision.
    pub fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        if self.terms.len() == 1 {
            return self.terms.values().next().unwrap().cmp(&Rational::zero());
        }
        for prec in PRECISION_LADDER {
            let iv = self.eval_interval(prec);
            if iv.strictly_positive() {
                return Ordering::Greater;
            }
            if iv.strictly_negative() {
                return Ordering::Less;
            }
        }
        unreachable!("nonzero multi-surd failed to separate from zero")
    }
}

fn smallest_prime_factor(n: &Int) -> Int {
    let two = Int::from(2);
    if (n % &two).is_zero() {
        return two;
    }
    let mut p = Int::from(3);
    while (&p * &p) <= *n {
        if (n % &p).is_zero() {
            return p;
        }
        p += 2;
    }
    n.clone()
}

impl fmt::Display for MultiSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (r, c) in &self.terms {
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mag = c.abs();
            let mag_str = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            if r.is_one() {
                write!(f, "{mag_str}")?;
            } else if mag.is_one() {
                write!(f, "sqrt({r})")?;
            } else {
                write!(f, "{mag_str}*sqrt({r})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, rat_int};

    fn term(c: (i64, i64), r: i64) -> MultiSurd {
        MultiSurd::from_term(rat(c.0, c.1), int(r))
    }

    #[test]
    fn radicand_products_stay_squarefree() {
        // sqrt(65) * sqrt(5) = 5 sqrt(13)
        let x = term((1, 1), 65).mul(&term((1, 1), 5));
        assert_eq!(x, term((5, 1), 13));
        // sqrt(22) * sqrt(286) = 22 sqrt(13)
        let x = term((1, 1), 22).mul(&term((1, 1), 286));
        assert_eq!(x, term((22, 1), 13));
        // sqrt(2) * sqrt(2) = 2
        let x = term((1, 1), 2).mul(&term((1, 1), 2));
        assert_eq!(x.as_rational(), Some(rat_int(2)));
    }

    #[test]
    fn inverse_in_biquadratic_field() {
        // x = 1 + sqrt(2) + sqrt(3): check x * x^-1 = 1
        let x = MultiSurd::from_rational(rat_int(1))
            .add(&term((1, 1), 2))
            .add(&term((1, 1), 3));
        let xi = x.inv().unwrap();
        assert_eq!(x.mul(&xi), MultiSurd::one());
        // and a denser one with three primes
        let y = term((3, 2), 5).add(&term((-1, 7), 65)).add(&MultiSurd::from_rational(rat_int(4)));
        let yi = y.inv().unwrap();
        assert_eq!(y.mul(&yi), MultiSurd::one());
        assert!(MultiSurd::zero().inv().is_none());
    }

    #[test]
    fn squares_of_two_term_roots() {
        // (sqrt(25/22) + sqrt(13/88))^2 = 113/88 + 5/22 sqrt(13)
        let a = term((5, 22), 22); // sqrt(25/22)
        let b = term((1, 44), 286); // sqrt(13/88)
        let sq = a.add(&b).square();
        let expected = MultiSurd::from_rational(rat(113, 88)).add(&term((5, 22), 13));
        assert_eq!(sq, expected);
    }

    #[test]
    fn exact_signs() {
        assert_eq!(MultiSurd::zero().sign(), Ordering::Equal);
        // sqrt(3) + sqrt(15) - 18/4 is slightly positive: 1.732 + 3.873 = 5.605 > 4.5
        let v = term((1, 1), 3)
            .add(&term((1, 1), 15))
            .sub(&MultiSurd::from_rational(rat(18, 4)));
        assert_eq!(v.sign(), Ordering::Greater);
        // sqrt(2) + sqrt(3) - sqrt(10) is negative: 3.146 < 3.162
        let v = term((1, 1), 2).add(&term((1, 1), 3)).sub(&term((1, 1), 10));
        assert_eq!(v.sign(), Ordering::Less);
    }

    #[test]
    fn single_field_round_trip() {
        let s = QuadraticSurd::new(rat_int(6), rat_int(-1), int(2));
        let m = MultiSurd::from_surd(&s);
        assert_eq!(m.as_quadratic_surd(), Some(s));
        assert!(term((1, 1), 2).add(&term((1, 1), 3)).as_quadratic_surd().is_none());
    }
}
