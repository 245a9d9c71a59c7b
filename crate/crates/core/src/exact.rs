//! Exact integer and rational arithmetic.
//!
//! Integers are arbitrary-precision (`num_bigint::BigInt`), rationals are
//! always kept reduced with a positive denominator (`num_rational::BigRational`
//! guarantees both at construction). On top of those sit the number-theoretic
//! helpers the quadratic-factor search leans on: gcd, prime factorization and
//! divisor enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Int = BigInt;
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumberError {
    #[error("expected a positive integer, got {0}")]
    NotPositive(Int),
    #[error("integer too large for factorization ({0})")]
    TooLarge(Int),
}

/// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Prime factorization of `n >= 1` by trial division, primes ascending.
///
/// The corpus constants are all well below 2^64, so plain trial division is
/// enough; inputs above 2^127 are rejected rather than left to spin.
pub fn factorize(n: &Int) -> Result<Vec<(Int, u32)>, NumberError> {
    if !n.is_positive() {
        return Err(NumberError::NotPositive(n.clone()));
    }
    if n.is_one() {
        return Ok(Vec::new());
    }
    let mut m = n
        .to_u128()
        .ok_or_else(|| NumberError::TooLarge(n.clone()))?;
    let mut out: Vec<(Int, u32)> = Vec::new();
    let mut push = |p: u128, e: u32| out.push((Int::from(p), e));
    for p in [2u128, 3, 5] {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            push(p, e);
        }
    }
    // wheel over 6k +/- 1
    let mut p: u128 = 7;
    let mut step: u128 = 4;
    while p.checked_mul(p).map_or(false, |pp| pp <= m) {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            push(p, e);
        }
        // alternate +4, +2 to skip multiples of 2 and 3
        p += step;
        step = 6 - step;
    }
    if m > 1 {
        push(m, 1);
    }
    Ok(out)
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: &Int) -> Result<Vec<Int>, NumberError> {
    let factors = factorize(n)?;
    let mut divs: Vec<Int> = vec![Int::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        let mut pk = Int::one();
        for _ in 0..=e {
            for d in &divs {
                next.push(d * &pk);
            }
            pk *= &p;
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Deterministic primality check (complete trial division; inputs are small).
pub fn is_prime(n: &Int) -> bool {
    if n <= &Int::one() {
        return false;
    }
    match factorize(n) {
        Ok(f) => f.len() == 1 && f[0].1 == 1,
        Err(_) => false,
    }
}

/// Largest integer `s` with `s^2 | n` (for `n >= 1`), together with the
/// squarefree cofactor `n / s^2`.
pub fn square_part(n: &Int) -> Result<(Int, Int), NumberError> {
    let factors = factorize(n)?;
    let mut s = Int::one();
    let mut core = Int::one();
    for (p, e) in factors {
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p;
        }
    }
    Ok((s, core))
}

/// Exact integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact integer cube root if `n` is a perfect cube (sign-preserving).
pub fn exact_cbrt(n: &Int) -> Option<Int> {
    let r = n.cbrt();
    (&r * &r * &r == *n).then_some(r)
}

/// Exact rational square root if `q` is a square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Exact rational cube root if `q` is a cube of a rational.
pub fn rational_cbrt(q: &Rational) -> Option<Rational> {
    let n = exact_cbrt(q.numer())?;
    let d = exact_cbrt(q.denom())?;
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_divides_924() {
        assert_eq!(gcd(&int(924), &int(33)), int(33));
        assert_eq!(gcd(&int(0), &int(5)), int(5));
        assert_eq!(gcd(&int(0), &int(0)), int(0));
        // 48720 = 2^4.3.5.7.29 and 87 = 3.29
        assert_eq!(gcd(&int(48720), &int(87)), int(87));
    }

    #[test]
    fn factorize_corpus_constants() {
        let f450 = factorize(&int(450)).unwrap();
        assert_eq!(f450, vec![(int(2), 1), (int(3), 2), (int(5), 2)]);
        let f7072 = factorize(&int(7072)).unwrap();
        assert_eq!(f7072, vec![(int(2), 5), (int(13), 1), (int(17), 1)]);
        assert!(factorize(&int(1)).unwrap().is_empty());
        assert!(factorize(&int(0)).is_err());
        assert!(factorize(&int(-6)).is_err());
    }

    #[test]
    fn factorize_recomposes() {
        for n in [2i64, 36, 624416, 48720, 66990, 79170, 999983] {
            let f = factorize(&int(n)).unwrap();
            let mut prod = Int::one();
            for (p, e) in &f {
                assert!(is_prime(p), "{p} should be prime");
                prod *= p.pow(*e);
            }
            assert_eq!(prod, int(n));
        }
    }

    #[test]
    fn divisors_of_924() {
        let d = divisors(&int(924)).unwrap();
        assert_eq!(d.len(), 24);
        assert!(d.contains(&int(33)));
        assert_eq!(divisors(&int(34)).unwrap(), vec![int(1), int(2), int(17), int(34)]);
        assert_eq!(divisors(&int(1)).unwrap(), vec![int(1)]);
    }

    #[test]
    fn divisors_match_trial_division() {
        // sampled against the brute-force oracle
        for n in [1i64, 2, 12, 360, 450, 924, 7072, 48720, 123456, 999999] {
            let brute: Vec<Int> = (1..=n).filter(|d| n % d == 0).map(int).collect();
            assert_eq!(divisors(&int(n)).unwrap(), brute, "n = {n}");
        }
    }

    #[test]
    fn square_parts() {
        assert_eq!(square_part(&int(52488)).unwrap(), (int(162), int(2)));
        assert_eq!(square_part(&int(11520)).unwrap(), (int(48), int(5)));
        assert_eq!(square_part(&int(1)).unwrap(), (int(1), int(1)));
        assert_eq!(square_part(&int(7)).unwrap(), (int(1), int(7)));
    }

    #[test]
    fn exact_roots() {
        assert_eq!(exact_sqrt(&int(2099520)), None);
        assert_eq!(exact_sqrt(&int(144)), Some(int(12)));
        assert_eq!(exact_cbrt(&int(-27)), Some(int(-3)));
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(1, 2)), None);
        assert_eq!(rational_cbrt(&rat(-8, 27)), Some(rat(-2, 3)));
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        // (a/b + c/d) over a common denominator equals the reduced result
        let pairs = [(3i64, 7i64, 5i64, 9i64), (123, 456, -789, 1011), (1, 3, 1, 6)];
        for (a, b, c, d) in pairs {
            let lhs = rat(a, b) + rat(c, d);
            let rhs = Rational::new(int(a * d + c * b), int(b * d));
            assert_eq!(lhs, rhs);
        }
    }
}
