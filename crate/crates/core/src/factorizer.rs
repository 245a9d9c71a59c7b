//! The historical solution engine: rational-root stripping, monic integer
//! quadratic-factor search over divisors of the constant term, and extraction
//! of the "true" (strictly positive real) roots as exact surds.
//!
//! The quadratic search mirrors the column method: divide by `x^2 - y*x + c`
//! with `y` left symbolic, which leaves two remainder conditions in `y`.
//! Their eliminant is monic up to sign, so an integer `y` must divide its
//! constant term; every candidate is then confirmed by exact division.

use crate::exact::{divisors, exact_sqrt, Int, Rational};
use crate::polynomial::Polynomial;
use crate::surd::QuadraticSurd;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("polynomial must be monic with integer coefficients")]
    NotMonicInteger,
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("no complete factorization into integer factors of degree <= 2 exists")]
    NotFullyFactorable,
}

/// A complete factorization into monic integer factors of degree 1 or 2,
/// quadratics irreducible over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(Polynomial, u32)] {
        &self.factors
    }

    /// Product of all factors with multiplicity.
    pub fn expand(&self) -> Polynomial {
        let mut p = Polynomial::one();
        for (f, m) in &self.factors {
            for _ in 0..*m {
                p = p.mul(f);
            }
        }
        p
    }

    /// Canonical order: ascending degree, then lexicographic coefficients by
    /// ascending power.
    fn canonicalize(mut factors: Vec<Polynomial>) -> Self {
        factors.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| {
                    let n = a.coeffs().len();
                    for k in 0..n {
                        let ord = a.coeff(k).cmp(&b.coeff(k));
                        if ord != std::cmp::Ordering::Equal {
                            return ord;
                        }
                    }
                    std::cmp::Ordering::Equal
                })
        });
        let mut grouped: Vec<(Polynomial, u32)> = Vec::new();
        for f in factors {
            match grouped.last_mut() {
                Some((g, m)) if *g == f => *m += 1,
                _ => grouped.push((f, 1)),
            }
        }
        Factorization { factors: grouped }
    }

    pub fn display<'a>(&'a self, var: char) -> FactorizationDisplay<'a> {
        FactorizationDisplay { f: self, var }
    }
}

pub struct FactorizationDisplay<'a> {
    f: &'a Factorization,
    var: char,
}

impl fmt::Display for FactorizationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.factors.is_empty() {
            return write!(f, "1");
        }
        for (p, m) in &self.f.factors {
            write!(f, "({})", p.display(self.var))?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display('x').fmt(f)
    }
}

fn require_monic_integer(p: &Polynomial) -> Result<(), FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    if !p.is_monic() || !p.has_integer_coeffs() {
        return Err(FactorError::NotMonicInteger);
    }
    Ok(())
}

/// All rational roots with multiplicity (ascending), plus the root-free
/// cofactor. For a monic integer polynomial every rational root is an
/// integer divisor of the constant term.
pub fn find_linear_factors(p: &Polynomial) -> Result<(Vec<(Rational, u32)>, Polynomial), FactorError> {
    require_monic_integer(p)?;
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    let (zeros, mut rest) = p.strip_zero_roots();
    if zeros > 0 {
        roots.push((Rational::zero(), zeros as u32));
    }
    if rest.degree() == Some(0) {
        return Ok((roots, rest));
    }
    let constant = rest.coeff(0).to_integer().abs();
    let mut candidates: Vec<Int> = Vec::new();
    for d in divisors(&constant).map_err(|_| FactorError::ZeroPolynomial)? {
        candidates.push(-&d);
        candidates.push(d);
    }
    candidates.sort();
    for cand in candidates {
        let r = Rational::from_integer(cand);
        let mut mult = 0u32;
        loop {
            if rest.degree().map_or(true, |d| d < 1) {
                break;
            }
            if !rest.evaluate(&r).is_zero() {
                break;
            }
            let lin = Polynomial::from_coeffs(vec![-&r, Rational::one()]);
            let (q, rem) = rest.divide(&lin).unwrap();
            debug_assert!(rem.is_zero());
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((roots, rest))
}

/// Remainder of `p` divided by `x^2 - y*x + c`, as a pair of polynomials in
/// `y` (coefficients of x^1 and x^0 of the remainder).
fn symbolic_remainder(p: &Polynomial, c: &Int) -> (Polynomial, Polynomial) {
    // Track the remainder row as polynomials in y: dividing top-down,
    // r_{k} plays the role of the running coefficient.
    // Representing each x-coefficient as a Polynomial in y.
    let n = p.degree().unwrap();
    let c = Rational::from_integer(c.clone());
    // work[k] = coefficient of x^k as a polynomial in y
    let mut work: Vec<Polynomial> = (0..=n)
        .map(|k| Polynomial::constant(p.coeff(k)))
        .collect();
    let y = Polynomial::monomial(1);
    for k in (2..=n).rev() {
        let lead = work[k].clone();
        if lead.is_zero() {
            continue;
        }
        // subtract lead * x^(k-2) * (x^2 - y x + c)
        work[k] = Polynomial::zero();
        work[k - 1] = work[k - 1].add(&lead.mul(&y));
        work[k - 2] = work[k - 2].sub(&lead.scale(&c));
    }
    (work.remove(1), work.remove(0))
}

/// Integer roots of a polynomial in one variable with rational coefficients.
/// Degrees 1 and 2 are solved in closed form; higher degrees fall back to
/// the rational-root theorem on the constant term.
fn integer_roots(p: &Polynomial) -> Vec<Int> {
    if p.is_zero() {
        return Vec::new();
    }
    let (zeros, q) = p.strip_zero_roots();
    let mut roots: Vec<Int> = Vec::new();
    if zeros > 0 {
        roots.push(Int::zero());
    }
    match q.degree() {
        None | Some(0) => {}
        Some(1) => {
            let r = -q.coeff(0) / q.coeff(1);
            if r.is_integer() {
                roots.push(r.to_integer());
            }
        }
        Some(2) => {
            // roots of a x^2 + b x + c via the discriminant
            let a = q.coeff(2);
            let b = q.coeff(1);
            let c = q.coeff(0);
            let disc = &b * &b - Rational::from_integer(Int::from(4)) * &a * &c;
            if let Some(s) = crate::exact::rational_sqrt(&disc) {
                for sign in [Rational::one(), -Rational::one()] {
                    let r = (-&b + sign * &s) / (Rational::from_integer(Int::from(2)) * &a);
                    if r.is_integer() && !roots.contains(&r.to_integer()) {
                        roots.push(r.to_integer());
                    }
                }
            }
        }
        Some(_) => {
            // clear denominators, then try divisors of the constant term
            let mut den = Int::one();
            for c in q.coeffs() {
                den = &den / crate::exact::gcd(&den, c.denom()) * c.denom();
            }
            let ints: Vec<Int> = q
                .coeffs()
                .iter()
                .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
                .collect();
            let constant = ints[0].abs();
            if let Ok(divs) = divisors(&constant) {
                for d in divs {
                    for cand in [d.clone(), -d] {
                        let r = Rational::from_integer(cand.clone());
                        if q.evaluate(&r).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// GCD in Q[y], normalized monic.
fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.divide(&b).unwrap();
        a = b;
        b = r;
    }
    if let Some(lead) = a.leading().cloned() {
        if !lead.is_one() {
            return a.scale(&lead.recip());
        }
    }
    a
}

/// Integer candidates for `y` such that `x^2 - y*x + c` could divide `p`:
/// the common roots of the two remainder conditions. The eliminant (their
/// gcd) is monic after normalization, so integer roots divide its constant
/// term.
fn quadratic_factor_candidates(p: &Polynomial, c: &Int) -> Vec<Int> {
    let (r1, r0) = symbolic_remainder(p, c);
    if r1.is_zero() && r0.is_zero() {
        return Vec::new(); // cannot happen for nonzero p of degree >= 2
    }
    let eliminant = poly_gcd(&r1, &r0);
    if eliminant.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    integer_roots(&eliminant)
}

/// Searches for an integer `y` with `x^2 - y*x + c` dividing `p` exactly.
/// Returns the smallest such `y` when several exist.
pub fn find_quadratic_factor(p: &Polynomial, c: &Int) -> Result<Option<Int>, FactorError> {
    require_monic_integer(p)?;
    if p.degree().map_or(true, |d| d < 2) || c.is_zero() {
        return Ok(None);
    }
    for y in quadratic_factor_candidates(p, c) {
        let quad = quad_poly(&y, c);
        let (_, rem) = p.divide(&quad).unwrap();
        if rem.is_zero() {
            return Ok(Some(y));
        }
    }
    Ok(None)
}

fn quad_poly(y: &Int, c: &Int) -> Polynomial {
    Polynomial::from_coeffs(vec![
        Rational::from_integer(c.clone()),
        Rational::from_integer(-y),
        Rational::one(),
    ])
}

/// Full factorization into monic integer linear and irreducible quadratic
/// factors. `constant_bound`, when given, skips quadratic constant candidates
/// `|c| > bound` — a search accelerator only, never used during verification.
pub fn factor_completely(
    p: &Polynomial,
    constant_bound: Option<&Int>,
) -> Result<Factorization, FactorError> {
    require_monic_integer(p)?;
    let (roots, mut rest) = find_linear_factors(p)?;
    let mut factors: Vec<Polynomial> = Vec::new();
    for (r, m) in roots {
        let lin = Polynomial::from_coeffs(vec![-r, Rational::one()]);
        for _ in 0..m {
            factors.push(lin.clone());
        }
    }
    // peel irreducible quadratic factors off the root-free cofactor
    loop {
        match rest.degree() {
            None => unreachable!("cofactor of a monic polynomial is nonzero"),
            Some(0) => break,
            Some(1) => unreachable!("linear factors were already stripped"),
            Some(2) => {
                factors.push(rest.clone());
                rest = Polynomial::one();
            }
            Some(_) => {
                let constant = rest.coeff(0).to_integer().abs();
                let mut found = false;
                'search: for d in
                    divisors(&constant).map_err(|_| FactorError::NotFullyFactorable)?
                {
                    if let Some(bound) = constant_bound {
                        if &d > bound {
                            continue;
                        }
                    }
                    for c in [d.clone(), -d] {
                        for y in quadratic_factor_candidates(&rest, &c) {
                            let quad = quad_poly(&y, &c);
                            let (q, rem) = rest.divide(&quad).unwrap();
                            if rem.is_zero() {
                                factors.push(quad);
                                rest = q;
                                found = true;
                                break 'search;
                            }
                        }
                    }
                }
                if !found {
                    return Err(FactorError::NotFullyFactorable);
                }
            }
        }
    }
    let f = Factorization::canonicalize(factors);
    debug_assert_eq!(f.expand(), *p);
    Ok(f)
}

/// Exactly the strictly positive real roots, ascending, as exact surds.
pub fn true_roots(f: &Factorization) -> Vec<(QuadraticSurd, u32)> {
    let mut out: Vec<(QuadraticSurd, u32)> = Vec::new();
    for (p, m) in f.factors() {
        match p.degree() {
            Some(1) => {
                let root = -p.coeff(0);
                if root.is_positive() {
                    out.push((QuadraticSurd::from_rational(root), *m));
                }
            }
            Some(2) => {
                let b = p.coeff(1);
                let c = p.coeff(0);
                for root in QuadraticSurd::quadratic_roots(&b, &c) {
                    if root.sign() == std::cmp::Ordering::Greater {
                        out.push((root, *m));
                    }
                }
            }
            _ => {}
        }
    }
    out.sort_by(|a, b| a.0.cmp_surd(&b.0));
    out
}

/// Discriminant of a monic quadratic x^2 + bx + c given as a polynomial.
pub fn quadratic_discriminant(p: &Polynomial) -> Option<Int> {
    if p.degree() != Some(2) || !p.is_monic() || !p.has_integer_coeffs() {
        return None;
    }
    let b = p.coeff(1).to_integer();
    let c = p.coeff(0).to_integer();
    Some(&b * &b - Int::from(4) * c)
}

/// True when the quadratic has no rational root (non-square discriminant).
pub fn quadratic_is_irreducible(p: &Polynomial) -> bool {
    match quadratic_discriminant(p) {
        Some(d) => {
            if d.is_negative() {
                true
            } else {
                exact_sqrt(&d).is_none()
            }
        }
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat_int};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn linear_factors_of_ii_f184() {
        let poly = p("x^5 + 50x^4 + 722x^3 + 3820x^2 + 4416x - 11520");
        let (roots, cofactor) = find_linear_factors(&poly).unwrap();
        assert_eq!(
            roots,
            vec![(rat_int(-30), 1), (rat_int(-8), 2)]
        );
        assert_eq!(cofactor, p("x^2 + 4x - 6"));
    }

    #[test]
    fn linear_factors_none() {
        let poly = p("x^2 + x + 9");
        let (roots, cofactor) = find_linear_factors(&poly).unwrap();
        assert!(roots.is_empty());
        assert_eq!(cofactor, poly);
    }

    #[test]
    fn linear_factors_with_zero_root() {
        // x (x^2 - 9x + 17) (x + 5), expanded by the polynomial oracle
        let expanded = Polynomial::monomial(1)
            .mul(&p("x^2 - 9x + 17"))
            .mul(&p("x + 5"));
        let (roots, cofactor) = find_linear_factors(&expanded).unwrap();
        assert_eq!(roots, vec![(rat_int(-5), 1), (rat_int(0), 1)]);
        assert_eq!(cofactor, p("x^2 - 9x + 17"));
    }

    #[test]
    fn quadratic_factor_search_i_f184() {
        let p_i = p("x^5 - 12x^4 + 10x^3 + 248x^2 - 423x - 924");
        assert_eq!(find_quadratic_factor(&p_i, &int(33)).unwrap(), Some(int(12)));
        assert_eq!(find_quadratic_factor(&p_i, &int(-7)).unwrap(), Some(int(4)));
        let p_xxiii = p("x^5 - 8x^4 - 20x^3 + 416x^2 - 2700x + 7072");
        assert_eq!(find_quadratic_factor(&p_xxiii, &int(2)).unwrap(), None);
    }

    #[test]
    fn quadratic_factor_exhaustive_oracle() {
        // independent check that no x^2 - yx + 2 divides P_XXIII: try every
        // y in a range that safely covers the root bound
        let p_xxiii = p("x^5 - 8x^4 - 20x^3 + 416x^2 - 2700x + 7072");
        for y in -6000i64..=6000 {
            let quad = quad_poly(&int(y), &int(2));
            let (_, rem) = p_xxiii.divide(&quad).unwrap();
            assert!(!rem.is_zero(), "unexpected divisor with y = {y}");
        }
    }

    #[test]
    fn factor_xxi() {
        let p_xxi = p("x^5 + 2x^4 - 71x^3 + 78x^2 - 75x + 450");
        let f = factor_completely(&p_xxi, None).unwrap();
        assert_eq!(f.to_string(), "(x+10)(x^2+x+3)(x^2-9x+15)");
        assert_eq!(f.expand(), p_xxi);
    }

    #[test]
    fn factor_xxi_with_bound() {
        // divisors of 450 below 25: pruning keeps the same factorization
        let p_xxi = p("x^5 + 2x^4 - 71x^3 + 78x^2 - 75x + 450");
        let f = factor_completely(&p_xxi, Some(&int(25))).unwrap();
        assert_eq!(f.to_string(), "(x+10)(x^2+x+3)(x^2-9x+15)");
        // a bound that excludes every usable constant defeats the search
        assert_eq!(
            factor_completely(&p_xxi, Some(&int(2))),
            Err(FactorError::NotFullyFactorable)
        );
    }

    #[test]
    fn factor_ii_f189_z_form() {
        let poly = p("z^6 + 22z^5 - 326z^4 - 4584z^3 + 26309z^2 - 95038z + 624416");
        let f = factor_completely(&poly, None).unwrap();
        assert_eq!(
            f.display('z').to_string(),
            "(z+16)(z+26)(z^2+19)(z^2-20z+79)"
        );
    }

    #[test]
    fn factor_iii_f189_fails() {
        // after removing the zero root
        let poly = p("x^5 + 22x^4 - 13x^3 - 106x^2 - 1583x - 5185");
        assert_eq!(
            factor_completely(&poly, None),
            Err(FactorError::NotFullyFactorable)
        );
    }

    #[test]
    fn factor_repeated_quadratic() {
        let sq = p("x^2 + x + 3");
        let poly = sq.mul(&sq).mul(&p("x + 2"));
        let f = factor_completely(&poly, None).unwrap();
        assert_eq!(f.to_string(), "(x+2)(x^2+x+3)^2");
    }

    #[test]
    fn true_roots_examples() {
        let f = factor_completely(&p("x^5 - 8x^4 - 20x^3 + 416x^2 - 2700x + 7072"), None).unwrap();
        let roots = true_roots(&f);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].0.to_string(), "6-sqrt(2)");
        assert_eq!(roots[1].0.to_string(), "6+sqrt(2)");

        let f = factor_completely(&p("x^5 + 2x^4 - 71x^3 + 78x^2 - 75x + 450"), None).unwrap();
        let roots = true_roots(&f);
        assert_eq!(roots[0].0.to_string(), "9/2-1/2*sqrt(21)");
        assert_eq!(roots[1].0.to_string(), "9/2+1/2*sqrt(21)");

        let f = factor_completely(&p("x + 1").mul(&p("x^2 + 1")), None).unwrap();
        assert!(true_roots(&f).is_empty());
    }

    #[test]
    fn irreducibility_of_returned_quadratics() {
        let f = factor_completely(&p("x^5 - 12x^4 + 10x^3 + 248x^2 - 423x - 924"), None).unwrap();
        for (q, _) in f.factors() {
            if q.degree() == Some(2) {
                assert!(quadratic_is_irreducible(q));
            }
        }
    }

    #[test]
    fn constant_one_factors_as_empty() {
        let f = factor_completely(&Polynomial::one(), None).unwrap();
        assert!(f.factors().is_empty());
        assert_eq!(f.to_string(), "1");
    }
}
