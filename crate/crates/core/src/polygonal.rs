//! Polygonal (n-gonal) numbers and the reduction of "x is an n-gonal root
//! of Q(x)" statements to a standard monic equation P(x) = 0.
//!
//! The n-gonal number of side x is O_n(x) = (n-2)/2 x^2 - (n-4)/2 x.

use crate::exact::{Int, Rational};
use crate::polynomial::Polynomial;
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolygonalError {
    #[error("a polygon needs at least 3 sides, got {0}")]
    TooFewSides(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonalKind {
    n: u64,
}

impl PolygonalKind {
    pub fn new(n: u64) -> Result<Self, PolygonalError> {
        if n < 3 {
            return Err(PolygonalError::TooFewSides(n));
        }
        Ok(PolygonalKind { n })
    }

    pub fn sides(&self) -> u64 {
        self.n
    }
}

/// The quadratic O_n as a polynomial.
pub fn polygonal_poly(k: PolygonalKind) -> Polynomial {
    let n = Int::from(k.sides());
    let two = Int::from(2);
    Polynomial::from_coeffs(vec![
        Rational::from_integer(Int::from(0)),
        -Rational::new(&n - Int::from(4), two.clone()),
        Rational::new(&n - Int::from(2), two),
    ])
}

/// Outcome of the standard-form reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardForm {
    /// P with positive leading coefficient; a root of P = 0 is exactly an
    /// n-gonal root of q.
    Poly(Polynomial),
    /// q was identical to O_n: the equation holds for every x.
    Degenerate,
}

/// Returns P = q - O_n, negated if needed so the leading coefficient is
/// positive. A vanishing difference is reported as a degenerate outcome.
pub fn to_standard_form(k: PolygonalKind, q: &Polynomial) -> StandardForm {
    normalize_leading(q.sub(&polygonal_poly(k)))
}

/// Sign normalization shared by the polygonal and plain-equation paths.
pub fn normalize_leading(p: Polynomial) -> StandardForm {
    match p.leading() {
        None => StandardForm::Degenerate,
        Some(c) if c.is_negative() => StandardForm::Poly(p.neg()),
        Some(_) => StandardForm::Poly(p),
    }
}
