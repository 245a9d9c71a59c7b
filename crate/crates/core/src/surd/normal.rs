//! Exact normal forms for radical expressions.
//!
//! A value normalizes into one of three layers:
//!   * `Multi` — an element of a multi-quadratic field (sums of rational
//!     multiples of square roots of squarefree integers);
//!   * `Ext` — u + v*theta where theta = sqrt(s) for one adaptively adjoined
//!     radicand s that is not a square in the multi-quadratic layer
//!     (e.g. theta = sqrt(14 + 4 sqrt(2)));
//!   * `SqrtExt` — scale * sqrt(w) for w in the Ext layer, the outermost
//!     shape of Roth's deepest printed solutions.
//!
//! Cube roots never normalize; comparisons fall back to certified interval
//! arithmetic in that case.

use crate::exact::{rational_cbrt, Rational};
use crate::surd::expr::RadicalExpr;
use crate::surd::interval::{round_decimal, EvalError, RatInterval, PRECISION_LADDER};
use crate::surd::multi::MultiSurd;
use crate::surd::nested::{denest_to_multi, sqrt_rational_multi, square_part_bounded};
use crate::surd::quadratic::QuadraticSurd;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("cube roots do not normalize exactly")]
    CubeRoot,
    #[error("square root of a negative value: {0}")]
    NegativeSqrt(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("expression leaves the supported radical tower")]
    OutOfClass,
}

/// u + v * sqrt(s); invariant: v != 0 and s is not a square in the
/// multi-quadratic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtValue {
    pub s: MultiSurd,
    pub u: MultiSurd,
    pub v: MultiSurd,
}

impl ExtValue {
    fn eval_interval(&self, prec: u32) -> RatInterval {
        let theta = self
            .s
            .eval_interval(prec)
            .sqrt(prec, "theta")
            .expect("adjoined radicand is positive");
        self.u.eval_interval(prec).add(&theta.mul(&self.v.eval_interval(prec)))
    }

    fn is_zero(&self) -> bool {
        // u + v theta = 0 with v != 0 requires u^2 = v^2 s and opposite signs
        if self.v.is_zero() {
            return self.u.is_zero();
        }
        if self.u.square() != self.v.square().mul(&self.s) {
            return false;
        }
        self.u.sign() == self.v.sign().reverse()
    }

    fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        if self.u.is_zero() {
            return self.v.sign();
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
        unreachable!("nonzero extension value failed to separate from zero")
    }

    /// (u + v theta)^2 = u^2 + v^2 s + 2 u v theta.
    fn square(&self) -> NormalValue {
        let u2 = self.u.square().add(&self.v.square().mul(&self.s));
        let v2 = self.u.mul(&self.v).scale(&Rational::from_integer(2.into()));
        NormalValue::ext_or_multi(self.s.clone(), u2, v2)
    }
}

/// A fully normalized exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalValue {
    Multi(MultiSurd),
    Ext(ExtValue),
    /// scale * sqrt(w); scale is a nonzero rational, w a positive Ext value.
    SqrtExt { scale: Rational, w: ExtValue },
}

impl NormalValue {
    pub fn rational(q: Rational) -> Self {
        NormalValue::Multi(MultiSurd::from_rational(q))
    }

    pub fn from_surd(s: &QuadraticSurd) -> Self {
        NormalValue::Multi(MultiSurd::from_surd(s))
    }

    fn ext_or_multi(s: MultiSurd, u: MultiSurd, v: MultiSurd) -> Self {
        if v.is_zero() {
            NormalValue::Multi(u)
        } else {
            NormalValue::Ext(ExtValue { s, u, v })
        }
    }

    pub fn as_multi(&self) -> Option<&MultiSurd> {
        match self {
            NormalValue::Multi(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_multi().and_then(|m| m.as_rational())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            NormalValue::Multi(m) => m.is_zero(),
            NormalValue::Ext(e) => e.is_zero(),
            NormalValue::SqrtExt { .. } => false, // w > 0 and scale != 0
        }
    }

    pub fn sign(&self) -> Ordering {
        match self {
            NormalValue::Multi(m) => m.sign(),
            NormalValue::Ext(e) => e.sign(),
            NormalValue::SqrtExt { scale, .. } => scale.cmp(&Rational::zero()),
        }
    }

    pub fn eval_interval(&self, prec: u32) -> RatInterval {
        match self {
            NormalValue::Multi(m) => m.eval_interval(prec),
            NormalValue::Ext(e) => e.eval_interval(prec),
            NormalValue::SqrtExt { scale, w } => w
                .eval_interval(prec)
                .sqrt(prec, "sqrt(w)")
                .expect("w is positive")
                .scale(scale),
        }
    }

    /// The exact square, which always drops one level of nesting.
    pub fn square(&self) -> NormalValue {
        match self {
            NormalValue::Multi(m) => NormalValue::Multi(m.square()),
            NormalValue::Ext(e) => e.square(),
            NormalValue::SqrtExt { scale, w } => {
                let s2 = scale * scale;
                NormalValue::ext_or_multi(
                    w.s.clone(),
                    w.u.scale(&s2),
                    w.v.scale(&s2),
                )
            }
        }
    }

    pub fn neg(&self) -> NormalValue {
        match self {
            NormalValue::Multi(m) => NormalValue::Multi(m.neg()),
            NormalValue::Ext(e) => NormalValue::Ext(ExtValue {
                s: e.s.clone(),
                u: e.u.neg(),
                v: e.v.neg(),
            }),
            NormalValue::SqrtExt { scale, w } => NormalValue::SqrtExt {
                scale: -scale,
                w: w.clone(),
            },
        }
    }

    pub fn try_add(&self, other: &NormalValue) -> Result<NormalValue, NormalizeError> {
        use NormalValue::*;
        Ok(match (self, other) {
            (Multi(x), Multi(y)) => Multi(x.add(y)),
            (Ext(e), Multi(m)) | (Multi(m), Ext(e)) => {
                NormalValue::ext_or_multi(e.s.clone(), e.u.add(m), e.v.clone())
            }
            (Ext(x), Ext(y)) => {
                if x.s != y.s {
                    return Err(NormalizeError::OutOfClass);
                }
                NormalValue::ext_or_multi(x.s.clone(), x.u.add(&y.u), x.v.add(&y.v))
            }
            (SqrtExt { scale, w }, other) | (other, SqrtExt { scale, w }) => {
                if other.is_zero() {
                    SqrtExt {
                        scale: scale.clone(),
                        w: w.clone(),
                    }
                } else {
                    return Err(NormalizeError::OutOfClass);
                }
            }
        })
    }

    pub fn try_sub(&self, other: &NormalValue) -> Result<NormalValue, NormalizeError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &NormalValue) -> Result<NormalValue, NormalizeError> {
        use NormalValue::*;
        Ok(match (self, other) {
            (Multi(x), Multi(y)) => Multi(x.mul(y)),
            (Ext(e), Multi(m)) | (Multi(m), Ext(e)) => {
                NormalValue::ext_or_multi(e.s.clone(), e.u.mul(m), e.v.mul(m))
            }
            (Ext(x), Ext(y)) => {
                if x.s != y.s {
                    return Err(NormalizeError::OutOfClass);
                }
                let u = x.u.mul(&y.u).add(&x.v.mul(&y.v).mul(&x.s));
                let v = x.u.mul(&y.v).add(&x.v.mul(&y.u));
                NormalValue::ext_or_multi(x.s.clone(), u, v)
            }
            (SqrtExt { scale, w }, Multi(m)) | (Multi(m), SqrtExt { scale, w }) => {
                match m.as_rational() {
                    Some(q) if q.is_zero() => NormalValue::rational(Rational::zero()),
                    Some(q) => SqrtExt {
                        scale: scale * q,
                        w: w.clone(),
                    },
                    None => return Err(NormalizeError::OutOfClass),
                }
            }
            _ => return Err(NormalizeError::OutOfClass),
        })
    }

    pub fn try_invert(&self) -> Result<NormalValue, NormalizeError> {
        use NormalValue::*;
        Ok(match self {
            Multi(m) => Multi(m.inv().ok_or(NormalizeError::OutOfClass)?),
            Ext(e) => {
                // 1/(u + v theta) = (u - v theta) / (u^2 - v^2 s)
                let norm = e.u.square().sub(&e.v.square().mul(&e.s));
                let ninv = norm.inv().ok_or(NormalizeError::OutOfClass)?;
                NormalValue::ext_or_multi(e.s.clone(), e.u.mul(&ninv), e.v.neg().mul(&ninv))
            }
            SqrtExt { .. } => return Err(NormalizeError::OutOfClass),
        })
    }

    pub fn try_div(&self, other: &NormalValue) -> Result<NormalValue, NormalizeError> {
        if other.is_zero() {
            return Err(NormalizeError::DivisionByZero("value division".into()));
        }
        self.try_mul(&other.try_invert()?)
    }

    /// Exact square root of a nonnegative value, in a fresh tower context.
    pub fn sqrt_value(&self) -> Result<NormalValue, NormalizeError> {
        sqrt_with_ctx(self.clone(), &mut None, "value")
    }

    /// Builds a printable expression tree for the value.
    pub fn to_expr(&self) -> RadicalExpr {
        match self {
            NormalValue::Multi(m) => multi_to_expr(m),
            NormalValue::Ext(e) => {
                let theta = multi_to_expr(&e.s).sqrt();
                let vterm = mul_expr(&e.v, theta);
                if e.u.is_zero() {
                    vterm
                } else {
                    multi_to_expr(&e.u).add(vterm)
                }
            }
            NormalValue::SqrtExt { scale, w } => {
                let root = NormalValue::Ext(w.clone()).to_expr().sqrt();
                if scale.is_one() {
                    root
                } else {
                    RadicalExpr::num(scale.clone()).mul(root)
                }
            }
        }
    }
}

impl fmt::Display for NormalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

fn multi_to_expr(m: &MultiSurd) -> RadicalExpr {
    if m.is_zero() {
        return RadicalExpr::num_int(0);
    }
    let mut acc: Option<RadicalExpr> = None;
    for (r, c) in m.terms() {
        let (mag, negative) = (c.abs(), c.is_negative());
        let term = if r.is_one() {
            RadicalExpr::num(mag)
        } else {
            let root = RadicalExpr::num(Rational::from_integer(r.clone())).sqrt();
            if mag.is_one() {
                root
            } else {
                RadicalExpr::num(mag).mul(root)
            }
        };
        acc = Some(match acc {
            None => {
                if negative {
                    RadicalExpr::Neg(Box::new(term))
                } else {
                    term
                }
            }
            Some(prev) => {
                if negative {
                    prev.sub(term)
                } else {
                    prev.add(term)
                }
            }
        });
    }
    acc.unwrap()
}

fn mul_expr(coeff: &MultiSurd, root: RadicalExpr) -> RadicalExpr {
    if let Some(q) = coeff.as_rational() {
        if q.is_one() {
            return root;
        }
        return RadicalExpr::num(q).mul(root);
    }
    // parenthesization is handled by the printer
    multi_to_expr(coeff).mul(root)
}

/// Expression normalizer; adjoins at most one extension radicand.
struct Normalizer {
    adjoined: Option<MultiSurd>,
}

impl Normalizer {
    fn new() -> Self {
        Normalizer { adjoined: None }
    }

    fn normalize(&mut self, e: &RadicalExpr) -> Result<NormalValue, NormalizeError> {
        match e {
            RadicalExpr::Num(q) => Ok(NormalValue::rational(q.clone())),
            RadicalExpr::Neg(x) => self.normalize(x).map(|v| self.neg(v)),
            RadicalExpr::Add(a, b) => {
                let (a, b) = (self.normalize(a)?, self.normalize(b)?);
                self.add(a, b)
            }
            RadicalExpr::Sub(a, b) => {
                let (a, b) = (self.normalize(a)?, self.normalize(b)?);
                let nb = self.neg(b);
                self.add(a, nb)
            }
            RadicalExpr::Mul(a, b) => {
                let (a, b) = (self.normalize(a)?, self.normalize(b)?);
                self.mul(a, b)
            }
            RadicalExpr::Div(a, b) => {
                let (a, b) = (self.normalize(a)?, self.normalize(b)?);
                if b.is_zero() {
                    return Err(NormalizeError::DivisionByZero(e.to_string()));
                }
                let inv = self.invert(b)?;
                self.mul(a, inv)
            }
            RadicalExpr::Sqrt(x) => {
                let v = self.normalize(x)?;
                self.sqrt(v, x)
            }
            RadicalExpr::Cbrt(x) => {
                let v = self.normalize(x)?;
                if let Some(q) = v.as_rational() {
                    if let Some(c) = rational_cbrt(&q) {
                        return Ok(NormalValue::rational(c));
                    }
                }
                Err(NormalizeError::CubeRoot)
            }
        }
    }

    fn neg(&self, v: NormalValue) -> NormalValue {
        v.neg()
    }

    fn add(&mut self, a: NormalValue, b: NormalValue) -> Result<NormalValue, NormalizeError> {
        a.try_add(&b)
    }

    fn mul(&mut self, a: NormalValue, b: NormalValue) -> Result<NormalValue, NormalizeError> {
        a.try_mul(&b)
    }

    fn invert(&mut self, v: NormalValue) -> Result<NormalValue, NormalizeError> {
        v.try_invert()
    }

    fn sqrt(
        &mut self,
        v: NormalValue,
        source: &RadicalExpr,
    ) -> Result<NormalValue, NormalizeError> {
        sqrt_with_ctx(v, &mut self.adjoined, &source.to_string())
    }
}

/// Square root with an explicit extension context: within one expression all
/// adjoined radicands must canonicalize identically.
fn sqrt_with_ctx(
    v: NormalValue,
    ctx: &mut Option<MultiSurd>,
    source: &str,
) -> Result<NormalValue, NormalizeError> {
    match v.sign() {
        Ordering::Less => return Err(NormalizeError::NegativeSqrt(source.to_string())),
        Ordering::Equal => return Ok(NormalValue::rational(Rational::zero())),
        Ordering::Greater => {}
    }
    match v {
        NormalValue::Multi(m) => {
            // rational radicand
            if let Some(q) = m.as_rational() {
                if let Some(root) = sqrt_rational_multi(&q) {
                    return Ok(NormalValue::Multi(root));
                }
                return adjoin(m, ctx);
            }
            // single-radicand surd: try the two-term denesting first
            if let Some(surd) = m.as_quadratic_surd() {
                if let Some(root) = denest_to_multi(&surd) {
                    return Ok(NormalValue::Multi(root));
                }
            }
            adjoin(m, ctx)
        }
        NormalValue::Ext(e) => Ok(NormalValue::SqrtExt {
            scale: Rational::one(),
            w: e,
        }),
        NormalValue::SqrtExt { .. } => Err(NormalizeError::OutOfClass),
    }
}

/// Adjoins theta = sqrt(x) for a positive non-square x, canonicalized by
/// pulling the square part of the integerized content into the scale.
fn adjoin(x: MultiSurd, ctx: &mut Option<MultiSurd>) -> Result<NormalValue, NormalizeError> {
    let (scale, s) = canonical_radicand(&x).ok_or(NormalizeError::OutOfClass)?;
    match ctx {
        None => *ctx = Some(s.clone()),
        Some(existing) if *existing == s => {}
        Some(_) => return Err(NormalizeError::OutOfClass),
    }
    Ok(NormalValue::Ext(ExtValue {
        s,
        u: MultiSurd::zero(),
        v: MultiSurd::from_rational(scale),
    }))
}

/// Writes x = (scale)^2 * S with S an integer-coefficient multi-surd whose
/// content carries no square factor; equal values map to the same S.
fn canonical_radicand(x: &MultiSurd) -> Option<(Rational, MultiSurd)> {
    let mut denom = crate::exact::Int::one();
    for (_, c) in x.terms() {
        denom = denom.lcm(c.denom());
    }
    let d2 = Rational::from_integer(&denom * &denom);
    let mut content: Option<crate::exact::Int> = None;
    let mut int_terms: Vec<(crate::exact::Int, crate::exact::Int)> = Vec::new();
    for (r, c) in x.terms() {
        let ic = (c * &d2).to_integer();
        content = Some(match content {
            None => ic.clone().abs(),
            Some(g) => crate::exact::gcd(&g, &ic),
        });
        int_terms.push((r.clone(), ic));
    }
    let content = content?;
    let (sq, _) = square_part_bounded(&content)?;
    let sq2 = &sq * &sq;
    let mut s = MultiSurd::zero();
    for (r, ic) in int_terms {
        s = s.add(&MultiSurd::from_term(
            Rational::from_integer(ic / &sq2),
            r,
        ));
    }
    Some((Rational::new(sq, denom), s))
}

/// Normalizes an expression into the exact layer, when it stays inside it.
pub fn normalize(e: &RadicalExpr) -> Result<NormalValue, NormalizeError> {
    Normalizer::new().normalize(e)
}

/// Outcome of an exact radical comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    Unequal,
    Undecided,
}

fn exact_compare(a: &NormalValue, b: &NormalValue) -> Option<bool> {
    use NormalValue::*;
    match (a, b) {
        (Multi(x), Multi(y)) => Some(x == y),
        (Multi(m), Ext(e)) | (Ext(e), Multi(m)) => {
            Some(e.v.is_zero() && e.u == *m || {
                // e - m is zero?
                let diff = ExtValue {
                    s: e.s.clone(),
                    u: e.u.sub(m),
                    v: e.v.clone(),
                };
                diff.is_zero()
            })
        }
        (Ext(x), Ext(y)) => {
            if x.s == y.s {
                let diff = ExtValue {
                    s: x.s.clone(),
                    u: x.u.sub(&y.u),
                    v: x.v.sub(&y.v),
                };
                return Some(diff.is_zero());
            }
            // different towers: compare pure radicals through their squares
            if x.u.is_zero() && y.u.is_zero() {
                let sx = x.v.sign();
                let sy = y.v.sign();
                if sx != sy {
                    return Some(false);
                }
                return Some(x.v.square().mul(&x.s) == y.v.square().mul(&y.s));
            }
            None
        }
        _ => {
            // at least one square-of-extension: compare signs, then squares
            let sa = a.sign();
            let sb = b.sign();
            if sa != sb {
                return Some(false);
            }
            if sa == Ordering::Equal {
                return Some(true);
            }
            let (qa, qb) = (a.square(), b.square());
            // squares live one level down; avoid infinite regress by only
            // recursing when the shape actually shrank
            let shrank = !matches!(qa, SqrtExt { .. }) && !matches!(qb, SqrtExt { .. });
            if shrank {
                exact_compare(&qa, &qb)
            } else {
                None
            }
        }
    }
}

/// Exact decision when both sides normalize; certified-interval separation
/// otherwise (cube-root expressions), with an explicit undecided outcome.
pub fn radical_equals(a: &RadicalExpr, b: &RadicalExpr) -> Equivalence {
    let na = normalize(a);
    let nb = normalize(b);
    if let (Ok(x), Ok(y)) = (&na, &nb) {
        if let Some(eq) = exact_compare(x, y) {
            return if eq {
                Equivalence::Equal
            } else {
                Equivalence::Unequal
            };
        }
    }
    numeric_comparison(a, b)
}

fn numeric_comparison(a: &RadicalExpr, b: &RadicalExpr) -> Equivalence {
    for prec in PRECISION_LADDER {
        let (ia, ib) = match (a.eval_interval(prec), b.eval_interval(prec)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => continue, // domain straddles can resolve at higher precision
        };
        if ia.disjoint(&ib) {
            return Equivalence::Unequal;
        }
    }
    Equivalence::Undecided
}

/// The exact rational ratio a/b when it exists (used to diagnose solutions
/// wrong by a pure scale factor).
pub fn rational_ratio(a: &RadicalExpr, b: &RadicalExpr) -> Option<Rational> {
    let na = normalize(a).ok()?;
    let nb = normalize(b).ok()?;
    if nb.is_zero() {
        return None;
    }
    if let (NormalValue::Multi(x), NormalValue::Multi(y)) = (&na, &nb) {
        if let Some(r) = x.div(y).and_then(|d| d.as_rational()) {
            return Some(r);
        }
        return None;
    }
    // same-sign values whose squares are comparable: ratio = sqrt(a^2/b^2)
    let sa = na.sign();
    let sb = nb.sign();
    if sa == Ordering::Equal {
        return Some(Rational::zero());
    }
    let (qa, qb) = (na.square(), nb.square());
    let (x, y) = (qa.as_multi()?, qb.as_multi()?);
    let ratio2 = x.div(y)?.as_rational()?;
    let root = crate::exact::rational_sqrt(&ratio2)?;
    Some(if sa == sb { root } else { -root })
}

/// Certified decimal rendering: exact normalization first, raw interval
/// refinement for cube-root expressions.
pub fn to_decimal(e: &RadicalExpr, digits: u32) -> Result<String, EvalError> {
    if let Ok(n) = normalize(e) {
        for prec in PRECISION_LADDER {
            if let Some(s) = round_decimal(&n.eval_interval(prec), digits) {
                return Ok(s);
            }
        }
        return Err(EvalError::PrecisionExhausted);
    }
    let mut last_err = None;
    for prec in PRECISION_LADDER {
        match e.eval_interval(prec) {
            Ok(iv) => {
                if let Some(s) = round_decimal(&iv, digits) {
                    return Ok(s);
                }
            }
            Err(err) => last_err = Some(err),
        }
    }
    Err(last_err.unwrap_or(EvalError::PrecisionExhausted))
}

/// Certified enclosure of a - b at the given precision, for discrepancy
/// reporting.
pub fn difference_interval(
    a: &RadicalExpr,
    b: &RadicalExpr,
    prec: u32,
) -> Result<RatInterval, EvalError> {
    Ok(a.eval_interval(prec)?.sub(&b.eval_interval(prec)?))
}
