//! Exact arithmetic in quadratic extensions, nested radicals, a general
//! radical expression tree with certified decimal evaluation, and Cardan's
//! formula for real cubic roots.

pub mod cardan;
pub mod expr;
pub mod interval;
pub mod multi;
pub mod nested;
pub mod normal;
pub mod quadratic;

pub use cardan::{cardan_real_root, CardanError, CardanRoot};
pub use expr::{ExprParseError, RadicalExpr};
pub use interval::{EvalError, RatInterval};
pub use multi::MultiSurd;
pub use nested::{denest, sqrt_of_surd, NestedError, NestedRadical};
pub use normal::{
    difference_interval, normalize, radical_equals, rational_ratio, to_decimal, Equivalence,
    NormalValue, NormalizeError,
};
pub use quadratic::QuadraticSurd;
