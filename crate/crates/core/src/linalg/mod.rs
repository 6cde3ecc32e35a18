//! Exact linear algebra over the rationals.

mod lincomb;
mod rowspace;

pub use lincomb::LinComb;
pub use rowspace::RowSpace;

/// Arbitrary-precision rational numbers, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n / d`.
///
/// Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The rational integer `n`.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
