//! Exact arithmetic substrate: arbitrary-precision rationals, dense rational
//! matrices, and univariate polynomials with rational coefficients.
//!
//! Nothing in this module rounds. Every value is immutable once built.

mod linalg;
mod polynomial;

pub use linalg::{determinant, generalized_cross_product, matrix_rank, RationalMatrix};
pub use polynomial::{
    binomial_polynomial, from_hilbert_coefficients, interpolate_polynomial,
    to_hilbert_coefficients, Polynomial, TermOrder,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Reduced fraction with positive denominator. Zero is `0/1`.
pub type Rational = num_rational::BigRational;

/// Ordered list of rationals with a context-fixed length.
pub type RationalVector = Vec<Rational>;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn from_u64(value: u64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact dot product of an integer exponent vector with a rational vector.
pub fn dot(a: &[u64], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (&x, y)| acc + y * from_u64(x))
}

/// Divides a nonzero integer vector by the gcd of its entries.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators of a rational vector, returning the primitive integer
/// vector pointing in the same direction (zero stays zero).
pub fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    primitive(&scaled)
}

pub(crate) fn is_integral(x: &Rational) -> bool {
    x.denom().is_one()
}
