//! Exact arithmetic substrate: rationals, dense polynomials, gcds,
//! factorization over Q, resultants and polynomials over Q(z).

mod factor;
mod ffpoly;
mod gcd;
pub(crate) mod linalg;
pub(crate) mod modp;
mod poly;
mod resultant;

pub use ffpoly::{function_field_gcd, FunctionFieldPolynomial};
pub use poly::Polynomial;
pub use resultant::{resultant, resultant_pencil};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial gcd, monic. Both zero is an error.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> crate::Result<Polynomial> {
    if p.is_zero() && q.is_zero() {
        return Err(crate::Error::InvalidInput("gcd(0, 0) is undefined".into()));
    }
    Ok(p.gcd(q))
}

/// Squarefree decomposition with strictly increasing multiplicities.
pub fn squarefree_decomposition(p: &Polynomial) -> crate::Result<Vec<(Polynomial, u32)>> {
    if p.is_zero() {
        return Err(crate::Error::InvalidInput(
            "squarefree decomposition of the zero polynomial".into(),
        ));
    }
    Ok(p.squarefree())
}
