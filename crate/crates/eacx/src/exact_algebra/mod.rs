//! Exact arithmetic substrate: rationals, dense rational matrices, univariate
//! integer polynomials and rational functions, and sparse multigraded
//! Laurent polynomials with integer coefficients.

mod multipoly;
mod qmatrix;
mod unipoly;

pub use multipoly::MultigradedPolynomial;
pub use qmatrix::{qmatrix_rank, QMatrix};
pub use unipoly::{rational_function_eval_at_one, UniPoly, UniRationalFunction};

/// Basis of the right nullspace of `m`.
pub fn qmatrix_kernel_basis(m: &QMatrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Reduced fraction with positive denominator (normalized on construction).
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or a decimal-free integer literal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::BadInput(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
