//! Integer polynomials in one variable and exact rational Lagrange
//! interpolation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients in ascending degree, no trailing
/// zeros (the zero polynomial stores nothing).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic_of_degree(&self, d: usize) -> bool {
        self.coeffs.len() == d + 1 && self.coeffs[d].is_one()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    /// Space-separated ascending coefficients; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Coefficients (ascending) of the unique polynomial of degree below
/// `points.len()` through the given points. Abscissae must be distinct.
pub fn lagrange_interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let k = points.len();
    let mut result = vec![BigRational::zero(); k];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // Build Π_{j != i} (t - x_j) and the denominator Π_{j != i} (x_i - x_j).
        let mut basis = vec![BigRational::zero(); k];
        basis[0] = BigRational::one();
        let mut len = 1;
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            denom *= xi - xj;
            // Multiply basis by (t - x_j).
            for idx in (0..len).rev() {
                let c = basis[idx].clone();
                basis[idx + 1] += &c;
                basis[idx] = -c * xj;
            }
            len += 1;
        }
        let scale = yi / denom;
        for (r, b) in result.iter_mut().zip(basis) {
            *r += b * &scale;
        }
    }
    result
}

/// Converts rational coefficients to an integer polynomial, failing on any
/// non-integer coefficient.
pub fn into_int_polynomial(coeffs: Vec<BigRational>) -> Result<IntPolynomial> {
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if !c.is_integer() {
            return Err(Error::Interpolation(format!("non-integer coefficient {c}")));
        }
        out.push(c.to_integer());
    }
    Ok(IntPolynomial::new(out))
}
