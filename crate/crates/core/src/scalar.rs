//! Exact Gaussian-rational scalars.
//!
//! Coefficient arithmetic never rounds. Moduli are only converted to
//! binary64 when a seminorm is evaluated.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A Gaussian rational `a + b i` with `a, b ∈ ℚ`.
pub type Scalar = Complex<BigRational>;

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn real(num: i64, den: i64) -> Scalar {
    Complex::new(rational(num, den), BigRational::zero())
}

pub fn from_rational(r: BigRational) -> Scalar {
    Complex::new(r, BigRational::zero())
}

pub fn int(n: i64) -> Scalar {
    real(n, 1)
}

pub fn imag_unit() -> Scalar {
    Complex::new(BigRational::zero(), BigRational::one())
}

pub fn is_real(s: &Scalar) -> bool {
    s.im.is_zero()
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact squared modulus `a² + b²`.
pub fn modulus_sq(s: &Scalar) -> BigRational {
    &s.re * &s.re + &s.im * &s.im
}

/// `|s|` in binary64, computed as the square root of the exact `|s|²`.
pub fn modulus(s: &Scalar) -> f64 {
    if s.im.is_zero() {
        return to_f64(&s.re.abs());
    }
    to_f64(&modulus_sq(s)).sqrt()
}

/// `s^k` for any integer `k`; fails on `0^k` with `k < 0`.
pub fn powi(s: &Scalar, k: i64) -> Result<Scalar> {
    if k < 0 {
        if s.is_zero() {
            return Err(Error::ZeroParameter);
        }
        return Ok(pow_u(&s.inv(), k.unsigned_abs()));
    }
    Ok(pow_u(s, k as u64))
}

fn pow_u(s: &Scalar, mut e: u64) -> Scalar {
    let mut base = s.clone();
    let mut acc = Scalar::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Exact rational from a finite binary64 value.
pub fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::InvalidArgument(format!("non-finite value {x}")))
}

pub fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign class of a scalar for printing sums: a coefficient is written
/// after a `-` when it is a negative real or a negative pure imaginary.
pub fn is_negative(s: &Scalar) -> bool {
    if s.im.is_zero() {
        s.re.is_negative()
    } else if s.re.is_zero() {
        s.im.is_negative()
    } else {
        false
    }
}

/// Whether printing the scalar needs parentheses when it multiplies something.
pub fn is_compound(s: &Scalar) -> bool {
    !s.re.is_zero() && !s.im.is_zero()
}

/// Canonical text: `3/2`, `-2`, `i`, `-3/2i`, `(1+2i)`, `(1/2-i)`.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.im.is_zero() {
        return fmt_rational(&s.re);
    }
    let imag = |im: &BigRational| -> String {
        if im.is_one() {
            "i".to_string()
        } else if (-im).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", fmt_rational(im))
        }
    };
    if s.re.is_zero() {
        return imag(&s.im);
    }
    let mut out = String::from("(");
    out.push_str(&fmt_rational(&s.re));
    if s.im.is_positive() {
        out.push('+');
    }
    let _ = write!(out, "{})", imag(&s.im));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_and_inverses() {
        let q = real(3, 2);
        assert_eq!(powi(&q, 3).unwrap(), real(27, 8));
        assert_eq!(powi(&q, -2).unwrap(), real(4, 9));
        assert_eq!(powi(&q, 0).unwrap(), int(1));
        assert!(powi(&Scalar::zero(), -1).is_err());
        let g = Complex::new(rational(1, 1), rational(1, 1));
        assert_eq!(powi(&g, 2).unwrap(), Complex::new(rational(0, 1), rational(2, 1)));
    }

    #[test]
    fn modulus_of_gaussian() {
        let g = Complex::new(rational(3, 1), rational(4, 1));
        assert_eq!(modulus(&g), 5.0);
        assert_eq!(modulus(&real(-1, 2)), 0.5);
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_scalar(&real(3, 2)), "3/2");
        assert_eq!(fmt_scalar(&int(-2)), "-2");
        assert_eq!(fmt_scalar(&imag_unit()), "i");
        assert_eq!(fmt_scalar(&Complex::new(rational(0, 1), rational(-3, 2))), "-3/2i");
        assert_eq!(fmt_scalar(&Complex::new(rational(1, 1), rational(2, 1))), "(1+2i)");
        assert_eq!(fmt_scalar(&Complex::new(rational(1, 2), rational(-1, 1))), "(1/2-i)");
    }
}
