//! Dense univariate polynomials in `z` with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Coefficient field of a [`Poly`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn modulus(&self) -> f64;
    fn from_int(n: i64) -> Self;
    fn to_scalar(&self) -> Scalar;
    fn embed_scalar(s: &Scalar) -> Result<Self>;
    fn is_negative(&self) -> bool;
    fn is_compound(&self) -> bool;
    fn fmt_coeff(&self) -> String;
}

impl Coeff for BigRational {
    fn modulus(&self) -> f64 {
        scalar::to_f64(&self.abs())
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn to_scalar(&self) -> Scalar {
        scalar::from_rational(self.clone())
    }
    fn embed_scalar(s: &Scalar) -> Result<Self> {
        if scalar::is_real(s) {
            Ok(s.re.clone())
        } else {
            Err(Error::NonRealCoefficient(scalar::fmt_scalar(s)))
        }
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_compound(&self) -> bool {
        false
    }
    fn fmt_coeff(&self) -> String {
        scalar::fmt_rational(self)
    }
}

impl Coeff for Scalar {
    fn modulus(&self) -> f64 {
        scalar::modulus(self)
    }
    fn from_int(n: i64) -> Self {
        scalar::int(n)
    }
    fn to_scalar(&self) -> Scalar {
        self.clone()
    }
    fn embed_scalar(s: &Scalar) -> Result<Self> {
        Ok(s.clone())
    }
    fn is_negative(&self) -> bool {
        scalar::is_negative(self)
    }
    fn is_compound(&self) -> bool {
        scalar::is_compound(self)
    }
    fn fmt_coeff(&self) -> String {
        scalar::fmt_scalar(self)
    }
}

/// `Σ c_m z^m`, stored densely with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial with Gaussian-rational coefficients (entire-function base).
pub type EntirePoly = Poly<Scalar>;
/// Real polynomial with rational coefficients (stand-in for `C(ℝ)`).
pub type IntervalPoly = Poly<BigRational>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c z^m`.
    pub fn monomial(c: C, m: usize) -> Self {
        let mut coeffs = vec![C::zero(); m + 1];
        coeffs[m] = c;
        Self::new(coeffs)
    }

    pub fn z() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `z^m` (zero beyond the degree).
    pub fn coeff(&self, m: usize) -> C {
        self.coeffs.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero `(m, c_m)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &C)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(m, c)| c.clone() * C::from_int(m as i64))
                .collect(),
        )
    }

    /// Drop every term of degree above `max_degree`; reports whether a
    /// nonzero term was lost.
    pub fn truncate(&self, max_degree: usize) -> (Self, bool) {
        if self.coeffs.len() <= max_degree + 1 {
            return (self.clone(), false);
        }
        (Self::new(self.coeffs[..=max_degree].to_vec()), true)
    }

    /// `Σ |c_m| ρ^m`.
    pub fn weighted_l1(&self, rho: f64) -> f64 {
        let mut acc = 0.0;
        let mut power = 1.0;
        for c in &self.coeffs {
            if !c.is_zero() {
                acc += c.modulus() * power;
            }
            power *= rho;
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `f(z + shift)` by exact Horner composition.
    pub fn translate(&self, shift: &C) -> Self {
        let lin = Self::new(vec![shift.clone(), C::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// `c_m ↦ factor^m c_m`, i.e. `f(factor · z)`.
    pub fn dilate(&self, factor: &C) -> Self {
        let mut power = C::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.clone() * power.clone());
            power = power * factor.clone();
        }
        Self::new(coeffs)
    }

    /// Euclidean division by a nonzero divisor over the coefficient field.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self)
    where
        C: std::ops::Div<Output = C>,
    {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top].clone() / lead.clone();
            let shift = top - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - c.clone() * d.clone();
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.clone() + b.clone(),
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => C::zero(),
                })
                .collect(),
        )
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Canonical text: highest degree first, e.g. `3/2*z^2 - z + 1`.
impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let negative = c.is_negative();
            let shown = if negative && !first { -c.clone() } else { c.clone() };
            if !first {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            f.write_str(&monomial_text(&shown, m, "z"))?;
            first = false;
        }
        Ok(())
    }
}

/// `c*var^m` with unit coefficients elided.
pub(crate) fn monomial_text<C: Coeff>(c: &C, m: usize, var: &str) -> String {
    let power = match m {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{m}"),
    };
    if power.is_empty() {
        return c.fmt_coeff();
    }
    if c.is_one() {
        power
    } else if (-c.clone()).is_one() {
        format!("-{power}")
    } else {
        format!("{}*{power}", c.fmt_coeff())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, real};

    #[test]
    fn arithmetic() {
        let f = EntirePoly::from_ints(&[1, 1]);
        let g = EntirePoly::from_ints(&[-1, 1]);
        assert_eq!(&f * &g, EntirePoly::from_ints(&[-1, 0, 1]));
        assert_eq!(&f - &f, EntirePoly::zero());
        assert_eq!((&f + &g).degree(), Some(1));
    }

    #[test]
    fn translate_is_binomial_expansion() {
        let z2 = EntirePoly::monomial(int(1), 2);
        assert_eq!(z2.translate(&int(-1)), EntirePoly::from_ints(&[1, -2, 1]));
        assert_eq!(z2.translate(&int(-1)).translate(&int(1)), z2);
    }

    #[test]
    fn dilate_scales_coefficients() {
        let f = EntirePoly::from_ints(&[1, 1, 1]);
        assert_eq!(f.dilate(&real(1, 2)).coeff(2), real(1, 4));
    }

    #[test]
    fn division() {
        let f = IntervalPoly::from_ints(&[-1, 0, 1]);
        let g = IntervalPoly::from_ints(&[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, IntervalPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn display() {
        let f = EntirePoly::new(vec![int(1), int(-1), real(3, 2)]);
        assert_eq!(f.to_string(), "3/2*z^2 - z + 1");
        assert_eq!(EntirePoly::zero().to_string(), "0");
        assert_eq!(EntirePoly::from_ints(&[0, -1]).to_string(), "-z");
    }

    #[test]
    fn weighted_norm() {
        assert_eq!(EntirePoly::from_ints(&[1, 2]).weighted_l1(1.0), 3.0);
        assert_eq!(EntirePoly::from_ints(&[1, -2, 1]).weighted_l1(1.0), 4.0);
    }
}
