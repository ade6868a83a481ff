//! Seminormed base algebras with an automorphism.
//!
//! Three concrete instances are provided:
//!
//! * [`EntireAlgebra`]: polynomial representatives of entire functions with
//!   the weighted `ℓ¹` seminorms `‖f‖_ρ = Σ |f_m| ρ^m`, acted on by the
//!   dilation `f(z) ↦ f(qz)` or the shift `f(z) ↦ f(z - 1)`;
//! * [`IntervalAlgebra`]: real polynomial representatives of `C(ℝ)` with the
//!   sup-seminorms over `[-n, n]`, acted on by the shift;
//! * [`FreeAlgebra`]: noncommutative polynomials in `g1, …, gn` with
//!   `Σ |a_v| ρ^{|v|}`, acted on diagonally.
//!
//! Every instance also knows its per-word twisted seminorm `‖·‖^{(w)}_λ`,
//! exactly where a closed form is known and as a certified upper bound
//! otherwise.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{check_positive, Error, Result};
use crate::free::{FreePoly, GenWord};
use crate::poly::{Coeff, EntirePoly, IntervalPoly, Poly};
use crate::roots;
use crate::scalar::{self, Scalar};
use crate::twisted::i_w_apply;
use crate::word::{self, Interval, Word};

/// Whether a seminorm value is the true value or only an upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exactness {
    Exact,
    UpperBound,
}

impl Exactness {
    /// `Exact` only if both are.
    pub fn and(self, other: Exactness) -> Exactness {
        match (self, other) {
            (Exactness::Exact, Exactness::Exact) => Exactness::Exact,
            _ => Exactness::UpperBound,
        }
    }
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exactness::Exact => write!(f, "Exact"),
            Exactness::UpperBound => write!(f, "UpperBound"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistedValue {
    pub value: f64,
    pub exactness: Exactness,
}

impl TwistedValue {
    pub fn exact(value: f64) -> Self {
        TwistedValue {
            value,
            exactness: Exactness::Exact,
        }
    }

    pub fn upper_bound(value: f64) -> Self {
        TwistedValue {
            value,
            exactness: Exactness::UpperBound,
        }
    }
}

/// What is known in closed form about `sup_e ‖α^{±1}(e)‖_λ / ‖e‖_λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorBound {
    Bounded(f64),
    Unbounded,
    Unknown,
}

/// Text hooks used when an element appears as a coefficient.
pub trait ElemText: fmt::Display {
    fn is_unit(&self) -> bool;
    /// A single term whose coefficient prints after a minus sign.
    fn is_negative_monomial(&self) -> bool;
    /// Needs parentheses when multiplied by something on the right.
    fn is_compound(&self) -> bool;
    /// A constant, i.e. a multiple of the unit.
    fn is_scalar(&self) -> bool;
    fn negated(&self) -> Self
    where
        Self: Sized;
}

impl<C: Coeff> ElemText for Poly<C> {
    fn is_unit(&self) -> bool {
        *self == Poly::one()
    }
    fn is_negative_monomial(&self) -> bool {
        let mut terms = self.terms();
        matches!((terms.next(), terms.next()), (Some((_, c)), None) if c.is_negative())
    }
    fn is_compound(&self) -> bool {
        let mut terms = self.terms();
        match (terms.next(), terms.next()) {
            (Some((_, c)), None) => c.is_compound(),
            _ => true,
        }
    }
    fn is_scalar(&self) -> bool {
        self.degree().unwrap_or(0) == 0
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl ElemText for FreePoly {
    fn is_unit(&self) -> bool {
        *self == FreePoly::one()
    }
    fn is_negative_monomial(&self) -> bool {
        let mut terms = self.terms();
        matches!((terms.next(), terms.next()), (Some((_, c)), None) if scalar::is_negative(c))
    }
    fn is_compound(&self) -> bool {
        let mut terms = self.terms();
        match (terms.next(), terms.next()) {
            (Some((_, c)), None) => scalar::is_compound(c),
            _ => true,
        }
    }
    fn is_scalar(&self) -> bool {
        self.degree().unwrap_or(0) == 0
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

/// A seminormed algebra `A` together with an automorphism `α`.
///
/// Elements are plain values; the algebra object carries the automorphism
/// and is passed to every operation.
pub trait BaseAlgebra: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + ElemText + Send + Sync;

    fn describe(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed_scalar(&self, c: &Scalar) -> Result<Self::Elem>;
    /// A named generator of the base (`z`, or `g1`, `g2`, …).
    fn variable(&self, name: &str) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `α^k(a)` for any integer `k`.
    fn aut(&self, a: &Self::Elem, k: i64) -> Self::Elem;

    /// `d/dz`, where the base has a distinguished variable.
    fn derivative(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn degree(&self, a: &Self::Elem) -> Option<usize>;
    /// Drop terms above `max_degree`; reports whether something nonzero was lost.
    fn truncate(&self, a: &Self::Elem, max_degree: usize) -> (Self::Elem, bool);

    /// `‖a‖_λ`.
    fn seminorm(&self, a: &Self::Elem, lambda: f64) -> Result<f64>;

    /// `‖a‖^{(w)}_λ`, the infimum over decompositions
    /// `a = Σ_j i_w(r_{1,j} ⊗ … ⊗ r_{|w|,j})` of `Σ_j Π_i ‖r_{i,j}‖_λ`.
    fn twisted_seminorm(&self, a: &Self::Elem, w: &Word, lambda: f64) -> Result<TwistedValue>;

    /// The same algebra with `α` replaced by `α^{-1}`.
    fn inverse(&self) -> Self;

    fn is_invertible(&self, a: &Self::Elem) -> bool;

    /// Basis monomials of degree at most `max_degree`.
    fn basis_monomials(&self, max_degree: usize) -> Vec<Self::Elem>;

    /// Closed-form knowledge of the operator ratio of `α^k`, `k = ±1`.
    fn operator_bound(&self, k: i64) -> OperatorBound;
}

/// `min_j ‖α^{-p(w, j)}(a)‖_λ` over `j = 0..|w|-1`: the whole of `a` placed
/// in a single slot of `i_w`, all other factors 1.
fn single_slot_bound<A: BaseAlgebra>(alg: &A, a: &A::Elem, w: &Word, lambda: f64) -> Result<f64> {
    let profile = w.profile();
    let mut best = f64::INFINITY;
    for &p in &profile[..w.len().max(1)] {
        best = best.min(alg.seminorm(&alg.aut(a, -p), lambda)?);
    }
    Ok(best)
}

/// Upper bound `Σ_j Π_i ‖r_{i,j}‖_λ` from an explicit decomposition, after
/// checking exactly that `Σ_j i_w(r_{1,j}, …, r_{|w|,j}) = a`.
pub fn generic_twisted_upper_bound<A: BaseAlgebra>(
    alg: &A,
    a: &A::Elem,
    w: &Word,
    lambda: f64,
    decomposition: &[Vec<A::Elem>],
) -> Result<TwistedValue> {
    check_positive(lambda)?;
    let mut rebuilt = alg.zero();
    let mut total = 0.0;
    for factors in decomposition {
        rebuilt = alg.add(&rebuilt, &i_w_apply(alg, w, factors)?);
        let mut product = 1.0;
        for r in factors {
            product *= alg.seminorm(r, lambda)?;
        }
        total += product;
    }
    if rebuilt != *a {
        return Err(Error::DecompositionMismatch);
    }
    Ok(TwistedValue::upper_bound(total))
}

// ---------------------------------------------------------------------------
// Entire functions

#[derive(Debug, Clone, PartialEq)]
pub enum EntireAut {
    Identity,
    /// `f(z) ↦ f(qz)`.
    Scale(Scalar),
    /// `f(z) ↦ f(z - step)`.
    Shift(i64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntireAlgebra {
    pub aut: EntireAut,
}

impl EntireAlgebra {
    pub fn identity() -> Self {
        EntireAlgebra {
            aut: EntireAut::Identity,
        }
    }

    pub fn scale(q: Scalar) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(EntireAlgebra {
            aut: EntireAut::Scale(q),
        })
    }

    /// The shift `f(z) ↦ f(z - 1)`.
    pub fn shift() -> Self {
        EntireAlgebra {
            aut: EntireAut::Shift(1),
        }
    }

    pub fn scaling_parameter(&self) -> Option<&Scalar> {
        match &self.aut {
            EntireAut::Scale(q) => Some(q),
            _ => None,
        }
    }
}

/// `‖f‖_ρ = Σ |f_m| ρ^m`.
pub fn entire_seminorm(f: &EntirePoly, rho: f64) -> Result<f64> {
    check_positive(rho)?;
    Ok(f.weighted_l1(rho))
}

/// `β_q^k(f)(z) = f(q^k z)`, exact.
pub fn entire_scale_aut(f: &EntirePoly, q: &Scalar, k: i64) -> Result<EntirePoly> {
    if q.is_zero() {
        return Err(Error::ZeroParameter);
    }
    Ok(f.dilate(&scalar::powi(q, k)?))
}

/// `α^k(f)(z) = f(z - k)` by exact binomial expansion.
pub fn entire_shift_aut(f: &EntirePoly, k: i64) -> EntirePoly {
    if k == 0 {
        return f.clone();
    }
    f.translate(&scalar::int(-k))
}

/// Closed form for the dilation automorphism:
/// `‖f‖^{(w)}_λ = ‖f‖_{λ |q|^{-k_min(w)}}` for `|q| < 1` and
/// `‖f‖_{λ |q|^{-k_max(w)}}` for `|q| > 1`.
pub fn entire_twisted_seminorm_scale(f: &EntirePoly, w: &Word, lambda: f64, q: &Scalar) -> Result<TwistedValue> {
    check_positive(lambda)?;
    let q_sq = scalar::modulus_sq(q);
    if q_sq.is_one() {
        return Err(Error::UnsupportedAutomorphism(
            "dilation with |q| = 1 has no closed-form twisted seminorm".into(),
        ));
    }
    if q.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let (kmin, kmax) = w.extremal_twists();
    let abs_q = scalar::modulus(q);
    let exponent = if q_sq < BigRational::one() { kmin } else { kmax };
    let radius = lambda * abs_q.powi(-exponent as i32);
    Ok(TwistedValue::exact(f.weighted_l1(radius)))
}

/// Words whose leading run of one letter is long enough for the shift's
/// single-variable seminorms to vanish: `‖·‖^{(k)}_ρ = 0` once
/// `k ≥ ⌊2ρ⌋ + 3`, and padding with further letters cannot increase it.
pub fn shift_zero_certificate(w: &Word, rho: f64) -> bool {
    let threshold = (2.0 * rho).floor() as usize + 3;
    w.leading_run(1) >= threshold || w.leading_run(2) >= threshold
}

impl BaseAlgebra for EntireAlgebra {
    type Elem = EntirePoly;

    fn describe(&self) -> String {
        match &self.aut {
            EntireAut::Identity => "entire functions, identity".into(),
            EntireAut::Scale(q) => format!("entire functions, f(z) -> f({}z)", scalar::fmt_scalar(q)),
            EntireAut::Shift(s) => format!("entire functions, f(z) -> f(z - {s})"),
        }
    }

    fn zero(&self) -> EntirePoly {
        Poly::zero()
    }
    fn one(&self) -> EntirePoly {
        Poly::one()
    }
    fn embed_scalar(&self, c: &Scalar) -> Result<EntirePoly> {
        Ok(Poly::constant(c.clone()))
    }
    fn variable(&self, name: &str) -> Option<EntirePoly> {
        (name == "z").then(Poly::z)
    }
    fn is_zero(&self, a: &EntirePoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &EntirePoly, b: &EntirePoly) -> EntirePoly {
        a + b
    }
    fn neg(&self, a: &EntirePoly) -> EntirePoly {
        -a
    }
    fn mul(&self, a: &EntirePoly, b: &EntirePoly) -> EntirePoly {
        a * b
    }

    fn aut(&self, a: &EntirePoly, k: i64) -> EntirePoly {
        match &self.aut {
            EntireAut::Identity => a.clone(),
            EntireAut::Scale(q) => entire_scale_aut(a, q, k).expect("nonzero scaling parameter"),
            EntireAut::Shift(step) => entire_shift_aut(a, k * step),
        }
    }

    fn derivative(&self, a: &EntirePoly) -> Option<EntirePoly> {
        Some(a.derivative())
    }
    fn degree(&self, a: &EntirePoly) -> Option<usize> {
        a.degree()
    }
    fn truncate(&self, a: &EntirePoly, max_degree: usize) -> (EntirePoly, bool) {
        a.truncate(max_degree)
    }

    fn seminorm(&self, a: &EntirePoly, lambda: f64) -> Result<f64> {
        entire_seminorm(a, lambda)
    }

    fn twisted_seminorm(&self, a: &EntirePoly, w: &Word, lambda: f64) -> Result<TwistedValue> {
        check_positive(lambda)?;
        if w.len() <= 1 {
            return Ok(TwistedValue::exact(a.weighted_l1(lambda)));
        }
        match &self.aut {
            EntireAut::Identity => Ok(TwistedValue::exact(a.weighted_l1(lambda))),
            EntireAut::Scale(q) => entire_twisted_seminorm_scale(a, w, lambda, q),
            EntireAut::Shift(step) => {
                if step.abs() == 1 && shift_zero_certificate(w, lambda) {
                    return Ok(TwistedValue::exact(0.0));
                }
                Ok(TwistedValue::upper_bound(single_slot_bound(self, a, w, lambda)?))
            }
        }
    }

    fn inverse(&self) -> Self {
        let aut = match &self.aut {
            EntireAut::Identity => EntireAut::Identity,
            EntireAut::Scale(q) => EntireAut::Scale(q.inv()),
            EntireAut::Shift(s) => EntireAut::Shift(-s),
        };
        EntireAlgebra { aut }
    }

    /// Units of `O(ℂ)` among polynomials are the nonzero constants.
    fn is_invertible(&self, a: &EntirePoly) -> bool {
        a.degree() == Some(0)
    }

    fn basis_monomials(&self, max_degree: usize) -> Vec<EntirePoly> {
        (0..=max_degree).map(|m| Poly::monomial(Scalar::one(), m)).collect()
    }

    fn operator_bound(&self, k: i64) -> OperatorBound {
        match &self.aut {
            EntireAut::Identity => OperatorBound::Bounded(1.0),
            // ‖β_q^k(z^m)‖_ρ / ‖z^m‖_ρ = |q|^{km}
            EntireAut::Scale(q) => {
                let growth = scalar::to_f64(&scalar::modulus_sq(q)).powi(k as i32);
                if growth <= 1.0 {
                    OperatorBound::Bounded(1.0)
                } else {
                    OperatorBound::Unbounded
                }
            }
            EntireAut::Shift(_) => OperatorBound::Unknown,
        }
    }
}

// ---------------------------------------------------------------------------
// Continuous functions on the line (polynomial representatives)

#[derive(Debug, Clone, PartialEq)]
pub enum IntervalAut {
    Identity,
    /// `f(x) ↦ f(x - step)`.
    Shift(i64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntervalAlgebra {
    pub aut: IntervalAut,
}

impl IntervalAlgebra {
    pub fn identity() -> Self {
        IntervalAlgebra {
            aut: IntervalAut::Identity,
        }
    }

    /// The shift `f(x) ↦ f(x - 1)`.
    pub fn shift() -> Self {
        IntervalAlgebra {
            aut: IntervalAut::Shift(1),
        }
    }
}

/// `sup_{x ∈ I} |f(x)|`, zero on the empty interval.
pub fn interval_seminorm(f: &IntervalPoly, interval: &Interval) -> f64 {
    roots::sup_norm(f, interval)
}

/// `‖f‖^{(w)}_{[-n,n]} = ‖f‖_{I_n(w)}` for the unit shift.
pub fn interval_twisted_seminorm_shift(f: &IntervalPoly, w: &Word, n: f64) -> Result<TwistedValue> {
    check_positive(n)?;
    Ok(TwistedValue::exact(interval_seminorm(f, &word::interval(w, n))))
}

impl BaseAlgebra for IntervalAlgebra {
    type Elem = IntervalPoly;

    fn describe(&self) -> String {
        match &self.aut {
            IntervalAut::Identity => "continuous functions, identity".into(),
            IntervalAut::Shift(s) => format!("continuous functions, f(x) -> f(x - {s})"),
        }
    }

    fn zero(&self) -> IntervalPoly {
        Poly::zero()
    }
    fn one(&self) -> IntervalPoly {
        Poly::one()
    }
    fn embed_scalar(&self, c: &Scalar) -> Result<IntervalPoly> {
        Ok(Poly::constant(BigRational::embed_scalar(c)?))
    }
    fn variable(&self, name: &str) -> Option<IntervalPoly> {
        (name == "z").then(Poly::z)
    }
    fn is_zero(&self, a: &IntervalPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &IntervalPoly, b: &IntervalPoly) -> IntervalPoly {
        a + b
    }
    fn neg(&self, a: &IntervalPoly) -> IntervalPoly {
        -a
    }
    fn mul(&self, a: &IntervalPoly, b: &IntervalPoly) -> IntervalPoly {
        a * b
    }

    fn aut(&self, a: &IntervalPoly, k: i64) -> IntervalPoly {
        match &self.aut {
            IntervalAut::Identity => a.clone(),
            IntervalAut::Shift(step) if k * step == 0 => a.clone(),
            IntervalAut::Shift(step) => a.translate(&BigRational::from_int(-k * step)),
        }
    }

    fn derivative(&self, a: &IntervalPoly) -> Option<IntervalPoly> {
        Some(a.derivative())
    }
    fn degree(&self, a: &IntervalPoly) -> Option<usize> {
        a.degree()
    }
    fn truncate(&self, a: &IntervalPoly, max_degree: usize) -> (IntervalPoly, bool) {
        a.truncate(max_degree)
    }

    fn seminorm(&self, a: &IntervalPoly, n: f64) -> Result<f64> {
        check_positive(n)?;
        Ok(interval_seminorm(a, &Interval::new(-n, n)))
    }

    fn twisted_seminorm(&self, a: &IntervalPoly, w: &Word, n: f64) -> Result<TwistedValue> {
        check_positive(n)?;
        let support = match &self.aut {
            IntervalAut::Identity => Interval::new(-n, n),
            IntervalAut::Shift(step) => word::shifted_interval(w, n, *step),
        };
        Ok(TwistedValue::exact(interval_seminorm(a, &support)))
    }

    fn inverse(&self) -> Self {
        let aut = match &self.aut {
            IntervalAut::Identity => IntervalAut::Identity,
            IntervalAut::Shift(s) => IntervalAut::Shift(-s),
        };
        IntervalAlgebra { aut }
    }

    /// Units of `C(ℝ)` among polynomials are those without real zeros.
    fn is_invertible(&self, a: &IntervalPoly) -> bool {
        roots::is_nowhere_zero(a)
    }

    fn basis_monomials(&self, max_degree: usize) -> Vec<IntervalPoly> {
        (0..=max_degree)
            .map(|m| Poly::monomial(BigRational::one(), m))
            .collect()
    }

    fn operator_bound(&self, _k: i64) -> OperatorBound {
        match &self.aut {
            IntervalAut::Identity => OperatorBound::Bounded(1.0),
            IntervalAut::Shift(_) => OperatorBound::Unknown,
        }
    }
}

// ---------------------------------------------------------------------------
// Free algebra

#[derive(Debug, Clone, PartialEq)]
pub enum FreeAut {
    Identity,
    /// `g_i ↦ q_i g_i`.
    Diagonal(Vec<Scalar>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FreeAlgebra {
    pub generators: usize,
    pub aut: FreeAut,
}

impl FreeAlgebra {
    pub fn identity(generators: usize) -> Self {
        FreeAlgebra {
            generators,
            aut: FreeAut::Identity,
        }
    }

    pub fn diagonal(factors: Vec<Scalar>) -> Result<Self> {
        if factors.iter().any(Zero::is_zero) {
            return Err(Error::ZeroParameter);
        }
        Ok(FreeAlgebra {
            generators: factors.len(),
            aut: FreeAut::Diagonal(factors),
        })
    }

    /// `Π_i q_i^{k · occurrences of g_i in v}`.
    fn eigenvalue(&self, v: &GenWord, k: i64) -> Scalar {
        match &self.aut {
            FreeAut::Identity => Scalar::one(),
            FreeAut::Diagonal(qs) => qs.iter().enumerate().fold(Scalar::one(), |acc, (i, q)| {
                let e = k * v.occurrences(i) as i64;
                acc * scalar::powi(q, e).expect("nonzero diagonal factor")
            }),
        }
    }

    fn isometric(&self) -> bool {
        match &self.aut {
            FreeAut::Identity => true,
            FreeAut::Diagonal(qs) => qs.iter().all(|q| scalar::modulus_sq(q).is_one()),
        }
    }
}

/// `Σ |a_v| ρ^{|v|}`.
pub fn free_seminorm(a: &FreePoly, rho: f64) -> Result<f64> {
    check_positive(rho)?;
    Ok(a.weighted_l1(rho))
}

impl BaseAlgebra for FreeAlgebra {
    type Elem = FreePoly;

    fn describe(&self) -> String {
        match &self.aut {
            FreeAut::Identity => format!("free algebra on {} generators, identity", self.generators),
            FreeAut::Diagonal(qs) => format!(
                "free algebra on {} generators, diagonal ({})",
                self.generators,
                qs.iter().map(scalar::fmt_scalar).collect::<Vec<_>>().join(", ")
            ),
        }
    }

    fn zero(&self) -> FreePoly {
        FreePoly::zero()
    }
    fn one(&self) -> FreePoly {
        FreePoly::one()
    }
    fn embed_scalar(&self, c: &Scalar) -> Result<FreePoly> {
        Ok(FreePoly::constant(c.clone()))
    }
    fn variable(&self, name: &str) -> Option<FreePoly> {
        let index: usize = name.strip_prefix('g')?.parse().ok()?;
        (1..=self.generators)
            .contains(&index)
            .then(|| FreePoly::generator(index - 1))
    }
    fn is_zero(&self, a: &FreePoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FreePoly, b: &FreePoly) -> FreePoly {
        a.add(b)
    }
    fn neg(&self, a: &FreePoly) -> FreePoly {
        a.neg()
    }
    fn mul(&self, a: &FreePoly, b: &FreePoly) -> FreePoly {
        a.mul(b)
    }

    fn aut(&self, a: &FreePoly, k: i64) -> FreePoly {
        if k == 0 {
            return a.clone();
        }
        a.map_coeffs(|v, c| c * self.eigenvalue(v, k))
    }

    fn derivative(&self, _a: &FreePoly) -> Option<FreePoly> {
        None
    }
    fn degree(&self, a: &FreePoly) -> Option<usize> {
        a.degree()
    }
    fn truncate(&self, a: &FreePoly, max_degree: usize) -> (FreePoly, bool) {
        a.truncate(max_degree)
    }

    fn seminorm(&self, a: &FreePoly, rho: f64) -> Result<f64> {
        free_seminorm(a, rho)
    }

    /// Exact when `α` is isometric; otherwise each monomial is placed in
    /// its cheapest slot of `i_w`, which is only an upper bound.
    fn twisted_seminorm(&self, a: &FreePoly, w: &Word, rho: f64) -> Result<TwistedValue> {
        check_positive(rho)?;
        if w.len() <= 1 || self.isometric() {
            return Ok(TwistedValue::exact(a.weighted_l1(rho)));
        }
        let mut total = 0.0;
        for (v, c) in a.terms() {
            let mono = FreePoly::term(c.clone(), v.clone());
            total += single_slot_bound(self, &mono, w, rho)?;
        }
        Ok(TwistedValue::upper_bound(total))
    }

    fn inverse(&self) -> Self {
        let aut = match &self.aut {
            FreeAut::Identity => FreeAut::Identity,
            FreeAut::Diagonal(qs) => FreeAut::Diagonal(qs.iter().map(|q| q.inv()).collect()),
        };
        FreeAlgebra {
            generators: self.generators,
            aut,
        }
    }

    fn is_invertible(&self, a: &FreePoly) -> bool {
        a.degree() == Some(0)
    }

    fn basis_monomials(&self, max_degree: usize) -> Vec<FreePoly> {
        let mut words = vec![GenWord::default()];
        let mut frontier = vec![GenWord::default()];
        for _ in 0..max_degree {
            frontier = frontier
                .iter()
                .flat_map(|v| (0..self.generators).map(move |g| v.concat(&GenWord(vec![g as u8]))))
                .collect();
            words.extend(frontier.iter().cloned());
        }
        words.into_iter().map(|v| FreePoly::term(Scalar::one(), v)).collect()
    }

    fn operator_bound(&self, k: i64) -> OperatorBound {
        match &self.aut {
            FreeAut::Identity => OperatorBound::Bounded(1.0),
            FreeAut::Diagonal(qs) => {
                let contracting = qs
                    .iter()
                    .all(|q| scalar::to_f64(&scalar::modulus_sq(q)).powi(k as i32) <= 1.0);
                if contracting {
                    OperatorBound::Bounded(1.0)
                } else {
                    OperatorBound::Unbounded
                }
            }
        }
    }
}
