//! Ore extensions `A[t; α, δ]` and Laurent extensions `A[t, t^{-1}; α]`,
//! their `ℓ¹`-type seminorms, and a probe for localizability of `α`.

use std::collections::BTreeMap;
use std::fmt;

use crate::base::{BaseAlgebra, ElemText, OperatorBound};
use crate::error::{check_positive, Error, Result};
use crate::twisted::write_signed_terms;

/// The derivation part of an Ore extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Derivation {
    #[default]
    Zero,
    /// `d/dz` on polynomial bases.
    Dz,
}

/// `Σ a_i t^i` with finitely many nonzero `a_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentOrePoly<E> {
    coeffs: BTreeMap<i64, E>,
}

impl<E> Default for LaurentOrePoly<E> {
    fn default() -> Self {
        LaurentOrePoly {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<E> LaurentOrePoly<E> {
    /// Terms by increasing exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &E)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, i: i64) -> Option<&E> {
        self.coeffs.get(&i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }
}

fn t_power(i: i64) -> String {
    match i {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{i}"),
    }
}

/// Highest exponent first: `(2*z)*t^3 + t^-1`.
impl<E: ElemText + Clone> fmt::Display for LaurentOrePoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.coeffs.iter().rev().map(|(&i, a)| (a, t_power(i))),
            "*",
            |a: &E| !a.is_scalar() || a.is_compound(),
        )
    }
}

/// Outcome of checking `δ(ab) = α(a)δ(b) + δ(a)b` on sample pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationCheck<E> {
    pub passed: bool,
    pub pairs_checked: usize,
    pub counterexample: Option<(E, E)>,
}

fn apply_derivation<A: BaseAlgebra>(base: &A, d: Derivation, a: &A::Elem) -> Result<A::Elem> {
    match d {
        Derivation::Zero => Ok(base.zero()),
        Derivation::Dz => base
            .derivative(a)
            .ok_or_else(|| Error::Unsupported(format!("d/dz is not defined on {}", base.describe()))),
    }
}

/// Checks the twisted Leibniz rule exactly on every ordered pair of
/// `samples`, stopping at the first failure.
pub fn alpha_derivation_check<A: BaseAlgebra>(
    base: &A,
    derivation: Derivation,
    samples: &[A::Elem],
) -> Result<DerivationCheck<A::Elem>> {
    let mut checked = 0;
    for a in samples {
        for b in samples {
            checked += 1;
            let lhs = apply_derivation(base, derivation, &base.mul(a, b))?;
            let rhs = base.add(
                &base.mul(&base.aut(a, 1), &apply_derivation(base, derivation, b)?),
                &base.mul(&apply_derivation(base, derivation, a)?, b),
            );
            if lhs != rhs {
                return Ok(DerivationCheck {
                    passed: false,
                    pairs_checked: checked,
                    counterexample: Some((a.clone(), b.clone())),
                });
            }
        }
    }
    Ok(DerivationCheck {
        passed: true,
        pairs_checked: checked,
        counterexample: None,
    })
}

/// `A[t; α, δ]` (nonnegative support) or, with `δ = 0`, `A[t, t^{-1}; α]`.
#[derive(Debug, Clone, PartialEq)]
pub struct OreAlgebra<A> {
    base: A,
    derivation: Derivation,
}

impl<A: BaseAlgebra> OreAlgebra<A> {
    /// The Laurent extension `A[t, t^{-1}; α]`.
    pub fn laurent(base: A) -> Self {
        OreAlgebra {
            base,
            derivation: Derivation::Zero,
        }
    }

    /// `A[t; α, δ]`; a nonzero `δ` must satisfy the twisted Leibniz rule
    /// on monomials of degree at most 3.
    pub fn new(base: A, derivation: Derivation) -> Result<Self> {
        if derivation != Derivation::Zero {
            let samples = base.basis_monomials(3);
            let report = alpha_derivation_check(&base, derivation, &samples)?;
            if let Some((a, b)) = report.counterexample {
                return Err(Error::InvalidDerivation(a.to_string(), b.to_string()));
            }
        }
        Ok(OreAlgebra { base, derivation })
    }

    pub fn base(&self) -> &A {
        &self.base
    }

    pub fn derivation(&self) -> Derivation {
        self.derivation
    }

    pub fn zero(&self) -> LaurentOrePoly<A::Elem> {
        LaurentOrePoly::default()
    }

    pub fn one(&self) -> LaurentOrePoly<A::Elem> {
        self.term(self.base.one(), 0)
    }

    pub fn constant(&self, a: A::Elem) -> LaurentOrePoly<A::Elem> {
        self.term(a, 0)
    }

    pub fn t(&self) -> LaurentOrePoly<A::Elem> {
        self.term(self.base.one(), 1)
    }

    pub fn term(&self, a: A::Elem, i: i64) -> LaurentOrePoly<A::Elem> {
        let mut out = self.zero();
        self.accumulate(&mut out, i, a);
        out
    }

    pub fn from_terms(&self, iter: impl IntoIterator<Item = (i64, A::Elem)>) -> LaurentOrePoly<A::Elem> {
        let mut out = self.zero();
        for (i, a) in iter {
            self.accumulate(&mut out, i, a);
        }
        out
    }

    fn accumulate(&self, out: &mut LaurentOrePoly<A::Elem>, i: i64, a: A::Elem) {
        let sum = match out.coeffs.remove(&i) {
            Some(prev) => self.base.add(&prev, &a),
            None => a,
        };
        if !self.base.is_zero(&sum) {
            out.coeffs.insert(i, sum);
        }
    }

    pub fn add(&self, f: &LaurentOrePoly<A::Elem>, g: &LaurentOrePoly<A::Elem>) -> LaurentOrePoly<A::Elem> {
        let mut out = f.clone();
        for (&i, a) in &g.coeffs {
            self.accumulate(&mut out, i, a.clone());
        }
        out
    }

    pub fn neg(&self, f: &LaurentOrePoly<A::Elem>) -> LaurentOrePoly<A::Elem> {
        LaurentOrePoly {
            coeffs: f.coeffs.iter().map(|(&i, a)| (i, self.base.neg(a))).collect(),
        }
    }

    pub fn sub(&self, f: &LaurentOrePoly<A::Elem>, g: &LaurentOrePoly<A::Elem>) -> LaurentOrePoly<A::Elem> {
        self.add(f, &self.neg(g))
    }

    fn check_support(&self, f: &LaurentOrePoly<A::Elem>) -> Result<()> {
        match f.min_exponent() {
            Some(i) if i < 0 && self.derivation != Derivation::Zero => Err(Error::NegativeExponentWithDerivation),
            _ => Ok(()),
        }
    }

    /// `t^i b` rewritten as `Σ_k c_k t^k` via `t c = α(c) t + δ(c)`.
    fn commute_past(&self, i: i64, b: &A::Elem) -> Result<Vec<(i64, A::Elem)>> {
        if self.derivation == Derivation::Zero {
            return Ok(vec![(i, self.base.aut(b, i))]);
        }
        let mut cur: BTreeMap<i64, A::Elem> = BTreeMap::from([(0, b.clone())]);
        for _ in 0..i {
            let mut next = BTreeMap::new();
            for (k, c) in &cur {
                for (e, v) in [
                    (k + 1, self.base.aut(c, 1)),
                    (*k, apply_derivation(&self.base, self.derivation, c)?),
                ] {
                    if self.base.is_zero(&v) {
                        continue;
                    }
                    let sum = match next.remove(&e) {
                        Some(prev) => self.base.add(&prev, &v),
                        None => v,
                    };
                    if !self.base.is_zero(&sum) {
                        next.insert(e, sum);
                    }
                }
            }
            cur = next;
        }
        Ok(cur.into_iter().collect())
    }

    /// Exact product under `t a = α(a) t + δ(a)` (and `t^{-1} a = α^{-1}(a) t^{-1}`
    /// when `δ = 0`).
    pub fn mul(&self, f: &LaurentOrePoly<A::Elem>, g: &LaurentOrePoly<A::Elem>) -> Result<LaurentOrePoly<A::Elem>> {
        self.check_support(f)?;
        self.check_support(g)?;
        let mut out = self.zero();
        for (&i, a) in &f.coeffs {
            for (&j, b) in &g.coeffs {
                for (k, c) in self.commute_past(i, b)? {
                    self.accumulate(&mut out, k + j, self.base.mul(a, &c));
                }
            }
        }
        Ok(out)
    }

    /// `f^n` for `n ≥ 0`.
    pub fn pow(&self, f: &LaurentOrePoly<A::Elem>, n: u32) -> Result<LaurentOrePoly<A::Elem>> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `Σ_i ‖a_i‖_λ ρ^i`.
    pub fn laurent_series_norm(&self, f: &LaurentOrePoly<A::Elem>, lambda: f64, rho: f64) -> Result<f64> {
        check_positive(rho)?;
        let mut total = 0.0;
        for (&i, a) in &f.coeffs {
            total += self.base.seminorm(a, lambda)? * rho.powi(i as i32);
        }
        Ok(total)
    }

    /// Grid of `laurent_series_norm` values, rows sorted by `(λ, ρ)`.
    pub fn oc_star_norm_table(
        &self,
        f: &LaurentOrePoly<A::Elem>,
        lambdas: &[f64],
        rhos: &[f64],
    ) -> Result<Vec<NormRow>> {
        if lambdas.is_empty() || rhos.is_empty() {
            return Err(Error::InvalidArgument("norm table grids must be nonempty".into()));
        }
        let mut rows = Vec::with_capacity(lambdas.len() * rhos.len());
        for &lambda in lambdas {
            for &rho in rhos {
                rows.push(NormRow {
                    lambda,
                    rho,
                    norm: self.laurent_series_norm(f, lambda, rho)?,
                });
            }
        }
        rows.sort_by(|a, b| a.lambda.total_cmp(&b.lambda).then(a.rho.total_cmp(&b.rho)));
        Ok(rows)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormRow {
    pub lambda: f64,
    pub rho: f64,
    pub norm: f64,
}

/// CSV with header `lambda,rho,norm`.
pub fn norm_table_csv(rows: &[NormRow]) -> String {
    let mut out = String::from("lambda,rho,norm\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.lambda, r.rho, r.norm));
    }
    out
}

/// Growth of `sup_e ‖α^{±1}(e)‖_λ / ‖e‖_λ` over the canonical family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Growth {
    /// A closed-form bound holds for every element.
    Bounded(f64),
    /// Known unbounded, or per-degree ratios increasing without a sign of
    /// saturation up to the cap; `observed` is the largest ratio seen.
    GrowingBeyond {
        observed: f64,
    },
    Inconclusive {
        observed: f64,
    },
}

impl Growth {
    fn joint(self, other: Growth) -> Growth {
        match (self, other) {
            (Growth::Bounded(a), Growth::Bounded(b)) => Growth::Bounded(a.max(b)),
            (Growth::GrowingBeyond { observed: a }, g) | (g, Growth::GrowingBeyond { observed: a }) => {
                Growth::GrowingBeyond {
                    observed: a.max(g.observed()),
                }
            }
            (a, b) => Growth::Inconclusive {
                observed: a.observed().max(b.observed()),
            },
        }
    }

    pub fn observed(self) -> f64 {
        match self {
            Growth::Bounded(c) => c,
            Growth::GrowingBeyond { observed } | Growth::Inconclusive { observed } => observed,
        }
    }

    pub fn is_bounded(self) -> bool {
        matches!(self, Growth::Bounded(_))
    }
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Growth::Bounded(c) => write!(f, "Bounded({c})"),
            Growth::GrowingBeyond { observed } => write!(f, "GrowingBeyond({observed})"),
            Growth::Inconclusive { observed } => write!(f, "Inconclusive({observed})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeRow {
    pub lambda: f64,
    pub forward: Growth,
    pub inverse: Growth,
    /// Both `α` and `α^{-1}` for the same seminorm.
    pub joint: Growth,
}

/// Per-degree maxima of `‖α^k(e)‖_λ / ‖e‖_λ` over basis monomials.
fn degree_ratios<A: BaseAlgebra>(base: &A, k: i64, lambda: f64, max_degree: usize) -> Result<Vec<f64>> {
    let mut ratios = vec![0.0f64; max_degree + 1];
    for e in base.basis_monomials(max_degree) {
        let norm = base.seminorm(&e, lambda)?;
        if norm == 0.0 {
            continue;
        }
        let d = base.degree(&e).unwrap_or(0);
        let r = base.seminorm(&base.aut(&e, k), lambda)? / norm;
        ratios[d] = ratios[d].max(r);
    }
    Ok(ratios)
}

fn growth<A: BaseAlgebra>(base: &A, k: i64, lambda: f64, max_degree: usize) -> Result<Growth> {
    let ratios = degree_ratios(base, k, lambda, max_degree)?;
    let observed = ratios.iter().copied().fold(0.0, f64::max);
    Ok(match base.operator_bound(k) {
        OperatorBound::Bounded(c) => Growth::Bounded(c),
        OperatorBound::Unbounded => Growth::GrowingBeyond { observed },
        OperatorBound::Unknown => {
            let increasing = ratios.len() > 2 && ratios[1..].windows(2).all(|p| p[1] > p[0]);
            if increasing && observed > 1.0 {
                Growth::GrowingBeyond { observed }
            } else {
                Growth::Inconclusive { observed }
            }
        }
    })
}

/// Reports how `α` and `α^{-1}` act on the canonical seminorm family.
///
/// Only growth of this family is reported; no claim is made about
/// localizability with respect to other families.
pub fn localizability_probe<A: BaseAlgebra>(base: &A, lambdas: &[f64], max_degree: usize) -> Result<Vec<ProbeRow>> {
    if max_degree == 0 {
        return Err(Error::InvalidArgument("probe degree cap must be at least 1".into()));
    }
    lambdas
        .iter()
        .map(|&lambda| {
            let forward = growth(base, 1, lambda, max_degree)?;
            let inverse = growth(base, -1, lambda, max_degree)?;
            Ok(ProbeRow {
                lambda,
                forward,
                inverse,
                joint: forward.joint(inverse),
            })
        })
        .collect()
}
