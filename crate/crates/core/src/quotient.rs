//! The analytic Laurent algebra: the quotient of the twisted tensor algebra
//! by the closed ideal generated by `x1 x2 - 1` and `x2 x1 - 1`.
//!
//! Over entire functions with `α = β_q`, a class is determined by the
//! functionals `φ_{m,n}` and its quotient seminorm is the norm of an explicit
//! canonical representative.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::base::{BaseAlgebra, EntireAlgebra, Exactness};
use crate::error::{check_positive, Error, Result};
use crate::ore::{LaurentOrePoly, OreAlgebra};
use crate::poly::{EntirePoly, Poly};
use crate::scalar::{self, Scalar};
use crate::twisted::{Caps, TwistedAlgebra, TwistedSeries};
use crate::word::{canonical_word, Word};

type EntireSeries = TwistedSeries<EntirePoly>;

/// `φ_{m,n}(f) = Σ_{c(w) = n} f^{(m)}_w`.
pub fn phi(f: &EntireSeries, m: usize, n: i64) -> Scalar {
    f.terms()
        .filter(|(w, _)| w.winding() == n)
        .fold(Scalar::zero(), |acc, (_, a)| acc + a.coeff(m))
}

/// `Σ φ_{m,n}(f) z^m x^n`, where `x^n` is `x1^n` for `n ≥ 0` and `x2^{-n}`
/// otherwise.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct QuotientClass {
    coeffs: BTreeMap<(usize, i64), Scalar>,
}

impl QuotientClass {
    pub fn of(f: &EntireSeries) -> Self {
        let mut coeffs: BTreeMap<(usize, i64), Scalar> = BTreeMap::new();
        for (w, a) in f.terms() {
            let n = w.winding();
            for (m, c) in a.terms() {
                *coeffs.entry((m, n)).or_insert_with(Scalar::zero) += c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        QuotientClass { coeffs }
    }

    /// Nonzero `((m, n), φ_{m,n})` in increasing `(m, n)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, i64), &Scalar)> {
        self.coeffs.iter()
    }

    pub fn get(&self, m: usize, n: i64) -> Scalar {
        self.coeffs.get(&(m, n)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(m, n), c)) in self.coeffs.iter().enumerate() {
            let negative = scalar::is_negative(c);
            let shown = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if m > 0 {
                parts.push(if m == 1 { "z".to_string() } else { format!("z^{m}") });
            }
            if n != 0 {
                parts.push(if n == 1 { "x".to_string() } else { format!("x^{n}") });
            }
            if !shown.is_one() || parts.is_empty() {
                let text = scalar::fmt_scalar(&shown);
                parts.insert(
                    0,
                    if scalar::is_compound(&shown) {
                        format!("({text})")
                    } else {
                        text
                    },
                );
            }
            f.write_str(&parts.join(" * "))?;
        }
        Ok(())
    }
}

/// Aggregates coefficients by `(m, n1, n2)`, the base degree and letter
/// counts of the word.
pub fn collapse_bidegree(f: &EntireSeries) -> BTreeMap<(usize, usize, usize), Scalar> {
    let mut out: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    for (w, a) in f.terms() {
        let counts = w.counts();
        for (m, c) in a.terms() {
            *out.entry((m, counts.c1, counts.c2)).or_insert_with(Scalar::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The bidegree aggregate placed on canonical words `1^{n1} 2^{n2}`.
pub fn collapsed_series<A>(alg: &TwistedAlgebra<A>, f: &EntireSeries) -> EntireSeries
where
    A: BaseAlgebra<Elem = EntirePoly>,
{
    alg.from_terms(
        collapse_bidegree(f)
            .into_iter()
            .map(|((m, n1, n2), c)| (canonical_word(n1, n2), Poly::monomial(c, m))),
    )
}

/// Exact membership in the ideal: every `φ_{m,n}` vanishes.
pub fn ideal_member(f: &EntireSeries) -> bool {
    QuotientClass::of(f).is_zero()
}

/// `Σ a_w t^{c(w)}`, the image under `x1 ↦ t`, `x2 ↦ t^{-1}`.
pub fn reduce_to_ore<A: BaseAlgebra>(alg: &TwistedAlgebra<A>, f: &TwistedSeries<A::Elem>) -> LaurentOrePoly<A::Elem> {
    let ore = OreAlgebra::laurent(alg.base().clone());
    ore.from_terms(f.terms().map(|(w, a)| (w.winding(), a.clone())))
}

/// How `quotient_norm_with` evaluates the seminorm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QuotientFormula {
    /// Norm of the canonical representative.
    #[default]
    Representative,
    /// A closed-form sum over the class coefficients, kept for comparison.
    /// Its middle sum carries `|q|^{-m(n-1)}` and its last two sums both
    /// count the class `n = 0`.
    ClosedForm,
}

/// A canonical representative together with the classes `(m, n)` whose
/// infimum is approached only in the limit and were therefore left out.
#[derive(Clone, Debug, PartialEq)]
pub struct Representative {
    pub series: EntireSeries,
    pub dropped: Vec<((usize, i64), Scalar)>,
}

enum Regime {
    /// `|q|^m ≤ ρ`
    Near,
    /// `ρ < |q|^m ≤ ρ²`
    Middle,
    /// `ρ² < |q|^m`
    Far,
}

fn regime(q_abs: f64, m: usize, rho: f64) -> Regime {
    let qm = q_abs.powi(m as i32);
    if qm <= rho {
        Regime::Near
    } else if qm <= rho * rho {
        Regime::Middle
    } else {
        Regime::Far
    }
}

/// The scaling parameter, or an error for any other automorphism.
fn scaling_parameter(alg: &TwistedAlgebra<EntireAlgebra>) -> Result<Scalar> {
    let q = alg.base().scaling_parameter().ok_or_else(|| {
        Error::UnsupportedAutomorphism(format!(
            "quotient seminorms need a scaling automorphism, not {}",
            alg.base().describe()
        ))
    })?;
    if scalar::modulus_sq(q).is_one() {
        return Err(Error::UnsupportedAutomorphism(
            "quotient seminorms need |q| != 1".into(),
        ));
    }
    Ok(q.clone())
}

/// Runs `body` in the `|q| > 1` picture: for `|q| < 1` the letters are
/// swapped and `q` inverted on the way in, and `unswap` is applied to the
/// result on the way out.
fn with_expanding<T>(
    alg: &TwistedAlgebra<EntireAlgebra>,
    f: &EntireSeries,
    body: impl FnOnce(&TwistedAlgebra<EntireAlgebra>, &EntireSeries, f64) -> Result<T>,
    unswap: impl FnOnce(T) -> T,
) -> Result<T> {
    let q = scaling_parameter(alg)?;
    let q_abs = scalar::modulus(&q);
    if q_abs > 1.0 {
        return body(alg, f, q_abs);
    }
    let flipped = TwistedAlgebra::new(EntireAlgebra::scale(scalar::powi(&q, -1)?)?, alg.caps());
    let swapped = f.map_words(Word::swapped);
    body(&flipped, &swapped, 1.0 / q_abs).map(unswap)
}

fn representative_expanding(
    alg: &TwistedAlgebra<EntireAlgebra>,
    f: &EntireSeries,
    q_abs: f64,
    rho: f64,
) -> Representative {
    let mut terms = Vec::new();
    let mut dropped = Vec::new();
    for (&(m, n), c) in QuotientClass::of(f).terms() {
        let word = match (regime(q_abs, m, rho), n > 0) {
            (Regime::Near, true) => Word::power(1, n as usize),
            (Regime::Middle, true) => Word::power(1, n as usize + 1).concat(&Word::power(2, 1)),
            (Regime::Near | Regime::Middle, false) => Word::power(2, n.unsigned_abs() as usize),
            (Regime::Far, _) => {
                dropped.push(((m, n), c.clone()));
                continue;
            }
        };
        terms.push((word, Poly::monomial(c.clone(), m)));
    }
    Representative {
        series: wide(alg, terms.iter().map(|(w, _)| w.len())).from_terms(terms),
        dropped,
    }
}

/// `alg` with the word-length cap raised to fit words of the given lengths.
fn wide(alg: &TwistedAlgebra<EntireAlgebra>, lengths: impl Iterator<Item = usize>) -> TwistedAlgebra<EntireAlgebra> {
    let caps = alg.caps();
    let needed = lengths.max().unwrap_or(0).max(caps.max_word_len);
    TwistedAlgebra::new(
        alg.base().clone(),
        Caps {
            max_word_len: needed,
            ..caps
        },
    )
}

fn unswap_representative(r: Representative) -> Representative {
    Representative {
        series: r.series.map_words(Word::swapped),
        dropped: r.dropped.into_iter().map(|((m, n), c)| ((m, -n), c)).collect(),
    }
}

/// The representative of the class of `f` whose twisted norm is the
/// quotient seminorm at radius `ρ`; classes in the regime `ρ² < |q|^m`
/// have infimum 0 and are recorded in `dropped`.
pub fn canonical_representative(
    alg: &TwistedAlgebra<EntireAlgebra>,
    f: &EntireSeries,
    rho: f64,
) -> Result<Representative> {
    check_positive(rho)?;
    with_expanding(
        alg,
        f,
        |alg, f, q_abs| Ok(representative_expanding(alg, f, q_abs, rho)),
        unswap_representative,
    )
}

/// The representative plus each dropped class `c z^m x^n` placed on
/// `x1^{n1+l} x2^{n2+l}` (`(n1, n2) = (n, 0)` or `(0, -n)`). Its norm
/// decreases to the quotient seminorm as `l → ∞`.
pub fn padded_representative(
    alg: &TwistedAlgebra<EntireAlgebra>,
    f: &EntireSeries,
    rho: f64,
    l: usize,
) -> Result<EntireSeries> {
    check_positive(rho)?;
    with_expanding(
        alg,
        f,
        |alg, f, q_abs| {
            let rep = representative_expanding(alg, f, q_abs, rho);
            let mut terms: Vec<(Word, EntirePoly)> = rep.series.terms().map(|(w, a)| (w.clone(), a.clone())).collect();
            for ((m, n), c) in rep.dropped {
                let (n1, n2) = if n > 0 {
                    (n as usize, 0)
                } else {
                    (0, n.unsigned_abs() as usize)
                };
                terms.push((canonical_word(n1 + l, n2 + l), Poly::monomial(c, m)));
            }
            Ok(wide(alg, terms.iter().map(|(w, _)| w.len())).from_terms(terms))
        },
        |s| s.map_words(Word::swapped),
    )
}

/// The quotient seminorm `‖f‖^∨_{λ,ρ}`.
pub fn quotient_norm(alg: &TwistedAlgebra<EntireAlgebra>, f: &EntireSeries, lambda: f64, rho: f64) -> Result<f64> {
    quotient_norm_with(alg, f, lambda, rho, QuotientFormula::Representative)
}

pub fn quotient_norm_with(
    alg: &TwistedAlgebra<EntireAlgebra>,
    f: &EntireSeries,
    lambda: f64,
    rho: f64,
    formula: QuotientFormula,
) -> Result<f64> {
    check_positive(lambda)?;
    check_positive(rho)?;
    match formula {
        QuotientFormula::Representative => {
            let rep = canonical_representative(alg, f, rho)?;
            let v = wide(alg, std::iter::once(rep.series.max_word_len())).twisted_norm(&rep.series, lambda, rho)?;
            debug_assert_eq!(v.exactness, Exactness::Exact);
            Ok(v.value)
        }
        QuotientFormula::ClosedForm => with_expanding(
            alg,
            f,
            |_, f, q_abs| Ok(closed_form(&QuotientClass::of(f), q_abs, lambda, rho)),
            |v| v,
        ),
    }
}

/// The closed-form sum, term by term.
fn closed_form(class: &QuotientClass, q_abs: f64, lambda: f64, rho: f64) -> f64 {
    let mut total = 0.0;
    for (&(m, n), c) in class.terms() {
        let a = scalar::modulus(c) * lambda.powi(m as i32);
        let qm = q_abs.powi(m as i32);
        match regime(q_abs, m, rho) {
            Regime::Near => total += a * qm.powi(-((n - 1).max(0) as i32)) * rho.powi(n as i32),
            Regime::Middle => {
                // Index shift n -> n + 1 in the middle sum, which starts at n = 1.
                if n >= 0 {
                    total += a * qm.powi(-(n as i32)) * rho.powi(n as i32 + 2);
                }
                if n <= 0 {
                    total += a * rho.powi(n as i32);
                }
            }
            Regime::Far => {}
        }
    }
    total
}

/// Which word family the vanishing test runs along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordFamily {
    /// `w_k = 1^k 2^k`
    #[default]
    W,
    /// `w'_k = 2^k 1^k`
    WPrime,
}

impl WordFamily {
    pub fn word(self, k: usize) -> Word {
        match self {
            WordFamily::W => canonical_word(k, k),
            WordFamily::WPrime => canonical_word(k, k).swapped(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The sequence is exactly zero from some `k` on and `r` is invertible,
    /// so the quotient algebra is zero.
    CollapseCertified,
    /// Exactly zero from some `k` on but `r` is not invertible: only `r`
    /// lying in the closure of the ideal follows.
    IdealMembershipCertified,
    RapidDecayObserved,
    NoDecay,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::CollapseCertified => "CollapseCertified",
            Verdict::IdealMembershipCertified => "IdealMembershipCertified",
            Verdict::RapidDecayObserved => "RapidDecayObserved",
            Verdict::NoDecay => "NoDecay",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VanishingRow {
    pub lambda: f64,
    pub rho: f64,
    pub k: usize,
    pub value: f64,
    pub exactness: Exactness,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VanishingPoint {
    pub lambda: f64,
    pub rho: f64,
    pub verdict: Verdict,
    /// First `k` from which the sequence is exactly zero.
    pub zero_from: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VanishingReport {
    pub verdict: Verdict,
    pub points: Vec<VanishingPoint>,
    pub rows: Vec<VanishingRow>,
}

impl VanishingReport {
    /// CSV rows `lambda,rho,k,value,verdict`, the verdict being that of the
    /// row's grid point.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,rho,k,value,verdict\n");
        for row in &self.rows {
            let verdict = self
                .points
                .iter()
                .find(|p| p.lambda == row.lambda && p.rho == row.rho)
                .map(|p| p.verdict)
                .unwrap_or(self.verdict);
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.lambda, row.rho, row.k, row.value, verdict
            ));
        }
        out
    }
}

/// Threshold below which a final value counts as decayed.
pub const DECAY_THRESHOLD: f64 = 1e-12;

/// Evaluates `‖r‖^{(w_k)}_λ ρ^{2k}` for `k = 1..=depth` on the grid and
/// classifies the sequences.
pub fn vanishing_test<A: BaseAlgebra>(
    base: &A,
    r: &A::Elem,
    lambdas: &[f64],
    rhos: &[f64],
    depth: usize,
    family: WordFamily,
) -> Result<VanishingReport> {
    if lambdas.is_empty() || rhos.is_empty() || depth == 0 {
        return Err(Error::InvalidArgument(
            "vanishing test needs nonempty grids and depth >= 1".into(),
        ));
    }
    for &rho in rhos {
        check_positive(rho)?;
    }
    let mut rows = Vec::new();
    let mut points = Vec::new();
    for &lambda in lambdas {
        for &rho in rhos {
            let seq: Vec<VanishingRow> = (1..=depth)
                .map(|k| {
                    let v = base.twisted_seminorm(r, &family.word(k), lambda)?;
                    Ok(VanishingRow {
                        lambda,
                        rho,
                        k,
                        value: v.value * rho.powi(2 * k as i32),
                        exactness: v.exactness,
                    })
                })
                .collect::<Result<_>>()?;
            let zero_from = seq
                .iter()
                .rposition(|row| row.value != 0.0)
                .map_or(Some(1), |i| (i + 1 < depth).then_some(i + 2));
            let last = seq.last().expect("depth >= 1");
            let verdict = if zero_from.is_some() {
                if base.is_invertible(r) {
                    Verdict::CollapseCertified
                } else {
                    Verdict::IdealMembershipCertified
                }
            } else if last.value < DECAY_THRESHOLD {
                Verdict::RapidDecayObserved
            } else if last.exactness == Exactness::UpperBound {
                return Err(Error::CannotCertify(format!(
                    "only an upper bound {} is available at lambda={lambda}, rho={rho}, k={depth}",
                    last.value
                )));
            } else {
                Verdict::NoDecay
            };
            points.push(VanishingPoint {
                lambda,
                rho,
                verdict,
                zero_from,
            });
            rows.extend(seq);
        }
    }
    let verdict = if points.iter().all(|p| p.verdict == points[0].verdict) {
        points[0].verdict
    } else if points.iter().any(|p| p.verdict == Verdict::NoDecay) {
        Verdict::NoDecay
    } else {
        Verdict::RapidDecayObserved
    };
    rows.sort_by(|a, b| {
        a.lambda
            .total_cmp(&b.lambda)
            .then(a.rho.total_cmp(&b.rho))
            .then(a.k.cmp(&b.k))
    });
    Ok(VanishingReport { verdict, points, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::IntervalAlgebra;
    use crate::poly::IntervalPoly;
    use crate::scalar::{int, real};
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn z() -> EntirePoly {
        Poly::z()
    }

    fn beta(q: Scalar) -> TwistedAlgebra<EntireAlgebra> {
        TwistedAlgebra::new(EntireAlgebra::scale(q).unwrap(), Caps::default())
    }

    fn relator(t: &TwistedAlgebra<EntireAlgebra>) -> EntireSeries {
        t.sub(&t.mul(&t.x1(), &t.x2()), &t.one())
    }

    #[test]
    fn phi_examples() {
        let t = beta(int(2));
        assert!(phi(&relator(&t), 0, 0).is_zero());
        let f = t.from_terms([(w("1"), z()), (w("112"), Poly::monomial(int(5), 1))]);
        assert_eq!(phi(&f, 1, 1), int(6));
        assert!(phi(&t.term(EntirePoly::one(), w("12")), 0, 2).is_zero());
    }

    #[test]
    fn ideal_examples() {
        let t = beta(int(2));
        assert!(ideal_member(&relator(&t)));
        assert!(!ideal_member(&t.x1()));
        assert!(!ideal_member(&t.x2()));
        let shifted = t.add(&t.term(z(), w("12")), &t.constant(EntirePoly::from_ints(&[2])));
        assert!(!ideal_member(&shifted));
    }

    #[test]
    fn collapse_examples() {
        let t = beta(int(2));
        let f = t.from_terms([(w("12"), z()), (w("21"), z())]);
        let c = collapse_bidegree(&f);
        assert_eq!(c.get(&(1, 1, 1)), Some(&int(2)));
        let canon = t.term(z(), w("112"));
        assert_eq!(collapsed_series(&t, &canon), canon);
    }

    #[test]
    fn canonical_representative_examples() {
        let t = beta(int(2));
        let rep = canonical_representative(&t, &t.mul(&t.x1(), &t.x2()), 2.0).unwrap();
        assert_eq!(rep.series, t.one());
        let zx1 = t.term(z(), w("1"));
        let rep = canonical_representative(&t, &zx1, 1.5).unwrap();
        assert_eq!(rep.series, t.term(z(), w("112")));
        let rep = canonical_representative(&t, &zx1, 1.0).unwrap();
        assert!(rep.series.is_zero());
        assert_eq!(rep.dropped, vec![((1, 1), int(1))]);

        let shift = TwistedAlgebra::new(EntireAlgebra::shift(), Caps::default());
        assert!(matches!(
            canonical_representative(&shift, &shift.x1(), 1.0),
            Err(Error::UnsupportedAutomorphism(_))
        ));
    }

    #[test]
    fn quotient_norm_spot_values() {
        let t = beta(int(2));
        let zx1 = t.term(z(), w("1"));
        assert_eq!(quotient_norm(&t, &zx1, 1.0, 4.0).unwrap(), 4.0);
        assert_eq!(quotient_norm(&t, &zx1, 1.0, 1.5).unwrap(), 0.84375);
        assert_eq!(quotient_norm(&t, &zx1, 1.0, 1.0).unwrap(), 0.0);
        assert_eq!(quotient_norm(&t, &t.one(), 1.0, 0.5).unwrap(), 0.0);
        // The printed closed form disagrees in the middle regime.
        let printed = quotient_norm_with(&t, &zx1, 1.0, 1.5, QuotientFormula::ClosedForm).unwrap();
        assert_eq!(printed, 0.5 * 1.5f64.powi(3));
        assert_eq!(
            quotient_norm_with(&t, &zx1, 1.0, 4.0, QuotientFormula::ClosedForm).unwrap(),
            4.0
        );
    }

    #[test]
    fn contracting_parameter_by_symmetry() {
        // For |q| < 1 the twisted seminorm uses k_min, and the mirror image of
        // every statement for |q| > 1 holds with x1 and x2 exchanged.
        let t = beta(real(1, 2));
        let zx2 = t.term(z(), w("2"));
        assert_eq!(quotient_norm(&t, &zx2, 1.0, 1.5).unwrap(), 0.84375);
        let rep = canonical_representative(&t, &zx2, 1.5).unwrap();
        assert_eq!(rep.series, t.term(z(), w("221")));
        assert_eq!(t.twisted_norm(&rep.series, 1.0, 1.5).unwrap().value, 0.84375);
        assert_eq!(quotient_norm(&t, &t.term(z(), w("1")), 1.0, 4.0).unwrap(), 4.0);
        assert!(matches!(
            quotient_norm(&beta(scalar::imag_unit()), &t.x1(), 1.0, 1.0),
            Err(Error::UnsupportedAutomorphism(_))
        ));
    }

    #[test]
    fn padding_converges() {
        let t = beta(int(2));
        let zx1 = t.term(z(), w("1"));
        let norms: Vec<f64> = [0, 5, 40]
            .iter()
            .map(|&l| {
                let p = padded_representative(&t, &zx1, 1.0, l).unwrap();
                let wide = TwistedAlgebra::new(
                    t.base().clone(),
                    Caps {
                        max_word_len: 200,
                        max_degree: 24,
                    },
                );
                wide.twisted_norm(&p, 1.0, 1.0).unwrap().value
            })
            .collect();
        assert!(norms[1] < norms[0]);
        assert!(norms[2] < 1e-6);
    }

    #[test]
    fn reduce_examples() {
        let t = beta(int(2));
        assert!(reduce_to_ore(&t, &relator(&t)).is_zero());
        let o = OreAlgebra::laurent(t.base().clone());
        assert_eq!(reduce_to_ore(&t, &t.term(z(), w("112"))), o.term(z(), 1));
    }

    #[test]
    fn vanishing_examples() {
        let one = IntervalPoly::one();
        let lambdas = [1.0, 2.0, 3.0, 4.0, 5.0];
        let report = vanishing_test(
            &IntervalAlgebra::shift(),
            &one,
            &lambdas,
            &[1.0, 3.0],
            12,
            WordFamily::W,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::CollapseCertified);
        assert_eq!(report.points[0].zero_from, Some(3));

        let b2 = EntireAlgebra::scale(int(2)).unwrap();
        let report = vanishing_test(&b2, &EntirePoly::one(), &[1.0], &[1.0, 2.0], 10, WordFamily::W).unwrap();
        assert_eq!(report.verdict, Verdict::NoDecay);

        let shift = EntireAlgebra::shift();
        let report = vanishing_test(&shift, &EntirePoly::one(), &[1.0, 2.0], &[3.0], 10, WordFamily::W).unwrap();
        assert_eq!(report.verdict, Verdict::CollapseCertified);
        let report = vanishing_test(&shift, &EntirePoly::one(), &[1.0], &[3.0], 10, WordFamily::WPrime).unwrap();
        assert_eq!(report.verdict, Verdict::CollapseCertified);

        let report = vanishing_test(
            &IntervalAlgebra::shift(),
            &IntervalPoly::z(),
            &[1.0],
            &[1.0],
            6,
            WordFamily::W,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::IdealMembershipCertified);
        assert!(report.to_csv().starts_with("lambda,rho,k,value,verdict\n"));
    }

    #[test]
    fn class_display() {
        let t = beta(int(2));
        let f = t.from_terms([
            (w("1"), z()),
            (w("22"), EntirePoly::from_ints(&[-3])),
            (w("12"), Poly::monomial(real(1, 2), 2)),
        ]);
        assert_eq!(QuotientClass::of(&f).to_string(), "-3 * x^-2 + z * x + 1/2 * z^2");
    }

    fn arb_poly() -> impl Strategy<Value = EntirePoly> {
        prop::collection::vec(-3i64..=3, 1..4).prop_map(|v| EntirePoly::from_ints(&v))
    }

    fn arb_word(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(1u8..=2, 0..=max).prop_map(|v| Word::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn phi_constant_on_cosets(
            f in prop::collection::vec((arb_word(4), arb_poly()), 0..4),
            u in (arb_word(3), arb_poly()),
            v in (arb_word(3), arb_poly()),
            second in any::<bool>(),
        ) {
            let t = beta(real(3, 2));
            let f = t.from_terms(f);
            let rel = if second {
                t.sub(&t.mul(&t.x2(), &t.x1()), &t.one())
            } else {
                relator(&t)
            };
            let g = t.mul(&t.mul(&t.term(u.1, u.0), &rel), &t.term(v.1, v.0));
            prop_assert!(ideal_member(&g));
            prop_assert_eq!(QuotientClass::of(&t.add(&f, &g)), QuotientClass::of(&f));
        }

        #[test]
        fn collapse_does_not_increase_norm(
            f in prop::collection::vec((arb_word(5), arb_poly()), 0..5),
            lambda in prop::sample::select(vec![0.5, 1.0, 2.0, 4.0]),
            rho in prop::sample::select(vec![0.5, 1.0, 2.0, 4.0]),
        ) {
            let t = beta(int(2));
            let f = t.from_terms(f);
            let c = collapsed_series(&t, &f);
            let lhs = t.twisted_norm(&c, lambda, rho).unwrap().value;
            let rhs = t.twisted_norm(&f, lambda, rho).unwrap().value;
            prop_assert!(lhs <= rhs + 1e-9);
        }

        #[test]
        fn reduce_after_embed_is_identity(a in prop::collection::vec((0i64..5, arb_poly()), 0..4)) {
            let t = beta(int(2));
            let o = OreAlgebra::laurent(t.base().clone());
            let p = o.from_terms(a);
            let e = t.embed_ore(&p, crate::twisted::Generator::X1).unwrap();
            prop_assert_eq!(reduce_to_ore(&t, &e), p.clone());
        }
    }
}
