//! Word-indexed twisted series `Σ_w a_w x^w`, finitely supported
//! representatives of the analytic tensor algebra on `A_α ⊕ A_{α^{-1}}`.
//!
//! Products follow `(a x^{w1})(b x^{w2}) = a α^{c(w1)}(b) x^{w1 w2}`, so
//! `x1 a = α(a) x1` and `x2 a = α^{-1}(a) x2`.

use std::collections::BTreeMap;
use std::fmt;

use crate::base::{BaseAlgebra, ElemText, Exactness, TwistedValue};
use crate::error::{check_positive, Error, Result};
use crate::ore::LaurentOrePoly;
use crate::word::Word;

/// Truncation caps for finitely supported representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_word_len: usize,
    pub max_degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_word_len: 12,
            max_degree: 24,
        }
    }
}

/// Which generator an Ore polynomial is embedded along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X1,
    X2,
}

/// A finitely supported twisted series.
///
/// Zero coefficients are never stored. `truncated` records that some
/// operation producing this value discarded terms beyond the caps;
/// equality compares terms only.
#[derive(Clone, Debug)]
pub struct TwistedSeries<E> {
    terms: BTreeMap<Word, E>,
    truncated: bool,
}

impl<E: PartialEq> PartialEq for TwistedSeries<E> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<E> Default for TwistedSeries<E> {
    fn default() -> Self {
        TwistedSeries {
            terms: BTreeMap::new(),
            truncated: false,
        }
    }
}

impl<E> TwistedSeries<E> {
    /// Terms in canonical word order (length, then lexicographic).
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &E)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&E> {
        self.terms.get(w)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Relabel words; used for the `x1 ↔ x2` symmetry.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self
    where
        E: Clone,
    {
        TwistedSeries {
            terms: self.terms.iter().map(|(w, a)| (f(w), a.clone())).collect(),
            truncated: self.truncated,
        }
    }
}

/// `i_w(r_1, …, r_{|w|}) = r_1 Π_{i≥2} α^{p(w, i-1)}(r_i)`.
pub fn i_w_apply<A: BaseAlgebra>(alg: &A, w: &Word, factors: &[A::Elem]) -> Result<A::Elem> {
    if factors.len() != w.len() || w.is_empty() {
        return Err(Error::FactorCount {
            expected: w.len(),
            got: factors.len(),
        });
    }
    let profile = w.profile();
    let mut acc = factors[0].clone();
    for (i, r) in factors.iter().enumerate().skip(1) {
        acc = alg.mul(&acc, &alg.aut(r, profile[i]));
    }
    Ok(acc)
}

/// The twisted tensor algebra over a base, with truncation caps.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedAlgebra<A> {
    base: A,
    caps: Caps,
}

impl<A: BaseAlgebra> TwistedAlgebra<A> {
    pub fn new(base: A, caps: Caps) -> Self {
        TwistedAlgebra { base, caps }
    }

    pub fn base(&self) -> &A {
        &self.base
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn zero(&self) -> TwistedSeries<A::Elem> {
        TwistedSeries::default()
    }

    pub fn one(&self) -> TwistedSeries<A::Elem> {
        self.constant(self.base.one())
    }

    pub fn constant(&self, a: A::Elem) -> TwistedSeries<A::Elem> {
        self.term(a, Word::empty())
    }

    /// `a x^w`, dropped (and flagged) if it exceeds the caps.
    pub fn term(&self, a: A::Elem, w: Word) -> TwistedSeries<A::Elem> {
        let mut out = self.zero();
        self.accumulate(&mut out, w, a);
        out
    }

    pub fn x1(&self) -> TwistedSeries<A::Elem> {
        self.term(self.base.one(), Word::power(1, 1))
    }

    pub fn x2(&self) -> TwistedSeries<A::Elem> {
        self.term(self.base.one(), Word::power(2, 1))
    }

    pub fn from_terms(&self, iter: impl IntoIterator<Item = (Word, A::Elem)>) -> TwistedSeries<A::Elem> {
        let mut out = self.zero();
        for (w, a) in iter {
            self.accumulate(&mut out, w, a);
        }
        out
    }

    fn accumulate(&self, out: &mut TwistedSeries<A::Elem>, w: Word, a: A::Elem) {
        if self.base.is_zero(&a) {
            return;
        }
        if w.len() > self.caps.max_word_len {
            out.truncated = true;
            return;
        }
        let (a, lost) = self.base.truncate(&a, self.caps.max_degree);
        out.truncated |= lost;
        let sum = match out.terms.remove(&w) {
            Some(prev) => self.base.add(&prev, &a),
            None => a,
        };
        if !self.base.is_zero(&sum) {
            out.terms.insert(w, sum);
        }
    }

    pub fn add(&self, f: &TwistedSeries<A::Elem>, g: &TwistedSeries<A::Elem>) -> TwistedSeries<A::Elem> {
        let mut out = f.clone();
        out.truncated |= g.truncated;
        for (w, a) in &g.terms {
            self.accumulate(&mut out, w.clone(), a.clone());
        }
        out
    }

    pub fn neg(&self, f: &TwistedSeries<A::Elem>) -> TwistedSeries<A::Elem> {
        TwistedSeries {
            terms: f.terms.iter().map(|(w, a)| (w.clone(), self.base.neg(a))).collect(),
            truncated: f.truncated,
        }
    }

    pub fn sub(&self, f: &TwistedSeries<A::Elem>, g: &TwistedSeries<A::Elem>) -> TwistedSeries<A::Elem> {
        self.add(f, &self.neg(g))
    }

    /// `(fg)_w = Σ_{w1 w2 = w} f_{w1} α^{c(w1)}(g_{w2})`, with cap-exceeding
    /// terms dropped and flagged.
    pub fn mul(&self, f: &TwistedSeries<A::Elem>, g: &TwistedSeries<A::Elem>) -> TwistedSeries<A::Elem> {
        let mut out = self.zero();
        out.truncated = f.truncated || g.truncated;
        for (w1, a) in &f.terms {
            let twist = w1.winding();
            for (w2, b) in &g.terms {
                if w1.len() + w2.len() > self.caps.max_word_len {
                    out.truncated = true;
                    continue;
                }
                let prod = self.base.mul(a, &self.base.aut(b, twist));
                self.accumulate(&mut out, w1.concat(w2), prod);
            }
        }
        out
    }

    /// `f^n` for `n ≥ 0`.
    pub fn pow(&self, f: &TwistedSeries<A::Elem>, n: u32) -> TwistedSeries<A::Elem> {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, f))
    }

    /// `‖f‖_{λ,ρ} = Σ_w ‖a_w‖^{(w)}_λ ρ^{|w|}`; exact iff every per-word
    /// seminorm is.
    pub fn twisted_norm(&self, f: &TwistedSeries<A::Elem>, lambda: f64, rho: f64) -> Result<TwistedValue> {
        check_positive(rho)?;
        check_positive(lambda)?;
        let mut total = 0.0;
        let mut exactness = Exactness::Exact;
        for (w, a) in &f.terms {
            let v = self.base.twisted_seminorm(a, w, lambda)?;
            total += v.value * rho.powi(w.len() as i32);
            exactness = exactness.and(v.exactness);
        }
        Ok(TwistedValue {
            value: total,
            exactness,
        })
    }

    /// The norm of the one-variable algebra `A{x; α}`: `f` may only use the
    /// words `1^k`.
    pub fn single_variable_norm(&self, f: &TwistedSeries<A::Elem>, lambda: f64, rho: f64) -> Result<TwistedValue> {
        if let Some(w) = f.terms.keys().find(|w| !w.is_power_of(1)) {
            return Err(Error::NotSingleVariable(w.clone()));
        }
        self.twisted_norm(f, lambda, rho)
    }

    /// `Σ a_n t^n ↦ Σ a_n x1^n` (or `x2^n`, reading `p` as an element of
    /// `A[s; α^{-1}]`). Multiplicative for the matching Ore extension.
    pub fn embed_ore(&self, p: &LaurentOrePoly<A::Elem>, which: Generator) -> Result<TwistedSeries<A::Elem>> {
        let letter = match which {
            Generator::X1 => 1,
            Generator::X2 => 2,
        };
        let mut out = self.zero();
        for (&n, a) in p.terms() {
            if n < 0 {
                return Err(Error::NegativeExponent(n));
            }
            self.accumulate(&mut out, Word::power(letter, n as usize), a.clone());
        }
        Ok(out)
    }
}

/// Writes a word as letter blocks: `x1^2 x2 x1`.
pub fn word_blocks(w: &Word) -> String {
    let letters = w.letters();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let run = letters[i..].iter().take_while(|&&m| m == l).count();
        parts.push(if run == 1 {
            format!("x{l}")
        } else {
            format!("x{l}^{run}")
        });
        i += run;
    }
    parts.join(" ")
}

/// Canonical text `coeff * x1^a x2^b …`, terms in canonical word order.
impl<E: ElemText + Clone> fmt::Display for TwistedSeries<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.terms.iter().map(|(w, a)| (a, word_blocks(w))),
            " * ",
            E::is_compound,
        )
    }
}

/// Shared term writer: `coeff<sep>body` with unit coefficients elided,
/// negative monomials pulled out as ` - `, coefficients selected by `wrap`
/// in parentheses.
pub(crate) fn write_signed_terms<'a, E>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a E, String)>,
    sep: &str,
    wrap: impl Fn(&E) -> bool,
) -> fmt::Result
where
    E: ElemText + Clone + 'a,
{
    let mut first = true;
    for (a, body) in terms {
        let negative = a.is_negative_monomial();
        let shown = if negative { a.negated() } else { a.clone() };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        let parenthesize = if body.is_empty() {
            shown.is_compound()
        } else {
            wrap(&shown)
        };
        let coeff = if parenthesize {
            format!("({shown})")
        } else {
            shown.to_string()
        };
        if body.is_empty() {
            f.write_str(&coeff)?;
        } else if shown.is_unit() {
            f.write_str(&body)?;
        } else {
            write!(f, "{coeff}{sep}{body}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{EntireAlgebra, IntervalAlgebra};
    use crate::poly::{EntirePoly, IntervalPoly, Poly};
    use crate::scalar::{int, real};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn beta2() -> TwistedAlgebra<EntireAlgebra> {
        TwistedAlgebra::new(EntireAlgebra::scale(int(2)).unwrap(), Caps::default())
    }

    fn z() -> EntirePoly {
        Poly::z()
    }

    #[test]
    fn i_w_examples() {
        let alg = EntireAlgebra::scale(int(2)).unwrap();
        let zz = [z(), z()];
        assert_eq!(i_w_apply(&alg, &w("12"), &zz).unwrap(), Poly::monomial(int(2), 2));
        assert_eq!(i_w_apply(&alg, &w("21"), &zz).unwrap(), Poly::monomial(real(1, 2), 2));
        let f = EntirePoly::from_ints(&[1, 2, 3]);
        assert_eq!(i_w_apply(&alg, &w("1"), std::slice::from_ref(&f)).unwrap(), f);
        assert_eq!(
            i_w_apply(&alg, &w("12"), &[z()]),
            Err(Error::FactorCount { expected: 2, got: 1 })
        );
    }

    #[test]
    fn generators_commute_past_coefficients() {
        let t = beta2();
        let zc = t.constant(z());
        assert_eq!(t.mul(&t.x1(), &zc), t.term(Poly::monomial(int(2), 1), w("1")));
        assert_eq!(t.mul(&t.x2(), &zc), t.term(Poly::monomial(real(1, 2), 1), w("2")));
        let lhs = t.mul(&t.term(z(), w("1")), &t.term(z(), w("2")));
        assert_eq!(lhs, t.term(Poly::monomial(int(2), 2), w("12")));
        let f = t.add(&lhs, &t.x2());
        assert_eq!(t.mul(&t.one(), &f), f);
        assert_eq!(t.mul(&f, &t.one()), f);
    }

    #[test]
    fn truncation_is_flagged() {
        let t = TwistedAlgebra::new(
            EntireAlgebra::scale(int(2)).unwrap(),
            Caps {
                max_word_len: 2,
                max_degree: 1,
            },
        );
        let x1 = t.x1();
        let sq = t.mul(&x1, &x1);
        assert!(!sq.truncated());
        let cube = t.mul(&sq, &x1);
        assert!(cube.truncated());
        assert!(cube.is_zero());
        let zz = t.mul(&t.constant(z()), &t.constant(z()));
        assert!(zz.truncated());
    }

    #[test]
    fn twisted_norm_examples() {
        let t = beta2();
        let f = t.term(z(), w("12"));
        assert_eq!(t.twisted_norm(&f, 1.0, 3.0).unwrap(), TwistedValue::exact(4.5));
        let a = EntirePoly::from_ints(&[1, -1, 2]);
        let c = t.constant(a.clone());
        assert_eq!(t.twisted_norm(&c, 2.0, 7.0).unwrap().value, a.weighted_l1(2.0));
        assert!(t.twisted_norm(&f, 1.0, 0.0).is_err());

        let iv = TwistedAlgebra::new(IntervalAlgebra::shift(), Caps::default());
        let one = iv.term(IntervalPoly::one(), crate::word::canonical_word(3, 3));
        assert_eq!(iv.twisted_norm(&one, 1.0, 5.0).unwrap(), TwistedValue::exact(0.0));
    }

    #[test]
    fn single_variable_norm_examples() {
        let iv = TwistedAlgebra::new(IntervalAlgebra::shift(), Caps::default());
        // a x^k is measured on [-n + k - 1, n].
        let a = IntervalPoly::from_ints(&[0, 1]);
        let f = iv.term(a.clone(), Word::power(1, 3));
        let v = iv.single_variable_norm(&f, 2.0, 1.5).unwrap();
        assert_eq!(v, TwistedValue::exact(2.0 * 1.5f64.powi(3)));
        let f = iv.term(a, Word::power(1, 6));
        assert_eq!(iv.single_variable_norm(&f, 2.0, 1.5).unwrap().value, 0.0);

        let t = beta2();
        assert_eq!(
            t.single_variable_norm(&t.term(z(), w("1")), 1.0, 1.0).unwrap().value,
            1.0
        );
        assert!(matches!(
            t.single_variable_norm(&t.x2(), 1.0, 1.0),
            Err(Error::NotSingleVariable(_))
        ));
    }

    #[test]
    fn display() {
        let t = beta2();
        let f = t.add(&t.term(z(), w("1")), &t.one());
        assert_eq!(f.to_string(), "1 + z * x1");
        let g = t.from_terms([
            (w("112"), EntirePoly::from_ints(&[1, 1])),
            (w("2"), EntirePoly::from_ints(&[-3])),
            (w("21"), EntirePoly::one()),
        ]);
        assert_eq!(g.to_string(), "-3 * x2 + x2 x1 + (z + 1) * x1^2 x2");
        assert_eq!(t.zero().to_string(), "0");
    }
}
