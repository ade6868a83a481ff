//! Brute-force references: sampled decompositions bounding twisted seminorms
//! from above, ideal-slice searches bounding quotient seminorms from above,
//! and exhaustive enumeration of short words.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::base::{generic_twisted_upper_bound, BaseAlgebra, EntireAlgebra, FreeAlgebra, IntervalAlgebra};
use crate::error::{check_positive, Error, Result};
use crate::free::{FreePoly, GenWord};
use crate::poly::{Coeff, EntirePoly, Poly};
use crate::scalar::{self, rational, Scalar};
use crate::twisted::{Caps, TwistedAlgebra, TwistedSeries};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchBudget {
    pub max_samples: usize,
    pub coefficient_grid: Vec<BigRational>,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_samples: 200,
            coefficient_grid: [(1, 4), (1, 2), (1, 1), (2, 1), (3, 1), (-1, 1), (-1, 2)]
                .iter()
                .map(|&(n, d)| rational(n, d))
                .collect(),
            seed: 0,
        }
    }
}

impl SearchBudget {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn grid_scalar(&self, rng: &mut ChaCha8Rng) -> Scalar {
        let nonzero: Vec<&BigRational> = self.coefficient_grid.iter().filter(|c| !c.is_zero()).collect();
        nonzero
            .choose(rng)
            .map(|c| scalar::from_rational((*c).clone()))
            .unwrap_or_else(Scalar::one)
    }
}

/// Bases whose elements split into monomials `c · a_1 ⋯ a_m` over unit atoms.
pub trait MonomialAtoms: BaseAlgebra {
    /// Each monomial as its coefficient and the ordered atoms of the unit
    /// monomial (`z, z, z` for `z^3`; `g1, g2` for `g1*g2`).
    fn monomial_atoms(&self, a: &Self::Elem) -> Vec<(Scalar, Vec<Self::Elem>)>;
}

fn poly_atoms<C: Coeff>(p: &Poly<C>) -> Vec<(Scalar, Vec<Poly<C>>)> {
    p.terms().map(|(m, c)| (c.to_scalar(), vec![Poly::z(); m])).collect()
}

impl MonomialAtoms for EntireAlgebra {
    fn monomial_atoms(&self, a: &EntirePoly) -> Vec<(Scalar, Vec<EntirePoly>)> {
        poly_atoms(a)
    }
}

impl MonomialAtoms for IntervalAlgebra {
    fn monomial_atoms(&self, a: &crate::poly::IntervalPoly) -> Vec<(Scalar, Vec<crate::poly::IntervalPoly>)> {
        poly_atoms(a)
    }
}

impl MonomialAtoms for FreeAlgebra {
    fn monomial_atoms(&self, a: &FreePoly) -> Vec<(Scalar, Vec<FreePoly>)> {
        a.terms()
            .map(|(v, c)| {
                let atoms =
                    v.0.iter()
                        .map(|&g| FreePoly::term(Scalar::one(), GenWord(vec![g])))
                        .collect();
                (c.clone(), atoms)
            })
            .collect()
    }
}

fn product<A: BaseAlgebra>(alg: &A, atoms: &[A::Elem]) -> A::Elem {
    atoms.iter().fold(alg.one(), |acc, a| alg.mul(&acc, a))
}

/// Factors for `i_w` whose image is `Π targets` (targets commute past
/// scalars): slot `i` carries `α^{-p(w, i-1)}(target_i)`.
fn slot_factors<A: BaseAlgebra>(alg: &A, w: &Word, targets: Vec<A::Elem>) -> Vec<A::Elem> {
    let profile = w.profile();
    targets
        .into_iter()
        .enumerate()
        .map(|(i, t)| if i == 0 { t } else { alg.aut(&t, -profile[i]) })
        .collect()
}

/// Every monomial placed whole in the slot minimizing its seminorm. For
/// scaling and diagonal automorphisms this attains the closed form.
pub fn best_slot_decomposition<A: MonomialAtoms>(
    alg: &A,
    a: &A::Elem,
    w: &Word,
    lambda: f64,
) -> Result<Vec<Vec<A::Elem>>> {
    check_positive(lambda)?;
    let mut out = Vec::new();
    for (c, atoms) in alg.monomial_atoms(a) {
        let mono = alg.mul(&alg.embed_scalar(&c)?, &product(alg, &atoms));
        let mut best: Option<(f64, Vec<A::Elem>)> = None;
        for slot in 0..w.len() {
            let mut targets = vec![alg.one(); w.len()];
            targets[slot] = mono.clone();
            let factors = slot_factors(alg, w, targets);
            let value: f64 = factors
                .iter()
                .map(|r| alg.seminorm(r, lambda))
                .product::<Result<f64>>()?;
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((value, factors));
            }
        }
        out.extend(best.map(|(_, f)| f));
    }
    Ok(out)
}

fn random_monomial_decomposition<A: MonomialAtoms>(
    alg: &A,
    c: &Scalar,
    atoms: &[A::Elem],
    w: &Word,
    budget: &SearchBudget,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Vec<A::Elem>>> {
    let k = w.len();
    let summands = rng.gen_range(1..=3usize);
    let mut parts: Vec<Scalar> = (1..summands).map(|_| c * budget.grid_scalar(rng)).collect();
    let rest = parts.iter().fold(c.clone(), |acc, p| acc - p);
    parts.push(rest);
    let mut out = Vec::new();
    for part in parts.into_iter().filter(|p| !p.is_zero()) {
        let mut cuts: Vec<usize> = (1..k).map(|_| rng.gen_range(0..=atoms.len())).collect();
        cuts.sort_unstable();
        let mut bounds = vec![0];
        bounds.extend(cuts);
        bounds.push(atoms.len());
        let mut scales: Vec<Scalar> = (1..k).map(|_| budget.grid_scalar(rng)).collect();
        let lead = scales.iter().fold(part.clone(), |acc, s| acc / s);
        scales.insert(0, lead);
        let targets = (0..k)
            .map(|i| {
                let chunk = product(alg, &atoms[bounds[i]..bounds[i + 1]]);
                Ok(alg.mul(&alg.embed_scalar(&scales[i])?, &chunk))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(slot_factors(alg, w, targets));
    }
    Ok(out)
}

/// Values `Σ_j Π_i ‖r_{i,j}‖_λ` of every decomposition tried: the trivial
/// one `i_w(a, 1, …, 1)`, the best-slot one, and `budget.max_samples`
/// random monomial splits. Each is checked to rebuild `a` exactly.
pub fn bruteforce_samples<A: MonomialAtoms>(
    alg: &A,
    a: &A::Elem,
    w: &Word,
    lambda: f64,
    budget: &SearchBudget,
) -> Result<Vec<f64>> {
    check_positive(lambda)?;
    if w.is_empty() {
        return Ok(vec![alg.seminorm(a, lambda)?]);
    }
    let mut trivial = vec![alg.one(); w.len()];
    trivial[0] = a.clone();
    let mut candidates = vec![vec![trivial], best_slot_decomposition(alg, a, w, lambda)?];
    let mut rng = budget.rng();
    let monomials = alg.monomial_atoms(a);
    for _ in 0..budget.max_samples {
        let mut decomposition = Vec::new();
        for (c, atoms) in &monomials {
            decomposition.extend(random_monomial_decomposition(alg, c, atoms, w, budget, &mut rng)?);
        }
        candidates.push(decomposition);
    }
    candidates
        .iter()
        .map(|d| generic_twisted_upper_bound(alg, a, w, lambda, d).map(|v| v.value))
        .collect()
}

/// The smallest sampled decomposition value, an upper bound on `‖a‖^{(w)}_λ`.
pub fn bruteforce_twisted_norm<A: MonomialAtoms>(
    alg: &A,
    a: &A::Elem,
    w: &Word,
    lambda: f64,
    budget: &SearchBudget,
) -> Result<f64> {
    Ok(bruteforce_samples(alg, a, w, lambda, budget)?
        .into_iter()
        .fold(f64::INFINITY, f64::min))
}

/// Size of the ideal slice searched by `slice_quotient_norm`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceCap {
    /// Largest padding exponent `l` in `(x1 x2)^l` and `(x2 x1)^l`.
    pub max_padding: usize,
    /// Longest word in the random multipliers `u`, `v` of `u·relator·v`.
    pub max_multiplier_len: usize,
    /// Largest base degree of the random multipliers.
    pub max_multiplier_degree: usize,
}

impl Default for SliceCap {
    fn default() -> Self {
        SliceCap {
            max_padding: 8,
            max_multiplier_len: 2,
            max_multiplier_degree: 1,
        }
    }
}

/// Smallest `‖f + g‖_{λ,ρ}` found over `g` in a finite slice of the ideal,
/// an upper bound on the quotient seminorm.
///
/// The slice holds the paddings `f (x1 x2)^l`, `(x1 x2)^l f`, `f (x2 x1)^l`,
/// `(x2 x1)^l f` (whole and term by term) and random sums
/// `Σ c_i u_i (x1 x2 - 1) v_i`, `Σ c_i u_i (x2 x1 - 1) v_i`.
pub fn slice_quotient_norm(
    alg: &TwistedAlgebra<EntireAlgebra>,
    f: &TwistedSeries<EntirePoly>,
    lambda: f64,
    rho: f64,
    cap: SliceCap,
    budget: &SearchBudget,
) -> Result<f64> {
    check_positive(lambda)?;
    check_positive(rho)?;
    let caps = alg.caps();
    let local = TwistedAlgebra::new(
        alg.base().clone(),
        Caps {
            max_word_len: f.max_word_len() + 2 * cap.max_padding + 2 * cap.max_multiplier_len + 2,
            max_degree: caps
                .max_degree
                .max(f.terms().filter_map(|(_, a)| a.degree()).max().unwrap_or(0))
                + 2 * cap.max_multiplier_degree,
        },
    );
    let pads: Vec<TwistedSeries<EntirePoly>> = [(1u8, 2u8), (2, 1)]
        .iter()
        .map(|&(a, b)| local.from_terms([(Word::new(vec![a, b]).expect("valid letters"), EntirePoly::one())]))
        .collect();
    let relators: Vec<TwistedSeries<EntirePoly>> = pads.iter().map(|p| local.sub(p, &local.one())).collect();

    let norm = |g: &TwistedSeries<EntirePoly>| -> Result<Option<f64>> {
        if g.truncated() {
            return Ok(None);
        }
        Ok(Some(local.twisted_norm(g, lambda, rho)?.value))
    };
    let padded = |t: &TwistedSeries<EntirePoly>, l: usize| -> Vec<TwistedSeries<EntirePoly>> {
        let mut out = vec![t.clone()];
        for pad in &pads {
            let p = local.pow(pad, l as u32);
            out.push(local.mul(t, &p));
            out.push(local.mul(&p, t));
        }
        out
    };

    let mut best = norm(f)?.ok_or_else(|| Error::CapOverflow("input exceeds the local caps".into()))?;
    let mut consider = |g: &TwistedSeries<EntirePoly>| -> Result<()> {
        if let Some(v) = norm(g)? {
            best = best.min(v);
        }
        Ok(())
    };

    for l in 1..=cap.max_padding {
        for g in padded(f, l) {
            consider(&g)?;
        }
    }

    // Term by term, each term keeps its own best padding.
    let mut combined = local.zero();
    for (w, a) in f.terms() {
        let t = local.term(a.clone(), w.clone());
        let mut choice = (norm(&t)?.unwrap_or(f64::INFINITY), t.clone());
        for l in 1..=cap.max_padding {
            for g in padded(&t, l) {
                if let Some(v) = norm(&g)? {
                    if v < choice.0 {
                        choice = (v, g);
                    }
                }
            }
        }
        combined = local.add(&combined, &choice.1);
    }
    consider(&combined)?;

    let mut rng = budget.rng();
    let random_monomial = |rng: &mut ChaCha8Rng| -> Result<TwistedSeries<EntirePoly>> {
        let len = rng.gen_range(0..=cap.max_multiplier_len);
        let word = Word::new((0..len).map(|_| rng.gen_range(1..=2u8)).collect())?;
        let m = rng.gen_range(0..=cap.max_multiplier_degree);
        Ok(local.term(Poly::monomial(budget.grid_scalar(rng), m), word))
    };
    for _ in 0..budget.max_samples {
        let mut g = local.zero();
        for _ in 0..rng.gen_range(1..=2usize) {
            let u = random_monomial(&mut rng)?;
            let v = random_monomial(&mut rng)?;
            let rel = &relators[rng.gen_range(0..relators.len())];
            g = local.add(&g, &local.mul(&local.mul(&u, rel), &v));
        }
        consider(&local.add(f, &g))?;
        consider(&local.add(&combined, &g))?;
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCheckReport {
    pub checked: usize,
    pub counterexample: Option<Word>,
}

impl WordCheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Evaluates `property` on every word of length at most `max_len` in
/// canonical order and stops at the first failure.
pub fn exhaustive_word_check(max_len: usize, property: impl Fn(&Word) -> bool) -> Result<WordCheckReport> {
    if max_len > 12 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive enumeration is limited to length 12, got {max_len}"
        )));
    }
    let mut checked = 0;
    for w in Word::all_up_to(max_len) {
        checked += 1;
        if !property(&w) {
            return Ok(WordCheckReport {
                checked,
                counterexample: Some(w),
            });
        }
    }
    Ok(WordCheckReport {
        checked,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::quotient_norm;
    use crate::scalar::int;
    use crate::word::canonical_word;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        let b2 = EntireAlgebra::scale(int(2)).unwrap();
        let zz = Poly::monomial(int(1), 2);
        let budget = SearchBudget::default();
        assert_eq!(bruteforce_twisted_norm(&b2, &zz, &w("12"), 1.0, &budget).unwrap(), 0.25);
        let f = EntirePoly::from_ints(&[1, -2, 3]);
        let v = bruteforce_twisted_norm(&b2, &f, &w("1"), 1.5, &budget).unwrap();
        assert_eq!(v, f.weighted_l1(1.5));
    }

    #[test]
    fn bruteforce_never_beats_closed_form() {
        let b2 = EntireAlgebra::scale(int(2)).unwrap();
        let budget = SearchBudget {
            max_samples: 50,
            ..SearchBudget::default()
        };
        for word in ["12", "21", "112", "2121", "1122"] {
            let word = w(word);
            let f = Poly::monomial(int(3), 3);
            let exact = b2.twisted_seminorm(&f, &word, 1.0).unwrap().value;
            for s in bruteforce_samples(&b2, &f, &word, 1.0, &budget).unwrap() {
                assert!(exact <= s + 1e-9, "{word}: {exact} > {s}");
            }
        }
    }

    #[test]
    fn works_for_shift_and_free_bases() {
        let shift = EntireAlgebra::shift();
        let f = Poly::monomial(int(1), 2);
        let budget = SearchBudget {
            max_samples: 20,
            ..SearchBudget::default()
        };
        let v = bruteforce_twisted_norm(&shift, &f, &w("21"), 1.0, &budget).unwrap();
        assert!(v <= 1.0);

        let free = FreeAlgebra::diagonal(vec![int(2), int(3)]).unwrap();
        let g = FreePoly::generator(0).mul(&FreePoly::generator(1));
        let v = bruteforce_twisted_norm(&free, &g, &w("12"), 1.0, &budget).unwrap();
        let exact = free.twisted_seminorm(&g, &w("12"), 1.0).unwrap();
        assert!(exact.value <= v + 1e-9);
    }

    #[test]
    fn deterministic_given_seed() {
        let b2 = EntireAlgebra::scale(int(2)).unwrap();
        let f = EntirePoly::from_ints(&[0, 1, 1]);
        let budget = SearchBudget::default();
        let a = bruteforce_samples(&b2, &f, &w("122"), 2.0, &budget).unwrap();
        let b = bruteforce_samples(&b2, &f, &w("122"), 2.0, &budget).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn slice_examples() {
        let t = TwistedAlgebra::new(EntireAlgebra::scale(int(2)).unwrap(), Caps::default());
        let budget = SearchBudget {
            max_samples: 30,
            ..SearchBudget::default()
        };
        let cap = SliceCap::default();
        let one = slice_quotient_norm(&t, &t.one(), 1.0, 0.5, cap, &budget).unwrap();
        assert!((one - 0.25f64.powi(8)).abs() < 1e-15);
        let x1 = slice_quotient_norm(&t, &t.x1(), 1.0, 2.0, cap, &budget).unwrap();
        assert_eq!(x1, 2.0);
        assert_eq!(x1, quotient_norm(&t, &t.x1(), 1.0, 2.0).unwrap());
        let zx1 = t.term(Poly::z(), w("1"));
        let v = slice_quotient_norm(&t, &zx1, 1.0, 1.5, cap, &budget).unwrap();
        assert!((v - 0.84375).abs() < 1e-12);
    }

    #[test]
    fn word_check_harness() {
        let report = exhaustive_word_check(8, |w| {
            let (_, kmax) = w.extremal_twists();
            let c = w.counts();
            kmax <= canonical_word(c.c1, c.c2).extremal_twists().1
        })
        .unwrap();
        assert!(report.passed());
        assert_eq!(report.checked, (1 << 9) - 1);
        let bad = exhaustive_word_check(4, |w| w.len() < 3).unwrap();
        assert_eq!(bad.counterexample, Some(w("111")));
        assert!(exhaustive_word_check(13, |_| true).is_err());
    }
}
