//! Real-root isolation for rational polynomials via Sturm sequences, and the
//! sup-norm `sup_{x ∈ I} |f(x)|` built on it.

use num_rational::BigRational;
use num_traits::Signed;

use crate::poly::{Coeff, IntervalPoly};
use crate::scalar::{self, rational};
use crate::word::Interval;

/// Width below which an isolating interval is accepted as a root location.
pub const ISOLATION_WIDTH: f64 = 1e-12;

/// Standard Sturm chain `p, p', -rem(p, p'), …`.
pub fn sturm_chain(p: &IntervalPoly) -> Vec<IntervalPoly> {
    let mut chain = vec![p.clone()];
    if p.is_zero() {
        return chain;
    }
    let mut next = p.derivative();
    while !next.is_zero() {
        let prev = chain.last().expect("chain is nonempty").clone();
        chain.push(next.clone());
        let (_, rem) = prev.div_rem(&next);
        next = -&rem;
    }
    chain
}

fn sign(r: &BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if Signed::is_negative(r) {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[IntervalPoly], x: &BigRational) -> usize {
    variations(chain.iter().map(|p| sign(&p.eval(x))))
}

fn variations_at_infinity(chain: &[IntervalPoly], positive: bool) -> usize {
    variations(chain.iter().map(|p| {
        let Some(d) = p.degree() else { return 0 };
        let lead = sign(&p.coeffs()[d]);
        if positive || d % 2 == 0 {
            lead
        } else {
            -lead
        }
    }))
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots(p: &IntervalPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(p);
    variations_at_infinity(&chain, false) - variations_at_infinity(&chain, true)
}

/// Isolate the distinct roots of `p` in the half-open `(lo, hi]` into
/// subintervals of width at most `width`. `p` must be nonzero.
pub fn isolate_roots(
    p: &IntervalPoly,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> Vec<(BigRational, BigRational)> {
    let chain = sturm_chain(p);
    let mut out = Vec::new();
    let mut stack = vec![(
        lo.clone(),
        hi.clone(),
        variations_at(&chain, lo),
        variations_at(&chain, hi),
    )];
    while let Some((a, b, va, vb)) = stack.pop() {
        let n = va.saturating_sub(vb);
        if n == 0 {
            continue;
        }
        if &(&b - &a) <= width {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / rational(2, 1);
        let vm = variations_at(&chain, &mid);
        stack.push((mid.clone(), b, vm, vb));
        stack.push((a, mid, va, vm));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// `sup_{x ∈ I} |f(x)|`; zero on the empty interval.
///
/// Candidates are the endpoints and one point inside each isolating
/// interval of a critical point.
pub fn sup_norm(f: &IntervalPoly, interval: &Interval) -> f64 {
    let (lo, hi) = match *interval {
        Interval::Empty => return 0.0,
        Interval::Closed { lo, hi } => (lo, hi),
    };
    if f.is_zero() {
        return 0.0;
    }
    let lo = scalar::rational_from_f64(lo).expect("finite interval endpoint");
    let hi = scalar::rational_from_f64(hi).expect("finite interval endpoint");
    let abs_at = |x: &BigRational| f.eval(x).modulus();
    let mut best = abs_at(&lo).max(abs_at(&hi));
    let df = f.derivative();
    if df.is_zero() || lo == hi {
        return best;
    }
    let width = scalar::rational_from_f64(ISOLATION_WIDTH).expect("finite width");
    for (a, b) in isolate_roots(&df, &lo, &hi, &width) {
        let mid = (&a + &b) / rational(2, 1);
        best = best.max(abs_at(&mid));
    }
    best
}

/// Whether `f` has no real zero, i.e. is a unit of `C(ℝ)`.
pub fn is_nowhere_zero(f: &IntervalPoly) -> bool {
    !f.is_zero() && count_real_roots(f) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed(lo: f64, hi: f64) -> Interval {
        Interval::Closed { lo, hi }
    }

    #[test]
    fn sup_norm_examples() {
        let z = IntervalPoly::z();
        assert_eq!(sup_norm(&z, &closed(0.0, 1.0)), 1.0);
        assert_eq!(sup_norm(&IntervalPoly::one(), &Interval::Empty), 0.0);
        let f = IntervalPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(sup_norm(&f, &closed(-1.0, 1.0)), 1.0);
        assert_eq!(sup_norm(&f, &closed(-0.5, 0.5)), 1.0);
    }

    #[test]
    fn interior_maximum_of_cubic() {
        // z^3 - 3z has a local max of 2 at z = -1 and a local min of -2 at z = 1.
        let f = IntervalPoly::from_ints(&[0, -3, 0, 1]);
        assert!((sup_norm(&f, &closed(-1.5, 1.5)) - 2.0).abs() < 1e-12);
        assert!((sup_norm(&f, &closed(-0.5, 1.2)) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn irrational_critical_point() {
        // z^3 - 2z: critical points at ±sqrt(2/3).
        let f = IntervalPoly::from_ints(&[0, -2, 0, 1]);
        let x = (2.0f64 / 3.0).sqrt();
        let expected = (x * x * x - 2.0 * x).abs();
        assert!((sup_norm(&f, &closed(0.0, 1.0)) - expected).abs() < 1e-12);
    }

    #[test]
    fn root_counting() {
        assert_eq!(count_real_roots(&IntervalPoly::from_ints(&[-1, 0, 1])), 2);
        assert_eq!(count_real_roots(&IntervalPoly::from_ints(&[1, 0, 1])), 0);
        assert_eq!(count_real_roots(&IntervalPoly::from_ints(&[0, 0, 1])), 1);
        assert!(is_nowhere_zero(&IntervalPoly::from_ints(&[2])));
        assert!(!is_nowhere_zero(&IntervalPoly::from_ints(&[0, 1])));
    }
}
