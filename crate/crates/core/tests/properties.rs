use proptest::prelude::*;

use skewcalc_core::base::{entire_scale_aut, entire_seminorm, free_seminorm, interval_seminorm};
use skewcalc_core::ore::OreAlgebra;
use skewcalc_core::scalar::{self, int, real};
use skewcalc_core::twisted::{i_w_apply, Generator};
use skewcalc_core::word::{interval, Interval};
use skewcalc_core::{
    BaseAlgebra, Caps, EntireAlgebra, EntirePoly, FreeAlgebra, FreePoly, GenWord, IntervalAlgebra, IntervalPoly, Poly,
    Scalar, TwistedAlgebra, Word,
};

fn arb_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=2, 0..=max).prop_map(|v| Word::new(v).unwrap())
}

fn arb_nonempty_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=2, 1..=max).prop_map(|v| Word::new(v).unwrap())
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, 1i64..=4, -2i64..=2).prop_map(|(a, b, c)| Scalar::new(scalar::rational(a, b), scalar::rational(c, 3)))
}

fn arb_entire(max_deg: usize) -> impl Strategy<Value = EntirePoly> {
    prop::collection::vec(arb_scalar(), 0..=max_deg + 1).prop_map(Poly::new)
}

fn arb_interval_poly() -> impl Strategy<Value = IntervalPoly> {
    prop::collection::vec(-4i64..=4, 0..5).prop_map(|v| IntervalPoly::from_ints(&v))
}

fn arb_free() -> impl Strategy<Value = FreePoly> {
    prop::collection::vec((prop::collection::vec(0u8..2, 0..4), arb_scalar()), 0..4)
        .prop_map(|terms| FreePoly::from_terms(terms.into_iter().map(|(v, c)| (GenWord(v), c))))
}

fn q_param() -> impl Strategy<Value = Scalar> {
    prop::sample::select(vec![
        int(2),
        real(1, 2),
        real(3, 2),
        Scalar::new(scalar::rational(1, 1), scalar::rational(1, 1)),
    ])
}

fn arb_series(max_word: usize, max_deg: usize) -> impl Strategy<Value = Vec<(Word, EntirePoly)>> {
    prop::collection::vec((arb_word(max_word), arb_entire(max_deg)), 0..4)
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn twist_extremes_bracket_zero(w in arb_word(12)) {
        let (kmin, kmax) = w.extremal_twists();
        prop_assert!(kmin <= 0 && 0 <= kmax);
        prop_assert!((kmax - kmin) as usize <= w.len());
    }

    #[test]
    fn partial_sums_of_concatenation(a in arb_word(8), b in arb_word(8)) {
        let ab = a.concat(&b);
        for k in 0..=b.len() {
            prop_assert_eq!(ab.partial_sum(a.len() + k).unwrap(), a.winding() + b.partial_sum(k).unwrap());
        }
    }

    #[test]
    fn interval_inside_every_slot_window(w in arb_nonempty_word(10), n in 0.5f64..6.0) {
        let profile = w.profile();
        for &p in &profile[..w.len()] {
            let window = Interval::new(-n + p as f64, n + p as f64);
            prop_assert!(window.contains_interval(&interval(&w, n)));
        }
    }

    #[test]
    fn entire_seminorm_submultiplicative(f in arb_entire(5), g in arb_entire(5), rho in 0.1f64..5.0) {
        let lhs = entire_seminorm(&(&f * &g), rho).unwrap();
        let rhs = entire_seminorm(&f, rho).unwrap() * entire_seminorm(&g, rho).unwrap();
        prop_assert!(lhs <= rhs * (1.0 + 1e-9) + 1e-12);
    }

    #[test]
    fn interval_seminorm_submultiplicative(f in arb_interval_poly(), g in arb_interval_poly(), n in 0.25f64..3.0) {
        let i = Interval::new(-n, n);
        let lhs = interval_seminorm(&(&f * &g), &i);
        let rhs = interval_seminorm(&f, &i) * interval_seminorm(&g, &i);
        prop_assert!(lhs <= rhs * (1.0 + 1e-9) + 1e-12);
    }

    #[test]
    fn free_seminorm_submultiplicative(f in arb_free(), g in arb_free(), rho in 0.1f64..4.0) {
        let lhs = free_seminorm(&f.mul(&g), rho).unwrap();
        let rhs = free_seminorm(&f, rho).unwrap() * free_seminorm(&g, rho).unwrap();
        prop_assert!(lhs <= rhs * (1.0 + 1e-9) + 1e-12);
    }

    #[test]
    fn scaling_moves_the_radius(f in arb_entire(6), q in q_param(), k in -3i64..=3, rho in 0.1f64..3.0) {
        let lhs = entire_seminorm(&entire_scale_aut(&f, &q, k).unwrap(), rho).unwrap();
        let rhs = entire_seminorm(&f, scalar::modulus(&q).powi(k as i32) * rho).unwrap();
        prop_assert!(rel_close(lhs, rhs, 1e-12));
    }

    #[test]
    fn translation_moves_the_window(f in arb_interval_poly(), k in -3i64..=3, a in -3.0f64..0.0, len in 0.0f64..3.0) {
        // α^{-k}(f) = f(· + k)
        let alg = IntervalAlgebra::shift();
        let b = a + len;
        let lhs = interval_seminorm(&alg.aut(&f, -k), &Interval::new(a, b));
        let rhs = interval_seminorm(&f, &Interval::new(a + k as f64, b + k as f64));
        prop_assert!(rel_close(lhs, rhs, 1e-12));
    }

    #[test]
    fn diagonal_scales_each_monomial(v in prop::collection::vec(0u8..2, 0..5), k in -2i64..=2, rho in 0.2f64..3.0) {
        let alg = FreeAlgebra::diagonal(vec![int(2), Scalar::new(scalar::rational(0, 1), scalar::rational(1, 1))]).unwrap();
        let mono = FreePoly::generator(0).mul(&FreePoly::term(scalar::int(1), GenWord(v.clone())));
        let word = GenWord([vec![0u8], v].concat());
        let factor = 2f64.powi(k as i32 * word.occurrences(0) as i32);
        let lhs = free_seminorm(&alg.aut(&mono, k), rho).unwrap();
        prop_assert!(rel_close(lhs, factor * free_seminorm(&mono, rho).unwrap(), 1e-12));
    }

    #[test]
    fn twisted_product_associative(a in arb_series(3, 2), b in arb_series(3, 2), c in arb_series(3, 2), q in q_param()) {
        let t = TwistedAlgebra::new(EntireAlgebra::scale(q).unwrap(), Caps { max_word_len: 9, max_degree: 6 });
        let (f, g, h) = (t.from_terms(a), t.from_terms(b), t.from_terms(c));
        prop_assert_eq!(t.mul(&t.mul(&f, &g), &h), t.mul(&f, &t.mul(&g, &h)));
    }

    #[test]
    fn twisted_product_is_graded(a in arb_series(3, 2), b in arb_series(3, 2)) {
        let t = TwistedAlgebra::new(EntireAlgebra::shift(), Caps::default());
        let (f, g) = (t.from_terms(a), t.from_terms(b));
        for (w, _) in t.mul(&f, &g).terms() {
            let from_supports = f.terms().any(|(u, _)| {
                g.terms().any(|(v, _)| u.concat(v) == *w)
            });
            prop_assert!(from_supports, "{} not a concatenation", w);
        }
    }

    #[test]
    fn i_w_balanced(w in arb_nonempty_word(5), r in arb_entire(2), seed in prop::collection::vec(arb_entire(2), 5), slot in 0usize..5) {
        let alg = EntireAlgebra::scale(real(3, 2)).unwrap();
        let factors: Vec<EntirePoly> = seed[..w.len()].to_vec();
        prop_assume!(slot + 1 < w.len());
        let twist = 3 - 2 * w.letters()[slot] as i64;
        let mut left = factors.clone();
        left[slot] = &left[slot] * &alg.aut(&r, twist);
        let mut right = factors.clone();
        right[slot + 1] = &r * &right[slot + 1];
        prop_assert_eq!(i_w_apply(&alg, &w, &left).unwrap(), i_w_apply(&alg, &w, &right).unwrap());
    }

    #[test]
    fn embedding_is_multiplicative(
        a in prop::collection::vec((0i64..4, arb_entire(2)), 0..3),
        b in prop::collection::vec((0i64..4, arb_entire(2)), 0..3),
        q in q_param(),
    ) {
        let base = EntireAlgebra::scale(q).unwrap();
        let t = TwistedAlgebra::new(base.clone(), Caps::default());
        for (which, ore) in [(Generator::X1, OreAlgebra::laurent(base.clone())), (Generator::X2, OreAlgebra::laurent(base.inverse()))] {
            let (p, r) = (ore.from_terms(a.clone()), ore.from_terms(b.clone()));
            let lhs = t.embed_ore(&ore.mul(&p, &r).unwrap(), which).unwrap();
            let rhs = t.mul(&t.embed_ore(&p, which).unwrap(), &t.embed_ore(&r, which).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn single_variable_threshold_for_interval_shift() {
    // a x^k lives on [-n + k - 1, n], empty once k > 2n + 1.
    let t = TwistedAlgebra::new(
        IntervalAlgebra::shift(),
        Caps {
            max_word_len: 16,
            max_degree: 4,
        },
    );
    for n in 1..=5usize {
        let nf = n as f64;
        for k in 1..=14usize {
            let f = t.term(IntervalPoly::one(), Word::power(1, k));
            let v = t.single_variable_norm(&f, nf, 1.0).unwrap().value;
            assert_eq!(v == 0.0, k > 2 * n + 1, "n={n} k={k}");
        }
    }
}
