use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use skewcalc_core::quotient::{quotient_norm, reduce_to_ore, vanishing_test, WordFamily};
use skewcalc_core::scalar::int;
use skewcalc_core::text::parse_twisted;
use skewcalc_core::{Caps, EntireAlgebra, EntirePoly, IntervalAlgebra, IntervalPoly, TwistedAlgebra};

const F: &str = "(z^2 - 3/2*z)*x1 x2^2 + (1+1i)*z*x2 x1 + 4*x1^3 - z^4 + x2";
const G: &str = "z*x1^2 x2 - x2 x1 x2 + (2*z^3 + 1)*x1 + 1/3";

fn scaling() -> TwistedAlgebra<EntireAlgebra> {
    TwistedAlgebra::new(
        EntireAlgebra::scale(int(2)).unwrap(),
        Caps {
            max_word_len: 16,
            max_degree: 32,
        },
    )
}

fn twisted(c: &mut Criterion) {
    let alg = scaling();
    let f = parse_twisted(&alg, F).unwrap();
    let g = parse_twisted(&alg, G).unwrap();
    let fg = alg.mul(&f, &g);

    c.bench_function("twisted_mul", |b| b.iter(|| alg.mul(black_box(&f), black_box(&g))));
    let mut group = c.benchmark_group("twisted_pow");
    for n in [2u32, 3] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| alg.pow(black_box(&g), n))
        });
    }
    group.finish();
    c.bench_function("twisted_norm", |b| {
        b.iter(|| alg.twisted_norm(black_box(&fg), 2.0, 1.5).unwrap())
    });
    c.bench_function("reduce_to_ore", |b| b.iter(|| reduce_to_ore(&alg, black_box(&fg))));
    c.bench_function("quotient_norm", |b| {
        b.iter(|| quotient_norm(&alg, black_box(&fg), 1.0, 1.5).unwrap())
    });
    c.bench_function("parse_print", |b| {
        b.iter(|| parse_twisted(&alg, black_box(&fg.to_string())).unwrap())
    });
}

fn vanishing(c: &mut Criterion) {
    let lambdas = [1.0, 2.0, 3.0];
    c.bench_function("vanishing_interval_shift", |b| {
        b.iter(|| {
            vanishing_test(
                &IntervalAlgebra::shift(),
                &IntervalPoly::one(),
                &lambdas,
                &[1.0],
                12,
                WordFamily::W,
            )
            .unwrap()
        })
    });
    c.bench_function("vanishing_entire_shift", |b| {
        b.iter(|| {
            vanishing_test(
                &EntireAlgebra::shift(),
                &EntirePoly::one(),
                &lambdas,
                &[1.0],
                12,
                WordFamily::W,
            )
            .unwrap()
        })
    });
}

criterion_group!(benches, twisted, vanishing);
criterion_main!(benches);
