use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::rngs::StdRng;
use rand::SeedableRng;

use monoidal::completion::tower_of;
use monoidal::ring::Rationals;
use monoidal::series::PowerSeries;
use monoidal::{polynomial_ring, sampling, Ring};

fn polynomial_mul(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(1);
    let pr = polynomial_ring(Rationals);
    let mut group = c.benchmark_group("polynomial_mul");
    for terms in [8usize, 32, 128] {
        let f = sampling::polynomial(&mut rng, &Rationals, &["x", "y", "z"], 12, terms, |g| sampling::rational(g, 50));
        let g = sampling::polynomial(&mut rng, &Rationals, &["x", "y", "z"], 12, terms, |g| sampling::rational(g, 50));
        group.bench_with_input(BenchmarkId::from_parameter(terms), &(f, g), |b, (f, g)| {
            b.iter(|| pr.mul(black_box(f), black_box(g)))
        });
    }
    group.finish();
}

fn series_invert(c: &mut Criterion) {
    let mut group = c.benchmark_group("series_invert");
    for order in [10u64, 20, 40] {
        group.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, &order| {
            b.iter(|| {
                // fresh series each time so the memo starts empty
                let f = PowerSeries::from_fn(Rationals, &["x"], |e| {
                    num_rational::BigRational::from_integer((e[0] as i64 + 1).into())
                });
                f.invert().unwrap().coefficient_dense(&[order])
            })
        });
    }
    group.bench_function("bivariate_order_12", |b| {
        b.iter(|| {
            let f = sampling::series(Rationals, &["x", "y"], 5, |g| sampling::rational(g, 9))
                .add(&PowerSeries::one(Rationals));
            f.invert().map(|g| g.terms_below(12).len())
        })
    });
    group.finish();
}

fn tower_reconstruct(c: &mut Criterion) {
    c.bench_function("tower_reconstruct_level_12", |b| {
        b.iter(|| {
            let f = sampling::series(Rationals, &["x", "y"], 9, |g| sampling::rational(g, 9));
            let back = tower_of(&f).reconstruct(12).unwrap();
            back.terms_below(12).len()
        })
    });
}

criterion_group!(benches, polynomial_mul, series_invert, tower_reconstruct);
criterion_main!(benches);
