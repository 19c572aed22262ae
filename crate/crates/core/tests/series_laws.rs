use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use monoidal::ring::{Integers, Rationals};
use monoidal::sampling;
use monoidal::series::{for_each_exponent_below, PowerSeries, SeriesKind};
use monoidal::Ring;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn random(seed: u64, vars: &[&str]) -> PowerSeries<Rationals> {
    sampling::series(Rationals, vars, seed, |g| sampling::rational(g, 7))
}

/// `Σ_{u+v+w=m} f(u)g(v)h(w)` for two-variable series, enumerated directly.
fn triple_sum(f: &PowerSeries<Rationals>, g: &PowerSeries<Rationals>, h: &PowerSeries<Rationals>, m: &[u64]) -> BigRational {
    let mut acc = q(0, 1);
    for u0 in 0..=m[0] {
        for u1 in 0..=m[1] {
            for v0 in 0..=m[0] - u0 {
                for v1 in 0..=m[1] - u1 {
                    let w = [m[0] - u0 - v0, m[1] - u1 - v1];
                    acc += f.coefficient_dense(&[u0, u1]) * g.coefficient_dense(&[v0, v1]) * h.coefficient_dense(&w);
                }
            }
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplication_is_associative(seed in 0u64..1_000_000) {
        let vars = ["x", "y"];
        let (f, g, h) = (random(seed, &vars), random(seed + 1, &vars), random(seed + 2, &vars));
        let left = f.mul(&g).mul(&h);
        let right = f.mul(&g.mul(&h));
        let mut ok = true;
        for_each_exponent_below(2, 10, |m| {
            let want = triple_sum(&f, &g, &h, m);
            ok &= left.coefficient_dense(m) == want && right.coefficient_dense(m) == want;
        });
        prop_assert!(ok);
    }

    #[test]
    fn invert_is_two_sided_and_involutive(seed in 0u64..1_000_000, c in 1i64..5) {
        let f = random(seed, &["x", "y"]).add(&PowerSeries::constant(Rationals, q(c, 1)));
        prop_assume!(f.constant_term() != q(0, 1));
        let g = f.invert().unwrap();
        let one = PowerSeries::one(Rationals);
        prop_assert!(f.mul(&g).eq_through(&one, 8));
        prop_assert!(g.mul(&f).eq_through(&one, 8));
        prop_assert!(g.invert().unwrap().eq_through(&f, 8));
    }

    #[test]
    fn memo_is_invisible(seed in 0u64..1_000_000) {
        let f = random(seed, &["x"]);
        let g = f.mul(&f).add(&f.partial("x", 2));
        let first = g.terms_below(12);
        g.clear_memo();
        prop_assert_eq!(g.memo_len(), 0);
        prop_assert_eq!(g.terms_below(12), first);
    }

    #[test]
    fn derivative_of_polynomial_is_polynomial(seed in 0u64..1000, p in 0u64..5) {
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(seed);
        let f = sampling::polynomial(&mut rng, &Rationals, &["x", "y"], 6, 5, |g| sampling::rational(g, 4));
        let pr = monoidal::polynomial_ring(Rationals);
        let s = PowerSeries::from_polynomial(Rationals, &f);
        let d = PowerSeries::from_polynomial(Rationals, &pr.derivative(&f, "x", p));
        prop_assert!(s.partial("x", p).eq_through(&d, 14));
    }
}

#[test]
fn exp_derivatives() {
    for a in [q(1, 1), q(2, 1), q(-1, 3)] {
        let e = PowerSeries::named(Rationals, SeriesKind::Exp(a.clone()), "x").unwrap();
        for p in 1..=5u64 {
            assert!(e.partial("x", p).eq_through(&e.scale(&Rationals.pow(&a, p)), 12), "a = {a}, p = {p}");
        }
    }
}

#[test]
fn euler_square_coefficients() {
    let s = PowerSeries::named(Rationals, SeriesKind::Sin, "x").unwrap();
    let c = PowerSeries::named(Rationals, SeriesKind::Cos, "x").unwrap();
    let sum = s.mul(&s).add(&c.mul(&c));
    assert_eq!(sum.constant_term(), q(1, 1));
    // x² coefficient: 1 (from sin²) − 1 (from cos²)
    assert_eq!(sum.coefficient_dense(&[2]), q(0, 1));
}

#[test]
fn product_reads_only_the_box() {
    use std::sync::Mutex;
    let log = Arc::new(Mutex::new(Vec::new()));
    let l = Arc::clone(&log);
    let f = PowerSeries::from_fn(Integers, &["x", "y"], move |e| {
        l.lock().unwrap().push(e.to_vec());
        BigInt::from(1)
    });
    let g = PowerSeries::from_fn(Integers, &["x", "y"], |_| BigInt::from(1));
    let _ = f.mul(&g).coefficient_dense(&[2, 3]);
    let reads = log.lock().unwrap();
    assert!(reads.iter().all(|e| e[0] <= 2 && e[1] <= 3));
    assert_eq!(reads.len(), 12);
}

#[test]
fn concurrent_readers_agree() {
    let f = random(99, &["x", "y"]).invert_or_one();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let f = f.clone();
            std::thread::spawn(move || f.terms_below(9))
        })
        .collect();
    let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert!(results.windows(2).all(|w| w[0] == w[1]));
}

trait InvertOrOne {
    fn invert_or_one(&self) -> Self;
}

impl InvertOrOne for PowerSeries<Rationals> {
    fn invert_or_one(&self) -> Self {
        self.add(&PowerSeries::one(Rationals)).invert().unwrap_or_else(|_| PowerSeries::one(Rationals))
    }
}
