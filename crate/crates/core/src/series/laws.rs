//! Executable forms of the identities relating `exp`, `sin`, `cos` and the
//! formal derivative. Each suite returns a [`Report`] with one check per law.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::binomial;

use super::{PowerSeries, SeriesKind};
use crate::report::Report;
use crate::ring::{Rationals, Ring};

fn describe_diff<R: Ring>(a: &PowerSeries<R>, b: &PowerSeries<R>, order: u64) -> Option<String> {
    a.first_difference(b, order).map(|(m, x, y)| {
        let m = if m.is_identity() { "1".to_string() } else { m.to_string() };
        format!("coefficient of {m}: {} vs {}", a.ring.format(&x), a.ring.format(&y))
    })
}

/// Checks, through total degree `order`, that `λ·sin + cos = exp_λ`,
/// `sin = (exp_λ − exp_{−λ})/(2λ)`, `cos = (exp_λ + exp_{−λ})/2` and
/// `sin² + cos² = 1`, for a ring element `λ` with `λ² = −1`.
pub fn euler_suite<R: Ring>(ring: R, lambda: R::Elem, order: u64) -> Report {
    let mut report = Report::new("euler");
    let sq = ring.mul(&lambda, &lambda);
    let minus_one = ring.neg(&ring.one());
    report.record(
        "lambda squared is -1",
        (!ring.eq(&sq, &minus_one)).then(|| format!("lambda^2 = {}", ring.format(&sq))),
    );
    let named = |kind| PowerSeries::named(ring.clone(), kind, "x");
    let series = (|| {
        Ok::<_, super::SeriesError>((
            named(SeriesKind::Sin)?,
            named(SeriesKind::Cos)?,
            named(SeriesKind::Exp(lambda.clone()))?,
            named(SeriesKind::Exp(ring.neg(&lambda)))?,
        ))
    })();
    let (sin, cos, exp_p, exp_m) = match series {
        Ok(s) => s,
        Err(e) => {
            report.record("named series available", Some(e.to_string()));
            return report;
        }
    };
    report.record(
        "lambda*sin + cos = exp_lambda",
        describe_diff(&sin.scale(&lambda).add(&cos), &exp_p, order),
    );
    let two = ring.from_integer(&BigInt::from(2));
    match ring.try_invert(&ring.mul(&two, &lambda)) {
        Ok(inv) => report.record(
            "sin = (exp_lambda - exp_-lambda)/(2*lambda)",
            describe_diff(&sin, &exp_p.sub(&exp_m).scale(&inv), order),
        ),
        Err(e) => report.record("sin = (exp_lambda - exp_-lambda)/(2*lambda)", Some(e.to_string())),
    }
    match ring.try_invert(&two) {
        Ok(half) => report.record(
            "cos = (exp_lambda + exp_-lambda)/2",
            describe_diff(&cos, &exp_p.add(&exp_m).scale(&half), order),
        ),
        Err(e) => report.record("cos = (exp_lambda + exp_-lambda)/2", Some(e.to_string())),
    }
    let one = PowerSeries::one(ring.clone());
    report.record(
        "sin^2 + cos^2 = 1",
        describe_diff(&sin.mul(&sin).add(&cos.mul(&cos)), &one, order),
    );
    report
}

/// Checks the derivative laws on each sampled pair `(f, g)`, for every
/// variable of the pair and every order `p ≤ max_order`, through total
/// degree `order`:
///
/// * `∂⁰f = f` and `∂ᵖf = ∂^{p−1}(∂f)`,
/// * `∂ᵖ(f + g) = ∂ᵖf + ∂ᵖg`,
/// * `∂ᵖ(fg) = Σ_s C(p, s)·∂^{p−s}f·∂^s g`,
/// * `∂_k x_l = δ_{kl}`,
/// * `∂_k^a ∂_l^b f = ∂_l^b ∂_k^a f` for `a, b ≤ 2`.
pub fn derivative_laws_suite<R: Ring>(
    ring: R,
    pairs: &[(PowerSeries<R>, PowerSeries<R>)],
    max_order: u64,
    order: u64,
) -> Report {
    let mut report = Report::new("derivative laws");
    let mut first = [None, None, None, None, None];
    let mut note = |slot: usize, msg: Option<String>| {
        if first[slot].is_none() {
            first[slot] = msg;
        }
    };
    let mut all_vars = BTreeSet::new();
    for (i, (f, g)) in pairs.iter().enumerate() {
        let vars: BTreeSet<String> = f.vars().iter().chain(g.vars()).cloned().collect();
        for k in &vars {
            let df: Vec<_> = (0..=max_order).map(|p| f.partial(k, p)).collect();
            let dg: Vec<_> = (0..=max_order).map(|p| g.partial(k, p)).collect();
            note(0, describe_diff(&df[0], f, order).map(|d| format!("pair {i}, p=0: {d}")));
            let sum = f.add(g);
            let prod = f.mul(g);
            for p in 1..=max_order {
                note(
                    0,
                    describe_diff(&df[p as usize], &df[1].partial(k, p - 1), order)
                        .map(|d| format!("pair {i}, d/d{k}, p={p}: {d}")),
                );
                note(
                    1,
                    describe_diff(&sum.partial(k, p), &df[p as usize].add(&dg[p as usize]), order)
                        .map(|d| format!("pair {i}, d/d{k}, p={p}: {d}")),
                );
                let mut leibniz = PowerSeries::zero(ring.clone());
                for s in 0..=p {
                    let c = ring.from_integer(&BigInt::from(binomial(p, s)));
                    let term = df[(p - s) as usize].mul(&dg[s as usize]).scale(&c);
                    leibniz = leibniz.add(&term);
                }
                note(
                    2,
                    describe_diff(&prod.partial(k, p), &leibniz, order)
                        .map(|d| format!("pair {i}, d/d{k}, p={p}: {d}")),
                );
            }
        }
        let vs: Vec<&String> = vars.iter().collect();
        for (a, k) in vs.iter().enumerate() {
            for l in &vs[a + 1..] {
                for (p1, p2) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                    let lhs = f.partial(k, p1).partial(l, p2);
                    let rhs = f.partial(l, p2).partial(k, p1);
                    note(
                        4,
                        describe_diff(&lhs, &rhs, order)
                            .map(|d| format!("pair {i}, d{k}^{p1} d{l}^{p2}: {d}")),
                    );
                }
            }
        }
        all_vars.extend(vars);
    }
    all_vars.insert("x".to_string());
    all_vars.insert("y".to_string());
    for k in &all_vars {
        for l in &all_vars {
            let d = PowerSeries::variable(ring.clone(), l).partial(k, 1);
            let want = if k == l {
                PowerSeries::one(ring.clone())
            } else {
                PowerSeries::zero(ring.clone())
            };
            note(3, describe_diff(&d, &want, order).map(|e| format!("d{l}/d{k}: {e}")));
        }
    }
    let names = [
        "iterated derivative",
        "additivity",
        "leibniz rule",
        "derivative of a variable",
        "mixed partials commute",
    ];
    for (name, fail) in names.iter().zip(first) {
        report.record(*name, fail);
    }
    report
}

/// Checks `∂ᵖ sin` and `∂ᵖ cos` against the period-4 sign pattern, for
/// `1 ≤ p ≤ max_order`, through degree `order`: with `c_p = 1` when
/// `p mod 4 ∈ {0, 1}` and `c'_p = 1` when `p mod 4 ∈ {0, 3}` (else `−1`),
/// even `p` gives `c_p·sin` and `c'_p·cos`, odd `p` gives `c_p·cos` and
/// `c'_p·sin`. Also checks `sin(n) = −(n+1)·cos(n+1)`.
pub fn sin_cos_derivative_pattern(max_order: u64, order: u64) -> Report {
    let mut report = Report::new("sin/cos derivatives");
    let sin = PowerSeries::named(Rationals, SeriesKind::Sin, "x").expect("rationals");
    let cos = PowerSeries::named(Rationals, SeriesKind::Cos, "x").expect("rationals");
    let sign = |plus: bool| BigRational::from_integer(BigInt::from(if plus { 1 } else { -1 }));
    for p in 1..=max_order {
        let c = sign(matches!(p % 4, 0 | 1));
        let c2 = sign(matches!(p % 4, 0 | 3));
        let (s_target, c_target) = if p % 2 == 0 { (&sin, &cos) } else { (&cos, &sin) };
        report.record(
            format!("d^{p} sin"),
            describe_diff(&sin.partial("x", p), &s_target.scale(&c), order),
        );
        report.record(
            format!("d^{p} cos"),
            describe_diff(&cos.partial("x", p), &c_target.scale(&c2), order),
        );
    }
    let shifted = PowerSeries::from_fn(Rationals, &["x"], {
        let cos = cos.clone();
        move |e| {
            let n1 = e[0] + 1;
            -BigRational::from_integer(BigInt::from(n1)) * cos.coefficient_dense(&[n1])
        }
    });
    report.record("sin(n) = -(n+1)*cos(n+1)", describe_diff(&sin, &shifted, order));
    report
}
