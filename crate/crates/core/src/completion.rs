//! Truncation `f ↦ f_p`, truncation towers as elements of the projective
//! limit `lim R[x]/I^p`, reconstruction of series from towers, and exact
//! evaluation of series in the complete rings `R[y]/(y^k)`.
//!
//! All of this is for finitely many variables `x_1, ..., x_n` and
//! `I = (x_1, ..., x_n)`. Membership in `I^p` (or `J^p` for series) is
//! decided by degree: every term has total degree at least `p`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};
use thiserror::Error;

use crate::monoid::ExponentVector;
use crate::polynomial::{polynomial_ring, Polynomial, PolynomialError};
use crate::report::Report;
use crate::ring::{Ring, RingError};
use crate::series::PowerSeries;
use crate::text::{render_sum, TermText};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("tower is incoherent at level {level}: {detail}")]
    IncoherentTower { level: u64, detail: String },
    #[error("tower levels start at 1")]
    LevelZero,
    #[error("argument for {0} is not in the ideal (nonzero constant term)")]
    ArgumentNotInIdeal(String),
    #[error("evaluation target must be commutative")]
    NoncommutativeTarget,
    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),
}

impl From<PolynomialError> for CompletionError {
    fn from(e: PolynomialError) -> Self {
        match e {
            PolynomialError::MissingAssignment(v) => Self::MissingAssignment(v),
            PolynomialError::NoncommutativeTarget => Self::NoncommutativeTarget,
            PolynomialError::ZeroPolynomial => unreachable!("evaluation never asks for a leading term"),
        }
    }
}

/// `f_p`: the terms of `f` of total degree `< p`.
pub fn truncate<R: Ring>(f: &PowerSeries<R>, p: u64) -> Polynomial<R::Elem> {
    polynomial_ring(f.ring().clone()).from_terms(f.terms_below(p))
}

fn degree_below(m: &ExponentVector, p: u64) -> bool {
    m.total_degree() < BigUint::from(p)
}

type LevelFn<R> = dyn Fn(u64) -> Polynomial<<R as Ring>::Elem> + Send + Sync;

struct TowerInner<R: Ring> {
    ring: R,
    vars: Vec<String>,
    source: Box<LevelFn<R>>,
    /// `levels[i]` is `g_{i+1}`; only coherent levels are stored.
    levels: Mutex<Vec<Polynomial<R::Elem>>>,
}

/// A coherent sequence `(g_p)_{p≥1}` of polynomials with `g_p` of degree
/// `< p` and `g_{p+1} − g_p ∈ I^p`.
///
/// Levels are produced on demand by a source function and checked for
/// coherence as they are materialized. Materialization takes a lock, so a
/// tower can be shared between threads; levels are produced in order by
/// whichever thread asks first.
pub struct TruncationTower<R: Ring> {
    inner: Arc<TowerInner<R>>,
}

impl<R: Ring> Clone for TruncationTower<R> {
    fn clone(&self) -> Self {
        Self {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<R: Ring> std::fmt::Debug for TruncationTower<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TruncationTower")
            .field("ring", &self.inner.ring.name())
            .field("vars", &self.inner.vars)
            .field("materialized", &self.materialized())
            .finish()
    }
}

impl<R: Ring> TruncationTower<R> {
    /// A tower whose level `p` is `source(p)`.
    pub fn from_fn<S: AsRef<str>>(
        ring: R,
        vars: &[S],
        source: impl Fn(u64) -> Polynomial<R::Elem> + Send + Sync + 'static,
    ) -> Self {
        let mut vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        vars.sort();
        vars.dedup();
        Self {
            inner: Arc::new(TowerInner {
                ring,
                vars,
                source: Box::new(source),
                levels: Mutex::new(Vec::new()),
            }),
        }
    }

    /// A tower with the given levels `g_1, ..., g_L`; every later level
    /// repeats `g_L` (and is zero if no level is given).
    pub fn from_levels<S: AsRef<str>>(ring: R, vars: &[S], levels: Vec<Polynomial<R::Elem>>) -> Self {
        Self::from_fn(ring, vars, move |p| {
            let i = (p as usize).min(levels.len());
            if i == 0 {
                Polynomial::default()
            } else {
                levels[i - 1].clone()
            }
        })
    }

    pub fn ring(&self) -> &R {
        &self.inner.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.inner.vars
    }

    /// Number of levels materialized so far.
    pub fn materialized(&self) -> u64 {
        self.inner.levels.lock().unwrap().len() as u64
    }

    fn check_level(&self, p: u64, g: &Polynomial<R::Elem>, prev: Option<&Polynomial<R::Elem>>) -> Result<(), CompletionError> {
        let bad = |detail: String| CompletionError::IncoherentTower { level: p, detail };
        for m in g.support() {
            if let Some(v) = m.variables().find(|v| !self.inner.vars.iter().any(|w| w == v)) {
                return Err(bad(format!("undeclared variable {v}")));
            }
            if !degree_below(m, p) {
                return Err(bad(format!("term {m} has degree >= {p}")));
            }
        }
        if let Some(prev) = prev {
            let pr = polynomial_ring(self.inner.ring.clone());
            let diff = pr.sub(g, prev);
            let low = diff
                .support()
                .find(|m| degree_below(m, p - 1))
                .map(|m| if m.is_identity() { "1".to_string() } else { m.to_string() });
            if let Some(m) = low {
                return Err(bad(format!("g_{p} - g_{} has a term at {m}", p - 1)));
            }
        }
        Ok(())
    }

    /// `g_p`, materializing and checking levels `1..=p` as needed.
    pub fn level(&self, p: u64) -> Result<Polynomial<R::Elem>, CompletionError> {
        if p == 0 {
            return Err(CompletionError::LevelZero);
        }
        let mut levels = self.inner.levels.lock().unwrap();
        while (levels.len() as u64) < p {
            let q = levels.len() as u64 + 1;
            let g = (self.inner.source)(q);
            self.check_level(q, &g, levels.last())?;
            levels.push(g);
        }
        Ok(levels[p as usize - 1].clone())
    }

    /// Levels `1..=p` in order.
    pub fn levels(&self, p: u64) -> Result<Vec<Polynomial<R::Elem>>, CompletionError> {
        (1..=p).map(|q| self.level(q)).collect()
    }

    /// The series `f` with `f(m) = g_{|m|+1}(m)`.
    ///
    /// Levels are materialized lazily as coefficients are queried. This
    /// call fails if some level up to `check_through` is incoherent;
    /// querying a coefficient that needs a later incoherent level panics.
    pub fn reconstruct(&self, check_through: u64) -> Result<PowerSeries<R>, CompletionError> {
        if check_through > 0 {
            self.level(check_through)?;
        }
        let tower = self.clone();
        let vars = self.inner.vars.clone();
        let names = vars.clone();
        Ok(PowerSeries::from_fn(self.inner.ring.clone(), &vars, move |e| {
            let p: u64 = e.iter().sum::<u64>() + 1;
            let g = tower
                .level(p)
                .unwrap_or_else(|err| panic!("reconstructing from an incoherent tower: {err}"));
            let m = ExponentVector::from_dense(&names, e);
            g.get(&m).cloned().unwrap_or_else(|| tower.inner.ring.zero())
        }))
    }

    /// One line per level `1..=p`, in canonical polynomial text.
    pub fn render_levels(&self, p: u64) -> Result<Vec<String>, CompletionError> {
        let pr = polynomial_ring(self.inner.ring.clone());
        Ok(self.levels(p)?.iter().map(|g| pr.format(g)).collect())
    }

    pub fn levels_to_json(&self, p: u64) -> Result<Value, CompletionError> {
        let pr = polynomial_ring(self.inner.ring.clone());
        let levels = self.levels(p)?;
        Ok(Value::Array(
            levels
                .iter()
                .zip(1u64..)
                .map(|(g, q)| json!({"level": q, "poly": pr.to_json(g)}))
                .collect(),
        ))
    }
}

/// `(f_p)_{p≥1}`, the image of `f` in the projective limit.
pub fn tower_of<R: Ring>(f: &PowerSeries<R>) -> TruncationTower<R> {
    let g = f.clone();
    TruncationTower::from_fn(f.ring().clone(), f.vars(), move |p| truncate(&g, p))
}

/// Splits `m` (with `|m| ≥ p`) as `t + s` with `|t| = p`, taking as much as
/// possible from the earliest variables.
fn greedy_head(m: &[u64], p: u64) -> Vec<u64> {
    let mut left = p;
    m.iter()
        .map(|e| {
            let take = (*e).min(left);
            left -= take;
            take
        })
        .collect()
}

fn for_each_exponent_of_degree(n: usize, p: u64, f: &mut impl FnMut(&[u64])) {
    let mut buf = vec![0u64; n];
    fn go(buf: &mut [u64], i: usize, left: u64, f: &mut impl FnMut(&[u64])) {
        if i + 1 == buf.len() {
            buf[i] = left;
            f(buf);
            return;
        }
        for e in (0..=left).rev() {
            buf[i] = e;
            go(buf, i + 1, left - e, f);
        }
    }
    if n > 0 {
        go(&mut buf, 0, p, f);
    }
}

/// Checks that `f − f_p ∈ J^p`: no coefficient of `f − f_p` below degree `p`,
/// and `f = f_p + Σ_{|t|=p} h_t·x^t` for explicit series `h_t`, compared
/// through degree `p + extra`.
pub fn check_remainder_ideal<R: Ring>(f: &PowerSeries<R>, p: u64, extra: u64) -> Report {
    let mut report = Report::new(format!("remainder ideal, p = {p}"));
    let ring = f.ring().clone();
    let vars = f.vars().to_vec();
    let fp = PowerSeries::from_polynomial(ring.clone(), &truncate(f, p)).with_vars(&vars);
    let rest = f.sub(&fp);
    let low = rest.terms_below(p);
    report.record(
        "f - f_p vanishes below degree p",
        low.first().map(|(m, c)| format!("coefficient {} at {m}", ring.format(c))),
    );
    let mut sum = fp;
    let pr = polynomial_ring(ring.clone());
    let mut count = 0usize;
    for_each_exponent_of_degree(vars.len(), p, &mut |t| {
        count += 1;
        let t = t.to_vec();
        let src = f.clone();
        let head = t.clone();
        let h = PowerSeries::from_fn(ring.clone(), &vars, move |s| {
            let m: Vec<u64> = s.iter().zip(&head).map(|(a, b)| a + b).collect();
            if greedy_head(&m, p) == head {
                src.coefficient_dense(&m)
            } else {
                src.ring().zero()
            }
        });
        let xt = PowerSeries::from_polynomial(ring.clone(), &pr.monomial(ExponentVector::from_dense(&vars, &t)))
            .with_vars(&vars);
        sum = sum.add(&xt.mul(&h));
    });
    report.record(
        format!("f = f_p + sum of {count} terms h_t*x^t through degree {}", p + extra),
        sum.first_difference(f, p + extra).map(|(m, a, b)| {
            format!("at {m}: {} vs {}", ring.format(&a), ring.format(&b))
        }),
    );
    report
}

/// Checks that `R[x]/I^p → S/J^p` is an isomorphism on samples: each series
/// agrees with its truncation below degree `p`, truncation is additive and
/// multiplicative modulo degree `p` on consecutive sample pairs, and
/// polynomials of degree `< p` are fixed by truncation (so distinct classes
/// stay distinct).
pub fn quotient_iso_check<R: Ring>(
    ring: &R,
    p: u64,
    series: &[PowerSeries<R>],
    polys: &[Polynomial<R::Elem>],
) -> Report {
    let mut report = Report::new(format!("quotient isomorphism, p = {p}"));
    let mut fail = [None, None, None, None];
    let mut note = |i: usize, m: Option<String>| {
        if fail[i].is_none() {
            fail[i] = m;
        }
    };
    let pr = polynomial_ring(ring.clone());
    for (i, f) in series.iter().enumerate() {
        let fp = PowerSeries::from_polynomial(ring.clone(), &truncate(f, p));
        note(0, f.first_difference(&fp, p).map(|(m, ..)| format!("series {i} at {m}")));
        if let Some(g) = series.get(i + 1) {
            let (tf, tg) = (truncate(f, p), truncate(g, p));
            if !pr.eq(&truncate(&f.add(g), p), &pr.add(&tf, &tg)) {
                note(1, Some(format!("series {i} and {}", i + 1)));
            }
            let lhs = pr.truncate_degree(&pr.mul(&tf, &tg), p);
            if !pr.eq(&truncate(&f.mul(g), p), &lhs) {
                note(2, Some(format!("series {i} and {}", i + 1)));
            }
        }
    }
    for (i, a) in polys.iter().enumerate() {
        if a.support().all(|m| degree_below(m, p)) {
            let back = truncate(&PowerSeries::from_polynomial(ring.clone(), a), p);
            if !pr.eq(&back, a) {
                note(3, Some(format!("polynomial {i}")));
            }
        }
    }
    let names = [
        "f = f_p modulo degree p",
        "truncation is additive",
        "truncation is multiplicative modulo degree p",
        "polynomials below degree p are fixed",
    ];
    for (n, f) in names.iter().zip(fail) {
        report.record(*n, f);
    }
    report
}

/// `R[y]/(y^k)`, complete for the `(y)`-adic topology. Elements are the
/// `k` coefficients of `1, y, ..., y^{k−1}`.
#[derive(Debug, Clone)]
pub struct NilpotentQuotientRing<R: Ring> {
    base: R,
    var: String,
    k: usize,
}

impl<R: Ring> NilpotentQuotientRing<R> {
    /// `None` when `k = 0`.
    pub fn new(base: R, var: impl Into<String>, k: usize) -> Option<Self> {
        (k > 0).then(|| Self {
            base,
            var: var.into(),
            k,
        })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn nilpotency(&self) -> usize {
        self.k
    }

    /// The class of `Σ c_i y^i`; coefficients past `k` are dropped.
    pub fn from_coeffs(&self, coeffs: impl IntoIterator<Item = R::Elem>) -> Vec<R::Elem> {
        let mut v: Vec<R::Elem> = coeffs.into_iter().take(self.k).collect();
        v.resize(self.k, self.base.zero());
        v
    }

    pub fn embed(&self, c: R::Elem) -> Vec<R::Elem> {
        self.from_coeffs([c])
    }

    /// The class of `y`.
    pub fn y(&self) -> Vec<R::Elem> {
        self.from_coeffs([self.base.zero(), self.base.one()])
    }

    /// Whether `a` lies in the ideal `(y)`.
    pub fn in_ideal(&self, a: &[R::Elem]) -> bool {
        self.base.is_zero(&a[0])
    }
}

impl<R: Ring> Ring for NilpotentQuotientRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.from_coeffs([])
    }

    fn one(&self) -> Self::Elem {
        self.embed(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        (0..self.k)
            .map(|n| {
                (0..=n).fold(r.zero(), |acc, i| {
                    if r.is_zero(&a[i]) {
                        acc
                    } else {
                        r.add(&acc, &r.mul(&a[i], &b[n - i]))
                    }
                })
            })
            .collect()
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.iter().zip(b).all(|(x, y)| self.base.eq(x, y))
    }

    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }

    fn characteristic(&self) -> BigUint {
        self.base.characteristic()
    }

    fn has_rational_scalars(&self) -> bool {
        self.base.has_rational_scalars()
    }

    fn from_integer(&self, n: &BigInt) -> Self::Elem {
        self.embed(self.base.from_integer(n))
    }

    /// Units are the elements with a unit constant term; the inverse is the
    /// truncated geometric recurrence.
    fn try_invert(&self, a: &Self::Elem) -> Result<Self::Elem, RingError> {
        let r = &self.base;
        let c0 = r.try_invert(&a[0]).map_err(|_| RingError::NotAUnit(self.format(a)))?;
        let mut g = vec![c0.clone()];
        for n in 1..self.k {
            let s = (1..=n).fold(r.zero(), |acc, i| r.add(&acc, &r.mul(&a[i], &g[n - i])));
            g.push(r.neg(&r.mul(&c0, &s)));
        }
        Ok(g)
    }

    fn name(&self) -> String {
        format!("{}[{}]/({}^{})", self.base.name(), self.var, self.var, self.k)
    }

    fn format(&self, a: &Self::Elem) -> String {
        render_sum(a.iter().enumerate().filter(|(_, c)| !self.base.is_zero(c)).map(|(i, c)| TermText {
            coef: self.base.format(c),
            monomial: match i {
                0 => None,
                1 => Some(self.var.clone()),
                _ => Some(format!("{}^{i}", self.var)),
            },
        }))
    }

    fn elem_to_json(&self, a: &Self::Elem) -> Value {
        Value::Array(a.iter().map(|c| self.base.elem_to_json(c)).collect())
    }

    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, RingError> {
        let items = v
            .as_array()
            .ok_or_else(|| RingError::Decode(format!("expected an array: {v}")))?;
        let coeffs = items
            .iter()
            .map(|c| self.base.elem_from_json(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.from_coeffs(coeffs))
    }
}

/// The truncation bound past which every monomial in `n` variables vanishes
/// when each variable maps into an ideal with `y^k = 0`: a monomial of total
/// degree `≥ n(k−1)+1` has some exponent `≥ k`.
pub fn vanishing_bound(n: usize, k: usize) -> u64 {
    (n as u64) * (k as u64 - 1) + 1
}

/// `ψ(f)` for the unique ring map `ψ: R[[x]] → A` extending `φ` with
/// `x_i ↦ a_i`, where `A = B[y]/(y^k)` and each `a_i ∈ (y)`. Computed exactly
/// as the evaluation of `f_b` for `b = n(k−1)+1`.
pub fn eval_complete<R: Ring, B: Ring>(
    f: &PowerSeries<R>,
    target: &NilpotentQuotientRing<B>,
    args: &BTreeMap<String, Vec<B::Elem>>,
    phi: impl Fn(&R::Elem) -> B::Elem,
) -> Result<Vec<B::Elem>, CompletionError> {
    if !target.is_commutative() {
        return Err(CompletionError::NoncommutativeTarget);
    }
    for v in f.vars() {
        let a = args
            .get(v)
            .ok_or_else(|| CompletionError::MissingAssignment(v.clone()))?;
        if !target.in_ideal(a) {
            return Err(CompletionError::ArgumentNotInIdeal(v.clone()));
        }
    }
    let bound = vanishing_bound(f.vars().len(), target.nilpotency());
    let pr = polynomial_ring(f.ring().clone());
    Ok(pr.eval_at(&truncate(f, bound), target, args, |c| target.embed(phi(c)))?)
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::ring::{Integers, Rationals};
    use crate::series::SeriesKind;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn geom_minus() -> PowerSeries<Rationals> {
        PowerSeries::named(Rationals, SeriesKind::GeomMinus, "x").unwrap()
    }

    #[test]
    fn truncate_examples() {
        let pr = polynomial_ring(Rationals);
        assert_eq!(pr.format(&truncate(&geom_minus(), 3)), "1 + x + x^2");
        assert_eq!(pr.format(&truncate(&geom_minus(), 1)), "1");
    }

    #[test]
    fn tower_of_one_plus_x() {
        let pr = polynomial_ring(Integers);
        let f = pr.add(&pr.one(), &pr.variable("x"));
        let t = tower_of(&PowerSeries::from_polynomial(Integers, &f));
        assert_eq!(t.level(1).unwrap(), pr.one());
        for p in 2..6 {
            assert_eq!(t.level(p).unwrap(), f);
        }
        assert_eq!(t.level(0), Err(CompletionError::LevelZero));
        assert_eq!(t.render_levels(3).unwrap(), ["1", "1 + x", "1 + x"]);
    }

    #[test]
    fn reconstruct_geometric() {
        let pr = polynomial_ring(Rationals);
        let t = TruncationTower::from_fn(Rationals, &["x"], move |p| {
            pr.from_terms((0..p).map(|i| (ExponentVector::from_pairs([("x", i)]), q(1, 1))))
        });
        let f = t.reconstruct(5).unwrap();
        assert!(f.eq_through(&geom_minus(), 15));
        assert_eq!(t.materialized(), 15);
    }

    #[test]
    fn incoherent_towers_are_rejected() {
        let pr = polynomial_ring(Integers);
        let x = pr.variable("x");
        // level 1 must be constant
        let t = TruncationTower::from_levels(Integers, &["x"], vec![x.clone()]);
        assert!(matches!(t.level(1), Err(CompletionError::IncoherentTower { level: 1, .. })));
        // g_3 - g_2 must lie in I^2
        let t = TruncationTower::from_levels(
            Integers,
            &["x"],
            vec![pr.one(), pr.one(), pr.add(&pr.one(), &x)],
        );
        assert!(t.level(2).is_ok());
        assert!(matches!(t.reconstruct(4), Err(CompletionError::IncoherentTower { level: 3, .. })));
        assert_eq!(t.materialized(), 2);
    }

    #[test]
    fn stability_of_levels() {
        let e = PowerSeries::named(Rationals, SeriesKind::Exp(q(1, 1)), "x").unwrap();
        let t = tower_of(&e);
        let m = ExponentVector::from_pairs([("x", 3u32)]);
        let want = t.level(4).unwrap().get(&m).cloned();
        for qq in 5..10 {
            assert_eq!(t.level(qq).unwrap().get(&m).cloned(), want);
        }
    }

    #[test]
    fn remainder_ideal_for_exp() {
        let x = PowerSeries::variable(Rationals, "x");
        let y = PowerSeries::variable(Rationals, "y");
        let e = PowerSeries::named(Rationals, SeriesKind::Exp(q(1, 1)), "x").unwrap();
        let f = e.mul(&PowerSeries::one(Rationals).sub(&y).invert().unwrap()).add(&x);
        let r = check_remainder_ideal(&f, 4, 5);
        assert!(r.all_passed(), "{r}");
        let r = check_remainder_ideal(&e, 4, 5);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn quotient_iso_on_named_series() {
        let s = vec![
            geom_minus(),
            PowerSeries::named(Rationals, SeriesKind::Sin, "x").unwrap(),
            PowerSeries::named(Rationals, SeriesKind::Cos, "x").unwrap(),
        ];
        let pr = polynomial_ring(Rationals);
        let polys = vec![pr.one(), pr.variable("x")];
        for p in 1..=6 {
            let r = quotient_iso_check(&Rationals, p, &s, &polys);
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn nilpotent_ring_laws() {
        let a = NilpotentQuotientRing::new(Rationals, "y", 3).unwrap();
        let y = a.y();
        assert!(a.is_zero(&a.pow(&y, 3)));
        assert_eq!(a.format(&a.pow(&y, 2)), "y^2");
        let u = a.add(&a.one(), &y);
        let inv = a.try_invert(&u).unwrap();
        assert_eq!(a.format(&inv), "1 - y + y^2");
        assert!(a.is_one(&a.mul(&u, &inv)));
        assert!(a.try_invert(&y).is_err());
        assert!(NilpotentQuotientRing::new(Rationals, "y", 0).is_none());
        assert_eq!(a.name(), "rat[y]/(y^3)");
    }

    #[test]
    fn eval_complete_examples() {
        let a3 = NilpotentQuotientRing::new(Rationals, "y", 3).unwrap();
        let args = BTreeMap::from([("x".to_string(), a3.y())]);
        let gp = PowerSeries::named(Rationals, SeriesKind::GeomPlus, "x").unwrap();
        let v = eval_complete(&gp, &a3, &args, |c| c.clone()).unwrap();
        assert_eq!(a3.format(&v), "1 - y + y^2");

        let a4 = NilpotentQuotientRing::new(Rationals, "y", 4).unwrap();
        let args = BTreeMap::from([("x".to_string(), a4.y())]);
        let e = PowerSeries::named(Rationals, SeriesKind::Exp(q(1, 1)), "x").unwrap();
        let v = eval_complete(&e, &a4, &args, |c| c.clone()).unwrap();
        assert_eq!(a4.format(&v), "1 + y + 1/2*y^2 + 1/6*y^3");
    }

    #[test]
    fn eval_complete_errors() {
        let a = NilpotentQuotientRing::new(Rationals, "y", 3).unwrap();
        let gp = PowerSeries::named(Rationals, SeriesKind::GeomPlus, "x").unwrap();
        let bad = BTreeMap::from([("x".to_string(), a.one())]);
        assert_eq!(
            eval_complete(&gp, &a, &bad, |c| c.clone()),
            Err(CompletionError::ArgumentNotInIdeal("x".into()))
        );
        assert_eq!(
            eval_complete(&gp, &a, &BTreeMap::new(), |c| c.clone()),
            Err(CompletionError::MissingAssignment("x".into()))
        );
    }

    #[test]
    fn bound_is_tight() {
        assert_eq!(vanishing_bound(1, 3), 3);
        assert_eq!(vanishing_bound(2, 3), 5);
        // x^2*y^2 survives y^3 = 0 in two variables: degree 4 < bound 5
        let a = NilpotentQuotientRing::new(Integers, "y", 3).unwrap();
        let y = a.y();
        assert!(a.is_zero(&a.mul(&a.pow(&y, 2), &a.pow(&y, 2))));
    }
}
