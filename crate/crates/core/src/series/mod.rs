//! Formal power series `R[[x_1, ..., x_n]]` over finitely many variables.
//!
//! A [`PowerSeries`] is a coefficient oracle: a pure function from exponent
//! vectors to `R`. Composite series (sums, products, derivatives, inverses)
//! are nodes of a DAG over their parents, and every node memoizes the
//! coefficients it has computed. The memo sits behind an `RwLock`, so a
//! series may be queried from several threads at once; two threads racing on
//! the same exponent both compute the same value and one of them is kept.
//!
//! Equality of series is not decidable. Comparisons are always "equal
//! through order N", i.e. at every exponent of total degree `< N`, and text
//! output always carries an explicit order marker.
//!
//! Inside a series, exponents are dense `u64` vectors aligned with
//! [`PowerSeries::vars`], which is sorted by name.

mod curry;
mod derivative;
mod laws;
mod named;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use serde_json::{json, Value};
use thiserror::Error;

use crate::monoid::{ExponentMonoid, ExponentVector, Monoid};
use crate::polynomial::Polynomial;
use crate::ring::{Ring, RingError};
use crate::text::{render_sum, TermText};

pub use curry::{series_curry, series_uncurry, SeriesRing};
pub use derivative::DerivativeSpec;
pub use laws::{derivative_laws_suite, euler_suite, sin_cos_derivative_pattern};
pub use named::SeriesKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("exponent does not fit in 64 bits")]
    ExponentOverflow,
    #[error("constant term {0} is not a unit")]
    NonUnitConstantTerm(String),
    #[error("characteristic is not zero ({0}); series with factorial denominators need characteristic 0")]
    CharacteristicNotZero(BigUint),
    #[error("ring {0} does not contain 1/n! for all n")]
    RationalScalarsRequired(String),
    #[error("variable groups overlap: {0:?}")]
    OverlappingVariables(Vec<String>),
}

type Oracle<R> = dyn Fn(&Node<R>, &[u64]) -> <R as Ring>::Elem + Send + Sync;

struct Node<R: Ring> {
    oracle: Box<Oracle<R>>,
    memo: RwLock<HashMap<Vec<u64>, R::Elem>>,
}

impl<R: Ring> Node<R> {
    fn new(oracle: Box<Oracle<R>>) -> Self {
        Self {
            oracle,
            memo: RwLock::new(HashMap::new()),
        }
    }

    fn get(&self, exps: &[u64]) -> R::Elem {
        if let Some(v) = self.memo.read().unwrap().get(exps) {
            return v.clone();
        }
        // Computed without holding the lock: oracles may query this node
        // recursively (series inversion does).
        let v = (self.oracle)(self, exps);
        self.memo
            .write()
            .unwrap()
            .entry(exps.to_vec())
            .or_insert(v)
            .clone()
    }
}

/// An element of `R[[x_1, ..., x_n]]`.
pub struct PowerSeries<R: Ring> {
    ring: R,
    vars: Arc<[String]>,
    node: Arc<Node<R>>,
}

impl<R: Ring> Clone for PowerSeries<R> {
    fn clone(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            vars: self.vars.clone(),
            node: self.node.clone(),
        }
    }
}

impl<R: Ring> fmt::Debug for PowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PowerSeries")
            .field("ring", &self.ring.name())
            .field("vars", &self.vars)
            .finish_non_exhaustive()
    }
}

/// Reads a parent series from the exponent space of a child node whose
/// variable list is a superset of the parent's.
struct Lift<R: Ring> {
    series: PowerSeries<R>,
    /// For each position of the outer exponent vector, the position in the
    /// parent's vector, if the parent has that variable.
    positions: Vec<Option<usize>>,
}

impl<R: Ring> Lift<R> {
    fn new(series: &PowerSeries<R>, outer: &[String]) -> Self {
        let positions = outer
            .iter()
            .map(|v| series.vars.iter().position(|w| w == v))
            .collect();
        Self {
            series: series.clone(),
            positions,
        }
    }

    fn get(&self, exps: &[u64]) -> R::Elem {
        let mut inner = vec![0u64; self.series.vars.len()];
        for (e, pos) in exps.iter().zip(&self.positions) {
            match pos {
                Some(p) => inner[*p] = *e,
                None if *e > 0 => return self.series.ring.zero(),
                None => {}
            }
        }
        self.series.node.get(&inner)
    }
}

fn union_vars(a: &[String], b: &[String]) -> Arc<[String]> {
    let mut v: Vec<String> = a.iter().chain(b).cloned().collect();
    v.sort();
    v.dedup();
    v.into()
}

fn sorted_vars<S: AsRef<str>>(vars: &[S]) -> Arc<[String]> {
    union_vars(&vars.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>(), &[])
}

/// Calls `f` on every exponent vector of length `n` with total degree
/// `< order`, lowest degree first.
pub fn for_each_exponent_below(n: usize, order: u64, mut f: impl FnMut(&[u64])) {
    let mut buf = vec![0u64; n];
    for degree in 0..order {
        compositions(&mut buf, 0, degree, &mut f);
    }
}

fn compositions(buf: &mut [u64], pos: usize, remaining: u64, f: &mut impl FnMut(&[u64])) {
    if pos + 1 >= buf.len() {
        if buf.is_empty() {
            if remaining == 0 {
                f(buf);
            }
            return;
        }
        buf[pos] = remaining;
        f(buf);
        buf[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        buf[pos] = e;
        compositions(buf, pos + 1, remaining - e, f);
    }
    buf[pos] = 0;
}

/// Calls `f(v, u − v)` for every `v` in the box `0 ≤ v ≤ u`.
fn for_each_split(u: &[u64], mut f: impl FnMut(&[u64], &[u64])) {
    let mut v = vec![0u64; u.len()];
    let mut w = u.to_vec();
    loop {
        f(&v, &w);
        let mut i = 0;
        loop {
            if i == u.len() {
                return;
            }
            if v[i] < u[i] {
                v[i] += 1;
                w[i] -= 1;
                break;
            }
            v[i] = 0;
            w[i] = u[i];
            i += 1;
        }
    }
}

impl<R: Ring> PowerSeries<R> {
    fn from_oracle(
        ring: R,
        vars: Arc<[String]>,
        oracle: impl Fn(&Node<R>, &[u64]) -> R::Elem + Send + Sync + 'static,
    ) -> Self {
        Self {
            ring,
            vars,
            node: Arc::new(Node::new(Box::new(oracle))),
        }
    }

    /// A series given by an arbitrary coefficient function. The function
    /// receives exponents in the order of `vars` as passed here, and must be
    /// deterministic.
    pub fn from_fn<S: AsRef<str>>(
        ring: R,
        vars: &[S],
        f: impl Fn(&[u64]) -> R::Elem + Send + Sync + 'static,
    ) -> Self {
        let sorted = sorted_vars(vars);
        assert_eq!(sorted.len(), vars.len(), "repeated variable in series");
        // sorted position -> caller position
        let to_caller: Vec<usize> = sorted
            .iter()
            .map(|v| vars.iter().position(|w| w.as_ref() == v).unwrap())
            .collect();
        Self::from_oracle(ring, sorted, move |_, exps| {
            let mut caller = vec![0u64; exps.len()];
            for (e, p) in exps.iter().zip(&to_caller) {
                caller[*p] = *e;
            }
            f(&caller)
        })
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::from_oracle(ring, Arc::from(Vec::new()), move |_, _| c.clone())
    }

    pub fn zero(ring: R) -> Self {
        let z = ring.zero();
        Self::constant(ring, z)
    }

    pub fn one(ring: R) -> Self {
        let o = ring.one();
        Self::constant(ring, o)
    }

    /// The series `x_i`.
    pub fn variable(ring: R, name: &str) -> Self {
        let (zero, one) = (ring.zero(), ring.one());
        Self::from_oracle(ring, Arc::from(vec![name.to_string()]), move |_, e| {
            if e[0] == 1 {
                one.clone()
            } else {
                zero.clone()
            }
        })
    }

    /// The image of a polynomial under the inclusion `R[x] ⊂ R[[x]]`.
    pub fn from_polynomial(ring: R, f: &Polynomial<R::Elem>) -> Self {
        let mut vars: Vec<String> = f
            .support()
            .flat_map(|m| m.variables().map(str::to_string))
            .collect();
        vars.sort();
        vars.dedup();
        let vars: Arc<[String]> = vars.into();
        let table: HashMap<Vec<u64>, R::Elem> = f
            .iter()
            .map(|(m, c)| {
                let dense = m
                    .to_dense(&vars)
                    .expect("polynomial exponent does not fit in 64 bits");
                (dense, c.clone())
            })
            .collect();
        let zero = ring.zero();
        Self::from_oracle(ring, vars, move |_, e| {
            table.get(e).cloned().unwrap_or_else(|| zero.clone())
        })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// The variables of this series, sorted by name.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// The same series viewed with additional (absent) variables.
    pub fn with_vars<S: AsRef<str>>(&self, extra: &[S]) -> Self {
        let extra: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        let vars = union_vars(&self.vars, &extra);
        if vars.len() == self.vars.len() {
            return self.clone();
        }
        let lift = Lift::new(self, &vars);
        Self::from_oracle(self.ring.clone(), vars, move |_, e| lift.get(e))
    }

    /// `f(m)`. Variables of `m` must be variables of the series.
    pub fn coefficient(&self, m: &ExponentVector) -> Result<R::Elem, SeriesError> {
        if let Some(v) = m.variables().find(|v| !self.vars.iter().any(|w| w == v)) {
            return Err(SeriesError::UnknownVariable(v.to_string()));
        }
        let dense = m.to_dense(&self.vars).ok_or(SeriesError::ExponentOverflow)?;
        Ok(self.node.get(&dense))
    }

    /// `f(m)` for a dense exponent vector aligned with [`Self::vars`].
    pub fn coefficient_dense(&self, exps: &[u64]) -> R::Elem {
        assert_eq!(exps.len(), self.vars.len(), "exponent length mismatch");
        self.node.get(exps)
    }

    pub fn constant_term(&self) -> R::Elem {
        self.node.get(&vec![0; self.vars.len()])
    }

    /// Drops this node's memoized coefficients. Parents keep theirs.
    pub fn clear_memo(&self) {
        self.node.memo.write().unwrap().clear();
    }

    pub fn memo_len(&self) -> usize {
        self.node.memo.read().unwrap().len()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |r, a, b| r.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |r, a, b| r.sub(a, b))
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(&R, &R::Elem, &R::Elem) -> R::Elem + Send + Sync + 'static,
    ) -> Self {
        let vars = union_vars(&self.vars, &other.vars);
        let (a, b) = (Lift::new(self, &vars), Lift::new(other, &vars));
        let ring = self.ring.clone();
        Self::from_oracle(self.ring.clone(), vars, move |_, e| {
            op(&ring, &a.get(e), &b.get(e))
        })
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|r, c| r.neg(c))
    }

    /// `c·f`, coefficients multiplied on the left.
    pub fn scale(&self, c: &R::Elem) -> Self {
        let c = c.clone();
        self.map_coefficients(move |r, a| r.mul(&c, a))
    }

    fn map_coefficients(
        &self,
        op: impl Fn(&R, &R::Elem) -> R::Elem + Send + Sync + 'static,
    ) -> Self {
        let parent = self.clone();
        Self::from_oracle(self.ring.clone(), self.vars.clone(), move |_, e| {
            op(&parent.ring, &parent.node.get(e))
        })
    }

    /// `(f·g)(u) = Σ_{v+w=u} f(v)g(w)`, summed over the finite box
    /// `0 ≤ v ≤ u`.
    pub fn mul(&self, other: &Self) -> Self {
        let vars = union_vars(&self.vars, &other.vars);
        let (a, b) = (Lift::new(self, &vars), Lift::new(other, &vars));
        let ring = self.ring.clone();
        Self::from_oracle(self.ring.clone(), vars, move |_, u| {
            let mut acc = ring.zero();
            for_each_split(u, |v, w| {
                let x = a.get(v);
                if ring.is_zero(&x) {
                    return;
                }
                acc = ring.add(&acc, &ring.mul(&x, &b.get(w)));
            });
            acc
        })
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Self::one(self.ring.clone()).with_vars(&self.vars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The two-sided inverse, defined when the constant term is a unit:
    /// `g(0) = f(0)⁻¹` and `g(u) = −f(0)⁻¹·Σ_{0<v≤u} f(v)g(u−v)`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = self.constant_term();
        let c0_inv = self
            .ring
            .try_invert(&c0)
            .map_err(|_| SeriesError::NonUnitConstantTerm(self.ring.format(&c0)))?;
        let f = self.clone();
        let ring = self.ring.clone();
        Ok(Self::from_oracle(self.ring.clone(), self.vars.clone(), move |me, u| {
            if u.iter().all(|e| *e == 0) {
                return c0_inv.clone();
            }
            let mut acc = ring.zero();
            for_each_split(u, |v, w| {
                if v.iter().all(|e| *e == 0) {
                    return;
                }
                let x = f.node.get(v);
                if ring.is_zero(&x) {
                    return;
                }
                acc = ring.add(&acc, &ring.mul(&x, &me.get(w)));
            });
            ring.neg(&ring.mul(&c0_inv, &acc))
        }))
    }

    /// Substitutes `x_var ↦ a·x_var`: the coefficient at `m` is multiplied
    /// by `a^{s_var}`.
    pub fn rescale(&self, var: &str, a: &R::Elem) -> Self {
        let s = self.with_vars(&[var]);
        let pos = s.vars.iter().position(|v| v == var).unwrap();
        let a = a.clone();
        let parent = s.clone();
        Self::from_oracle(s.ring.clone(), s.vars.clone(), move |_, e| {
            let r = &parent.ring;
            r.mul(&r.pow(&a, e[pos]), &parent.node.get(e))
        })
    }

    /// Nonzero terms of total degree `< order`, in graded-lexicographic order.
    pub fn terms_below(&self, order: u64) -> Vec<(ExponentVector, R::Elem)> {
        let mut out = Vec::new();
        for_each_exponent_below(self.vars.len(), order, |e| {
            let c = self.node.get(e);
            if !self.ring.is_zero(&c) {
                out.push((ExponentVector::from_dense(&self.vars, e), c));
            }
        });
        out.sort_by(|a, b| a.0.grlex_cmp(&b.0));
        out
    }

    /// The first exponent (by degree) below `order` where the two series
    /// differ, with both coefficients.
    pub fn first_difference(
        &self,
        other: &Self,
        order: u64,
    ) -> Option<(ExponentVector, R::Elem, R::Elem)> {
        let vars = union_vars(&self.vars, &other.vars);
        let (a, b) = (Lift::new(self, &vars), Lift::new(other, &vars));
        let mut found = None;
        for_each_exponent_below(vars.len(), order, |e| {
            if found.is_some() {
                return;
            }
            let (x, y) = (a.get(e), b.get(e));
            if !self.ring.eq(&x, &y) {
                found = Some((ExponentVector::from_dense(&vars, e), x, y));
            }
        });
        found
    }

    /// Equality at every exponent of total degree `< order`.
    pub fn eq_through(&self, other: &Self, order: u64) -> bool {
        self.first_difference(other, order).is_none()
    }

    /// Text form truncated at total degree `order`, with an order marker:
    /// `O(x^N)` for one variable, `O(deg N)` otherwise.
    pub fn render(&self, order: u64) -> String {
        let body = render_sum(self.terms_below(order).into_iter().map(|(m, c)| TermText {
            coef: self.ring.format(&c),
            monomial: (!m.is_identity()).then(|| m.to_string()),
        }));
        format!("{body} + {}", order_marker(&self.vars, order))
    }

    pub fn to_json(&self, order: u64) -> Value {
        let monoid = ExponentMonoid;
        let mut terms: Vec<(String, Value)> = self
            .terms_below(order)
            .into_iter()
            .map(|(m, c)| {
                (
                    monoid.stable_key(&m),
                    json!({"elem": monoid.elem_to_json(&m), "coef": self.ring.elem_to_json(&c)}),
                )
            })
            .collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        json!({
            "vars": self.vars.iter().collect::<Vec<_>>(),
            "order": order,
            "terms": terms.into_iter().map(|(_, t)| t).collect::<Vec<_>>(),
        })
    }

    /// A series built from the terms of a JSON dump; terms not listed are zero.
    pub fn from_json(ring: R, v: &Value) -> Result<Self, RingError> {
        let bad = |msg: &str| RingError::Decode(format!("{msg}: {v}"));
        let monoid = ExponentMonoid;
        let items = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut terms = Vec::new();
        for t in items {
            let m = monoid
                .elem_from_json(t.get("elem").ok_or_else(|| bad("missing elem"))?)
                .map_err(|e| RingError::Decode(e.to_string()))?;
            let c = ring.elem_from_json(t.get("coef").ok_or_else(|| bad("missing coef"))?)?;
            terms.push((m, c));
        }
        let vars: Vec<String> = v
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing vars"))?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("bad var")))
            .collect::<Result<_, _>>()?;
        let poly = crate::polynomial::polynomial_ring(ring.clone()).from_terms(terms);
        Ok(Self::from_polynomial(ring, &poly).with_vars(&vars))
    }
}

pub(crate) fn order_marker(vars: &[String], order: u64) -> String {
    match vars {
        [v] => format!("O({v}^{order})"),
        _ => format!("O(deg {order})"),
    }
}
