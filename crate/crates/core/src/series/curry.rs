use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use serde_json::Value;

use super::{sorted_vars, union_vars, Lift, PowerSeries, SeriesError};
use crate::ring::{Ring, RingError};

/// `R[[x_1, ..., x_n]]` as a ring in its own right, so that series can be
/// used as coefficients of other series.
///
/// Equality is only decidable through a fixed order, so `eq`, `format` and
/// the JSON encoding all work through `compare_order`.
#[derive(Debug, Clone)]
pub struct SeriesRing<R: Ring> {
    base: R,
    vars: Arc<[String]>,
    compare_order: u64,
}

impl<R: Ring> SeriesRing<R> {
    pub fn new<S: AsRef<str>>(base: R, vars: &[S], compare_order: u64) -> Self {
        Self {
            base,
            vars: sorted_vars(vars),
            compare_order,
        }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn compare_order(&self) -> u64 {
        self.compare_order
    }
}

impl<R: Ring> Ring for SeriesRing<R> {
    type Elem = PowerSeries<R>;

    fn zero(&self) -> Self::Elem {
        PowerSeries::zero(self.base.clone()).with_vars(&self.vars)
    }

    fn one(&self) -> Self::Elem {
        PowerSeries::one(self.base.clone()).with_vars(&self.vars)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.eq_through(b, self.compare_order)
    }

    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }

    fn characteristic(&self) -> BigUint {
        self.base.characteristic()
    }

    fn try_invert(&self, a: &Self::Elem) -> Result<Self::Elem, RingError> {
        a.invert().map_err(|e| RingError::NotAUnit(e.to_string()))
    }

    fn has_rational_scalars(&self) -> bool {
        self.base.has_rational_scalars()
    }

    fn from_integer(&self, n: &BigInt) -> Self::Elem {
        PowerSeries::constant(self.base.clone(), self.base.from_integer(n)).with_vars(&self.vars)
    }

    fn name(&self) -> String {
        format!("{}[[{}]]", self.base.name(), self.vars.join(","))
    }

    fn format(&self, a: &Self::Elem) -> String {
        a.render(self.compare_order)
    }

    fn elem_to_json(&self, a: &Self::Elem) -> Value {
        a.to_json(self.compare_order)
    }

    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, RingError> {
        Ok(PowerSeries::from_json(self.base.clone(), v)?.with_vars(&self.vars))
    }
}

fn check_split(inner: &[String], outer: &[String]) -> Result<(), SeriesError> {
    let overlap: Vec<String> = inner.iter().filter(|v| outer.contains(v)).cloned().collect();
    if overlap.is_empty() {
        Ok(())
    } else {
        Err(SeriesError::OverlappingVariables(overlap))
    }
}

/// `R[[x, y]] → (R[[x]])[[y]]` with `x = inner` and `y = outer`: the
/// coefficient at `y^t` is the series `s ↦ f(s, t)`.
pub fn series_curry<R: Ring, S: AsRef<str>>(
    f: &PowerSeries<R>,
    inner: &[S],
    outer: &[S],
    compare_order: u64,
) -> Result<PowerSeries<SeriesRing<R>>, SeriesError> {
    let inner = sorted_vars(inner);
    let outer = sorted_vars(outer);
    check_split(&inner, &outer)?;
    let all = union_vars(&inner, &outer);
    if let Some(v) = f.vars.iter().find(|v| !all.contains(v)) {
        return Err(SeriesError::UnknownVariable(v.clone()));
    }
    let lift = Arc::new(Lift::new(f, &all));
    let inner_pos: Vec<usize> = inner.iter().map(|v| all.iter().position(|w| w == v).unwrap()).collect();
    let outer_pos: Vec<usize> = outer.iter().map(|v| all.iter().position(|w| w == v).unwrap()).collect();
    let coef_ring = SeriesRing {
        base: f.ring.clone(),
        vars: inner.clone(),
        compare_order,
    };
    let base = f.ring.clone();
    Ok(PowerSeries::from_oracle(coef_ring, outer, move |_, t| {
        let lift = Arc::clone(&lift);
        let t = t.to_vec();
        let (inner_pos, outer_pos) = (inner_pos.clone(), outer_pos.clone());
        let n = inner_pos.len() + outer_pos.len();
        PowerSeries::from_oracle(base.clone(), inner.clone(), move |_, s| {
            let mut e = vec![0u64; n];
            for (p, x) in inner_pos.iter().zip(s) {
                e[*p] = *x;
            }
            for (p, x) in outer_pos.iter().zip(&t) {
                e[*p] = *x;
            }
            lift.get(&e)
        })
    }))
}

/// The inverse of [`series_curry`]: `f(s, t) = g(t)(s)`.
pub fn series_uncurry<R: Ring>(
    g: &PowerSeries<SeriesRing<R>>,
) -> Result<PowerSeries<R>, SeriesError> {
    let inner = g.ring.vars.clone();
    let outer = g.vars.clone();
    check_split(&inner, &outer)?;
    let all = union_vars(&inner, &outer);
    let inner_pos: Vec<usize> = inner.iter().map(|v| all.iter().position(|w| w == v).unwrap()).collect();
    let outer_pos: Vec<usize> = outer.iter().map(|v| all.iter().position(|w| w == v).unwrap()).collect();
    let g = g.clone();
    Ok(PowerSeries::from_oracle(g.ring.base.clone(), all, move |_, e| {
        let t: Vec<u64> = outer_pos.iter().map(|p| e[*p]).collect();
        let s: Vec<u64> = inner_pos.iter().map(|p| e[*p]).collect();
        let h = g.node.get(&t);
        Lift::new(&h, &inner).get(&s)
    }))
}
