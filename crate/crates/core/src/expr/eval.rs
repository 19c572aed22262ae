//! Evaluation of parsed expressions in a chosen coefficient ring.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde_json::Value as Json;
use thiserror::Error;

use super::parse::{Expr, SeriesFn};
use crate::completion::truncate;
use crate::monoid::ExponentVector;
use crate::polynomial::{polynomial_ring, Polynomial, PolynomialRing};
use crate::ring::{GaussianRational, GaussianRationals, Integers, ModularIntegers, Rationals, Ring};
use crate::series::{PowerSeries, SeriesError, SeriesKind};

/// A coefficient ring usable from expressions.
pub trait ExprRing: Ring {
    /// A reserved identifier denoting a ring constant, such as `i` in the
    /// Gaussian rationals.
    fn named_constant(&self, _name: &str) -> Option<Self::Elem> {
        None
    }
}

impl ExprRing for Integers {}
impl ExprRing for Rationals {}
impl ExprRing for ModularIntegers {}

impl ExprRing for GaussianRationals {
    fn named_constant(&self, name: &str) -> Option<Self::Elem> {
        (name == "i").then(GaussianRational::i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("undeclared variable {0} (declare it with --vars or drop --strict-vars)")]
    UndeclaredVariable(String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("{0}")]
    Series(#[from] SeriesError),
    #[error("{func} expects an argument of the form c*var, got {got}")]
    UnsupportedArgument { func: &'static str, got: String },
}

/// A polynomial, or a series once any operation leaves the polynomials.
#[derive(Debug, Clone)]
pub enum Value<R: Ring> {
    Poly(Polynomial<R::Elem>),
    Series(PowerSeries<R>),
}

pub struct Evaluator<R: ExprRing> {
    ring: R,
    pr: PolynomialRing<R>,
    declared: BTreeSet<String>,
    strict: bool,
}

fn is_constant<C>(f: &Polynomial<C>) -> bool {
    f.support().all(ExponentVector::is_identity)
}

impl<R: ExprRing> Evaluator<R> {
    pub fn new(ring: R, declared: &[String], strict: bool) -> Self {
        Self {
            pr: polynomial_ring(ring.clone()),
            ring,
            declared: declared.iter().cloned().collect(),
            strict,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn polynomials(&self) -> &PolynomialRing<R> {
        &self.pr
    }

    pub fn to_series(&self, v: &Value<R>) -> PowerSeries<R> {
        match v {
            Value::Poly(f) => PowerSeries::from_polynomial(self.ring.clone(), f),
            Value::Series(s) => s.clone(),
        }
    }

    fn constant_of(&self, f: &Polynomial<R::Elem>) -> R::Elem {
        self.pr.coefficient(f, &ExponentVector::identity())
    }

    fn binary(
        &self,
        a: Value<R>,
        b: Value<R>,
        poly: impl Fn(&PolynomialRing<R>, &Polynomial<R::Elem>, &Polynomial<R::Elem>) -> Polynomial<R::Elem>,
        series: impl Fn(&PowerSeries<R>, &PowerSeries<R>) -> PowerSeries<R>,
    ) -> Value<R> {
        match (&a, &b) {
            (Value::Poly(f), Value::Poly(g)) => Value::Poly(poly(&self.pr, f, g)),
            _ => Value::Series(series(&self.to_series(&a), &self.to_series(&b))),
        }
    }

    fn invert(&self, v: Value<R>) -> Result<Value<R>, EvalError> {
        match v {
            Value::Poly(f) if is_constant(&f) => {
                let c = self.constant_of(&f);
                let inv = self
                    .ring
                    .try_invert(&c)
                    .map_err(|_| EvalError::NotAUnit(self.ring.format(&c)))?;
                Ok(Value::Poly(self.pr.eta(inv)))
            }
            other => Ok(Value::Series(self.to_series(&other).invert()?)),
        }
    }

    /// Reads `c*var` (or `0`) off a series-function argument.
    fn scaled_variable(&self, func: SeriesFn, v: &Value<R>) -> Result<Option<(String, R::Elem)>, EvalError> {
        let unsupported = |got: String| EvalError::UnsupportedArgument { func: func.name(), got };
        let f = match v {
            Value::Poly(f) => f,
            Value::Series(s) => return Err(unsupported(format!("a series in {}", s.vars().join(", ")))),
        };
        let mut it = f.iter();
        match (it.next(), it.next()) {
            (None, _) => Ok(None),
            (Some((m, c)), None) => match m.entries() {
                [(var, e)] if *e == 1u32.into() => Ok(Some((var.clone(), c.clone()))),
                _ => Err(unsupported(self.pr.format(f))),
            },
            _ => Err(unsupported(self.pr.format(f))),
        }
    }

    fn apply(&self, func: SeriesFn, arg: Value<R>) -> Result<Value<R>, EvalError> {
        let scaled = self.scaled_variable(func, &arg)?;
        let (var, c) = match &scaled {
            Some((v, c)) => (v.as_str(), c.clone()),
            None => ("x", self.ring.zero()),
        };
        let kind = match func {
            SeriesFn::Exp => SeriesKind::Exp(c.clone()),
            SeriesFn::Sin => SeriesKind::Sin,
            SeriesFn::Cos => SeriesKind::Cos,
            SeriesFn::Geom => SeriesKind::GeomMinus,
        };
        let s = PowerSeries::named(self.ring.clone(), kind, var)?;
        if scaled.is_none() {
            // f(0) is the constant term
            return Ok(Value::Poly(self.pr.eta(s.constant_term())));
        }
        Ok(Value::Series(match func {
            SeriesFn::Exp => s,
            _ => s.rescale(var, &c),
        }))
    }

    pub fn eval(&self, e: &Expr) -> Result<Value<R>, EvalError> {
        Ok(match e {
            Expr::Num(n) => Value::Poly(self.pr.eta(self.ring.from_integer(&BigInt::from(n.clone())))),
            Expr::Var(name) => {
                if let Some(c) = self.ring.named_constant(name) {
                    Value::Poly(self.pr.eta(c))
                } else if self.strict && !self.declared.contains(name) {
                    return Err(EvalError::UndeclaredVariable(name.clone()));
                } else {
                    Value::Poly(self.pr.variable(name))
                }
            }
            Expr::Neg(a) => match self.eval(a)? {
                Value::Poly(f) => Value::Poly(self.pr.neg(&f)),
                Value::Series(s) => Value::Series(s.neg()),
            },
            Expr::Add(a, b) => self.binary(self.eval(a)?, self.eval(b)?, |r, f, g| r.add(f, g), |f, g| f.add(g)),
            Expr::Sub(a, b) => self.binary(self.eval(a)?, self.eval(b)?, |r, f, g| r.sub(f, g), |f, g| f.sub(g)),
            Expr::Mul(a, b) => self.binary(self.eval(a)?, self.eval(b)?, |r, f, g| r.mul(f, g), |f, g| f.mul(g)),
            Expr::Div(a, b) => {
                let lhs = self.eval(a)?;
                let inv = self.invert(self.eval(b)?)?;
                self.binary(lhs, inv, |r, f, g| r.mul(f, g), |f, g| f.mul(g))
            }
            Expr::Pow(a, n) => match self.eval(a)? {
                Value::Poly(f) => Value::Poly(self.pr.pow(&f, *n)),
                Value::Series(s) => Value::Series(s.pow(*n)),
            },
            Expr::Apply(func, a) => self.apply(*func, self.eval(a)?)?,
            Expr::Deriv { expr, var, order } => {
                if self.strict && !self.declared.contains(var) {
                    return Err(EvalError::UndeclaredVariable(var.clone()));
                }
                match self.eval(expr)? {
                    Value::Poly(f) => Value::Poly(self.pr.derivative(&f, var, *order)),
                    Value::Series(s) => Value::Series(s.partial(var, *order)),
                }
            }
            Expr::Invert(a) => self.invert(self.eval(a)?)?,
            Expr::Truncate(a, p) => match self.eval(a)? {
                Value::Poly(f) => Value::Poly(self.pr.truncate_degree(&f, *p)),
                Value::Series(s) => Value::Poly(truncate(&s, *p)),
            },
        })
    }

    /// Canonical text; series are cut at total degree `order`.
    pub fn render(&self, v: &Value<R>, order: u64) -> String {
        match v {
            Value::Poly(f) => self.pr.format(f),
            Value::Series(s) => s.render(order),
        }
    }

    pub fn to_json(&self, v: &Value<R>, order: u64) -> Json {
        match v {
            Value::Poly(f) => self.pr.to_json(f),
            Value::Series(s) => s.to_json(order),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse;
    use super::*;

    fn run<R: ExprRing>(ring: R, src: &str, order: u64) -> Result<String, EvalError> {
        let ev = Evaluator::new(ring, &[], false);
        let v = ev.eval(&parse(src).unwrap())?;
        Ok(ev.render(&v, order))
    }

    #[test]
    fn polynomial_arithmetic() {
        assert_eq!(run(Integers, "(1+x)*(1-x+x^2-x^3)", 5).unwrap(), "1 - x^4");
        assert_eq!(run(Rationals, "x/2 + 1/3", 5).unwrap(), "1/3 + 1/2*x");
        assert_eq!(run(GaussianRationals, "(1+i)^2*x", 5).unwrap(), "2*i*x");
        assert_eq!(run(ModularIntegers::new(5).unwrap(), "1/2", 5).unwrap(), "3");
    }

    #[test]
    fn series_examples() {
        assert_eq!(run(Rationals, "invert(1+x)", 6).unwrap(), "1 - x + x^2 - x^3 + x^4 - x^5 + O(x^6)");
        assert_eq!(run(Rationals, "sin(x)^2 + cos(x)^2", 5).unwrap(), "1 + O(x^5)");
        assert_eq!(run(Rationals, "exp(0)", 5).unwrap(), "1");
        assert_eq!(run(Rationals, "geom(-x)", 4).unwrap(), "1 - x + x^2 - x^3 + O(x^4)");
        assert_eq!(run(Rationals, "1/(1-x)", 3).unwrap(), "1 + x + x^2 + O(x^3)");
    }

    #[test]
    fn errors() {
        let f5 = ModularIntegers::new(5).unwrap();
        assert!(matches!(run(f5, "exp(x)", 5), Err(EvalError::Series(SeriesError::CharacteristicNotZero(_)))));
        assert_eq!(run(Integers, "1/2", 5), Err(EvalError::NotAUnit("2".into())));
        assert!(matches!(run(Rationals, "invert(x)", 5), Err(EvalError::Series(SeriesError::NonUnitConstantTerm(_)))));
        assert!(matches!(run(Rationals, "exp(x^2)", 5), Err(EvalError::UnsupportedArgument { func: "exp", .. })));
        let ev = Evaluator::new(Rationals, &["x".to_string()], true);
        assert_eq!(ev.eval(&parse("x + y").unwrap()).unwrap_err(), EvalError::UndeclaredVariable("y".into()));
    }
}
