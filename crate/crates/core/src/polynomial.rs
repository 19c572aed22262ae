//! Polynomial rings `R[x_i : i ∈ I]`, realized as the monoid ring over
//! finitely supported exponent vectors with `x_i := δ(ε_i)`.
//!
//! The index set is open-ended: a polynomial only records the variables it
//! uses, so no variable registry exists.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::monoid::{ExponentMonoid, ExponentVector};
use crate::monoid_ring::{MonoidRing, MonoidRingElement};
use crate::ring::{rising_factorial_ratio, Ring};

pub type PolynomialRing<R> = MonoidRing<R, ExponentMonoid>;
pub type Polynomial<C> = MonoidRingElement<C, ExponentVector>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolynomialError {
    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),
    #[error("evaluation target must be commutative")]
    NoncommutativeTarget,
    #[error("the zero polynomial has no terms")]
    ZeroPolynomial,
}

pub fn polynomial_ring<R: Ring>(ring: R) -> PolynomialRing<R> {
    MonoidRing::new(ring, ExponentMonoid)
}

impl<R: Ring> MonoidRing<R, ExponentMonoid> {
    /// `x_i = δ(ε_i)`.
    pub fn variable(&self, name: &str) -> Polynomial<R::Elem> {
        self.delta(ExponentVector::var(name))
    }

    /// `x^m = ∏ x_i^{s_i}`.
    pub fn monomial(&self, m: ExponentVector) -> Polynomial<R::Elem> {
        self.delta(m)
    }

    pub fn term(&self, coef: R::Elem, m: ExponentVector) -> Polynomial<R::Elem> {
        self.from_terms([(m, coef)])
    }

    pub fn variables_of(&self, f: &Polynomial<R::Elem>) -> BTreeSet<String> {
        f.support()
            .flat_map(|m| m.variables().map(str::to_string))
            .collect()
    }

    /// Largest total degree in the support, `None` for zero.
    pub fn total_degree(&self, f: &Polynomial<R::Elem>) -> Option<BigUint> {
        f.support().map(ExponentVector::total_degree).max()
    }

    /// The unique ring map `R[x] → A` extending `φ` with `x_i ↦ a_i`:
    /// `Σ φ(r_m)·∏ a_i^{s_i}`. The target must be commutative.
    pub fn eval_at<A: Ring>(
        &self,
        f: &Polynomial<R::Elem>,
        target: &A,
        point: &BTreeMap<String, A::Elem>,
        phi: impl Fn(&R::Elem) -> A::Elem,
    ) -> Result<A::Elem, PolynomialError> {
        if !target.is_commutative() {
            return Err(PolynomialError::NoncommutativeTarget);
        }
        let mut acc = target.zero();
        for (m, c) in f.iter() {
            let mut term = phi(c);
            for (var, e) in m.entries() {
                let a = point
                    .get(var)
                    .ok_or_else(|| PolynomialError::MissingAssignment(var.clone()))?;
                term = target.mul(&term, &target.pow_big(a, e));
            }
            acc = target.add(&acc, &term);
        }
        Ok(acc)
    }

    /// The term that comes first in graded-lexicographic order.
    pub fn leading_term_min(
        &self,
        f: &Polynomial<R::Elem>,
    ) -> Result<(ExponentVector, R::Elem), PolynomialError> {
        f.iter()
            .min_by(|a, b| a.0.grlex_cmp(b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(PolynomialError::ZeroPolynomial)
    }

    /// `∂_k^p f`: the term `r·x^m` with `s_k ≥ p` maps to
    /// `((s_k)!/(s_k−p)!)·r·x^{m−pε_k}`; other terms vanish.
    pub fn derivative(&self, f: &Polynomial<R::Elem>, var: &str, order: u64) -> Polynomial<R::Elem> {
        let shift = ExponentVector::from_pairs([(var, order)]);
        self.from_terms(f.iter().filter_map(|(m, c)| {
            let lowered = m.checked_sub(&shift)?;
            let ratio = rising_factorial_ratio(&lowered.exponent(var), order);
            let k = self.base().from_integer(&BigInt::from(ratio));
            Some((lowered, self.base().mul(&k, c)))
        }))
    }

    /// Keeps the terms of total degree `< p`.
    pub fn truncate_degree(&self, f: &Polynomial<R::Elem>, p: u64) -> Polynomial<R::Elem> {
        let bound = BigUint::from(p);
        self.from_terms(
            f.iter()
                .filter(|(m, _)| m.total_degree() < bound)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// True when every term has total degree `≥ p`, i.e. `f ∈ I^p` for
    /// `I = (x_1, ..., x_n)`.
    pub fn in_ideal_power(&self, f: &Polynomial<R::Elem>, p: u64) -> bool {
        let bound = BigUint::from(p);
        f.support().all(|m| m.total_degree() >= bound)
    }
}

/// Result of [`zero_product_witness`].
#[derive(Debug, Clone)]
pub struct ZeroProductReport<T> {
    pub pairs_checked: usize,
    pub witness: Option<(T, T)>,
}

/// Searches the sampled pairs of nonzero elements for `f·g = 0`.
pub fn zero_product_witness<R: Ring>(
    ring: &R,
    samples: &[(R::Elem, R::Elem)],
) -> ZeroProductReport<R::Elem> {
    let mut checked = 0;
    for (f, g) in samples {
        if ring.is_zero(f) || ring.is_zero(g) {
            continue;
        }
        checked += 1;
        if ring.is_zero(&ring.mul(f, g)) {
            return ZeroProductReport {
                pairs_checked: checked,
                witness: Some((f.clone(), g.clone())),
            };
        }
    }
    ZeroProductReport {
        pairs_checked: checked,
        witness: None,
    }
}

/// Smallest exponent of `var` over the support, `None` for zero.
pub fn min_degree_in<C>(f: &Polynomial<C>, var: &str) -> Option<BigUint> {
    f.support().map(|m| m.exponent(var)).min()
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::ring::{GaussianRationals, Integers, ModularIntegers, Rationals};

    fn ev(pairs: &[(&str, u32)]) -> ExponentVector {
        ExponentVector::from_pairs(pairs.iter().map(|(v, e)| (*v, *e)))
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn variables_multiply() {
        let r = polynomial_ring(Integers);
        let (x, y) = (r.variable("x"), r.variable("y"));
        assert_eq!(r.mul(&x, &x), r.monomial(ev(&[("x", 2)])));
        assert_eq!(r.mul(&x, &y), r.mul(&y, &x));
        assert_eq!(r.coefficient(&x, &ExponentVector::var("x")), int(1));
        assert_eq!(r.format(&r.add(&r.mul(&x, &y), &r.one())), "1 + x*y");
    }

    #[test]
    fn monomial_matches_variable_powers() {
        let r = polynomial_ring(Integers);
        let m = ev(&[("x", 2), ("y", 1)]);
        let from_vars = m.decompose().into_iter().fold(r.one(), |acc, (v, e)| {
            r.mul(&acc, &r.pow_big(&r.variable(&v), &e))
        });
        assert_eq!(r.monomial(m), from_vars);
        assert_eq!(r.monomial(ExponentVector::identity()), r.one());
    }

    #[test]
    fn eval_substitutes() {
        let r = polynomial_ring(Integers);
        let f = r.add(&r.monomial(ev(&[("x", 2)])), &r.variable("y"));
        let point = BTreeMap::from([("x".to_string(), int(2)), ("y".to_string(), int(3))]);
        assert_eq!(r.eval_at(&f, &Integers, &point, |c| c.clone()).unwrap(), int(7));
        let c = r.eta(int(9));
        assert_eq!(r.eval_at(&c, &Integers, &BTreeMap::new(), |c| c.clone()).unwrap(), int(9));
    }

    #[test]
    fn eval_errors() {
        let r = polynomial_ring(Integers);
        let f = r.variable("z");
        assert_eq!(
            r.eval_at(&f, &Integers, &BTreeMap::new(), |c| c.clone()),
            Err(PolynomialError::MissingAssignment("z".into()))
        );
        let words = MonoidRing::new(Integers, crate::monoid::FreeMonoid);
        assert_eq!(
            r.eval_at(&f, &words, &BTreeMap::new(), |c| words.eta(c.clone())),
            Err(PolynomialError::NoncommutativeTarget)
        );
    }

    #[test]
    fn eval_into_other_ring() {
        let r = polynomial_ring(Integers);
        let f = r.sub(&r.mul(&r.variable("x"), &r.variable("x")), &r.one());
        let point = BTreeMap::from([("x".to_string(), crate::ring::GaussianRational::i())]);
        let v = r
            .eval_at(&f, &GaussianRationals, &point, |c| GaussianRationals.from_integer(c))
            .unwrap();
        assert_eq!(GaussianRationals.format(&v), "-2");
    }

    #[test]
    fn min_term() {
        let r = polynomial_ring(Integers);
        let f = r.add(&r.monomial(ev(&[("x", 2)])), &r.monomial(ev(&[("x", 5)])));
        assert_eq!(r.leading_term_min(&f).unwrap(), (ev(&[("x", 2)]), int(1)));
        let g = r.add(&r.eta(int(3)), &r.variable("x"));
        assert_eq!(r.leading_term_min(&g).unwrap(), (ExponentVector::identity(), int(3)));
        assert_eq!(r.leading_term_min(&r.zero()), Err(PolynomialError::ZeroPolynomial));
    }

    #[test]
    fn derivative_examples() {
        let r = polynomial_ring(Integers);
        let x3 = r.monomial(ev(&[("x", 3)]));
        assert_eq!(r.derivative(&x3, "x", 1), r.term(int(3), ev(&[("x", 2)])));
        assert_eq!(r.derivative(&x3, "x", 3), r.eta(int(6)));
        assert_eq!(r.derivative(&x3, "x", 0), x3);
        assert!(r.derivative(&r.monomial(ev(&[("y", 2)])), "x", 1).is_zero());
    }

    #[test]
    fn derivative_in_characteristic_p() {
        let f5 = ModularIntegers::new(5).unwrap();
        let r = polynomial_ring(f5);
        let x7 = r.monomial(ev(&[("x", 7)]));
        // 7·6 = 42 ≡ 2 mod 5
        assert_eq!(r.derivative(&x7, "x", 2), r.term(2, ev(&[("x", 5)])));
        // 5·4·3·2·1 ≡ 0: ∂^5 x^5 vanishes
        assert!(r.derivative(&r.monomial(ev(&[("x", 5)])), "x", 5).is_zero());
    }

    #[test]
    fn zero_divisors_mod_six() {
        let z6 = ModularIntegers::new(6).unwrap();
        let r = polynomial_ring(z6);
        let a = r.term(2, ExponentVector::var("x"));
        let b = r.term(3, ExponentVector::var("x"));
        let rep = zero_product_witness(&r, &[(a.clone(), b.clone())]);
        assert_eq!(rep.witness, Some((a, b)));
    }

    #[test]
    fn rational_text() {
        let r = polynomial_ring(Rationals);
        let half = BigRational::new(1.into(), 2.into());
        let f = r.sub(&r.term(half, ev(&[("x", 2)])), &r.variable("y"));
        assert_eq!(r.format(&f), "-y + 1/2*x^2");
    }
}
