use std::sync::Arc;

use num_bigint::{BigInt, BigUint};

use super::PowerSeries;
use crate::ring::{rising_factorial_ratio, Ring};

/// `∂_k^p`: order `p` with respect to variable `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DerivativeSpec {
    pub variable: String,
    pub order: u64,
}

impl DerivativeSpec {
    pub fn new(variable: impl Into<String>, order: u64) -> Self {
        Self {
            variable: variable.into(),
            order,
        }
    }
}

impl<R: Ring> PowerSeries<R> {
    /// The formal partial derivative
    /// `f_{p,k}(m) = ((s_k+p)!/s_k!)·f(m + pε_k)`.
    ///
    /// The integer multiplier is formed as `(s_k+1)···(s_k+p)` and then
    /// mapped into `R`, so this is meaningful in any characteristic.
    pub fn derivative(&self, spec: &DerivativeSpec) -> Self {
        let p = spec.order;
        if p == 0 {
            return self.clone();
        }
        let Some(k) = self.vars.iter().position(|v| *v == spec.variable) else {
            return Self::zero(self.ring.clone()).with_vars(&self.vars);
        };
        let parent = self.clone();
        Self::from_oracle(self.ring.clone(), Arc::clone(&self.vars), move |_, m| {
            let mut shifted = m.to_vec();
            shifted[k] += p;
            let r = &parent.ring;
            let c = parent.node.get(&shifted);
            if r.is_zero(&c) {
                return c;
            }
            let factor = rising_factorial_ratio(&BigUint::from(m[k]), p);
            r.mul(&r.from_integer(&BigInt::from(factor)), &c)
        })
    }

    /// Shorthand for [`Self::derivative`].
    pub fn partial(&self, var: &str, order: u64) -> Self {
        self.derivative(&DerivativeSpec::new(var, order))
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::polynomial::polynomial_ring;
    use crate::ring::{ModularIntegers, Rationals};
    use crate::monoid::ExponentVector;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn x_cubed() {
        let pr = polynomial_ring(Rationals);
        let x3 = pr.monomial(ExponentVector::from_pairs([("x", 3u32)]));
        let s = PowerSeries::from_polynomial(Rationals, &x3);
        assert_eq!(s.partial("x", 1).render(5), "3*x^2 + O(x^5)");
        assert_eq!(s.partial("x", 3).render(5), "6 + O(x^5)");
        assert_eq!(s.partial("x", 4).render(5), "0 + O(x^5)");
    }

    #[test]
    fn no_dependence_gives_zero() {
        let pr = polynomial_ring(Rationals);
        let y2 = pr.monomial(ExponentVector::from_pairs([("y", 2u32)]));
        let s = PowerSeries::from_polynomial(Rationals, &y2);
        assert_eq!(s.partial("x", 1).render(4), "0 + O(y^4)");
        assert!(s.partial("x", 0).eq_through(&s, 6));
    }

    #[test]
    fn derivative_of_polynomial_is_polynomial() {
        let pr = polynomial_ring(Rationals);
        let f = pr.from_terms([
            (ExponentVector::from_pairs([("x", 4u32), ("y", 1)]), q(2)),
            (ExponentVector::from_pairs([("x", 1u32)]), q(-5)),
        ]);
        let s = PowerSeries::from_polynomial(Rationals, &f);
        for p in 0..6 {
            let via_series = s.partial("x", p);
            let via_poly = PowerSeries::from_polynomial(Rationals, &pr.derivative(&f, "x", p));
            assert!(via_series.eq_through(&via_poly, 12), "order {p}");
        }
    }

    #[test]
    fn positive_characteristic() {
        let f3 = ModularIntegers::new(3).unwrap();
        let s = PowerSeries::from_fn(f3, &["x"], |_| 1u64);
        // coefficient at x^1 of ∂^2: (2·3)·1 = 6 ≡ 0
        let d = s.partial("x", 2);
        assert_eq!(d.coefficient_dense(&[1]), 0);
        // at x^0: 1·2 = 2
        assert_eq!(d.coefficient_dense(&[0]), 2);
    }
}
