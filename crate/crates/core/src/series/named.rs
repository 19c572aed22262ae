use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{PowerSeries, SeriesError};
use crate::ring::{factorial, Ring};

/// The univariate series with closed-form coefficients, lifted into a chosen
/// variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesKind<C> {
    /// `1 − x + x² − ...`, the inverse of `1 + x`.
    GeomPlus,
    /// `1 + x + x² + ...`, the inverse of `1 − x`.
    GeomMinus,
    /// `exp_a`, coefficients `aⁿ/n!`.
    Exp(C),
    /// Coefficient `(−1)^s/n!` at odd `n = 2s+1`, zero at even `n`.
    Sin,
    /// Coefficient `(−1)^s/n!` at even `n = 2s`, zero at odd `n`.
    Cos,
}

impl<R: Ring> PowerSeries<R> {
    pub fn named(ring: R, kind: SeriesKind<R::Elem>, var: &str) -> Result<Self, SeriesError> {
        if matches!(kind, SeriesKind::Exp(_) | SeriesKind::Sin | SeriesKind::Cos) {
            let ch = ring.characteristic();
            if !ch.is_zero() {
                return Err(SeriesError::CharacteristicNotZero(ch));
            }
            if !ring.has_rational_scalars() {
                return Err(SeriesError::RationalScalarsRequired(ring.name()));
            }
        }
        let vars: Arc<[String]> = Arc::from(vec![var.to_string()]);
        let r = ring.clone();
        let inv_factorial = move |n: u64| -> R::Elem {
            r.try_invert(&r.from_integer(&BigInt::from(factorial(n))))
                .expect("n! is a unit in a ring with rational scalars")
        };
        let r = ring.clone();
        let sign = move |s: u64| if s.is_multiple_of(2) { r.one() } else { r.neg(&r.one()) };
        let r = ring.clone();
        Ok(match kind {
            SeriesKind::GeomPlus => Self::from_oracle(ring, vars, move |_, e| sign(e[0])),
            SeriesKind::GeomMinus => Self::from_oracle(ring, vars, move |_, _| r.one()),
            SeriesKind::Exp(a) => Self::from_oracle(ring, vars, move |_, e| {
                r.mul(&r.pow(&a, e[0]), &inv_factorial(e[0]))
            }),
            SeriesKind::Sin => Self::from_oracle(ring, vars, move |_, e| {
                let n = e[0];
                if n % 2 == 1 {
                    r.mul(&sign(n / 2), &inv_factorial(n))
                } else {
                    r.zero()
                }
            }),
            SeriesKind::Cos => Self::from_oracle(ring, vars, move |_, e| {
                let n = e[0];
                if n % 2 == 0 {
                    r.mul(&sign(n / 2), &inv_factorial(n))
                } else {
                    r.zero()
                }
            }),
        })
    }
}
