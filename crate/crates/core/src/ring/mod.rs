//! Coefficient rings.
//!
//! A [`Ring`] value is a runtime descriptor: it owns the parameters of the
//! ring (a modulus, a base ring, a monoid, ...) and performs arithmetic on
//! plain element values. Elements never carry their ring, so composite
//! structures such as `R[M]` or `R[[x]]` are themselves rings whose elements
//! are built from the elements of the inner ring.
//!
//! Multiplication is never assumed to be commutative by generic code; the
//! `is_commutative` flag only gates operations whose contract requires it.

mod axioms;
mod gaussian;
mod integer;
mod modular;
mod rational;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;
use thiserror::Error;

pub use axioms::{ring_axiom_check, AxiomReport};
pub use gaussian::{GaussianRational, GaussianRationals};
pub use integer::Integers;
pub use modular::ModularIntegers;
pub use rational::Rationals;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("element {0} is not a unit")]
    NotAUnit(String),
    #[error("unsupported ring operation: {0}")]
    Unsupported(String),
    #[error("invalid ring element encoding: {0}")]
    Decode(String),
}

/// An exact ring `(R, +, *, 0, 1)` whose elements are values of `Self::Elem`.
pub trait Ring: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a * b`, in that order.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn is_commutative(&self) -> bool;
    /// Characteristic of the ring, `0` meaning characteristic zero.
    fn characteristic(&self) -> BigUint;
    /// Two-sided inverse, or [`RingError::NotAUnit`].
    fn try_invert(&self, a: &Self::Elem) -> Result<Self::Elem, RingError>;

    /// Short name used in serialized output, e.g. `"rat"` or `"mod:6"`.
    fn name(&self) -> String;
    /// Canonical text form of an element.
    fn format(&self, a: &Self::Elem) -> String;
    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, RingError>;

    /// Whether every nonzero integer is invertible, i.e. the ring is a
    /// ℚ-algebra and `1/n!` makes sense.
    fn has_rational_scalars(&self) -> bool {
        false
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.eq(a, &self.zero())
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.eq(a, &self.one())
    }

    /// Image of an integer under the unique ring map `ℤ → R`.
    fn from_integer(&self, n: &BigInt) -> Self::Elem {
        let unit = if n.is_negative() {
            self.neg(&self.one())
        } else {
            self.one()
        };
        let mut acc = self.zero();
        let mut base = unit;
        let mut k = n.magnitude().clone();
        while !k.is_zero() {
            if k.bit(0) {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1u32;
        }
        acc
    }

    /// Image of `p/q`, defined when `q` maps to a unit.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem, RingError> {
        let num = self.from_integer(q.numer());
        if q.denom().is_one() {
            return Ok(num);
        }
        let den = self.try_invert(&self.from_integer(q.denom()))?;
        Ok(self.mul(&num, &den))
    }

    fn pow(&self, a: &Self::Elem, n: u64) -> Self::Elem {
        self.pow_big(a, &BigUint::from(n))
    }

    fn pow_big(&self, a: &Self::Elem, n: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        let bits = n.bits();
        for i in (0..bits).rev() {
            acc = self.mul(&acc, &acc);
            if n.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// Canonical text of an integer-valued rational: `"p"` or `"p/q"`.
pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, RingError> {
    let bad = || RingError::Decode(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Rising product `(s+1)(s+2)...(s+p) = (s+p)!/s!`.
pub fn rising_factorial_ratio(s: &BigUint, p: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 1..=p {
        acc *= s + BigUint::from(i);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    rising_factorial_ratio(&BigUint::zero(), n)
}
