use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;

use super::{format_rational, parse_rational, Ring, RingError};

/// The field ℚ. Values are kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::from_integer(1.into())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn eq(&self, a: &BigRational, b: &BigRational) -> bool {
        a == b
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn characteristic(&self) -> BigUint {
        BigUint::zero()
    }

    fn try_invert(&self, a: &BigRational) -> Result<BigRational, RingError> {
        if a.is_zero() {
            Err(RingError::NotAUnit("0".into()))
        } else {
            Ok(a.recip())
        }
    }

    fn from_integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational, RingError> {
        Ok(q.clone())
    }

    fn has_rational_scalars(&self) -> bool {
        true
    }

    fn name(&self) -> String {
        "rat".into()
    }

    fn format(&self, a: &BigRational) -> String {
        format_rational(a)
    }

    fn elem_to_json(&self, a: &BigRational) -> Value {
        Value::String(format!("{}/{}", a.numer(), a.denom()))
    }

    fn elem_from_json(&self, v: &Value) -> Result<BigRational, RingError> {
        match v {
            Value::String(s) => parse_rational(s),
            other => Err(RingError::Decode(format!("expected \"p/q\", got {other}"))),
        }
    }
}
