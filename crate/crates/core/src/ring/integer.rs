use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::{Ring, RingError};

/// The integers ℤ with arbitrary precision.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn eq(&self, a: &BigInt, b: &BigInt) -> bool {
        a == b
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn characteristic(&self) -> BigUint {
        BigUint::zero()
    }

    fn try_invert(&self, a: &BigInt) -> Result<BigInt, RingError> {
        if a.abs().is_one() {
            Ok(a.clone())
        } else {
            Err(RingError::NotAUnit(a.to_string()))
        }
    }

    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn name(&self) -> String {
        "int".into()
    }

    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn elem_to_json(&self, a: &BigInt) -> Value {
        Value::String(a.to_string())
    }

    fn elem_from_json(&self, v: &Value) -> Result<BigInt, RingError> {
        match v {
            Value::String(s) => s
                .parse()
                .map_err(|_| RingError::Decode(format!("not an integer: {s:?}"))),
            Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap())),
            other => Err(RingError::Decode(format!("expected integer string, got {other}"))),
        }
    }
}
