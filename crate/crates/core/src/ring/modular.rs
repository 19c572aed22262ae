use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::{Ring, RingError};

/// ℤ/nℤ for a modulus `n ≥ 2`; elements are residues in `[0, n)`.
#[derive(Debug, Clone, Copy)]
pub struct ModularIntegers {
    modulus: u64,
}

impl ModularIntegers {
    /// Returns `None` when `modulus < 2`.
    pub fn new(modulus: u64) -> Option<Self> {
        (modulus >= 2).then_some(Self { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce(&self, v: u64) -> u64 {
        v % self.modulus
    }
}

impl Ring for ModularIntegers {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn eq(&self, a: &u64, b: &u64) -> bool {
        a == b
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn characteristic(&self) -> BigUint {
        BigUint::from(self.modulus)
    }

    fn try_invert(&self, a: &u64) -> Result<u64, RingError> {
        let ext = BigInt::from(*a).extended_gcd(&BigInt::from(self.modulus));
        if ext.gcd != BigInt::from(1) {
            return Err(RingError::NotAUnit(format!("{a} mod {}", self.modulus)));
        }
        let inv = ext.x.mod_floor(&BigInt::from(self.modulus));
        Ok(inv.to_u64().expect("residue fits the modulus"))
    }

    fn from_integer(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.modulus))
            .to_u64()
            .expect("residue fits the modulus")
    }

    fn name(&self) -> String {
        format!("mod:{}", self.modulus)
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn elem_to_json(&self, a: &u64) -> Value {
        json!({"mod": self.modulus, "val": a})
    }

    fn elem_from_json(&self, v: &Value) -> Result<u64, RingError> {
        let modulus = v.get("mod").and_then(Value::as_u64);
        let val = v.get("val").and_then(Value::as_u64);
        match (modulus, val) {
            (Some(m), Some(x)) if m == self.modulus && x < m => Ok(x),
            _ => Err(RingError::Decode(format!(
                "expected {{\"mod\": {}, \"val\": v}}, got {v}",
                self.modulus
            ))),
        }
    }
}
