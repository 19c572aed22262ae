use serde_json::{json, Value};

use super::{Monoid, MonoidError};

/// The cyclic group `C_n = {0, ..., n−1}` under addition mod `n`, printed
/// multiplicatively with generator `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cyclic {
    order: u64,
}

impl Cyclic {
    /// Returns `None` for order zero.
    pub fn new(order: u64) -> Option<Self> {
        (order >= 1).then_some(Self { order })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order
    }
}

impl Monoid for Cyclic {
    type Elem = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn op(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.order as u128) as u64
    }

    fn is_abelian(&self) -> bool {
        true
    }

    fn descriptor(&self) -> Value {
        json!({"cyclic": self.order})
    }

    fn elem_to_json(&self, a: &u64) -> Value {
        json!(a)
    }

    fn elem_from_json(&self, v: &Value) -> Result<u64, MonoidError> {
        v.as_u64()
            .filter(|x| *x < self.order)
            .ok_or_else(|| MonoidError::Decode(format!("not an element of C_{}: {v}", self.order)))
    }

    fn format(&self, a: &u64) -> String {
        match a {
            0 => "1".into(),
            1 => "g".into(),
            k => format!("g^{k}"),
        }
    }

    fn try_inverse(&self, a: &u64) -> Option<u64> {
        Some((self.order - a % self.order) % self.order)
    }
}

/// The natural numbers `(ℕ, +, 0)`, printed as powers of one variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Naturals {
    var: String,
}

impl Naturals {
    pub fn new(var: impl Into<String>) -> Self {
        Self { var: var.into() }
    }

    pub fn var(&self) -> &str {
        &self.var
    }
}

impl Monoid for Naturals {
    type Elem = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn op(&self, a: &u64, b: &u64) -> u64 {
        a.checked_add(*b).expect("exponent overflow in ℕ")
    }

    fn is_abelian(&self) -> bool {
        true
    }

    fn descriptor(&self) -> Value {
        json!({"naturals": self.var})
    }

    fn elem_to_json(&self, a: &u64) -> Value {
        json!(a)
    }

    fn elem_from_json(&self, v: &Value) -> Result<u64, MonoidError> {
        v.as_u64()
            .ok_or_else(|| MonoidError::Decode(format!("expected natural number, got {v}")))
    }

    fn format(&self, a: &u64) -> String {
        match a {
            0 => "1".into(),
            1 => self.var.clone(),
            k => format!("{}^{k}", self.var),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_wraps() {
        let c2 = Cyclic::new(2).unwrap();
        assert_eq!(c2.op(&1, &1), 0);
        assert!(Cyclic::new(0).is_none());
    }

    #[test]
    fn every_element_invertible() {
        let c = Cyclic::new(7).unwrap();
        for a in c.elements() {
            let inv = c.try_inverse(&a).unwrap();
            assert_eq!(c.op(&a, &inv), 0);
        }
    }

    #[test]
    fn naturals_text() {
        let n = Naturals::new("x");
        assert_eq!(n.format(&0), "1");
        assert_eq!(n.format(&1), "x");
        assert_eq!(n.format(&4), "x^4");
        assert_eq!(n.try_inverse(&3), None);
    }
}
