use std::cmp::Ordering;

use serde_json::{json, Value};

use super::{Monoid, MonoidError};

/// `M × N` with the componentwise operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product<M, N> {
    pub left: M,
    pub right: N,
}

impl<M: Monoid, N: Monoid> Product<M, N> {
    pub fn new(left: M, right: N) -> Self {
        Self { left, right }
    }
}

impl<M: Monoid, N: Monoid> Monoid for Product<M, N> {
    type Elem = (M::Elem, N::Elem);

    fn identity(&self) -> Self::Elem {
        (self.left.identity(), self.right.identity())
    }

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.op(&a.0, &b.0), self.right.op(&a.1, &b.1))
    }

    fn is_abelian(&self) -> bool {
        self.left.is_abelian() && self.right.is_abelian()
    }

    fn descriptor(&self) -> Value {
        json!({"product": [self.left.descriptor(), self.right.descriptor()]})
    }

    fn elem_to_json(&self, a: &Self::Elem) -> Value {
        json!([self.left.elem_to_json(&a.0), self.right.elem_to_json(&a.1)])
    }

    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, MonoidError> {
        match v.as_array().map(Vec::as_slice) {
            Some([l, r]) => Ok((self.left.elem_from_json(l)?, self.right.elem_from_json(r)?)),
            _ => Err(MonoidError::Decode(format!("expected [left, right], got {v}"))),
        }
    }

    fn format(&self, a: &Self::Elem) -> String {
        let l = (a.0 != self.left.identity()).then(|| self.left.format(&a.0));
        let r = (a.1 != self.right.identity()).then(|| self.right.format(&a.1));
        match (l, r) {
            (None, None) => "1".into(),
            (Some(l), None) => l,
            (None, Some(r)) => r,
            (Some(l), Some(r)) => format!("{l}*{r}"),
        }
    }

    fn try_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        Some((self.left.try_inverse(&a.0)?, self.right.try_inverse(&a.1)?))
    }

    fn print_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        self.right
            .print_cmp(&a.1, &b.1)
            .then_with(|| self.left.print_cmp(&a.0, &b.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{Cyclic, Naturals};

    #[test]
    fn componentwise() {
        let m = Product::new(Naturals::new("x"), Cyclic::new(3).unwrap());
        assert_eq!(m.op(&(2, 2), &(1, 2)), (3, 1));
        assert_eq!(m.identity(), (0, 0));
        assert_eq!(m.format(&(2, 1)), "x^2*g");
        assert_eq!(m.decode_key(&m.stable_key(&(5, 2))).unwrap(), (5, 2));
    }
}
