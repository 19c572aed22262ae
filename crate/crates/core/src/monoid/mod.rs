//! Monoids `(M, ∗, e)` used as the index sets of monoid rings.

mod cyclic;
mod exponent;
mod product;
mod word;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use serde_json::Value;
use thiserror::Error;

use crate::report::Report;

pub use cyclic::{Cyclic, Naturals};
pub use exponent::{ExponentMonoid, ExponentVector};
pub use product::Product;
pub use word::{FreeMonoid, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("invalid monoid element encoding: {0}")]
    Decode(String),
}

/// A monoid whose elements have decidable, structural equality.
///
/// `Elem: Ord` gives every element a canonical position in sorted
/// containers; the ordering carries no algebraic meaning.
pub trait Monoid: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + Eq + Ord + Hash + Send + Sync + 'static;

    fn identity(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_abelian(&self) -> bool;

    /// JSON descriptor of the monoid itself.
    fn descriptor(&self) -> Value;
    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, MonoidError>;
    /// Monomial text; the identity prints as `"1"`.
    fn format(&self, a: &Self::Elem) -> String;

    /// Inverse in the monoid, when `a` has one.
    fn try_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        (*a == self.identity()).then(|| a.clone())
    }

    /// Order in which terms are printed.
    fn print_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        a.cmp(b)
    }

    /// Injective string encoding: `stable_key(a) == stable_key(b)` iff `a == b`.
    fn stable_key(&self, a: &Self::Elem) -> String {
        self.elem_to_json(a).to_string()
    }

    fn decode_key(&self, key: &str) -> Result<Self::Elem, MonoidError> {
        let v: Value =
            serde_json::from_str(key).map_err(|e| MonoidError::Decode(e.to_string()))?;
        self.elem_from_json(&v)
    }
}

/// Checks associativity, two-sided identity, commutativity when flagged,
/// and stable-key injectivity and round-trip on the sampled triples.
pub fn monoid_axiom_check<M: Monoid>(
    monoid: &M,
    samples: &[(M::Elem, M::Elem, M::Elem)],
) -> Report {
    let mut report = Report::new("monoid axioms");
    let e = monoid.identity();
    let show = |x: &M::Elem| monoid.format(x);

    report.record(
        "associative",
        samples
            .iter()
            .find(|(a, b, c)| {
                monoid.op(&monoid.op(a, b), c) != monoid.op(a, &monoid.op(b, c))
            })
            .map(|(a, b, c)| format!("({}, {}, {})", show(a), show(b), show(c))),
    );
    report.record(
        "identity",
        samples
            .iter()
            .find(|(a, _, _)| monoid.op(a, &e) != *a || monoid.op(&e, a) != *a)
            .map(|(a, _, _)| show(a)),
    );
    if monoid.is_abelian() {
        report.record(
            "commutative",
            samples
                .iter()
                .find(|(a, b, _)| monoid.op(a, b) != monoid.op(b, a))
                .map(|(a, b, _)| format!("({}, {})", show(a), show(b))),
        );
    }
    report.record(
        "stable key injective",
        samples
            .iter()
            .find(|(a, b, _)| (monoid.stable_key(a) == monoid.stable_key(b)) != (a == b))
            .map(|(a, b, _)| format!("({}, {})", show(a), show(b))),
    );
    report.record(
        "stable key round-trip",
        samples
            .iter()
            .find(|(a, _, _)| monoid.decode_key(&monoid.stable_key(a)).ok().as_ref() != Some(a))
            .map(|(a, _, _)| show(a)),
    );
    report
}

/// Searches the sampled pairs for `a∗b ≠ b∗a`.
pub fn noncommuting_pair<M: Monoid>(
    monoid: &M,
    samples: &[(M::Elem, M::Elem)],
) -> Option<(M::Elem, M::Elem)> {
    samples
        .iter()
        .find(|(a, b)| monoid.op(a, b) != monoid.op(b, a))
        .cloned()
}
