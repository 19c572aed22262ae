use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::Ring;
use crate::report::Report;

/// Outcome of [`ring_axiom_check`].
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub report: Report,
    /// Sampled pairs `(a, b)` of nonzero elements with `a·b = 0`, as text.
    /// Zero divisors do not make a ring invalid; they are recorded only.
    pub zero_divisors: Vec<(String, String)>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.report.all_passed()
    }
}

/// Searches up to this many additions of `1` when the ring claims
/// characteristic zero.
const CHARACTERISTIC_PROBE: u64 = 1000;

/// Checks the ring laws on the given triples. The commutativity law is
/// checked only when the ring reports itself commutative.
pub fn ring_axiom_check<R: Ring>(ring: &R, samples: &[(R::Elem, R::Elem, R::Elem)]) -> AxiomReport {
    let mut report = Report::new(format!("ring axioms for {}", ring.name()));
    let mut zero_divisors = Vec::new();

    let mut law = |name: &str, holds: &dyn Fn(&R::Elem, &R::Elem, &R::Elem) -> bool| {
        let bad = samples.iter().find(|(a, b, c)| !holds(a, b, c));
        report.record(
            name,
            bad.map(|(a, b, c)| {
                format!("({}, {}, {})", ring.format(a), ring.format(b), ring.format(c))
            }),
        );
    };

    law("add associative", &|a, b, c| {
        ring.eq(&ring.add(&ring.add(a, b), c), &ring.add(a, &ring.add(b, c)))
    });
    law("add commutative", &|a, b, _| ring.eq(&ring.add(a, b), &ring.add(b, a)));
    law("add identity", &|a, _, _| ring.eq(&ring.add(a, &ring.zero()), a));
    law("add inverse", &|a, _, _| ring.is_zero(&ring.add(a, &ring.neg(a))));
    law("mul associative", &|a, b, c| {
        ring.eq(&ring.mul(&ring.mul(a, b), c), &ring.mul(a, &ring.mul(b, c)))
    });
    law("mul identity", &|a, _, _| {
        ring.eq(&ring.mul(a, &ring.one()), a) && ring.eq(&ring.mul(&ring.one(), a), a)
    });
    law("left distributive", &|a, b, c| {
        ring.eq(
            &ring.mul(a, &ring.add(b, c)),
            &ring.add(&ring.mul(a, b), &ring.mul(a, c)),
        )
    });
    law("right distributive", &|a, b, c| {
        ring.eq(
            &ring.mul(&ring.add(a, b), c),
            &ring.add(&ring.mul(a, c), &ring.mul(b, c)),
        )
    });
    law("equality reflexive and symmetric", &|a, b, _| {
        ring.eq(a, a) && ring.eq(a, b) == ring.eq(b, a)
    });
    if ring.is_commutative() {
        law("mul commutative", &|a, b, _| ring.eq(&ring.mul(a, b), &ring.mul(b, a)));
    }

    for (a, b, _) in samples {
        if !ring.is_zero(a) && !ring.is_zero(b) && ring.is_zero(&ring.mul(a, b)) {
            zero_divisors.push((ring.format(a), ring.format(b)));
        }
    }

    report.record("characteristic", characteristic_mismatch(ring));
    AxiomReport {
        report,
        zero_divisors,
    }
}

fn characteristic_mismatch<R: Ring>(ring: &R) -> Option<String> {
    let claimed = ring.characteristic();
    let limit = if claimed.is_zero() {
        CHARACTERISTIC_PROBE
    } else {
        claimed.to_u64()?
    };
    let one = ring.one();
    let mut acc = one.clone();
    for k in 1..=limit {
        if ring.is_zero(&acc) {
            return (BigUint::from(k) != claimed)
                .then(|| format!("claimed {claimed}, but {k}·1 = 0"));
        }
        acc = ring.add(&acc, &one);
    }
    if claimed.is_zero() {
        None
    } else {
        Some(format!("claimed {claimed}, but {limit}·1 ≠ 0"))
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::ring::{GaussianRational, GaussianRationals, Integers, ModularIntegers};

    #[test]
    fn integers_pass() {
        let samples: Vec<_> = (-5i64..5)
            .flat_map(|a| (-3i64..3).map(move |b| (BigInt::from(a), BigInt::from(b), BigInt::from(a * b + 1))))
            .collect();
        let rep = ring_axiom_check(&Integers, &samples);
        assert!(rep.all_passed(), "{}", rep.report);
        assert!(rep.zero_divisors.is_empty());
    }

    #[test]
    fn mod_six_records_zero_divisor() {
        let r = ModularIntegers::new(6).unwrap();
        let rep = ring_axiom_check(&r, &[(2, 3, 1)]);
        assert!(rep.all_passed());
        assert_eq!(rep.zero_divisors, vec![("2".to_string(), "3".to_string())]);
    }

    #[test]
    fn gaussian_lambda() {
        let r = GaussianRationals;
        let i = GaussianRational::i();
        let rep = ring_axiom_check(&r, &[(i.clone(), i.clone(), r.one())]);
        assert!(rep.all_passed());
        assert_eq!(r.format(&r.mul(&i, &i)), "-1");
    }
}
