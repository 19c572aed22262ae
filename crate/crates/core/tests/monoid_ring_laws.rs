use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use monoidal::monoid::{Cyclic, FreeMonoid, Monoid, Naturals, Product, Word};
use monoidal::monoid_ring::{Elem, MonoidRing};
use monoidal::ring::{Integers, ModularIntegers};
use monoidal::Ring;

fn words() -> MonoidRing<Integers, FreeMonoid> {
    MonoidRing::new(Integers, FreeMonoid)
}

fn word_elem() -> impl Strategy<Value = Elem<Integers, FreeMonoid>> {
    proptest::collection::vec(("[xy]{0,3}", -6i64..=6), 0..5)
        .prop_map(|terms| words().from_terms(terms.into_iter().map(|(w, c)| (Word::new(w), BigInt::from(c)))))
}

fn c3_elem() -> impl Strategy<Value = Elem<Integers, Cyclic>> {
    let ring = MonoidRing::new(Integers, Cyclic::new(3).unwrap());
    proptest::collection::vec((0u64..3, -6i64..=6), 0..4)
        .prop_map(move |t| ring.from_terms(t.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

type Flat = MonoidRing<Integers, Product<Naturals, FreeMonoid>>;

fn flat() -> Flat {
    MonoidRing::new(Integers, Product::new(Naturals::new("t"), FreeMonoid))
}

fn flat_elem() -> impl Strategy<Value = Elem<Integers, Product<Naturals, FreeMonoid>>> {
    proptest::collection::vec(((0u64..4, "[ab]{0,2}"), -5i64..=5), 0..6).prop_map(|t| {
        flat().from_terms(t.into_iter().map(|((n, w), c)| ((n, Word::new(w)), BigInt::from(c))))
    })
}

proptest! {
    #[test]
    fn free_basis_round_trip(f in word_elem()) {
        let r = words();
        let rebuilt = f.iter().fold(r.zero(), |acc, (m, c)| r.add(&acc, &r.scale(c, &r.delta(m.clone()))));
        prop_assert!(r.eq(&rebuilt, &f));
        for (_, c) in f.iter() {
            prop_assert!(*c != BigInt::from(0));
        }
    }

    #[test]
    fn distributive(f in word_elem(), g in word_elem(), h in word_elem()) {
        let r = words();
        prop_assert!(r.eq(&r.mul(&f, &r.add(&g, &h)), &r.add(&r.mul(&f, &g), &r.mul(&f, &h))));
        prop_assert!(r.eq(&r.mul(&r.add(&g, &h), &f), &r.add(&r.mul(&g, &f), &r.mul(&h, &f))));
    }

    #[test]
    fn eta_and_delta(a in -50i64..50, b in -50i64..50, u in "[xy]{0,4}", v in "[xy]{0,4}") {
        let r = words();
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(r.eq(&r.eta(a.clone()), &r.eta(b.clone())), a == b);
        prop_assert!(r.eq(&r.eta(&a * &b), &r.mul(&r.eta(a), &r.eta(b))));
        let (u, v) = (Word::new(u), Word::new(v));
        prop_assert!(r.eq(&r.delta(u.concat(&v)), &r.mul(&r.delta(u), &r.delta(v))));
        prop_assert!(r.eq(&r.delta(Word::empty()), &r.one()));
    }

    #[test]
    fn augmentation_is_a_ring_map(f in c3_elem(), g in c3_elem()) {
        let r = MonoidRing::new(Integers, Cyclic::new(3).unwrap());
        let e = |x: &Elem<Integers, Cyclic>| r.augmentation(x);
        prop_assert_eq!(e(&r.add(&f, &g)), e(&f) + e(&g));
        prop_assert_eq!(e(&r.mul(&f, &g)), e(&f) * e(&g));
        prop_assert_eq!(e(&r.one()), BigInt::from(1));
    }

    #[test]
    fn kernel_decomposition_rebuilds(f in c3_elem()) {
        let r = MonoidRing::new(Integers, Cyclic::new(3).unwrap());
        // move f into the kernel by subtracting its augmentation
        let k = r.sub(&f, &r.eta(r.augmentation(&f)));
        let parts = r.augmentation_kernel_decompose(&k).unwrap();
        let rebuilt = parts.iter().fold(r.zero(), |acc, (m, c)| {
            r.add(&acc, &r.scale(c, &r.sub(&r.delta(*m), &r.one())))
        });
        prop_assert!(r.eq(&rebuilt, &k));
    }

    #[test]
    fn json_round_trip(f in word_elem()) {
        let r = words();
        let j = r.to_json(&f);
        let back = r.from_json(&j).unwrap();
        prop_assert!(r.eq(&back, &f));
        prop_assert_eq!(r.to_json(&back).to_string(), j.to_string());
    }

    #[test]
    fn curry_is_an_isomorphism(f in flat_elem(), g in flat_elem()) {
        let r = flat();
        let n = r.nested();
        prop_assert!(r.eq(&r.uncurry(&r.curry(&f)), &f));
        prop_assert!(n.eq(&r.curry(&r.mul(&f, &g)), &n.mul(&r.curry(&f), &r.curry(&g))));
        prop_assert!(n.eq(&r.curry(&r.add(&f, &g)), &n.add(&r.curry(&f), &r.curry(&g))));
    }

    #[test]
    fn modular_coefficients_reduce(a in 0u64..100, b in 0u64..100) {
        let z6 = ModularIntegers::new(6).unwrap();
        let r = MonoidRing::new(z6, Naturals::new("x"));
        let f = r.from_terms([(1u64, a % 6), (0, b % 6)]);
        let g = r.from_terms([(1u64, 3)]);
        let prod = r.mul(&f, &g);
        prop_assert_eq!(r.coefficient(&prod, &2), (a % 6 * 3) % 6);
    }
}

#[test]
fn words_do_not_commute_but_cyclic_does() {
    let r = words();
    let (x, y) = (r.delta(Word::new("x")), r.delta(Word::new("y")));
    let rep = r.commutativity_witness(&[x, y]);
    assert!(rep.witness.is_some());
    assert!(rep.consistent());
    let c = MonoidRing::new(Integers, Cyclic::new(4).unwrap());
    let samples: Vec<_> = (0..4).map(|k| c.add(&c.delta(k), &c.one())).collect();
    let rep = c.commutativity_witness(&samples);
    assert!(rep.witness.is_none() && rep.consistent());
}

#[test]
fn map_monoid_is_multiplicative() {
    // N -> C4, n ↦ n mod 4
    let src = MonoidRing::new(Integers, Naturals::new("x"));
    let dst = MonoidRing::new(Integers, Cyclic::new(4).unwrap());
    let h = |n: &u64| n % 4;
    let f = src.from_terms([(0u64, BigInt::from(1)), (3, BigInt::from(2))]);
    let g = src.from_terms([(1u64, BigInt::from(-1)), (5, BigInt::from(4))]);
    let lhs = src.map_monoid(&src.mul(&f, &g), h, &dst);
    let rhs = dst.mul(&src.map_monoid(&f, h, &dst), &src.map_monoid(&g, h, &dst));
    assert!(dst.eq(&lhs, &rhs));
    let mut seen = BTreeMap::new();
    for (m, c) in lhs.iter() {
        seen.insert(*m, c.clone());
    }
    assert!(seen.keys().all(|k| *k < 4));
    assert_eq!(Cyclic::new(4).unwrap().op(&3, &2), 1);
}
