//! Random sample generators for property checks, benches and the `check`
//! commands. Everything is driven by a caller-supplied RNG, and random
//! series are deterministic functions of a seed.

use std::hash::{DefaultHasher, Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::monoid::{Cyclic, ExponentVector, Monoid, Word};
use crate::monoid_ring::{Elem, MonoidRing};
use crate::polynomial::Polynomial;
use crate::ring::{GaussianRational, ModularIntegers, Ring};
use crate::series::PowerSeries;

/// Uniform in `[-bound, bound]`.
pub fn int<G: Rng + ?Sized>(rng: &mut G, bound: i64) -> BigInt {
    BigInt::from(rng.gen_range(-bound..=bound))
}

/// Numerator in `[-bound, bound]`, denominator in `[1, bound]`.
pub fn rational<G: Rng + ?Sized>(rng: &mut G, bound: i64) -> BigRational {
    let d = rng.gen_range(1..=bound.max(1));
    BigRational::new(int(rng, bound), BigInt::from(d))
}

pub fn gaussian<G: Rng + ?Sized>(rng: &mut G, bound: i64) -> GaussianRational {
    GaussianRational::new(rational(rng, bound), rational(rng, bound))
}

pub fn modular<G: Rng + ?Sized>(rng: &mut G, ring: &ModularIntegers) -> u64 {
    rng.gen_range(0..ring.modulus())
}

/// An exponent vector over `vars` with each exponent in `[0, max_exp]`.
pub fn exponent<G: Rng + ?Sized, S: AsRef<str>>(rng: &mut G, vars: &[S], max_exp: u64) -> ExponentVector {
    ExponentVector::from_pairs(vars.iter().map(|v| (v.as_ref(), rng.gen_range(0..=max_exp))))
}

/// An exponent vector over `vars` with total degree at most `max_degree`.
pub fn exponent_of_degree<G: Rng + ?Sized, S: AsRef<str>>(
    rng: &mut G,
    vars: &[S],
    max_degree: u64,
) -> ExponentVector {
    let mut left = rng.gen_range(0..=max_degree);
    let mut pairs = Vec::new();
    for v in vars {
        let e = rng.gen_range(0..=left);
        left -= e;
        pairs.push((v.as_ref(), e));
    }
    ExponentVector::from_pairs(pairs)
}

/// A word over `alphabet` of length at most `max_len`.
pub fn word<G: Rng + ?Sized>(rng: &mut G, alphabet: &[char], max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    Word::new((0..n).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect::<String>())
}

pub fn cyclic<G: Rng + ?Sized>(rng: &mut G, c: &Cyclic) -> u64 {
    rng.gen_range(0..c.order())
}

/// An element of `R[M]` with up to `max_terms` terms.
pub fn element<G, R, M>(
    rng: &mut G,
    ring: &MonoidRing<R, M>,
    max_terms: usize,
    mut coef: impl FnMut(&mut G) -> R::Elem,
    mut elem: impl FnMut(&mut G) -> M::Elem,
) -> Elem<R, M>
where
    G: Rng + ?Sized,
    R: Ring,
    M: Monoid,
{
    let n = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..n).map(|_| (elem(rng), coef(rng))).collect();
    ring.from_terms(terms)
}

/// A polynomial over `vars` with total degree at most `max_degree`.
pub fn polynomial<G, R, S>(
    rng: &mut G,
    ring: &R,
    vars: &[S],
    max_degree: u64,
    max_terms: usize,
    coef: impl FnMut(&mut G) -> R::Elem,
) -> Polynomial<R::Elem>
where
    G: Rng + ?Sized,
    R: Ring,
    S: AsRef<str>,
{
    let pr = crate::polynomial::polynomial_ring(ring.clone());
    element(rng, &pr, max_terms, coef, |g| exponent_of_degree(g, vars, max_degree))
}

/// A series whose coefficient at each exponent is drawn by `coef` from an
/// RNG seeded by `(seed, exponent)`, so the series is a pure function.
pub fn series<R, S>(
    ring: R,
    vars: &[S],
    seed: u64,
    coef: impl Fn(&mut StdRng) -> R::Elem + Send + Sync + 'static,
) -> PowerSeries<R>
where
    R: Ring,
    S: AsRef<str>,
{
    PowerSeries::from_fn(ring, vars, move |e| {
        let mut h = DefaultHasher::new();
        (seed, e).hash(&mut h);
        coef(&mut StdRng::seed_from_u64(h.finish()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    #[test]
    fn series_are_deterministic() {
        let a = series(Rationals, &["x", "y"], 7, |g| rational(g, 9));
        let b = series(Rationals, &["x", "y"], 7, |g| rational(g, 9));
        assert!(a.eq_through(&b, 6));
        let c = series(Rationals, &["x", "y"], 8, |g| rational(g, 9));
        assert!(!a.eq_through(&c, 6));
    }

    #[test]
    fn degree_bound_respected() {
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..200 {
            let m = exponent_of_degree(&mut rng, &["x", "y", "z"], 8);
            assert!(m.total_degree() <= 8u32.into());
        }
    }
}
