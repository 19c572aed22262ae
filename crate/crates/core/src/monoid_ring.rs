//! The monoid ring `R[M]`: finitely supported functions `M → R` with the
//! convolution product `(f·g)(m) = Σ_{m₁∗m₂=m} f(m₁)g(m₂)`.
//!
//! Elements are kept in canonical form: no stored coefficient is zero, so
//! two elements are equal exactly when their term maps are equal. Every
//! element is `Σ f(m)·δ_m` over its support, uniquely.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};
use thiserror::Error;

use crate::monoid::{Monoid, Product};
use crate::report::Report;
use crate::ring::{Ring, RingError};
use crate::text::{render_sum, TermText};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidRingError {
    #[error("augmentation is {0}, not zero; element is not in the augmentation kernel")]
    NotInKernel(String),
    #[error("phi({coef}) and psi({elem}) do not commute in the target ring")]
    CommutationViolation { coef: String, elem: String },
}

/// A finite-support map from monoid elements to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoidRingElement<C, E: Ord> {
    terms: BTreeMap<E, C>,
}

impl<C, E: Ord> MonoidRingElement<C, E> {
    pub fn terms(&self) -> &BTreeMap<E, C> {
        &self.terms
    }

    /// `Supp(f)`.
    pub fn support(&self) -> impl Iterator<Item = &E> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, m: &E) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, &C)> {
        self.terms.iter()
    }
}

impl<C, E: Ord> Default for MonoidRingElement<C, E> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

/// `R[M]` for a coefficient ring `R` and a monoid `M`.
#[derive(Debug, Clone)]
pub struct MonoidRing<R, M> {
    ring: R,
    monoid: M,
}

pub type Elem<R, M> = MonoidRingElement<<R as Ring>::Elem, <M as Monoid>::Elem>;

impl<R: Ring, M: Monoid> MonoidRing<R, M> {
    pub fn new(ring: R, monoid: M) -> Self {
        Self { ring, monoid }
    }

    pub fn base(&self) -> &R {
        &self.ring
    }

    pub fn monoid(&self) -> &M {
        &self.monoid
    }

    /// Builds an element from `(m, a)` pairs, summing repeated monoid
    /// elements and dropping zero coefficients.
    pub fn from_terms<I>(&self, terms: I) -> Elem<R, M>
    where
        I: IntoIterator<Item = (M::Elem, R::Elem)>,
    {
        let mut acc: BTreeMap<M::Elem, R::Elem> = BTreeMap::new();
        for (m, a) in terms {
            accumulate(&self.ring, &mut acc, m, a);
        }
        self.canonical(acc)
    }

    fn canonical(&self, mut terms: BTreeMap<M::Elem, R::Elem>) -> Elem<R, M> {
        terms.retain(|_, c| !self.ring.is_zero(c));
        MonoidRingElement { terms }
    }

    /// `f(m)`, zero outside the support.
    pub fn coefficient(&self, f: &Elem<R, M>, m: &M::Elem) -> R::Elem {
        f.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// The canonical ring map `η: R → R[M]`, `a ↦ a·δ_e`.
    pub fn eta(&self, a: R::Elem) -> Elem<R, M> {
        self.from_terms([(self.monoid.identity(), a)])
    }

    /// `δ_m`, the indicator of `m`.
    pub fn delta(&self, m: M::Elem) -> Elem<R, M> {
        self.from_terms([(m, self.ring.one())])
    }

    /// `a·f` (coefficients multiplied on the left).
    pub fn scale(&self, a: &R::Elem, f: &Elem<R, M>) -> Elem<R, M> {
        self.canonical(
            f.terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.mul(a, c)))
                .collect(),
        )
    }

    /// The augmentation `f ↦ Σ_m f(m)`, a ring map `R[M] → R`.
    pub fn augmentation(&self, f: &Elem<R, M>) -> R::Elem {
        self.ring.sum(f.terms.values())
    }

    /// Writes an element of the augmentation kernel in the free basis
    /// `{δ_m − 1 : m ≠ e}`: the coefficient of `δ_m − 1` is `f(m)`.
    pub fn augmentation_kernel_decompose(
        &self,
        f: &Elem<R, M>,
    ) -> Result<Vec<(M::Elem, R::Elem)>, MonoidRingError> {
        let aug = self.augmentation(f);
        if !self.ring.is_zero(&aug) {
            return Err(MonoidRingError::NotInKernel(self.ring.format(&aug)));
        }
        let e = self.monoid.identity();
        let mut out: Vec<_> = f
            .terms
            .iter()
            .filter(|(m, _)| **m != e)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        out.sort_by_key(|(m, _)| self.monoid.stable_key(m));
        Ok(out)
    }

    /// Evaluates `θ(f) = Σ φ(f(m))·ψ(m)`. Each encountered pair
    /// `φ(f(m))`, `ψ(m)` is checked to commute.
    pub fn evaluate<S: Ring>(
        &self,
        f: &Elem<R, M>,
        ctx: &EvaluationContext<R, M, S>,
    ) -> Result<S::Elem, MonoidRingError> {
        let target = &ctx.target;
        let mut acc = target.zero();
        for (m, c) in &f.terms {
            let a = (ctx.phi)(c);
            let b = (ctx.psi)(m);
            if !target.eq(&target.mul(&a, &b), &target.mul(&b, &a)) {
                return Err(MonoidRingError::CommutationViolation {
                    coef: self.ring.format(c),
                    elem: self.monoid.format(m),
                });
            }
            acc = target.add(&acc, &target.mul(&a, &b));
        }
        Ok(acc)
    }

    /// Pushforward along a monoid homomorphism `h: M → N`:
    /// `Σ f(m)·δ_{h(m)}`, merging coefficients that land on the same element.
    pub fn map_monoid<N: Monoid>(
        &self,
        f: &Elem<R, M>,
        h: impl Fn(&M::Elem) -> N::Elem,
        target: &MonoidRing<R, N>,
    ) -> Elem<R, N> {
        target.from_terms(f.terms.iter().map(|(m, c)| (h(m), c.clone())))
    }

    /// Termwise image under a ring homomorphism `φ: R → R′`.
    pub fn map_coefficients<R2: Ring>(
        &self,
        f: &Elem<R, M>,
        phi: impl Fn(&R::Elem) -> R2::Elem,
        target: &MonoidRing<R2, M>,
    ) -> Elem<R2, M> {
        target.from_terms(f.terms.iter().map(|(m, c)| (m.clone(), phi(c))))
    }

    /// The function `m ↦ g(ψ(m))` restricted to the listed domain elements.
    ///
    /// This is only a support utility: `g ↦ g∘ψ` is not a ring map in
    /// general, and its full support may be infinite.
    pub fn pullback_on<N: Monoid>(
        &self,
        g: &Elem<R, N>,
        psi: impl Fn(&M::Elem) -> N::Elem,
        domain: &[M::Elem],
    ) -> Elem<R, M> {
        self.from_terms(
            domain
                .iter()
                .filter_map(|m| g.terms.get(&psi(m)).map(|c| (m.clone(), c.clone()))),
        )
    }

    /// Looks for `f·g ≠ g·f` among all ordered pairs of the samples.
    pub fn commutativity_witness(&self, samples: &[Elem<R, M>]) -> CommutativityReport<Elem<R, M>> {
        let mut checked = 0;
        let mut witness = None;
        'outer: for f in samples {
            for g in samples {
                checked += 1;
                if !self.eq(&self.mul(f, g), &self.mul(g, f)) {
                    witness = Some((f.clone(), g.clone()));
                    break 'outer;
                }
            }
        }
        CommutativityReport {
            ring_commutative: self.ring.is_commutative(),
            monoid_abelian: self.monoid.is_abelian(),
            pairs_checked: checked,
            witness,
        }
    }

    pub fn to_json(&self, f: &Elem<R, M>) -> Value {
        let mut terms: Vec<(String, Value)> = f
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    self.monoid.stable_key(m),
                    json!({"elem": self.monoid.elem_to_json(m), "coef": self.ring.elem_to_json(c)}),
                )
            })
            .collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        json!({
            "ring": self.ring.name(),
            "monoid": self.monoid.descriptor(),
            "terms": terms.into_iter().map(|(_, t)| t).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(&self, v: &Value) -> Result<Elem<R, M>, RingError> {
        let bad = |msg: &str| RingError::Decode(format!("{msg}: {v}"));
        if v.get("ring").and_then(Value::as_str) != Some(self.ring.name().as_str()) {
            return Err(bad("ring mismatch"));
        }
        if v.get("monoid") != Some(&self.monoid.descriptor()) {
            return Err(bad("monoid mismatch"));
        }
        let items = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut terms = Vec::with_capacity(items.len());
        for t in items {
            let m = self
                .monoid
                .elem_from_json(t.get("elem").ok_or_else(|| bad("missing elem"))?)
                .map_err(|e| RingError::Decode(e.to_string()))?;
            let c = self
                .ring
                .elem_from_json(t.get("coef").ok_or_else(|| bad("missing coef"))?)?;
            terms.push((m, c));
        }
        Ok(self.from_terms(terms))
    }
}

fn accumulate<R: Ring, K: Ord>(ring: &R, acc: &mut BTreeMap<K, R::Elem>, k: K, a: R::Elem) {
    use std::collections::btree_map::Entry;
    match acc.entry(k) {
        Entry::Vacant(slot) => {
            slot.insert(a);
        }
        Entry::Occupied(mut slot) => {
            let sum = ring.add(slot.get(), &a);
            *slot.get_mut() = sum;
        }
    }
}

/// Result of [`MonoidRing::commutativity_witness`].
#[derive(Debug, Clone)]
pub struct CommutativityReport<T> {
    pub ring_commutative: bool,
    pub monoid_abelian: bool,
    pub pairs_checked: usize,
    pub witness: Option<(T, T)>,
}

impl<T> CommutativityReport<T> {
    /// `R[M]` is commutative iff `R` is commutative and `M` is abelian.
    pub fn expected_commutative(&self) -> bool {
        self.ring_commutative && self.monoid_abelian
    }

    /// A witness was found exactly when one was expected (on these samples).
    pub fn consistent(&self) -> bool {
        !(self.expected_commutative() && self.witness.is_some())
    }
}

type CoefMap<R, S> = Arc<dyn Fn(&<R as Ring>::Elem) -> <S as Ring>::Elem + Send + Sync>;
type ElemMap<M, S> = Arc<dyn Fn(&<M as Monoid>::Elem) -> <S as Ring>::Elem + Send + Sync>;

/// Data of the universal property: a ring map `φ: R → S` and a monoid map
/// `ψ: M → (S, ·)` whose images commute.
///
/// The homomorphism laws are caller obligations; [`Self::verify`] spot-checks
/// them on samples, and [`MonoidRing::evaluate`] checks commutation on the
/// support it actually meets.
#[derive(Clone)]
pub struct EvaluationContext<R: Ring, M: Monoid, S: Ring> {
    pub target: S,
    pub phi: CoefMap<R, S>,
    pub psi: ElemMap<M, S>,
}

impl<R: Ring, M: Monoid, S: Ring> fmt::Debug for EvaluationContext<R, M, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EvaluationContext")
            .field("target", &self.target)
            .finish_non_exhaustive()
    }
}

impl<R: Ring, M: Monoid, S: Ring> EvaluationContext<R, M, S> {
    pub fn new(
        target: S,
        phi: impl Fn(&R::Elem) -> S::Elem + Send + Sync + 'static,
        psi: impl Fn(&M::Elem) -> S::Elem + Send + Sync + 'static,
    ) -> Self {
        Self {
            target,
            phi: Arc::new(phi),
            psi: Arc::new(psi),
        }
    }

    /// Spot-checks that `φ` is a ring map, `ψ` a monoid map, and that their
    /// images commute, on the given sample pairs.
    pub fn verify(
        &self,
        ring: &R,
        monoid: &M,
        coefs: &[(R::Elem, R::Elem)],
        elems: &[(M::Elem, M::Elem)],
    ) -> Report {
        let s = &self.target;
        let (phi, psi) = (&self.phi, &self.psi);
        let mut report = Report::new("evaluation context");
        report.record(
            "phi unital",
            (!s.eq(&phi(&ring.one()), &s.one())).then(|| "phi(1) != 1".into()),
        );
        report.record(
            "phi additive and multiplicative",
            coefs
                .iter()
                .find(|(a, b)| {
                    !s.eq(&phi(&ring.add(a, b)), &s.add(&phi(a), &phi(b)))
                        || !s.eq(&phi(&ring.mul(a, b)), &s.mul(&phi(a), &phi(b)))
                })
                .map(|(a, b)| format!("({}, {})", ring.format(a), ring.format(b))),
        );
        report.record(
            "psi unital",
            (!s.eq(&psi(&monoid.identity()), &s.one())).then(|| "psi(e) != 1".into()),
        );
        report.record(
            "psi multiplicative",
            elems
                .iter()
                .find(|(m, n)| !s.eq(&psi(&monoid.op(m, n)), &s.mul(&psi(m), &psi(n))))
                .map(|(m, n)| format!("({}, {})", monoid.format(m), monoid.format(n))),
        );
        let mut commute_failure = None;
        'outer: for (a, _) in coefs {
            for (m, _) in elems {
                let (x, y) = (phi(a), psi(m));
                if !s.eq(&s.mul(&x, &y), &s.mul(&y, &x)) {
                    commute_failure = Some(format!("({}, {})", ring.format(a), monoid.format(m)));
                    break 'outer;
                }
            }
        }
        report.record("phi and psi commute", commute_failure);
        report
    }
}

impl<R: Ring, M: Monoid, N: Monoid> MonoidRing<R, Product<M, N>> {
    /// The ring `(R[M])[N]`.
    pub fn nested(&self) -> MonoidRing<MonoidRing<R, M>, N> {
        MonoidRing::new(
            MonoidRing::new(self.ring.clone(), self.monoid.left.clone()),
            self.monoid.right.clone(),
        )
    }

    /// `R[M×N] → (R[M])[N]`: groups terms by their `N` component.
    pub fn curry(&self, f: &Elem<R, Product<M, N>>) -> Elem<MonoidRing<R, M>, N> {
        let mut groups: BTreeMap<N::Elem, BTreeMap<M::Elem, R::Elem>> = BTreeMap::new();
        for ((m, n), c) in &f.terms {
            groups
                .entry(n.clone())
                .or_default()
                .insert(m.clone(), c.clone());
        }
        MonoidRingElement {
            terms: groups
                .into_iter()
                .map(|(n, inner)| (n, MonoidRingElement { terms: inner }))
                .collect(),
        }
    }

    /// Inverse of [`Self::curry`].
    pub fn uncurry(&self, g: &Elem<MonoidRing<R, M>, N>) -> Elem<R, Product<M, N>> {
        self.from_terms(g.terms.iter().flat_map(|(n, inner)| {
            inner
                .terms
                .iter()
                .map(move |(m, c)| ((m.clone(), n.clone()), c.clone()))
        }))
    }
}

impl<R: Ring, M: Monoid> Ring for MonoidRing<R, M> {
    type Elem = Elem<R, M>;

    fn zero(&self) -> Self::Elem {
        MonoidRingElement::default()
    }

    fn one(&self) -> Self::Elem {
        self.eta(self.ring.one())
    }

    fn add(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        let mut acc = f.terms.clone();
        for (m, c) in &g.terms {
            accumulate(&self.ring, &mut acc, m.clone(), c.clone());
        }
        self.canonical(acc)
    }

    fn neg(&self, f: &Self::Elem) -> Self::Elem {
        MonoidRingElement {
            terms: f
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.neg(c)))
                .collect(),
        }
    }

    /// Convolution over `Supp(f) × Supp(g)`, each product formed as
    /// `f(m₁)·g(m₂)` in that order.
    fn mul(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        let mut acc = BTreeMap::new();
        for (m1, c1) in &f.terms {
            for (m2, c2) in &g.terms {
                let c = self.ring.mul(c1, c2);
                if self.ring.is_zero(&c) {
                    continue;
                }
                accumulate(&self.ring, &mut acc, self.monoid.op(m1, m2), c);
            }
        }
        self.canonical(acc)
    }

    fn eq(&self, f: &Self::Elem, g: &Self::Elem) -> bool {
        f.terms.len() == g.terms.len()
            && f
                .terms
                .iter()
                .zip(&g.terms)
                .all(|((m1, c1), (m2, c2))| m1 == m2 && self.ring.eq(c1, c2))
    }

    fn is_zero(&self, f: &Self::Elem) -> bool {
        f.terms.is_empty()
    }

    fn is_commutative(&self) -> bool {
        self.ring.is_commutative() && self.monoid.is_abelian()
    }

    fn characteristic(&self) -> BigUint {
        self.ring.characteristic()
    }

    /// Inverts `a·δ_m` for a unit `a` and an invertible `m`. Elements with
    /// two or more terms are reported as unsupported rather than guessed.
    fn try_invert(&self, f: &Self::Elem) -> Result<Self::Elem, RingError> {
        match f.terms.len() {
            0 => Err(RingError::NotAUnit("0".into())),
            1 => {
                let (m, c) = f.terms.iter().next().unwrap();
                let m_inv = self
                    .monoid
                    .try_inverse(m)
                    .ok_or_else(|| RingError::NotAUnit(self.format(f)))?;
                let c_inv = self
                    .ring
                    .try_invert(c)
                    .map_err(|_| RingError::NotAUnit(self.format(f)))?;
                Ok(self.from_terms([(m_inv, c_inv)]))
            }
            _ => Err(RingError::Unsupported(format!(
                "inverting the multi-term element {}",
                self.format(f)
            ))),
        }
    }

    fn from_integer(&self, n: &BigInt) -> Self::Elem {
        self.eta(self.ring.from_integer(n))
    }

    fn has_rational_scalars(&self) -> bool {
        self.ring.has_rational_scalars()
    }

    fn name(&self) -> String {
        format!("{}[{}]", self.ring.name(), self.monoid.descriptor())
    }

    fn format(&self, f: &Self::Elem) -> String {
        let e = self.monoid.identity();
        let mut terms: Vec<_> = f.terms.iter().collect();
        terms.sort_by(|a, b| self.monoid.print_cmp(a.0, b.0));
        render_sum(terms.into_iter().map(|(m, c)| TermText {
            coef: self.ring.format(c),
            monomial: (*m != e).then(|| self.monoid.format(m)),
        }))
    }

    fn elem_to_json(&self, f: &Self::Elem) -> Value {
        self.to_json(f)
    }

    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, RingError> {
        self.from_json(v)
    }
}
