use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use super::{Monoid, MonoidError};

/// A finitely supported exponent vector `(s_i)_{i∈I}`.
///
/// Entries are sorted by variable name and never hold a zero exponent, so
/// structural equality is mathematical equality. Variables not listed have
/// exponent zero; the index set itself is never enumerated.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    entries: Vec<(String, BigUint)>,
}

impl ExponentVector {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The basis vector `ε_i`.
    pub fn var(name: impl Into<String>) -> Self {
        Self {
            entries: vec![(name.into(), BigUint::from(1u32))],
        }
    }

    /// Builds a vector from `(variable, exponent)` pairs; repeated variables
    /// are summed and zero exponents dropped.
    pub fn from_pairs<S, E, I>(pairs: I) -> Self
    where
        S: Into<String>,
        E: Into<BigUint>,
        I: IntoIterator<Item = (S, E)>,
    {
        let mut entries: Vec<(String, BigUint)> = pairs
            .into_iter()
            .map(|(v, e)| (v.into(), e.into()))
            .collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(String, BigUint)> = Vec::with_capacity(entries.len());
        for (v, e) in entries {
            match out.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|(_, e)| !e.is_zero());
        Self { entries: out }
    }

    /// Dense form over a sorted list of variables. Returns `None` when the
    /// vector mentions a variable outside `vars` or an exponent beyond `u64`.
    pub fn to_dense(&self, vars: &[String]) -> Option<Vec<u64>> {
        let mut dense = vec![0u64; vars.len()];
        for (v, e) in &self.entries {
            let pos = vars.iter().position(|x| x == v)?;
            dense[pos] = e.to_u64()?;
        }
        Some(dense)
    }

    pub fn from_dense(vars: &[String], exps: &[u64]) -> Self {
        Self::from_pairs(vars.iter().cloned().zip(exps.iter().copied()))
    }

    pub fn entries(&self) -> &[(String, BigUint)] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn exponent(&self, var: &str) -> BigUint {
        self.entries
            .iter()
            .find(|(v, _)| v == var)
            .map(|(_, e)| e.clone())
            .unwrap_or_default()
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(v, _)| v.as_str())
    }

    /// `m = Σ s_i ε_i` as a list of `(i, s_i)`, sorted by variable.
    pub fn decompose(&self) -> Vec<(String, BigUint)> {
        self.entries.clone()
    }

    pub fn total_degree(&self) -> BigUint {
        self.entries.iter().map(|(_, e)| e).sum()
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), &a[i].1 + &b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self { entries: out }
    }

    /// `self − other` when `other ≤ self` componentwise.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut out = self.entries.clone();
        for (v, e) in &other.entries {
            let slot = out.iter_mut().find(|(x, _)| x == v)?;
            if slot.1 < *e {
                return None;
            }
            slot.1 -= e;
        }
        out.retain(|(_, e)| !e.is_zero());
        Some(Self { entries: out })
    }

    /// Graded-lexicographic comparison: lower total degree first, then, scanning
    /// variables in name order, the larger exponent first.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| lex_larger_first(&self.entries, &other.entries))
    }
}

fn lex_larger_first(a: &[(String, BigUint)], b: &[(String, BigUint)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            // A variable present only on one side has exponent zero on the other.
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
                Ordering::Equal => match eb.cmp(ea) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord,
                },
            },
        }
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == BigUint::from(1u32) {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// The monoid of finitely supported exponent vectors under addition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExponentMonoid;

impl Monoid for ExponentMonoid {
    type Elem = ExponentVector;

    fn identity(&self) -> ExponentVector {
        ExponentVector::identity()
    }

    fn op(&self, a: &ExponentVector, b: &ExponentVector) -> ExponentVector {
        a.add(b)
    }

    fn is_abelian(&self) -> bool {
        true
    }

    fn descriptor(&self) -> Value {
        json!("exponents")
    }

    fn elem_to_json(&self, a: &ExponentVector) -> Value {
        Value::Array(
            a.entries
                .iter()
                .map(|(v, e)| {
                    let exp = match e.to_u64() {
                        Some(n) => json!(n),
                        None => json!(e.to_string()),
                    };
                    json!({"var": v, "exp": exp})
                })
                .collect(),
        )
    }

    fn elem_from_json(&self, v: &Value) -> Result<ExponentVector, MonoidError> {
        let bad = || MonoidError::Decode(format!("not an exponent vector: {v}"));
        let items = v.as_array().ok_or_else(bad)?;
        let mut pairs = Vec::with_capacity(items.len());
        for item in items {
            let var = item.get("var").and_then(Value::as_str).ok_or_else(bad)?;
            let exp = match item.get("exp") {
                Some(Value::Number(n)) => BigUint::from(n.as_u64().ok_or_else(bad)?),
                Some(Value::String(s)) => s.parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            };
            if exp.is_zero() {
                return Err(bad());
            }
            pairs.push((var.to_string(), exp));
        }
        let out = ExponentVector::from_pairs(pairs);
        // Canonical input only: sorted, no repeats.
        if out.entries.len() != items.len() {
            return Err(bad());
        }
        Ok(out)
    }

    fn format(&self, a: &ExponentVector) -> String {
        a.to_string()
    }

    fn print_cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        a.grlex_cmp(b)
    }
}
