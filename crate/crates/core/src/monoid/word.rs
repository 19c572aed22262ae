use std::fmt;

use serde_json::{json, Value};

use super::{Monoid, MonoidError};

/// A word over single-character symbols; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(String);

impl Word {
    pub fn new(symbols: impl Into<String>) -> Self {
        Self(symbols.into())
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.chars().count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut s = String::with_capacity(self.0.len() + other.0.len());
        s.push_str(&self.0);
        s.push_str(&other.0);
        Self(s)
    }
}

/// `xxy` prints as `x^2*y`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let chars: Vec<char> = self.0.chars().collect();
        let mut i = 0;
        let mut first = true;
        while i < chars.len() {
            let mut j = i;
            while j < chars.len() && chars[j] == chars[i] {
                j += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match j - i {
                1 => write!(f, "{}", chars[i])?,
                n => write!(f, "{}^{n}", chars[i])?,
            }
            i = j;
        }
        Ok(())
    }
}

/// The free monoid on characters under concatenation. Not abelian.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FreeMonoid;

impl Monoid for FreeMonoid {
    type Elem = Word;

    fn identity(&self) -> Word {
        Word::empty()
    }

    fn op(&self, a: &Word, b: &Word) -> Word {
        a.concat(b)
    }

    fn is_abelian(&self) -> bool {
        false
    }

    fn descriptor(&self) -> Value {
        json!("words")
    }

    fn elem_to_json(&self, a: &Word) -> Value {
        Value::String(a.0.clone())
    }

    fn elem_from_json(&self, v: &Value) -> Result<Word, MonoidError> {
        v.as_str()
            .map(Word::new)
            .ok_or_else(|| MonoidError::Decode(format!("expected word string, got {v}")))
    }

    fn format(&self, a: &Word) -> String {
        a.to_string()
    }

    fn print_cmp(&self, a: &Word, b: &Word) -> std::cmp::Ordering {
        a.len().cmp(&b.len()).then_with(|| a.cmp(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::noncommuting_pair;

    #[test]
    fn concatenation() {
        let m = FreeMonoid;
        assert_eq!(m.op(&Word::new("ab"), &Word::new("ba")), Word::new("abba"));
        assert_eq!(m.op(&Word::empty(), &Word::new("ab")), Word::new("ab"));
    }

    #[test]
    fn not_abelian_with_witness() {
        let m = FreeMonoid;
        assert!(!m.is_abelian());
        let pair = noncommuting_pair(&m, &[(Word::new("x"), Word::new("x")), (Word::new("x"), Word::new("y"))]);
        assert_eq!(pair, Some((Word::new("x"), Word::new("y"))));
    }

    #[test]
    fn run_length_text() {
        assert_eq!(Word::new("xxyx").to_string(), "x^2*y*x");
        assert_eq!(Word::empty().to_string(), "1");
    }
}
