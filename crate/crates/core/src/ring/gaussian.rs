use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{format_rational, parse_rational, Ring, RingError};

/// `re + im·i` with `i² = −1`, both parts exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    /// The square root of −1.
    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

/// The field ℚ(i).
#[derive(Debug, Clone, Copy, Default)]
pub struct GaussianRationals;

fn imag_text(im: &BigRational) -> String {
    if im.is_one() {
        "i".into()
    } else {
        format!("{}*i", format_rational(im))
    }
}

impl Ring for GaussianRationals {
    type Elem = GaussianRational;

    fn zero(&self) -> GaussianRational {
        GaussianRational::real(BigRational::zero())
    }

    fn one(&self) -> GaussianRational {
        GaussianRational::real(BigRational::one())
    }

    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&a.re + &b.re, &a.im + &b.im)
    }

    fn neg(&self, a: &GaussianRational) -> GaussianRational {
        GaussianRational::new(-&a.re, -&a.im)
    }

    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &a.re * &b.re - &a.im * &b.im,
            &a.re * &b.im + &a.im * &b.re,
        )
    }

    fn eq(&self, a: &GaussianRational, b: &GaussianRational) -> bool {
        a == b
    }

    fn is_zero(&self, a: &GaussianRational) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn characteristic(&self) -> BigUint {
        BigUint::zero()
    }

    fn try_invert(&self, a: &GaussianRational) -> Result<GaussianRational, RingError> {
        let n = a.norm();
        if n.is_zero() {
            return Err(RingError::NotAUnit("0".into()));
        }
        Ok(GaussianRational::new(&a.re / &n, -&a.im / &n))
    }

    fn from_integer(&self, n: &BigInt) -> GaussianRational {
        GaussianRational::real(BigRational::from_integer(n.clone()))
    }

    fn from_rational(&self, q: &BigRational) -> Result<GaussianRational, RingError> {
        Ok(GaussianRational::real(q.clone()))
    }

    fn has_rational_scalars(&self) -> bool {
        true
    }

    fn name(&self) -> String {
        "gauss".into()
    }

    fn format(&self, a: &GaussianRational) -> String {
        match (a.re.is_zero(), a.im.is_zero()) {
            (_, true) => format_rational(&a.re),
            (true, false) if a.im.is_negative() => format!("-{}", imag_text(&-&a.im)),
            (true, false) => imag_text(&a.im),
            (false, false) if a.im.is_negative() => {
                format!("{} - {}", format_rational(&a.re), imag_text(&-&a.im))
            }
            (false, false) => format!("{} + {}", format_rational(&a.re), imag_text(&a.im)),
        }
    }

    fn elem_to_json(&self, a: &GaussianRational) -> Value {
        json!({
            "re": format!("{}/{}", a.re.numer(), a.re.denom()),
            "im": format!("{}/{}", a.im.numer(), a.im.denom()),
        })
    }

    fn elem_from_json(&self, v: &Value) -> Result<GaussianRational, RingError> {
        let part = |key: &str| -> Result<BigRational, RingError> {
            match v.get(key) {
                Some(Value::String(s)) => parse_rational(s),
                _ => Err(RingError::Decode(format!("missing {key:?} in {v}"))),
            }
        };
        Ok(GaussianRational::new(part("re")?, part("im")?))
    }
}
