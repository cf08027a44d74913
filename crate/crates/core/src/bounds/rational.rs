//! Exact rationals and their JSON form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Arbitrary-precision rational in canonical form.
pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Nearest `f64`, for display only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `⌊r⌋` for a nonnegative rational.
pub fn floor_usize(r: &Rational) -> usize {
    r.floor().to_integer().to_usize().unwrap_or(0)
}

/// Wire form `{"num": .., "den": .., "decimal": ..}`. Integers that do not
/// fit in an `i64` are written as decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RationalJson {
    pub num: serde_json::Value,
    pub den: serde_json::Value,
    pub decimal: f64,
}

fn int_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => x.into(),
        None => v.to_string().into(),
    }
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        Self {
            num: int_json(r.numer()),
            den: int_json(r.denom()),
            decimal: to_f64(r),
        }
    }
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    RationalJson::from(r).serialize(s)
}

pub fn serialize_opt<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    r.as_ref().map(RationalJson::from).serialize(s)
}

/// Canonical text `num/den`, or just `num` for integers.
pub fn display(r: &Rational) -> String {
    if r.denom().is_zero() || r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
