//! Rational scalars and their string form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational. `BigRational` keeps the denominator positive
/// and the fraction reduced after every operation.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d` as an exact scalar. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn third() -> Scalar {
    rat(1, 3)
}

/// Parses `"7"`, `"-2/3"` or `" 4 / 6 "`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator: {s:?}")));
            }
            Ok(Scalar::new(n, d))
        }
        None => Ok(Scalar::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Scales a rational vector to coprime integers with a positive leading
/// nonzero entry. `None` for the zero vector.
pub fn canonical_ints(v: &[Scalar]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    canonical_bigints(ints)
}

pub fn canonical_bigints(mut v: Vec<BigInt>) -> Option<Vec<BigInt>> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.sign() == num_bigint::Sign::Minus);
    for x in v.iter_mut() {
        *x = &*x / &g;
        if lead_negative {
            *x = -&*x;
        }
    }
    Some(v)
}

pub(crate) mod serde_triple {
    use super::*;
    use serde::{de, ser::SerializeTuple, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Scalar; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(3)?;
        for x in v {
            t.serialize_element(&format_scalar(x))?;
        }
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<[Scalar; 3], D::Error> {
        let raw = <[String; 3]>::deserialize(d)?;
        let mut out = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
        for (o, s) in out.iter_mut().zip(raw.iter()) {
            *o = parse_scalar(s).map_err(de::Error::custom)?;
        }
        Ok(out)
    }
}
