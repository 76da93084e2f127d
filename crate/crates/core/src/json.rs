//! Lossless JSON codecs for exact numbers.
//!
//! Integers are written as JSON numbers of arbitrary length (serde_json is
//! built with `arbitrary_precision`) and read from either numbers or decimal
//! strings. Rationals are written as `"p/q"` strings, or `"p"` when integral.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigIntJson(pub BigInt);

impl Serialize for BigIntJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match serde_json::Number::from_str(&self.0.to_string()) {
            Ok(n) => n.serialize(s),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for BigIntJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => parse_int(&n.to_string()).map_err(de::Error::custom),
            serde_json::Value::String(s) => parse_int(&s).map_err(de::Error::custom),
            other => Err(de::Error::custom(format!(
                "expected an integer, got {other}"
            ))),
        }
        .map(BigIntJson)
    }
}

pub fn parse_int(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s.trim()).map_err(|_| format!("not an integer: {s:?}"))
}

/// Parses `"p/q"`, `"p"` or a decimal integer into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q == BigInt::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalJson(pub BigRational);

impl Serialize for RationalJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RationalJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => parse_rational(&n.to_string()),
            serde_json::Value::String(s) => parse_rational(&s),
            other => Err(format!("expected a rational \"p/q\", got {other}")),
        }
        .map(RationalJson)
        .map_err(de::Error::custom)
    }
}

pub(crate) mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        BigIntJson(x.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        BigIntJson::deserialize(d).map(|x| x.0)
    }
}

pub(crate) mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(x.iter().map(|v| BigIntJson(v.clone())))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<BigIntJson>::deserialize(d).map(|v| v.into_iter().map(|x| x.0).collect())
    }
}

pub(crate) mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        RationalJson::deserialize(d).map(|x| x.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_integers_survive() {
        let x = BigInt::from_str("123456789012345678901234567890").unwrap();
        let text = serde_json::to_string(&BigIntJson(x.clone())).unwrap();
        assert_eq!(text, "123456789012345678901234567890");
        let back: BigIntJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.0, x);
        let quoted: BigIntJson = serde_json::from_str("\"-7\"").unwrap();
        assert_eq!(quoted.0, BigInt::from(-7));
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("6/4").unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(
            parse_rational(" -2 ").unwrap(),
            BigRational::from_integer((-2).into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
        let r: RationalJson = serde_json::from_str("\"-1/2\"").unwrap();
        assert_eq!(format_rational(&r.0), "-1/2");
        let r: RationalJson = serde_json::from_str("3").unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), "\"3\"");
    }
}
