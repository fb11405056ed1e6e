use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number. Always in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Builds `num/den` in lowest terms. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::parse(s, "expected a rational `p` or `p/q`");
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::parse(s, "zero denominator"));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// Midpoint of two rationals.
pub fn midpoint(a: &Rat, b: &Rat) -> Rat {
    (a + b) / int(2)
}

/// A rational extended with the two infinities.
///
/// The derived order follows the variant order, so `NegInf < Fin(_) < PosInf`
/// and finite values compare numerically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRat {
    NegInf,
    Fin(Rat),
    PosInf,
}

impl ExtRat {
    pub fn fin(r: Rat) -> Self {
        ExtRat::Fin(r)
    }

    pub fn from_int(n: i64) -> Self {
        ExtRat::Fin(int(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Fin(_))
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Fin(r) => Some(r),
            _ => None,
        }
    }

    /// Adds a finite shift; infinities absorb it.
    pub fn shift(&self, by: &Rat) -> Self {
        match self {
            ExtRat::Fin(r) => ExtRat::Fin(r + by),
            other => other.clone(),
        }
    }

    /// `2c - self`, swapping the infinities.
    pub fn reflect(&self, center: &Rat) -> Self {
        match self {
            ExtRat::NegInf => ExtRat::PosInf,
            ExtRat::PosInf => ExtRat::NegInf,
            ExtRat::Fin(r) => ExtRat::Fin(center * int(2) - r),
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Fin(r)
    }
}

impl From<&Rat> for ExtRat {
    fn from(r: &Rat) -> Self {
        ExtRat::Fin(r.clone())
    }
}

impl PartialEq<Rat> for ExtRat {
    fn eq(&self, other: &Rat) -> bool {
        matches!(self, ExtRat::Fin(r) if r == other)
    }
}

impl PartialOrd<Rat> for ExtRat {
    fn partial_cmp(&self, other: &Rat) -> Option<std::cmp::Ordering> {
        Some(match self {
            ExtRat::NegInf => std::cmp::Ordering::Less,
            ExtRat::PosInf => std::cmp::Ordering::Greater,
            ExtRat::Fin(r) => r.cmp(other),
        })
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::NegInf => f.write_str("-inf"),
            ExtRat::PosInf => f.write_str("inf"),
            ExtRat::Fin(r) => f.write_str(&fmt_rat(r)),
        }
    }
}

impl FromStr for ExtRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" | "-∞" => Ok(ExtRat::NegInf),
            "inf" | "+inf" | "∞" | "+∞" => Ok(ExtRat::PosInf),
            other => parse_rat(other).map(ExtRat::Fin),
        }
    }
}

/// A finite representative strictly inside `(lo, hi)`, preferring the midpoint.
pub(crate) fn inner_point(lo: &ExtRat, hi: &ExtRat) -> Option<Rat> {
    if lo >= hi {
        return None;
    }
    Some(match (lo, hi) {
        (ExtRat::Fin(a), ExtRat::Fin(b)) => midpoint(a, b),
        (ExtRat::Fin(a), ExtRat::PosInf) => a + int(1),
        (ExtRat::NegInf, ExtRat::Fin(b)) => b - int(1),
        (ExtRat::NegInf, ExtRat::PosInf) => Rat::zero(),
        _ => unreachable!("lo < hi rules out the remaining shapes"),
    })
}

/// Absolute difference of two rationals.
pub fn dist(a: &Rat, b: &Rat) -> Rat {
    (a - b).abs()
}

/// Serde adapter writing rationals in the `p/q` text form.
pub mod rat_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{fmt_rat, parse_rat, Rat};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        parse_rat(&String::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_places_infinities_at_the_ends() {
        let xs = [ExtRat::PosInf, ExtRat::from_int(3), ExtRat::NegInf, ExtRat::Fin(rat(-7, 3))];
        let mut sorted = xs.to_vec();
        sorted.sort();
        assert_eq!(
            sorted,
            vec![ExtRat::NegInf, ExtRat::Fin(rat(-7, 3)), ExtRat::from_int(3), ExtRat::PosInf]
        );
    }

    #[test]
    fn lowest_terms_and_printing() {
        assert_eq!(fmt_rat(&rat(2, 4)), "1/2");
        assert_eq!(fmt_rat(&rat(4, -2)), "-2");
        assert_eq!(ExtRat::Fin(rat(6, 3)).to_string(), "2");
        assert_eq!(rat(3, -6).denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-5", "7/3", "-1/2", "inf", "-inf"] {
            let v: ExtRat = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("1/0".parse::<ExtRat>().is_err());
        assert!("x".parse::<ExtRat>().is_err());
    }
}
