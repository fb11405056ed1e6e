use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{fmt_rat, int, parse_rat, FinSet, Rat};

/// Which abscissae carry the upper levels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Doubling {
    All,
    Only(FinSet),
}

/// A k-fold line: `k` copies of the line glued everywhere except over the
/// doubling domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceSpec {
    pub k: u32,
    pub doubling: Doubling,
}

impl SpaceSpec {
    pub fn new(k: u32, doubling: Doubling) -> Result<Self> {
        if k == 0 {
            return Err(Error::pre("a multiline needs at least one level"));
        }
        Ok(SpaceSpec { k, doubling })
    }

    pub fn line() -> Self {
        SpaceSpec { k: 1, doubling: Doubling::All }
    }

    pub fn doubled() -> Self {
        SpaceSpec { k: 2, doubling: Doubling::All }
    }

    pub fn fold(k: u32) -> Self {
        SpaceSpec { k: k.max(1), doubling: Doubling::All }
    }

    pub fn two_origins() -> Self {
        SpaceSpec {
            k: 2,
            doubling: Doubling::Only(FinSet::from_iter([int(0)])),
        }
    }

    pub fn is_doubled(&self, x: &Rat) -> bool {
        self.k > 1
            && match &self.doubling {
                Doubling::All => true,
                Doubling::Only(d) => d.contains(x),
            }
    }

    /// Number of levels over `x`.
    pub fn levels_at(&self, x: &Rat) -> u32 {
        if self.is_doubled(x) {
            self.k
        } else {
            1
        }
    }

    pub fn check(&self, p: &MultiLinePoint) -> Result<()> {
        if p.level < self.levels_at(&p.x) {
            Ok(())
        } else {
            Err(Error::InvalidPoint(format!("{p} is not a point of {self}")))
        }
    }

    /// The doubling domain is carried onto itself by `f`.
    pub fn preserves_domain(&self, f: impl Fn(&Rat) -> Rat) -> bool {
        match &self.doubling {
            Doubling::All => true,
            Doubling::Only(d) => FinSet::from_iter(d.iter().map(f)) == *d,
        }
    }

    /// Finitely many doubled abscissae, or `None` for all of them.
    pub fn doubled_set(&self) -> Option<&FinSet> {
        match &self.doubling {
            Doubling::All => None,
            Doubling::Only(d) => Some(d),
        }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.doubling {
            Doubling::All if self.k == 1 => f.write_str("line"),
            Doubling::All => write!(f, "D{}", self.k),
            Doubling::Only(d) => write!(f, "D{} over {d}", self.k),
        }
    }
}

/// A point `(x, level)` of a multiline. Level 0 is down.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiLinePoint {
    pub x: Rat,
    pub level: u32,
}

impl MultiLinePoint {
    pub fn new(x: Rat, level: u32) -> Self {
        MultiLinePoint { x, level }
    }

    pub fn down(x: Rat) -> Self {
        MultiLinePoint { x, level: 0 }
    }

    pub fn is_up(&self) -> bool {
        self.level > 0
    }
}

impl fmt::Display for MultiLinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({} @{})", fmt_rat(&self.x), self.level)
    }
}

impl FromStr for MultiLinePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("D(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, "expected `D(x @level)`"))?;
        let (x, level) = match body.split_once('@') {
            Some((x, l)) => (
                x,
                l.trim().parse().map_err(|_| Error::parse(s, "level must be a natural number"))?,
            ),
            None => (body, 0),
        };
        Ok(MultiLinePoint { x: parse_rat(x)?, level })
    }
}

impl Serialize for MultiLinePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MultiLinePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
