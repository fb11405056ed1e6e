use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Open set of the natural numbers with the finite-complement topology.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CofiniteSet {
    Empty,
    /// The natural numbers minus a finite set.
    Excl(BTreeSet<u64>),
}

impl CofiniteSet {
    pub fn ground() -> Self {
        CofiniteSet::Excl(BTreeSet::new())
    }

    pub fn excluding(points: impl IntoIterator<Item = u64>) -> Self {
        CofiniteSet::Excl(points.into_iter().collect())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CofiniteSet::Empty)
    }

    pub fn contains(&self, n: u64) -> bool {
        match self {
            CofiniteSet::Empty => false,
            CofiniteSet::Excl(ex) => !ex.contains(&n),
        }
    }

    pub fn excluded(&self) -> Option<&BTreeSet<u64>> {
        match self {
            CofiniteSet::Empty => None,
            CofiniteSet::Excl(ex) => Some(ex),
        }
    }

    pub fn meet(&self, other: &CofiniteSet) -> CofiniteSet {
        match (self, other) {
            (CofiniteSet::Excl(a), CofiniteSet::Excl(b)) => CofiniteSet::Excl(a | b),
            _ => CofiniteSet::Empty,
        }
    }

    /// Smallest member, if any.
    pub fn first_member(&self) -> Option<u64> {
        let ex = self.excluded()?;
        (0..).find(|n| !ex.contains(n))
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CofiniteSet::Empty => f.write_str("cofinite-empty"),
            CofiniteSet::Excl(ex) => {
                let items: Vec<String> = ex.iter().map(u64::to_string).collect();
                write!(f, "cofinite-excl{{{}}}", items.join(","))
            }
        }
    }
}

impl FromStr for CofiniteSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "cofinite-empty" {
            return Ok(CofiniteSet::Empty);
        }
        let inner = t
            .strip_prefix("cofinite-excl{")
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::parse(s, "expected `cofinite-excl{...}` or `cofinite-empty`"))?;
        if inner.trim().is_empty() {
            return Ok(CofiniteSet::ground());
        }
        inner
            .split(',')
            .map(|x| x.trim().parse::<u64>().map_err(|_| Error::parse(s, "excluded points are naturals")))
            .collect::<Result<BTreeSet<_>>>()
            .map(CofiniteSet::Excl)
    }
}

impl Serialize for CofiniteSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CofiniteSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
