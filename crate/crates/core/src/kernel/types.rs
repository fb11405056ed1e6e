use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::feather::{FeatherInterval, FeatherPoint, Skeleton};
use crate::multiline::branching::{BranchInterval, BranchPoint};
use crate::multiline::{MultiLinePoint, SpaceSpec, Wave};
use crate::numeric::{fmt_rat, rat_serde, Approach, CofiniteSet, Rat};

/// The spaces the kernel knows how to decide things about.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Feather,
    Multi(SpaceSpec),
    Branching,
    /// The naturals with the finite complement topology.
    Cofinite,
}

impl Space {
    pub fn doubled() -> Self {
        Space::Multi(SpaceSpec::doubled())
    }

    pub fn line() -> Self {
        Space::Multi(SpaceSpec::line())
    }

    pub fn two_origins() -> Self {
        Space::Multi(SpaceSpec::two_origins())
    }

    pub fn spec(&self) -> Result<&SpaceSpec> {
        match self {
            Space::Multi(s) => Ok(s),
            _ => Err(Error::TagMismatch(format!("{self} is not a multiline"))),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Feather => f.write_str("F"),
            Space::Multi(s) if *s == SpaceSpec::two_origins() => f.write_str("two-origins"),
            Space::Multi(s) => write!(f, "{s}"),
            Space::Branching => f.write_str("branching"),
            Space::Cofinite => f.write_str("cofinite"),
        }
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "F" | "feather" => Space::Feather,
            "D" | "doubled" => Space::doubled(),
            "line" => Space::line(),
            "two-origins" => Space::two_origins(),
            "branching" => Space::Branching,
            "cofinite" => Space::Cofinite,
            other => match other.strip_prefix('D').and_then(|k| k.parse::<u32>().ok()) {
                Some(k) if k >= 1 => Space::Multi(SpaceSpec::fold(k)),
                _ => return Err(Error::parse(s, "unknown space")),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Feather(FeatherPoint),
    Multi(MultiLinePoint),
    Branch(BranchPoint),
    Cofinite(u64),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Feather(p) => p.fmt(f),
            Point::Multi(p) => p.fmt(f),
            Point::Branch(p) => p.fmt(f),
            Point::Cofinite(n) => write!(f, "N({n})"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with("F(") {
            Ok(Point::Feather(t.parse()?))
        } else if t.starts_with("D(") {
            Ok(Point::Multi(t.parse()?))
        } else if t.starts_with("B(") {
            Ok(Point::Branch(t.parse()?))
        } else if let Some(n) = t.strip_prefix("N(").and_then(|r| r.strip_suffix(')')) {
            n.trim()
                .parse()
                .map(Point::Cofinite)
                .map_err(|_| Error::parse(s, "expected a natural number"))
        } else {
            Err(Error::parse(s, "expected F(..), D(..), B(..) or N(..)"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasicOpen {
    Feather(FeatherInterval),
    Wave(Wave),
    Branch(BranchInterval),
    Cofinite(CofiniteSet),
}

impl fmt::Display for BasicOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicOpen::Feather(b) => b.fmt(f),
            BasicOpen::Wave(b) => b.fmt(f),
            BasicOpen::Branch(b) => b.fmt(f),
            BasicOpen::Cofinite(b) => b.fmt(f),
        }
    }
}

impl FromStr for BasicOpen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with("FI[") {
            Ok(BasicOpen::Feather(t.parse()?))
        } else if t.starts_with("W[") {
            Ok(BasicOpen::Wave(t.parse()?))
        } else if t.starts_with("BI[") {
            Ok(BasicOpen::Branch(t.parse()?))
        } else if t.starts_with("cofinite") {
            Ok(BasicOpen::Cofinite(t.parse()?))
        } else {
            Err(Error::parse(s, "expected FI[..], W[..], BI[..] or cofinite-.."))
        }
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(Space);
string_serde!(Point);
string_serde!(BasicOpen);

/// An open set: a finite union of basics, or a flip image of the strict
/// skeleton of the feather.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OpenSet {
    Basics(Vec<BasicOpen>),
    Skeleton(Skeleton),
}

impl OpenSet {
    pub fn basic(b: BasicOpen) -> Self {
        OpenSet::Basics(vec![b])
    }

    pub fn empty() -> Self {
        OpenSet::Basics(Vec::new())
    }
}

impl From<BasicOpen> for OpenSet {
    fn from(b: BasicOpen) -> Self {
        OpenSet::basic(b)
    }
}

impl fmt::Display for OpenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpenSet::Basics(bs) if bs.is_empty() => f.write_str("empty"),
            OpenSet::Basics(bs) => {
                let parts: Vec<String> = bs.iter().map(BasicOpen::to_string).collect();
                f.write_str(&parts.join(" u "))
            }
            OpenSet::Skeleton(s) => {
                let word: Vec<String> = s.word.iter().map(FeatherPoint::to_string).collect();
                write!(f, "skeleton[{}]", word.join(", "))
            }
        }
    }
}

/// The sequence whose moving coordinate (the last feather coordinate, or the
/// abscissa) runs through `limit ∓ 1/m` while the rest of `base` is kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeqDescriptor {
    pub base: Point,
    #[serde(with = "rat_serde")]
    pub limit: Rat,
    pub side: Approach,
}

impl SeqDescriptor {
    pub fn new(base: Point, limit: Rat, side: Approach) -> Self {
        SeqDescriptor { base, limit, side }
    }

    /// The sequence inside the feather with the given fixed prefix.
    pub fn feather(prefix: &[Rat], limit: Rat, side: Approach) -> Result<Self> {
        let mut seq = prefix.to_vec();
        seq.push(prefix.last().cloned().unwrap_or_else(|| limit.clone()).max(limit.clone()));
        Ok(SeqDescriptor::new(Point::Feather(FeatherPoint::new(seq)?), limit, side))
    }

    /// The `m`-th term, when it is a valid point.
    pub fn term(&self, m: u64) -> Result<Point> {
        let step = Rat::new(1.into(), m.max(1).into());
        let v = match self.side {
            Approach::FromBelow => &self.limit - step,
            Approach::FromAbove => &self.limit + step,
        };
        Ok(match &self.base {
            Point::Feather(p) => {
                let mut seq = p.prefix().to_vec();
                seq.push(v);
                Point::Feather(FeatherPoint::new(seq)?)
            }
            Point::Multi(p) => Point::Multi(MultiLinePoint::new(v, p.level)),
            Point::Branch(p) => Point::Branch(BranchPoint::new(v, p.side())),
            Point::Cofinite(_) => return Err(Error::Inapplicable("sequences on the cofinite space".into())),
        })
    }
}

impl fmt::Display for SeqDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Approach::FromBelow => "from below",
            Approach::FromAbove => "from above",
        };
        write!(f, "seq[{} -> {} {side}]", self.base, fmt_rat(&self.limit))
    }
}
