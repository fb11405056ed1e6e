use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::point::{MultiLinePoint, SpaceSpec};
use crate::error::{Error, Result};
use crate::numeric::{fmt_rat, parse_rat, ExtRat, FinSet, IntervalSet, Rat};

/// Basic open of a multiline: the open set `o` downstairs, except that each
/// abscissa in `lift` is replaced by its point on the assigned upper level.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Wave {
    o: IntervalSet,
    lift: BTreeMap<Rat, u32>,
}

impl Wave {
    pub fn new(o: IntervalSet, lift: BTreeMap<Rat, u32>) -> Result<Self> {
        for (x, l) in &lift {
            if !o.contains(x) {
                return Err(Error::pre(format!("lifted abscissa {} lies outside {o}", fmt_rat(x))));
            }
            if *l == 0 {
                return Err(Error::pre("lifts go to levels >= 1"));
            }
        }
        Ok(Wave { o, lift })
    }

    pub fn plain(o: IntervalSet) -> Self {
        Wave { o, lift: BTreeMap::new() }
    }

    pub fn full() -> Self {
        Wave::plain(IntervalSet::full())
    }

    pub fn interval(lo: impl Into<ExtRat>, hi: impl Into<ExtRat>) -> Self {
        Wave::plain(IntervalSet::interval(lo, hi))
    }

    /// Adds a lift, or clears it when `level` is 0.
    pub fn lifted(mut self, x: Rat, level: u32) -> Result<Self> {
        if !self.o.contains(&x) {
            return Err(Error::pre(format!("lifted abscissa {} lies outside {}", fmt_rat(&x), self.o)));
        }
        if level == 0 {
            self.lift.remove(&x);
        } else {
            self.lift.insert(x, level);
        }
        Ok(self)
    }

    pub fn o(&self) -> &IntervalSet {
        &self.o
    }

    pub fn lift(&self) -> &BTreeMap<Rat, u32> {
        &self.lift
    }

    pub fn lifted_abscissae(&self) -> FinSet {
        self.lift.keys().cloned().collect()
    }

    /// The level of the wave's point over `x`, if it has one.
    pub fn level_at(&self, x: &Rat) -> Option<u32> {
        self.o
            .contains(x)
            .then(|| self.lift.get(x).copied().unwrap_or(0))
    }

    pub fn contains(&self, p: &MultiLinePoint) -> bool {
        self.level_at(&p.x) == Some(p.level)
    }

    pub fn is_empty(&self) -> bool {
        self.o.is_empty()
    }

    /// The down points of the wave, as a subset of the line.
    pub fn down_part(&self) -> IntervalSet {
        self.o.remove_points(&self.lifted_abscissae())
    }

    /// Lifts sit over doubled abscissae and below `k`.
    pub fn check(&self, spec: &SpaceSpec) -> Result<()> {
        for (x, l) in &self.lift {
            if *l >= spec.levels_at(x) {
                return Err(Error::pre(format!(
                    "lift {}^{l} is not a point of {spec}",
                    fmt_rat(x)
                )));
            }
        }
        Ok(())
    }

    pub fn meet(&self, other: &Wave) -> Wave {
        let o = self.o.meet(&other.o);
        let mut lift = BTreeMap::new();
        let mut holes = FinSet::empty();
        for x in self.lift.keys().chain(other.lift.keys()) {
            if !o.contains(x) {
                continue;
            }
            match (self.lift.get(x), other.lift.get(x)) {
                (Some(a), Some(b)) if a == b => {
                    lift.insert(x.clone(), *a);
                }
                _ => holes.insert(x.clone()),
            }
        }
        Wave {
            o: o.remove_points(&holes),
            lift,
        }
    }

    pub fn is_subset(&self, other: &Wave) -> bool {
        self.o.is_subset(&other.o)
            && self.lift.iter().all(|(x, l)| other.lift.get(x) == Some(l))
            && other
                .lift
                .keys()
                .filter(|x| self.o.contains(x))
                .all(|x| self.lift.contains_key(x))
    }

    /// A rational down point of the wave.
    pub fn down_witness(&self) -> Option<MultiLinePoint> {
        self.o
            .pick_avoiding(&self.lifted_abscissae())
            .map(MultiLinePoint::down)
    }

    pub fn shift(&self, by: &Rat) -> Wave {
        Wave {
            o: self.o.shift(by),
            lift: self.lift.iter().map(|(x, l)| (x + by, *l)).collect(),
        }
    }

    pub fn reflect(&self, center: &Rat) -> Wave {
        let two_c = center * Rat::from_integer(2.into());
        Wave {
            o: self.o.reflect(center),
            lift: self.lift.iter().map(|(x, l)| (&two_c - x, *l)).collect(),
        }
    }

    /// Image under the exchange of levels `i` and `j` over `at`.
    pub fn exchange(&self, at: &Rat, i: u32, j: u32) -> Wave {
        let mut out = self.clone();
        if let Some(l) = self.level_at(at) {
            let swapped = if l == i { j } else if l == j { i } else { l };
            if swapped == 0 {
                out.lift.remove(at);
            } else {
                out.lift.insert(at.clone(), swapped);
            }
        }
        out
    }
}

impl fmt::Display for Wave {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lift.is_empty() {
            return write!(f, "W[{}]", self.o);
        }
        let lifts: Vec<String> = self
            .lift
            .iter()
            .map(|(x, l)| format!("{}^{l}", fmt_rat(x)))
            .collect();
        write!(f, "W[{} - {{{}}}]", self.o, lifts.join(","))
    }
}

impl FromStr for Wave {
    type Err = Error;

    /// Accepts `W[O]`, `W[O - {x^l,..}]` and `W[O - {x,..}^l]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("W[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(s, "expected `W[O - {x^level}]`"))?
            .trim();
        let Some(open) = body.rfind('{') else {
            return Ok(Wave::plain(body.parse()?));
        };
        let o_text = body[..open]
            .trim_end()
            .strip_suffix('-')
            .ok_or_else(|| Error::parse(s, "expected `-` before the lift set"))?;
        let o: IntervalSet = o_text.trim().parse()?;
        let rest = &body[open + 1..];
        let close = rest.find('}').ok_or_else(|| Error::parse(s, "unclosed lift set"))?;
        let uniform = match rest[close + 1..].trim() {
            "" => None,
            t => Some(parse_level(s, t.strip_prefix('^').unwrap_or("x"))?),
        };
        let mut lift = BTreeMap::new();
        for item in rest[..close].split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (x, l) = match (item.split_once('^'), uniform) {
                (Some((x, l)), None) => (x, parse_level(s, l)?),
                (None, Some(l)) => (item, l),
                (None, None) => (item, 1),
                (Some(_), Some(_)) => return Err(Error::parse(s, "level given twice")),
            };
            lift.insert(parse_rat(x)?, l);
        }
        Wave::new(o, lift)
    }
}

fn parse_level(input: &str, t: &str) -> Result<u32> {
    t.trim()
        .parse()
        .map_err(|_| Error::parse(input, "level must be a natural number"))
}

impl Serialize for Wave {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Wave {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
