use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::extrat::{fmt_rat, parse_rat, Rat};
use crate::error::{Error, Result};

/// Finite, sorted, duplicate-free set of rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FinSet {
    elems: Vec<Rat>,
}

impl FinSet {
    pub fn empty() -> Self {
        FinSet::default()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.elems.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.elems.iter()
    }

    pub fn insert(&mut self, x: Rat) {
        if let Err(pos) = self.elems.binary_search(&x) {
            self.elems.insert(pos, x);
        }
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        FinSet::from_iter(self.elems.iter().chain(other.elems.iter()).cloned())
    }
}

impl FromIterator<Rat> for FinSet {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        let mut elems: Vec<Rat> = iter.into_iter().collect();
        elems.sort();
        elems.dedup();
        FinSet { elems }
    }
}

impl<'a> IntoIterator for &'a FinSet {
    type Item = &'a Rat;
    type IntoIter = std::slice::Iter<'a, Rat>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.elems.iter().map(fmt_rat).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl FromStr for FinSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::parse(s, "expected `{a,b,...}`"))?;
        if inner.trim().is_empty() {
            return Ok(FinSet::empty());
        }
        inner.split(',').map(parse_rat).collect()
    }
}

impl Serialize for FinSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FinSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::extrat::{int, rat};

    #[test]
    fn sorted_and_deduplicated() {
        let s = FinSet::from_iter([int(2), rat(1, 2), int(2), int(0)]);
        assert_eq!(s.to_string(), "{0,1/2,2}");
        assert_eq!("{0,1/2}".parse::<FinSet>().unwrap().len(), 2);
        assert_eq!("{}".parse::<FinSet>().unwrap(), FinSet::empty());
    }
}
