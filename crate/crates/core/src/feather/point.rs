use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{fmt_rat, int, parse_rat, Rat};

/// A point of the feather: a finite sequence `s_0 < s_1 < ... < s_{n-1} <= s_n`.
///
/// Length-one sequences form the base line. A point whose last two
/// coordinates coincide is an *upper twin*; every other point is *strict*.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FeatherPoint {
    seq: Vec<Rat>,
}

impl FeatherPoint {
    /// Validates the monotonicity constraint.
    pub fn new(seq: Vec<Rat>) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::InvalidPoint("feather points are non-empty sequences".into()));
        }
        let n = seq.len() - 1;
        for i in 0..n {
            let ok = if i + 1 == n { seq[i] <= seq[i + 1] } else { seq[i] < seq[i + 1] };
            if !ok {
                return Err(Error::InvalidPoint(format!(
                    "{} violates s_0 < ... < s_(n-1) <= s_n at position {}",
                    render(&seq),
                    i + 1
                )));
            }
        }
        Ok(FeatherPoint { seq })
    }

    pub fn from_ints(xs: &[i64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| int(x)).collect())
    }

    /// Point on the base line.
    pub fn line(x: Rat) -> Self {
        FeatherPoint { seq: vec![x] }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the last coordinate: `len - 1`.
    pub fn depth(&self) -> usize {
        self.seq.len() - 1
    }

    pub fn last(&self) -> &Rat {
        self.seq.last().expect("non-empty")
    }

    pub fn first(&self) -> &Rat {
        &self.seq[0]
    }

    pub fn is_upper_twin(&self) -> bool {
        let n = self.seq.len();
        n >= 2 && self.seq[n - 2] == self.seq[n - 1]
    }

    pub fn is_strict(&self) -> bool {
        !self.is_upper_twin()
    }

    /// Strict order: `s < t` iff `n <= m`, the first `n` coordinates agree and
    /// `s_n < t_n`.
    pub fn less(&self, other: &FeatherPoint) -> bool {
        let n = self.depth();
        n <= other.depth() && self.seq[..n] == other.seq[..n] && self.seq[n] < other.seq[n]
    }

    pub fn comparable(&self, other: &FeatherPoint) -> bool {
        self == other || self.less(other) || other.less(self)
    }

    /// The unique point this one cannot be separated from.
    pub fn twin(&self) -> FeatherPoint {
        let mut seq = self.seq.clone();
        if self.is_upper_twin() {
            seq.pop();
        } else {
            seq.push(self.last().clone());
        }
        FeatherPoint { seq }
    }

    pub fn translate(&self, by: &Rat) -> FeatherPoint {
        FeatherPoint {
            seq: self.seq.iter().map(|x| x + by).collect(),
        }
    }

    /// First `len` coordinates as a point; `len` must be at least one.
    pub fn truncate(&self, len: usize) -> FeatherPoint {
        FeatherPoint {
            seq: self.seq[..len].to_vec(),
        }
    }

    /// Same prefix, different last coordinate. Fails when the result is invalid.
    pub fn with_last(&self, last: Rat) -> Result<FeatherPoint> {
        let mut seq = self.seq.clone();
        *seq.last_mut().expect("non-empty") = last;
        FeatherPoint::new(seq)
    }

    /// All coordinates except the last.
    pub fn prefix(&self) -> &[Rat] {
        &self.seq[..self.seq.len() - 1]
    }

    pub(crate) fn from_parts(prefix: &[Rat], tail: &[Rat]) -> FeatherPoint {
        let mut seq = prefix.to_vec();
        seq.extend_from_slice(tail);
        debug_assert!(FeatherPoint::new(seq.clone()).is_ok(), "invalid {}", render(&seq));
        FeatherPoint { seq }
    }
}

fn render(seq: &[Rat]) -> String {
    let items: Vec<String> = seq.iter().map(fmt_rat).collect();
    format!("({})", items.join(","))
}

impl fmt::Display for FeatherPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", render(&self.seq))
    }
}

impl FromStr for FeatherPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('F').unwrap_or(t);
        let inner = t
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, "expected `F(a,b,...)`"))?;
        let seq = inner.split(',').map(parse_rat).collect::<Result<Vec<_>>>()?;
        FeatherPoint::new(seq)
    }
}

impl Serialize for FeatherPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FeatherPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn fp(s: &str) -> FeatherPoint {
        s.parse().unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(FeatherPoint::from_ints(&[0, 1, 1]).is_ok());
        assert!(FeatherPoint::from_ints(&[0, 0, 0]).is_err());
        assert!(FeatherPoint::from_ints(&[5]).is_ok());
        assert!(FeatherPoint::from_ints(&[0, 0]).is_ok());
        assert!(FeatherPoint::from_ints(&[1, 0]).is_err());
        assert!(FeatherPoint::new(vec![]).is_err());
    }

    #[test]
    fn order_examples() {
        assert!(FeatherPoint::line(int(0)).less(&FeatherPoint::line(rat(1, 2))));
        let a = fp("F(0)");
        let b = fp("F(0,1)");
        assert!(!a.less(&b) && !b.less(&a));
        assert!(fp("F(0,0)").less(&fp("F(0,1)")));
        assert!(fp("F(-1)").less(&fp("F(0,1)")));
        assert!(!fp("F(0,1)").less(&fp("F(0,1)")));
    }

    #[test]
    fn twin_examples() {
        assert_eq!(fp("F(0)").twin(), fp("F(0,0)"));
        assert_eq!(fp("F(0,1,1)").twin(), fp("F(0,1)"));
        assert_eq!(fp("F(0,1)").twin(), fp("F(0,1,1)"));
    }

    #[test]
    fn twins_are_incomparable_with_same_predecessors() {
        let p = fp("F(0,1)");
        let q = p.twin();
        assert!(!p.comparable(&q));
        for w in ["F(-1)", "F(0,1/2)", "F(0,0)", "F(1/2)", "F(0,1,2)"] {
            let w = fp(w);
            assert_eq!(w.less(&p), w.less(&q), "{w}");
        }
    }

    #[test]
    fn translation() {
        assert_eq!(fp("F(0,0)").translate(&int(1)), fp("F(1,1)"));
        assert_eq!(fp("F(0,1)").translate(&rat(-1, 2)), fp("F(-1/2,1/2)"));
    }
}
