use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::point::FeatherPoint;
use crate::error::{Error, Result};
use crate::numeric::{inner_point, Approach, ExtRat, IntervalSet, Open, Rat};

/// Order interval `{w : lower < w < upper}`, the basic open of the feather.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FeatherInterval {
    lower: FeatherPoint,
    upper: FeatherPoint,
}

/// Points of an interval sharing one prefix: `{(prefix, y) : y in range}`.
///
/// The range is open at `hi`, and open at `lo` unless `lo_closed`; a closed
/// lower end is the upper twin `(prefix, prefix_last)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub prefix: Vec<Rat>,
    pub lo: ExtRat,
    pub lo_closed: bool,
    pub hi: ExtRat,
}

impl Segment {
    pub fn contains_last(&self, y: &Rat) -> bool {
        let above_lo = if self.lo_closed { self.lo <= *y } else { self.lo < *y };
        above_lo && self.hi > *y
    }

    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }
}

impl FeatherInterval {
    pub fn new(lower: FeatherPoint, upper: FeatherPoint) -> Result<Self> {
        if !lower.less(&upper) {
            return Err(Error::pre(format!("interval needs {lower} < {upper}")));
        }
        Ok(FeatherInterval { lower, upper })
    }

    pub fn lower(&self) -> &FeatherPoint {
        &self.lower
    }

    pub fn upper(&self) -> &FeatherPoint {
        &self.upper
    }

    pub fn contains(&self, w: &FeatherPoint) -> bool {
        self.lower.less(w) && w.less(&self.upper)
    }

    /// Decomposes the interval along the predecessor path of its upper end.
    pub fn segments(&self) -> Vec<Segment> {
        let u = self.lower.coords();
        let v = self.upper.coords();
        let a = u.len() - 1;
        let c = v.len() - 1;
        let mut out = vec![Segment {
            prefix: v[..a].to_vec(),
            lo: ExtRat::from(&u[a]),
            lo_closed: false,
            hi: ExtRat::from(&v[a]),
        }];
        for b in a + 1..=c {
            let seg = Segment {
                prefix: v[..b].to_vec(),
                lo: ExtRat::from(&v[b - 1]),
                lo_closed: true,
                hi: ExtRat::from(&v[b]),
            };
            if !seg.is_empty() {
                out.push(seg);
            }
        }
        out
    }

    /// `{y : (prefix, y) in self}` as an open set of the line. A closed lower
    /// end is dropped; it only matters for the single upper twin it names.
    pub fn slice(&self, prefix: &[Rat]) -> IntervalSet {
        self.segments()
            .into_iter()
            .find(|s| s.prefix == prefix)
            .map(|s| IntervalSet::from_intervals(vec![Open::new(s.lo, s.hi)]))
            .unwrap_or_default()
    }

    /// Whether `(prefix, y_m)` with `y_m -> limit` from `side` is eventually inside.
    pub fn eventually_contains(&self, prefix: &[Rat], limit: &Rat, side: Approach) -> bool {
        self.slice(prefix).eventually_contains(limit, side)
    }

    /// Intersection; always a single interval or empty.
    pub fn meet(&self, other: &FeatherInterval) -> Option<FeatherInterval> {
        let top = common_path_top(&self.upper, &other.upper);
        let bottom = if self.lower.less(&other.lower) || self.lower == other.lower {
            other.lower.clone()
        } else if other.lower.less(&self.lower) {
            self.lower.clone()
        } else {
            // Predecessors of any point are totally ordered, so incomparable
            // lower ends have no common successor.
            return None;
        };
        FeatherInterval::new(bottom, top).ok()
    }

    /// Whether every point of `self` lies in `other`.
    pub fn is_subset(&self, other: &FeatherInterval) -> bool {
        let theirs = other.segments();
        self.segments().iter().all(|s| {
            theirs.iter().any(|t| {
                t.prefix == s.prefix
                    && t.hi >= s.hi
                    && (t.lo < s.lo || (t.lo == s.lo && (t.lo_closed || !s.lo_closed)))
            })
        })
    }

    /// A strict member, walking from the middle of the bottom segment.
    pub fn strict_member(&self) -> FeatherPoint {
        self.members().next().expect("intervals are non-empty")
    }

    /// Infinitely many distinct strict members, all on the bottom segment.
    pub fn members(&self) -> impl Iterator<Item = FeatherPoint> + '_ {
        let seg = self.segments().swap_remove(0);
        let prefix = seg.prefix.clone();
        let lo = seg.lo.clone();
        let mut cur = inner_point(&seg.lo, &seg.hi).expect("bottom segment is non-empty");
        std::iter::from_fn(move || {
            let p = FeatherPoint::from_parts(&prefix, std::slice::from_ref(&cur));
            cur = match &lo {
                ExtRat::Fin(a) => (a + &cur) / crate::numeric::int(2),
                _ => &cur - crate::numeric::int(1),
            };
            Some(p)
        })
    }
}

/// The point `m` with `{w < m} = {w < v1} ∩ {w < v2}`.
fn common_path_top(v1: &FeatherPoint, v2: &FeatherPoint) -> FeatherPoint {
    let (a, b) = (v1.coords(), v2.coords());
    let k = a.len().min(b.len());
    match (0..k).find(|&i| a[i] != b[i]) {
        None => {
            if a.len() <= b.len() {
                v1.clone()
            } else {
                v2.clone()
            }
        }
        Some(i) => {
            if a[i] < b[i] {
                v1.truncate(i + 1)
            } else {
                v2.truncate(i + 1)
            }
        }
    }
}

impl fmt::Display for FeatherInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.lower.to_string();
        let u = self.upper.to_string();
        write!(f, "FI[{};{}]", &l[1..], &u[1..])
    }
}

impl FromStr for FeatherInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("FI[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(s, "expected `FI[(..);(..)]`"))?;
        let (l, u) = inner
            .split_once(';')
            .ok_or_else(|| Error::parse(s, "interval needs `;` between its ends"))?;
        FeatherInterval::new(l.parse()?, u.parse()?)
    }
}

impl Serialize for FeatherInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FeatherInterval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    fn fp(s: &str) -> FeatherPoint {
        s.parse().unwrap()
    }

    fn fi(s: &str) -> FeatherInterval {
        s.parse().unwrap()
    }

    #[test]
    fn unfolded_membership() {
        let i = fi("FI[(0,0);(0,1)]");
        assert!(i.contains(&fp("F(0,1/2)")));
        assert!(!i.contains(&fp("F(0,0)")));
        assert!(!i.contains(&fp("F(1/2)")));
        assert!(!i.contains(&fp("F(0,1/2,1)")));
    }

    #[test]
    fn meet_on_the_base_line() {
        let m = fi("FI[(-1);(1)]").meet(&fi("FI[(0);(2)]")).unwrap();
        assert_eq!(m, fi("FI[(0);(1)]"));
    }

    #[test]
    fn meet_through_a_branch() {
        let m = fi("FI[(-1);(0,1)]").meet(&fi("FI[(-1);(1)]")).unwrap();
        assert_eq!(m, fi("FI[(-1);(0)]"));
        assert!(fi("FI[(0,1);(0,2)]").meet(&fi("FI[(1,2);(1,3)]")).is_none());
    }

    #[test]
    fn segments_describe_membership() {
        let i = fi("FI[(-1);(0,1/2,3)]");
        let segs = i.segments();
        assert_eq!(segs.len(), 3);
        assert!(segs[1].lo_closed && segs[1].contains_last(&int(0)));
        for w in ["F(-1/2)", "F(0,0)", "F(0,1/4)", "F(0,1/2,1/2)", "F(0,1/2,2)", "F(0)", "F(0,1/2)", "F(1)"] {
            let w = fp(w);
            let via_segments = segs
                .iter()
                .any(|s| s.prefix == w.prefix() && s.contains_last(w.last()));
            assert_eq!(via_segments, i.contains(&w), "{w}");
        }
    }

    #[test]
    fn subset_checks() {
        assert!(fi("FI[(0,1/2);(0,1)]").is_subset(&fi("FI[(0,0);(0,2)]")));
        assert!(fi("FI[(-1/2);(0,1/2)]").is_subset(&fi("FI[(-1);(0,1)]")));
        assert!(!fi("FI[(-1/2);(0,1/2)]").is_subset(&fi("FI[(-1);(1)]")));
        assert!(!fi("FI[(-1);(0,1)]").is_subset(&fi("FI[(-1/2);(0,1)]")));
    }

    #[test]
    fn members_are_inside_and_strict() {
        let i = fi("FI[(0,0);(0,1)]");
        for p in i.members().take(20) {
            assert!(i.contains(&p) && p.is_strict());
        }
        assert_eq!(i.strict_member(), fp("F(0,1/2)"));
    }
}
