use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{dist, fmt_rat, int, parse_rat, Approach, ExtRat, IntervalSet, Open, Rat};

/// Which copy of `[0, inf)` a point of the branching line sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::L => "L",
            Side::R => "R",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "L" => Ok(Side::L),
            "R" => Ok(Side::R),
            _ => Err(Error::parse(s, "side must be L or R")),
        }
    }
}

/// Two lines glued along `x < 0`. Points left of the origin forget their side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchPoint {
    x: Rat,
    side: Side,
}

impl BranchPoint {
    pub fn new(x: Rat, side: Side) -> Self {
        let side = if x < int(0) { Side::L } else { side };
        BranchPoint { x, side }
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn origin(side: Side) -> Self {
        BranchPoint::new(int(0), side)
    }

    /// Whether the point lies in the common part `x < 0`.
    pub fn is_shared(&self) -> bool {
        self.x < int(0)
    }
}

impl fmt::Display for BranchPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({} @{})", fmt_rat(&self.x), self.side)
    }
}

impl FromStr for BranchPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("B(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, "expected `B(x @L)` or `B(x @R)`"))?;
        let (x, side) = match body.split_once('@') {
            Some((x, side)) => (x, side.parse()?),
            None => (body, Side::L),
        };
        Ok(BranchPoint::new(parse_rat(x)?, side))
    }
}

/// `{(r, side) : lo < r < hi}`; the part left of the origin is shared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BranchInterval {
    lo: ExtRat,
    hi: ExtRat,
    side: Side,
}

impl BranchInterval {
    pub fn new(lo: impl Into<ExtRat>, hi: impl Into<ExtRat>, side: Side) -> Result<Self> {
        let (lo, hi) = (lo.into(), hi.into());
        if lo >= hi {
            return Err(Error::pre(format!("empty branch interval ({lo},{hi})")));
        }
        // An interval that never reaches the origin does not depend on its side.
        let side = if hi <= ExtRat::from_int(0) { Side::L } else { side };
        Ok(BranchInterval { lo, hi, side })
    }

    pub fn chart(p: &BranchPoint, eps: &Rat) -> Result<Self> {
        if *eps <= int(0) {
            return Err(Error::pre("chart radius must be positive"));
        }
        BranchInterval::new(&p.x - eps, &p.x + eps, p.side)
    }

    pub fn whole(side: Side) -> Self {
        BranchInterval { lo: ExtRat::NegInf, hi: ExtRat::PosInf, side }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn open(&self) -> Open {
        Open::new(self.lo.clone(), self.hi.clone())
    }

    pub fn contains(&self, p: &BranchPoint) -> bool {
        self.open().contains(&p.x) && (p.is_shared() || p.side == self.side)
    }

    /// Trace on the copy of the line carrying `side`.
    pub fn trace(&self, side: Side) -> IntervalSet {
        let full = IntervalSet::from_intervals(vec![self.open()]);
        if side == self.side {
            full
        } else {
            full.meet(&IntervalSet::interval(ExtRat::NegInf, int(0)))
        }
    }

    pub fn meet(&self, other: &BranchInterval) -> Option<BranchInterval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let mut hi = self.hi.clone().min(other.hi.clone());
        if self.side != other.side {
            hi = hi.min(ExtRat::from_int(0));
        }
        BranchInterval::new(lo, hi, self.side).ok()
    }

    pub fn is_subset(&self, other: &BranchInterval) -> bool {
        [Side::L, Side::R]
            .into_iter()
            .all(|s| self.trace(s).is_subset(&other.trace(s)))
    }
}

impl fmt::Display for BranchInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BI[({},{})@{}]", self.lo, self.hi, self.side)
    }
}

impl FromStr for BranchInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("BI[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(s, "expected `BI[(a,b)@R]`"))?;
        let (iv, side) = body
            .rsplit_once('@')
            .ok_or_else(|| Error::parse(s, "missing side"))?;
        let iv = iv
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, "expected `(a,b)`"))?;
        let (a, b) = iv.split_once(',').ok_or_else(|| Error::parse(s, "expected `(a,b)`"))?;
        BranchInterval::new(a.parse::<ExtRat>()?, b.parse::<ExtRat>()?, side.parse()?)
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

string_serde!(BranchPoint);
string_serde!(BranchInterval);

/// Only the two origins fail to separate.
pub fn branch_non_separable(p: &BranchPoint, q: &BranchPoint) -> bool {
    p.x == int(0) && q.x == int(0) && p.side != q.side
}

/// Disjoint intervals around two separable points.
pub fn branch_separation(p: &BranchPoint, q: &BranchPoint) -> Option<(BranchInterval, BranchInterval)> {
    if p == q || branch_non_separable(p, q) {
        return None;
    }
    let r = if p.x == q.x {
        // Same positive abscissa on different sides.
        p.x.clone() / int(2)
    } else {
        dist(&p.x, &q.x) / int(2)
    };
    let bp = BranchInterval::chart(p, &r).ok()?;
    let bq = BranchInterval::chart(q, &r).ok()?;
    debug_assert!(bp.meet(&bq).is_none());
    Some((bp, bq))
}

/// Limits of `(limit ∓ 1/m, side)`.
pub fn branch_limits(limit: &Rat, side: Side, approach: Approach) -> Vec<BranchPoint> {
    let zero = int(0);
    if *limit == zero {
        match approach {
            Approach::FromBelow => vec![BranchPoint::origin(Side::L), BranchPoint::origin(Side::R)],
            Approach::FromAbove => vec![BranchPoint::origin(side)],
        }
    } else {
        vec![BranchPoint::new(limit.clone(), side)]
    }
}

/// The two origins, non-separable from each other, against a point that
/// separates from everything: no homeomorphism can carry one to the other.
pub fn non_homogeneity_pair() -> (BranchPoint, BranchPoint, BranchPoint) {
    (
        BranchPoint::origin(Side::L),
        BranchPoint::origin(Side::R),
        BranchPoint::new(int(1), Side::L),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn b(s: &str) -> BranchPoint {
        s.parse().unwrap()
    }

    fn bi(s: &str) -> BranchInterval {
        s.parse().unwrap()
    }

    #[test]
    fn shared_points_forget_their_side() {
        assert_eq!(b("B(-1 @R)"), b("B(-1 @L)"));
        assert_ne!(b("B(0 @R)"), b("B(0 @L)"));
        assert_eq!(b("B(3/2 @R)").to_string(), "B(3/2 @R)");
    }

    #[test]
    fn interval_membership_and_meet() {
        let r = bi("BI[(-1,1)@R]");
        assert!(r.contains(&b("B(-1/2 @L)")));
        assert!(r.contains(&b("B(1/2 @R)")));
        assert!(!r.contains(&b("B(1/2 @L)")));
        assert!(!r.contains(&b("B(0 @L)")));
        let l = bi("BI[(-2,2)@L]");
        assert_eq!(r.meet(&l), Some(bi("BI[(-1,0)@L]")));
        assert_eq!(bi("BI[(0,1)@R]").meet(&bi("BI[(0,1)@L]")), None);
        assert_eq!(r.to_string(), "BI[(-1,1)@R]");
    }

    #[test]
    fn only_the_origins_resist_separation() {
        assert!(branch_separation(&b("B(0 @L)"), &b("B(0 @R)")).is_none());
        for (p, q) in [("B(1 @L)", "B(0 @L)"), ("B(1 @L)", "B(1 @R)"), ("B(-1 @L)", "B(0 @R)"), ("B(1/3 @R)", "B(0 @L)")] {
            let (bp, bq) = branch_separation(&b(p), &b(q)).unwrap();
            assert!(bp.contains(&b(p)) && bq.contains(&b(q)));
            assert!(bp.meet(&bq).is_none());
        }
    }

    #[test]
    fn limits_at_the_origin() {
        assert_eq!(branch_limits(&int(0), Side::R, Approach::FromBelow).len(), 2);
        assert_eq!(branch_limits(&int(0), Side::R, Approach::FromAbove), vec![b("B(0 @R)")]);
        assert_eq!(branch_limits(&rat(-1, 2), Side::R, Approach::FromAbove), vec![b("B(-1/2 @L)")]);
    }
}
