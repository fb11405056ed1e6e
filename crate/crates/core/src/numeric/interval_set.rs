//! Finite unions of open intervals with extended-rational endpoints.
//!
//! An [`IntervalSet`] is always canonical: intervals are non-empty, sorted and
//! pairwise disjoint, and two intervals are merged whenever they share an
//! interior point. Touching intervals such as `(0,1)` and `(1,2)` stay apart
//! because the shared endpoint is not a member.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::extrat::{inner_point, int, ExtRat, Rat};
use super::finset::FinSet;
use crate::error::{Error, Result};

/// An open interval `(lo, hi)`; empty when `lo >= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Open {
    pub lo: ExtRat,
    pub hi: ExtRat,
}

impl Open {
    pub fn new(lo: ExtRat, hi: ExtRat) -> Self {
        Open { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.lo < *x && self.hi > *x
    }
}

/// Side from which a moving coordinate approaches its limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Approach {
    FromBelow,
    FromAbove,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    intervals: Vec<Open>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    pub fn full() -> Self {
        IntervalSet {
            intervals: vec![Open::new(ExtRat::NegInf, ExtRat::PosInf)],
        }
    }

    pub fn interval(lo: impl Into<ExtRat>, hi: impl Into<ExtRat>) -> Self {
        Self::from_intervals(vec![Open::new(lo.into(), hi.into())])
    }

    /// Canonicalizes an arbitrary list of open intervals.
    pub fn from_intervals(mut raw: Vec<Open>) -> Self {
        raw.retain(|iv| !iv.is_empty());
        raw.sort_by(|x, y| x.lo.cmp(&y.lo).then_with(|| x.hi.cmp(&y.hi)));
        let mut out: Vec<Open> = Vec::with_capacity(raw.len());
        for iv in raw {
            match out.last_mut() {
                Some(last) if iv.lo < last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => out.push(iv),
            }
        }
        IntervalSet { intervals: out }
    }

    pub fn intervals(&self) -> &[Open] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.intervals.len() == 1
            && self.intervals[0].lo == ExtRat::NegInf
            && self.intervals[0].hi == ExtRat::PosInf
    }

    pub fn contains(&self, x: &Rat) -> bool {
        // Intervals are sorted by lower end; find the last one starting below x.
        let idx = self.intervals.partition_point(|iv| iv.lo < *x);
        idx > 0 && self.intervals[idx - 1].hi > *x
    }

    pub fn meet(&self, other: &IntervalSet) -> IntervalSet {
        let (a, b) = (&self.intervals, &other.intervals);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            let lo = a[i].lo.clone().max(b[j].lo.clone());
            let hi = a[i].hi.clone().min(b[j].hi.clone());
            if lo < hi {
                out.push(Open::new(lo, hi));
            }
            if a[i].hi <= b[j].hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet::from_intervals(out)
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut all = self.intervals.clone();
        all.extend(other.intervals.iter().cloned());
        IntervalSet::from_intervals(all)
    }

    /// The set minus finitely many points.
    pub fn remove_points(&self, points: &FinSet) -> IntervalSet {
        let mut out = Vec::with_capacity(self.intervals.len() + points.len());
        for iv in &self.intervals {
            let mut lo = iv.lo.clone();
            for p in points.iter().filter(|p| iv.contains(p)) {
                out.push(Open::new(lo, ExtRat::from(p)));
                lo = ExtRat::from(p);
            }
            out.push(Open::new(lo, iv.hi.clone()));
        }
        IntervalSet::from_intervals(out)
    }

    /// Whether every interval of `self` lies inside `other`.
    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.intervals.iter().all(|iv| {
            other
                .intervals
                .iter()
                .any(|big| big.lo <= iv.lo && iv.hi <= big.hi)
        })
    }

    /// True iff `self` minus `holes` meets every non-empty open interval, which
    /// for a finite union of open intervals means its complement is finite.
    pub fn dense_in_line(&self, _holes: &FinSet) -> bool {
        let Some(first) = self.intervals.first() else {
            return false;
        };
        let last = self.intervals.last().expect("non-empty");
        first.lo == ExtRat::NegInf
            && last.hi == ExtRat::PosInf
            && self.intervals.windows(2).all(|w| w[0].hi == w[1].lo)
    }

    /// Finitely many points missing from the line, when the set is dense.
    pub fn complement_points(&self) -> Option<FinSet> {
        if !self.dense_in_line(&FinSet::empty()) {
            return None;
        }
        Some(FinSet::from_iter(
            self.intervals[1..].iter().filter_map(|iv| iv.lo.finite().cloned()),
        ))
    }

    /// All finite endpoints, sorted.
    pub fn endpoints(&self) -> FinSet {
        FinSet::from_iter(
            self.intervals
                .iter()
                .flat_map(|iv| [iv.lo.finite().cloned(), iv.hi.finite().cloned()])
                .flatten(),
        )
    }

    /// Whether a sequence approaching `limit` from the given side eventually
    /// stays inside the set.
    pub fn eventually_contains(&self, limit: &Rat, side: Approach) -> bool {
        self.intervals.iter().any(|iv| match side {
            Approach::FromBelow => iv.lo < *limit && iv.hi >= *limit,
            Approach::FromAbove => iv.lo <= *limit && iv.hi > *limit,
        })
    }

    pub fn shift(&self, by: &Rat) -> IntervalSet {
        IntervalSet {
            intervals: self
                .intervals
                .iter()
                .map(|iv| Open::new(iv.lo.shift(by), iv.hi.shift(by)))
                .collect(),
        }
    }

    /// Image under `x -> 2c - x`.
    pub fn reflect(&self, center: &Rat) -> IntervalSet {
        IntervalSet::from_intervals(
            self.intervals
                .iter()
                .map(|iv| Open::new(iv.hi.reflect(center), iv.lo.reflect(center)))
                .collect(),
        )
    }

    /// A rational member that avoids `avoid`. Candidates walk from the middle
    /// of the first interval toward its lower end, so a finite `avoid` always
    /// leaves one.
    pub fn pick_avoiding(&self, avoid: &FinSet) -> Option<Rat> {
        let iv = self.intervals.first()?;
        let mut c = inner_point(&iv.lo, &iv.hi)?;
        loop {
            if !avoid.contains(&c) {
                return Some(c);
            }
            c = match &iv.lo {
                ExtRat::Fin(a) => (a + &c) / int(2),
                _ => c - int(1),
            };
        }
    }

    /// A nonempty open interval disjoint from the set, or `None` when the
    /// set is dense.
    pub fn gap(&self) -> Option<Open> {
        let (Some(first), Some(last)) = (self.intervals.first(), self.intervals.last()) else {
            return Some(Open::new(ExtRat::NegInf, ExtRat::PosInf));
        };
        if first.lo != ExtRat::NegInf {
            return Some(Open::new(ExtRat::NegInf, first.lo.clone()));
        }
        if last.hi != ExtRat::PosInf {
            return Some(Open::new(last.hi.clone(), ExtRat::PosInf));
        }
        self.intervals
            .windows(2)
            .find(|w| w[0].hi < w[1].lo)
            .map(|w| Open::new(w[0].hi.clone(), w[1].lo.clone()))
    }

    /// The component containing `x`, if any.
    pub fn component_of(&self, x: &Rat) -> Option<&Open> {
        self.intervals.iter().find(|iv| iv.contains(x))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("empty");
        }
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str("u")?;
            }
            write!(f, "({},{})", iv.lo, iv.hi)?;
        }
        Ok(())
    }
}

impl FromStr for IntervalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "empty" || t == "∅" {
            return Ok(IntervalSet::empty());
        }
        let mut raw = Vec::new();
        for part in t.split(['u', '∪']) {
            let part = part.trim();
            let inner = part
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| Error::parse(s, "expected `(a,b)` intervals joined by `u`"))?;
            let (lo, hi) = inner
                .split_once(',')
                .ok_or_else(|| Error::parse(s, "interval needs two endpoints"))?;
            let iv = Open::new(lo.parse()?, hi.parse()?);
            if iv.is_empty() {
                return Err(Error::parse(s, "interval endpoints must satisfy a < b"));
            }
            raw.push(iv);
        }
        Ok(IntervalSet::from_intervals(raw))
    }
}

impl Serialize for IntervalSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntervalSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::extrat::rat;
    use proptest::prelude::*;

    fn iset(s: &str) -> IntervalSet {
        s.parse().unwrap()
    }

    /// Membership oracle: probe every endpoint and every gap midpoint.
    fn probes(sets: &[&IntervalSet]) -> Vec<Rat> {
        let mut pts: Vec<Rat> = sets.iter().flat_map(|s| s.endpoints().iter().cloned().collect::<Vec<_>>()).collect();
        pts.sort();
        pts.dedup();
        let mut out = pts.clone();
        for w in pts.windows(2) {
            out.push((&w[0] + &w[1]) / int(2));
        }
        if let (Some(a), Some(b)) = (pts.first(), pts.last()) {
            out.push(a - int(1));
            out.push(b + int(1));
        }
        out.push(int(0));
        out
    }

    #[test]
    fn gaps() {
        assert_eq!(IntervalSet::full().gap(), None);
        assert_eq!(iset("(-inf,0)u(0,inf)").gap(), None);
        assert_eq!(iset("(0,inf)").gap(), Some(Open::new(ExtRat::NegInf, ExtRat::from_int(0))));
        assert_eq!(iset("(-inf,0)u(1,inf)").gap(), Some(Open::new(ExtRat::from_int(0), ExtRat::from_int(1))));
        assert!(IntervalSet::empty().gap().is_some());
    }

    #[test]
    fn meet_examples() {
        assert_eq!(iset("(-1,1)").meet(&iset("(0,2)")), iset("(0,1)"));
        assert_eq!(
            iset("(0,1)u(2,3)").meet(&iset("(1/2,5/2)")),
            iset("(1/2,1)u(2,5/2)")
        );
        assert!(iset("(0,1)").meet(&IntervalSet::empty()).is_empty());
    }

    #[test]
    fn meet_matches_endpoint_sweep_oracle() {
        let a = iset("(0,1)u(2,3)");
        let b = iset("(1/2,5/2)");
        let m = a.meet(&b);
        for x in probes(&[&a, &b]) {
            assert_eq!(m.contains(&x), a.contains(&x) && b.contains(&x), "at {x}");
        }
    }

    #[test]
    fn contains_examples() {
        assert!(iset("(0,1)").contains(&rat(1, 2)));
        assert!(!iset("(0,1)").contains(&int(1)));
        assert!(iset("(-inf,inf)").contains(&rat(-7, 3)));
    }

    #[test]
    fn touching_intervals_stay_distinct() {
        let s = iset("(0,1)u(1,2)");
        assert_eq!(s.intervals().len(), 2);
        assert_eq!(s.to_string(), "(0,1)u(1,2)");
        assert_eq!(iset("(0,3/2)u(1,2)").to_string(), "(0,2)");
    }

    #[test]
    fn density_examples() {
        let zero = FinSet::from_iter([int(0)]);
        assert!(IntervalSet::full().dense_in_line(&zero));
        assert!(!iset("(0,inf)").dense_in_line(&FinSet::empty()));
        assert!(iset("(-inf,0)u(0,inf)").dense_in_line(&FinSet::empty()));
        assert!(!IntervalSet::empty().dense_in_line(&FinSet::empty()));
    }

    #[test]
    fn remove_and_pick() {
        let s = iset("(0,1)").remove_points(&FinSet::from_iter([rat(1, 2)]));
        assert_eq!(s.to_string(), "(0,1/2)u(1/2,1)");
        let p = iset("(0,1)").pick_avoiding(&FinSet::from_iter([rat(1, 2)])).unwrap();
        assert_eq!(p, rat(1, 4));
        assert_eq!(IntervalSet::full().pick_avoiding(&FinSet::empty()), Some(int(0)));
        assert_eq!(IntervalSet::empty().pick_avoiding(&FinSet::empty()), None);
    }

    #[test]
    fn eventual_membership_respects_open_ends() {
        let s = iset("(-1,0)u(0,1)");
        assert!(s.eventually_contains(&int(0), Approach::FromBelow));
        assert!(s.eventually_contains(&int(0), Approach::FromAbove));
        assert!(!iset("(0,1)").eventually_contains(&int(0), Approach::FromBelow));
        assert!(iset("(0,1)").eventually_contains(&int(1), Approach::FromBelow));
        assert!(!iset("(0,1)").eventually_contains(&int(1), Approach::FromAbove));
    }

    fn arb_set() -> impl Strategy<Value = IntervalSet> {
        prop::collection::vec((-8i64..8, 1i64..6, 1i64..4), 0..5).prop_map(|v| {
            IntervalSet::from_intervals(
                v.into_iter()
                    .map(|(a, len, d)| Open::new(ExtRat::Fin(rat(a, d)), ExtRat::Fin(rat(a, d) + rat(len, d))))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn meet_is_commutative_associative_idempotent(a in arb_set(), b in arb_set(), c in arb_set()) {
            prop_assert_eq!(a.meet(&b), b.meet(&a));
            prop_assert_eq!(a.meet(&b).meet(&c), a.meet(&b.meet(&c)));
            prop_assert_eq!(a.meet(&a), a.clone());
        }

        #[test]
        fn meet_membership_is_pointwise(a in arb_set(), b in arb_set()) {
            let m = a.meet(&b);
            for x in probes(&[&a, &b]) {
                prop_assert_eq!(m.contains(&x), a.contains(&x) && b.contains(&x));
            }
        }

        #[test]
        fn canonicalization_is_a_projection(a in arb_set()) {
            let again = IntervalSet::from_intervals(a.intervals().to_vec());
            prop_assert_eq!(&again, &a);
            let reparsed: IntervalSet = a.to_string().parse().unwrap();
            prop_assert_eq!(reparsed, a);
        }
    }
}
