use serde::{Deserialize, Serialize};

use super::*;
use crate::homeo::{replay_feather, replay_multi, Generator};
use crate::multiline::{chain_connect, default_window, verify_chain, ChainOutcome, MultiLinePoint};
use crate::numeric::rat_serde;

/// A finite witness for a verdict. Each variant is re-checked by
/// [`verify_certificate`] without trusting whoever produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Certificate {
    /// Disjoint basics around `p` and `q`.
    SeparatedBy { p: Point, q: Point, bp: BasicOpen, bq: BasicOpen },
    /// A pair that no two open sets separate.
    TwinPair { p: Point, q: Point },
    /// A non-separable pair inside `open`.
    PairInside { p: Point, q: Point, open: OpenSet },
    /// A point that none of `chosen` contains.
    Uncovered { point: Point, chosen: Vec<OpenSet> },
    /// The listed opens cover the space.
    Covers { opens: Vec<OpenSet> },
    /// The family member `excl{index}` misses `candidate`.
    ExcludedBy { candidate: u64, index: u64 },
    Chain { src: Point, dst: Point, removed: Vec<Point>, links: Vec<BasicOpen> },
    /// The bounded chain search over the default window finds nothing.
    SearchExhausted { src: Point, dst: Point, removed: Vec<Point> },
    HomeoWord { word: Vec<Generator>, from: Point, to: Point },
    /// A word that swaps `p` and `q` and squares to the identity on probes.
    Involution { word: Vec<Generator>, p: Point, q: Point },
    /// The closed interval `[lo, hi]` in chart coordinates of the chart of
    /// radius `radius` at `center`, which lies inside `neighborhood`.
    Compact {
        center: Point,
        #[serde(with = "rat_serde")]
        radius: Rat,
        #[serde(with = "rat_serde")]
        lo: Rat,
        #[serde(with = "rat_serde")]
        hi: Rat,
        neighborhood: BasicOpen,
    },
    /// `point` lies in every listed open.
    Inhabited { point: Point, opens: Vec<OpenSet> },
    /// A nonempty basic disjoint from `open`.
    Avoids { basic: BasicOpen, open: OpenSet },
    Dense { open: OpenSet },
    Hausdorff { open: OpenSet },
    /// `open` holds `x`, is Hausdorff and dense, and adjoining `outside`
    /// brings in a partner it cannot be separated from.
    Maximal { x: Point, open: OpenSet, outside: Point, partner: Point },
    Converges { seq: SeqDescriptor, point: Point },
    Diverges { seq: SeqDescriptor, point: Point },
    /// `sub` is drawn from `cover` and covers the naturals.
    FiniteSubcover { cover: Vec<CofiniteSet>, sub: Vec<CofiniteSet> },
    /// `a` and `b` are a non-separable pair while `c` has no such partner.
    NonHomogeneity { a: Point, b: Point, c: Point },
    /// Each up point sits alone in its wave; the down point has a wave with
    /// no up points.
    DiscreteUp {
        isolating: Vec<(Point, BasicOpen)>,
        avoiding: Option<(Point, BasicOpen)>,
    },
    Bundle(Vec<Certificate>),
}

fn ok(r: Result<bool>) -> bool {
    r.unwrap_or(false)
}

fn multi_points(ps: &[Point]) -> Option<Vec<MultiLinePoint>> {
    ps.iter()
        .map(|p| match p {
            Point::Multi(m) => Some(m.clone()),
            _ => None,
        })
        .collect()
}

fn replay(space: &Space, word: &[Generator], p: &Point) -> Option<Point> {
    match (space, p) {
        (Space::Feather, Point::Feather(f)) => replay_feather(word, f).ok().map(Point::Feather),
        (Space::Multi(spec), Point::Multi(m)) => replay_multi(word, spec, m).ok().map(Point::Multi),
        _ => None,
    }
}

fn verify_twins(space: &Space, p: &Point, q: &Point) -> bool {
    ok(non_separable(space, p, q)) && matches!(refute(space, p, q), Ok(None))
}

fn covers(space: &Space, opens: &[OpenSet]) -> bool {
    matches!(crate::separation::uncovered_point(space, opens), Ok(None))
}

/// Re-derives the fact a certificate attests.
pub fn verify_certificate(space: &Space, c: &Certificate) -> bool {
    match c {
        Certificate::SeparatedBy { p, q, bp, bq } => {
            p != q && ok(member(space, p, bp)) && ok(member(space, q, bq)) && matches!(meet_basic(space, bp, bq), Ok(None))
        }
        Certificate::TwinPair { p, q } => verify_twins(space, p, q),
        Certificate::PairInside { p, q, open } => {
            verify_twins(space, p, q) && ok(member_open(space, p, open)) && ok(member_open(space, q, open))
        }
        Certificate::Uncovered { point, chosen } => {
            check_point(space, point).is_ok() && chosen.iter().all(|u| matches!(member_open(space, point, u), Ok(false)))
        }
        Certificate::Covers { opens } => opens.iter().all(|u| check_open(space, u).is_ok()) && covers(space, opens),
        Certificate::ExcludedBy { candidate, index } => {
            *space == Space::Cofinite && !CofiniteSet::excluding([*index]).contains(*candidate)
        }
        Certificate::Chain { src, dst, removed, links } => {
            let (Space::Multi(spec), Some(ends), Some(removed)) = (space, multi_points(&[src.clone(), dst.clone()]), multi_points(removed)) else {
                return false;
            };
            let Some(links) = links
                .iter()
                .map(|b| match b {
                    BasicOpen::Wave(w) => Some(w.clone()),
                    _ => None,
                })
                .collect::<Option<Vec<_>>>()
            else {
                return false;
            };
            verify_chain(spec, &ends[0], &ends[1], &removed, &links)
        }
        Certificate::SearchExhausted { src, dst, removed } => {
            let (Space::Multi(spec), Some(ends), Some(removed)) = (space, multi_points(&[src.clone(), dst.clone()]), multi_points(removed)) else {
                return false;
            };
            let mut all: Vec<&MultiLinePoint> = removed.iter().collect();
            all.extend(ends.iter());
            let window = default_window(&all);
            matches!(chain_connect(spec, &ends[0], &ends[1], &removed, &window), Ok(ChainOutcome::Inconclusive))
        }
        Certificate::HomeoWord { word, from, to } => {
            check_point(space, from).is_ok() && replay(space, word, from).as_ref() == Some(to)
        }
        Certificate::Involution { word, p, q } => {
            let twice = |x: &Point| replay(space, word, x).and_then(|y| replay(space, word, &y));
            check_point(space, p).is_ok()
                && replay(space, word, p).as_ref() == Some(q)
                && replay(space, word, q).as_ref() == Some(p)
                && involution_probes(space).iter().all(|x| twice(x).as_ref() == Some(x))
        }
        Certificate::Compact { center, radius, lo, hi, neighborhood } => {
            let Ok(ch) = chart(space, center, radius) else {
                return false;
            };
            !matches!(space, Space::Cofinite)
                && ok(member(space, center, neighborhood))
                && basic_subset(&ch, neighborhood)
                && -radius.clone() < *lo
                && *lo < int(0)
                && int(0) < *hi
                && *hi < *radius
        }
        Certificate::Inhabited { point, opens } => opens.iter().all(|u| ok(member_open(space, point, u))),
        Certificate::Avoids { basic, open } => verify_avoids(space, basic, open),
        Certificate::Dense { open } => matches!(dense(space, open), Ok((true, _))),
        Certificate::Hausdorff { open } => matches!(hausdorff_open(space, open), Ok((true, _))),
        Certificate::Maximal { x, open, outside, partner } => {
            ok(member_open(space, x, open))
                && matches!(member_open(space, outside, open), Ok(false))
                && ok(member_open(space, partner, open))
                && verify_twins(space, outside, partner)
                && matches!(hausdorff_open(space, open), Ok((true, _)))
                && matches!(dense(space, open), Ok((true, _)))
        }
        Certificate::Converges { seq, point } => {
            ok(converges(space, seq, point)) && ok(converges_by_charts(space, seq, point))
        }
        Certificate::Diverges { seq, point } => {
            matches!(converges(space, seq, point), Ok(false)) && matches!(converges_by_charts(space, seq, point), Ok(false))
        }
        Certificate::FiniteSubcover { cover, sub } => {
            *space == Space::Cofinite && sub.iter().all(|s| cover.contains(s)) && crate::separation::cofinite_covers(sub)
        }
        Certificate::NonHomogeneity { a, b, c } => {
            verify_twins(space, a, b) && c != a && c != b && ok(has_partner(space, a)) && matches!(has_partner(space, c), Ok(false))
        }
        Certificate::DiscreteUp { isolating, avoiding } => {
            let ups: Vec<&Point> = isolating.iter().map(|(p, _)| p).collect();
            let isolated = isolating.iter().all(|(p, b)| {
                matches!(p, Point::Multi(m) if m.is_up())
                    && ok(member(space, p, b))
                    && ups.iter().all(|q| *q == p || matches!(member(space, q, b), Ok(false)))
            });
            let avoided = avoiding.as_ref().is_none_or(|(p, b)| {
                ok(member(space, p, b)) && matches!(b, BasicOpen::Wave(w) if w.lift().is_empty())
            });
            isolated && avoided
        }
        Certificate::Bundle(cs) => cs.iter().all(|c| verify_certificate(space, c)),
    }
}

fn verify_avoids(space: &Space, basic: &BasicOpen, open: &OpenSet) -> bool {
    if !matches!(some_point(space, basic), Ok(Some(_))) {
        return false;
    }
    match open {
        OpenSet::Basics(bs) => bs.iter().all(|b| matches!(meet_basic(space, basic, b), Ok(None))),
        // Skeleton images are dense; nothing avoids them.
        OpenSet::Skeleton(_) => false,
    }
}

fn involution_probes(space: &Space) -> Vec<Point> {
    let raw: &[&str] = match space {
        Space::Feather => &["F(0)", "F(0,0)", "F(-1,1/2)", "F(2,3,3)"],
        Space::Multi(_) => &["D(0 @0)", "D(1/3 @0)", "D(-5/2 @0)", "D(7 @0)"],
        _ => &[],
    };
    raw.iter().filter_map(|s| s.parse().ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Point {
        s.parse().unwrap()
    }

    fn bo(s: &str) -> BasicOpen {
        s.parse().unwrap()
    }

    #[test]
    fn overlapping_separation_is_rejected() {
        let bad = Certificate::SeparatedBy {
            p: pt("D(0 @0)"),
            q: pt("D(1 @0)"),
            bp: bo("W[(-1,1)]"),
            bq: bo("W[(0,2)]"),
        };
        assert!(!verify_certificate(&Space::doubled(), &bad));
    }

    #[test]
    fn false_twin_claims_are_refuted() {
        let bad = Certificate::TwinPair { p: pt("F(0)"), q: pt("F(0,1)") };
        assert!(!verify_certificate(&Space::Feather, &bad));
    }

    #[test]
    fn json_shape_is_kind_and_payload() {
        let c = Certificate::TwinPair { p: pt("F(0)"), q: pt("F(0,0)") };
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"kind":"twin-pair","payload":{"p":"F(0)","q":"F(0,0)"}}"#);
        assert_eq!(serde_json::from_str::<Certificate>(&json).unwrap(), c);
        let e = Certificate::ExcludedBy { candidate: 3, index: 3 };
        assert!(verify_certificate(&Space::Cofinite, &e));
        assert!(!verify_certificate(&Space::Cofinite, &Certificate::ExcludedBy { candidate: 3, index: 4 }));
    }

    #[test]
    fn chains_with_gaps_fail() {
        let c = Certificate::Chain {
            src: pt("D(-1 @0)"),
            dst: pt("D(1 @0)"),
            removed: vec![],
            links: vec![bo("W[(-2,0)]"), bo("W[(0,2)]")],
        };
        assert!(!verify_certificate(&Space::doubled(), &c));
    }
}
