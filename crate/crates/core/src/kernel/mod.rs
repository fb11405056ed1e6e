//! One vocabulary for every implemented space: points, basic opens, open
//! sets, and the decision procedures over them. Every verdict comes with a
//! [`Certificate`] that [`verify_certificate`] re-checks from scratch.

mod certificate;
mod types;
mod witness;

pub use certificate::{verify_certificate, Certificate};
pub use types::{BasicOpen, OpenSet, Point, SeqDescriptor, Space};
pub use witness::{branching_non_homogeneity, chain, convergence, discrete_up, involution, move_point};

use crate::error::{Error, Result};
use crate::feather::{self, branch_avoiding, sequence_limits, twin_pair_in, Chart, FeatherInterval};
use crate::multiline::branching::{branch_limits, branch_non_separable, branch_separation, BranchInterval, BranchPoint, Side};
use crate::multiline::{self as ml, Wave};
use crate::numeric::{int, CofiniteSet, Rat};

fn mismatch(space: &Space, what: impl std::fmt::Display) -> Error {
    Error::TagMismatch(format!("{what} does not belong to {space}"))
}

pub fn check_point(space: &Space, p: &Point) -> Result<()> {
    match (space, p) {
        (Space::Feather, Point::Feather(_)) | (Space::Branching, Point::Branch(_)) | (Space::Cofinite, Point::Cofinite(_)) => Ok(()),
        (Space::Multi(spec), Point::Multi(q)) => spec.check(q),
        _ => Err(mismatch(space, p)),
    }
}

pub fn check_basic(space: &Space, b: &BasicOpen) -> Result<()> {
    match (space, b) {
        (Space::Feather, BasicOpen::Feather(_)) | (Space::Branching, BasicOpen::Branch(_)) | (Space::Cofinite, BasicOpen::Cofinite(_)) => Ok(()),
        (Space::Multi(spec), BasicOpen::Wave(w)) => w.check(spec),
        _ => Err(mismatch(space, b)),
    }
}

pub fn check_open(space: &Space, u: &OpenSet) -> Result<()> {
    match u {
        OpenSet::Basics(bs) => bs.iter().try_for_each(|b| check_basic(space, b)),
        OpenSet::Skeleton(_) if *space == Space::Feather => Ok(()),
        OpenSet::Skeleton(_) => Err(mismatch(space, u)),
    }
}

pub fn member(space: &Space, p: &Point, b: &BasicOpen) -> Result<bool> {
    check_point(space, p)?;
    check_basic(space, b)?;
    Ok(match (p, b) {
        (Point::Feather(p), BasicOpen::Feather(b)) => b.contains(p),
        (Point::Multi(p), BasicOpen::Wave(b)) => b.contains(p),
        (Point::Branch(p), BasicOpen::Branch(b)) => b.contains(p),
        (Point::Cofinite(n), BasicOpen::Cofinite(b)) => b.contains(*n),
        _ => unreachable!("tags checked"),
    })
}

pub fn member_open(space: &Space, p: &Point, u: &OpenSet) -> Result<bool> {
    match u {
        OpenSet::Basics(bs) => {
            for b in bs {
                if member(space, p, b)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        OpenSet::Skeleton(s) => match (space, p) {
            (Space::Feather, Point::Feather(p)) => Ok(s.contains(p)),
            _ => Err(mismatch(space, p)),
        },
    }
}

/// The intersection of two basics, as a basic when nonempty.
pub fn meet_basic(space: &Space, a: &BasicOpen, b: &BasicOpen) -> Result<Option<BasicOpen>> {
    check_basic(space, a)?;
    check_basic(space, b)?;
    Ok(match (a, b) {
        (BasicOpen::Feather(a), BasicOpen::Feather(b)) => a.meet(b).map(BasicOpen::Feather),
        (BasicOpen::Wave(a), BasicOpen::Wave(b)) => Some(a.meet(b)).filter(|w| !w.is_empty()).map(BasicOpen::Wave),
        (BasicOpen::Branch(a), BasicOpen::Branch(b)) => a.meet(b).map(BasicOpen::Branch),
        (BasicOpen::Cofinite(a), BasicOpen::Cofinite(b)) => Some(a.meet(b)).filter(|c| !c.is_empty()).map(BasicOpen::Cofinite),
        _ => unreachable!("tags checked"),
    })
}

pub fn meet(space: &Space, a: &BasicOpen, b: &BasicOpen) -> Result<OpenSet> {
    Ok(OpenSet::Basics(meet_basic(space, a, b)?.into_iter().collect()))
}

/// Canonical neighborhood of `p` at scale `eps`. On the cofinite space the
/// scale only decides how many other points are dropped.
pub fn chart(space: &Space, p: &Point, eps: &Rat) -> Result<BasicOpen> {
    check_point(space, p)?;
    if *eps <= int(0) {
        return Err(Error::pre("chart radius must be positive"));
    }
    Ok(match p {
        Point::Feather(p) => BasicOpen::Feather(Chart::new(p, eps)?.domain().clone()),
        Point::Multi(p) => BasicOpen::Wave(ml::chart_wave(p, eps)?),
        Point::Branch(p) => BasicOpen::Branch(BranchInterval::chart(p, eps)?),
        Point::Cofinite(n) => {
            let reach = (int(1) / eps).ceil().to_integer();
            let reach: u64 = reach.try_into().unwrap_or(u64::MAX).min(64);
            BasicOpen::Cofinite(CofiniteSet::excluding((0..=reach).filter(|m| m != n)))
        }
    })
}

/// The characterization of the non-separable pairs of each space.
pub fn non_separable(space: &Space, p: &Point, q: &Point) -> Result<bool> {
    check_point(space, p)?;
    check_point(space, q)?;
    Ok(p != q
        && match (p, q) {
            (Point::Feather(a), Point::Feather(b)) => a.twin() == *b,
            (Point::Multi(a), Point::Multi(b)) => ml::line_non_separable(a, b),
            (Point::Branch(a), Point::Branch(b)) => branch_non_separable(a, b),
            (Point::Cofinite(_), Point::Cofinite(_)) => true,
            _ => unreachable!("tags checked"),
        })
}

/// Whether `p` has a partner it cannot be separated from.
pub fn has_partner(space: &Space, p: &Point) -> Result<bool> {
    check_point(space, p)?;
    Ok(match (space, p) {
        (Space::Feather, _) | (Space::Cofinite, _) => true,
        (Space::Multi(spec), Point::Multi(p)) => spec.levels_at(&p.x) > 1,
        (Space::Branching, Point::Branch(p)) => p.x() == &int(0),
        _ => unreachable!("tags checked"),
    })
}

/// Searches charts at the refuter scales for a disjoint pair.
pub fn refute(space: &Space, p: &Point, q: &Point) -> Result<Option<(BasicOpen, BasicOpen)>> {
    let scales = feather::refuter_scales();
    for ep in &scales {
        let bp = chart(space, p, ep)?;
        for eq in &scales {
            let bq = chart(space, q, eq)?;
            if meet_basic(space, &bp, &bq)?.is_none() {
                return Ok(Some((bp, bq)));
            }
        }
    }
    Ok(None)
}

/// Decides separability, returning disjoint basics or the non-separable pair.
pub fn separable(space: &Space, p: &Point, q: &Point) -> Result<(bool, Certificate)> {
    check_point(space, p)?;
    check_point(space, q)?;
    if p == q {
        return Err(Error::pre(format!("{p} is compared with itself")));
    }
    let pair = match (space, p, q) {
        (Space::Feather, Point::Feather(a), Point::Feather(b)) => {
            feather::separating_charts(a, b).map(|(x, y)| (BasicOpen::Feather(x.domain().clone()), BasicOpen::Feather(y.domain().clone())))
        }
        (Space::Multi(spec), Point::Multi(a), Point::Multi(b)) => {
            ml::separable_line(spec, a, b)?.map(|(x, y)| (BasicOpen::Wave(x), BasicOpen::Wave(y)))
        }
        (Space::Branching, Point::Branch(a), Point::Branch(b)) => {
            branch_separation(a, b).map(|(x, y)| (BasicOpen::Branch(x), BasicOpen::Branch(y)))
        }
        (Space::Cofinite, _, _) => None,
        _ => unreachable!("tags checked"),
    };
    Ok(match pair {
        Some((bp, bq)) => (true, Certificate::SeparatedBy { p: p.clone(), q: q.clone(), bp, bq }),
        None => (false, Certificate::TwinPair { p: p.clone(), q: q.clone() }),
    })
}

fn check_seq(space: &Space, s: &SeqDescriptor) -> Result<()> {
    check_point(space, &s.base)?;
    if let Space::Cofinite = space {
        return Err(Error::Inapplicable("sequences on the cofinite space".into()));
    }
    Ok(())
}

/// All limits of a parametric sequence, in closed form.
pub fn limits(space: &Space, s: &SeqDescriptor) -> Result<Vec<Point>> {
    check_seq(space, s)?;
    Ok(match (space, &s.base) {
        (Space::Feather, Point::Feather(b)) => sequence_limits(b.prefix(), &s.limit, s.side)?
            .into_iter()
            .map(Point::Feather)
            .collect(),
        (Space::Multi(spec), Point::Multi(b)) => ml::line_limits(spec, &s.limit, b.level)?
            .into_iter()
            .map(Point::Multi)
            .collect(),
        (Space::Branching, Point::Branch(b)) => branch_limits(&s.limit, b.side(), s.side)
            .into_iter()
            .map(Point::Branch)
            .collect(),
        _ => unreachable!("tags checked"),
    })
}

pub fn converges(space: &Space, s: &SeqDescriptor, p: &Point) -> Result<bool> {
    check_point(space, p)?;
    Ok(limits(space, s)?.contains(p))
}

/// Whether a tail of the sequence lies in `b`, read off the symbolic form.
pub fn tail_in(space: &Space, s: &SeqDescriptor, b: &BasicOpen) -> Result<bool> {
    check_seq(space, s)?;
    check_basic(space, b)?;
    Ok(match (&s.base, b) {
        (Point::Feather(base), BasicOpen::Feather(i)) => i.eventually_contains(base.prefix(), &s.limit, s.side),
        (Point::Multi(base), BasicOpen::Wave(w)) => ml::wave_eventually_contains(w, &s.limit, base.level, s.side),
        (Point::Branch(base), BasicOpen::Branch(i)) => i.trace(base.side()).eventually_contains(&s.limit, s.side),
        _ => unreachable!("tags checked"),
    })
}

/// Convergence decided against the chart family at the refuter scales and a
/// much finer one. Independent of the closed form in [`limits`].
pub fn converges_by_charts(space: &Space, s: &SeqDescriptor, p: &Point) -> Result<bool> {
    let mut scales = feather::refuter_scales().to_vec();
    scales.push(Rat::new(1.into(), 1024.into()));
    for e in &scales {
        if !tail_in(space, s, &chart(space, p, e)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A nonempty basic that misses `u`, or `None` when `u` is dense.
pub fn avoiding_basic(space: &Space, u: &OpenSet) -> Result<Option<BasicOpen>> {
    check_open(space, u)?;
    let bs = match u {
        OpenSet::Skeleton(_) => return Ok(None),
        OpenSet::Basics(bs) => bs,
    };
    Ok(match space {
        Space::Feather => {
            let ivs: Vec<FeatherInterval> = bs.iter().filter_map(|b| match b {
                BasicOpen::Feather(i) => Some(i.clone()),
                _ => None,
            }).collect();
            Some(BasicOpen::Feather(branch_avoiding(&ivs)))
        }
        Space::Multi(_) => {
            let waves = waves_of(bs);
            ml::waves_shadow(&waves)
                .gap()
                .map(|g| BasicOpen::Wave(Wave::interval(g.lo, g.hi)))
        }
        Space::Branching => {
            let ivs = branches_of(bs);
            [Side::L, Side::R].into_iter().find_map(|side| {
                let trace = ivs.iter().fold(crate::numeric::IntervalSet::empty(), |acc, i| acc.union(&i.trace(side)));
                trace.gap().map(|g| BasicOpen::Branch(BranchInterval::new(g.lo, g.hi, side).expect("gaps are nonempty")))
            })
        }
        Space::Cofinite => {
            let nonempty = bs.iter().any(|b| matches!(b, BasicOpen::Cofinite(c) if !c.is_empty()));
            (!nonempty).then(|| BasicOpen::Cofinite(CofiniteSet::ground()))
        }
    })
}

pub fn dense(space: &Space, u: &OpenSet) -> Result<(bool, Certificate)> {
    Ok(match avoiding_basic(space, u)? {
        None => (true, Certificate::Dense { open: u.clone() }),
        Some(basic) => (false, Certificate::Avoids { basic, open: u.clone() }),
    })
}

/// A non-separable pair inside `u`, or `None` when `u` is Hausdorff.
pub fn twin_pair_inside(space: &Space, u: &OpenSet) -> Result<Option<(Point, Point)>> {
    check_open(space, u)?;
    let bs = match u {
        OpenSet::Skeleton(_) => return Ok(None),
        OpenSet::Basics(bs) => bs,
    };
    Ok(match space {
        Space::Feather => {
            let ivs: Vec<FeatherInterval> = bs.iter().filter_map(|b| match b {
                BasicOpen::Feather(i) => Some(i.clone()),
                _ => None,
            }).collect();
            twin_pair_in(&ivs).map(|(a, b)| (Point::Feather(a), Point::Feather(b)))
        }
        Space::Multi(_) => ml::waves_twin_pair(&waves_of(bs)).map(|(a, b)| (Point::Multi(a), Point::Multi(b))),
        Space::Branching => {
            let (l, r) = (BranchPoint::origin(Side::L), BranchPoint::origin(Side::R));
            let ivs = branches_of(bs);
            (ivs.iter().any(|i| i.contains(&l)) && ivs.iter().any(|i| i.contains(&r)))
                .then_some((Point::Branch(l), Point::Branch(r)))
        }
        Space::Cofinite => {
            let mut members = bs.iter().filter_map(|b| match b {
                BasicOpen::Cofinite(c) => c.first_member().map(|m| (c, m)),
                _ => None,
            });
            members.next().map(|(c, m)| {
                let second = (m + 1..).find(|n| c.contains(*n)).expect("cofinite sets are infinite");
                (Point::Cofinite(m), Point::Cofinite(second))
            })
        }
    })
}

pub fn hausdorff_open(space: &Space, u: &OpenSet) -> Result<(bool, Certificate)> {
    Ok(match twin_pair_inside(space, u)? {
        None => (true, Certificate::Hausdorff { open: u.clone() }),
        Some((p, q)) => (false, Certificate::PairInside { p, q, open: u.clone() }),
    })
}

pub(crate) fn waves_of(bs: &[BasicOpen]) -> Vec<Wave> {
    bs.iter()
        .filter_map(|b| match b {
            BasicOpen::Wave(w) => Some(w.clone()),
            _ => None,
        })
        .collect()
}

fn branches_of(bs: &[BasicOpen]) -> Vec<BranchInterval> {
    bs.iter()
        .filter_map(|b| match b {
            BasicOpen::Branch(i) => Some(i.clone()),
            _ => None,
        })
        .collect()
}

/// Whether `a` lies inside `b`. Basics of different spaces never nest.
pub fn basic_subset(a: &BasicOpen, b: &BasicOpen) -> bool {
    match (a, b) {
        (BasicOpen::Feather(a), BasicOpen::Feather(b)) => a.is_subset(b),
        (BasicOpen::Wave(a), BasicOpen::Wave(b)) => a.is_subset(b),
        (BasicOpen::Branch(a), BasicOpen::Branch(b)) => a.is_subset(b),
        (BasicOpen::Cofinite(a), BasicOpen::Cofinite(b)) => match (a.excluded(), b.excluded()) {
            (_, None) => a.is_empty(),
            (None, _) => true,
            (Some(ea), Some(eb)) => eb.is_subset(ea),
        },
        _ => false,
    }
}

/// Any point of a nonempty basic.
pub fn some_point(space: &Space, b: &BasicOpen) -> Result<Option<Point>> {
    check_basic(space, b)?;
    Ok(match b {
        BasicOpen::Feather(i) => Some(Point::Feather(i.strict_member())),
        BasicOpen::Wave(w) => w.down_witness().map(Point::Multi),
        BasicOpen::Branch(i) => {
            let o = i.open();
            let x = crate::numeric::IntervalSet::from_intervals(vec![o]).pick_avoiding(&Default::default());
            x.map(|x| Point::Branch(BranchPoint::new(x, i.side())))
        }
        BasicOpen::Cofinite(c) => c.first_member().map(Point::Cofinite),
    })
}

/// A basic containing the whole space, where one exists.
pub fn whole(space: &Space) -> Option<BasicOpen> {
    match space {
        Space::Multi(_) => Some(BasicOpen::Wave(Wave::full())),
        Space::Cofinite => Some(BasicOpen::Cofinite(CofiniteSet::ground())),
        Space::Feather | Space::Branching => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Approach;

    fn pt(s: &str) -> Point {
        s.parse().unwrap()
    }

    fn bo(s: &str) -> BasicOpen {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(member(&Space::doubled(), &pt("D(0 @1)"), &bo("W[(-1,1) - {0^1}]")).unwrap());
        assert!(member(&Space::Feather, &pt("F(0,1/2)"), &bo("FI[(0,0);(0,1)]")).unwrap());
        assert!(!member(&Space::Cofinite, &pt("N(5)"), &bo("cofinite-excl{5}")).unwrap());
        assert!(member(&Space::Feather, &pt("D(0 @0)"), &bo("FI[(0,0);(0,1)]")).is_err());
    }

    #[test]
    fn meet_examples() {
        let d = Space::doubled();
        assert_eq!(meet(&d, &bo("W[(-1,1) - {0^1}]"), &bo("W[(0,2)]")).unwrap(), OpenSet::basic(bo("W[(0,1)]")));
        assert_eq!(meet(&Space::Feather, &bo("FI[(-1);(1)]"), &bo("FI[(0);(2)]")).unwrap(), OpenSet::basic(bo("FI[(0);(1)]")));
        assert_eq!(
            meet(&Space::Cofinite, &bo("cofinite-excl{1,2}"), &bo("cofinite-excl{2,3}")).unwrap(),
            OpenSet::basic(bo("cofinite-excl{1,2,3}"))
        );
    }

    #[test]
    fn separability_examples() {
        let (ok, cert) = separable(&Space::Feather, &pt("F(0)"), &pt("F(0,0)")).unwrap();
        assert!(!ok);
        assert!(verify_certificate(&Space::Feather, &cert));
        let (ok, _) = separable(&Space::doubled(), &pt("D(0 @0)"), &pt("D(0 @1)")).unwrap();
        assert!(!ok);
        let (ok, cert) = separable(&Space::doubled(), &pt("D(0 @0)"), &pt("D(1 @1)")).unwrap();
        assert!(ok);
        assert_eq!(
            cert,
            Certificate::SeparatedBy {
                p: pt("D(0 @0)"),
                q: pt("D(1 @1)"),
                bp: bo("W[(-1/2,1/2)]"),
                bq: bo("W[(1/2,3/2) - {1^1}]"),
            }
        );
        assert!(verify_certificate(&Space::doubled(), &cert));
        assert!(separable(&Space::Feather, &pt("F(1)"), &pt("F(1)")).is_err());
        let (ok, cert) = separable(&Space::Cofinite, &pt("N(1)"), &pt("N(2)")).unwrap();
        assert!(!ok && verify_certificate(&Space::Cofinite, &cert));
    }

    #[test]
    fn convergence_examples() {
        let s = SeqDescriptor::feather(&[int(0)], int(1), Approach::FromBelow).unwrap();
        assert!(converges(&Space::Feather, &s, &pt("F(0,1)")).unwrap());
        assert!(converges(&Space::Feather, &s, &pt("F(0,1,1)")).unwrap());
        let s = SeqDescriptor::feather(&[int(0)], int(1), Approach::FromAbove).unwrap();
        assert!(converges(&Space::Feather, &s, &pt("F(0,1)")).unwrap());
        assert!(!converges(&Space::Feather, &s, &pt("F(0,1,1)")).unwrap());
        let s = SeqDescriptor::new(pt("D(5 @0)"), int(0), Approach::FromBelow);
        for p in ["D(0 @0)", "D(0 @1)"] {
            assert!(converges(&Space::doubled(), &s, &pt(p)).unwrap());
            assert!(converges_by_charts(&Space::doubled(), &s, &pt(p)).unwrap());
        }
    }

    #[test]
    fn closed_forms_match_charts_on_the_branching_line() {
        let space = Space::Branching;
        for (base, lim, side) in [("B(1 @R)", 0, Approach::FromBelow), ("B(1 @R)", 0, Approach::FromAbove), ("B(1 @L)", 2, Approach::FromBelow)] {
            let s = SeqDescriptor::new(pt(base), int(lim), side);
            for c in ["B(0 @L)", "B(0 @R)", "B(2 @L)", "B(2 @R)", "B(-1 @L)"] {
                assert_eq!(
                    converges(&space, &s, &pt(c)).unwrap(),
                    converges_by_charts(&space, &s, &pt(c)).unwrap(),
                    "{s} {c}"
                );
            }
        }
    }

    #[test]
    fn density_examples() {
        let d = Space::doubled();
        assert!(dense(&d, &OpenSet::basic(bo("W[(-inf,inf)]"))).unwrap().0);
        let (ok, cert) = dense(&d, &OpenSet::basic(bo("W[(0,inf)]"))).unwrap();
        assert!(!ok && verify_certificate(&d, &cert));
        let skel = OpenSet::Skeleton(feather::Skeleton::strict());
        assert!(dense(&Space::Feather, &skel).unwrap().0);
        let (ok, cert) = dense(&Space::Feather, &OpenSet::basic(bo("FI[(-1);(1)]"))).unwrap();
        assert!(!ok && verify_certificate(&Space::Feather, &cert));
    }

    #[test]
    fn hausdorff_examples() {
        let d = Space::doubled();
        assert!(hausdorff_open(&d, &OpenSet::basic(bo("W[(-inf,inf)]"))).unwrap().0);
        let u = OpenSet::Basics(vec![bo("W[(-1,1) - {0^1}]"), bo("W[(-1,1)]")]);
        let (ok, cert) = hausdorff_open(&d, &u).unwrap();
        assert!(!ok);
        assert_eq!(cert, Certificate::PairInside { p: pt("D(0 @0)"), q: pt("D(0 @1)"), open: u });
        assert!(verify_certificate(&d, &cert));
        assert!(hausdorff_open(&Space::Feather, &OpenSet::basic(bo("FI[(-1);(0,1)]"))).unwrap().0);
    }
}
