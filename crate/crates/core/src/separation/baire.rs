use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{check_basic, check_open, dense, member, member_open, some_point, BasicOpen, Certificate, OpenSet, Point, Space};
use crate::multiline::branching::BranchPoint;
use crate::multiline::{MultiLinePoint, Wave};
use crate::numeric::{FinSet, IntervalSet};

/// A family of dense opens whose intersection is asked for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DenseFamily {
    Finite(Vec<OpenSet>),
    /// The cofinite sets `excl{n}` for every natural `n`; `candidates`
    /// bounds how many points the certificate lists.
    CofiniteSingletons { candidates: u64 },
}

/// The outcome of intersecting a dense family with a probe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaireOutcome {
    Point(Point),
    Empty,
}

/// A point of `probe` in every member of the family, or `Empty` with every
/// candidate mapped to the member that excludes it.
pub fn baire_intersect(space: &Space, fam: &DenseFamily, probe: &BasicOpen) -> Result<(BaireOutcome, Certificate)> {
    check_basic(space, probe)?;
    let members = match fam {
        DenseFamily::CofiniteSingletons { candidates } => {
            if *space != Space::Cofinite {
                return Err(Error::TagMismatch(format!("the singleton complements live on cofinite, not {space}")));
            }
            let excluded = (0..*candidates).map(|n| Certificate::ExcludedBy { candidate: n, index: n }).collect();
            return Ok((BaireOutcome::Empty, Certificate::Bundle(excluded)));
        }
        DenseFamily::Finite(members) => members,
    };
    for (index, u) in members.iter().enumerate() {
        check_open(space, u)?;
        if !dense(space, u)?.0 {
            return Err(Error::NotDense { index });
        }
    }
    let point = match space {
        Space::Multi(_) => multi_point(members, probe),
        Space::Feather => {
            let BasicOpen::Feather(i) = probe else { unreachable!("probe checked") };
            // Finite unions of feather intervals are never dense, so every
            // member is a skeleton image with finitely many exceptions.
            i.members()
                .take(4096)
                .map(Point::Feather)
                .find(|p| members.iter().all(|u| matches!(member_open(space, p, u), Ok(true))))
        }
        Space::Branching => branch_point(members, probe),
        Space::Cofinite => {
            let BasicOpen::Cofinite(c) = probe else { unreachable!("probe checked") };
            // Nonempty cofinite sets share all but finitely many points.
            (0..4096u64)
                .filter(|n| c.contains(*n))
                .map(Point::Cofinite)
                .find(|p| members.iter().all(|u| matches!(member_open(space, p, u), Ok(true))))
        }
    };
    let point = match point {
        Some(p) => p,
        None if members.is_empty() => some_point(space, probe)?.ok_or_else(|| Error::pre("empty probe"))?,
        None => return Err(Error::pre(format!("no point of {probe} found in the family"))),
    };
    debug_assert!(member(space, &point, probe)?);
    let mut opens = vec![OpenSet::basic(probe.clone())];
    opens.extend(members.iter().cloned());
    Ok((BaireOutcome::Point(point.clone()), Certificate::Inhabited { point, opens }))
}

/// Intersects unions of waves by distributing meets, then prefers a down
/// point of the probe that avoids every endpoint and lift in sight.
fn multi_point(members: &[OpenSet], probe: &BasicOpen) -> Option<Point> {
    let BasicOpen::Wave(probe) = probe else { return None };
    let mut meet = vec![probe.clone()];
    let mut avoid = FinSet::empty();
    for u in members {
        let OpenSet::Basics(bs) = u else { return None };
        let waves: Vec<&Wave> = bs
            .iter()
            .filter_map(|b| match b {
                BasicOpen::Wave(w) => Some(w),
                _ => None,
            })
            .collect();
        for w in &waves {
            avoid = avoid.union(&w.lifted_abscissae()).union(&w.o().endpoints());
        }
        meet = meet
            .iter()
            .flat_map(|m| waves.iter().map(move |w| m.meet(w)))
            .filter(|m| !m.is_empty())
            .collect();
    }
    let contained = |p: &MultiLinePoint| meet.iter().any(|m| m.contains(p));
    probe
        .o()
        .pick_avoiding(&avoid)
        .map(MultiLinePoint::down)
        .filter(contained)
        .or_else(|| meet.iter().find_map(Wave::down_witness))
        .map(Point::Multi)
}

fn branch_point(members: &[OpenSet], probe: &BasicOpen) -> Option<Point> {
    let BasicOpen::Branch(probe) = probe else { return None };
    let side = probe.side();
    let trace = members.iter().try_fold(probe.trace(side), |acc, u| {
        let OpenSet::Basics(bs) = u else { return None };
        let union = bs.iter().fold(IntervalSet::empty(), |t, b| match b {
            BasicOpen::Branch(i) => t.union(&i.trace(side)),
            _ => t,
        });
        Some(acc.meet(&union))
    })?;
    let origin: FinSet = [crate::numeric::int(0)].into_iter().collect();
    let x = trace.pick_avoiding(&origin)?;
    Some(Point::Branch(BranchPoint::new(x, side)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::verify_certificate;
    use crate::numeric::CofiniteSet;

    fn open(s: &str) -> OpenSet {
        OpenSet::basic(s.parse().unwrap())
    }

    #[test]
    fn doubled_line_finite_family() {
        let d = Space::doubled();
        let fam = DenseFamily::Finite(vec![open("W[(-inf,inf) - {0^1}]"), open("W[(-inf,inf) - {1^1}]")]);
        let (out, cert) = baire_intersect(&d, &fam, &"W[(-1,2)]".parse().unwrap()).unwrap();
        assert_eq!(out, BaireOutcome::Point("D(1/2 @0)".parse().unwrap()));
        assert!(verify_certificate(&d, &cert));
    }

    #[test]
    fn cofinite_singletons_have_empty_intersection() {
        let fam = DenseFamily::CofiniteSingletons { candidates: 10 };
        let (out, cert) = baire_intersect(&Space::Cofinite, &fam, &BasicOpen::Cofinite(CofiniteSet::ground())).unwrap();
        assert_eq!(out, BaireOutcome::Empty);
        let Certificate::Bundle(items) = &cert else { panic!("bundle expected") };
        assert_eq!(items.len(), 10);
        assert_eq!(items[3], Certificate::ExcludedBy { candidate: 3, index: 3 });
        assert!(verify_certificate(&Space::Cofinite, &cert));
    }

    #[test]
    fn empty_family_returns_a_probe_point() {
        let probe: BasicOpen = "BI[(1,2)@R]".parse().unwrap();
        let (out, cert) = baire_intersect(&Space::Branching, &DenseFamily::Finite(Vec::new()), &probe).unwrap();
        assert_eq!(out, BaireOutcome::Point("B(3/2 @R)".parse().unwrap()));
        assert!(verify_certificate(&Space::Branching, &cert));
    }

    #[test]
    fn feather_skeletons_meet_in_the_probe() {
        let f = Space::Feather;
        let fam = DenseFamily::Finite(vec![
            OpenSet::Skeleton(crate::feather::Skeleton::strict()),
            OpenSet::Skeleton(crate::feather::Skeleton::containing(&"F(0,1/2,1/2)".parse().unwrap())),
        ]);
        let (_, cert) = baire_intersect(&f, &fam, &"FI[(0,0);(0,1/2,3)]".parse().unwrap()).unwrap();
        assert!(verify_certificate(&f, &cert));
    }

    #[test]
    fn non_dense_members_are_rejected() {
        let fam = DenseFamily::Finite(vec![open("W[(-inf,inf)]"), open("W[(0,1)]")]);
        let err = baire_intersect(&Space::doubled(), &fam, &"W[(0,1)]".parse().unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotDense { index: 1 }));
    }
}
