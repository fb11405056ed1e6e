use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feather::{branch_avoiding, FeatherInterval, FeatherPoint, Skeleton};
use crate::kernel::{check_open, member_open, BasicOpen, Certificate, OpenSet, Point, Space};
use crate::multiline::branching::{BranchInterval, BranchPoint, Side};
use crate::multiline::{self as ml, Wave};
use crate::numeric::{int, CofiniteSet, IntervalSet};

/// An open cover, given by rule or by listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverDescriptor {
    /// The maximal Hausdorff dense opens of a multiline: the whole line, and
    /// the whole line with one abscissa lifted, for every up point.
    CanonicalWaves,
    /// The strict skeleton of the feather and its flip conjugates through
    /// every upper twin.
    Skeletons,
    Explicit(Vec<BasicOpen>),
}

impl CoverDescriptor {
    /// Whether `u` belongs to the family.
    pub fn admits(&self, space: &Space, u: &OpenSet) -> bool {
        if check_open(space, u).is_err() {
            return false;
        }
        match (self, u) {
            (CoverDescriptor::CanonicalWaves, OpenSet::Basics(bs)) => {
                matches!(bs.as_slice(), [BasicOpen::Wave(w)] if w.o().is_full() && w.lift().len() <= 1)
            }
            (CoverDescriptor::Skeletons, OpenSet::Skeleton(s)) => match s.word.as_slice() {
                [] => true,
                [x] => x.is_upper_twin(),
                _ => false,
            },
            (CoverDescriptor::Explicit(list), OpenSet::Basics(bs)) => bs.iter().all(|b| list.contains(b)),
            _ => false,
        }
    }
}

/// The maximal wave through `x`, or the skeleton conjugate containing it.
pub fn cover_member_for(space: &Space, x: &Point) -> Result<OpenSet> {
    match (space, x) {
        (Space::Multi(_), Point::Multi(p)) => Ok(OpenSet::basic(BasicOpen::Wave(ml::maximal_wave(p)))),
        (Space::Feather, Point::Feather(p)) => Ok(OpenSet::Skeleton(Skeleton::containing(p))),
        _ => Err(Error::Inapplicable(format!("no canonical cover member for {x} in {space}"))),
    }
}

/// Whether finitely many cofinite sets cover the naturals: one nonempty
/// member, and each of its excluded points caught by another.
pub fn cofinite_covers(sets: &[CofiniteSet]) -> bool {
    cofinite_uncovered(sets).is_none()
}

fn cofinite_uncovered(sets: &[CofiniteSet]) -> Option<u64> {
    let Some(excl) = sets.iter().find_map(|s| s.excluded()) else {
        return Some(0);
    };
    excl.iter().copied().find(|e| !sets.iter().any(|s| s.contains(*e)))
}

fn branch_uncovered(ivs: &[BranchInterval]) -> Option<BranchPoint> {
    [Side::L, Side::R].into_iter().find_map(|side| {
        let trace = ivs.iter().fold(IntervalSet::empty(), |acc, i| acc.union(&i.trace(side)));
        if trace.is_full() {
            return None;
        }
        let x = trace.endpoints().iter().next().cloned().unwrap_or_else(|| int(0));
        Some(BranchPoint::new(x, side))
    })
}

/// A point outside every listed open, or `None` when they cover the space.
pub fn uncovered_point(space: &Space, chosen: &[OpenSet]) -> Result<Option<Point>> {
    for u in chosen {
        check_open(space, u)?;
    }
    let basics: Vec<BasicOpen> = chosen
        .iter()
        .flat_map(|u| match u {
            OpenSet::Basics(bs) => bs.clone(),
            OpenSet::Skeleton(_) => Vec::new(),
        })
        .collect();
    let point = match space {
        Space::Multi(spec) => {
            let waves: Vec<Wave> = basics
                .iter()
                .filter_map(|b| match b {
                    BasicOpen::Wave(w) => Some(w.clone()),
                    _ => None,
                })
                .collect();
            ml::uncovered_by_waves(spec, &waves).map(Point::Multi)
        }
        Space::Feather => {
            let skeletons: Vec<&Skeleton> = chosen
                .iter()
                .filter_map(|u| match u {
                    OpenSet::Skeleton(s) => Some(s),
                    _ => None,
                })
                .collect();
            let ivs: Vec<FeatherInterval> = basics
                .iter()
                .filter_map(|b| match b {
                    BasicOpen::Feather(i) => Some(i.clone()),
                    _ => None,
                })
                .collect();
            // Skeleton images each hold finitely many upper twins, and no
            // interval reaches past the largest first coordinate it names.
            if skeletons.is_empty() {
                Some(Point::Feather(branch_avoiding(&ivs).strict_member()))
            } else {
                let z0 = ivs
                    .iter()
                    .flat_map(|i| [i.lower().first().clone(), i.upper().first().clone()])
                    .chain(skeletons.iter().flat_map(|s| s.word.iter().map(|p| p.first().clone())))
                    .max()
                    .map_or(int(0), |m| m.floor() + int(1));
                let twin = (0..)
                    .map(|k| &z0 + int(k))
                    .map(|z| FeatherPoint::new(vec![z.clone(), z]).expect("(z, z) is a point"))
                    .find(|p| !skeletons.iter().any(|s| s.contains(p)))
                    .expect("finitely many exceptions");
                Some(Point::Feather(twin))
            }
        }
        Space::Branching => {
            let ivs: Vec<BranchInterval> = basics
                .iter()
                .filter_map(|b| match b {
                    BasicOpen::Branch(i) => Some(i.clone()),
                    _ => None,
                })
                .collect();
            branch_uncovered(&ivs).map(Point::Branch)
        }
        Space::Cofinite => {
            let sets: Vec<CofiniteSet> = basics
                .iter()
                .filter_map(|b| match b {
                    BasicOpen::Cofinite(c) => Some(c.clone()),
                    _ => None,
                })
                .collect();
            cofinite_uncovered(&sets).map(Point::Cofinite)
        }
    };
    if let Some(p) = &point {
        for u in chosen {
            debug_assert!(!member_open(space, p, u)?, "{p} is covered by {u}");
        }
    }
    Ok(point)
}

/// Tries a listed subfamily of a cover: either it covers, or here is a point
/// it misses.
pub fn subcover_attempt(space: &Space, cover: &CoverDescriptor, chosen: &[OpenSet]) -> Result<(bool, Certificate)> {
    if let Some((i, _)) = chosen.iter().enumerate().find(|(_, u)| !cover.admits(space, u)) {
        return Err(Error::pre(format!("chosen member {i} is not in the cover")));
    }
    Ok(match uncovered_point(space, chosen)? {
        None => (true, Certificate::Covers { opens: chosen.to_vec() }),
        Some(point) => (false, Certificate::Uncovered { point, chosen: chosen.to_vec() }),
    })
}

/// A finite subcover of a cover of the naturals by cofinite sets: the first
/// nonempty member, then one member for each point it excludes.
pub fn quasi_compact_subcover(cover: &[CofiniteSet]) -> Result<(Vec<CofiniteSet>, Certificate)> {
    let first = cover
        .iter()
        .find(|c| !c.is_empty())
        .ok_or_else(|| Error::NotCovering("N(0)".into()))?;
    let mut sub = vec![first.clone()];
    for e in first.excluded().into_iter().flatten() {
        let catch = cover
            .iter()
            .find(|c| c.contains(*e))
            .ok_or_else(|| Error::NotCovering(format!("N({e})")))?;
        if !sub.contains(catch) {
            sub.push(catch.clone());
        }
    }
    let cert = Certificate::FiniteSubcover { cover: cover.to_vec(), sub: sub.clone() };
    Ok((sub, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::verify_certificate;

    fn d(s: &str) -> Point {
        s.parse().unwrap()
    }

    fn maximal(x: &str) -> OpenSet {
        cover_member_for(&Space::doubled(), &d(x)).unwrap()
    }

    #[test]
    fn doubled_line_subfamily_misses_an_up_point() {
        let chosen = vec![maximal("D(0 @0)"), maximal("D(0 @1)"), maximal("D(1 @1)"), maximal("D(2 @1)")];
        let (ok, cert) = subcover_attempt(&Space::doubled(), &CoverDescriptor::CanonicalWaves, &chosen).unwrap();
        assert!(!ok);
        assert!(matches!(&cert, Certificate::Uncovered { point, .. } if *point == d("D(3 @1)")));
        assert!(verify_certificate(&Space::doubled(), &cert));
    }

    #[test]
    fn one_wave_covers_the_line() {
        let line = Space::line();
        let chosen = vec![OpenSet::basic("W[(-inf,inf)]".parse().unwrap())];
        let (ok, cert) = subcover_attempt(&line, &CoverDescriptor::CanonicalWaves, &chosen).unwrap();
        assert!(ok && verify_certificate(&line, &cert));
    }

    #[test]
    fn feather_skeletons_miss_a_level_one_twin() {
        let f = Space::Feather;
        let chosen: Vec<OpenSet> = ["F(0)", "F(0,0)", "F(1,1)", "F(3,3)"]
            .iter()
            .map(|s| cover_member_for(&f, &s.parse().unwrap()).unwrap())
            .collect();
        let (ok, cert) = subcover_attempt(&f, &CoverDescriptor::Skeletons, &chosen).unwrap();
        assert!(!ok);
        assert!(matches!(&cert, Certificate::Uncovered { point, .. } if *point == "F(4,4)".parse().unwrap()));
        assert!(verify_certificate(&f, &cert));
    }

    #[test]
    fn chosen_members_must_come_from_the_cover() {
        let chosen = vec![OpenSet::basic("W[(0,1)]".parse().unwrap())];
        assert!(subcover_attempt(&Space::doubled(), &CoverDescriptor::CanonicalWaves, &chosen).is_err());
    }

    #[test]
    fn cofinite_subcovers() {
        let c = |s: &str| s.parse::<CofiniteSet>().unwrap();
        let (sub, cert) = quasi_compact_subcover(&[c("cofinite-excl{1}"), c("cofinite-excl{2}")]).unwrap();
        assert_eq!(sub, vec![c("cofinite-excl{1}"), c("cofinite-excl{2}")]);
        assert!(verify_certificate(&Space::Cofinite, &cert));
        let (sub, _) = quasi_compact_subcover(&[CofiniteSet::ground()]).unwrap();
        assert_eq!(sub, vec![CofiniteSet::ground()]);
        assert!(matches!(quasi_compact_subcover(&[c("cofinite-excl{1}")]), Err(Error::NotCovering(_))));
    }
}
