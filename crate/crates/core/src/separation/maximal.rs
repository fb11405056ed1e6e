use crate::error::{Error, Result};
use crate::feather::Skeleton;
use crate::kernel::{check_point, dense, hausdorff_open, member_open, whole, BasicOpen, Certificate, OpenSet, Point, Space};
use crate::multiline::branching::{BranchInterval, BranchPoint};
use crate::multiline::{self as ml, MultiLinePoint};
use crate::numeric::{int, ExtRat};

/// A Hausdorff dense open holding `x` that admits no further point.
///
/// When the whole space is Hausdorff the certificate bundles `Hausdorff`,
/// `Dense` and `Covers`; otherwise it is a `Maximal` naming one outside
/// point and the partner inside it cannot be separated from.
pub fn maximal_hausdorff_at(space: &Space, x: &Point) -> Result<(OpenSet, Certificate)> {
    check_point(space, x)?;
    let (open, outside) = match (space, x) {
        (Space::Multi(spec), Point::Multi(p)) => {
            let w = ml::maximal_wave(p);
            let outside = if spec.levels_at(&p.x) > 1 {
                let other = (0..spec.levels_at(&p.x)).find(|l| *l != p.level).expect("two levels");
                Some(MultiLinePoint::new(p.x.clone(), other))
            } else {
                ml::uncovered_by_waves(spec, std::slice::from_ref(&w))
            };
            (OpenSet::basic(BasicOpen::Wave(w)), outside.map(Point::Multi))
        }
        (Space::Feather, Point::Feather(p)) => (OpenSet::Skeleton(Skeleton::containing(p)), Some(Point::Feather(p.twin()))),
        (Space::Branching, Point::Branch(p)) => {
            let side = p.side();
            let open = OpenSet::Basics(vec![
                BasicOpen::Branch(BranchInterval::whole(side)),
                BasicOpen::Branch(BranchInterval::new(int(0), ExtRat::PosInf, side.other())?),
            ]);
            (open, Some(Point::Branch(BranchPoint::origin(side.other()))))
        }
        _ => {
            return Err(Error::Inapplicable(format!(
                "{space} has no Hausdorff open with two points"
            )))
        }
    };
    let Some(outside) = outside else {
        let opens = vec![open.clone()];
        let cert = Certificate::Bundle(vec![
            hausdorff_open(space, &open)?.1,
            dense(space, &open)?.1,
            Certificate::Covers { opens },
        ]);
        return Ok((open, cert));
    };
    let partner = adjoin_partner(space, &open, &outside)?;
    let cert = Certificate::Maximal { x: x.clone(), open: open.clone(), outside, partner };
    Ok((open, cert))
}

/// The point of `open` that `outside` cannot be separated from, so that
/// `open` plus `outside` is no longer Hausdorff.
pub fn adjoin_partner(space: &Space, open: &OpenSet, outside: &Point) -> Result<Point> {
    check_point(space, outside)?;
    if member_open(space, outside, open)? {
        return Err(Error::pre(format!("{outside} already lies in {open}")));
    }
    let candidates: Vec<Point> = match outside {
        Point::Feather(p) => vec![Point::Feather(p.twin())],
        Point::Multi(p) => {
            let levels = space.spec()?.levels_at(&p.x);
            (0..levels)
                .filter(|l| *l != p.level)
                .map(|l| Point::Multi(MultiLinePoint::new(p.x.clone(), l)))
                .collect()
        }
        Point::Branch(p) if p.x() == &int(0) => vec![Point::Branch(BranchPoint::origin(p.side().other()))],
        Point::Branch(_) => Vec::new(),
        Point::Cofinite(n) => vec![Point::Cofinite(if *n == 0 { 1 } else { 0 })],
    };
    for c in candidates {
        if member_open(space, &c, open)? {
            return Ok(c);
        }
    }
    Err(Error::pre(format!("{outside} has no partner inside {open}")))
}

/// The non-separable pair created by adjoining `outside` to `open`.
pub fn adjoin_witness(space: &Space, open: &OpenSet, outside: &Point) -> Result<Certificate> {
    let partner = adjoin_partner(space, open, outside)?;
    Ok(Certificate::TwinPair { p: outside.clone(), q: partner })
}

/// The whole space as one open, where a single basic presents it.
pub fn whole_open(space: &Space) -> Option<OpenSet> {
    whole(space).map(OpenSet::basic)
}
