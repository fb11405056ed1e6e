//! The complete feather: the everywhere branching line.
//!
//! Points are finite sequences `s_0 < ... < s_{n-1} <= s_n` with the order
//! topology of the prefix order. Every point has a *twin* it cannot be
//! separated from, and flips plus translations act transitively.

mod chart;
mod flip;
mod homotopy;
mod interval;
mod point;
mod skeleton;

pub use chart::Chart;
pub use flip::{flip_apply, normalize_to_line, replay_flips};
pub use homotopy::{fold, homotopy_eval, homotopy_trace, seam_sides, SeamSides, Tail};
pub use interval::{FeatherInterval, Segment};
pub use point::FeatherPoint;
pub use skeleton::Skeleton;

use crate::error::{Error, Result};
use crate::numeric::{dist, int, rat, Approach, ExtRat, Rat};

/// Scales searched by the bounded refuter.
pub fn refuter_scales() -> [Rat; 4] {
    [int(1), rat(1, 2), rat(1, 4), rat(1, 8)]
}

/// Whether `(prefix, limit ∓ 1/m)` has valid terms for all large `m`.
pub fn sequence_is_valid(prefix: &[Rat], limit: &Rat, side: Approach) -> bool {
    match (prefix.last(), side) {
        (None, _) => true,
        (Some(last), Approach::FromBelow) => limit > last,
        (Some(last), Approach::FromAbove) => limit >= last,
    }
}

/// Limit points of `(prefix, limit ∓ 1/m)`: the point `(prefix, limit)`
/// always, and its upper twin too when approached from below.
pub fn sequence_limits(prefix: &[Rat], limit: &Rat, side: Approach) -> Result<Vec<FeatherPoint>> {
    if !sequence_is_valid(prefix, limit, side) {
        return Err(Error::MalformedSequence(format!(
            "terms with prefix of length {} approaching {} are not points",
            prefix.len(),
            crate::numeric::fmt_rat(limit)
        )));
    }
    let mut seq = prefix.to_vec();
    seq.push(limit.clone());
    let p = FeatherPoint::new(seq)?;
    Ok(match side {
        Approach::FromBelow => vec![p.clone(), p.twin()],
        Approach::FromAbove => vec![p],
    })
}

/// Disjoint charts around two points, or `None` when they are twins.
pub fn separating_charts(p: &FeatherPoint, q: &FeatherPoint) -> Option<(Chart, Chart)> {
    if p == q || p.twin() == *q {
        return None;
    }
    let gap = dist(p.last(), q.last());
    let mut eps = if gap == int(0) { rat(1, 2) } else { gap.min(int(1)) / int(2) };
    for _ in 0..256 {
        let cp = Chart::new(p, &eps).expect("positive radius");
        let cq = Chart::new(q, &eps).expect("positive radius");
        if cp.domain().meet(cq.domain()).is_none() {
            return Some((cp, cq));
        }
        eps /= int(2);
    }
    unreachable!("distinct non-twin points have disjoint small charts")
}

/// Searches canonical charts at the refuter scales for a disjoint pair.
pub fn refute_non_separation(p: &FeatherPoint, q: &FeatherPoint) -> Option<(Chart, Chart)> {
    let scales = refuter_scales();
    for ep in &scales {
        for eq in &scales {
            let cp = Chart::new(p, ep).ok()?;
            let cq = Chart::new(q, eq).ok()?;
            if cp.domain().meet(cq.domain()).is_none() {
                return Some((cp, cq));
            }
        }
    }
    None
}

/// A twin pair inside a finite union of intervals, if there is one.
pub fn twin_pair_in(intervals: &[FeatherInterval]) -> Option<(FeatherPoint, FeatherPoint)> {
    for iv in intervals {
        for seg in iv.segments().into_iter().filter(|s| s.lo_closed) {
            let ExtRat::Fin(lo) = &seg.lo else { continue };
            let upper = FeatherPoint::from_parts(&seg.prefix, std::slice::from_ref(lo));
            let lower = upper.twin();
            if intervals.iter().any(|j| j.contains(&lower)) {
                return Some((lower, upper));
            }
        }
    }
    None
}

/// A basic open missing a finite union of intervals: a level-one branch over
/// an abscissa that no listed interval climbs.
pub fn branch_avoiding(intervals: &[FeatherInterval]) -> FeatherInterval {
    let x = intervals
        .iter()
        .filter(|i| i.upper().len() >= 2)
        .map(|i| i.upper().first().clone())
        .max()
        .map_or(int(0), |m| m.floor() + int(1));
    disjoint_branch_family(&x, &(&x + int(1)), &(&x + int(2))).expect("x < x+1 < x+2")
}

/// The interval `{(x, r) : a < r < b}` on the level-one branch at `x`.
/// Branches at distinct `x` are pairwise disjoint.
pub fn disjoint_branch_family(x: &Rat, a: &Rat, b: &Rat) -> Result<FeatherInterval> {
    if !(x < a && a < b) {
        return Err(Error::pre("branch family needs x < a < b"));
    }
    FeatherInterval::new(
        FeatherPoint::new(vec![x.clone(), a.clone()])?,
        FeatherPoint::new(vec![x.clone(), b.clone()])?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(s: &str) -> FeatherPoint {
        s.parse().unwrap()
    }

    #[test]
    fn lemma_sequence_converges_to_both_twins() {
        let lim = sequence_limits(&[int(0)], &int(1), Approach::FromBelow).unwrap();
        assert_eq!(lim, vec![fp("F(0,1)"), fp("F(0,1,1)")]);
        let lim = sequence_limits(&[int(0)], &int(1), Approach::FromAbove).unwrap();
        assert_eq!(lim, vec![fp("F(0,1)")]);
        assert!(sequence_limits(&[int(1)], &int(1), Approach::FromBelow).is_err());
    }

    #[test]
    fn closed_form_limits_agree_with_chart_tails() {
        let candidates = ["F(0,1)", "F(0,1,1)", "F(1)", "F(0)", "F(0,0)", "F(0,1,2)"];
        for side in [Approach::FromBelow, Approach::FromAbove] {
            let lim = sequence_limits(&[int(0)], &int(1), side).unwrap();
            for c in candidates {
                let p = fp(c);
                let by_charts = refuter_scales()
                    .iter()
                    .chain([rat(1, 1024)].iter())
                    .all(|e| Chart::new(&p, e).unwrap().domain().eventually_contains(&[int(0)], &int(1), side));
                assert_eq!(lim.contains(&p), by_charts, "{c} {side:?}");
            }
        }
    }

    #[test]
    fn twins_resist_the_refuter() {
        for p in ["F(0)", "F(0,1)", "F(-2,1/3,5)"] {
            let p = fp(p);
            assert!(separating_charts(&p, &p.twin()).is_none());
            assert!(refute_non_separation(&p, &p.twin()).is_none());
        }
    }

    #[test]
    fn non_twins_get_disjoint_charts() {
        for (a, b) in [("F(0)", "F(0,1)"), ("F(0,1)", "F(1)"), ("F(0,1,1)", "F(0,1,2)"), ("F(0,0)", "F(0,1,1)")] {
            let (ca, cb) = separating_charts(&fp(a), &fp(b)).unwrap();
            assert!(ca.contains(&fp(a)) && cb.contains(&fp(b)));
            assert!(ca.domain().meet(cb.domain()).is_none());
        }
    }

    #[test]
    fn twin_pairs_in_unions() {
        let one: FeatherInterval = "FI[(-1);(0,1)]".parse().unwrap();
        assert_eq!(twin_pair_in(std::slice::from_ref(&one)), None);
        let base: FeatherInterval = "FI[(-1);(1)]".parse().unwrap();
        assert_eq!(twin_pair_in(&[one, base]), Some((fp("F(0)"), fp("F(0,0)"))));
    }

    #[test]
    fn branch_family_is_disjoint() {
        let a = disjoint_branch_family(&int(0), &int(1), &int(2)).unwrap();
        let b = disjoint_branch_family(&int(1), &int(2), &int(3)).unwrap();
        assert!(a.contains(&fp("F(0,3/2)")));
        assert!(a.meet(&b).is_none());
        assert!(disjoint_branch_family(&int(0), &int(1), &int(1)).is_err());
    }

    #[test]
    fn avoiding_branch_misses_listed_intervals() {
        let listed: Vec<FeatherInterval> = ["FI[(-1);(0,1)]", "FI[(2);(3,5)]", "FI[(-4);(4)]"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let w = branch_avoiding(&listed);
        assert!(listed.iter().all(|i| i.meet(&w).is_none()));
    }
}
