//! Multilines: `k` copies of the line glued off a doubling domain. Covers the
//! everywhere doubled and tripled lines, the line with two origins and, in
//! [`branching`], the line that forks at the origin.

pub mod branching;
mod chain;
mod point;
mod wave;

pub use chain::{chain_connect, default_window, verify_chain, ChainOutcome};
pub use point::{Doubling, MultiLinePoint, SpaceSpec};
pub use wave::Wave;

use crate::error::{Error, Result};
use crate::numeric::{dist, int, rat, Approach, FinSet, IntervalSet, Rat};

/// Distinct points fail to separate exactly when they share an abscissa.
pub fn line_non_separable(p: &MultiLinePoint, q: &MultiLinePoint) -> bool {
    p.x == q.x && p.level != q.level
}

/// The wave `(x - eps, x + eps)` through `p`'s level.
pub fn chart_wave(p: &MultiLinePoint, eps: &Rat) -> Result<Wave> {
    if *eps <= int(0) {
        return Err(Error::pre("chart radius must be positive"));
    }
    Wave::interval(&p.x - eps, &p.x + eps).lifted(p.x.clone(), p.level)
}

/// Disjoint waves around `p` and `q`, or `None` when they share an abscissa.
pub fn separable_line(spec: &SpaceSpec, p: &MultiLinePoint, q: &MultiLinePoint) -> Result<Option<(Wave, Wave)>> {
    spec.check(p)?;
    spec.check(q)?;
    if p == q {
        return Err(Error::pre(format!("{p} is compared with itself")));
    }
    if line_non_separable(p, q) {
        return Ok(None);
    }
    let r = dist(&p.x, &q.x) / int(2);
    Ok(Some((chart_wave(p, &r)?, chart_wave(q, &r)?)))
}

/// Whether terms `(limit ∓ 1/m, level)` are points for all large `m`.
pub fn line_sequence_is_valid(spec: &SpaceSpec, level: u32) -> bool {
    level == 0 || (spec.doubled_set().is_none() && level < spec.k)
}

/// Limits of `(limit ∓ 1/m, level)`. A down sequence converges to every
/// point over `limit`; an up sequence leaves every wave and has no limit.
pub fn line_limits(spec: &SpaceSpec, limit: &Rat, level: u32) -> Result<Vec<MultiLinePoint>> {
    if !line_sequence_is_valid(spec, level) {
        return Err(Error::MalformedSequence(format!("level {level} is not available near the limit in {spec}")));
    }
    if level > 0 {
        return Ok(Vec::new());
    }
    Ok((0..spec.levels_at(limit)).map(|l| MultiLinePoint::new(limit.clone(), l)).collect())
}

/// The maximal Hausdorff dense wave through `x`: the whole line with `x`
/// lifted when it is up.
pub fn maximal_wave(x: &MultiLinePoint) -> Wave {
    Wave::full().lifted(x.x.clone(), x.level).expect("every abscissa lies in the line")
}

/// Two points over one abscissa inside a union of waves, if any.
pub fn waves_twin_pair(waves: &[Wave]) -> Option<(MultiLinePoint, MultiLinePoint)> {
    for w in waves {
        for (x, l) in w.lift() {
            if let Some(other) = waves.iter().filter_map(|v| v.level_at(x)).find(|m| m != l) {
                let (a, b) = if other < *l { (other, *l) } else { (*l, other) };
                return Some((MultiLinePoint::new(x.clone(), a), MultiLinePoint::new(x.clone(), b)));
            }
        }
    }
    None
}

/// Union of the down parts.
pub fn waves_shadow(waves: &[Wave]) -> IntervalSet {
    waves.iter().fold(IntervalSet::empty(), |acc, w| acc.union(&w.down_part()))
}

/// A union of waves is dense iff its down part misses finitely many abscissae.
pub fn waves_dense(waves: &[Wave]) -> bool {
    waves_shadow(waves).dense_in_line(&FinSet::empty())
}

/// A point in none of the waves: a down point off the shadow, or an up point
/// nobody lifts. `None` means the waves cover the space.
pub fn uncovered_by_waves(spec: &SpaceSpec, waves: &[Wave]) -> Option<MultiLinePoint> {
    let covered = |p: &MultiLinePoint| waves.iter().any(|w| w.contains(p));
    let shadow = waves_shadow(waves);
    if shadow.is_empty() {
        return Some(MultiLinePoint::down(int(0)));
    }
    if let Some(x) = shadow.endpoints().iter().next() {
        return Some(MultiLinePoint::down(x.clone()));
    }
    match spec.doubled_set() {
        Some(d) => d
            .iter()
            .flat_map(|x| (1..spec.levels_at(x)).map(move |l| MultiLinePoint::new(x.clone(), l)))
            .find(|p| !covered(p)),
        None if spec.k > 1 => {
            let lifted: FinSet = waves.iter().flat_map(|w| w.lift().keys().cloned()).collect();
            let z = (0..).map(int).find(|z| !lifted.contains(z)).expect("finitely many lifts");
            Some(MultiLinePoint::new(z, 1))
        }
        None => None,
    }
}

/// Rational down points are dense: every nonempty wave holds one.
pub fn rational_down_witness(w: &Wave) -> Option<MultiLinePoint> {
    w.down_witness()
}

/// Isolating waves for the up points over `sample`, and for a down point a
/// wave that meets no up point at all.
pub fn up_points_discrete_witness(sample: &FinSet, down: Option<&Rat>) -> (Vec<Wave>, Option<Wave>) {
    let xs: Vec<&Rat> = sample.iter().collect();
    let isolating = xs
        .iter()
        .map(|x| {
            let gap = xs
                .iter()
                .filter(|y| *y != x)
                .map(|y| dist(x, y))
                .min()
                .unwrap_or_else(|| int(2))
                .min(int(2));
            chart_wave(&MultiLinePoint::new((*x).clone(), 1), &(gap / int(2))).expect("positive radius")
        })
        .collect();
    let avoiding = down.map(|y| chart_wave(&MultiLinePoint::down(y.clone()), &rat(1, 2)).expect("positive radius"));
    (isolating, avoiding)
}

/// Whether the terms `(limit ∓ 1/m, level)` eventually lie in `w`. Waves
/// lift finitely many abscissae, so only down sequences ever settle.
pub fn wave_eventually_contains(w: &Wave, limit: &Rat, level: u32, side: Approach) -> bool {
    level == 0 && w.down_part().eventually_contains(limit, side)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> MultiLinePoint {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Wave {
        s.parse().unwrap()
    }

    #[test]
    fn separation_examples() {
        let spec = SpaceSpec::doubled();
        assert_eq!(separable_line(&spec, &d("D(0 @0)"), &d("D(0 @1)")).unwrap(), None);
        let (a, b) = separable_line(&spec, &d("D(0 @0)"), &d("D(1 @1)")).unwrap().unwrap();
        assert_eq!(a, w("W[(-1/2,1/2)]"));
        assert_eq!(b, w("W[(1/2,3/2) - {1^1}]"));
        assert!(a.meet(&b).is_empty());
        let two = SpaceSpec::two_origins();
        assert!(separable_line(&two, &d("D(0 @0)"), &d("D(1 @0)")).unwrap().is_some());
        assert!(separable_line(&spec, &d("D(0 @0)"), &d("D(0 @0)")).is_err());
    }

    #[test]
    fn down_sequences_converge_to_every_level() {
        let lim = line_limits(&SpaceSpec::doubled(), &int(0), 0).unwrap();
        assert_eq!(lim, vec![d("D(0 @0)"), d("D(0 @1)")]);
        assert!(line_limits(&SpaceSpec::doubled(), &int(0), 1).unwrap().is_empty());
        assert!(line_limits(&SpaceSpec::two_origins(), &int(0), 1).is_err());
        assert_eq!(line_limits(&SpaceSpec::two_origins(), &int(1), 0).unwrap().len(), 1);
    }

    #[test]
    fn maximal_waves_and_twin_pairs() {
        assert_eq!(maximal_wave(&d("D(0 @1)")), w("W[(-inf,inf) - {0^1}]"));
        assert_eq!(waves_twin_pair(&[Wave::full()]), None);
        assert_eq!(
            waves_twin_pair(&[w("W[(-1,1) - {0^1}]"), w("W[(-1,1)]")]),
            Some((d("D(0 @0)"), d("D(0 @1)")))
        );
    }

    #[test]
    fn density() {
        assert!(waves_dense(&[Wave::full()]));
        assert!(!waves_dense(&[w("W[(0,inf)]")]));
        assert!(waves_dense(&[w("W[(-inf,0)u(0,inf)]")]));
        assert!(waves_dense(&[w("W[(-inf,inf) - {0^1,1^1}]")]));
    }

    #[test]
    fn uncovered_points() {
        let spec = SpaceSpec::doubled();
        let chosen: Vec<Wave> = [0, 1, 2].iter().map(|x| maximal_wave(&MultiLinePoint::new(int(*x), 1))).collect();
        let mut all = vec![Wave::full()];
        all.extend(chosen);
        assert_eq!(uncovered_by_waves(&spec, &all), Some(d("D(3 @1)")));
        assert_eq!(uncovered_by_waves(&SpaceSpec::line(), &[Wave::full()]), None);
        assert_eq!(uncovered_by_waves(&SpaceSpec::line(), &[w("W[(0,inf)]")]), Some(d("D(0 @0)")));
        let two = SpaceSpec::two_origins();
        assert_eq!(uncovered_by_waves(&two, &[Wave::full()]), Some(d("D(0 @1)")));
    }

    #[test]
    fn up_points_are_discrete() {
        let (iso, avoid) = up_points_discrete_witness(&FinSet::from_iter([int(0), int(1)]), Some(&rat(1, 2)));
        assert_eq!(iso[0], w("W[(-1/2,1/2) - {0^1}]"));
        assert!(!iso[0].contains(&d("D(1 @1)")));
        assert_eq!(avoid, Some(w("W[(0,1)]")));
        assert!(up_points_discrete_witness(&FinSet::empty(), None).0.is_empty());
    }
}
