use std::collections::{BTreeMap, VecDeque};

use super::point::{MultiLinePoint, SpaceSpec};
use super::wave::Wave;
use crate::error::{Error, Result};
use crate::numeric::{int, midpoint, ExtRat, IntervalSet, Rat};

const GRID: i64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainOutcome {
    Connected(Vec<Wave>),
    /// The bounded search found no chain. This says nothing about
    /// disconnectedness.
    Inconclusive,
}

/// Default search window: one unit beyond every abscissa involved.
pub fn default_window(points: &[&MultiLinePoint]) -> (Rat, Rat) {
    let lo = points.iter().map(|p| &p.x).min().cloned().unwrap_or_else(|| int(0));
    let hi = points.iter().map(|p| &p.x).max().cloned().unwrap_or_else(|| int(0));
    (lo - int(1), hi + int(1))
}

/// Searches for a chain of connected waves from `src` to `dst` that avoids
/// `removed`, using intervals with endpoints on a grid over `window`.
pub fn chain_connect(
    spec: &SpaceSpec,
    src: &MultiLinePoint,
    dst: &MultiLinePoint,
    removed: &[MultiLinePoint],
    window: &(Rat, Rat),
) -> Result<ChainOutcome> {
    for p in removed.iter().chain([src, dst]) {
        spec.check(p)?;
    }
    if removed.contains(src) || removed.contains(dst) {
        return Err(Error::pre("chain endpoints must not be removed"));
    }
    let (a, b) = window;
    let inside = |x: &Rat| a < x && x < b;
    if !removed.iter().chain([src, dst]).all(|p| inside(&p.x)) {
        return Err(Error::pre("window must contain every abscissa"));
    }

    let mut marks: Vec<Rat> = (0..=GRID).map(|i| a + (b - a) * int(i) / int(GRID)).collect();
    marks.extend(removed.iter().chain([src, dst]).map(|p| p.x.clone()));
    marks.sort();
    marks.dedup();
    let mids: Vec<Rat> = marks.windows(2).map(|w| midpoint(&w[0], &w[1])).collect();
    marks.extend(mids);
    marks.sort();

    let mut intervals: Vec<(Rat, Rat)> = Vec::new();
    for i in 0..marks.len() {
        for j in i + 1..marks.len() {
            intervals.push((marks[i].clone(), marks[j].clone()));
        }
    }
    intervals.sort_by(|x, y| (&y.1 - &y.0).cmp(&(&x.1 - &x.0)).then_with(|| x.0.cmp(&y.0)));

    let mut nodes: Vec<((Rat, Rat), Wave)> = Vec::new();
    for (lo, hi) in intervals {
        for wave in link_variants(spec, &lo, &hi, src, dst, removed) {
            nodes.push(((lo.clone(), hi.clone()), wave));
        }
    }

    let overlaps = |x: &(Rat, Rat), y: &(Rat, Rat)| x.0.clone().max(y.0.clone()) < x.1.clone().min(y.1.clone());
    let mut prev: Vec<Option<usize>> = vec![None; nodes.len()];
    let mut seen = vec![false; nodes.len()];
    let mut queue = VecDeque::new();
    for (i, (_, w)) in nodes.iter().enumerate() {
        if w.contains(src) {
            if w.contains(dst) {
                return Ok(ChainOutcome::Connected(vec![w.clone()]));
            }
            seen[i] = true;
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        for j in 0..nodes.len() {
            if seen[j] || !overlaps(&nodes[i].0, &nodes[j].0) {
                continue;
            }
            seen[j] = true;
            prev[j] = Some(i);
            if nodes[j].1.contains(dst) {
                let mut path = vec![j];
                while let Some(k) = prev[*path.last().expect("non-empty")] {
                    path.push(k);
                }
                return Ok(ChainOutcome::Connected(
                    path.into_iter().rev().map(|k| nodes[k].1.clone()).collect(),
                ));
            }
            queue.push_back(j);
        }
    }
    Ok(ChainOutcome::Inconclusive)
}

/// Waves on `(lo, hi)` avoiding `removed`: the default lift picks the lowest
/// surviving level over each removed abscissa; variants force the levels of
/// `src` and `dst`.
fn link_variants(
    spec: &SpaceSpec,
    lo: &Rat,
    hi: &Rat,
    src: &MultiLinePoint,
    dst: &MultiLinePoint,
    removed: &[MultiLinePoint],
) -> Vec<Wave> {
    let within = |x: &Rat| lo < x && x < hi;
    let mut base: BTreeMap<Rat, u32> = BTreeMap::new();
    for p in removed.iter().filter(|p| within(&p.x)) {
        if base.contains_key(&p.x) {
            continue;
        }
        let free = (0..spec.levels_at(&p.x)).find(|l| !removed.contains(&MultiLinePoint::new(p.x.clone(), *l)));
        match free {
            Some(l) => {
                base.insert(p.x.clone(), l);
            }
            None => return Vec::new(),
        }
    }
    let mut variants = vec![base.clone()];
    for forced in [[Some(src), None], [None, Some(dst)], [Some(src), Some(dst)]] {
        if let [Some(s), Some(d)] = forced {
            if s.x == d.x && s.level != d.level {
                continue;
            }
        }
        let mut lift = base.clone();
        for p in forced.into_iter().flatten().filter(|p| within(&p.x)) {
            lift.insert(p.x.clone(), p.level);
        }
        if !variants.contains(&lift) {
            variants.push(lift);
        }
    }
    variants
        .into_iter()
        .filter_map(|lift| {
            let lift = lift.into_iter().filter(|(_, l)| *l > 0).collect();
            Wave::new(IntervalSet::interval(lo.clone(), hi.clone()), lift).ok()
        })
        .filter(|w| w.check(spec).is_ok() && !removed.iter().any(|r| w.contains(r)))
        .collect()
}

/// Re-checks a chain from scratch: connected links that avoid `removed`,
/// consecutive links meeting, and the right endpoints.
pub fn verify_chain(
    spec: &SpaceSpec,
    src: &MultiLinePoint,
    dst: &MultiLinePoint,
    removed: &[MultiLinePoint],
    links: &[Wave],
) -> bool {
    let (Some(first), Some(last)) = (links.first(), links.last()) else {
        return false;
    };
    first.contains(src)
        && last.contains(dst)
        && links.iter().all(|w| {
            w.o().intervals().len() == 1
                && w.check(spec).is_ok()
                && !removed.iter().any(|r| w.contains(r))
        })
        && links.windows(2).all(|p| !p[0].meet(&p[1]).is_empty())
        && window_is_bounded(links)
}

fn window_is_bounded(links: &[Wave]) -> bool {
    links
        .iter()
        .flat_map(|w| w.o().intervals())
        .all(|iv| iv.lo != ExtRat::NegInf && iv.hi != ExtRat::PosInf)
}
