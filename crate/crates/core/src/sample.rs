//! Random generators for points, opens and covers, used by the property
//! suites, the benches and the command line. Callers own the RNG and its
//! seed.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::feather::FeatherPoint;
use crate::kernel::{Point, Space};
use crate::multiline::branching::{BranchPoint, Side};
use crate::multiline::{MultiLinePoint, SpaceSpec, Wave};
use crate::numeric::{rat, CofiniteSet, ExtRat, IntervalSet, Open, Rat};

/// A rational `a/b` with `|a/b| <= span` and `b <= den`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, span: i64, den: i64) -> Rat {
    let b = rng.random_range(1..=den.max(1));
    let a = rng.random_range(-span * b..=span * b);
    rat(a, b)
}

/// A positive rational no larger than `span`.
pub fn positive<R: Rng + ?Sized>(rng: &mut R, span: i64, den: i64) -> Rat {
    let b = rng.random_range(1..=den.max(1));
    let a = rng.random_range(1..=span.max(1) * b);
    rat(a, b)
}

/// A feather point of length at most `max_len`; about a quarter are upper
/// twins.
pub fn feather_point<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> FeatherPoint {
    let len = rng.random_range(1..=max_len.max(1));
    let mut seq = vec![rational(rng, 4, 6)];
    while seq.len() < len {
        let last = seq.last().expect("non-empty").clone();
        let step = if seq.len() + 1 == len && rng.random_bool(0.25) {
            rat(0, 1)
        } else {
            positive(rng, 2, 6)
        };
        seq.push(last + step);
    }
    FeatherPoint::new(seq).expect("increasing by construction")
}

/// A feather point with at least two coordinates, never a line point.
pub fn branch_feather_point<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> FeatherPoint {
    loop {
        let p = feather_point(rng, max_len.max(2));
        if p.len() >= 2 {
            return p;
        }
    }
}

/// Two distinct feather points that are not twins. Half the time they
/// share everything but the last coordinate.
pub fn non_twin_pair<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> (FeatherPoint, FeatherPoint) {
    loop {
        let p = feather_point(rng, max_len);
        let q = if rng.random_bool(0.5) {
            let shifted = p.last() + rational(rng, 2, 4);
            match p.with_last(shifted) {
                Ok(q) => q,
                Err(_) => continue,
            }
        } else {
            feather_point(rng, max_len)
        };
        if p != q && p.twin() != q {
            return (p, q);
        }
    }
}

/// A point of the multiline; up points land on small-denominator abscissae
/// so that collisions with other samples are common.
pub fn multi_point<R: Rng + ?Sized>(rng: &mut R, spec: &SpaceSpec) -> MultiLinePoint {
    let x = match spec.doubled_set() {
        Some(d) if !d.is_empty() && rng.random_bool(0.5) => d.iter().collect::<Vec<_>>().choose(rng).map(|x| (*x).clone()).expect("non-empty"),
        _ => rational(rng, 4, 4),
    };
    let level = rng.random_range(0..spec.levels_at(&x));
    MultiLinePoint::new(x, level)
}

/// A wave over one to three random intervals with a few lifts inside.
pub fn wave<R: Rng + ?Sized>(rng: &mut R, spec: &SpaceSpec) -> Wave {
    let intervals: Vec<Open> = (0..rng.random_range(1..=3))
        .map(|_| {
            let lo = rational(rng, 3, 4);
            let hi = &lo + positive(rng, 3, 4);
            Open::new(ExtRat::fin(lo), ExtRat::fin(hi))
        })
        .collect();
    let w = Wave::plain(IntervalSet::from_intervals(intervals));
    let mut lifts = Vec::new();
    for _ in 0..rng.random_range(0..=2) {
        let p = multi_point(rng, spec);
        if w.o().contains(&p.x) && p.is_up() {
            lifts.push(p);
        }
    }
    lifts.into_iter().fold(w, |w, p| w.lifted(p.x, p.level).expect("abscissa lies in the wave"))
}

pub fn branch_point<R: Rng + ?Sized>(rng: &mut R) -> BranchPoint {
    let x = if rng.random_bool(0.2) { rat(0, 1) } else { rational(rng, 4, 4) };
    let side = if rng.random_bool(0.5) { Side::L } else { Side::R };
    BranchPoint::new(x, side)
}

/// A point of any implemented space.
pub fn point<R: Rng + ?Sized>(rng: &mut R, space: &Space) -> Point {
    match space {
        Space::Feather => Point::Feather(feather_point(rng, 4)),
        Space::Multi(spec) => Point::Multi(multi_point(rng, spec)),
        Space::Branching => Point::Branch(branch_point(rng)),
        Space::Cofinite => Point::Cofinite(rng.random_range(0..64)),
    }
}

/// A finite list of cofinite sets that covers the naturals, shuffled
/// together with a few decoys.
pub fn cofinite_cover<R: Rng + ?Sized>(rng: &mut R) -> Vec<CofiniteSet> {
    let base: Vec<u64> = (0..rng.random_range(0..6)).map(|_| rng.random_range(0..40)).collect();
    let mut cover = vec![CofiniteSet::excluding(base.iter().copied())];
    for e in &base {
        let others: Vec<u64> = (0..rng.random_range(0..4))
            .map(|_| rng.random_range(0..40))
            .filter(|m| m != e)
            .collect();
        cover.push(CofiniteSet::excluding(others));
    }
    if rng.random_bool(0.3) {
        cover.push(CofiniteSet::Empty);
    }
    cover.shuffle(rng);
    cover
}
