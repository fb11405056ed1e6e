use serde::{Deserialize, Serialize};

use super::flip::replay_flips;
use super::interval::FeatherInterval;
use super::point::FeatherPoint;

/// The image `h(A)` of the strict skeleton `A` (all points that are not upper
/// twins) under a flip word `h`.
///
/// `A` is a Hausdorff dense open set. Each flip exchanges exactly one twin
/// pair between `A` and its complement, so every image is again Hausdorff,
/// dense and maximal: an outside point's twin is always inside.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Skeleton {
    /// Flips applied left to right to carry `A` onto this set.
    pub word: Vec<FeatherPoint>,
}

impl Skeleton {
    pub fn strict() -> Self {
        Skeleton::default()
    }

    /// The conjugate that contains `x`: `A` itself when `x` is strict, and
    /// the image under the flip pivoting at `x` otherwise.
    pub fn containing(x: &FeatherPoint) -> Self {
        if x.is_strict() {
            Skeleton::strict()
        } else {
            Skeleton { word: vec![x.clone()] }
        }
    }

    pub fn contains(&self, p: &FeatherPoint) -> bool {
        self.preimage(p).is_strict()
    }

    fn preimage(&self, p: &FeatherPoint) -> FeatherPoint {
        let inverse: Vec<FeatherPoint> = self.word.iter().rev().cloned().collect();
        replay_flips(&inverse, p).expect("skeleton words hold flip pivots of length >= 2")
    }

    /// A member of `interval`. Exceptions to strictness are finite, so the
    /// walk along the interval's bottom segment always finds one.
    pub fn member_in(&self, interval: &FeatherInterval) -> FeatherPoint {
        interval
            .members()
            .find(|p| self.contains(p))
            .expect("finitely many exceptions")
    }

    /// For `u` outside, its twin is inside: the pair witnessing maximality.
    pub fn adjoin_partner(&self, u: &FeatherPoint) -> Option<FeatherPoint> {
        if self.contains(u) {
            return None;
        }
        let partner = u.twin();
        debug_assert!(self.contains(&partner));
        Some(partner)
    }

    /// Finitely many points where membership differs from plain strictness.
    pub fn exceptions(&self) -> Vec<FeatherPoint> {
        let mut out = Vec::new();
        for pivot in &self.word {
            let lower = pivot.truncate(pivot.depth());
            for p in [lower.clone(), lower.twin()] {
                if self.contains(&p) != p.is_strict() && !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }
}
