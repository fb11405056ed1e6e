//! Branch flips: the involutions exchanging the two branches that emanate
//! from a point, and the flip words that carry any point to the base line.

use super::point::FeatherPoint;
use crate::error::{Error, Result};

/// Applies the flip `h_s` to `r`.
///
/// With `s = (s_0..s_n)`, `n >= 1`, the flip exchanges the branch above
/// `(s_0..s_{n-1})` with the part of the line above it: points extending
/// `(s_0..s_{n-1})` lose that coordinate, and points `(s_0..s_{n-2}, r_{n-1}, ..)`
/// with `r_{n-1} >= s_{n-1}` gain it. The first rule wins when both apply,
/// which is what makes the map a total involution.
pub fn flip_apply(s: &FeatherPoint, r: &FeatherPoint) -> Result<FeatherPoint> {
    let n = s.depth();
    if n == 0 {
        return Err(Error::pre(format!("flip needs a point of length >= 2, got {s}")));
    }
    let sc = s.coords();
    let rc = r.coords();
    let pivot = &sc[..n];
    let base = &sc[..n - 1];
    if rc.len() > n && &rc[..n] == pivot {
        return Ok(FeatherPoint::from_parts(base, &rc[n..]));
    }
    if rc.len() >= n && &rc[..n - 1] == base && rc[n - 1] >= sc[n - 1] {
        return Ok(FeatherPoint::from_parts(pivot, &rc[n - 1..]));
    }
    Ok(r.clone())
}

/// Flip word `[h_s, h_{s^(1)}, ..., h_{s^(n-1)}]` carrying `s` to `(s_n)`.
/// Replaying the word left to right on `s` yields the returned point.
pub fn normalize_to_line(s: &FeatherPoint) -> (Vec<FeatherPoint>, FeatherPoint) {
    let n = s.depth();
    let word: Vec<FeatherPoint> = (0..n).map(|k| s.truncate(s.len() - k)).collect();
    (word, FeatherPoint::line(s.last().clone()))
}

/// Replays a flip word left to right.
pub fn replay_flips(word: &[FeatherPoint], p: &FeatherPoint) -> Result<FeatherPoint> {
    word.iter().try_fold(p.clone(), |acc, s| flip_apply(s, &acc))
}
