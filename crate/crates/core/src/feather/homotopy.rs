//! The contraction of the feather onto its base line and then onto a point.
//!
//! On `[0,1]` the point `(s_0..s_n)` is folded onto `(s_0..s_{n-1}, s_{n-1})`
//! during `[1/(n+1), 1/n]`, after which it follows its truncation. On `[1,2]`
//! everything slides down the base line.

use num_traits::{One, Zero};

use super::point::FeatherPoint;
use crate::error::{Error, Result};
use crate::numeric::{int, Approach, Rat};

/// `y` if `y < x`, else `(1-t)y + tx`.
pub fn fold(t: &Rat, x: &Rat, y: &Rat) -> Rat {
    if y < x {
        y.clone()
    } else {
        (Rat::one() - t) * y + t * x
    }
}

/// Evaluates `h_t(s)` for `t` in `[0, 2]`. At a seam `t = 1/n` the fold
/// branch applies (closed interval).
pub fn homotopy_eval(t: &Rat, s: &FeatherPoint) -> Result<FeatherPoint> {
    if *t < Rat::zero() || *t > int(2) {
        return Err(Error::pre(format!("homotopy time {t} outside [0, 2]")));
    }
    if *t > Rat::one() {
        return Ok(FeatherPoint::line(s.first() - t + Rat::one()));
    }
    let mut cur = s.clone();
    loop {
        let n = cur.depth();
        if n == 0 {
            return Ok(cur);
        }
        let nn = int(n as i64);
        if *t <= Rat::one() / (&nn + int(1)) {
            return Ok(cur);
        }
        if *t <= Rat::one() / &nn {
            let local = &nn * (&nn + int(1)) * t - &nn;
            let c = cur.coords();
            let folded = fold(&local, &c[n - 1], &c[n]);
            return Ok(FeatherPoint::from_parts(&c[..n], &[folded]));
        }
        cur = cur.truncate(n);
    }
}

/// Samples `t -> h_t(s)` on `0, 1/steps, ..., 2`.
pub fn homotopy_trace(s: &FeatherPoint, steps: u32) -> Result<Vec<(Rat, FeatherPoint)>> {
    (0..=2 * steps)
        .map(|i| {
            let t = Rat::new((i as i64).into(), (steps as i64).into());
            homotopy_eval(&t, s).map(|p| (t, p))
        })
        .collect()
}

/// How the path behaves on one side of a seam.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tail {
    /// The path is constant near the seam.
    Constant(FeatherPoint),
    /// The last coordinate moves affinely toward `limit` from `side`.
    Moving {
        prefix: Vec<Rat>,
        limit: Rat,
        side: Approach,
    },
}

impl Tail {
    /// The point the affine piece reaches at the seam.
    pub fn limit_point(&self) -> Result<FeatherPoint> {
        match self {
            Tail::Constant(p) => Ok(p.clone()),
            Tail::Moving { prefix, limit, .. } => {
                let mut seq = prefix.clone();
                seq.push(limit.clone());
                FeatherPoint::new(seq)
            }
        }
    }
}

/// One-sided behaviour of the path at a seam, read off a rational grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeamSides {
    pub at: Rat,
    pub value: FeatherPoint,
    pub left: Option<Tail>,
    pub right: Option<Tail>,
}

/// Extrapolates the affine piece on each side of `seam` from two grid samples
/// placed closer to the seam than any neighbouring seam.
pub fn seam_sides(s: &FeatherPoint, seam: &Rat) -> Result<SeamSides> {
    let value = homotopy_eval(seam, s)?;
    // Neighbouring breakpoints of 1/k are 1/(k-1) and 1/(k+1); stay well inside.
    let k = (Rat::one() / seam).ceil();
    let delta = Rat::one() / (int(4) * &k * (&k + int(1)));
    let side = |dir: i64| -> Result<Option<Tail>> {
        let d = int(dir);
        let t1 = seam + &d * &delta;
        let t2 = seam + &d * &delta / int(2);
        if t1 < Rat::zero() || t1 > int(2) {
            return Ok(None);
        }
        let p1 = homotopy_eval(&t1, s)?;
        let p2 = homotopy_eval(&t2, s)?;
        if p1.prefix() != p2.prefix() {
            return Err(Error::pre(format!("grid samples {p1} and {p2} straddle a breakpoint")));
        }
        let slope = (p2.last() - p1.last()) / (&t2 - &t1);
        if slope.is_zero() {
            return Ok(Some(Tail::Constant(p2)));
        }
        let limit = p2.last() + &slope * (seam - &t2);
        // Moving toward the seam from the left, values grow iff slope > 0.
        let rising = (slope > Rat::zero()) == (dir < 0);
        Ok(Some(Tail::Moving {
            prefix: p2.prefix().to_vec(),
            limit,
            side: if rising { Approach::FromBelow } else { Approach::FromAbove },
        }))
    };
    Ok(SeamSides {
        at: seam.clone(),
        value,
        left: side(-1)?,
        right: side(1)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn fp(s: &str) -> FeatherPoint {
        s.parse().unwrap()
    }

    #[test]
    fn worked_values() {
        assert_eq!(homotopy_eval(&int(1), &fp("F(0,2)")).unwrap(), fp("F(0,0)"));
        assert_eq!(homotopy_eval(&rat(3, 4), &fp("F(0,1,3)")).unwrap(), fp("F(0,1/2)"));
        assert_eq!(homotopy_eval(&rat(1, 2), &fp("F(0,1,3)")).unwrap(), fp("F(0,1,1)"));
        assert_eq!(homotopy_eval(&int(2), &fp("F(3,4,5)")).unwrap(), fp("F(2)"));
        assert_eq!(homotopy_eval(&int(1), &fp("F(4)")).unwrap(), fp("F(4)"));
        assert_eq!(homotopy_eval(&rat(3, 2), &fp("F(4)")).unwrap(), fp("F(7/2)"));
    }

    #[test]
    fn rejects_times_outside_range() {
        assert!(homotopy_eval(&rat(-1, 10), &fp("F(0)")).is_err());
        assert!(homotopy_eval(&rat(21, 10), &fp("F(0)")).is_err());
    }

    #[test]
    fn identity_before_the_first_fold() {
        let s = fp("F(0,1,3)");
        assert_eq!(homotopy_eval(&rat(1, 3), &s).unwrap(), s);
        assert_eq!(homotopy_eval(&rat(1, 5), &s).unwrap(), s);
    }

    #[test]
    fn seam_at_one_meets_the_slide() {
        let sides = seam_sides(&fp("F(0,2)"), &int(1)).unwrap();
        assert_eq!(sides.value, fp("F(0,0)"));
        assert_eq!(
            sides.left,
            Some(Tail::Moving { prefix: vec![int(0)], limit: int(0), side: Approach::FromAbove })
        );
        assert_eq!(
            sides.right,
            Some(Tail::Moving { prefix: vec![], limit: int(0), side: Approach::FromBelow })
        );
    }

    #[test]
    fn trace_has_expected_ends() {
        let tr = homotopy_trace(&fp("F(0,1,3)"), 4).unwrap();
        assert_eq!(tr.first().unwrap().1, fp("F(0,1,3)"));
        assert_eq!(tr.last().unwrap().1, fp("F(-1)"));
        assert_eq!(tr.len(), 9);
    }
}
