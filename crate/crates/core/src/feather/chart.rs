use num_traits::{Signed, Zero};

use super::interval::FeatherInterval;
use super::point::FeatherPoint;
use crate::error::{Error, Result};
use crate::numeric::Rat;

/// A canonical chart: a small interval around `center` with coordinate
/// `w -> w_last - center_last` onto `(-radius, radius)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    center: FeatherPoint,
    radius: Rat,
    domain: FeatherInterval,
}

impl Chart {
    /// Chart at `p`. The radius is shrunk so the chart keeps one of the two
    /// canonical shapes: a straight piece around a strict point, or the glued
    /// piece through an upper twin.
    pub fn new(p: &FeatherPoint, eps: &Rat) -> Result<Chart> {
        if *eps <= Rat::zero() {
            return Err(Error::pre("chart radius must be positive"));
        }
        let radius = eps.clone().min(max_radius(p).unwrap_or_else(|| eps.clone()));
        let s = p.coords();
        let n = p.depth();
        let domain = if p.is_upper_twin() {
            let a = &s[n - 1];
            let lower = FeatherPoint::from_parts(&s[..n - 1], &[a - &radius]);
            let upper = FeatherPoint::from_parts(&s[..n], &[a + &radius]);
            FeatherInterval::new(lower, upper)?
        } else {
            let lower = FeatherPoint::from_parts(&s[..n], &[&s[n] - &radius]);
            let upper = FeatherPoint::from_parts(&s[..n], &[&s[n] + &radius]);
            FeatherInterval::new(lower, upper)?
        };
        Ok(Chart {
            center: p.clone(),
            radius,
            domain,
        })
    }

    pub fn center(&self) -> &FeatherPoint {
        &self.center
    }

    pub fn radius(&self) -> &Rat {
        &self.radius
    }

    pub fn domain(&self) -> &FeatherInterval {
        &self.domain
    }

    pub fn contains(&self, w: &FeatherPoint) -> bool {
        self.domain.contains(w)
    }

    pub fn coord(&self, w: &FeatherPoint) -> Option<Rat> {
        self.contains(w).then(|| w.last() - self.center.last())
    }

    pub fn point_at(&self, c: &Rat) -> Option<FeatherPoint> {
        if c.abs() >= self.radius {
            return None;
        }
        let s = self.center.coords();
        let n = self.center.depth();
        let y = self.center.last() + c;
        Some(if self.center.is_upper_twin() && *c < Rat::zero() {
            FeatherPoint::from_parts(&s[..n - 1], &[y])
        } else {
            FeatherPoint::from_parts(&s[..n], &[y])
        })
    }
}

/// Largest radius keeping the chart's lower end valid, if bounded.
fn max_radius(p: &FeatherPoint) -> Option<Rat> {
    let s = p.coords();
    let n = p.depth();
    if p.is_upper_twin() {
        (n >= 2).then(|| &s[n - 1] - &s[n - 2])
    } else {
        (n >= 1).then(|| &s[n] - &s[n - 1])
    }
}
