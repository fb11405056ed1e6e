use crate::error::{Error, Result};
use crate::feather::Chart;
use crate::kernel::{basic_subset, chart, member, verify_certificate, BasicOpen, Certificate, Point, Space};
use crate::numeric::{int, Rat};

const MAX_HALVINGS: u32 = 64;

/// The actual radius of the chart requested at `eps`.
fn chart_radius(p: &Point, eps: &Rat) -> Result<Rat> {
    Ok(match p {
        Point::Feather(f) => Chart::new(f, eps)?.radius().clone(),
        _ => eps.clone(),
    })
}

/// A closed chart interval around `p` inside `v`: halve the chart radius
/// from 1 until the chart fits, then keep the middle half.
pub fn microcompact_neighborhood(space: &Space, p: &Point, v: &BasicOpen) -> Result<Certificate> {
    if *space == Space::Cofinite {
        return Err(Error::Inapplicable("the cofinite space has no Hausdorff charts".into()));
    }
    if !member(space, p, v)? {
        return Err(Error::pre(format!("{p} is not in {v}")));
    }
    let mut eps = int(1);
    for _ in 0..MAX_HALVINGS {
        let radius = chart_radius(p, &eps)?;
        if basic_subset(&chart(space, p, &radius)?, v) {
            let half = &radius / int(2);
            return Ok(Certificate::Compact {
                center: p.clone(),
                lo: -half.clone(),
                hi: half,
                radius,
                neighborhood: v.clone(),
            });
        }
        eps /= int(2);
    }
    Err(Error::pre(format!("no chart of radius 2^-{MAX_HALVINGS} at {p} fits in {v}")))
}

/// Repeats [`microcompact_neighborhood`] inside the interior of its own
/// output, `depth` times.
pub fn microcompact_chain(space: &Space, p: &Point, v: &BasicOpen, depth: usize) -> Result<Vec<Certificate>> {
    let mut out: Vec<Certificate> = Vec::with_capacity(depth);
    let mut nbhd = v.clone();
    for _ in 0..depth {
        let cert = microcompact_neighborhood(space, p, &nbhd)?;
        let Certificate::Compact { hi, .. } = &cert else { unreachable!("compact certificate") };
        nbhd = chart(space, p, hi)?;
        out.push(cert);
    }
    Ok(out)
}

/// Each link verifies, shares the centre, sits inside the previous
/// neighborhood, and its interval lies strictly inside the previous one.
pub fn verify_nested(space: &Space, chain: &[Certificate]) -> bool {
    let links: Option<Vec<(&Point, &Rat, &Rat, &BasicOpen)>> = chain
        .iter()
        .map(|c| match c {
            Certificate::Compact { center, lo, hi, neighborhood, .. } => Some((center, lo, hi, neighborhood)),
            _ => None,
        })
        .collect();
    let Some(links) = links else { return false };
    !links.is_empty()
        && chain.iter().all(|c| verify_certificate(space, c))
        && links.windows(2).all(|w| {
            let (c0, lo0, hi0, v0) = w[0];
            let (c1, lo1, hi1, v1) = w[1];
            c0 == c1 && lo0 < lo1 && hi1 < hi0 && basic_subset(v1, v0)
        })
}
