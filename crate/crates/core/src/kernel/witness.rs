use super::*;
use crate::homeo::{involutive_multi, move_feather, move_multi};
use crate::multiline::branching::non_homogeneity_pair;
use crate::multiline::{chain_connect, default_window, ChainOutcome, MultiLinePoint};
use crate::numeric::FinSet;

/// Convergence of a parametric sequence to `p`, decided in closed form and
/// certified so the verifier can replay it against charts.
pub fn convergence(space: &Space, s: &SeqDescriptor, p: &Point) -> Result<(bool, Certificate)> {
    let yes = converges(space, s, p)?;
    let cert = if yes {
        Certificate::Converges { seq: s.clone(), point: p.clone() }
    } else {
        Certificate::Diverges { seq: s.clone(), point: p.clone() }
    };
    Ok((yes, cert))
}

/// A homeomorphism word carrying `p` to `q`.
pub fn move_point(space: &Space, p: &Point, q: &Point) -> Result<Certificate> {
    check_point(space, p)?;
    check_point(space, q)?;
    let word = match (space, p, q) {
        (Space::Feather, Point::Feather(a), Point::Feather(b)) => move_feather(a, b),
        (Space::Multi(spec), Point::Multi(a), Point::Multi(b)) => move_multi(spec, a, b)?,
        _ => return Err(Error::Inapplicable(format!("no homeomorphism words on {space}"))),
    };
    Ok(Certificate::HomeoWord { word, from: p.clone(), to: q.clone() })
}

/// An involution of a multiline exchanging `p` and `q`.
pub fn involution(space: &Space, p: &Point, q: &Point) -> Result<Certificate> {
    let spec = space.spec()?;
    let (Point::Multi(a), Point::Multi(b)) = (p, q) else {
        return Err(Error::TagMismatch(format!("{p} and {q} are not multiline points")));
    };
    let word = involutive_multi(spec, a, b)?;
    Ok(Certificate::Involution { word, p: p.clone(), q: q.clone() })
}

/// Connects `src` to `dst` by a chain of interval waves avoiding `removed`,
/// or reports that the bounded search over the default window came up empty.
pub fn chain(space: &Space, src: &Point, dst: &Point, removed: &[Point]) -> Result<(bool, Certificate)> {
    let spec = space.spec()?;
    let as_multi = |p: &Point| -> Result<MultiLinePoint> {
        check_point(space, p)?;
        match p {
            Point::Multi(m) => Ok(m.clone()),
            _ => unreachable!("tags checked"),
        }
    };
    let (s, d) = (as_multi(src)?, as_multi(dst)?);
    let gone: Vec<MultiLinePoint> = removed.iter().map(as_multi).collect::<Result<_>>()?;
    if gone.contains(&s) || gone.contains(&d) {
        return Err(Error::pre("the chain ends must not be removed"));
    }
    let mut all: Vec<&MultiLinePoint> = gone.iter().collect();
    all.extend([&s, &d]);
    let window = default_window(&all);
    Ok(match chain_connect(spec, &s, &d, &gone, &window)? {
        ChainOutcome::Connected(links) => (
            true,
            Certificate::Chain {
                src: src.clone(),
                dst: dst.clone(),
                removed: removed.to_vec(),
                links: links.into_iter().map(BasicOpen::Wave).collect(),
            },
        ),
        ChainOutcome::Inconclusive => (
            false,
            Certificate::SearchExhausted { src: src.clone(), dst: dst.clone(), removed: removed.to_vec() },
        ),
    })
}

/// The origins of the branching line have partners; other points do not.
pub fn branching_non_homogeneity() -> Certificate {
    let (a, b, c) = non_homogeneity_pair();
    Certificate::NonHomogeneity { a: Point::Branch(a), b: Point::Branch(b), c: Point::Branch(c) }
}

/// Isolating waves for the up points over `sample`, and a wave around the
/// down point over `down` that meets no up point.
pub fn discrete_up(sample: &FinSet, down: Option<&Rat>) -> Certificate {
    let (isolating, avoiding) = ml::up_points_discrete_witness(sample, down);
    Certificate::DiscreteUp {
        isolating: sample
            .iter()
            .zip(isolating)
            .map(|(x, w)| (Point::Multi(MultiLinePoint::new(x.clone(), 1)), BasicOpen::Wave(w)))
            .collect(),
        avoiding: down.zip(avoiding).map(|(y, w)| (Point::Multi(MultiLinePoint::down(y.clone())), BasicOpen::Wave(w))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, Approach};

    fn pt(s: &str) -> Point {
        s.parse().unwrap()
    }

    #[test]
    fn moves_and_involutions_verify() {
        let d3 = Space::Multi(crate::multiline::SpaceSpec::fold(3));
        let c = move_point(&d3, &pt("D(1/2 @2)"), &pt("D(-3 @1)")).unwrap();
        assert!(verify_certificate(&d3, &c));
        let c = involution(&d3, &pt("D(1/2 @2)"), &pt("D(-3 @1)")).unwrap();
        assert!(verify_certificate(&d3, &c));
        let c = move_point(&Space::Feather, &pt("F(0,1,1)"), &pt("F(5,6)")).unwrap();
        assert!(verify_certificate(&Space::Feather, &c));
    }

    #[test]
    fn chain_certificates() {
        let d3 = Space::Multi(crate::multiline::SpaceSpec::fold(3));
        let (ok, c) = chain(&d3, &pt("D(-1 @0)"), &pt("D(1 @0)"), &[pt("D(0 @0)"), pt("D(0 @1)")]).unwrap();
        assert!(ok && verify_certificate(&d3, &c));
        let two = Space::two_origins();
        let (ok, c) = chain(&two, &pt("D(-1 @0)"), &pt("D(1 @0)"), &[pt("D(0 @0)"), pt("D(0 @1)")]).unwrap();
        assert!(!ok && verify_certificate(&two, &c));
    }

    #[test]
    fn witnesses() {
        assert!(verify_certificate(&Space::Branching, &branching_non_homogeneity()));
        let sample: FinSet = [rat(0, 1), rat(1, 3), rat(2, 1)].into_iter().collect();
        assert!(verify_certificate(&Space::doubled(), &discrete_up(&sample, Some(&rat(7, 2)))));
        let s = SeqDescriptor::feather(&[int(0)], int(1), Approach::FromAbove).unwrap();
        let (yes, c) = convergence(&Space::Feather, &s, &pt("F(0,1,1)")).unwrap();
        assert!(!yes && verify_certificate(&Space::Feather, &c));
    }
}
