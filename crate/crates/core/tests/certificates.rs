use twinline::kernel::{self, verify_certificate, Certificate, Point, Space};
use twinline::separation::{maximal_hausdorff_at, microcompact_neighborhood, quasi_compact_subcover};

fn pt(s: &str) -> Point {
    s.parse().unwrap()
}

fn samples() -> Vec<(Space, Certificate)> {
    let f = Space::Feather;
    let d = Space::doubled();
    let two = Space::two_origins();
    vec![
        (f.clone(), kernel::separable(&f, &pt("F(0,1)"), &pt("F(0,2)")).unwrap().1),
        (f.clone(), kernel::separable(&f, &pt("F(0,1)"), &pt("F(0,1,1)")).unwrap().1),
        (f.clone(), kernel::move_point(&f, &pt("F(0,1,2)"), &pt("F(3)")).unwrap()),
        (d.clone(), kernel::involution(&d, &pt("D(0 @0)"), &pt("D(0 @1)")).unwrap()),
        (d.clone(), maximal_hausdorff_at(&d, &pt("D(1/2 @1)")).unwrap().1),
        (d.clone(), microcompact_neighborhood(&d, &pt("D(0 @0)"), &"W[(-1,1)]".parse().unwrap()).unwrap()),
        (two.clone(), kernel::chain(&two, &pt("D(-1 @0)"), &pt("D(1 @0)"), &[pt("D(0 @1)")]).unwrap().1),
        (Space::Cofinite, quasi_compact_subcover(&["cofinite-excl{1}".parse().unwrap(), "cofinite-excl{2}".parse().unwrap()]).unwrap().1),
        (Space::Branching, kernel::branching_non_homogeneity()),
    ]
}

#[test]
fn certificates_survive_a_json_round_trip() {
    for (space, cert) in samples() {
        assert!(verify_certificate(&space, &cert), "{cert:?}");
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert!(verify_certificate(&space, &back));
        assert_eq!(back, cert);
    }
}

#[test]
fn tampered_certificates_are_rejected() {
    let f = Space::Feather;
    let twins = Certificate::TwinPair { p: pt("F(0,1)"), q: pt("F(0,2)") };
    assert!(!verify_certificate(&f, &twins));

    let (_, cert) = kernel::separable(&f, &pt("F(0,1)"), &pt("F(0,2)")).unwrap();
    let Certificate::SeparatedBy { p, q, bp, .. } = cert else { panic!() };
    let overlapping = Certificate::SeparatedBy { p, q, bq: bp.clone(), bp };
    assert!(!verify_certificate(&f, &overlapping));

    let d = Space::doubled();
    let (_, cert) = maximal_hausdorff_at(&d, &pt("D(0 @1)")).unwrap();
    let Certificate::Maximal { x, open, outside, .. } = cert else { panic!() };
    let wrong = Certificate::Maximal { x, open, partner: outside.clone(), outside };
    assert!(!verify_certificate(&d, &wrong));

    let sub = Certificate::FiniteSubcover {
        cover: vec!["cofinite-excl{1}".parse().unwrap()],
        sub: vec!["cofinite-excl{1}".parse().unwrap()],
    };
    assert!(!verify_certificate(&Space::Cofinite, &sub));
}

#[test]
fn certificates_are_checked_against_their_space() {
    let d = Space::doubled();
    let (_, cert) = kernel::separable(&d, &pt("D(0 @0)"), &pt("D(0 @1)")).unwrap();
    assert!(verify_certificate(&d, &cert));
    assert!(!verify_certificate(&Space::line(), &cert));
    assert!(!verify_certificate(&Space::Feather, &cert));
}
