//! Scripted scenarios. Every run is deterministic for a given seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use twinline::exec::Exec;
use twinline::feather::{homotopy_eval, FeatherPoint};
use twinline::kernel::{self, BasicOpen, Certificate, Point, SeqDescriptor, Space};
use twinline::multiline::SpaceSpec;
use twinline::numeric::{fmt_rat, int, rat, Approach, CofiniteSet, FinSet};
use twinline::sample;
use twinline::separation::{self as sep, BaireOutcome, CoverDescriptor, DenseFamily, PipelineVerdict};
use twinline::{Error, Result};

use crate::report::{Outcome, Report};
use crate::verbs::{self, seam_certificates};

pub const NAMES: [&str; 14] = [
    "two-origins",
    "branching-line",
    "feather-homogeneity",
    "feather-contraction",
    "feather-twins",
    "doubled-line",
    "involutorial",
    "fuks-rokhlin",
    "lemma-zorn",
    "theorem2",
    "lindelof-failure",
    "cofinite-not-baire",
    "microcompact",
    "implications",
];

#[derive(Serialize)]
struct Step {
    claim: String,
    space: String,
    certificate: Certificate,
}

/// Collects labelled certificates, possibly over several spaces.
#[derive(Default)]
struct Scene {
    steps: Vec<Step>,
    checks: Vec<(Space, Certificate)>,
}

impl Scene {
    fn add(&mut self, claim: impl Into<String>, space: &Space, cert: Certificate) -> &mut Self {
        self.checks.push((space.clone(), cert.clone()));
        self.steps.push(Step { claim: claim.into(), space: space.to_string(), certificate: cert });
        self
    }

    fn report(self, verdict: impl Into<String>, outcome: Outcome, cite: &[&str]) -> Report {
        Report::new("", verdict, outcome).with_body(&self.steps, self.checks).cite(cite)
    }
}

fn p(space: &Space, s: &str) -> Result<Point> {
    verbs::point(space, s)
}

fn b(space: &Space, s: &str) -> Result<BasicOpen> {
    verbs::basic(space, s)
}

fn fp(s: &str) -> Result<FeatherPoint> {
    s.parse()
}

pub fn run(name: &str, space: Option<&str>, seed: u64) -> Result<Report> {
    if space.is_some() && name != "theorem2" {
        return Err(Error::pre(format!("demo {name} takes no --space")));
    }
    match name {
        "two-origins" => two_origins(),
        "branching-line" => branching_line(),
        "feather-homogeneity" => feather_homogeneity(),
        "feather-contraction" => feather_contraction(),
        "feather-twins" => feather_twins(),
        "doubled-line" => doubled_line(),
        "involutorial" => involutorial(),
        "fuks-rokhlin" => fuks_rokhlin(),
        "lemma-zorn" => lemma_zorn(),
        "theorem2" => theorem2(space.unwrap_or("doubled"), seed),
        "lindelof-failure" => lindelof_failure(),
        "cofinite-not-baire" => cofinite_not_baire(),
        "microcompact" => microcompact(),
        "implications" => implications(),
        other => Err(Error::pre(format!("unknown demo `{other}`; available: {}", NAMES.join(", ")))),
    }
}

fn two_origins() -> Result<Report> {
    let s = Space::two_origins();
    let (o0, o1) = (p(&s, "D(0 @0)")?, p(&s, "D(0 @1)")?);
    let mut sc = Scene::default();
    sc.add("the two origins are not separable", &s, kernel::separable(&s, &o0, &o1)?.1);
    sc.add("an origin separates from a nearby point", &s, kernel::separable(&s, &o0, &p(&s, "D(1/2 @0)")?)?.1);
    let seq = SeqDescriptor::new(p(&s, "D(1 @0)")?, int(0), Approach::FromBelow);
    sc.add("-1/m converges to the first origin", &s, kernel::convergence(&s, &seq, &o0)?.1);
    sc.add("-1/m converges to the second origin", &s, kernel::convergence(&s, &seq, &o1)?.1);
    sc.add("the origins are exchanged by a homeomorphism", &s, kernel::involution(&s, &o0, &o1)?);
    Ok(sc.report("the line with two origins is a non-Hausdorff 1-manifold", Outcome::Positive, &["line with two origins", "twins"]))
}

fn branching_line() -> Result<Report> {
    let s = Space::Branching;
    let (l, r) = (p(&s, "B(0 @L)")?, p(&s, "B(0 @R)")?);
    let mut sc = Scene::default();
    sc.add("the branch points are not separable", &s, kernel::separable(&s, &l, &r)?.1);
    sc.add("a shared point separates from a branch point", &s, kernel::separable(&s, &p(&s, "B(-1 @L)")?, &r)?.1);
    sc.add("no homeomorphism moves a branch point onto a shared point", &s, kernel::branching_non_homogeneity());
    sc.add("a maximal Hausdorff dense open misses one branch point", &s, sep::maximal_hausdorff_at(&s, &l)?.1);
    Ok(sc.report("the branching line is not homogeneous", Outcome::Positive, &["branching line", "homogeneity"]))
}

fn feather_homogeneity() -> Result<Report> {
    let s = Space::Feather;
    let mut sc = Scene::default();
    for (a, z) in [("F(0)", "F(3)"), ("F(0,1,2)", "F(5)"), ("F(0,1,1)", "F(-1,2)"), ("F(1,2,3,3)", "F(0,1/2)")] {
        let (a, z) = (p(&s, a)?, p(&s, z)?);
        sc.add(format!("{a} is carried to {z} by flips and translations"), &s, kernel::move_point(&s, &a, &z)?);
    }
    Ok(sc.report("the feather is homogeneous", Outcome::Positive, &["feather homogeneity by flips"]))
}

#[derive(Serialize)]
struct Contraction {
    point: String,
    values: Vec<(String, String)>,
    seams: Certificate,
}

fn feather_contraction() -> Result<Report> {
    let s = fp("F(0,1,2,3)")?;
    let times = [int(0), rat(1, 4), rat(1, 3), rat(1, 2), int(1), rat(3, 2), int(2)];
    let values = times
        .iter()
        .map(|t| Ok((fmt_rat(t), homotopy_eval(t, &s)?.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let seams = Certificate::Bundle(seam_certificates(&s)?);
    let body = Contraction { point: s.to_string(), values, seams: seams.clone() };
    Ok(Report::new("", "the path from the identity at t=0 to the base line at t=2 is continuous at every seam", Outcome::Positive)
        .with_body(&body, vec![(Space::Feather, seams)])
        .cite(&["contraction of the feather"]))
}

fn feather_twins() -> Result<Report> {
    let s = Space::Feather;
    let (a, t) = (p(&s, "F(0,1)")?, p(&s, "F(0,1,1)")?);
    let mut sc = Scene::default();
    sc.add("F(0,1) and its twin are not separable", &s, kernel::separable(&s, &a, &t)?.1);
    let below = SeqDescriptor::feather(&[int(0)], int(1), Approach::FromBelow)?;
    sc.add("(0, 1-1/m) converges to F(0,1)", &s, kernel::convergence(&s, &below, &a)?.1);
    sc.add("(0, 1-1/m) converges to the twin", &s, kernel::convergence(&s, &below, &t)?.1);
    let above = SeqDescriptor::feather(&[int(0)], int(1), Approach::FromAbove)?;
    sc.add("(0, 1+1/m) converges to F(0,1)", &s, kernel::convergence(&s, &above, &a)?.1);
    sc.add("(0, 1+1/m) does not converge to the twin", &s, kernel::convergence(&s, &above, &t)?.1);
    sc.add("F(0,1) and F(0,2) are separable", &s, kernel::separable(&s, &a, &p(&s, "F(0,2)")?)?.1);
    Ok(sc.report("twins are the only non-separable pairs of the feather", Outcome::Positive, &["twins", "convergence lemma"]))
}

fn doubled_line() -> Result<Report> {
    let s = Space::doubled();
    let mut sc = Scene::default();
    sc.add("D(0 @0) and D(0 @1) are not separable", &s, kernel::separable(&s, &p(&s, "D(0 @0)")?, &p(&s, "D(0 @1)")?)?.1);
    sc.add("points over different abscissae are separable", &s, kernel::separable(&s, &p(&s, "D(0 @1)")?, &p(&s, "D(1 @1)")?)?.1);
    let sample: FinSet = [int(0), rat(1, 2), int(1)].into_iter().collect();
    sc.add("the up points are discrete, and a down point avoids them", &s, kernel::discrete_up(&sample, Some(&rat(1, 4))));
    sc.add("a maximal Hausdorff dense open lifts one point", &s, sep::maximal_hausdorff_at(&s, &p(&s, "D(0 @1)")?)?.1);
    Ok(sc.report("the doubled line is homogeneous, locally Hausdorff and not Hausdorff", Outcome::Positive, &["doubled line", "twins"]))
}

fn involutorial() -> Result<Report> {
    let mut sc = Scene::default();
    for (k, a, z) in [(2, "D(0 @0)", "D(0 @1)"), (2, "D(-1 @1)", "D(3 @0)"), (3, "D(0 @1)", "D(2 @2)"), (3, "D(1/2 @0)", "D(1/2 @2)")] {
        let s = Space::Multi(SpaceSpec::fold(k));
        let (a, z) = (p(&s, a)?, p(&s, z)?);
        sc.add(format!("an involution of D{k} exchanges {a} and {z}"), &s, kernel::involution(&s, &a, &z)?);
    }
    Ok(sc.report("the multilines are involutorially homogeneous", Outcome::Positive, &["involutorial homogeneity"]))
}

fn fuks_rokhlin() -> Result<Report> {
    let d3 = Space::Multi(SpaceSpec::fold(3));
    let removed = [p(&d3, "D(0 @1)")?, p(&d3, "D(0 @2)")?];
    let mut sc = Scene::default();
    let (ok, cert) = kernel::chain(&d3, &p(&d3, "D(-1 @0)")?, &p(&d3, "D(1 @0)")?, &removed)?;
    sc.add("D3 minus two points over 0 stays connected", &d3, cert);
    let two = Space::two_origins();
    let gone = [p(&two, "D(0 @0)")?, p(&two, "D(0 @1)")?];
    let (control, cert) = kernel::chain(&two, &p(&two, "D(-1 @0)")?, &p(&two, "D(1 @0)")?, &gone)?;
    sc.add("control: the two origins removed, no chain exists", &two, cert);
    if !ok || control {
        return Err(Error::pre("chain search disagrees with the expected outcome"));
    }
    Ok(sc.report("removing two points need not disconnect a non-Hausdorff 1-manifold", Outcome::Positive, &["Fuks-Rokhlin remark"]))
}

fn lemma_zorn() -> Result<Report> {
    let mut sc = Scene::default();
    let cases = [
        (Space::doubled(), "D(0 @1)"),
        (Space::Multi(SpaceSpec::fold(3)), "D(1/2 @2)"),
        (Space::two_origins(), "D(0 @0)"),
        (Space::Feather, "F(0,1,1)"),
        (Space::Branching, "B(0 @L)"),
    ];
    for (s, x) in cases {
        let x = p(&s, x)?;
        let (u, cert) = sep::maximal_hausdorff_at(&s, &x)?;
        let outside = match &cert {
            Certificate::Maximal { outside, .. } => Some(outside.clone()),
            _ => None,
        };
        sc.add(format!("{u} is a maximal Hausdorff dense open around {x}"), &s, cert);
        if let Some(o) = outside {
            sc.add(format!("adjoining {o} creates a twin pair"), &s, sep::adjoin_witness(&s, &u, &o)?);
        }
    }
    Ok(sc.report("every point lies in a maximal Hausdorff dense open", Outcome::Positive, &["maximal Hausdorff dense open lemma"]))
}

fn theorem2(which: &str, seed: u64) -> Result<Report> {
    let s: Space = match which {
        "line" | "doubled" | "feather" => verbs::space(which)?,
        other => return Err(Error::pre(format!("theorem2 runs on line, doubled or feather, not `{other}`"))),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<Point> = (0..8).map(|_| sample::point(&mut rng, &s)).collect();
    let probes: Vec<Point> = (0..32).map(|_| sample::point(&mut rng, &s)).collect();
    let report = sep::theorem2_pipeline(&s, &sample, &probes, Exec::Sequential)?;
    let checks = report.stages.iter().map(|st| (s.clone(), st.certificate.clone())).collect();
    let (verdict, outcome) = match report.verdict {
        PipelineVerdict::SeparatedPointFound => {
            let x0 = report.x0.as_ref().map(ToString::to_string).unwrap_or_default();
            (format!("every stage holds on {s}: {x0} separates from all probes"), Outcome::Positive)
        }
        PipelineVerdict::FailedAt(stage) => {
            let stage = serde_json::to_value(stage).expect("stages serialize");
            (format!("the argument breaks on {s} at the {} stage", stage.as_str().unwrap_or("?")), Outcome::Negative)
        }
    };
    Ok(Report::new("", verdict, outcome)
        .with_body(&report, checks)
        .cite(&["Hausdorffness theorem", "Lindelof failure", "Baire intersection"]))
}

fn lindelof_failure() -> Result<Report> {
    let mut sc = Scene::default();
    let families = [
        (Space::doubled(), CoverDescriptor::CanonicalWaves, vec!["D(0 @1)", "D(1 @1)", "D(2 @1)", "D(0 @0)"]),
        (Space::Multi(SpaceSpec::fold(3)), CoverDescriptor::CanonicalWaves, vec!["D(0 @1)", "D(0 @2)"]),
        (Space::Feather, CoverDescriptor::Skeletons, vec!["F(0)", "F(0,0)", "F(1,1)", "F(3,3)"]),
    ];
    for (s, cover, items) in families {
        let chosen = items.iter().map(|x| sep::cover_member_for(&s, &p(&s, x)?)).collect::<Result<Vec<_>>>()?;
        let (covered, cert) = sep::subcover_attempt(&s, &cover, &chosen)?;
        if covered {
            return Err(Error::pre(format!("a finite subfamily covered {s}")));
        }
        sc.add(format!("{} maximal opens of {s} leave a point uncovered", chosen.len()), &s, cert);
    }
    Ok(sc.report("no finite subfamily of the maximal opens covers", Outcome::Positive, &["Lindelof failure"]))
}

fn cofinite_not_baire() -> Result<Report> {
    let s = Space::Cofinite;
    let mut sc = Scene::default();
    let cover: Vec<CofiniteSet> = ["cofinite-excl{0,1,2}", "cofinite-excl{0}", "cofinite-excl{1,5}", "cofinite-excl{2,7}"]
        .iter()
        .map(|c| c.parse())
        .collect::<Result<_>>()?;
    sc.add("every open cover has a finite subcover", &s, sep::quasi_compact_subcover(&cover)?.1);
    let fam = DenseFamily::CofiniteSingletons { candidates: 100 };
    let (out, cert) = sep::baire_intersect(&s, &fam, &b(&s, "cofinite-excl{}")?)?;
    if out != BaireOutcome::Empty {
        return Err(Error::pre("the complements of singletons met"));
    }
    sc.add("the dense opens N - {n} have empty intersection on 0..99", &s, cert);
    Ok(sc.report("EMPTY: quasi-compact, T1, homogeneous and not Baire", Outcome::Positive, &["cofinite counterexample", "Baire intersection"]))
}

fn microcompact() -> Result<Report> {
    let mut sc = Scene::default();
    let cases = [
        (Space::doubled(), "D(0 @1)", "W[(-1,1) - {0^1}]"),
        (Space::Feather, "F(0,1)", "FI[(0,1/2);(0,3/2)]"),
        (Space::Branching, "B(0 @R)", "BI[(-1,1)@R]"),
    ];
    for (s, x, v) in cases {
        let (x, v) = (p(&s, x)?, b(&s, v)?);
        let chain = sep::microcompact_chain(&s, &x, &v, 5)?;
        if !sep::verify_nested(&s, &chain) {
            return Err(Error::pre(format!("nested compact neighborhoods failed on {s}")));
        }
        sc.add(format!("five nested compact neighborhoods of {x} inside {v}"), &s, Certificate::Bundle(chain));
    }
    Ok(sc.report("points have arbitrarily small compact neighborhoods", Outcome::Positive, &["microcompactness lemma"]))
}

fn implications() -> Result<Report> {
    let rows = sep::chart_of_implications()?;
    let checks = rows
        .iter()
        .flat_map(|r| r.cells.iter().filter_map(|c| c.certificate.clone().map(|cert| (r.space.clone(), cert))))
        .collect();
    Ok(Report::new("", "separation properties of the model spaces", Outcome::Positive)
        .with_body(&rows, checks)
        .cite(&["chart of implications"]))
}
