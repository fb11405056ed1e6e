use twinline::feather::{flip_apply, homotopy_eval, homotopy_trace, normalize_to_line, seam_sides, FeatherPoint, Tail};
use twinline::homeo::{render_word, Generator};
use twinline::kernel::{self, check_basic, check_point, BasicOpen, Certificate, OpenSet, Point, SeqDescriptor, Space};
use twinline::numeric::{fmt_rat, parse_rat, Approach, CofiniteSet, Rat};
use twinline::separation::{self as sep, BaireOutcome, CoverDescriptor, DenseFamily};
use twinline::{Error, Result};

use crate::report::{Outcome, Report};
use crate::Verb;

pub fn space(s: &str) -> Result<Space> {
    s.parse()
}

pub fn point(space: &Space, s: &str) -> Result<Point> {
    let p: Point = s.parse()?;
    check_point(space, &p)?;
    Ok(p)
}

pub fn basic(space: &Space, s: &str) -> Result<BasicOpen> {
    let b: BasicOpen = s.parse()?;
    check_basic(space, &b)?;
    Ok(b)
}

fn feather_space(s: &str) -> Result<Space> {
    let sp = space(s)?;
    if sp != Space::Feather {
        return Err(Error::TagMismatch(format!("this verb works on the feather, not {sp}")));
    }
    Ok(sp)
}

fn feather_point(s: &str) -> Result<FeatherPoint> {
    s.parse()
}

/// An open named either by a basic or by a point standing for its maximal
/// Hausdorff dense open.
fn open_item(space: &Space, s: &str) -> Result<OpenSet> {
    match basic(space, s) {
        Ok(b) => Ok(OpenSet::basic(b)),
        Err(_) => sep::cover_member_for(space, &point(space, s)?),
    }
}

fn yes_no(yes: bool, pos: &str, neg: &str) -> (String, Outcome) {
    (if yes { pos } else { neg }.to_string(), Outcome::from_bool(yes))
}

/// Convergence certificates for both one-sided tails of the contraction path
/// of `s` at every seam `1/n`.
pub fn seam_certificates(s: &FeatherPoint) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for n in 1..=s.depth().max(1) as i64 {
        let seam = Rat::new(1.into(), n.into());
        let sides = seam_sides(s, &seam)?;
        for tail in [&sides.left, &sides.right].into_iter().flatten() {
            if let Tail::Moving { prefix, limit, side } = tail {
                let seq = SeqDescriptor::feather(prefix, limit.clone(), *side)?;
                let (_, cert) = kernel::convergence(&Space::Feather, &seq, &Point::Feather(sides.value.clone()))?;
                out.push(cert);
            }
        }
    }
    Ok(out)
}

pub fn run(verb: &Verb) -> Result<Report> {
    Ok(match verb {
        Verb::Separate { space: s, p, q } => {
            let sp = space(s)?;
            let (p, q) = (point(&sp, p)?, point(&sp, q)?);
            let (yes, cert) = kernel::separable(&sp, &p, &q)?;
            let (v, o) = yes_no(yes, "separable: disjoint basics", "NOT separable: twin pair");
            Report::new("", v, o).certified(&sp, cert).cite(&["separated points", "twins"])
        }
        Verb::Twin { space: s, p } => {
            let sp = feather_space(s)?;
            let p = feather_point(p)?;
            let t = p.twin();
            let cert = Certificate::TwinPair { p: Point::Feather(p), q: Point::Feather(t.clone()) };
            Report::new("", t.to_string(), Outcome::Positive).certified(&sp, cert).cite(&["twins"])
        }
        Verb::Flip { space: s, pivot, p } => {
            let sp = feather_space(s)?;
            let (pivot, p) = (feather_point(pivot)?, feather_point(p)?);
            let image = flip_apply(&pivot, &p)?;
            let cert = Certificate::HomeoWord {
                word: vec![Generator::Flip { pivot }],
                from: Point::Feather(p),
                to: Point::Feather(image.clone()),
            };
            Report::new("", image.to_string(), Outcome::Positive).certified(&sp, cert).cite(&["feather homogeneity by flips"])
        }
        Verb::Normalize { space: s, p } => {
            let sp = feather_space(s)?;
            let p = feather_point(p)?;
            let (flips, line) = normalize_to_line(&p);
            let word: Vec<Generator> = flips.into_iter().map(|pivot| Generator::Flip { pivot }).collect();
            let verdict = format!("{} carries {p} to {line}", render_word(&word));
            let cert = Certificate::HomeoWord { word, from: Point::Feather(p), to: Point::Feather(line) };
            Report::new("", verdict, Outcome::Positive).certified(&sp, cert).cite(&["feather homogeneity by flips"])
        }
        Verb::Homotopy { space: s, p, t, csv, steps } => {
            let sp = feather_space(s)?;
            let p = feather_point(p)?;
            let t = parse_rat(t)?;
            let value = homotopy_eval(&t, &p)?;
            if let Some(path) = csv {
                write_trace(path, &p, *steps)?;
            }
            let certs = seam_certificates(&p)?;
            Report::new("", value.to_string(), Outcome::Positive)
                .certified(&sp, Certificate::Bundle(certs))
                .cite(&["contraction of the feather"])
        }
        Verb::Chart { space: s, p, eps } => {
            let sp = space(s)?;
            let p = point(&sp, p)?;
            let b = kernel::chart(&sp, &p, &parse_rat(eps)?)?;
            let cert = Certificate::Inhabited { point: p, opens: vec![OpenSet::basic(b.clone())] };
            Report::new("", b.to_string(), Outcome::Positive).certified(&sp, cert).cite(&["charts"])
        }
        Verb::Meet { space: s, a, b } => {
            let sp = space(s)?;
            let (a, b) = (basic(&sp, a)?, basic(&sp, b)?);
            let m = kernel::meet(&sp, &a, &b)?;
            let (verdict, outcome, cert) = match kernel::meet_basic(&sp, &a, &b)? {
                Some(c) => {
                    let w = kernel::some_point(&sp, &c)?.ok_or_else(|| Error::Precondition("empty meet".into()))?;
                    (m.to_string(), Outcome::Positive, Certificate::Inhabited { point: w, opens: vec![a.into(), b.into()] })
                }
                None => ("empty".to_string(), Outcome::Negative, Certificate::Avoids { basic: a, open: b.into() }),
            };
            Report::new("", verdict, outcome).certified(&sp, cert).cite(&["bases"])
        }
        Verb::Dense { space: s, basics } => {
            let sp = space(s)?;
            let bs = basics.iter().map(|b| basic(&sp, b)).collect::<Result<Vec<_>>>()?;
            let (yes, cert) = kernel::dense(&sp, &OpenSet::Basics(bs))?;
            let (v, o) = yes_no(yes, "dense", "NOT dense");
            Report::new("", v, o).certified(&sp, cert).cite(&["dense opens"])
        }
        Verb::Converges { space: s, base, limit, side, point: target } => {
            let sp = space(s)?;
            let base = point(&sp, base)?;
            let approach = if side == "below" { Approach::FromBelow } else { Approach::FromAbove };
            let seq = SeqDescriptor::new(base, parse_rat(limit)?, approach);
            let target = point(&sp, target)?;
            let (yes, cert) = kernel::convergence(&sp, &seq, &target)?;
            let (v, o) = yes_no(yes, "converges", "does NOT converge");
            Report::new("", v, o).certified(&sp, cert).cite(&["convergence lemma"])
        }
        Verb::Move { space: s, p, q, involutive } => {
            let sp = space(s)?;
            let (p, q) = (point(&sp, p)?, point(&sp, q)?);
            let cert = if *involutive { kernel::involution(&sp, &p, &q)? } else { kernel::move_point(&sp, &p, &q)? };
            let word = match &cert {
                Certificate::HomeoWord { word, .. } | Certificate::Involution { word, .. } => render_word(word),
                _ => unreachable!("move certificates carry words"),
            };
            let word = if word.is_empty() { "id".to_string() } else { word };
            Report::new("", word, Outcome::Positive).certified(&sp, cert).cite(&["homogeneity", "involutorial homogeneity"])
        }
        Verb::Chain { space: s, src, dst, removed } => {
            let sp = space(s)?;
            let (src, dst) = (point(&sp, src)?, point(&sp, dst)?);
            let removed = removed.iter().map(|r| point(&sp, r)).collect::<Result<Vec<_>>>()?;
            let (yes, cert) = kernel::chain(&sp, &src, &dst, &removed)?;
            let (v, o) = yes_no(yes, "connected", "inconclusive: bounded search exhausted");
            Report::new("", v, o).certified(&sp, cert).cite(&["Fuks-Rokhlin remark"])
        }
        Verb::MaximalHausdorff { space: s, x } => {
            let sp = space(s)?;
            let x = point(&sp, x)?;
            let (u, cert) = sep::maximal_hausdorff_at(&sp, &x)?;
            Report::new("", u.to_string(), Outcome::Positive).certified(&sp, cert).cite(&["maximal Hausdorff dense open lemma"])
        }
        Verb::Subcover { space: s, items } => {
            let sp = space(s)?;
            if sp == Space::Cofinite {
                let cover = items.iter().map(|i| i.parse::<CofiniteSet>()).collect::<Result<Vec<_>>>()?;
                let (sub, cert) = sep::quasi_compact_subcover(&cover)?;
                let names: Vec<String> = sub.iter().map(ToString::to_string).collect();
                Report::new("", format!("finite subcover: {}", names.join(", ")), Outcome::Positive)
                    .certified(&sp, cert)
                    .cite(&["cofinite counterexample"])
            } else {
                let cover = match sp {
                    Space::Feather => CoverDescriptor::Skeletons,
                    _ => CoverDescriptor::CanonicalWaves,
                };
                let chosen = items
                    .iter()
                    .map(|i| sep::cover_member_for(&sp, &point(&sp, i)?))
                    .collect::<Result<Vec<_>>>()?;
                let (yes, cert) = sep::subcover_attempt(&sp, &cover, &chosen)?;
                let verdict = match &cert {
                    Certificate::Uncovered { point, .. } => format!("NOT a cover: {point} uncovered"),
                    _ => "covers".to_string(),
                };
                Report::new("", verdict, Outcome::from_bool(yes)).certified(&sp, cert).cite(&["Lindelof failure"])
            }
        }
        Verb::Baire { space: s, probe, opens, singletons } => {
            let sp = space(s)?;
            let probe = basic(&sp, probe)?;
            let fam = match singletons {
                Some(n) => DenseFamily::CofiniteSingletons { candidates: *n },
                None => DenseFamily::Finite(opens.iter().map(|o| open_item(&sp, o)).collect::<Result<_>>()?),
            };
            let (out, cert) = sep::baire_intersect(&sp, &fam, &probe)?;
            let (v, o) = match out {
                BaireOutcome::Point(p) => (format!("point {p}"), Outcome::Positive),
                BaireOutcome::Empty => ("EMPTY".to_string(), Outcome::Negative),
            };
            Report::new("", v, o).certified(&sp, cert).cite(&["Baire intersection", "cofinite counterexample"])
        }
        Verb::Microcompact { space: s, p, v, depth } => {
            let sp = space(s)?;
            let (p, v) = (point(&sp, p)?, basic(&sp, v)?);
            let chain = sep::microcompact_chain(&sp, &p, &v, (*depth).max(1))?;
            let Some(Certificate::Compact { lo, hi, radius, .. }) = chain.first() else {
                unreachable!("non-empty chain of compact certificates")
            };
            let verdict = format!("[{}, {}] in the chart of radius {}", fmt_rat(lo), fmt_rat(hi), fmt_rat(radius));
            let cert = if chain.len() == 1 { chain[0].clone() } else { Certificate::Bundle(chain) };
            Report::new("", verdict, Outcome::Positive).certified(&sp, cert).cite(&["microcompactness lemma"])
        }
        Verb::Demo { .. } => unreachable!("demos are dispatched separately"),
    })
}

fn write_trace(path: &std::path::Path, p: &FeatherPoint, steps: u32) -> Result<()> {
    let io = |e: std::io::Error| Error::Precondition(format!("cannot write {}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::Precondition(e.to_string()))?;
    w.write_record(["t", "point"]).map_err(|e| Error::Precondition(e.to_string()))?;
    for (t, q) in homotopy_trace(p, steps.max(1))? {
        w.write_record([fmt_rat(&t), q.to_string()]).map_err(|e| Error::Precondition(e.to_string()))?;
    }
    w.flush().map_err(io)
}
