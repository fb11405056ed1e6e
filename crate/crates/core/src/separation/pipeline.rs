use serde::{Deserialize, Serialize};

use super::baire::{baire_intersect, BaireOutcome, DenseFamily};
use super::compact::microcompact_neighborhood;
use super::cover::{quasi_compact_subcover, subcover_attempt, CoverDescriptor};
use super::maximal::maximal_hausdorff_at;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::kernel::{chart, hausdorff_open, separable, whole, BasicOpen, Certificate, OpenSet, Point, Space};
use crate::numeric::{int, CofiniteSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    LemmaZorn,
    Subcover,
    Baire,
    Separate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub stage: Stage,
    pub ok: bool,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PipelineVerdict {
    SeparatedPointFound,
    FailedAt(Stage),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub space: Space,
    pub stages: Vec<StageReport>,
    pub verdict: PipelineVerdict,
    pub x0: Option<Point>,
}

impl PipelineReport {
    pub fn stage(&self, stage: Stage) -> Option<&StageReport> {
        self.stages.iter().find(|s| s.stage == stage)
    }
}

fn cover_for(space: &Space) -> Result<CoverDescriptor> {
    match space {
        Space::Multi(_) => Ok(CoverDescriptor::CanonicalWaves),
        Space::Feather => Ok(CoverDescriptor::Skeletons),
        _ => Err(Error::Inapplicable(format!("no canonical cover of {space}"))),
    }
}

/// Replays the argument "homogeneous, Lindelof, locally Hausdorff and Baire
/// implies Hausdorff" on a presented sample.
///
/// The maximal opens at `sample` form the presented subfamily of the cover.
/// When they cover, their intersection inside the chart at the first sample
/// point yields `x0`, which must then separate from every probe.
pub fn theorem2_pipeline(space: &Space, sample: &[Point], probes: &[Point], exec: Exec) -> Result<PipelineReport> {
    let cover = cover_for(space)?;
    let first = sample.first().ok_or_else(|| Error::pre("the pipeline needs a sample point"))?;
    let mut stages = Vec::new();
    let fail = |stages: Vec<StageReport>, stage| PipelineReport {
        space: space.clone(),
        stages,
        verdict: PipelineVerdict::FailedAt(stage),
        x0: None,
    };

    let maximal: Vec<(OpenSet, Certificate)> = exec.map(sample, |x| maximal_hausdorff_at(space, x)).into_iter().collect::<Result<_>>()?;
    let mut chosen: Vec<OpenSet> = Vec::new();
    for (u, _) in &maximal {
        if !chosen.contains(u) {
            chosen.push(u.clone());
        }
    }
    stages.push(StageReport {
        stage: Stage::LemmaZorn,
        ok: true,
        certificate: Certificate::Bundle(maximal.into_iter().map(|(_, c)| c).collect()),
    });

    let (covered, cert) = subcover_attempt(space, &cover, &chosen)?;
    stages.push(StageReport { stage: Stage::Subcover, ok: covered, certificate: cert });
    if !covered {
        return Ok(fail(stages, Stage::Subcover));
    }

    let probe = whole(space).map_or_else(|| chart(space, first, &int(1)), Ok)?;
    let (outcome, cert) = baire_intersect(space, &DenseFamily::Finite(chosen), &probe)?;
    let ok = matches!(outcome, BaireOutcome::Point(_));
    stages.push(StageReport { stage: Stage::Baire, ok, certificate: cert });
    let BaireOutcome::Point(x0) = outcome else {
        return Ok(fail(stages, Stage::Baire));
    };

    let others: Vec<&Point> = probes.iter().filter(|y| **y != x0).collect();
    let results: Vec<(bool, Certificate)> = exec.map(&others, |y| separable(space, &x0, y)).into_iter().collect::<Result<_>>()?;
    let ok = results.iter().all(|(s, _)| *s);
    stages.push(StageReport {
        stage: Stage::Separate,
        ok,
        certificate: Certificate::Bundle(results.into_iter().map(|(_, c)| c).collect()),
    });
    if !ok {
        return Ok(fail(stages, Stage::Separate));
    }
    Ok(PipelineReport {
        space: space.clone(),
        stages,
        verdict: PipelineVerdict::SeparatedPointFound,
        x0: Some(x0),
    })
}

/// One property of one space, with the certificate that settles it when a
/// checker does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartCell {
    pub property: String,
    pub holds: Option<bool>,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartRow {
    pub space: Space,
    pub cells: Vec<ChartCell>,
}

fn cell(property: &str, holds: Option<bool>, certificate: Option<Certificate>) -> ChartCell {
    ChartCell { property: property.into(), holds, certificate }
}

fn manifold_row(space: Space, p: &str, two_points: [&str; 2]) -> Result<ChartRow> {
    let p: Point = p.parse()?;
    let v = chart(&space, &p, &int(1))?;
    let compact = microcompact_neighborhood(&space, &p, &v)?;
    let (x, _) = maximal_hausdorff_at(&space, &p)?;
    let (_, baire) = baire_intersect(&space, &DenseFamily::Finite(vec![x.clone()]), &v)?;
    let [a, b] = two_points.map(|s| s.parse::<Point>());
    let (hausdorff, sep) = separable(&space, &a?, &b?)?;
    let quasi = match cover_for(&space) {
        Ok(cover) if space != Space::line() => {
            let (ok, cert) = subcover_attempt(&space, &cover, &[x])?;
            cell("quasi-compact", (!ok).then_some(false), Some(cert))
        }
        _ => cell("quasi-compact", None, None),
    };
    Ok(ChartRow {
        space,
        cells: vec![
            cell("hausdorff", if hausdorff { None } else { Some(false) }, Some(sep)),
            cell("locally-compact", Some(true), Some(compact.clone())),
            cell("microcompact", Some(true), Some(compact)),
            cell("microquasi-compact", Some(true), None),
            quasi,
            cell("baire-finite", Some(true), Some(baire)),
        ],
    })
}

/// The implication chart instantiated on the implemented spaces. `None`
/// marks a property no checker here settles.
pub fn chart_of_implications() -> Result<Vec<ChartRow>> {
    let mut rows = vec![
        manifold_row(Space::line(), "D(0 @0)", ["D(0 @0)", "D(1 @0)"])?,
        manifold_row(Space::doubled(), "D(0 @1)", ["D(0 @0)", "D(0 @1)"])?,
        manifold_row(Space::Feather, "F(0,1)", ["F(0)", "F(0,0)"])?,
    ];
    if let Some(line) = rows.first_mut() {
        let (_, cert) = hausdorff_open(&Space::line(), &OpenSet::basic(BasicOpen::Wave(crate::multiline::Wave::full())))?;
        line.cells[0] = cell("hausdorff", Some(true), Some(cert));
    }
    let cof = Space::Cofinite;
    let (_, quasi) = quasi_compact_subcover(&[CofiniteSet::excluding([1]), CofiniteSet::excluding([2])])?;
    let (_, baire) = baire_intersect(&cof, &DenseFamily::CofiniteSingletons { candidates: 8 }, &BasicOpen::Cofinite(CofiniteSet::ground()))?;
    let (_, sep) = separable(&cof, &Point::Cofinite(0), &Point::Cofinite(1))?;
    rows.push(ChartRow {
        space: cof,
        cells: vec![
            cell("hausdorff", Some(false), Some(sep)),
            cell("locally-compact", None, None),
            cell("microcompact", None, None),
            cell("microquasi-compact", Some(true), Some(quasi.clone())),
            cell("quasi-compact", Some(true), Some(quasi)),
            cell("baire-finite", Some(false), Some(baire)),
        ],
    });
    Ok(rows)
}
