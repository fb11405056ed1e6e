//! Maximal Hausdorff dense opens, covers and subcovers, Baire intersections,
//! the Hausdorffness pipeline, and compact neighborhoods inside charts.

mod baire;
mod compact;
mod cover;
mod maximal;
mod pipeline;

pub use baire::{baire_intersect, BaireOutcome, DenseFamily};
pub use compact::{microcompact_chain, microcompact_neighborhood, verify_nested};
pub use cover::{cofinite_covers, cover_member_for, quasi_compact_subcover, subcover_attempt, uncovered_point, CoverDescriptor};
pub use maximal::{adjoin_partner, adjoin_witness, maximal_hausdorff_at, whole_open};
pub use pipeline::{chart_of_implications, theorem2_pipeline, ChartCell, ChartRow, PipelineReport, PipelineVerdict, Stage, StageReport};
