//! Exact arithmetic and the set algebra every space presentation is built from.

mod cofinite;
mod extrat;
mod finset;
mod interval_set;

pub use cofinite::CofiniteSet;
pub use extrat::{dist, rat_serde, fmt_rat, int, midpoint, parse_rat, rat, ExtRat, Rat};
pub(crate) use extrat::inner_point;
pub use finset::FinSet;
pub use interval_set::{Approach, IntervalSet, Open};
