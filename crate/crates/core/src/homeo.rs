//! Homeomorphism generators and the words that realize homogeneity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feather::{flip_apply, normalize_to_line, FeatherPoint};
use crate::multiline::{MultiLinePoint, SpaceSpec, Wave};
use crate::numeric::{fmt_rat, int, midpoint, rat_serde, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "gen", rename_all = "kebab-case")]
pub enum Generator {
    /// `x -> x + by` on every level.
    Translate {
        #[serde(with = "rat_serde")]
        by: Rat,
    },
    /// Swaps levels `i` and `j` over one abscissa.
    Exchange {
        #[serde(with = "rat_serde")]
        at: Rat,
        levels: (u32, u32),
    },
    /// `x -> 2c - x` on every level.
    Reflect {
        #[serde(with = "rat_serde")]
        center: Rat,
    },
    /// The feather flip pivoting at a point of length at least two.
    Flip { pivot: FeatherPoint },
}

pub type HomeoWord = Vec<Generator>;

impl Generator {
    pub fn translate(by: Rat) -> Self {
        Generator::Translate { by }
    }

    pub fn exchange(at: Rat, i: u32, j: u32) -> Self {
        Generator::Exchange { at, levels: (i, j) }
    }

    pub fn reflect(center: Rat) -> Self {
        Generator::Reflect { center }
    }

    /// Whether this generator is a homeomorphism of `spec`.
    pub fn check_multi(&self, spec: &SpaceSpec) -> Result<()> {
        let ok = match self {
            Generator::Translate { by } => spec.preserves_domain(|x| x + by),
            Generator::Reflect { center } => spec.preserves_domain(|x| center * int(2) - x),
            Generator::Exchange { at, levels: (i, j) } => {
                let n = spec.levels_at(at);
                spec.is_doubled(at) && *i < n && *j < n
            }
            Generator::Flip { .. } => {
                return Err(Error::TagMismatch("flips act on the feather only".into()))
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::pre(format!("{self} is not a homeomorphism of {spec}")))
        }
    }

    pub fn apply_multi(&self, spec: &SpaceSpec, p: &MultiLinePoint) -> Result<MultiLinePoint> {
        self.check_multi(spec)?;
        Ok(match self {
            Generator::Translate { by } => MultiLinePoint::new(&p.x + by, p.level),
            Generator::Reflect { center } => MultiLinePoint::new(center * int(2) - &p.x, p.level),
            Generator::Exchange { at, levels: (i, j) } if *at == p.x => {
                let level = if p.level == *i {
                    *j
                } else if p.level == *j {
                    *i
                } else {
                    p.level
                };
                MultiLinePoint::new(p.x.clone(), level)
            }
            _ => p.clone(),
        })
    }

    pub fn apply_wave(&self, spec: &SpaceSpec, w: &Wave) -> Result<Wave> {
        self.check_multi(spec)?;
        Ok(match self {
            Generator::Translate { by } => w.shift(by),
            Generator::Reflect { center } => w.reflect(center),
            Generator::Exchange { at, levels: (i, j) } => w.exchange(at, *i, *j),
            Generator::Flip { .. } => unreachable!("rejected by check_multi"),
        })
    }

    pub fn apply_feather(&self, p: &FeatherPoint) -> Result<FeatherPoint> {
        match self {
            Generator::Translate { by } => Ok(p.translate(by)),
            Generator::Flip { pivot } => flip_apply(pivot, p),
            _ => Err(Error::TagMismatch(format!("{self} does not act on the feather"))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Translate { by } => write!(f, "t[{}]", fmt_rat(by)),
            Generator::Exchange { at, levels: (i, j) } => write!(f, "e[{}; {i}<->{j}]", fmt_rat(at)),
            Generator::Reflect { center } => write!(f, "r[{}]", fmt_rat(center)),
            Generator::Flip { pivot } => write!(f, "h[{pivot}]"),
        }
    }
}

pub fn render_word(word: &[Generator]) -> String {
    let parts: Vec<String> = word.iter().map(Generator::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Replays a word left to right on a multiline point.
pub fn replay_multi(word: &[Generator], spec: &SpaceSpec, p: &MultiLinePoint) -> Result<MultiLinePoint> {
    word.iter().try_fold(p.clone(), |acc, g| g.apply_multi(spec, &acc))
}

pub fn replay_wave(word: &[Generator], spec: &SpaceSpec, w: &Wave) -> Result<Wave> {
    word.iter().try_fold(w.clone(), |acc, g| g.apply_wave(spec, &acc))
}

pub fn replay_feather(word: &[Generator], p: &FeatherPoint) -> Result<FeatherPoint> {
    word.iter().try_fold(p.clone(), |acc, g| g.apply_feather(&acc))
}

/// A word carrying `p` to `q`: a translation, then an exchange over the
/// target abscissa when the levels differ.
pub fn move_multi(spec: &SpaceSpec, p: &MultiLinePoint, q: &MultiLinePoint) -> Result<HomeoWord> {
    spec.check(p)?;
    spec.check(q)?;
    let mut word = Vec::new();
    if p.x != q.x {
        word.push(Generator::translate(&q.x - &p.x));
    }
    if p.level != q.level {
        word.push(Generator::exchange(q.x.clone(), p.level, q.level));
    }
    for g in &word {
        g.check_multi(spec)?;
    }
    Ok(word)
}

/// An involution exchanging `p` and `q`: exchanges over both abscissae
/// followed by the reflection through their midpoint.
pub fn involutive_multi(spec: &SpaceSpec, p: &MultiLinePoint, q: &MultiLinePoint) -> Result<HomeoWord> {
    spec.check(p)?;
    spec.check(q)?;
    let (i, j) = (p.level, q.level);
    let word = if p.x == q.x {
        if i == j {
            Vec::new()
        } else {
            vec![Generator::exchange(p.x.clone(), i, j)]
        }
    } else {
        let mut w = Vec::new();
        if i != j {
            w.push(Generator::exchange(q.x.clone(), i, j));
            w.push(Generator::exchange(p.x.clone(), i, j));
        }
        w.push(Generator::reflect(midpoint(&p.x, &q.x)));
        w
    };
    for g in &word {
        g.check_multi(spec)?;
    }
    Ok(word)
}

/// Flips down to the base line, a translation, and the flips back up.
pub fn move_feather(p: &FeatherPoint, q: &FeatherPoint) -> HomeoWord {
    let (down, _) = normalize_to_line(p);
    let (up, _) = normalize_to_line(q);
    let flips = |w: Vec<FeatherPoint>| w.into_iter().map(|pivot| Generator::Flip { pivot });
    let mut word: HomeoWord = flips(down).collect();
    if p.last() != q.last() {
        word.push(Generator::translate(q.last() - p.last()));
    }
    word.extend(flips(up).rev());
    word
}
