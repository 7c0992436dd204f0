//! Linguistic approximation: the term of a term set nearest to an arbitrary
//! fuzzy result, measured on (centroid, area) features.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzznum::{Features, HasFeatures};
use crate::termset::{Term, TermSet};

/// Which of several equidistant terms wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TieBreak {
    /// Lowest index, i.e. the less likely term.
    #[default]
    Pessimistic,
    /// Highest index.
    Optimistic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawConfig")]
pub struct ApproxConfig {
    pub weight_centroid: f64,
    pub weight_area: f64,
    pub tie_break: TieBreak,
}

#[derive(Deserialize)]
struct RawConfig {
    #[serde(default = "default_wc")]
    weight_centroid: f64,
    #[serde(default = "default_wa")]
    weight_area: f64,
    #[serde(default)]
    tie_break: TieBreak,
}

fn default_wc() -> f64 {
    ApproxConfig::default().weight_centroid
}

fn default_wa() -> f64 {
    ApproxConfig::default().weight_area
}

impl TryFrom<RawConfig> for ApproxConfig {
    type Error = Error;

    fn try_from(raw: RawConfig) -> Result<Self> {
        ApproxConfig::new(raw.weight_centroid, raw.weight_area, raw.tie_break)
    }
}

impl Default for ApproxConfig {
    fn default() -> Self {
        ApproxConfig {
            weight_centroid: 0.8,
            weight_area: 0.2,
            tie_break: TieBreak::Pessimistic,
        }
    }
}

impl ApproxConfig {
    /// Weights must be finite, nonnegative and not both zero.
    pub fn new(weight_centroid: f64, weight_area: f64, tie_break: TieBreak) -> Result<Self> {
        let ok = |w: f64| w >= 0.0 && w.is_finite();
        if !ok(weight_centroid) || !ok(weight_area) || weight_centroid + weight_area == 0.0 {
            return Err(Error::invariant(
                "approximation config",
                format!("weights ({weight_centroid}, {weight_area}) must be nonnegative, finite and not both 0"),
            ));
        }
        Ok(ApproxConfig {
            weight_centroid,
            weight_area,
            tie_break,
        })
    }

    pub fn with_weights(self, weight_centroid: f64, weight_area: f64) -> Result<Self> {
        ApproxConfig::new(weight_centroid, weight_area, self.tie_break)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Ok(serde_json::from_reader(fs::File::open(path)?)?)
    }
}

/// `sqrt(w_c (c1 - c2)² + w_a (A1 - A2)²)`
pub fn distance(x: Features, y: Features, cfg: &ApproxConfig) -> f64 {
    let dc = x.centroid - y.centroid;
    let da = x.area - y.area;
    (cfg.weight_centroid * dc * dc + cfg.weight_area * da * da).sqrt()
}

/// Index and distance of the candidate nearest to `x`.
///
/// # Panics
/// If `candidates` is empty.
pub fn nearest(x: Features, candidates: &[Features], cfg: &ApproxConfig) -> (usize, f64) {
    let mut best: Option<(usize, f64)> = None;
    for (i, &c) in candidates.iter().enumerate() {
        let d = distance(x, c, cfg);
        let better = match best {
            None => true,
            Some((_, bd)) => d < bd || (d == bd && cfg.tie_break == TieBreak::Optimistic),
        };
        if better {
            best = Some((i, d));
        }
    }
    best.expect("at least one candidate")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Approximation<'a> {
    pub index: usize,
    pub term: &'a Term,
    pub distance: f64,
}

pub fn approximate<'a, T: HasFeatures + ?Sized>(
    result: &T,
    ts: &'a TermSet,
    cfg: &ApproxConfig,
) -> Approximation<'a> {
    let feats: Vec<Features> = ts.terms().iter().map(|t| t.semantics.features()).collect();
    let (index, distance) = nearest(result.features(), &feats, cfg);
    Approximation {
        index,
        term: ts.term(index),
        distance,
    }
}
